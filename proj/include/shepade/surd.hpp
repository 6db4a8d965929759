#pragma once

// Exact real numbers of the form q*sqrt(k) and finite sums of them. Planet
// parameters such as L = sqrt(3) are carried exactly so that integrals of
// rational polynomials over [z_min, z_max] stay exact until the final
// conversion to working precision.

#include "shepade/mp.hpp"

#include <map>
#include <string>
#include <string_view>

namespace shepade {

/// coeff * sqrt(radicand), radicand square-free and >= 1.
class Surd {
 public:
  Surd() : coeff_(0), radicand_(1) {}
  Surd(const Rational& q) : coeff_(q), radicand_(1) {}  // NOLINT: implicit from rational
  Surd(const Rational& coeff, const BigInt& radicand);

  /// Accepts "p", "p/q", decimals, "sqrt(k)" for integer k >= 0, and "q*sqrt(k)".
  static Surd parse(std::string_view text);

  const Rational& coeff() const { return coeff_; }
  const BigInt& radicand() const { return radicand_; }
  bool is_rational() const { return radicand_ == 1 || coeff_ == 0; }
  int sign() const { return sgn(coeff_); }

  /// Exact square.
  Rational square() const { return coeff_ * coeff_ * Rational(radicand_); }
  Surd operator-() const { return Surd(-coeff_, radicand_); }
  Surd scaled(const Rational& q) const { return Surd(coeff_ * q, radicand_); }

  MpReal to_mp(const PrecisionCtx& ctx) const;
  std::string to_string() const;

  friend bool operator==(const Surd& a, const Surd& b) {
    return a.coeff_ == b.coeff_ && (a.coeff_ == 0 || a.radicand_ == b.radicand_);
  }

 private:
  Rational coeff_;
  BigInt radicand_;
};

/// Sum of surds with distinct square-free radicands; zero iff all terms vanish.
class SurdSum {
 public:
  SurdSum() = default;
  SurdSum(const Surd& s) { add(s); }  // NOLINT

  void add(const Surd& s);
  void add(const SurdSum& other);
  SurdSum& operator+=(const SurdSum& o) {
    add(o);
    return *this;
  }
  SurdSum operator-() const;
  friend SurdSum operator-(SurdSum a, const SurdSum& b) {
    a.add(-b);
    return a;
  }
  SurdSum scaled(const Rational& q) const;

  bool is_zero() const { return terms_.empty(); }
  const std::map<BigInt, Rational>& terms() const { return terms_; }
  MpReal to_mp(const PrecisionCtx& ctx) const;
  /// Sign, decided exactly for one radicand and by evaluation otherwise.
  int sign() const;

 private:
  std::map<BigInt, Rational> terms_;  // radicand -> coefficient
};

/// Splits n = a^2 * b with b square-free; returns {a, b}.
std::pair<BigInt, BigInt> split_square(const BigInt& n);

}  // namespace shepade
