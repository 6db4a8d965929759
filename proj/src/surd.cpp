#include "shepade/surd.hpp"

#include <stdexcept>

namespace shepade {

std::pair<BigInt, BigInt> split_square(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("negative radicand");
  if (n == 0) return {BigInt(0), BigInt(1)};
  BigInt rest = n, outer = 1;
  for (BigInt p = 2; p * p <= rest; ++p) {
    BigInt p2 = p * p;
    while (rest % p2 == 0) {
      rest /= p2;
      outer *= p;
    }
  }
  return {outer, rest};
}

Surd::Surd(const Rational& coeff, const BigInt& radicand) {
  auto [outer, inner] = split_square(radicand);
  coeff_ = coeff * Rational(outer);
  radicand_ = coeff_ == 0 ? BigInt(1) : inner;
}

Surd Surd::parse(std::string_view text) {
  std::string s(text);
  auto b = s.find_first_not_of(" \t");
  auto e = s.find_last_not_of(" \t");
  s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  bool neg = false;
  std::string body = s;
  if (!body.empty() && body[0] == '-') {
    neg = true;
    body.erase(0, 1);
  }
  // "q*sqrt(k)", the form to_string emits
  if (auto star = body.find("*sqrt("); star != std::string::npos) {
    Surd root = parse(body.substr(star + 1));
    Rational q = parse_rational(body.substr(0, star));
    return root.scaled(neg ? -q : q);
  }
  if (body.rfind("sqrt(", 0) == 0) {
    if (body.back() != ')') throw std::invalid_argument("malformed sqrt token: '" + s + "'");
    std::string inner = body.substr(5, body.size() - 6);
    if (inner.empty() || inner.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("sqrt(k) requires a non-negative integer k: '" + s + "'");
    return Surd(Rational(neg ? -1 : 1), BigInt(inner, 10));
  }
  return Surd(parse_rational(s));
}

MpReal Surd::to_mp(const PrecisionCtx& ctx) const {
  MpReal c(coeff_, ctx);
  if (radicand_ == 1) return c;
  return c * sqrt(MpReal(radicand_, ctx));
}

std::string Surd::to_string() const {
  if (radicand_ == 1 || coeff_ == 0) return coeff_.get_str();
  std::string r = "sqrt(" + radicand_.get_str() + ")";
  if (coeff_ == 1) return r;
  if (coeff_ == -1) return "-" + r;
  return coeff_.get_str() + "*" + r;
}

void SurdSum::add(const Surd& s) {
  if (s.coeff() == 0) return;
  Rational& c = terms_[s.radicand()];
  c += s.coeff();
  if (c == 0) terms_.erase(s.radicand());
}

void SurdSum::add(const SurdSum& other) {
  for (const auto& [k, c] : other.terms_) add(Surd(c, k));
}

SurdSum SurdSum::operator-() const {
  SurdSum r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

SurdSum SurdSum::scaled(const Rational& q) const {
  SurdSum r;
  if (q == 0) return r;
  for (const auto& [k, c] : terms_) r.terms_[k] = c * q;
  return r;
}

MpReal SurdSum::to_mp(const PrecisionCtx& ctx) const {
  if (terms_.size() <= 1) {
    return terms_.empty() ? MpReal(0L, ctx) : Surd(terms_.begin()->second, terms_.begin()->first).to_mp(ctx);
  }
  // Terms may cancel; widen until the sum keeps `digits` significant digits.
  for (int extra = 20;; extra *= 2) {
    PrecisionCtx wide = ctx.with_digits(ctx.digits() + extra);
    MpReal acc(0L, wide);
    MpReal largest(0L, wide);
    for (const auto& [k, c] : terms_) {
      MpReal t = Surd(c, k).to_mp(wide);
      largest = max(largest, abs(t));
      acc += t;
    }
    if (abs(acc) * pow10(extra - 5, wide) >= largest) return MpReal(acc, ctx.bits());
  }
}

int SurdSum::sign() const {
  if (terms_.empty()) return 0;
  if (terms_.size() == 1) return sgn(terms_.begin()->second);
  // Distinct square-free radicands are linearly independent over Q, so a
  // nonzero sum has a nonzero value; 60 digits resolve any realistic input.
  return to_mp(PrecisionCtx(60)).sign();
}

}  // namespace shepade
