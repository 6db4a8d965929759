#include "shepade/mp.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

namespace shepade {

namespace {

constexpr double kLog2Of10 = 3.321928094887362;

mpfr_prec_t max_prec(const MpReal& a, const MpReal& b) {
  return std::max(a.precision(), b.precision());
}

}  // namespace

mpfr_prec_t digits_to_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::ceil(digits * kLog2Of10)) + 2;
}

PrecisionCtx::PrecisionCtx(int digits, int guard) : digits_(digits), guard_(guard) {
  if (digits < 16) throw std::invalid_argument("precision must be at least 16 digits");
  if (guard < 0) throw std::invalid_argument("guard digits must be non-negative");
  if (guard >= digits) throw std::invalid_argument("guard digits must be smaller than digits");
}

mpfr_prec_t PrecisionCtx::bits() const { return digits_to_bits(digits_); }

MpReal PrecisionCtx::rel_tol() const { return pow10(tol_exponent(), *this); }

// ---------------------------------------------------------------------------
// MpReal

MpReal::MpReal() { mpfr_init2(v_, 53); mpfr_set_zero(v_, 1); }

MpReal::MpReal(mpfr_prec_t bits) { mpfr_init2(v_, bits); mpfr_set_zero(v_, 1); }

MpReal::MpReal(long v, const PrecisionCtx& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

MpReal::MpReal(double v, const PrecisionCtx& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

MpReal::MpReal(const Rational& q, const PrecisionCtx& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_q(v_, q.get_mpq_t(), MPFR_RNDN);
}

MpReal::MpReal(const BigInt& z, const PrecisionCtx& ctx) {
  mpfr_init2(v_, ctx.bits());
  mpfr_set_z(v_, z.get_mpz_t(), MPFR_RNDN);
}

MpReal::MpReal(std::string_view text, const PrecisionCtx& ctx) {
  mpfr_init2(v_, ctx.bits());
  std::string s(text);
  if (s.empty() || mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: '" + s + "'");
  }
}

MpReal::MpReal(const MpReal& other, mpfr_prec_t bits) {
  mpfr_init2(v_, bits);
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

MpReal::MpReal(const MpReal& other) {
  mpfr_init2(v_, other.precision());
  mpfr_set(v_, other.v_, MPFR_RNDN);
}

// A moved-from value has a null limb pointer; it may only be destroyed or
// assigned to.
MpReal::MpReal(MpReal&& other) noexcept {
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
}

MpReal& MpReal::operator=(const MpReal& other) {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d == nullptr) {
    mpfr_init2(v_, other.precision());
  } else if (precision() != other.precision()) {
    mpfr_set_prec(v_, other.precision());
  }
  mpfr_set(v_, other.v_, MPFR_RNDN);
  return *this;
}

MpReal& MpReal::operator=(MpReal&& other) noexcept {
  if (this == &other) return *this;
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
  v_[0] = other.v_[0];
  other.v_[0]._mpfr_d = nullptr;
  return *this;
}

MpReal::~MpReal() {
  if (v_[0]._mpfr_d != nullptr) mpfr_clear(v_);
}

void MpReal::set_precision(mpfr_prec_t bits) { mpfr_prec_round(v_, bits, MPFR_RNDN); }

MpReal MpReal::operator-() const {
  MpReal r(precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

MpReal& MpReal::operator+=(const MpReal& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
MpReal& MpReal::operator-=(const MpReal& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
MpReal& MpReal::operator*=(const MpReal& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
MpReal& MpReal::operator/=(const MpReal& o) {
  if (o.precision() > precision()) set_precision(o.precision());
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
MpReal& MpReal::operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
MpReal& MpReal::operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
MpReal& MpReal::operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
MpReal& MpReal::operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

MpReal operator+(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
MpReal operator-(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
MpReal operator*(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
MpReal operator/(const MpReal& a, const MpReal& b) {
  MpReal r(max_prec(a, b));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}
MpReal operator+(const MpReal& a, long b) {
  MpReal r(a.precision());
  mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
MpReal operator-(const MpReal& a, long b) {
  MpReal r(a.precision());
  mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
MpReal operator*(const MpReal& a, long b) {
  MpReal r(a.precision());
  mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
MpReal operator/(const MpReal& a, long b) {
  MpReal r(a.precision());
  mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
  return r;
}
MpReal operator-(long a, const MpReal& b) {
  MpReal r(b.precision());
  mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}
MpReal operator/(long a, const MpReal& b) {
  MpReal r(b.precision());
  mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
  return r;
}

std::partial_ordering operator<=>(const MpReal& a, const MpReal& b) {
  if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp(a.v_, b.v_);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const MpReal& a, long b) {
  if (mpfr_nan_p(a.v_)) return std::partial_ordering::unordered;
  int c = mpfr_cmp_si(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

std::partial_ordering operator<=>(const MpReal& a, double b) {
  if (mpfr_nan_p(a.v_) || b != b) return std::partial_ordering::unordered;
  int c = mpfr_cmp_d(a.v_, b);
  return c < 0 ? std::partial_ordering::less
               : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
}

void sub_mul(MpReal& acc, const MpReal& a, const MpReal& b) {
  mpfr_fms(acc.raw(), a.raw(), b.raw(), acc.raw(), MPFR_RNDN);
  mpfr_neg(acc.raw(), acc.raw(), MPFR_RNDN);
}

void add_mul(MpReal& acc, const MpReal& a, const MpReal& b) {
  mpfr_fma(acc.raw(), a.raw(), b.raw(), acc.raw(), MPFR_RNDN);
}

#define SHEPADE_UNARY(name, fn)                  \
  MpReal name(const MpReal& x) {                 \
    MpReal r(x.precision());                     \
    fn(r.raw(), x.raw(), MPFR_RNDN);             \
    return r;                                    \
  }

SHEPADE_UNARY(abs, mpfr_abs)
SHEPADE_UNARY(sqrt, mpfr_sqrt)
SHEPADE_UNARY(exp, mpfr_exp)
SHEPADE_UNARY(log, mpfr_log)
SHEPADE_UNARY(log10, mpfr_log10)
SHEPADE_UNARY(sin, mpfr_sin)
SHEPADE_UNARY(cos, mpfr_cos)
SHEPADE_UNARY(atan, mpfr_atan)
SHEPADE_UNARY(asinh, mpfr_asinh)

#undef SHEPADE_UNARY

MpReal atan2(const MpReal& y, const MpReal& x) {
  MpReal r(max_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

MpReal pow(const MpReal& x, long n) {
  MpReal r(x.precision());
  mpfr_pow_si(r.raw(), x.raw(), n, MPFR_RNDN);
  return r;
}

MpReal pow(const MpReal& x, const MpReal& y) {
  MpReal r(max_prec(x, y));
  mpfr_pow(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

MpReal hypot(const MpReal& x, const MpReal& y) {
  MpReal r(max_prec(x, y));
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}

MpReal min(const MpReal& a, const MpReal& b) { return b < a ? b : a; }
MpReal max(const MpReal& a, const MpReal& b) { return a < b ? b : a; }

MpReal pi(mpfr_prec_t bits) {
  MpReal r(bits);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

MpReal pi(const PrecisionCtx& ctx) { return pi(ctx.bits()); }

MpReal pow10(long e, const PrecisionCtx& ctx) {
  MpReal r(10L, ctx);
  mpfr_pow_si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

MpReal mp_from_rational(const Rational& q, const PrecisionCtx& ctx) { return MpReal(q, ctx); }

MpReal mp_round_to_digits(const MpReal& x, int d) {
  if (d < 1) throw std::invalid_argument("round_to_digits: d must be >= 1");
  if (x.is_zero() || !x.is_finite()) return x;
  mpfr_exp_t exp10 = 0;
  char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(d), x.raw(), MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  bool neg = digits.front() == '-';
  if (neg) digits.erase(0, 1);
  // value = 0.digits * 10^exp10
  std::string literal = (neg ? "-0." : "0.") + digits + "e" + std::to_string(exp10);
  MpReal r(x.precision());
  mpfr_set_str(r.raw(), literal.c_str(), 10, MPFR_RNDN);
  return r;
}

std::string to_sci(const MpReal& x, int sig) {
  if (sig < 1) sig = 1;
  if (mpfr_nan_p(x.raw())) return "nan";
  if (mpfr_inf_p(x.raw())) return x.sign() < 0 ? "-inf" : "inf";
  if (x.is_zero()) {
    std::string z = "0";
    if (sig > 1) z += "." + std::string(static_cast<size_t>(sig - 1), '0');
    return z + "e+00";
  }
  mpfr_exp_t exp10 = 0;
  char* s = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(sig), x.raw(), MPFR_RNDN);
  std::string digits(s);
  mpfr_free_str(s);
  std::string out;
  if (digits.front() == '-') {
    out = "-";
    digits.erase(0, 1);
  }
  out += digits[0];
  if (digits.size() > 1) {
    out += '.';
    out.append(digits, 1, std::string::npos);
  }
  long e = static_cast<long>(exp10) - 1;
  std::string es = std::to_string(e < 0 ? -e : e);
  if (es.size() < 2) es = "0" + es;
  out += (e < 0 ? "e-" : "e+") + es;
  return out;
}

std::string to_fixed_sig(const MpReal& x, int sig) {
  std::string s = to_sci(x, sig);
  auto epos = s.find('e');
  if (epos == std::string::npos) return s;
  long e = std::stol(s.substr(epos + 1));
  if (e < -6 || e > 15) return s;
  std::string mant = s.substr(0, epos);
  bool neg = !mant.empty() && mant[0] == '-';
  if (neg) mant.erase(0, 1);
  std::string digits;
  for (char c : mant)
    if (c != '.') digits += c;
  std::string out;
  if (e >= 0) {
    auto intlen = static_cast<size_t>(e + 1);
    if (digits.size() <= intlen) {
      out = digits + std::string(intlen - digits.size(), '0');
    } else {
      out = digits.substr(0, intlen) + "." + digits.substr(intlen);
    }
  } else {
    out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + digits;
  }
  return neg ? "-" + out : out;
}

double log10_abs(const MpReal& x, double floor_value) {
  if (x.is_zero()) return floor_value;
  MpReal a = abs(x);
  return log10(a).to_double();
}

std::ostream& operator<<(std::ostream& os, const MpReal& x) {
  int sig = static_cast<int>(static_cast<double>(x.precision()) / kLog2Of10);
  return os << to_sci(x, std::max(sig, 1));
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto trim = [](std::string& t) {
    auto b = t.find_first_not_of(" \t\n\r");
    auto e = t.find_last_not_of(" \t\n\r");
    t = (b == std::string::npos) ? std::string() : t.substr(b, e - b + 1);
  };
  trim(s);
  if (s.empty()) throw std::invalid_argument("empty number");
  auto bad = [&] { return std::invalid_argument("not an exact rational: '" + std::string(text) + "'"); };
  auto parse_int = [&](const std::string& t) {
    std::string u = t;
    if (!u.empty() && u[0] == '+') u.erase(0, 1);
    size_t start = (!u.empty() && u[0] == '-') ? 1 : 0;
    if (u.size() == start) throw bad();
    for (size_t i = start; i < u.size(); ++i)
      if (u[i] < '0' || u[i] > '9') throw bad();
    return BigInt(u, 10);
  };
  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    trim(num);
    trim(den);
    BigInt d = parse_int(den);
    if (d == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
    Rational q(parse_int(num), d);
    q.canonicalize();
    return q;
  }
  // Decimal with optional exponent.
  std::string mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mant = s.substr(0, e);
    std::string ex = s.substr(e + 1);
    BigInt ez = parse_int(ex);
    if (!ez.fits_slong_p()) throw bad();
    exp10 = ez.get_si();
  }
  std::string digits;
  long frac = 0;
  bool seen_dot = false;
  for (size_t i = 0; i < mant.size(); ++i) {
    char c = mant[i];
    if (c == '.') {
      if (seen_dot) throw bad();
      seen_dot = true;
    } else {
      digits += c;
      if (seen_dot && c >= '0' && c <= '9') ++frac;
    }
  }
  BigInt num = parse_int(digits);
  exp10 -= frac;
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational q = exp10 >= 0 ? Rational(num * scale) : Rational(num, scale);
  q.canonicalize();
  return q;
}

}  // namespace shepade
