#include "doctest.h"

#include "shepade/complex.hpp"
#include "shepade/mp.hpp"
#include "shepade/surd.hpp"

#include <random>
#include <string>

using namespace shepade;

namespace {

// Decimal digits of num/den by schoolbook long division, first `count`
// significant digits, truncated. Independent of MPFR.
std::string long_division_digits(long num, long den, int count) {
  std::string out;
  long whole = num / den;
  long rem = num % den;
  out += std::to_string(whole);
  std::string frac;
  while (static_cast<int>(out.size() + frac.size()) < count + 2) {
    rem *= 10;
    frac += static_cast<char>('0' + rem / den);
    rem %= den;
  }
  return out + "." + frac;
}

// Rounds a plain decimal string "d.ddddd..." (positive) to `sig` significant
// digits, half-up on the next digit.
std::string round_decimal_string(const std::string& s, int sig) {
  std::string digits;
  long point = -1;
  for (char c : s) {
    if (c == '.') {
      point = static_cast<long>(digits.size());
    } else {
      digits += c;
    }
  }
  if (point < 0) point = static_cast<long>(digits.size());
  std::size_t lead = digits.find_first_not_of('0');
  long exp10 = point - static_cast<long>(lead) - 1;
  std::string sigd = digits.substr(lead);
  bool up = sigd.size() > static_cast<std::size_t>(sig) && sigd[static_cast<std::size_t>(sig)] >= '5';
  sigd = sigd.substr(0, static_cast<std::size_t>(sig));
  if (up) {
    int i = sig - 1;
    while (i >= 0 && sigd[static_cast<std::size_t>(i)] == '9') sigd[static_cast<std::size_t>(i--)] = '0';
    if (i < 0) {
      sigd = "1" + sigd.substr(0, sigd.size() - 1);
      ++exp10;
    } else {
      ++sigd[static_cast<std::size_t>(i)];
    }
  }
  return sigd.substr(0, 1) + "." + sigd.substr(1) + "e" + std::to_string(exp10);
}

}  // namespace

TEST_CASE("precision context validation") {
  CHECK_THROWS_AS(PrecisionCtx(15), std::invalid_argument);
  CHECK_THROWS_AS(PrecisionCtx(30, -1), std::invalid_argument);
  PrecisionCtx ctx(100);
  CHECK(ctx.tol_exponent() == -90);
  CHECK(ctx.rel_tol() > 0L);
  CHECK(ctx.bits() >= 333);
}

TEST_CASE("mp_from_rational") {
  SUBCASE("dyadic is exact") {
    PrecisionCtx ctx(30);
    MpReal half = mp_from_rational(Rational(1, 2), ctx);
    CHECK(half == MpReal(0.5, ctx));
  }
  SUBCASE("1/3 to 20 digits") {
    PrecisionCtx ctx(20);
    CHECK(to_sci(mp_from_rational(Rational(1, 3), ctx), 20) == "3.3333333333333333333e-01");
  }
  SUBCASE("25/7 agrees with long division to 50 digits") {
    PrecisionCtx ctx(50);
    MpReal x = mp_from_rational(Rational(25, 7), ctx);
    MpReal oracle(long_division_digits(25, 7, 60), PrecisionCtx(80));
    MpReal err = abs(x - oracle) / oracle;
    CHECK(err <= pow10(-50, ctx));
  }
}

TEST_CASE("mp_round_to_digits") {
  PrecisionCtx ctx(40);
  CHECK(to_sci(mp_round_to_digits(pi(ctx), 5), 5) == "3.1416e+00");
  CHECK(mp_round_to_digits(MpReal(-1L, ctx), 10) == MpReal(-1L, ctx));
  CHECK_THROWS(mp_round_to_digits(pi(ctx), 0));

  SUBCASE("matches string rounding on random values") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(1, 1000000000L);
    for (int trial = 0; trial < 50; ++trial) {
      Rational q(num(rng), num(rng));
      q.canonicalize();
      MpReal x(q, ctx);
      std::string long_form = to_fixed_sig(x, 35);
      if (long_form.find('e') != std::string::npos) continue;
      for (int d : {3, 10, 12, 13}) {
        MpReal rounded = mp_round_to_digits(x, d);
        MpReal expected(round_decimal_string(long_form, d), ctx);
        CHECK(abs(rounded - expected) <= abs(expected) * pow10(-38, ctx));
        CHECK(abs(rounded - x) <= abs(x) * pow10(1 - d, ctx));
      }
    }
  }
}

TEST_CASE("field axioms at 100 digits") {
  PrecisionCtx ctx(100);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1e3, 1e3);
  for (int i = 0; i < 100; ++i) {
    MpReal x = MpReal(u(rng), ctx) / MpReal(7L, ctx);
    MpReal y = sqrt(abs(MpReal(u(rng), ctx))) + 1L;
    CHECK((x + y) == (y + x));
    CHECK(abs((x * y) / (y * x) - 1L) <= ctx.rel_tol());
    if (!x.is_zero()) CHECK(abs(x * (1L / x) - 1L) <= ctx.rel_tol());
  }
}

TEST_CASE("deterministic arithmetic") {
  PrecisionCtx ctx(60);
  auto compute = [&] {
    MpReal acc(0L, ctx);
    for (long k = 1; k < 200; ++k) acc += sqrt(MpReal(k, ctx)) / MpReal(k * k + 1, ctx);
    return acc;
  };
  CHECK(compute() == compute());
}

TEST_CASE("mixed precision takes the larger operand precision") {
  MpReal a(1L, PrecisionCtx(20));
  MpReal b(3L, PrecisionCtx(60));
  MpReal c = a / b;
  CHECK(c.precision() == b.precision());
}

TEST_CASE("move leaves a reusable value") {
  PrecisionCtx ctx(30);
  MpReal a(5L, ctx);
  MpReal b = std::move(a);
  a = MpReal(7L, ctx);
  CHECK(a == 7L);
  CHECK(b == 5L);
}

TEST_CASE("parse_rational") {
  CHECK(parse_rational("1/2") == Rational(1, 2));
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("0.125") == Rational(1, 8));
  CHECK(parse_rational("-2.5e-1") == Rational(-1, 4));
  CHECK(parse_rational("  7 ") == Rational(7));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
  CHECK_THROWS(parse_rational(""));
}

TEST_CASE("surds") {
  Surd s = Surd::parse("sqrt(12)");
  CHECK(s.radicand() == 3);
  CHECK(s.coeff() == 2);
  CHECK(s.square() == 12);
  CHECK(Surd::parse("-sqrt(4)") == Surd(Rational(-2)));
  CHECK(Surd::parse("1/2").is_rational());
  CHECK_THROWS(Surd::parse("sqrt(x)"));
  CHECK_THROWS(Surd::parse("sqrt(-3)"));
  CHECK(Surd::parse(s.to_string()) == s);
  CHECK(Surd::parse("-3/4*sqrt(8)") == Surd(Rational(-3, 2), 2));
  CHECK(Surd::parse(Surd(Rational(-5, 7), 6).to_string()) == Surd(Rational(-5, 7), 6));

  SurdSum sum;
  sum.add(Surd(Rational(1), 2));
  sum.add(Surd(Rational(-1), 8).scaled(Rational(1, 2)));  // -sqrt(2)
  CHECK(sum.is_zero());
  SurdSum t;
  t.add(Surd(Rational(3)));
  t.add(Surd(Rational(-2), 2));  // 3 - 2 sqrt 2 > 0
  CHECK(t.sign() == 1);
}

TEST_CASE("complex helpers") {
  PrecisionCtx ctx(40);
  MpComplex z(MpReal(-4L, ctx), MpReal(0L, ctx));
  MpComplex r = sqrt(z);
  CHECK(abs(r.re()) <= ctx.rel_tol());
  CHECK(abs(r.im() - 2L) <= ctx.rel_tol());
  MpComplex w(MpReal(3L, ctx), MpReal(-4L, ctx));
  CHECK(abs(w) == 5L);
  MpComplex prod = w * reciprocal(w);
  CHECK(abs(prod.re() - 1L) <= ctx.rel_tol());
  CHECK(abs(prod.im()) <= ctx.rel_tol());
  MpComplex sq = sqrt(w) * sqrt(w);
  CHECK(distance(sq, w) <= ctx.rel_tol() * 5L);
}

TEST_CASE("scientific formatting") {
  PrecisionCtx ctx(30);
  CHECK(to_sci(MpReal(-0.00125, ctx), 3) == "-1.25e-03");
  CHECK(to_sci(MpReal(0L, ctx), 3) == "0.00e+00");
  CHECK(to_sci(MpReal(12345L, ctx), 2) == "1.2e+04");
  CHECK(to_fixed_sig(MpReal(1.5, ctx), 4) == "1.500");
}
