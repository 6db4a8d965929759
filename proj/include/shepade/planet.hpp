#pragma once

// Axisymmetric constant-density planets: the profile s^2(z) on [z_min, z_max],
// the coefficients A_n of the on-axis expansion sum A_n / Z^{n+1}, and exact
// on-axis potentials used as references.

#include "shepade/complex.hpp"
#include "shepade/mp.hpp"
#include "shepade/poly.hpp"
#include "shepade/surd.hpp"

#include <string>
#include <vector>

namespace shepade {

enum class ShapeKind { spheroid, cylinder, polynomial };

class ShapeProfile {
 public:
  /// Semi-axes a (equatorial) and b (polar).
  static ShapeProfile spheroid(const Surd& a, const Surd& b, const Rational& rho = 1, const Rational& G = 1);
  /// Radius a, length L, centered on the origin.
  static ShapeProfile cylinder(const Surd& a, const Surd& length, const Rational& rho = 1, const Rational& G = 1);
  /// s^2 must be nonnegative on [z_min, z_max]; checked at the endpoints
  /// exactly and at 10^4 interior samples. Throws InputError otherwise.
  static ShapeProfile polynomial(RatPoly s2, const Surd& z_min, const Surd& z_max, const Rational& rho = 1,
                                 const Rational& G = 1);

  ShapeKind kind() const { return kind_; }
  const Surd& a() const { return a_; }
  const Surd& b() const { return b_; }
  const Surd& length() const { return b_; }
  const RatPoly& s2() const { return s2_; }
  const Surd& z_min() const { return z_min_; }
  const Surd& z_max() const { return z_max_; }
  const Rational& rho() const { return rho_; }
  const Rational& G() const { return G_; }
  /// s^2 even and the z-range symmetric.
  bool is_even() const;
  std::string describe() const;

 private:
  ShapeProfile() = default;
  ShapeKind kind_ = ShapeKind::polynomial;
  Surd a_, b_;
  RatPoly s2_;
  Surd z_min_, z_max_;
  Rational rho_ = 1, G_ = 1;
};

enum class Provenance { closed_form, exact_symbolic, quadrature };
std::string to_string(Provenance p);

struct SheSeries {
  std::vector<MpReal> coeffs;  // A_0 .. A_M
  Provenance provenance;
  PrecisionCtx ctx;
  ShapeProfile profile;
};

/// Exact integral of s^2 over the z-range (volume / pi).
SurdSum s2_integral(const ShapeProfile& profile);
/// rho * pi * int s^2 dz.
MpReal mass(const ShapeProfile& profile, const PrecisionCtx& ctx);

/// Spheroid and cylinder formulas. Throws std::invalid_argument for other kinds.
SheSeries she_closed_form(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx);

/// Exact integrals int H_{n+2}(z) dz for n = 0..n_max, where
/// H_k = C_k^{(-1/2)}(z/r) r^k with r^2 = z^2 + s^2(z) is a polynomial in z.
std::vector<SurdSum> she_exact_integrals(const ShapeProfile& profile, int n_max);
/// A_n = -2 pi G rho int H_{n+2} dz from the exact integrals.
SheSeries she_exact_symbolic(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx);

/// Gauss-Legendre evaluation of the same integrals, starting at
/// 4 (n_max + digits) nodes and doubling until two successive rules agree.
/// Throws NumericalError when that does not happen within four doublings.
SheSeries she_quadrature(const ShapeProfile& profile, int n_max, const PrecisionCtx& ctx);

/// max over the z-range of sqrt(z^2 + s^2(z)).
MpReal brillouin_radius(const ShapeProfile& profile, const PrecisionCtx& ctx);

/// -2 pi G rho int [sqrt((Z-z)^2 + s^2) - (Z-z)] dz for real Z > z_max, by
/// Gauss-Legendre with node doubling. Throws std::domain_error for Z <= z_max.
MpReal potential_axis_exact(const ShapeProfile& profile, const MpReal& Z, const PrecisionCtx& ctx);

/// Closed-form on-axis potential of a spheroid (a != b), principal log branch.
/// Throws std::domain_error at Z = 0 or at the branch points +-i sqrt(a^2 - b^2).
MpComplex potential_spheroid_closed(const ShapeProfile& spheroid, const MpComplex& Z, const PrecisionCtx& ctx);
MpComplex potential_spheroid_closed(const Surd& a, const Surd& b, const MpComplex& Z, const PrecisionCtx& ctx);

}  // namespace shepade
