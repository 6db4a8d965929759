#pragma once

// Singularities of the on-axis potential continued into the complex Z plane:
// double roots in z of p(z) = (Z - z)^2 + s^2(z), plus the edge points
// Z = z_e +- i s(z_e) of a profile cut off where s^2(z_e) > 0. A singularity
// at Z0 is drawn at the meridian point i Z0 = x + i y (x radial, y axial).

#include "shepade/complex.hpp"
#include "shepade/errors.hpp"
#include "shepade/planet.hpp"

#include <string>
#include <vector>

namespace shepade {

enum class SingularityClass { interior, exterior, boundary };
std::string to_string(SingularityClass c);

enum class SingularityOrigin { discriminant, edge };
std::string to_string(SingularityOrigin o);

struct Singularity {
  MpComplex location;  // Z0
  MpComplex rotated;   // i Z0
  SingularityClass cls = SingularityClass::exterior;
  SingularityOrigin origin = SingularityOrigin::discriminant;
};

enum class RadiusStatus { from_roots, terminating, undetermined };
std::string to_string(RadiusStatus s);

struct SingularitySet {
  std::vector<Singularity> roots;
  MpReal convergence_radius;
  MpReal brillouin;
  RadiusStatus status = RadiusStatus::undetermined;
  bool terminating() const { return status == RadiusStatus::terminating; }
};

/// p is linear in z (the sphere): the expansion has only the monopole term.
class TerminatingSeries : public NumericalError {
 public:
  TerminatingSeries() : NumericalError("profile too simple: no finite singularities, SHE terminates") {}
};

/// Roots in Z of the discriminant of p. Throws TerminatingSeries when p has
/// degree < 2 in z and NumericalError when the discriminant vanishes
/// identically.
std::vector<MpComplex> discriminant_roots(const ShapeProfile& profile, const PrecisionCtx& ctx);

/// Z0 = z_e +- i s(z_e) for each end z_e of the range with s^2(z_e) > 0.
std::vector<MpComplex> edge_singularities(const ShapeProfile& profile, const PrecisionCtx& ctx);

/// Boundary when x^2 is within tol * 2 brillouin of s^2(y) for y in the range
/// (widened by tol), or when y is within tol of an end and |x| does not exceed
/// the end radius (flat caps). Interior when strictly inside, else Exterior.
SingularityClass classify(const MpComplex& rotated, const ShapeProfile& profile, const MpReal& tol,
                          const MpReal& brillouin, const PrecisionCtx& ctx);
/// tol = 1e-6 brillouin.
SingularityClass classify(const MpComplex& rotated, const ShapeProfile& profile, const PrecisionCtx& ctx);

/// Largest |Z0| over Interior and Boundary roots; 0 for a terminating series.
/// Throws std::domain_error when neither applies.
MpReal convergence_radius(const SingularitySet& set);

/// The z at which p(z) = p'(z) = 0 for a discriminant root Z0: the root of
/// p'(z) with the smallest |p(z)|.
MpComplex critical_point(const ShapeProfile& profile, const MpComplex& Z0, const PrecisionCtx& ctx);

/// s'(z0) = +-i to rel_tol * 1e3 and z0 +- i s(z0) is a discriminant root.
/// Throws std::domain_error when s^2(z0) vanishes.
bool combined_condition_check(const ShapeProfile& profile, const MpComplex& z0, const PrecisionCtx& ctx);

/// Discriminant and edge singularities, classified, with both radii.
SingularitySet analyze(const ShapeProfile& profile, const PrecisionCtx& ctx);

}  // namespace shepade
