#pragma once

// The order-interval compactification X = {u : -1 <= u <= 1} of the cone, the
// Cayley chart into it, the boundary parametrization by pairs (e, x), and the
// cone's additive action on X.

#include <algorithm>
#include <cmath>
#include <optional>
#include <utility>

#include "symcone/algebra.hpp"
#include "symcone/constants.hpp"
#include "symcone/errors.hpp"
#include "symcone/spectral.hpp"

namespace symcone {

// A point of X. Construction checks the defining order interval: both 1 - u
// and 1 + u must classify inside the closed cone.
struct CompactifiedPoint {
  Element u;

  explicit CompactifiedPoint(Element v) : u(std::move(v)) {
    const Element one = identity(u.algebra);
    if (cone_classify(one - u) == ConeClass::Outside ||
        cone_classify(one + u) == ConeClass::Outside)
      throw OutOfInterval("point has spectrum outside [-1, 1]");
  }
};

// Boundary chart datum: an idempotent e together with x in V_0(e) lying in
// the closed cone. (e = 0 recovers interior points, with x the cone point.)
struct BoundaryPoint {
  Element e;
  Element x;

  BoundaryPoint(Element e_, Element x_) : e(std::move(e_)), x(std::move(x_)) {
    require_same_algebra(e, x);
    if (norm(jordan_product(e, e) - e) > kEpsIdempotent * std::max(1.0, norm(e)))
      throw InvalidBoundaryPoint("e is not idempotent");
    const Element off = apply(quad(identity(e.algebra) - e), x) - x;
    if (norm(off) > kEpsSubspace * std::max(1.0, norm(x)))
      throw InvalidBoundaryPoint("x has components outside V_0(e)");
    if (cone_classify(x) == ConeClass::Outside)
      throw InvalidBoundaryPoint("x lies outside the closed cone");
  }
};

// Cayley chart u = (x-1)(x+1)^-1 = 1 - 2 (x+1)^-1, for x in the closed cone.
inline CompactifiedPoint cayley(const Element& x) {
  if (cone_classify(x) == ConeClass::Outside)
    throw NotInCone("cayley: argument outside the closed cone");
  const Element one = identity(x.algebra);
  return CompactifiedPoint(one - 2.0 * inverse(x + one));
}

// Chart (e, x) -> X. With x = sum lambda_i f_i over a frame of V_0(e), the
// image is e + sum ((lambda_i - 1)/(lambda_i + 1)) f_i; computed without a
// frame through the subalgebra inverse of x + e_perp in V_0(e) = V_1(e_perp).
inline CompactifiedPoint embed(const BoundaryPoint& p) {
  const Element eperp = identity(p.e.algebra) - p.e;
  const Element w = subalgebra_inverse(p.x + eperp, eperp);
  return CompactifiedPoint(p.e + jordan_product(w, p.x - eperp));
}

// Inverse chart: split u along its spectrum. Eigenvalue groups at 1 (within
// the grouping tolerance) form e; each remaining group mu contributes
// ((1+mu)/(1-mu)) times its idempotent to x.
inline BoundaryPoint represent(const CompactifiedPoint& p) {
  const SpectralDecomposition sd = spectral_decompose(p.u);
  const double tol = kEpsGroup * std::max(1.0, norm(p.u));
  Element e = zero(p.u.algebra);
  Element x = zero(p.u.algebra);
  for (std::size_t i = 0; i < sd.eigenvalues.size(); ++i) {
    const double mu = sd.eigenvalues[i];
    if (std::abs(mu - 1.0) <= tol) {
      e = e + sd.idempotents[i];
    } else {
      x = x + ((1.0 + mu) / (1.0 - mu)) * sd.idempotents[i];
    }
  }
  return BoundaryPoint(std::move(e), std::move(x));
}

// Translation action of the open cone on X, by the literal formula
//   u ⊞ a = 1 - 2 u~ + 2 P(u~) (u~ + a^-1)^-1,   u~ = (1 - u)/2.
inline CompactifiedPoint act_direct(const CompactifiedPoint& p, const Element& a) {
  if (cone_classify(a) != ConeClass::Interior)
    throw NotInteriorCone("act_direct: translation must lie in the open cone");
  const Element one = identity(p.u.algebra);
  const Element ut = 0.5 * (one - p.u);
  const Element s = inverse(ut + inverse(a));
  return CompactifiedPoint(one - 2.0 * ut + 2.0 * apply(quad(ut), s));
}

// Same action through the boundary chart: (e, x) ⊞ a = (e, x + P(1-e) a).
// Stays defined for a on the cone boundary, where the resolvent formula
// degenerates.
inline CompactifiedPoint act(const CompactifiedPoint& p, const Element& a) {
  if (cone_classify(a) == ConeClass::Outside)
    throw NotInCone("act: translation must lie in the closed cone");
  const BoundaryPoint bp = represent(p);
  const Element eperp = identity(p.u.algebra) - bp.e;
  return embed(BoundaryPoint(bp.e, bp.x + apply(quad(eperp), a)));
}

// Undo a translation when possible: defined iff x - P(1-e) a stays in the
// closed cone.
inline std::optional<CompactifiedPoint> preimage(const CompactifiedPoint& p,
                                                 const Element& a) {
  if (cone_classify(a) == ConeClass::Outside)
    throw NotInCone("preimage: translation must lie in the closed cone");
  const BoundaryPoint bp = represent(p);
  const Element eperp = identity(p.u.algebra) - bp.e;
  const Element y = bp.x - apply(quad(eperp), a);
  if (cone_classify(y) == ConeClass::Outside) return std::nullopt;
  return embed(BoundaryPoint(bp.e, y));
}

// Admissible translations at u = image(e, x): any a in V (cone or not) with
// x + P(1-e) a still in the closed cone.
inline bool a_set_member(const CompactifiedPoint& p, const Element& a) {
  const BoundaryPoint bp = represent(p);
  const Element eperp = identity(p.u.algebra) - bp.e;
  return cone_classify(bp.x + apply(quad(eperp), a)) != ConeClass::Outside;
}

// Certificate that the admissible set is an order ideal shifted by the cone:
// u ⊞ a1 = v ⊞ a2 with a1, a2 both in the open cone.
struct ASetWitness {
  Element a1;
  Element a2;
  CompactifiedPoint v;
};

inline ASetWitness a_set_witness(const CompactifiedPoint& p, const Element& a) {
  const BoundaryPoint bp = represent(p);
  const Element eperp = identity(p.u.algebra) - bp.e;
  const Element shifted = bp.x + apply(quad(eperp), a);
  if (cone_classify(shifted) == ConeClass::Outside)
    throw NotMember("a_set_witness: translation not admissible at this point");

  // Shift by (1 + spectral radius) times the unit: min-eig(a + c) >= 1.
  const double c = 1.0 + spectral_radius(a);
  const Element shift = c * identity(p.u.algebra);
  const Element a1 = a + shift;
  if (cone_classify(a1) != ConeClass::Interior ||
      cone_classify(shift) != ConeClass::Interior)
    throw Error("a_set_witness: internal shift left the open cone");

  CompactifiedPoint v = embed(BoundaryPoint(bp.e, shifted));
  return ASetWitness{a1, shift, std::move(v)};
}

// u avoids the bottom stratum: -1 absent from its spectrum.
inline bool interior_membership(const CompactifiedPoint& p) {
  return !spectrum_contains(p.u, -1.0);
}

// Strict domination of the image of a: u - cayley(a) interior.
inline bool dominates(const CompactifiedPoint& p, const Element& a) {
  if (cone_classify(a) == ConeClass::Outside)
    throw NotInCone("dominates: argument outside the closed cone");
  return cone_classify(p.u - cayley(a).u) == ConeClass::Interior;
}

// Straight-line deformation h_t(u) = t u + (t-1) 1 onto the bottom point;
// h_1 is the identity and h_0 is constant at -1, both exactly in coordinates.
inline CompactifiedPoint homotopy_point(double t, const CompactifiedPoint& p) {
  if (!(t >= 0.0 && t <= 1.0))
    throw ParameterOutOfRange("homotopy_point: t must lie in [0, 1]");
  const Element one = identity(p.u.algebra);
  Vec c(p.u.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = t * p.u.coords[i] + (t - 1.0) * one.coords[i];
  return CompactifiedPoint(Element(p.u.algebra, std::move(c)));
}

}  // namespace symcone
