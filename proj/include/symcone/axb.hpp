#pragma once

// Worked 2x2 instance: the affine group of the line, its positive
// sub-semigroup, and the compactified right action on a half-plane whose
// points carry explicit infinity tags (no IEEE infinities in the data).

#include <cmath>
#include <utility>

#include "symcone/errors.hpp"

namespace symcone {
namespace axb {

// Extended real with tagged infinities. `value` is meaningful only for
// Finite; constructors keep NaN and IEEE inf out.
struct XReal {
  enum class Tag { NegInf, Finite, PosInf };
  Tag tag = Tag::Finite;
  double value = 0.0;

  static XReal neg_inf() { return XReal{Tag::NegInf, 0.0}; }
  static XReal pos_inf() { return XReal{Tag::PosInf, 0.0}; }
  static XReal finite(double v) {
    if (!std::isfinite(v)) throw InvalidElement("XReal::finite needs a finite double");
    return XReal{Tag::Finite, v};
  }

  bool is_finite() const { return tag == Tag::Finite; }

  friend bool operator==(const XReal& a, const XReal& b) {
    if (a.tag != b.tag) return false;
    return a.tag != Tag::Finite || a.value == b.value;
  }
};

// Group element (a b; 0 1) with a > 0: t -> a t + b.
struct AffineElement {
  double a = 1.0;
  double b = 0.0;

  AffineElement(double a_, double b_) : a(a_), b(b_) {
    if (!(std::isfinite(a) && std::isfinite(b)) || a <= 0.0)
      throw InvalidElement("affine element needs finite b and a > 0");
  }
};

// Point of the compactified right half-plane: x in [-inf, inf), y in [0, inf].
struct PlanePoint {
  XReal x;
  XReal y;

  PlanePoint(XReal x_, XReal y_) : x(x_), y(y_) {
    if (x.tag == XReal::Tag::PosInf)
      throw InvalidElement("plane point: x = +inf excluded");
    if (y.tag == XReal::Tag::NegInf || (y.is_finite() && y.value < 0.0))
      throw InvalidElement("plane point: y must be >= 0");
  }
};

// Matrix product (a1 b1; 0 1)(a2 b2; 0 1). The order is pinned by the action
// compatibility act(act(p, g), h) = act(p, compose(g, h)).
inline AffineElement compose(const AffineElement& g, const AffineElement& h) {
  return AffineElement(g.a * h.a, g.a * h.b + g.b);
}

// Right action (x, y) . g = ((x - b)/a, y/a), extended to the infinity tags:
// -inf stays -inf, y = inf stays inf.
inline PlanePoint act_plane(const PlanePoint& p, const AffineElement& g) {
  XReal nx = p.x.is_finite() ? XReal::finite((p.x.value - g.b) / g.a) : p.x;
  XReal ny = p.y.is_finite() ? XReal::finite(p.y.value / g.a) : p.y;
  return PlanePoint(nx, ny);
}

// Positive semigroup P = {a >= 1, b >= 0}; interior asks strict inequalities.
inline bool in_semigroup(const AffineElement& g, bool interior) {
  return interior ? (g.a > 1.0 && g.b > 0.0) : (g.a >= 1.0 && g.b >= 0.0);
}

// The orbit closure of the base point under P: x <= 0, y <= 1. The orbit of
// the interior is x < 0, y < 1 (infinite x counts as < 0, infinite y fails).
inline bool in_X(const PlanePoint& p, bool interior_orbit) {
  const bool x_ok = p.x.tag == XReal::Tag::NegInf ||
                    (interior_orbit ? p.x.value < 0.0 : p.x.value <= 0.0);
  const bool y_ok = p.y.is_finite() &&
                    (interior_orbit ? p.y.value < 1.0 : p.y.value <= 1.0);
  return x_ok && y_ok;
}

// Escape floor: any finite first coordinate is pushed to at least
// log(s/(1-s)) by the deformation below.
inline double escape_floor(double s) {
  if (!(s > 0.0 && s < 1.0))
    throw ParameterOutOfRange("escape_floor: s must lie in (0, 1)");
  return std::log(s) - std::log1p(-s);
}

// Same floor evaluated from the complement c = 1 - s, which stays
// representable when s itself would round to 1.
inline double escape_floor_complement(double c) {
  if (!(c > 0.0 && c < 1.0))
    throw ParameterOutOfRange("escape_floor_complement: c must lie in (0, 1)");
  return std::log1p(-c) - std::log(c);
}

// Complement 1 - sigma(m) = 1/(1 + e^m) of the logistic threshold; stays
// positive in double far past the point where sigma(m) rounds to 1.
inline double escape_threshold_complement(double m) {
  if (m > 0.0) {
    const double em = std::exp(-m);
    return em / (1.0 + em);
  }
  return 1.0 / (1.0 + std::exp(m));
}

// Deformation pulling the plane off the compactification: s = 0 is the
// identity, and as s -> 1 the first coordinate escapes to +inf:
//   (x, y) -> (log(e^x + s/(1-s)), y).
// Evaluated in split form so large |x| neither overflows nor loses the floor.
inline PlanePoint escape_homotopy(double s, const PlanePoint& p) {
  if (!(s >= 0.0 && s < 1.0))
    throw ParameterOutOfRange("escape_homotopy: s must lie in [0, 1)");
  if (s == 0.0) return p;
  const double c = s / (1.0 - s);
  XReal nx;
  if (p.x.tag == XReal::Tag::NegInf) {
    nx = XReal::finite(std::log(c));
  } else {
    const double x = p.x.value;
    nx = XReal::finite(x >= 0.0 ? x + std::log1p(c * std::exp(-x))
                                : std::log(c + std::exp(x)));
  }
  return PlanePoint(nx, p.y);
}

}  // namespace axb
}  // namespace symcone
