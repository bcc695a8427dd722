#pragma once

// Seeded samplers for elements, cone points, compactified points, and the
// worked half-plane example. Every sampler draws only from the RandomStream
// it is handed, so a sample is a pure function of that stream's seed.

#include <cmath>
#include <cstdint>
#include <utility>

#include "symcone/algebra.hpp"
#include "symcone/axb.hpp"
#include "symcone/constants.hpp"
#include "symcone/errors.hpp"
#include "symcone/rng.hpp"
#include "symcone/spectral.hpp"
#include "symcone/wiener_hopf.hpp"

namespace symcone {

// Standard Gaussian coordinates.
inline Element sample_element(const AlgebraDescriptor& alg, RandomStream& rng) {
  Vec c(static_cast<std::size_t>(alg.dim()));
  for (double& v : c) v = rng.normal();
  return Element(alg, std::move(c));
}

// Closed-cone point: a square.
inline Element sample_cone(const AlgebraDescriptor& alg, RandomStream& rng) {
  const Element g = sample_element(alg, rng);
  return jordan_product(g, g);
}

// Open-cone point: a square pushed off the boundary.
inline Element sample_interior(const AlgebraDescriptor& alg, RandomStream& rng) {
  return sample_cone(alg, rng) + kInteriorShift * identity(alg);
}

// Cone point with at least one exact zero eigenvalue: decompose a square and
// drop its bottom eigenvalue group. Rank-1 algebras degenerate to zero.
inline Element sample_singular_cone(const AlgebraDescriptor& alg, RandomStream& rng) {
  const SpectralDecomposition sd = spectral_decompose(sample_cone(alg, rng));
  Element x = zero(alg);
  for (std::size_t i = 1; i < sd.eigenvalues.size(); ++i)
    x = x + sd.eigenvalues[i] * sd.idempotents[i];
  return x;
}

// Boundary datum (e, x): a proper random idempotent (zero when the rank
// cannot support one) and a square inside V_0(e).
inline BoundaryPoint sample_boundary(const AlgebraDescriptor& alg, RandomStream& rng) {
  Element e = alg.rank() >= 2 ? random_idempotent(alg, rng, /*allow_trivial=*/false)
                              : zero(alg);
  const Element p = apply(quad(identity(alg) - e), sample_element(alg, rng));
  return BoundaryPoint(std::move(e), jordan_product(p, p));
}

// Point of X, mixing the strata: Cayley images of cone points, proper
// boundary points, and the three distinguished corners -1, 1, 0.
inline CompactifiedPoint sample_X(const AlgebraDescriptor& alg, RandomStream& rng) {
  const double pick = rng.uniform();
  if (pick < 0.45) return cayley(sample_cone(alg, rng));
  if (pick < 0.90) return embed(sample_boundary(alg, rng));
  const std::uint64_t corner = rng.uniform_int(3);
  if (corner == 0) return CompactifiedPoint(-identity(alg));
  if (corner == 1) return CompactifiedPoint(identity(alg));
  return CompactifiedPoint(zero(alg));
}

namespace axb {

// Bounded chart for the plane: (x, y) = (log(u/(1-u)), v/(1-v)) with u, v
// uniform on (0, 1), plus atoms at x = -inf, y = inf, and the corners.
inline PlanePoint sample_plane(RandomStream& rng) {
  const double pick = rng.uniform();
  XReal x, y;
  if (pick < 0.1) {
    x = XReal::neg_inf();
  } else {
    double u = rng.uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    x = XReal::finite(std::log(u) - std::log1p(-u));
  }
  const double pick2 = rng.uniform();
  if (pick2 < 0.1) {
    y = XReal::pos_inf();
  } else if (pick2 < 0.2) {
    y = XReal::finite(0.0);
  } else {
    const double v = rng.uniform();
    y = XReal::finite(v / (1.0 - v));
  }
  return PlanePoint(x, y);
}

// Point of the orbit closure X = [-inf, 0] x [0, 1].
inline PlanePoint sample_orbit(RandomStream& rng, bool interior) {
  const double pick = rng.uniform();
  XReal x, y;
  if (!interior && pick < 0.15) {
    x = XReal::neg_inf();
  } else if (!interior && pick < 0.3) {
    x = XReal::finite(0.0);
  } else {
    double u = rng.uniform();
    if (u <= 0.0) u = 0x1.0p-53;
    x = XReal::finite(std::log(u) - std::log1p(-u));
    if (x.value > 0.0) x = XReal::finite(-x.value);
    if (interior && x.value == 0.0) x = XReal::finite(-0x1.0p-30);
  }
  const double pick2 = rng.uniform();
  if (!interior && pick2 < 0.15) {
    y = XReal::finite(1.0);
  } else {
    y = XReal::finite(rng.uniform());
    if (interior && y.value >= 1.0) y = XReal::finite(0.5);
  }
  return PlanePoint(x, y);
}

// Semigroup element; interior draws a > 1, b > 0 strictly.
inline AffineElement sample_semigroup(RandomStream& rng, bool interior) {
  const double a = 1.0 + (interior ? 0x1.0p-20 : 0.0) + 3.0 * rng.uniform();
  const double b = (interior ? 0x1.0p-20 : 0.0) + 3.0 * rng.uniform();
  return AffineElement(a, b);
}

}  // namespace axb
}  // namespace symcone
