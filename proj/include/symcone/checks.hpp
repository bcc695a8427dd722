#pragma once

// Registered property checks. Each check evaluates one sampled instance of
// one invariant and returns a residual; the harness reduces residuals to a
// max and compares against the check's tolerance. Sample i of a check is a
// pure function of (master seed, check id, i), never of thread layout.
// Boolean invariants report 0/1 indicators under tolerance 0.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "symcone/algebra.hpp"
#include "symcone/axb.hpp"
#include "symcone/constants.hpp"
#include "symcone/errors.hpp"
#include "symcone/rng.hpp"
#include "symcone/sampling.hpp"
#include "symcone/spectral.hpp"
#include "symcone/wiener_hopf.hpp"

namespace symcone {
namespace harness {

// Residual reported when an invariant breaks structurally (an exception, a
// missing witness): far above every tolerance, still finite for JSON.
inline constexpr double kFailResidual = 1e30;

struct CheckContext {
  AlgebraDescriptor algebra;
  std::uint64_t seed = 0;
};

struct SampleOutcome {
  double residual = 0.0;
  int rejected = 0;
};

using SampleFn = SampleOutcome (*)(const CheckContext&, std::string_view, std::uint64_t);

struct CheckDef {
  const char* id;
  const char* suite;
  double tolerance;        // default, overridable per run
  bool algebra_dependent;  // false: ignores the configured algebra (axb)
  SampleFn run;
};

namespace detail {

inline double rel_diff(const Element& a, const Element& b) {
  return norm(a - b) / std::max(1.0, norm(b));
}

// Square plus unit shift: condition stays near the top eigenvalue, which
// keeps two-route comparisons meaningful at tight tolerances.
inline Element sample_conditioned(const AlgebraDescriptor& alg, RandomStream& rng) {
  return sample_cone(alg, rng) + identity(alg);
}

// Multiplication operator of the u-mutation, one column per basis vector.
inline Mat mutated_l_matrix(const Element& z, const Element& u) {
  const int d = z.algebra.dim();
  Mat m(d, d);
  for (int k = 0; k < d; ++k) {
    Vec unit(static_cast<std::size_t>(d), 0.0);
    unit[static_cast<std::size_t>(k)] = 1.0;
    const Element col = mutation_product(z, Element(z.algebra, std::move(unit)), u);
    for (int r = 0; r < d; ++r) m(r, k) = col.coords[static_cast<std::size_t>(r)];
  }
  return m;
}

// ---- algebra suite -----------------------------------------------------

inline SampleOutcome jordan_identity(const CheckContext& ctx, std::string_view id,
                                     std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_element(ctx.algebra, rng);
  const Element y = sample_element(ctx.algebra, rng);
  const Element xx = jordan_product(x, x);
  const Element lhs = jordan_product(x, jordan_product(xx, y));
  const Element rhs = jordan_product(xx, jordan_product(x, y));
  const double scale = std::max(1.0, norm(x) * norm(x) * norm(y));
  return {norm(lhs - rhs) / scale, 0};
}

inline SampleOutcome l_symmetry(const CheckContext& ctx, std::string_view id,
                                std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_element(ctx.algebra, rng);
  const Element y = sample_element(ctx.algebra, rng);
  const Element z = sample_element(ctx.algebra, rng);
  const Mat m = l_operator(x).matrix;
  const double op = frobenius_norm(m - transpose(m)) / std::max(1.0, frobenius_norm(m));
  const double triple = std::abs(inner(jordan_product(x, y), z) -
                                 inner(y, jordan_product(x, z))) /
                        std::max(1.0, norm(x) * norm(y) * norm(z));
  return {std::max(op, triple), 0};
}

inline SampleOutcome quad_identities(const CheckContext& ctx, std::string_view id,
                                     std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_interior(ctx.algebra, rng);
  const LinearOperator px = quad(x);
  const double r1 = rel_diff(apply(px, identity(ctx.algebra)), jordan_product(x, x));
  const double r2 = rel_diff(apply(px, inverse(x)), x);
  return {std::max(r1, r2), 0};
}

inline SampleOutcome quad_bilinear_consistency(const CheckContext& ctx,
                                               std::string_view id, std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_element(ctx.algebra, rng);
  const Element y = sample_element(ctx.algebra, rng);
  const Mat a = quad(x).matrix;
  const Mat b = quad_bilinear(x, x).matrix;
  const double diag = frobenius_norm(a - b) / std::max(1.0, frobenius_norm(a));
  // P(x,y) 1 = x∘y for the polarized form.
  const double pol = rel_diff(apply(quad_bilinear(x, y), identity(ctx.algebra)),
                              jordan_product(x, y));
  return {std::max(diag, pol), 0};
}

inline SampleOutcome mutation_unit(const CheckContext& ctx, std::string_view id,
                                   std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element u = sample_interior(ctx.algebra, rng);
  const Element a = sample_element(ctx.algebra, rng);
  // u^-1 is the unit of the u-mutation: a *_u u^-1 = a.
  const Element lhs = mutation_product(a, inverse(u), u);
  return {rel_diff(lhs, a), 0};
}

inline SampleOutcome mutation_inverse_transport(const CheckContext& ctx,
                                                std::string_view id, std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_conditioned(ctx.algebra, rng);
  const Element u = sample_conditioned(ctx.algebra, rng);
  const Element w = mutation_inverse(x, u);

  // Independent route: P_u(x) = 2 L_u(x)^2 - L_u(x *_u x) inside the mutated
  // algebra, then solve P_u(x) w' = x.
  const Mat lux = mutated_l_matrix(x, u);
  const Mat luxx = mutated_l_matrix(mutation_product(x, x, u), u);
  const Mat pux = 2.0 * (lux * lux) - luxx;
  const Vec wp = lu_solve(pux, x.coords);
  double diff = 0.0;
  for (std::size_t t = 0; t < wp.size(); ++t) {
    const double d = wp[t] - w.coords[t];
    diff += d * d;
  }
  const double route = std::sqrt(diff) / std::max(1.0, norm(w));
  // And the unit law: x *_u x^(-1,u) is the mutation unit u^-1.
  const double unit_law = rel_diff(mutation_product(x, w, u), inverse(u));
  return {std::max(route, unit_law), 0};
}

inline SampleOutcome hua_identity(const CheckContext& ctx, std::string_view id,
                                  std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element a = sample_interior(ctx.algebra, rng);
  const Element b = sample_interior(ctx.algebra, rng);
  return {hua_residual(a, b), 0};
}

inline SampleOutcome cone_squares(const CheckContext& ctx, std::string_view id,
                                  std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_element(ctx.algebra, rng);
  const bool ok = cone_classify(jordan_product(x, x)) != ConeClass::Outside;
  // The zero element and additive cone closure ride along.
  const bool zero_ok = cone_classify(zero(ctx.algebra)) == ConeClass::Boundary;
  const Element y = sample_cone(ctx.algebra, rng);
  const bool sum_ok = cone_classify(jordan_product(x, x) + y) != ConeClass::Outside;
  return {(ok && zero_ok && sum_ok) ? 0.0 : 1.0, 0};
}

// ---- spectral suite ----------------------------------------------------

inline SampleOutcome spectral_reconstruction(const CheckContext& ctx, std::string_view id,
                                             std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_element(ctx.algebra, rng);
  const SpectralDecomposition sd = spectral_decompose(x);
  Element rec = zero(ctx.algebra);
  for (std::size_t k = 0; k < sd.eigenvalues.size(); ++k)
    rec = rec + sd.eigenvalues[k] * sd.idempotents[k];
  return {norm(rec - x) / std::max(1.0, norm(x)), 0};
}

inline SampleOutcome spectral_frame(const CheckContext& ctx, std::string_view id,
                                    std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_element(ctx.algebra, rng);
  const SpectralDecomposition sd = spectral_decompose(x);
  double worst = 0.0;
  Element sum = zero(ctx.algebra);
  for (std::size_t a = 0; a < sd.idempotents.size(); ++a) {
    sum = sum + sd.idempotents[a];
    worst = std::max(worst, norm(jordan_product(sd.idempotents[a], sd.idempotents[a]) -
                                 sd.idempotents[a]));
    for (std::size_t b = a + 1; b < sd.idempotents.size(); ++b)
      worst = std::max(worst, norm(jordan_product(sd.idempotents[a], sd.idempotents[b])));
  }
  worst = std::max(worst, norm(sum - identity(ctx.algebra)));
  return {worst, 0};
}

inline SampleOutcome peirce_projectors(const CheckContext& ctx, std::string_view id,
                                       std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element e = random_idempotent(ctx.algebra, rng, /*allow_trivial=*/true);
  const PeirceDecomposition pd = peirce(e);
  const int d = ctx.algebra.dim();
  double worst = 0.0;
  Mat sum(d, d);
  for (const LinearOperator* op : {&pd.pi0, &pd.pi_half, &pd.pi1}) {
    const Mat& m = op->matrix;
    worst = std::max(worst, frobenius_norm(m - transpose(m)));
    worst = std::max(worst, frobenius_norm(m * m - m));
    sum = sum + m;
  }
  worst = std::max(worst, frobenius_norm(sum - Mat::identity(d)));
  // Projections must reproduce e and its complement.
  worst = std::max(worst, norm(apply(pd.pi1, e) - e));
  const Element eperp = identity(ctx.algebra) - e;
  worst = std::max(worst, norm(apply(pd.pi0, eperp) - eperp));
  return {worst, 0};
}

inline SampleOutcome peirce_quad_projection(const CheckContext& ctx, std::string_view id,
                                            std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element e = random_idempotent(ctx.algebra, rng, /*allow_trivial=*/true);
  const PeirceDecomposition pd = peirce(e);
  const double r1 = frobenius_norm(pd.pi1.matrix - quad(e).matrix);
  const Element eperp = identity(ctx.algebra) - e;
  const double r0 = frobenius_norm(pd.pi0.matrix - quad(eperp).matrix);
  return {std::max(r0, r1) / std::max(1.0, frobenius_norm(pd.pi1.matrix)), 0};
}

inline SampleOutcome peirce_operator_spectrum(const CheckContext& ctx, std::string_view id,
                                              std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element e = random_idempotent(ctx.algebra, rng, /*allow_trivial=*/true);
  const SymmetricEigen eig = jacobi_eigensolve(l_operator(e).matrix, kMaxJacobiSweeps);
  double worst = 0.0;
  for (double mu : eig.values) {
    const double dist = std::min({std::abs(mu), std::abs(mu - 0.5), std::abs(mu - 1.0)});
    worst = std::max(worst, dist);
  }
  return {worst, 0};
}

// Projection of a global resolvent into V_1(e) agrees with the resolvent
// computed wholly inside the subalgebra:
//   P(e) (u + a^-1)^-1 = (u + inv_e(P(e) a))^-1 taken in V_1(e),
// for a in the open cone, u in the closed cone of V_1(e). The projected
// P(e) a must always be invertible in V_1(e).
inline SampleOutcome subalgebra_projected_inverse(const CheckContext& ctx,
                                                  std::string_view id, std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  Element e = zero(ctx.algebra);
  if (i == 0) {
    // keep the zero idempotent corner
  } else if (i == 1) {
    e = identity(ctx.algebra);
  } else {
    e = random_idempotent(ctx.algebra, rng, /*allow_trivial=*/true);
  }
  const Element a = sample_interior(ctx.algebra, rng);
  const LinearOperator pe = quad(e);
  const Element g = apply(pe, sample_element(ctx.algebra, rng));
  const Element u = jordan_product(g, g);

  const Element a0 = apply(pe, a);
  Element a0_inv = zero(ctx.algebra);
  try {
    a0_inv = subalgebra_inverse(a0, e);
  } catch (const SingularInSubalgebra&) {
    return {kFailResidual, 0};  // must never happen for interior a
  }
  const Element lhs = apply(pe, inverse(u + inverse(a)));
  const Element rhs = subalgebra_inverse(u + a0_inv, e);
  return {rel_diff(lhs, rhs), 0};
}

// ---- compactification suite --------------------------------------------

inline double interval_overshoot(const CompactifiedPoint& p) {
  const Element one = identity(p.u.algebra);
  const double lo = min_eigenvalue(one - p.u);
  const double hi = min_eigenvalue(one + p.u);
  return std::max(0.0, -std::min(lo, hi));
}

inline SampleOutcome act_interval(const CheckContext& ctx, std::string_view id,
                                  std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const CompactifiedPoint u = sample_X(ctx.algebra, rng);
  const Element a = sample_interior(ctx.algebra, rng);
  try {
    return {interval_overshoot(act_direct(u, a)), 0};
  } catch (const OutOfInterval&) {
    return {kFailResidual, 0};
  }
}

inline SampleOutcome act_oracle_agreement(const CheckContext& ctx, std::string_view id,
                                          std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  int rejected = 0;
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    const CompactifiedPoint u = sample_X(ctx.algebra, rng);
    const Element a = sample_interior(ctx.algebra, rng);
    // Conditioning guards on the two inversions the resolvent formula takes.
    if (spectral_condition(a) > kConditionGuard) {
      ++rejected;
      continue;
    }
    const Element ut = 0.5 * (identity(ctx.algebra) - u.u);
    if (spectral_condition(ut + inverse(a)) > kConditionGuard) {
      ++rejected;
      continue;
    }
    const CompactifiedPoint via_chart = act(u, a);
    const CompactifiedPoint direct = act_direct(u, a);
    return {rel_diff(via_chart.u, direct.u), rejected};
  }
  return {kFailResidual, rejected};
}

inline SampleOutcome act_semigroup(const CheckContext& ctx, std::string_view id,
                                   std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const CompactifiedPoint u = sample_X(ctx.algebra, rng);
  const Element a = sample_cone(ctx.algebra, rng);
  const Element b = sample_cone(ctx.algebra, rng);
  const CompactifiedPoint seq = act(act(u, a), b);
  const CompactifiedPoint joint = act(u, a + b);
  return {rel_diff(seq.u, joint.u), 0};
}

inline SampleOutcome act_equivariance(const CheckContext& ctx, std::string_view id,
                                      std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const Element x = sample_cone(ctx.algebra, rng);
  const Element a = sample_interior(ctx.algebra, rng);
  const CompactifiedPoint expected = cayley(x + a);
  const double r1 = rel_diff(act(cayley(x), a).u, expected.u);
  const double r2 = rel_diff(act_direct(cayley(x), a).u, expected.u);
  return {std::max(r1, r2), 0};
}

inline SampleOutcome act_injective(const CheckContext& ctx, std::string_view id,
                                   std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  int rejected = 0;
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    const CompactifiedPoint u = sample_X(ctx.algebra, rng);
    const CompactifiedPoint v = sample_X(ctx.algebra, rng);
    if (norm(u.u - v.u) < 1e-3) {
      ++rejected;
      continue;
    }
    const Element a = sample_interior(ctx.algebra, rng);
    const BoundaryPoint r1 = represent(act(u, a));
    const BoundaryPoint r2 = represent(act(v, a));
    const bool collided =
        norm(r1.e - r2.e) <= 1e-6 && norm(r1.x - r2.x) <= 1e-6;
    return {collided ? 1.0 : 0.0, rejected};
  }
  return {kFailResidual, rejected};
}

inline SampleOutcome roundtrip(const CheckContext& ctx, std::string_view id,
                               std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  CompactifiedPoint u = CompactifiedPoint(zero(ctx.algebra));
  switch (i % 7) {
    case 0: {
      const std::uint64_t corner = i / 7 % 3;
      u = CompactifiedPoint(corner == 0   ? -identity(ctx.algebra)
                            : corner == 1 ? identity(ctx.algebra)
                                          : zero(ctx.algebra));
      break;
    }
    case 1:
      u = embed(sample_boundary(ctx.algebra, rng));  // e proper when rank allows
      break;
    case 2:
      u = cayley(sample_singular_cone(ctx.algebra, rng));  // -1 in the spectrum
      break;
    default:
      u = sample_X(ctx.algebra, rng);
  }
  const double r1 = rel_diff(embed(represent(u)).u, u.u);

  // Chart-level roundtrip on an independent boundary datum.
  const BoundaryPoint p = sample_boundary(ctx.algebra, rng);
  const BoundaryPoint q = represent(embed(p));
  const double r2 = (norm(q.e - p.e) + norm(q.x - p.x)) / std::max(1.0, norm(p.x));
  return {std::max(r1, r2), 0};
}

inline SampleOutcome axiom_c1_forward(const CheckContext& ctx, std::string_view id,
                                      std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const CompactifiedPoint u = sample_X(ctx.algebra, rng);
  const Element b = sample_interior(ctx.algebra, rng);
  const Element a = sample_cone(ctx.algebra, rng);
  const CompactifiedPoint v = act(u, b + a);
  return {dominates(v, a) ? 0.0 : 1.0, 0};
}

inline SampleOutcome axiom_c1_converse(const CheckContext& ctx, std::string_view id,
                                       std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const CompactifiedPoint v0 = sample_X(ctx.algebra, rng);
  const Element b = sample_interior(ctx.algebra, rng);
  const Element a = sample_cone(ctx.algebra, rng);
  const CompactifiedPoint u = act(v0, a + b);
  if (!dominates(u, a)) return {kFailResidual, 0};

  // Strict domination leaves room: some a + eps ball still reaches u.
  double eps = min_eigenvalue(u.u - cayley(a).u) / 4.0;
  const Element one = identity(ctx.algebra);
  for (int halving = 0; halving < 60; ++halving, eps *= 0.5) {
    const std::optional<CompactifiedPoint> pre = preimage(u, a + eps * one);
    if (!pre) continue;
    return {rel_diff(act(*pre, a + eps * one).u, u.u), 0};
  }
  return {kFailResidual, 0};
}

inline SampleOutcome axiom_c2_membership(const CheckContext& ctx, std::string_view id,
                                         std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  Element probe = zero(ctx.algebra);
  switch (i % 10) {
    case 0:
      probe = sample_singular_cone(ctx.algebra, rng);  // boundary
      break;
    case 1:
      probe = -1.0 * sample_interior(ctx.algebra, rng);  // outside
      break;
    case 2:
      break;  // zero element, boundary corner
    case 3:
      probe = sample_interior(ctx.algebra, rng);
      break;
    default:
      probe = sample_element(ctx.algebra, rng);
  }
  const CompactifiedPoint bottom(-identity(ctx.algebra));
  const bool member = a_set_member(bottom, probe);
  const bool in_cone = cone_classify(probe) != ConeClass::Outside;
  if (member != in_cone) return {1.0, 0};
  // Witness postcondition whenever membership holds.
  if (member) {
    const ASetWitness w = a_set_witness(bottom, probe);
    if (cone_classify(w.a1) != ConeClass::Interior ||
        cone_classify(w.a2) != ConeClass::Interior)
      return {1.0, 0};
    const double agree = rel_diff(act(bottom, w.a1).u, act(w.v, w.a2).u);
    return {agree > kEpsAction ? 1.0 : 0.0, 0};
  }
  return {0.0, 0};
}

inline SampleOutcome axiom_c2_density(const CheckContext& ctx, std::string_view id,
                                      std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const CompactifiedPoint u = sample_X(ctx.algebra, rng);
  const BoundaryPoint bp = represent(u);
  const double big = 1e6;
  const CompactifiedPoint approx = cayley(bp.x + big * bp.e);
  return {norm(approx.u - u.u), 0};
}

// Boundary points are separated by their admissible translation sets: for a
// distinct pair, some probe translation is admissible at exactly one of them.
// Cone parts are normalized to spectral radius <= 1 so that a fixed probe
// ladder dominates them with a margin far above the classification band.
inline SampleOutcome axiom_c3_separation(const CheckContext& ctx, std::string_view id,
                                         std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  int rejected = 0;
  const Element one = identity(ctx.algebra);

  const auto normalized_boundary = [&](RandomStream& r) {
    const BoundaryPoint p = sample_boundary(ctx.algebra, r);
    return BoundaryPoint(p.e, (1.0 / std::max(1.0, spectral_radius(p.x))) * p.x);
  };

  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    const BoundaryPoint p1 = normalized_boundary(rng);
    BoundaryPoint p2 = p1;
    const std::uint64_t mode = i % 3;
    if (mode == 0) {
      // Same stratum, different cone part.
      const Element g = apply(quad(one - p1.e), sample_element(ctx.algebra, rng));
      const Element y = jordan_product(g, g);
      p2 = BoundaryPoint(p1.e, (1.0 / std::max(1.0, spectral_radius(y))) * y);
      if (norm(p2.x - p1.x) < 1e-2) {
        ++rejected;
        continue;
      }
    } else if (mode == 1) {
      // Different stratum: demand a probe direction from p1's excluded
      // subspace that p2's stratum projector still sees.
      p2 = normalized_boundary(rng);
      if (norm(p2.e - p1.e) < 1e-2) {
        ++rejected;
        continue;
      }
      const Mat p2proj = quad(one - p2.e).matrix;
      const Mat basis =
          orthonormal_range(Mat::identity(ctx.algebra.dim()) - quad(one - p1.e).matrix,
                            kGramSchmidtDropTol);
      double best = 0.0;
      for (int c = 0; c < basis.cols; ++c) {
        Vec w(static_cast<std::size_t>(ctx.algebra.dim()));
        for (int r = 0; r < ctx.algebra.dim(); ++r)
          w[static_cast<std::size_t>(r)] = basis(r, c);
        best = std::max(best, norm2(p2proj * w));
      }
      if (best < 1e-2) {
        ++rejected;
        continue;
      }
    } else {
      // Ordered pair: p2 strictly above p1 inside the same stratum.
      const Element shift =
          apply(quad(one - p1.e), sample_cone(ctx.algebra, rng)) +
          apply(quad(one - p1.e), one);
      p2 = BoundaryPoint(p1.e, p1.x + shift);
    }

    const CompactifiedPoint u1 = embed(p1);
    const CompactifiedPoint u2 = embed(p2);

    std::vector<Element> probes;
    probes.push_back(-1.0 * p1.x);
    probes.push_back(-1.0 * p2.x);
    for (const BoundaryPoint* p : {&p1, static_cast<const BoundaryPoint*>(&p2)}) {
      const Mat basis =
          orthonormal_range(Mat::identity(ctx.algebra.dim()) - quad(one - p->e).matrix,
                            kGramSchmidtDropTol);
      for (int c = 0; c < basis.cols; ++c) {
        Vec w(static_cast<std::size_t>(ctx.algebra.dim()));
        for (int r = 0; r < ctx.algebra.dim(); ++r)
          w[static_cast<std::size_t>(r)] = basis(r, c);
        const Element dir(ctx.algebra, std::move(w));
        for (double t : {1.0, 1e2, 1e3}) {
          probes.push_back(t * dir);
          probes.push_back(-t * dir);
        }
      }
    }

    bool separated = false;
    for (const Element& a : probes) {
      if (a_set_member(u1, a) != a_set_member(u2, a)) {
        separated = true;
        break;
      }
    }
    return {separated ? 0.0 : 1.0, rejected};
  }
  return {kFailResidual, rejected};
}

inline SampleOutcome homotopy_interval(const CheckContext& ctx, std::string_view id,
                                       std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const CompactifiedPoint u = sample_X(ctx.algebra, rng);
  double worst = 0.0;
  for (int k = 0; k <= 10; ++k) {
    const double t = k / 10.0;
    const CompactifiedPoint h = homotopy_point(t, u);
    worst = std::max(worst, interval_overshoot(h));
    if (k == 10 && norm(h.u - u.u) != 0.0) worst = std::max(worst, 1.0);
    if (k == 0 && norm(h.u + identity(ctx.algebra)) != 0.0) worst = std::max(worst, 1.0);
  }
  return {worst, 0};
}

inline SampleOutcome homotopy_spectrum(const CheckContext& ctx, std::string_view id,
                                       std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  int rejected = 0;
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    CompactifiedPoint u = CompactifiedPoint(zero(ctx.algebra));
    if (i == 0) {
      u = CompactifiedPoint(-identity(ctx.algebra));
    } else if (i % 5 == 0) {
      u = cayley(sample_singular_cone(ctx.algebra, rng));
    } else {
      u = sample_X(ctx.algebra, rng);
    }
    // The indicator is only stable away from the tolerance shell around -1;
    // resample the sliver where grouping could disagree across t.
    double dist = std::numeric_limits<double>::infinity();
    for (double lam : spectral_decompose(u.u).eigenvalues)
      dist = std::min(dist, std::abs(lam + 1.0));
    if (dist > 1e-10 && dist < 1e-6) {
      ++rejected;
      continue;
    }
    const bool base = spectrum_contains(u.u, -1.0);
    if (!spectrum_contains(homotopy_point(0.0, u).u, -1.0)) return {1.0, rejected};
    for (int k = 1; k <= 10; ++k) {
      const double t = k / 10.0;
      if (spectrum_contains(homotopy_point(t, u).u, -1.0) != base)
        return {1.0, rejected};
    }
    return {0.0, rejected};
  }
  return {kFailResidual, rejected};
}

// ---- worked half-plane example ------------------------------------------

inline axb::AffineElement sample_affine(RandomStream& rng) {
  return axb::AffineElement(std::exp(0.7 * rng.normal()), 2.0 * rng.normal());
}

inline double xreal_diff(const axb::XReal& a, const axb::XReal& b) {
  if (a.tag != b.tag) return 1.0;
  if (!a.is_finite()) return 0.0;
  return std::abs(a.value - b.value) / std::max(1.0, std::abs(b.value));
}

inline SampleOutcome axb_action_law(const CheckContext& ctx, std::string_view id,
                                    std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  axb::PlanePoint p = axb::sample_plane(rng);
  const axb::AffineElement g = sample_affine(rng);
  const axb::AffineElement h = sample_affine(rng);
  const axb::PlanePoint seq = axb::act_plane(axb::act_plane(p, g), h);
  const axb::PlanePoint joint = axb::act_plane(p, axb::compose(g, h));
  const double r = std::max(xreal_diff(seq.x, joint.x), xreal_diff(seq.y, joint.y));
  // Identity element must act trivially, exactly.
  const axb::PlanePoint fixed = axb::act_plane(p, axb::AffineElement(1.0, 0.0));
  const bool id_exact = fixed.x == p.x && fixed.y == p.y;
  return {id_exact ? r : kFailResidual, 0};
}

inline SampleOutcome axb_x_invariance(const CheckContext& ctx, std::string_view id,
                                      std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  const bool interior = (i % 2) == 1;
  const axb::PlanePoint p = axb::sample_orbit(rng, interior);
  const axb::AffineElement g = axb::sample_semigroup(rng, interior);
  if (!axb::in_X(p, interior)) return {kFailResidual, 0};  // sampler contract
  const axb::PlanePoint q = axb::act_plane(p, g);
  return {axb::in_X(q, interior) ? 0.0 : 1.0, 0};
}

inline SampleOutcome axb_orbit_reach(const CheckContext& ctx, std::string_view id,
                                     std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  int rejected = 0;
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    const axb::PlanePoint q = axb::sample_orbit(rng, false);
    if (!q.x.is_finite() || !(q.y.value > 0.0)) {
      ++rejected;  // closure-only points are not reached by a single element
      continue;
    }
    // Solve (0,1).g = q: a = 1/y, b = -x/y.
    const axb::AffineElement g(1.0 / q.y.value, -q.x.value / q.y.value);
    if (!axb::in_semigroup(g, false)) return {1.0, rejected};
    const axb::PlanePoint base(axb::XReal::finite(0.0), axb::XReal::finite(1.0));
    const axb::PlanePoint back = axb::act_plane(base, g);
    const double r = std::max(xreal_diff(back.x, q.x), xreal_diff(back.y, q.y));
    // Interior points must come from interior elements.
    if (q.x.value < 0.0 && q.y.value < 1.0 && !axb::in_semigroup(g, true))
      return {1.0, rejected};
    return {r, rejected};
  }
  return {kFailResidual, rejected};
}

inline SampleOutcome axb_escape(const CheckContext& ctx, std::string_view id,
                                std::uint64_t i) {
  RandomStream rng = sample_stream(ctx.seed, id, i);
  axb::PlanePoint p = (i == 0)
                          ? axb::PlanePoint(axb::XReal::neg_inf(), axb::XReal::finite(0.5))
                          : axb::sample_orbit(rng, false);

  // s = 0 is the exact identity.
  const axb::PlanePoint at0 = axb::escape_homotopy(0.0, p);
  if (!(at0.x == p.x && at0.y == p.y)) return {1.0, 0};

  const double grid[] = {0.1, 0.3, 0.5, 0.7, 0.9, 0.99, 0.9999, 0.999999};
  double residual = 0.0;
  double prev = -std::numeric_limits<double>::infinity();
  for (double s : grid) {
    const axb::PlanePoint q = axb::escape_homotopy(s, p);
    if (!q.x.is_finite() || !(q.y == p.y)) return {1.0, 0};
    // Monotone in s, and never below the floor log(s/(1-s)).
    if (q.x.value < prev) return {1.0, 0};
    prev = q.x.value;
    const double floor = axb::escape_floor(s);
    residual = std::max(residual, (floor - q.x.value) / std::max(1.0, std::abs(floor)));
  }

  // Threshold crossing at M = 10, directly above the logistic threshold.
  const double s10 = 1.0 - axb::escape_threshold_complement(10.0);
  double s_above = s10;
  for (int k = 0; k < 10; ++k) s_above = std::nextafter(s_above, 1.0);
  const axb::PlanePoint q10 = axb::escape_homotopy(s_above, p);
  if (!(q10.x.value > 10.0)) return {std::max(residual, 1.0), 0};

  // M = 100: the threshold is representable only as a complement; the floor
  // evaluated below it must clear M.
  const double c100 = axb::escape_threshold_complement(100.0);
  if (!(c100 > 0.0)) return {std::max(residual, 1.0), 0};
  if (!(axb::escape_floor_complement(c100 / 2.0) > 100.0))
    return {std::max(residual, 1.0), 0};
  return {std::max(residual, 0.0), 0};
}

}  // namespace detail

inline const std::vector<CheckDef>& check_registry() {
  static const std::vector<CheckDef> defs = {
      {"alg.jordan-identity", "alg", 1e-10, true, &detail::jordan_identity},
      {"alg.l-symmetry", "alg", 1e-12, true, &detail::l_symmetry},
      {"alg.quad.identities", "alg", 1e-8, true, &detail::quad_identities},
      {"alg.quad.bilinear-consistency", "alg", 1e-12, true, &detail::quad_bilinear_consistency},
      {"alg.mutation.unit", "alg", 1e-8, true, &detail::mutation_unit},
      {"alg.mutation.inverse-transport", "alg", 1e-7, true, &detail::mutation_inverse_transport},
      {"alg.cone.squares", "alg", 0.0, true, &detail::cone_squares},
      {"hua.residual", "hua", 1e-8, true, &detail::hua_identity},
      {"spectral.reconstruction", "spectral", 1e-9, true, &detail::spectral_reconstruction},
      {"spectral.frame", "spectral", 1e-9, true, &detail::spectral_frame},
      {"spectral.peirce.projectors", "spectral", 1e-9, true, &detail::peirce_projectors},
      {"spectral.peirce.quad", "spectral", 1e-9, true, &detail::peirce_quad_projection},
      {"spectral.peirce.spectrum", "spectral", 1e-9, true, &detail::peirce_operator_spectrum},
      {"spectral.subalg.projected-inverse", "spectral", 1e-7, true,
       &detail::subalgebra_projected_inverse},
      {"wh.act.interval", "wh", 1e-8, true, &detail::act_interval},
      {"wh.act.oracle-agreement", "wh", 1e-7, true, &detail::act_oracle_agreement},
      {"wh.act.semigroup", "wh", 1e-7, true, &detail::act_semigroup},
      {"wh.act.equivariance", "wh", 1e-7, true, &detail::act_equivariance},
      {"wh.act.injectivity", "wh", 0.0, true, &detail::act_injective},
      {"wh.roundtrip", "wh", 1e-7, true, &detail::roundtrip},
      {"wh.axiom.c1.forward", "wh", 0.0, true, &detail::axiom_c1_forward},
      {"wh.axiom.c1.converse", "wh", 1e-7, true, &detail::axiom_c1_converse},
      {"wh.axiom.c2.membership", "wh", 0.0, true, &detail::axiom_c2_membership},
      {"wh.axiom.c2.density", "wh", 1e-5, true, &detail::axiom_c2_density},
      {"wh.axiom.c3.separation", "wh", 0.0, true, &detail::axiom_c3_separation},
      {"wh.homotopy.interval", "wh", 1e-9, true, &detail::homotopy_interval},
      {"wh.homotopy.spectrum", "wh", 0.0, true, &detail::homotopy_spectrum},
      {"axb.action.law", "axb", 1e-12, false, &detail::axb_action_law},
      {"axb.x-invariance", "axb", 0.0, false, &detail::axb_x_invariance},
      {"axb.orbit.reach", "axb", 1e-12, false, &detail::axb_orbit_reach},
      {"axb.escape", "axb", 1e-12, false, &detail::axb_escape},
  };
  return defs;
}

inline const CheckDef* find_check(std::string_view id) {
  for (const CheckDef& def : check_registry())
    if (id == def.id) return &def;
  return nullptr;
}

}  // namespace harness
}  // namespace symcone
