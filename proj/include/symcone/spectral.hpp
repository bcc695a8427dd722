#pragma once

// Spectral layer: eigenvalue decompositions with idempotent frames, scalar
// calculus, inversion, cone classification, Peirce projections, and inversion
// inside Peirce subalgebras.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <vector>

#include "symcone/algebra.hpp"
#include "symcone/constants.hpp"
#include "symcone/descriptor.hpp"
#include "symcone/errors.hpp"
#include "symcone/linalg.hpp"
#include "symcone/rng.hpp"

namespace symcone {

struct SpectralDecomposition {
  Vec eigenvalues;                  // ascending, pairwise > grouping tolerance apart
  std::vector<Element> idempotents; // same order; orthogonal, summing to the unit
};

namespace detail {

struct RawEigen {
  double value;
  Vec coords;    // idempotent coordinates, full dimension
  double weight; // Jordan trace of the idempotent
};

inline void decompose_block(const AlgebraDescriptor& leaf, int offset, int full_dim,
                            const double* x, std::vector<RawEigen>& out) {
  switch (leaf.kind) {
    case AlgebraKind::Componentwise: {
      for (int i = 0; i < leaf.n; ++i) {
        RawEigen r{x[i], Vec(static_cast<std::size_t>(full_dim), 0.0), 1.0};
        r.coords[static_cast<std::size_t>(offset + i)] = 1.0;
        out.push_back(std::move(r));
      }
      return;
    }
    case AlgebraKind::SpinFactor: {
      const int m = leaf.n - 1;
      const double s = x[0];
      double r2 = 0.0;
      for (int i = 0; i < m; ++i) r2 += x[1 + i] * x[1 + i];
      const double r = std::sqrt(r2);
      if (r == 0.0) {
        RawEigen e{s, Vec(static_cast<std::size_t>(full_dim), 0.0), 2.0};
        e.coords[static_cast<std::size_t>(offset)] = 1.0;
        out.push_back(std::move(e));
        return;
      }
      // Eigenvalues s -+ r with idempotents (1/2, -+ u/(2r)).
      RawEigen lo{s - r, Vec(static_cast<std::size_t>(full_dim), 0.0), 1.0};
      RawEigen hi{s + r, Vec(static_cast<std::size_t>(full_dim), 0.0), 1.0};
      lo.coords[static_cast<std::size_t>(offset)] = 0.5;
      hi.coords[static_cast<std::size_t>(offset)] = 0.5;
      for (int i = 0; i < m; ++i) {
        const double dir = x[1 + i] / (2.0 * r);
        lo.coords[static_cast<std::size_t>(offset + 1 + i)] = -dir;
        hi.coords[static_cast<std::size_t>(offset + 1 + i)] = dir;
      }
      out.push_back(std::move(lo));
      out.push_back(std::move(hi));
      return;
    }
    case AlgebraKind::RealSymmetric: {
      const SymmetricEigen eig = jacobi_eigensolve(sym_unpack(x, leaf.n), kMaxJacobiSweeps);
      const int n = leaf.n;
      for (int j = 0; j < n; ++j) {
        Mat proj(n, n);
        for (int r = 0; r < n; ++r)
          for (int c = 0; c < n; ++c) proj(r, c) = eig.vectors(r, j) * eig.vectors(c, j);
        RawEigen re{eig.values[static_cast<std::size_t>(j)],
                    Vec(static_cast<std::size_t>(full_dim), 0.0), 1.0};
        sym_pack(proj, re.coords.data() + offset);
        out.push_back(std::move(re));
      }
      return;
    }
    case AlgebraKind::DirectSum:
      return;
  }
}

// Ungrouped eigen pairs, sorted ascending. Scalar calculus consumes these
// directly: per-pair function application is stable even when eigenvalues
// nearly coincide, whereas grouped means drift by up to the grouping width.
inline std::vector<RawEigen> raw_decompose(const Element& x) {
  std::vector<RawEigen> raw;
  const int full_dim = x.algebra.dim();
  for (const LeafBlock& blk : leaf_blocks(x.algebra))
    decompose_block(blk.leaf, blk.offset, full_dim, x.coords.data() + blk.offset, raw);
  std::sort(raw.begin(), raw.end(),
            [](const RawEigen& a, const RawEigen& b) { return a.value < b.value; });
  return raw;
}

}  // namespace detail

// Full spectral decomposition x = sum_i lambda_i c_i. Eigenvalues closer than
// eps_group * max(1, ||x||) are merged greedily left to right on the sorted
// list; a merged eigenvalue is the trace-weighted mean of its members and its
// idempotent the sum.
inline SpectralDecomposition spectral_decompose(const Element& x) {
  const std::vector<detail::RawEigen> raw = detail::raw_decompose(x);
  const int full_dim = x.algebra.dim();

  const double tol = kEpsGroup * std::max(1.0, norm(x));
  SpectralDecomposition out;
  std::size_t i = 0;
  while (i < raw.size()) {
    std::size_t j = i + 1;
    while (j < raw.size() && raw[j].value - raw[j - 1].value <= tol) ++j;
    double weighted = 0.0, weight = 0.0;
    Vec coords(static_cast<std::size_t>(full_dim), 0.0);
    for (std::size_t k = i; k < j; ++k) {
      weighted += raw[k].value * raw[k].weight;
      weight += raw[k].weight;
      for (std::size_t t = 0; t < coords.size(); ++t) coords[t] += raw[k].coords[t];
    }
    out.eigenvalues.push_back(weighted / weight);
    out.idempotents.emplace_back(x.algebra, std::move(coords));
    i = j;
  }
  return out;
}

// Apply a scalar function across the spectrum: f(x) = sum f(lambda_i) c_i,
// evaluated on ungrouped eigen pairs.
template <class F>
Element apply_scalar(const Element& x, F&& f) {
  Vec c(x.coords.size(), 0.0);
  for (const detail::RawEigen& re : detail::raw_decompose(x)) {
    const double fi = f(re.value);
    if (!std::isfinite(fi)) throw DomainError("scalar function produced a non-finite value");
    for (std::size_t t = 0; t < c.size(); ++t) c[t] += fi * re.coords[t];
  }
  return Element(x.algebra, std::move(c));
}

inline bool spectrum_contains(const Element& x, double value) {
  const double tol = kEpsGroup * std::max(1.0, norm(x));
  for (const detail::RawEigen& re : detail::raw_decompose(x))
    if (std::abs(re.value - value) <= tol) return true;
  return false;
}

inline double min_eigenvalue(const Element& x) {
  return detail::raw_decompose(x).front().value;
}

inline double spectral_radius(const Element& x) {
  const std::vector<detail::RawEigen> raw = detail::raw_decompose(x);
  return std::max(std::abs(raw.front().value), std::abs(raw.back().value));
}

// max |lambda| / min |lambda|; infinite when the spectrum touches zero.
inline double spectral_condition(const Element& x) {
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  for (const detail::RawEigen& re : detail::raw_decompose(x)) {
    lo = std::min(lo, std::abs(re.value));
    hi = std::max(hi, std::abs(re.value));
  }
  if (lo == 0.0) return std::numeric_limits<double>::infinity();
  return hi / lo;
}

// Jordan inverse via the spectrum. Singular when any |lambda_i| falls at or
// below eps_inv * ||x|| (so the zero element is always Singular).
inline Element inverse(const Element& x) {
  const double cutoff = kEpsInverse * norm(x);
  Vec c(x.coords.size(), 0.0);
  for (const detail::RawEigen& re : detail::raw_decompose(x)) {
    if (std::abs(re.value) <= cutoff)
      throw Singular("inverse: eigenvalue within singular band");
    for (std::size_t t = 0; t < c.size(); ++t) c[t] += (1.0 / re.value) * re.coords[t];
  }
  return Element(x.algebra, std::move(c));
}

enum class ConeClass { Interior, Boundary, Outside };

// Classify against the cone of squares by the minimal eigenvalue, with a
// +-eps_cone * max(1, ||x||) band counted as Boundary. The zero element is
// Boundary.
inline ConeClass cone_classify(const Element& x) {
  const double lam = min_eigenvalue(x);
  const double tol = kEpsCone * std::max(1.0, norm(x));
  if (lam > tol) return ConeClass::Interior;
  if (lam >= -tol) return ConeClass::Boundary;
  return ConeClass::Outside;
}

// Relative defect of the inversion identity
//   (a+b)^-1 + (a + P(a) b^-1)^-1 = a^-1
// for a, b in the open cone. Throws Singular if any inversion fails.
inline double hua_residual(const Element& a, const Element& b) {
  const Element a_inv = inverse(a);
  const Element b_inv = inverse(b);
  const Element mixed = a + apply(quad(a), b_inv);
  const Element lhs = inverse(a + b) + inverse(mixed);
  return norm(lhs - a_inv) / norm(a_inv);
}

// Inverse of x in the u-mutation: P(u^-1) x^-1. Requires both u and x
// invertible.
inline Element mutation_inverse(const Element& x, const Element& u) {
  require_same_algebra(x, u);
  return apply(quad(inverse(u)), inverse(x));
}

struct PeirceDecomposition {
  Element e;
  LinearOperator pi0;      // projection onto V_0(e)
  LinearOperator pi_half;  // projection onto V_{1/2}(e)
  LinearOperator pi1;      // projection onto V_1(e)
};

inline void require_idempotent(const Element& e) {
  if (norm(jordan_product(e, e) - e) > kEpsIdempotent * std::max(1.0, norm(e)))
    throw NotIdempotent("element is not idempotent within tolerance");
}

// Peirce projections from the eigenprojections of L(e), whose spectrum must
// sit on {0, 1/2, 1}.
inline PeirceDecomposition peirce(const Element& e) {
  require_idempotent(e);
  const int d = e.algebra.dim();
  const SymmetricEigen eig = jacobi_eigensolve(l_operator(e).matrix, kMaxJacobiSweeps);
  Mat p0(d, d), ph(d, d), p1(d, d);
  for (int j = 0; j < d; ++j) {
    const double mu = eig.values[static_cast<std::size_t>(j)];
    Mat* target = nullptr;
    if (std::abs(mu) <= 1e-4) target = &p0;
    else if (std::abs(mu - 0.5) <= 1e-4) target = &ph;
    else if (std::abs(mu - 1.0) <= 1e-4) target = &p1;
    else throw NotIdempotent("multiplication operator spectrum off {0, 1/2, 1}");
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c)
        (*target)(r, c) += eig.vectors(r, j) * eig.vectors(c, j);
  }
  return PeirceDecomposition{e,
                             LinearOperator{e.algebra, std::move(p0)},
                             LinearOperator{e.algebra, std::move(ph)},
                             LinearOperator{e.algebra, std::move(p1)}};
}

// Inverse of x taken inside the unital subalgebra V_1(e) (unit e). x must lie
// in V_1(e). Implemented by restricting P(x) to an orthonormal basis B of
// range(P(e)): the restricted eigenvalues are the pairwise products of the
// subalgebra eigenvalues of x, so x is invertible there exactly when the
// smallest restricted |eigenvalue| clears (eps_inv * ||x||)^2, and then
// x^-1 = P(x)^-1 x lifted back through B.
inline Element subalgebra_inverse(const Element& x, const Element& e) {
  require_same_algebra(x, e);
  require_idempotent(e);

  if (norm(e) <= 1e-12) {
    // V_1(0) is the zero algebra; its only element is its own unit.
    if (norm(x) > kEpsSubspace) throw NotInSubalgebra("x not in the zero subalgebra");
    return zero(x.algebra);
  }

  const Mat pe = quad(e).matrix;
  const Vec projected = pe * x.coords;
  {
    double defect = 0.0;
    for (std::size_t i = 0; i < projected.size(); ++i) {
      const double d = projected[i] - x.coords[i];
      defect += d * d;
    }
    if (std::sqrt(defect) > kEpsSubspace * std::max(1.0, norm(x)))
      throw NotInSubalgebra("x has components outside V_1(e)");
  }

  const Mat basis = orthonormal_range(pe, kGramSchmidtDropTol);
  const int k = basis.cols;
  const Mat px = quad(x).matrix;
  const Mat restricted = transpose(basis) * (px * basis);
  const SymmetricEigen eig = jacobi_eigensolve(restricted, kMaxJacobiSweeps);

  const double cutoff = kEpsInverse * norm(x);
  Vec xb(static_cast<std::size_t>(k), 0.0);
  {
    const Mat bt = transpose(basis);
    xb = bt * x.coords;
  }
  Vec wb(static_cast<std::size_t>(k), 0.0);
  for (int j = 0; j < k; ++j) {
    const double mu = eig.values[static_cast<std::size_t>(j)];
    if (std::abs(mu) <= cutoff * cutoff)
      throw SingularInSubalgebra("x has no inverse in V_1(e)");
    double proj = 0.0;
    for (int i = 0; i < k; ++i) proj += eig.vectors(i, j) * xb[static_cast<std::size_t>(i)];
    const double f = proj / mu;
    for (int i = 0; i < k; ++i) wb[static_cast<std::size_t>(i)] += f * eig.vectors(i, j);
  }
  return Element(x.algebra, basis * wb);
}

// Random idempotent: decompose a Gaussian element and sum a uniformly chosen
// subset of its frame. With allow_trivial false, resamples until the subset
// is proper (RetryExhausted if the algebra cannot provide one, e.g. rank 1).
inline Element random_idempotent(const AlgebraDescriptor& alg, RandomStream& rng,
                                 bool allow_trivial) {
  const int d = alg.dim();
  for (int attempt = 0; attempt < kMaxSampleRetries; ++attempt) {
    Vec c(static_cast<std::size_t>(d));
    for (double& v : c) v = rng.normal();
    const SpectralDecomposition sd = spectral_decompose(Element(alg, std::move(c)));
    const std::size_t k = sd.idempotents.size();
    const std::uint64_t mask = rng.uniform_int(std::uint64_t{1} << k);
    if (!allow_trivial && (mask == 0 || mask + 1 == (std::uint64_t{1} << k))) continue;
    Element e = zero(alg);
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (std::uint64_t{1} << i)) e = e + sd.idempotents[i];
    return e;
  }
  throw RetryExhausted("random_idempotent: no proper idempotent found");
}

}  // namespace symcone
