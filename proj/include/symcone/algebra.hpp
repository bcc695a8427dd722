#pragma once

// Elements and the bilinear layer: Jordan product, L and P operators,
// mutation product. Coordinates are taken in an orthonormalized trace-form
// basis per kind, so the inner product is the plain dot product throughout:
//   rn:n    standard basis
//   sym:n   E_ii diagonal units, (E_ij + E_ji)/sqrt(2) off-diagonal
//   spin:n  unit axis + standard basis on the R^{n-1} part
// Direct sums concatenate coordinates blockwise.

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "symcone/constants.hpp"
#include "symcone/descriptor.hpp"
#include "symcone/errors.hpp"
#include "symcone/linalg.hpp"

namespace symcone {

struct Element {
  AlgebraDescriptor algebra;
  Vec coords;

  Element(AlgebraDescriptor alg, Vec c) : algebra(std::move(alg)), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != algebra.dim())
      throw InvalidElement("coordinate count does not match algebra dimension");
    for (double x : coords)
      if (!std::isfinite(x)) throw InvalidElement("non-finite coordinate");
  }
};

inline void require_same_algebra(const Element& a, const Element& b) {
  if (!(a.algebra == b.algebra))
    throw AlgebraMismatch("elements belong to different algebras");
}

inline Element zero(const AlgebraDescriptor& alg) {
  return Element(alg, Vec(static_cast<std::size_t>(alg.dim()), 0.0));
}

inline Element identity(const AlgebraDescriptor& alg) {
  Vec c(static_cast<std::size_t>(alg.dim()), 0.0);
  for (const LeafBlock& blk : leaf_blocks(alg)) {
    switch (blk.leaf.kind) {
      case AlgebraKind::Componentwise:
        for (int i = 0; i < blk.leaf.n; ++i) c[static_cast<std::size_t>(blk.offset + i)] = 1.0;
        break;
      case AlgebraKind::RealSymmetric: {
        // Diagonal entries come first within each row of the packed upper
        // triangle: index of (i,i) is i*n - i*(i-1)/2.
        const int n = blk.leaf.n;
        int idx = blk.offset;
        for (int i = 0; i < n; ++i) {
          c[static_cast<std::size_t>(idx)] = 1.0;
          idx += n - i;
        }
        break;
      }
      case AlgebraKind::SpinFactor:
        c[static_cast<std::size_t>(blk.offset)] = 1.0;
        break;
      case AlgebraKind::DirectSum:
        break;  // leaf_blocks never yields one
    }
  }
  return Element(alg, std::move(c));
}

inline Element operator+(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Vec c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] + b.coords[i];
  return Element(a.algebra, std::move(c));
}

inline Element operator-(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Vec c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coords[i] - b.coords[i];
  return Element(a.algebra, std::move(c));
}

inline Element operator*(double s, const Element& a) {
  Vec c(a.coords.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = s * a.coords[i];
  return Element(a.algebra, std::move(c));
}

inline Element operator-(const Element& a) { return -1.0 * a; }

inline double inner(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  return dot(a.coords, b.coords);
}

inline double norm(const Element& a) { return norm2(a.coords); }

namespace detail {

// Packed upper triangle (row-major) <-> dense symmetric matrix, with the
// sqrt(2) off-diagonal scaling that makes the packed basis orthonormal.
inline Mat sym_unpack(const double* c, int n) {
  Mat m(n, n);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j, ++k) {
      if (i == j) {
        m(i, i) = c[k];
      } else {
        m(i, j) = m(j, i) = c[k] * inv_sqrt2;
      }
    }
  }
  return m;
}

inline void sym_pack(const Mat& m, double* c) {
  const int n = m.rows;
  const double sqrt2 = std::sqrt(2.0);
  int k = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j, ++k) c[k] = (i == j) ? m(i, i) : m(i, j) * sqrt2;
}

inline void jordan_product_block(const AlgebraDescriptor& leaf, const double* x,
                                 const double* y, double* out) {
  switch (leaf.kind) {
    case AlgebraKind::Componentwise:
      for (int i = 0; i < leaf.n; ++i) out[i] = x[i] * y[i];
      return;
    case AlgebraKind::RealSymmetric: {
      const Mat mx = sym_unpack(x, leaf.n);
      const Mat my = sym_unpack(y, leaf.n);
      sym_pack(0.5 * (mx * my + my * mx), out);
      return;
    }
    case AlgebraKind::SpinFactor: {
      // (s, u)∘(t, v) = (st + <u,v>, sv + tu)
      const int m = leaf.n - 1;
      double head = x[0] * y[0];
      for (int i = 0; i < m; ++i) head += x[1 + i] * y[1 + i];
      out[0] = head;
      for (int i = 0; i < m; ++i) out[1 + i] = x[0] * y[1 + i] + y[0] * x[1 + i];
      return;
    }
    case AlgebraKind::DirectSum:
      return;
  }
}

}  // namespace detail

inline Element jordan_product(const Element& a, const Element& b) {
  require_same_algebra(a, b);
  Vec c(a.coords.size(), 0.0);
  for (const LeafBlock& blk : leaf_blocks(a.algebra)) {
    detail::jordan_product_block(blk.leaf, a.coords.data() + blk.offset,
                                 b.coords.data() + blk.offset, c.data() + blk.offset);
  }
  return Element(a.algebra, std::move(c));
}

struct LinearOperator {
  AlgebraDescriptor algebra;
  Mat matrix;  // dim x dim, acts on coordinates
};

inline Element apply(const LinearOperator& op, const Element& x) {
  if (!(op.algebra == x.algebra))
    throw AlgebraMismatch("operator and element belong to different algebras");
  return Element(x.algebra, op.matrix * x.coords);
}

// Multiplication operator L(x): y -> x∘y, assembled per leaf block.
inline LinearOperator l_operator(const Element& x) {
  const int d = x.algebra.dim();
  Mat m(d, d);
  for (const LeafBlock& blk : leaf_blocks(x.algebra)) {
    const double* xb = x.coords.data() + blk.offset;
    const int bd = blk.leaf.dim();
    switch (blk.leaf.kind) {
      case AlgebraKind::Componentwise:
        for (int i = 0; i < bd; ++i) m(blk.offset + i, blk.offset + i) = xb[i];
        break;
      case AlgebraKind::SpinFactor: {
        // [[ s  u^T ], [ u  s*I ]]
        const int mm = blk.leaf.n - 1;
        m(blk.offset, blk.offset) = xb[0];
        for (int i = 0; i < mm; ++i) {
          m(blk.offset, blk.offset + 1 + i) = xb[1 + i];
          m(blk.offset + 1 + i, blk.offset) = xb[1 + i];
          m(blk.offset + 1 + i, blk.offset + 1 + i) = xb[0];
        }
        break;
      }
      case AlgebraKind::RealSymmetric: {
        // Column k is x∘b_k for the k-th packed basis matrix.
        Vec unit(static_cast<std::size_t>(bd), 0.0);
        Vec col(static_cast<std::size_t>(bd), 0.0);
        for (int k = 0; k < bd; ++k) {
          unit[static_cast<std::size_t>(k)] = 1.0;
          detail::jordan_product_block(blk.leaf, xb, unit.data(), col.data());
          for (int i = 0; i < bd; ++i) m(blk.offset + i, blk.offset + k) = col[static_cast<std::size_t>(i)];
          unit[static_cast<std::size_t>(k)] = 0.0;
        }
        break;
      }
      case AlgebraKind::DirectSum:
        break;
    }
  }
  return LinearOperator{x.algebra, std::move(m)};
}

// Polarized quadratic representation P(x,y) = L(x)L(y) + L(y)L(x) - L(x∘y).
inline LinearOperator quad_bilinear(const Element& x, const Element& y) {
  require_same_algebra(x, y);
  const Mat lx = l_operator(x).matrix;
  const Mat ly = l_operator(y).matrix;
  const Mat lxy = l_operator(jordan_product(x, y)).matrix;
  return LinearOperator{x.algebra, lx * ly + ly * lx - lxy};
}

// Quadratic representation P(x) = 2 L(x)^2 - L(x∘x).
inline LinearOperator quad(const Element& x) {
  const Mat lx = l_operator(x).matrix;
  const Mat lxx = l_operator(jordan_product(x, x)).matrix;
  return LinearOperator{x.algebra, 2.0 * (lx * lx) - lxx};
}

// Mutation product a ⋆_u b = P(a,b) u. For u in the open cone this is again
// a Euclidean Jordan product with unit u^-1.
inline Element mutation_product(const Element& a, const Element& b, const Element& u) {
  require_same_algebra(a, u);
  return apply(quad_bilinear(a, b), u);
}

// Trace in the Jordan sense (sum of eigenvalues), closed form per kind.
inline double jordan_trace(const Element& x) {
  double t = 0.0;
  for (const LeafBlock& blk : leaf_blocks(x.algebra)) {
    const double* xb = x.coords.data() + blk.offset;
    switch (blk.leaf.kind) {
      case AlgebraKind::Componentwise:
        for (int i = 0; i < blk.leaf.n; ++i) t += xb[i];
        break;
      case AlgebraKind::RealSymmetric: {
        const int n = blk.leaf.n;
        int idx = 0;
        for (int i = 0; i < n; ++i) {
          t += xb[idx];
          idx += n - i;
        }
        break;
      }
      case AlgebraKind::SpinFactor:
        t += 2.0 * xb[0];
        break;
      case AlgebraKind::DirectSum:
        break;
    }
  }
  return t;
}

}  // namespace symcone
