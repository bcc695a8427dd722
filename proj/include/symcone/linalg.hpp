#pragma once

// Dense kernels for the small matrices this library needs (dims stay in the
// tens): row-major Mat, cyclic Jacobi eigensolver, partial-pivot LU solve,
// and a pivoted Gram-Schmidt for extracting orthonormal range bases.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numeric>
#include <vector>

#include "symcone/errors.hpp"

namespace symcone {

using Vec = std::vector<double>;

inline double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return data[static_cast<std::size_t>(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline Mat operator+(const Mat& a, const Mat& b) {
  Mat r(a.rows, a.cols);
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = a.data[i] + b.data[i];
  return r;
}

inline Mat operator-(const Mat& a, const Mat& b) {
  Mat r(a.rows, a.cols);
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = a.data[i] - b.data[i];
  return r;
}

inline Mat operator*(double s, const Mat& a) {
  Mat r(a.rows, a.cols);
  for (std::size_t i = 0; i < r.data.size(); ++i) r.data[i] = s * a.data[i];
  return r;
}

inline Mat operator*(const Mat& a, const Mat& b) {
  Mat r(a.rows, b.cols);
  for (int i = 0; i < a.rows; ++i) {
    for (int k = 0; k < a.cols; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < b.cols; ++j) r(i, j) += aik * b(k, j);
    }
  }
  return r;
}

inline Vec operator*(const Mat& a, const Vec& x) {
  Vec y(static_cast<std::size_t>(a.rows), 0.0);
  for (int i = 0; i < a.rows; ++i) {
    double s = 0.0;
    for (int j = 0; j < a.cols; ++j) s += a(i, j) * x[static_cast<std::size_t>(j)];
    y[static_cast<std::size_t>(i)] = s;
  }
  return y;
}

inline Mat transpose(const Mat& a) {
  Mat r(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) r(j, i) = a(i, j);
  return r;
}

inline double frobenius_norm(const Mat& a) {
  double s = 0.0;
  for (double v : a.data) s += v * v;
  return std::sqrt(s);
}

struct SymmetricEigen {
  Vec values;   // ascending
  Mat vectors;  // columns, same order as values
};

// Cyclic Jacobi on a symmetric matrix. Rotations sweep the strict upper
// triangle row by row; convergence when the off-diagonal Frobenius mass drops
// below 1e-14 * max(1, ||A||_F). Throws ConvergenceFailure past max_sweeps.
inline SymmetricEigen jacobi_eigensolve(Mat a, int max_sweeps = 64) {
  if (a.rows != a.cols) throw Error("jacobi_eigensolve: matrix must be square");
  const int n = a.rows;
  Mat v = Mat::identity(n);
  if (n == 0) return {Vec{}, v};

  const double tol = 1e-14 * std::max(1.0, frobenius_norm(a));
  auto off_norm = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) s += a(i, j) * a(i, j);
    return std::sqrt(2.0 * s);
  };

  bool converged = off_norm() <= tol;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= tol / (10.0 * n)) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e12) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = ((theta >= 0.0) ? 1.0 : -1.0) /
              (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // A <- J^T A J with J the (p,q) rotation.
        for (int k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (int k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
    converged = off_norm() <= tol;
  }
  if (!converged) throw ConvergenceFailure("jacobi_eigensolve: no convergence in sweep budget");

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int i, int j) { return a(i, i) < a(j, j); });

  SymmetricEigen out;
  out.values.resize(static_cast<std::size_t>(n));
  out.vectors = Mat(n, n);
  for (int j = 0; j < n; ++j) {
    out.values[static_cast<std::size_t>(j)] = a(order[static_cast<std::size_t>(j)], order[static_cast<std::size_t>(j)]);
    for (int i = 0; i < n; ++i) out.vectors(i, j) = v(i, order[static_cast<std::size_t>(j)]);
  }
  return out;
}

// Solve A x = b by LU with partial pivoting. A need not be symmetric.
inline Vec lu_solve(Mat a, Vec b) {
  if (a.rows != a.cols || a.rows != static_cast<int>(b.size()))
    throw Error("lu_solve: dimension mismatch");
  const int n = a.rows;
  double scale = 0.0;
  for (double x : a.data) scale = std::max(scale, std::abs(x));

  for (int k = 0; k < n; ++k) {
    int piv = k;
    for (int i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (std::abs(a(piv, k)) <= 1e-13 * std::max(1.0, scale))
      throw Singular("lu_solve: pivot below threshold");
    if (piv != k) {
      for (int j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(b[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(piv)]);
    }
    for (int i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      a(i, k) = 0.0;
      for (int j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
      b[static_cast<std::size_t>(i)] -= f * b[static_cast<std::size_t>(k)];
    }
  }
  Vec x(static_cast<std::size_t>(n), 0.0);
  for (int i = n - 1; i >= 0; --i) {
    double s = b[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n; ++j) s -= a(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = s / a(i, i);
  }
  return x;
}

// Orthonormal basis for the column range of a, via column-pivoted modified
// Gram-Schmidt. Columns whose residual norm falls to drop_tol or below are
// discarded. Returns a.rows x k with orthonormal columns (k may be 0).
inline Mat orthonormal_range(const Mat& a, double drop_tol = 1e-10) {
  const int m = a.rows, n = a.cols;
  std::vector<Vec> cols(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(m)));
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < m; ++i) cols[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = a(i, j);

  std::vector<Vec> basis;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int best = -1;
    double best_norm = drop_tol;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      const double nj = norm2(cols[static_cast<std::size_t>(j)]);
      if (nj > best_norm) {
        best_norm = nj;
        best = j;
      }
    }
    if (best < 0) break;
    used[static_cast<std::size_t>(best)] = true;
    Vec q = cols[static_cast<std::size_t>(best)];
    // Re-orthogonalize against the basis built so far, twice.
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vec& u : basis) {
        const double c = dot(u, q);
        for (std::size_t i = 0; i < q.size(); ++i) q[i] -= c * u[i];
      }
    }
    const double qn = norm2(q);
    if (qn <= drop_tol) continue;
    for (double& x : q) x /= qn;
    for (int j = 0; j < n; ++j) {
      if (used[static_cast<std::size_t>(j)]) continue;
      Vec& cj = cols[static_cast<std::size_t>(j)];
      const double c = dot(q, cj);
      for (std::size_t i = 0; i < cj.size(); ++i) cj[i] -= c * q[i];
    }
    basis.push_back(std::move(q));
  }

  Mat out(m, static_cast<int>(basis.size()));
  for (int j = 0; j < out.cols; ++j)
    for (int i = 0; i < m; ++i) out(i, j) = basis[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
  return out;
}

}  // namespace symcone
