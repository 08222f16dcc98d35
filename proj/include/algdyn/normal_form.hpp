#pragma once

#include "algdyn/numeric.hpp"

#include <stdexcept>
#include <vector>

// Integer matrix normal forms over Z: Smith normal form with unimodular
// transforms, column-style Hermite normal form, fraction-free determinants,
// integer kernels, and exact inverses of unimodular matrices.  Algorithms
// favor correctness over speed; entries are arbitrary-precision throughout.

namespace algdyn {

template <typename Scalar>
struct SmithDecompositionT {
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat U, S, V;  // U * A * V = S, |det U| = |det V| = 1

  std::vector<Scalar> diagonal() const {
    std::vector<Scalar> d;
    const Index k = std::min(S.rows(), S.cols());
    d.reserve(k);
    for (Index i = 0; i < k; ++i) d.push_back(S(i, i));
    return d;
  }
};

using SmithDecomposition = SmithDecompositionT<Int>;

// Floor division usable for any signed integer scalar.
template <typename Scalar>
Scalar floor_div(const Scalar& a, const Scalar& b) {
  Scalar q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

// Fraction-free Gaussian elimination (Bareiss).  Exact for any integral
// scalar; returns 0 for singular input.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  if (A.rows() != A.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const Index n = A.rows();
  if (n == 0) return Scalar(1);
  Mat M = A;
  Scalar prev(1);
  int sign = 1;
  for (Index k = 0; k + 1 < n; ++k) {
    if (M(k, k) == 0) {
      Index swap = -1;
      for (Index i = k + 1; i < n; ++i)
        if (M(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return Scalar(0);
      M.row(k).swap(M.row(swap));
      sign = -sign;
    }
    for (Index i = k + 1; i < n; ++i)
      for (Index j = k + 1; j < n; ++j)
        M(i, j) = (M(i, j) * M(k, k) - M(i, k) * M(k, j)) / prev;
    prev = M(k, k);
  }
  return sign > 0 ? M(n - 1, n - 1) : Scalar(-M(n - 1, n - 1));
}

// U * A * V = S with nonnegative diagonal, divisibility chain
// d1 | d2 | ... and zeros last.  Pivot selection: minimal nonzero absolute
// value in the remaining submatrix.  The returned transforms are verified
// (product identity and unimodularity) before returning.
template <typename Derived>
SmithDecompositionT<typename Derived::Scalar> smith_normal_form(
    const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  const Index m = A.rows(), n = A.cols();
  Mat S = A;
  Mat U = Mat::Identity(m, m);
  Mat V = Mat::Identity(n, n);

  const Index steps = std::min(m, n);
  for (Index t = 0; t < steps; ++t) {
    while (true) {
      // pivot: minimal |nonzero| in S[t.., t..]
      Index pi = -1, pj = -1;
      Scalar best(0);
      for (Index i = t; i < m; ++i)
        for (Index j = t; j < n; ++j) {
          if (S(i, j) == 0) continue;
          Scalar a = S(i, j) < 0 ? Scalar(-S(i, j)) : S(i, j);
          if (pi < 0 || a < best) {
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (pi < 0) break;  // submatrix is zero
      if (pi != t) {
        S.row(t).swap(S.row(pi));
        U.row(t).swap(U.row(pi));
      }
      if (pj != t) {
        S.col(t).swap(S.col(pj));
        V.col(t).swap(V.col(pj));
      }

      bool remainder = false;
      for (Index i = t + 1; i < m; ++i) {
        if (S(i, t) == 0) continue;
        Scalar q = S(i, t) / S(t, t);
        if (q != 0) {
          S.row(i) -= q * S.row(t);
          U.row(i) -= q * U.row(t);
        }
        if (S(i, t) != 0) remainder = true;
      }
      if (remainder) continue;
      for (Index j = t + 1; j < n; ++j) {
        if (S(t, j) == 0) continue;
        Scalar q = S(t, j) / S(t, t);
        if (q != 0) {
          S.col(j) -= q * S.col(t);
          V.col(j) -= q * V.col(t);
        }
        if (S(t, j) != 0) remainder = true;
      }
      if (remainder) continue;

      bool fixed = false;
      for (Index i = t + 1; i < m && !fixed; ++i)
        for (Index j = t + 1; j < n && !fixed; ++j)
          if (S(i, j) % S(t, t) != 0) {
            S.row(t) += S.row(i);
            U.row(t) += U.row(i);
            fixed = true;
          }
      if (fixed) continue;

      if (S(t, t) < 0) {
        S.row(t) = -S.row(t);
        U.row(t) = -U.row(t);
      }
      break;
    }
  }

  if (!exact_equal(Mat(U * A.derived() * V), S))
    throw std::logic_error("smith decomposition identity failed");
  Scalar du = bareiss_determinant(U), dv = bareiss_determinant(V);
  if ((du != 1 && du != -1) || (dv != 1 && dv != -1))
    throw std::logic_error("smith transforms are not unimodular");
  return {std::move(U), std::move(S), std::move(V)};
}

// Column-style Hermite normal form: columns are combined by unimodular
// operations into a canonical staircase with positive pivots and, left of
// each pivot, residues in [0, pivot).  Zero columns are dropped, so two
// integer matrices generate the same column lattice iff their forms are
// identical.  For a nonsingular square input the result is lower triangular
// and the box spanned by the diagonal is a fundamental domain.
template <typename Derived>
typename SmithDecompositionT<typename Derived::Scalar>::Mat hermite_normal_form(
    const Eigen::MatrixBase<Derived>& A) {
  using Scalar = typename Derived::Scalar;
  using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Mat H = A;
  const Index m = H.rows(), n = H.cols();
  Index c = 0;
  for (Index row = 0; row < m && c < n; ++row) {
    while (true) {
      Index jmin = -1;
      Scalar best(0);
      for (Index j = c; j < n; ++j) {
        if (H(row, j) == 0) continue;
        Scalar a = H(row, j) < 0 ? Scalar(-H(row, j)) : H(row, j);
        if (jmin < 0 || a < best) {
          best = a;
          jmin = j;
        }
      }
      if (jmin < 0) break;
      if (jmin != c) H.col(c).swap(H.col(jmin));
      bool any = false;
      for (Index j = c + 1; j < n; ++j) {
        if (H(row, j) == 0) continue;
        Scalar q = H(row, j) / H(row, c);
        if (q != 0) H.col(j) -= q * H.col(c);
        if (H(row, j) != 0) any = true;
      }
      if (!any) break;
    }
    if (H(row, c) == 0) continue;
    if (H(row, c) < 0) H.col(c) = -H.col(c);
    for (Index j = 0; j < c; ++j) {
      Scalar q = floor_div(H(row, j), H(row, c));
      if (q != 0) H.col(j) -= q * H.col(c);
    }
    ++c;
  }
  return H.leftCols(c);
}

template <typename Scalar>
bool lattice_span_equal(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& A,
                        const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& B) {
  if (A.rows() != B.rows()) throw DimensionMismatch("lattices in different ambient spaces");
  auto ha = hermite_normal_form(A);
  auto hb = hermite_normal_form(B);
  return exact_equal(ha, hb);
}

// Basis of the integer kernel {x : A x = 0}, one column per free direction.
// The result spans a direct summand of Z^n, so projections of its columns
// generate the projected lattice.
template <typename Derived>
typename SmithDecompositionT<typename Derived::Scalar>::Mat kernel_basis(
    const Eigen::MatrixBase<Derived>& A) {
  auto snf = smith_normal_form(A);
  Index rank = 0;
  const Index k = std::min(snf.S.rows(), snf.S.cols());
  for (Index i = 0; i < k; ++i)
    if (snf.S(i, i) != 0) ++rank;
  return snf.V.rightCols(snf.V.cols() - rank);
}

// Exact inverse of a unimodular integer matrix.
IMat unimodular_inverse(const IMat& U);

// Exact rational inverse via Gauss-Jordan; throws on singular input.
RMat rational_inverse(const RMat& A);

}  // namespace algdyn
