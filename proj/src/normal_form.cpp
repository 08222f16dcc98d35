#include "algdyn/normal_form.hpp"

namespace algdyn {

RMat rational_inverse(const RMat& A) {
  if (A.rows() != A.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Index n = A.rows();
  RMat M = A;
  RMat X = RMat::Identity(n, n);
  for (Index k = 0; k < n; ++k) {
    Index pivot = -1;
    for (Index i = k; i < n; ++i)
      if (M(i, k) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::invalid_argument("matrix is singular");
    if (pivot != k) {
      M.row(k).swap(M.row(pivot));
      X.row(k).swap(X.row(pivot));
    }
    Rat inv = 1 / M(k, k);
    M.row(k) *= inv;
    X.row(k) *= inv;
    for (Index i = 0; i < n; ++i) {
      if (i == k || M(i, k) == 0) continue;
      Rat f = M(i, k);
      M.row(i) -= f * M.row(k);
      X.row(i) -= f * X.row(k);
    }
  }
  for (Index j = 0; j < n; ++j)
    for (Index i = 0; i < n; ++i) X(i, j).canonicalize();
  return X;
}

IMat unimodular_inverse(const IMat& U) {
  RMat Q(U.rows(), U.cols());
  for (Index j = 0; j < U.cols(); ++j)
    for (Index i = 0; i < U.rows(); ++i) Q(i, j) = Rat(U(i, j));
  RMat inv = rational_inverse(Q);
  IMat R(U.rows(), U.cols());
  for (Index j = 0; j < U.cols(); ++j)
    for (Index i = 0; i < U.rows(); ++i) {
      if (inv(i, j).get_den() != 1)
        throw std::invalid_argument("matrix is not unimodular");
      R(i, j) = inv(i, j).get_num();
    }
  if (!exact_equal(IMat(U * R), IMat(IMat::Identity(U.rows(), U.cols()))))
    throw std::logic_error("inverse verification failed");
  return R;
}

}  // namespace algdyn
