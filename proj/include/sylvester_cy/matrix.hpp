#pragma once

// Dense exact matrices: Eigen containers over GMP scalars plus fraction-free
// elimination routines templated on the scalar type.

#include <utility>

#include <Eigen/Core>

#include "sylvester_cy/arith.hpp"

namespace Eigen {

template <>
struct NumTraits<mpz_class> : GenericNumTraits<mpz_class> {
  using Real = mpz_class;
  using NonInteger = mpq_class;
  using Nested = mpz_class;
  using Literal = mpz_class;
  enum {
    IsInteger = 1,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline int digits10() { return 0; }
};

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = mpq_class;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 300,
    MulCost = 200
  };
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace scy {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Mat<BigInt>;
using IntVector = Vec<BigInt>;
using RatMatrix = Mat<Rational>;
using RatVector = Vec<Rational>;

/// Determinant by Bareiss fraction-free elimination. Every intermediate entry
/// is a minor of the input, so the exact divisions never leave the ring.
template <typename Scalar>
Scalar bareiss_determinant(Mat<Scalar> m) {
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw InputError("determinant of a non-square matrix");
  if (n == 0) return Scalar(1);
  Scalar prev = 1;
  int sign = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) return Scalar(0);
      m.row(k).swap(m.row(swap));
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < n; ++j) {
        Scalar t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = t / prev;  // exact by Sylvester's identity
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Scalar det = m(n - 1, n - 1);
  return sign < 0 ? Scalar(-det) : det;
}

/// Exact inverse of an integer matrix: forward Bareiss elimination on the
/// augmented system [A | I], then rational back substitution.
/// Throws InputError when the matrix is singular.
template <typename Scalar>
RatMatrix exact_inverse(const Mat<Scalar>& a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols()) throw InputError("inverse of a non-square matrix");
  Mat<Scalar> m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) m(i, n + i) = 1;

  Scalar prev = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (m(k, k) == 0) {
      Eigen::Index swap = k + 1;
      while (swap < n && m(swap, k) == 0) ++swap;
      if (swap == n) throw InputError("singular exponent matrix");
      m.row(k).swap(m.row(swap));
    }
    for (Eigen::Index i = k + 1; i < n; ++i) {
      for (Eigen::Index j = k + 1; j < 2 * n; ++j) {
        Scalar t = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = t / prev;
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }

  RatMatrix inv(n, n);
  for (Eigen::Index col = 0; col < n; ++col) {
    for (Eigen::Index i = n - 1; i >= 0; --i) {
      Rational acc(m(i, n + col));
      for (Eigen::Index j = i + 1; j < n; ++j) acc -= Rational(m(i, j)) * inv(j, col);
      acc /= Rational(m(i, i));
      inv(i, col) = acc;
    }
  }
  return inv;
}

/// Row sums of a rational matrix, i.e. M * (1,...,1)^T.
inline RatVector row_sums(const RatMatrix& m) {
  RatVector s(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Rational acc = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) acc += m(i, j);
    s(i) = acc;
  }
  return s;
}

/// Integer matrix times rational vector.
inline RatVector apply(const IntMatrix& a, const RatVector& v) {
  RatVector out(a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    Rational acc = 0;
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      if (a(i, j) != 0) acc += Rational(a(i, j)) * v(j);
    }
    out(i) = acc;
  }
  return out;
}

}  // namespace scy
