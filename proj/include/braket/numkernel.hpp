#pragma once

// Dense complex matrix kernel. Everything above this layer works on
// ComplexMatrix; the free functions here accept any Eigen expression.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "braket/errors.hpp"

namespace braket {

template <typename Scalar>
using ComplexMatrixT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using ComplexVectorT = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = ComplexMatrixT<double>;
using ComplexVector = ComplexVectorT<double>;

struct Tolerances {
  double eq_tol = 1e-10;    // entrywise equality
  double herm_tol = 1e-10;  // hermiticity checks
  double sig_tol = 1e-9;    // eigenvalue / pivot zero threshold
  double sym_tol = 1e-8;    // metric preservation after the exponential map

  bool valid() const { return eq_tol > 0 && herm_tol > 0 && sig_tol > 0 && sym_tol > 0; }
};

struct Signature {
  int n_plus = 0;
  int n_minus = 0;

  friend bool operator==(const Signature&, const Signature&) = default;
};

inline std::string shape_of(Eigen::Index rows, Eigen::Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

template <typename Derived>
void require_square(const Eigen::MatrixBase<Derived>& a, const char* what) {
  if (a.rows() != a.cols() || a.rows() == 0) {
    throw Error(ErrorCode::DimensionMismatch,
                std::string(what) + " needs a non-empty square matrix, got " +
                    shape_of(a.rows(), a.cols()));
  }
}

template <typename DerivedA, typename DerivedB>
void require_same_shape(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                        const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": " +
                                                  shape_of(a.rows(), a.cols()) + " vs " +
                                                  shape_of(b.rows(), b.cols()));
  }
}

template <typename Scalar = double>
ComplexMatrixT<Scalar> identity(Eigen::Index n) {
  return ComplexMatrixT<Scalar>::Identity(n, n);
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject matmul(const Eigen::MatrixBase<DerivedA>& a,
                                      const Eigen::MatrixBase<DerivedB>& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorCode::DimensionMismatch, "matmul " + shape_of(a.rows(), a.cols()) + " by " +
                                                  shape_of(b.rows(), b.cols()));
  }
  return a * b;
}

template <typename Derived>
typename Derived::PlainObject conj_transpose(const Eigen::MatrixBase<Derived>& a) {
  return a.adjoint();
}

// Largest entry modulus; the max-norm used by every tolerance in the library.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& a) {
  if (a.size() == 0) return 0;
  return a.cwiseAbs().maxCoeff();
}

template <typename DerivedA, typename DerivedB>
bool approx_equal(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b,
                  double tol) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  return max_abs(a - b) <= tol;
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol) {
  return a.rows() == a.cols() && max_abs(a - a.adjoint()) <= tol;
}

/// Inverse through full-pivot LU. Pivots below `pivot_tol` (relative to the
/// largest pivot) make the matrix Singular.
template <typename Derived>
typename Derived::PlainObject inverse(const Eigen::MatrixBase<Derived>& a,
                                      double pivot_tol = Tolerances{}.sig_tol) {
  require_square(a, "inverse");
  Eigen::FullPivLU<typename Derived::PlainObject> lu(a);
  lu.setThreshold(pivot_tol);
  if (!lu.isInvertible()) {
    throw Error(ErrorCode::Singular, "matrix of size " + shape_of(a.rows(), a.cols()) +
                                         " has rank " + std::to_string(lu.rank()));
  }
  return lu.inverse();
}

/// Counts of positive and negative eigenvalues of a hermitian matrix.
template <typename Derived>
Signature signature(const Eigen::MatrixBase<Derived>& h, const Tolerances& tol = {}) {
  require_square(h, "signature");
  if (!is_hermitian(h, tol.herm_tol)) {
    throw Error(ErrorCode::NotHermitian,
                "hermiticity defect " + std::to_string(max_abs(h - h.adjoint())));
  }
  using Plain = typename Derived::PlainObject;
  const Plain sym = (h + h.adjoint()) / 2;
  Eigen::SelfAdjointEigenSolver<Plain> solver(sym, Eigen::EigenvaluesOnly);
  Signature sig;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const auto lambda = solver.eigenvalues()(k);
    if (std::abs(lambda) < tol.sig_tol) {
      throw Error(ErrorCode::DegenerateMetric, "eigenvalue " + std::to_string(lambda) +
                                                   " below zero threshold");
    }
    (lambda > 0 ? sig.n_plus : sig.n_minus) += 1;
  }
  return sig;
}

/// Matrix exponential: scale until the 1-norm is at most 1/2, sum the Taylor
/// series to machine precision, then square back.
template <typename Derived>
typename Derived::PlainObject expm(const Eigen::MatrixBase<Derived>& a) {
  require_square(a, "expm");
  using Plain = typename Derived::PlainObject;
  using Real = typename Derived::RealScalar;

  const Real norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > Real(0.5)) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / Real(0.5))));
  }
  const Plain scaled = a / std::ldexp(Real(1), squarings);

  const auto n = a.rows();
  Plain result = Plain::Identity(n, n);
  Plain term = Plain::Identity(n, n);
  const Real eps = std::numeric_limits<Real>::epsilon();
  for (int k = 1; k <= 40; ++k) {
    term = (term * scaled) / Real(k);
    result += term;
    if (max_abs(term) <= eps * max_abs(result)) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

/// Kronecker product, left factor major: (iA, iB) -> iA * B.rows() + iB.
template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject kron(const Eigen::MatrixBase<DerivedA>& a,
                                    const Eigen::MatrixBase<DerivedB>& b) {
  typename DerivedA::PlainObject out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

template <typename DerivedA, typename DerivedB>
typename DerivedA::PlainObject commutator(const Eigen::MatrixBase<DerivedA>& a,
                                          const Eigen::MatrixBase<DerivedB>& b) {
  return matmul(a, b) - matmul(b, a);
}

}  // namespace braket
