#include "braket/projections.hpp"

#include <cmath>
#include <string>

namespace braket {

Projector::Projector(ComplexMatrix mat, double tol) : op_(std::move(mat), OperatorKind::DownDown) {
  if (!approx_equal(op_.mat * op_.mat, op_.mat, tol)) {
    throw Error(ErrorCode::NotIdempotent, "P^2 differs from P by " +
                                              std::to_string(max_abs(op_.mat * op_.mat - op_.mat)));
  }
}

int Projector::rank() const { return static_cast<int>(std::lround(op_.mat.trace().real())); }

namespace {

void require_same_dim(const Projector& p, const Projector& q) {
  if (p.dim() != q.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "projectors of dimension " +
                                                  std::to_string(p.dim()) + " and " +
                                                  std::to_string(q.dim()));
  }
}

void require_semi_hermitian(const Projector& p, const MetricOperator& m, double tol) {
  if (p.dim() != m.dim()) throw Error(ErrorCode::DimensionMismatch, "projector vs metric");
  const double defect = max_abs(p.mat().adjoint() * m.eta() - m.eta() * p.mat());
  if (defect > tol) {
    throw Error(ErrorCode::NotSemiHermitian,
                "P^+ eta - eta P has magnitude " + std::to_string(defect));
  }
}

}  // namespace

bool is_perp(const Projector& p, const Projector& q, const MetricOperator& m, double tol) {
  require_same_dim(p, q);
  if (p.dim() != m.dim()) throw Error(ErrorCode::DimensionMismatch, "projector vs metric");
  return max_abs(p.mat().adjoint() * m.eta() * q.mat()) <= tol;
}

bool is_additive(const Projector& p, const Projector& q, double tol) {
  require_same_dim(p, q);
  if (max_abs(p.mat() * q.mat()) > tol || max_abs(q.mat() * p.mat()) > tol) return false;
  const ComplexMatrix sum = p.mat() + q.mat();
  return approx_equal(sum * sum, sum, 4 * tol);
}

ComplexMatrix coupled_subspace_metric(const Projector& p, const MetricOperator& m, double tol) {
  require_semi_hermitian(p, m, tol);
  ComplexMatrix eta_p = m.eta() * p.mat();
  // Sanity on the result: hermitian, and inverse to P eta^-1 on the subspace.
  const ComplexMatrix inv_p = p.mat() * m.eta_inv();
  const double scale = std::max(1.0, max_abs(m.eta()) * max_abs(m.eta_inv()));
  if (!is_hermitian(eta_p, tol * scale) ||
      !approx_equal(eta_p * inv_p, p.mat().adjoint(), tol * scale) ||
      !approx_equal(inv_p * eta_p, p.mat(), tol * scale)) {
    throw Error(ErrorCode::NotSemiHermitian, "subspace metric identities fail");
  }
  return eta_p;
}

ComplexMatrix coupled_subspace_inverse_metric(const Projector& p, const MetricOperator& m,
                                              double tol) {
  require_semi_hermitian(p, m, tol);
  return p.mat() * m.eta_inv();
}

std::vector<Projector> elementary_projectors(Eigen::Index n) {
  if (n < 1) throw Error(ErrorCode::DimensionMismatch, "dimension must be positive");
  std::vector<Projector> out;
  out.reserve(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    ComplexMatrix p = ComplexMatrix::Zero(n, n);
    p(i, i) = 1.0;
    out.emplace_back(std::move(p));
  }
  return out;
}

OrthonormalSplit orthonormal_split(const MetricOperator& m, double tol) {
  const Eigen::Index n = m.dim();
  ComplexMatrix plus = ComplexMatrix::Zero(n, n);
  ComplexMatrix minus = ComplexMatrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i != j && std::abs(m.eta()(i, j)) > tol) {
        throw Error(ErrorCode::NotOrthonormalMetric, "metric is not diagonal");
      }
    }
    const Complex d = m.eta()(i, i);
    if (std::abs(d - 1.0) <= tol) {
      plus(i, i) = 1.0;
    } else if (std::abs(d + 1.0) <= tol) {
      minus(i, i) = 1.0;
    } else {
      throw Error(ErrorCode::NotOrthonormalMetric,
                  "diagonal entry " + std::to_string(i) + " is not +-1");
    }
  }
  return {Projector(std::move(plus)), Projector(std::move(minus))};
}

}  // namespace braket
