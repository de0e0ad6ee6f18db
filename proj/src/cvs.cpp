#include "braket/cvs.hpp"

#include <string>

namespace braket {

MetricOperator::MetricOperator(ComplexMatrix eta, const Tolerances& tol) : eta_(std::move(eta)) {
  require_square(eta_, "metric");
  if (!is_hermitian(eta_, tol.herm_tol)) {
    throw Error(ErrorCode::NotHermitian, "metric matrix must be hermitian");
  }
  eta_inv_ = inverse(eta_, tol.sig_tol);
}

MetricOperator MetricOperator::diagonal(const std::vector<double>& entries) {
  ComplexMatrix eta = ComplexMatrix::Zero(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) eta(i, i) = entries[i];
  return MetricOperator(std::move(eta));
}

MetricOperator MetricOperator::unit(Eigen::Index n) { return MetricOperator(identity(n)); }

std::string_view to_string(Variance v) {
  switch (v) {
    case Variance::KetDown: return "KetDown";
    case Variance::KetUp: return "KetUp";
    case Variance::BraDown: return "BraDown";
    case Variance::BraUp: return "BraUp";
  }
  return "?";
}

Variance variance_from_string(std::string_view name) {
  for (auto v : {Variance::KetDown, Variance::KetUp, Variance::BraDown, Variance::BraUp}) {
    if (to_string(v) == name) return v;
  }
  throw Error(ErrorCode::SchemaError, "unknown variance '" + std::string(name) + "'");
}

VarVector relate_bra(const VarVector& ket) {
  if (!is_ket(ket.variance)) {
    throw Error(ErrorCode::WrongVariance, "relate_bra expects a ket, got " +
                                              std::string(to_string(ket.variance)));
  }
  return {ket.components.conjugate(),
          ket.variance == Variance::KetDown ? Variance::BraDown : Variance::BraUp};
}

VarVector relate_ket(const VarVector& bra) {
  if (!is_bra(bra.variance)) {
    throw Error(ErrorCode::WrongVariance, "relate_ket expects a bra, got " +
                                              std::string(to_string(bra.variance)));
  }
  return {bra.components.conjugate(),
          bra.variance == Variance::BraDown ? Variance::KetDown : Variance::KetUp};
}

namespace {

void require_dim(const MetricOperator& m, Eigen::Index n) {
  if (m.dim() != n) {
    throw Error(ErrorCode::DimensionMismatch, "vector of length " + std::to_string(n) +
                                                  " against metric of dimension " +
                                                  std::to_string(m.dim()));
  }
}

}  // namespace

VarVector couple(const MetricOperator& m, const VarVector& ket) {
  require_dim(m, ket.dim());
  switch (ket.variance) {
    case Variance::KetDown: return {m.eta() * ket.components, Variance::KetUp};
    case Variance::KetUp: return {m.eta_inv() * ket.components, Variance::KetDown};
    default:
      throw Error(ErrorCode::WrongVariance, "couple acts on kets only, got " +
                                                std::string(to_string(ket.variance)));
  }
}

Complex dual_form(const VarVector& bra, const VarVector& ket) {
  const bool crossed = (bra.variance == Variance::BraUp && ket.variance == Variance::KetDown) ||
                       (bra.variance == Variance::BraDown && ket.variance == Variance::KetUp);
  if (!crossed) {
    throw Error(ErrorCode::VarianceMismatch, "no dual form between " +
                                                 std::string(to_string(bra.variance)) + " and " +
                                                 std::string(to_string(ket.variance)));
  }
  if (bra.dim() != ket.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "dual_form length mismatch");
  }
  // Bra components are stored conjugated already.
  return (bra.components.array() * ket.components.array()).sum();
}

Complex scalar_product(const MetricOperator& m, const VarVector& x, const VarVector& y) {
  if (x.variance != y.variance || !is_ket(x.variance)) {
    throw Error(ErrorCode::VarianceMismatch, "scalar product needs two kets of equal variance, got " +
                                                 std::string(to_string(x.variance)) + " and " +
                                                 std::string(to_string(y.variance)));
  }
  require_dim(m, x.dim());
  require_dim(m, y.dim());
  const ComplexMatrix& g = x.variance == Variance::KetDown ? m.eta() : m.eta_inv();
  return x.components.dot(g * y.components);
}

ComplexVector raise_lower_index(const MetricOperator& m, const ComplexVector& comps,
                                IndexDirection direction) {
  require_dim(m, comps.size());
  return direction == IndexDirection::Lower ? ComplexVector(m.eta() * comps)
                                            : ComplexVector(m.eta_inv() * comps);
}

}  // namespace braket
