#include "braket/opalg.hpp"

#include <string>

namespace braket {

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::DownDown: return "DownDown";
    case OperatorKind::UpUp: return "UpUp";
    case OperatorKind::DownUp: return "DownUp";
    case OperatorKind::UpDown: return "UpDown";
  }
  return "?";
}

OperatorKind kind_from_string(std::string_view name) {
  for (auto k : kAllKinds) {
    if (to_string(k) == name) return k;
  }
  throw Error(ErrorCode::SchemaError, "unknown operator kind '" + std::string(name) + "'");
}

Variance input_variance(OperatorKind kind) {
  return (kind == OperatorKind::DownDown || kind == OperatorKind::DownUp) ? Variance::KetDown
                                                                          : Variance::KetUp;
}

Variance output_variance(OperatorKind kind) {
  return (kind == OperatorKind::DownDown || kind == OperatorKind::UpDown) ? Variance::KetDown
                                                                          : Variance::KetUp;
}

OperatorKind kind_between(Variance input, Variance output) {
  if (!is_ket(input) || !is_ket(output)) {
    throw Error(ErrorCode::WrongVariance, "operator kinds connect ket spaces only");
  }
  if (input == Variance::KetDown) {
    return output == Variance::KetDown ? OperatorKind::DownDown : OperatorKind::DownUp;
  }
  return output == Variance::KetDown ? OperatorKind::UpDown : OperatorKind::UpUp;
}

KindedOperator::KindedOperator(ComplexMatrix m, OperatorKind k) : mat(std::move(m)), kind(k) {
  require_square(mat, "operator");
}

KindedOperator metric_op(const MetricOperator& m) { return {m.eta(), OperatorKind::DownUp}; }

KindedOperator inverse_metric_op(const MetricOperator& m) {
  return {m.eta_inv(), OperatorKind::UpDown};
}

KindedOperator identity_down(Eigen::Index n) { return {identity(n), OperatorKind::DownDown}; }
KindedOperator identity_up(Eigen::Index n) { return {identity(n), OperatorKind::UpUp}; }

namespace {

void require_same_dim(const KindedOperator& x, const KindedOperator& y, const char* what) {
  if (x.dim() != y.dim()) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": dimensions " +
                                                  std::to_string(x.dim()) + " and " +
                                                  std::to_string(y.dim()));
  }
}

void require_dim(const KindedOperator& x, const MetricOperator& m) {
  if (x.dim() != m.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "operator of dimension " + std::to_string(x.dim()) +
                                                  " against metric of dimension " +
                                                  std::to_string(m.dim()));
  }
}

}  // namespace

KindedOperator compose(const KindedOperator& x, const KindedOperator& y) {
  if (output_variance(y.kind) != input_variance(x.kind)) {
    throw Error(ErrorCode::KindMismatch, std::string(to_string(x.kind)) + " after " +
                                             std::string(to_string(y.kind)));
  }
  require_same_dim(x, y, "compose");
  return {x.mat * y.mat, kind_between(input_variance(y.kind), output_variance(x.kind))};
}

KindedOperator add(const KindedOperator& x, const KindedOperator& y) {
  if (x.kind != y.kind) {
    throw Error(ErrorCode::KindMismatch, std::string(to_string(x.kind)) + " plus " +
                                             std::string(to_string(y.kind)));
  }
  require_same_dim(x, y, "add");
  return {x.mat + y.mat, x.kind};
}

KindedOperator scale(Complex alpha, const KindedOperator& x) { return {alpha * x.mat, x.kind}; }

VarVector apply(const KindedOperator& x, const VarVector& ket) {
  if (ket.variance != input_variance(x.kind)) {
    throw Error(ErrorCode::VarianceMismatch, std::string(to_string(x.kind)) +
                                                 " operator cannot act on " +
                                                 std::string(to_string(ket.variance)));
  }
  if (ket.dim() != x.dim()) throw Error(ErrorCode::DimensionMismatch, "apply");
  return {x.mat * ket.components, output_variance(x.kind)};
}

KindedOperator hermitian_adjoint(const KindedOperator& x) {
  OperatorKind kind = x.kind;
  if (kind == OperatorKind::DownDown) {
    kind = OperatorKind::UpUp;
  } else if (kind == OperatorKind::UpUp) {
    kind = OperatorKind::DownDown;
  }
  return {x.mat.adjoint(), kind};
}

KindedOperator couple_operator(const MetricOperator& m, const KindedOperator& a) {
  require_dim(a, m);
  switch (a.kind) {
    case OperatorKind::DownDown: return {m.eta() * a.mat * m.eta_inv(), OperatorKind::UpUp};
    case OperatorKind::UpUp: return {m.eta_inv() * a.mat * m.eta(), OperatorKind::DownDown};
    default:
      throw Error(ErrorCode::WrongKind, "only DownDown and UpUp operators are coupled, got " +
                                            std::string(to_string(a.kind)));
  }
}

KindedOperator dirac_adjoint(const KindedOperator& x, const MetricOperator& m) {
  require_dim(x, m);
  switch (x.kind) {
    case OperatorKind::DownDown:
      return {m.eta_inv() * x.mat.adjoint() * m.eta(), OperatorKind::DownDown};
    case OperatorKind::UpUp:
      return {m.eta() * x.mat.adjoint() * m.eta_inv(), OperatorKind::UpUp};
    default: return {x.mat.adjoint(), x.kind};
  }
}

bool is_semi_hermitian(const KindedOperator& x, const MetricOperator& m, double tol) {
  if (x.kind != OperatorKind::DownDown && x.kind != OperatorKind::UpUp) {
    throw Error(ErrorCode::WrongKind, "semi-hermiticity is defined for DownDown and UpUp only");
  }
  return approx_equal(dirac_adjoint(x, m).mat, x.mat, tol);
}

Complex trace(const KindedOperator& x) {
  if (x.kind != OperatorKind::DownDown && x.kind != OperatorKind::UpUp) {
    throw Error(ErrorCode::WrongKind, "trace of a " + std::string(to_string(x.kind)) +
                                          " operator contracts mismatched indices");
  }
  return x.mat.trace();
}

}  // namespace braket
