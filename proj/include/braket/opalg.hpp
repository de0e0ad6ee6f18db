#pragma once

// Kind-checked operator algebra on coupled spaces.
//
// An operator kind records which ket space it reads from and which it writes
// to. DownDown is /A/, UpUp is \B\, DownUp is \A/ (K -> K^), UpDown is /B\.
// The metric is {eta, DownUp}; its inverse is {eta^-1, UpDown}.

#include <array>
#include <string_view>

#include "braket/cvs.hpp"

namespace braket {

enum class OperatorKind { DownDown, UpUp, DownUp, UpDown };

inline constexpr std::array<OperatorKind, 4> kAllKinds = {
    OperatorKind::DownDown, OperatorKind::UpUp, OperatorKind::DownUp, OperatorKind::UpDown};

std::string_view to_string(OperatorKind kind);
OperatorKind kind_from_string(std::string_view name);

/// Ket variance consumed by an operator of this kind.
Variance input_variance(OperatorKind kind);
/// Ket variance produced.
Variance output_variance(OperatorKind kind);
OperatorKind kind_between(Variance input, Variance output);

struct KindedOperator {
  ComplexMatrix mat;
  OperatorKind kind = OperatorKind::DownDown;

  KindedOperator() = default;
  KindedOperator(ComplexMatrix m, OperatorKind k);

  Eigen::Index dim() const { return mat.rows(); }
};

KindedOperator metric_op(const MetricOperator& m);
KindedOperator inverse_metric_op(const MetricOperator& m);
KindedOperator identity_down(Eigen::Index n);
KindedOperator identity_up(Eigen::Index n);

/// X after Y: Y's output space must be X's input space.
KindedOperator compose(const KindedOperator& x, const KindedOperator& y);
KindedOperator add(const KindedOperator& x, const KindedOperator& y);
KindedOperator scale(Complex alpha, const KindedOperator& x);

/// Apply an operator to a ket of its input variance.
VarVector apply(const KindedOperator& x, const VarVector& ket);

/// Matrix goes to its conjugate transpose; DownDown and UpUp swap, cross
/// kinds keep their kind.
KindedOperator hermitian_adjoint(const KindedOperator& x);

/// A^ = eta A eta^-1 for DownDown input; the inverse coupling for UpUp.
KindedOperator couple_operator(const MetricOperator& m, const KindedOperator& a);

/// Metric-dressed adjoint: eta^-1 X^+ eta on DownDown, eta X^+ eta^-1 on UpUp,
/// plain X^+ on the cross kinds.
KindedOperator dirac_adjoint(const KindedOperator& x, const MetricOperator& m);

bool is_semi_hermitian(const KindedOperator& x, const MetricOperator& m,
                       double tol = Tolerances{}.eq_tol);

Complex trace(const KindedOperator& x);

}  // namespace braket
