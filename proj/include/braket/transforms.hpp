#pragma once

// Basis changes |(i)'> = T|(i)>, the transformation laws they induce, and the
// generators of GL(N) and of the metric's gauge group U(n+, n-).

#include <utility>

#include "braket/opalg.hpp"

namespace braket {

/// Invertible DownDown matrix T with its cached inverse.
class BasisChange {
 public:
  explicit BasisChange(ComplexMatrix t, const Tolerances& tol = {});

  const ComplexMatrix& t() const { return t_; }
  const ComplexMatrix& t_inv() const { return t_inv_; }
  Eigen::Index dim() const { return t_.rows(); }

 private:
  ComplexMatrix t_;
  ComplexMatrix t_inv_;
};

/// Parameters omega^{ij} of T(omega) = exp(omega^{ij} X_ij). Indices are
/// 1-based in the public API, 0-based in storage.
struct GaugeParams {
  ComplexMatrix omega;
};

/// omega^{ij} + conj(omega^{ji}) = 0 within tol.
bool satisfies_gauge_constraint(const GaugeParams& p, double tol = Tolerances{}.eq_tol);
/// Nearest parameters obeying the gauge constraint: (omega - omega^+) / 2.
GaugeParams project_to_gauge(const GaugeParams& p);

/// eta' = T^+ eta T.
MetricOperator transform_metric(const BasisChange& bc, const MetricOperator& m);

/// New matrix of an operator: T^-1 A T, T^+ B (T^-1)^+, and the metric /
/// inverse-metric laws for the cross kinds.
KindedOperator transform_operator(const BasisChange& bc, const KindedOperator& x);

/// New components of a vector: kets transform contragrediently to their
/// basis, bras by the conjugate law.
VarVector transform_components(const BasisChange& bc, const VarVector& v);

/// U^+ eta U = eta within tol.
bool is_symmetry(const ComplexMatrix& u, const MetricOperator& m, double tol = Tolerances{}.sym_tol);

/// X_ij = |(i)><(j)| eta, entries (X_ij)^k_l = delta^k_i eta_jl.
KindedOperator generator_X(int i, int j, const MetricOperator& m);
/// Traceless part H_ij = X_ij - eta_ji / N.
KindedOperator generator_H(int i, int j, const MetricOperator& m);

struct SemiHermitianGenerators {
  KindedOperator a;  // antisymmetric combination
  KindedOperator s;  // symmetric combination
};

SemiHermitianGenerators generators_A_S(int i, int j, const MetricOperator& m);

/// exp(sum_ij omega^{ij} X_ij).
ComplexMatrix group_element(const GaugeParams& p, const MetricOperator& m);

/// T X bar(T), with bar(T) = eta^-1 T^+ eta.
KindedOperator transform_generator(const BasisChange& bc, const KindedOperator& x,
                                   const MetricOperator& m);

/// T with T^+ eta T diagonal with +-1 entries, positive entries first.
BasisChange orthonormalizing_change(const MetricOperator& m, const Tolerances& tol = {});

}  // namespace braket
