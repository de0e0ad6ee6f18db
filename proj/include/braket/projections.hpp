#pragma once

#include <utility>
#include <vector>

#include "braket/opalg.hpp"

namespace braket {

/// Idempotent DownDown operator.
class Projector {
 public:
  explicit Projector(ComplexMatrix mat, double tol = Tolerances{}.eq_tol);

  const KindedOperator& op() const { return op_; }
  const ComplexMatrix& mat() const { return op_.mat; }
  Eigen::Index dim() const { return op_.dim(); }
  // Trace of an idempotent, rounded.
  int rank() const;

 private:
  KindedOperator op_;
};

/// P^+ eta Q vanishes.
bool is_perp(const Projector& p, const Projector& q, const MetricOperator& m,
             double tol = Tolerances{}.eq_tol);

/// PQ = QP = 0.
bool is_additive(const Projector& p, const Projector& q, double tol = Tolerances{}.eq_tol);

/// eta_P = eta P for a semi-hermitian projector. Throws NotSemiHermitian when
/// P^+ eta != eta P.
ComplexMatrix coupled_subspace_metric(const Projector& p, const MetricOperator& m,
                                      double tol = Tolerances{}.eq_tol);

/// Companion of coupled_subspace_metric: P eta^-1, the inverse on the subspace.
ComplexMatrix coupled_subspace_inverse_metric(const Projector& p, const MetricOperator& m,
                                              double tol = Tolerances{}.eq_tol);

/// Rank-1 projectors onto each basis vector.
std::vector<Projector> elementary_projectors(Eigen::Index n);

struct OrthonormalSplit {
  Projector plus;
  Projector minus;
};

/// P+ and P- for a diagonal metric with +-1 entries.
OrthonormalSplit orthonormal_split(const MetricOperator& m, double tol = Tolerances{}.eq_tol);

}  // namespace braket
