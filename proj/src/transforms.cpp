#include "braket/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

namespace braket {

BasisChange::BasisChange(ComplexMatrix t, const Tolerances& tol) : t_(std::move(t)) {
  t_inv_ = inverse(t_, tol.sig_tol);
}

bool satisfies_gauge_constraint(const GaugeParams& p, double tol) {
  return p.omega.rows() == p.omega.cols() &&
         max_abs(p.omega + p.omega.adjoint()) <= tol;
}

GaugeParams project_to_gauge(const GaugeParams& p) {
  require_square(p.omega, "gauge parameters");
  return {(p.omega - p.omega.adjoint()) / 2.0};
}

namespace {

void require_dim(Eigen::Index n, Eigen::Index expected, const char* what) {
  if (n != expected) {
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + ": dimension " +
                                                  std::to_string(n) + " vs " +
                                                  std::to_string(expected));
  }
}

void require_index(int i, Eigen::Index n) {
  if (i < 1 || i > n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
}

}  // namespace

MetricOperator transform_metric(const BasisChange& bc, const MetricOperator& m) {
  require_dim(bc.dim(), m.dim(), "transform_metric");
  ComplexMatrix eta = bc.t().adjoint() * m.eta() * bc.t();
  // Exact hermitian symmetrization; congruence preserves hermiticity up to rounding.
  eta = (eta + eta.adjoint()).eval() / 2.0;
  return MetricOperator(std::move(eta));
}

KindedOperator transform_operator(const BasisChange& bc, const KindedOperator& x) {
  require_dim(bc.dim(), x.dim(), "transform_operator");
  const ComplexMatrix& t = bc.t();
  const ComplexMatrix& ti = bc.t_inv();
  switch (x.kind) {
    case OperatorKind::DownDown: return {ti * x.mat * t, x.kind};
    case OperatorKind::UpUp: return {t.adjoint() * x.mat * ti.adjoint(), x.kind};
    case OperatorKind::DownUp: return {t.adjoint() * x.mat * t, x.kind};
    case OperatorKind::UpDown: return {ti * x.mat * ti.adjoint(), x.kind};
  }
  return x;
}

VarVector transform_components(const BasisChange& bc, const VarVector& v) {
  require_dim(bc.dim(), v.dim(), "transform_components");
  switch (v.variance) {
    case Variance::KetDown: return {bc.t_inv() * v.components, v.variance};
    case Variance::KetUp: return {bc.t().adjoint() * v.components, v.variance};
    case Variance::BraDown: return {bc.t_inv().conjugate() * v.components, v.variance};
    case Variance::BraUp: return {bc.t().transpose() * v.components, v.variance};
  }
  return v;
}

bool is_symmetry(const ComplexMatrix& u, const MetricOperator& m, double tol) {
  require_square(u, "is_symmetry");
  require_dim(u.rows(), m.dim(), "is_symmetry");
  return max_abs(u.adjoint() * m.eta() * u - m.eta()) <= tol;
}

KindedOperator generator_X(int i, int j, const MetricOperator& m) {
  const Eigen::Index n = m.dim();
  require_index(i, n);
  require_index(j, n);
  ComplexMatrix x = ComplexMatrix::Zero(n, n);
  x.row(i - 1) = m.eta().row(j - 1);
  return {std::move(x), OperatorKind::DownDown};
}

KindedOperator generator_H(int i, int j, const MetricOperator& m) {
  KindedOperator x = generator_X(i, j, m);
  const auto n = static_cast<double>(m.dim());
  x.mat -= (m.eta()(j - 1, i - 1) / n) * identity(m.dim());
  return x;
}

SemiHermitianGenerators generators_A_S(int i, int j, const MetricOperator& m) {
  const ComplexMatrix xij = generator_X(i, j, m).mat;
  const ComplexMatrix xji = generator_X(j, i, m).mat;
  const auto n = static_cast<double>(m.dim());
  const Complex eta_ji = m.eta()(j - 1, i - 1);
  const ComplexMatrix id = identity(m.dim());
  ComplexMatrix a = Complex(0.0, 0.5) * (xij - xji) + (eta_ji.imag() / n) * id;
  ComplexMatrix s = -0.5 * (xij + xji) + (eta_ji.real() / n) * id;
  return {{std::move(a), OperatorKind::DownDown}, {std::move(s), OperatorKind::DownDown}};
}

ComplexMatrix group_element(const GaugeParams& p, const MetricOperator& m) {
  require_square(p.omega, "gauge parameters");
  require_dim(p.omega.rows(), m.dim(), "group_element");
  // sum_ij omega^{ij} X_ij has entries sum_j omega^{kj} eta_jl, i.e. omega * eta.
  return expm(p.omega * m.eta());
}

KindedOperator transform_generator(const BasisChange& bc, const KindedOperator& x,
                                   const MetricOperator& m) {
  if (x.kind != OperatorKind::DownDown) {
    throw Error(ErrorCode::WrongKind, "generators are DownDown operators");
  }
  require_dim(bc.dim(), x.dim(), "transform_generator");
  require_dim(bc.dim(), m.dim(), "transform_generator");
  const KindedOperator t{bc.t(), OperatorKind::DownDown};
  return compose(compose(t, x), dirac_adjoint(t, m));
}

BasisChange orthonormalizing_change(const MetricOperator& m, const Tolerances& tol) {
  const ComplexMatrix sym = (m.eta() + m.eta().adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(sym);
  const Eigen::Index n = m.dim();
  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), 0);
  // Positive eigenvalues first, descending.
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
    return solver.eigenvalues()(a) > solver.eigenvalues()(b);
  });
  ComplexMatrix t(n, n);
  for (Eigen::Index c = 0; c < n; ++c) {
    const double lambda = solver.eigenvalues()(order[c]);
    if (std::abs(lambda) < tol.sig_tol) {
      throw Error(ErrorCode::DegenerateMetric, "metric has a vanishing eigenvalue");
    }
    t.col(c) = solver.eigenvectors().col(order[c]) / std::sqrt(std::abs(lambda));
  }
  return BasisChange(std::move(t), tol);
}

}  // namespace braket
