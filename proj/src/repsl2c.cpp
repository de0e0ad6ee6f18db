#include "braket/repsl2c.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace braket {

Weight::Weight(int twice_j) : twice_j_(twice_j) {
  if (twice_j < 0) {
    throw Error(ErrorCode::InvalidWeights, "weight must be non-negative, got 2j = " +
                                               std::to_string(twice_j));
  }
}

Weight Weight::from_real(double j) { return Weight(HalfInt::from_real(j).twice); }

Su2Irrep su2_generators(Weight j) {
  const int d = j.multiplicity();
  const double jj = j.value();
  ComplexMatrix raise = ComplexMatrix::Zero(d, d);
  ComplexMatrix j3 = ComplexMatrix::Zero(d, d);
  // Index a carries lambda = j - a.
  for (int a = 0; a < d; ++a) {
    const double lambda = jj - a;
    j3(a, a) = lambda;
    if (a > 0) raise(a - 1, a) = std::sqrt(jj * (jj + 1) - lambda * (lambda + 1));
  }
  const ComplexMatrix lower = raise.transpose();
  Su2Irrep irrep{j, {}};
  irrep.J[0] = (raise + lower) / 2.0;
  irrep.J[1] = (raise - lower) / Complex(0.0, 2.0);
  irrep.J[2] = j3;
  return irrep;
}

std::string_view to_string(RepBasis basis) {
  switch (basis) {
    case RepBasis::Canonical: return "canonical";
    case RepBasis::Rotation: return "rotation";
    case RepBasis::Orthonormal: return "orthonormal";
  }
  return "?";
}

RepBasis rep_basis_from_string(std::string_view name) {
  for (auto b : {RepBasis::Canonical, RepBasis::Rotation, RepBasis::Orthonormal}) {
    if (to_string(b) == name) return b;
  }
  throw Error(ErrorCode::SchemaError, "unknown basis '" + std::string(name) + "'");
}

int default_epsilon(Weight j1, Weight j2) {
  // j1 + j2 - |j1 - j2| = 2 min(j1, j2)
  return std::min(j1.twice(), j2.twice()) % 2 == 0 ? 1 : -1;
}

int default_epsilon(Weight j) { return j.twice() % 2 == 0 ? 1 : -1; }

namespace {

int checked_epsilon(std::optional<int> epsilon, int fallback) {
  const int eps = epsilon.value_or(fallback);
  if (eps != 1 && eps != -1) {
    throw Error(ErrorCode::InvalidWeights, "epsilon must be +1 or -1, got " + std::to_string(eps));
  }
  return eps;
}

ComplexMatrix block_diag(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::Zero(a.rows() + b.rows(), a.cols() + b.cols());
  out.topLeftCorner(a.rows(), a.cols()) = a;
  out.bottomRightCorner(b.rows(), b.cols()) = b;
  return out;
}

void fill_sl2c(CoupledRep& rep) {
  for (int a = 0; a < 3; ++a) {
    rep.I[a] = rep.M[a] + rep.N[a];
    rep.K[a] = Complex(0.0, -1.0) * (rep.M[a] - rep.N[a]);
  }
}

void append_canonical_labels(std::vector<BasisLabel>& labels, Weight left, Weight right) {
  for (int a = 0; a < left.multiplicity(); ++a) {
    for (int b = 0; b < right.multiplicity(); ++b) {
      labels.push_back({left.twice(), right.twice(), left.twice() - 2 * a,
                        right.twice() - 2 * b, 0});
    }
  }
}

}  // namespace

CoupledRep build_rep(Weight j1, Weight j2, std::optional<int> epsilon) {
  if (j1 == j2) {
    throw Error(ErrorCode::EqualWeights, "[j1,j2] needs j1 != j2; use build_rep_diag");
  }
  CoupledRep rep;
  rep.j1 = j1;
  rep.j2 = j2;
  rep.diagonal = false;
  rep.epsilon = checked_epsilon(epsilon, default_epsilon(j1, j2));
  rep.basis = RepBasis::Canonical;

  const Su2Irrep s1 = su2_generators(j1);
  const Su2Irrep s2 = su2_generators(j2);
  const int d1 = j1.multiplicity();
  const int d2 = j2.multiplicity();
  const ComplexMatrix id1 = identity(d1);
  const ComplexMatrix id2 = identity(d2);
  for (int a = 0; a < 3; ++a) {
    rep.M[a] = block_diag(kron(s1.J[a], id2), kron(s2.J[a], id1));
    rep.N[a] = block_diag(kron(id1, s2.J[a]), kron(id2, s1.J[a]));
  }
  fill_sl2c(rep);

  // |j1 l> x |j2 l'> in the first block pairs with |j2 l'> x |j1 l> in the second.
  const int n1 = d1 * d2;
  ComplexMatrix eta = ComplexMatrix::Zero(2 * n1, 2 * n1);
  for (int a = 0; a < d1; ++a) {
    for (int b = 0; b < d2; ++b) {
      const int first = a * d2 + b;
      const int second = n1 + b * d1 + a;
      eta(first, second) = static_cast<double>(rep.epsilon);
      eta(second, first) = static_cast<double>(rep.epsilon);
    }
  }
  rep.metric = MetricOperator(std::move(eta));

  append_canonical_labels(rep.labels, j1, j2);
  append_canonical_labels(rep.labels, j2, j1);
  return rep;
}

CoupledRep build_rep_diag(Weight j, std::optional<int> epsilon) {
  CoupledRep rep;
  rep.j1 = j;
  rep.j2 = j;
  rep.diagonal = true;
  rep.epsilon = checked_epsilon(epsilon, default_epsilon(j));
  rep.basis = RepBasis::Canonical;

  const Su2Irrep s = su2_generators(j);
  const int d = j.multiplicity();
  const ComplexMatrix id = identity(d);
  for (int a = 0; a < 3; ++a) {
    rep.M[a] = kron(s.J[a], id);
    rep.N[a] = kron(id, s.J[a]);
  }
  fill_sl2c(rep);

  ComplexMatrix eta = ComplexMatrix::Zero(d * d, d * d);
  for (int a = 0; a < d; ++a) {
    for (int b = 0; b < d; ++b) eta(a * d + b, b * d + a) = static_cast<double>(rep.epsilon);
  }
  rep.metric = MetricOperator(std::move(eta));

  append_canonical_labels(rep.labels, j, j);
  return rep;
}

ChiralPair chiral_projectors(const CoupledRep& rep) {
  if (rep.diagonal || rep.basis == RepBasis::Orthonormal) {
    throw Error(ErrorCode::WrongRepShape,
                "chiral projectors need a [j1,j2] rep in a block-preserving basis");
  }
  const Eigen::Index n = rep.dim();
  const Eigen::Index half = n / 2;
  ComplexMatrix left = ComplexMatrix::Zero(n, n);
  ComplexMatrix right = ComplexMatrix::Zero(n, n);
  left.topLeftCorner(half, half).setIdentity();
  right.bottomRightCorner(half, half).setIdentity();
  return {Projector(std::move(left)), Projector(std::move(right))};
}

namespace {

// Columns |(left,right) s,sigma> of one tensor block, s ascending and sigma
// descending, in canonical components.
ComplexMatrix rotation_columns(Weight left, Weight right, std::vector<BasisLabel>& labels) {
  const int dl = left.multiplicity();
  const int dr = right.multiplicity();
  ComplexMatrix c = ComplexMatrix::Zero(dl * dr, dl * dr);
  int column = 0;
  for (int ts = std::abs(left.twice() - right.twice()); ts <= left.twice() + right.twice();
       ts += 2) {
    for (int tsigma = ts; tsigma >= -ts; tsigma -= 2) {
      for (int a = 0; a < dl; ++a) {
        const int tl = left.twice() - 2 * a;
        const int tl2 = tsigma - tl;
        if (std::abs(tl2) > right.twice()) continue;
        const int b = (right.twice() - tl2) / 2;
        c(a * dr + b, column) = clebsch_gordan({left.twice()}, {tl}, {right.twice()}, {tl2},
                                               {ts}, {tsigma})
                                    .value();
      }
      labels.push_back({left.twice(), right.twice(), ts, tsigma, 0});
      ++column;
    }
  }
  return c;
}

CoupledRep change_basis(const CoupledRep& rep, const BasisChange& bc, RepBasis basis,
                        std::vector<BasisLabel> labels) {
  CoupledRep out = rep;
  for (int a = 0; a < 3; ++a) {
    out.M[a] = transform_operator(bc, {rep.M[a], OperatorKind::DownDown}).mat;
    out.N[a] = transform_operator(bc, {rep.N[a], OperatorKind::DownDown}).mat;
  }
  fill_sl2c(out);
  out.metric = transform_metric(bc, rep.metric);
  out.basis = basis;
  out.labels = std::move(labels);
  return out;
}

}  // namespace

RotatedRep rotation_basis(const CoupledRep& rep) {
  if (rep.basis != RepBasis::Canonical) {
    throw Error(ErrorCode::WrongRepShape, "rotation_basis expects a canonical-basis rep");
  }
  std::vector<BasisLabel> labels;
  ComplexMatrix c;
  if (rep.diagonal) {
    c = rotation_columns(rep.j1, rep.j1, labels);
  } else {
    const ComplexMatrix first = rotation_columns(rep.j1, rep.j2, labels);
    const ComplexMatrix second = rotation_columns(rep.j2, rep.j1, labels);
    c = block_diag(first, second);
  }
  const BasisChange bc(c);
  return {c, change_basis(rep, bc, RepBasis::Rotation, std::move(labels))};
}

ComplexMatrix spectral_rotation_metric(const CoupledRep& rep_rot) {
  if (rep_rot.basis != RepBasis::Rotation) {
    throw Error(ErrorCode::WrongRepShape, "spectral form is defined in the rotation basis");
  }
  const Eigen::Index n = rep_rot.dim();
  ComplexMatrix eta = ComplexMatrix::Zero(n, n);
  const int t1 = rep_rot.j1.twice();
  const int t2 = rep_rot.j2.twice();
  for (Eigen::Index r = 0; r < n; ++r) {
    const BasisLabel& row = rep_rot.labels[r];
    // (-1)^(s - j1 - j2); the exponent is an integer by the triangle rule.
    const int exponent = (row.twice_first - t1 - t2) / 2;
    const double phase = rep_rot.epsilon * (exponent % 2 == 0 ? 1.0 : -1.0);
    for (Eigen::Index c = 0; c < n; ++c) {
      const BasisLabel& col = rep_rot.labels[c];
      const bool same_state =
          row.twice_first == col.twice_first && row.twice_second == col.twice_second;
      const bool mirrored = row.twice_left == col.twice_right && row.twice_right == col.twice_left;
      if (same_state && mirrored) eta(r, c) = phase;
    }
  }
  return eta;
}

CoupledRep orthonormal_basis(const CoupledRep& rep_rot) {
  if (rep_rot.diagonal) {
    throw Error(ErrorCode::WrongRepShape, "[j] reps are already orthonormal in the rotation basis");
  }
  if (rep_rot.basis != RepBasis::Rotation) {
    throw Error(ErrorCode::WrongRepShape, "orthonormal_basis expects a rotation-basis rep");
  }
  const Eigen::Index n = rep_rot.dim();
  const Eigen::Index half = n / 2;
  const double r = 1.0 / std::sqrt(2.0);
  ComplexMatrix b = ComplexMatrix::Zero(n, n);
  b.topLeftCorner(half, half) = r * identity(half);
  b.topRightCorner(half, half) = r * identity(half);
  b.bottomLeftCorner(half, half) = r * identity(half);
  b.bottomRightCorner(half, half) = -r * identity(half);

  std::vector<BasisLabel> labels;
  labels.reserve(n);
  for (int parity : {1, -1}) {
    for (Eigen::Index k = 0; k < half; ++k) {
      const BasisLabel& src = rep_rot.labels[k];
      labels.push_back({rep_rot.j1.twice(), rep_rot.j2.twice(), src.twice_first,
                        src.twice_second, parity});
    }
  }
  return change_basis(rep_rot, BasisChange(b), RepBasis::Orthonormal, std::move(labels));
}

Signature rep_signature(const CoupledRep& rep, const Tolerances& tol) {
  return signature(rep.metric.eta(), tol);
}

}  // namespace braket
