#pragma once

// Semi-unitary finite-dimensional representations of sl(2,C) on coupled
// spaces: [j1,j2] on (K^j1 x K^j2) + (K^j2 x K^j1), and [j] on K^j x K^j.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "braket/clebsch_gordan.hpp"
#include "braket/projections.hpp"
#include "braket/transforms.hpp"

namespace braket {

/// Spin weight j stored as 2j.
class Weight {
 public:
  explicit Weight(int twice_j);
  static Weight from_real(double j);

  int twice() const { return twice_j_; }
  double value() const { return twice_j_ / 2.0; }
  int multiplicity() const { return twice_j_ + 1; }
  bool is_half_integer() const { return twice_j_ % 2 == 1; }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  int twice_j_ = 0;
};

using Triplet = std::array<ComplexMatrix, 3>;

struct Su2Irrep {
  Weight j{0};
  Triplet J;
};

/// Canonical irrep: J3 diagonal descending, non-negative ladder elements.
Su2Irrep su2_generators(Weight j);

enum class RepBasis { Canonical, Rotation, Orthonormal };

std::string_view to_string(RepBasis basis);
RepBasis rep_basis_from_string(std::string_view name);

/// One basis vector of a representation carrier space.
///
/// Canonical: block (left, right) weights and the two projections (2l, 2l').
/// Rotation: block weights and (2s, 2sigma).
/// Orthonormal: parity +-1 and (2s, 2sigma); block weights are (j1, j2).
struct BasisLabel {
  int twice_left = 0;
  int twice_right = 0;
  int twice_first = 0;
  int twice_second = 0;
  int parity = 0;

  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct CoupledRep {
  Weight j1{0};
  Weight j2{0};
  bool diagonal = false;  // [j]: j1 == j2, a single tensor block
  int epsilon = 1;
  RepBasis basis = RepBasis::Canonical;
  Triplet M, N, I, K;
  MetricOperator metric = MetricOperator::unit(1);
  std::vector<BasisLabel> labels;

  Eigen::Index dim() const { return metric.dim(); }
};

/// Default epsilon for [j1,j2]: (-1)^(j1 + j2 - |j1 - j2|).
int default_epsilon(Weight j1, Weight j2);
/// Default epsilon for [j]: (-1)^(2j).
int default_epsilon(Weight j);

/// [j1,j2] with j1 != j2 in the canonical basis.
CoupledRep build_rep(Weight j1, Weight j2, std::optional<int> epsilon = std::nullopt);
/// [j] in the canonical basis.
CoupledRep build_rep_diag(Weight j, std::optional<int> epsilon = std::nullopt);

struct ChiralPair {
  Projector left;
  Projector right;
};

ChiralPair chiral_projectors(const CoupledRep& rep);

struct RotatedRep {
  ComplexMatrix change;  // columns are the rotation-basis kets in canonical components
  CoupledRep rep;
};

/// Basis diagonalizing I^2 and I3, built from Clebsch-Gordan coefficients.
RotatedRep rotation_basis(const CoupledRep& rep);

/// Metric of a rotation-basis rep assembled from its spectral form:
/// eps (-1)^(s - j1 - j2) on the swap pairs for [j1,j2], eps (-1)^(s - 2j)
/// on the diagonal for [j].
ComplexMatrix spectral_rotation_metric(const CoupledRep& rep_rot);

/// (|(j1,j2)s,sigma> +- |(j2,j1)s,sigma>)/sqrt(2), from a rotation-basis [j1,j2].
CoupledRep orthonormal_basis(const CoupledRep& rep_rot);

Signature rep_signature(const CoupledRep& rep, const Tolerances& tol = {});

}  // namespace braket
