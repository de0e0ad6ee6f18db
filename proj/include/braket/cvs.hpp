#pragma once

// Coupled vector spaces in a fixed system of dual bases.

#include <string_view>
#include <vector>

#include "braket/numkernel.hpp"

namespace braket {

/// Hermitian invertible matrix with its cached inverse. Construction fails
/// fast on non-hermitian or singular input.
class MetricOperator {
 public:
  explicit MetricOperator(ComplexMatrix eta, const Tolerances& tol = {});

  const ComplexMatrix& eta() const { return eta_; }
  const ComplexMatrix& eta_inv() const { return eta_inv_; }
  Eigen::Index dim() const { return eta_.rows(); }

  static MetricOperator diagonal(const std::vector<double>& entries);
  static MetricOperator unit(Eigen::Index n);

 private:
  ComplexMatrix eta_;
  ComplexMatrix eta_inv_;
};

enum class Variance { KetDown, KetUp, BraDown, BraUp };

std::string_view to_string(Variance v);
Variance variance_from_string(std::string_view name);

constexpr bool is_ket(Variance v) { return v == Variance::KetDown || v == Variance::KetUp; }
constexpr bool is_bra(Variance v) { return !is_ket(v); }

/// Components of a ket, or the (already conjugated) components of a bra.
struct VarVector {
  ComplexVector components;
  Variance variance = Variance::KetDown;

  Eigen::Index dim() const { return components.size(); }
};

/// Anti-linear map from a ket to its related bra (KetDown -> BraDown,
/// KetUp -> BraUp).
VarVector relate_bra(const VarVector& ket);
/// Inverse of relate_bra.
VarVector relate_ket(const VarVector& bra);

/// KetDown x -> KetUp eta x; KetUp -> KetDown through eta^-1.
VarVector couple(const MetricOperator& m, const VarVector& ket);

/// Metric-free pairing of a bra with a ket of the opposite slash:
/// (BraUp, KetDown) or (BraDown, KetUp).
Complex dual_form(const VarVector& bra, const VarVector& ket);

/// h(x, y) = x^dagger eta y for ket-down pairs, x^dagger eta^-1 y for ket-up.
Complex scalar_product(const MetricOperator& m, const VarVector& x, const VarVector& y);

enum class IndexDirection { Lower, Raise };

ComplexVector raise_lower_index(const MetricOperator& m, const ComplexVector& comps,
                                IndexDirection direction);

}  // namespace braket
