#pragma once

// ASCII bra-ket expressions.
//
//   kd:x ku:x bd:x bu:x   ket-down, ket-up, bra-down, bra-up built from the
//                         components bound to x (bras are conjugated)
//   eta etainv idk idku   metric, inverse metric, identities on K and K^
//   NAME                  bound operator
//   (a+bi) 2.5            complex literals
//   adj(..) bar(..) tr(..)
//   + - *                 sums, scalar scaling
//   whitespace            juxtaposition
//
// Juxtaposition is evaluated left to right. Parallel slashes (bra-up next to
// ket-down, bra-down next to ket-up) contract as dual forms; an empty angle
// (bra-down next to ket-down, bra-up next to ket-up) gets the metric or its
// inverse inserted. A ket followed by a bra is a rank-1 operator.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "braket/opalg.hpp"

namespace braket {

class Environment {
 public:
  explicit Environment(MetricOperator metric) : metric_(std::move(metric)) {}

  Eigen::Index dimension() const { return metric_.dim(); }
  const MetricOperator& metric() const { return metric_; }

  void bind_vector(const std::string& name, VarVector v);
  void bind_operator(const std::string& name, KindedOperator op);

  const std::map<std::string, VarVector>& vectors() const { return vectors_; }
  const std::map<std::string, KindedOperator>& operators() const { return operators_; }

  /// Ket components of a bound vector (bras are conjugated back).
  const VarVector& vector(const std::string& name) const;
  const KindedOperator& op(const std::string& name) const;

 private:
  MetricOperator metric_;
  std::map<std::string, VarVector> vectors_;
  std::map<std::string, KindedOperator> operators_;
};

enum class NodeKind {
  Ket,
  Bra,
  OpRef,
  Metric,
  MetricInv,
  IdDown,
  IdUp,
  Juxt,
  Sum,
  Scale,
  Adj,
  Bar,
  Trace,
};

struct ExprAst {
  NodeKind kind = NodeKind::Juxt;
  std::string name;                         // Ket, Bra, OpRef
  Variance variance = Variance::KetDown;    // Ket, Bra
  Complex factor{1.0, 0.0};                 // Scale
  std::vector<ExprAst> children;            // Juxt, Sum, Scale (0 or 1), Adj, Bar, Trace
  std::vector<int> signs;                   // Sum, one per child
  std::size_t position = 0;
};

ExprAst parse(std::string_view src);

/// Compact textual form, e.g. "Juxt[BraDown x, KetDown y]".
std::string describe(const ExprAst& ast);

using Value = std::variant<Complex, VarVector, KindedOperator>;

Value eval(const ExprAst& ast, const Environment& env);
inline Value eval(std::string_view src, const Environment& env) { return eval(parse(src), env); }

}  // namespace braket
