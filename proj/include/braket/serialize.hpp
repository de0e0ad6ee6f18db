#pragma once

// JSON encoding of matrices, representation bundles and DSL environments.
//
//   matrix:      {"rows": R, "cols": C, "data": [[re, im], ...]}  (row-major)
//   rep:         {"twice_j1", "twice_j2" (absent for [j]), "epsilon", "basis",
//                 "dim", "metric", "generators": {"M","N","I","K"},
//                 "signature", "labels"}
//   environment: {"dimension", "metric",
//                 "vectors":   {name: {"variance", "components": [[re, im], ...]}},
//                 "operators": {name: {"kind", "matrix"}}}
//
// Doubles are printed in shortest round-trip form, so decoding what was
// encoded reproduces every bit. Malformed input raises SchemaError.

#include <string>
#include <string_view>

#include "json.hpp"

#include "braket/dsl.hpp"
#include "braket/repsl2c.hpp"

namespace braket {

using Json = nlohmann::ordered_json;

Json to_json(const ComplexMatrix& m);
Json to_json(const ComplexVector& v);
Json to_json(const VarVector& v);
Json to_json(const KindedOperator& op);
Json to_json(const BasisLabel& label, RepBasis basis);
Json to_json(const CoupledRep& rep);
Json to_json(const Environment& env);
Json to_json(const Value& value);

ComplexMatrix matrix_from_json(const Json& j);
ComplexVector vector_from_json(const Json& j);
CoupledRep rep_from_json(const Json& j);
Environment environment_from_json(const Json& j);

/// Parses text, mapping parse errors to SchemaError.
Json parse_json(std::string_view text);

std::string serialize(const ComplexMatrix& m);
std::string serialize(const CoupledRep& rep);
std::string serialize(const Environment& env);

ComplexMatrix deserialize_matrix(std::string_view text);
CoupledRep deserialize_rep(std::string_view text);
Environment deserialize_environment(std::string_view text);

/// Exact equality of every serialized field.
bool same_rep(const CoupledRep& a, const CoupledRep& b);

}  // namespace braket
