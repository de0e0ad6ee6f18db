#include "braket/serialize.hpp"

#include <cmath>
#include <cstdint>

namespace braket {

namespace {

// Integral values print without a fractional part ("1" rather than "1.0");
// everything else keeps the shortest round-trip double form.
Json number(double x) {
  if (std::isfinite(x) && std::trunc(x) == x && std::abs(x) < 9.0e15 &&
      !(x == 0.0 && std::signbit(x))) {
    return static_cast<std::int64_t>(x);
  }
  return x;
}

[[noreturn]] void schema_error(const std::string& what) {
  throw Error(ErrorCode::SchemaError, what);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) schema_error(std::string("expected an object holding '") + key + "'");
  const auto it = j.find(key);
  if (it == j.end()) schema_error(std::string("missing field '") + key + "'");
  return *it;
}

double real_of(const Json& j, const char* what) {
  if (!j.is_number()) schema_error(std::string(what) + " must be a number");
  return j.get<double>();
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) schema_error(std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < -1000000 || v > 1000000) schema_error(std::string(what) + " out of range");
  return static_cast<int>(v);
}

Complex complex_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) schema_error("complex entries are [re, im] pairs");
  return {real_of(j[0], "real part"), real_of(j[1], "imaginary part")};
}

Json complex_json(Complex z) { return Json::array({number(z.real()), number(z.imag())}); }

Triplet triplet_from_json(const Json& j, Eigen::Index dim) {
  if (!j.is_array() || j.size() != 3) schema_error("generator families hold three matrices");
  Triplet out;
  for (int a = 0; a < 3; ++a) {
    out[a] = matrix_from_json(j[a]);
    if (out[a].rows() != dim || out[a].cols() != dim) schema_error("generator size mismatch");
  }
  return out;
}

Json triplet_json(const Triplet& t) {
  Json out = Json::array();
  for (const auto& m : t) out.push_back(to_json(m));
  return out;
}

BasisLabel label_from_json(const Json& j, RepBasis basis) {
  BasisLabel label;
  if (basis == RepBasis::Orthonormal) {
    label.parity = int_of(field(j, "parity"), "parity");
    if (label.parity != 1 && label.parity != -1) schema_error("parity must be +-1");
  }
  const Json& block = field(j, "block");
  if (!block.is_array() || block.size() != 2) schema_error("block is a pair of twice-weights");
  label.twice_left = int_of(block[0], "block");
  label.twice_right = int_of(block[1], "block");
  if (basis == RepBasis::Canonical) {
    const Json& lam = field(j, "twice_lambda");
    if (!lam.is_array() || lam.size() != 2) schema_error("twice_lambda is a pair");
    label.twice_first = int_of(lam[0], "twice_lambda");
    label.twice_second = int_of(lam[1], "twice_lambda");
  } else {
    label.twice_first = int_of(field(j, "twice_s"), "twice_s");
    label.twice_second = int_of(field(j, "twice_sigma"), "twice_sigma");
  }
  return label;
}

}  // namespace

Json to_json(const ComplexMatrix& m) {
  Json data = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) data.push_back(complex_json(m(i, j)));
  }
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["data"] = std::move(data);
  return out;
}

Json to_json(const ComplexVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_json(v(i)));
  return out;
}

Json to_json(const VarVector& v) {
  Json out;
  out["variance"] = std::string(to_string(v.variance));
  out["components"] = to_json(v.components);
  return out;
}

Json to_json(const KindedOperator& op) {
  Json out;
  out["kind"] = std::string(to_string(op.kind));
  out["matrix"] = to_json(op.mat);
  return out;
}

Json to_json(const BasisLabel& label, RepBasis basis) {
  Json out;
  if (basis == RepBasis::Orthonormal) out["parity"] = label.parity;
  out["block"] = Json::array({label.twice_left, label.twice_right});
  if (basis == RepBasis::Canonical) {
    out["twice_lambda"] = Json::array({label.twice_first, label.twice_second});
  } else {
    out["twice_s"] = label.twice_first;
    out["twice_sigma"] = label.twice_second;
  }
  return out;
}

Json to_json(const CoupledRep& rep) {
  Json out;
  out["twice_j1"] = rep.j1.twice();
  if (!rep.diagonal) out["twice_j2"] = rep.j2.twice();
  out["epsilon"] = rep.epsilon;
  out["basis"] = std::string(to_string(rep.basis));
  out["dim"] = rep.dim();
  out["metric"] = to_json(rep.metric.eta());
  Json gens;
  gens["M"] = triplet_json(rep.M);
  gens["N"] = triplet_json(rep.N);
  gens["I"] = triplet_json(rep.I);
  gens["K"] = triplet_json(rep.K);
  out["generators"] = std::move(gens);
  const Signature sig = rep_signature(rep);
  out["signature"] = Json::array({sig.n_plus, sig.n_minus});
  Json labels = Json::array();
  for (const auto& label : rep.labels) labels.push_back(to_json(label, rep.basis));
  out["labels"] = std::move(labels);
  return out;
}

Json to_json(const Environment& env) {
  Json out;
  out["dimension"] = env.dimension();
  out["metric"] = to_json(env.metric().eta());
  Json vectors = Json::object();
  for (const auto& [name, v] : env.vectors()) vectors[name] = to_json(v);
  out["vectors"] = std::move(vectors);
  Json ops = Json::object();
  for (const auto& [name, op] : env.operators()) ops[name] = to_json(op);
  out["operators"] = std::move(ops);
  return out;
}

Json to_json(const Value& value) {
  Json out;
  if (const auto* c = std::get_if<Complex>(&value)) {
    out["type"] = "scalar";
    out["value"] = complex_json(*c);
  } else if (const auto* v = std::get_if<VarVector>(&value)) {
    out["type"] = "vector";
    out["variance"] = std::string(to_string(v->variance));
    out["components"] = to_json(v->components);
  } else {
    const auto& op = std::get<KindedOperator>(value);
    out["type"] = "operator";
    out["kind"] = std::string(to_string(op.kind));
    out["matrix"] = to_json(op.mat);
  }
  return out;
}

ComplexMatrix matrix_from_json(const Json& j) {
  const int rows = int_of(field(j, "rows"), "rows");
  const int cols = int_of(field(j, "cols"), "cols");
  if (rows < 1 || cols < 1) schema_error("rows and cols must be positive");
  const Json& data = field(j, "data");
  if (!data.is_array() || data.size() != static_cast<std::size_t>(rows) * cols) {
    schema_error("data must hold rows*cols entries");
  }
  ComplexMatrix m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) m(r, c) = complex_of(data[r * cols + c]);
  }
  return m;
}

ComplexVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) schema_error("components must be a non-empty array");
  ComplexVector v(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) v(i) = complex_of(j[i]);
  return v;
}

CoupledRep rep_from_json(const Json& j) {
  CoupledRep rep;
  try {
    rep.j1 = Weight(int_of(field(j, "twice_j1"), "twice_j1"));
    rep.diagonal = !j.contains("twice_j2");
    rep.j2 = rep.diagonal ? rep.j1 : Weight(int_of(field(j, "twice_j2"), "twice_j2"));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema_error(e.what());
  }
  rep.epsilon = int_of(field(j, "epsilon"), "epsilon");
  if (rep.epsilon != 1 && rep.epsilon != -1) schema_error("epsilon must be +-1");
  const Json& basis = field(j, "basis");
  if (!basis.is_string()) schema_error("basis must be a string");
  rep.basis = rep_basis_from_string(basis.get<std::string>());

  const int dim = int_of(field(j, "dim"), "dim");
  const int d1 = rep.j1.multiplicity();
  const int d2 = rep.j2.multiplicity();
  const int expected = rep.diagonal ? d1 * d1 : 2 * d1 * d2;
  if (dim != expected) schema_error("dim disagrees with the weights");

  try {
    rep.metric = MetricOperator(matrix_from_json(field(j, "metric")));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema_error(std::string("invalid metric: ") + e.what());
  }
  if (rep.metric.dim() != dim) schema_error("metric size disagrees with dim");

  const Json& gens = field(j, "generators");
  rep.M = triplet_from_json(field(gens, "M"), dim);
  rep.N = triplet_from_json(field(gens, "N"), dim);
  rep.I = triplet_from_json(field(gens, "I"), dim);
  rep.K = triplet_from_json(field(gens, "K"), dim);

  const Json& labels = field(j, "labels");
  if (!labels.is_array() || labels.size() != static_cast<std::size_t>(dim)) {
    schema_error("labels must hold one record per basis vector");
  }
  for (const auto& label : labels) rep.labels.push_back(label_from_json(label, rep.basis));

  const Json& sig = field(j, "signature");
  if (!sig.is_array() || sig.size() != 2) schema_error("signature is a pair");
  return rep;
}

Environment environment_from_json(const Json& j) {
  try {
    const int dim = int_of(field(j, "dimension"), "dimension");
    Environment env{MetricOperator(matrix_from_json(field(j, "metric")))};
    if (env.dimension() != dim) schema_error("metric size disagrees with dimension");
    if (j.contains("vectors")) {
      const Json& vectors = j["vectors"];
      if (!vectors.is_object()) schema_error("vectors must be an object");
      for (const auto& [name, entry] : vectors.items()) {
        Variance variance = Variance::KetDown;
        if (entry.is_object() && entry.contains("variance")) {
          if (!entry["variance"].is_string()) schema_error("variance must be a string");
          variance = variance_from_string(entry["variance"].get<std::string>());
        }
        env.bind_vector(name, {vector_from_json(field(entry, "components")), variance});
      }
    }
    if (j.contains("operators")) {
      const Json& ops = j["operators"];
      if (!ops.is_object()) schema_error("operators must be an object");
      for (const auto& [name, entry] : ops.items()) {
        OperatorKind kind = OperatorKind::DownDown;
        if (entry.is_object() && entry.contains("kind")) {
          if (!entry["kind"].is_string()) schema_error("kind must be a string");
          kind = kind_from_string(entry["kind"].get<std::string>());
        }
        const ComplexMatrix m = matrix_from_json(field(entry, "matrix"));
        if (m.rows() != m.cols()) schema_error("operator '" + name + "' is not square");
        env.bind_operator(name, {m, kind});
      }
    }
    return env;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::SchemaError) throw;
    schema_error(e.what());
  }
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::exception& e) {
    schema_error(std::string("malformed JSON: ") + e.what());
  }
}

std::string serialize(const ComplexMatrix& m) { return to_json(m).dump(); }
std::string serialize(const CoupledRep& rep) { return to_json(rep).dump(); }
std::string serialize(const Environment& env) { return to_json(env).dump(); }

ComplexMatrix deserialize_matrix(std::string_view text) { return matrix_from_json(parse_json(text)); }
CoupledRep deserialize_rep(std::string_view text) { return rep_from_json(parse_json(text)); }
Environment deserialize_environment(std::string_view text) {
  return environment_from_json(parse_json(text));
}

bool same_rep(const CoupledRep& a, const CoupledRep& b) {
  auto same_triplet = [](const Triplet& x, const Triplet& y) {
    for (int k = 0; k < 3; ++k) {
      if (x[k].rows() != y[k].rows() || x[k].cols() != y[k].cols() || x[k] != y[k]) return false;
    }
    return true;
  };
  return a.j1 == b.j1 && a.j2 == b.j2 && a.diagonal == b.diagonal && a.epsilon == b.epsilon &&
         a.basis == b.basis && a.metric.eta().rows() == b.metric.eta().rows() &&
         a.metric.eta() == b.metric.eta() && same_triplet(a.M, b.M) && same_triplet(a.N, b.N) &&
         same_triplet(a.I, b.I) && same_triplet(a.K, b.K) && a.labels == b.labels;
}

}  // namespace braket
