#include "braket/dsl.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>

namespace braket {

// ---------------------------------------------------------------------------
// Environment

void Environment::bind_vector(const std::string& name, VarVector v) {
  if (v.dim() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "vector '" + name + "' has length " +
                                                  std::to_string(v.dim()) + ", environment " +
                                                  std::to_string(dimension()));
  }
  vectors_[name] = std::move(v);
}

void Environment::bind_operator(const std::string& name, KindedOperator op) {
  if (op.dim() != dimension()) {
    throw Error(ErrorCode::DimensionMismatch, "operator '" + name + "' has dimension " +
                                                  std::to_string(op.dim()) + ", environment " +
                                                  std::to_string(dimension()));
  }
  operators_[name] = std::move(op);
}

const VarVector& Environment::vector(const std::string& name) const {
  const auto it = vectors_.find(name);
  if (it == vectors_.end()) throw Error(ErrorCode::UnboundName, "no vector named '" + name + "'");
  return it->second;
}

const KindedOperator& Environment::op(const std::string& name) const {
  const auto it = operators_.find(name);
  if (it == operators_.end()) {
    throw Error(ErrorCode::UnboundName, "no operator named '" + name + "'");
  }
  return it->second;
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok { Literal, Vector, Keyword, Func, Ident, LParen, RParen, Plus, Minus, Star, End };

struct Token {
  Tok type = Tok::End;
  std::string text;  // identifier / keyword / function / vector name
  Variance variance = Variance::KetDown;
  Complex value;
  std::size_t pos = 0;
};

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      if (i_ >= src_.size()) {
        out.push_back({Tok::End, "", Variance::KetDown, {}, i_});
        return out;
      }
      out.push_back(next());
    }
  }

 private:
  void skip_space() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
  }

  void skip_space_at(std::size_t& j) const {
    while (j < src_.size() && std::isspace(static_cast<unsigned char>(src_[j]))) ++j;
  }

  // [digits][.digits][e[+-]digits] starting at j; advances j on success.
  std::optional<double> number_at(std::size_t& j) const {
    const std::size_t start = j;
    std::size_t k = j;
    bool digits = false;
    while (k < src_.size() && is_digit(src_[k])) ++k, digits = true;
    if (k < src_.size() && src_[k] == '.') {
      ++k;
      while (k < src_.size() && is_digit(src_[k])) ++k, digits = true;
    }
    if (!digits) return std::nullopt;
    if (k < src_.size() && (src_[k] == 'e' || src_[k] == 'E')) {
      std::size_t e = k + 1;
      if (e < src_.size() && (src_[e] == '+' || src_[e] == '-')) ++e;
      if (e < src_.size() && is_digit(src_[e])) {
        while (e < src_.size() && is_digit(src_[e])) ++e;
        k = e;
      }
    }
    double value = 0;
    const auto res = std::from_chars(src_.data() + start, src_.data() + k, value);
    if (res.ec != std::errc()) return std::nullopt;
    j = k;
    return value;
  }

  // Complex literal "(a)", "(bi)", "(a+bi)", "(a-i)", "(-i)" starting at '('.
  std::optional<Complex> complex_literal_at(std::size_t& j) const {
    std::size_t k = j + 1;
    skip_space_at(k);
    double sign0 = 1;
    if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) {
      sign0 = src_[k] == '-' ? -1 : 1;
      ++k;
      skip_space_at(k);
    }
    auto close = [&](Complex value) -> std::optional<Complex> {
      skip_space_at(k);
      if (k < src_.size() && src_[k] == ')') {
        j = k + 1;
        return value;
      }
      return std::nullopt;
    };
    auto imaginary_unit = [&]() {
      if (k < src_.size() && src_[k] == 'i' && (k + 1 >= src_.size() || !is_ident_char(src_[k + 1]))) {
        ++k;
        return true;
      }
      return false;
    };
    if (imaginary_unit()) return close({0, sign0});
    const auto first = number_at(k);
    if (!first) return std::nullopt;
    skip_space_at(k);
    if (imaginary_unit()) return close({0, sign0 * *first});
    if (k < src_.size() && src_[k] == ')') return close({sign0 * *first, 0});
    if (k < src_.size() && (src_[k] == '+' || src_[k] == '-')) {
      const double sign1 = src_[k] == '-' ? -1 : 1;
      ++k;
      skip_space_at(k);
      double im = 1;
      if (const auto second = number_at(k)) im = *second;
      skip_space_at(k);
      if (!imaginary_unit()) return std::nullopt;
      return close({sign0 * *first, sign1 * im});
    }
    return std::nullopt;
  }

  std::string ident_at(std::size_t& j) const {
    const std::size_t start = j;
    while (j < src_.size() && is_ident_char(src_[j])) ++j;
    return std::string(src_.substr(start, j - start));
  }

  Token next() {
    const std::size_t pos = i_;
    const char c = src_[i_];
    switch (c) {
      case '(': {
        std::size_t j = i_;
        if (const auto lit = complex_literal_at(j)) {
          i_ = j;
          return {Tok::Literal, "", Variance::KetDown, *lit, pos};
        }
        ++i_;
        return {Tok::LParen, "(", Variance::KetDown, {}, pos};
      }
      case ')': ++i_; return {Tok::RParen, ")", Variance::KetDown, {}, pos};
      case '+': ++i_; return {Tok::Plus, "+", Variance::KetDown, {}, pos};
      case '-': ++i_; return {Tok::Minus, "-", Variance::KetDown, {}, pos};
      case '*': ++i_; return {Tok::Star, "*", Variance::KetDown, {}, pos};
      default: break;
    }
    if (is_digit(c) || c == '.') {
      std::size_t j = i_;
      if (const auto v = number_at(j)) {
        i_ = j;
        return {Tok::Literal, "", Variance::KetDown, {*v, 0}, pos};
      }
      throw Error(ErrorCode::SyntaxError, "malformed number", pos);
    }
    if (is_ident_start(c)) {
      std::size_t j = i_;
      std::string word = ident_at(j);
      if (j < src_.size() && src_[j] == ':') {
        Variance v;
        if (word == "kd") {
          v = Variance::KetDown;
        } else if (word == "ku") {
          v = Variance::KetUp;
        } else if (word == "bd") {
          v = Variance::BraDown;
        } else if (word == "bu") {
          v = Variance::BraUp;
        } else {
          throw Error(ErrorCode::UnknownToken, "unknown vector prefix '" + word + ":'", pos);
        }
        ++j;
        if (j >= src_.size() || !is_ident_start(src_[j])) {
          throw Error(ErrorCode::SyntaxError, "'" + word + ":' must be followed by a name", pos);
        }
        std::string name = ident_at(j);
        i_ = j;
        return {Tok::Vector, std::move(name), v, {}, pos};
      }
      i_ = j;
      if (word == "eta" || word == "etainv" || word == "idk" || word == "idku") {
        return {Tok::Keyword, std::move(word), Variance::KetDown, {}, pos};
      }
      if (word == "adj" || word == "bar" || word == "tr") {
        return {Tok::Func, std::move(word), Variance::KetDown, {}, pos};
      }
      return {Tok::Ident, std::move(word), Variance::KetDown, {}, pos};
    }
    throw Error(ErrorCode::UnknownToken, std::string("unexpected character '") + c + "'", pos);
  }

  std::string_view src_;
  std::size_t i_ = 0;
};

// ---------------------------------------------------------------------------
// Parser

constexpr int kMaxDepth = 256;

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  ExprAst run() {
    if (peek().type == Tok::End) throw Error(ErrorCode::SyntaxError, "empty expression", 0);
    ExprAst e = sum();
    if (peek().type != Tok::End) {
      throw Error(ErrorCode::SyntaxError, "unexpected '" + token_text(peek()) + "'", peek().pos);
    }
    return e;
  }

 private:
  const Token& peek() const { return toks_[k_]; }
  Token take() { return toks_[k_ == toks_.size() - 1 ? k_ : k_++]; }

  static std::string token_text(const Token& t) {
    if (t.type == Tok::End) return "end of input";
    if (t.type == Tok::Literal) return "literal";
    return t.text;
  }

  static bool starts_atom(Tok t) {
    return t == Tok::Literal || t == Tok::Vector || t == Tok::Keyword || t == Tok::Func ||
           t == Tok::Ident || t == Tok::LParen;
  }

  struct DepthGuard {
    explicit DepthGuard(Parser& p, std::size_t pos) : parser(p) {
      if (++parser.depth_ > kMaxDepth) {
        throw Error(ErrorCode::SyntaxError, "expression nested too deeply", pos);
      }
    }
    ~DepthGuard() { --parser.depth_; }
    Parser& parser;
  };

  ExprAst sum() {
    DepthGuard guard(*this, peek().pos);
    ExprAst node;
    node.kind = NodeKind::Sum;
    node.position = peek().pos;
    int sign = 1;
    if (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      sign = take().type == Tok::Minus ? -1 : 1;
    }
    node.children.push_back(juxt());
    node.signs.push_back(sign);
    while (peek().type == Tok::Plus || peek().type == Tok::Minus) {
      sign = take().type == Tok::Minus ? -1 : 1;
      node.children.push_back(juxt());
      node.signs.push_back(sign);
    }
    if (node.children.size() == 1 && node.signs.front() == 1) return std::move(node.children.front());
    return node;
  }

  ExprAst juxt() {
    ExprAst node;
    node.kind = NodeKind::Juxt;
    node.position = peek().pos;
    if (!starts_atom(peek().type)) {
      throw Error(ErrorCode::SyntaxError, "expected an operand, got '" + token_text(peek()) + "'",
                  peek().pos);
    }
    while (starts_atom(peek().type)) node.children.push_back(scaled());
    if (node.children.size() == 1) return std::move(node.children.front());
    return node;
  }

  static bool is_literal(const ExprAst& e) { return e.kind == NodeKind::Scale && e.children.empty(); }

  ExprAst scaled() {
    ExprAst left = atom();
    while (peek().type == Tok::Star) {
      const std::size_t pos = take().pos;
      if (!starts_atom(peek().type)) {
        throw Error(ErrorCode::SyntaxError, "'*' needs a right operand", pos);
      }
      ExprAst right = atom();
      ExprAst node;
      node.position = pos;
      if (is_literal(left) && !is_literal(right)) {
        node.kind = NodeKind::Scale;
        node.factor = left.factor;
        node.children.push_back(std::move(right));
      } else if (is_literal(right) && !is_literal(left)) {
        node.kind = NodeKind::Scale;
        node.factor = right.factor;
        node.children.push_back(std::move(left));
      } else if (is_literal(left) && is_literal(right)) {
        node.kind = NodeKind::Scale;
        node.factor = left.factor * right.factor;
      } else {
        node.kind = NodeKind::Juxt;
        node.children.push_back(std::move(left));
        node.children.push_back(std::move(right));
      }
      left = std::move(node);
    }
    return left;
  }

  ExprAst atom() {
    const Token t = take();
    ExprAst node;
    node.position = t.pos;
    switch (t.type) {
      case Tok::Literal:
        node.kind = NodeKind::Scale;
        node.factor = t.value;
        return node;
      case Tok::Vector:
        node.kind = is_ket(t.variance) ? NodeKind::Ket : NodeKind::Bra;
        node.variance = t.variance;
        node.name = t.text;
        return node;
      case Tok::Keyword:
        node.kind = t.text == "eta"      ? NodeKind::Metric
                    : t.text == "etainv" ? NodeKind::MetricInv
                    : t.text == "idk"    ? NodeKind::IdDown
                                         : NodeKind::IdUp;
        return node;
      case Tok::Ident:
        node.kind = NodeKind::OpRef;
        node.name = t.text;
        return node;
      case Tok::Func: {
        node.kind = t.text == "adj" ? NodeKind::Adj : t.text == "bar" ? NodeKind::Bar : NodeKind::Trace;
        if (peek().type != Tok::LParen) {
          throw Error(ErrorCode::SyntaxError, t.text + " must be followed by '('", peek().pos);
        }
        take();
        node.children.push_back(sum());
        expect_close(t.pos);
        return node;
      }
      case Tok::LParen: {
        ExprAst inner = sum();
        expect_close(t.pos);
        return inner;
      }
      default:
        throw Error(ErrorCode::SyntaxError, "unexpected '" + token_text(t) + "'", t.pos);
    }
  }

  void expect_close(std::size_t open_pos) {
    if (peek().type != Tok::RParen) {
      throw Error(ErrorCode::SyntaxError,
                  "unclosed '(' opened at " + std::to_string(open_pos), peek().pos);
    }
    take();
  }

  std::vector<Token> toks_;
  std::size_t k_ = 0;
  int depth_ = 0;
};

}  // namespace

ExprAst parse(std::string_view src) { return Parser(Lexer(src).run()).run(); }

std::string describe(const ExprAst& ast) {
  std::ostringstream out;
  auto list = [&](const char* head) {
    out << head << '[';
    for (std::size_t k = 0; k < ast.children.size(); ++k) {
      if (k) out << ", ";
      if (ast.kind == NodeKind::Sum && ast.signs[k] < 0) out << '-';
      out << describe(ast.children[k]);
    }
    out << ']';
  };
  switch (ast.kind) {
    case NodeKind::Ket:
    case NodeKind::Bra: out << to_string(ast.variance) << ' ' << ast.name; break;
    case NodeKind::OpRef: out << "Op " << ast.name; break;
    case NodeKind::Metric: out << "Metric"; break;
    case NodeKind::MetricInv: out << "MetricInv"; break;
    case NodeKind::IdDown: out << "IdDown"; break;
    case NodeKind::IdUp: out << "IdUp"; break;
    case NodeKind::Juxt: list("Juxt"); break;
    case NodeKind::Sum: list("Sum"); break;
    case NodeKind::Scale:
      out << "Scale(" << ast.factor.real() << (ast.factor.imag() < 0 ? "" : "+")
          << ast.factor.imag() << "i";
      if (!ast.children.empty()) out << ", " << describe(ast.children.front());
      out << ')';
      break;
    case NodeKind::Adj: list("Adj"); break;
    case NodeKind::Bar: list("Bar"); break;
    case NodeKind::Trace: list("Trace"); break;
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Evaluator

namespace {

std::string describe_value(const Value& v) {
  if (std::holds_alternative<Complex>(v)) return "scalar";
  if (const auto* vec = std::get_if<VarVector>(&v)) return std::string(to_string(vec->variance));
  return std::string(to_string(std::get<KindedOperator>(v).kind)) + " operator";
}

[[noreturn]] void variance_error(const Value& a, const Value& b, std::size_t pos) {
  throw Error(ErrorCode::VarianceError,
              "cannot juxtapose " + describe_value(a) + " with " + describe_value(b), pos);
}

// Ket space a bra is a functional on.
Variance bra_target(Variance bra) {
  return bra == Variance::BraUp ? Variance::KetDown : Variance::KetUp;
}

Variance bra_on(Variance ket_space) {
  return ket_space == Variance::KetDown ? Variance::BraUp : Variance::BraDown;
}

// The metric factor between a bra and a ket-space output: identity for
// parallel slashes, eta or eta^-1 for an empty angle.
const ComplexMatrix* angle_metric(Variance bra, Variance ket_space, const Environment& env) {
  if (bra_target(bra) == ket_space) return nullptr;
  return bra == Variance::BraDown ? &env.metric().eta() : &env.metric().eta_inv();
}

Value scale_value(Complex alpha, const Value& v) {
  if (const auto* c = std::get_if<Complex>(&v)) return alpha * *c;
  if (const auto* vec = std::get_if<VarVector>(&v)) {
    return VarVector{alpha * vec->components, vec->variance};
  }
  return scale(alpha, std::get<KindedOperator>(v));
}

Value juxtapose(const Value& a, const Value& b, const Environment& env, std::size_t pos) {
  if (const auto* c = std::get_if<Complex>(&a)) return scale_value(*c, b);
  if (const auto* c = std::get_if<Complex>(&b)) return scale_value(*c, a);

  if (const auto* va = std::get_if<VarVector>(&a)) {
    if (const auto* vb = std::get_if<VarVector>(&b)) {
      if (is_bra(va->variance) && is_ket(vb->variance)) {
        const ComplexMatrix* g = angle_metric(va->variance, vb->variance, env);
        if (g == nullptr) return dual_form(*va, *vb);
        return Complex((va->components.transpose() * (*g) * vb->components)(0, 0));
      }
      if (is_ket(va->variance) && is_bra(vb->variance)) {
        return KindedOperator(va->components * vb->components.transpose(),
                              kind_between(bra_target(vb->variance), va->variance));
      }
      variance_error(a, b, pos);
    }
    const auto& op = std::get<KindedOperator>(b);
    if (!is_bra(va->variance)) variance_error(a, b, pos);
    const ComplexMatrix* g = angle_metric(va->variance, output_variance(op.kind), env);
    ComplexVector row = g ? ComplexVector(op.mat.transpose() * (g->transpose() * va->components))
                          : ComplexVector(op.mat.transpose() * va->components);
    return VarVector{std::move(row), bra_on(input_variance(op.kind))};
  }

  const auto& op = std::get<KindedOperator>(a);
  if (const auto* vb = std::get_if<VarVector>(&b)) {
    if (!is_ket(vb->variance) || vb->variance != input_variance(op.kind)) variance_error(a, b, pos);
    return apply(op, *vb);
  }
  const auto& rhs = std::get<KindedOperator>(b);
  if (output_variance(rhs.kind) != input_variance(op.kind)) variance_error(a, b, pos);
  return compose(op, rhs);
}

Value add_values(const Value& a, const Value& b, std::size_t pos) {
  if (a.index() != b.index()) variance_error(a, b, pos);
  if (const auto* c = std::get_if<Complex>(&a)) return *c + std::get<Complex>(b);
  if (const auto* va = std::get_if<VarVector>(&a)) {
    const auto& vb = std::get<VarVector>(b);
    if (va->variance != vb.variance) variance_error(a, b, pos);
    if (va->dim() != vb.dim()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
    return VarVector{va->components + vb.components, va->variance};
  }
  return add(std::get<KindedOperator>(a), std::get<KindedOperator>(b));
}

VarVector resolve_vector(const ExprAst& node, const Environment& env) {
  const VarVector& bound = env.vector(node.name);
  // Bound bras store conjugated components; recover the ket components.
  const ComplexVector ket = is_ket(bound.variance) ? bound.components
                                                   : ComplexVector(bound.components.conjugate());
  if (is_ket(node.variance)) return {ket, node.variance};
  return {ket.conjugate(), node.variance};
}

Value eval_node(const ExprAst& node, const Environment& env) {
  switch (node.kind) {
    case NodeKind::Ket:
    case NodeKind::Bra: return resolve_vector(node, env);
    case NodeKind::OpRef: return env.op(node.name);
    case NodeKind::Metric: return metric_op(env.metric());
    case NodeKind::MetricInv: return inverse_metric_op(env.metric());
    case NodeKind::IdDown: return identity_down(env.dimension());
    case NodeKind::IdUp: return identity_up(env.dimension());
    case NodeKind::Juxt: {
      if (node.children.empty()) throw Error(ErrorCode::SyntaxError, "empty chain", node.position);
      Value acc = eval_node(node.children.front(), env);
      for (std::size_t k = 1; k < node.children.size(); ++k) {
        acc = juxtapose(acc, eval_node(node.children[k], env), env, node.children[k].position);
      }
      return acc;
    }
    case NodeKind::Sum: {
      if (node.children.empty() || node.signs.size() != node.children.size()) {
        throw Error(ErrorCode::SyntaxError, "malformed sum", node.position);
      }
      Value acc = scale_value(double(node.signs[0]), eval_node(node.children[0], env));
      for (std::size_t k = 1; k < node.children.size(); ++k) {
        acc = add_values(acc, scale_value(double(node.signs[k]), eval_node(node.children[k], env)),
                         node.children[k].position);
      }
      return acc;
    }
    case NodeKind::Scale:
      if (node.children.empty()) return node.factor;
      return scale_value(node.factor, eval_node(node.children.front(), env));
    case NodeKind::Adj: {
      const Value v = eval_node(node.children.at(0), env);
      if (const auto* c = std::get_if<Complex>(&v)) return std::conj(*c);
      if (const auto* vec = std::get_if<VarVector>(&v)) {
        return is_ket(vec->variance) ? relate_bra(*vec) : relate_ket(*vec);
      }
      return hermitian_adjoint(std::get<KindedOperator>(v));
    }
    case NodeKind::Bar: {
      const Value v = eval_node(node.children.at(0), env);
      if (const auto* c = std::get_if<Complex>(&v)) return std::conj(*c);
      if (const auto* op = std::get_if<KindedOperator>(&v)) return dirac_adjoint(*op, env.metric());
      throw Error(ErrorCode::VarianceError, "bar() applies to operators and scalars",
                  node.position);
    }
    case NodeKind::Trace: {
      const Value v = eval_node(node.children.at(0), env);
      if (const auto* op = std::get_if<KindedOperator>(&v)) return trace(*op);
      throw Error(ErrorCode::VarianceError, "tr() applies to operators", node.position);
    }
  }
  throw Error(ErrorCode::SyntaxError, "unknown node", node.position);
}

}  // namespace

Value eval(const ExprAst& ast, const Environment& env) { return eval_node(ast, env); }

}  // namespace braket
