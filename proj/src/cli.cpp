#include "braket/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "braket/serialize.hpp"

namespace braket {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::SchemaError, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// "0.5", "-1.5", "1/2", "-3/2".
HalfInt parse_half_int(const std::string& text) {
  try {
    std::size_t used = 0;
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
      const long num = std::stol(text.substr(0, slash), &used);
      if (used != slash) throw std::invalid_argument(text);
      const std::string den_text = text.substr(slash + 1);
      const long den = std::stol(den_text, &used);
      if (used != den_text.size() || (den != 1 && den != 2)) throw std::invalid_argument(text);
      return {static_cast<int>(den == 1 ? 2 * num : num)};
    }
    const double value = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return HalfInt::from_real(value);
  } catch (const std::logic_error&) {
    throw Error(ErrorCode::InvalidWeights, "'" + text + "' is not a half-integer");
  }
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << '\n'; }

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bra-ket calculus on coupled vector spaces with indefinite metric", "braket"};
  app.require_subcommand(1);

  int su2_twice_j = 0;
  auto* su2 = app.add_subcommand("su2", "Canonical su(2) generators J1, J2, J3");
  su2->add_option("--twice-j", su2_twice_j, "2j")->required()->check(CLI::NonNegativeNumber);

  std::string cg_j1, cg_l1, cg_j2, cg_l2, cg_s, cg_sigma;
  auto* cg = app.add_subcommand("cg", "Exact Clebsch-Gordan coefficient <j1 l1; j2 l2 | s sigma>");
  cg->add_option("--j1", cg_j1)->required();
  cg->add_option("--l1", cg_l1)->required();
  cg->add_option("--j2", cg_j2)->required();
  cg->add_option("--l2", cg_l2)->required();
  cg->add_option("--s", cg_s)->required();
  cg->add_option("--sigma", cg_sigma)->required();

  int rep_tj1 = 0;
  int rep_tj2 = 0;
  std::optional<int> rep_eps;
  std::string rep_basis = "canonical";
  auto* rep = app.add_subcommand("rep", "Coupled sl(2,C) representation bundle [j1,j2] or [j]");
  rep->add_option("--twice-j1", rep_tj1, "2 j1")->required()->check(CLI::NonNegativeNumber);
  rep->add_option("--twice-j2", rep_tj2, "2 j2")->required()->check(CLI::NonNegativeNumber);
  rep->add_option("--epsilon", rep_eps, "metric sign factor, +1 or -1")
      ->check(CLI::IsMember({1, -1}));
  rep->add_option("--basis", rep_basis)
      ->check(CLI::IsMember({"canonical", "rotation", "orthonormal"}));

  std::string sig_matrix;
  auto* sig = app.add_subcommand("signature", "Signature (n+, n-) of a hermitian matrix");
  sig->add_option("--matrix", sig_matrix)->required();

  std::string sym_matrix, sym_metric;
  double sym_tol = Tolerances{}.sym_tol;
  auto* sym = app.add_subcommand("check-symmetry", "Test U^+ eta U = eta");
  sym->add_option("--matrix", sym_matrix)->required();
  sym->add_option("--metric", sym_metric)->required();
  sym->add_option("--tol", sym_tol)->check(CLI::PositiveNumber);

  std::string eval_env, eval_expr;
  auto* ev = app.add_subcommand("eval", "Evaluate a bra-ket expression");
  ev->add_option("--env", eval_env)->required();
  ev->add_option("expr", eval_expr)->required();

  std::string tr_matrix, tr_metric, tr_t, tr_kind = "DownDown";
  auto* tr = app.add_subcommand("transform", "Apply a basis change to a metric and an operator");
  tr->add_option("--matrix", tr_matrix)->required();
  tr->add_option("--metric", tr_metric)->required();
  tr->add_option("--t", tr_t)->required();
  tr->add_option("--kind", tr_kind)->check(CLI::IsMember({"DownDown", "UpUp", "DownUp", "UpDown"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    if (!app.get_subcommands().empty()) {
      err << app.get_subcommands().front()->help();
    } else {
      err << app.help();
    }
    return 2;
  }

  try {
    if (su2->parsed()) {
      const Su2Irrep irrep = su2_generators(Weight(su2_twice_j));
      Json j;
      j["twice_j"] = su2_twice_j;
      j["J"] = Json::array({to_json(irrep.J[0]), to_json(irrep.J[1]), to_json(irrep.J[2])});
      emit(out, j);
    } else if (cg->parsed()) {
      const CGValue v = clebsch_gordan(parse_half_int(cg_j1), parse_half_int(cg_l1),
                                       parse_half_int(cg_j2), parse_half_int(cg_l2),
                                       parse_half_int(cg_s), parse_half_int(cg_sigma));
      Json j;
      j["sign"] = v.sign;
      j["squared"] = v.squared_string();
      emit(out, j);
    } else if (rep->parsed()) {
      const Weight j1(rep_tj1);
      const Weight j2(rep_tj2);
      const bool diagonal = j1 == j2;
      CoupledRep bundle = diagonal ? build_rep_diag(j1, rep_eps) : build_rep(j1, j2, rep_eps);
      const RepBasis basis = rep_basis_from_string(rep_basis);
      if (basis != RepBasis::Canonical) bundle = rotation_basis(bundle).rep;
      if (basis == RepBasis::Orthonormal) {
        // [j] is already orthonormal in its rotation basis.
        if (diagonal) {
          bundle.basis = RepBasis::Orthonormal;
          for (auto& label : bundle.labels) label.parity = 1;
        } else {
          bundle = orthonormal_basis(bundle);
        }
      }
      emit(out, to_json(bundle));
    } else if (sig->parsed()) {
      const Signature s = signature(deserialize_matrix(read_file(sig_matrix)));
      emit(out, Json::array({s.n_plus, s.n_minus}));
    } else if (sym->parsed()) {
      const ComplexMatrix u = deserialize_matrix(read_file(sym_matrix));
      const MetricOperator m(deserialize_matrix(read_file(sym_metric)));
      require_square(u, "check-symmetry");
      if (u.rows() != m.dim()) throw Error(ErrorCode::DimensionMismatch, "matrix vs metric");
      Json j;
      j["symmetry"] = is_symmetry(u, m, sym_tol);
      j["deviation"] = max_abs(u.adjoint() * m.eta() * u - m.eta());
      emit(out, j);
    } else if (ev->parsed()) {
      const Environment env = deserialize_environment(read_file(eval_env));
      emit(out, to_json(eval(eval_expr, env)));
    } else if (tr->parsed()) {
      const KindedOperator x(deserialize_matrix(read_file(tr_matrix)), kind_from_string(tr_kind));
      const MetricOperator m(deserialize_matrix(read_file(tr_metric)));
      const BasisChange bc(deserialize_matrix(read_file(tr_t)));
      Json j;
      j["metric"] = to_json(transform_metric(bc, m).eta());
      j["kind"] = tr_kind;
      j["matrix"] = to_json(transform_operator(bc, x).mat);
      emit(out, j);
    }
  } catch (const Error& e) {
    err << "error: " << e.what();
    if (e.position()) err << " (at offset " << *e.position() << ")";
    err << '\n';
    return 1;
  }
  return 0;
}

}  // namespace braket
