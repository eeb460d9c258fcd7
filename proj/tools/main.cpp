#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cstar/expr.hpp"
#include "cstar/factor.hpp"
#include "cstar/io.hpp"
#include "cstar/iso.hpp"
#include "cstar/ktheory.hpp"
#include "cstar/suite.hpp"

namespace {

using cstar::Json;

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

Json read_json_input(const std::string &path) {
  if (path == "-") {
    Json j;
    std::cin >> j;
    return j;
  }
  std::ifstream in(path);
  if (!in)
    throw cstar::ConfigError("cannot open input file '" + path + "'");
  Json j;
  in >> j;
  return j;
}

void emit(const Json &j) { std::cout << j.dump(2) << "\n"; }

struct CommonOptions {
  int n = 2;
  long budget = 1'000'000;
  double tol = 1e-12;
  bool pretty = false;
};

void add_symbolic_flags(CLI::App *cmd, CommonOptions &opts) {
  cmd->add_option("--n", opts.n, "alphabet size (generators s1..sn)")
      ->check(CLI::Range(2, 64));
  cmd->add_option("--budget", opts.budget,
                  "normal-form expansion budget in terms");
  cmd->add_flag("--pretty", opts.pretty, "human-readable output");
}

void add_numeric_flags(CLI::App *cmd, CommonOptions &opts) {
  cmd->add_option("--tol", opts.tol, "numeric tolerance (max-entry norm)");
  cmd->add_flag("--pretty", opts.pretty, "human-readable output");
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"exact workbench for Dye projections in Cuntz and matrix algebras"};
  app.require_subcommand(1);

  // --- symbolic element commands -------------------------------------------
  CommonOptions eval_opts;
  std::string eval_expr;
  auto *eval_cmd = app.add_subcommand("eval", "parse, evaluate and normalize an expression");
  add_symbolic_flags(eval_cmd, eval_opts);
  eval_cmd->add_option("expr", eval_expr, "expression text")->required();

  CommonOptions check_opts;
  std::string check_expr;
  auto *check_cmd = app.add_subcommand("check", "classify an element (projection/unitary/...)");
  add_symbolic_flags(check_cmd, check_opts);
  check_cmd->add_option("expr", check_expr, "expression text")->required();

  CommonOptions dye_opts;
  int dye_i = 1, dye_j = 2, dye_dim = 2;
  std::string dye_a;
  std::string dye_complex;
  auto *dye_cmd = app.add_subcommand("dye", "build the projection P_{i,j}(a)");
  add_symbolic_flags(dye_cmd, dye_opts);
  dye_cmd->add_option("--i", dye_i, "row index (1-based)")->required();
  dye_cmd->add_option("--j", dye_j, "column index (1-based)")->required();
  dye_cmd->add_option("--dim", dye_dim, "matrix dimension")->required();
  dye_cmd->add_option("--a", dye_a, "symbolic parameter expression");
  dye_cmd->add_option("--complex", dye_complex,
                      "numeric parameter 're,im' (machine-precision backend)");
  dye_cmd->add_option("--tol", dye_opts.tol, "numeric tolerance");

  CommonOptions eta_opts;
  std::string eta_file;
  auto *eta_cmd = app.add_subcommand("eta", "apply the word isomorphism to a matrix (JSON input)");
  add_symbolic_flags(eta_cmd, eta_opts);
  eta_cmd->add_option("--file", eta_file, "matrix JSON file, '-' for stdin")
      ->required();

  CommonOptions etainv_opts;
  std::string etainv_expr;
  auto *etainv_cmd = app.add_subcommand("eta-inv", "matrix picture (s_i' x s_j) of an element");
  add_symbolic_flags(etainv_cmd, etainv_opts);
  etainv_cmd->add_option("expr", etainv_expr, "expression text")->required();

  // --- numeric commands ------------------------------------------------------
  CommonOptions dec_opts;
  std::string dec_file;
  auto *dec_cmd = app.add_subcommand("decompose2", "closed-form parameters of a 2x2 projection");
  add_numeric_flags(dec_cmd, dec_opts);
  dec_cmd->add_option("--file", dec_file, "matrix JSON file, '-' for stdin")
      ->required();

  CommonOptions obs_opts;
  std::string obs_file;
  auto *obs_cmd = app.add_subcommand("obstruct3", "test whether a 3x3 projection lies in the Dye family");
  add_numeric_flags(obs_cmd, obs_opts);
  obs_cmd->add_option("--file", obs_file, "matrix JSON file, '-' for stdin")
      ->required();

  // --- class group commands --------------------------------------------------
  CommonOptions k0_opts;
  std::string k0_expr;
  auto *k0_cmd = app.add_subcommand("k0", "class of a degree-zero projection");
  add_symbolic_flags(k0_cmd, k0_opts);
  k0_cmd->add_option("expr", k0_expr, "expression text")->required();

  CommonOptions type_opts;
  std::string type_expr;
  auto *type_cmd = app.add_subcommand("type", "type of an involution (class of (1-z)/2)");
  add_symbolic_flags(type_cmd, type_opts);
  type_cmd->add_option("expr", type_expr, "expression text")->required();

  CommonOptions conj_opts;
  std::string conj_expr1, conj_expr2;
  auto *conj_cmd = app.add_subcommand("conjugate", "test whether two involutions are conjugate");
  add_symbolic_flags(conj_cmd, conj_opts);
  conj_cmd->add_option("expr1", conj_expr1, "first involution")->required();
  conj_cmd->add_option("expr2", conj_expr2, "second involution")->required();

  // --- factorization commands -------------------------------------------------
  CommonOptions diag_opts;
  std::string diag_alpha;
  std::string diag_variant = "12";
  auto *diag_cmd = app.add_subcommand("diag-identity", "verify the two-involution block identity in M_3");
  add_symbolic_flags(diag_cmd, diag_opts);
  diag_cmd->add_option("--alpha", diag_alpha, "unitary expression")->required();
  diag_cmd->add_option("--variant", diag_variant, "'12' or '13'")
      ->check(CLI::IsMember({"12", "13"}));

  CommonOptions asm_opts;
  std::string asm_alpha = "1", asm_gamma = "1";
  std::string asm_z1 = "1", asm_z2 = "1", asm_z3 = "1";
  auto *asm_cmd = app.add_subcommand("assemble41", "assemble the eleven-factor unitary decomposition");
  add_symbolic_flags(asm_cmd, asm_opts);
  asm_cmd->add_option("--alpha", asm_alpha, "unitary expression");
  asm_cmd->add_option("--gamma", asm_gamma, "unitary expression");
  asm_cmd->add_option("--z1", asm_z1, "involution expression");
  asm_cmd->add_option("--z2", asm_z2, "involution expression");
  asm_cmd->add_option("--z3", asm_z3, "involution expression");

  CommonOptions verify_opts;
  std::string verify_file;
  auto *verify_cmd = app.add_subcommand("verify-factorization", "check an ordered involution factorization");
  add_symbolic_flags(verify_cmd, verify_opts);
  verify_cmd->add_option("--file", verify_file,
                         "factorization JSON file, '-' for stdin")
      ->required();

  // --- suite -------------------------------------------------------------------
  cstar::SuiteConfig suite_cfg;
  std::vector<std::string> suite_only;
  bool suite_list = false;
  auto *suite_cmd = app.add_subcommand("suite", "run the verification suite");
  suite_cmd->add_option("--n-min", suite_cfg.n_min, "smallest alphabet size");
  suite_cmd->add_option("--n-max", suite_cfg.n_max, "largest alphabet size");
  suite_cmd->add_option("--budget", suite_cfg.budget, "expansion budget");
  suite_cmd->add_option("--tol", suite_cfg.tol, "numeric tolerance");
  suite_cmd->add_option("--seed", suite_cfg.seed, "RNG seed");
  suite_cmd->add_option("--pool", suite_cfg.pool_target,
                        "unitary samples per alphabet size");
  suite_cmd->add_option("--roundtrip-samples", suite_cfg.roundtrip_samples,
                        "random 2x2 projections");
  suite_cmd->add_option("--iso-pairs", suite_cfg.iso_pairs,
                        "random matrix pairs per alphabet size");
  suite_cmd->add_option("--instances", suite_cfg.factorization_instances,
                        "assembled factorization instances");
  suite_cmd->add_option("--only", suite_only, "run only the named checks");
  suite_cmd->add_flag("--list", suite_list, "list check names and exit");

  CLI11_PARSE(app, argc, argv);

  try {
    if (eval_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(eval_opts.budget);
      const auto x = cstar::parse_element(eval_expr, eval_opts.n);
      if (eval_opts.pretty)
        std::cout << x.str() << "\n";
      else
        emit(cstar::element_to_json(x));
      return kExitOk;
    }

    if (check_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(check_opts.budget);
      const auto x = cstar::parse_element(check_expr, check_opts.n);
      emit(cstar::flags_to_json(x.classify()));
      return kExitOk;
    }

    if (dye_cmd->parsed()) {
      if (!dye_complex.empty()) {
        std::istringstream in(dye_complex);
        double re = 0.0, im = 0.0;
        char comma = ',';
        if (!(in >> re >> comma >> im) || comma != ',')
          throw cstar::ConfigError("--complex expects 're,im'");
        const auto p =
            cstar::dye_numeric(dye_i, dye_j, {re, im}, dye_dim, dye_opts.tol);
        if (dye_opts.pretty)
          std::cout << cstar::pretty_complex_matrix(p);
        else
          emit(cstar::complex_matrix_to_json(p));
        return kExitOk;
      }
      if (dye_a.empty())
        throw cstar::ConfigError("dye needs --a <expr> or --complex re,im");
      cstar::ExpansionBudgetGuard guard(dye_opts.budget);
      const auto a = cstar::parse_element(dye_a, dye_opts.n);
      const auto p = cstar::dye(dye_i, dye_j, a, dye_dim);
      if (dye_opts.pretty)
        std::cout << cstar::pretty_matrix(p);
      else
        emit(cstar::matrix_to_json(p));
      return kExitOk;
    }

    if (eta_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(eta_opts.budget);
      const auto m = cstar::matrix_from_json(read_json_input(eta_file));
      const auto x = cstar::eta(m);
      if (eta_opts.pretty)
        std::cout << x.str() << "\n";
      else
        emit(cstar::element_to_json(x));
      return kExitOk;
    }

    if (etainv_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(etainv_opts.budget);
      const auto x = cstar::parse_element(etainv_expr, etainv_opts.n);
      const auto m = cstar::eta_inv(x);
      if (etainv_opts.pretty)
        std::cout << cstar::pretty_matrix(m);
      else
        emit(cstar::matrix_to_json(m));
      return kExitOk;
    }

    if (dec_cmd->parsed()) {
      const auto p =
          cstar::complex_matrix_from_json(read_json_input(dec_file), dec_opts.tol);
      const auto d = cstar::decompose2(p);
      Json out{{"i", d.i},
               {"j", d.j},
               {"a", Json::array({d.canonical.real(), d.canonical.imag()})}};
      if (d.alternate)
        out["alternate"] =
            Json::array({d.alternate->real(), d.alternate->imag()});
      emit(out);
      return kExitOk;
    }

    if (obs_cmd->parsed()) {
      const auto p =
          cstar::complex_matrix_from_json(read_json_input(obs_file), obs_opts.tol);
      const auto res = cstar::rank1_obstruction3(p);
      Json out{{"representable", res.representable}};
      if (res.witness)
        out["witness"] = Json{{"i", res.witness->i},
                              {"j", res.witness->j},
                              {"a", Json::array({res.witness->a.real(),
                                                 res.witness->a.imag()})}};
      emit(out);
      return kExitOk;
    }

    if (k0_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(k0_opts.budget);
      const auto p = cstar::parse_element(k0_expr, k0_opts.n);
      emit(cstar::k0_to_json(cstar::k0_class(p)));
      return kExitOk;
    }

    if (type_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(type_opts.budget);
      const auto z = cstar::parse_element(type_expr, type_opts.n);
      emit(cstar::k0_to_json(cstar::involution_type(z)));
      return kExitOk;
    }

    if (conj_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(conj_opts.budget);
      const auto z1 = cstar::parse_element(conj_expr1, conj_opts.n);
      const auto z2 = cstar::parse_element(conj_expr2, conj_opts.n);
      const auto t1 = cstar::involution_type(z1);
      const auto t2 = cstar::involution_type(z2);
      emit(Json{{"conjugate", t1 == t2},
                {"type1", cstar::k0_to_json(t1)},
                {"type2", cstar::k0_to_json(t2)}});
      return kExitOk;
    }

    if (diag_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(diag_opts.budget);
      const auto alpha = cstar::parse_element(diag_alpha, diag_opts.n);
      const auto variant = diag_variant == "12" ? cstar::DiagVariant::OneTwo
                                                : cstar::DiagVariant::OneThree;
      const bool holds = cstar::diag_identity_check(alpha, variant);
      emit(Json{{"holds", holds}, {"variant", diag_variant}});
      return holds ? kExitOk : kExitVerificationFailure;
    }

    if (asm_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(asm_opts.budget);
      const int n = asm_opts.n;
      const auto f = cstar::assemble_unitary_factorization(
          cstar::parse_element(asm_alpha, n), cstar::parse_element(asm_gamma, n),
          cstar::parse_element(asm_z1, n), cstar::parse_element(asm_z2, n),
          cstar::parse_element(asm_z3, n));
      emit(cstar::factorization_to_json(f));
      return kExitOk;
    }

    if (verify_cmd->parsed()) {
      cstar::ExpansionBudgetGuard guard(verify_opts.budget);
      const auto f = cstar::factorization_from_json(read_json_input(verify_file));
      const auto report = cstar::verify_factorization(f.u, f.factors);
      emit(cstar::factor_report_to_json(report));
      return report.all_pass() ? kExitOk : kExitVerificationFailure;
    }

    if (suite_cmd->parsed()) {
      if (suite_list) {
        Json names = cstar::suite_check_names();
        emit(names);
        return kExitOk;
      }
      suite_cfg.only = suite_only;
      suite_cfg.validate();
      const auto results = cstar::run_suite_checks(suite_cfg);
      bool all_pass = true;
      for (const auto &r : results) {
        all_pass = all_pass && r.pass;
        std::cerr << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << "  ("
                  << r.cases << " cases, " << r.wall_ms << " ms)\n";
      }
      std::cout << cstar::suite_report(suite_cfg, results).dump(2) << "\n";
      return all_pass ? kExitOk : kExitVerificationFailure;
    }
  } catch (const cstar::SyntaxError &err) {
    std::cerr << "error[" << err.code() << "]: " << err.what() << "\n";
    return kExitUsage;
  } catch (const cstar::ConfigError &err) {
    std::cerr << "error[" << err.code() << "]: " << err.what() << "\n";
    return kExitUsage;
  } catch (const cstar::Error &err) {
    std::cerr << "error[" << err.code() << "]: " << err.what() << "\n";
    return kExitVerificationFailure;
  } catch (const std::exception &err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitVerificationFailure;
  }

  return kExitUsage;
}
