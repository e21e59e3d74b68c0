// tildelab CLI: state-file I/O plus the verification commands
//   self-test         generator/SWAP identities and four-form inverter agreement
//   invert            apply the state inverter, optionally by every method
//   entropies         linear-entropy ledger over all bipartitions
//   cd                distributed concurrence of a pure state
//   verify-monogamy   correlation equality / monogamy relation report
//   evolve            subsystem unitary evolution with conservation tracking
//   search-violation  randomized search for monotonicity violations
//   counterexample    the built-in (4,2,2,2) violation state
//
// Exit codes: 0 all checks pass, 1 check failure, 2 usage/parse error.

#include "tildelab/core.hpp"
#include "tildelab/correlation.hpp"
#include "tildelab/gellmann.hpp"
#include "tildelab/inversion.hpp"
#include "tildelab/io.hpp"
#include "tildelab/monotone.hpp"
#include "tildelab/report.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace tildelab;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

struct CommonOpts {
  std::string format = "text";
  double tol = -1.0;  // negative: per-command default
  std::uint64_t seed = 12345;
  int workers = 1;
};

std::uint64_t default_seed_from_env() {
  const char* env = std::getenv("TILDELAB_SEED");
  if (!env) return 12345;
  try {
    return std::stoull(env);
  } catch (...) {
    return 12345;
  }
}

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--format", o.format, "Report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--tol", o.tol, "Override every check tolerance");
}

double pick_tol(const CommonOpts& o, double fallback) {
  return o.tol > 0.0 ? o.tol : fallback;
}

int finish(const RunReport& report, const CommonOpts& o) {
  if (o.format == "json")
    std::cout << report.to_json().dump(1) << "\n";
  else
    std::cout << report.to_text();
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

std::string mask_to_string(SubsetMask a, int n) {
  std::string s;
  for (int k = 0; k < n; ++k)
    if (a.contains(k)) {
      if (!s.empty()) s += ",";
      s += std::to_string(k + 1);  // parties are 1-based on the surface
    }
  return "{" + s + "}";
}

SubsetMask parse_subset(const std::string& text, int n_parties) {
  SubsetMask mask;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    int party = std::stoi(item);
    if (party < 1 || party > n_parties)
      throw ParseError("subset names party " + std::to_string(party) +
                       " but the state has " + std::to_string(n_parties));
    mask.bits |= 1u << (party - 1);
  }
  if (mask.empty()) throw ParseError("subset must name at least one party");
  return mask;
}

// ---------------------------------------------------------------------------

int run_self_test(const CommonOpts& o, bool perturb) {
  RunReport report("self-test", pick_tol(o, 1e-12));
  const double id_tol = pick_tol(o, 1e-12);
  const double inv_tol = pick_tol(o, 1e-10);
  Rng rng(o.seed);

  for (int d = 2; d <= 5; ++d) {
    const auto& basis = GellMannBasis::get(d);
    double norm_res = 0.0;
    for (int j = 0; j < basis.size(); ++j)
      for (int k = 0; k < basis.size(); ++k) {
        Matrix hj = basis.h(j);
        if (perturb && d == 2 && j == 1) hj(0, 0) += 1e-6;
        double expect = (j == k) ? static_cast<double>(d) : 0.0;
        norm_res = std::max(norm_res,
                            std::abs((hj * basis.h(k)).trace().real() - expect));
      }
    report.check_equal("generator-normalization d=" + std::to_string(d),
                       norm_res, 0.0, id_tol);

    double tr_res = 0.0, tp_res = 0.0;
    for (int i = 0; i < 100; ++i) {
      Matrix a = random_complex_matrix(d, d, rng);
      tr_res = std::max(tr_res, (trace_identity(a, basis) -
                                 a.trace() * Matrix::Identity(d, d))
                                    .cwiseAbs()
                                    .maxCoeff());
      tp_res = std::max(
          tp_res,
          (transpose_identity(a, basis) - a.transpose()).cwiseAbs().maxCoeff());
    }
    report.check_equal("trace-identity d=" + std::to_string(d), tr_res, 0.0,
                       id_tol);
    report.check_equal("transpose-identity d=" + std::to_string(d), tp_res,
                       0.0, id_tol);

    Matrix comp = Matrix::Zero(d * d, d * d);
    for (int j = 0; j < basis.size(); ++j)
      comp += kron(basis.h(j), basis.h(j));
    comp /= d;
    report.check_equal("swap-completeness d=" + std::to_string(d),
                       (comp - swap_operator(d)).cwiseAbs().maxCoeff(), 0.0,
                       id_tol);

    Matrix bell = maximally_entangled(d).amp() *
                  maximally_entangled(d).amp().adjoint();
    Matrix swap_pt = partial_transpose_first(swap_operator(d), d);
    report.check_equal("bell-swap d=" + std::to_string(d),
                       (swap_pt - d * bell).cwiseAbs().maxCoeff(), 0.0, id_tol);

    Matrix comp_t = Matrix::Zero(d * d, d * d);
    for (int j = 0; j < basis.size(); ++j)
      comp_t += kron(basis.h(j).transpose(), basis.h(j));
    comp_t /= d;
    report.check_equal("transposed-completeness d=" + std::to_string(d),
                       (comp_t - swap_pt).cwiseAbs().maxCoeff(), 0.0, id_tol);
  }

  const std::vector<std::vector<int>> profiles = {
      {2, 2}, {3, 3}, {2, 3, 2}, {4, 2, 2, 2}, {3, 3, 3}};
  for (const auto& p : profiles) {
    HilbertDims dims(p);
    double res = 0.0;
    for (int i = 0; i < 5; ++i) {
      DensityOperator rho = random_mixed(dims, 2, o.seed + 17 * i + dims.total_dim());
      Matrix prod = invert_product(rho).mat();
      res = std::max(res,
                     (invert_subsets(rho).mat() - prod).cwiseAbs().maxCoeff());
      res = std::max(
          res, (invert_generators(rho).mat() - prod).cwiseAbs().maxCoeff());
      if (dims.equal_dims())
        res = std::max(res,
                       (invert_bloch(rho).mat() - prod).cwiseAbs().maxCoeff());
    }
    std::string name = "inverter-agreement dims=(";
    for (std::size_t i = 0; i < p.size(); ++i)
      name += (i ? "," : "") + std::to_string(p[i]);
    name += ")";
    report.check_equal(name, res, 0.0, inv_tol);
  }
  return finish(report, o);
}

// ---------------------------------------------------------------------------

int run_invert(const CommonOpts& o, const std::string& in,
               const std::string& method, const std::string& out_path) {
  StateVariant sv = read_state(in);
  DensityOperator rho = as_density(sv);
  const double tol = pick_tol(o, default_tol(rho.total_dim()));
  RunReport report("invert", tol);
  report.set_input_digest(file_digest(in));
  report.note("method", method);

  std::map<std::string, DensityOperator> results;
  auto want = [&](const std::string& m) {
    return method == "all" || method == m;
  };
  if (want("product")) results.emplace("product", invert_product(rho));
  if (want("subsets")) results.emplace("subsets", invert_subsets(rho));
  if (want("generators")) results.emplace("generators", invert_generators(rho));
  if (want("bloch")) {
    if (rho.dims().equal_dims())
      results.emplace("bloch", invert_bloch(rho));
    else if (method == "bloch")
      throw UnequalDims("invert: bloch form needs equal local dimensions");
    else
      report.note("bloch", "skipped (unequal local dimensions)");
  }

  double expected_trace = rho.trace();
  for (int d : rho.dims().dims()) expected_trace *= (d - 1);
  for (const auto& [name, tilde] : results) {
    report.check_equal("trace-law " + name, tilde.trace(), expected_trace);
    report.check_at_least("positivity " + name, tilde.min_eigenvalue(), 0.0);
  }
  if (method == "all") {
    const Matrix& ref = results.at("product").mat();
    for (const auto& [name, tilde] : results) {
      if (name == "product") continue;
      report.check_equal("agreement product/" + name,
                         (tilde.mat() - ref).cwiseAbs().maxCoeff(), 0.0);
    }
  }
  if (!out_path.empty()) {
    const DensityOperator& tilde =
        method == "all" ? results.at("product") : results.at(method);
    write_state(out_path, tilde);
    report.note("out", out_path);
  }
  return finish(report, o);
}

// ---------------------------------------------------------------------------

int run_entropies(const CommonOpts& o, const std::string& in) {
  StateVariant sv = read_state(in);
  DensityOperator rho = as_density(sv);
  rho.validate_physical(1e-8);
  const double tol = pick_tol(o, 1e-9);
  EntropyLedger ledger = entropy_ledger(rho, o.workers);
  const int n = rho.dims().parties();

  std::vector<SubsetMask> order = subsets(n);
  std::sort(order.begin(), order.end(), [](SubsetMask a, SubsetMask b) {
    return a.count() != b.count() ? a.count() < b.count() : a.bits < b.bits;
  });

  RunReport report("entropies", tol);
  report.set_input_digest(file_digest(in));
  if (o.format == "json") {
    nlohmann::json doc = report.to_json();
    doc["tr_rho_rhotilde"] = ledger.tr_rho_rhotilde();
    doc["entries"] = nlohmann::json::array();
    for (SubsetMask a : order)
      doc["entries"].push_back({{"mask", a.bits},
                                {"subset", mask_to_string(a, n)},
                                {"size", a.count()},
                                {"tau", ledger.tau(a)}});
    std::cout << doc.dump(1) << "\n";
    return kExitPass;
  }
  std::cout << "# entropies  input=" << file_digest(in) << "\n";
  std::cout << "# tr_rho_rhotilde = " << std::setprecision(15)
            << ledger.tr_rho_rhotilde() << "\n";
  for (SubsetMask a : order)
    std::cout << std::left << std::setw(16) << mask_to_string(a, n)
              << " |A|=" << a.count() << "  tau=" << std::setprecision(15)
              << ledger.tau(a) << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------------------

int run_cd(const CommonOpts& o, const std::string& in) {
  StateVariant sv = read_state(in);
  if (!std::holds_alternative<PureState>(sv))
    throw PureStateRequired("cd: the input file must hold a pure state");
  const PureState& psi = std::get<PureState>(sv);
  RunReport report("cd", pick_tol(o, 1e-10));
  report.set_input_digest(file_digest(in));
  CdRoutes routes = distributed_concurrence_routes(psi);
  double cd = distributed_concurrence(psi);
  report.note("cd", std::to_string(cd));
  report.check_equal("route-agreement cd^2", routes.trace_form,
                     routes.generator_form);
  if (o.format == "json") {
    nlohmann::json doc = report.to_json();
    doc["cd"] = cd;
    doc["cd_squared_trace_form"] = routes.trace_form;
    doc["cd_squared_generator_form"] = routes.generator_form;
    std::cout << doc.dump(1) << "\n";
    return report.all_pass() ? kExitPass : kExitCheckFailure;
  }
  std::cout << "C_D = " << std::setprecision(15) << cd << "\n";
  std::cout << report.to_text();
  return report.all_pass() ? kExitPass : kExitCheckFailure;
}

// ---------------------------------------------------------------------------

int run_verify_monogamy(const CommonOpts& o, const std::string& in) {
  StateVariant sv = read_state(in);
  DensityOperator rho = as_density(sv);
  rho.validate_physical(1e-8);
  const double tol = pick_tol(o, 1e-9);
  RunReport report("verify-monogamy", tol);
  report.set_input_digest(file_digest(in));

  MixedEqualityResult eq = verify_mixed_equality(rho, o.workers);
  report.check_equal("correlation equality 2Tr(rho rho~) = alt tau sum",
                     eq.lhs, eq.rhs);
  report.check_at_least("Tr(rho rho~) >= 0", eq.lhs / 2.0, 0.0, 1e-10);

  nlohmann::json extra;
  if (std::holds_alternative<PureState>(sv)) {
    const PureState& psi = std::get<PureState>(sv);
    MonogamyReport mono = monogamy_report(psi);
    report.note("cd", std::to_string(std::sqrt(mono.cd_squared)));
    report.check_equal("monogamy 2 C_D^2 = alt concurrence sum",
                       2.0 * mono.cd_squared, mono.alternating_sum);
    extra["cd"] = std::sqrt(mono.cd_squared);
    extra["cd_squared"] = mono.cd_squared;
    extra["splits"] = nlohmann::json::array();
    for (const MonogamyRow& row : mono.rows)
      extra["splits"].push_back(
          {{"mask", row.mask.bits},
           {"subset", mask_to_string(row.mask, psi.dims().parties())},
           {"size", row.size},
           {"concurrence_squared", row.value},
           {"sign", row.sign}});
  }
  if (o.format == "json") {
    nlohmann::json doc = report.to_json();
    doc.update(extra);
    std::cout << doc.dump(1) << "\n";
    return report.all_pass() ? kExitPass : kExitCheckFailure;
  }
  return finish(report, o);
}

// ---------------------------------------------------------------------------

int run_evolve(const CommonOpts& o, const std::string& in,
               const std::string& subset_text, const std::string& h_path,
               int steps, double dt, bool track, const std::string& out_path) {
  StateVariant sv = read_state(in);
  DensityOperator rho = as_density(sv);
  rho.validate_physical(1e-8);
  const int n = rho.dims().parties();
  SubsetMask s = parse_subset(subset_text, n);
  Matrix h = read_hamiltonian(h_path);

  const double tol = pick_tol(o, 1e-9);
  RunReport report("evolve", tol);
  report.set_input_digest(file_digest(in));
  report.note("subset", mask_to_string(s, n));
  report.note("steps", std::to_string(steps));
  report.note("dt", std::to_string(dt));

  std::vector<SubsetMask> order = subsets(n);
  std::sort(order.begin(), order.end(), [](SubsetMask a, SubsetMask b) {
    return a.count() != b.count() ? a.count() < b.count() : a.bits < b.bits;
  });

  nlohmann::json series = nlohmann::json::array();
  double conserved0 = 0.0, max_drift = 0.0;
  std::map<std::uint32_t, double> tau0, max_change;
  DensityOperator current = rho;
  for (int step = 0; step <= steps; ++step) {
    double t = step * dt;
    current = evolve_subsystem(rho, s, h, t);
    if (!track) continue;
    EntropyLedger ledger = entropy_ledger(current, o.workers);
    double conserved = conservation_combination(ledger, s);
    if (step == 0) conserved0 = conserved;
    max_drift = std::max(max_drift, std::abs(conserved - conserved0));
    nlohmann::json row;
    row["step"] = step;
    row["t"] = t;
    row["conserved"] = conserved;
    for (SubsetMask a : order) {
      double tau = ledger.tau(a);
      if (step == 0) tau0[a.bits] = tau;
      max_change[a.bits] =
          std::max(max_change[a.bits], std::abs(tau - tau0[a.bits]));
      row["tau"][mask_to_string(a, n)] = tau;
    }
    series.push_back(row);
  }

  // The global spectrum is untouched by any unitary.
  Eigen::SelfAdjointEigenSolver<Matrix> e0(rho.mat(), Eigen::EigenvaluesOnly);
  Eigen::SelfAdjointEigenSolver<Matrix> e1(current.mat(), Eigen::EigenvaluesOnly);
  report.check_equal("global spectrum preserved",
                     (e0.eigenvalues() - e1.eigenvalues()).cwiseAbs().maxCoeff(),
                     0.0, 1e-10);

  if (track) {
    report.check_equal("conserved-combination drift", max_drift, 0.0);
    for (SubsetMask a : order) {
      bool member = s.subset_of(a) || !s.intersects(a);
      if (!member)
        report.note("varying " + mask_to_string(a, n),
                    "max change " + std::to_string(max_change[a.bits]));
    }
  }
  if (!out_path.empty()) {
    write_state(out_path, current);
    report.note("out", out_path);
  }
  if (o.format == "json") {
    nlohmann::json doc = report.to_json();
    if (track) doc["series"] = series;
    std::cout << doc.dump(1) << "\n";
    return report.all_pass() ? kExitPass : kExitCheckFailure;
  }
  if (track) {
    std::cout << "# step  t  conserved";
    for (SubsetMask a : order) std::cout << "  tau" << mask_to_string(a, n);
    std::cout << "\n";
    for (const auto& row : series) {
      std::cout << row["step"].get<int>() << " " << std::setprecision(6)
                << row["t"].get<double>() << " " << std::setprecision(15)
                << row["conserved"].get<double>();
      for (SubsetMask a : order)
        std::cout << " " << row["tau"][mask_to_string(a, n)].get<double>();
      std::cout << "\n";
    }
  }
  return finish(report, o);
}

// ---------------------------------------------------------------------------

int run_search(const CommonOpts& o, int d1, const std::string& target_name,
               long trials, const std::string& out_path) {
  MonotoneTarget target =
      target_name == "cd2" ? MonotoneTarget::cd2 : MonotoneTarget::cd;
  RunReport report("search-violation", pick_tol(o, 1e-9));
  report.note("d1", std::to_string(d1));
  report.note("target", target_name);
  report.note("trials", std::to_string(trials));
  report.note("seed", std::to_string(o.seed));
  report.note("workers", std::to_string(o.workers));

  SearchResult r = search_violation(d1, target, trials, o.seed, o.workers);
  report.note("best_margin", std::to_string(r.margin));
  report.note("violation_found", r.found() ? "true" : "false");

  nlohmann::json extra;
  extra["margin"] = r.margin;
  extra["found"] = r.found();
  extra["trial"] = r.trial;
  if (r.trial >= 0) {
    extra["lambda"] = std::vector<double>(r.lambda.data(),
                                          r.lambda.data() + r.lambda.size());
    extra["D"] = std::vector<double>(r.diag.data(), r.diag.data() + r.diag.size());
    extra["fbar_seed"] = r.fbar_seed;
    auto [psi, ch] = realize_search_result(r);
    MonotoneVerdict v = target == MonotoneTarget::cd
                            ? monotone_deficit_cd(psi, ch)
                            : monotone_deficit_cd2(psi, ch);
    report.check_equal("replay deficit matches search margin", v.deficit,
                       r.margin);
    if (!out_path.empty()) {
      write_state(out_path, psi);
      report.note("out", out_path);
      nlohmann::json chj;
      chj["d1"] = ch.d1;
      chj["D"] = std::vector<double>(ch.diag.data(),
                                     ch.diag.data() + ch.diag.size());
      extra["channel"] = chj;
    }
  }
  if (o.format == "json") {
    nlohmann::json doc = report.to_json();
    doc.update(extra);
    std::cout << doc.dump(1) << "\n";
    return report.all_pass() ? kExitPass : kExitCheckFailure;
  }
  std::cout << "best margin = " << std::setprecision(10) << r.margin
            << (r.found() ? "  (violation)" : "  (no violation)") << "\n";
  return finish(report, o);
}

// ---------------------------------------------------------------------------

int run_counterexample(const CommonOpts& o, const std::string& out_path) {
  RunReport report("counterexample", pick_tol(o, 1e-9));
  auto [psi, ch] = builtin_counterexample();
  report.check_equal("state norm", psi.norm(), 1.0, 1e-12);
  report.check_equal("C_D", distributed_concurrence(psi),
                     1.0 / std::sqrt(2.0));
  MonotoneVerdict cd = monotone_deficit_cd(psi, ch);
  MonotoneVerdict cd2 = monotone_deficit_cd2(psi, ch);
  report.check_equal("C_D branch sum", cd.rhs, 1.0);
  report.check_flag("C_D monotonicity violated", cd.violated);
  report.check_equal("C_D^2 lhs", cd2.lhs, 0.5);
  report.check_equal("C_D^2 branch sum", cd2.rhs, 1.0);
  report.check_flag("C_D^2 monotonicity violated", cd2.violated);
  if (!out_path.empty()) {
    write_state(out_path, psi);
    report.note("out", out_path);
  }
  if (o.format == "json") {
    nlohmann::json doc = report.to_json();
    doc["cd_deficit"] = cd.deficit;
    doc["cd2_deficit"] = cd2.deficit;
    std::cout << doc.dump(1) << "\n";
    return report.all_pass() ? kExitPass : kExitCheckFailure;
  }
  return finish(report, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tildelab: universal state inversion, distributed concurrence, "
               "and correlation/monogamy equalities for finite-dimensional "
               "multipartite states"};
  app.require_subcommand(1);

  CommonOpts opts;
  opts.seed = default_seed_from_env();

  bool perturb = false;
  auto* self_test = app.add_subcommand("self-test", "Run the identity suite");
  add_common(self_test, opts);
  self_test->add_option("--seed", opts.seed, "Random-matrix seed");
  self_test->add_flag("--perturb", perturb,
                      "Negative control: perturb one generator");

  std::string in_path, out_path, method = "all";
  auto* invert = app.add_subcommand("invert", "Apply the state inverter");
  add_common(invert, opts);
  invert->add_option("--in", in_path, "Input state file")->required();
  invert->add_option("--method", method, "product|subsets|generators|bloch|all")
      ->check(CLI::IsMember({"product", "subsets", "generators", "bloch", "all"}));
  invert->add_option("--out", out_path, "Write the tilde state here");

  auto* entropies = app.add_subcommand("entropies", "Linear-entropy ledger");
  add_common(entropies, opts);
  entropies->add_option("--in", in_path, "Input state file")->required();
  entropies->add_option("--workers", opts.workers, "Ledger worker threads");

  auto* cd = app.add_subcommand("cd", "Distributed concurrence");
  add_common(cd, opts);
  cd->add_option("--in", in_path, "Input state file (pure)")->required();

  auto* verify = app.add_subcommand("verify-monogamy",
                                    "Correlation equality / monogamy report");
  add_common(verify, opts);
  verify->add_option("--in", in_path, "Input state file")->required();
  verify->add_option("--workers", opts.workers, "Ledger worker threads");

  std::string subset_text, h_path;
  int steps = 100;
  double dt = 0.05;
  bool track = false;
  auto* evolve = app.add_subcommand("evolve", "Subsystem unitary evolution");
  add_common(evolve, opts);
  evolve->add_option("--in", in_path, "Input state file")->required();
  evolve->add_option("--subset", subset_text, "1-based parties, e.g. 1,3")
      ->required();
  evolve->add_option("--hamiltonian", h_path, "Hamiltonian file")->required();
  evolve->add_option("--steps", steps, "Number of steps");
  evolve->add_option("--dt", dt, "Time step");
  evolve->add_option("--workers", opts.workers, "Ledger worker threads");
  evolve->add_flag("--track-conservation", track,
                   "Track the conserved combination and every tau");
  evolve->add_option("--out", out_path, "Write the final state here");

  int d1 = 4;
  long trials = 100000;
  std::string target_name = "cd";
  auto* search = app.add_subcommand("search-violation",
                                    "Randomized monotonicity-violation search");
  add_common(search, opts);
  search->add_option("--d1", d1, "First-party dimension (>= 3)");
  search->add_option("--target", target_name, "cd or cd2")
      ->check(CLI::IsMember({"cd", "cd2"}));
  search->add_option("--trials", trials, "Trial budget");
  search->add_option("--seed", opts.seed, "Search seed");
  search->add_option("--workers", opts.workers, "Worker threads");
  search->add_option("--out", out_path, "Write the best state here");

  auto* counter = app.add_subcommand("counterexample",
                                     "Built-in (4,2,2,2) violation state");
  add_common(counter, opts);
  counter->add_option("--out", out_path, "Write the state here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (self_test->parsed()) return run_self_test(opts, perturb);
    if (invert->parsed()) return run_invert(opts, in_path, method, out_path);
    if (entropies->parsed()) return run_entropies(opts, in_path);
    if (cd->parsed()) return run_cd(opts, in_path);
    if (verify->parsed()) return run_verify_monogamy(opts, in_path);
    if (evolve->parsed())
      return run_evolve(opts, in_path, subset_text, h_path, steps, dt, track,
                        out_path);
    if (search->parsed())
      return run_search(opts, d1, target_name, trials, out_path);
    if (counter->parsed()) return run_counterexample(opts, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
