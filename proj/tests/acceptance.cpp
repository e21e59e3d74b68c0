// Acceptance suite: one line per criterion, exact scales and tolerances.
// Exits 0 only if every criterion passes.

#include "tildelab/core.hpp"
#include "tildelab/correlation.hpp"
#include "tildelab/gellmann.hpp"
#include "tildelab/inversion.hpp"
#include "tildelab/monotone.hpp"

#include "oracles.hpp"
#include "test_states.hpp"

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

using namespace tildelab;

namespace {

int g_failures = 0;

void report(int id, const std::string& label, bool pass,
            const std::string& detail, double seconds) {
  std::printf("[%s] %d %-46s %s (%.1f s)\n", pass ? "PASS" : "FAIL", id,
              label.c_str(), detail.c_str(), seconds);
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

class Timer {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// --------------------------------------------------------------------------
// 1. Generator identities for d = 2..5, 100 random matrices per d, < 1e-12.

void criterion_1() {
  Timer timer;
  const double tol = 1e-12;
  double worst = 0.0;
  for (int d = 2; d <= 5; ++d) {
    const auto& b = GellMannBasis::get(d);
    for (int j = 0; j < b.size(); ++j)
      for (int k = 0; k < b.size(); ++k) {
        double expect = (j == k) ? d : 0.0;
        worst = std::max(worst, std::abs((b.h(j) * b.h(k)).trace().real() - expect));
      }
    Matrix comp = Matrix::Zero(d * d, d * d);
    for (int j = 0; j < b.size(); ++j) comp += kron(b.h(j), b.h(j));
    worst = std::max(worst, max_abs(comp / d - swap_operator(d)));
    PureState phi = maximally_entangled(d);
    worst = std::max(worst,
                     max_abs(partial_transpose_first(swap_operator(d), d) -
                             d * (phi.amp() * phi.amp().adjoint())));
    Rng rng(1000 + d);
    for (int rep = 0; rep < 100; ++rep) {
      Matrix a = random_complex_matrix(d, d, rng);
      worst = std::max(worst, max_abs(trace_identity(a, b) -
                                      a.trace() * Matrix::Identity(d, d)));
      worst = std::max(worst, max_abs(transpose_identity(a, b) - a.transpose()));
    }
  }
  report(1, "generator identities d=2..5", worst < tol,
         fmt("max residual %.2e (tol 1e-12)", worst), timer.seconds());
}

// --------------------------------------------------------------------------
// 2. Four-form inverter agreement on 100 random mixed states per profile.

void criterion_2() {
  Timer timer;
  const std::vector<std::vector<int>> profiles = {
      {2, 2}, {3, 3}, {2, 3, 2}, {4, 2, 2, 2}, {3, 3, 3}};
  double worst_agreement = 0.0, worst_trace = 0.0, worst_eig = 0.0;
  for (const auto& p : profiles) {
    HilbertDims dims(p);
    double expected_trace = 1.0;
    for (int d : p) expected_trace *= (d - 1);
    for (int rep = 0; rep < 100; ++rep) {
      DensityOperator rho =
          random_mixed(dims, 1 + rep % 4, 2000 + 37 * rep + dims.total_dim());
      DensityOperator tilde = invert_product(rho);
      worst_agreement = std::max(
          worst_agreement, max_abs(invert_subsets(rho).mat() - tilde.mat()));
      worst_agreement = std::max(
          worst_agreement, max_abs(invert_generators(rho).mat() - tilde.mat()));
      if (dims.equal_dims())
        worst_agreement = std::max(
            worst_agreement, max_abs(invert_bloch(rho).mat() - tilde.mat()));
      worst_trace =
          std::max(worst_trace, std::abs(tilde.trace() - expected_trace));
      worst_eig = std::min(worst_eig, tilde.min_eigenvalue());
    }
  }
  bool pass = worst_agreement < 1e-10 && worst_trace < 1e-10 &&
              worst_eig >= -1e-10;
  report(2, "four-form inverter agreement", pass,
         fmt("max disagreement %.2e, trace residual %.2e, min eig %.2e",
             worst_agreement, worst_trace, worst_eig),
         timer.seconds());
}

// --------------------------------------------------------------------------
// 3. Mixed-state equality on 500 random states up to total dimension 256.

void criterion_3() {
  Timer timer;
  const std::vector<std::vector<int>> profiles = {
      {2, 2},          {2, 3},    {2, 2, 2},       {3, 3},
      {2, 3, 2},       {4, 4},    {3, 3, 2},       {3, 3, 3},
      {2, 2, 2, 2, 2}, {4, 2, 2, 2}, {4, 4, 4, 4}, {2, 2, 2, 2, 2, 2, 2, 2}};
  const std::vector<int> counts = {45, 45, 45, 45, 45, 45, 45, 45, 45, 45, 25, 25};
  double worst = 0.0;
  int states = 0;
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    HilbertDims dims(profiles[i]);
    for (int rep = 0; rep < counts[i]; ++rep, ++states) {
      DensityOperator rho =
          random_mixed(dims, 1 + rep % 5, 3000 + 101 * rep + dims.total_dim());
      worst = std::max(worst, verify_mixed_equality(rho).residual);
    }
  }
  report(3, "mixed-state correlation equality", worst < 1e-9,
         fmt("max residual %.2e over 500 states (tol 1e-9)", worst),
         timer.seconds());
}

// --------------------------------------------------------------------------
// 4. Pure-state monogamy benchmark values and route agreement.

void criterion_4() {
  Timer timer;
  double route_worst = 0.0;
  auto routes_gap = [&](const PureState& psi) {
    CdRoutes r = distributed_concurrence_routes(psi);
    route_worst = std::max(route_worst, std::abs(r.trace_form - r.generator_form));
  };
  double cd_ghz = distributed_concurrence(fixtures::ghz(4));
  routes_gap(fixtures::ghz(4));
  PureState bellbell = fixtures::bell().tensor(fixtures::bell());
  double cd_bb = distributed_concurrence(bellbell);
  routes_gap(bellbell);
  double odd_worst = 0.0;
  const std::vector<std::vector<int>> odd_profiles = {
      {2, 3, 2}, {3, 2, 2}, {2, 2, 4}, {2, 2, 2, 2, 2}, {3, 2, 2, 2, 2}};
  int count = 0;
  for (const auto& p : odd_profiles)
    for (int rep = 0; rep < 20; ++rep, ++count) {
      PureState psi = random_pure(HilbertDims(p), 4000 + 13 * count);
      odd_worst = std::max(odd_worst, distributed_concurrence(psi));
      routes_gap(psi);
    }
  bool pass = std::abs(cd_ghz - 1.0) < 1e-9 && std::abs(cd_bb - 1.0) < 1e-9 &&
              odd_worst < 1e-10 && route_worst < 1e-10;
  report(4, "distributed-concurrence benchmarks", pass,
         fmt("|C_D(GHZ4)-1|=%.1e, max odd-N C_D=%.1e, route gap %.1e",
             std::abs(cd_ghz - 1.0), odd_worst, route_worst),
         timer.seconds());
}

// --------------------------------------------------------------------------
// 5. The (4,2,2,2) counterexample: values and both violation flags.

void criterion_5() {
  Timer timer;
  auto [psi, ch] = builtin_counterexample();
  double cd = distributed_concurrence(psi);
  double ledger_sum =
      oracle::alternating_tau_sum_naive(projector(psi).mat(), {4, 2, 2, 2});
  MonotoneVerdict vcd = monotone_deficit_cd(psi, ch);
  MonotoneVerdict vcd2 = monotone_deficit_cd2(psi, ch);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  bool pass = std::abs(cd - inv_sqrt2) < 1e-9 &&
              std::abs(2.0 * cd * cd - ledger_sum) < 1e-9 &&
              std::abs(vcd.rhs - 1.0) < 1e-9 &&
              std::abs(vcd.deficit - (inv_sqrt2 - 1.0)) < 1e-9 && vcd.violated &&
              std::abs(vcd2.lhs - 0.5) < 1e-9 &&
              std::abs(vcd2.rhs - 1.0) < 1e-9 && vcd2.violated;
  report(5, "(4,2,2,2) counterexample reproduction", pass,
         fmt("C_D=%.9f, cd deficit %.4f", cd, vcd.deficit) +
             fmt(", cd2 %.2f vs %.2f", vcd2.lhs, vcd2.rhs),
         timer.seconds());
}

// --------------------------------------------------------------------------
// 6. Known-case monotonicity: 1e4 trials at (d=2, N=4) and (N=2, d=5).

void criterion_6() {
  Timer timer;
  long violations = 0;
  double worst = 0.0;
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  auto run_case = [&](const std::vector<int>& dims_vec, int d1,
                      std::uint64_t seed_base) {
    HilbertDims dims(dims_vec);
    Rng rng(seed_base);
    for (int rep = 0; rep < 10000; ++rep) {
      PureState psi = random_pure(dims, seed_base + 1 + rep);
      RealVector d(d1);
      for (int j = 0; j < d1; ++j) d(j) = uni(rng);
      TwoOutcomeChannel ch(d1, d);
      MonotoneVerdict vcd = monotone_deficit_cd(psi, ch);
      MonotoneVerdict vcd2 = monotone_deficit_cd2(psi, ch);
      if (vcd.violated || vcd2.violated) ++violations;
      worst = std::min(worst, std::min(vcd.deficit, vcd2.deficit));
    }
  };
  run_case({2, 2, 2, 2}, 2, 60000);
  run_case({5, 5}, 5, 70000);
  report(6, "known-case monotonicity regressions", violations == 0,
         fmt("0 expected violations, got %.0f; min deficit %.1e",
             static_cast<double>(violations), worst),
         timer.seconds());
}

// --------------------------------------------------------------------------
// 7. Weight-inequality property suite and the three seeded searches.

void criterion_7() {
  Timer timer;
  Rng rng(80000);
  std::uniform_real_distribution<double> uni(0.0, 1.0);
  double mon3_worst = 0.0;
  for (int rep = 0; rep < 100000; ++rep) {
    RealMatrix w = RealMatrix::Zero(3, 3);
    double total = 0.0;
    for (int j = 0; j < 3; ++j)
      for (int k = j + 1; k < 3; ++k) {
        w(j, k) = w(k, j) = uni(rng);
        total += 2.0 * w(j, k);
      }
    w /= total;
    RealVector d(3);
    for (int j = 0; j < 3; ++j) d(j) = uni(rng);
    mon3_worst = std::min(mon3_worst, mon3_check(w, d));
  }
  SearchResult s4cd = search_violation(4, MonotoneTarget::cd, 100000, 7);
  SearchResult s3cd2 = search_violation(3, MonotoneTarget::cd2, 100000, 7);
  SearchResult s3cd = search_violation(3, MonotoneTarget::cd, 100000, 7);
  bool pass = mon3_worst >= -1e-10 && s4cd.found() && s3cd2.found() &&
              !s3cd.found();
  report(7, "weight inequality + violation searches", pass,
         fmt("mon3 min %.1e; margins d4/cd %.2e, d3/cd2 %.2e",
             mon3_worst, s4cd.margin, s3cd2.margin) +
             fmt(", d3/cd %.2e", s3cd.margin),
         timer.seconds());
}

// --------------------------------------------------------------------------
// 8. Three-party inequality on 1e4 random mixed states up to (3,3,3).

void criterion_8() {
  Timer timer;
  double worst = 0.0;
  Rng rng(90000);
  for (int rep = 0; rep < 10000; ++rep) {
    std::vector<int> dims_vec = {2 + static_cast<int>(rng() % 2),
                                 2 + static_cast<int>(rng() % 2),
                                 2 + static_cast<int>(rng() % 2)};
    HilbertDims dims(dims_vec);
    int rank = 1 + static_cast<int>(rng() % 5);
    DensityOperator rho = random_mixed(dims, rank, 90001 + rep);
    worst = std::min(worst, three_party_inequality(rho));
  }
  report(8, "three-party linear-entropy inequality", worst >= -1e-10,
         fmt("min margin %.2e over 1e4 states (tol -1e-10)", worst),
         timer.seconds());
}

// --------------------------------------------------------------------------
// 9. Conservation law under subsystem evolution.

void criterion_9() {
  Timer timer;
  HilbertDims dims({2, 2, 2, 2});
  DensityOperator rho = random_mixed(dims, 4, 95000);
  Rng rng(95001);
  Matrix h = random_hermitian(4, rng);
  SubsetMask s(0b0101);  // parties {1,3}
  EntropyLedger first = entropy_ledger(rho);
  double conserved0 = conservation_combination(first, s);
  double drift = 0.0, partial_change = 0.0;
  for (int step = 1; step <= 100; ++step) {
    EntropyLedger ledger =
        entropy_ledger(evolve_subsystem(rho, s, h, 0.05 * step));
    drift = std::max(drift,
                     std::abs(conservation_combination(ledger, s) - conserved0));
    for (SubsetMask a : subsets(4))
      if (!(s.subset_of(a) || !s.intersects(a)))
        partial_change =
            std::max(partial_change, std::abs(ledger.tau(a) - first.tau(a)));
  }
  bool pass = drift < 1e-9 && partial_change > 1e-3;
  report(9, "conservation law under subsystem unitaries", pass,
         fmt("drift %.2e (tol 1e-9), max varying-tau change %.3f", drift,
             partial_change),
         timer.seconds());
}

}  // namespace

int main() {
  Timer total;
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  std::printf("%s: %d/9 criteria passed (%.1f s total)\n",
              g_failures == 0 ? "PASS" : "FAIL", 9 - g_failures,
              total.seconds());
  return g_failures == 0 ? 0 : 1;
}
