// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when a criterion fails
// for a reason that is not a recorded deviation, or for any failure under --strict.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "cpspin/cp2.hpp"
#include "cpspin/integrability.hpp"
#include "cpspin/random.hpp"
#include "cpspin/suites.hpp"
#include "cpspin/surfaces.hpp"

using namespace cpspin;

namespace {

struct Line {
  int id;
  std::string title;
  bool pass;
  std::string detail;
  std::string deviation;  // nonempty: known, recorded reason for a failing sub-check
  double seconds;  // negative: measured together with the previous line
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

// every named check present, passing, with at least min_trials evaluations
bool checks_pass(const SuiteResult& r, const std::vector<std::string>& names, long min_trials, std::string& why) {
  for (const auto& n : names) {
    const Check* c = r.find(n);
    if (!c) {
      why += " missing " + n + ";";
      return false;
    }
    if (!c->pass() || c->trials < min_trials) {
      why += " " + n + " residual " + fmt("%.3g", c->max_residual) + " over " + std::to_string(c->trials) + ";";
      return false;
    }
  }
  return true;
}

bool has_flag(const SuiteResult& r, const std::string& id) {
  for (const auto& f : r.flags)
    if (f.id == id) return true;
  return false;
}

SuiteResult algebra(unsigned groups, long trials, const std::string& filter = "all") {
  AlgebraOptions o;
  o.trials = trials;
  o.seed = 42;
  o.groups = groups;
  o.case_filter = filter;
  return run_algebra_suite(o);
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  std::vector<Line> lines;
  using clk = std::chrono::steady_clock;

  {
    auto t0 = clk::now();
    const SuiteResult r = algebra(kGroupClifford, 1000);
    const double s = seconds_since(t0);
    std::string why;
    bool ok = checks_pass(r, {"clifford_anticommutation", "clifford_gradings", "clifford_antihermitian",
                              "clifford_conjugation"},
                          1000, why);
    ok = ok && s < 5.0;
    lines.push_back({1, "Clifford axioms, exact, basis pairs + 1000 random vectors, < 5 s", ok,
                     "all residuals 0 (exact)" + why, "", s});
  }
  {
    auto t0 = clk::now();
    const SuiteResult r = algebra(kGroupLemma, 1000);
    const double s = seconds_since(t0);
    std::string why;
    std::vector<std::string> items;
    for (int i = 1; i <= 8; ++i) items.push_back("lemma_item_" + std::to_string(i));
    // 1000 trials in each of the three cases
    bool ok = checks_pass(r, items, 3000, why) && s < 30.0;
    lines.push_back({2, "Lemma items 1-8, exact, 1000 trials x {generic, complex, lagrangian}, < 30 s", ok,
                     "3000 evaluations per item, residual 0 (exact)" + why, "", s});
  }

  auto t_k = clk::now();
  const SuiteResult killing = algebra(kGroupKilling, 1000);
  const double s_k = seconds_since(t_k);
  {
    std::string why;
    bool ok = checks_pass(killing, {"eta_differential", "eta_commutator"}, 1000, why);
    lines.push_back({3, "d(eta_c) expansion and eta_c commutator, exact, 1000 trials", ok, "residual 0 (exact)" + why,
                     "", s_k});
  }
  {
    std::string why;
    bool ok = checks_pass(killing, {"dirac_contraction", "tangent_volume_identity"}, 1000, why);
    ok = ok && kDiracEpsilon == 1 && has_flag(killing, "dirac_sign");
    lines.push_back({4, "Dirac contraction = H.phi + eps phi + i/2 beta.phi_bar + i j12 e1.e2.phi_bar, exact", ok,
                     "eps = +1; printed sign reported as flag dirac_sign" + why, "", -1});
  }
  {
    std::string why;
    bool ok = checks_pass(killing, {"recover_B", "recover_B_rejects_degenerate"}, 500, why);
    lines.push_back({5, "recover_B = <B(X,Y),xi> on all frame triples, >= 500 trials; degenerate phi rejected", ok,
                     "residual 0 (exact), DegenerateSpinor thrown for phi^+ = 0, phi^- = 0, phi = 0" + why, "", -1});
  }

  auto t_n = clk::now();
  const SuiteResult kernel = algebra(kGroupKernel, 500);
  const double s_n = seconds_since(t_n);
  {
    std::string why;
    bool ok = checks_pass(kernel, {"kernel_rank"}, 500, why) && checks_pass(kernel, {"kernel_rank_controls"}, 1, why);
    lines.push_back({6, "kernel rank 6 for 500 random phi; rank < 6 whenever a half vanishes (16 support patterns)",
                     ok, "exact ranks" + why, "", s_n});
  }
  {
    std::string why;
    bool ok = checks_pass(kernel, {"complex_lemma", "complex_lemma_preconditions"}, 500, why);
    // the worked example phi = (1, 1) in the two slots
    Spinor<Rational> phi = Spinor<Rational>::Zero();
    phi(kPP) = GaussQ(1);
    phi(kMP) = GaussQ(1);
    const FormSolve sol = solve_complex_lemma(phi);
    const bool example = sol.unique && sol.T.t_tangent == -1 && sol.T.t_normal == -1 && sol.T.t_mixed.isZero();
    if (!example) why += " phi = (1,1) example failed;";
    ok = ok && example && has_flag(kernel, "complex_lemma_Tn");
    lines.push_back({7, "complex lemma (T^t, T^n, T^m) = (-1, -1, 0) for 500 random phi", ok,
                     "exact; statement's T^n = 0 reported as flag complex_lemma_Tn" + why, "", -1});
  }
  {
    auto t0 = clk::now();
    const SuiteResult r = algebra(kGroupGluing, 1000);
    const double s = seconds_since(t0);
    std::string why;
    bool ok = checks_pass(r, {"gluing_lagrangian", "gluing_complex", "extraction_lagrangian", "extraction_complex"},
                          1000, why) &&
              checks_pass(r, {"frame_gauss_vs_curvature", "frame_ricci_vs_curvature", "frame_codazzi_vs_curvature"},
                          3000, why);
    lines.push_back({8, "gluing identities and coefficient-wise extraction, both cases, 1000 trials each", ok,
                     "exact; extracted T equals the frame-equation residuals slot by slot" + why, "", s});
  }
  {
    auto t0 = clk::now();
    const FSChart chart;
    Rng rng(stream_seed(42, 900));
    double curv = 0, hol = 0;
    for (int p = 0; p < 100; ++p) {
      Vec4d x, v[4];
      for (int k = 0; k < 4; ++k) x(k) = rng.uniform(-1, 1);
      for (auto& w : v)
        for (int k = 0; k < 4; ++k) w(k) = rng.uniform(-1, 1);
      const double num = riemann_numeric(chart, x, v[0], v[1], v[2], v[3]);
      curv = std::max(curv, std::abs(num - curvature_formula(fs_metric(chart, x), ambient_J(chart, x), chart.c, v[0],
                                                             v[1], v[2], v[3])));
      hol = std::max(hol, std::abs(holomorphic_sectional_numeric(chart, x, v[0]) - 4 * chart.c));
    }
    const double s = seconds_since(t0);
    const bool ok = curv <= 1e-5 && hol <= 1e-5;
    lines.push_back({9, "CP^2 chart: riemann_numeric vs curvature formula at 100 points (1e-5); holomorphic 4c (1e-5)",
                     ok, "max errors " + fmt("%.2e", curv) + ", " + fmt("%.2e", hol), "", s});
  }
  {
    auto t0 = clk::now();
    std::string why;
    bool ok = true;
    for (const char* name : {"cp1", "rp2", "clifford_torus"}) {
      SurfaceOptions o;
      o.surface = name;
      const SuiteResult r = run_surface_suite(o);
      if (!r.all_pass()) {
        ok = false;
        for (const auto& c : r.checks)
          if (!c.pass()) why += std::string(" ") + name + ":" + c.name + "=" + fmt("%.3g", c.max_residual) + ";";
      }
    }
    // convergence witness on the torus
    const SurfacePatch base = builtin_surface("clifford_torus");
    SurfacePatch half = base;
    half.fd_step = base.fd_step / 2;
    const double r1 = analyze_patch(FSChart{}, base).agg.codazzi;
    const double r2 = analyze_patch(FSChart{}, half).agg.codazzi;
    const double ratio = r1 / r2;
    const bool halving = ratio >= 2 * 0.7 && ratio <= 2 * 1.3;
    const double s = seconds_since(t0);
    const bool timed = s < 30.0;
    std::string detail = "K_M, B, H and Gauss/Ricci/Codazzi within tolerance on cp1, rp2, clifford_torus" + why +
                         "; torus Codazzi " + fmt("%.3g", r1) + " at h=1e-4, " + fmt("%.3g", r2) + " at h=5e-5 (ratio " +
                         fmt("%.2f", ratio) + ", want 2 +- 30%)";
    std::string deviation;
    if (!halving)
      deviation = "the torus Codazzi residual is already at the rounding floor (~1e-11); it has no truncation "
                  "part left to halve and rounding error grows like 1/h";
    lines.push_back({10, "surface suite at grid 32, fd_step 1e-4; halving fd_step halves Codazzi; < 30 s",
                     ok && halving && timed, detail + (timed ? "" : "; too slow"), ok && timed ? deviation : "", s});
  }

  int unexpected = 0, recorded = 0;
  for (const Line& l : lines) {
    std::printf("[%s] %2d %s\n", l.pass ? "PASS" : "FAIL", l.id, l.title.c_str());
    if (l.seconds < 0)
      std::printf("         %s (timed with the line above)\n", l.detail.c_str());
    else
      std::printf("         %s (%.2f s)\n", l.detail.c_str(), l.seconds);
    if (!l.pass && !l.deviation.empty()) std::printf("         recorded deviation: %s\n", l.deviation.c_str());
    if (!l.pass) (l.deviation.empty() ? unexpected : recorded)++;
  }
  std::printf("%zu criteria: %d pass, %d fail with a recorded deviation, %d fail unexpectedly\n", lines.size(),
              static_cast<int>(lines.size()) - unexpected - recorded, recorded, unexpected);
  if (strict) return unexpected + recorded == 0 ? 0 : 1;
  return unexpected == 0 ? 0 : 1;
}
