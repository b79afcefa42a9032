#include <cstdlib>
#include <iostream>
#include <stdexcept>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "cpspin/report.hpp"
#include "cpspin/suites.hpp"

namespace {

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDERR_FILENO); }

void summary(const cpspin::SuiteResult& r) {
  int passed = 0;
  for (const auto& c : r.checks) passed += c.pass() ? 1 : 0;
  const bool ok = passed == static_cast<int>(r.checks.size());
  const bool color = use_color();
  std::cerr << r.suite << ": " << passed << "/" << r.checks.size() << " checks pass ";
  if (color) std::cerr << (ok ? "\033[32m" : "\033[31m");
  std::cerr << (ok ? "[ok]" : "[FAIL]");
  if (color) std::cerr << "\033[0m";
  std::cerr << "\n";
  for (const auto& c : r.checks)
    if (!c.pass()) std::cerr << "  failed: " << c.name << " (max residual " << c.max_residual << ")\n";
}

int emit(const cpspin::SuiteResult& r, const std::string& format, const std::string& out) {
  const cpspin::Format f = cpspin::format_from_string(format);
  try {
    if (out.empty())
      std::cout << cpspin::render(r, f);
    else
      cpspin::write_report(r, f, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  if (f == cpspin::Format::csv)
    for (const auto& fl : r.flags) std::cerr << "flag " << fl.id << ": " << fl.message << "\n";
  summary(r);
  return r.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact and numerical checks for spinorial surfaces in CP^2"};
  app.set_version_flag("--version", std::string(cpspin::kVersion));
  app.require_subcommand(1);

  std::string format = "json", out;
  auto add_report_opts = [&](CLI::App* sub) {
    sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--out", out, "write the report here instead of stdout");
  };

  cpspin::AlgebraOptions aopt;
  auto* alg = app.add_subcommand("verify-algebra", "exact identity suite over random rational data");
  alg->add_option("--trials", aopt.trials, "random trials per case")->check(CLI::Range(1L, 100000000L));
  alg->add_option("--seed", aopt.seed, "base seed; trial k uses seed + k");
  alg->add_option("--case-filter", aopt.case_filter, "which generators to use")
      ->check(CLI::IsMember({"all", "generic", "complex", "lagrangian"}));
  add_report_opts(alg);

  cpspin::SurfaceOptions sopt;
  auto* surf = app.add_subcommand("verify-surface", "numerical compatibility residuals on a builtin surface");
  surf->add_option("name", sopt.surface, "cp1, rp2 or clifford_torus")->required();
  surf->add_option("--grid", sopt.grid, "grid points per side")->check(CLI::Range(2, 4096));
  surf->add_option("--fd-step", sopt.fd_step, "finite-difference step")->check(CLI::PositiveNumber);
  surf->add_option("--tol", sopt.tol, "tolerance of the residual checks")->check(CLI::PositiveNumber);
  surf->add_option("--seed", sopt.seed, "seed of the chart sample points");
  surf->add_flag("--richardson", sopt.richardson, "extrapolate the difference quotients");
  add_report_opts(surf);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*alg) return emit(cpspin::run_algebra_suite(aopt), format, out);
    return emit(cpspin::run_surface_suite(sopt), format, out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
