#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cpspin/report.hpp"
#include "cpspin/structures.hpp"

namespace cpspin {

// Check groups of the exact suite; the acceptance binary times them separately.
enum Group : unsigned {
  kGroupClifford = 1u << 0,
  kGroupStructures = 1u << 1,
  kGroupLemma = 1u << 2,
  kGroupKilling = 1u << 3,  // eta_c identities, Dirac, recover_B, norm condition
  kGroupKernel = 1u << 4,   // kernel rank and the complex lemma
  kGroupGluing = 1u << 5,   // gluing, extraction, frame equations vs the ambient curvature
  kGroupAll = 0x3Fu,
};

struct AlgebraOptions {
  long trials = 1000;
  std::uint64_t seed = 42;
  std::string case_filter = "all";  // all | generic | complex | lagrangian
  unsigned groups = kGroupAll;
};

// Throws std::invalid_argument on an unknown filter.
std::vector<CaseTag> cases_for(const std::string& filter);

// Trial k uses base seed + k; every random object draws its own stream from that.
SuiteResult run_algebra_suite(const AlgebraOptions& opt);

struct SurfaceOptions {
  std::string surface = "cp1";
  int grid = 32;
  double fd_step = 1e-4;
  double tol = 1e-4;
  bool richardson = false;
  std::uint64_t seed = 42;  // sample points of the chart checks
  int chart_points = 100;
};

// Throws std::invalid_argument for an unknown surface.
SuiteResult run_surface_suite(const SurfaceOptions& opt);

// Counts gathered while running; -1 when the relevant group did not run.
struct FlagEvidence {
  long trials = -1;
  long dirac_printed_mismatch = -1, killing_trials = -1;
  long item7_printed_mismatch = -1, item7_trials = -1;
  long recover_printed_mismatch = -1;
  long ricci_printed_mismatch = -1, ricci_trials = -1;
  long codazzi_printed_mismatch = -1, codazzi_trials = -1;
  long complex_lemma_Tn_minus_one = -1, complex_lemma_trials = -1;
  double surface_ricci_printed = -1;  // max |K_N - typeset right-hand side| along a surface
};

// Discrepancies between the typeset formulas and what the checks establish.
std::vector<Flag> discrepancy_flags(const FlagEvidence& ev);

}  // namespace cpspin
