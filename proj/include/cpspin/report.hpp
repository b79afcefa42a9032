#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cpspin {

inline constexpr const char* kVersion = "0.1.0";

enum class Mode { exact, floating };

struct Check {
  std::string name;
  Mode mode = Mode::exact;
  long trials = 0;
  // exact mode: the largest rational residual, rounded to double (never rounded to zero)
  double max_residual = 0;
  double tolerance = 0;  // float mode only

  bool exact_zero() const { return mode == Mode::exact && max_residual == 0; }
  bool pass() const { return mode == Mode::exact ? max_residual == 0 : max_residual <= tolerance; }
};

// Informational note about a typeset formula that the checks contradict.
struct Flag {
  std::string id;
  std::string message;
};

struct SuiteResult {
  std::string suite;
  std::uint64_t seed = 0;
  std::string version = kVersion;
  std::vector<Check> checks;
  std::vector<Flag> flags;

  bool all_pass() const;
  const Check* find(const std::string& name) const;
};

enum class Format { json, csv };

Format format_from_string(const std::string& s);
std::string to_json(const SuiteResult& r);
// Columns name,mode,trials,max_residual,status; flags are not part of the table.
std::string to_csv(const SuiteResult& r);
std::string render(const SuiteResult& r, Format f);
// Throws std::runtime_error when the file cannot be written.
void write_report(const SuiteResult& r, Format f, const std::string& path);

}  // namespace cpspin
