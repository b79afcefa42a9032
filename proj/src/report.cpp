#include "cpspin/report.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace cpspin {

bool SuiteResult::all_pass() const {
  for (const Check& c : checks)
    if (!c.pass()) return false;
  return true;
}

const Check* SuiteResult::find(const std::string& name) const {
  for (const Check& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format: " + s);
}

namespace {

const char* mode_name(Mode m) { return m == Mode::exact ? "exact" : "float"; }
const char* status_name(const Check& c) { return c.pass() ? "pass" : "fail"; }

std::string number(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

std::string to_json(const SuiteResult& r) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["version"] = r.version;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : r.checks) {
    nlohmann::ordered_json e;
    e["name"] = c.name;
    e["mode"] = mode_name(c.mode);
    e["trials"] = c.trials;
    if (c.exact_zero())
      e["max_residual"] = "0 (exact)";
    else
      e["max_residual"] = c.max_residual;
    e["status"] = status_name(c);
    j["checks"].push_back(e);
  }
  j["flags"] = nlohmann::ordered_json::array();
  for (const Flag& f : r.flags) j["flags"].push_back({{"id", f.id}, {"message", f.message}});
  return j.dump(2) + "\n";
}

std::string to_csv(const SuiteResult& r) {
  std::string out = "name,mode,trials,max_residual,status\n";
  for (const Check& c : r.checks) {
    out += c.name + "," + mode_name(c.mode) + "," + std::to_string(c.trials) + ",";
    out += c.exact_zero() ? std::string("0 (exact)") : number(c.max_residual);
    out += std::string(",") + status_name(c) + "\n";
  }
  return out;
}

std::string render(const SuiteResult& r, Format f) { return f == Format::json ? to_json(r) : to_csv(r); }

void write_report(const SuiteResult& r, Format f, const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os << render(r, f);
  os.flush();
  if (!os) throw std::runtime_error("write to " + path + " failed");
}

}  // namespace cpspin
