// report.hpp
//
// Check/report plumbing for the CLI: every numerical check records both
// sides and the residual, and passes iff the residual is below its
// tolerance. Reports render as aligned text or JSON.

#pragma once

#include "tildelab/core.hpp"

#include <json.hpp>

#include <chrono>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace tildelab {

struct Check {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

class RunReport {
 public:
  RunReport(std::string command, double tolerance)
      : command_(std::move(command)), tolerance_(tolerance),
        start_(std::chrono::steady_clock::now()) {}

  void set_input_digest(std::string digest) { digest_ = std::move(digest); }
  void note(const std::string& key, const std::string& value) {
    notes_.emplace_back(key, value);
  }

  double tolerance() const { return tolerance_; }

  /// lhs == rhs within tol (defaults to the report tolerance).
  void check_equal(const std::string& name, double lhs, double rhs,
                   double tol = -1.0) {
    Check c{name, lhs, rhs, std::abs(lhs - rhs),
            tol < 0.0 ? tolerance_ : tol, false};
    c.pass = c.residual < c.tolerance;
    checks_.push_back(std::move(c));
  }

  /// value >= bound within tol; the residual is the shortfall.
  void check_at_least(const std::string& name, double value, double bound,
                      double tol = -1.0) {
    Check c{name, value, bound, std::max(0.0, bound - value),
            tol < 0.0 ? tolerance_ : tol, false};
    c.pass = c.residual < c.tolerance;
    checks_.push_back(std::move(c));
  }

  /// An expectation that is simply true or false (residual 0 or infinity).
  void check_flag(const std::string& name, bool ok) {
    Check c{name, ok ? 1.0 : 0.0, 1.0,
            ok ? 0.0 : std::numeric_limits<double>::infinity(), tolerance_,
            ok};
    checks_.push_back(std::move(c));
  }

  const std::vector<Check>& checks() const { return checks_; }

  bool all_pass() const {
    for (const Check& c : checks_)
      if (!c.pass) return false;
    return true;
  }

  double wall_ms() const {
    auto now = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(now - start_).count();
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "# " << command_;
    if (!digest_.empty()) os << "  input=" << digest_;
    os << "  tol=" << tolerance_ << "\n";
    for (const auto& [k, v] : notes_) os << "# " << k << ": " << v << "\n";
    for (const Check& c : checks_) {
      os << (c.pass ? "[PASS] " : "[FAIL] ") << std::left << std::setw(44)
         << c.name << std::setprecision(12) << " lhs=" << c.lhs
         << " rhs=" << c.rhs << " residual=" << std::setprecision(3)
         << std::scientific << c.residual << std::defaultfloat << "\n";
    }
    os << (all_pass() ? "PASS" : "FAIL") << " (" << checks_.size()
       << " checks, " << std::fixed << std::setprecision(1) << wall_ms()
       << " ms)\n";
    return os.str();
  }

  nlohmann::json to_json() const {
    nlohmann::json doc;
    doc["command"] = command_;
    doc["input_digest"] = digest_;
    doc["tolerance"] = tolerance_;
    doc["wall_ms"] = wall_ms();
    for (const auto& [k, v] : notes_) doc["notes"][k] = v;
    doc["checks"] = nlohmann::json::array();
    for (const Check& c : checks_)
      doc["checks"].push_back({{"name", c.name},
                               {"lhs", c.lhs},
                               {"rhs", c.rhs},
                               {"residual", c.residual},
                               {"tolerance", c.tolerance},
                               {"pass", c.pass}});
    doc["pass"] = all_pass();
    return doc;
  }

 private:
  std::string command_;
  std::string digest_;
  double tolerance_;
  std::vector<Check> checks_;
  std::vector<std::pair<std::string, std::string>> notes_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace tildelab
