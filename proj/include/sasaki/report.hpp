#pragma once

// Check records and the report emitted by the command-line tool.

#include <string>
#include <vector>

#include "json.hpp"

namespace sasaki {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

// pass is always recomputed from residual < tolerance; NaN residuals fail.
CheckResult make_check(std::string name, double residual, double tolerance);

class VerificationReport {
 public:
  explicit VerificationReport(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<CheckResult>& checks() const { return checks_; }
  const nlohmann::json& computed() const { return computed_; }

  void add(CheckResult check) { checks_.push_back(std::move(check)); }
  void add(const std::vector<CheckResult>& checks);
  // Scalar with 17-significant-digit decimal string and optional closed form.
  void set_scalar(const std::string& key, double value, const std::string& symbolic = "");
  void set(const std::string& key, nlohmann::json value) { computed_[key] = std::move(value); }
  // Overrides every check tolerance and re-evaluates pass flags.
  void override_tolerance(double tol);

  bool all_pass() const;

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  std::string to_json_string() const;  // pretty, two-space indent, trailing newline
  std::string to_csv() const;          // header: check,residual,tolerance,pass
  std::string to_text() const;

 private:
  std::string subject_;
  std::vector<CheckResult> checks_;
  nlohmann::json computed_ = nlohmann::json::object();
};

std::string decimal17(double v);

}  // namespace sasaki
