#include "sasaki/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sasaki {

CheckResult make_check(std::string name, double residual, double tolerance) {
  return {std::move(name), residual, tolerance, residual < tolerance};
}

std::string decimal17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void VerificationReport::add(const std::vector<CheckResult>& checks) {
  checks_.insert(checks_.end(), checks.begin(), checks.end());
}

void VerificationReport::set_scalar(const std::string& key, double value, const std::string& symbolic) {
  nlohmann::json s = {{"value", value}, {"decimal", decimal17(value)}};
  if (!symbolic.empty()) s["symbolic"] = symbolic;
  computed_[key] = std::move(s);
}

void VerificationReport::override_tolerance(double tol) {
  for (auto& c : checks_) c = make_check(c.name, c.residual, tol);
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"name", c.name},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"pass", c.pass}});
  }
  return {{"subject", subject_}, {"checks", std::move(checks)}, {"computed", computed_}};
}

VerificationReport VerificationReport::from_json(const nlohmann::json& j) {
  VerificationReport r(j.at("subject").get<std::string>());
  for (const auto& c : j.at("checks")) {
    r.checks_.push_back({c.at("name").get<std::string>(), c.at("residual").get<double>(),
                         c.at("tolerance").get<double>(), c.at("pass").get<bool>()});
  }
  r.computed_ = j.at("computed");
  return r;
}

std::string VerificationReport::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string VerificationReport::to_csv() const {
  std::ostringstream out;
  out << "check,residual,tolerance,pass\n";
  for (const auto& c : checks_) {
    out << c.name << ',' << decimal17(c.residual) << ',' << decimal17(c.tolerance) << ','
        << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << subject_ << '\n';
  for (const auto& c : checks_) {
    char line[160];
    std::snprintf(line, sizeof line, "  %-4s %-32s residual %.3e  tol %.1e\n", c.pass ? "ok" : "FAIL",
                  c.name.c_str(), c.residual, c.tolerance);
    out << line;
  }
  for (const auto& [key, value] : computed_.items()) {
    out << "  " << key << " = ";
    if (value.is_object() && value.contains("decimal")) {
      out << value["decimal"].get<std::string>();
      if (value.contains("symbolic")) out << "  (" << value["symbolic"].get<std::string>() << ')';
    } else {
      out << value.dump();
    }
    out << '\n';
  }
  out << (all_pass() ? "PASS" : "FAIL") << '\n';
  return out.str();
}

}  // namespace sasaki
