#pragma once

// Named verification runs shared by the command-line tool and the tests.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sasaki/classifier.hpp"
#include "sasaki/report.hpp"

namespace sasaki {

struct UnknownExample : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct VerifyOptions {
  int grid = 5;                 // points per axis
  std::optional<double> tol;    // overrides every check tolerance
  Execution execution = Execution::parallel;
};

// Names accepted by verify_example; "legendre-helix:<k1>" takes k1 in (0, 1)
// and "cylinder-minus4-<k>" takes k in {1, 2, 3}.
std::vector<std::string> registered_examples();

// Throws UnknownExample for names outside the registry.
VerificationReport verify_example(const std::string& name, const VerifyOptions& opt = {});

VerificationReport classify_report(double c, const FallbackOptions& fb = {});
VerificationReport classify_minus4_report(const FallbackOptions& fb = {});
// lo <= hi, step > 0; throws std::invalid_argument otherwise.
VerificationReport classify_sweep_report(double lo, double hi, double step, const FallbackOptions& fb = {});

}  // namespace sasaki
