#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sasaki/verify_suite.hpp"

namespace sasaki {

namespace {

std::string render(const VerificationReport& r, const std::string& format) {
  if (format == "csv") return r.to_csv();
  if (format == "text") return r.to_text();
  return r.to_json_string();
}

struct SweepSpec {
  double lo, hi, step;
};

SweepSpec parse_sweep(const std::string& s) {
  std::stringstream in(s);
  std::string part;
  std::vector<double> v;
  while (std::getline(in, part, ':')) {
    std::size_t used = 0;
    try {
      v.push_back(std::stod(part, &used));
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid sweep: " + s);
    }
    if (used != part.size()) throw std::invalid_argument("invalid sweep: " + s);
  }
  if (v.size() != 3) throw std::invalid_argument("invalid sweep: expected lo:hi:step");
  return {v[0], v[1], v[2]};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Biharmonic integral submanifolds of Sasakian space forms: verification and classification"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string out_file;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", out_file, "Write the report to this file instead of stdout");
  };

  CLI::App* verify = app.add_subcommand("verify", "Run the check suite for a registered example");
  std::string example;
  int grid = 5;
  std::optional<double> tol;
  verify->add_option("example", example, "Example name")->required();
  verify->add_option("--grid", grid, "Grid points per parameter axis")->check(CLI::PositiveNumber);
  verify->add_option("--tol", tol, "Override every check tolerance");
  add_common(verify);

  CLI::App* classify = app.add_subcommand("classify", "Solve the flat and Case II systems");
  std::optional<double> c;
  std::string sweep;
  std::string mode = "biharmonic";
  auto* c_opt = classify->add_option("--c", c, "phi-sectional curvature");
  auto* sweep_opt = classify->add_option("--c-sweep", sweep, "lo:hi:step");
  c_opt->excludes(sweep_opt);
  classify->add_option("--mode", mode, "Criterion")->check(CLI::IsMember({"biharmonic", "minus4"}));
  add_common(classify);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 2;
  }

  VerificationReport report("");
  try {
    if (verify->parsed()) {
      report = verify_example(example, {grid, tol, Execution::parallel});
    } else if (mode == "minus4") {
      if (c || !sweep.empty()) {
        err << "--mode minus4 is defined for c = 1 only; omit --c and --c-sweep\n";
        return 2;
      }
      report = classify_minus4_report({});
    } else if (!sweep.empty()) {
      const SweepSpec s = parse_sweep(sweep);
      report = classify_sweep_report(s.lo, s.hi, s.step, {});
    } else {
      if (!c) {
        err << "classify needs --c, --c-sweep or --mode minus4\n";
        return 2;
      }
      report = classify_report(*c, {});
    }
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return 2;
  }

  const std::string text = render(report, format);
  if (out_file.empty()) {
    out << text;
  } else {
    std::ofstream file(out_file);
    if (!file) {
      err << "cannot open " << out_file << "\n";
      return 2;
    }
    file << text;
  }
  return report.all_pass() ? 0 : 1;
}

}  // namespace sasaki
