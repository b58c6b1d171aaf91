// Command-line driver. See README.md for the instance file format.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "degen/degen.hpp"

namespace {

constexpr int kInputError = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw degen::ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

degen::bundle::InstanceBundle load(const std::string& path, bool strict) {
  auto res = degen::bundle::parse_bundle(read_file(path), strict);
  for (const auto& w : res.warnings) std::cerr << "warning: " << w << "\n";
  return std::move(res.bundle);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for semistable degenerations and function-field L-values", "degen"};
  app.require_subcommand(1);
  app.fallthrough();
  bool tsv = false;
  bool strict = true;
  app.add_flag("--tsv", tsv, "Emit tab-separated rows: check, place, verdict, value");
  app.add_flag("--strict,!--no-strict", strict, "Reject unknown keys in instance files (default)");

  std::string file, which, example_name, out_path;
  std::optional<int> q, a, star;
  std::vector<std::string> example_params;

  auto* validate = app.add_subcommand("validate", "Check the identities of gamma and rho");
  validate->add_option("file", file, "Instance file")->required();

  auto* dim = app.add_subcommand("dim-theorem", "Compare Deligne dimensions with L-factor poles");
  dim->add_option("file", file, "Instance file")->required();
  dim->add_option("--q", q, "Cohomological degree (default: params)");
  dim->add_option("--a", a, "Evaluation point s = a (default: params)");

  auto* check = app.add_subcommand("check", "Run a named conjecture check");
  check->add_option("which", which, "A1, A2, B1FF, B2FF or CFF")
      ->required()
      ->check(CLI::IsMember({"A1", "A2", "B1FF", "B2FF", "CFF"}));
  check->add_option("file", file, "Instance file")->required();

  auto* complex = app.add_subcommand("complex", "Print row, cone and kernel/cokernel complexes");
  complex->add_option("file", file, "Instance file")->required();
  complex->add_option("--q", q, "Degree of interest")->required();
  complex->add_option("--star", star, "Row index s")->required();

  auto* qiso = app.add_subcommand("quasi-iso", "Compare cohomology of Cone(N) and the small complex");
  qiso->add_option("file", file, "Instance file")->required();
  qiso->add_option("--q", q, "Degree of interest")->required();
  qiso->add_option("--star", star, "Row index s")->required();

  auto* example = app.add_subcommand("example", "Write a builtin example bundle");
  example->add_option("name", example_name, "ngon, smooth-ec or zeta-fqt")->required();
  example->add_option("params", example_params, "key=value parameters");
  example->add_option("-o,--output", out_path, "Output file (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kInputError;
  }

  try {
    namespace wb = degen::workbench;
    if (example->parsed()) {
      const auto b = wb::cmd_example(example_name, example_params);
      const std::string text = degen::bundle::serialize_bundle(b);
      if (out_path.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) throw degen::ParseError("cannot write " + out_path);
        out << text;
      }
      return 0;
    }

    const auto b = load(file, strict);
    wb::CheckReport report;
    if (validate->parsed()) {
      report = wb::cmd_validate(b);
    } else if (dim->parsed()) {
      const int qq = q ? *q : degen::workbench::detail::need_params(b).q_cohomological;
      const int aa = a ? *a : degen::workbench::detail::need_params(b).a;
      report = wb::cmd_dim_theorem(b, qq, aa);
    } else if (check->parsed()) {
      report = wb::cmd_conjecture(b, which);
    } else if (complex->parsed()) {
      report = wb::cmd_complex(b, *q, *star);
    } else {
      report = wb::cmd_quasi_iso(b, *q, *star);
    }
    std::cout << (tsv ? report.tsv() : report.text());
    return report.exit_code();
  } catch (const degen::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
