// torimon command line: classify and verify corank-one monoid structures
// on affine toric varieties described by JSON spec files.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "torimon/report.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw torimon::UsageError("cannot open spec file '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monoid structures of corank one on affine toric varieties"};
  app.require_subcommand(1);

  std::string spec_path;
  torimon::RunFlags flags;
  std::string command;

  for (const char* name : {"classify", "idempotents", "center", "zero", "roots", "multiply",
                           "verify", "report"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--spec", spec_path, "monoid spec file (JSON)")->required();
    sub->add_option("--format", flags.format, "output format: json|text");
    sub->add_option("--samples", flags.samples, "sample count for verification");
    sub->add_option("--seed", flags.seed, "seed for verification sampling");
    if (std::string(name) == "roots") {
      sub->add_option("--ray", flags.ray, "ray index (defaults to the distinguished ray)");
      sub->add_option("--bound", flags.bound, "coordinate box bound for root enumeration");
    }
    if (std::string(name) == "multiply") {
      sub->add_option("--x", flags.x_csv, "first point, comma-separated rationals")->required();
      sub->add_option("--y", flags.y_csv, "second point, comma-separated rationals")->required();
    }
    if (std::string(name) == "verify" || std::string(name) == "report") {
      sub->add_option("--grid", flags.grid_csv, "grid values for the idempotent oracle");
    }
    sub->callback([name, &command] { command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 1;
  }

  try {
    if (const char* env = std::getenv("TORIMON_BUDGET")) {
      try {
        flags.budget_override = std::stoll(env);
      } catch (const std::exception&) {
        throw torimon::UsageError("TORIMON_BUDGET must be an integer");
      }
      if (*flags.budget_override < 1) throw torimon::UsageError("TORIMON_BUDGET must be positive");
    }
    torimon::MonoidSpec spec = torimon::parse_spec(read_file(spec_path));
    nlohmann::json rep = torimon::run(command, spec, flags);
    std::cout << torimon::emit_report(rep, flags.format);
    return 0;
  } catch (const torimon::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case torimon::ErrorKind::usage:
        return 1;
      case torimon::ErrorKind::validation:
        return 2;
      case torimon::ErrorKind::scale_limit:
        return 3;
    }
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
