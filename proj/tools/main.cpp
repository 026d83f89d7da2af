#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "nomfix/cli.hpp"

namespace {

std::string slurp(const std::string& path) {
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw nomfix::cli::InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace nomfix;
  CLI::App app{"nomfix: nominal alpha-equivalence and unification with fixed-point constraints"};
  std::string command;
  std::string file;
  std::string sig_file;
  cli::Flags flags;
  app.add_option("command", command,
                 "alpha | fresh | fixp | unify | cunify | translate")
      ->required();
  app.add_option("file", file, "problem file ('-' or omitted: stdin)");
  app.add_flag("--json", flags.json, "JSON output");
  app.add_flag("--trace", flags.trace, "include derivation traces");
  app.add_flag("--tree", flags.tree, "cunify: include the derivation tree");
  app.add_flag("--dedup", flags.dedup, "cunify: drop solutions equivalent to earlier ones");
  app.add_flag("--explain", flags.explain, "echo freshness-to-fixed-point translations");
  app.add_option("--jobs", flags.jobs, "cunify: worker threads for the first branching");
  app.add_option("--fresh-prefix", flags.fresh_prefix, "prefix of generated atoms (default #c)");
  app.add_option("--sig", sig_file, "signature file with 'sym f : C ;' lines");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  const auto cmd = cli::parse_command(command);
  const auto format = flags.json ? cli::Format::json : cli::Format::text;
  if (!cmd) {
    std::cout << cli::serialize_report(
        cli::error_report(cli::Command::alpha, "unknown command '" + command + "'"), format);
    return 2;
  }

  cli::Report report;
  try {
    Signature base;
    if (!sig_file.empty()) base = parse_signature(slurp(sig_file));
    // Undeclared symbols default to the empty theory.
    base.set_permissive(true);
    ParseOptions popts;
    popts.allow_generated = true;
    ProblemFile pf;
    if (*cmd != cli::Command::selfcheck || !file.empty()) {
      pf = parse_problem(slurp(file), base, popts);
    }
    report = cli::run_command(*cmd, pf, flags);
  } catch (const ParseError& e) {
    report = cli::error_report(*cmd, e.what());
  } catch (const SignatureError& e) {
    report = cli::error_report(*cmd, e.what());
  } catch (const cli::InputError& e) {
    report = cli::error_report(*cmd, e.what());
  } catch (const std::invalid_argument& e) {
    report = cli::error_report(*cmd, e.what());
  }
  std::cout << cli::serialize_report(report, format);
  return report.exit_code;
}
