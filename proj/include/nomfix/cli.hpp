#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "nomfix/text.hpp"

namespace nomfix::cli {

enum class Command { alpha, fresh, fixp, unify, cunify, translate, selfcheck };

std::optional<Command> parse_command(const std::string& name);
std::string command_name(Command c);

struct Flags {
  bool json = false;
  bool trace = false;
  bool tree = false;
  bool dedup = false;
  bool explain = false;
  unsigned jobs = 1;
  std::string fresh_prefix = kDefaultFreshPrefix;
};

/// Problem file inconsistent with the command; maps to exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { text, json };

struct Report {
  Command command = Command::alpha;
  int exit_code = 0;  // 0 derivable/solvable, 1 not, 2 input error
  nlohmann::ordered_json body;
  std::vector<std::string> lines;  // text rendering
};

/// Throws InputError, ParseError or SignatureError on bad input.
Report run_command(Command cmd, const ProblemFile& file, const Flags& flags);

/// Report for an input error.
Report error_report(Command cmd, const std::string& message);

std::string serialize_report(const Report& r, Format format);

}  // namespace nomfix::cli
