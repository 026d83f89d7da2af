#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "nomfix/context.hpp"
#include "nomfix/problem.hpp"
#include "nomfix/signature.hpp"
#include "nomfix/term.hpp"

namespace nomfix {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::string message_;
  int line_;
  int column_;
};

struct ParseOptions {
  /// Accept generated atoms such as `#c3` (used when reading back printed output).
  bool allow_generated = false;
};

std::string to_string(const Permutation& p);  // "(a b)(b c)", or "id"
std::string to_string(const Term& t);
std::string to_string(const Substitution& s);  // "{X -> a, Y -> (a b).Z}"
std::string to_string(const FixpointContext& ctx);  // "{(a b) fix X}"
std::string to_string(const FreshnessContext& ctx);  // "{a fresh X}"
std::string to_string(const Constraint& c);
std::string to_string(const Problem& pr);
std::string to_string(const Solution& sol);  // "{...} |- {...}"

Term parse_term(const std::string& text, const Signature& sig, const ParseOptions& opts = {});
Permutation parse_perm(const std::string& text, const ParseOptions& opts = {});
/// Reads the output of to_string(const Solution&).
Solution parse_solution(const std::string& text, const Signature& sig,
                        const ParseOptions& opts = {});

/// A constraint as written in a problem file.
struct ParsedConstraint {
  enum class Kind { eq, fix, fresh };
  Kind kind;
  Term lhs;  // eq: left side; fix/fresh: subject term
  Term rhs;  // eq only
  Permutation perm;  // fix only
  Atom atom;  // fresh only
  int line = 0;
  int column = 0;
};

/// Contents of a problem file: signature declarations, an optional context
/// section, and constraints.
struct ProblemFile {
  Signature signature;
  enum class ContextKind { none, fix, fresh };
  ContextKind context_kind = ContextKind::none;
  FixpointContext fix_context;
  FreshnessContext fresh_context;
  std::vector<ParsedConstraint> constraints;
};

/// Parses a problem file. `base` supplies declarations made elsewhere (for
/// example with --sig); declarations in the text are added to it.
ProblemFile parse_problem(const std::string& text, const Signature& base = Signature(),
                          const ParseOptions& opts = {});

/// Signature-only file: "sym f : C ;" lines.
Signature parse_signature(const std::string& text);

/// Inverse of parse_problem up to whitespace and comments.
std::string serialize_problem(const ProblemFile& file);

std::string to_string(const ParsedConstraint& c);

}  // namespace nomfix
