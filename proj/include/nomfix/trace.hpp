#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nomfix {

/// One node of a derivation: the rule used, the judgement it concluded, and
/// the premises. Failed searches keep the last attempt.
struct TraceNode {
  std::string rule;
  std::string goal;
  bool ok = false;
  std::vector<TraceNode> children;
};

/// Counters for the well-founded measure of the judgement rules.
struct JudgementStats {
  std::uint64_t judgements = 0;
  std::uint64_t measure_checks = 0;
  std::uint64_t measure_violations = 0;
};

struct CheckOptions {
  bool trace = false;
  JudgementStats* stats = nullptr;
};

struct Verdict {
  bool holds = false;
  std::optional<TraceNode> trace;

  explicit operator bool() const { return holds; }
};

}  // namespace nomfix
