#pragma once

#include <set>
#include <utility>
#include <vector>

#include "nomfix/signature.hpp"
#include "nomfix/unify.hpp"

namespace nomfix::detail {

struct SimplifyConfig {
  const Signature* sig = nullptr;  // null: every symbol uninterpreted
  bool c_mode = false;             // branch on commutative heads
  const std::set<Var>* rigid = nullptr;
};

/// Children of one rewrite of the first rewritable constraint.
std::vector<std::pair<Problem, SimplStep>> rewrite(const SimplifyConfig& cfg, const Problem& pr,
                                                   NameGenerator& gen);

/// (distinct variables, multiset of sizes or heights, sorted descending)
using ProblemMeasure = std::pair<std::size_t, std::vector<std::size_t>>;

ProblemMeasure problem_measure(const Problem& pr, bool heights);
bool measure_less(const ProblemMeasure& l, const ProblemMeasure& r);

void record_measure(MeasureStats* stats, const Problem& before, const Problem& after,
                    bool heights);

}  // namespace nomfix::detail
