// Copyright 2026 The qmaze Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qmaze/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "qmaze/errors.hpp"

namespace qmaze {

namespace {

constexpr double kSecondsPerDay = 86400.0;

// Quoted figures are given to two significant digits.
bool close_rel(double quoted, double computed) {
  return std::abs(quoted - computed) <= 0.05 * std::abs(computed);
}

struct Frame {
  EndpointIndex prefix;  // decisions taken so far, first decision highest
  unsigned level;
  unsigned next_child;  // 0, 1, or 2 (exhausted)
};

// Walks the implicit perfect tree depth-first, counting every edge walked.
// `on_leaf(endpoint, edge_steps, nodes_expanded)` returns true to stop.
// Returns the stack at the stopping point, or empty after a full traversal.
template <class OnLeaf>
std::vector<Frame> walk(unsigned depth, BranchOrder order,
                        std::uint64_t& edge_steps,
                        std::uint64_t& nodes_expanded, OnLeaf&& on_leaf) {
  std::vector<Frame> stack;
  stack.reserve(depth + 1);
  stack.push_back({0, 0, 0});
  edge_steps = 0;
  nodes_expanded = 1;

  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.level == depth) {
      if (on_leaf(top.prefix, edge_steps, nodes_expanded)) return stack;
      stack.pop_back();
      ++edge_steps;  // back up to the parent
      continue;
    }
    if (top.next_child < 2) {
      const unsigned bit = order == BranchOrder::zero_first
                               ? top.next_child
                               : 1U - top.next_child;
      ++top.next_child;
      const Frame child{(top.prefix << 1) | bit, top.level + 1, 0};
      ++edge_steps;
      ++nodes_expanded;
      stack.push_back(child);
      continue;
    }
    stack.pop_back();
    if (!stack.empty()) ++edge_steps;
  }
  return stack;
}

}  // namespace

std::string_view to_string(BranchOrder order) noexcept {
  return order == BranchOrder::zero_first ? "zero-first" : "one-first";
}

BranchOrder parse_branch_order(std::string_view name) {
  if (name == "zero-first") return BranchOrder::zero_first;
  if (name == "one-first") return BranchOrder::one_first;
  throw ArgumentError("unknown branch order '" + std::string(name) + "'");
}

DfsReport dfs_solve(unsigned depth, EndpointIndex target, BranchOrder order) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  if (depth > kDefaultMaxMazeDepth) {
    throw ResourceLimitError("single-target DFS is capped at depth " +
                             std::to_string(kDefaultMaxMazeDepth));
  }
  if (target >> depth) {
    throw ArgumentError("target " + std::to_string(target) +
                        " out of range for depth " + std::to_string(depth));
  }
  DfsReport report;
  report.target = target;
  const auto stack =
      walk(depth, order, report.edge_steps, report.nodes_expanded,
           [target](EndpointIndex e, std::uint64_t, std::uint64_t) {
             return e == target;
           });
  if (stack.empty()) {
    throw InternalConsistencyError("search exhausted the maze without a hit");
  }
  // The stack holds the root-to-target chain; read the decisions off it.
  std::vector<std::uint8_t> decisions;
  decisions.reserve(depth);
  for (std::size_t i = 1; i < stack.size(); ++i) {
    decisions.push_back(static_cast<std::uint8_t>(stack[i].prefix & 1U));
  }
  report.path = PathBits(std::move(decisions));
  return report;
}

StepSummary worst_and_mean_steps(unsigned depth, BranchOrder order) {
  if (depth < 1) throw ArgumentError("depth must be at least 1");
  if (depth > kMaxMeasuredDepth) {
    throw ResourceLimitError("exhaustive DFS sweep is capped at depth " +
                             std::to_string(kMaxMeasuredDepth));
  }
  StepSummary s;
  s.depth = depth;
  s.best_edge_steps = ~std::uint64_t{0};
  std::uint64_t sum_steps = 0;
  std::uint64_t sum_nodes = 0;
  std::uint64_t steps = 0;
  std::uint64_t nodes = 0;
  walk(depth, order, steps, nodes,
       [&](EndpointIndex, std::uint64_t edge_steps, std::uint64_t expanded) {
         s.worst_edge_steps = std::max(s.worst_edge_steps, edge_steps);
         s.best_edge_steps = std::min(s.best_edge_steps, edge_steps);
         s.worst_nodes_expanded = std::max(s.worst_nodes_expanded, expanded);
         sum_steps += edge_steps;
         sum_nodes += expanded;
         return false;
       });
  const double leaves = std::ldexp(1.0, static_cast<int>(depth));
  s.mean_edge_steps = static_cast<double>(sum_steps) / leaves;
  s.mean_nodes_expanded = static_cast<double>(sum_nodes) / leaves;
  s.formula_value = published_bound(depth);
  s.quantum_steps = depth;
  return s;
}

std::uint64_t published_bound(unsigned depth) {
  if (depth < 1 || depth > kMaxReportDepth) {
    throw ArgumentError("depth out of range for the step formula");
  }
  return (std::uint64_t{1} << (depth + 1)) - (depth + 2);
}

std::uint64_t worst_case_closed_form(unsigned depth) {
  if (depth < 1 || depth > kMaxReportDepth) {
    throw ArgumentError("depth out of range for the step formula");
  }
  return (std::uint64_t{1} << (depth + 2)) - depth - 4;
}

std::optional<QuotedFigures> quoted_figures(unsigned depth) {
  switch (depth) {
    case 5: {
      QuotedFigures q;
      q.depth = 5;
      q.classical_worst_steps = 59;
      q.quantum_steps = 5;
      q.classical_mean_steps = 30;
      q.quantum_mean_steps = 3;
      return q;
    }
    case 50: {
      QuotedFigures q;
      q.depth = 50;
      q.classical_worst_steps = 1.125e16;
      q.quantum_steps = 50;
      q.ratio_percent = 4.4e-12;
      q.days_at_1e9_ops = 13;
      return q;
    }
    default:
      return std::nullopt;
  }
}

ComparisonRow comparison_row(unsigned depth, double ops_per_sec,
                             BranchOrder order) {
  if (!(ops_per_sec > 0.0) || !std::isfinite(ops_per_sec)) {
    throw ArgumentError("ops_per_sec must be positive");
  }
  if (depth < 1 || depth > kMaxReportDepth) {
    throw ArgumentError("depth must be in [1, " +
                        std::to_string(kMaxReportDepth) + "]");
  }
  ComparisonRow row;
  row.depth = depth;
  row.quantum_steps = depth;
  row.ops_per_sec = ops_per_sec;
  row.closed_form = worst_case_closed_form(depth);
  row.formula_value = published_bound(depth);
  row.measured = depth <= kMaxMeasuredDepth;
  if (row.measured) {
    row.summary = worst_and_mean_steps(depth, order);
    row.worst_edge_steps = row.summary->worst_edge_steps;
  } else {
    row.worst_edge_steps = row.closed_form;
  }
  const auto worst = static_cast<double>(row.worst_edge_steps);
  row.formula_matches_worst = row.formula_value == row.worst_edge_steps;
  row.ratio_percent = 100.0 * static_cast<double>(row.quantum_steps) / worst;
  row.classical_seconds = worst / ops_per_sec;
  row.discrepancy = !row.formula_matches_worst;

  if (auto q = quoted_figures(depth)) {
    QuotedAudit a;
    a.quoted = *q;
    a.worst_matches_measured = q->classical_worst_steps == worst;
    a.worst_matches_bound =
        q->classical_worst_steps == static_cast<double>(row.formula_value);
    a.worst_discrepancy = !a.worst_matches_measured && !a.worst_matches_bound;
    a.quantum_steps_match = q->quantum_steps == row.quantum_steps;
    if (q->classical_mean_steps && row.summary) {
      a.mean_matches_measured =
          close_rel(*q->classical_mean_steps, row.summary->mean_edge_steps);
    }
    if (q->quantum_mean_steps) {
      // Every run of the quantum algorithm takes exactly N steps.
      a.quantum_mean_matches =
          *q->quantum_mean_steps == static_cast<double>(depth);
    }
    a.implied_ratio_percent = 100.0 * static_cast<double>(q->quantum_steps) /
                              q->classical_worst_steps;
    if (q->ratio_percent) {
      a.ratio_consistent = close_rel(*q->ratio_percent, a.implied_ratio_percent);
    }
    a.implied_days = q->classical_worst_steps / 1e9 / kSecondsPerDay;
    if (q->days_at_1e9_ops) {
      a.days_consistent = close_rel(*q->days_at_1e9_ops, a.implied_days);
    }
    const auto bad = [](const std::optional<bool>& ok) {
      return ok.has_value() && !*ok;
    };
    row.discrepancy = row.discrepancy || !a.worst_matches_measured ||
                      !a.quantum_steps_match ||
                      bad(a.mean_matches_measured) ||
                      bad(a.quantum_mean_matches) || bad(a.ratio_consistent) ||
                      bad(a.days_consistent);
    row.quoted = a;
  }
  return row;
}

}  // namespace qmaze
