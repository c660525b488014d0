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

#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "qmaze/maze.hpp"

namespace qmaze {

/// Which child depth-first search descends into first.
enum class BranchOrder { zero_first, one_first };

std::string_view to_string(BranchOrder order) noexcept;
BranchOrder parse_branch_order(std::string_view name);

/// Exhaustive sweeps above this depth are refused; use the closed form.
inline constexpr unsigned kMaxMeasuredDepth = 20;
/// Closed forms are exact in 64 bits up to here.
inline constexpr unsigned kMaxReportDepth = 60;

/// One step = one edge walked, forward or back.
struct DfsReport {
  PathBits path;
  EndpointIndex target = 0;
  std::uint64_t edge_steps = 0;
  /// First visits, root included.
  std::uint64_t nodes_expanded = 0;
};

/// Depth-first search from the root that backtracks out of wrong leaves and
/// stops on reaching `target`.
DfsReport dfs_solve(unsigned depth, EndpointIndex target, BranchOrder order);

struct StepSummary {
  unsigned depth = 0;
  std::uint64_t worst_edge_steps = 0;
  std::uint64_t best_edge_steps = 0;
  double mean_edge_steps = 0.0;
  std::uint64_t worst_nodes_expanded = 0;
  double mean_nodes_expanded = 0.0;
  std::uint64_t formula_value = 0;  // 2^(N+1) - (N+2)
  std::uint64_t quantum_steps = 0;  // N
};

/// Exact worst/best/mean over all 2^N targets. One full traversal suffices:
/// a search that halts at target t has walked exactly the prefix of the full
/// traversal that ends on t's first arrival. Throws ResourceLimitError above
/// kMaxMeasuredDepth.
StepSummary worst_and_mean_steps(unsigned depth, BranchOrder order);

/// Published DFS step bound, 2^(N+1) - (N+2).
std::uint64_t published_bound(unsigned depth);

/// Worst-case edge steps in closed form, 2^(N+2) - N - 4.
std::uint64_t worst_case_closed_form(unsigned depth);

/// Figures previously published for this comparison; reports print them
/// next to the computed values.
struct QuotedFigures {
  unsigned depth = 0;
  double classical_worst_steps = 0.0;
  std::uint64_t quantum_steps = 0;
  std::optional<double> classical_mean_steps;
  std::optional<double> quantum_mean_steps;
  std::optional<double> ratio_percent;
  std::optional<double> days_at_1e9_ops;
};

std::optional<QuotedFigures> quoted_figures(unsigned depth);

struct QuotedAudit {
  QuotedFigures quoted;
  bool worst_matches_measured = false;
  bool worst_matches_bound = false;
  /// Quoted worst step count disagrees with both the measurement (or its
  /// closed form) and the published bound.
  bool worst_discrepancy = false;
  bool quantum_steps_match = false;
  std::optional<bool> mean_matches_measured;
  std::optional<bool> quantum_mean_matches;
  /// 100 * quoted quantum steps / quoted classical steps.
  double implied_ratio_percent = 0.0;
  std::optional<bool> ratio_consistent;
  /// Quoted classical steps / 1e9 ops/s, in days.
  double implied_days = 0.0;
  std::optional<bool> days_consistent;
};

struct ComparisonRow {
  unsigned depth = 0;
  std::uint64_t quantum_steps = 0;
  /// True when the worst case was measured by exhaustive DFS; false when it
  /// comes from the closed form.
  bool measured = false;
  std::optional<StepSummary> summary;
  std::uint64_t worst_edge_steps = 0;
  std::uint64_t closed_form = 0;
  std::uint64_t formula_value = 0;
  bool formula_matches_worst = false;
  double ratio_percent = 0.0;
  double classical_seconds = 0.0;
  double ops_per_sec = 0.0;
  std::optional<QuotedAudit> quoted;
  /// Any quoted or formula number that disagrees with the worst case.
  bool discrepancy = false;
};

/// Throws ArgumentError if ops_per_sec <= 0 or depth is outside
/// [1, kMaxReportDepth].
ComparisonRow comparison_row(unsigned depth, double ops_per_sec,
                             BranchOrder order = BranchOrder::zero_first);

}  // namespace qmaze
