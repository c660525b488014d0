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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qmaze {

inline constexpr unsigned kDefaultMaxMazeDepth = 24;

/// Leaf index in [0, 2^N).
using EndpointIndex = std::uint64_t;

/// Root-to-leaf decisions, first decision first. 1 = up, 0 = down.
class PathBits {
 public:
  PathBits() = default;
  /// Throws ArgumentError if any value is not 0 or 1.
  explicit PathBits(std::vector<std::uint8_t> decisions);

  std::size_t size() const noexcept { return decisions_.size(); }
  std::uint8_t operator[](std::size_t i) const { return decisions_[i]; }
  const std::vector<std::uint8_t>& decisions() const noexcept {
    return decisions_;
  }

  /// "101" for [1,0,1].
  std::string to_string() const;

  friend bool operator==(const PathBits&, const PathBits&) = default;

 private:
  std::vector<std::uint8_t> decisions_;
};

/// Perfect binary maze of `depth` decisions, stored implicitly.
class BinaryMaze {
 public:
  unsigned depth() const noexcept { return depth_; }
  std::uint64_t endpoint_count() const noexcept {
    return std::uint64_t{1} << depth_;
  }
  const std::optional<EndpointIndex>& target() const noexcept {
    return target_;
  }

  friend bool operator==(const BinaryMaze&, const BinaryMaze&) = default;

 private:
  friend BinaryMaze build_maze(unsigned, std::optional<EndpointIndex>,
                               unsigned);
  unsigned depth_ = 0;
  std::optional<EndpointIndex> target_;
};

/// Throws ArgumentError if depth is 0 or above `max_depth`, or the target is
/// not below 2^depth.
BinaryMaze build_maze(unsigned depth,
                      std::optional<EndpointIndex> target = std::nullopt,
                      unsigned max_depth = kDefaultMaxMazeDepth);

/// Explicit tree for checking externally supplied structure. Node 0 is the
/// root; children[v] lists v's children in (down, up) order.
struct ExplicitMaze {
  std::vector<std::vector<std::size_t>> children;
};

struct DefectReport {
  std::size_t node = 0;
  std::string reason;
};

/// Defect-free means: every internal node has exactly two children, every
/// node is reached exactly once from the root, and all leaves share one
/// depth >= 1. Returns the first offending node in breadth-first order, or
/// nullopt when the tree is a perfect binary maze.
std::optional<DefectReport> validate(const ExplicitMaze& maze);

/// Materializes the implicit tree in heap order: node v has children
/// 2v+1 (down) and 2v+2 (up).
ExplicitMaze expand(const BinaryMaze& maze);

/// sum_i decision_i * 2^(N-1-i). Throws ArgumentError if path.size() != depth.
EndpointIndex endpoint_of(const PathBits& path, unsigned depth);

/// Inverse of endpoint_of. Throws ArgumentError if endpoint >= 2^depth.
PathBits path_of(EndpointIndex endpoint, unsigned depth);

/// Maze file:
///   QMAZE v1
///   N <depth>
///   TARGET <endpoint>     (optional)
/// '#' lines are comments. Throws ParseError with the offending line.
BinaryMaze parse_maze_text(std::string_view text,
                           unsigned max_depth = kDefaultMaxMazeDepth);

std::string emit_maze_text(const BinaryMaze& maze);

}  // namespace qmaze
