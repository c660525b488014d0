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

#include "qmaze/maze.hpp"

#include <algorithm>
#include <charconv>
#include <deque>

#include "qmaze/errors.hpp"

namespace qmaze {

namespace {

std::optional<std::uint64_t> parse_u64(std::string_view tok) {
  if (tok.empty()) return std::nullopt;
  std::uint64_t v = 0;
  const auto* end = tok.data() + tok.size();
  const auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (ec != std::errc{} || ptr != end) return std::nullopt;
  return v;
}

}  // namespace

PathBits::PathBits(std::vector<std::uint8_t> decisions)
    : decisions_(std::move(decisions)) {
  for (auto d : decisions_) {
    if (d > 1) throw ArgumentError("path decisions must be 0 or 1");
  }
}

std::string PathBits::to_string() const {
  std::string s;
  s.reserve(decisions_.size());
  for (auto d : decisions_) s += d ? '1' : '0';
  return s;
}

BinaryMaze build_maze(unsigned depth, std::optional<EndpointIndex> target,
                      unsigned max_depth) {
  if (depth < 1) throw ArgumentError("maze depth must be at least 1");
  if (depth > max_depth || depth > 62) {
    throw ArgumentError("maze depth " + std::to_string(depth) +
                        " exceeds the cap of " + std::to_string(max_depth));
  }
  if (target && *target >= (std::uint64_t{1} << depth)) {
    throw ArgumentError("target " + std::to_string(*target) +
                        " out of range for depth " + std::to_string(depth));
  }
  BinaryMaze m;
  m.depth_ = depth;
  m.target_ = target;
  return m;
}

std::optional<DefectReport> validate(const ExplicitMaze& maze) {
  const auto& ch = maze.children;
  if (ch.empty()) return DefectReport{0, "maze has no nodes"};

  std::vector<std::size_t> node_depth(ch.size(), 0);
  std::vector<bool> seen(ch.size(), false);
  std::vector<std::size_t> leaves;
  std::deque<std::size_t> queue{0};
  seen[0] = true;

  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    const auto& kids = ch[v];
    if (kids.empty()) {
      leaves.push_back(v);
      continue;
    }
    if (kids.size() != 2) {
      return DefectReport{v, "node has " + std::to_string(kids.size()) +
                                 " children, expected 0 or 2"};
    }
    for (std::size_t c : kids) {
      if (c >= ch.size()) {
        return DefectReport{v, "child index " + std::to_string(c) +
                                   " does not exist"};
      }
      if (seen[c]) {
        return DefectReport{c, "node is reached more than once"};
      }
      seen[c] = true;
      node_depth[c] = node_depth[v] + 1;
      queue.push_back(c);
    }
  }

  for (std::size_t v = 0; v < ch.size(); ++v) {
    if (!seen[v]) return DefectReport{v, "node is unreachable from the root"};
  }

  std::size_t deepest = 0;
  for (auto leaf : leaves) deepest = std::max(deepest, node_depth[leaf]);
  if (deepest == 0) return DefectReport{0, "root has no decisions"};
  for (auto leaf : leaves) {
    if (node_depth[leaf] != deepest) {
      return DefectReport{leaf, "dead end at depth " +
                                    std::to_string(node_depth[leaf]) +
                                    " before the last row (depth " +
                                    std::to_string(deepest) + ")"};
    }
  }
  return std::nullopt;
}

ExplicitMaze expand(const BinaryMaze& maze) {
  const std::size_t internal = (std::size_t{1} << maze.depth()) - 1;
  const std::size_t total = 2 * internal + 1;
  ExplicitMaze out;
  out.children.resize(total);
  for (std::size_t v = 0; v < internal; ++v) {
    out.children[v] = {2 * v + 1, 2 * v + 2};
  }
  return out;
}

EndpointIndex endpoint_of(const PathBits& path, unsigned depth) {
  if (path.size() != depth) {
    throw ArgumentError("path has " + std::to_string(path.size()) +
                        " decisions, maze depth is " + std::to_string(depth));
  }
  EndpointIndex e = 0;
  for (std::size_t i = 0; i < path.size(); ++i) e = (e << 1) | path[i];
  return e;
}

PathBits path_of(EndpointIndex endpoint, unsigned depth) {
  if (depth > 63 || endpoint >= (std::uint64_t{1} << depth)) {
    throw ArgumentError("endpoint " + std::to_string(endpoint) +
                        " out of range for depth " + std::to_string(depth));
  }
  std::vector<std::uint8_t> d(depth);
  for (unsigned i = 0; i < depth; ++i) {
    d[i] = static_cast<std::uint8_t>((endpoint >> (depth - 1 - i)) & 1U);
  }
  return PathBits(std::move(d));
}

BinaryMaze parse_maze_text(std::string_view text, unsigned max_depth) {
  enum class Expect { header, depth, rest } expect = Expect::header;
  std::optional<unsigned> depth;
  std::optional<EndpointIndex> target;
  std::size_t target_line = 0;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (expect == Expect::header) {
      if (line != "QMAZE v1") {
        throw ParseError(line_no, "expected header 'QMAZE v1'");
      }
      expect = Expect::depth;
      continue;
    }

    const auto sp = line.find(' ');
    const std::string_view key = line.substr(0, sp);
    const std::string_view value =
        sp == std::string_view::npos ? std::string_view{} : line.substr(sp + 1);

    if (key == "N") {
      if (depth) throw ParseError(line_no, "duplicate N");
      const auto v = parse_u64(value);
      if (!v) throw ParseError(line_no, "N needs a decimal depth");
      if (*v < 1 || *v > max_depth) {
        throw ParseError(line_no, "depth " + std::string(value) +
                                      " outside [1, " +
                                      std::to_string(max_depth) + "]");
      }
      depth = static_cast<unsigned>(*v);
      expect = Expect::rest;
    } else if (key == "TARGET") {
      if (expect == Expect::depth) {
        throw ParseError(line_no, "N must precede TARGET");
      }
      if (target) throw ParseError(line_no, "duplicate TARGET");
      const auto v = parse_u64(value);
      if (!v) throw ParseError(line_no, "TARGET needs a decimal endpoint");
      target = *v;
      target_line = line_no;
    } else {
      throw ParseError(line_no, "unknown key '" + std::string(key) + "'");
    }
  }

  if (expect == Expect::header) {
    throw ParseError(line_no == 0 ? 1 : line_no, "missing header 'QMAZE v1'");
  }
  if (!depth) throw ParseError(line_no, "missing N");
  if (target && *target >= (std::uint64_t{1} << *depth)) {
    throw ParseError(target_line, "target " + std::to_string(*target) +
                                      " out of range for depth " +
                                      std::to_string(*depth));
  }
  return build_maze(*depth, target, max_depth);
}

std::string emit_maze_text(const BinaryMaze& maze) {
  std::string out = "QMAZE v1\nN " + std::to_string(maze.depth()) + "\n";
  if (maze.target()) out += "TARGET " + std::to_string(*maze.target()) + "\n";
  return out;
}

}  // namespace qmaze
