#pragma once

// Repair-style depth-first search for sets without tangents.
//
// A node is a partial set S plus a set of forbidden points. If S has a tangent
// line, every tangent-free superset contains one more point of that line, so
// the node branches over the available points c_1..c_k of the tangent line with
// the fewest of them; branch i adds c_i and forbids c_1..c_{i-1}. The branches
// partition the supersets, so each solution is reached exactly once. A cap on
// the number of members per line blocks points whose addition would overflow
// a full line.
//
// The parallel driver expands the tree to a fixed depth, records the frontier
// as tasks in depth-first order and runs the tasks under OpenMP. Results and
// node counts are merged so that they match the serial driver exactly.

#include <atomic>
#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "tangentfree/plane.hpp"

namespace tangentfree::detail {

enum class SearchMode {
  /// Stop at the first non-empty tangent-free set of size <= target.
  FindFirst,
  /// Collect every tangent-free set of size exactly target.
  EnumerateExact,
};

struct SearchRoot {
  std::vector<int> points;
  std::vector<int> forbidden;
  /// Maximum number of members on any line.
  int line_cap = 0;
};

struct SearchConfig {
  SearchMode mode = SearchMode::FindFirst;
  int target = 0;
  /// Absent means no deadline.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

struct SearchOutcome {
  std::vector<std::vector<int>> solutions;
  long long nodes = 0;
  bool aborted = false;
};

/// Plain recursive search over the roots in order.
SearchOutcome run_serial(const Plane& plane, const std::vector<SearchRoot>& roots, const SearchConfig& config);

/// Frontier split at split_depth and run on `workers` OpenMP threads
/// (0 = runtime default). Same solutions, order and node count as run_serial
/// unless the deadline fires.
SearchOutcome run_parallel(const Plane& plane, const std::vector<SearchRoot>& roots, const SearchConfig& config,
                           int workers, int split_depth);

}  // namespace tangentfree::detail
