#pragma once

// Exact searches for sets without tangents: the minimum size u_q, complete
// enumeration at a fixed size and classification up to PGL(3,q).

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "tangentfree/plane.hpp"

namespace tangentfree {

struct SearchOptions {
  /// OpenMP threads; 0 = runtime default.
  int workers = 0;
  /// False selects the serial reference driver.
  bool parallel = true;
  /// Depth at which the parallel driver cuts the tree into tasks.
  int split_depth = 3;
  /// Wall-clock budget in seconds for the whole call.
  std::optional<double> time_budget;
};

/// q + sqrt(2q)/4 + 2.
double size_lower_bound(int q);
/// Smallest integer size allowed by size_lower_bound.
int min_size_bound(int q);

struct MinSearchResult {
  int q = 0;
  int cap = 0;
  bool found = false;
  /// Smallest size with a set without tangents (valid when found).
  int u = 0;
  std::optional<PointSet> witness;
  /// Every size below this has been proved empty.
  int verified_lower_bound = 0;
  bool budget_exceeded = false;
  long long nodes = 0;
  double wall_time = 0;
};

/// Iterative deepening from min_size_bound(q) to cap. Each size is searched over
/// normalized roots: a line of maximum secant m is x = 0 with
/// <(0,1,0)>, <(0,1,1)>, <(0,0,1)> among its points, <(1,0,0)> is in the set
/// and so is <(1,1,z)> where <(0,1,z)> is the first point of x = 0 left out.
/// Throws OddOrderRequired or CapTooSmall.
MinSearchResult min_tangent_free(const PlanePtr& plane, int cap, const SearchOptions& options = {});

/// Direct subset enumeration, q = 3 only. Throws TooLarge otherwise.
int brute_force_min(const PlanePtr& plane);

/// Every set without tangents of size n, sorted by member list. Throws
/// Infeasible for q > 5.
std::vector<PointSet> enumerate_tangent_free(const PlanePtr& plane, int n, const SearchOptions& options = {});

/// Every set without tangents of size n whose largest secant has m points,
/// up to projective equivalence (each class appears at least once).
std::vector<PointSet> enumerate_by_max_secant(const PlanePtr& plane, int n, int m, const SearchOptions& options = {});

/// PGL(3,q) as permutations of point indices.
class PglGroup {
 public:
  /// Throws GroupTooLarge for q > 5.
  static std::shared_ptr<const PglGroup> make(const PlanePtr& plane);

  const PlanePtr& plane() const { return plane_; }
  std::size_t order() const { return order_; }
  int image(std::size_t g, int point) const {
    return perms_[g * static_cast<std::size_t>(n_) + static_cast<std::size_t>(point)];
  }
  /// Sorted index list of the image of `points` under element g.
  std::vector<int> apply(std::size_t g, const std::vector<int>& points) const;

 private:
  PlanePtr plane_;
  int n_ = 0;
  std::size_t order_ = 0;
  std::vector<std::uint16_t> perms_;
};

/// Normalized invertible matrices (first nonzero entry 1), serial enumeration.
std::vector<Mat3> pgl_matrices(const Plane& plane);

struct OrbitRep {
  /// Lexicographically minimal sorted index list over the orbit.
  PointSet canonical;
  long stabilizer_order = 0;
  long class_size = 0;
  /// Positions in the input list of the sets in this class.
  std::vector<std::size_t> members;
};

/// Partition of the input sets into PGL(3,q)-orbits, ordered by canonical form.
std::vector<OrbitRep> classify_up_to_pgl(const PglGroup& group, const std::vector<PointSet>& sets);

/// Canonical form of a single set.
std::vector<int> canonical_form(const PglGroup& group, const PointSet& s);

bool projectively_equivalent(const PglGroup& group, const PointSet& a, const PointSet& b);

struct ExtendedResult {
  MinSearchResult search;
  /// Smallest set from the explicit constructions, as an upper bound.
  std::optional<PointSet> best_known;
};

/// u_q for q in {9, 11} under a time budget. Throws InvalidArgument otherwise.
ExtendedResult u_extended(const PlanePtr& plane, double budget_seconds, const SearchOptions& options = {});

}  // namespace tangentfree
