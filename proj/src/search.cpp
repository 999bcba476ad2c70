#include "tangentfree/search.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>
#include <unordered_set>

#include "search_engine.hpp"
#include "tangentfree/conic.hpp"
#include "tangentfree/constructions.hpp"
#include "tangentfree/error.hpp"
#include "tangentfree/tangency.hpp"

namespace tangentfree {

using detail::SearchConfig;
using detail::SearchMode;
using detail::SearchOutcome;
using detail::SearchRoot;

double size_lower_bound(int q) { return q + std::sqrt(2.0 * q) / 4.0 + 2.0; }

int min_size_bound(int q) { return static_cast<int>(std::ceil(size_lower_bound(q) - 1e-12)); }

namespace {

SearchOutcome run(const Plane& plane, const std::vector<SearchRoot>& roots, const SearchConfig& config,
                  const SearchOptions& options) {
  if (options.parallel) return detail::run_parallel(plane, roots, config, options.workers, options.split_depth);
  return detail::run_serial(plane, roots, config);
}

/// Roots with a line of exactly m members: x = 0 holds <(0,1,0)>, <(0,1,1)>,
/// <(0,0,1)> and m - 3 further points; the rest of x = 0 is forbidden.
/// <(1,0,0)> and <(1,1,z_N)> join the set, N = <(0,1,z_N)> the first point of
/// x = 0 left out. Members past the first three are chosen in lexicographic
/// order of their z codes.
std::vector<SearchRoot> normalized_roots(const Plane& plane, int m) {
  const int q = plane.q();
  const int base = q * q;
  std::vector<SearchRoot> roots;
  if (m < 2 || m > q + 1) return roots;
  const int fixed = m >= 3 ? 3 : 2;
  const int extra = m - fixed;
  std::vector<int> pool;
  for (int z = 2; z < q; ++z) pool.push_back(base + z);
  if (extra > static_cast<int>(pool.size())) return roots;
  std::vector<char> pick(pool.size(), 0);
  std::fill(pick.begin(), pick.begin() + extra, 1);
  do {
    SearchRoot r;
    r.line_cap = m;
    std::vector<char> on(static_cast<std::size_t>(q + 1), 0);  // z code, q for <(0,0,1)>
    on[0] = 1;
    on[static_cast<std::size_t>(q)] = 1;
    if (fixed == 3) on[1] = 1;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (pick[i]) on[static_cast<std::size_t>(pool[i] - base)] = 1;
    int first_out = -1;
    for (int z = 0; z <= q; ++z) {
      const int idx = base + z;
      if (on[static_cast<std::size_t>(z)]) {
        r.points.push_back(idx);
      } else {
        r.forbidden.push_back(idx);
        if (first_out < 0) first_out = z;
      }
    }
    r.points.push_back(0);
    if (first_out >= 0) r.points.push_back(q + first_out);
    roots.push_back(std::move(r));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return roots;
}

std::vector<SearchRoot> min_roots(const Plane& plane, int n) {
  const int q = plane.q();
  std::vector<SearchRoot> all;
  // Odd q: an arc of at most q + 1 points always has a tangent, so m >= 3.
  // Any member on the m-secant lies on q further lines that each need one
  // more point off it, so m <= n - q.
  const int lo = plane.field().odd() ? 3 : 2;
  for (int m = lo; m <= std::min(n - q, q + 1); ++m) {
    auto r = normalized_roots(plane, m);
    all.insert(all.end(), std::make_move_iterator(r.begin()), std::make_move_iterator(r.end()));
  }
  return all;
}

std::optional<std::chrono::steady_clock::time_point> deadline_of(const SearchOptions& options,
                                                                 std::chrono::steady_clock::time_point start) {
  if (!options.time_budget) return std::nullopt;
  return start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*options.time_budget));
}

PointSet verified(const PlanePtr& plane, const std::vector<int>& members) {
  PointSet s(plane, members);
  if (!is_set_without_tangents(s)) throw Error(ErrorCode::Infeasible, "search returned a set with tangents");
  return s;
}

}  // namespace

MinSearchResult min_tangent_free(const PlanePtr& plane, int cap, const SearchOptions& options) {
  const int q = plane->q();
  if (!plane->field().odd()) throw Error(ErrorCode::OddOrderRequired, "minimum search needs odd q");
  const int start_size = min_size_bound(q);
  if (cap < start_size)
    throw Error(ErrorCode::CapTooSmall, "cap " + std::to_string(cap) + " is below the lower bound " +
                                            std::to_string(start_size));
  const auto t0 = std::chrono::steady_clock::now();
  MinSearchResult res;
  res.q = q;
  res.cap = cap;
  res.verified_lower_bound = start_size;
  SearchConfig config;
  config.mode = SearchMode::FindFirst;
  config.deadline = deadline_of(options, t0);
  for (int n = start_size; n <= cap; ++n) {
    config.target = n;
    const SearchOutcome out = run(*plane, min_roots(*plane, n), config, options);
    res.nodes += out.nodes;
    if (!out.solutions.empty() && !out.aborted) {
      res.found = true;
      res.witness = verified(plane, out.solutions.front());
      res.u = res.witness->size();
      break;
    }
    if (out.aborted) {
      res.budget_exceeded = true;
      break;
    }
    res.verified_lower_bound = n + 1;
  }
  res.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

int brute_force_min(const PlanePtr& plane) {
  if (plane->q() != 3) throw Error(ErrorCode::TooLarge, "subset enumeration is limited to q = 3");
  const int n = plane->size();
  for (int k = 1; k <= n; ++k) {
    std::vector<char> pick(static_cast<std::size_t>(n), 0);
    std::fill(pick.begin(), pick.begin() + k, 1);
    do {
      PointSet s(plane);
      for (int p = 0; p < n; ++p)
        if (pick[static_cast<std::size_t>(p)]) s.insert(p);
      if (is_tangent_free(s)) return k;
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return 0;
}

std::vector<PointSet> enumerate_tangent_free(const PlanePtr& plane, int n, const SearchOptions& options) {
  if (plane->q() > 5) throw Error(ErrorCode::Infeasible, "complete enumeration is limited to q <= 5");
  std::vector<SearchRoot> roots;
  // Root i: the smallest member is point i.
  for (int p = 0; p < plane->size(); ++p) {
    SearchRoot r;
    r.line_cap = plane->q() + 1;
    r.points = {p};
    for (int s = 0; s < p; ++s) r.forbidden.push_back(s);
    roots.push_back(std::move(r));
  }
  SearchConfig config;
  config.mode = SearchMode::EnumerateExact;
  config.target = n;
  config.deadline = deadline_of(options, std::chrono::steady_clock::now());
  SearchOutcome out = run(*plane, roots, config, options);
  if (out.aborted) throw Error(ErrorCode::Infeasible, "enumeration exceeded its time budget");
  std::sort(out.solutions.begin(), out.solutions.end());
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()), out.solutions.end());
  std::vector<PointSet> sets;
  sets.reserve(out.solutions.size());
  for (const auto& s : out.solutions) sets.push_back(verified(plane, s));
  return sets;
}

std::vector<PointSet> enumerate_by_max_secant(const PlanePtr& plane, int n, int m, const SearchOptions& options) {
  SearchConfig config;
  config.mode = SearchMode::EnumerateExact;
  config.target = n;
  config.deadline = deadline_of(options, std::chrono::steady_clock::now());
  SearchOutcome out = run(*plane, normalized_roots(*plane, m), config, options);
  if (out.aborted) throw Error(ErrorCode::Infeasible, "enumeration exceeded its time budget");
  std::sort(out.solutions.begin(), out.solutions.end());
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()), out.solutions.end());
  std::vector<PointSet> sets;
  for (const auto& s : out.solutions) sets.push_back(verified(plane, s));
  return sets;
}

std::vector<Mat3> pgl_matrices(const Plane& plane) {
  const auto q = static_cast<std::uint64_t>(plane.q());
  std::uint64_t total = 1;
  for (int i = 0; i < 9; ++i) total *= q;
  std::vector<Mat3> out;
  for (std::uint64_t code = 0; code < total; ++code) {
    Mat3 m{};
    std::uint64_t c = code;
    for (int i = 8; i >= 0; --i) {
      m[static_cast<std::size_t>(i)] = static_cast<Elem>(c % q);
      c /= q;
    }
    const auto first = std::find_if(m.begin(), m.end(), [](Elem e) { return e != 0; });
    if (first == m.end() || *first != 1) continue;
    if (plane.determinant(m) == 0) continue;
    out.push_back(m);
  }
  return out;
}

std::shared_ptr<const PglGroup> PglGroup::make(const PlanePtr& plane) {
  if (plane->q() > 5) throw Error(ErrorCode::GroupTooLarge, "full group enumeration is limited to q <= 5");
  auto g = std::make_shared<PglGroup>();
  g->plane_ = plane;
  g->n_ = plane->size();
  const std::vector<Mat3> mats = pgl_matrices(*plane);
  g->order_ = mats.size();
  g->perms_.assign(g->order_ * static_cast<std::size_t>(g->n_), 0);
  const auto count = static_cast<long long>(mats.size());
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < count; ++i) {
    const auto row = static_cast<std::size_t>(i) * static_cast<std::size_t>(g->n_);
    for (int p = 0; p < g->n_; ++p)
      g->perms_[row + static_cast<std::size_t>(p)] =
          static_cast<std::uint16_t>(plane->apply_to_point(mats[static_cast<std::size_t>(i)], p));
  }
  return g;
}

std::vector<int> PglGroup::apply(std::size_t g, const std::vector<int>& points) const {
  std::vector<int> out;
  out.reserve(points.size());
  for (int p : points) out.push_back(image(g, p));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int x : v) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ULL;
    return h;
  }
};

using Orbit = std::unordered_set<std::vector<int>, VecHash>;

Orbit orbit_of(const PglGroup& group, const std::vector<int>& points) {
  Orbit orbit;
  for (std::size_t g = 0; g < group.order(); ++g) orbit.insert(group.apply(g, points));
  return orbit;
}

}  // namespace

std::vector<int> canonical_form(const PglGroup& group, const PointSet& s) {
  const Orbit orbit = orbit_of(group, s.members());
  return *std::min_element(orbit.begin(), orbit.end());
}

bool projectively_equivalent(const PglGroup& group, const PointSet& a, const PointSet& b) {
  if (a.size() != b.size()) return false;
  const std::vector<int> target = b.members();
  const std::vector<int> src = a.members();
  for (std::size_t g = 0; g < group.order(); ++g)
    if (group.apply(g, src) == target) return true;
  return false;
}

std::vector<OrbitRep> classify_up_to_pgl(const PglGroup& group, const std::vector<PointSet>& sets) {
  std::vector<std::vector<int>> keys;
  keys.reserve(sets.size());
  for (const auto& s : sets) keys.push_back(s.members());
  std::vector<char> assigned(sets.size(), 0);
  std::vector<OrbitRep> reps;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (assigned[i]) continue;
    const Orbit orbit = orbit_of(group, keys[i]);
    OrbitRep rep{PointSet(group.plane(), *std::min_element(orbit.begin(), orbit.end())), 0, 0, {}};
    rep.class_size = static_cast<long>(orbit.size());
    rep.stabilizer_order = static_cast<long>(group.order() / orbit.size());
    for (std::size_t j = i; j < sets.size(); ++j) {
      if (!assigned[j] && orbit.count(keys[j])) {
        assigned[j] = 1;
        rep.members.push_back(j);
      }
    }
    reps.push_back(std::move(rep));
  }
  std::sort(reps.begin(), reps.end(),
            [](const OrbitRep& a, const OrbitRep& b) { return a.canonical.members() < b.canonical.members(); });
  return reps;
}

ExtendedResult u_extended(const PlanePtr& plane, double budget_seconds, const SearchOptions& options) {
  const int q = plane->q();
  if (q != 9 && q != 11) throw Error(ErrorCode::InvalidArgument, "extended search covers q = 9 and q = 11");
  ExtendedResult r;
  std::vector<PointSet> known{trivial(plane).set};
  if (plane->field().h() > 1) known.push_back(trace_graph(plane).set);
  for (Elem a : find_valid_a(plane->field())) {
    known.push_back(two_conics(plane, a).set);
    break;
  }
  for (auto& s : known)
    if (is_set_without_tangents(s) && (!r.best_known || s.size() < r.best_known->size())) r.best_known = s;
  SearchOptions opts = options;
  opts.time_budget = budget_seconds;
  r.search = min_tangent_free(plane, r.best_known->size(), opts);
  return r;
}

SecantBoundReport secant_bound_check(int p, int workers) {
  if (!is_prime(static_cast<std::uint32_t>(p)) || p > 7 || p < 3)
    throw Error(ErrorCode::InvalidArgument, "secant bound check needs an odd prime p <= 7");
  const auto plane = Plane::of_order(static_cast<std::uint32_t>(p));
  SearchOptions opts;
  opts.workers = workers;
  SecantBoundReport rep;
  rep.p = p;
  const int lo = min_size_bound(p);
  for (int n = lo; n <= 2 * p; ++n) {
    // Only sets with a line of at least n/2 - (p-1)/4 points.
    for (int m = 3; m <= std::min(n - p, p + 1); ++m) {
      if (4 * m < 2 * n - (p - 1)) continue;
      for (const PointSet& s : enumerate_by_max_secant(plane, n, m, opts)) {
        ++rep.sets_checked;
        if (!is_trivial_set(s)) ++rep.counterexamples;
        // The corollary allows at most n/2 - (p-5)/4 points on a line when n < 2p.
        if (n < 2 * p && 4 * m > 2 * n - (p - 5)) ++rep.corollary_violations;
      }
    }
  }
  return rep;
}

}  // namespace tangentfree
