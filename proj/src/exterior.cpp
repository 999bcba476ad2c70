#include "tangentfree/exterior.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <random>

#include "tangentfree/error.hpp"
#include "tangentfree/tangency.hpp"

namespace tangentfree {

bool is_exterior_set(const ConicModel& conic, const PointSet& e) {
  const Plane& plane = conic.plane();
  for (int l = 0; l < plane.size(); ++l)
    if (e.line_count(l) >= 2 && conic.classify_line(l) != LineClass::External) return false;
  return true;
}

PointSet exterior_points_on_line(const ConicModel& conic, int line) {
  if (conic.classify_line(line) != LineClass::External)
    throw Error(ErrorCode::NotExternal, "line " + std::to_string(line) + " is not external");
  PointSet s(conic.plane_ptr());
  for (int p : conic.plane().points_on(line))
    if (conic.classify_point(p) == PointClass::Exterior) s.insert(p);
  return s;
}

int line_z_equals(const Plane& plane, Elem a) { return plane.index_of({a, 0, plane.field().neg(1)}); }

namespace {

bool extends(const ConicModel& conic, const std::vector<int>& base, int q_point) {
  const Plane& plane = conic.plane();
  for (int p : base)
    if (p == q_point || conic.classify_line(plane.join(p, q_point)) != LineClass::External) return false;
  return true;
}

bool dichotomy(int q, std::size_t off_line) { return q % 4 == 3 ? off_line == 0 : off_line == 1; }

}  // namespace

ExteriorSetReport find_extenders(const ConicModel& conic, int line) {
  ExteriorSetReport r{line, exterior_points_on_line(conic, line), {}, {}, false};
  const Plane& plane = conic.plane();
  const std::vector<int> base = r.base_points.members();
  for (int p = 0; p < plane.size(); ++p) {
    if (r.base_points.contains(p) || !extends(conic, base, p)) continue;
    (plane.incident(p, line) ? r.extenders_on_line : r.extenders_off_line).push_back(p);
  }
  r.dichotomy_holds = dichotomy(plane.q(), r.extenders_off_line.size());
  return r;
}

Json to_json(const ExteriorSetReport& report) {
  const Plane& plane = report.base_points.plane();
  auto coords = [&](const std::vector<int>& pts) {
    Json arr = Json::array();
    for (int p : pts) {
      const Triple& c = plane.point(p);
      arr.push_back({c[0], c[1], c[2]});
    }
    return arr;
  };
  const Triple& l = plane.line(report.base_line);
  return Json{{"base_line", {l[0], l[1], l[2]}},
              {"base_points", to_json(report.base_points)},
              {"extenders_on_line", coords(report.extenders_on_line)},
              {"extenders_off_line", coords(report.extenders_off_line)},
              {"dichotomy_holds", report.dichotomy_holds}};
}

QuadChar external_line_test_formula(const Field& f, Elem alpha, Elem lambda, Elem xi, Elem a) {
  const Elem d1 = f.sub(lambda, a);
  const Elem prod = f.mul(f.sub(f.mul(alpha, a), f.mul(xi, lambda)), f.sub(xi, alpha));
  return f.quad_char(f.sub(f.mul(d1, d1), f.mul(f.from_int(4), prod)));
}

namespace {

Mat3 random_invertible(const Plane& plane, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(plane.q() - 1));
  for (;;) {
    Mat3 m;
    for (auto& e : m) e = pick(rng);
    if (plane.determinant(m) != 0) return m;
  }
}

void check_configuration(DichotomyCheck& out, const ConicModel& model, int line, std::optional<int> expected_off) {
  const ExteriorSetReport r = find_extenders(model, line);
  ++out.configurations;
  out.holds = out.holds && r.dichotomy_holds;
  const int q = model.plane().q();
  if (static_cast<int>(r.extenders_on_line.size()) != (q + 1) / 2) out.line_points_extend = false;
  if (expected_off && q % 4 == 1)
    out.extender_matches = out.extender_matches && r.extenders_off_line == std::vector<int>{*expected_off};
}

}  // namespace

DichotomyCheck verify_extension_dichotomy(const PlanePtr& plane, int copies, unsigned seed, bool all_lines) {
  const Field& f = plane->field();
  if (!f.odd()) throw Error(ErrorCode::OddOrderRequired, "dichotomy needs odd q");
  DichotomyCheck out;
  out.q = plane->q();
  out.a = f.smallest_nonsquare();
  const Conic base = Conic::canonical(f);
  const ConicModel model(plane, base);
  const int line = line_z_equals(*plane, out.a);
  const int q_point = plane->index_of({1, 0, f.neg(out.a)});

  const ExteriorSetReport canon = find_extenders(model, line);
  out.canonical_off_line = canon.extenders_off_line;
  check_configuration(out, model, line, q_point);

  std::mt19937 rng(seed);
  for (int c = 0; c < copies; ++c) {
    const Mat3 m = random_invertible(*plane, rng);
    const ConicModel image(plane, base.transformed(*plane, m));
    const auto pts = plane->points_on(line);
    const int image_line = plane->join(plane->apply_to_point(m, pts[0]), plane->apply_to_point(m, pts[1]));
    check_configuration(out, image, image_line, plane->apply_to_point(m, q_point));
  }
  if (all_lines) {
    if (plane->q() > 11) throw Error(ErrorCode::TooLarge, "all-lines check is limited to q <= 11");
    for (int l : model.lines_of_class(LineClass::External)) check_configuration(out, model, l, std::nullopt);
  }
  return out;
}

TenSetReport pg25_ten_set() {
  const auto plane = Plane::of_order(5);
  const ConicModel model(plane, Conic::canonical(plane->field()));
  const int line = line_z_equals(*plane, 2);
  TenSetReport r{PointSet(plane), {}, {}, false, -1};
  r.exterior_on_line = exterior_points_on_line(model, line).members();
  for (int p : r.exterior_on_line)
    for (int l : plane->lines_through(p))
      if (l != line && model.classify_line(l) == LineClass::External) r.second_external_lines.push_back(l);
  const auto& m = r.second_external_lines;
  if (m.size() == 3) {
    r.meet_point = plane->meet(m[0], m[1]);
    r.concurrent = plane->incident(r.meet_point, m[2]);
  }
  r.set = model.points();
  for (int p : r.exterior_on_line) r.set.insert(p);
  if (r.concurrent) r.set.insert(r.meet_point);
  return r;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueGraph {
  int n = 0;
  std::vector<int> vertex;  // position -> point index
  std::vector<Bits> adj;
};

int popcount(const Bits& b) {
  int c = 0;
  for (auto w : b) c += std::popcount(w);
  return c;
}

void collect(const CliqueGraph& g, int k, std::vector<int>& clique, Bits cand, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(clique.size()) == k) {
    out.push_back(clique);
    return;
  }
  for (std::size_t w = 0; w < cand.size(); ++w) {
    while (cand[w]) {
      if (static_cast<int>(clique.size()) + popcount(cand) < k) return;
      const int bit = std::countr_zero(cand[w]);
      cand[w] &= cand[w] - 1;
      const int v = static_cast<int>(w) * 64 + bit;
      Bits next(cand.size());
      for (std::size_t i = 0; i < cand.size(); ++i) next[i] = cand[i] & g.adj[static_cast<std::size_t>(v)][i];
      clique.push_back(v);
      collect(g, k, clique, std::move(next), out);
      clique.pop_back();
    }
  }
}

/// Cliques whose first vertex (in position order) is `root`.
std::vector<std::vector<int>> cliques_from(const CliqueGraph& g, int k, int root) {
  std::vector<std::vector<int>> out;
  const std::size_t words = g.adj.front().size();
  Bits cand(words, 0);
  for (int v = root + 1; v < g.n; ++v)
    if (g.adj[static_cast<std::size_t>(root)][static_cast<std::size_t>(v / 64)] >> (v % 64) & 1U)
      cand[static_cast<std::size_t>(v / 64)] |= std::uint64_t{1} << (v % 64);
  std::vector<int> clique{root};
  collect(g, k, clique, std::move(cand), out);
  return out;
}

bool no_three_collinear(const PointSet& s) {
  for (int c : s.line_counts())
    if (c >= 3) return false;
  return true;
}

}  // namespace

bool is_collinear(const PointSet& s) {
  for (int c : s.line_counts())
    if (c == s.size()) return true;
  return s.size() <= 1;
}

std::vector<PointSet> exterior_clique_search(const ConicModel& conic, bool no3, const CliqueOptions& options) {
  const Plane& plane = conic.plane();
  if (plane.q() > 13) throw Error(ErrorCode::TooLarge, "clique search is limited to q <= 13");
  const int k = (plane.q() + 1) / 2;
  std::vector<int> ext = conic.points_of_class(PointClass::Exterior);
  const int n = static_cast<int>(ext.size());
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && conic.classify_line(plane.join(ext[static_cast<std::size_t>(i)], ext[static_cast<std::size_t>(j)])) ==
                        LineClass::External)
        ++degree[static_cast<std::size_t>(i)];
  // Low degree first keeps the early roots' candidate sets small.
  std::vector<int> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return degree[static_cast<std::size_t>(a)] < degree[static_cast<std::size_t>(b)];
  });
  CliqueGraph g;
  g.n = n;
  const std::size_t words = static_cast<std::size_t>((n + 63) / 64);
  g.adj.assign(static_cast<std::size_t>(n), Bits(words, 0));
  for (int i = 0; i < n; ++i) g.vertex.push_back(ext[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])]);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && conic.classify_line(plane.join(g.vertex[static_cast<std::size_t>(i)],
                                                   g.vertex[static_cast<std::size_t>(j)])) == LineClass::External)
        g.adj[static_cast<std::size_t>(i)][static_cast<std::size_t>(j / 64)] |= std::uint64_t{1} << (j % 64);

  std::vector<std::vector<std::vector<int>>> per_root(static_cast<std::size_t>(n));
  if (options.parallel) {
    const int threads = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
    for (int r = 0; r < n; ++r) per_root[static_cast<std::size_t>(r)] = cliques_from(g, k, r);
  } else {
    for (int r = 0; r < n; ++r) per_root[static_cast<std::size_t>(r)] = cliques_from(g, k, r);
  }

  std::vector<std::vector<int>> keys;
  for (auto& list : per_root)
    for (auto& c : list) {
      std::vector<int> pts;
      for (int v : c) pts.push_back(g.vertex[static_cast<std::size_t>(v)]);
      std::sort(pts.begin(), pts.end());
      keys.push_back(std::move(pts));
    }
  std::sort(keys.begin(), keys.end());
  std::vector<PointSet> out;
  for (const auto& key : keys) {
    PointSet s(conic.plane_ptr(), key);
    if (!no3 || no_three_collinear(s)) out.push_back(std::move(s));
  }
  return out;
}

bool conic_union_check(const ConicModel& conic, const PointSet& e) {
  PointSet s = conic.points();
  for (int p : e.members()) s.insert(p);
  return is_tangent_free(s);
}

}  // namespace tangentfree
