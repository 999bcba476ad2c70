#include "tangentfree/tangency.hpp"

#include <algorithm>
#include <set>

#include "tangentfree/error.hpp"

namespace tangentfree {

int Spectrum::max_secant() const {
  for (int i = static_cast<int>(counts.size()) - 1; i >= 0; --i)
    if (counts[static_cast<std::size_t>(i)] > 0) return i;
  return 0;
}

Spectrum spectrum(const PointSet& s) {
  Spectrum sp;
  sp.counts.assign(static_cast<std::size_t>(s.plane().q() + 2), 0);
  for (int c : s.line_counts()) ++sp.counts[static_cast<std::size_t>(c)];
  return sp;
}

std::string format_spectrum(const Spectrum& sp) {
  std::string out;
  for (std::size_t i = 0; i < sp.counts.size(); ++i) {
    if (sp.counts[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += std::to_string(i) + ":" + std::to_string(sp.counts[i]);
  }
  return out;
}

bool satisfies_counting_identities(const Spectrum& sp, long n, long q) {
  long lines = 0, incidences = 0, pairs = 0;
  for (std::size_t i = 0; i < sp.counts.size(); ++i) {
    const long x = sp.counts[i];
    const long il = static_cast<long>(i);
    lines += x;
    incidences += il * x;
    pairs += il * (il - 1) * x;
  }
  return lines == q * q + q + 1 && incidences == n * (q + 1) && pairs == n * (n - 1);
}

bool is_tangent_free(const PointSet& s) {
  const Plane& plane = s.plane();
  for (int l = 0; l < plane.size(); ++l) {
    int hits = 0;
    for (int p : plane.points_on(l)) {
      if (s.contains(p) && ++hits > 1) break;
    }
    if (hits == 1) return false;
  }
  return true;
}

bool is_set_without_tangents(const PointSet& s) { return !s.empty() && is_tangent_free(s); }

namespace {

void solve_spectra(long n, long q, int max_i, int i, std::vector<long>& high, long pair_budget,
                   std::vector<std::vector<long>>& out) {
  if (i > max_i) {
    // high[k] holds x_{k+3}.
    long pairs = 0, incid = 0, lines = 0;
    for (std::size_t k = 0; k < high.size(); ++k) {
      const long il = static_cast<long>(k) + 3;
      pairs += il * (il - 1) * high[k];
      incid += il * high[k];
      lines += high[k];
    }
    const long rest = n * (n - 1) - pairs;
    if (rest < 0 || rest % 2 != 0) return;
    const long x2 = max_i >= 2 ? rest / 2 : 0;
    if (max_i < 2 && rest != 0) return;
    if (2 * x2 + incid != n * (q + 1)) return;
    const long x0 = q * q + q + 1 - x2 - lines;
    if (x0 < 0) return;
    std::vector<long> sol{x0};
    if (max_i >= 2) sol.push_back(x2);
    sol.insert(sol.end(), high.begin(), high.end());
    out.push_back(std::move(sol));
    return;
  }
  const long w = static_cast<long>(i) * (i - 1);
  for (long x = 0; x * w <= pair_budget; ++x) {
    high.push_back(x);
    solve_spectra(n, q, max_i, i + 1, high, pair_budget - x * w, out);
    high.pop_back();
  }
}

}  // namespace

std::vector<std::vector<long>> spectrum_solutions(long n, long q, int max_i) {
  std::vector<std::vector<long>> out;
  std::vector<long> high;
  // x_0 and x_2 are eliminated by the line count and the pair count; the
  // incidence count is checked on each candidate.
  solve_spectra(n, q, max_i, 3, high, n * (n - 1), out);
  std::sort(out.begin(), out.end());
  return out;
}

int line_z0(const Plane& plane) { return plane.index_of({0, 0, 1}); }
int line_x0(const Plane& plane) { return plane.index_of({1, 0, 0}); }

DirectionSet determined_directions(const PointSet& affine, int line_at_infinity) {
  const Plane& plane = affine.plane();
  if (affine.line_count(line_at_infinity) != 0)
    throw Error(ErrorCode::PointsOnInfinity, "affine set meets the line at infinity");
  DirectionSet d;
  d.line_at_infinity = line_at_infinity;
  for (int pt : plane.points_on(line_at_infinity)) {
    bool det = false;
    for (int l : plane.lines_through(pt)) {
      if (l != line_at_infinity && affine.line_count(l) >= 2) {
        det = true;
        break;
      }
    }
    (det ? d.determined : d.non_determined).push_back(pt);
  }
  std::sort(d.determined.begin(), d.determined.end());
  std::sort(d.non_determined.begin(), d.non_determined.end());
  return d;
}

std::vector<int> slope_directions(const PointSet& affine) {
  const Plane& plane = affine.plane();
  const Field& f = plane.field();
  std::vector<std::pair<Elem, Elem>> xy;
  for (int p : affine.members()) {
    const Triple& c = plane.point(p);
    if (c[2] == 0) throw Error(ErrorCode::PointsOnInfinity, "point on z = 0");
    const Elem s = f.inv(c[2]);
    xy.emplace_back(f.mul(c[0], s), f.mul(c[1], s));
  }
  std::set<int> dirs;
  for (std::size_t i = 0; i < xy.size(); ++i)
    for (std::size_t j = i + 1; j < xy.size(); ++j) {
      const Elem dx = f.sub(xy[i].first, xy[j].first);
      const Elem dy = f.sub(xy[i].second, xy[j].second);
      if (dx == 0) {
        dirs.insert(plane.index_of({0, 1, 0}));
      } else {
        dirs.insert(plane.index_of({1, f.div(dy, dx), 0}));
      }
    }
  return {dirs.begin(), dirs.end()};
}

RedeiCompletion redei_completion(const PointSet& affine, int line_at_infinity) {
  const Plane& plane = affine.plane();
  if (!plane.field().odd()) throw Error(ErrorCode::OddOrderRequired, "completion needs p > 2");
  if (affine.size() != plane.q())
    throw Error(ErrorCode::WrongSize, "need exactly q affine points, got " + std::to_string(affine.size()));
  const DirectionSet d = determined_directions(affine, line_at_infinity);
  RedeiCompletion r;
  r.determined_count = static_cast<int>(d.determined.size());
  if (2 * r.determined_count >= plane.q() + 3) return r;
  PointSet s = affine;
  for (int pt : d.non_determined) s.insert(pt);
  r.accepted = true;
  r.tangent_free = is_tangent_free(s);
  r.completion = std::move(s);
  return r;
}

bool redei_converse_check(const PointSet& s, int line_at_infinity) {
  const Plane& plane = s.plane();
  if (!is_tangent_free(s)) throw Error(ErrorCode::InvalidArgument, "set has tangent lines");
  const int k = s.line_count(line_at_infinity);
  if (s.size() != plane.q() + k)
    throw Error(ErrorCode::SizeMismatch, "|S| must equal q + |S cap L|");
  PointSet affine = s;
  std::vector<int> on_line;
  for (int pt : plane.points_on(line_at_infinity)) {
    if (s.contains(pt)) {
      affine.remove(pt);
      on_line.push_back(pt);
    }
  }
  std::sort(on_line.begin(), on_line.end());
  return determined_directions(affine, line_at_infinity).non_determined == on_line;
}

bool is_trivial_set(const PointSet& s) {
  const Plane& plane = s.plane();
  const int q = plane.q();
  if (s.size() != 2 * q) return false;
  std::vector<int> full;
  for (int l = 0; l < plane.size(); ++l)
    if (s.line_count(l) == q) full.push_back(l);
  if (full.size() != 2) return false;
  return !s.contains(plane.meet(full[0], full[1]));
}

}  // namespace tangentfree
