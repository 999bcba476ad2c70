#include "tangentfree/codes.hpp"

#include <algorithm>
#include <numeric>

#include "tangentfree/conic.hpp"
#include "tangentfree/constructions.hpp"
#include "tangentfree/error.hpp"
#include "tangentfree/tangency.hpp"

namespace tangentfree {

IncidenceMatrix incidence_matrix(const Plane& plane) {
  IncidenceMatrix m;
  m.p = static_cast<int>(plane.field().p());
  m.size = plane.size();
  m.entries.assign(static_cast<std::size_t>(m.size) * static_cast<std::size_t>(m.size), 0);
  for (int l = 0; l < m.size; ++l)
    for (int pt : plane.points_on(l))
      m.entries[static_cast<std::size_t>(l) * static_cast<std::size_t>(m.size) + static_cast<std::size_t>(pt)] = 1;
  return m;
}

std::vector<int> DualVector::support() const {
  std::vector<int> out;
  for (std::size_t i = 0; i < coef.size(); ++i)
    if (coef[i] != 0) out.push_back(static_cast<int>(i));
  return out;
}

int DualVector::weight() const {
  return static_cast<int>(std::count_if(coef.begin(), coef.end(), [](std::uint32_t c) { return c != 0; }));
}

bool is_dual_codeword(const Plane& plane, const DualVector& v) {
  if (static_cast<int>(v.coef.size()) != plane.size())
    throw Error(ErrorCode::SizeMismatch, "vector length must be q^2+q+1");
  const std::uint64_t p = plane.field().p();
  for (int l = 0; l < plane.size(); ++l) {
    std::uint64_t sum = 0;
    for (int pt : plane.points_on(l)) sum += v.coef[static_cast<std::size_t>(pt)];
    if (sum % p != 0) return false;
  }
  return true;
}

bool support_tangency(const Plane& plane, const DualVector& v) {
  if (!is_dual_codeword(plane, v)) throw Error(ErrorCode::NotCodeword, "vector is not in the dual code");
  std::vector<char> in(v.coef.size(), 0);
  for (int pt : v.support()) in[static_cast<std::size_t>(pt)] = 1;
  for (int l = 0; l < plane.size(); ++l) {
    int hits = 0;
    for (int pt : plane.points_on(l)) hits += in[static_cast<std::size_t>(pt)];
    if (hits == 1) return false;
  }
  return true;
}

namespace {

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

std::vector<std::vector<std::uint32_t>> nullspace_mod_p(const std::vector<std::vector<std::uint32_t>>& rows, int cols,
                                                        std::uint32_t p) {
  auto m = rows;
  const auto nc = static_cast<std::size_t>(cols);
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < m.size(); ++c) {
    std::size_t sel = r;
    while (sel < m.size() && m[sel][c] % p == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[r], m[sel]);
    const std::uint32_t iv = inv_mod(m[r][c] % p, p);
    for (auto& e : m[r]) e = static_cast<std::uint32_t>(static_cast<std::uint64_t>(e) * iv % p);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] % p == 0) continue;
      const std::uint64_t factor = m[i][c] % p;
      for (std::size_t j = 0; j < nc; ++j)
        m[i][j] = static_cast<std::uint32_t>((m[i][j] + (p - factor) * m[r][j]) % p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<char> is_pivot(nc, 0);
  for (int c : pivot_col) is_pivot[static_cast<std::size_t>(c)] = 1;
  std::vector<std::vector<std::uint32_t>> basis;
  for (std::size_t free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(nc, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i)
      v[static_cast<std::size_t>(pivot_col[i])] = (p - m[i][free] % p) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<DualVector> dual_code_basis(const Plane& plane) {
  const IncidenceMatrix inc = incidence_matrix(plane);
  std::vector<std::vector<std::uint32_t>> rows(static_cast<std::size_t>(inc.size));
  for (int l = 0; l < inc.size; ++l)
    for (int pt = 0; pt < inc.size; ++pt) rows[static_cast<std::size_t>(l)].push_back(inc.at(l, pt));
  std::vector<DualVector> out;
  for (auto& v : nullspace_mod_p(rows, inc.size, static_cast<std::uint32_t>(inc.p))) out.push_back({std::move(v)});
  return out;
}

DualVector random_combination(const std::vector<DualVector>& basis, std::uint32_t p, std::mt19937_64& rng) {
  DualVector v;
  if (basis.empty()) return v;
  v.coef.assign(basis.front().coef.size(), 0);
  std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
  for (const auto& b : basis) {
    const std::uint64_t c = pick(rng);
    for (std::size_t i = 0; i < v.coef.size(); ++i)
      v.coef[i] = static_cast<std::uint32_t>((v.coef[i] + c * b.coef[i]) % p);
  }
  return v;
}

SupportCodeword dual_codeword_on_support(const PointSet& s, unsigned seed, long random_trials) {
  const Plane& plane = s.plane();
  const auto p = plane.field().p();
  const std::vector<int> pts = s.members();
  const std::size_t k = pts.size();
  std::vector<std::vector<std::uint32_t>> rows;
  for (int l = 0; l < plane.size(); ++l) {
    if (s.line_count(l) == 0) continue;
    std::vector<std::uint32_t> row(k, 0);
    for (std::size_t i = 0; i < k; ++i) row[i] = plane.incident(pts[i], l) ? 1 : 0;
    rows.push_back(std::move(row));
  }
  SupportCodeword out;
  const auto basis = nullspace_mod_p(rows, static_cast<int>(k), p);
  out.kernel_dim = static_cast<int>(basis.size());
  auto lift = [&](const std::vector<std::uint32_t>& local) {
    DualVector v;
    v.coef.assign(static_cast<std::size_t>(plane.size()), 0);
    for (std::size_t i = 0; i < k; ++i) v.coef[static_cast<std::size_t>(pts[i])] = local[i];
    return v;
  };
  auto full = [](const std::vector<std::uint32_t>& local) {
    return std::all_of(local.begin(), local.end(), [](std::uint32_t c) { return c != 0; });
  };
  if (basis.empty() || k == 0) {
    out.exact = true;
    return out;
  }
  double space = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) space *= p;
  if (space <= 1e7) {
    out.exact = true;
    // Odometer over coefficient tuples; each step adds one basis vector per
    // changed digit, and a wrap from p-1 to 0 adds the p-th copy.
    std::vector<std::uint32_t> digit(basis.size(), 0);
    std::vector<std::uint32_t> acc(k, 0);
    for (;;) {
      std::size_t d = 0;
      for (; d < basis.size(); ++d) {
        for (std::size_t i = 0; i < k; ++i) acc[i] = (acc[i] + basis[d][i]) % p;
        if (++digit[d] < p) break;
        digit[d] = 0;
      }
      if (d == basis.size()) break;
      if (full(acc)) {
        out.vector = lift(acc);
        return out;
      }
    }
    return out;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> pick(0, p - 1);
  std::vector<std::uint32_t> acc(k);
  for (long t = 0; t < random_trials; ++t) {
    std::fill(acc.begin(), acc.end(), 0);
    for (const auto& b : basis) {
      const std::uint64_t c = pick(rng);
      if (c == 0) continue;
      for (std::size_t i = 0; i < k; ++i) acc[i] = static_cast<std::uint32_t>((acc[i] + c * b[i]) % p);
    }
    if (full(acc)) {
      out.vector = lift(acc);
      return out;
    }
  }
  return out;
}

DualVector trivial_signing(const Plane& plane) {
  const int x0 = line_x0(plane);
  const int y0 = plane.index_of({0, 1, 0});
  const int meet = plane.meet(x0, y0);
  const auto p = plane.field().p();
  DualVector v;
  v.coef.assign(static_cast<std::size_t>(plane.size()), 0);
  for (int pt : plane.points_on(x0))
    if (pt != meet) v.coef[static_cast<std::size_t>(pt)] = 1;
  for (int pt : plane.points_on(y0))
    if (pt != meet) v.coef[static_cast<std::size_t>(pt)] = p - 1;
  return v;
}

Json to_json(const Plane& plane, const DualVector& v) {
  Json support = Json::array();
  Json coef = Json::array();
  for (int pt : v.support()) {
    const Triple& c = plane.point(pt);
    support.push_back({c[0], c[1], c[2]});
    coef.push_back(v.coef[static_cast<std::size_t>(pt)]);
  }
  return Json{{"field", to_json(plane.field().spec())}, {"support", support}, {"coefficients", coef},
              {"weight", v.weight()}};
}

PointSet peel_decode(const PointSet& erased, std::optional<std::uint64_t> shuffle_seed) {
  PointSet work = erased;
  const Plane& plane = erased.plane();
  std::vector<int> order(static_cast<std::size_t>(plane.size()));
  std::iota(order.begin(), order.end(), 0);
  std::optional<std::mt19937_64> rng;
  if (shuffle_seed) rng.emplace(*shuffle_seed);
  bool changed = true;
  while (changed) {
    changed = false;
    if (rng) std::shuffle(order.begin(), order.end(), *rng);
    for (int l : order) {
      if (work.line_count(l) != 1) continue;
      for (int pt : plane.points_on(l)) {
        if (work.contains(pt)) {
          work.remove(pt);
          break;
        }
      }
      changed = true;
    }
  }
  return work;
}

PointSet maximal_stopping_subset(const PointSet& erased) {
  const Plane& plane = erased.plane();
  std::vector<char> in(static_cast<std::size_t>(plane.size()), 0);
  for (int pt : erased.members()) in[static_cast<std::size_t>(pt)] = 1;
  for (;;) {
    std::vector<int> lone;
    for (int l = 0; l < plane.size(); ++l) {
      int hits = 0, last = -1;
      for (int pt : plane.points_on(l))
        if (in[static_cast<std::size_t>(pt)]) {
          ++hits;
          last = pt;
        }
      if (hits == 1) lone.push_back(last);
    }
    if (lone.empty()) break;
    for (int pt : lone) in[static_cast<std::size_t>(pt)] = 0;
  }
  PointSet out(erased.plane_ptr());
  for (int pt = 0; pt < plane.size(); ++pt)
    if (in[static_cast<std::size_t>(pt)]) out.insert(pt);
  return out;
}

StoppingCheck stopping_equivalence_check(const PlanePtr& plane, int samples, std::uint64_t seed) {
  StoppingCheck out;
  auto test = [&](const PointSet& s) {
    ++out.sets_tested;
    if ((peel_decode(s) == s) != is_tangent_free(s)) ++out.mismatches;
  };
  const int n = plane->size();
  if (n <= 13) {
    for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
      PointSet s(plane);
      for (int pt = 0; pt < n; ++pt)
        if (mask >> pt & 1U) s.insert(pt);
      test(s);
    }
    return out;
  }
  std::vector<PointSet> known{trivial(plane).set};
  if (plane->field().odd() && plane->q() >= 5) {
    const ConicModel m(plane, Conic::canonical(plane->field()));
    known.push_back(interior_points(m).set);
  } else if (!plane->field().odd()) {
    // Conic plus its nucleus.
    PointSet hyper = conic_points(plane, Conic::canonical(plane->field()));
    hyper.insert(plane->index_of({0, 1, 0}));
    known.push_back(hyper);
  }
  for (const auto& s : known) test(s);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int t = 0; t < samples; ++t) {
    PointSet s(plane);
    const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    while (s.size() < size) s.insert(pick(rng));
    test(s);
  }
  return out;
}

}  // namespace tangentfree
