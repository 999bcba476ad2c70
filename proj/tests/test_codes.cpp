#include <doctest.h>

#include <random>

#include "tangentfree/codes.hpp"
#include "tangentfree/conic.hpp"
#include "tangentfree/constructions.hpp"
#include "tangentfree/error.hpp"
#include "tangentfree/tangency.hpp"

using namespace tangentfree;

namespace {

PointSet hyperoval(const PlanePtr& plane) {
  PointSet s = conic_points(plane, Conic::canonical(plane->field()));
  s.insert(plane->index_of({0, 1, 0}));
  return s;
}

Mat3 random_invertible(const Plane& plane, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(plane.q() - 1));
  for (;;) {
    Mat3 m;
    for (auto& e : m) e = pick(rng);
    if (plane.determinant(m) != 0) return m;
  }
}

}  // namespace

TEST_CASE("incidence matrix weights") {
  for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    auto p = Plane::of_order(q);
    const IncidenceMatrix m = incidence_matrix(*p);
    CHECK(m.p == static_cast<int>(p->field().p()));
    for (int i = 0; i < m.size; ++i) {
      int row = 0, col = 0;
      for (int j = 0; j < m.size; ++j) {
        row += m.at(i, j);
        col += m.at(j, i);
      }
      CHECK(row == static_cast<int>(q) + 1);
      CHECK(col == static_cast<int>(q) + 1);
    }
  }
}

TEST_CASE("explicit dual codewords") {
  for (auto q : {3u, 5u, 7u}) {
    auto p = Plane::of_order(q);
    const DualVector v = trivial_signing(*p);
    CHECK(is_dual_codeword(*p, v));
    CHECK(v.weight() == 2 * static_cast<int>(q));
    CHECK(support_tangency(*p, v));
    CHECK(PointSet(p, v.support()) == trivial(p).set);
  }
  auto p4 = Plane::of_order(4);
  const PointSet h = hyperoval(p4);
  DualVector hv;
  hv.coef.assign(21, 0);
  for (int pt : h.members()) hv.coef[static_cast<std::size_t>(pt)] = 1;
  CHECK(is_dual_codeword(*p4, hv));
  CHECK(hv.weight() == 6);

  auto p5 = Plane::of_order(5);
  DualVector zero;
  zero.coef.assign(31, 0);
  CHECK(is_dual_codeword(*p5, zero));

  DualVector one = zero;
  one.coef[4] = 1;
  CHECK_FALSE(is_dual_codeword(*p5, one));
  CHECK_THROWS_AS(support_tangency(*p5, one), Error);
  DualVector short_vec;
  short_vec.coef.assign(5, 0);
  CHECK_THROWS_AS(is_dual_codeword(*p5, short_vec), Error);
}

TEST_CASE("dual code dimensions") {
  // dim C = ((p+1)p/2)^h + 1, so the dual has q^2+q+1 minus that.
  const std::vector<std::pair<std::uint32_t, std::size_t>> expect{{2, 3},  {3, 6},  {4, 11}, {5, 15},
                                                                  {7, 28}, {8, 45}, {9, 54}};
  for (auto [q, dim] : expect) {
    CAPTURE(q);
    auto p = Plane::of_order(q);
    const auto basis = dual_code_basis(*p);
    CHECK(basis.size() == dim);
    for (const auto& b : basis) CHECK(is_dual_codeword(*p, b));
  }
}

TEST_CASE("sampled dual codewords have supports without tangents") {
  std::mt19937_64 rng(42);
  for (auto q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    CAPTURE(q);
    auto p = Plane::of_order(q);
    const auto basis = dual_code_basis(*p);
    int nonzero = 0;
    for (int t = 0; t < 100; ++t) {
      const DualVector v = random_combination(basis, p->field().p(), rng);
      REQUIRE(is_dual_codeword(*p, v));
      CHECK(support_tangency(*p, v));
      nonzero += v.weight() > 0;
    }
    // A combination vanishes with probability p^-dim, at most 1/8 here.
    CHECK(nonzero > 70);
  }
}

TEST_CASE("codewords on a given support") {
  auto p5 = Plane::of_order(5);
  const auto t = dual_codeword_on_support(trivial(p5).set);
  REQUIRE(t.vector);
  CHECK(t.exact);
  CHECK(t.vector->weight() == 10);
  CHECK(is_dual_codeword(*p5, *t.vector));

  PointSet line(p5);
  for (int pt : p5->points_on(0)) line.insert(pt);
  const auto l = dual_codeword_on_support(line);
  CHECK_FALSE(l.vector);
  CHECK(l.exact);

  auto p9 = Plane::of_order(9);
  const PointSet graph = frobenius_graph(p9).set;
  const auto f = dual_codeword_on_support(graph);
  REQUIRE(f.vector);
  CHECK(f.exact);
  CHECK(PointSet(p9, f.vector->support()) == graph);
  CHECK(is_dual_codeword(*p9, *f.vector));

  // A set without tangents of size 2p - 2 carries no codeword.
  auto p7 = Plane::of_order(7);
  const PointSet small = two_conics(p7, 6).set;
  CHECK(is_set_without_tangents(small));
  const auto n = dual_codeword_on_support(small);
  CHECK_FALSE(n.vector);
  CHECK(n.exact);

  // The interior set of PG(2,5) has tangent-free support but size 10 = 2p.
  const ConicModel m5(p5, Conic::canonical(p5->field()));
  const auto inner = dual_codeword_on_support(interior_points(m5).set);
  CHECK(inner.exact);
}

TEST_CASE("peeling examples") {
  auto p5 = Plane::of_order(5);
  CHECK(peel_decode(PointSet(p5, std::vector<int>{17})).empty());
  const ConicModel m(p5, Conic::canonical(p5->field()));
  const PointSet inner = interior_points(m).set;
  CHECK(peel_decode(inner) == inner);
  for (int extra = 0; extra < p5->size(); ++extra) {
    if (inner.contains(extra)) continue;
    PointSet s = inner;
    s.insert(extra);
    CHECK(peel_decode(s) == inner);
  }
}

TEST_CASE("peeling residual is the maximal stopping subset and is order independent") {
  std::mt19937_64 rng(2024);
  for (auto q : {3u, 4u, 5u}) {
    CAPTURE(q);
    auto p = Plane::of_order(q);
    std::vector<PointSet> seeds{trivial(p).set};
    if (q == 4) seeds.push_back(hyperoval(p));
    if (q == 5) seeds.push_back(interior_points(ConicModel(p, Conic::canonical(p->field()))).set);
    std::uniform_int_distribution<int> pick(0, p->size() - 1);
    int nonempty = 0;
    for (int t = 0; t < 1000; ++t) {
      PointSet erased(p);
      if (t % 2 == 0) {
        // Image of a known stopping set plus a few extra erasures.
        const Mat3 g = random_invertible(*p, rng);
        for (int pt : seeds[static_cast<std::size_t>(t / 2) % seeds.size()].members())
          erased.insert(p->apply_to_point(g, pt));
        const int extra = static_cast<int>(rng() % 6);
        for (int i = 0; i < extra; ++i) erased.insert(pick(rng));
      } else {
        const int size = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(p->size()));
        while (erased.size() < size) erased.insert(pick(rng));
      }
      const PointSet residual = peel_decode(erased);
      CHECK(residual == maximal_stopping_subset(erased));
      CHECK(is_tangent_free(residual));
      nonempty += !residual.empty();
      for (std::uint64_t s = 0; s < 50; ++s) CHECK(peel_decode(erased, rng()) == residual);
    }
    CHECK(nonempty >= 500);
  }
}

TEST_CASE("fixpoints of the decoder are the sets without tangents") {
  const auto c3 = stopping_equivalence_check(Plane::of_order(3), 0, 1);
  CHECK(c3.sets_tested == 8192);
  CHECK(c3.holds());
  for (auto q : {4u, 5u}) {
    const auto c = stopping_equivalence_check(Plane::of_order(q), 2000, q);
    CHECK(c.holds());
  }
  // All six-subsets of PG(2,3): fixpoints are exactly the 78 trivial sets.
  auto p3 = Plane::of_order(3);
  int fix = 0;
  std::vector<char> pick(13, 0);
  std::fill(pick.begin(), pick.begin() + 6, 1);
  do {
    PointSet s(p3);
    for (int i = 0; i < 13; ++i)
      if (pick[static_cast<std::size_t>(i)]) s.insert(i);
    if (peel_decode(s) == s) {
      ++fix;
      CHECK(is_trivial_set(s));
    }
  } while (std::prev_permutation(pick.begin(), pick.end()));
  CHECK(fix == 78);
}

TEST_CASE("kernel routine") {
  // x + y + z = 0 over F_5 has a two-dimensional kernel.
  const auto k = nullspace_mod_p({{1, 1, 1}}, 3, 5);
  CHECK(k.size() == 2);
  for (const auto& v : k) CHECK((v[0] + v[1] + v[2]) % 5 == 0);
  CHECK(nullspace_mod_p({{1, 0}, {0, 1}}, 2, 3).empty());
}
