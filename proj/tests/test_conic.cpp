#include <doctest.h>

#include <random>

#include "tangentfree/conic.hpp"
#include "tangentfree/error.hpp"

using namespace tangentfree;

namespace {

const std::vector<std::uint32_t> kOddOrders{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31};

Mat3 random_invertible(const Plane& plane, std::mt19937& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(plane.q() - 1));
  for (;;) {
    Mat3 m;
    for (auto& e : m) e = pick(rng);
    if (plane.determinant(m) != 0) return m;
  }
}

int count_on(const PlanePtr& plane, const Conic& c, int line) {
  int hits = 0;
  for (int p : plane->points_on(line))
    if (c.eval(plane->field(), plane->point(p)) == 0) ++hits;
  return hits;
}

}  // namespace

TEST_CASE("canonical conic points") {
  auto p5 = Plane::of_order(5);
  auto c5 = conic_points(p5, Conic::canonical(p5->field()));
  CHECK(c5.size() == 6);

  auto p7 = Plane::of_order(7);
  const Field& f = p7->field();
  auto c7 = conic_points(p7, Conic::canonical(f));
  CHECK(c7.size() == 8);
  CHECK(c7.contains(p7->index_of({0, 0, 1})));
  for (Elem t = 0; t < 7; ++t) CHECK(c7.contains(p7->index_of({1, t, f.mul(t, t)})));
}

TEST_CASE("degenerate forms are rejected") {
  auto p = Plane::of_order(5);
  Conic xy;
  xy.coef[3] = 1;
  CHECK_THROWS_AS(conic_points(p, xy), Error);
  try {
    conic_points(p, xy);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateConic);
  }
  CHECK_THROWS_AS(ConicModel(Plane::of_order(4), Conic::canonical(Plane::of_order(4)->field())), Error);
}

TEST_CASE("line and point classes over GF(5)") {
  auto p = Plane::of_order(5);
  const ConicModel m(p, Conic::canonical(p->field()));
  // Line aX - Z = 0 has dual coordinates (a, 0, -1) ~ (1, 0, -1/a).
  auto line_z_eq = [&](Elem a) { return p->index_of({a, 0, p->field().neg(1)}); };
  CHECK(m.classify_line(line_z_eq(2)) == LineClass::External);
  CHECK(m.classify_line(line_z_eq(4)) == LineClass::Secant);
  CHECK(m.classify_line(p->index_of({1, 0, 0})) == LineClass::Tangent);
  CHECK(m.classify_point(p->index_of({0, 1, 0})) == PointClass::Exterior);
  CHECK(m.classify_point(p->index_of({1, 0, 2})) == PointClass::Interior);
  for (int pt : m.points().members()) CHECK(m.classify_point(pt) == PointClass::OnConic);
}

TEST_CASE("censuses match the closed forms for odd q <= 31") {
  for (auto q : kOddOrders) {
    CAPTURE(q);
    auto p = Plane::of_order(q);
    const ConicModel m(p, Conic::canonical(p->field()));
    const int qi = static_cast<int>(q);
    const auto lc = m.line_census();
    CHECK(lc.tangent == qi + 1);
    CHECK(lc.secant == qi * (qi + 1) / 2);
    CHECK(lc.external == qi * (qi - 1) / 2);
    const auto pc = m.point_census();
    CHECK(pc.on == qi + 1);
    CHECK(pc.exterior == qi * (qi + 1) / 2);
    CHECK(pc.interior == qi * (qi - 1) / 2);

    for (int l = 0; l < p->size(); ++l) {
      const int hits = count_on(p, m.conic(), l);
      const LineClass expect = hits == 1 ? LineClass::Tangent : hits == 2 ? LineClass::Secant : LineClass::External;
      REQUIRE(m.classify_line(l) == expect);
      int interior = 0;
      for (int pt : p->points_on(l)) interior += m.classify_point(pt) == PointClass::Interior;
      if (expect == LineClass::Secant) CHECK(interior == (qi - 1) / 2);
      if (expect == LineClass::External) CHECK(interior == (qi + 1) / 2);
    }
    for (int pt = 0; pt < p->size(); ++pt) {
      const int t = m.tangents_through(pt);
      if (m.on_conic(pt)) {
        CHECK(t == 1);
      } else {
        CHECK((t == 0 || t == 2));
      }
    }
  }
}

TEST_CASE("exterior points of Z = aX follow the square test") {
  for (auto q : kOddOrders) {
    CAPTURE(q);
    auto p = Plane::of_order(q);
    const Field& f = p->field();
    const ConicModel m(p, Conic::canonical(f));
    const Elem a = f.smallest_nonsquare();
    for (Elem xi = 0; xi < q; ++xi) {
      const int pt = p->index_of({1, xi, a});
      const bool square = f.is_nonzero_square(f.sub(f.mul(xi, xi), a));
      CHECK((m.classify_point(pt) == PointClass::Exterior) == square);
      CHECK((m.classify_point(pt) == PointClass::Interior) == !square);
    }
    CHECK(m.classify_point(p->index_of({0, 1, 0})) == PointClass::Exterior);
  }
}

TEST_CASE("censuses are invariant under random coordinate changes") {
  std::mt19937 rng(20240613);
  for (auto q : {3u, 5u, 7u, 9u, 11u, 13u}) {
    CAPTURE(q);
    auto p = Plane::of_order(q);
    const Conic base = Conic::canonical(p->field());
    const ConicModel ref(p, base);
    for (int trial = 0; trial < 100; ++trial) {
      const Mat3 mat = random_invertible(*p, rng);
      const Conic img = base.transformed(*p, mat);
      const ConicModel m(p, img);
      CHECK(m.line_census().secant == ref.line_census().secant);
      CHECK(m.line_census().external == ref.line_census().external);
      CHECK(m.point_census().interior == ref.point_census().interior);
      // The image of an on-conic point lies on the image conic.
      const int pt = ref.points().members().front();
      CHECK(m.on_conic(p->apply_to_point(mat, pt)));
    }
  }
}

TEST_CASE("arcs and five-point conic fitting") {
  for (auto q : {5u, 7u, 9u, 11u}) {
    auto p = Plane::of_order(q);
    const ConicModel m(p, Conic::canonical(p->field()));
    CHECK(is_arc(m.points()));
    CHECK(arc_is_conic_check(m.points()));
  }
  auto p = Plane::of_order(5);
  PointSet line(p);
  for (int pt : p->points_on(0)) line.insert(pt);
  CHECK_FALSE(is_arc(line));
  CHECK_FALSE(arc_is_conic_check(line));
  PointSet four(p, std::vector<int>{0, 1, 7, 13});
  CHECK_THROWS_AS(arc_is_conic_check(four), Error);
}

TEST_CASE("external lines of the interior set form a dual conic") {
  auto p = Plane::of_order(5);
  const ConicModel m(p, Conic::canonical(p->field()));
  const PointSet interior(p, m.points_of_class(PointClass::Interior));
  // Line and point indices share coordinates, so line indices read as points
  // give the dual set.
  PointSet dual(p);
  for (int l = 0; l < p->size(); ++l)
    if (interior.line_count(l) == 0) dual.insert(l);
  CHECK(dual.size() == 6);
  CHECK(is_arc(dual));
  CHECK(arc_is_conic_check(dual));
}
