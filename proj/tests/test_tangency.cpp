#include <doctest.h>

#include <random>

#include "tangentfree/conic.hpp"
#include "tangentfree/constructions.hpp"
#include "tangentfree/error.hpp"
#include "tangentfree/tangency.hpp"

using namespace tangentfree;

namespace {

PointSet graph(const PlanePtr& plane, const std::function<Elem(Elem)>& fn) {
  PointSet s(plane);
  for (Elem x = 0; x < static_cast<Elem>(plane->q()); ++x) s.insert(plane->index_of({1, x, fn(x)}));
  return s;
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("spectra of the two PG(2,5) ten-sets") {
  auto p = Plane::of_order(5);
  const Spectrum triv = spectrum(trivial(p).set);
  CHECK(triv.at(0) == 4);
  CHECK(triv.at(2) == 25);
  CHECK(triv.at(5) == 2);
  CHECK(triv.at(1) == 0);
  CHECK(format_spectrum(triv) == "0:4 2:25 5:2");

  const ConicModel m(p, Conic::canonical(p->field()));
  const Spectrum inner = spectrum(PointSet(p, m.points_of_class(PointClass::Interior)));
  CHECK(inner.counts == std::vector<long>{6, 0, 15, 10, 0, 0, 0});
  CHECK(inner.max_secant() == 3);

  const Spectrum empty = spectrum(PointSet(p));
  CHECK(empty.at(0) == 31);
}

TEST_CASE("counting identities and the direct tangent scan") {
  std::mt19937 rng(7);
  for (auto q : {3u, 4u, 5u, 7u, 9u}) {
    auto p = Plane::of_order(q);
    std::uniform_int_distribution<int> pick(0, p->size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      PointSet s(p);
      const int n = 1 + trial % (p->size() - 1);
      while (s.size() < n) s.insert(pick(rng));
      const Spectrum sp = spectrum(s);
      CHECK(satisfies_counting_identities(sp, s.size(), p->q()));
      CHECK(is_tangent_free(s) == (sp.at(1) == 0));
    }
  }
  auto p = Plane::of_order(5);
  CHECK_FALSE(is_tangent_free(PointSet(p, std::vector<int>{3})));
  CHECK(is_tangent_free(PointSet(p)));
  CHECK_FALSE(is_set_without_tangents(PointSet(p)));
}

TEST_CASE("spectrum solutions") {
  const auto sols = spectrum_solutions(10, 5, 4);
  CHECK(sols == std::vector<std::vector<long>>{{5, 21, 2, 3}, {6, 15, 10, 0}});

  // The hyperoval spectrum for q = 4: only 0- and 2-lines.
  const auto hyper = spectrum_solutions(6, 4, 2);
  CHECK(hyper == std::vector<std::vector<long>>{{6, 15}});

  auto p3 = Plane::of_order(3);
  const Spectrum t3 = spectrum(trivial(p3).set);
  const std::vector<long> expect{t3.at(0), t3.at(2), t3.at(3)};
  const auto s63 = spectrum_solutions(6, 3, 3);
  CHECK(std::find(s63.begin(), s63.end(), expect) != s63.end());
}

TEST_CASE("determined directions") {
  auto p9 = Plane::of_order(9);
  const Field& f = p9->field();
  const int linf = line_x0(*p9);
  const auto cube = determined_directions(graph(p9, [&](Elem x) { return f.mul(x, f.mul(x, x)); }), linf);
  CHECK(cube.determined.size() == 4);
  CHECK(cube.determined.size() + cube.non_determined.size() == 10);

  PointSet two(p9);
  two.insert(p9->index_of({1, 0, 0}));
  two.insert(p9->index_of({1, 3, 5}));
  CHECK(determined_directions(two, linf).determined.size() == 1);

  PointSet all(p9);
  for (int pt = 0; pt < p9->size(); ++pt)
    if (p9->point(pt)[0] != 0) all.insert(pt);
  CHECK(determined_directions(all, linf).non_determined.empty());

  PointSet bad = two;
  bad.insert(p9->index_of({0, 1, 0}));
  CHECK(code_of([&] { determined_directions(bad, linf); }) == ErrorCode::PointsOnInfinity);
}

TEST_CASE("slope formula agrees with the projective definition") {
  std::mt19937 rng(11);
  for (auto q : {5u, 7u, 9u}) {
    auto p = Plane::of_order(q);
    const int linf = line_z0(*p);
    std::uniform_int_distribution<Elem> pick(0, q - 1);
    for (int trial = 0; trial < 50; ++trial) {
      PointSet s(p);
      const int n = 2 + trial % 6;
      while (s.size() < n) s.insert(p->index_of({pick(rng), pick(rng), 1}));
      CHECK(slope_directions(s) == determined_directions(s, linf).determined);
    }
  }
}

TEST_CASE("completion by non-determined directions") {
  std::mt19937 rng(3);
  for (auto q : {9u, 25u, 27u}) {
    CAPTURE(q);
    auto p = Plane::of_order(q);
    const Field& f = p->field();
    const int linf = line_x0(*p);
    std::uniform_int_distribution<Elem> pick(0, q - 1);
    int accepted = 0;
    for (int trial = 0; trial < 200; ++trial) {
      // Additive functions determine few directions, so most are accepted.
      std::vector<Elem> c(f.h());
      for (auto& e : c) e = pick(rng);
      auto fn = [&](Elem x) {
        Elem acc = 0, xp = x;
        for (Elem ci : c) {
          acc = f.add(acc, f.mul(ci, xp));
          xp = f.frobenius(xp);
        }
        return acc;
      };
      const RedeiCompletion rc = redei_completion(graph(p, fn), linf);
      if (!rc.accepted) {
        CHECK(2 * rc.determined_count >= static_cast<int>(q) + 3);
        continue;
      }
      ++accepted;
      CHECK(rc.tangent_free);
      CHECK(is_tangent_free(*rc.completion));
      CHECK(redei_converse_check(*rc.completion, linf));
    }
    CHECK(accepted > 100);
  }
}

TEST_CASE("completion errors") {
  auto p9 = Plane::of_order(9);
  PointSet small(p9, std::vector<int>{0, 1});
  CHECK(code_of([&] { redei_completion(small, line_x0(*p9)); }) == ErrorCode::WrongSize);
  auto p4 = Plane::of_order(4);
  PointSet four(p4, std::vector<int>{0, 1, 2, 3});
  CHECK(code_of([&] { redei_completion(four, line_x0(*p4)); }) == ErrorCode::OddOrderRequired);
}

TEST_CASE("converse check on the trivial set") {
  for (auto q : {5u, 7u, 9u}) {
    auto p = Plane::of_order(q);
    const PointSet t = trivial(p).set;
    CHECK(redei_converse_check(t, line_x0(*p)));
    // Through a line meeting the set in no points the sizes do not match.
    int skew = -1;
    for (int l = 0; l < p->size() && skew < 0; ++l)
      if (t.line_count(l) == 0) skew = l;
    CHECK(code_of([&] { redei_converse_check(t, skew); }) == ErrorCode::SizeMismatch);
  }
}

TEST_CASE("graph completions meet lines in 1 mod p points with the determined directions") {
  for (auto q : {9u, 27u}) {
    auto p = Plane::of_order(q);
    const Field& f = p->field();
    const int linf = line_x0(*p);
    for (int kind = 0; kind < 2; ++kind) {
      const PointSet a = graph(p, [&](Elem x) { return kind == 0 ? f.frobenius(x) : f.trace(x); });
      const DirectionSet d = determined_directions(a, linf);
      PointSet ad = a;
      for (int pt : d.determined) ad.insert(pt);
      for (int l = 0; l < p->size(); ++l) {
        if (l == linf) continue;
        CHECK(ad.line_count(l) % static_cast<int>(f.p()) == 1);
      }
    }
  }
}

TEST_CASE("trivial sets are recognized") {
  auto p = Plane::of_order(7);
  CHECK(is_trivial_set(trivial(p).set));
  const ConicModel m(p, Conic::canonical(p->field()));
  CHECK_FALSE(is_trivial_set(PointSet(p, m.points_of_class(PointClass::Interior))));
}
