#include <doctest.h>

#include <set>

#include "tangentfree/error.hpp"
#include "tangentfree/gfq.hpp"

using namespace tangentfree;

namespace {

const std::vector<std::uint32_t> kPrimePowersTo81 = {2,  3,  4,  5,  7,  8,  9,  11, 13, 16, 17,
                                                     19, 23, 25, 27, 29, 31, 32, 37, 41, 43, 47,
                                                     49, 53, 59, 61, 64, 67, 71, 73, 79, 81};

Elem slow_pow(const Field& f, Elem a, std::uint64_t e) {
  Elem r = 1;
  for (std::uint64_t i = 0; i < e; ++i) r = f.mul(r, a);
  return r;
}

}  // namespace

TEST_CASE("field construction") {
  SUBCASE("prime field GF(5) with automatic modulus") {
    const Field f = Field::make(5, 1);
    CHECK(f.q() == 5);
    CHECK(f.spec().modulus.size() == 2);
    CHECK(f.mul(2, 3) == 1);
  }
  SUBCASE("GF(9) with t^2+1") {
    const Field f = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
    CHECK(f.q() == 9);
    // t has code 3; t*t = -1 = 2.
    CHECK(f.mul(3, 3) == 2);
  }
  SUBCASE("t^2+2 is reducible over GF(3)") {
    CHECK_THROWS_AS(Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1}), Error);
    try {
      Field::make(3, 2, std::vector<std::uint32_t>{2, 0, 1});
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::ReducibleModulus);
    }
  }
  SUBCASE("non-prime characteristic") {
    try {
      Field::make(6, 1);
      FAIL("expected NotPrime");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::NotPrime);
    }
  }
  SUBCASE("order cap") {
    try {
      Field::make(2, 21);
      FAIL("expected FieldTooLarge");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::FieldTooLarge);
    }
  }
  SUBCASE("automatic modulus is deterministic and lexicographically smallest") {
    const Field a = Field::make(3, 2);
    const Field b = Field::make(3, 2);
    CHECK(a.spec() == b.spec());
    CHECK(a.spec().modulus == std::vector<std::uint32_t>{1, 0, 1});
    // Every list that precedes the chosen one (c_0 most significant) is reducible.
    const Field c = Field::make(3, 3);
    const auto& m = c.spec().modulus;
    for (std::uint32_t c0 = 0; c0 < 3; ++c0)
      for (std::uint32_t c1 = 0; c1 < 3; ++c1)
        for (std::uint32_t c2 = 0; c2 < 3; ++c2) {
          std::vector<std::uint32_t> cand{c0, c1, c2, 1};
          if (cand < m) CHECK_FALSE(is_irreducible(3, cand));
        }
  }
}

TEST_CASE("irreducibility by exhaustive root search in degree 2 and 3") {
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (std::uint32_t c0 = 0; c0 < p; ++c0)
      for (std::uint32_t c1 = 0; c1 < p; ++c1) {
        for (std::uint32_t c2 = 0; c2 < p; ++c2) {
          bool has_root = false;
          for (std::uint32_t x = 0; x < p; ++x)
            if ((c0 + c1 * x + c2 * x * x + x * x * x) % p == 0) has_root = true;
          CHECK(is_irreducible(p, {c0, c1, c2, 1}) == !has_root);
        }
        bool has_root = false;
        for (std::uint32_t x = 0; x < p; ++x)
          if ((c0 + c1 * x + x * x) % p == 0) has_root = true;
        CHECK(is_irreducible(p, {c0, c1, 1}) == !has_root);
      }
  }
}

TEST_CASE("arithmetic examples") {
  const Field f7 = Field::make(7, 1);
  CHECK(f7.inv(3) == 5);
  CHECK_THROWS_AS(f7.inv(0), Error);
  const Field f9 = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  // Tr(1) = 2, Tr(t) = t + t^3 = t + 2t = 0.
  CHECK(f9.trace(1) == 2);
  CHECK(f9.trace(3) == 0);
  // frobenius(t) = t^3 = -t = 2t (code 6).
  CHECK(f9.frobenius(3) == 6);
  const Field f5 = Field::make(5, 1);
  for (Elem x = 0; x < 5; ++x) {
    CHECK(f5.trace(x) == x);
    CHECK(f5.frobenius(x) == x);
  }
}

TEST_CASE("quadratic character") {
  const Field f5 = Field::make(5, 1);
  CHECK(f5.quad_char(4) == QuadChar::Square);
  CHECK(f5.quad_char(2) == QuadChar::NonSquare);
  CHECK(f5.quad_char(0) == QuadChar::Zero);
  CHECK(f5.smallest_nonsquare() == 2);

  const Field f9 = Field::make(3, 2);
  std::set<Elem> squares;
  for (Elem x = 1; x < 9; ++x) squares.insert(f9.mul(x, x));
  CHECK(squares.count(1) == 1);
  CHECK(squares.count(2) == 1);
  CHECK(f9.quad_char(1) == QuadChar::Square);
  CHECK(f9.quad_char(2) == QuadChar::Square);

  for (std::uint32_t q : kPrimePowersTo81) {
    const Field f = Field::of_order(q);
    if (!f.odd()) continue;
    CAPTURE(q);
    std::set<Elem> sq;
    for (Elem x = 1; x < q; ++x) sq.insert(f.mul(x, x));
    int n_square = 0, n_non = 0;
    for (Elem x = 1; x < q; ++x) {
      const QuadChar c = f.quad_char(x);
      CHECK((c == QuadChar::Square) == (sq.count(x) == 1));
      CHECK((c == QuadChar::Square) == (slow_pow(f, x, (q - 1) / 2) == 1));
      (c == QuadChar::Square ? n_square : n_non)++;
    }
    CHECK(n_square == static_cast<int>((q - 1) / 2));
    CHECK(n_non == static_cast<int>((q - 1) / 2));
    for (Elem x = 1; x < q; ++x)
      for (Elem y = 1; y < q; ++y) {
        const bool xs = f.quad_char(x) == QuadChar::Square;
        const bool ys = f.quad_char(y) == QuadChar::Square;
        CHECK((f.quad_char(f.mul(x, y)) == QuadChar::Square) == (xs == ys));
      }
  }
}

TEST_CASE("field axioms hold exhaustively for q <= 81") {
  for (std::uint32_t q : kPrimePowersTo81) {
    const Field f = Field::of_order(q);
    CAPTURE(q);
    bool ok = true;
    for (Elem a = 0; a < q && ok; ++a) {
      if (f.add(a, 0) != a || f.mul(a, 1) != a || f.add(a, f.neg(a)) != 0) ok = false;
      if (a != 0 && f.mul(a, f.inv(a)) != 1) ok = false;
      for (Elem b = 0; b < q && ok; ++b) {
        if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a)) ok = false;
        for (Elem c = 0; c < q; ++c) {
          if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c)) ||
              f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c)) ||
              f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c))) {
            ok = false;
            break;
          }
        }
      }
    }
    CHECK(ok);
  }
}

TEST_CASE("frobenius is an automorphism and trace lands in the prime field") {
  for (std::uint32_t q : {4u, 8u, 9u, 25u, 27u, 49u, 81u}) {
    const Field f = Field::of_order(q);
    CAPTURE(q);
    for (Elem a = 0; a < q; ++a) {
      Elem x = a;
      for (std::uint32_t i = 0; i < f.h(); ++i) x = f.frobenius(x);
      CHECK(x == a);
      const Elem t = f.trace(a);
      CHECK(t < f.p());
      CHECK(f.frobenius(t) == t);
      for (Elem b = 0; b < q; ++b) {
        CHECK(f.frobenius(f.add(a, b)) == f.add(f.frobenius(a), f.frobenius(b)));
        CHECK(f.frobenius(f.mul(a, b)) == f.mul(f.frobenius(a), f.frobenius(b)));
      }
    }
  }
}

TEST_CASE("FieldSpec serialization") {
  const Field f = Field::make(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  CHECK(to_json(f.spec()).dump() == R"({"p":3,"h":2,"modulus":[1,0,1]})");
  const Field g = field_from_json(Json::parse(R"({"p":3,"h":2,"modulus":[1,0,1]})"));
  CHECK(g.spec() == f.spec());
  CHECK_THROWS_AS(field_from_json(Json::parse(R"({"p":3})")), Error);
}
