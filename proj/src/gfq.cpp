#include "tangentfree/gfq.hpp"

#include <algorithm>

#include "tangentfree/error.hpp"

namespace tangentfree {

namespace {

using Poly = std::vector<std::uint32_t>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint64_t pow_mod_int(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::uint32_t inv_mod_prime(std::uint32_t a, std::uint32_t p) {
  return static_cast<std::uint32_t>(pow_mod_int(a, p - 2, p));
}

// Remainder of a modulo a monic-or-not divisor d over GF(p). d must be nonzero.
Poly poly_mod(Poly a, Poly d, std::uint32_t p) {
  trim(a);
  trim(d);
  const std::uint32_t lead_inv = inv_mod_prime(d.back(), p);
  while (a.size() >= d.size()) {
    const std::size_t shift = a.size() - d.size();
    const std::uint32_t factor = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(a.back()) * lead_inv % p);
    for (std::size_t i = 0; i < d.size(); ++i) {
      const std::uint64_t sub = static_cast<std::uint64_t>(factor) * d[i] % p;
      a[i + shift] = static_cast<std::uint32_t>((a[i + shift] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> f;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      f.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) f.push_back(n);
  return f;
}

}  // namespace

const char* to_string(QuadChar c) {
  switch (c) {
    case QuadChar::Zero: return "Zero";
    case QuadChar::Square: return "Square";
    case QuadChar::NonSquare: return "NonSquare";
  }
  return "?";
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  Poly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  if (deg == 1) return true;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      Poly g(d + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      g[d] = 1;
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t h) {
  // Lexicographic order on (c_0, c_1, ..., c_{h-1}): c_0 is the most
  // significant digit of the enumeration.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < h; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    Poly g(h + 1);
    std::uint64_t c = code;
    for (std::uint32_t i = h; i-- > 0;) {
      g[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    g[h] = 1;
    if (is_irreducible(p, g)) return g;
  }
  throw Error(ErrorCode::ReducibleModulus, "no irreducible polynomial found");
}

Field Field::make(std::uint32_t p, std::uint32_t h,
                  std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (h < 1) throw Error(ErrorCode::InvalidArgument, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < h; ++i) {
    q *= p;
    if (q > kMaxFieldOrder)
      throw Error(ErrorCode::FieldTooLarge, "field order exceeds " + std::to_string(kMaxFieldOrder));
  }
  FieldSpec spec;
  spec.p = p;
  spec.h = h;
  spec.q = static_cast<std::uint32_t>(q);
  if (modulus) {
    const auto& m = *modulus;
    if (m.size() != h + 1 || m.back() != 1)
      throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree h");
    for (auto c : m)
      if (c >= p) throw Error(ErrorCode::Format, "modulus coefficient out of range");
    if (!is_irreducible(p, m)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible");
    spec.modulus = m;
  } else {
    spec.modulus = smallest_irreducible(p, h);
  }
  return Field(std::move(spec));
}

Field Field::of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    std::uint32_t h = 0;
    std::uint32_t r = q;
    while (r % p == 0) {
      r /= p;
      ++h;
    }
    if (r != 1 || !is_prime(p)) break;
    return make(p, h);
  }
  throw Error(ErrorCode::NotPrime, std::to_string(q) + " is not a prime power");
}

Field::Field(FieldSpec spec) : spec_(std::move(spec)) {
  const std::uint32_t q = spec_.q;
  const std::uint32_t p = spec_.p;
  const std::uint32_t h = spec_.h;

  neg_.resize(q);
  for (Elem a = 0; a < q; ++a) {
    Elem r = 0;
    Elem place = 1;
    Elem x = a;
    for (std::uint32_t i = 0; i < h; ++i) {
      r += ((p - x % p) % p) * place;
      x /= p;
      place *= p;
    }
    neg_[a] = r;
  }

  auto slow_mul = [&](Elem a, Elem b) {
    Poly pa(h), pb(h);
    for (std::uint32_t i = 0; i < h; ++i) {
      pa[i] = a % p;
      a /= p;
      pb[i] = b % p;
      b /= p;
    }
    Poly prod(2 * h, 0);
    for (std::uint32_t i = 0; i < h; ++i)
      for (std::uint32_t j = 0; j < h; ++j)
        prod[i + j] = static_cast<std::uint32_t>(
            (prod[i + j] + static_cast<std::uint64_t>(pa[i]) * pb[j]) % p);
    const Poly r = poly_mod(prod, spec_.modulus, p);
    Elem out = 0;
    Elem place = 1;
    for (std::uint32_t i = 0; i < r.size(); ++i) {
      out += r[i] * place;
      place *= p;
    }
    return out;
  };

  auto slow_pow = [&](Elem a, std::uint64_t e) {
    Elem r = 1;
    while (e) {
      if (e & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      e >>= 1;
    }
    return r;
  };

  exp_.assign(q - 1, 1);
  log_.assign(q, 0);
  if (q > 2) {
    const auto factors = prime_factors(q - 1);
    Elem g = 0;
    for (Elem cand = 2; cand < q; ++cand) {
      bool primitive = true;
      for (auto f : factors) {
        if (slow_pow(cand, (q - 1) / f) == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    Elem x = 1;
    for (std::uint32_t i = 0; i < q - 1; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, g);
    }
  }

  if (q <= 1024) {
    add_table_.resize(static_cast<std::size_t>(q) * q);
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) add_table_[static_cast<std::size_t>(a) * q + b] = add_digits(a, b);
  }
}

Elem Field::add_digits(Elem a, Elem b) const noexcept {
  const std::uint32_t p = spec_.p;
  if (spec_.h == 1) return (a + b) % p;
  Elem r = 0;
  Elem place = 1;
  for (std::uint32_t i = 0; i < spec_.h; ++i) {
    r += ((a % p + b % p) % p) * place;
    a /= p;
    b /= p;
    place *= p;
  }
  return r;
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  const std::uint32_t l = log_[a];
  return exp_[l == 0 ? 0 : spec_.q - 1 - l];
}

Elem Field::pow(Elem a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t l = (static_cast<std::uint64_t>(log_[a]) * (e % (spec_.q - 1))) % (spec_.q - 1);
  return exp_[l];
}

Elem Field::from_int(std::int64_t n) const noexcept {
  const std::int64_t p = spec_.p;
  return static_cast<Elem>(((n % p) + p) % p);
}

QuadChar Field::quad_char(Elem a) const noexcept {
  if (a == 0) return QuadChar::Zero;
  if (spec_.p == 2) return QuadChar::Square;
  // With a primitive generator, squares are exactly the even logarithms.
  return (log_[a] % 2 == 0) ? QuadChar::Square : QuadChar::NonSquare;
}

Elem Field::smallest_nonsquare() const {
  if (!odd()) throw Error(ErrorCode::OddOrderRequired, "even q has no non-squares");
  for (Elem a = 1; a < spec_.q; ++a)
    if (quad_char(a) == QuadChar::NonSquare) return a;
  throw Error(ErrorCode::InvalidArgument, "no non-square");
}

Elem Field::trace(Elem a) const noexcept {
  Elem t = 0;
  Elem x = a;
  for (std::uint32_t i = 0; i < spec_.h; ++i) {
    t = add(t, x);
    x = frobenius(x);
  }
  return t;
}

std::vector<std::uint32_t> Field::digits(Elem a) const {
  std::vector<std::uint32_t> d(spec_.h);
  for (auto& c : d) {
    c = a % spec_.p;
    a /= spec_.p;
  }
  return d;
}

Json to_json(const FieldSpec& spec) {
  return Json{{"p", spec.p}, {"h", spec.h}, {"modulus", spec.modulus}};
}

Field field_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("h"))
    throw Error(ErrorCode::Format, "field object needs \"p\" and \"h\"");
  try {
    const auto p = j.at("p").get<std::uint32_t>();
    const auto h = j.at("h").get<std::uint32_t>();
    std::optional<std::vector<std::uint32_t>> modulus;
    if (j.contains("modulus") && !j.at("modulus").is_null())
      modulus = j.at("modulus").get<std::vector<std::uint32_t>>();
    return Field::make(p, h, modulus);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Format, e.what());
  }
}

}  // namespace tangentfree
