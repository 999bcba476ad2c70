#pragma once

// Arithmetic in GF(p^h).
//
// An element is stored as its integer code sum(c_i * p^i), where c_0..c_{h-1}
// are its coordinates in the polynomial basis 1, t, ..., t^{h-1} of the
// declared modulus. For prime fields the code is simply the residue.
// Multiplication goes through discrete log/exp tables; addition uses a dense
// table for small q and digit-wise arithmetic otherwise.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tangentfree {

/// Insertion-ordered JSON so emitted documents keep a fixed key order.
using Json = nlohmann::ordered_json;

using Elem = std::uint32_t;

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 20;

struct FieldSpec {
  std::uint32_t p = 0;
  std::uint32_t h = 0;
  /// Monic modulus, ascending degree, h+1 entries.
  std::vector<std::uint32_t> modulus;
  std::uint32_t q = 0;

  bool operator==(const FieldSpec&) const = default;
};

enum class QuadChar { Zero, Square, NonSquare };

const char* to_string(QuadChar c);

bool is_prime(std::uint64_t n);

/// True if the monic polynomial (ascending coefficients) has no monic factor of
/// degree 1..deg/2 over GF(p).
bool is_irreducible(std::uint32_t p, const std::vector<std::uint32_t>& poly);

/// Lexicographically smallest (on the ascending coefficient list) monic
/// irreducible of degree h over GF(p).
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t h);

class Field {
 public:
  /// Throws NotPrime, ReducibleModulus or FieldTooLarge.
  static Field make(std::uint32_t p, std::uint32_t h,
                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);
  /// Convenience: prime power q with automatically chosen modulus.
  static Field of_order(std::uint32_t q);

  const FieldSpec& spec() const noexcept { return spec_; }
  std::uint32_t q() const noexcept { return spec_.q; }
  std::uint32_t p() const noexcept { return spec_.p; }
  std::uint32_t h() const noexcept { return spec_.h; }
  bool odd() const noexcept { return spec_.p != 2; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }

  Elem add(Elem a, Elem b) const noexcept {
    if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * spec_.q + b];
    return add_digits(a, b);
  }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg_[b]); }
  Elem mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = log_[a] + log_[b];
    if (s >= spec_.q - 1) s -= spec_.q - 1;
    return exp_[s];
  }
  /// Throws DivisionByZero for a = 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  /// a^e for e >= 0; 0^0 = 1.
  Elem pow(Elem a, std::uint64_t e) const noexcept;
  /// Image of an integer in the prime subfield.
  Elem from_int(std::int64_t n) const noexcept;

  /// Discrete log with respect to the table generator; a must be nonzero.
  std::uint32_t log(Elem a) const noexcept { return log_[a]; }
  Elem generator() const noexcept { return exp_.size() > 1 ? exp_[1] : 1; }

  QuadChar quad_char(Elem a) const noexcept;
  /// Nonzero square (the discriminant reading of "square").
  bool is_nonzero_square(Elem a) const noexcept { return quad_char(a) == QuadChar::Square; }
  /// Square in the counting sense: zero or a nonzero square.
  bool is_square_or_zero(Elem a) const noexcept { return quad_char(a) != QuadChar::NonSquare; }
  /// Smallest non-square by element code; q must be odd.
  Elem smallest_nonsquare() const;

  Elem frobenius(Elem a) const noexcept { return pow(a, spec_.p); }
  /// Absolute trace to the prime subfield.
  Elem trace(Elem a) const noexcept;

  std::vector<std::uint32_t> digits(Elem a) const;

 private:
  explicit Field(FieldSpec spec);
  Elem add_digits(Elem a, Elem b) const noexcept;

  FieldSpec spec_;
  std::vector<Elem> add_table_;
  std::vector<Elem> neg_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

Json to_json(const FieldSpec& spec);
/// Throws Format on malformed input and the Field::make errors otherwise.
Field field_from_json(const Json& j);

}  // namespace tangentfree
