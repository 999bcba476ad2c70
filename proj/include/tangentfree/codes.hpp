#pragma once

// The code of points and lines of PG(2,q) over its prime field: dual
// codewords, their supports and the peeling decoder for erasures.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "tangentfree/plane.hpp"

namespace tangentfree {

/// Rows are lines, columns are points, entries 0 or 1 over F_p.
struct IncidenceMatrix {
  int p = 0;
  int size = 0;
  std::vector<std::uint8_t> entries;

  int at(int line, int point) const {
    return entries[static_cast<std::size_t>(line) * static_cast<std::size_t>(size) + static_cast<std::size_t>(point)];
  }
};

IncidenceMatrix incidence_matrix(const Plane& plane);

/// Coefficients in F_p indexed by point.
struct DualVector {
  std::vector<std::uint32_t> coef;

  std::vector<int> support() const;
  int weight() const;
  bool operator==(const DualVector&) const = default;
};

/// Every line sum vanishes mod p. Throws SizeMismatch on a wrong length.
bool is_dual_codeword(const Plane& plane, const DualVector& v);

/// Tangent-freeness of the support. Throws NotCodeword.
bool support_tangency(const Plane& plane, const DualVector& v);

/// Basis of the kernel of a dense rows x cols matrix over F_p.
std::vector<std::vector<std::uint32_t>> nullspace_mod_p(const std::vector<std::vector<std::uint32_t>>& rows, int cols,
                                                        std::uint32_t p);

/// Basis of the dual code.
std::vector<DualVector> dual_code_basis(const Plane& plane);

/// Uniform random element of the span of the basis.
DualVector random_combination(const std::vector<DualVector>& basis, std::uint32_t p, std::mt19937_64& rng);

struct SupportCodeword {
  /// A dual codeword whose support is exactly the set, if one was found.
  std::optional<DualVector> vector;
  /// The whole kernel was enumerated, so absence is a proof.
  bool exact = false;
  int kernel_dim = 0;
};

/// Searches the kernel of the lines x S submatrix for a vector with no zero
/// entry: exhaustively when p^dim <= 10^7, otherwise by random sampling.
SupportCodeword dual_codeword_on_support(const PointSet& s, unsigned seed = 1, long random_trials = 1000000);

/// The trivial set with +1 on one leg and -1 on the other.
DualVector trivial_signing(const Plane& plane);

Json to_json(const Plane& plane, const DualVector& v);

/// Repeatedly deletes an erased point alone on some line until none is left
/// alone. Lines are visited in index order, or in a shuffled order per pass
/// when a seed is given.
PointSet peel_decode(const PointSet& erased, std::optional<std::uint64_t> shuffle_seed = std::nullopt);

/// Greatest subset without tangents, by deleting all lone points of every
/// round at once and recounting from scratch.
PointSet maximal_stopping_subset(const PointSet& erased);

struct StoppingCheck {
  long sets_tested = 0;
  long mismatches = 0;
  bool holds() const { return sets_tested > 0 && mismatches == 0; }
};

/// Checks that fixpoints of the decoder are exactly the sets without
/// tangents: every subset for q = 3, random samples plus known stopping sets
/// above that.
StoppingCheck stopping_equivalence_check(const PlanePtr& plane, int samples, std::uint64_t seed);

}  // namespace tangentfree
