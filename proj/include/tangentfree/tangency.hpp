#pragma once

// Tangent structure of arbitrary point sets: intersection spectra, determined
// directions and the completion of q affine points by their non-determined
// directions.

#include <optional>
#include <string>
#include <vector>

#include "tangentfree/plane.hpp"

namespace tangentfree {

/// counts[i] = number of lines meeting the set in exactly i points, 0 <= i <= q+1.
struct Spectrum {
  std::vector<long> counts;

  long at(int i) const {
    return i >= 0 && i < static_cast<int>(counts.size()) ? counts[static_cast<std::size_t>(i)] : 0;
  }
  int max_secant() const;
  bool operator==(const Spectrum&) const = default;
};

Spectrum spectrum(const PointSet& s);

/// `i:count` pairs, zero counts suppressed, ascending i.
std::string format_spectrum(const Spectrum& sp);

/// The three double-counting identities for a set of n points in PG(2,q).
bool satisfies_counting_identities(const Spectrum& sp, long n, long q);

/// No line meets the set in exactly one point. Scans every line directly
/// rather than trusting cached counts. True for the empty set.
bool is_tangent_free(const PointSet& s);

/// Non-empty and tangent-free.
bool is_set_without_tangents(const PointSet& s);

/// All non-negative integer spectra (x_0, x_2, x_3, ..., x_max_i) of an n-set
/// in PG(2,q) with x_1 = 0 and x_i = 0 beyond max_i. Sorted ascending.
std::vector<std::vector<long>> spectrum_solutions(long n, long q, int max_i);

struct DirectionSet {
  int line_at_infinity = -1;
  std::vector<int> determined;
  std::vector<int> non_determined;
};

/// A point of the line at infinity is determined iff some other line through
/// it meets the set in at least two points. Throws PointsOnInfinity.
DirectionSet determined_directions(const PointSet& affine, int line_at_infinity);

/// Directions from the slope formula (y_i - y_j)/(x_i - x_j) with z = 0 as the
/// line at infinity; <(1,d,0)> for slope d and <(0,1,0)> for vertical pairs.
std::vector<int> slope_directions(const PointSet& affine);

/// Index of the line z = 0.
int line_z0(const Plane& plane);
/// Index of the line x = 0.
int line_x0(const Plane& plane);

struct RedeiCompletion {
  bool accepted = false;
  int determined_count = 0;
  /// Verdict of an independent tangent scan on the completion.
  bool tangent_free = false;
  /// Present when accepted: the affine set plus its non-determined directions.
  std::optional<PointSet> completion;
};

/// Completes q affine points by their non-determined directions when fewer
/// than (q+3)/2 directions are determined; the completion is checked to be
/// tangent-free. Throws WrongSize, PointsOnInfinity or OddOrderRequired.
RedeiCompletion redei_completion(const PointSet& affine, int line_at_infinity);

/// For a tangent-free S with |S| = q + |S cap L|: whether S cap L is exactly
/// the set of non-determined directions of S minus L. Throws SizeMismatch.
bool redei_converse_check(const PointSet& s, int line_at_infinity);

/// S = (L1 u L2) minus L1 cap L2 for two distinct lines.
bool is_trivial_set(const PointSet& s);

struct SecantBoundReport {
  int p = 0;
  /// Tangent-free sets examined, grouped over all (size, secant) pairs.
  long sets_checked = 0;
  /// Sets with a line of at least |S|/2 - (p-1)/4 points that are not trivial.
  long counterexamples = 0;
  /// Largest secant among non-trivial tangent-free sets of size < 2p found
  /// while checking the corollary bound |S|/2 - (p-5)/4.
  long corollary_violations = 0;
  bool holds() const { return counterexamples == 0 && corollary_violations == 0; }
};

/// Exhaustive check, for a prime p <= 7, that every tangent-free set of size
/// at most 2p with a line holding at least |S|/2 - (p-1)/4 of its points is
/// trivial. Also checks the secant bound for sizes below 2p.
SecantBoundReport secant_bound_check(int p, int workers = 0);

}  // namespace tangentfree
