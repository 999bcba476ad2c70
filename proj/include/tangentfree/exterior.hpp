#pragma once

// Exterior sets of a conic: sets whose secants are all external lines.

#include <optional>
#include <vector>

#include "tangentfree/conic.hpp"

namespace tangentfree {

/// Every line through two or more members is external to the conic.
bool is_exterior_set(const ConicModel& conic, const PointSet& e);

/// The (q+1)/2 exterior points of an external line. Throws NotExternal.
PointSet exterior_points_on_line(const ConicModel& conic, int line);

/// The line Z = aX.
int line_z_equals(const Plane& plane, Elem a);

struct ExteriorSetReport {
  int base_line = -1;
  PointSet base_points;
  std::vector<int> extenders_on_line;
  std::vector<int> extenders_off_line;
  /// q = 3 mod 4: no extender off the line; q = 1 mod 4: exactly one.
  bool dichotomy_holds = false;
};

/// Scans every point Q outside the base set and keeps those with base u {Q}
/// exterior. Throws NotExternal or OddOrderRequired.
ExteriorSetReport find_extenders(const ConicModel& conic, int line);

Json to_json(const ExteriorSetReport& report);

/// Quadratic character of (lambda - a)^2 - 4(alpha a - xi lambda)(xi - alpha):
/// NonSquare iff the join of <(1,alpha,lambda)> and <(1,xi,a)> is external to
/// Y^2 = XZ.
QuadChar external_line_test_formula(const Field& f, Elem alpha, Elem lambda, Elem xi, Elem a);

struct DichotomyCheck {
  int q = 0;
  Elem a = 0;
  /// Configurations examined: the canonical one, transformed copies and,
  /// when requested, every external line of the canonical conic.
  int configurations = 0;
  bool holds = true;
  /// Off-line extenders of the canonical configuration.
  std::vector<int> canonical_off_line;
  /// For q = 1 mod 4: the canonical extender is <(1,0,-a)> and every copy's
  /// extender is the image of that point.
  bool extender_matches = true;
  /// Every point of L minus the base set extends it, in every configuration.
  bool line_points_extend = true;
};

/// Dichotomy on Y^2 = XZ with L: Z = aX, a the smallest non-square, plus
/// `copies` images under random invertible maps. With all_lines (q <= 11)
/// every external line of the canonical conic is checked as well.
DichotomyCheck verify_extension_dichotomy(const PlanePtr& plane, int copies, unsigned seed, bool all_lines = false);

struct TenSetReport {
  PointSet set;
  std::vector<int> exterior_on_line;
  std::vector<int> second_external_lines;
  bool concurrent = false;
  int meet_point = -1;
};

/// Conic of PG(2,5) with the three exterior points of Z = 2X and the common
/// point of their second external lines.
TenSetReport pg25_ten_set();

struct CliqueOptions {
  bool parallel = true;
  int workers = 0;
};

/// All exterior sets of (q+1)/2 exterior points, sorted. With
/// no_three_collinear, only those without three collinear members. Throws
/// TooLarge for q > 13.
std::vector<PointSet> exterior_clique_search(const ConicModel& conic, bool no_three_collinear,
                                             const CliqueOptions& options = {});

/// All members on one line.
bool is_collinear(const PointSet& s);

/// Whether the conic together with E has no tangent line.
bool conic_union_check(const ConicModel& conic, const PointSet& e);

}  // namespace tangentfree
