#pragma once

// Conics and the classification of points and lines relative to one.

#include <array>
#include <optional>
#include <vector>

#include "tangentfree/plane.hpp"

namespace tangentfree {

/// Ternary quadratic form xx*x^2 + yy*y^2 + zz*z^2 + xy*xy + xz*xz + yz*yz,
/// coefficients stored in that order.
struct Conic {
  std::array<Elem, 6> coef{};

  /// y^2 - xz.
  static Conic canonical(const Field& f);
  Elem eval(const Field& f, const Triple& v) const;
  /// Form of the image conic under the point map v -> m v.
  Conic transformed(const Plane& plane, const Mat3& m) const;

  bool operator==(const Conic&) const = default;
};

enum class PointClass { OnConic, Exterior, Interior };
enum class LineClass { Tangent, Secant, External };

const char* to_string(PointClass c);
const char* to_string(LineClass c);

struct LineCensus {
  int tangent = 0;
  int secant = 0;
  int external = 0;
};

struct PointCensus {
  int on = 0;
  int exterior = 0;
  int interior = 0;
};

/// Zero set of the form. Throws DegenerateConic unless it has exactly q+1
/// points with no line contained in it.
PointSet conic_points(const PlanePtr& plane, const Conic& conic);

/// A validated irreducible conic over an odd-order plane with its point and
/// line classes precomputed. Points are classified by counting the tangent
/// lines through them.
class ConicModel {
 public:
  /// Throws OddOrderRequired or DegenerateConic.
  ConicModel(PlanePtr plane, Conic conic);

  const Plane& plane() const noexcept { return *plane_; }
  const PlanePtr& plane_ptr() const noexcept { return plane_; }
  const Conic& conic() const noexcept { return conic_; }
  const PointSet& points() const noexcept { return points_; }

  bool on_conic(int point) const { return points_.contains(point); }
  LineClass classify_line(int line) const { return line_class_[static_cast<std::size_t>(line)]; }
  PointClass classify_point(int point) const { return point_class_[static_cast<std::size_t>(point)]; }
  int tangents_through(int point) const { return tangents_through_[static_cast<std::size_t>(point)]; }

  LineCensus line_census() const;
  PointCensus point_census() const;

  std::vector<int> lines_of_class(LineClass c) const;
  std::vector<int> points_of_class(PointClass c) const;

 private:
  PlanePtr plane_;
  Conic conic_;
  PointSet points_;
  std::vector<LineClass> line_class_;
  std::vector<PointClass> point_class_;
  std::vector<int> tangents_through_;
};

/// No line carries three or more members.
bool is_arc(const PointSet& s);

/// Fits the conic through the first five members (in index order) and checks
/// that every member lies on it. Throws TooFewPoints below five members.
bool arc_is_conic_check(const PointSet& s);

/// Coefficients of a conic through five points in general position, or
/// nothing if the five do not determine a unique conic.
std::optional<Conic> conic_through(const Plane& plane, const std::array<int, 5>& pts);

}  // namespace tangentfree
