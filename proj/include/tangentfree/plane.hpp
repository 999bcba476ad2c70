#pragma once

// PG(2,q): normalized points and lines, incidence tables, joins and meets.
//
// Points and lines share one enumeration: <(1,y,z)> at index y*q+z, then
// <(0,1,z)> at q^2+z, then <(0,0,1)> at q^2+q. A line with dual coordinates
// (a,b,c) contains <(x,y,z)> iff ax+by+cz = 0. Because both enumerations are
// identical, a set of line indices can be read as a point set of the dual
// plane without any translation.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include <json.hpp>

#include "tangentfree/gfq.hpp"

namespace tangentfree {

using Triple = std::array<Elem, 3>;

struct ProjPoint {
  Triple coords{};
  int index = -1;
};

struct ProjLine {
  Triple dual_coords{};
  int index = -1;
};

/// 3x3 matrix over the field, row-major. Acts on column vectors.
using Mat3 = std::array<Elem, 9>;

/// Largest order for which the dense incidence tables are built.
inline constexpr std::uint32_t kMaxPlaneOrder = 64;

class Plane {
 public:
  explicit Plane(Field field);
  static std::shared_ptr<const Plane> create(Field field);
  static std::shared_ptr<const Plane> of_order(std::uint32_t q);

  const Field& field() const noexcept { return field_; }
  int q() const noexcept { return static_cast<int>(field_.q()); }
  /// Number of points, equal to the number of lines.
  int size() const noexcept { return n_; }

  const Triple& point(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  const Triple& line(int i) const { return coords_[static_cast<std::size_t>(i)]; }
  ProjPoint proj_point(int i) const { return {point(i), i}; }
  ProjLine proj_line(int i) const { return {line(i), i}; }

  /// Leading-one normalization. Throws ZeroVector.
  Triple normalize(Triple v) const;
  /// Index of the point (or line) spanned by v; v need not be normalized.
  int index_of(const Triple& v) const;

  bool incident(int point, int line) const {
    return incidence_[static_cast<std::size_t>(line) * n_ + point] != 0;
  }
  std::span<const int> points_on(int line) const {
    return {points_on_.data() + static_cast<std::size_t>(line) * (q() + 1),
            static_cast<std::size_t>(q() + 1)};
  }
  std::span<const int> lines_through(int point) const {
    return {lines_through_.data() + static_cast<std::size_t>(point) * (q() + 1),
            static_cast<std::size_t>(q() + 1)};
  }

  /// Line through two distinct points. Throws IdenticalPoints.
  int join(int a, int b) const;
  /// Common point of two distinct lines. Throws IdenticalLines.
  int meet(int l, int m) const;

  std::vector<ProjPoint> all_points() const;

  Triple cross(const Triple& u, const Triple& v) const;
  Elem dot(const Triple& u, const Triple& v) const;

  // Projective maps.
  Triple apply(const Mat3& m, const Triple& v) const;
  int apply_to_point(const Mat3& m, int point) const { return index_of(apply(m, this->point(point))); }
  Mat3 multiply(const Mat3& a, const Mat3& b) const;
  Elem determinant(const Mat3& m) const;
  /// Throws DivisionByZero for singular input.
  Mat3 inverse(const Mat3& m) const;
  Mat3 identity() const { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

 private:
  Field field_;
  int n_ = 0;
  std::vector<Triple> coords_;
  std::vector<int> points_on_;
  std::vector<int> lines_through_;
  std::vector<std::uint8_t> incidence_;
};

using PlanePtr = std::shared_ptr<const Plane>;

/// A set of points with per-line intersection counts kept current on every
/// insert and remove.
class PointSet {
 public:
  explicit PointSet(PlanePtr plane);
  PointSet(PlanePtr plane, std::span<const int> points);

  const PlanePtr& plane_ptr() const noexcept { return plane_; }
  const Plane& plane() const noexcept { return *plane_; }

  bool contains(int point) const { return member_[static_cast<std::size_t>(point)] != 0; }
  int size() const noexcept { return size_; }
  bool empty() const noexcept { return size_ == 0; }

  /// Returns false if already present.
  bool insert(int point);
  /// Returns false if absent.
  bool remove(int point);

  int line_count(int line) const { return line_count_[static_cast<std::size_t>(line)]; }
  std::span<const int> line_counts() const noexcept { return line_count_; }

  /// Members in ascending index order.
  std::vector<int> members() const;

  /// Counts rebuilt from scratch; used to audit the incremental ones.
  std::vector<int> recompute_counts() const;

  bool operator==(const PointSet& other) const { return member_ == other.member_; }

 private:
  PlanePtr plane_;
  std::vector<std::uint8_t> member_;
  std::vector<int> line_count_;
  int size_ = 0;
};

/// `{"field":{...},"points":[[x,y,z],...]}` with element codes; members in
/// ascending index order.
Json to_json(const PointSet& set);
/// Points are normalized on load; duplicates collapse.
PointSet point_set_from_json(const Json& j);
/// Same, but the field must agree with the given plane.
PointSet point_set_from_json(const Json& j, const PlanePtr& plane);

}  // namespace tangentfree
