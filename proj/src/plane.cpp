#include "tangentfree/plane.hpp"

#include <string>

#include "tangentfree/error.hpp"

namespace tangentfree {

Plane::Plane(Field field) : field_(std::move(field)) {
  if (field_.q() > kMaxPlaneOrder)
    throw Error(ErrorCode::TooLarge, "plane order above " + std::to_string(kMaxPlaneOrder));
  const int q = this->q();
  n_ = q * q + q + 1;
  coords_.reserve(static_cast<std::size_t>(n_));
  for (int y = 0; y < q; ++y)
    for (int z = 0; z < q; ++z) coords_.push_back({1, static_cast<Elem>(y), static_cast<Elem>(z)});
  for (int z = 0; z < q; ++z) coords_.push_back({0, 1, static_cast<Elem>(z)});
  coords_.push_back({0, 0, 1});

  incidence_.assign(static_cast<std::size_t>(n_) * n_, 0);
  points_on_.reserve(static_cast<std::size_t>(n_) * (q + 1));
  std::vector<std::vector<int>> through(static_cast<std::size_t>(n_));
  for (int l = 0; l < n_; ++l) {
    for (int pt = 0; pt < n_; ++pt) {
      if (dot(coords_[l], coords_[pt]) == 0) {
        incidence_[static_cast<std::size_t>(l) * n_ + pt] = 1;
        points_on_.push_back(pt);
        through[static_cast<std::size_t>(pt)].push_back(l);
      }
    }
  }
  lines_through_.reserve(static_cast<std::size_t>(n_) * (q + 1));
  for (const auto& ls : through) lines_through_.insert(lines_through_.end(), ls.begin(), ls.end());
}

PlanePtr Plane::create(Field field) { return std::make_shared<const Plane>(std::move(field)); }

PlanePtr Plane::of_order(std::uint32_t q) { return create(Field::of_order(q)); }

Triple Plane::normalize(Triple v) const {
  for (int i = 0; i < 3; ++i) {
    if (v[i] != 0) {
      const Elem s = field_.inv(v[i]);
      for (int j = 0; j < 3; ++j) v[j] = field_.mul(v[j], s);
      return v;
    }
  }
  throw Error(ErrorCode::ZeroVector, "all coordinates are zero");
}

int Plane::index_of(const Triple& v) const {
  const Triple n = normalize(v);
  const int q = this->q();
  if (n[0] == 1) return static_cast<int>(n[1]) * q + static_cast<int>(n[2]);
  if (n[1] == 1) return q * q + static_cast<int>(n[2]);
  return q * q + q;
}

Triple Plane::cross(const Triple& u, const Triple& v) const {
  const Field& f = field_;
  return {f.sub(f.mul(u[1], v[2]), f.mul(u[2], v[1])), f.sub(f.mul(u[2], v[0]), f.mul(u[0], v[2])),
          f.sub(f.mul(u[0], v[1]), f.mul(u[1], v[0]))};
}

Elem Plane::dot(const Triple& u, const Triple& v) const {
  const Field& f = field_;
  return f.add(f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1])), f.mul(u[2], v[2]));
}

int Plane::join(int a, int b) const {
  if (a == b) throw Error(ErrorCode::IdenticalPoints, "join of a point with itself");
  return index_of(cross(point(a), point(b)));
}

int Plane::meet(int l, int m) const {
  if (l == m) throw Error(ErrorCode::IdenticalLines, "meet of a line with itself");
  return index_of(cross(line(l), line(m)));
}

std::vector<ProjPoint> Plane::all_points() const {
  std::vector<ProjPoint> out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int i = 0; i < n_; ++i) out.push_back(proj_point(i));
  return out;
}

Triple Plane::apply(const Mat3& m, const Triple& v) const {
  const Field& f = field_;
  Triple r{};
  for (int i = 0; i < 3; ++i)
    r[i] = f.add(f.add(f.mul(m[3 * i], v[0]), f.mul(m[3 * i + 1], v[1])), f.mul(m[3 * i + 2], v[2]));
  return r;
}

Mat3 Plane::multiply(const Mat3& a, const Mat3& b) const {
  const Field& f = field_;
  Mat3 r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Elem s = 0;
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[3 * i + k], b[3 * k + j]));
      r[3 * i + j] = s;
    }
  return r;
}

Elem Plane::determinant(const Mat3& m) const {
  const Field& f = field_;
  auto minor = [&](int a, int b, int c, int d) { return f.sub(f.mul(m[a], m[d]), f.mul(m[b], m[c])); };
  Elem d = f.mul(m[0], minor(4, 5, 7, 8));
  d = f.sub(d, f.mul(m[1], minor(3, 5, 6, 8)));
  d = f.add(d, f.mul(m[2], minor(3, 4, 6, 7)));
  return d;
}

Mat3 Plane::inverse(const Mat3& m) const {
  const Field& f = field_;
  const Elem det_inv = f.inv(determinant(m));
  auto cof = [&](int r0, int c0, int r1, int c1) {
    return f.sub(f.mul(m[3 * r0 + c0], m[3 * r1 + c1]), f.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
  };
  // Adjugate: inverse[i][j] = cofactor[j][i].
  Mat3 adj = {cof(1, 1, 2, 2), f.neg(cof(0, 1, 2, 2)), cof(0, 1, 1, 2),
              f.neg(cof(1, 0, 2, 2)), cof(0, 0, 2, 2), f.neg(cof(0, 0, 1, 2)),
              cof(1, 0, 2, 1), f.neg(cof(0, 0, 2, 1)), cof(0, 0, 1, 1)};
  for (auto& e : adj) e = f.mul(e, det_inv);
  return adj;
}

PointSet::PointSet(PlanePtr plane)
    : plane_(std::move(plane)),
      member_(static_cast<std::size_t>(plane_->size()), 0),
      line_count_(static_cast<std::size_t>(plane_->size()), 0) {}

PointSet::PointSet(PlanePtr plane, std::span<const int> points) : PointSet(std::move(plane)) {
  for (int p : points) insert(p);
}

bool PointSet::insert(int point) {
  if (point < 0 || point >= plane_->size())
    throw Error(ErrorCode::InvalidArgument, "point index out of range");
  auto& m = member_[static_cast<std::size_t>(point)];
  if (m) return false;
  m = 1;
  ++size_;
  for (int l : plane_->lines_through(point)) ++line_count_[static_cast<std::size_t>(l)];
  return true;
}

bool PointSet::remove(int point) {
  if (point < 0 || point >= plane_->size())
    throw Error(ErrorCode::InvalidArgument, "point index out of range");
  auto& m = member_[static_cast<std::size_t>(point)];
  if (!m) return false;
  m = 0;
  --size_;
  for (int l : plane_->lines_through(point)) --line_count_[static_cast<std::size_t>(l)];
  return true;
}

std::vector<int> PointSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size_));
  for (int i = 0; i < plane_->size(); ++i)
    if (member_[static_cast<std::size_t>(i)]) out.push_back(i);
  return out;
}

std::vector<int> PointSet::recompute_counts() const {
  std::vector<int> counts(static_cast<std::size_t>(plane_->size()), 0);
  for (int l = 0; l < plane_->size(); ++l)
    for (int p : plane_->points_on(l))
      if (contains(p)) ++counts[static_cast<std::size_t>(l)];
  return counts;
}

Json to_json(const PointSet& set) {
  Json pts = Json::array();
  for (int i : set.members()) {
    const auto& c = set.plane().point(i);
    pts.push_back({c[0], c[1], c[2]});
  }
  return Json{{"field", to_json(set.plane().field().spec())}, {"points", pts}};
}

namespace {

PointSet load_points(const Json& j, const PlanePtr& plane) {
  if (!j.contains("points") || !j.at("points").is_array())
    throw Error(ErrorCode::Format, "point set needs a \"points\" array");
  PointSet set(plane);
  const Elem q = plane->field().q();
  for (const auto& p : j.at("points")) {
    if (!p.is_array() || p.size() != 3) throw Error(ErrorCode::Format, "each point must be a triple");
    Triple t{};
    for (int k = 0; k < 3; ++k) {
      if (!p[k].is_number_unsigned() && !(p[k].is_number_integer() && p[k].get<long long>() >= 0))
        throw Error(ErrorCode::Format, "coordinates must be non-negative element codes");
      const auto v = p[k].get<unsigned long long>();
      if (v >= q) throw Error(ErrorCode::Format, "coordinate code out of range");
      t[k] = static_cast<Elem>(v);
    }
    set.insert(plane->index_of(t));
  }
  return set;
}

}  // namespace

PointSet point_set_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("field")) throw Error(ErrorCode::Format, "point set needs a \"field\"");
  return load_points(j, Plane::create(field_from_json(j.at("field"))));
}

PointSet point_set_from_json(const Json& j, const PlanePtr& plane) {
  if (!j.is_object() || !j.contains("field")) throw Error(ErrorCode::Format, "point set needs a \"field\"");
  if (!(field_from_json(j.at("field")).spec() == plane->field().spec()))
    throw Error(ErrorCode::Format, "point set field does not match");
  return load_points(j, plane);
}

}  // namespace tangentfree
