#include "tangentfree/conic.hpp"

#include <optional>

#include "tangentfree/error.hpp"

namespace tangentfree {

namespace {

// Slot of the monomial v_i v_j (i <= j) in Conic::coef.
constexpr int kSlot[3][3] = {{0, 3, 4}, {3, 1, 5}, {4, 5, 2}};

}  // namespace

const char* to_string(PointClass c) {
  switch (c) {
    case PointClass::OnConic: return "OnConic";
    case PointClass::Exterior: return "Exterior";
    case PointClass::Interior: return "Interior";
  }
  return "?";
}

const char* to_string(LineClass c) {
  switch (c) {
    case LineClass::Tangent: return "Tangent";
    case LineClass::Secant: return "Secant";
    case LineClass::External: return "External";
  }
  return "?";
}

Conic Conic::canonical(const Field& f) {
  Conic c;
  c.coef[1] = 1;
  c.coef[4] = f.neg(1);
  return c;
}

Elem Conic::eval(const Field& f, const Triple& v) const {
  Elem s = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) s = f.add(s, f.mul(coef[kSlot[i][j]], f.mul(v[i], v[j])));
  return s;
}

Conic Conic::transformed(const Plane& plane, const Mat3& m) const {
  const Field& f = plane.field();
  const Mat3 n = plane.inverse(m);
  auto at = [&](int r, int c) { return n[3 * r + c]; };
  Conic out;
  for (int k = 0; k < 3; ++k)
    for (int l = k; l < 3; ++l) {
      Elem acc = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          const Elem c = coef[kSlot[i][j]];
          if (c == 0) continue;
          Elem term = f.mul(at(i, k), at(j, l));
          if (k != l) term = f.add(term, f.mul(at(i, l), at(j, k)));
          acc = f.add(acc, f.mul(c, term));
        }
      out.coef[kSlot[k][l]] = acc;
    }
  return out;
}

PointSet conic_points(const PlanePtr& plane, const Conic& conic) {
  const Field& f = plane->field();
  PointSet s(plane);
  for (int i = 0; i < plane->size(); ++i)
    if (conic.eval(f, plane->point(i)) == 0) s.insert(i);
  if (s.size() != plane->q() + 1)
    throw Error(ErrorCode::DegenerateConic, "zero set has " + std::to_string(s.size()) + " points");
  for (int c : s.line_counts())
    if (c == plane->q() + 1) throw Error(ErrorCode::DegenerateConic, "zero set contains a line");
  return s;
}

ConicModel::ConicModel(PlanePtr plane, Conic conic)
    : plane_(std::move(plane)), conic_(conic), points_(plane_) {
  if (!plane_->field().odd())
    throw Error(ErrorCode::OddOrderRequired, "conic classification needs odd q");
  points_ = conic_points(plane_, conic_);
  const int n = plane_->size();
  line_class_.resize(static_cast<std::size_t>(n));
  for (int l = 0; l < n; ++l) {
    const int c = points_.line_count(l);
    line_class_[static_cast<std::size_t>(l)] =
        c == 0 ? LineClass::External : (c == 1 ? LineClass::Tangent : LineClass::Secant);
  }
  tangents_through_.assign(static_cast<std::size_t>(n), 0);
  point_class_.resize(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    int t = 0;
    for (int l : plane_->lines_through(p))
      if (line_class_[static_cast<std::size_t>(l)] == LineClass::Tangent) ++t;
    tangents_through_[static_cast<std::size_t>(p)] = t;
    if (points_.contains(p)) {
      point_class_[static_cast<std::size_t>(p)] = PointClass::OnConic;
    } else {
      point_class_[static_cast<std::size_t>(p)] = t == 0 ? PointClass::Interior : PointClass::Exterior;
    }
  }
}

LineCensus ConicModel::line_census() const {
  LineCensus c;
  for (auto lc : line_class_) {
    switch (lc) {
      case LineClass::Tangent: ++c.tangent; break;
      case LineClass::Secant: ++c.secant; break;
      case LineClass::External: ++c.external; break;
    }
  }
  return c;
}

PointCensus ConicModel::point_census() const {
  PointCensus c;
  for (auto pc : point_class_) {
    switch (pc) {
      case PointClass::OnConic: ++c.on; break;
      case PointClass::Exterior: ++c.exterior; break;
      case PointClass::Interior: ++c.interior; break;
    }
  }
  return c;
}

std::vector<int> ConicModel::lines_of_class(LineClass c) const {
  std::vector<int> out;
  for (int l = 0; l < plane_->size(); ++l)
    if (line_class_[static_cast<std::size_t>(l)] == c) out.push_back(l);
  return out;
}

std::vector<int> ConicModel::points_of_class(PointClass c) const {
  std::vector<int> out;
  for (int p = 0; p < plane_->size(); ++p)
    if (point_class_[static_cast<std::size_t>(p)] == c) out.push_back(p);
  return out;
}

bool is_arc(const PointSet& s) {
  for (int c : s.line_counts())
    if (c >= 3) return false;
  return true;
}

std::optional<Conic> conic_through(const Plane& plane, const std::array<int, 5>& pts) {
  const Field& f = plane.field();
  // Rows: monomials (x^2, y^2, z^2, xy, xz, yz) evaluated at each point.
  std::array<std::array<Elem, 6>, 5> a{};
  for (int r = 0; r < 5; ++r) {
    const Triple& v = plane.point(pts[static_cast<std::size_t>(r)]);
    a[r] = {f.mul(v[0], v[0]), f.mul(v[1], v[1]), f.mul(v[2], v[2]),
            f.mul(v[0], v[1]), f.mul(v[0], v[2]), f.mul(v[1], v[2])};
  }
  std::array<int, 6> pivot_col{};
  int rank = 0;
  for (int col = 0; col < 6 && rank < 5; ++col) {
    int piv = -1;
    for (int r = rank; r < 5; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    const Elem s = f.inv(a[rank][col]);
    for (auto& e : a[rank]) e = f.mul(e, s);
    for (int r = 0; r < 5; ++r) {
      if (r == rank || a[r][col] == 0) continue;
      const Elem factor = a[r][col];
      for (int c = 0; c < 6; ++c) a[r][c] = f.sub(a[r][c], f.mul(factor, a[rank][c]));
    }
    pivot_col[rank++] = col;
  }
  if (rank != 5) return std::nullopt;
  int free_col = 0;
  for (int c = 0; c < 6; ++c) {
    bool is_pivot = false;
    for (int r = 0; r < 5; ++r) is_pivot = is_pivot || pivot_col[r] == c;
    if (!is_pivot) free_col = c;
  }
  Conic out;
  out.coef[free_col] = 1;
  for (int r = 0; r < 5; ++r) out.coef[pivot_col[r]] = f.neg(a[r][free_col]);
  return out;
}

bool arc_is_conic_check(const PointSet& s) {
  if (s.size() < 5) throw Error(ErrorCode::TooFewPoints, "need at least five points");
  const auto m = s.members();
  const auto fit = conic_through(s.plane(), {m[0], m[1], m[2], m[3], m[4]});
  if (!fit) return false;
  const Field& f = s.plane().field();
  for (int p : m)
    if (fit->eval(f, s.plane().point(p)) != 0) return false;
  return true;
}

}  // namespace tangentfree
