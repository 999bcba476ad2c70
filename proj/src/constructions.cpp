#include "tangentfree/constructions.hpp"

#include <algorithm>
#include <random>

#include "tangentfree/error.hpp"

namespace tangentfree {

std::string ConstructionCert::status() const {
  if (!valid()) return "INVALID";
  return flagged ? "FLAGGED" : "VALID";
}

ConstructionCert certify(const std::string& name, const PointSet& set, long claimed_size) {
  ConstructionCert c;
  c.name = name;
  c.claimed_size = claimed_size;
  c.actual_size = set.size();
  c.tangent_free = is_set_without_tangents(set);
  c.spectrum = spectrum(set);
  c.flagged = c.claimed_size != c.actual_size;
  if (c.flagged)
    c.note = "built size " + std::to_string(c.actual_size) + " differs from formula size " +
             std::to_string(c.claimed_size);
  return c;
}

Json to_json(const ConstructionCert& cert) {
  return Json{{"name", cert.name},
              {"claimed_size", cert.claimed_size},
              {"actual_size", cert.actual_size},
              {"tangent_free", cert.tangent_free},
              {"spectrum", format_spectrum(cert.spectrum)},
              {"status", cert.status()},
              {"note", cert.note}};
}

Construction trivial(const PlanePtr& plane) {
  const int x0 = line_x0(*plane);
  const int y0 = plane->index_of({0, 1, 0});
  const int meet = plane->meet(x0, y0);
  PointSet s(plane);
  for (int l : {x0, y0})
    for (int p : plane->points_on(l))
      if (p != meet) s.insert(p);
  auto cert = certify("trivial", s, 2L * plane->q());
  return {std::move(s), std::move(cert)};
}

std::vector<Elem> find_valid_a(const Field& field) {
  std::vector<Elem> out;
  if (!field.odd()) return out;
  for (Elem a = 2; a < field.q(); ++a) {
    const Elem one_minus_a = field.sub(1, a);
    const Elem prod = field.mul(a, field.sub(a, 1));
    // Nonzero squares only; a in {0,1} would make the two conics coincide or degenerate.
    if (field.is_nonzero_square(one_minus_a) && field.is_nonzero_square(prod)) out.push_back(a);
  }
  return out;
}

Construction two_conics(const PlanePtr& plane, Elem a) {
  const Field& f = plane->field();
  if (!f.odd()) throw Error(ErrorCode::OddOrderRequired, "two-conic construction needs odd q");
  const auto valid = find_valid_a(f);
  if (std::find(valid.begin(), valid.end(), a) == valid.end())
    throw Error(ErrorCode::InvalidA, "1-a and a(a-1) must both be nonzero squares (a=" + std::to_string(a) + ")");
  Conic c1, c2;
  c1.coef[2] = 1;
  c1.coef[3] = f.neg(1);
  c2.coef[2] = 1;
  c2.coef[3] = f.neg(a);
  const PointSet s1 = conic_points(plane, c1);
  const PointSet s2 = conic_points(plane, c2);
  PointSet s(plane);
  for (int p = 0; p < plane->size(); ++p)
    if (s1.contains(p) != s2.contains(p)) s.insert(p);
  auto cert = certify("two_conics", s, 2L * (plane->q() - 1));
  cert.note += (cert.note.empty() ? "" : "; ") + std::string("a=") + std::to_string(a);
  return {std::move(s), std::move(cert)};
}

Construction interior_points(const ConicModel& conic) {
  const int q = conic.plane().q();
  if (q < 5) throw Error(ErrorCode::QTooSmall, "interior points have tangents for q < 5");
  const auto pts = conic.points_of_class(PointClass::Interior);
  PointSet s(conic.plane_ptr(), pts);
  auto cert = certify("interior", s, static_cast<long>(q) * (q - 1) / 2);
  return {std::move(s), std::move(cert)};
}

Construction punctured_interior(const ConicModel& conic, int q_point, int r,
                                std::optional<unsigned> seed) {
  const Plane& plane = conic.plane();
  const int q = plane.q();
  if (q < 5) throw Error(ErrorCode::QTooSmall, "needs q >= 5");
  if (r < 0 || 2 * r > q - 5) throw Error(ErrorCode::RTooLarge, "need 0 <= r <= (q-5)/2");
  if (conic.classify_point(q_point) != PointClass::Exterior)
    throw Error(ErrorCode::NotExterior, "Q must be an exterior point");
  std::vector<int> external;
  for (int l : plane.lines_through(q_point))
    if (conic.classify_line(l) == LineClass::External) external.push_back(l);
  std::sort(external.begin(), external.end());
  if (static_cast<int>(external.size()) < r) throw Error(ErrorCode::RTooLarge, "not enough external lines through Q");
  if (seed) {
    std::mt19937 rng(*seed);
    std::shuffle(external.begin(), external.end(), rng);
  }
  external.resize(static_cast<std::size_t>(r));
  PointSet s(conic.plane_ptr());
  for (int p : conic.points_of_class(PointClass::Interior)) {
    bool removed = false;
    for (int l : external) removed = removed || plane.incident(p, l);
    if (!removed) s.insert(p);
  }
  auto cert = certify("punctured_interior", s,
                      static_cast<long>(q) * (q - 1) / 2 - static_cast<long>(r) * (q + 1) / 2);
  cert.note += (cert.note.empty() ? "" : "; ") + std::string("r=") + std::to_string(r);
  return {std::move(s), std::move(cert)};
}

namespace {

template <typename Fn>
Construction graph_completion(const PlanePtr& plane, const std::string& name, long claimed, Fn fn) {
  const int q = plane->q();
  if (plane->field().h() == 1)
    throw Error(ErrorCode::PrimeField, name + ": over a prime field the graph is a line");
  PointSet affine(plane);
  for (Elem x = 0; x < static_cast<Elem>(q); ++x) affine.insert(plane->index_of({1, x, fn(x)}));
  const RedeiCompletion rc = redei_completion(affine, line_x0(*plane));
  if (!rc.accepted)
    throw Error(ErrorCode::Infeasible, name + ": too many determined directions (" +
                                           std::to_string(rc.determined_count) + ")");
  auto cert = certify(name, *rc.completion, claimed);
  return {*rc.completion, std::move(cert)};
}

}  // namespace

Construction frobenius_graph(const PlanePtr& plane) {
  const Field& f = plane->field();
  const long q = f.q(), p = f.p();
  auto c = graph_completion(plane, "frobenius_graph", q + (q - p) / (p - 1),
                            [&](Elem x) { return f.frobenius(x); });
  if (c.cert.flagged) {
    c.cert.note += "; construction gives q + (q+1) - (q-1)/(p-1) = " +
                   std::to_string(q + (q + 1) - (q - 1) / (p - 1));
  }
  return c;
}

Construction trace_graph(const PlanePtr& plane) {
  const Field& f = plane->field();
  const long q = f.q(), p = f.p();
  return graph_completion(plane, "trace_graph", 2 * q - q / p, [&](Elem x) { return f.trace(x); });
}

bool verify_desargues(const PointSet& s) {
  if (s.size() != 10) throw Error(ErrorCode::WrongSize, "a Desargues configuration has 10 points");
  const Plane& plane = s.plane();
  int three_lines = 0;
  std::vector<int> per_point(static_cast<std::size_t>(plane.size()), 0);
  for (int l = 0; l < plane.size(); ++l) {
    const int c = s.line_count(l);
    if (c >= 4) return false;
    if (c == 3) {
      ++three_lines;
      for (int p : plane.points_on(l))
        if (s.contains(p)) ++per_point[static_cast<std::size_t>(p)];
    }
  }
  if (three_lines != 10) return false;
  for (int p : s.members())
    if (per_point[static_cast<std::size_t>(p)] != 3) return false;
  return true;
}

}  // namespace tangentfree
