#include "suite.hpp"

#include <functional>

#include "tangentfree/codes.hpp"
#include "tangentfree/constructions.hpp"
#include "tangentfree/exterior.hpp"
#include "tangentfree/search.hpp"

namespace tfs {

using namespace tangentfree;

namespace {

const std::vector<std::uint32_t> kOddOrders{3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31};

ConicModel canonical_model(const PlanePtr& p) { return ConicModel(p, Conic::canonical(p->field())); }

SuiteCheck census(std::uint32_t max_q) {
  SuiteCheck c{"conic censuses, odd q <= " + std::to_string(max_q), true, Json::object()};
  for (auto q : kOddOrders) {
    if (q > max_q) break;
    const auto p = Plane::of_order(q);
    const ConicModel m = canonical_model(p);
    const int qi = static_cast<int>(q);
    const LineCensus lc = m.line_census();
    const PointCensus pc = m.point_census();
    const bool ok = p->size() == qi * qi + qi + 1 && lc.tangent == qi + 1 && lc.secant == qi * (qi + 1) / 2 &&
                    lc.external == qi * (qi - 1) / 2 && pc.on == qi + 1 && pc.exterior == qi * (qi + 1) / 2 &&
                    pc.interior == qi * (qi - 1) / 2;
    c.pass = c.pass && ok;
    c.detail[std::to_string(q)] = Json{{"tangent", lc.tangent}, {"secant", lc.secant}, {"external", lc.external},
                                      {"exterior", pc.exterior}, {"interior", pc.interior}};
  }
  return c;
}

SuiteCheck constructions(std::uint32_t lo, std::uint32_t hi) {
  SuiteCheck c{"constructions, odd q in [" + std::to_string(lo) + "," + std::to_string(hi) + "]", true,
               Json::object()};
  for (auto q : kOddOrders) {
    if (q < lo || q > hi) continue;
    const auto p = Plane::of_order(q);
    const ConicModel m = canonical_model(p);
    std::vector<std::pair<std::string, ConstructionCert>> certs{{"trivial", trivial(p).cert},
                                                                {"interior", interior_points(m).cert}};
    const auto as = find_valid_a(p->field());
    if (q > 5) {
      if (as.empty()) c.pass = false;
      else certs.emplace_back("two_conics", two_conics(p, as.front()).cert);
    }
    const int ext = m.points_of_class(PointClass::Exterior).front();
    for (int r = 1; 2 * r <= static_cast<int>(q) - 5; ++r)
      certs.emplace_back("punctured r=" + std::to_string(r), punctured_interior(m, ext, r).cert);
    if (p->field().h() > 1) {
      certs.emplace_back("trace_graph", trace_graph(p).cert);
      certs.emplace_back("frobenius_graph", frobenius_graph(p).cert);
    }
    Json row = Json::object();
    for (const auto& [key, cert] : certs) {
      row[key] = cert.status();
      // Only the frobenius graph may carry a size flag.
      const bool flag_ok = cert.status() == "VALID" || (cert.status() == "FLAGGED" && cert.name == "frobenius_graph");
      c.pass = c.pass && flag_ok;
    }
    c.detail[std::to_string(q)] = row;
  }
  return c;
}

SuiteCheck min_search(std::uint32_t q, int expected, const SuiteOptions& opt) {
  const auto p = Plane::of_order(q);
  SearchOptions so;
  so.workers = opt.workers;
  const MinSearchResult r = min_tangent_free(p, static_cast<int>(2 * q), so);
  const bool ok = r.found && r.u == expected && r.witness && is_set_without_tangents(*r.witness) &&
                  r.witness->size() == expected;
  return {"u_" + std::to_string(q) + " = " + std::to_string(expected), ok,
          Json{{"u", r.found ? Json(r.u) : Json()}, {"nodes_expanded", r.nodes}}};
}

SuiteCheck long_search(std::uint32_t q, int expected, int lower, const SuiteOptions& opt) {
  SearchOptions so;
  so.workers = opt.workers;
  const ExtendedResult r = u_extended(Plane::of_order(q), opt.long_budget, so);
  const auto& s = r.search;
  Json d{{"u", s.found ? Json(s.u) : Json()},
         {"verified_lower_bound", s.verified_lower_bound},
         {"budget_exceeded", s.budget_exceeded}};
  if (s.budget_exceeded && r.best_known) d["best_known_size"] = r.best_known->size();
  const bool ok = s.found ? s.u == expected && s.witness && is_set_without_tangents(*s.witness)
                          : s.budget_exceeded && s.verified_lower_bound >= lower;
  return {"u_" + std::to_string(q) + " = " + std::to_string(expected), ok, d};
}

SuiteCheck dichotomy(std::uint32_t max_q) {
  SuiteCheck c{"extension dichotomy, odd 5 <= q <= " + std::to_string(max_q), true, Json::object()};
  for (auto q : kOddOrders) {
    if (q < 5 || q > max_q) continue;
    const auto d = verify_extension_dichotomy(Plane::of_order(q), 3, 1000 + q, q <= 11);
    const bool ok = d.holds && d.extender_matches && d.line_points_extend &&
                    d.canonical_off_line.size() == (q % 4 == 1 ? 1u : 0u);
    c.pass = c.pass && ok;
    c.detail[std::to_string(q)] = d.canonical_off_line.size();
  }
  return c;
}

SuiteCheck spectra() {
  const auto s = spectrum_solutions(10, 5, 4);
  const std::vector<std::vector<long>> want{{5, 21, 2, 3}, {6, 15, 10, 0}};
  return {"spectrum system n=10, q=5", s == want, Json(s)};
}

SuiteCheck codewords() {
  const auto p5 = Plane::of_order(5);
  const DualVector t = trivial_signing(*p5);
  const auto p4 = Plane::of_order(4);
  PointSet h = conic_points(p4, Conic::canonical(p4->field()));
  h.insert(p4->index_of({0, 1, 0}));
  DualVector hv;
  hv.coef.assign(static_cast<std::size_t>(p4->size()), 0);
  for (int pt : h.members()) hv.coef[static_cast<std::size_t>(pt)] = 1;
  const bool ok = is_dual_codeword(*p5, t) && t.weight() == 10 && is_dual_codeword(*p4, hv) && hv.weight() == 6;
  return {"dual codewords of weight 10 (q=5) and 6 (q=4)", ok, Json{{"trivial", t.weight()}, {"hyperoval", hv.weight()}}};
}

SuiteCheck ten_set() {
  const TenSetReport r = pg25_ten_set();
  const bool ok = r.concurrent && r.set.size() == 10 && is_set_without_tangents(r.set) && verify_desargues(r.set);
  return {"ten-set of PG(2,5)", ok, Json{{"concurrent", r.concurrent}, {"size", r.set.size()}}};
}

SuiteCheck brute_force() {
  const auto p = Plane::of_order(3);
  const int b = brute_force_min(p);
  const auto r = min_tangent_free(p, 6);
  return {"search agrees with brute force for q=3", r.found && b == r.u, Json{{"brute_force", b}}};
}

SuiteCheck classification(const SuiteOptions& opt) {
  const auto p = Plane::of_order(5);
  SearchOptions so;
  so.workers = opt.workers;
  const auto sets = enumerate_tangent_free(p, 10, so);
  const auto group = PglGroup::make(p);
  const auto reps = classify_up_to_pgl(*group, sets);
  Json classes = Json::array();
  bool has_trivial = false, has_interior = false;
  const PointSet inner = interior_points(canonical_model(p)).set;
  for (const auto& r : reps) {
    has_trivial = has_trivial || is_trivial_set(r.canonical);
    has_interior = has_interior || projectively_equivalent(*group, r.canonical, inner);
    classes.push_back(Json{{"spectrum", format_spectrum(spectrum(r.canonical))},
                           {"stabilizer_order", r.stabilizer_order},
                           {"class_size", r.class_size}});
  }
  const bool ok = group->order() == 372000 && reps.size() == 2 && has_trivial && has_interior;
  return {"classification of tangent-free 10-sets of PG(2,5)", ok,
          Json{{"sets", sets.size()}, {"classes", classes}}};
}

SuiteCheck cliques(std::uint32_t q) {
  const ConicModel m = canonical_model(Plane::of_order(q));
  const auto sets = exterior_clique_search(m, false);
  int non_collinear = 0, unions = 0;
  for (const auto& s : sets) {
    if (is_collinear(s)) continue;
    ++non_collinear;
    unions += conic_union_check(m, s);
  }
  const bool ok = q % 4 == 1 ? non_collinear == 0 : unions > 0;
  return {"exterior cliques q=" + std::to_string(q), ok,
          Json{{"sets", sets.size()}, {"non_collinear", non_collinear}, {"tangent_free_unions", unions}}};
}

}  // namespace

std::vector<SuiteCheck> run_theorem_suite(SuiteLevel level, const SuiteOptions& options) {
  std::vector<SuiteCheck> out;
  out.push_back(census(31));
  out.push_back(constructions(5, 7));
  out.push_back(spectra());
  out.push_back(brute_force());
  out.push_back(min_search(3, 6, options));
  out.push_back(min_search(5, 10, options));
  out.push_back(dichotomy(7));
  out.push_back(codewords());
  out.push_back(ten_set());
  if (level == SuiteLevel::Quick) return out;

  out.push_back(constructions(9, 13));
  out.push_back(dichotomy(13));
  out.push_back(min_search(7, 12, options));
  out.push_back(classification(options));
  for (auto q : {5u, 7u, 11u}) out.push_back(cliques(q));
  if (level == SuiteLevel::Full) return out;

  out.push_back(constructions(17, 31));
  out.push_back(dichotomy(29));
  out.push_back(long_search(9, 15, 13, options));
  out.push_back(long_search(11, 18, 16, options));
  return out;
}

}  // namespace tfs
