// Serial reference against the OpenMP drivers. Every pair of runs must agree.

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "tangentfree/exterior.hpp"
#include "tangentfree/search.hpp"

using namespace tangentfree;

namespace {

template <typename Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool all_ok = true;

void row(const std::string& name, double serial, double parallel, bool same) {
  all_ok = all_ok && same;
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name.c_str(), serial, parallel, serial / parallel,
              same ? "match" : "MISMATCH");
}

SearchOptions opts(bool parallel, int workers) {
  SearchOptions o;
  o.parallel = parallel;
  o.workers = workers;
  return o;
}

void min_search(std::uint32_t q, int cap, int reps, int workers) {
  const auto p = Plane::of_order(q);
  MinSearchResult s, t;
  const double a = best_of(reps, [&] { s = min_tangent_free(p, cap, opts(false, 0)); });
  const double b = best_of(reps, [&] { t = min_tangent_free(p, cap, opts(true, workers)); });
  row("min search q=" + std::to_string(q), a, b, s.u == t.u && s.nodes == t.nodes && s.witness == t.witness);
}

void enumeration(int reps, int workers) {
  const auto p = Plane::of_order(5);
  std::vector<PointSet> s, t;
  const double a = best_of(reps, [&] { s = enumerate_tangent_free(p, 10, opts(false, 0)); });
  const double b = best_of(reps, [&] { t = enumerate_tangent_free(p, 10, opts(true, workers)); });
  row("enumerate q=5 n=10", a, b, s == t);
}

void cliques(std::uint32_t q, int reps, int workers) {
  const auto p = Plane::of_order(q);
  const ConicModel m(p, Conic::canonical(p->field()));
  std::vector<PointSet> s, t;
  const double a = best_of(reps, [&] { s = exterior_clique_search(m, false, {false, 0}); });
  const double b = best_of(reps, [&] { t = exterior_clique_search(m, false, {true, workers}); });
  row("exterior cliques q=" + std::to_string(q), a, b, s == t);
}

void group(int reps, int workers) {
  const auto p = Plane::of_order(5);
  std::shared_ptr<const PglGroup> s, t;
  const int saved = omp_get_max_threads();
  omp_set_num_threads(1);
  const double a = best_of(reps, [&] { s = PglGroup::make(p); });
  omp_set_num_threads(workers > 0 ? workers : saved);
  const double b = best_of(reps, [&] { t = PglGroup::make(p); });
  omp_set_num_threads(saved);
  bool same = s->order() == t->order();
  for (std::size_t g = 0; same && g < s->order(); g += 997)
    for (int pt = 0; pt < p->size(); ++pt) same = same && s->image(g, pt) == t->image(g, pt);
  row("PGL(3,5) table", a, b, same);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Serial against parallel kernels"};
  int reps = 3, workers = 0;
  bool heavy = false;
  app.add_option("--reps", reps, "Repetitions, best time kept")->check(CLI::PositiveNumber);
  app.add_option("--workers", workers, "Threads for the parallel runs (default: all)");
  app.add_flag("--heavy", heavy, "Add the q = 9 minimum search");
  CLI11_PARSE(app, argc, argv);

  std::printf("threads available: %d\n", omp_get_max_threads());
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");
  min_search(7, 14, reps, workers);
  if (heavy) min_search(9, 16, 1, workers);
  enumeration(reps, workers);
  cliques(11, reps, workers);
  cliques(13, reps, workers);
  group(reps, workers);
  return all_ok ? 0 : 1;
}
