#include "search_engine.hpp"

#include <omp.h>

#include <algorithm>
#include <limits>

namespace tangentfree::detail {

namespace {

enum class Step { Continue, Stop };

/// Frontier node of the split phase: its member set and forbidden set.
struct Task {
  int root = 0;
  std::vector<int> members;
  std::vector<int> forbidden;
  /// Split-phase nodes counted before this task was emitted.
  long long split_nodes_before = 0;
};

class Engine {
 public:
  Engine(const Plane& plane, const SearchConfig& config)
      : plane_(plane),
        config_(config),
        n_(plane.size()),
        member_(static_cast<std::size_t>(n_), 0),
        forbid_(static_cast<std::size_t>(n_), 0),
        blocked_(static_cast<std::size_t>(n_), 0),
        line_cnt_(static_cast<std::size_t>(n_), 0),
        line_xor_(static_cast<std::size_t>(n_), 0),
        tan_at_(static_cast<std::size_t>(n_), 0),
        buffers_(static_cast<std::size_t>(n_) + 1) {}

  void reset(int line_cap) {
    std::fill(member_.begin(), member_.end(), 0);
    std::fill(forbid_.begin(), forbid_.end(), 0);
    std::fill(blocked_.begin(), blocked_.end(), 0);
    std::fill(line_cnt_.begin(), line_cnt_.end(), 0);
    std::fill(line_xor_.begin(), line_xor_.end(), 0);
    cap_ = line_cap;
    size_ = 0;
    members_.clear();
  }

  /// Loads members and forbidden points; false if the members overflow the cap.
  bool load(const std::vector<int>& points, const std::vector<int>& forbidden) {
    for (int p : points) {
      const auto i = static_cast<std::size_t>(p);
      if (member_[i] || blocked_[i]) return false;
      insert(p);
    }
    for (int p : forbidden) ++forbid_[static_cast<std::size_t>(p)];
    return true;
  }

  void set_split(int split_depth, std::vector<Task>* sink, int root) {
    split_depth_ = split_depth;
    sink_ = sink;
    root_ = root;
  }

  void set_cancel(const std::atomic<bool>* abort_flag, const std::atomic<long long>* winner, long long my_task) {
    abort_flag_ = abort_flag;
    winner_ = winner;
    my_task_ = my_task;
  }

  Step run() { return dfs(0); }

  long long nodes() const { return nodes_; }
  bool aborted() const { return aborted_; }
  std::vector<std::vector<int>>& solutions() { return solutions_; }

 private:
  bool available(int p) const {
    const auto i = static_cast<std::size_t>(p);
    return !member_[i] && !forbid_[i] && !blocked_[i];
  }

  void insert(int p) {
    member_[static_cast<std::size_t>(p)] = 1;
    ++size_;
    members_.push_back(p);
    for (int l : plane_.lines_through(p)) {
      const auto li = static_cast<std::size_t>(l);
      line_xor_[li] ^= p;
      if (++line_cnt_[li] == cap_)
        for (int r : plane_.points_on(l)) ++blocked_[static_cast<std::size_t>(r)];
    }
  }

  void remove(int p) {
    member_[static_cast<std::size_t>(p)] = 0;
    --size_;
    members_.pop_back();
    for (int l : plane_.lines_through(p)) {
      const auto li = static_cast<std::size_t>(l);
      line_xor_[li] ^= p;
      if (line_cnt_[li]-- == cap_)
        for (int r : plane_.points_on(l)) --blocked_[static_cast<std::size_t>(r)];
    }
  }

  bool should_abort() {
    if (aborted_) return true;
    if ((nodes_ & 4095) != 0) return false;
    if ((abort_flag_ && abort_flag_->load(std::memory_order_relaxed)) ||
        (winner_ && winner_->load(std::memory_order_relaxed) < my_task_) ||
        (config_.deadline && std::chrono::steady_clock::now() > *config_.deadline))
      aborted_ = true;
    return aborted_;
  }

  void emit() {
    Task t;
    t.root = root_;
    t.members = members_;
    for (int p = 0; p < n_; ++p)
      if (forbid_[static_cast<std::size_t>(p)]) t.forbidden.push_back(p);
    t.split_nodes_before = nodes_;
    sink_->push_back(std::move(t));
  }

  bool is_solution_state(bool tangent_free) const {
    if (!tangent_free || size_ == 0) return false;
    return config_.mode == SearchMode::FindFirst ? size_ <= config_.target : size_ == config_.target;
  }

  std::vector<int>& buffer(int depth) {
    auto& b = buffers_[static_cast<std::size_t>(depth)];
    b.clear();
    return b;
  }

  Step branch(int depth, const std::vector<int>& candidates) {
    std::size_t done = 0;
    Step result = Step::Continue;
    while (done < candidates.size()) {
      const int c = candidates[done++];
      insert(c);
      const Step s = dfs(depth + 1);
      remove(c);
      ++forbid_[static_cast<std::size_t>(c)];
      if (s == Step::Stop) {
        result = Step::Stop;
        break;
      }
    }
    for (std::size_t i = 0; i < done; ++i) --forbid_[static_cast<std::size_t>(candidates[i])];
    return result;
  }

  Step dfs(int depth) {
    // Tangent scan: per member, the number of tangents through it, and the
    // tangent line with the fewest available points.
    bool tangent = false;
    int need = 0;
    int best_line = -1;
    int best_avail = std::numeric_limits<int>::max();
    touched_.clear();
    for (int l = 0; l < n_ && best_avail > 0; ++l) {
      const auto li = static_cast<std::size_t>(l);
      if (line_cnt_[li] != 1) continue;
      tangent = true;
      const auto owner = static_cast<std::size_t>(line_xor_[li]);
      if (tan_at_[owner]++ == 0) touched_.push_back(line_xor_[li]);
      need = std::max<int>(need, tan_at_[owner]);
      int avail = 0;
      for (int p : plane_.points_on(l)) {
        if (available(p) && ++avail >= best_avail) break;
      }
      if (avail < best_avail) {
        best_avail = avail;
        best_line = l;
      }
    }
    for (int p : touched_) tan_at_[static_cast<std::size_t>(p)] = 0;

    const bool solution = is_solution_state(!tangent);
    if (sink_ && (depth == split_depth_ || solution)) {
      emit();
      return Step::Continue;
    }
    ++nodes_;
    if (should_abort()) return Step::Stop;
    if (solution) {
      solutions_.push_back(members_);
      std::sort(solutions_.back().begin(), solutions_.back().end());
      return config_.mode == SearchMode::FindFirst ? Step::Stop : Step::Continue;
    }

    auto& candidates = buffer(depth);
    if (!tangent) {
      // Tangent-free but not a solution: grow by any available point.
      if (size_ >= config_.target) return Step::Continue;
      for (int p = 0; p < n_; ++p)
        if (available(p)) candidates.push_back(p);
    } else {
      // Each member needs one new point per tangent through it, all distinct.
      if (size_ + need > config_.target || best_avail == 0) return Step::Continue;
      for (int p : plane_.points_on(best_line))
        if (available(p)) candidates.push_back(p);
    }
    return branch(depth, candidates);
  }

  const Plane& plane_;
  const SearchConfig& config_;
  int n_;
  int cap_ = 0;
  int size_ = 0;
  std::vector<std::uint8_t> member_;
  std::vector<std::int16_t> forbid_;
  std::vector<std::int16_t> blocked_;
  std::vector<std::int16_t> line_cnt_;
  std::vector<int> line_xor_;
  std::vector<std::int16_t> tan_at_;
  // One candidate list per depth; depth never exceeds the number of points.
  std::vector<std::vector<int>> buffers_;
  std::vector<int> touched_;
  std::vector<int> members_;
  std::vector<std::vector<int>> solutions_;
  long long nodes_ = 0;
  bool aborted_ = false;

  int split_depth_ = -1;
  std::vector<Task>* sink_ = nullptr;
  int root_ = 0;

  const std::atomic<bool>* abort_flag_ = nullptr;
  const std::atomic<long long>* winner_ = nullptr;
  long long my_task_ = std::numeric_limits<long long>::max();
};

}  // namespace

SearchOutcome run_serial(const Plane& plane, const std::vector<SearchRoot>& roots, const SearchConfig& config) {
  Engine engine(plane, config);
  SearchOutcome out;
  for (const auto& root : roots) {
    engine.reset(root.line_cap);
    if (!engine.load(root.points, root.forbidden)) continue;
    const Step s = engine.run();
    if (s == Step::Stop) break;
  }
  out.solutions = std::move(engine.solutions());
  out.nodes = engine.nodes();
  out.aborted = engine.aborted();
  return out;
}

SearchOutcome run_parallel(const Plane& plane, const std::vector<SearchRoot>& roots, const SearchConfig& config,
                           int workers, int split_depth) {
  std::vector<Task> tasks;
  SearchOutcome out;
  long long split_total = 0;
  {
    Engine splitter(plane, config);
    for (std::size_t r = 0; r < roots.size(); ++r) {
      splitter.reset(roots[r].line_cap);
      if (!splitter.load(roots[r].points, roots[r].forbidden)) continue;
      splitter.set_split(split_depth, &tasks, static_cast<int>(r));
      splitter.run();
      if (splitter.aborted()) break;
    }
    split_total = splitter.nodes();
    out.aborted = splitter.aborted();
  }
  if (out.aborted) {
    out.nodes = split_total;
    return out;
  }

  const auto count = static_cast<long long>(tasks.size());
  std::vector<long long> task_nodes(tasks.size(), 0);
  std::vector<std::vector<std::vector<int>>> task_solutions(tasks.size());
  std::vector<char> task_aborted(tasks.size(), 0);
  std::atomic<bool> abort_flag{false};
  std::atomic<long long> winner{std::numeric_limits<long long>::max()};
  const int threads = workers > 0 ? workers : omp_get_max_threads();

#pragma omp parallel num_threads(threads)
  {
#pragma omp for schedule(dynamic, 1)
    for (long long t = 0; t < count; ++t) {
      if (winner.load(std::memory_order_relaxed) < t) continue;
      const Task& task = tasks[static_cast<std::size_t>(t)];
      Engine local(plane, config);
      local.reset(roots[static_cast<std::size_t>(task.root)].line_cap);
      local.load(task.members, task.forbidden);
      local.set_cancel(&abort_flag, &winner, t);
      local.run();
      task_nodes[static_cast<std::size_t>(t)] = local.nodes();
      task_aborted[static_cast<std::size_t>(t)] = local.aborted();
      if (local.aborted() && winner.load() >= t) abort_flag.store(true);
      if (!local.solutions().empty()) {
        task_solutions[static_cast<std::size_t>(t)] = std::move(local.solutions());
        if (config.mode == SearchMode::FindFirst) {
          long long cur = winner.load();
          while (t < cur && !winner.compare_exchange_weak(cur, t)) {
          }
        }
      }
    }
  }

  const long long w = winner.load();
  if (config.mode == SearchMode::FindFirst && w < count) {
    const auto wi = static_cast<std::size_t>(w);
    out.nodes = tasks[wi].split_nodes_before;
    for (std::size_t t = 0; t <= wi; ++t) {
      out.nodes += task_nodes[t];
      out.aborted = out.aborted || task_aborted[t];
    }
    out.solutions = std::move(task_solutions[wi]);
    return out;
  }
  out.nodes = split_total;
  for (std::size_t t = 0; t < tasks.size(); ++t) {
    out.nodes += task_nodes[t];
    out.aborted = out.aborted || task_aborted[t];
    for (auto& s : task_solutions[t]) out.solutions.push_back(std::move(s));
  }
  return out;
}

}  // namespace tangentfree::detail
