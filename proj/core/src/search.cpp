#include "leapers/search.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "leapers/verify.hpp"

namespace leapers {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kPollMask = 4095;  // time/cancel poll cadence

// The eight square-board symmetries, enumerated directly.
Cell apply_symmetry(int id, Cell c, int side) {
  const int i = c.row, j = c.col, s = side + 1;
  switch (id) {
    case 0: return {i, j};
    case 1: return {j, s - i};          // quarter turn
    case 2: return {s - i, s - j};      // half turn
    case 3: return {s - j, i};          // three-quarter turn
    case 4: return {j, i};              // main diagonal
    case 5: return {s - j, s - i};      // anti-diagonal
    case 6: return {s - i, j};          // horizontal axis
    case 7: return {i, s - j};          // vertical axis
  }
  return c;
}

Offset apply_symmetry(int id, Offset o) {
  switch (id) {
    case 0: return {o.dr, o.dc};
    case 1: return {o.dc, -o.dr};
    case 2: return {-o.dr, -o.dc};
    case 3: return {-o.dc, o.dr};
    case 4: return {o.dc, o.dr};
    case 5: return {-o.dc, -o.dr};
    case 6: return {-o.dr, o.dc};
    case 7: return {o.dr, -o.dc};
  }
  return o;
}

bool preserves_offsets(int id, const Piece& piece) {
  const auto& offsets = piece.offsets();
  return std::all_of(offsets.begin(), offsets.end(), [&](Offset o) {
    const Offset m = apply_symmetry(id, o);
    return std::binary_search(offsets.begin(), offsets.end(), m);
  });
}

void validate_budgets(const SearchConfig& cfg) {
  if (!cfg.node_budget && !cfg.time_budget_seconds && !cfg.allow_unbounded) {
    throw std::invalid_argument(
        "search config has no node or time budget; set allow_unbounded to "
        "opt into an unbounded search");
  }
}

class PathSearcher {
 public:
  PathSearcher(const MoveGraph& g, TourKind kind, const SearchConfig& cfg,
               const std::atomic<bool>* cancel)
      : g_(g), kind_(kind), cfg_(cfg), cancel_(cancel),
        n_(g.vertex_count()), rng_(cfg.seed) {
    visited_.assign(static_cast<std::size_t>((n_ + 63) / 64), 0);
    remaining_deg_.resize(static_cast<std::size_t>(n_));
  }

  SearchResult run() {
    run_start_ = Clock::now();
    bool found = false;
    for (const int start : start_order()) {
      reset(start);
      found = dfs(start);
      if (found || stopped_) break;
    }

    SearchResult result;
    result.stats.nodes_expanded = nodes_;
    result.stats.max_depth = max_depth_;
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - run_start_).count();
    result.stats.strategy_used = cfg_.strategy == Strategy::Backtrack
                                     ? StrategyTag::Backtrack
                                     : StrategyTag::Warnsdorff;
    if (found) {
      result.outcome = SearchOutcome::Found;
      Tour tour{g_.dims(), kind_, {}};
      tour.cells.reserve(path_.size());
      for (const int v : path_) tour.cells.push_back(g_.cell_of(v));
      result.tour = std::move(tour);
    } else {
      result.outcome = stopped_ ? SearchOutcome::BudgetExceeded
                                : SearchOutcome::ExhaustedNoTour;
    }
    return result;
  }

 private:
  struct Frame {
    std::int32_t vertex;
    std::uint32_t cand_begin;
    std::uint32_t cand_next;
    std::uint32_t cand_end;
  };

  std::vector<int> start_order() const {
    if (cfg_.start) {
      if (!g_.dims().contains(*cfg_.start)) {
        throw std::invalid_argument("start cell " + to_string(*cfg_.start) +
                                    " is outside " + to_string(g_.dims()));
      }
      return {g_.index_of(*cfg_.start)};
    }
    if (kind_ == TourKind::Closed) return {0};  // (1,1), WLOG for cycles
    // Open tours: degree-1 cells must be endpoints, so try low-degree
    // starts first.
    std::vector<int> order(static_cast<std::size_t>(n_));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
    return order;
  }

  void reset(int start) {
    start_ = start;
    std::fill(visited_.begin(), visited_.end(), 0);
    for (int v = 0; v < n_; ++v) {
      remaining_deg_[static_cast<std::size_t>(v)] = g_.degree(v);
    }
    path_.clear();
    frames_.clear();
    arena_.clear();
    found_ = false;
    init_symmetry_filter();
  }

  void init_symmetry_filter() {
    symmetry_ids_.clear();
    if (kind_ != TourKind::Closed || !cfg_.symmetry_reduction) return;
    if (g_.dims().rows != g_.dims().cols) return;
    const Cell start_cell = g_.cell_of(start_);
    const int side = g_.dims().rows;
    for (int id = 1; id < 8; ++id) {
      if (apply_symmetry(id, start_cell, side) == start_cell &&
          preserves_offsets(id, g_.piece())) {
        symmetry_ids_.push_back(id);
      }
    }
  }

  bool visited(int v) const {
    return (visited_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1u;
  }

  void visit(int v) {
    visited_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1}
                                                  << (v & 63);
    for (const int w : g_.neighbors(v)) {
      --remaining_deg_[static_cast<std::size_t>(w)];
    }
  }

  void unvisit(int v) {
    visited_[static_cast<std::size_t>(v >> 6)] &=
        ~(std::uint64_t{1} << (v & 63));
    for (const int w : g_.neighbors(v)) {
      ++remaining_deg_[static_cast<std::size_t>(w)];
    }
  }

  void poll_budgets() {
    if (cfg_.node_budget && nodes_ >= *cfg_.node_budget) {
      stopped_ = true;
      return;
    }
    if ((nodes_ & kPollMask) == 0) {
      if (cancel_ && cancel_->load(std::memory_order_relaxed)) {
        stopped_ = true;
        return;
      }
      if (cfg_.time_budget_seconds) {
        const double elapsed =
            std::chrono::duration<double>(Clock::now() - run_start_).count();
        if (elapsed >= *cfg_.time_budget_seconds) stopped_ = true;
      }
    }
  }

  /// Dead-position rules, all sound (they only fire when no completion can
  /// exist below this node):
  ///  (b) closed: the start cell has no unvisited neighbor left to close
  ///      from;
  ///  (a) some unvisited cell can be reached from nothing (no unvisited
  ///      neighbor, not from the head, and for closed not from the start);
  ///  (c) some unvisited cell has a single remaining connection when two
  ///      are needed (closed, >= 2 cells left), or more than two unvisited
  ///      cells are down to a single connection (open; at most the next
  ///      cell and the final endpoint may be).
  bool dead_position(int head, int depth) {
    const bool closed = kind_ == TourKind::Closed;
    if (closed && remaining_deg_[static_cast<std::size_t>(start_)] == 0) {
      return true;
    }
    const int r = n_ - depth;
    const bool head_is_start = head == start_;
    int ones = 0;
    for (std::size_t wi = 0; wi < visited_.size(); ++wi) {
      std::uint64_t free_bits = ~visited_[wi];
      if (wi + 1 == visited_.size() && (n_ & 63) != 0) {
        free_bits &= (std::uint64_t{1} << (n_ & 63)) - 1;
      }
      while (free_bits != 0) {
        const int u = static_cast<int>(wi * 64) +
                      std::countr_zero(free_bits);
        free_bits &= free_bits - 1;
        int d = remaining_deg_[static_cast<std::size_t>(u)];
        if (g_.adjacent(head, u)) ++d;
        if (closed && !head_is_start && g_.adjacent(start_, u)) ++d;
        if (d == 0) return true;
        if (d == 1) {
          if (closed) {
            if (r >= 2) return true;
          } else if (++ones > 2) {
            return true;
          }
        }
      }
    }
    return false;
  }

  void order_candidates(std::uint32_t begin, std::uint32_t end) {
    if (cfg_.strategy != Strategy::WarnsdorffBacktrack) return;  // row-major
    const auto first = arena_.begin() + begin;
    const auto last = arena_.begin() + end;
    std::stable_sort(first, last, [&](int a, int b) {
      return remaining_deg_[static_cast<std::size_t>(a)] <
             remaining_deg_[static_cast<std::size_t>(b)];
    });
    if (!cfg_.randomize_ties) return;
    // Seeded Fisher-Yates inside each equal-count run.
    auto run_begin = first;
    while (run_begin != last) {
      auto run_end = run_begin + 1;
      while (run_end != last &&
             remaining_deg_[static_cast<std::size_t>(*run_end)] ==
                 remaining_deg_[static_cast<std::size_t>(*run_begin)]) {
        ++run_end;
      }
      for (auto len = run_end - run_begin; len > 1; --len) {
        const auto pick = static_cast<std::ptrdiff_t>(rng_() %
                                                      static_cast<std::uint64_t>(len));
        std::iter_swap(run_begin + len - 1, run_begin + pick);
      }
      run_begin = run_end;
    }
  }

  void filter_symmetric_candidates(std::uint32_t begin, std::uint32_t* end) {
    if (symmetry_ids_.empty()) return;
    const int side = g_.dims().rows;
    std::uint32_t out = begin;
    for (std::uint32_t i = begin; i < *end; ++i) {
      const int v = arena_[i];
      const Cell c = g_.cell_of(v);
      bool representative = true;
      for (const int id : symmetry_ids_) {
        if (g_.index_of(apply_symmetry(id, c, side)) < v) {
          representative = false;
          break;
        }
      }
      if (representative) arena_[out++] = v;
    }
    *end = out;
    arena_.resize(out);
  }

  void push(int v) {
    poll_budgets();
    if (stopped_) return;
    ++nodes_;
    visit(v);
    path_.push_back(v);
    const int depth = static_cast<int>(path_.size());
    max_depth_ = std::max(max_depth_, depth);

    Frame f{v, static_cast<std::uint32_t>(arena_.size()),
            static_cast<std::uint32_t>(arena_.size()),
            static_cast<std::uint32_t>(arena_.size())};
    if (depth == n_) {
      if (kind_ == TourKind::Open || g_.adjacent(v, start_)) found_ = true;
    } else if (!dead_position(v, depth)) {
      for (const int w : g_.neighbors(v)) {
        if (!visited(w)) arena_.push_back(w);
      }
      f.cand_end = static_cast<std::uint32_t>(arena_.size());
      if (depth == 1) filter_symmetric_candidates(f.cand_begin, &f.cand_end);
      order_candidates(f.cand_begin, f.cand_end);
    }
    frames_.push_back(f);
  }

  void pop() {
    const Frame f = frames_.back();
    frames_.pop_back();
    arena_.resize(f.cand_begin);
    path_.pop_back();
    unvisit(f.vertex);
  }

  bool dfs(int start) {
    run_start_ = Clock::now();
    push(start);
    while (!frames_.empty()) {
      if (found_) return true;
      if (stopped_) return false;
      Frame& f = frames_.back();
      if (f.cand_next < f.cand_end) {
        push(arena_[f.cand_next++]);
      } else {
        pop();
      }
    }
    return found_;
  }

  const MoveGraph& g_;
  TourKind kind_;
  const SearchConfig& cfg_;
  const std::atomic<bool>* cancel_;
  int n_;
  int start_ = 0;

  std::vector<std::uint64_t> visited_;
  std::vector<std::int32_t> remaining_deg_;
  std::vector<std::int32_t> path_;
  std::vector<Frame> frames_;
  std::vector<std::int32_t> arena_;
  std::vector<int> symmetry_ids_;

  std::mt19937_64 rng_;
  std::uint64_t nodes_ = 0;
  int max_depth_ = 0;
  bool found_ = false;
  bool stopped_ = false;
  Clock::time_point run_start_{};
};

}  // namespace

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::Backtrack: return "backtrack";
    case Strategy::WarnsdorffBacktrack: return "warnsdorff";
    case Strategy::Rotational: return "rotational";
  }
  return "?";
}

std::string_view to_string(StrategyTag t) {
  switch (t) {
    case StrategyTag::Backtrack: return "backtrack";
    case StrategyTag::Warnsdorff: return "warnsdorff";
    case StrategyTag::Rotational: return "rotational";
    case StrategyTag::Portfolio: return "portfolio";
  }
  return "?";
}

std::string_view to_string(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::ExhaustedNoTour: return "exhausted-no-tour";
    case SearchOutcome::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

SearchResult find_tour(const MoveGraph& graph, TourKind kind,
                       const SearchConfig& config,
                       const std::atomic<bool>* cancel) {
  validate_budgets(config);

  SearchResult result;
  if (config.strategy == Strategy::Rotational) {
    result = rotational_search(graph, config, cancel);
    if (result.outcome == SearchOutcome::ExhaustedNoTour) {
      // Quarter-turn-symmetric tours are a strict subset of all tours, so
      // exhausting them proves nothing about the rest of the space.
      result.outcome = SearchOutcome::BudgetExceeded;
    }
  } else {
    result = PathSearcher(graph, kind, config, cancel).run();
  }

  if (result.outcome == SearchOutcome::Found) {
    const auto report = verify_tour(*result.tour, graph.piece());
    if (!report.valid) {
      throw std::logic_error("search produced an invalid tour: " +
                             to_string(report));
    }
  }
  return result;
}

SearchResult find_tour(BoardDims dims, const Piece& piece, TourKind kind,
                       const SearchConfig& config) {
  return find_tour(MoveGraph(dims, piece), kind, config);
}

}  // namespace leapers
