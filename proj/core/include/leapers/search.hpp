#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

#include "leapers/move_graph.hpp"
#include "leapers/tour.hpp"

namespace leapers {

enum class Strategy { Backtrack, WarnsdorffBacktrack, Rotational };

/// Strategy that actually produced a result (portfolio runs report the
/// winning member, or Portfolio when nothing won).
enum class StrategyTag { Backtrack, Warnsdorff, Rotational, Portfolio };

std::string_view to_string(Strategy s);
std::string_view to_string(StrategyTag t);

struct SearchConfig {
  Strategy strategy = Strategy::WarnsdorffBacktrack;

  /// Closed searches default to (1,1), which loses no generality (a cycle
  /// can be rotated to start anywhere). Open searches without a start try
  /// every cell, in ascending degree order, so that forced endpoints
  /// (degree-1 cells) are tried first.
  std::optional<Cell> start;

  /// Hard cap on node expansions, enforced exactly.
  std::optional<std::uint64_t> node_budget;

  /// Wall-clock cap, polled every 4096 expansions.
  std::optional<double> time_budget_seconds;

  std::uint64_t seed = 0;
  bool randomize_ties = false;
  bool symmetry_reduction = false;

  /// Running with neither budget is an explicit opt-in; otherwise
  /// configurations without a budget are rejected.
  bool allow_unbounded = false;
};

enum class SearchOutcome { Found, ExhaustedNoTour, BudgetExceeded };

std::string_view to_string(SearchOutcome o);

struct SearchStats {
  std::uint64_t nodes_expanded = 0;
  int max_depth = 0;
  double elapsed_seconds = 0.0;
  StrategyTag strategy_used = StrategyTag::Warnsdorff;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::BudgetExceeded;
  std::optional<Tour> tour;  // engaged iff outcome == Found
  SearchStats stats;
};

/// Depth-first backtracking search for a tour of the requested kind.
///
/// Successor ordering is row-major for Backtrack and fewest-onward-moves
/// (Warnsdorff) for WarnsdorffBacktrack, with ties broken row-major, or by a
/// seeded shuffle when randomize_ties is set. Both orderings keep the
/// search complete: ExhaustedNoTour is a proof of nonexistence, and is never
/// emitted after a budget cut. With randomize_ties off, or on with a fixed
/// seed, reruns produce the identical tour and identical nodes_expanded.
///
/// Strategy::Rotational searches only quarter-turn-symmetric closed tours;
/// since that family is a strict subset of all tours, its exhaustion is
/// reported here as BudgetExceeded, never as ExhaustedNoTour.
///
/// `cancel` is a cooperative stop flag (polled at the same cadence as the
/// time budget); a cancelled run reports BudgetExceeded.
SearchResult find_tour(const MoveGraph& graph, TourKind kind,
                       const SearchConfig& config,
                       const std::atomic<bool>* cancel = nullptr);
SearchResult find_tour(BoardDims dims, const Piece& piece, TourKind kind,
                       const SearchConfig& config);

/// Hard vertex cap for the exhaustive oracle.
inline constexpr int kOracleVertexCap = 24;

struct OracleResult {
  bool exists = false;
  /// Closed: tours distinct up to starting rotation (equivalently, directed
  /// Hamiltonian cycles from a fixed first cell). Open: directed
  /// Hamiltonian paths over all starts.
  std::uint64_t count = 0;
};

/// Complete enumeration by plain depth-first search in fixed row-major
/// order, with no heuristics or pruning. Deliberately independent of
/// find_tour so the two can check each other. Throws CapacityError above
/// kOracleVertexCap vertices.
OracleResult exhaustive_hamiltonian(const MoveGraph& graph, TourKind kind);

/// Searches for a closed tour built from a quarter of itself: a simple path
/// visiting one cell per quarter-turn orbit whose end attacks the rotated
/// start; the tour is the path followed by its three rotations. Requires an
/// even-sided square board and a piece whose offset set is invariant under
/// quarter turns. ExhaustedNoTour here means only that no such *symmetric*
/// tour exists.
SearchResult rotational_search(const MoveGraph& graph,
                               const SearchConfig& config,
                               const std::atomic<bool>* cancel = nullptr);

/// Runs one thread per config; the first Found cancels the rest.
/// ExhaustedNoTour is reported only when a strategy that covers the full
/// tour space exhausted it. Per-config precondition errors are swallowed
/// unless every config fails. Stats are merged (nodes summed, depth maxed).
SearchResult portfolio_search(const MoveGraph& graph, TourKind kind,
                              std::span<const SearchConfig> configs);

}  // namespace leapers
