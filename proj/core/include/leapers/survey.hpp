#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "leapers/admissibility.hpp"
#include "leapers/search.hpp"

namespace leapers {

/// For odd k, a k-prince tour over a 2n x 2n board is known to exist once
/// n >= (k-1)(3k-2). The survey only annotates rows with this; it never
/// claims existence from the bound without a found tour.
struct KnownBound {
  int k = 0;
  std::int64_t n_threshold = 0;

  static KnownBound for_k(int k) {
    return {k, static_cast<std::int64_t>(k - 1) * (3 * k - 2)};
  }
};

inline bool bound_guarantees(int n, int k) {
  return k % 2 == 1 && n >= KnownBound::for_k(k).n_threshold;
}

enum class SurveyOutcome { Found, ExhaustedNoTour, BudgetExceeded, RuledOut };

std::string_view to_string(SurveyOutcome o);

struct SurveyRow {
  int rows = 0;
  int cols = 0;
  std::string piece;  // piece spec string
  TourKind kind = TourKind::Closed;
  /// Failing admissibility check; empty means Inconclusive. Set iff the
  /// outcome is RuledOut (the search is skipped for ruled-out cells).
  std::optional<Check> impossible;
  SurveyOutcome outcome = SurveyOutcome::BudgetExceeded;
  std::optional<StrategyTag> strategy;  // empty on RuledOut rows
  std::uint64_t nodes = 0;
  double seconds = 0.0;
  bool bound_applies = false;

  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

struct SurveyBudgets {
  std::optional<double> time_per_cell_seconds = 60.0;
  std::optional<std::uint64_t> node_budget;
  std::uint64_t seed = 0;
};

/// For each n in [min_n, max_n] and each odd k <= 2n-1 (restricted to
/// k_filter when given), analyzes the closed k-prince problem on the 2n x 2n
/// board: admissibility first, then a Warnsdorff + rotational portfolio when
/// inconclusive. Rows come back sorted by (n, k).
std::vector<SurveyRow> run_survey(int min_n, int max_n,
                                  const std::optional<std::set<int>>& k_filter,
                                  const SurveyBudgets& budgets);

/// Tab-separated table: header row, then one row per entry in the column
/// order rows, cols, piece, kind, admissibility, outcome, strategy, nodes,
/// seconds, bound_applies. Seconds carry 6 decimal places, so the format
/// round-trips exactly.
std::string export_table(std::span<const SurveyRow> rows);

/// Inverse of export_table. Throws ParseError on malformed input.
std::vector<SurveyRow> parse_table(std::string_view text);

/// Keyed by (rows, cols, piece, kind); the better outcome wins
/// (Found > ExhaustedNoTour = RuledOut > BudgetExceeded, existing row kept
/// on ties), so re-running a sweep only ever improves the table.
std::vector<SurveyRow> merge_rows(std::vector<SurveyRow> base,
                                  const std::vector<SurveyRow>& update);

/// Writes via a temp file in the same directory plus an atomic rename.
void write_table_atomic(const std::filesystem::path& path,
                        std::span<const SurveyRow> rows);

enum class CaseStatus { Ok, WrongAnswer, BudgetBlocked };

struct PropositionCase {
  std::string name;
  int board_side = 0;
  int k = 0;
  std::string expected;
  std::string observed;
  CaseStatus status = CaseStatus::Ok;
  std::uint64_t nodes = 0;
  double seconds = 0.0;
};

struct PropositionReport {
  std::vector<PropositionCase> cases;
  bool pass = false;
  /// True when the only failures were budget cuts, which is a weaker
  /// verdict than a wrong answer.
  bool budget_limited = false;
};

/// Reruns the two reproducible statements:
///  (a) on the 8x8 board, closed k-prince tours exist exactly for odd
///      k <= 7, every other k in [1,14] being ruled out by admissibility;
///  (b) for n in [1,4], a closed k-prince tour exists on 2n x 2n for every
///      odd k <= 2n-1.
/// Each required-Found case runs single-threaded: the rotational search
/// first (it exhausts tiny orbit spaces almost instantly), then Warnsdorff
/// backtracking with the remaining budget.
PropositionReport reproduce_propositions(const SurveyBudgets& per_case);

std::string to_string(const PropositionReport& report);

}  // namespace leapers
