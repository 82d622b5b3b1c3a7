#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "leapers/board.hpp"

namespace leapers {

/// Relative move (row delta, col delta).
struct Offset {
  int dr = 0;
  int dc = 0;

  friend constexpr auto operator<=>(const Offset&, const Offset&) = default;
};

enum class PieceKind { KPrince, GeneralizedKnight, Custom };

/// A leaper: a piece that jumps by any offset from a fixed finite set.
///
/// The offset set never contains (0,0) and is closed under negation, so the
/// induced attack relation is irreflexive and symmetric. Offsets are kept
/// sorted lexicographically by (dr, dc).
class Piece {
 public:
  /// All offsets at Manhattan distance exactly k; the set has 4k elements.
  static Piece k_prince(int k);

  /// All signed axis permutations of (k-1, 1); k=3 is the standard knight.
  static Piece generalized_knight(int k);

  /// Arbitrary offset set. Offsets whose negation is missing get it added
  /// (query symmetrized() to detect that); (0,0) entries are rejected.
  static Piece custom(std::vector<Offset> offsets);

  /// Accepts "prince:<k>", "knight:<k>" and
  /// "custom:<dr>,<dc>[;<dr>,<dc>...]".
  static Piece parse(std::string_view spec);

  PieceKind kind() const { return kind_; }

  /// Leap parameter; 0 for custom pieces.
  int k() const { return k_; }

  const std::vector<Offset>& offsets() const { return offsets_; }

  /// True when custom() had to add missing negations.
  bool symmetrized() const { return symmetrized_; }

  bool attacks(Cell a, Cell b) const;

  /// Offset set closed under (dr,dc) -> (dc,-dr). Required by the
  /// quarter-turn tour construction.
  bool invariant_under_quarter_turn() const;

  /// Spec string that parses back to this piece.
  std::string spec() const;

  friend bool operator==(const Piece&, const Piece&) = default;

 private:
  Piece(PieceKind kind, int k, std::vector<Offset> offsets, bool symmetrized);

  PieceKind kind_;
  int k_;
  std::vector<Offset> offsets_;
  bool symmetrized_;
};

}  // namespace leapers
