#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "leapers/board.hpp"
#include "leapers/piece.hpp"

namespace leapers {

/// Boards up to this many cells also carry per-cell adjacency bitsets for
/// O(1) membership tests; larger boards fall back to the sorted lists alone.
inline constexpr int kBitsetCellCap = 256;

/// The attack relation of a piece on a board, materialized as an undirected
/// graph over all cells. Vertices are row-major cell indices; adjacency
/// lists are sorted ascending. Immutable after construction and safe to
/// share across threads.
class MoveGraph {
 public:
  MoveGraph(BoardDims dims, Piece piece);

  const BoardDims& dims() const { return dims_; }
  const Piece& piece() const { return piece_; }
  int vertex_count() const { return vertex_count_; }

  std::span<const std::int32_t> neighbors(int v) const {
    return {adj_.data() + adj_start_[v],
            static_cast<std::size_t>(adj_start_[v + 1] - adj_start_[v])};
  }

  int degree(int v) const { return adj_start_[v + 1] - adj_start_[v]; }
  int degree(Cell c) const { return degree(dims_.index_of(c)); }

  bool adjacent(int a, int b) const {
    if (words_ > 0) {
      return (bits_[static_cast<std::size_t>(a) * words_ + (b >> 6)] >>
              (b & 63)) & 1u;
    }
    return adjacent_by_search(a, b);
  }

  bool has_bitsets() const { return words_ > 0; }

  Cell cell_of(int v) const { return dims_.cell_at(v); }
  int index_of(Cell c) const { return dims_.index_of(c); }

 private:
  bool adjacent_by_search(int a, int b) const;

  BoardDims dims_;
  Piece piece_;
  int vertex_count_;
  std::vector<std::int32_t> adj_start_;  // CSR offsets, size V+1
  std::vector<std::int32_t> adj_;
  std::vector<std::uint64_t> bits_;      // V*words_ when V <= kBitsetCellCap
  int words_ = 0;
};

}  // namespace leapers
