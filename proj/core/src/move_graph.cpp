#include "leapers/move_graph.hpp"

#include <algorithm>
#include <limits>

#include "leapers/errors.hpp"

namespace leapers {

MoveGraph::MoveGraph(BoardDims dims, Piece piece)
    : dims_(dims), piece_(std::move(piece)) {
  const std::int64_t cells = dims_.cell_count();
  if (cells > std::numeric_limits<std::int32_t>::max()) {
    throw CapacityError("board " + to_string(dims_) +
                        " exceeds the 32-bit cell index range");
  }
  vertex_count_ = static_cast<int>(cells);

  adj_start_.assign(vertex_count_ + 1, 0);
  adj_.reserve(static_cast<std::size_t>(vertex_count_) *
               piece_.offsets().size() / 2);

  // Piece offsets are sorted by (dr, dc), so per-vertex targets come out
  // already sorted row-major.
  for (int v = 0; v < vertex_count_; ++v) {
    const Cell from = dims_.cell_at(v);
    for (const Offset& o : piece_.offsets()) {
      const Cell to{from.row + o.dr, from.col + o.dc};
      if (dims_.contains(to)) adj_.push_back(dims_.index_of(to));
    }
    adj_start_[v + 1] = static_cast<std::int32_t>(adj_.size());
  }

  if (vertex_count_ <= kBitsetCellCap) {
    words_ = (vertex_count_ + 63) / 64;
    bits_.assign(static_cast<std::size_t>(vertex_count_) * words_, 0);
    for (int v = 0; v < vertex_count_; ++v) {
      for (const std::int32_t w : neighbors(v)) {
        bits_[static_cast<std::size_t>(v) * words_ + (w >> 6)] |=
            std::uint64_t{1} << (w & 63);
      }
    }
  }
}

bool MoveGraph::adjacent_by_search(int a, int b) const {
  const auto nbrs = neighbors(a);
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

}  // namespace leapers
