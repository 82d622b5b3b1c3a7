#include "leapers/piece.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>

namespace leapers {

namespace {

void sort_unique(std::vector<Offset>& offsets) {
  std::sort(offsets.begin(), offsets.end());
  offsets.erase(std::unique(offsets.begin(), offsets.end()), offsets.end());
}

int parse_int(std::string_view text, std::string_view what) {
  int value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw std::invalid_argument("invalid " + std::string(what) + " '" +
                                std::string(text) + "'");
  }
  return value;
}

}  // namespace

Piece::Piece(PieceKind kind, int k, std::vector<Offset> offsets,
             bool symmetrized)
    : kind_(kind), k_(k), offsets_(std::move(offsets)),
      symmetrized_(symmetrized) {}

Piece Piece::k_prince(int k) {
  if (k < 1) throw std::invalid_argument("k-prince requires k >= 1");
  std::vector<Offset> offsets;
  offsets.reserve(4 * static_cast<std::size_t>(k));
  for (int dr = -k; dr <= k; ++dr) {
    const int rest = k - std::abs(dr);
    if (rest == 0) {
      offsets.push_back({dr, 0});
    } else {
      offsets.push_back({dr, -rest});
      offsets.push_back({dr, rest});
    }
  }
  sort_unique(offsets);
  return Piece(PieceKind::KPrince, k, std::move(offsets), false);
}

Piece Piece::generalized_knight(int k) {
  if (k < 1) throw std::invalid_argument("generalized knight requires k >= 1");
  std::vector<Offset> offsets;
  for (const auto [a, b] : {std::pair{k - 1, 1}, std::pair{1, k - 1}}) {
    for (int sa : {1, -1}) {
      for (int sb : {1, -1}) {
        const Offset o{sa * a, sb * b};
        if (o != Offset{0, 0}) offsets.push_back(o);
      }
    }
  }
  sort_unique(offsets);
  return Piece(PieceKind::GeneralizedKnight, k, std::move(offsets), false);
}

Piece Piece::custom(std::vector<Offset> offsets) {
  if (offsets.empty()) {
    throw std::invalid_argument("custom piece requires at least one offset");
  }
  for (const auto& o : offsets) {
    if (o == Offset{0, 0}) {
      throw std::invalid_argument("custom piece offset (0,0) is not a move");
    }
  }
  sort_unique(offsets);
  bool symmetrized = false;
  std::vector<Offset> closed = offsets;
  for (const auto& o : offsets) {
    const Offset neg{-o.dr, -o.dc};
    if (!std::binary_search(offsets.begin(), offsets.end(), neg)) {
      closed.push_back(neg);
      symmetrized = true;
    }
  }
  if (symmetrized) sort_unique(closed);
  return Piece(PieceKind::Custom, 0, std::move(closed), symmetrized);
}

Piece Piece::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw std::invalid_argument("piece spec '" + std::string(spec) +
                                "' (want prince:<k>, knight:<k> or "
                                "custom:<dr>,<dc>[;...])");
  }
  const std::string_view head = spec.substr(0, colon);
  const std::string_view rest = spec.substr(colon + 1);
  if (head == "prince") return k_prince(parse_int(rest, "prince parameter"));
  if (head == "knight") {
    return generalized_knight(parse_int(rest, "knight parameter"));
  }
  if (head == "custom") {
    std::vector<Offset> offsets;
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      auto end = rest.find(';', pos);
      if (end == std::string_view::npos) end = rest.size();
      const std::string_view pair = rest.substr(pos, end - pos);
      const auto comma = pair.find(',');
      if (comma == std::string_view::npos) {
        throw std::invalid_argument("custom offset '" + std::string(pair) +
                                    "' (want <dr>,<dc>)");
      }
      offsets.push_back({parse_int(pair.substr(0, comma), "offset"),
                         parse_int(pair.substr(comma + 1), "offset")});
      pos = end + 1;
    }
    return custom(std::move(offsets));
  }
  throw std::invalid_argument("unknown piece kind '" + std::string(head) +
                              "'");
}

bool Piece::attacks(Cell a, Cell b) const {
  const Offset delta{b.row - a.row, b.col - a.col};
  return std::binary_search(offsets_.begin(), offsets_.end(), delta);
}

bool Piece::invariant_under_quarter_turn() const {
  return std::all_of(offsets_.begin(), offsets_.end(), [&](Offset o) {
    return std::binary_search(offsets_.begin(), offsets_.end(),
                              Offset{o.dc, -o.dr});
  });
}

std::string Piece::spec() const {
  switch (kind_) {
    case PieceKind::KPrince:
      return "prince:" + std::to_string(k_);
    case PieceKind::GeneralizedKnight:
      return "knight:" + std::to_string(k_);
    case PieceKind::Custom: {
      std::string out = "custom:";
      for (std::size_t i = 0; i < offsets_.size(); ++i) {
        if (i > 0) out += ';';
        out += std::to_string(offsets_[i].dr) + "," +
               std::to_string(offsets_[i].dc);
      }
      return out;
    }
  }
  return {};
}

}  // namespace leapers
