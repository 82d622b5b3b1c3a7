#pragma once

#include <span>
#include <string_view>

#include "leapers/piece.hpp"
#include "leapers/tour.hpp"

namespace leapers {

/// A reference closed tour embedded in the binary. Each one parses and
/// verifies as a closed tour with its piece; the test suite guards the
/// transcriptions.
struct Fixture {
  std::string_view name;
  int rows;
  int cols;
  std::string_view piece_spec;
  std::string_view grid_text;  // canonical grid format
};

/// prince7-8x8, prince3-4x4, prince5-6x6.
std::span<const Fixture> fixtures();

/// nullptr when the name is unknown.
const Fixture* find_fixture(std::string_view name);

Tour fixture_tour(const Fixture& fixture);
Piece fixture_piece(const Fixture& fixture);

}  // namespace leapers
