#pragma once

#include <string>
#include <vector>

#include "digit_set.hpp"
#include "error.hpp"
#include "grid_oracle.hpp"

namespace fracsq {

/// Plain PGM (P2) image of Q_n: one pixel per level-n cell, 0 for cells of
/// Q_n and 255 elsewhere, top row first.
inline std::string render_pgm(const DigitSet& d, int n, std::uint64_t cell_limit = kDefaultCellLimit) {
  if (d.dim() != 2) throw Error("render", "render supports dim 2 only");
  const std::uint64_t side = checked_pow(static_cast<std::uint64_t>(d.base()), n, std::uint64_t{1} << 16);
  if (side == 0) throw Error("render", "image side N^" + std::to_string(n) + " exceeds 65536 pixels");
  if (side * side > cell_limit) throw ResourceError("render", side * side, cell_limit);
  const GridSet g = iterate(d, n, cell_limit);

  std::vector<bool> filled(side * side);
  for (const auto& c : g.cells) filled[static_cast<std::size_t>(c[1]) * side + static_cast<std::size_t>(c[0])] = true;

  std::string out = "P2\n" + std::to_string(side) + " " + std::to_string(side) + "\n255\n";
  out.reserve(out.size() + side * side * 4);
  for (std::uint64_t row = 0; row < side; ++row) {
    const std::uint64_t y = side - 1 - row;
    for (std::uint64_t x = 0; x < side; ++x) {
      if (x) out += ' ';
      out += filled[y * side + x] ? "0" : "255";
    }
    out += '\n';
  }
  return out;
}

}  // namespace fracsq
