#pragma once

#include <cstdint>
#include <cstdlib>
#include <utility>
#include <vector>

namespace oscim {

// Rectangular array of processing elements with king-move connectivity:
// an interior node couples to all 8 surrounding cells, edge nodes to 5,
// corners to 3. Node index = row * width + col.
struct GridTopology {
  std::uint32_t width = 0;
  std::uint32_t height = 0;

  constexpr std::uint32_t nodes() const { return width * height; }

  constexpr std::uint32_t index(std::uint32_t row, std::uint32_t col) const {
    return row * width + col;
  }
  constexpr std::uint32_t row_of(std::uint32_t node) const { return node / width; }
  constexpr std::uint32_t col_of(std::uint32_t node) const { return node % width; }

  constexpr bool contains(std::uint32_t node) const { return node < nodes(); }

  // True when i and j are distinct cells within one king move.
  constexpr bool king_adjacent(std::uint32_t i, std::uint32_t j) const {
    if (i == j || !contains(i) || !contains(j)) return false;
    const int dr = static_cast<int>(row_of(i)) - static_cast<int>(row_of(j));
    const int dc = static_cast<int>(col_of(i)) - static_cast<int>(col_of(j));
    return dr >= -1 && dr <= 1 && dc >= -1 && dc <= 1;
  }

  // Neighbor set of a node, in ascending index order.
  std::vector<std::uint32_t> neighbors(std::uint32_t node) const {
    std::vector<std::uint32_t> out;
    const int r = static_cast<int>(row_of(node));
    const int c = static_cast<int>(col_of(node));
    for (int dr = -1; dr <= 1; ++dr) {
      for (int dc = -1; dc <= 1; ++dc) {
        if (dr == 0 && dc == 0) continue;
        const int rr = r + dr;
        const int cc = c + dc;
        if (rr < 0 || cc < 0 || rr >= static_cast<int>(height) ||
            cc >= static_cast<int>(width)) {
          continue;
        }
        out.push_back(index(static_cast<std::uint32_t>(rr),
                            static_cast<std::uint32_t>(cc)));
      }
    }
    return out;
  }

  // Every king-adjacent pair {i, j} with i < j, sorted by (i, j).
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges() const {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> out;
    for (std::uint32_t i = 0; i < nodes(); ++i) {
      for (std::uint32_t j : neighbors(i)) {
        if (j > i) out.emplace_back(i, j);
      }
    }
    return out;
  }

  friend constexpr bool operator==(const GridTopology&, const GridTopology&) = default;
};

}  // namespace oscim
