#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <utility>

#include "oscim/fxp.hpp"
#include "oscim/grid.hpp"

namespace oscim {

// Symmetric coupling weights on the king-graph edges of a grid, keyed by the
// unordered node pair. An absent pair reads as zero; storing zero erases the
// pair, so only king-adjacent pairs ever carry weight.
class CouplingStore {
 public:
  using PairKey = std::pair<std::uint32_t, std::uint32_t>;  // first < second

  explicit CouplingStore(GridTopology grid) : grid_(grid) {}

  const GridTopology& grid() const { return grid_; }

  void set(std::uint32_t i, std::uint32_t j, Weight8 w) {
    if (!grid_.king_adjacent(i, j)) {
      throw std::invalid_argument("CouplingStore::set: nodes are not king-adjacent");
    }
    const PairKey key = ordered(i, j);
    if (w.raw == 0) {
      weights_.erase(key);
    } else {
      weights_[key] = w.raw;
    }
  }

  Weight8 get(std::uint32_t i, std::uint32_t j) const {
    const auto it = weights_.find(ordered(i, j));
    return it == weights_.end() ? Weight8{0} : Weight8{it->second};
  }

  std::size_t size() const { return weights_.size(); }
  bool empty() const { return weights_.empty(); }

  // Stored pairs in ascending (i, j) order.
  const std::map<PairKey, std::int8_t>& entries() const { return weights_; }

 private:
  static PairKey ordered(std::uint32_t i, std::uint32_t j) {
    return i < j ? PairKey{i, j} : PairKey{j, i};
  }

  GridTopology grid_;
  std::map<PairKey, std::int8_t> weights_;
};

}  // namespace oscim
