#pragma once

#include <cstdint>
#include <vector>

namespace oscim {

// One spin per node, +1 or -1.
using SpinAssignment = std::vector<std::int8_t>;

// One color per node, 0..2.
using ColorAssignment = std::vector<std::uint8_t>;

}  // namespace oscim
