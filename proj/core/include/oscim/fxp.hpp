#pragma once

#include <cstdint>
#include <stdexcept>

namespace oscim {

// Oscillator phase as an 8-bit wrapping binary fraction. The radix point sits
// before the most significant bit, so value() = raw / 256 covers one full turn
// in [0, 1) and every arithmetic operation wraps modulo a turn for free.
struct Phase8 {
  std::uint8_t raw = 0;

  constexpr double value() const { return raw / 256.0; }

  friend constexpr bool operator==(Phase8, Phase8) = default;
};

// Exactly two states, no zero.
enum class Sign : std::int8_t { Plus = +1, Minus = -1 };

constexpr int to_int(Sign s) { return static_cast<int>(s); }

// Signed 8-bit coupling strength. Problem mappings keep |raw| <= 64 so one
// saturated term moves a phase by exactly one LSB at the default shift of 6.
struct Weight8 {
  std::int8_t raw = 0;

  friend constexpr bool operator==(Weight8, Weight8) = default;
};

// Wide accumulator for one node's gradient: up to eight signed weight terms
// plus one sync term, summed exactly (|value| <= 8*128 + 128 = 1152).
using GradientAcc = std::int32_t;

// Wrapping phase difference (a - b) mod 256.
constexpr Phase8 phase_diff(Phase8 a, Phase8 b) {
  return Phase8{static_cast<std::uint8_t>(a.raw - b.raw)};
}

// Coupling sign on a phase difference: +1 for [0, 0.5), -1 for [0.5, 1).
// A single MSB inspection, no arithmetic.
constexpr Sign coupling_sign(Phase8 psi) {
  return (psi.raw & 0x80u) ? Sign::Minus : Sign::Plus;
}

// Two-state sync sign: -1 while (phi mod 0.5) < 0.25, +1 from 0.25 up.
// Decided entirely by the second-most-significant bit.
constexpr Sign sync_sign2(Phase8 phi) {
  return (phi.raw & 0x40u) ? Sign::Plus : Sign::Minus;
}

// Three-state sync sign from the top three bits. Each octant carries the sign
// that covers the majority of it under the exact sextant rule
// (sync_sign3_exact); the induced attractors sit at 1/8, 1/2 and 7/8 of a
// turn rather than at exact thirds.
constexpr Sign sync_sign3(Phase8 phi) {
  constexpr Sign kOctant[8] = {Sign::Minus, Sign::Plus, Sign::Plus,
                               Sign::Minus, Sign::Plus, Sign::Minus,
                               Sign::Minus, Sign::Plus};
  return kOctant[phi.raw >> 5];
}

// Exact three-state rule on a real phase: alternating sign over the sextants
// [k/6, (k+1)/6), lower-inclusive. Reference for sync_sign3 and the
// continuous-phase solver.
inline Sign sync_sign3_exact(double phi) {
  if (!(phi >= 0.0 && phi < 1.0)) {
    throw std::invalid_argument("sync_sign3_exact: phase outside [0,1)");
  }
  if (phi < 1.0 / 6.0) return Sign::Minus;
  if (phi < 2.0 / 6.0) return Sign::Plus;
  if (phi < 3.0 / 6.0) return Sign::Minus;
  if (phi < 4.0 / 6.0) return Sign::Plus;
  if (phi < 5.0 / 6.0) return Sign::Minus;
  return Sign::Plus;
}

// Weight times sign as the PE computes it: widen first, then negate, so the
// -128 corner negates exactly to +128.
constexpr GradientAcc signed_weight(Weight8 w, Sign s) {
  GradientAcc v = w.raw;
  return s == Sign::Minus ? -v : v;
}

// Barrel-shifter scaling by h = 2^-shift: arithmetic right shift, which is
// floor division. Negative sums of any magnitude keep a nonzero delta while
// positive sums below 2^shift flush to zero.
constexpr std::int32_t scale_gradient(GradientAcc sum, int shift) {
  return sum >> shift;
}

// phi <- (phi - delta) mod 256.
constexpr Phase8 update_phase(Phase8 phi, std::int32_t delta) {
  return Phase8{static_cast<std::uint8_t>(phi.raw - delta)};
}

}  // namespace oscim
