#pragma once

#include <cstdint>
#include <random>

#include "eczkp/field_curve.hpp"

namespace eczkp {

// Injectable randomness source. Seeded construction makes every protocol run
// reproducible; the mt19937_64 stream is fixed by the C++ standard, so seeded
// fixtures are portable across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  static Rng from_entropy() {
    std::random_device rd;
    return Rng((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
  }

  std::uint64_t next_u64() { return gen_(); }

  // Uniform in [0, bound) by rejection sampling on bit_length(bound) bits.
  UInt uniform_below(const UInt& bound);

  Scalar uniform_scalar(const CurveParams& curve);          // [0, m)
  Scalar uniform_nonzero_scalar(const CurveParams& curve);  // [1, m)

  void fill(std::span<std::uint8_t> out);

 private:
  std::mt19937_64 gen_;
};

}  // namespace eczkp
