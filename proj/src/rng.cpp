#include "eczkp/rng.hpp"

namespace eczkp {

UInt Rng::uniform_below(const UInt& bound) {
  if (bound.is_zero()) throw ParameterError("uniform_below: zero bound");
  const std::size_t bits = bound.bit_length();
  const std::size_t limbs = (bits + 63) / 64;
  const std::size_t top_bits = bits - 64 * (limbs - 1);
  const std::uint64_t top_mask =
      top_bits == 64 ? ~0ull : ((1ull << top_bits) - 1);
  for (;;) {
    std::array<std::uint8_t, UInt::kLimbs * 8> bytes{};
    for (std::size_t i = 0; i < limbs; ++i) {
      std::uint64_t w = gen_();
      if (i == limbs - 1) w &= top_mask;
      // big-endian placement, low limb at the tail
      for (std::size_t b = 0; b < 8; ++b)
        bytes[bytes.size() - 1 - (8 * i + b)] =
            static_cast<std::uint8_t>(w >> (8 * b));
    }
    UInt candidate = UInt::from_bytes_be(bytes);
    if (candidate < bound) return candidate;
  }
}

Scalar Rng::uniform_scalar(const CurveParams& curve) {
  return curve.scalar(uniform_below(curve.order()));
}

Scalar Rng::uniform_nonzero_scalar(const CurveParams& curve) {
  UInt span = UInt::sub(curve.order(), UInt{1});
  return curve.scalar(UInt::add(uniform_below(span), UInt{1}));
}

void Rng::fill(std::span<std::uint8_t> out) {
  std::size_t i = 0;
  while (i < out.size()) {
    std::uint64_t w = gen_();
    for (std::size_t b = 0; b < 8 && i < out.size(); ++b, ++i)
      out[i] = static_cast<std::uint8_t>(w >> (8 * b));
  }
}

}  // namespace eczkp
