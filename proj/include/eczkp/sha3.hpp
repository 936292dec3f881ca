#pragma once

#include <array>
#include <cstdint>
#include <span>

namespace eczkp {

// SHA3-256 (FIPS 202): Keccak-f[1600], rate 1088, domain suffix 0x06.
std::array<std::uint8_t, 32> sha3_256(std::span<const std::uint8_t> message);

}  // namespace eczkp
