#include "eczkp/sha3.hpp"

#include <cstring>

namespace eczkp {

namespace {

constexpr int kRounds = 24;
constexpr std::size_t kRateBytes = 136;  // 1088-bit rate for a 256-bit digest

constexpr std::uint64_t kRoundConstants[kRounds] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

constexpr int kRotation[5][5] = {
    {0, 36, 3, 41, 18},
    {1, 44, 10, 45, 2},
    {62, 6, 43, 15, 61},
    {28, 55, 25, 21, 56},
    {27, 20, 39, 8, 14},
};

inline std::uint64_t rotl(std::uint64_t v, int s) {
  return s == 0 ? v : (v << s) | (v >> (64 - s));
}

void keccak_f1600(std::uint64_t a[5][5]) {
  for (int round = 0; round < kRounds; ++round) {
    // theta
    std::uint64_t c[5], d[5];
    for (int x = 0; x < 5; ++x)
      c[x] = a[x][0] ^ a[x][1] ^ a[x][2] ^ a[x][3] ^ a[x][4];
    for (int x = 0; x < 5; ++x) {
      d[x] = c[(x + 4) % 5] ^ rotl(c[(x + 1) % 5], 1);
      for (int y = 0; y < 5; ++y) a[x][y] ^= d[x];
    }
    // rho + pi
    std::uint64_t b[5][5];
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        b[y][(2 * x + 3 * y) % 5] = rotl(a[x][y], kRotation[x][y]);
    // chi
    for (int x = 0; x < 5; ++x)
      for (int y = 0; y < 5; ++y)
        a[x][y] = b[x][y] ^ (~b[(x + 1) % 5][y] & b[(x + 2) % 5][y]);
    // iota
    a[0][0] ^= kRoundConstants[round];
  }
}

}  // namespace

std::array<std::uint8_t, 32> sha3_256(std::span<const std::uint8_t> message) {
  std::uint64_t state[5][5] = {};
  std::uint8_t block[kRateBytes];

  auto absorb_block = [&state](const std::uint8_t* data) {
    for (std::size_t i = 0; i < kRateBytes / 8; ++i) {
      std::uint64_t lane;
      std::memcpy(&lane, data + 8 * i, 8);  // little-endian lane loading
      state[i % 5][i / 5] ^= lane;
    }
    keccak_f1600(state);
  };

  std::size_t offset = 0;
  while (message.size() - offset >= kRateBytes) {
    absorb_block(message.data() + offset);
    offset += kRateBytes;
  }
  const std::size_t tail = message.size() - offset;
  std::memset(block, 0, sizeof(block));
  if (tail > 0) std::memcpy(block, message.data() + offset, tail);
  block[tail] = 0x06;
  block[kRateBytes - 1] |= 0x80;
  absorb_block(block);

  std::array<std::uint8_t, 32> digest;
  for (std::size_t i = 0; i < 4; ++i) {
    std::uint64_t lane = state[i % 5][i / 5];
    std::memcpy(digest.data() + 8 * i, &lane, 8);
  }
  return digest;
}

}  // namespace eczkp
