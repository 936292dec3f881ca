#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace eczkp {

struct DivRem;

// Fixed-capacity unsigned big integer, little-endian 64-bit limbs.
//
// Capacity is 512 bits: wide enough for 256-bit values (hash digests) and for
// the double-width products that appear inside modular multiplication. All
// arithmetic is schoolbook; division is Knuth's Algorithm D. Operations that
// could exceed the capacity throw ParameterError instead of wrapping.
class UInt {
 public:
  static constexpr std::size_t kLimbs = 8;

  constexpr UInt() = default;
  constexpr explicit UInt(std::uint64_t v) { limbs_[0] = v; }

  static UInt from_hex(std::string_view hex);
  // Big-endian octets, any length <= 64.
  static UInt from_bytes_be(std::span<const std::uint8_t> bytes);
  // Little-endian 64-bit limbs, at most kLimbs of them.
  static UInt from_limbs_le(std::span<const std::uint64_t> limbs);

  std::string to_hex() const;  // lowercase, no leading zeros, "0" for zero
  // Big-endian, fixed width; throws if the value does not fit.
  std::vector<std::uint8_t> to_bytes_be(std::size_t width) const;

  bool is_zero() const;
  bool is_even() const { return (limbs_[0] & 1) == 0; }
  bool bit(std::size_t i) const;
  std::size_t bit_length() const;

  std::uint64_t limb(std::size_t i) const { return limbs_[i]; }
  std::uint64_t low_u64() const { return limbs_[0]; }

  // -1 / 0 / +1.
  static int cmp(const UInt& a, const UInt& b);

  friend bool operator==(const UInt& a, const UInt& b) { return cmp(a, b) == 0; }
  friend bool operator!=(const UInt& a, const UInt& b) { return cmp(a, b) != 0; }
  friend bool operator<(const UInt& a, const UInt& b) { return cmp(a, b) < 0; }
  friend bool operator<=(const UInt& a, const UInt& b) { return cmp(a, b) <= 0; }
  friend bool operator>(const UInt& a, const UInt& b) { return cmp(a, b) > 0; }
  friend bool operator>=(const UInt& a, const UInt& b) { return cmp(a, b) >= 0; }

  static UInt add(const UInt& a, const UInt& b);  // throws on capacity overflow
  static UInt sub(const UInt& a, const UInt& b);  // requires a >= b
  static UInt mul(const UInt& a, const UInt& b);  // throws if product > 512 bits
  static DivRem divrem(const UInt& num, const UInt& den);  // den != 0

  static UInt shifted_left(const UInt& a, std::size_t bits);
  static UInt shifted_right(const UInt& a, std::size_t bits);

  // Modular helpers. Moduli must be nonzero; operands need not be reduced.
  static UInt mod(const UInt& a, const UInt& m);
  static UInt add_mod(const UInt& a, const UInt& b, const UInt& m);
  static UInt sub_mod(const UInt& a, const UInt& b, const UInt& m);
  static UInt mul_mod(const UInt& a, const UInt& b, const UInt& m);
  static UInt pow_mod(const UInt& base, const UInt& exp, const UInt& m);
  // Inverse of a modulo an odd m with gcd(a, m) = 1; binary extended gcd.
  // Throws DivisionByZeroError for a == 0 mod m, ParameterError otherwise
  // when no inverse exists.
  static UInt inv_mod(const UInt& a, const UInt& m);

  // Miller-Rabin with deterministically derived bases; error probability
  // <= 4^-rounds for composites.
  static bool probably_prime(const UInt& n, int rounds = 40);

 private:
  std::array<std::uint64_t, kLimbs> limbs_{};
};

struct DivRem {
  UInt quotient;
  UInt remainder;
};

}  // namespace eczkp
