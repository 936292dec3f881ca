#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eczkp/field_curve.hpp"

namespace eczkp {

// Hash backing the challenge derivation. "sha3-256" is the default; "toy" is
// the harness hash: an XOR fold of the preimage into 32 octets that is
// injective for preimages up to 31 octets, which covers every tiny17 hash
// input and makes exhaustive enumeration of hash-derived values exact.
enum class HashKind { Sha3_256, Toy };

HashKind hash_kind_from_string(std::string_view s);  // "sha3-256" | "toy"
std::string to_string(HashKind kind);

struct Digest {
  std::array<std::uint8_t, 32> octets{};

  friend bool operator==(const Digest& a, const Digest& b) { return a.octets == b.octets; }
  friend bool operator!=(const Digest& a, const Digest& b) { return !(a == b); }
};

struct SessionKey {
  std::array<std::uint8_t, 32> octets{};

  friend bool operator==(const SessionKey& a, const SessionKey& b) {
    return a.octets == b.octets;
  }
  friend bool operator!=(const SessionKey& a, const SessionKey& b) { return !(a == b); }
};

// Raw hash of an arbitrary preimage under the selected hash.
Digest hash_octets(HashKind kind, std::span<const std::uint8_t> preimage);

// Digest of domain_tag || ordered point encodings with length prefixes:
//   u8(tag length) || tag || u16be(point count) || encode_point(each point).
// The prefixes keep the preimage unambiguous across variable-size tags.
// Points must all live on `curve`; the list must be non-empty.
Digest hash_points(const CurveParams& curve, HashKind kind, std::string_view domain_tag,
                   std::span<const CurvePoint> points);

// Big-endian digest value reduced modulo the subgroup order.
Scalar digest_to_scalar(const CurveParams& curve, const Digest& d);

// Session key = hash(u8(8) || "ZKP3-KDF" || challenge digest).
SessionKey derive_session_key(HashKind kind, const Digest& challenge_digest);

std::string hex(std::span<const std::uint8_t> octets);

}  // namespace eczkp
