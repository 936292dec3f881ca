#include "eczkp/challenge.hpp"

#include "eczkp/sha3.hpp"

namespace eczkp {

HashKind hash_kind_from_string(std::string_view s) {
  if (s == "sha3-256") return HashKind::Sha3_256;
  if (s == "toy") return HashKind::Toy;
  throw ParameterError("unknown hash kind: " + std::string(s));
}

std::string to_string(HashKind kind) {
  return kind == HashKind::Sha3_256 ? "sha3-256" : "toy";
}

namespace {

Digest toy_hash(std::span<const std::uint8_t> preimage) {
  Digest d;
  for (std::size_t i = 0; i < preimage.size(); ++i) d.octets[i % 31] ^= preimage[i];
  d.octets[31] = static_cast<std::uint8_t>(preimage.size() & 0xff);
  return d;
}

}  // namespace

Digest hash_octets(HashKind kind, std::span<const std::uint8_t> preimage) {
  if (kind == HashKind::Toy) return toy_hash(preimage);
  Digest d;
  d.octets = sha3_256(preimage);
  return d;
}

Digest hash_points(const CurveParams& curve, HashKind kind, std::string_view domain_tag,
                   std::span<const CurvePoint> points) {
  if (points.empty()) throw ParameterError("hash_points: empty point list");
  if (domain_tag.size() > 255) throw ParameterError("hash_points: tag too long");
  std::vector<std::uint8_t> preimage;
  preimage.reserve(3 + domain_tag.size() + points.size() * (1 + 2 * curve.coord_octets()));
  preimage.push_back(static_cast<std::uint8_t>(domain_tag.size()));
  preimage.insert(preimage.end(), domain_tag.begin(), domain_tag.end());
  preimage.push_back(static_cast<std::uint8_t>((points.size() >> 8) & 0xff));
  preimage.push_back(static_cast<std::uint8_t>(points.size() & 0xff));
  for (const CurvePoint& q : points) {
    auto enc = encode_point(curve, q);  // rejects points from another field
    preimage.insert(preimage.end(), enc.begin(), enc.end());
  }
  return hash_octets(kind, preimage);
}

Scalar digest_to_scalar(const CurveParams& curve, const Digest& d) {
  return curve.scalar(UInt::from_bytes_be(d.octets));
}

SessionKey derive_session_key(HashKind kind, const Digest& challenge_digest) {
  static constexpr std::string_view kTag = "ZKP3-KDF";
  std::vector<std::uint8_t> preimage;
  preimage.reserve(1 + kTag.size() + challenge_digest.octets.size());
  preimage.push_back(static_cast<std::uint8_t>(kTag.size()));
  preimage.insert(preimage.end(), kTag.begin(), kTag.end());
  preimage.insert(preimage.end(), challenge_digest.octets.begin(),
                  challenge_digest.octets.end());
  SessionKey key;
  key.octets = hash_octets(kind, preimage).octets;
  return key;
}

std::string hex(std::span<const std::uint8_t> octets) {
  static const char* digits = "0123456789abcdef";
  std::string s;
  s.reserve(octets.size() * 2);
  for (std::uint8_t b : octets) {
    s.push_back(digits[b >> 4]);
    s.push_back(digits[b & 0xf]);
  }
  return s;
}

}  // namespace eczkp
