#include "eczkp/challenge.hpp"

#include <map>

#include "doctest.h"
#include "eczkp/rng.hpp"
#include "eczkp/sha3.hpp"

using namespace eczkp;

namespace {

std::vector<std::uint8_t> bytes_of(std::string_view s) {
  return std::vector<std::uint8_t>(s.begin(), s.end());
}

}  // namespace

// FIPS 202 known-answer values (also reproduced by any validated SHA3-256).
TEST_CASE("sha3-256 known answers") {
  CHECK(hex(sha3_256(bytes_of(""))) ==
        "a7ffc6f8bf1ed76651c14756a061d662f580ff4de43b49fa82d80a4b80f8434a");
  CHECK(hex(sha3_256(bytes_of("abc"))) ==
        "3a985da74fe225b2045c172d6bd390bd855f086e3e9d525b46bfe24511431532");
  CHECK(hex(sha3_256(bytes_of("The quick brown fox jumps over the lazy dog"))) ==
        "69070dda01975c8c120c3aada1b282394e7f032fa9cf32f4cb2259a0897dfc04");
  std::vector<std::uint8_t> a3(200, 0xa3);
  CHECK(hex(sha3_256(a3)) ==
        "79f38adec5c20307a98ef76e8324afbfd46cfd81b22e3973c65fa1bd9de31787");
  // spans the one-block boundary (rate = 136)
  std::vector<std::uint8_t> long_msg(135, 0x61);
  auto d135 = sha3_256(long_msg);
  long_msg.push_back(0x61);
  auto d136 = sha3_256(long_msg);
  CHECK(hex(d135) != hex(d136));
}

TEST_CASE("hash_points determinism, order sensitivity, domain separation") {
  auto c = curve_by_name("tiny17");
  CurvePoint g = c->generator();
  CurvePoint g2 = point_double(*c, g);
  std::vector<CurvePoint> fwd{g, g2};
  std::vector<CurvePoint> rev{g2, g};

  for (HashKind kind : {HashKind::Sha3_256, HashKind::Toy}) {
    CAPTURE(to_string(kind));
    CHECK(hash_points(*c, kind, "ZKP1", fwd) == hash_points(*c, kind, "ZKP1", fwd));
    CHECK(hash_points(*c, kind, "ZKP1", fwd) != hash_points(*c, kind, "ZKP1", rev));
    CHECK(hash_points(*c, kind, "ZKP1", fwd) != hash_points(*c, kind, "ZKP3", fwd));
  }

  CHECK_THROWS_AS(hash_points(*c, HashKind::Sha3_256, "ZKP1", std::vector<CurvePoint>{}),
                  ParameterError);
  auto p192 = curve_by_name("p192");
  std::vector<CurvePoint> mixed{g, p192->generator()};
  CHECK_THROWS_AS(hash_points(*c, HashKind::Sha3_256, "ZKP1", mixed), ParameterError);
}

TEST_CASE("toy hash is injective on tiny17 challenge inputs") {
  auto c = curve_by_name("tiny17");
  std::vector<CurvePoint> pts;
  CurvePoint r = CurvePoint::infinity();
  for (int k = 0; k < 19; ++k) {
    pts.push_back(r);
    r = point_add(*c, r, c->generator());
  }
  std::map<std::string, int> seen;
  for (const auto& q : pts) {
    std::vector<CurvePoint> single{q};
    auto d = hash_points(*c, HashKind::Toy, "ZKP2-witness", single);
    seen[hex(d.octets)]++;
  }
  CHECK(seen.size() == 19);
}

TEST_CASE("digest_to_scalar") {
  auto c = curve_by_name("tiny17");
  Digest zero;
  CHECK(digest_to_scalar(*c, zero) == c->scalar(0));

  Digest forty;
  forty.octets[31] = 40;
  CHECK(digest_to_scalar(*c, forty) == c->scalar(2));  // 40 mod 19

  // distribution: random digests land uniformly in [0,19)
  Rng rng(123);
  const int trials = 20000;
  std::array<int, 19> counts{};
  for (int i = 0; i < trials; ++i) {
    Digest d;
    rng.fill(d.octets);
    counts[digest_to_scalar(*c, d).value().low_u64()]++;
  }
  const double p = 1.0 / 19.0;
  const double sigma = std::sqrt(trials * p * (1 - p));
  for (int residue = 0; residue < 19; ++residue) {
    CHECK(std::abs(counts[residue] - trials * p) <= 5 * sigma);
  }
}

TEST_CASE("session key derivation") {
  Digest d1;
  d1.octets[0] = 0xaa;
  Digest d2 = d1;
  d2.octets[16] ^= 0x01;

  for (HashKind kind : {HashKind::Sha3_256, HashKind::Toy}) {
    SessionKey k1 = derive_session_key(kind, d1);
    SessionKey k1_again = derive_session_key(kind, d1);
    SessionKey k2 = derive_session_key(kind, d2);
    CHECK(k1 == k1_again);
    CHECK(k1 != k2);
    CHECK(k1.octets.size() == 32);
  }
}

TEST_CASE("hash kind parsing") {
  CHECK(hash_kind_from_string("sha3-256") == HashKind::Sha3_256);
  CHECK(hash_kind_from_string("toy") == HashKind::Toy);
  CHECK_THROWS_AS(hash_kind_from_string("md5"), ParameterError);
}

TEST_CASE("seeded rng reproducibility and scalar ranges") {
  auto c = curve_by_name("tiny17");
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) {
    Scalar sa = a.uniform_scalar(*c);
    CHECK(sa == b.uniform_scalar(*c));
    CHECK(sa.value() < c->order());
  }
  Rng nz(7);
  for (int i = 0; i < 100; ++i) {
    CHECK_FALSE(nz.uniform_nonzero_scalar(*c).is_zero());
  }
  // all 19 residues occur over many draws
  Rng cover(9);
  std::array<bool, 19> hit{};
  for (int i = 0; i < 2000; ++i) hit[cover.uniform_scalar(*c).value().low_u64()] = true;
  for (bool h : hit) CHECK(h);
}
