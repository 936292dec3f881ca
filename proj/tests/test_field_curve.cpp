#include "eczkp/field_curve.hpp"

#include "doctest.h"
#include "eczkp/error.hpp"
#include "t17_oracle.hpp"

using namespace eczkp;

namespace {

CurveHandle t17_curve() { return curve_by_name("tiny17"); }

CurvePoint from_oracle(const CurveParams& c, const t17::Point& q) {
  if (!q) return CurvePoint::infinity();
  return CurvePoint::affine(c.field(UInt{q->first}), c.field(UInt{q->second}));
}

}  // namespace

TEST_CASE("field element arithmetic over F_17") {
  auto c = t17_curve();
  auto fe = [&](std::uint64_t v) { return c->field(UInt{v}); };

  CHECK(fe_add(fe(0), fe(13)) == fe(13));
  CHECK(fe_mul(fe(5), fe(7)) == fe(1));  // 35 mod 17
  CHECK(fe_sub(fe(9), fe(9)).is_zero());
  CHECK(fe_neg(fe(0)).is_zero());
  CHECK(fe_add(fe(9), fe_neg(fe(9))).is_zero());
  for (std::uint64_t v = 1; v < 17; ++v) {
    CHECK(fe_mul(fe(v), fe_inv(fe(v))) == fe(1));
    CHECK(fe_inv(fe_inv(fe(v))) == fe(v));
  }
  CHECK(fe_inv(fe(2)) == fe(9));
  CHECK(fe_inv(fe(1)) == fe(1));
  CHECK_THROWS_AS(fe_inv(fe(0)), DivisionByZeroError);

  auto p192 = curve_by_name("p192");
  CHECK_THROWS_AS(fe_add(fe(1), p192->field(UInt{1})), ParameterError);
}

TEST_CASE("tiny17 group law matches the enumeration oracle exhaustively") {
  auto c = t17_curve();
  const auto& tbl = t17::table();
  REQUIRE(tbl.size() == 19);

  // point_add on all 19x19 subgroup pairs
  for (std::size_t i = 0; i < tbl.size(); ++i) {
    for (std::size_t j = 0; j < tbl.size(); ++j) {
      CurvePoint sum = point_add(*c, from_oracle(*c, tbl[i]), from_oracle(*c, tbl[j]));
      CHECK(sum == from_oracle(*c, tbl[(i + j) % 19]));
      CHECK(is_on_curve(*c, sum));
    }
  }

  // scalar_mul agrees with the repeated-addition oracle for every k
  for (std::uint64_t k = 0; k < 19; ++k) {
    CHECK(scalar_mul(*c, c->scalar(k), c->generator()) ==
          from_oracle(*c, t17::mul(k, t17::Point(t17::kG))));
  }
}

TEST_CASE("tiny17 named values") {
  auto c = t17_curve();
  const CurvePoint g = c->generator();

  CHECK(point_add(*c, g, CurvePoint::infinity()) == g);
  CHECK(point_double(*c, g) ==
        CurvePoint::affine(c->field(UInt{6}), c->field(UInt{3})));
  CHECK(point_add(*c, point_double(*c, g), g) ==
        CurvePoint::affine(c->field(UInt{10}), c->field(UInt{6})));
  CHECK(point_add(*c, g, point_neg(*c, g)) == CurvePoint::infinity());

  CHECK(scalar_mul(*c, c->scalar(1), g) == g);
  CHECK(scalar_mul(*c, c->scalar(UInt{19}), g) == CurvePoint::infinity());
  CHECK(scalar_mul(*c, c->scalar(UInt{20}), g) == g);
  CHECK(scalar_mul(*c, c->scalar(0), g) == CurvePoint::infinity());

  CHECK(is_on_curve(*c, CurvePoint::infinity()));
  CHECK(is_on_curve(*c, g));
  CHECK_FALSE(is_on_curve(*c, CurvePoint::affine(c->field(UInt{5}), c->field(UInt{2}))));
}

TEST_CASE("tiny17 group properties: commutativity, associativity, inverses, distributivity") {
  auto c = t17_curve();
  const auto& tbl = t17::table();
  std::vector<CurvePoint> pts;
  for (const auto& q : tbl) pts.push_back(from_oracle(*c, q));

  for (const auto& a : pts)
    for (const auto& b : pts) CHECK(point_add(*c, a, b) == point_add(*c, b, a));

  for (const auto& a : pts)
    for (const auto& b : pts)
      for (const auto& d : pts)
        CHECK(point_add(*c, point_add(*c, a, b), d) ==
              point_add(*c, a, point_add(*c, b, d)));

  for (const auto& a : pts) {
    CHECK(point_add(*c, a, CurvePoint::infinity()) == a);
    CHECK(point_add(*c, a, point_neg(*c, a)) == CurvePoint::infinity());
  }

  for (std::uint64_t k1 = 0; k1 < 19; ++k1)
    for (std::uint64_t k2 = 0; k2 < 19; ++k2)
      CHECK(scalar_mul(*c, c->scalar((k1 + k2) % 19), c->generator()) ==
            point_add(*c, scalar_mul(*c, c->scalar(k1), c->generator()),
                      scalar_mul(*c, c->scalar(k2), c->generator())));
}

TEST_CASE("doubling a point with y = 0 yields infinity") {
  // y^2 = x^3 + 7x over F_17: (0,0) is on the curve and has order 2.
  // Discriminant 4*7^3 = 1372 = 12 (mod 17), non-singular.
  auto params = CurveParams::create("y0", UInt{17}, UInt{7}, UInt{0}, UInt{0},
                                    UInt{0}, UInt{2});
  CurvePoint g = params.generator();
  CHECK(g.y().is_zero());
  CHECK(point_double(params, g) == CurvePoint::infinity());
}

TEST_CASE("brute-force discrete log on tiny17") {
  auto c = t17_curve();
  CHECK(solve_ecdlp_bruteforce(*c, CurvePoint::infinity()) == c->scalar(0));
  CHECK(solve_ecdlp_bruteforce(
            *c, CurvePoint::affine(c->field(UInt{6}), c->field(UInt{3}))) ==
        c->scalar(2));
  CHECK(solve_ecdlp_bruteforce(
            *c, CurvePoint::affine(c->field(UInt{10}), c->field(UInt{6}))) ==
        c->scalar(3));
  CHECK_THROWS_AS(
      solve_ecdlp_bruteforce(*curve_by_name("p192"), CurvePoint::infinity()),
      EcdlpThresholdError);
  // off-subgroup is impossible on tiny17 (the subgroup is the full group), so
  // exercise not-found with an off-curve point from the same field instead
  CHECK_THROWS_AS(solve_ecdlp_bruteforce(
                      *c, CurvePoint::affine(c->field(UInt{5}), c->field(UInt{2}))),
                  EcdlpNotFoundError);
}

TEST_CASE("parameter validation rejects bad curves") {
  CHECK_THROWS_AS(CurveParams::create("singular", UInt{17}, UInt{0}, UInt{0},
                                      UInt{5}, UInt{1}, UInt{19}),
                  SingularCurveError);
  CHECK_THROWS_AS(CurveParams::create("offgen", UInt{17}, UInt{2}, UInt{2},
                                      UInt{5}, UInt{2}, UInt{19}),
                  OffCurveGeneratorError);
  CHECK_THROWS_AS(CurveParams::create("badorder", UInt{17}, UInt{2}, UInt{2},
                                      UInt{5}, UInt{1}, UInt{23}),
                  WrongOrderError);
  CHECK_THROWS_AS(CurveParams::create("notprime", UInt{15}, UInt{2}, UInt{2},
                                      UInt{5}, UInt{1}, UInt{19}),
                  NotPrimeError);
  CHECK_THROWS_AS(curve_by_name("nope"), ParameterError);
}

TEST_CASE("p192 accepts and reproduces frozen multiplication vectors") {
  auto c = curve_by_name("p192");
  CHECK(c->order_is_prime());
  CHECK(c->coord_octets() == 24);
  CHECK(c->scalar_octets() == 24);

  struct Vec {
    const char* k;
    const char* x;
    const char* y;
  };
  // Oracle: independent Python implementation of the group law.
  const Vec vecs[] = {
      {"2", "dafebf5828783f2ad35534631588a3f629a70fb16982a888",
       "dd6bda0d993da0fa46b27bbc141b868f59331afa5c7e93ab"},
      {"3", "76e32a2557599e6edcd283201fb2b9aadfd0d359cbb263da",
       "782c37e372ba4520aa62e0fed121d49ef3b543660cfd05fd"},
      {"5", "10bb8e9840049b183e078d9c300e1605590118ebdd7ff590",
       "31361008476f917badc9f836e62762be312b72543cceaea1"},
      {"18ebbb95eed0e13", "81e6e0f14c9302c8a8dca8a038b73165e9687d0490cd9f85",
       "f58067119eed8579388c4281dc645a27db7764750e812477"},  // 112233445566778899
      {"ffffffffffffffffffffffff99def836146bc9b1b4d22830",
       "188da80eb03090f67cbf20eb43a18800f4ff0afd82ff1012",
       "f8e6d46a003725879cefee1294db32298c06885ee186b7ee"},  // (m-1)G = -G
      {"deb97b476eec790438587d0b4c53d784858d35d880925334",
       "2fdca4c1c33e4aa0a29941a6ae1827d6c9f631d0f5e83ef2",
       "4abe6439b2362ec212a2c30fbcda72d9a40c4910b3d714c9"},
  };
  for (const Vec& v : vecs) {
    CurvePoint q = scalar_mul(*c, c->scalar(UInt::from_hex(v.k)), c->generator());
    REQUIRE_FALSE(q.is_infinity());
    CHECK(q.x().value().to_hex() == v.x);
    CHECK(q.y().value().to_hex() == v.y);
    CHECK(is_on_curve(*c, q));
  }
}

TEST_CASE("p192 sampled distributivity") {
  auto c = curve_by_name("p192");
  std::uint64_t seed = 11;
  for (int i = 0; i < 25; ++i) {
    UInt k1{seed * 0x9e3779b97f4a7c15ull + i};
    UInt k2{~seed + 0x1234567ull * i};
    Scalar s1 = c->scalar(k1), s2 = c->scalar(k2);
    Scalar sum = c->scalar(UInt::add_mod(k1, k2, c->order()));
    CHECK(scalar_mul(*c, sum, c->generator()) ==
          point_add(*c, scalar_mul(*c, s1, c->generator()),
                    scalar_mul(*c, s2, c->generator())));
  }
}

TEST_CASE("point encoding") {
  auto c = t17_curve();
  CHECK(encode_point(*c, c->generator()) == std::vector<std::uint8_t>{0x04, 0x05, 0x01});
  CHECK(encode_point(*c, CurvePoint::infinity()) == std::vector<std::uint8_t>{0x00});

  for (const auto& q : t17::table()) {
    CurvePoint pt = from_oracle(*c, q);
    CHECK(decode_point(*c, encode_point(*c, pt)) == pt);
  }

  auto p192 = curve_by_name("p192");
  CHECK(encode_point(*p192, p192->generator()).size() == 49);
  CHECK(decode_point(*p192, encode_point(*p192, p192->generator())) == p192->generator());

  CHECK_THROWS_AS(decode_point(*c, std::vector<std::uint8_t>{}), TruncatedMessageError);
  CHECK_THROWS_AS(decode_point(*c, std::vector<std::uint8_t>{0x05, 0x05, 0x01}), BadTagError);
  CHECK_THROWS_AS(decode_point(*c, std::vector<std::uint8_t>{0x04, 0x05}), TruncatedMessageError);
  CHECK_THROWS_AS(decode_point(*c, std::vector<std::uint8_t>{0x00, 0x00}), BadTagError);
  CHECK_THROWS_AS(decode_point(*c, std::vector<std::uint8_t>{0x04, 0x05, 0x02}),
                  OffCurvePointError);
  CHECK_THROWS_AS(decode_point(*c, std::vector<std::uint8_t>{0x04, 0x12, 0x01}),
                  ValueRangeError);
}

TEST_CASE("scalar encoding") {
  auto c = t17_curve();
  CHECK(encode_scalar(*c, c->scalar(18)) == std::vector<std::uint8_t>{0x12});
  CHECK(decode_scalar(*c, std::vector<std::uint8_t>{0x00}) == c->scalar(0));
  CHECK_THROWS_AS(decode_scalar(*c, std::vector<std::uint8_t>{0x13}), ValueRangeError);
  CHECK_THROWS_AS(decode_scalar(*c, std::vector<std::uint8_t>{0x01, 0x00}),
                  TruncatedMessageError);

  auto p192 = curve_by_name("p192");
  Scalar top = p192->scalar(UInt::sub(p192->order(), UInt{1}));
  CHECK(decode_scalar(*p192, encode_scalar(*p192, top)) == top);
}

TEST_CASE("canonical representative invariant") {
  auto c = t17_curve();
  CHECK(c->field(UInt{40}).value() == UInt{6});   // reduced on construction
  CHECK(c->scalar(UInt{40}).value() == UInt{2});  // 40 mod 19
}
