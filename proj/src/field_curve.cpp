#include "eczkp/field_curve.hpp"

#include <mutex>
#include <unordered_map>

namespace eczkp {

namespace {

void check_point_field(const CurveParams& curve, const CurvePoint& q) {
  if (q.is_infinity()) return;
  if (q.x().modulus() != curve.p())
    throw ParameterError("point does not belong to this curve's field");
}

// Multiplication by an unreduced integer; validation needs the literal m, not
// m mod m.
CurvePoint mul_unreduced(const CurveParams& curve, const UInt& k, const CurvePoint& q) {
  CurvePoint acc = CurvePoint::infinity();
  for (std::size_t i = k.bit_length(); i-- > 0;) {
    acc = point_add(curve, acc, acc);
    if (k.bit(i)) acc = point_add(curve, acc, q);
  }
  return acc;
}

}  // namespace

CurveParams::CurveParams(std::string id, UInt p, FieldElement a, FieldElement b,
                         CurvePoint g, UInt order, bool order_is_prime)
    : id_(std::move(id)),
      p_(std::move(p)),
      coeff_a_(std::move(a)),
      coeff_b_(std::move(b)),
      generator_(std::move(g)),
      order_(std::move(order)),
      order_is_prime_(order_is_prime) {
  coord_octets_ = (p_.bit_length() + 7) / 8;
  scalar_octets_ = (order_.bit_length() + 7) / 8;
}

CurveParams CurveParams::create(std::string id, const UInt& p, const UInt& coeff_a,
                                const UInt& coeff_b, const UInt& gx, const UInt& gy,
                                const UInt& order) {
  if (!UInt::probably_prime(p)) throw NotPrimeError("field modulus is not prime");
  FieldElement a(coeff_a, p);
  FieldElement b(coeff_b, p);

  // 4*A^3 + 27*B^2 != 0 (mod p)
  FieldElement four(UInt{4}, p);
  FieldElement twenty_seven(UInt{27}, p);
  FieldElement disc = fe_add(fe_mul(four, fe_mul(a, fe_mul(a, a))),
                             fe_mul(twenty_seven, fe_mul(b, b)));
  if (disc.is_zero()) throw SingularCurveError("4*A^3 + 27*B^2 = 0 (mod p)");

  if (order < UInt{2}) throw WrongOrderError("subgroup order must be >= 2");
  bool order_is_prime = UInt::probably_prime(order);

  CurvePoint g = CurvePoint::affine(FieldElement(gx, p), FieldElement(gy, p));
  CurveParams params(std::move(id), p, a, b, g, order, order_is_prime);
  if (!is_on_curve(params, g))
    throw OffCurveGeneratorError("generator does not satisfy the curve equation");

  if (mul_unreduced(params, order, g) != CurvePoint::infinity())
    throw WrongOrderError("order * G != infinity");
  if (order_is_prime) {
    // G != infinity and prime m with m*G = infinity pins ord(G) = m exactly.
  } else if (order.bit_length() <= 20) {
    CurvePoint r = g;
    UInt k{1};
    while (k < order) {
      if (r == CurvePoint::infinity())
        throw WrongOrderError("generator has smaller order than declared");
      r = point_add(params, r, g);
      k = UInt::add(k, UInt{1});
    }
  } else {
    throw WrongOrderError(
        "composite subgroup order too large to verify exactly");
  }
  return params;
}

FieldElement fe_add(const FieldElement& u, const FieldElement& v) { return u.add(v); }
FieldElement fe_sub(const FieldElement& u, const FieldElement& v) { return u.sub(v); }
FieldElement fe_mul(const FieldElement& u, const FieldElement& v) { return u.mul(v); }
FieldElement fe_neg(const FieldElement& u) { return u.neg(); }
FieldElement fe_inv(const FieldElement& u) { return u.inv(); }

bool is_on_curve(const CurveParams& curve, const CurvePoint& q) {
  if (q.is_infinity()) return true;
  check_point_field(curve, q);
  FieldElement lhs = fe_mul(q.y(), q.y());
  FieldElement rhs = fe_add(fe_mul(q.x(), fe_mul(q.x(), q.x())),
                            fe_add(fe_mul(curve.coeff_a(), q.x()), curve.coeff_b()));
  return lhs == rhs;
}

CurvePoint point_neg(const CurveParams& curve, const CurvePoint& q) {
  if (q.is_infinity()) return q;
  check_point_field(curve, q);
  return CurvePoint::affine(q.x(), fe_neg(q.y()));
}

CurvePoint point_add(const CurveParams& curve, const CurvePoint& q1, const CurvePoint& q2) {
  check_point_field(curve, q1);
  check_point_field(curve, q2);
  if (q1.is_infinity()) return q2;
  if (q2.is_infinity()) return q1;

  if (q1.x() == q2.x()) {
    if (q1.y() == fe_neg(q2.y())) return CurvePoint::infinity();  // includes y = 0 doubling
    // Same x, same y: tangent slope. (Distinct y with same x is impossible on
    // the curve except as negatives, handled above.)
    FieldElement three(UInt{3}, curve.p());
    FieldElement two(UInt{2}, curve.p());
    FieldElement num = fe_add(fe_mul(three, fe_mul(q1.x(), q1.x())), curve.coeff_a());
    FieldElement lambda = fe_mul(num, fe_inv(fe_mul(two, q1.y())));
    FieldElement x3 = fe_sub(fe_mul(lambda, lambda), fe_add(q1.x(), q2.x()));
    FieldElement y3 = fe_sub(fe_mul(lambda, fe_sub(q1.x(), x3)), q1.y());
    return CurvePoint::affine(x3, y3);
  }

  FieldElement lambda = fe_mul(fe_sub(q2.y(), q1.y()), fe_inv(fe_sub(q2.x(), q1.x())));
  FieldElement x3 = fe_sub(fe_mul(lambda, lambda), fe_add(q1.x(), q2.x()));
  FieldElement y3 = fe_sub(fe_mul(lambda, fe_sub(q1.x(), x3)), q1.y());
  return CurvePoint::affine(x3, y3);
}

CurvePoint point_double(const CurveParams& curve, const CurvePoint& q) {
  return point_add(curve, q, q);
}

CurvePoint scalar_mul(const CurveParams& curve, const Scalar& k, const CurvePoint& q) {
  check_point_field(curve, q);
  if (k.modulus() != curve.order())
    throw ParameterError("scalar does not belong to this curve's order");
  CurvePoint acc = CurvePoint::infinity();
  // Fixed iteration count: the bit width of the subgroup order, independent of k.
  for (std::size_t i = curve.order().bit_length(); i-- > 0;) {
    acc = point_add(curve, acc, acc);
    if (k.value().bit(i)) acc = point_add(curve, acc, q);
  }
  return acc;
}

Scalar solve_ecdlp_bruteforce(const CurveParams& curve, const CurvePoint& q) {
  if (curve.order().bit_length() > 20)
    throw EcdlpThresholdError("subgroup order above the 2^20 brute-force bound");
  check_point_field(curve, q);
  CurvePoint r = CurvePoint::infinity();
  UInt k{0};
  while (k < curve.order()) {
    if (r == q) return curve.scalar(k);
    r = point_add(curve, r, curve.generator());
    k = UInt::add(k, UInt{1});
  }
  throw EcdlpNotFoundError("point is not a multiple of the generator");
}

std::vector<std::uint8_t> encode_point(const CurveParams& curve, const CurvePoint& q) {
  check_point_field(curve, q);
  if (q.is_infinity()) return {0x00};
  std::vector<std::uint8_t> out;
  out.reserve(1 + 2 * curve.coord_octets());
  out.push_back(0x04);
  auto xb = q.x().value().to_bytes_be(curve.coord_octets());
  auto yb = q.y().value().to_bytes_be(curve.coord_octets());
  out.insert(out.end(), xb.begin(), xb.end());
  out.insert(out.end(), yb.begin(), yb.end());
  return out;
}

CurvePoint decode_point(const CurveParams& curve, std::span<const std::uint8_t> octets) {
  if (octets.empty()) throw TruncatedMessageError("empty point encoding");
  if (octets[0] == 0x00) {
    if (octets.size() != 1) throw BadTagError("trailing octets after infinity tag");
    return CurvePoint::infinity();
  }
  if (octets[0] != 0x04) throw BadTagError("unknown point tag octet");
  const std::size_t w = curve.coord_octets();
  if (octets.size() != 1 + 2 * w)
    throw TruncatedMessageError("point encoding has wrong length");
  UInt x = UInt::from_bytes_be(octets.subspan(1, w));
  UInt y = UInt::from_bytes_be(octets.subspan(1 + w, w));
  if (x >= curve.p() || y >= curve.p())
    throw ValueRangeError("point coordinate not reduced mod p");
  CurvePoint q = CurvePoint::affine(curve.field(x), curve.field(y));
  if (!is_on_curve(curve, q)) throw OffCurvePointError("decoded point is off the curve");
  return q;
}

std::vector<std::uint8_t> encode_scalar(const CurveParams& curve, const Scalar& k) {
  if (k.modulus() != curve.order())
    throw ParameterError("scalar does not belong to this curve's order");
  return k.value().to_bytes_be(curve.scalar_octets());
}

Scalar decode_scalar(const CurveParams& curve, std::span<const std::uint8_t> octets) {
  if (octets.size() != curve.scalar_octets())
    throw TruncatedMessageError("scalar encoding has wrong length");
  UInt v = UInt::from_bytes_be(octets);
  if (v >= curve.order()) throw ValueRangeError("scalar not reduced mod subgroup order");
  return curve.scalar(v);
}

namespace {

CurveHandle make_tiny17() {
  // y^2 = x^3 + 2x + 2 over F_17, G = (5,1), |<G>| = 19 (prime, whole group).
  return std::make_shared<const CurveParams>(CurveParams::create(
      "tiny17", UInt{17}, UInt{2}, UInt{2}, UInt{5}, UInt{1}, UInt{19}));
}

CurveHandle make_p192() {
  // NIST P-192 / secp192r1, cofactor 1.
  return std::make_shared<const CurveParams>(CurveParams::create(
      "p192",
      UInt::from_hex("fffffffffffffffffffffffffffffffeffffffffffffffff"),
      UInt::from_hex("fffffffffffffffffffffffffffffffefffffffffffffffc"),
      UInt::from_hex("64210519e59c80e70fa7e9ab72243049feb8deecc146b9b1"),
      UInt::from_hex("188da80eb03090f67cbf20eb43a18800f4ff0afd82ff1012"),
      UInt::from_hex("07192b95ffc8da78631011ed6b24cdd573f977a11e794811"),
      UInt::from_hex("ffffffffffffffffffffffff99def836146bc9b1b4d22831")));
}

}  // namespace

CurveHandle curve_by_name(std::string_view id) {
  static std::mutex mu;
  static std::unordered_map<std::string, CurveHandle> registry;
  std::scoped_lock lock(mu);
  auto it = registry.find(std::string(id));
  if (it != registry.end()) return it->second;
  CurveHandle h;
  if (id == "tiny17")
    h = make_tiny17();
  else if (id == "p192")
    h = make_p192();
  else
    throw ParameterError("unknown curve id: " + std::string(id));
  registry.emplace(std::string(id), h);
  return h;
}

std::vector<std::string> known_curve_ids() { return {"tiny17", "p192"}; }

}  // namespace eczkp
