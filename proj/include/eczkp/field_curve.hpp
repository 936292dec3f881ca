#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "eczkp/bigint.hpp"
#include "eczkp/error.hpp"

namespace eczkp {

// Canonical residue modulo a fixed odd modulus. The modulus travels with the
// value so cross-domain mixes (different curves, or field vs. scalar use)
// fail loudly instead of silently producing garbage.
template <typename Tag>
class Residue {
 public:
  Residue(const UInt& value, const UInt& modulus)
      : value_(UInt::mod(value, modulus)), modulus_(modulus) {
    if (modulus_ < UInt{2}) throw ParameterError("modulus must be >= 2");
  }

  const UInt& value() const { return value_; }
  const UInt& modulus() const { return modulus_; }
  bool is_zero() const { return value_.is_zero(); }

  Residue add(const Residue& other) const {
    check_same(other);
    return raw(UInt::add_mod(value_, other.value_, modulus_), modulus_);
  }
  Residue sub(const Residue& other) const {
    check_same(other);
    return raw(UInt::sub_mod(value_, other.value_, modulus_), modulus_);
  }
  Residue mul(const Residue& other) const {
    check_same(other);
    return raw(UInt::mul_mod(value_, other.value_, modulus_), modulus_);
  }
  Residue neg() const {
    if (value_.is_zero()) return *this;
    return raw(UInt::sub(modulus_, value_), modulus_);
  }
  Residue inv() const { return raw(UInt::inv_mod(value_, modulus_), modulus_); }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.modulus_ == b.modulus_ && a.value_ == b.value_;
  }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  // Trusts value < modulus; used on hot paths after arithmetic that already
  // produced a canonical representative.
  static Residue raw(const UInt& value, const UInt& modulus) {
    Residue r;
    r.value_ = value;
    r.modulus_ = modulus;
    return r;
  }

 private:
  Residue() = default;
  void check_same(const Residue& other) const {
    if (modulus_ != other.modulus_)
      throw ParameterError("modulus mismatch between residues");
  }

  UInt value_;
  UInt modulus_;
};

struct FieldTag {};
struct ScalarTag {};

// Element of F_p for the ambient curve prime p.
using FieldElement = Residue<FieldTag>;
// Exponent reduced modulo the subgroup order m (not modulo p; verification
// algebra only depends on exponents mod m).
using Scalar = Residue<ScalarTag>;

// Affine curve point or the point at infinity (the group identity).
class CurvePoint {
 public:
  static CurvePoint infinity() { return CurvePoint{}; }
  static CurvePoint affine(FieldElement x, FieldElement y) {
    if (x.modulus() != y.modulus())
      throw ParameterError("point coordinates from different fields");
    return CurvePoint(std::move(x), std::move(y));
  }

  bool is_infinity() const { return !coords_.has_value(); }
  const FieldElement& x() const { return coords().first; }
  const FieldElement& y() const { return coords().second; }

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    if (a.is_infinity() || b.is_infinity())
      return a.is_infinity() == b.is_infinity();
    return a.x() == b.x() && a.y() == b.y();
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }

 private:
  CurvePoint() = default;
  CurvePoint(FieldElement x, FieldElement y)
      : coords_(std::in_place, std::move(x), std::move(y)) {}
  const std::pair<FieldElement, FieldElement>& coords() const {
    if (!coords_) throw ParameterError("point at infinity has no coordinates");
    return *coords_;
  }

  std::optional<std::pair<FieldElement, FieldElement>> coords_;
};

// Validated short-Weierstrass curve y^2 = x^3 + A*x + B over F_p with a base
// point of order m. Construction runs the full parameter validation; an
// instance is therefore always internally consistent.
class CurveParams {
 public:
  // Throws NotPrimeError / SingularCurveError / OffCurveGeneratorError /
  // WrongOrderError when the corresponding check fails.
  static CurveParams create(std::string id, const UInt& p, const UInt& coeff_a,
                            const UInt& coeff_b, const UInt& gx, const UInt& gy,
                            const UInt& order);

  const std::string& id() const { return id_; }
  const UInt& p() const { return p_; }
  const FieldElement& coeff_a() const { return coeff_a_; }
  const FieldElement& coeff_b() const { return coeff_b_; }
  const CurvePoint& generator() const { return generator_; }
  const UInt& order() const { return order_; }
  bool order_is_prime() const { return order_is_prime_; }

  FieldElement field(const UInt& v) const { return FieldElement(v, p_); }
  Scalar scalar(const UInt& v) const { return Scalar(v, order_); }
  Scalar scalar(std::uint64_t v) const { return Scalar(UInt{v}, order_); }

  std::size_t coord_octets() const { return coord_octets_; }   // ceil(bits(p)/8)
  std::size_t scalar_octets() const { return scalar_octets_; } // ceil(bits(m)/8)

  friend bool operator==(const CurveParams& a, const CurveParams& b) {
    return a.p_ == b.p_ && a.coeff_a_ == b.coeff_a_ && a.coeff_b_ == b.coeff_b_ &&
           a.generator_ == b.generator_ && a.order_ == b.order_;
  }

 private:
  CurveParams(std::string id, UInt p, FieldElement a, FieldElement b,
              CurvePoint g, UInt order, bool order_is_prime);

  std::string id_;
  UInt p_;
  FieldElement coeff_a_;
  FieldElement coeff_b_;
  CurvePoint generator_;
  UInt order_;
  bool order_is_prime_ = false;
  std::size_t coord_octets_ = 0;
  std::size_t scalar_octets_ = 0;
};

using CurveHandle = std::shared_ptr<const CurveParams>;

// Field operations. Operands must share a modulus (ParameterError otherwise).
FieldElement fe_add(const FieldElement& u, const FieldElement& v);
FieldElement fe_sub(const FieldElement& u, const FieldElement& v);
FieldElement fe_mul(const FieldElement& u, const FieldElement& v);
FieldElement fe_neg(const FieldElement& u);
FieldElement fe_inv(const FieldElement& u);  // DivisionByZeroError for u = 0

// Group law. Points must belong to `curve` (checked against the field prime;
// on-curve membership is established at construction / decode time).
CurvePoint point_add(const CurveParams& curve, const CurvePoint& q1, const CurvePoint& q2);
CurvePoint point_double(const CurveParams& curve, const CurvePoint& q);
CurvePoint point_neg(const CurveParams& curve, const CurvePoint& q);
bool is_on_curve(const CurveParams& curve, const CurvePoint& q);

// Double-and-add over the full bit width of the subgroup order: the loop runs
// a fixed number of iterations regardless of k, but the conditional add still
// leaks the bit pattern through timing. Not hardened; desk-scale tool.
CurvePoint scalar_mul(const CurveParams& curve, const Scalar& k, const CurvePoint& q);

// Exhaustive discrete log, only for curves with order <= 2^20.
// Throws EcdlpThresholdError above the bound, EcdlpNotFoundError if q is not
// a multiple of the generator.
Scalar solve_ecdlp_bruteforce(const CurveParams& curve, const CurvePoint& q);

// Uncompressed point encoding: 0x04 || x || y with fixed-width big-endian
// coordinates of coord_octets() each; infinity is the single octet 0x00.
std::vector<std::uint8_t> encode_point(const CurveParams& curve, const CurvePoint& q);
// Validates range and curve membership; throws decode errors.
CurvePoint decode_point(const CurveParams& curve, std::span<const std::uint8_t> octets);

std::vector<std::uint8_t> encode_scalar(const CurveParams& curve, const Scalar& k);
Scalar decode_scalar(const CurveParams& curve, std::span<const std::uint8_t> octets);

// Named curves: "tiny17" (desk-scale test curve) and "p192".
CurveHandle curve_by_name(std::string_view id);
std::vector<std::string> known_curve_ids();

}  // namespace eczkp
