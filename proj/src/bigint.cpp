#include "eczkp/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstring>

#include "eczkp/error.hpp"

namespace eczkp {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::size_t kLimbs = UInt::kLimbs;

std::size_t significant_limbs(const std::array<u64, kLimbs>& w) {
  std::size_t n = kLimbs;
  while (n > 0 && w[n - 1] == 0) --n;
  return n;
}

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

// ---- fixed 4-limb fast path -------------------------------------------------
// Curve moduli are at most 256 bits, so the group-law hot loop runs on raw
// 4-limb arrays; the generic UInt routines remain the fallback for wide
// values (divrem of 512-bit dividends, hex parsing, ...).

using Limbs4 = std::array<u64, 4>;

inline int cmp4(const Limbs4& a, const Limbs4& b) {
  for (int i = 3; i >= 0; --i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

inline bool is_zero4(const Limbs4& a) { return (a[0] | a[1] | a[2] | a[3]) == 0; }

inline int sig4(const Limbs4& v) {
  int n = 4;
  while (n > 0 && v[n - 1] == 0) --n;
  return n;
}

inline u64 add4(Limbs4& out, const Limbs4& a, const Limbs4& b) {
  u64 carry = 0;
  for (int i = 0; i < 4; ++i) {
    u128 s = static_cast<u128>(a[i]) + b[i] + carry;
    out[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  return carry;
}

inline u64 sub4(Limbs4& out, const Limbs4& a, const Limbs4& b) {
  u64 borrow = 0;
  for (int i = 0; i < 4; ++i) {
    u128 d = static_cast<u128>(a[i]) - b[i] - borrow;
    out[i] = static_cast<u64>(d);
    borrow = (d >> 64) ? 1 : 0;
  }
  return borrow;
}

inline void shr1_4(Limbs4& a, u64 carry_in) {
  a[0] = (a[0] >> 1) | (a[1] << 63);
  a[1] = (a[1] >> 1) | (a[2] << 63);
  a[2] = (a[2] >> 1) | (a[3] << 63);
  a[3] = (a[3] >> 1) | (carry_in << 63);
}

// (a + b) mod m for reduced operands.
inline void addmod4(Limbs4& out, const Limbs4& a, const Limbs4& b, const Limbs4& m) {
  u64 carry = add4(out, a, b);
  if (carry || cmp4(out, m) >= 0) sub4(out, out, m);
}

inline void submod4(Limbs4& out, const Limbs4& a, const Limbs4& b, const Limbs4& m) {
  if (sub4(out, a, b)) add4(out, out, m);
}

// Schoolbook 4x4 -> 8 limb product.
inline void mul4(u64 out[8], const Limbs4& a, const Limbs4& b) {
  std::memset(out, 0, 8 * sizeof(u64));
  for (int i = 0; i < 4; ++i) {
    u64 carry = 0;
    for (int j = 0; j < 4; ++j) {
      u128 t = static_cast<u128>(a[i]) * b[j] + out[i + j] + carry;
      out[i + j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    out[i + 4] = carry;
  }
}

// Remainder of an 8-limb value modulo a 4-limb modulus (Knuth D, remainder
// only). `mn` = significant limbs of m, precomputed by the caller.
inline void mod8by4(Limbs4& out, const u64 prod[8], const Limbs4& m, int mn) {
  if (mn == 1) {
    const u64 d = m[0];
    u64 rem = 0;
    for (int i = 7; i >= 0; --i) {
      u128 cur = (static_cast<u128>(rem) << 64) | prod[i];
      rem = static_cast<u64>(cur % d);
    }
    out = {rem, 0, 0, 0};
    return;
  }
  int pn = 8;
  while (pn > 0 && prod[pn - 1] == 0) --pn;
  if (pn < mn) {
    for (int i = 0; i < 4; ++i) out[i] = i < pn ? prod[i] : 0;
    return;
  }

  const unsigned s = static_cast<unsigned>(std::countl_zero(m[mn - 1]));
  u64 un[9] = {};
  u64 vn[4] = {};
  for (int i = mn - 1; i >= 0; --i) {
    vn[i] = m[i] << s;
    if (s && i > 0) vn[i] |= m[i - 1] >> (64 - s);
  }
  un[pn] = s ? (prod[pn - 1] >> (64 - s)) : 0;
  for (int i = pn - 1; i >= 0; --i) {
    un[i] = prod[i] << s;
    if (s && i > 0) un[i] |= prod[i - 1] >> (64 - s);
  }

  for (int j = pn - mn; j >= 0; --j) {
    u128 top = (static_cast<u128>(un[j + mn]) << 64) | un[j + mn - 1];
    u128 qhat = top / vn[mn - 1];
    u128 rhat = top % vn[mn - 1];
    while (qhat >= (static_cast<u128>(1) << 64) ||
           qhat * vn[mn - 2] > ((rhat << 64) | un[j + mn - 2])) {
      --qhat;
      rhat += vn[mn - 1];
      if (rhat >= (static_cast<u128>(1) << 64)) break;
    }
    u64 borrow = 0, carry = 0;
    for (int i = 0; i < mn; ++i) {
      u128 p = qhat * vn[i] + carry;
      carry = static_cast<u64>(p >> 64);
      u128 d = static_cast<u128>(un[i + j]) - static_cast<u64>(p) - borrow;
      un[i + j] = static_cast<u64>(d);
      borrow = (d >> 64) ? 1 : 0;
    }
    u128 d = static_cast<u128>(un[j + mn]) - carry - borrow;
    un[j + mn] = static_cast<u64>(d);
    if (d >> 64) {
      u64 c = 0;
      for (int i = 0; i < mn; ++i) {
        u128 sum = static_cast<u128>(un[i + j]) + vn[i] + c;
        un[i + j] = static_cast<u64>(sum);
        c = static_cast<u64>(sum >> 64);
      }
      un[j + mn] += c;
    }
  }

  out = {0, 0, 0, 0};
  for (int i = 0; i < mn; ++i) {
    out[i] = un[i] >> s;
    if (s) out[i] |= un[i + 1] << (64 - s);
  }
}

// Binary extended gcd inverse on 4-limb values, odd modulus.
// Returns false when gcd(a, m) != 1. u and v shrink as the algorithm runs,
// so their active limb counts are tracked to keep the inner loop short.
inline bool invmod4(Limbs4& out, const Limbs4& a, const Limbs4& m) {
  if (is_zero4(a)) return false;
  u64 u[4] = {a[0], a[1], a[2], a[3]};
  u64 v[4] = {m[0], m[1], m[2], m[3]};
  Limbs4 x1 = {1, 0, 0, 0}, x2 = {0, 0, 0, 0};
  int nu = sig4(a), nv = sig4(m);

  auto shr1 = [](u64* w, int n) {
    for (int i = 0; i < n - 1; ++i) w[i] = (w[i] >> 1) | (w[i + 1] << 63);
    w[n - 1] >>= 1;
  };
  auto halve_acc = [&m](Limbs4& x) {
    // branchless: add m only when x is odd (mask), then halve
    const u64 mask = 0 - (x[0] & 1);
    const Limbs4 addend = {m[0] & mask, m[1] & mask, m[2] & mask, m[3] & mask};
    u64 c = add4(x, x, addend);
    shr1_4(x, c);
  };
  auto trim = [](const u64* w, int n) {
    while (n > 0 && w[n - 1] == 0) --n;
    return n;
  };
  auto cmp_n = [](const u64* x, int nx, const u64* y, int ny) {
    if (nx != ny) return nx < ny ? -1 : 1;
    for (int i = nx - 1; i >= 0; --i)
      if (x[i] != y[i]) return x[i] < y[i] ? -1 : 1;
    return 0;
  };

  if (nu == 1 && u[0] == 1) {
    out = x1;
    return true;
  }
  for (;;) {
    while ((u[0] & 1) == 0) {
      shr1(u, nu);
      halve_acc(x1);
      if (u[nu - 1] == 0 && nu > 1) --nu;
    }
    while ((v[0] & 1) == 0) {
      shr1(v, nv);
      halve_acc(x2);
      if (v[nv - 1] == 0 && nv > 1) --nv;
    }
    const int c = cmp_n(u, nu, v, nv);
    if (c == 0) {
      // gcd reached; invertible only if it is 1
      if (nu == 1 && u[0] == 1) {
        out = x1;
        return true;
      }
      return false;
    }
    if (c > 0) {
      u64 borrow = 0;
      for (int i = 0; i < nu; ++i) {
        u64 vi = i < nv ? v[i] : 0;
        u128 d = static_cast<u128>(u[i]) - vi - borrow;
        u[i] = static_cast<u64>(d);
        borrow = (d >> 64) ? 1 : 0;
      }
      nu = trim(u, nu);
      submod4(x1, x1, x2, m);
      if (nu == 1 && u[0] == 1) {
        out = x1;
        return true;
      }
    } else {
      u64 borrow = 0;
      for (int i = 0; i < nv; ++i) {
        u64 ui = i < nu ? u[i] : 0;
        u128 d = static_cast<u128>(v[i]) - ui - borrow;
        v[i] = static_cast<u64>(d);
        borrow = (d >> 64) ? 1 : 0;
      }
      nv = trim(v, nv);
      submod4(x2, x2, x1, m);
      if (nv == 1 && v[0] == 1) {
        out = x2;
        return true;
      }
    }
  }
}

}  // namespace

UInt UInt::from_hex(std::string_view hex) {
  if (hex.substr(0, 2) == "0x" || hex.substr(0, 2) == "0X") hex.remove_prefix(2);
  if (hex.empty()) throw ParameterError("empty hex string");
  if (hex.size() > kLimbs * 16) throw ParameterError("hex literal exceeds 512 bits");
  UInt out;
  std::size_t bit = 0;
  for (std::size_t i = hex.size(); i-- > 0;) {
    int d = hex_digit(hex[i]);
    if (d < 0) throw ParameterError("invalid hex digit");
    out.limbs_[bit / 64] |= static_cast<u64>(d) << (bit % 64);
    bit += 4;
  }
  return out;
}

UInt UInt::from_bytes_be(std::span<const std::uint8_t> bytes) {
  if (bytes.size() > kLimbs * 8) throw ParameterError("byte string exceeds 512 bits");
  UInt out;
  std::size_t shift = 0;
  for (std::size_t i = bytes.size(); i-- > 0;) {
    out.limbs_[shift / 64] |= static_cast<u64>(bytes[i]) << (shift % 64);
    shift += 8;
  }
  return out;
}

UInt UInt::from_limbs_le(std::span<const std::uint64_t> limbs) {
  if (limbs.size() > kLimbs) throw ParameterError("too many limbs");
  UInt out;
  std::copy(limbs.begin(), limbs.end(), out.limbs_.begin());
  return out;
}

std::string UInt::to_hex() const {
  static const char* digits = "0123456789abcdef";
  const std::size_t bits = bit_length();
  if (bits == 0) return "0";
  const std::size_t nibbles = (bits + 3) / 4;
  std::string s;
  s.reserve(nibbles);
  for (std::size_t i = nibbles; i-- > 0;) {
    int v = static_cast<int>((limbs_[(4 * i) / 64] >> ((4 * i) % 64)) & 0xf);
    s.push_back(digits[v]);
  }
  return s;
}

std::vector<std::uint8_t> UInt::to_bytes_be(std::size_t width) const {
  if (bit_length() > width * 8) throw ParameterError("value does not fit requested width");
  std::vector<std::uint8_t> out(width, 0);
  for (std::size_t i = 0; i < width; ++i) {
    std::size_t shift = 8 * i;
    if (shift / 64 < kLimbs)
      out[width - 1 - i] = static_cast<std::uint8_t>(limbs_[shift / 64] >> (shift % 64));
  }
  return out;
}

bool UInt::is_zero() const {
  for (u64 w : limbs_)
    if (w != 0) return false;
  return true;
}

bool UInt::bit(std::size_t i) const {
  if (i >= kLimbs * 64) return false;
  return (limbs_[i / 64] >> (i % 64)) & 1;
}

std::size_t UInt::bit_length() const {
  std::size_t n = significant_limbs(limbs_);
  if (n == 0) return 0;
  return 64 * (n - 1) + (64 - static_cast<std::size_t>(std::countl_zero(limbs_[n - 1])));
}

int UInt::cmp(const UInt& a, const UInt& b) {
  for (std::size_t i = kLimbs; i-- > 0;) {
    if (a.limbs_[i] != b.limbs_[i]) return a.limbs_[i] < b.limbs_[i] ? -1 : 1;
  }
  return 0;
}

UInt UInt::add(const UInt& a, const UInt& b) {
  UInt out;
  u64 carry = 0;
  for (std::size_t i = 0; i < kLimbs; ++i) {
    u128 s = static_cast<u128>(a.limbs_[i]) + b.limbs_[i] + carry;
    out.limbs_[i] = static_cast<u64>(s);
    carry = static_cast<u64>(s >> 64);
  }
  if (carry) throw ParameterError("UInt::add overflow beyond 512 bits");
  return out;
}

UInt UInt::sub(const UInt& a, const UInt& b) {
  if (cmp(a, b) < 0) throw ParameterError("UInt::sub would underflow");
  UInt out;
  u64 borrow = 0;
  for (std::size_t i = 0; i < kLimbs; ++i) {
    u128 d = static_cast<u128>(a.limbs_[i]) - b.limbs_[i] - borrow;
    out.limbs_[i] = static_cast<u64>(d);
    borrow = (d >> 64) ? 1 : 0;
  }
  return out;
}

UInt UInt::mul(const UInt& a, const UInt& b) {
  const std::size_t an = significant_limbs(a.limbs_);
  const std::size_t bn = significant_limbs(b.limbs_);
  if (an + bn > kLimbs + 1) throw ParameterError("UInt::mul product exceeds 512 bits");
  std::array<u64, kLimbs + 2> acc{};
  for (std::size_t i = 0; i < an; ++i) {
    u64 carry = 0;
    for (std::size_t j = 0; j < bn; ++j) {
      u128 t = static_cast<u128>(a.limbs_[i]) * b.limbs_[j] + acc[i + j] + carry;
      acc[i + j] = static_cast<u64>(t);
      carry = static_cast<u64>(t >> 64);
    }
    acc[i + bn] += carry;
  }
  for (std::size_t i = kLimbs; i < acc.size(); ++i)
    if (acc[i] != 0) throw ParameterError("UInt::mul product exceeds 512 bits");
  UInt out;
  std::copy_n(acc.begin(), kLimbs, out.limbs_.begin());
  return out;
}

UInt UInt::shifted_left(const UInt& a, std::size_t bits) {
  if (bits >= kLimbs * 64) throw ParameterError("shift amount too large");
  if (a.bit_length() + bits > kLimbs * 64)
    throw ParameterError("UInt::shifted_left overflow beyond 512 bits");
  UInt out;
  const std::size_t limb_shift = bits / 64;
  const std::size_t bit_shift = bits % 64;
  for (std::size_t i = kLimbs; i-- > limb_shift;) {
    u64 hi = a.limbs_[i - limb_shift] << bit_shift;
    u64 lo = (bit_shift && i > limb_shift)
                 ? a.limbs_[i - limb_shift - 1] >> (64 - bit_shift)
                 : 0;
    out.limbs_[i] = hi | lo;
  }
  return out;
}

UInt UInt::shifted_right(const UInt& a, std::size_t bits) {
  if (bits >= kLimbs * 64) return UInt{};
  UInt out;
  const std::size_t limb_shift = bits / 64;
  const std::size_t bit_shift = bits % 64;
  for (std::size_t i = 0; i + limb_shift < kLimbs; ++i) {
    u64 lo = a.limbs_[i + limb_shift] >> bit_shift;
    u64 hi = (bit_shift && i + limb_shift + 1 < kLimbs)
                 ? a.limbs_[i + limb_shift + 1] << (64 - bit_shift)
                 : 0;
    out.limbs_[i] = lo | hi;
  }
  return out;
}

// Knuth TAOCP vol. 2, Algorithm D, on 64-bit digits.
DivRem UInt::divrem(const UInt& num, const UInt& den) {
  if (den.is_zero()) throw DivisionByZeroError("division by zero");
  if (cmp(num, den) < 0) return {UInt{}, num};

  const std::size_t n = significant_limbs(den.limbs_);
  if (n == 1) {
    const u64 d = den.limbs_[0];
    UInt q;
    u64 rem = 0;
    for (std::size_t i = kLimbs; i-- > 0;) {
      u128 cur = (static_cast<u128>(rem) << 64) | num.limbs_[i];
      q.limbs_[i] = static_cast<u64>(cur / d);
      rem = static_cast<u64>(cur % d);
    }
    return {q, UInt{rem}};
  }

  const std::size_t m = significant_limbs(num.limbs_);
  const unsigned s = static_cast<unsigned>(std::countl_zero(den.limbs_[n - 1]));

  // Normalized copies; un gets one extra high digit.
  std::array<u64, kLimbs + 1> un{};
  std::array<u64, kLimbs> vn{};
  for (std::size_t i = n; i-- > 0;) {
    vn[i] = den.limbs_[i] << s;
    if (s && i > 0) vn[i] |= den.limbs_[i - 1] >> (64 - s);
  }
  un[m] = s ? (num.limbs_[m - 1] >> (64 - s)) : 0;
  for (std::size_t i = m; i-- > 0;) {
    un[i] = num.limbs_[i] << s;
    if (s && i > 0) un[i] |= num.limbs_[i - 1] >> (64 - s);
  }

  UInt q;
  for (std::size_t j = m - n + 1; j-- > 0;) {
    u128 top = (static_cast<u128>(un[j + n]) << 64) | un[j + n - 1];
    u128 qhat = top / vn[n - 1];
    u128 rhat = top % vn[n - 1];
    while (qhat >= (static_cast<u128>(1) << 64) ||
           qhat * vn[n - 2] > ((rhat << 64) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= (static_cast<u128>(1) << 64)) break;
    }

    // Multiply-subtract qhat * vn from un[j .. j+n].
    u64 borrow = 0;
    u64 carry = 0;
    for (std::size_t i = 0; i < n; ++i) {
      u128 p = qhat * vn[i] + carry;
      carry = static_cast<u64>(p >> 64);
      u128 d = static_cast<u128>(un[i + j]) - static_cast<u64>(p) - borrow;
      un[i + j] = static_cast<u64>(d);
      borrow = (d >> 64) ? 1 : 0;
    }
    u128 d = static_cast<u128>(un[j + n]) - carry - borrow;
    un[j + n] = static_cast<u64>(d);

    if (d >> 64) {  // qhat was one too large; add back
      --qhat;
      u64 c = 0;
      for (std::size_t i = 0; i < n; ++i) {
        u128 sum = static_cast<u128>(un[i + j]) + vn[i] + c;
        un[i + j] = static_cast<u64>(sum);
        c = static_cast<u64>(sum >> 64);
      }
      un[j + n] += c;
    }
    q.limbs_[j] = static_cast<u64>(qhat);
  }

  UInt r;
  for (std::size_t i = 0; i < n; ++i) {
    r.limbs_[i] = un[i] >> s;
    if (s && i + 1 <= n) r.limbs_[i] |= un[i + 1] << (64 - s);
  }
  return {q, r};
}

UInt UInt::mod(const UInt& a, const UInt& m) { return divrem(a, m).remainder; }

namespace {

inline bool fits4(const UInt& v) {
  return (v.limb(4) | v.limb(5) | v.limb(6) | v.limb(7)) == 0;
}

inline Limbs4 low4(const UInt& v) { return {v.limb(0), v.limb(1), v.limb(2), v.limb(3)}; }

inline UInt from4(const Limbs4& v) { return UInt::from_limbs_le(v); }

}  // namespace

UInt UInt::add_mod(const UInt& a, const UInt& b, const UInt& m) {
  UInt ar = cmp(a, m) < 0 ? a : mod(a, m);
  UInt br = cmp(b, m) < 0 ? b : mod(b, m);
  if (fits4(m)) {
    Limbs4 out;
    addmod4(out, low4(ar), low4(br), low4(m));
    return from4(out);
  }
  UInt s = add(ar, br);
  if (cmp(s, m) >= 0) s = sub(s, m);
  return s;
}

UInt UInt::sub_mod(const UInt& a, const UInt& b, const UInt& m) {
  UInt ar = cmp(a, m) < 0 ? a : mod(a, m);
  UInt br = cmp(b, m) < 0 ? b : mod(b, m);
  if (fits4(m)) {
    Limbs4 out;
    submod4(out, low4(ar), low4(br), low4(m));
    return from4(out);
  }
  if (cmp(ar, br) >= 0) return sub(ar, br);
  return sub(add(ar, m), br);
}

UInt UInt::mul_mod(const UInt& a, const UInt& b, const UInt& m) {
  UInt ar = cmp(a, m) < 0 ? a : mod(a, m);
  UInt br = cmp(b, m) < 0 ? b : mod(b, m);
  if (fits4(m)) {
    u64 prod[8];
    Limbs4 mv = low4(m);
    mul4(prod, low4(ar), low4(br));
    Limbs4 out;
    mod8by4(out, prod, mv, sig4(mv));
    return from4(out);
  }
  return mod(mul(ar, br), m);
}

UInt UInt::pow_mod(const UInt& base, const UInt& exp, const UInt& m) {
  if (m.is_zero()) throw DivisionByZeroError("pow_mod modulus is zero");
  UInt result{1};
  result = mod(result, m);
  UInt b = mod(base, m);
  for (std::size_t i = exp.bit_length(); i-- > 0;) {
    result = mul_mod(result, result, m);
    if (exp.bit(i)) result = mul_mod(result, b, m);
  }
  return result;
}

// HAC Algorithm 14.61 specialized to odd moduli.
UInt UInt::inv_mod(const UInt& a, const UInt& m) {
  if (m.is_zero() || m.is_even())
    throw ParameterError("inv_mod requires an odd modulus");
  UInt ar = mod(a, m);
  if (ar.is_zero()) throw DivisionByZeroError("inverse of zero");

  if (fits4(m)) {
    Limbs4 out;
    if (!invmod4(out, low4(ar), low4(m)))
      throw ParameterError("inv_mod: operand not invertible (gcd != 1)");
    UInt inv = from4(out);
    if (mul_mod(inv, ar, m) != UInt{1})
      throw ParameterError("inv_mod: operand not invertible (gcd != 1)");
    return inv;
  }

  UInt u = ar, v = m;
  UInt x1{1}, x2{0};
  while (!(u == UInt{1}) && !(v == UInt{1})) {
    while (u.is_even()) {
      u = shifted_right(u, 1);
      x1 = x1.is_even() ? shifted_right(x1, 1) : shifted_right(add(x1, m), 1);
    }
    while (v.is_even()) {
      v = shifted_right(v, 1);
      x2 = x2.is_even() ? shifted_right(x2, 1) : shifted_right(add(x2, m), 1);
    }
    if (cmp(u, v) >= 0) {
      u = sub(u, v);
      x1 = sub_mod(x1, x2, m);
    } else {
      v = sub(v, u);
      x2 = sub_mod(x2, x1, m);
    }
  }
  UInt inv = (u == UInt{1}) ? mod(x1, m) : mod(x2, m);
  if (mul_mod(inv, ar, m) != UInt{1})
    throw ParameterError("inv_mod: operand not invertible (gcd != 1)");
  return inv;
}

bool UInt::probably_prime(const UInt& n, int rounds) {
  if (n < UInt{2}) return false;
  for (u64 small : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    UInt s{small};
    if (n == s) return true;
    if (mod(n, s).is_zero()) return false;
  }
  // n - 1 = d * 2^r with d odd
  UInt n_minus_1 = sub(n, UInt{1});
  UInt d = n_minus_1;
  std::size_t r = 0;
  while (d.is_even()) {
    d = shifted_right(d, 1);
    ++r;
  }
  // Deterministically derived bases (splitmix64 stream) keep results reproducible.
  u64 state = 0x9e3779b97f4a7c15ull;
  auto next = [&state]() {
    state += 0x9e3779b97f4a7c15ull;
    u64 z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  for (int round = 0; round < rounds; ++round) {
    UInt base = add_mod(UInt{next()}, UInt{2}, sub(n, UInt{3}));  // in [0, n-4]
    base = add(base, UInt{2});                                    // in [2, n-2]
    UInt x = pow_mod(base, d, n);
    if (x == UInt{1} || x == n_minus_1) continue;
    bool witness = true;
    for (std::size_t i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n_minus_1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

}  // namespace eczkp
