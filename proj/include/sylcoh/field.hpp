#pragma once

/*
 * GF(2^k) arithmetic for 1 <= k <= 16. An element is a k-bit vector, low bit
 * the constant term, reduced modulo a fixed irreducible polynomial. The
 * canonical modulus for each k is the irreducible polynomial whose (k+1)-bit
 * encoding (constant term in the low bit) is smallest as an integer, e.g.
 * k=1 -> x, k=2 -> x^2+x+1, k=3 -> x^3+x+1.
 */

#include <string>
#include <vector>

#include "common.hpp"

namespace sylcoh {

struct FieldSpec {
  int k = 0;
  u32 irr = 0;  // degree-k modulus, bit i = coefficient of x^i

  bool operator==(const FieldSpec& o) const { return k == o.k && irr == o.irr; }
  bool operator!=(const FieldSpec& o) const { return !(*this == o); }
};

struct FieldElement {
  FieldSpec spec;
  u32 bits = 0;

  bool operator==(const FieldElement& o) const {
    return spec == o.spec && bits == o.bits;
  }
  bool operator!=(const FieldElement& o) const { return !(*this == o); }
  bool is_zero() const { return bits == 0; }
};

inline int poly_degree(u32 p) {
  int d = -1;
  while (p) {
    ++d;
    p >>= 1;
  }
  return d;
}

/* Remainder of a modulo m over F2 (m != 0). */
inline u64 poly_mod(u64 a, u64 m) {
  int dm = 0;
  for (u64 t = m; t > 1; t >>= 1) ++dm;
  for (int j = 63; j >= dm; --j)
    if (a >> j & 1) a ^= m << (j - dm);
  return a;
}

/* Irreducibility over F2 by trial division (degree <= 16 is tiny). */
inline bool poly_irreducible(u32 p) {
  int d = poly_degree(p);
  if (d <= 0) return false;
  for (u32 q = 2; ; ++q) {
    int dq = poly_degree(q);
    if (2 * dq > d) break;
    if (poly_mod(p, q) == 0) return false;
  }
  return true;
}

inline FieldSpec make_field(int k) {
  require_usage(k >= 1 && k <= 16, "make_field: k must be in [1, 16]");
  for (u32 m = 0; m < (u32(1) << k); ++m) {
    u32 poly = (u32(1) << k) | m;
    if (poly_irreducible(poly)) return FieldSpec{k, poly};
  }
  throw internal_error("make_field: no irreducible polynomial found");
}

inline FieldElement make_element(const FieldSpec& spec, u32 bits) {
  require_usage(bits < (u32(1) << spec.k), "make_element: bits out of range");
  return FieldElement{spec, bits};
}

inline FieldElement zero(const FieldSpec& spec) { return FieldElement{spec, 0}; }
inline FieldElement one(const FieldSpec& spec) { return FieldElement{spec, 1}; }

inline void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.spec != b.spec) throw usage_error("field arithmetic: mixed-field operands");
}

inline FieldElement add(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return FieldElement{a.spec, a.bits ^ b.bits};
}

inline FieldElement mul(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  u64 acc = 0;
  u64 x = a.bits;
  u32 y = b.bits;
  while (y) {
    if (y & 1) acc ^= x;
    x <<= 1;
    y >>= 1;
  }
  return FieldElement{a.spec, static_cast<u32>(poly_mod(acc, a.spec.irr))};
}

inline FieldElement operator+(const FieldElement& a, const FieldElement& b) { return add(a, b); }
inline FieldElement operator*(const FieldElement& a, const FieldElement& b) { return mul(a, b); }

inline FieldElement pow(const FieldElement& a, u64 e) {
  FieldElement base = a;
  FieldElement acc = one(a.spec);
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

inline FieldElement inv(const FieldElement& a) {
  if (a.bits == 0) throw usage_error("field arithmetic: inversion of zero");
  u64 group = (u64(1) << a.spec.k) - 1;
  return pow(a, group - 1);
}

/* x -> x^(2^s), the s-fold Frobenius. */
inline FieldElement frobenius_iter(const FieldElement& a, int s) {
  FieldElement r = a;
  for (int i = 0; i < s; ++i) r = mul(r, r);
  return r;
}

inline std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> ps;
  for (u64 p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

/* Exact multiplicative order of a nonzero element. */
inline u64 multiplicative_order(const FieldElement& a) {
  require_usage(a.bits != 0, "multiplicative_order: zero element");
  u64 t = (u64(1) << a.spec.k) - 1;
  for (u64 p : prime_factors(t))
    while (t % p == 0 && pow(a, t / p).bits == 1) t /= p;
  return t;
}

/* Evaluate an F2-coefficient polynomial at a field element (Horner). */
inline FieldElement eval_poly(u32 poly, const FieldElement& x) {
  FieldElement r = zero(x.spec);
  for (int j = poly_degree(poly); j >= 0; --j) {
    r = mul(r, x);
    if (poly >> j & 1) r = add(r, one(x.spec));
  }
  return r;
}

/* Modulus as a binary string, e.g. "1011" for x^3 + x + 1. */
inline std::string spec_string(const FieldSpec& spec) {
  return bits_string(spec.irr, spec.k + 1);
}

/* Element as a k-digit binary string. */
inline std::string element_string(const FieldElement& a) {
  return bits_string(a.bits, a.spec.k);
}

}  // namespace sylcoh
