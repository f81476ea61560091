#pragma once

/*
 * The quadratic field tower F_2 < F_{2^n} < F_{2^2n} used by the unitary
 * family. Conjugation is x -> x^(2^n); trace and norm land in the subfield.
 *
 * rho is the smallest element (in bit order) of multiplicative order exactly
 * 2^n + 1, and lambda = rho + conj(rho). Construction verifies:
 *   rho * conj(rho) = 1,  rho^2 + lambda*rho + 1 = 0,
 *   lambda lies in the subfield and its minimal polynomial has degree n,
 *   {1, lambda, ..., lambda^(n-1)} is an F_2-basis of the subfield image, and
 *   together with {rho * lambda^i} spans the big field.
 */

#include <optional>
#include <vector>

#include "bitmatrix.hpp"
#include "common.hpp"
#include "field.hpp"

namespace sylcoh {

struct TowerSpec {
  int n = 0;
  FieldSpec sub;
  FieldSpec big;
  std::vector<u32> embed_pow;  // images in big of u_sub^i, 0 <= i < n
  BitMatrix unembed_solve;     // n x 2n: subfield coordinates of an image point
  BitMatrix unembed_check;     // rows annihilating exactly the embedded subfield
  FieldElement rho;
  FieldElement lambda;
};

inline BitVector to_bitvector(u32 bits, int width) {
  BitVector v(static_cast<size_t>(width));
  for (int i = 0; i < width; ++i)
    if (bits >> i & 1u) v.set(static_cast<size_t>(i), true);
  return v;
}

inline u32 from_bitvector(const BitVector& v) {
  u32 bits = 0;
  for (size_t i = 0; i < v.size(); ++i)
    if (v.get(i)) bits |= u32(1) << i;
  return bits;
}

inline FieldElement embed(const TowerSpec& t, const FieldElement& a) {
  require_usage(a.spec == t.sub, "embed: element not in the subfield");
  FieldElement r = zero(t.big);
  for (int i = 0; i < t.n; ++i)
    if (a.bits >> i & 1u) r.bits ^= t.embed_pow[static_cast<size_t>(i)];
  return r;
}

inline bool in_subfield_image(const TowerSpec& t, const FieldElement& a) {
  require_usage(a.spec == t.big, "in_subfield_image: element not in the big field");
  return t.unembed_check.mul(to_bitvector(a.bits, 2 * t.n)).is_zero();
}

inline FieldElement unembed(const TowerSpec& t, const FieldElement& a) {
  if (!in_subfield_image(t, a))
    throw internal_error("unembed: element is not in the embedded subfield");
  BitVector c = t.unembed_solve.mul(to_bitvector(a.bits, 2 * t.n));
  return FieldElement{t.sub, from_bitvector(c)};
}

inline FieldElement conj(const TowerSpec& t, const FieldElement& a) {
  require_usage(a.spec == t.big, "conj: element not in the big field");
  return frobenius_iter(a, t.n);
}

inline FieldElement trace(const TowerSpec& t, const FieldElement& a) {
  return unembed(t, add(a, conj(t, a)));
}

inline FieldElement norm(const TowerSpec& t, const FieldElement& a) {
  return unembed(t, mul(a, conj(t, a)));
}

inline FieldElement lambda_pow(const TowerSpec& t, u64 e) { return pow(t.lambda, e); }

/* Degree of the minimal polynomial of a over F2: first linear dependence
 * among 1, a, a^2, ... in big-field coordinates. */
inline int minimal_poly_degree(const TowerSpec& t, const FieldElement& a) {
  RrefAccumulator acc(static_cast<size_t>(2 * t.n));
  FieldElement p = one(t.big);
  int d = 0;
  while (acc.insert(to_bitvector(p.bits, 2 * t.n))) {
    ++d;
    p = mul(p, a);
  }
  return d;
}

inline TowerSpec build_tower(int n, std::optional<u32> big_irr_override = std::nullopt) {
  require_usage(n >= 1 && n <= 5, "build_tower: n must be in [1, 5]");
  TowerSpec t;
  t.n = n;
  t.sub = make_field(n);
  if (big_irr_override) {
    u32 p = *big_irr_override;
    require_usage(poly_degree(p) == 2 * n && poly_irreducible(p),
                  "build_tower: override modulus must be irreducible of degree 2n");
    t.big = FieldSpec{2 * n, p};
  } else {
    t.big = make_field(2 * n);
  }

  /* Embed the subfield at the smallest root (bit order) of its modulus. */
  FieldElement root = zero(t.big);
  bool found = false;
  for (u32 b = 0; b < (u32(1) << (2 * n)); ++b) {
    FieldElement x{t.big, b};
    if (eval_poly(t.sub.irr, x).is_zero()) {
      root = x;
      found = true;
      break;
    }
  }
  require_internal(found, "build_tower: subfield modulus has no root in the big field");

  FieldElement p = one(t.big);
  for (int i = 0; i < n; ++i) {
    t.embed_pow.push_back(p.bits);
    p = mul(p, root);
  }

  /*
   * Invert the embedding on its image: eliminate [M | I] where M's columns
   * are the embedded power basis. Pivot rows of the transform give subfield
   * coordinates; the remaining rows vanish exactly on the image.
   */
  BitMatrix aug(static_cast<size_t>(2 * n), static_cast<size_t>(n + 2 * n));
  for (int i = 0; i < n; ++i)
    for (int r = 0; r < 2 * n; ++r)
      if (t.embed_pow[static_cast<size_t>(i)] >> r & 1u)
        aug.set(static_cast<size_t>(r), static_cast<size_t>(i), true);
  for (int r = 0; r < 2 * n; ++r)
    aug.set(static_cast<size_t>(r), static_cast<size_t>(n + r), true);
  RrefResult rr = rref(aug);
  t.unembed_solve = BitMatrix(static_cast<size_t>(n), static_cast<size_t>(2 * n));
  t.unembed_check = BitMatrix(static_cast<size_t>(n), static_cast<size_t>(2 * n));
  size_t solve_rows = 0, check_rows = 0;
  for (size_t r = 0; r < rr.m.rows(); ++r) {
    bool has_m_pivot = false;
    size_t pivot_col = kNpos;
    for (size_t c = 0; c < static_cast<size_t>(n); ++c)
      if (rr.m.get(r, c)) {
        has_m_pivot = true;
        pivot_col = c;
        break;
      }
    if (has_m_pivot) {
      require_internal(pivot_col == solve_rows, "build_tower: embedding not injective");
      for (size_t c = 0; c < static_cast<size_t>(2 * n); ++c)
        t.unembed_solve.set(pivot_col, c, rr.m.get(r, static_cast<size_t>(n) + c));
      ++solve_rows;
    } else {
      require_internal(check_rows < static_cast<size_t>(n), "build_tower: bad transform");
      for (size_t c = 0; c < static_cast<size_t>(2 * n); ++c)
        t.unembed_check.set(check_rows, c, rr.m.get(r, static_cast<size_t>(n) + c));
      ++check_rows;
    }
  }
  require_internal(solve_rows == static_cast<size_t>(n) && check_rows == static_cast<size_t>(n),
                   "build_tower: embedding rank defect");

  /* Exhaustive homomorphism check of the embedding (subfield has <= 32 elements). */
  for (u32 a = 0; a < (u32(1) << n); ++a)
    for (u32 b = 0; b < (u32(1) << n); ++b) {
      FieldElement ea = embed(t, FieldElement{t.sub, a});
      FieldElement eb = embed(t, FieldElement{t.sub, b});
      require_internal(mul(ea, eb) == embed(t, mul(FieldElement{t.sub, a}, FieldElement{t.sub, b})),
                       "build_tower: embedding is not multiplicative");
    }

  /* rho: smallest element of exact order 2^n + 1; lambda = rho + conj(rho). */
  u64 target = (u64(1) << n) + 1;
  found = false;
  for (u32 b = 1; b < (u32(1) << (2 * n)); ++b) {
    FieldElement x{t.big, b};
    if (multiplicative_order(x) == target) {
      t.rho = x;
      found = true;
      break;
    }
  }
  require_internal(found, "build_tower: no element of order 2^n + 1");
  t.lambda = add(t.rho, conj(t, t.rho));

  require_internal(mul(t.rho, conj(t, t.rho)).bits == 1, "tower: rho * conj(rho) != 1");
  require_internal(add(add(mul(t.rho, t.rho), mul(t.lambda, t.rho)), one(t.big)).is_zero(),
                   "tower: rho^2 + lambda*rho + 1 != 0");
  require_internal(in_subfield_image(t, t.lambda), "tower: lambda outside the subfield");
  require_internal(minimal_poly_degree(t, t.lambda) == n,
                   "tower: minimal polynomial of lambda has wrong degree");

  /* {lambda^i} spans the subfield image; adding {rho lambda^i} spans everything. */
  RrefAccumulator span(static_cast<size_t>(2 * n));
  FieldElement lp = one(t.big);
  for (int i = 0; i < n; ++i) {
    require_internal(span.insert(to_bitvector(lp.bits, 2 * n)),
                     "tower: lambda powers dependent");
    require_internal(in_subfield_image(t, lp), "tower: lambda power outside subfield");
    lp = mul(lp, t.lambda);
  }
  lp = t.rho;
  for (int i = 0; i < n; ++i) {
    require_internal(span.insert(to_bitvector(lp.bits, 2 * n)),
                     "tower: rho * lambda powers dependent");
    lp = mul(lp, t.lambda);
  }
  require_internal(span.rank() == static_cast<size_t>(2 * n), "tower: basis does not span");

  return t;
}

}  // namespace sylcoh
