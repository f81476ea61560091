#include <catch2/catch_amalgamated.hpp>

#include <bit>
#include <vector>

#include "sylcoh/field.hpp"
#include "sylcoh/tower.hpp"

using namespace sylcoh;

namespace {

/* Independent irreducibility oracle: coefficient-array long division. */
bool oracle_divides(u32 divisor, u32 dividend) {
  auto degree = [](u32 p) {
    int d = -1;
    for (int i = 0; i < 32; ++i)
      if (p & (u32(1) << i)) d = i;
    return d;
  };
  std::vector<int> rem;
  for (int i = 0; i <= degree(dividend); ++i) rem.push_back((dividend >> i) & 1);
  int dd = degree(divisor);
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i)
    if (rem[static_cast<size_t>(i)]) {
      for (int j = 0; j <= dd; ++j)
        rem[static_cast<size_t>(i - dd + j)] ^= (divisor >> j) & 1;
    }
  for (int v : rem)
    if (v) return false;
  return true;
}

bool oracle_irreducible(u32 p, int k) {
  for (u32 d = 2; d < (u32(1) << k); ++d) {
    int deg = 31 - std::countl_zero(d);
    if (deg >= 1 && deg < k && oracle_divides(d, p)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("default irreducible polynomials are the smallest encodings", "[field]") {
  REQUIRE(make_field(1).irr == 0b10u);
  REQUIRE(make_field(2).irr == 0b111u);
  REQUIRE(make_field(3).irr == 0b1011u);
  for (int k = 1; k <= 8; ++k) {
    FieldSpec f = make_field(k);
    REQUIRE(poly_degree(f.irr) == k);
    REQUIRE(oracle_irreducible(f.irr, k));
    /* Nothing smaller of the same degree is irreducible. */
    for (u32 p = u32(1) << k; p < f.irr; ++p)
      REQUIRE_FALSE(oracle_irreducible(p, k));
    REQUIRE(poly_irreducible(f.irr) == oracle_irreducible(f.irr, k));
  }
  /* The library's irreducibility test agrees with the oracle across degree 4. */
  for (u32 p = 16; p < 32; ++p) REQUIRE(poly_irreducible(p) == oracle_irreducible(p, 4));
  REQUIRE_THROWS_AS(make_field(0), usage_error);
  REQUIRE_THROWS_AS(make_field(17), usage_error);
}

TEST_CASE("field axioms hold exhaustively for k <= 4", "[field]") {
  for (int k = 1; k <= 4; ++k) {
    FieldSpec f = make_field(k);
    const u32 q = u32(1) << k;
    for (u32 a = 0; a < q; ++a)
      for (u32 b = 0; b < q; ++b) {
        FieldElement x = make_element(f, a), y = make_element(f, b);
        REQUIRE((x + y).bits == (y + x).bits);
        REQUIRE((x * y).bits == (y * x).bits);
        REQUIRE((x + y).bits == (a ^ b));
        for (u32 c = 0; c < q; ++c) {
          FieldElement z = make_element(f, c);
          REQUIRE(((x * y) * z).bits == (x * (y * z)).bits);
          REQUIRE((x * (y + z)).bits == (x * y + x * z).bits);
        }
      }
    for (u32 a = 1; a < q; ++a) {
      FieldElement x = make_element(f, a);
      REQUIRE((x * inv(x)).bits == one(f).bits);
      REQUIRE(pow(x, (u64(1) << k) - 1).bits == one(f).bits);  // Fermat
    }
    REQUIRE_THROWS_AS(inv(zero(f)), usage_error);
  }
}

TEST_CASE("frozen GF(4) and GF(8) values", "[field]") {
  FieldSpec f4 = make_field(2);
  FieldElement u = make_element(f4, 0b10);
  REQUIRE((u * u).bits == 0b11u);           // u^2 = u + 1
  REQUIRE(pow(u, 3).bits == 0b01u);         // u^3 = 1
  REQUIRE(multiplicative_order(u) == 3);
  REQUIRE(inv(u).bits == 0b11u);

  FieldSpec f8 = make_field(3);
  FieldElement v = make_element(f8, 0b010);
  REQUIRE(inv(v).bits == 0b101u);           // x * (x^2 + 1) = 1 mod x^3 + x + 1
  REQUIRE(multiplicative_order(v) == 7);
  REQUIRE(frobenius_iter(v, 3).bits == v.bits);  // x^(2^3) = x

  REQUIRE(element_string(u) == "10");
  REQUIRE(spec_string(f8) == "1011");
  REQUIRE_THROWS_AS(make_element(f4, 0b100), usage_error);
  FieldElement w8 = one(f8);
  REQUIRE_THROWS_AS(u + w8, usage_error);  // mixed fields
}

TEST_CASE("multiplicative_order is exact", "[field]") {
  for (int k = 1; k <= 6; ++k) {
    FieldSpec f = make_field(k);
    for (u32 a = 1; a < (u32(1) << k); ++a) {
      FieldElement x = make_element(f, a);
      u64 ord = multiplicative_order(x);
      REQUIRE(pow(x, ord).bits == one(f).bits);
      /* No proper divisor of ord is an order. */
      for (u64 d = 1; d < ord; ++d)
        if (ord % d == 0) REQUIRE(pow(x, d).bits != one(f).bits);
      REQUIRE(((u64(1) << k) - 1) % ord == 0);
    }
  }
}

TEST_CASE("eval_poly is Horner evaluation over F_2 coefficients", "[field]") {
  FieldSpec f8 = make_field(3);
  FieldElement x = make_element(f8, 0b010);
  /* p(t) = t^3 + t + 1 evaluated at its own root is zero. */
  REQUIRE(eval_poly(0b1011u, x).is_zero());
  REQUIRE(eval_poly(0b1u, x).bits == one(f8).bits);
  REQUIRE(eval_poly(0b10u, x).bits == x.bits);
}

TEST_CASE("quadratic tower structure for n = 1..3", "[tower]") {
  for (int n = 1; n <= 3; ++n) {
    TowerSpec tw = build_tower(n);
    REQUIRE(tw.sub.k == n);
    REQUIRE(tw.big.k == 2 * n);
    const u32 q2 = u32(1) << (2 * n);

    /* conj is an involutive field automorphism fixing exactly the subfield image. */
    int fixed = 0;
    for (u32 a = 0; a < q2; ++a) {
      FieldElement x = make_element(tw.big, a);
      REQUIRE(conj(tw, conj(tw, x)).bits == x.bits);
      if (conj(tw, x).bits == x.bits) {
        ++fixed;
        REQUIRE(in_subfield_image(tw, x));
      } else {
        REQUIRE_FALSE(in_subfield_image(tw, x));
      }
      for (u32 b = 0; b < q2; ++b) {
        FieldElement y = make_element(tw.big, b);
        REQUIRE(conj(tw, x * y).bits == (conj(tw, x) * conj(tw, y)).bits);
        REQUIRE(conj(tw, x + y).bits == (conj(tw, x) + conj(tw, y)).bits);
      }
    }
    REQUIRE(fixed == (1 << n));

    /* embed is an injective ring homomorphism; unembed inverts it. */
    for (u32 a = 0; a < (u32(1) << n); ++a) {
      FieldElement s = make_element(tw.sub, a);
      FieldElement e = embed(tw, s);
      REQUIRE(in_subfield_image(tw, e));
      REQUIRE(unembed(tw, e).bits == s.bits);
      for (u32 b = 0; b < (u32(1) << n); ++b) {
        FieldElement t = make_element(tw.sub, b);
        REQUIRE(embed(tw, s * t).bits == (embed(tw, s) * embed(tw, t)).bits);
        REQUIRE(embed(tw, s + t).bits == (embed(tw, s) + embed(tw, t)).bits);
      }
    }

    /* trace and norm land in the subfield; rho and lambda satisfy the relations. */
    for (u32 a = 0; a < q2; ++a) {
      FieldElement x = make_element(tw.big, a);
      FieldElement tr = trace(tw, x), nm = norm(tw, x);
      REQUIRE(embed(tw, tr).bits == (x + conj(tw, x)).bits);
      REQUIRE(embed(tw, nm).bits == (x * conj(tw, x)).bits);
    }
    REQUIRE(multiplicative_order(tw.rho) == (u64(1) << n) + 1);
    REQUIRE((tw.rho * conj(tw, tw.rho)).bits == one(tw.big).bits);
    REQUIRE((tw.rho * tw.rho + tw.lambda * tw.rho + one(tw.big)).bits == 0);
    REQUIRE(in_subfield_image(tw, tw.lambda));
    REQUIRE(minimal_poly_degree(tw, tw.lambda) == n);
  }
}

TEST_CASE("tower frozen values for n = 1", "[tower]") {
  TowerSpec tw = build_tower(1);
  FieldElement u = make_element(tw.big, 0b10);
  REQUIRE(conj(tw, u).bits == 0b11u);          // u^2 = u + 1
  REQUIRE(embed(tw, trace(tw, u)).bits == 1);  // u + u^2 = 1
  REQUIRE(embed(tw, norm(tw, u)).bits == 1);   // u * u^2 = u^3 = 1
  REQUIRE(tw.rho.bits == 0b10u);               // smallest element of order 3
  REQUIRE(tw.lambda.bits == 0b01u);            // rho + conj(rho) = 1
}

TEST_CASE("tower accepts a valid field polynomial override", "[tower]") {
  /* x^4 + x^3 + 1 is irreducible: an alternative model of GF(16). */
  TowerSpec tw = build_tower(2, u32(0b11001));
  REQUIRE(tw.big.irr == 0b11001u);
  REQUIRE((tw.rho * conj(tw, tw.rho)).bits == one(tw.big).bits);
  REQUIRE_THROWS_AS(build_tower(2, u32(0b10101)), usage_error);  // (x^2+x+1)^2, reducible
  REQUIRE_THROWS_AS(build_tower(2, u32(0b1011)), usage_error);   // wrong degree
}
