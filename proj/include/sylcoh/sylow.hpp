#pragma once

/*
 * Sylow 2-subgroups of two families of finite simple groups, built exactly:
 *
 *  - psu3, parameter n: the unitary family over the quadratic tower
 *    F_{2^n} < F_{2^{2n}}. Elements are pairs (theta, gamma) in the big field
 *    with trace(gamma) = norm(theta), realized as upper/lower unitriangular
 *    3x3 matrices preserving a hermitian form. Group law:
 *        (theta, gamma) * (mu, tau) = (theta + mu, gamma + tau + conj(theta)*mu).
 *    Order 2^{3n}.
 *
 *  - sz, parameter n: the Suzuki family over F_q, q = 2^{2n+1}, with the
 *    twisting endomorphism theta(x) = x^{2^{n+1}} (so theta^2 = squaring).
 *    Elements are pairs (a, b); group law:
 *        (a, b) * (c, d) = (a + c, b + d + a * theta(c)).
 *    Order q^2 = 2^{4n+2}. The table is produced by closing explicit matrix
 *    generators and then re-indexed canonically; the closure table and the
 *    law table are cross-checked against each other.
 *
 * Element labels are "(<a bits>,<b bits>)" with most significant bit first.
 */

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "common.hpp"
#include "field.hpp"
#include "group.hpp"
#include "tower.hpp"

namespace sylcoh {

/* ---------------------------------------------------------------- 3x3 matrices */

struct Mat3 {
  std::array<FieldElement, 9> e;  // row-major

  const FieldElement& at(int r, int c) const { return e[static_cast<size_t>(3 * r + c)]; }
  FieldElement& at(int r, int c) { return e[static_cast<size_t>(3 * r + c)]; }
};

inline Mat3 mat3_fill(const FieldSpec& spec) {
  FieldElement z = zero(spec);
  return Mat3{{z, z, z, z, z, z, z, z, z}};
}

inline Mat3 mat3_identity(const FieldSpec& spec) {
  Mat3 m = mat3_fill(spec);
  for (int i = 0; i < 3; ++i) m.at(i, i) = one(spec);
  return m;
}

inline Mat3 mat3_mul(const Mat3& a, const Mat3& b) {
  Mat3 out = mat3_fill(a.e[0].spec);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      FieldElement s = zero(a.e[0].spec);
      for (int k = 0; k < 3; ++k) s = s + a.at(r, k) * b.at(k, c);
      out.at(r, c) = s;
    }
  return out;
}

inline bool mat3_equal(const Mat3& a, const Mat3& b) {
  for (int i = 0; i < 9; ++i)
    if (a.e[static_cast<size_t>(i)].bits != b.e[static_cast<size_t>(i)].bits) return false;
  return true;
}

inline std::array<u32, 9> mat3_key(const Mat3& m) {
  std::array<u32, 9> k{};
  for (int i = 0; i < 9; ++i) k[static_cast<size_t>(i)] = m.e[static_cast<size_t>(i)].bits;
  return k;
}

inline Mat3 mat3_conj_transpose(const TowerSpec& tw, const Mat3& m) {
  Mat3 out = mat3_fill(m.e[0].spec);
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out.at(r, c) = conj(tw, m.at(c, r));
  return out;
}

/* ------------------------------------------------------------------ psu3 family */

/* The hermitian form: antidiagonal swap of the first two coordinates. */
inline Mat3 hermitian_form(const FieldSpec& spec) {
  Mat3 h = mat3_fill(spec);
  h.at(0, 1) = one(spec);
  h.at(1, 0) = one(spec);
  h.at(2, 2) = one(spec);
  return h;
}

/* A * H * conj(A)^T + H; zero exactly when A preserves the form. */
inline Mat3 hermitian_defect(const TowerSpec& tw, const Mat3& a) {
  Mat3 h = hermitian_form(tw.big);
  Mat3 d = mat3_mul(mat3_mul(a, h), mat3_conj_transpose(tw, a));
  for (int i = 0; i < 9; ++i)
    d.e[static_cast<size_t>(i)] = d.e[static_cast<size_t>(i)] + h.e[static_cast<size_t>(i)];
  return d;
}

inline bool mat3_is_zero(const Mat3& m) {
  for (int i = 0; i < 9; ++i)
    if (!m.e[static_cast<size_t>(i)].is_zero()) return false;
  return true;
}

inline Mat3 psu3_matrix(const TowerSpec& tw, FieldElement theta, FieldElement gamma) {
  Mat3 m = mat3_identity(tw.big);
  m.at(0, 1) = gamma;
  m.at(0, 2) = conj(tw, theta);
  m.at(2, 1) = theta;
  return m;
}

/* Membership: trace(gamma) = norm(theta), both inside the big field. */
inline bool psu3_member(const TowerSpec& tw, FieldElement theta, FieldElement gamma) {
  return (gamma + conj(tw, gamma)).bits == (theta * conj(tw, theta)).bits;
}

struct Psu3Sylow {
  int n = 0;
  TowerSpec tw;
  GroupTable table;
  std::vector<std::pair<u32, u32>> params;      // index -> (theta bits, gamma bits)
  std::map<std::pair<u32, u32>, int> index_of;  // reverse lookup
};

inline std::string pair_label(u32 a_bits, int a_width, u32 b_bits, int b_width) {
  return "(" + bits_string(a_bits, a_width) + "," + bits_string(b_bits, b_width) + ")";
}

inline Psu3Sylow build_psu3_sylow(int n, std::optional<u32> field_poly = std::nullopt) {
  require_usage(n >= 1 && n <= 3, "psu3: n must be in [1, 3]");
  Psu3Sylow p;
  p.n = n;
  p.tw = build_tower(n, field_poly);
  const TowerSpec& tw = p.tw;
  const u32 q2 = u32(1) << (2 * n);

  for (u32 tb = 0; tb < q2; ++tb)
    for (u32 gb = 0; gb < q2; ++gb)
      if (psu3_member(tw, make_element(tw.big, tb), make_element(tw.big, gb)))
        p.params.emplace_back(tb, gb);
  require_internal(p.params.size() == (size_t(1) << (3 * n)), "psu3: wrong member count");
  for (size_t i = 0; i < p.params.size(); ++i) p.index_of[p.params[i]] = static_cast<int>(i);
  require_internal(p.params[0] == std::make_pair(u32(0), u32(0)), "psu3: identity not first");

  GroupTable& g = p.table;
  g.order = static_cast<int>(p.params.size());
  g.mul.assign(static_cast<size_t>(g.order) * static_cast<size_t>(g.order), 0);
  g.inv.assign(static_cast<size_t>(g.order), 0);
  for (auto [tb, gb] : p.params) g.labels.push_back(pair_label(tb, 2 * n, gb, 2 * n));

  auto law = [&](std::pair<u32, u32> x, std::pair<u32, u32> y) -> std::pair<u32, u32> {
    FieldElement theta = make_element(tw.big, x.first), gamma = make_element(tw.big, x.second);
    FieldElement mu = make_element(tw.big, y.first), tau = make_element(tw.big, y.second);
    return {(theta + mu).bits, (gamma + tau + conj(tw, theta) * mu).bits};
  };
  for (int i = 0; i < g.order; ++i) {
    for (int j = 0; j < g.order; ++j) {
      auto it = p.index_of.find(law(p.params[static_cast<size_t>(i)], p.params[static_cast<size_t>(j)]));
      require_internal(it != p.index_of.end(), "psu3: product escaped the member set");
      g.set(i, j, it->second);
    }
    FieldElement theta = make_element(tw.big, p.params[static_cast<size_t>(i)].first);
    FieldElement gamma = make_element(tw.big, p.params[static_cast<size_t>(i)].second);
    auto it = p.index_of.find({theta.bits, (gamma + theta * conj(tw, theta)).bits});
    require_internal(it != p.index_of.end() && g.at(i, it->second) == 0 && g.at(it->second, i) == 0,
                     "psu3: inverse formula fails");
    g.inv[static_cast<size_t>(i)] = static_cast<std::uint16_t>(it->second);
  }
  validate(g);

  /* Cross-check the law table against honest matrix multiplication. */
  auto mat_of = [&](int i) {
    return psu3_matrix(tw, make_element(tw.big, p.params[static_cast<size_t>(i)].first),
                       make_element(tw.big, p.params[static_cast<size_t>(i)].second));
  };
  auto check_pair = [&](int i, int j) {
    Mat3 prod = mat3_mul(mat_of(i), mat_of(j));
    require_internal(mat3_equal(prod, mat_of(g.at(i, j))), "psu3: law disagrees with matrices");
  };
  if (n <= 2) {
    for (int i = 0; i < g.order; ++i)
      for (int j = 0; j < g.order; ++j) check_pair(i, j);
  } else {
    SplitMix64 rng(0x70737533u);  // fixed seed: deterministic sample
    for (int t = 0; t < 10000; ++t)
      check_pair(static_cast<int>(rng.below(static_cast<u64>(g.order))),
                 static_cast<int>(rng.below(static_cast<u64>(g.order))));
  }
  return p;
}

/* ------------------------------------------------------------------- sz family */

struct SzSylow {
  int n = 0;
  FieldSpec fq;  // F_{2^{2n+1}}
  GroupTable table;
  std::vector<std::pair<u32, u32>> params;      // index -> (a bits, b bits)
  std::map<std::pair<u32, u32>, int> index_of;  // reverse lookup
};

inline FieldElement sz_twist(const FieldSpec&, int n, FieldElement x) {
  return frobenius_iter(x, n + 1);  // x^(2^(n+1))
}

inline Mat3 sz_matrix(const FieldSpec& fq, int n, FieldElement a, FieldElement b) {
  Mat3 m = mat3_identity(fq);
  m.at(1, 0) = sz_twist(fq, n, a);
  m.at(2, 0) = b;
  m.at(2, 1) = a;
  return m;
}

inline SzSylow build_sz_sylow(int n, std::optional<u32> field_poly = std::nullopt) {
  require_usage(n >= 1 && n <= 2, "sz: n must be in [1, 2]");
  SzSylow s;
  s.n = n;
  const int k = 2 * n + 1;
  if (field_poly) {
    require_usage(poly_degree(*field_poly) == k && poly_irreducible(*field_poly),
                  "sz: field polynomial must be irreducible of degree 2n+1");
    s.fq = FieldSpec{k, *field_poly};
  } else {
    s.fq = make_field(k);
  }
  const FieldSpec& fq = s.fq;
  const u32 q = u32(1) << k;

  /* The twist squares to the Frobenius square: theta(theta(x)) = x^2. */
  for (u32 xb = 0; xb < q; ++xb) {
    FieldElement x = make_element(fq, xb);
    require_internal(sz_twist(fq, n, sz_twist(fq, n, x)).bits == (x * x).bits,
                     "sz: twist does not square to squaring");
  }

  /* Close explicit matrix generators: one per (a, 0) and one per (0, b). */
  std::vector<Mat3> gens;
  for (u32 ab = 0; ab < q; ++ab) gens.push_back(sz_matrix(fq, n, make_element(fq, ab), zero(fq)));
  for (u32 bb = 0; bb < q; ++bb) gens.push_back(sz_matrix(fq, n, zero(fq), make_element(fq, bb)));
  auto param_of = [&](const Mat3& m) -> std::pair<u32, u32> {
    FieldElement a = m.at(2, 1), b = m.at(2, 0);
    require_internal(m.at(1, 0).bits == sz_twist(fq, n, a).bits &&
                         m.at(0, 0).bits == one(fq).bits && m.at(1, 1).bits == one(fq).bits &&
                         m.at(2, 2).bits == one(fq).bits && m.at(0, 1).is_zero() &&
                         m.at(0, 2).is_zero() && m.at(1, 2).is_zero(),
                     "sz: closure produced a matrix outside the expected shape");
    return {a.bits, b.bits};
  };
  GroupTable closure = close_generators(
      gens, [](const Mat3& x, const Mat3& y) { return mat3_mul(x, y); }, mat3_key,
      [&](const Mat3& m) {
        auto [ab, bb] = param_of(m);
        return pair_label(ab, k, bb, k);
      },
      static_cast<size_t>(q) * q);
  require_internal(closure.order == static_cast<int>(q * q), "sz: closure has wrong order");

  /* Canonical law table over (a, b) sorted ascending. */
  for (u32 ab = 0; ab < q; ++ab)
    for (u32 bb = 0; bb < q; ++bb) s.params.emplace_back(ab, bb);
  for (size_t i = 0; i < s.params.size(); ++i) s.index_of[s.params[i]] = static_cast<int>(i);

  GroupTable& g = s.table;
  g.order = static_cast<int>(q * q);
  g.mul.assign(static_cast<size_t>(g.order) * static_cast<size_t>(g.order), 0);
  g.inv.assign(static_cast<size_t>(g.order), 0);
  for (auto [ab, bb] : s.params) g.labels.push_back(pair_label(ab, k, bb, k));
  for (int i = 0; i < g.order; ++i) {
    FieldElement a = make_element(fq, s.params[static_cast<size_t>(i)].first);
    FieldElement b = make_element(fq, s.params[static_cast<size_t>(i)].second);
    for (int j = 0; j < g.order; ++j) {
      FieldElement c = make_element(fq, s.params[static_cast<size_t>(j)].first);
      FieldElement d = make_element(fq, s.params[static_cast<size_t>(j)].second);
      g.set(i, j, s.index_of.at({(a + c).bits, (b + d + a * sz_twist(fq, n, c)).bits}));
    }
    g.inv[static_cast<size_t>(i)] =
        static_cast<std::uint16_t>(s.index_of.at({a.bits, (b + a * sz_twist(fq, n, a)).bits}));
    require_internal(g.at(i, g.inv[static_cast<size_t>(i)]) == 0, "sz: inverse formula fails");
  }
  validate(g);

  /* The closure table and the law table must agree: match elements by label. */
  std::map<std::string, int> by_label;
  for (int i = 0; i < g.order; ++i) by_label[g.labels[static_cast<size_t>(i)]] = i;
  std::vector<int> perm(static_cast<size_t>(closure.order));
  for (int i = 0; i < closure.order; ++i) {
    auto it = by_label.find(closure.labels[static_cast<size_t>(i)]);
    require_internal(it != by_label.end(), "sz: closure element missing from law table");
    perm[static_cast<size_t>(i)] = it->second;
  }
  for (int i = 0; i < closure.order; ++i)
    for (int j = 0; j < closure.order; ++j)
      require_internal(perm[static_cast<size_t>(closure.at(i, j))] ==
                           g.at(perm[static_cast<size_t>(i)], perm[static_cast<size_t>(j)]),
                       "sz: closure table disagrees with law table");
  return s;
}

/* ----------------------------------------------------------- lemma verification */

struct LemmaCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // short human-readable context
};

inline std::vector<LemmaCheck> psu3_lemma_checks(const Psu3Sylow& p) {
  const TowerSpec& tw = p.tw;
  const GroupTable& g = p.table;
  const int n = p.n;
  std::vector<LemmaCheck> out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, detail});
  };

  add("order", g.order == (1 << (3 * n)), "expected 2^" + std::to_string(3 * n));

  bool herm = true;
  for (int i = 0; i < g.order && herm; ++i)
    herm = mat3_is_zero(hermitian_defect(
        tw, psu3_matrix(tw, make_element(tw.big, p.params[static_cast<size_t>(i)].first),
                        make_element(tw.big, p.params[static_cast<size_t>(i)].second))));
  add("hermitian-form-preserved", herm, "A*H*conj(A)^T = H for every member");

  /* Center = { (0, gamma) : trace(gamma) = 0 }, i.e. gamma in the subfield image. */
  Subgroup z = center(g);
  bool cent = z.members.size() == (size_t(1) << n);
  for (int x : z.members) {
    auto [tb, gb] = p.params[static_cast<size_t>(x)];
    cent = cent && tb == 0 && in_subfield_image(tw, make_element(tw.big, gb));
  }
  for (int i = 0; i < g.order; ++i)
    if (p.params[static_cast<size_t>(i)].first == 0)
      cent = cent && std::find(z.members.begin(), z.members.end(), i) != z.members.end();
  add("center-structure", cent, "center is exactly the theta = 0 slice, order 2^" + std::to_string(n));

  bool sq = true, ord4 = true;
  std::set<int> squares;
  std::set<int> zset(z.members.begin(), z.members.end());
  for (int i = 0; i < g.order; ++i) {
    FieldElement theta = make_element(tw.big, p.params[static_cast<size_t>(i)].first);
    int expect = p.index_of.at({0, (theta * conj(tw, theta)).bits});
    sq = sq && g.at(i, i) == expect && zset.count(expect) > 0;
    squares.insert(g.at(i, i));
    if (!zset.count(i)) ord4 = ord4 && g.at(i, i) != g.id;
  }
  add("squares-formula", sq, "x^2 = (0, theta*conj(theta)), central");
  add("noncentral-order-4", ord4, "every non-central element has order 4");
  add("frattini-squares", squares == zset, "the set of squares is exactly the center");

  bool comm = true;
  for (int i = 0; i < g.order && comm; ++i) {
    FieldElement theta = make_element(tw.big, p.params[static_cast<size_t>(i)].first);
    for (int j = 0; j < g.order && comm; ++j) {
      FieldElement mu = make_element(tw.big, p.params[static_cast<size_t>(j)].first);
      int c = g.at(g.at(g.at(i, j), g.inv[static_cast<size_t>(i)]), g.inv[static_cast<size_t>(j)]);
      u32 want = (conj(tw, theta) * mu + theta * conj(tw, mu)).bits;
      comm = p.params[static_cast<size_t>(c)] == std::make_pair(u32(0), want);
    }
  }
  add("commutator-formula", comm, "[x,y] = (0, conj(theta)*mu + theta*conj(mu))");

  /* Families over the lambda powers; gamma chosen as the smallest valid coset rep. */
  auto canonical = [&](FieldElement theta) -> int {
    for (u32 gb = 0; gb < (u32(1) << (2 * n)); ++gb)
      if (psu3_member(tw, theta, make_element(tw.big, gb)))
        return p.index_of.at({theta.bits, gb});
    throw internal_error("psu3: no membership witness for theta");
  };
  auto commutator = [&](int i, int j) {
    return g.at(g.at(g.at(i, j), g.inv[static_cast<size_t>(i)]), g.inv[static_cast<size_t>(j)]);
  };
  bool fam = true;
  for (int i = 0; i < n && fam; ++i) {
    FieldElement li = lambda_pow(tw, i), ri = lambda_pow(tw, i) * tw.rho;
    fam = fam && g.at(canonical(li), canonical(li)) == p.index_of.at({0, lambda_pow(tw, 2 * i).bits});
    fam = fam && g.at(canonical(ri), canonical(ri)) == p.index_of.at({0, lambda_pow(tw, 2 * i).bits});
    for (int j = 0; j < n && fam; ++j) {
      FieldElement lj = lambda_pow(tw, j), rj = lambda_pow(tw, j) * tw.rho;
      fam = fam && commutator(canonical(ri), canonical(lj)) ==
                       p.index_of.at({0, lambda_pow(tw, i + j + 1).bits});
      fam = fam && commutator(canonical(ri), canonical(rj)) == g.id;
      fam = fam && commutator(canonical(li), canonical(lj)) == g.id;
    }
  }
  add("lambda-families", fam,
      "squares and commutators of the lambda/rho*lambda family elements");

  /* The 2n family elements generate the whole group. */
  std::set<int> closure = {g.id};
  std::vector<int> fam_gens;
  for (int i = 0; i < n; ++i) {
    fam_gens.push_back(canonical(lambda_pow(tw, i)));
    fam_gens.push_back(canonical(lambda_pow(tw, i) * tw.rho));
  }
  for (int x : fam_gens) closure.insert(x);
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<int> cur(closure.begin(), closure.end());
    for (int a : cur)
      for (int b : fam_gens)
        if (closure.insert(g.at(a, b)).second) grew = true;
  }
  add("lambda-generators", closure.size() == static_cast<size_t>(g.order),
      "the 2n family elements generate the group");

  bool quot = true;
  for (int i = 0; i < g.order && quot; ++i)
    for (int j = 0; j < g.order && quot; ++j) {
      int xy = g.at(i, j);
      quot = zset.count(g.at(xy, xy)) > 0;
    }
  add("quotient-exponent-2", quot, "G/Z is elementary abelian");

  add("central-involution-property", central_involution_property(g),
      "all involutions central, center elementary abelian");

  std::vector<Subgroup> maxes = maximal_elementary_abelians(g);
  bool uniq = maxes.size() == 1 && maxes[0].members == z.members;
  add("unique-maximal-elementary-abelian", uniq, "the center is the only one; rank " +
                                                     std::to_string(n));
  return out;
}

inline std::vector<LemmaCheck> sz_lemma_checks(const SzSylow& s) {
  const GroupTable& g = s.table;
  const FieldSpec& fq = s.fq;
  const int n = s.n;
  const u32 q = u32(1) << (2 * n + 1);
  std::vector<LemmaCheck> out;
  auto add = [&](const std::string& name, bool pass, const std::string& detail) {
    out.push_back({name, pass, detail});
  };

  add("order", g.order == static_cast<int>(q * q), "expected 2^" + std::to_string(4 * n + 2));

  u64 e1 = (u64(1) << (2 * n + 1)) - 1, e2 = (u64(1) << (n + 1)) + 1;
  add("twist-exponent-coprime", std::gcd(e1, e2) == 1,
      "gcd(2^(2n+1) - 1, 2^(n+1) + 1) = 1, so x -> x^(1+2^(n+1)) permutes F_q^*");

  bool twist = true;
  for (u32 xb = 0; xb < q && twist; ++xb) {
    FieldElement x = make_element(fq, xb);
    twist = sz_twist(fq, n, sz_twist(fq, n, x)).bits == (x * x).bits;
  }
  add("twist-squares-to-frobenius", twist, "theta(theta(x)) = x^2 on all of F_q");

  Subgroup z = center(g);
  std::set<int> zset(z.members.begin(), z.members.end());
  bool cent = z.members.size() == q;
  for (int x : z.members) cent = cent && s.params[static_cast<size_t>(x)].first == 0;
  for (int i = 0; i < g.order; ++i)
    if (s.params[static_cast<size_t>(i)].first == 0) cent = cent && zset.count(i) > 0;
  add("center-structure", cent, "center is exactly the a = 0 slice, order 2^" +
                                    std::to_string(2 * n + 1));

  std::vector<int> invs = involutions(g);
  bool inv_ok = invs.size() == static_cast<size_t>(q - 1);
  for (int t : invs) inv_ok = inv_ok && s.params[static_cast<size_t>(t)].first == 0;
  add("involution-census", inv_ok,
      "involutions are exactly (0, b) with b != 0; count 2^(2n+1) - 1");

  bool sq = true;
  std::set<int> squares;
  for (int i = 0; i < g.order; ++i) {
    FieldElement a = make_element(fq, s.params[static_cast<size_t>(i)].first);
    int expect = s.index_of.at({0, (a * sz_twist(fq, n, a)).bits});
    sq = sq && g.at(i, i) == expect;
    squares.insert(g.at(i, i));
  }
  add("squares-formula", sq, "x^2 = (0, a^(1+2^(n+1)))");
  add("frattini-squares", squares == zset, "the set of squares is exactly the center");

  bool comm = true;
  SplitMix64 rng(0x737a6368u);  // fixed seed for the large-order sample
  long long pairs = static_cast<long long>(g.order) * g.order;
  bool exhaustive = pairs <= 300000;
  long long trials = exhaustive ? pairs : 200000;
  for (long long t = 0; t < trials && comm; ++t) {
    int i = exhaustive ? static_cast<int>(t / g.order) : static_cast<int>(rng.below(static_cast<u64>(g.order)));
    int j = exhaustive ? static_cast<int>(t % g.order) : static_cast<int>(rng.below(static_cast<u64>(g.order)));
    FieldElement a = make_element(fq, s.params[static_cast<size_t>(i)].first);
    FieldElement c = make_element(fq, s.params[static_cast<size_t>(j)].first);
    int cm = g.at(g.at(g.at(i, j), g.inv[static_cast<size_t>(i)]), g.inv[static_cast<size_t>(j)]);
    comm = cm == s.index_of.at({0, (a * sz_twist(fq, n, c) + sz_twist(fq, n, a) * c).bits});
  }
  add("commutator-formula", comm, "[x,y] = (0, a*theta(c) + theta(a)*c)");

  add("central-involution-property", central_involution_property(g),
      "all involutions central, center elementary abelian");

  std::vector<Subgroup> maxes = maximal_elementary_abelians(g);
  bool uniq = maxes.size() == 1 && maxes[0].members == z.members;
  add("unique-maximal-elementary-abelian", uniq, "the center is the only one; rank " +
                                                     std::to_string(2 * n + 1));
  return out;
}

}  // namespace sylcoh
