#pragma once

/*
 * Minimal free resolutions of the trivial module F2 over the group algebra
 * A = F2[G] of a finite 2-group G.
 *
 * Free-module layout: an element of A^b is a BitVector of length b*|G| with
 * coordinate (component j, group element x) at index j*|G| + x. A-linear maps
 * are stored two ways:
 *   - as a FreeMap (src_rank x dst_rank array of group-algebra entries), and
 *   - expanded to a plain F2 BitMatrix whose column (j, h) is the image of
 *     h * gen_j, i.e. the left translate by h of the column of gen_j.
 *
 * The resolution is built degree by degree: new generators in degree k are a
 * lift of a basis of ker(boundary_{k-1}) modulo (augmentation ideal)*kernel,
 * chosen deterministically (kernel basis in rref order, first usable row
 * wins). By Nakayama's lemma this yields a minimal resolution, so the rank
 * in degree k equals dim H^k(G; F2).
 *
 * Degree 0 is handled uniformly by seeding boundary_mats[0] with the
 * augmentation row (1 x |G|, all ones); its kernel is the augmentation ideal.
 *
 * Invariants asserted on every build: boundary composites vanish, every
 * entry lies in the augmentation ideal (minimality), and the image of each
 * boundary equals the kernel of the previous one by exact dimension count.
 */

#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "common.hpp"
#include "fixtures.hpp"
#include "group.hpp"
#include "gtab.hpp"

namespace sylcoh {

/* ------------------------------------------------------------ group algebra */

struct GAElement {
  std::shared_ptr<const GroupTable> group;
  BitVector coeffs;  // length |G|

  bool in_augmentation_ideal() const { return coeffs.popcount() % 2 == 0; }
};

/* Left translation by group element h on a free-module vector. */
inline BitVector left_translate(const GroupTable& g, int h, const BitVector& v) {
  const size_t m = static_cast<size_t>(g.order);
  require_internal(v.size() % m == 0, "left_translate: vector is not a free-module element");
  BitVector out(v.size());
  const std::uint16_t* row = &g.mul[static_cast<size_t>(h) * m];
  const std::vector<u64>& w = v.words();
  for (size_t wi = 0; wi < w.size(); ++wi) {
    u64 word = w[wi];
    while (word) {
      size_t p = wi * 64 + static_cast<size_t>(std::countr_zero(word));
      word &= word - 1;
      size_t x = p & (m - 1);  // |G| is a power of two
      out.set(p - x + row[x], true);
    }
  }
  return out;
}

/* Parity of the component-j block of a free-module vector (augmentation). */
inline bool block_parity(const BitVector& v, size_t j, size_t m) {
  size_t cnt = 0;
  for (size_t x = 0; x < m; ++x)
    if (v.get(j * m + x)) ++cnt;
  return cnt % 2 != 0;
}

struct FreeMap {
  size_t src_rank = 0, dst_rank = 0;
  std::shared_ptr<const GroupTable> group;
  std::vector<GAElement> entries;  // src_rank * dst_rank, row-major by source

  const GAElement& at(size_t src, size_t dst) const { return entries[src * dst_rank + dst]; }
};

/* Build a FreeMap from the identity columns of an expanded boundary matrix. */
inline FreeMap freemap_from_matrix(std::shared_ptr<const GroupTable> g, size_t src_rank,
                                   size_t dst_rank, const BitMatrix& mat) {
  const size_t m = static_cast<size_t>(g->order);
  require_internal(mat.rows() == dst_rank * m && mat.cols() == src_rank * m,
                   "freemap_from_matrix: shape mismatch");
  FreeMap fm;
  fm.src_rank = src_rank;
  fm.dst_rank = dst_rank;
  fm.group = g;
  for (size_t j = 0; j < src_rank; ++j) {
    BitVector col = mat.col_vector(j * m);  // image of gen_j (h = identity)
    for (size_t t = 0; t < dst_rank; ++t) {
      GAElement e;
      e.group = g;
      e.coeffs = BitVector(m);
      for (size_t x = 0; x < m; ++x)
        if (col.get(t * m + x)) e.coeffs.set(x, true);
      fm.entries.push_back(std::move(e));
    }
  }
  return fm;
}

/* --------------------------------------------------------------- Resolution */

struct Resolution {
  std::shared_ptr<const GroupTable> group;
  int max_degree = 0;
  std::vector<size_t> ranks;              // b_0 .. b_D
  std::vector<FreeMap> boundaries;        // [k] = boundary_k for k = 1..D ([0] unused)
  std::vector<BitMatrix> boundary_mats;   // [0] = augmentation row; [k] expanded boundary_k

  size_t dim(int k) const { return ranks[static_cast<size_t>(k)] * static_cast<size_t>(group->order); }
};

namespace detail {

inline void check_boundary(const Resolution& r, int k, size_t kernel_dim) {
  const size_t m = static_cast<size_t>(r.group->order);
  const BitMatrix& prev = r.boundary_mats[static_cast<size_t>(k - 1)];
  const BitMatrix& cur = r.boundary_mats[static_cast<size_t>(k)];
  require_internal(prev.mul(cur).is_zero(), "resolution: boundary composite is nonzero");
  for (size_t j = 0; j < r.ranks[static_cast<size_t>(k)]; ++j) {
    BitVector col = cur.col_vector(j * m);
    for (size_t t = 0; t < r.ranks[static_cast<size_t>(k - 1)]; ++t)
      require_internal(!block_parity(col, t, m),
                       "resolution: boundary entry outside the augmentation ideal");
  }
  require_internal(rank(cur) == kernel_dim,
                   "resolution: boundary image does not fill the previous kernel");
}

}  // namespace detail

inline Resolution minimal_resolution(const GroupTable& g_in, int max_degree) {
  require_usage(g_in.order >= 1 && (g_in.order & (g_in.order - 1)) == 0,
                "minimal_resolution: group order must be a power of 2");
  require_usage(g_in.order <= 512, "minimal_resolution: order cap is 512");
  require_usage(max_degree >= 0 && max_degree <= 12, "minimal_resolution: degree cap is 12");

  Resolution r;
  r.group = std::make_shared<const GroupTable>(g_in);
  const GroupTable& g = *r.group;
  const size_t m = static_cast<size_t>(g.order);
  r.max_degree = max_degree;
  r.ranks = {1};
  r.boundaries.resize(static_cast<size_t>(max_degree) + 1);
  r.boundary_mats.resize(static_cast<size_t>(max_degree) + 1);

  BitMatrix aug(1, m);
  for (size_t x = 0; x < m; ++x) aug.set(0, x, true);
  r.boundary_mats[0] = std::move(aug);

  for (int k = 1; k <= max_degree; ++k) {
    const BitMatrix& prev = r.boundary_mats[static_cast<size_t>(k - 1)];
    KernelResult kr = kernel_basis_full(prev);
    const size_t d = kr.basis.rows();

    /*
     * Span of (augmentation ideal)*(kernel) in kernel coordinates: the kernel
     * basis carries the identity pattern on free columns, so a kernel element
     * is represented by its restriction to the free columns (d bits).
     */
    RrefAccumulator rad(d);
    for (size_t h = 1; h < m; ++h)
      for (size_t t = 0; t < d; ++t) {
        BitVector w = left_translate(g, static_cast<int>(h), kr.basis.row_vector(t));
        BitVector c(d);
        c.set(t, true);  // coordinates of (1 + h) * v_t = e_t + coords(h * v_t)
        for (size_t i = 0; i < d; ++i)
          if (w.get(kr.free_cols[i])) c.flip(i);
        rad.insert(std::move(c));
      }

    /* New generators: kernel rows surviving modulo the radical span. */
    std::vector<size_t> gen_rows;
    RrefAccumulator acc = rad;
    for (size_t t = 0; t < d; ++t) {
      BitVector unit(d);
      unit.set(t, true);
      if (!acc.contains(unit)) {
        gen_rows.push_back(t);
        acc.insert(std::move(unit));
      }
    }
    require_internal(gen_rows.size() == d - rad.rank(),
                     "resolution: generator count disagrees with Nakayama count");

    const size_t b = gen_rows.size();
    r.ranks.push_back(b);
    BitMatrix mk(r.ranks[static_cast<size_t>(k - 1)] * m, b * m);
    for (size_t j = 0; j < b; ++j) {
      BitVector v = kr.basis.row_vector(gen_rows[j]);
      for (size_t h = 0; h < m; ++h)
        mk.set_col(j * m + h, left_translate(g, static_cast<int>(h), v));
    }
    r.boundary_mats[static_cast<size_t>(k)] = std::move(mk);
    r.boundaries[static_cast<size_t>(k)] =
        freemap_from_matrix(r.group, b, r.ranks[static_cast<size_t>(k - 1)],
                            r.boundary_mats[static_cast<size_t>(k)]);
    detail::check_boundary(r, k, d);
  }
  return r;
}

inline std::vector<size_t> betti(const GroupTable& g, int max_degree) {
  return minimal_resolution(g, max_degree).ranks;
}

/* ------------------------------------------------- elementary (Z/2)^r model */

/*
 * Monomials of total degree k in r variables, ordered by descending exponent
 * of x1, then x2, and so on: e.g. for r = 2, k = 2: x1^2, x1*x2, x2^2.
 */
inline std::vector<std::vector<int>> monomials_of_degree(int r, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(static_cast<size_t>(r), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == r - 1) {
      cur[static_cast<size_t>(pos)] = left;
      out.push_back(cur);
      return;
    }
    for (int a = left; a >= 0; --a) {
      cur[static_cast<size_t>(pos)] = a;
      self(self, pos + 1, left - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

inline std::string monomial_label(const std::vector<int>& expo) {
  const int r = static_cast<int>(expo.size());
  std::string s;
  for (int i = 0; i < r; ++i) {
    if (expo[static_cast<size_t>(i)] == 0) continue;
    if (!s.empty()) s += "*";
    s += (r == 1) ? "x" : "x" + std::to_string(i + 1);
    if (expo[static_cast<size_t>(i)] > 1) s += "^" + std::to_string(expo[static_cast<size_t>(i)]);
  }
  return s.empty() ? "1" : s;
}

struct ElementaryResolution {
  Resolution res;  // over (Z/2)^r with index = bit mask
  int r = 0;
  std::vector<std::vector<std::vector<int>>> exponents;  // [k][gen] = exponent tuple
  std::vector<std::vector<std::string>> labels;          // [k][gen] = monomial label
};

/*
 * The r-fold tensor power of the period-1 resolution of Z/2: the degree-k
 * module is free on the degree-k monomials and the boundary is
 * d(x^a) = sum_i (1 + t_i) x^(a - e_i), where t_i is the i-th group generator.
 */
inline ElementaryResolution elementary_resolution(int r, int max_degree) {
  require_usage(r >= 1 && r <= 4, "elementary_resolution: rank must be in [1, 4]");
  require_usage(max_degree >= 0 && max_degree <= 12, "elementary_resolution: degree cap is 12");

  ElementaryResolution e;
  e.r = r;
  Resolution& res = e.res;
  res.group = std::make_shared<const GroupTable>(elementary_abelian_group(r));
  const GroupTable& g = *res.group;
  const size_t m = static_cast<size_t>(g.order);
  res.max_degree = max_degree;
  res.boundaries.resize(static_cast<size_t>(max_degree) + 1);
  res.boundary_mats.resize(static_cast<size_t>(max_degree) + 1);

  BitMatrix aug(1, m);
  for (size_t x = 0; x < m; ++x) aug.set(0, x, true);
  res.boundary_mats[0] = std::move(aug);

  for (int k = 0; k <= max_degree; ++k) {
    e.exponents.push_back(monomials_of_degree(r, k));
    std::vector<std::string> lbl;
    for (const auto& a : e.exponents.back()) lbl.push_back(monomial_label(a));
    e.labels.push_back(std::move(lbl));
    res.ranks.push_back(e.exponents.back().size());
  }

  for (int k = 1; k <= max_degree; ++k) {
    const auto& src = e.exponents[static_cast<size_t>(k)];
    const auto& dst = e.exponents[static_cast<size_t>(k - 1)];
    auto dst_index = [&](const std::vector<int>& a) -> size_t {
      for (size_t t = 0; t < dst.size(); ++t)
        if (dst[t] == a) return t;
      throw internal_error("elementary_resolution: missing monomial");
    };
    BitMatrix mk(dst.size() * m, src.size() * m);
    for (size_t j = 0; j < src.size(); ++j) {
      BitVector col(dst.size() * m);
      for (int i = 0; i < r; ++i) {
        if (src[j][static_cast<size_t>(i)] == 0) continue;
        std::vector<int> a = src[j];
        --a[static_cast<size_t>(i)];
        size_t t = dst_index(a);
        col.flip(t * m + 0);                          // 1 * x^(a - e_i)
        col.flip(t * m + (size_t(1) << i));           // t_i * x^(a - e_i)
      }
      for (size_t h = 0; h < m; ++h)
        mk.set_col(j * m + h, left_translate(g, static_cast<int>(h), col));
    }
    res.boundary_mats[static_cast<size_t>(k)] = std::move(mk);
    res.boundaries[static_cast<size_t>(k)] = freemap_from_matrix(
        res.group, src.size(), dst.size(), res.boundary_mats[static_cast<size_t>(k)]);
    size_t expected_kernel =
        res.dim(k - 1) - ((k >= 2) ? rank(res.boundary_mats[static_cast<size_t>(k - 1)]) : 1);
    detail::check_boundary(res, k, expected_kernel);
  }
  return e;
}

/* ------------------------------------------------------------- binary cache */

constexpr u64 kResolutionCacheMagic = 0x53594c5245533101ull;  // "SYLRES1" + version

inline void dump_resolution(const Resolution& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  require_usage(out.good(), "cannot open cache file for writing: " + path);
  auto put_u64 = [&](u64 v) { out.write(reinterpret_cast<const char*>(&v), 8); };
  put_u64(kResolutionCacheMagic);
  put_u64(fnv1a(write_gtab(*r.group)));
  put_u64(static_cast<u64>(r.group->order));
  put_u64(static_cast<u64>(r.max_degree));
  for (size_t v : r.ranks) put_u64(static_cast<u64>(v));
  for (int k = 1; k <= r.max_degree; ++k) {
    const BitMatrix& m = r.boundary_mats[static_cast<size_t>(k)];
    put_u64(static_cast<u64>(m.rows()));
    put_u64(static_cast<u64>(m.cols()));
    for (size_t row = 0; row < m.rows(); ++row)
      out.write(reinterpret_cast<const char*>(m.row(row)),
                static_cast<std::streamsize>(8 * m.words_per_row()));
  }
  require_usage(out.good(), "cache write failed: " + path);
}

inline std::optional<Resolution> load_resolution(const std::string& path, const GroupTable& g,
                                                 int max_degree) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) return std::nullopt;
  auto get_u64 = [&](u64& v) { in.read(reinterpret_cast<char*>(&v), 8); return in.good(); };
  u64 magic = 0, hash = 0, order = 0, deg = 0;
  if (!get_u64(magic) || magic != kResolutionCacheMagic) return std::nullopt;
  if (!get_u64(hash) || hash != fnv1a(write_gtab(g))) return std::nullopt;
  if (!get_u64(order) || order != static_cast<u64>(g.order)) return std::nullopt;
  if (!get_u64(deg) || deg != static_cast<u64>(max_degree)) return std::nullopt;

  Resolution r;
  r.group = std::make_shared<const GroupTable>(g);
  r.max_degree = max_degree;
  const size_t m = static_cast<size_t>(g.order);
  for (int k = 0; k <= max_degree; ++k) {
    u64 v = 0;
    if (!get_u64(v)) return std::nullopt;
    r.ranks.push_back(static_cast<size_t>(v));
  }
  if (r.ranks[0] != 1) return std::nullopt;
  r.boundaries.resize(static_cast<size_t>(max_degree) + 1);
  r.boundary_mats.resize(static_cast<size_t>(max_degree) + 1);
  BitMatrix aug(1, m);
  for (size_t x = 0; x < m; ++x) aug.set(0, x, true);
  r.boundary_mats[0] = std::move(aug);
  for (int k = 1; k <= max_degree; ++k) {
    u64 rows = 0, cols = 0;
    if (!get_u64(rows) || !get_u64(cols)) return std::nullopt;
    if (rows != r.ranks[static_cast<size_t>(k - 1)] * m || cols != r.ranks[static_cast<size_t>(k)] * m)
      return std::nullopt;
    BitMatrix mat(static_cast<size_t>(rows), static_cast<size_t>(cols));
    for (size_t row = 0; row < mat.rows(); ++row) {
      in.read(reinterpret_cast<char*>(mat.row(row)),
              static_cast<std::streamsize>(8 * mat.words_per_row()));
      if (!in.good()) return std::nullopt;
    }
    /* Cheap integrity checks; a hash mismatch above already rules out skew. */
    for (size_t j = 0; j < r.ranks[static_cast<size_t>(k)]; ++j) {
      BitVector col = mat.col_vector(j * m);
      for (size_t t = 0; t < r.ranks[static_cast<size_t>(k - 1)]; ++t)
        if (block_parity(col, t, m)) return std::nullopt;
    }
    r.boundary_mats[static_cast<size_t>(k)] = std::move(mat);
    r.boundaries[static_cast<size_t>(k)] =
        freemap_from_matrix(r.group, r.ranks[static_cast<size_t>(k)],
                            r.ranks[static_cast<size_t>(k - 1)],
                            r.boundary_mats[static_cast<size_t>(k)]);
  }
  return r;
}

/*
 * Build a minimal resolution, consulting the binary cache directory named by
 * the SYLCOH_CACHE_DIR environment variable (no caching when unset).
 */
inline Resolution cached_minimal_resolution(const GroupTable& g, int max_degree) {
  const char* dir = std::getenv("SYLCOH_CACHE_DIR");
  if (dir == nullptr || *dir == '\0') return minimal_resolution(g, max_degree);
  std::ostringstream name;
  name << dir << "/res_" << std::hex << fnv1a(write_gtab(g)) << std::dec << "_d" << max_degree
       << ".bin";
  if (auto cached = load_resolution(name.str(), g, max_degree)) return std::move(*cached);
  Resolution r = minimal_resolution(g, max_degree);
  try {
    dump_resolution(r, name.str());
  } catch (const usage_error&) {
    /* A read-only or missing cache directory disables caching silently. */
  }
  return r;
}

}  // namespace sylcoh
