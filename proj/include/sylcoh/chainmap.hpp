#pragma once

/*
 * Chain maps between minimal resolutions, and the two cohomology operations
 * built from them:
 *
 *  - restriction_matrices: lifts the identity of F2 to a comparison chain map
 *    from the elementary resolution of a central elementary abelian subgroup
 *    Z <= G into the resolution of G (viewed over F2[Z]), then reads off the
 *    restriction H^k(G) -> H^k(Z) in the canonical bases (resolution
 *    generators on the G side, monomials on the Z side).
 *
 *  - cup_lift / cup_action: lifts a degree-d cohomology class to a chain
 *    self-map of the resolution shifted by d and reads off the induced maps
 *    H^k -> H^(k+d) (left multiplication by the class).
 *
 * Because the resolutions are minimal, cochain spaces equal their cohomology
 * in every degree, so the matrices produced are the actual induced maps, not
 * representatives. Lift independence is nevertheless verified numerically:
 * every lift step is re-run with a perturbed solution (a kernel vector of the
 * boundary added) and the induced matrices are required to agree.
 *
 * All solved lifts take the canonical solution with free coordinates zero,
 * so repeated runs produce identical matrices.
 */

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "common.hpp"
#include "group.hpp"
#include "resolution.hpp"

namespace sylcoh {

/* Per-degree factored solvers for the boundary matrices of one resolution. */
class BoundarySolvers {
 public:
  explicit BoundarySolvers(const Resolution& p)
      : p_(&p), solvers_(p.boundary_mats.size()), kernel_(p.boundary_mats.size()) {}

  const Resolution& resolution() const { return *p_; }

  const LinearSolver& at(int k) {
    auto& slot = solvers_[static_cast<size_t>(k)];
    if (!slot) slot = std::make_unique<LinearSolver>(p_->boundary_mats[static_cast<size_t>(k)]);
    return *slot;
  }

  /* Some nonzero kernel vector of boundary k, if the kernel is nonzero. */
  const std::optional<BitVector>& kernel_vector(int k) {
    auto& slot = kernel_[static_cast<size_t>(k)];
    if (!slot) {
      const LinearSolver& s = at(k);
      const BitMatrix& m = p_->boundary_mats[static_cast<size_t>(k)];
      std::optional<BitVector> v;
      if (s.rank() < m.cols()) {
        std::vector<bool> is_pivot(m.cols(), false);
        for (size_t p : s.pivots()) is_pivot[p] = true;
        size_t f = 0;
        while (is_pivot[f]) ++f;
        BitVector x = *s.solve(m.col_vector(f));
        x.flip(f);
        require_internal(m.mul(x).is_zero() && !x.is_zero(),
                         "BoundarySolvers: bad kernel vector");
        v = std::move(x);
      }
      slot = std::move(v);
    }
    return *slot;
  }

 private:
  const Resolution* p_;
  std::vector<std::unique_ptr<LinearSolver>> solvers_;
  std::vector<std::optional<std::optional<BitVector>>> kernel_;
};

/*
 * A chain map: blocks[k] carries source degree k + degree_shift to target
 * degree k, commuting with the boundaries wherever both blocks exist.
 */
struct ChainMap {
  const Resolution* source = nullptr;
  const Resolution* target = nullptr;
  int degree_shift = 0;
  std::vector<BitMatrix> blocks;
};

inline void check_chain_map(const ChainMap& cm) {
  for (size_t k = 1; k < cm.blocks.size(); ++k) {
    const BitMatrix& left = cm.target->boundary_mats[k].mul(cm.blocks[k]);
    const BitMatrix& right = cm.blocks[k - 1].mul(
        cm.source->boundary_mats[k + static_cast<size_t>(cm.degree_shift)]);
    require_internal(left == right, "chain map does not commute with boundaries");
  }
}

/* ---------------------------------------------------------------- restriction */

struct RestrictionData {
  ElementaryResolution elem;     // model resolution for Z as (Z/2)^r
  std::vector<int> z_basis;      // independent generators of Z inside G
  std::vector<int> z_embed;      // bit mask over z_basis -> element of G
  std::vector<BitMatrix> psi;    // comparison blocks: psi[k] is dim_G(k) x dim_Z(k)
  std::vector<BitMatrix> res;    // res[k]: b_Z(k) x b_G(k), restriction on cohomology
};

/*
 * Restriction to a central elementary abelian subgroup, given as the member
 * list of Z in the group of p. The comparison map is lifted degree by degree
 * (canonical solutions) and extended F2[Z]-linearly via the embedded
 * translations; commutation with the boundaries is asserted in every degree.
 */
inline RestrictionData restriction_matrices(const Resolution& p, BoundarySolvers& solvers,
                                            const std::vector<int>& z_members) {
  const GroupTable& g = *p.group;
  const size_t m = static_cast<size_t>(g.order);
  require_usage(z_members.size() >= 2, "restriction: subgroup must be nontrivial");
  require_usage(is_elementary_abelian(g, z_members),
                "restriction: subgroup is not elementary abelian");
  for (int z : z_members)
    for (int x = 0; x < g.order; ++x)
      require_usage(commute(g, z, x), "restriction: subgroup is not central");

  RestrictionData out;

  /* Greedy independent generators (deterministic: ascending member order). */
  std::vector<int> sorted = z_members;
  std::sort(sorted.begin(), sorted.end());
  std::vector<int> closure = {0};
  for (int x : sorted) {
    if (std::find(closure.begin(), closure.end(), x) != closure.end()) continue;
    out.z_basis.push_back(x);
    std::vector<int> bigger = closure;
    for (int c : closure) bigger.push_back(g.at(c, x));
    closure = std::move(bigger);
  }
  const int r = static_cast<int>(out.z_basis.size());
  require_internal(size_t(1) << r == z_members.size(), "restriction: basis does not span");

  out.z_embed.assign(size_t(1) << r, 0);
  for (size_t mask = 0; mask < out.z_embed.size(); ++mask) {
    int e = 0;
    for (int i = 0; i < r; ++i)
      if (mask >> i & 1) e = g.at(e, out.z_basis[static_cast<size_t>(i)]);
    out.z_embed[mask] = e;
  }
  for (size_t a = 0; a < out.z_embed.size(); ++a)
    for (size_t b = 0; b < out.z_embed.size(); ++b)
      require_internal(out.z_embed[a ^ b] == g.at(out.z_embed[a], out.z_embed[b]),
                       "restriction: embedding is not a homomorphism");

  out.elem = elementary_resolution(r, p.max_degree);
  const Resolution& e = out.elem.res;
  const size_t zn = size_t(1) << r;

  /* Degree 0: identity of F2 lifted to 1 |-> 1, extended over Z. */
  BitMatrix psi0(p.dim(0), e.dim(0));
  for (size_t mask = 0; mask < zn; ++mask)
    psi0.set(static_cast<size_t>(out.z_embed[mask]), mask, true);
  {
    BitMatrix top = p.boundary_mats[0].mul(psi0);
    require_internal(top == e.boundary_mats[0], "restriction: augmentations disagree");
  }
  out.psi.push_back(std::move(psi0));

  for (int k = 1; k <= p.max_degree; ++k) {
    const size_t be = e.ranks[static_cast<size_t>(k)];
    BitMatrix gen_bnd(e.dim(k - 1), be);
    for (size_t mu = 0; mu < be; ++mu)
      gen_bnd.set_col(mu, e.boundary_mats[static_cast<size_t>(k)].col_vector(mu * zn));
    BitMatrix rhs = out.psi.back().mul(gen_bnd);
    std::vector<std::optional<BitVector>> sols = solvers.at(k).solve_cols(rhs);

    BitMatrix psik(p.dim(k), e.dim(k));
    for (size_t mu = 0; mu < be; ++mu) {
      require_internal(sols[mu].has_value(), "restriction: lift step is unsolvable");
      for (size_t mask = 0; mask < zn; ++mask)
        psik.set_col(mu * zn + mask,
                     left_translate(g, out.z_embed[mask], *sols[mu]));
    }
    out.psi.push_back(std::move(psik));
  }

  ChainMap cm{&e, &p, 0, {}};
  cm.blocks = out.psi;
  check_chain_map(cm);

  for (int k = 0; k <= p.max_degree; ++k) {
    const size_t be = e.ranks[static_cast<size_t>(k)];
    const size_t bp = p.ranks[static_cast<size_t>(k)];
    BitMatrix rk(be, bp);
    for (size_t mu = 0; mu < be; ++mu) {
      BitVector col = out.psi[static_cast<size_t>(k)].col_vector(mu * zn);
      for (size_t j = 0; j < bp; ++j)
        if (block_parity(col, j, m)) rk.set(mu, j, true);
    }
    out.res.push_back(std::move(rk));
  }
  return out;
}

inline RestrictionData restriction_matrices(const Resolution& p,
                                            const std::vector<int>& z_members) {
  BoundarySolvers solvers(p);
  return restriction_matrices(p, solvers, z_members);
}

/* ----------------------------------------------------------------- cup action */

struct CupLift {
  int degree_shift = 0;
  std::vector<BitMatrix> phi;      // phi[j]: dim(j) x dim(j + d), j = 0..D-d
  std::vector<BitMatrix> induced;  // induced[k]: b_(k+d) x b_k, left product by the class
};

namespace detail {

/* One lift pass; when perturb is set, every solved column gets a kernel
 * vector of the matching boundary added, exhibiting a different lift. */
inline std::vector<BitMatrix> cup_lift_pass(const Resolution& p, BoundarySolvers& solvers,
                                            int d, const BitVector& cls, bool perturb) {
  const GroupTable& g = *p.group;
  const size_t m = static_cast<size_t>(g.order);
  const size_t bd = p.ranks[static_cast<size_t>(d)];

  std::vector<BitMatrix> phi;
  BitMatrix phi0(p.dim(0), p.dim(d));
  for (size_t j = 0; j < bd; ++j)
    if (cls.get(j))
      for (size_t h = 0; h < m; ++h) phi0.set(h, j * m + h, true);
  phi.push_back(std::move(phi0));

  for (int j = 1; j + d <= p.max_degree; ++j) {
    const BitMatrix& bnd = p.boundary_mats[static_cast<size_t>(d + j)];
    const size_t bsrc = p.ranks[static_cast<size_t>(d + j)];
    BitMatrix gen_bnd(p.dim(d + j - 1), bsrc);
    for (size_t t = 0; t < bsrc; ++t) gen_bnd.set_col(t, bnd.col_vector(t * m));
    BitMatrix rhs = phi.back().mul(gen_bnd);
    std::vector<std::optional<BitVector>> sols = solvers.at(j).solve_cols(rhs);

    const std::optional<BitVector>& kv =
        perturb ? solvers.kernel_vector(j) : std::optional<BitVector>{};
    BitMatrix phj(p.dim(j), p.dim(d + j));
    for (size_t t = 0; t < bsrc; ++t) {
      require_internal(sols[t].has_value(), "cup lift: step is unsolvable");
      BitVector x = std::move(*sols[t]);
      if (kv) x.xor_with(*kv);
      for (size_t h = 0; h < m; ++h)
        phj.set_col(t * m + h, left_translate(g, static_cast<int>(h), x));
    }
    phi.push_back(std::move(phj));
  }

  ChainMap cm{&p, &p, d, {}};
  cm.blocks = phi;
  check_chain_map(cm);
  return phi;
}

inline std::vector<BitMatrix> induced_from_phi(const Resolution& p, int d,
                                               const std::vector<BitMatrix>& phi) {
  const size_t m = static_cast<size_t>(p.group->order);
  std::vector<BitMatrix> induced;
  for (int k = 0; k + d <= p.max_degree; ++k) {
    const size_t bup = p.ranks[static_cast<size_t>(k + d)];
    const size_t bk = p.ranks[static_cast<size_t>(k)];
    BitMatrix nk(bup, bk);
    for (size_t tp = 0; tp < bup; ++tp) {
      BitVector col = phi[static_cast<size_t>(k)].col_vector(tp * m);
      for (size_t t = 0; t < bk; ++t)
        if (block_parity(col, t, m)) nk.set(tp, t, true);
    }
    induced.push_back(std::move(nk));
  }
  return induced;
}

}  // namespace detail

/*
 * Chain-level lift of a degree-d class (coordinates over the degree-d
 * generators; minimality makes every such vector a cocycle) and the induced
 * left-multiplication maps H^k -> H^(k+d). A second, perturbed lift is
 * computed and must induce identical matrices.
 */
inline CupLift cup_lift(const Resolution& p, BoundarySolvers& solvers, int d,
                        const BitVector& cls, bool verify_independence = true) {
  require_usage(d >= 0 && d <= p.max_degree, "cup_lift: degree out of range");
  require_usage(cls.size() == p.ranks[static_cast<size_t>(d)],
                "cup_lift: class has wrong coordinate count");

  CupLift out;
  out.degree_shift = d;
  if (d == 0) {
    const bool one = cls.get(0);
    for (int j = 0; j <= p.max_degree; ++j) {
      size_t n = p.dim(j);
      out.phi.push_back(one ? BitMatrix::identity(n) : BitMatrix(n, n));
      size_t b = p.ranks[static_cast<size_t>(j)];
      out.induced.push_back(one ? BitMatrix::identity(b) : BitMatrix(b, b));
    }
    return out;
  }

  out.phi = detail::cup_lift_pass(p, solvers, d, cls, false);
  out.induced = detail::induced_from_phi(p, d, out.phi);

  if (verify_independence) {
    std::vector<BitMatrix> phi2 = detail::cup_lift_pass(p, solvers, d, cls, true);
    std::vector<BitMatrix> induced2 = detail::induced_from_phi(p, d, phi2);
    for (size_t k = 0; k < out.induced.size(); ++k)
      require_internal(out.induced[k] == induced2[k],
                       "cup action differs between two lifts");
  }
  return out;
}

/* Induced map H^k -> H^(k+d) of left multiplication by a degree-d class. */
inline BitMatrix cup_action(const Resolution& p, int d, const BitVector& cls, int k) {
  require_usage(k >= 0 && k + d <= p.max_degree, "cup_action: target degree out of range");
  BoundarySolvers solvers(p);
  return cup_lift(p, solvers, d, cls).induced[static_cast<size_t>(k)];
}

/* -------------------------------------------- polynomial side multiplication */

inline size_t monomial_index(const ElementaryResolution& e, int degree,
                             const std::vector<int>& expo) {
  const auto& list = e.exponents[static_cast<size_t>(degree)];
  for (size_t i = 0; i < list.size(); ++i)
    if (list[i] == expo) return i;
  throw internal_error("monomial_index: monomial not found");
}

/*
 * Matrix of multiplication by the monomial x^expo on the polynomial ring
 * F2[x1..xr], from the degree-k monomial basis to degree k + |expo|.
 */
inline BitMatrix monomial_multiplication_matrix(const ElementaryResolution& e,
                                                const std::vector<int>& expo, int k) {
  int d = 0;
  for (int a : expo) d += a;
  require_internal(k >= 0 && k + d <= e.res.max_degree,
                   "monomial_multiplication_matrix: degree out of range");
  const auto& src = e.exponents[static_cast<size_t>(k)];
  const size_t rows = e.res.ranks[static_cast<size_t>(k + d)];
  BitMatrix out(rows, src.size());
  for (size_t j = 0; j < src.size(); ++j) {
    std::vector<int> sum = src[j];
    for (size_t i = 0; i < sum.size(); ++i) sum[i] += expo[i];
    out.set(monomial_index(e, k + d, sum), j, true);
  }
  return out;
}

}  // namespace sylcoh
