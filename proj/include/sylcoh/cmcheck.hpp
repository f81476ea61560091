#pragma once

/*
 * Cohen-Macaulay certification of mod-2 cohomology, truncated at a degree
 * bound D, for a finite 2-group G:
 *
 *  1. restrict to the elementary part Z of the center and find, for each
 *     polynomial generator x_i of H*(Z), the least l_i with x_i^(2^l_i) in
 *     the image of restriction (a Duflot datum: degree 2^l_i plus a chosen
 *     preimage);
 *  2. test that the preimages form a regular sequence up to degree D:
 *     multiplication by the i-th class must be injective on the quotient of
 *     H*(G) by the ideal of its predecessors, in every degree that stays
 *     within the bound;
 *  3. cross-check the surviving quotient dimensions against the Hilbert
 *     series identity  sum b_k t^k = (sum q_k t^k) / prod (1 - t^(2^l_i)),
 *     compared coefficientwise up to D - max degree.
 *
 * When the sequence reaches the 2-rank of G (the Krull dimension of the
 * cohomology ring), the run certifies the Cohen-Macaulay property up to
 * degree D. Internal cross-checks abort the run rather than report: the
 * restriction must be a ring map on every product taken, step verdicts must
 * be independent of the preimage choice and (for up to three classes) of the
 * order of the sequence, and a fully regular sequence must pass the Hilbert
 * identity.
 */

#include <algorithm>
#include <chrono>
#include <optional>
#include <string>
#include <vector>

#include "bitmatrix.hpp"
#include "chainmap.hpp"
#include "common.hpp"
#include "fixtures.hpp"
#include "group.hpp"
#include "resolution.hpp"
#include "sylow.hpp"

namespace sylcoh {

/* ------------------------------------------------------------ Duflot data */

struct DuflotDatum {
  int index = 0;       // which polynomial generator x_i (1-based)
  int l = 0;           // least l with x_i^(2^l) in the restriction image
  int degree = 1;      // 2^l
  BitVector preimage;  // class over the degree-(2^l) generators of H*(G)
};

/*
 * Least l >= 0 such that x_index^(2^l) lies in the image of the restriction,
 * together with the canonical preimage; nullopt when no power fits under the
 * degree bound (to be reported as undetermined, never as a failure).
 */
inline std::optional<DuflotDatum> find_power_in_image(const RestrictionData& rd, int index,
                                                      int max_degree) {
  const int r = rd.elem.r;
  require_usage(index >= 1 && index <= r, "find_power_in_image: generator index out of range");
  for (int l = 0; (1 << l) <= max_degree; ++l) {
    const int deg = 1 << l;
    std::vector<int> expo(static_cast<size_t>(r), 0);
    expo[static_cast<size_t>(index - 1)] = deg;
    BitVector target(rd.elem.res.ranks[static_cast<size_t>(deg)]);
    target.set(monomial_index(rd.elem, deg, expo), true);
    if (auto sol = solve(rd.res[static_cast<size_t>(deg)], target)) {
      require_internal(rd.res[static_cast<size_t>(deg)].mul(*sol) == target,
                       "find_power_in_image: preimage does not restrict to the power");
      return DuflotDatum{index, l, deg, std::move(*sol)};
    }
  }
  return std::nullopt;
}

struct DuflotSubalgebra {
  bool complete = false;            // every generator received a datum
  std::vector<DuflotDatum> data;    // in generator order, only the found ones
  std::vector<int> missing;         // generator indices with no power in reach
};

/* One Duflot datum per polynomial generator of the central subgroup. */
inline DuflotSubalgebra duflot_subalgebra(const RestrictionData& rd, int max_degree) {
  DuflotSubalgebra out;
  for (int i = 1; i <= rd.elem.r; ++i) {
    if (auto d = find_power_in_image(rd, i, max_degree))
      out.data.push_back(std::move(*d));
    else
      out.missing.push_back(i);
  }
  out.complete = out.missing.empty();
  return out;
}

/* ----------------------------------------------------- regular sequence test */

struct RegularStepResult {
  bool pass = true;
  int witness_degree = -1;  // first degree where injectivity fails
  BitVector witness;        // nonzero class killed into the ideal (on failure)
};

struct RegularSequenceResult {
  bool all_pass = true;
  std::vector<RegularStepResult> steps;  // one entry per class, in order
  std::vector<size_t> quotient_dims;     // dim of H/(ideal) per degree 0..D
};

namespace detail {

inline std::vector<size_t> accumulator_free_positions(const RrefAccumulator& acc) {
  std::vector<bool> pivot(acc.width(), false);
  for (const auto& [p, row] : acc.rows()) pivot[p] = true;
  std::vector<size_t> out;
  for (size_t c = 0; c < acc.width(); ++c)
    if (!pivot[c]) out.push_back(c);
  return out;
}

/*
 * Run the quotient-injectivity tests for the classes in the given order,
 * reusing prebuilt cup lifts. order[i] indexes into data/lifts.
 */
inline RegularSequenceResult regular_sequence_core(const Resolution& p,
                                                   const std::vector<DuflotDatum>& data,
                                                   const std::vector<CupLift>& lifts,
                                                   const std::vector<size_t>& order) {
  const int max_degree = p.max_degree;
  RegularSequenceResult out;
  std::vector<RrefAccumulator> ideal;
  for (int k = 0; k <= max_degree; ++k)
    ideal.emplace_back(p.ranks[static_cast<size_t>(k)]);

  for (size_t oi = 0; oi < order.size(); ++oi) {
    const DuflotDatum& zeta = data[order[oi]];
    const CupLift& lift = lifts[order[oi]];
    const int d = zeta.degree;
    RegularStepResult step;

    for (int k = 0; k + d <= max_degree; ++k) {
      const std::vector<size_t> frees =
          accumulator_free_positions(ideal[static_cast<size_t>(k)]);
      if (frees.empty()) continue;
      const BitMatrix& act = lift.induced[static_cast<size_t>(k)];
      BitMatrix q(p.ranks[static_cast<size_t>(k + d)], frees.size());
      for (size_t c = 0; c < frees.size(); ++c)
        q.set_col(c, ideal[static_cast<size_t>(k + d)].reduce(act.col_vector(frees[c])));
      BitMatrix ker = kernel_basis(q);
      if (ker.rows() > 0) {
        step.pass = false;
        step.witness_degree = k;
        BitVector w(p.ranks[static_cast<size_t>(k)]);
        BitVector c = ker.row_vector(0);
        for (size_t idx = 0; idx < frees.size(); ++idx)
          if (c.get(idx)) w.flip(frees[idx]);
        step.witness = std::move(w);
        out.all_pass = false;
        break;
      }
    }

    /* Absorb the ideal generated by this class before the next step. */
    for (int k = 0; k + d <= max_degree; ++k) {
      const BitMatrix& act = lift.induced[static_cast<size_t>(k)];
      for (size_t c = 0; c < act.cols(); ++c)
        ideal[static_cast<size_t>(k + d)].insert(act.col_vector(c));
    }
    out.steps.push_back(std::move(step));
  }

  for (int k = 0; k <= max_degree; ++k)
    out.quotient_dims.push_back(p.ranks[static_cast<size_t>(k)] -
                                ideal[static_cast<size_t>(k)].rank());
  return out;
}

}  // namespace detail

/*
 * Regular-sequence test in the listed order, with the permutation
 * cross-check for up to three classes: every order must leave the same
 * final quotient dimensions.
 */
inline RegularSequenceResult regular_sequence_test(const Resolution& p, BoundarySolvers& solvers,
                                                   const std::vector<DuflotDatum>& data) {
  std::vector<CupLift> lifts;
  for (const DuflotDatum& d : data)
    lifts.push_back(cup_lift(p, solvers, d.degree, d.preimage));

  std::vector<size_t> order(data.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  RegularSequenceResult main = detail::regular_sequence_core(p, data, lifts, order);

  if (data.size() >= 2 && data.size() <= 3) {
    std::vector<size_t> perm = order;
    while (std::next_permutation(perm.begin(), perm.end())) {
      RegularSequenceResult alt = detail::regular_sequence_core(p, data, lifts, perm);
      require_internal(alt.quotient_dims == main.quotient_dims,
                       "regular sequence: quotient dimensions depend on the order");
    }
  }
  return main;
}

/* ------------------------------------------------------------- Hilbert check */

/*
 * Coefficientwise comparison of sum b_k t^k with
 * (sum q_k t^k) * prod_i 1/(1 - t^(d_i)), truncated at D - max(d_i). The
 * geometric factors are expanded by the integer prefix recurrence
 * c_k += c_(k-d).
 */
inline bool hilbert_check(const std::vector<size_t>& betti_ranks, const std::vector<int>& degrees,
                          const std::vector<size_t>& quotient_dims, int max_degree) {
  require_usage(static_cast<int>(betti_ranks.size()) > max_degree &&
                    static_cast<int>(quotient_dims.size()) > max_degree,
                "hilbert_check: need coefficients up to the degree bound");
  int maxd = 0;
  for (int d : degrees) {
    require_usage(d >= 1, "hilbert_check: degrees must be positive");
    maxd = std::max(maxd, d);
  }
  std::vector<long long> c(quotient_dims.begin(),
                           quotient_dims.begin() + max_degree + 1);
  for (int d : degrees)
    for (int k = d; k <= max_degree; ++k)
      c[static_cast<size_t>(k)] += c[static_cast<size_t>(k - d)];
  for (int k = 0; k + maxd <= max_degree; ++k)
    if (c[static_cast<size_t>(k)] != static_cast<long long>(betti_ranks[static_cast<size_t>(k)]))
      return false;
  return true;
}

/* ------------------------------------------------------------------ pipeline */

struct CMReport {
  std::string family;        // "psu3", "sz", or "fixture"
  std::string fixture_name;  // set when family == "fixture"
  int n = 0;                 // tower parameter (0 for fixtures)
  int max_degree = 8;

  int group_order = 0;
  int center_order = 0;
  int center_rank = 0;  // rank of the elementary part of the center
  int two_rank = 0;
  int involution_count = 0;
  bool civp = false;

  std::vector<LemmaCheck> lemmas;  // structural checks (families only)

  std::vector<size_t> betti;

  bool duflot_complete = false;
  std::vector<DuflotDatum> duflot;
  std::vector<int> duflot_missing;
  int common_l = -1;  // max of the per-generator l_i when complete

  bool regular_ran = false;
  RegularSequenceResult regular;

  bool hilbert_ran = false;
  bool hilbert_ok = false;

  std::string verdict;  // cm-certified | inconclusive | undetermined | failed
  std::vector<std::string> notes;

  std::vector<std::pair<std::string, long long>> timings_ms;
};

/*
 * Full pipeline on an explicit group table. The verdict is
 *  - "failed" when some regularity step has a witness,
 *  - "undetermined" when some central generator has no 2-power in the
 *    restriction image below the degree bound,
 *  - "cm-certified" when the full sequence is regular, the Hilbert identity
 *    holds, and the sequence length equals the 2-rank (Krull dimension),
 *  - "inconclusive" otherwise (the route cannot reach the Krull dimension).
 */
inline CMReport cm_check_group(const GroupTable& g, int max_degree) {
  require_usage(max_degree >= 1 && max_degree <= 12, "cm_check_group: degree cap is 12");
  require_usage(g.order >= 2, "cm_check_group: the group must be nontrivial");
  using clock = std::chrono::steady_clock;
  auto stamp = [start = clock::now()]() mutable {
    auto now = clock::now();
    long long ms = std::chrono::duration_cast<std::chrono::milliseconds>(now - start).count();
    start = now;
    return ms;
  };

  CMReport rep;
  rep.max_degree = max_degree;
  rep.group_order = g.order;
  Subgroup ctr = center(g);
  rep.center_order = static_cast<int>(ctr.members.size());
  std::vector<int> socle;
  for (int x : ctr.members)
    if (g.at(x, x) == 0) socle.push_back(x);
  rep.center_rank = 0;
  while ((size_t(1) << rep.center_rank) < socle.size()) ++rep.center_rank;
  require_internal(size_t(1) << rep.center_rank == socle.size(),
                   "cm_check_group: socle size is not a power of two");
  rep.two_rank = two_rank(g);
  rep.involution_count = static_cast<int>(involutions(g).size());
  rep.civp = central_involution_property(g);
  rep.timings_ms.emplace_back("metadata", stamp());

  if (!rep.civp)
    rep.notes.push_back(
        "not every involution is central, so the sufficient condition behind the "
        "certification route does not hold for this group");
  if (rep.center_rank < rep.two_rank)
    rep.notes.push_back(
        "a Duflot sequence from the center cannot reach the Krull dimension: center rank " +
        std::to_string(rep.center_rank) + " is below the 2-rank " +
        std::to_string(rep.two_rank));

  Resolution p = cached_minimal_resolution(g, max_degree);
  rep.betti = p.ranks;
  rep.timings_ms.emplace_back("resolution", stamp());

  BoundarySolvers solvers(p);
  RestrictionData rd = restriction_matrices(p, solvers, socle);
  rep.timings_ms.emplace_back("restriction", stamp());

  DuflotSubalgebra duf = duflot_subalgebra(rd, max_degree);
  rep.duflot_complete = duf.complete;
  rep.duflot = duf.data;
  rep.duflot_missing = duf.missing;
  rep.timings_ms.emplace_back("duflot", stamp());

  if (!duf.complete) {
    for (int i : duf.missing)
      rep.notes.push_back("no 2-power of central generator x" + std::to_string(i) +
                          " restricts from H*(G) up to degree " + std::to_string(max_degree) +
                          "; raise the degree bound");
    rep.verdict = "undetermined";
    return rep;
  }
  rep.common_l = 0;
  for (const DuflotDatum& d : duf.data) rep.common_l = std::max(rep.common_l, d.l);

  /* Cup lifts, shared by the main run and all cross-checks. */
  std::vector<CupLift> lifts;
  for (const DuflotDatum& d : duf.data)
    lifts.push_back(cup_lift(p, solvers, d.degree, d.preimage));

  /* Restriction must be a ring map on every product taken below. */
  for (size_t i = 0; i < duf.data.size(); ++i) {
    const DuflotDatum& d = duf.data[i];
    std::vector<int> expo(static_cast<size_t>(rd.elem.r), 0);
    expo[static_cast<size_t>(d.index - 1)] = d.degree;
    for (int k = 0; k + d.degree <= max_degree; ++k) {
      BitMatrix lhs = rd.res[static_cast<size_t>(k + d.degree)].mul(
          lifts[i].induced[static_cast<size_t>(k)]);
      BitMatrix rhs = monomial_multiplication_matrix(rd.elem, expo, k)
                          .mul(rd.res[static_cast<size_t>(k)]);
      require_internal(lhs == rhs, "restriction fails to be a ring map on a tested product");
    }
  }

  std::vector<size_t> order(duf.data.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = i;
  rep.regular = detail::regular_sequence_core(p, duf.data, lifts, order);
  rep.regular_ran = true;

  if (duf.data.size() >= 2 && duf.data.size() <= 3) {
    std::vector<size_t> perm = order;
    while (std::next_permutation(perm.begin(), perm.end())) {
      RegularSequenceResult alt = detail::regular_sequence_core(p, duf.data, lifts, perm);
      require_internal(alt.quotient_dims == rep.regular.quotient_dims,
                       "regular sequence: quotient dimensions depend on the order");
    }
  }

  /* Preimage-choice independence: re-run with a different solution whenever
   * the solution space of the defining system is nontrivial. */
  for (size_t i = 0; i < duf.data.size(); ++i) {
    BitMatrix ker = kernel_basis(rd.res[static_cast<size_t>(duf.data[i].degree)]);
    if (ker.rows() == 0) continue;
    std::vector<DuflotDatum> alt_data = duf.data;
    alt_data[i].preimage.xor_with(ker.row_vector(0));
    std::vector<CupLift> alt_lifts = lifts;
    alt_lifts[i] = cup_lift(p, solvers, alt_data[i].degree, alt_data[i].preimage);
    RegularSequenceResult alt = detail::regular_sequence_core(p, alt_data, alt_lifts, order);
    require_internal(alt.quotient_dims == rep.regular.quotient_dims,
                     "regular sequence: quotient dimensions depend on the preimage choice");
    for (size_t s = 0; s < alt.steps.size(); ++s)
      require_internal(alt.steps[s].pass == rep.regular.steps[s].pass,
                       "regular sequence: step verdict depends on the preimage choice");
  }
  rep.timings_ms.emplace_back("regular", stamp());

  std::vector<int> degrees;
  for (const DuflotDatum& d : duf.data) degrees.push_back(d.degree);
  rep.hilbert_ok = hilbert_check(rep.betti, degrees, rep.regular.quotient_dims, max_degree);
  rep.hilbert_ran = true;
  if (rep.regular.all_pass)
    require_internal(rep.hilbert_ok,
                     "internal inconsistency: regular steps pass but the Hilbert identity fails");
  rep.timings_ms.emplace_back("hilbert", stamp());

  if (!rep.regular.all_pass) {
    rep.verdict = "failed";
    for (size_t s = 0; s < rep.regular.steps.size(); ++s)
      if (!rep.regular.steps[s].pass)
        rep.notes.push_back(
            "multiplication by class " + std::to_string(s + 1) + " has a kernel in degree " +
            std::to_string(rep.regular.steps[s].witness_degree) + " modulo its predecessors");
  } else if (static_cast<int>(duf.data.size()) == rep.two_rank) {
    rep.verdict = "cm-certified";
    rep.notes.push_back("a regular sequence of length equal to the 2-rank certifies the "
                        "Cohen-Macaulay property up to degree " + std::to_string(max_degree));
  } else {
    rep.verdict = "inconclusive";
  }
  return rep;
}

/*
 * Family-level entry point: builds the requested Sylow 2-subgroup (with its
 * structural checks) or fixture, then runs the certification pipeline.
 */
inline CMReport cm_report(const std::string& family, int n, int max_degree,
                          std::optional<u32> field_poly = std::nullopt) {
  using clock = std::chrono::steady_clock;
  auto t0 = clock::now();
  GroupTable g;
  std::vector<LemmaCheck> lemmas;
  if (family == "psu3") {
    Psu3Sylow s = build_psu3_sylow(n, field_poly);
    lemmas = psu3_lemma_checks(s);
    g = std::move(s.table);
  } else if (family == "sz") {
    require_usage(n == 1, "cm_report: the cohomology pipeline supports sz only at n = 1 "
                          "(group order cap 512)");
    SzSylow s = build_sz_sylow(n, field_poly);
    lemmas = sz_lemma_checks(s);
    g = std::move(s.table);
  } else {
    throw usage_error("cm_report: unknown family '" + family + "' (expected psu3 or sz)");
  }
  long long build_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(clock::now() - t0).count();

  CMReport rep = cm_check_group(g, max_degree);
  rep.family = family;
  rep.n = n;
  rep.lemmas = std::move(lemmas);
  rep.timings_ms.insert(rep.timings_ms.begin(), {"group", build_ms});
  return rep;
}

inline CMReport cm_report_fixture(const std::string& name, int max_degree) {
  GroupTable g = build_fixture(name);
  CMReport rep = cm_check_group(g, max_degree);
  rep.family = "fixture";
  rep.fixture_name = name;
  if (name == "sd16")
    rep.notes.push_back(
        "context: the full cohomology ring of this group is a standard example that is "
        "not Cohen-Macaulay; the bounded run records why the certification route cannot "
        "apply, it does not compute that fact");
  return rep;
}

}  // namespace sylcoh
