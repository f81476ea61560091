#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "sylcoh/cmcheck.hpp"
#include "sylcoh/fixtures.hpp"
#include "sylcoh/group.hpp"

using namespace sylcoh;

namespace {

bool has_note_containing(const CMReport& rep, const std::string& needle) {
  for (const std::string& n : rep.notes)
    if (n.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("hilbert identity arithmetic", "[cmcheck]") {
  SECTION("polynomial ring on one degree-one generator") {
    std::vector<size_t> b(9, 1), q(9, 0);
    q[0] = 1;
    REQUIRE(hilbert_check(b, {1}, q, 8));
  }
  SECTION("one degree-two factor against the all-ones series") {
    std::vector<size_t> b(9, 1), q(9, 0);
    q[0] = 1;
    q[1] = 1;
    REQUIRE(hilbert_check(b, {2}, q, 8));
  }
  SECTION("corrupted quotient dimensions are rejected") {
    std::vector<size_t> b = {1, 2, 2, 1, 1, 2, 2, 1, 1};
    std::vector<size_t> good = {1, 2, 2, 1, 0, 0, 0, 0, 0};
    std::vector<size_t> bad = {1, 2, 2, 2, 0, 0, 0, 0, 0};
    REQUIRE(hilbert_check(b, {4}, good, 8));
    REQUIRE_FALSE(hilbert_check(b, {4}, bad, 8));
  }
  SECTION("two factors expand by iterated prefix sums") {
    // (1) / ((1-t)(1-t)) = sum (k+1) t^k
    std::vector<size_t> b = {1, 2, 3, 4, 5, 6, 7, 8, 9}, q(9, 0);
    q[0] = 1;
    REQUIRE(hilbert_check(b, {1, 1}, q, 8));
  }
}

TEST_CASE("quaternion certification values", "[cmcheck]") {
  CMReport rep = cm_report_fixture("q8", 8);
  REQUIRE(rep.group_order == 8);
  REQUIRE(rep.center_rank == 1);
  REQUIRE(rep.two_rank == 1);
  REQUIRE(rep.civp);
  REQUIRE(rep.betti == std::vector<size_t>{1, 2, 2, 1, 1, 2, 2, 1, 1});

  REQUIRE(rep.duflot_complete);
  REQUIRE(rep.duflot.size() == 1);
  REQUIRE(rep.duflot[0].index == 1);
  REQUIRE(rep.duflot[0].l == 2);
  REQUIRE(rep.duflot[0].degree == 4);
  REQUIRE(rep.common_l == 2);

  REQUIRE(rep.regular_ran);
  REQUIRE(rep.regular.all_pass);
  REQUIRE(rep.regular.steps.size() == 1);
  REQUIRE(rep.regular.quotient_dims ==
          std::vector<size_t>{1, 2, 2, 1, 0, 0, 0, 0, 0});

  REQUIRE(rep.hilbert_ran);
  REQUIRE(rep.hilbert_ok);
  REQUIRE(rep.verdict == "cm-certified");
}

TEST_CASE("quaternion run is stable when the bound grows", "[cmcheck]") {
  CMReport base = cm_report_fixture("q8", 8);
  CMReport wide = cm_report_fixture("q8", 10);
  REQUIRE(wide.duflot.size() == base.duflot.size());
  REQUIRE(wide.duflot[0].l == base.duflot[0].l);
  REQUIRE(wide.verdict == "cm-certified");
  // the shorter run's data is a prefix of the longer run's
  for (size_t k = 0; k < base.betti.size(); ++k) REQUIRE(wide.betti[k] == base.betti[k]);
  for (size_t k = 0; k < base.regular.quotient_dims.size(); ++k)
    REQUIRE(wide.regular.quotient_dims[k] == base.regular.quotient_dims[k]);
}

TEST_CASE("elementary abelian groups certify with degree-one sequences", "[cmcheck]") {
  for (int r = 1; r <= 3; ++r) {
    INFO("rank " << r);
    CMReport rep = cm_check_group(elementary_abelian_group(r), 6);
    REQUIRE(rep.center_rank == r);
    REQUIRE(rep.two_rank == r);
    REQUIRE(rep.duflot_complete);
    REQUIRE(rep.duflot.size() == static_cast<size_t>(r));
    for (const DuflotDatum& d : rep.duflot) {
      REQUIRE(d.l == 0);
      REQUIRE(d.degree == 1);
    }
    REQUIRE(rep.verdict == "cm-certified");
    std::vector<size_t> expect(7, 0);
    expect[0] = 1;
    REQUIRE(rep.regular.quotient_dims == expect);
  }
}

TEST_CASE("cyclic of order four certifies despite failing the involution condition",
          "[cmcheck]") {
  CMReport rep = cm_report_fixture("z4", 8);
  REQUIRE_FALSE(rep.civp);
  REQUIRE(rep.center_rank == 1);
  REQUIRE(rep.two_rank == 1);
  REQUIRE(rep.duflot.size() == 1);
  REQUIRE(rep.duflot[0].l == 1);  // the square of the generator restricts, not itself
  REQUIRE(rep.duflot[0].degree == 2);
  REQUIRE(rep.regular.all_pass);
  REQUIRE(rep.regular.quotient_dims ==
          std::vector<size_t>{1, 1, 0, 0, 0, 0, 0, 0, 0});
  REQUIRE(rep.verdict == "cm-certified");
}

TEST_CASE("dihedral and semidihedral controls are inconclusive", "[cmcheck]") {
  SECTION("dihedral of order 8") {
    CMReport rep = cm_report_fixture("d8", 6);
    REQUIRE_FALSE(rep.civp);
    REQUIRE(rep.center_rank == 1);
    REQUIRE(rep.two_rank == 2);
    REQUIRE(rep.duflot_complete);
    REQUIRE(rep.regular.all_pass);  // one central class is regular, just too short
    REQUIRE(rep.hilbert_ok);
    REQUIRE(rep.verdict == "inconclusive");
    REQUIRE(has_note_containing(rep, "not every involution is central"));
    REQUIRE(has_note_containing(rep, "cannot reach the Krull dimension"));
  }
  SECTION("semidihedral of order 16") {
    CMReport rep = cm_report_fixture("sd16", 6);
    REQUIRE_FALSE(rep.civp);
    REQUIRE(rep.center_rank == 1);
    REQUIRE(rep.two_rank == 2);
    REQUIRE(rep.verdict == "inconclusive");
    REQUIRE(has_note_containing(rep, "not Cohen-Macaulay"));
    REQUIRE(has_note_containing(rep, "cannot reach the Krull dimension"));
  }
}

TEST_CASE("degree bound too small reports undetermined", "[cmcheck]") {
  CMReport rep = cm_check_group(build_fixture("q8"), 3);
  REQUIRE_FALSE(rep.duflot_complete);
  REQUIRE(rep.duflot_missing == std::vector<int>{1});
  REQUIRE(rep.verdict == "undetermined");
  REQUIRE_FALSE(rep.regular_ran);
  REQUIRE(has_note_containing(rep, "raise the degree bound"));
}

TEST_CASE("regular sequence machinery reports witnesses", "[cmcheck]") {
  GroupTable g = elementary_abelian_group(2);
  Resolution p = minimal_resolution(g, 6);
  BoundarySolvers solvers(p);
  RestrictionData rd = restriction_matrices(p, solvers, {0, 1, 2, 3});
  DuflotSubalgebra duf = duflot_subalgebra(rd, 6);
  REQUIRE(duf.complete);
  REQUIRE(duf.data.size() == 2);

  SECTION("the honest sequence passes") {
    RegularSequenceResult res = regular_sequence_test(p, solvers, duf.data);
    REQUIRE(res.all_pass);
    REQUIRE(res.steps.size() == 2);
    std::vector<size_t> expect(7, 0);
    expect[0] = 1;
    REQUIRE(res.quotient_dims == expect);
  }
  SECTION("repeating a class fails with a degree-zero witness") {
    std::vector<DuflotDatum> twice = {duf.data[0], duf.data[0]};
    RegularSequenceResult res = regular_sequence_test(p, solvers, twice);
    REQUIRE_FALSE(res.all_pass);
    REQUIRE(res.steps[0].pass);
    REQUIRE_FALSE(res.steps[1].pass);
    REQUIRE(res.steps[1].witness_degree == 0);
    REQUIRE_FALSE(res.steps[1].witness.is_zero());
    // the witness is annihilated into the ideal: here 1 * zeta = zeta
    REQUIRE_FALSE(hilbert_check(p.ranks, {1, 1}, res.quotient_dims, 6));
  }
}

TEST_CASE("family reports are certified", "[cmcheck][family]") {
  SECTION("unitary family at n = 1") {
    CMReport rep = cm_report("psu3", 1, 8);
    REQUIRE(rep.family == "psu3");
    REQUIRE(rep.group_order == 8);
    REQUIRE(rep.lemmas.size() == 12);
    for (const LemmaCheck& c : rep.lemmas) {
      INFO(c.name << ": " << c.detail);
      REQUIRE(c.pass);
    }
    REQUIRE(rep.center_rank == 1);
    REQUIRE(rep.duflot[0].degree == 4);  // matches the quaternion profile
    REQUIRE(rep.verdict == "cm-certified");
  }
  SECTION("suzuki family at n = 1") {
    CMReport rep = cm_report("sz", 1, 8);
    REQUIRE(rep.family == "sz");
    REQUIRE(rep.group_order == 64);
    REQUIRE(rep.lemmas.size() == 10);
    for (const LemmaCheck& c : rep.lemmas) {
      INFO(c.name << ": " << c.detail);
      REQUIRE(c.pass);
    }
    REQUIRE(rep.center_rank == 3);
    REQUIRE(rep.two_rank == 3);
    REQUIRE(rep.duflot_complete);
    REQUIRE(rep.duflot.size() == 3);
    REQUIRE(rep.regular.all_pass);
    REQUIRE(rep.hilbert_ok);
    REQUIRE(rep.verdict == "cm-certified");
  }
  SECTION("unsupported parameters are usage errors") {
    REQUIRE_THROWS_AS(cm_report("sz", 2, 8), usage_error);
    REQUIRE_THROWS_AS(cm_report("psl", 1, 8), usage_error);
  }
}

TEST_CASE("repeated runs produce identical data", "[cmcheck]") {
  CMReport a = cm_report_fixture("q8", 8);
  CMReport b = cm_report_fixture("q8", 8);
  REQUIRE(a.betti == b.betti);
  REQUIRE(a.duflot.size() == b.duflot.size());
  for (size_t i = 0; i < a.duflot.size(); ++i)
    REQUIRE(a.duflot[i].preimage == b.duflot[i].preimage);
  REQUIRE(a.regular.quotient_dims == b.regular.quotient_dims);
  REQUIRE(a.verdict == b.verdict);
  REQUIRE(a.notes == b.notes);
}
