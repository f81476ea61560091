#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "sylcoh/chainmap.hpp"
#include "sylcoh/fixtures.hpp"
#include "sylcoh/group.hpp"
#include "sylcoh/resolution.hpp"
#include "support/bar_oracle.hpp"

using namespace sylcoh;

namespace {

size_t binom(size_t n, size_t k) {
  if (k > n) return 0;
  size_t r = 1;
  for (size_t i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

GroupTable trivial_group() {
  GroupTable g;
  g.order = 1;
  g.mul = {0};
  g.inv = {0};
  g.labels = {"1"};
  return g;
}

}  // namespace

TEST_CASE("dimension-shift oracle agrees with the literal bar complex", "[resolution][oracle]") {
  for (const char* name : {"z2", "z4", "v4", "e8", "d8", "q8"}) {
    INFO(name);
    GroupTable g = build_fixture(name);
    std::vector<size_t> lit = oracle::bar_betti(g, 4);
    for (int k = 2; k <= 4; ++k) {
      INFO("degree " << k);
      REQUIRE(oracle::bar_betti_shifted(g, k) == lit[static_cast<size_t>(k)]);
    }
  }
}

TEST_CASE("minimal resolution ranks match the bar complex", "[resolution]") {
  SECTION("order at most 8, all degrees to 4") {
    for (const char* name : {"z2", "z4", "v4", "e8", "d8", "q8"}) {
      INFO(name);
      GroupTable g = build_fixture(name);
      REQUIRE(betti(g, 4) == oracle::bar_betti(g, 4));
    }
  }
  SECTION("order 16: literal to degree 2, shifted for degrees 3 and 4") {
    GroupTable g = build_fixture("sd16");
    std::vector<size_t> b = betti(g, 4);
    std::vector<size_t> lit = oracle::bar_betti(g, 2);
    REQUIRE(std::vector<size_t>(b.begin(), b.begin() + 3) == lit);
    REQUIRE(b[3] == oracle::bar_betti_shifted(g, 3));
    REQUIRE(b[4] == oracle::bar_betti_shifted(g, 4));
  }
}

TEST_CASE("known rank sequences", "[resolution]") {
  SECTION("trivial group") {
    std::vector<size_t> b = betti(trivial_group(), 6);
    REQUIRE(b == std::vector<size_t>{1, 0, 0, 0, 0, 0, 0});
  }
  SECTION("cyclic groups are periodic with rank 1") {
    REQUIRE(betti(build_fixture("z2"), 8) == std::vector<size_t>(9, 1));
    REQUIRE(betti(build_fixture("z4"), 8) == std::vector<size_t>(9, 1));
  }
  SECTION("dihedral of order 8 grows linearly") {
    REQUIRE(betti(build_fixture("d8"), 6) == std::vector<size_t>{1, 2, 3, 4, 5, 6, 7});
  }
  SECTION("quaternion of order 8 has period four") {
    std::vector<size_t> b = betti(build_fixture("q8"), 7);
    REQUIRE(b == std::vector<size_t>{1, 2, 2, 1, 1, 2, 2, 1});
  }
  SECTION("elementary abelian ranks follow the binomial closed form") {
    for (int r = 1; r <= 3; ++r) {
      INFO("rank " << r);
      GroupTable g = elementary_abelian_group(r);
      std::vector<size_t> b = betti(g, 8);
      for (int k = 0; k <= 8; ++k) {
        INFO("degree " << k);
        REQUIRE(b[static_cast<size_t>(k)] ==
                binom(static_cast<size_t>(k + r - 1), static_cast<size_t>(r - 1)));
      }
    }
  }
}

TEST_CASE("resolution structure invariants", "[resolution]") {
  Resolution r = minimal_resolution(build_fixture("q8"), 5);
  REQUIRE(r.ranks[0] == 1);
  REQUIRE(r.ranks[1] == 2);  // minimal generator count of q8
  for (int k = 1; k <= 5; ++k) {
    const FreeMap& fm = r.boundaries[static_cast<size_t>(k)];
    REQUIRE(fm.src_rank == r.ranks[static_cast<size_t>(k)]);
    REQUIRE(fm.dst_rank == r.ranks[static_cast<size_t>(k - 1)]);
    for (const GAElement& e : fm.entries) REQUIRE(e.in_augmentation_ideal());
  }
  SECTION("rebuilding the expanded matrix from the free-map entries") {
    const FreeMap& fm = r.boundaries[2];
    const size_t m = static_cast<size_t>(r.group->order);
    const BitMatrix& mat = r.boundary_mats[2];
    for (size_t j = 0; j < fm.src_rank; ++j)
      for (size_t t = 0; t < fm.dst_rank; ++t)
        for (size_t x = 0; x < m; ++x)
          REQUIRE(fm.at(j, t).coeffs.get(x) == mat.get(t * m + x, j * m));
  }
}

TEST_CASE("elementary resolution", "[resolution]") {
  SECTION("monomial labels and ordering") {
    ElementaryResolution e = elementary_resolution(2, 4);
    REQUIRE(e.labels[0] == std::vector<std::string>{"1"});
    REQUIRE(e.labels[1] == std::vector<std::string>{"x1", "x2"});
    REQUIRE(e.labels[2] == std::vector<std::string>{"x1^2", "x1*x2", "x2^2"});
    ElementaryResolution one = elementary_resolution(1, 3);
    REQUIRE(one.labels[0] == std::vector<std::string>{"1"});
    REQUIRE(one.labels[1] == std::vector<std::string>{"x"});
    REQUIRE(one.labels[2] == std::vector<std::string>{"x^2"});
    ElementaryResolution three = elementary_resolution(3, 4);
    REQUIRE(three.res.ranks[4] == 15);
    REQUIRE(three.labels[4][0] == "x1^4");
    REQUIRE(three.labels[4][14] == "x3^4");
  }
  SECTION("ranks agree with the generic engine") {
    for (int r = 1; r <= 3; ++r) {
      INFO("rank " << r);
      ElementaryResolution e = elementary_resolution(r, 6);
      REQUIRE(e.res.ranks == betti(elementary_abelian_group(r), 6));
    }
  }
  SECTION("boundary of a pure power hits (1 + t_i) times the predecessor") {
    ElementaryResolution e = elementary_resolution(2, 3);
    const FreeMap& fm = e.res.boundaries[2];
    size_t src = monomial_index(e, 2, {2, 0});   // x1^2
    size_t dst = monomial_index(e, 1, {1, 0});   // x1
    const GAElement& a = fm.at(src, dst);
    REQUIRE(a.coeffs.get(0));            // identity
    REQUIRE(a.coeffs.get(1));            // generator t_1
    REQUIRE(a.coeffs.popcount() == 2);
    size_t other = monomial_index(e, 1, {0, 1});  // x2 does not appear
    REQUIRE(fm.at(src, other).coeffs.is_zero());
  }
}

TEST_CASE("restriction to a central elementary abelian subgroup", "[chainmap]") {
  SECTION("full elementary group: base change is invertible in every degree") {
    GroupTable g = elementary_abelian_group(2);
    Resolution p = minimal_resolution(g, 5);
    std::vector<int> all = {0, 1, 2, 3};
    RestrictionData rd = restriction_matrices(p, all);
    for (int k = 0; k <= 5; ++k) {
      INFO("degree " << k);
      REQUIRE(rd.res[static_cast<size_t>(k)].rows() == p.ranks[static_cast<size_t>(k)]);
      REQUIRE(rank(rd.res[static_cast<size_t>(k)]) == p.ranks[static_cast<size_t>(k)]);
    }
  }
  SECTION("cyclic of order two restricted to itself") {
    GroupTable g = build_fixture("z2");
    Resolution p = minimal_resolution(g, 6);
    RestrictionData rd = restriction_matrices(p, {0, 1});
    for (int k = 0; k <= 6; ++k) REQUIRE(rank(rd.res[static_cast<size_t>(k)]) == 1);
  }
  SECTION("quaternion center: zero in low degrees, onto the fourth power") {
    GroupTable g = build_fixture("q8");
    Resolution p = minimal_resolution(g, 8);
    std::vector<int> z = center(g).members;
    REQUIRE(z == std::vector<int>{0, 1});
    RestrictionData rd = restriction_matrices(p, z);
    REQUIRE(rd.res[1].is_zero());
    REQUIRE(rd.res[2].is_zero());
    REQUIRE(rd.res[3].is_zero());
    REQUIRE(rank(rd.res[4]) == 1);  // hits x^4, the only degree-4 monomial
    REQUIRE(rd.elem.labels[4] == std::vector<std::string>{"x^4"});
    REQUIRE(rank(rd.res[8]) == 1);
  }
  SECTION("rejects non-central and non-elementary subgroups") {
    GroupTable d8 = build_fixture("d8");
    Resolution p = minimal_resolution(d8, 2);
    REQUIRE_THROWS_AS(restriction_matrices(p, {0, 4}), usage_error);  // s is not central
    GroupTable z4 = build_fixture("z4");
    Resolution p4 = minimal_resolution(z4, 2);
    REQUIRE_THROWS_AS(restriction_matrices(p4, {0, 1, 2, 3}), usage_error);
  }
}

TEST_CASE("cup action", "[chainmap]") {
  GroupTable g = build_fixture("q8");
  Resolution p = minimal_resolution(g, 8);
  BoundarySolvers solvers(p);

  SECTION("degree-zero classes act as zero or identity") {
    BitVector one(1);
    one.set(0, true);
    BitVector zero(1);
    for (int k = 0; k <= 3; ++k) {
      REQUIRE(cup_action(p, 0, one, k) == BitMatrix::identity(p.ranks[static_cast<size_t>(k)]));
      REQUIRE(cup_action(p, 0, zero, k).is_zero());
    }
  }
  SECTION("the degree-four class acts invertibly (period four)") {
    BitVector cls(p.ranks[4]);
    REQUIRE(cls.size() == 1);
    cls.set(0, true);
    CupLift lift = cup_lift(p, solvers, 4, cls);
    for (int k = 0; k + 4 <= 8; ++k) {
      INFO("degree " << k);
      const BitMatrix& n = lift.induced[static_cast<size_t>(k)];
      REQUIRE(n.rows() == p.ranks[static_cast<size_t>(k + 4)]);
      REQUIRE(n.cols() == p.ranks[static_cast<size_t>(k)]);
      REQUIRE(n.rows() == n.cols());
      REQUIRE(rank(n) == n.rows());
    }
  }
  SECTION("acting on the unit of degree zero returns the class itself") {
    BitVector cls(p.ranks[1]);
    cls.set(0, true);
    CupLift lift = cup_lift(p, solvers, 1, cls);
    REQUIRE(lift.induced[0].col_vector(0) == cls);
  }
}

TEST_CASE("cup action is multiplicative on squares", "[chainmap]") {
  GroupTable g = elementary_abelian_group(2);
  Resolution p = minimal_resolution(g, 8);
  BoundarySolvers solvers(p);
  for (u64 bits = 1; bits < 4; ++bits) {
    INFO("class bits " << bits);
    BitVector c(p.ranks[1]);
    for (int i = 0; i < 2; ++i)
      if (bits >> i & 1) c.set(static_cast<size_t>(i), true);
    CupLift lc = cup_lift(p, solvers, 1, c);
    BitVector csq = lc.induced[1].mul(c);  // c*c as a degree-2 class
    CupLift lsq = cup_lift(p, solvers, 2, csq);
    for (int k = 0; k + 2 <= 8 - 1; ++k) {
      INFO("degree " << k);
      BitMatrix twice = lc.induced[static_cast<size_t>(k + 1)].mul(lc.induced[static_cast<size_t>(k)]);
      REQUIRE(twice == lsq.induced[static_cast<size_t>(k)]);
    }
  }
}

TEST_CASE("restriction is a ring map on cup products", "[chainmap]") {
  GroupTable g = build_fixture("q8");
  Resolution p = minimal_resolution(g, 8);
  BoundarySolvers solvers(p);
  RestrictionData rd = restriction_matrices(p, solvers, center(g).members);
  BitVector cls(p.ranks[4]);
  cls.set(0, true);
  BitVector xfour(1);
  xfour.set(0, true);
  REQUIRE(rd.res[4].mul(cls) == xfour);
  CupLift lift = cup_lift(p, solvers, 4, cls);
  BitMatrix mult = monomial_multiplication_matrix(rd.elem, {4}, 0);
  // res(e * u) == x^4 * res(u) for u in H^0
  REQUIRE(rd.res[4].mul(lift.induced[0]) == mult.mul(rd.res[0]));
  BitMatrix mult2 = monomial_multiplication_matrix(rd.elem, {4}, 2);
  REQUIRE(rd.res[6].mul(lift.induced[2]) == mult2.mul(rd.res[2]));
}

TEST_CASE("resolution cache round-trip", "[resolution]") {
  namespace fs = std::filesystem;
  GroupTable g = build_fixture("q8");
  fs::path dir = fs::temp_directory_path() / "sylcoh_cache_test";
  fs::create_directories(dir);

  Resolution r = minimal_resolution(g, 5);
  fs::path file = dir / "probe.bin";
  dump_resolution(r, file.string());

  SECTION("load returns an identical resolution") {
    auto back = load_resolution(file.string(), g, 5);
    REQUIRE(back.has_value());
    REQUIRE(back->ranks == r.ranks);
    for (int k = 0; k <= 5; ++k)
      REQUIRE(back->boundary_mats[static_cast<size_t>(k)] ==
              r.boundary_mats[static_cast<size_t>(k)]);
  }
  SECTION("mismatched degree or group is rejected") {
    REQUIRE_FALSE(load_resolution(file.string(), g, 4).has_value());
    REQUIRE_FALSE(load_resolution(file.string(), build_fixture("d8"), 5).has_value());
    REQUIRE_FALSE(load_resolution((dir / "missing.bin").string(), g, 5).has_value());
  }
  SECTION("cached builds go through the environment directory") {
    setenv("SYLCOH_CACHE_DIR", dir.string().c_str(), 1);
    Resolution a = cached_minimal_resolution(g, 4);
    Resolution b = cached_minimal_resolution(g, 4);  // second call hits the cache
    unsetenv("SYLCOH_CACHE_DIR");
    REQUIRE(a.ranks == b.ranks);
    for (int k = 0; k <= 4; ++k)
      REQUIRE(a.boundary_mats[static_cast<size_t>(k)] == b.boundary_mats[static_cast<size_t>(k)]);
    REQUIRE(a.ranks == betti(g, 4));
  }
  fs::remove_all(dir);
}

TEST_CASE("resolution input guards", "[resolution]") {
  GroupTable z3 = cyclic_group(3);
  REQUIRE_THROWS_AS(minimal_resolution(z3, 2), usage_error);
  GroupTable big = elementary_abelian_group(10);  // order 1024 exceeds the cap
  REQUIRE_THROWS_AS(minimal_resolution(big, 1), usage_error);
  GroupTable q8 = build_fixture("q8");
  REQUIRE_THROWS_AS(minimal_resolution(q8, 13), usage_error);
  REQUIRE_THROWS_AS(elementary_resolution(5, 2), usage_error);
  REQUIRE_THROWS_AS(elementary_resolution(0, 2), usage_error);
}
