#include <algorithm>
#include <cmath>
#include <random>

#include "covers.hpp"
#include "doctest.h"
#include "fiberscope/cycle_census.hpp"
#include "fiberscope/fiber.hpp"

using namespace fiberscope;
using namespace testcovers;

namespace {

std::vector<int> sorted_desc(std::vector<int> v) {
  std::sort(v.rbegin(), v.rend());
  return v;
}

// number of roots of z^3 + z + t mod p by enumeration
int cubic_roots(long t, long p) {
  int n = 0;
  for (long z = 0; z < p; ++z) n += (z * z % p * z + z + t) % p == 0;
  return n;
}

}  // namespace

TEST_CASE("cycle notation") {
  CHECK(parse_cycles("(1 2 3)", 3) == Perm{1, 2, 0});
  CHECK(parse_cycles("()", 2) == identity_perm(2));
  CHECK(cycle_str(parse_cycles("(1 3)(2 4)", 4)) == "(1 3)(2 4)");
  CHECK(cycle_type(parse_cycles("(1 2)(3 4 5)", 6)) == CycleType{3, 2, 1});
  CHECK_THROWS_AS(parse_cycles("(1 7)", 4), PreconditionError);
  CHECK_THROWS_AS(parse_cycles("(1 1)", 4), PreconditionError);
  CHECK(from_one_line({2, 1, 3}) == parse_cycles("(1 2)", 3));
  CHECK_THROWS_AS(from_one_line({1, 1, 3}), PreconditionError);
}

TEST_CASE("standard groups have the expected orders") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(5).order() == 60);
  CHECK(dihedral_group(6).order() == 12);
  CHECK(cyclic_group(7).order() == 7);
  CHECK(symmetric_group(7).order() == 5040);
  CHECK(symmetric_group(1).order() == 1);
}

TEST_CASE("double coset examples") {
  auto id = double_cosets(symmetric_group(4), identity_perm(4));
  CHECK(id.size() == 4);
  for (auto& dc : id) CHECK(dc.block_size == 1);
  auto c3 = double_cosets(symmetric_group(3), parse_cycles("(1 2 3)", 3));
  REQUIRE(c3.size() == 1);
  CHECK(c3[0].block_size == 3);
  std::vector<int> sizes;
  for (auto& dc : double_cosets(symmetric_group(4), parse_cycles("(1 2)", 4))) sizes.push_back(dc.block_size);
  CHECK(sorted_desc(sizes) == std::vector<int>{2, 1, 1});
  CHECK(etale_from_frobenius(parse_cycles("(1 2)(3 4)", 4), symmetric_group(4)) == std::vector<int>{2, 2});
  CHECK(etale_from_frobenius(parse_cycles("(1 2 3)", 4), alternating_group(4)) == std::vector<int>{3, 1});
  CHECK(etale_from_frobenius(parse_cycles("(1 2 3 4 5)", 5), cyclic_group(5)) == std::vector<int>{5});
  CHECK_THROWS_AS(double_cosets(alternating_group(4), parse_cycles("(1 2)", 4)), PreconditionError);
}

TEST_CASE("block sizes equal cycle types for random groups and elements") {
  std::mt19937_64 rng(20240601);
  int mismatches = 0;
  for (int trial = 0; trial < 500; ++trial) {
    int d = 2 + static_cast<int>(rng() % 6);
    int kind = static_cast<int>(rng() % 4);
    PermutationGroup G = kind == 0   ? symmetric_group(d)
                         : kind == 1 ? (d >= 3 ? alternating_group(d) : cyclic_group(d))
                         : kind == 2 ? dihedral_group(d)
                                     : cyclic_group(d);
    const Perm& sigma = G.elements()[rng() % G.order()];
    std::vector<int> sizes;
    for (auto& dc : double_cosets(G, sigma)) sizes.push_back(dc.block_size);
    if (sorted_desc(sizes) != cycle_type(sigma)) ++mismatches;
  }
  CHECK(mismatches == 0);
}

TEST_CASE("transposition graphs") {
  auto t = [](int d, int a, int b) { return parse_cycles("(" + std::to_string(a) + " " + std::to_string(b) + ")", d); };
  CHECK(transposition_transitivity_check({t(4, 1, 2), t(4, 2, 3), t(4, 3, 4)}, 4));
  CHECK(PermutationGroup(4, {t(4, 1, 2), t(4, 2, 3), t(4, 3, 4)}).order() == 24);
  CHECK_FALSE(transposition_transitivity_check({t(4, 1, 2), t(4, 3, 4)}, 4));
  CHECK(transposition_transitivity_check({t(2, 1, 2)}, 2));
  CHECK_THROWS_AS(transposition_transitivity_check({parse_cycles("(1 2 3)", 3)}, 3), PreconditionError);
}

TEST_CASE("connected transposition sets generate the full symmetric group") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int d = 2 + static_cast<int>(rng() % 6);
    std::vector<Perm> gens;
    // random spanning tree plus a few random edges
    for (int v = 1; v < d; ++v) {
      int u = static_cast<int>(rng() % v);
      gens.push_back(parse_cycles("(" + std::to_string(u + 1) + " " + std::to_string(v + 1) + ")", d));
    }
    for (int extra = static_cast<int>(rng() % 3); extra > 0; --extra) {
      int a = static_cast<int>(rng() % d), b = static_cast<int>(rng() % d);
      if (a != b) gens.push_back(parse_cycles("(" + std::to_string(a + 1) + " " + std::to_string(b + 1) + ")", d));
    }
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(transposition_transitivity_check(gens, d));
    std::uint64_t fact = 1;
    for (int i = 2; i <= d; ++i) fact *= i;
    CHECK(PermutationGroup(d, gens).order() == fact);
  }
}

TEST_CASE("cycle census of z^2 - t at p = 5") {
  auto rep = cycle_census(z2_minus_t(), 5, 1);
  CHECK(rep.branch == 1);
  CHECK(rep.counts.at({1, 1}) == 2);
  CHECK(rep.counts.at({2}) == 2);
  CHECK(rep.sampled + rep.branch + rep.out_of_chart == rep.q);
  for (auto& [c, n] : rep.counts) CHECK(c[0] + (c.size() > 1 ? c[1] : 0) == 2);
}

TEST_CASE("cycle census of z^3 + z + t against root counting") {
  for (long p : {5L, 7L, 11L, 13L}) {
    auto rep = cycle_census(z3_plus_z_plus_t(), p, 1);
    std::map<CycleType, std::uint64_t> want;
    std::uint64_t branch = 0;
    for (long t = 0; t < p; ++t) {
      if (((-4 - 27 * t * t) % p + p) % p == 0) {
        ++branch;
        continue;
      }
      int r = cubic_roots(t, p);
      want[r == 3 ? CycleType{1, 1, 1} : r == 1 ? CycleType{2, 1} : CycleType{3}]++;
    }
    CHECK(rep.counts == want);
    CHECK(rep.branch == branch);
  }
}

TEST_CASE("census over F_q with q = p^2") {
  auto rep = cycle_census(z2_minus_t(), 5, 2);
  // half of F_25^x are squares
  CHECK(rep.q == 25);
  CHECK(rep.counts.at({1, 1}) == 12);
  CHECK(rep.counts.at({2}) == 12);
}

TEST_CASE("Chebotarev comparison") {
  auto r2 = cycle_census(z2_minus_t(), 101, 1);
  auto c2 = chebotarev_compare(r2, symmetric_group(2), 2.0);
  CHECK(c2.pass);
  auto r3 = cycle_census(z3_plus_z_plus_t(), 101, 1);
  auto c3 = chebotarev_compare(r3, symmetric_group(3), 2.0);
  CHECK(c3.pass);
  CHECK(c3.rows.size() == 3);
  auto dev = [](std::uint32_t p) {
    return chebotarev_compare(cycle_census(z3_plus_z_plus_t(), p, 1), symmetric_group(3), 2.0).max_deviation;
  };
  double d101 = dev(101), d199 = dev(199), d401 = dev(401);
  CHECK(d401 <= d101 + 0.02);
  CHECK(d199 <= 2.0 / std::sqrt(199.0));
  CHECK_THROWS_AS(chebotarev_compare(r3, symmetric_group(2), 2.0), PreconditionError);
  // trivial group on one point
  CycleCensusReport one;
  one.q = 7;
  one.sampled = 7;
  one.counts[{1}] = 7;
  auto c1 = chebotarev_compare(one, symmetric_group(1), 1.0);
  CHECK(c1.max_deviation == 0.0);
}

TEST_CASE("unramified fibers: splitting over F_p matches predicted inertia degrees") {
  for (long p : {5L, 7L, 11L}) {
    auto rep = check_good_reduction(z3_plus_z_plus_t(), p);
    REQUIRE(rep.good);
    for (long t = 0; t < p; ++t) {
      if (rep.ramification_table.count(t)) continue;
      std::vector<int> degs;
      for (auto& fac : factor(z3_plus_z_plus_t().at(make_field(p, 1)->from_int(t)))) degs.push_back(fac.factor.degree());
      std::vector<int> inertia;
      for (auto& f : predict_fiber(z3_plus_z_plus_t(), p, t + p).all_factors()) {
        CHECK(f.e == 1);
        inertia.push_back(f.f);
      }
      CHECK(sorted_desc(degs) == sorted_desc(inertia));
    }
  }
}
