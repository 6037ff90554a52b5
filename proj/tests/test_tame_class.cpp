#include <set>

#include "doctest.h"
#include "fiberscope/padic.hpp"
#include "fiberscope/tame_class.hpp"

using namespace fiberscope;

namespace {

// O_L = Z_p[pi]/(pi^e - c p), elements as e coefficients mod p^N
struct RamifiedRing {
  long p, e, N;
  mpz_class c, mod;
  using El = std::vector<mpz_class>;
  El mul(const El& a, const El& b) const {
    std::vector<mpz_class> t(2 * e - 1, 0);
    for (int i = 0; i < e; ++i)
      for (int j = 0; j < e; ++j) t[i + j] += a[i] * b[j];
    for (int i = 2 * e - 2; i >= e; --i) {
      t[i - e] += t[i] * c * p;
      t[i] = 0;
    }
    t.resize(e);
    for (auto& x : t) x = ((x % mod) + mod) % mod;
    return t;
  }
  El pow(El a, int k) const {
    El r(e, 0);
    r[0] = 1;
    while (k--) r = mul(r, a);
    return r;
  }
  // pi-adic valuation, capped
  long val(const El& a) const {
    long best = e * N;
    for (int i = 0; i < e; ++i) {
      if (a[i] == 0) continue;
      long v = 0;
      mpz_class t = a[i];
      while (mpz_divisible_ui_p(t.get_mpz_t(), p)) {
        t /= p;
        ++v;
      }
      best = std::min(best, e * v + i);
    }
    return best;
  }
  El from_digits(const std::vector<long>& d) const {
    // pi * sum d_k pi^k
    El z(e, 0), pik(e, 0);
    pik[0] = 1;
    El pi(e, 0);
    if (e > 1)
      pi[1] = 1;
    else
      pi[0] = c * p;
    pik = pi;
    for (long dk : d) {
      for (int i = 0; i < e; ++i) z[i] = (z[i] + pik[i] * dk) % mod;
      pik = mul(pik, pi);
    }
    return z;
  }
};

// does z^e - u2 p have a root in Q_p((u1 p)^(1/e))? digit search to Hensel precision
bool has_root(long p, long e, long u1, long u2) {
  RamifiedRing L{p, e, 12, u1, pow_ui(p, 12)};
  auto F = [&](const std::vector<long>& d) {
    auto z = L.pow(L.from_digits(d), e);
    z[0] = ((z[0] - u2 * p) % L.mod + L.mod) % L.mod;
    return L.val(z);
  };
  std::vector<std::vector<long>> level;
  for (long d0 = 1; d0 < p; ++d0)
    if (F({d0}) >= e + 1) level.push_back({d0});
  for (long k = 1; k < e && !level.empty(); ++k) {
    std::vector<std::vector<long>> next;
    for (auto& d : level)
      for (long dk = 0; dk < p; ++dk) {
        auto dd = d;
        dd.push_back(dk);
        if (F(dd) >= e + k + 1) next.push_back(dd);
      }
    level = std::move(next);
  }
  return !level.empty();
}

}  // namespace

TEST_CASE("classify_binomial examples") {
  auto F5 = make_field(5, 1);
  CHECK(classify_binomial(5, 1, 2, F5->one()).unit_index == 0);
  // 2 is not a square mod 5, so its dlog is odd
  CHECK(classify_binomial(5, 1, 2, F5->from_int(2)).unit_index == 1);
  auto F7 = make_field(7, 1);
  // brute force dlog of 2 with respect to the field generator
  auto g = F7->generator();
  std::uint64_t k = 0;
  for (FqElement x = F7->one(); x != F7->from_int(2); x = x * g) ++k;
  auto c = classify_binomial(7, 1, 3, F7->from_int(2));
  CHECK(c.unit_index == k % 3);
  CHECK(c.g == 3);
  CHECK_THROWS_AS(classify_binomial(5, 1, 2, F5->zero()), PreconditionError);
  CHECK_THROWS_AS(classify_binomial(5, 1, 5, F5->one()), PreconditionError);
}

TEST_CASE("iso_test examples") {
  auto F5 = make_field(5, 1);
  auto c1 = classify_binomial(5, 1, 2, F5->one());
  auto c2 = classify_binomial(5, 1, 2, F5->from_int(2));
  auto c4 = classify_binomial(5, 1, 2, F5->from_int(4));
  CHECK(iso_test(c1, c1));
  CHECK(iso_test(c1, c4));
  CHECK_FALSE(iso_test(c1, c2));
  CHECK(has_root(5, 2, 1, 4));
  CHECK_FALSE(has_root(5, 2, 1, 2));
}

TEST_CASE("count_classes examples") {
  CHECK(count_classes(5, 1, 2) == 2);
  CHECK(count_classes(5, 1, 3) == 1);
  CHECK(count_classes(7, 2, 4) == 4);
  auto F49 = make_field(7, 2);
  std::set<std::uint64_t> idx;
  for (auto& u : F49->elements())
    if (!u.is_zero()) idx.insert(classify_binomial(7, 2, 4, u).unit_index);
  CHECK(idx.size() == 4);
  CHECK_THROWS_AS(count_classes(5, 1, 10), PreconditionError);
}

TEST_CASE("number of binomial classes equals count_classes") {
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u})
    for (int f = 1; f <= 2; ++f) {
      auto F = make_field(p, f);
      for (std::uint64_t e = 1; e <= 8; ++e) {
        if (e % p == 0) continue;
        std::set<std::uint64_t> idx;
        for (auto& u : F->elements())
          if (!u.is_zero()) idx.insert(classify_binomial(p, f, e, u).unit_index);
        CHECK(idx.size() == count_classes(p, f, e));
      }
    }
}

TEST_CASE("classes are invariant under e-th power twists") {
  for (unsigned p : {3u, 5u, 7u})
    for (int f = 1; f <= 2; ++f) {
      auto F = make_field(p, f);
      auto els = F->elements();
      for (std::uint64_t e = 2; e <= 6; ++e) {
        if (e % p == 0) continue;
        for (std::size_t a = 1; a < els.size(); a += 2)
          for (std::size_t b = 1; b < els.size(); b += 3)
            CHECK(classify_binomial(p, f, e, els[a]) == classify_binomial(p, f, e, els[a] * els[b].pow(e)));
      }
    }
}

TEST_CASE("iso_test matches a root search in the ramified extension") {
  for (long p : {3, 5, 7, 11, 13}) {
    auto F = make_field(p, 1);
    for (long e = 1; e <= 6; ++e) {
      if (e % p == 0) continue;
      for (long u1 = 1; u1 < p; ++u1)
        for (long u2 = 1; u2 < p; ++u2) {
          bool iso = iso_test(classify_binomial(p, 1, e, F->from_int(u1)), classify_binomial(p, 1, e, F->from_int(u2)));
          CHECK(iso == has_root(p, e, u1, u2));
        }
    }
  }
}

TEST_CASE("realizability and proportions") {
  CHECK(realizability(2, 1, 5));
  CHECK_FALSE(realizability(2, 2, 3));
  CHECK_FALSE(realizability(3, 2, 5));
  CHECK(proportion_realizable(2, 2, 3) == mpq_class(1, 2));
  CHECK(proportion_realizable(1, 3, 7) == 1);
  CHECK(proportion_realizable(6, 2, 5) == mpq_class(1, 6));
  CHECK(max_abelian_subdegree(2, 5) == 2);
  CHECK(max_abelian_subdegree(3, 5) == 1);
  CHECK(max_abelian_subdegree(12, 7) == 6);
}

TEST_CASE("metacyclic group basics") {
  auto G = MetacyclicGroup::for_conjugacy(4, 5);
  CHECK(G.size() == 4 * G.m());
  CHECK(powmod(5, G.m(), 4) == 1);
  for (std::uint32_t a = 0; a < G.size(); ++a) {
    CHECK(G.mul(a, G.inv(a)) == G.id(0, 0));
    for (std::uint32_t b = 0; b < G.size(); b += 3)
      for (std::uint32_t c = 0; c < G.size(); c += 5) CHECK(G.mul(G.mul(a, b), c) == G.mul(a, G.mul(b, c)));
  }
  // sigma tau sigma^-1 = tau^q
  CHECK(G.mul(G.mul(G.sigma(), G.tau()), G.inv(G.sigma())) == G.id(5 % 4, 0));
  CHECK_THROWS_AS(MetacyclicGroup(4, 1, 3), PreconditionError);
}

TEST_CASE("metacyclic_conjugate examples") {
  auto G45 = MetacyclicGroup::for_conjugacy(4, 5);
  CHECK(metacyclic_conjugate(G45, 1, 1));
  CHECK_FALSE(metacyclic_conjugate(G45, 0, 2));
  auto G35 = MetacyclicGroup::for_conjugacy(3, 5);
  CHECK(metacyclic_conjugate(G35, 0, 1));
}

TEST_CASE("orbit search agrees with trying every conjugator") {
  for (std::uint64_t e = 1; e <= 10; ++e)
    for (std::uint64_t q = 2; q <= 10; ++q) {
      if (gcd_u64(e, q) != 1) continue;
      auto G = MetacyclicGroup::for_conjugacy(e, q);
      for (std::uint64_t i = 0; i < e; ++i)
        for (std::uint64_t j = 0; j < e; ++j)
          CHECK(metacyclic_conjugate(G, i, j) == metacyclic_conjugate_exhaustive(G, i, j));
    }
}

TEST_CASE("the smallest quotient m = ord_e(q) does not see the conjugacy classes") {
  // e = 5, q = 6: sigma is trivial there and <tau sigma> = <tau^2 sigma>
  MetacyclicGroup small(5, mult_order(6, 5), 6);
  CHECK(small.m() == 1);
  CHECK(metacyclic_conjugate_exhaustive(small, 1, 2));
  auto G = MetacyclicGroup::for_conjugacy(5, 6);
  CHECK_FALSE(metacyclic_conjugate(G, 1, 2));
}
