#include "fiberscope/heights.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "fiberscope/integer.hpp"

namespace fiberscope {

namespace {

long mod(long x, long m) {
  long r = x % m;
  return r < 0 ? r + m : r;
}

std::vector<long> small_primes_of(long n) {
  std::vector<long> out;
  for (auto p : prime_factors_u64(static_cast<std::uint64_t>(n))) out.push_back(static_cast<long>(p));
  return out;
}

}  // namespace

RationalPoint RationalPoint::make(long a, long b) {
  if (a == 0 && b == 0) throw PreconditionError("rational point: (0, 0) is not a point");
  if (b == 0) return {1, 0};
  long g = std::gcd(std::labs(a), std::labs(b));
  a /= g;
  b /= g;
  if (b < 0) a = -a, b = -b;
  return {a, b};
}

long RationalPoint::height() const { return std::max(std::labs(a), std::labs(b)); }

namespace {

// points of height exactly H; a sieve over the prime factors of H replaces per-point gcds
template <class F>
void for_height(long H, std::vector<char>& coprime, F&& visit) {
  if (H == 1) {
    visit(RationalPoint{1, 0});
    visit(RationalPoint{0, 1});
    visit(RationalPoint{1, 1});
    visit(RationalPoint{-1, 1});
    return;
  }
  coprime.assign(static_cast<std::size_t>(H), 1);
  for (auto p : prime_factors_u64(static_cast<std::uint64_t>(H)))
    for (long x = static_cast<long>(p); x < H; x += static_cast<long>(p)) coprime[x] = 0;
  // b = H with |a| < H, then |a| = H with b < H
  for (long a = 1; a < H; ++a)
    if (coprime[a]) {
      visit(RationalPoint{a, H});
      visit(RationalPoint{-a, H});
    }
  for (long b = 1; b < H; ++b)
    if (coprime[b]) {
      visit(RationalPoint{H, b});
      visit(RationalPoint{-H, b});
    }
}

}  // namespace

void enumerate_height(long H, const std::function<void(const RationalPoint&)>& visit) {
  if (H < 1) return;
  std::vector<char> scratch;
  for_height(H, scratch, visit);
}

void enumerate(long N, const std::function<void(const RationalPoint&)>& visit) {
  if (N < 1) throw PreconditionError("enumerate: N must be at least 1");
  for (long H = 1; H <= N; ++H) enumerate_height(H, visit);
}

std::vector<RationalPoint> enumerate_points(long N) {
  std::vector<RationalPoint> out;
  enumerate(N, [&](const RationalPoint& x) { out.push_back(x); });
  return out;
}

CongruenceClass canonical_class(long m, long u, long v) {
  if (m < 2) throw PreconditionError("congruence class: m must be at least 2");
  u = mod(u, m);
  v = mod(v, m);
  if (std::gcd(std::gcd(u, v), m) != 1) throw PreconditionError("congruence class: pair is not unimodular");
  CongruenceClass best{m, u, v};
  for (long g = 2; g < m; ++g) {
    if (std::gcd(g, m) != 1) continue;
    CongruenceClass c{m, g * u % m, g * v % m};
    if (c < best) best = c;
  }
  return best;
}

CongruenceClass reduce_mod(const RationalPoint& x, long m) { return canonical_class(m, x.a, x.b); }

ProjectiveLineMod::ProjectiveLineMod(long m) : m_(m) {
  if (m < 1) throw PreconditionError("P^1(Z/m): m must be positive");
  for (auto [p, k] : factor_u64(static_cast<std::uint64_t>(m))) {
    Local L;
    L.p = static_cast<long>(p);
    L.q = static_cast<long>(ipow(p, k));
    L.size = L.q + L.q / L.p;
    L.inv.assign(L.q, 0);
    for (long x = 1; x < L.q; ++x)
      if (x % L.p != 0) L.inv[x] = static_cast<long>(invmod(x, L.q));
    size_ *= L.size;
    locals_.push_back(std::move(L));
  }
}

long ProjectiveLineMod::local_index(const Local& L, long u, long v) const {
  u = mod(u, L.q);
  v = mod(v, L.q);
  if (v % L.p != 0) return u * L.inv[v] % L.q;  // [u/v : 1]
  if (u % L.p == 0) throw PreconditionError("P^1(Z/m): pair is not unimodular");
  return L.q + (v * L.inv[u] % L.q) / L.p;  // [1 : v/u], v/u divisible by p
}

long ProjectiveLineMod::index(long u, long v) const {
  long idx = 0;
  for (auto& L : locals_) idx = idx * L.size + local_index(L, u, v);
  return idx;
}

long projective_line_size(long m) { return ProjectiveLineMod(m).size(); }

long surjectivity_bound(long m) {
  if (m < 2) throw PreconditionError("surjectivity_bound: m must be at least 2");
  long s = static_cast<long>(std::sqrt(static_cast<double>(m)));
  while (s * s > m) --s;
  while ((s + 1) * (s + 1) <= m) ++s;
  long minp = static_cast<long>(prime_factors_u64(static_cast<std::uint64_t>(m)).front());
  return std::max(s, m / minp);
}

long surjectivity_threshold(long m) {
  if (m < 2 || m > 1'000'000) throw PreconditionError("surjectivity_threshold: m must be in [2, 10^6]");
  ProjectiveLineMod P(m);
  std::vector<char> hit(P.size(), 0), scratch;
  long remaining = P.size();
  for (long H = 1;; ++H) {
    for_height(H, scratch, [&](const RationalPoint& x) {
      long i = P.index(x);
      if (!hit[i]) hit[i] = 1, --remaining;
    });
    if (remaining == 0) return H;
  }
}

bool injectivity_check(long m, long N) {
  if (m < 2 || m > 1'000'000) throw PreconditionError("injectivity_check: m must be in [2, 10^6]");
  ProjectiveLineMod P(m);
  std::vector<char> hit(P.size(), 0);
  bool injective = true;
  enumerate(N, [&](const RationalPoint& x) {
    long i = P.index(x);
    if (hit[i]) injective = false;
    hit[i] = 1;
  });
  return injective;
}

std::vector<EquidistResult> equidistribution_tables(const std::vector<long>& ms, long N) {
  if (N < 2 || N > 100'000) throw PreconditionError("equidistribution: N must be in [2, 10^5]");
  for (long m : ms)
    if (m < 1 || m > 1000) throw PreconditionError("equidistribution: m must be in [1, 1000]");
  // per modulus, counts of (a mod m, b mod m) over coprime pairs with 1 <= a, b <= N
  std::vector<std::vector<std::uint64_t>> pair_counts;
  for (long m : ms) pair_counts.emplace_back(static_cast<std::size_t>(m * m), 0);
  std::vector<char> coprime(static_cast<std::size_t>(N + 1));
  std::uint64_t positive = 0;
  for (long b = 1; b <= N; ++b) {
    std::fill(coprime.begin(), coprime.end(), 1);
    for (long p : small_primes_of(b))
      for (long a = p; a <= N; a += p) coprime[a] = 0;
    for (long a = 1; a <= N; ++a) positive += coprime[a];
    for (std::size_t k = 0; k < ms.size(); ++k) {
      const long m = ms[k];
      auto& pc = pair_counts[k];
      const long bm = b % m;
      for (long r = 0; r < m; ++r) {
        std::uint64_t c = 0;
        for (long a = r == 0 ? m : r; a <= N; a += m) c += coprime[a];
        pc[r * m + bm] += c;
      }
    }
  }
  const double pi = std::acos(-1.0);
  std::vector<EquidistResult> out;
  for (std::size_t k = 0; k < ms.size(); ++k) {
    const long m = ms[k];
    EquidistResult res;
    res.m = m;
    res.N = N;
    res.counted = 2 * positive;
    res.raw_total = res.counted + 2;
    ProjectiveLineMod P(m);
    std::vector<std::uint64_t> cls(P.size(), 0);
    for (long r = 0; r < m; ++r)
      for (long s = 0; s < m; ++s) {
        std::uint64_t c = pair_counts[k][r * m + s];
        if (!c) continue;
        // a and -a
        cls[P.index(r, s)] += c;
        cls[P.index(mod(-r, m), s)] += c;
      }
    double main = 12.0 * double(N) * double(N) / (pi * pi * double(m));
    for (auto p : prime_factors_u64(static_cast<std::uint64_t>(m))) main *= double(p) / double(p + 1);
    // class representatives in index order
    std::vector<CongruenceClass> reps(P.size());
    if (m >= 2)
      for (long u = 0; u < m; ++u)
        for (long v = 0; v < m; ++v)
          if (std::gcd(std::gcd(u, v), m) == 1) reps[P.index(u, v)] = canonical_class(m, u, v);
    for (long i = 0; i < P.size(); ++i) {
      EquidistRow row;
      row.index = i;
      row.cls = m >= 2 ? reps[i] : CongruenceClass{1, 0, 0};
      row.count = cls[i];
      row.main_term = main;
      row.residual = std::fabs(double(cls[i]) - main);
      res.max_residual = std::max(res.max_residual, row.residual);
      res.rows.push_back(row);
    }
    res.ratio = res.max_residual / (double(N) * std::log(double(N)));
    out.push_back(std::move(res));
  }
  return out;
}

EquidistResult equidistribution_test(long m, long N) { return equidistribution_tables({m}, N).at(0); }

}  // namespace fiberscope
