#pragma once

#include <cstdint>
#include <functional>
#include <vector>

namespace fiberscope {

// [a : b] with gcd(|a|, b) = 1 and b >= 1, or (1, 0) for infinity
struct RationalPoint {
  long a = 0;
  long b = 1;
  static RationalPoint make(long a, long b);  // normalizes; throws on (0, 0)
  long height() const;
  bool operator==(const RationalPoint&) const = default;
};

// every point of height <= N exactly once: infinity, 0, then by increasing height
void enumerate(long N, const std::function<void(const RationalPoint&)>& visit);
// points of height exactly H
void enumerate_height(long H, const std::function<void(const RationalPoint&)>& visit);
std::vector<RationalPoint> enumerate_points(long N);

// a point of P^1(Z/m) by its canonical pair: lexicographically least among unit multiples
struct CongruenceClass {
  long m = 0;
  long u = 0;
  long v = 0;
  bool operator==(const CongruenceClass&) const = default;
  auto operator<=>(const CongruenceClass&) const = default;
};

CongruenceClass reduce_mod(const RationalPoint& x, long m);
CongruenceClass canonical_class(long m, long u, long v);

// P^1(Z/m) indexed through the Chinese remainder theorem, prime power by prime power
class ProjectiveLineMod {
 public:
  explicit ProjectiveLineMod(long m);
  long modulus() const { return m_; }
  long size() const { return size_; }
  // (u, v) unimodular mod m
  long index(long u, long v) const;
  long index(const RationalPoint& x) const { return index(x.a, x.b); }

 private:
  struct Local {
    long p, q, size;  // q = p^k, size = q + q/p
    std::vector<long> inv;  // inverses mod q of units, 0 elsewhere
  };
  long local_index(const Local& L, long u, long v) const;
  long m_;
  long size_ = 1;
  std::vector<Local> locals_;
};

long projective_line_size(long m);
// max(floor(sqrt m), m / (smallest prime factor of m))
long surjectivity_bound(long m);
long surjectivity_threshold(long m);
bool injectivity_check(long m, long N);

struct EquidistRow {
  long index = 0;
  CongruenceClass cls;
  std::uint64_t count = 0;
  double main_term = 0;
  double residual = 0;
};
struct EquidistResult {
  long m = 1;
  long N = 1;
  std::vector<EquidistRow> rows;
  std::uint64_t counted = 0;      // points with a != 0, b >= 1
  std::uint64_t raw_total = 0;    // all points of height <= N, with [0:1] and [1:0]
  double max_residual = 0;
  double ratio = 0;               // max_residual / (N log N)
};

EquidistResult equidistribution_test(long m, long N);
// several moduli sharing one enumeration
std::vector<EquidistResult> equidistribution_tables(const std::vector<long>& ms, long N);

}  // namespace fiberscope
