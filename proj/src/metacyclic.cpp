#include "fiberscope/tame_class.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace fiberscope {

MetacyclicGroup::MetacyclicGroup(std::uint64_t e, std::uint64_t m, std::uint64_t q) : e_(e), m_(m), q_(q) {
  if (e == 0 || m == 0) throw PreconditionError("MetacyclicGroup: e and m must be positive");
  if (gcd_u64(e, q) != 1) throw PreconditionError("MetacyclicGroup: gcd(e, q) != 1");
  if (powmod(q, m, e) != 1 % e) throw PreconditionError("MetacyclicGroup: q^m != 1 mod e");
  if (e * m > 50'000'000) throw PreconditionError("MetacyclicGroup: too large");
  qpow_.resize(m);
  std::uint64_t x = 1 % e;
  for (std::uint64_t j = 0; j < m; ++j) {
    qpow_[j] = x;
    x = mulmod(x, q, e);
  }
}

MetacyclicGroup MetacyclicGroup::for_conjugacy(std::uint64_t e, std::uint64_t q) {
  if (q < 2) throw PreconditionError("MetacyclicGroup: q < 2");
  return MetacyclicGroup(e, mult_order(q, e * (q - 1)), q);
}

std::uint32_t MetacyclicGroup::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint64_t ia = a % e_, ja = a / e_, ib = b % e_, jb = b / e_;
  return id((ia + qpow_[ja] * ib) % e_, (ja + jb) % m_);
}

std::uint32_t MetacyclicGroup::inv(std::uint32_t a) const {
  std::uint64_t i = a % e_, j = a / e_;
  std::uint64_t jn = (m_ - j) % m_;
  return id((e_ - qpow_[jn] * i % e_) % e_, jn);
}

std::vector<std::uint32_t> MetacyclicGroup::cyclic_subgroup(std::uint32_t x) const {
  std::vector<std::uint32_t> H;
  std::uint32_t y = id(0, 0);
  do {
    H.push_back(y);
    y = mul(y, x);
  } while (y != id(0, 0));
  std::sort(H.begin(), H.end());
  return H;
}

std::vector<std::uint32_t> MetacyclicGroup::conjugate_set(const std::vector<std::uint32_t>& H, std::uint32_t x) const {
  std::uint32_t xi = inv(x);
  std::vector<std::uint32_t> out;
  out.reserve(H.size());
  for (auto h : H) out.push_back(mul(mul(x, h), xi));
  std::sort(out.begin(), out.end());
  return out;
}

bool metacyclic_conjugate(const MetacyclicGroup& G, std::uint64_t i, std::uint64_t j) {
  if (i >= G.e() || j >= G.e()) throw PreconditionError("metacyclic_conjugate: index out of range");
  auto Hi = G.cyclic_subgroup(G.id(i, 1));
  auto Hj = G.cyclic_subgroup(G.id(j, 1));
  if (Hi == Hj) return true;
  if (Hi.size() != Hj.size()) return false;
  // the orbit under the generators is the full conjugacy class of Hi
  std::set<std::vector<std::uint32_t>> seen{Hi};
  std::deque<std::vector<std::uint32_t>> todo{Hi};
  while (!todo.empty()) {
    auto H = std::move(todo.front());
    todo.pop_front();
    for (std::uint32_t x : {G.tau(), G.sigma()}) {
      auto K = G.conjugate_set(H, x);
      if (K == Hj) return true;
      if (seen.insert(K).second) todo.push_back(std::move(K));
    }
  }
  return false;
}

bool metacyclic_conjugate_exhaustive(const MetacyclicGroup& G, std::uint64_t i, std::uint64_t j) {
  auto Hi = G.cyclic_subgroup(G.id(i, 1));
  auto Hj = G.cyclic_subgroup(G.id(j, 1));
  for (std::uint32_t x = 0; x < G.size(); ++x)
    if (G.conjugate_set(Hi, x) == Hj) return true;
  return false;
}

}  // namespace fiberscope
