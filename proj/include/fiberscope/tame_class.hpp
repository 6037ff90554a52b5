#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "fiberscope/finite_field.hpp"

namespace fiberscope {

// K'((u p)^(1/e)) over K' = unramified of degree f over Q_p
struct TameExtensionClass {
  std::uint32_t p = 0;
  int f = 1;
  std::uint64_t e = 1;
  std::uint64_t unit_index = 0;  // dlog(u) mod g
  std::uint64_t g = 1;           // gcd(e, p^f - 1)

  bool operator==(const TameExtensionClass&) const = default;
  auto operator<=>(const TameExtensionClass&) const = default;
  std::string str() const;
};

TameExtensionClass classify_binomial(std::uint32_t p, int f, std::uint64_t e, const FqElement& u);
bool iso_test(const TameExtensionClass& a, const TameExtensionClass& b);
std::uint64_t count_classes(std::uint32_t p, int f, std::uint64_t e);
// gcd(e, (q^f - 1)/(q - 1))
std::uint64_t realizability_gcd(std::uint64_t e, int f, std::uint64_t q);
bool realizability(std::uint64_t e, int f, std::uint64_t q);
mpq_class proportion_realizable(std::uint64_t e, int f, std::uint64_t q);
std::uint64_t max_abelian_subdegree(std::uint64_t e, std::uint64_t q);

// <tau, sigma | tau^e, sigma^m, sigma tau sigma^-1 = tau^q>, elements tau^i sigma^j
class MetacyclicGroup {
 public:
  MetacyclicGroup(std::uint64_t e, std::uint64_t m, std::uint64_t q);
  // quotient used for subgroup conjugacy: m = ord of q mod e(q-1), so that
  // every <tau^i sigma> contains sigma^m
  static MetacyclicGroup for_conjugacy(std::uint64_t e, std::uint64_t q);

  std::uint64_t e() const { return e_; }
  std::uint64_t m() const { return m_; }
  std::uint64_t q() const { return q_; }
  std::uint32_t size() const { return static_cast<std::uint32_t>(e_ * m_); }

  std::uint32_t id(std::uint64_t i, std::uint64_t j) const { return static_cast<std::uint32_t>((j % m_) * e_ + i % e_); }
  std::uint64_t tau_exp(std::uint32_t x) const { return x % e_; }
  std::uint64_t sigma_exp(std::uint32_t x) const { return x / e_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t tau() const { return id(1 % e_, 0); }
  std::uint32_t sigma() const { return id(0, 1 % m_); }
  // sorted element ids of the cyclic subgroup generated by x
  std::vector<std::uint32_t> cyclic_subgroup(std::uint32_t x) const;
  std::vector<std::uint32_t> conjugate_set(const std::vector<std::uint32_t>& H, std::uint32_t x) const;

 private:
  std::uint64_t e_, m_, q_;
  std::vector<std::uint64_t> qpow_;  // q^j mod e
};

// is <tau^i sigma> conjugate to <tau^j sigma>; orbit of H_i under conjugation by the generators
bool metacyclic_conjugate(const MetacyclicGroup& G, std::uint64_t i, std::uint64_t j);
// the same question answered by trying every element as conjugator
bool metacyclic_conjugate_exhaustive(const MetacyclicGroup& G, std::uint64_t i, std::uint64_t j);

}  // namespace fiberscope
