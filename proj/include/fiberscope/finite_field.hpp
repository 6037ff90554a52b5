#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fiberscope/integer.hpp"
#include "fiberscope/poly.hpp"

namespace fiberscope {

class FqField;
using FieldPtr = std::shared_ptr<const FqField>;

class FqElement {
 public:
  FqElement() = default;
  FqElement(FieldPtr F, std::vector<std::uint32_t> c);

  const FieldPtr& field() const { return F_; }
  const std::vector<std::uint32_t>& coeffs() const { return c_; }
  bool is_zero() const;
  bool is_one() const;
  // position in the fixed enumeration order (constant coefficient most significant)
  std::uint64_t ordinal() const;

  FqElement operator+(const FqElement& b) const;
  FqElement operator-(const FqElement& b) const;
  FqElement operator-() const;
  FqElement operator*(const FqElement& b) const;
  FqElement pow(std::uint64_t e) const;
  FqElement inverse() const;

  bool operator==(const FqElement& b) const { return c_ == b.c_; }
  bool operator!=(const FqElement& b) const { return c_ != b.c_; }
  bool operator<(const FqElement& b) const { return ordinal() < b.ordinal(); }

 private:
  FieldPtr F_;
  std::vector<std::uint32_t> c_;
};

class FqField : public std::enable_shared_from_this<FqField> {
 public:
  std::uint32_t p() const { return p_; }
  int degree() const { return f_; }
  std::uint64_t order() const { return q_; }
  // monic, low degree first, length f + 1
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  FqElement generator() const;

  FqElement zero() const;
  FqElement one() const;
  FqElement from_int(long long n) const;
  FqElement from_ordinal(std::uint64_t k) const;
  FqElement element(std::vector<std::uint32_t> c) const;
  // the class of w, i.e. the image of the variable
  FqElement w() const;
  std::vector<FqElement> elements() const;

  // discrete log with respect to generator(), in [0, q - 1)
  std::uint64_t dlog(const FqElement& x) const;

  friend FieldPtr make_field(std::uint32_t p, int f);

 private:
  FqField() = default;
  std::uint32_t p_ = 0;
  int f_ = 0;
  std::uint64_t q_ = 0;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> gen_;  // coefficients only; an element would own the field
};

FieldPtr make_field(std::uint32_t p, int f);

// x^((q-1)/g) == 1 with g = gcd(e, q-1)
bool is_eth_power(const FqElement& x, std::uint64_t e);

bool same_field(const FqField& a, const FqField& b);

inline FqElement zero_like(const FqElement& x) { return x.field()->zero(); }
inline FqElement one_like(const FqElement& x) { return x.field()->one(); }
inline FqElement from_int_like(const FqElement& x, long n) { return x.field()->from_int(n); }
inline bool is_zero(const FqElement& x) { return x.is_zero(); }
inline FqElement inverse(const FqElement& x) { return x.inverse(); }

using FqPoly = Poly<FqElement>;

FqPoly fq_poly(const FieldPtr& F, const std::vector<long long>& coeffs);

}  // namespace fiberscope
