#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "fiberscope/finite_field.hpp"
#include "fiberscope/integer.hpp"

namespace fiberscope {

// val of a p-adic quantity: a finite value, exact zero, or "at least prec"
struct Valuation {
  enum class Kind { Finite, Infinite, AtLeast };
  Kind kind = Kind::Finite;
  int value = 0;  // the value, or the known lower bound for AtLeast

  static Valuation finite(int v) { return {Kind::Finite, v}; }
  static Valuation infinite() { return {Kind::Infinite, 0}; }
  static Valuation at_least(int v) { return {Kind::AtLeast, v}; }
  bool is_finite() const { return kind == Kind::Finite; }
  bool is_infinite() const { return kind == Kind::Infinite; }
  bool is_at_least() const { return kind == Kind::AtLeast; }
  // throws BelowPrecision unless finite
  int get() const;
  std::string str() const;
};

// p^n, cached per thread
const mpz_class& p_power(std::uint32_t p, int n);

class PadicInt {
 public:
  PadicInt() = default;
  static PadicInt from_integer(std::uint32_t p, int prec, const mpz_class& n);
  static PadicInt from_rational(std::uint32_t p, int prec, const mpq_class& x);
  static PadicInt from_residue(std::uint32_t p, int prec, std::uint64_t r);
  // a value known only mod p^prec
  static PadicInt approximate(std::uint32_t p, int prec, const mpz_class& m);

  std::uint32_t p() const { return p_; }
  int prec() const { return prec_; }
  const mpz_class& mantissa() const { return m_; }
  bool known_exact() const { return exact_; }

  Valuation valuation() const;
  bool is_zero() const { return m_ == 0; }
  bool is_unit() const;
  std::uint64_t residue() const;

  PadicInt operator+(const PadicInt& b) const;
  PadicInt operator-(const PadicInt& b) const;
  PadicInt operator-() const;
  PadicInt operator*(const PadicInt& b) const;
  bool operator==(const PadicInt& b) const;

  // exact division by p^k; needs val >= k; precision drops by k
  PadicInt divide_by_p(int k) const;
  PadicInt inverse() const;  // units only
  PadicInt with_prec(int n) const;
  std::string str() const;

 private:
  PadicInt(std::uint32_t p, int prec, mpz_class m, bool exact);
  std::uint32_t p_ = 0;
  int prec_ = 0;
  mpz_class m_;
  bool exact_ = false;
};

inline PadicInt zero_like(const PadicInt& x) { return PadicInt::from_integer(x.p(), x.prec(), 0); }
inline PadicInt one_like(const PadicInt& x) { return PadicInt::from_integer(x.p(), x.prec(), 1); }
inline PadicInt from_int_like(const PadicInt& x, long n) { return PadicInt::from_integer(x.p(), x.prec(), n); }
inline bool is_zero(const PadicInt& x) { return x.is_zero(); }

// Hensel lift of a simple root r0 of f mod p (f over Z) to precision prec
PadicInt hensel_root(const Poly<mpz_class>& f, std::uint32_t p, std::uint64_t r0, int prec);

}  // namespace fiberscope
