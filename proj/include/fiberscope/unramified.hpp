#pragma once

#include <memory>
#include <vector>

#include <gmpxx.h>

#include "fiberscope/finite_field.hpp"
#include "fiberscope/padic.hpp"

namespace fiberscope {

// O_K' = Z_p[w]/(M(w)), M a monic lift of the residue field modulus
class UnramifiedRing {
 public:
  static std::shared_ptr<const UnramifiedRing> make(const FieldPtr& residue);
  const FieldPtr& residue_field() const { return F_; }
  std::uint32_t p() const { return F_->p(); }
  int degree() const { return F_->degree(); }
  const std::vector<mpz_class>& modulus() const { return M_; }

 private:
  FieldPtr F_;
  std::vector<mpz_class> M_;
};

using RingPtr = std::shared_ptr<const UnramifiedRing>;

class UnramifiedElement {
 public:
  UnramifiedElement() = default;
  static UnramifiedElement from_integer(const RingPtr& R, int prec, const mpz_class& n);
  static UnramifiedElement from_padic(const RingPtr& R, const PadicInt& x);
  // coefficient-wise lift of a residue, digits in [0, p)
  static UnramifiedElement lift(const RingPtr& R, const FqElement& x, int prec);
  static UnramifiedElement from_coeffs(const RingPtr& R, int prec, std::vector<mpz_class> c, bool exact = false);

  const RingPtr& ring() const { return R_; }
  int prec() const { return prec_; }
  bool known_exact() const { return exact_; }
  const std::vector<mpz_class>& coeffs() const { return c_; }
  PadicInt coefficient(int i) const;

  Valuation valuation() const;
  bool is_zero() const;
  FqElement reduce() const;

  UnramifiedElement operator+(const UnramifiedElement& b) const;
  UnramifiedElement operator-(const UnramifiedElement& b) const;
  UnramifiedElement operator-() const;
  UnramifiedElement operator*(const UnramifiedElement& b) const;
  bool operator==(const UnramifiedElement& b) const;

  UnramifiedElement pow(const mpz_class& e) const;
  UnramifiedElement divide_by_p(int k) const;
  UnramifiedElement with_prec(int n) const;
  UnramifiedElement inverse() const;  // units only

 private:
  RingPtr R_;
  int prec_ = 0;
  std::vector<mpz_class> c_;
  bool exact_ = false;
};

inline UnramifiedElement zero_like(const UnramifiedElement& x) {
  return UnramifiedElement::from_integer(x.ring(), x.prec(), 0);
}
inline UnramifiedElement one_like(const UnramifiedElement& x) {
  return UnramifiedElement::from_integer(x.ring(), x.prec(), 1);
}
inline UnramifiedElement from_int_like(const UnramifiedElement& x, long n) {
  return UnramifiedElement::from_integer(x.ring(), x.prec(), n);
}
inline bool is_zero(const UnramifiedElement& x) { return x.is_zero(); }

using ZqPoly = Poly<UnramifiedElement>;

// the unique root of unity or zero congruent to x, to precision N
UnramifiedElement teichmuller_lift(const RingPtr& R, const FqElement& x, int N);

FqPoly reduce(const ZqPoly& f);
ZqPoly lift(const RingPtr& R, const FqPoly& f, int prec);
int min_prec(const ZqPoly& f);

}  // namespace fiberscope
