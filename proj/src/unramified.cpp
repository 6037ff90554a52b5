#include "fiberscope/unramified.hpp"

#include <algorithm>
#include <stdexcept>

namespace fiberscope {

namespace {

void normalize(std::vector<mpz_class>& c, const mpz_class& M) {
  for (auto& x : c) {
    x %= M;
    if (x < 0) x += M;
  }
}

}  // namespace

RingPtr UnramifiedRing::make(const FieldPtr& residue) {
  auto R = std::shared_ptr<UnramifiedRing>(new UnramifiedRing());
  R->F_ = residue;
  for (auto c : residue->modulus()) R->M_.emplace_back(static_cast<unsigned long>(c));
  return R;
}

UnramifiedElement UnramifiedElement::from_coeffs(const RingPtr& R, int prec, std::vector<mpz_class> c, bool exact) {
  if (static_cast<int>(c.size()) != R->degree()) throw std::invalid_argument("UnramifiedElement: wrong length");
  UnramifiedElement x;
  x.R_ = R;
  x.prec_ = prec;
  const mpz_class& M = p_power(R->p(), prec);
  if (exact)
    for (auto& v : c)
      if (v < 0 || v >= M) exact = false;
  normalize(c, M);
  x.c_ = std::move(c);
  x.exact_ = exact;
  return x;
}

UnramifiedElement UnramifiedElement::from_integer(const RingPtr& R, int prec, const mpz_class& n) {
  std::vector<mpz_class> c(R->degree(), 0);
  c[0] = n;
  return from_coeffs(R, prec, std::move(c), true);
}

UnramifiedElement UnramifiedElement::from_padic(const RingPtr& R, const PadicInt& x) {
  if (x.p() != R->p()) throw std::invalid_argument("from_padic: prime mismatch");
  std::vector<mpz_class> c(R->degree(), 0);
  c[0] = x.mantissa();
  return from_coeffs(R, x.prec(), std::move(c), x.known_exact());
}

UnramifiedElement UnramifiedElement::lift(const RingPtr& R, const FqElement& x, int prec) {
  std::vector<mpz_class> c;
  for (auto v : x.coeffs()) c.emplace_back(static_cast<unsigned long>(v));
  return from_coeffs(R, prec, std::move(c), false);
}

PadicInt UnramifiedElement::coefficient(int i) const {
  if (exact_) return PadicInt::from_integer(R_->p(), prec_, c_.at(i));
  return PadicInt::approximate(R_->p(), prec_, c_.at(i));
}

bool UnramifiedElement::is_zero() const {
  for (auto& v : c_)
    if (v != 0) return false;
  return true;
}

Valuation UnramifiedElement::valuation() const {
  if (is_zero()) return exact_ ? Valuation::infinite() : Valuation::at_least(prec_);
  int best = prec_;
  for (auto& v : c_) {
    if (v == 0) continue;
    int k = 0;
    mpz_class t = v;
    while (mpz_divisible_ui_p(t.get_mpz_t(), R_->p())) {
      t /= static_cast<unsigned long>(R_->p());
      ++k;
    }
    best = std::min(best, k);
  }
  return Valuation::finite(best);
}

FqElement UnramifiedElement::reduce() const {
  if (prec_ == 0) throw BelowPrecision("reduce: precision 0");
  std::vector<std::uint32_t> r;
  for (auto& v : c_) r.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(v.get_mpz_t(), R_->p())));
  return R_->residue_field()->element(std::move(r));
}

UnramifiedElement UnramifiedElement::operator+(const UnramifiedElement& b) const {
  int n = std::min(prec_, b.prec_);
  std::vector<mpz_class> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] + b.c_[i];
  return from_coeffs(R_, n, std::move(c), exact_ && b.exact_);
}

UnramifiedElement UnramifiedElement::operator-(const UnramifiedElement& b) const {
  int n = std::min(prec_, b.prec_);
  std::vector<mpz_class> c(c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = c_[i] - b.c_[i];
  return from_coeffs(R_, n, std::move(c), exact_ && b.exact_);
}

UnramifiedElement UnramifiedElement::operator-() const { return zero_like(*this) - *this; }

UnramifiedElement UnramifiedElement::operator*(const UnramifiedElement& b) const {
  int n = std::min(prec_, b.prec_);
  const int f = R_->degree();
  bool ex = exact_ && b.exact_;
  if ((exact_ && is_zero()) || (b.exact_ && b.is_zero())) return from_integer(R_, n, 0);
  if (f == 1) return from_coeffs(R_, n, {c_[0] * b.c_[0]}, ex);
  std::vector<mpz_class> t(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (c_[i] == 0) continue;
    for (int j = 0; j < f; ++j) t[i + j] += c_[i] * b.c_[j];
  }
  const auto& M = R_->modulus();
  bool wrapped = false;
  for (int i = 2 * f - 2; i >= f; --i) {
    if (t[i] == 0) continue;
    wrapped = true;
    mpz_class c = t[i];
    for (int j = 0; j < f; ++j) t[i - f + j] -= c * M[j];
    t[i] = 0;
  }
  t.resize(f);
  return from_coeffs(R_, n, std::move(t), ex && !wrapped);
}

bool UnramifiedElement::operator==(const UnramifiedElement& b) const {
  int n = std::min(prec_, b.prec_);
  const mpz_class& M = p_power(R_->p(), n);
  for (std::size_t i = 0; i < c_.size(); ++i)
    if ((c_[i] - b.c_[i]) % M != 0) return false;
  return true;
}

UnramifiedElement UnramifiedElement::pow(const mpz_class& e0) const {
  mpz_class e = e0;
  UnramifiedElement r = one_like(*this), b = *this;
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = r * b;
    e >>= 1;
    if (e > 0) b = b * b;
  }
  return r;
}

UnramifiedElement UnramifiedElement::divide_by_p(int k) const {
  if (k == 0) return *this;
  if (is_zero()) {
    if (exact_) return from_integer(R_, std::max(prec_ - k, 0), 0);
    if (prec_ < k) throw BelowPrecision("divide_by_p: not enough digits");
    return from_coeffs(R_, prec_ - k, std::vector<mpz_class>(c_.size(), 0), false);
  }
  if (valuation().value < k) throw std::domain_error("divide_by_p: valuation too small");
  const mpz_class& P = p_power(R_->p(), k);
  std::vector<mpz_class> c;
  for (auto& v : c_) c.push_back(v / P);
  return from_coeffs(R_, prec_ - k, std::move(c), exact_);
}

UnramifiedElement UnramifiedElement::with_prec(int n) const {
  if (n > prec_) throw BelowPrecision("with_prec: cannot raise precision");
  return from_coeffs(R_, n, c_, false);
}

UnramifiedElement UnramifiedElement::inverse() const {
  FqElement r = reduce();
  if (r.is_zero()) throw std::domain_error("UnramifiedElement::inverse: not a unit");
  // Newton: x <- x (2 - a x)
  UnramifiedElement x = lift(R_, r.inverse(), prec_);
  UnramifiedElement two = from_integer(R_, prec_, 2);
  for (int k = 1; k < prec_; k *= 2) x = x * (two - *this * x);
  return x;
}

UnramifiedElement teichmuller_lift(const RingPtr& R, const FqElement& x, int N) {
  if (!same_field(*x.field(), *R->residue_field())) throw PreconditionError("teichmuller_lift: field mismatch");
  UnramifiedElement y = UnramifiedElement::lift(R, x, N);
  if (x.is_zero()) return UnramifiedElement::from_integer(R, N, 0);
  mpz_class q = static_cast<unsigned long>(R->residue_field()->order());
  // each step gains one digit
  for (int i = 0; i < N; ++i) {
    UnramifiedElement z = y.pow(q);
    if (z == y) break;
    y = z;
  }
  return y;
}

FqPoly reduce(const ZqPoly& f) {
  std::vector<FqElement> c;
  for (auto& x : f.coeffs()) c.push_back(x.reduce());
  const auto& z = f.zero();
  return FqPoly(std::move(c), z.ring()->residue_field()->zero());
}

ZqPoly lift(const RingPtr& R, const FqPoly& f, int prec) {
  std::vector<UnramifiedElement> c;
  for (auto& x : f.coeffs()) c.push_back(UnramifiedElement::lift(R, x, prec));
  return ZqPoly(std::move(c), UnramifiedElement::from_integer(R, prec, 0));
}

int min_prec(const ZqPoly& f) {
  int n = f.zero().prec();
  for (auto& x : f.coeffs()) n = std::min(n, x.prec());
  return n;
}

}  // namespace fiberscope
