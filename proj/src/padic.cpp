#include "fiberscope/padic.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace fiberscope {

int Valuation::get() const {
  if (kind == Kind::Finite) return value;
  if (kind == Kind::Infinite) throw BelowPrecision("valuation of an exact zero requested");
  throw BelowPrecision("valuation undetermined: at least " + std::to_string(value));
}

std::string Valuation::str() const {
  if (kind == Kind::Finite) return std::to_string(value);
  if (kind == Kind::Infinite) return "inf";
  return ">=" + std::to_string(value);
}

const mpz_class& p_power(std::uint32_t p, int n) {
  thread_local std::map<std::uint32_t, std::vector<mpz_class>> cache;
  if (n < 0) throw std::invalid_argument("p_power: negative exponent");
  auto& v = cache[p];
  if (v.empty()) v.push_back(1);
  while (static_cast<int>(v.size()) <= n) v.push_back(v.back() * static_cast<unsigned long>(p));
  return v[n];
}

PadicInt::PadicInt(std::uint32_t p, int prec, mpz_class m, bool exact)
    : p_(p), prec_(prec), m_(std::move(m)), exact_(exact) {}

PadicInt PadicInt::from_integer(std::uint32_t p, int prec, const mpz_class& n) {
  if (prec < 0) throw std::invalid_argument("PadicInt: negative precision");
  const mpz_class& M = p_power(p, prec);
  mpz_class m = n % M;
  if (m < 0) m += M;
  return PadicInt(p, prec, m, n >= 0 && n < M);
}

PadicInt PadicInt::from_rational(std::uint32_t p, int prec, const mpq_class& x) {
  if (mpz_divisible_ui_p(x.get_den().get_mpz_t(), p)) throw PreconditionError("rational not p-integral");
  if (x.get_den() == 1) return from_integer(p, prec, x.get_num());
  const mpz_class& M = p_power(p, prec);
  mpz_class inv;
  if (prec == 0) return PadicInt(p, 0, 0, false);
  mpz_invert(inv.get_mpz_t(), mpz_class(x.get_den()).get_mpz_t(), M.get_mpz_t());
  mpz_class m = (x.get_num() * inv) % M;
  if (m < 0) m += M;
  return PadicInt(p, prec, m, false);
}

PadicInt PadicInt::from_residue(std::uint32_t p, int prec, std::uint64_t r) {
  return from_integer(p, prec, mpz_class(static_cast<unsigned long>(r)));
}

PadicInt PadicInt::approximate(std::uint32_t p, int prec, const mpz_class& m) {
  const mpz_class& M = p_power(p, prec);
  mpz_class r = m % M;
  if (r < 0) r += M;
  return PadicInt(p, prec, r, false);
}

Valuation PadicInt::valuation() const {
  if (m_ == 0) return exact_ ? Valuation::infinite() : Valuation::at_least(prec_);
  int v = 0;
  mpz_class t = m_;
  while (mpz_divisible_ui_p(t.get_mpz_t(), p_)) {
    t /= static_cast<unsigned long>(p_);
    ++v;
  }
  return Valuation::finite(v);
}

bool PadicInt::is_unit() const { return prec_ > 0 && !mpz_divisible_ui_p(m_.get_mpz_t(), p_); }

std::uint64_t PadicInt::residue() const {
  if (prec_ == 0) throw BelowPrecision("residue of a precision-0 element");
  return mpz_fdiv_ui(m_.get_mpz_t(), p_);
}

PadicInt PadicInt::operator+(const PadicInt& b) const {
  int n = std::min(prec_, b.prec_);
  const mpz_class& M = p_power(p_, n);
  mpz_class s = m_ + b.m_;
  bool ex = exact_ && b.exact_ && s < M;
  mpz_class r = s % M;
  return PadicInt(p_, n, r, ex);
}

PadicInt PadicInt::operator-(const PadicInt& b) const {
  int n = std::min(prec_, b.prec_);
  const mpz_class& M = p_power(p_, n);
  mpz_class s = m_ - b.m_;
  bool ex = exact_ && b.exact_ && s >= 0;
  mpz_class r = s % M;
  if (r < 0) r += M;
  return PadicInt(p_, n, r, ex);
}

PadicInt PadicInt::operator-() const { return from_integer(p_, prec_, 0) - *this; }

PadicInt PadicInt::operator*(const PadicInt& b) const {
  int n = std::min(prec_, b.prec_);
  const mpz_class& M = p_power(p_, n);
  mpz_class s = m_ * b.m_;
  bool ex = exact_ && b.exact_ && s < M;
  // an exact zero factor makes an exact zero
  if ((exact_ && m_ == 0) || (b.exact_ && b.m_ == 0)) ex = true;
  mpz_class r = s % M;
  return PadicInt(p_, n, r, ex);
}

bool PadicInt::operator==(const PadicInt& b) const {
  int n = std::min(prec_, b.prec_);
  const mpz_class& M = p_power(p_, n);
  return p_ == b.p_ && (m_ - b.m_) % M == 0;
}

PadicInt PadicInt::divide_by_p(int k) const {
  if (k == 0) return *this;
  if (m_ == 0) {
    if (exact_) return PadicInt(p_, std::max(prec_ - k, 0), 0, true);
    if (prec_ < k) throw BelowPrecision("divide_by_p: not enough digits");
    return PadicInt(p_, prec_ - k, 0, false);
  }
  auto v = valuation();
  if (v.value < k) throw std::domain_error("divide_by_p: valuation too small");
  mpz_class r = m_ / p_power(p_, k);
  return PadicInt(p_, prec_ - k, r, exact_);
}

PadicInt PadicInt::inverse() const {
  if (!is_unit()) throw std::domain_error("PadicInt::inverse: not a unit");
  const mpz_class& M = p_power(p_, prec_);
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), m_.get_mpz_t(), M.get_mpz_t());
  return PadicInt(p_, prec_, inv, exact_ && m_ == 1);
}

PadicInt PadicInt::with_prec(int n) const {
  if (n > prec_) throw BelowPrecision("with_prec: cannot raise precision");
  mpz_class r = m_ % p_power(p_, n);
  return PadicInt(p_, n, r, exact_ && r == m_);
}

std::string PadicInt::str() const { return m_.get_str() + " + O(" + std::to_string(p_) + "^" + std::to_string(prec_) + ")"; }

PadicInt hensel_root(const Poly<mpz_class>& f, std::uint32_t p, std::uint64_t r0, int prec) {
  // Newton iteration x <- x - f(x)/f'(x), doubling precision
  Poly<mpz_class> df = derivative(f);
  mpz_class x = static_cast<unsigned long>(r0 % p);
  mpz_class fd = eval(df, x);
  if (mpz_divisible_ui_p(fd.get_mpz_t(), p)) throw PreconditionError("hensel_root: root is not simple mod p");
  if (!mpz_divisible_ui_p(mpz_class(eval(f, x)).get_mpz_t(), p)) throw PreconditionError("hensel_root: not a root mod p");
  int k = 1;
  while (k < prec) {
    k = std::min(2 * k, prec);
    const mpz_class& M = p_power(p, k);
    mpz_class fx = eval(f, x) % M;
    mpz_class d = eval(df, x) % M;
    if (d < 0) d += M;
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), M.get_mpz_t());
    x = (x - fx * inv) % M;
    if (x < 0) x += M;
  }
  return PadicInt::approximate(p, prec, x);
}

}  // namespace fiberscope
