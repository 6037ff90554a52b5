#include "fiberscope/finite_field.hpp"

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace fiberscope {

namespace {

void check_same(const FqElement& a, const FqElement& b) {
  if (a.field().get() != b.field().get() && !same_field(*a.field(), *b.field()))
    throw std::domain_error("FqElement: operands from different fields");
}

bool irreducible_over_prime_field(const FqPoly& m, std::uint32_t p) {
  int n = m.degree();
  const FqElement& z0 = m.zero();
  FqPoly x = FqPoly::monomial(one_like(z0), 1);
  // x^(p^k) mod m for k = 1..n by repeated p-th powers
  std::vector<FqPoly> frob(n + 1, FqPoly(z0));
  frob[0] = x;
  for (int k = 1; k <= n; ++k) frob[k] = pow_mod(frob[k - 1], std::uint64_t(p), m);
  if (frob[n] != x % m) return false;
  for (auto l : prime_factors_u64(n)) {
    FqPoly g = poly_gcd(frob[n / l] - x, m);
    if (g.degree() > 0) return false;
  }
  return true;
}

}  // namespace

FqElement::FqElement(FieldPtr F, std::vector<std::uint32_t> c) : F_(std::move(F)), c_(std::move(c)) {
  if (static_cast<int>(c_.size()) != F_->degree()) throw std::invalid_argument("FqElement: wrong length");
  for (auto x : c_)
    if (x >= F_->p()) throw std::invalid_argument("FqElement: coefficient out of range");
}

bool FqElement::is_zero() const {
  for (auto x : c_)
    if (x) return false;
  return true;
}

bool FqElement::is_one() const {
  if (c_.empty() || c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

std::uint64_t FqElement::ordinal() const {
  std::uint64_t k = 0;
  for (auto x : c_) k = k * F_->p() + x;
  return k;
}

FqElement FqElement::operator+(const FqElement& b) const {
  check_same(*this, b);
  std::uint32_t p = F_->p();
  std::vector<std::uint32_t> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) {
    std::uint32_t s = c_[i] + b.c_[i];
    r[i] = s >= p ? s - p : s;
  }
  FqElement out;
  out.F_ = F_;
  out.c_ = std::move(r);
  return out;
}

FqElement FqElement::operator-(const FqElement& b) const { return *this + (-b); }

FqElement FqElement::operator-() const {
  std::uint32_t p = F_->p();
  FqElement out = *this;
  for (auto& x : out.c_) x = x ? p - x : 0;
  return out;
}

FqElement FqElement::operator*(const FqElement& b) const {
  check_same(*this, b);
  const std::uint64_t p = F_->p();
  const int f = F_->degree();
  FqElement out;
  out.F_ = F_;
  if (f == 1) {
    out.c_ = {static_cast<std::uint32_t>(std::uint64_t(c_[0]) * b.c_[0] % p)};
    return out;
  }
  std::vector<std::uint64_t> t(2 * f - 1, 0);
  for (int i = 0; i < f; ++i) {
    if (!c_[i]) continue;
    for (int j = 0; j < f; ++j) t[i + j] = (t[i + j] + std::uint64_t(c_[i]) * b.c_[j]) % p;
  }
  const auto& m = F_->modulus();
  for (int i = 2 * f - 2; i >= f; --i) {
    std::uint64_t c = t[i];
    if (!c) continue;
    for (int j = 0; j < f; ++j) t[i - f + j] = (t[i - f + j] + (p - c) * m[j]) % p;
    t[i] = 0;
  }
  out.c_.resize(f);
  for (int i = 0; i < f; ++i) out.c_[i] = static_cast<std::uint32_t>(t[i]);
  return out;
}

FqElement FqElement::pow(std::uint64_t e) const {
  FqElement r = F_->one(), b = *this;
  while (e) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

FqElement FqElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in F_q");
  if (F_->degree() == 1) return F_->from_int(static_cast<long long>(invmod(c_[0], F_->p())));
  return pow(F_->order() - 2);
}

bool same_field(const FqField& a, const FqField& b) {
  return a.p() == b.p() && a.degree() == b.degree() && a.modulus() == b.modulus();
}

FqElement FqField::generator() const { return FqElement(shared_from_this(), gen_); }

FqElement FqField::zero() const { return FqElement(shared_from_this(), std::vector<std::uint32_t>(f_, 0)); }

FqElement FqField::one() const {
  std::vector<std::uint32_t> c(f_, 0);
  c[0] = 1;
  return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_int(long long n) const {
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  std::vector<std::uint32_t> c(f_, 0);
  c[0] = static_cast<std::uint32_t>(r);
  return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::from_ordinal(std::uint64_t k) const {
  if (k >= q_) throw std::out_of_range("FqField::from_ordinal");
  std::vector<std::uint32_t> c(f_, 0);
  for (int i = f_ - 1; i >= 0; --i) {
    c[i] = static_cast<std::uint32_t>(k % p_);
    k /= p_;
  }
  return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::element(std::vector<std::uint32_t> c) const {
  for (auto& x : c) x %= p_;
  c.resize(f_, 0);
  return FqElement(shared_from_this(), std::move(c));
}

FqElement FqField::w() const {
  if (f_ == 1) return from_int(-static_cast<long long>(modulus_[0]));
  std::vector<std::uint32_t> c(f_, 0);
  c[1] = 1;
  return FqElement(shared_from_this(), std::move(c));
}

std::vector<FqElement> FqField::elements() const {
  std::vector<FqElement> out;
  out.reserve(q_);
  for (std::uint64_t k = 0; k < q_; ++k) out.push_back(from_ordinal(k));
  return out;
}

std::uint64_t FqField::dlog(const FqElement& x) const {
  if (x.is_zero()) throw PreconditionError("dlog of zero");
  std::uint64_t n = q_ - 1;
  std::uint64_t m = static_cast<std::uint64_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (m == 0) m = 1;
  // baby steps g^j
  std::unordered_map<std::uint64_t, std::uint64_t> table;
  table.reserve(m * 2);
  FqElement g = generator();
  FqElement cur = one();
  for (std::uint64_t j = 0; j < m; ++j) {
    table.emplace(cur.ordinal(), j);
    cur = cur * g;
  }
  FqElement giant = g.pow(m).inverse();
  FqElement y = x;
  for (std::uint64_t i = 0; i <= m; ++i) {
    auto it = table.find(y.ordinal());
    if (it != table.end()) return (i * m + it->second) % n;
    y = y * giant;
  }
  throw std::logic_error("dlog: no solution (generator not primitive?)");
}

FieldPtr make_field(std::uint32_t p, int f) {
  if (!is_prime_u64(p)) throw PreconditionError("make_field: p = " + std::to_string(p) + " is not prime");
  if (f <= 0) throw PreconditionError("make_field: degree must be >= 1");
  double bits = f * std::log2(static_cast<double>(p));
  if (bits > 62) throw PreconditionError("make_field: field too large");
  std::shared_ptr<FqField> F(new FqField());
  F->p_ = p;
  F->f_ = f;
  F->q_ = ipow(p, f);
  if (f == 1) {
    F->modulus_ = {0, 1};
  } else {
    FieldPtr Fp = make_field(p, 1);
    // candidates ordered by (c_0, c_1, ..., c_{f-1}) lexicographically
    std::uint64_t count = ipow(p, f);
    bool found = false;
    for (std::uint64_t k = 0; k < count && !found; ++k) {
      std::vector<std::uint32_t> c(f + 1, 0);
      std::uint64_t t = k;
      for (int i = f - 1; i >= 0; --i) {
        c[i] = static_cast<std::uint32_t>(t % p);
        t /= p;
      }
      c[f] = 1;
      if (c[0] == 0) continue;
      std::vector<FqElement> pc;
      for (auto x : c) pc.push_back(Fp->from_int(x));
      FqPoly m(pc, Fp->zero());
      if (irreducible_over_prime_field(m, p)) {
        F->modulus_ = c;
        found = true;
      }
    }
    if (!found) throw std::logic_error("make_field: no irreducible polynomial found");
  }
  std::uint64_t n = F->q_ - 1;
  auto ls = prime_factors_u64(n);
  for (std::uint64_t k = 1; k < F->q_; ++k) {
    FqElement g = F->from_ordinal(k);
    bool prim = true;
    for (auto l : ls)
      if (g.pow(n / l).is_one()) {
        prim = false;
        break;
      }
    if (prim) {
      F->gen_ = g.coeffs();
      break;
    }
  }
  return F;
}

bool is_eth_power(const FqElement& x, std::uint64_t e) {
  const auto& F = *x.field();
  if (x.is_zero()) throw PreconditionError("is_eth_power: x = 0");
  if (e == 0 || e % F.p() == 0) throw PreconditionError("is_eth_power: p divides e");
  std::uint64_t n = F.order() - 1;
  std::uint64_t g = gcd_u64(e, n);
  return x.pow(n / g).is_one();
}

FqPoly fq_poly(const FieldPtr& F, const std::vector<long long>& coeffs) {
  std::vector<FqElement> v;
  for (auto c : coeffs) v.push_back(F->from_int(c));
  return FqPoly(std::move(v), F->zero());
}

}  // namespace fiberscope
