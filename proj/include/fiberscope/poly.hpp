#pragma once

// Dense univariate polynomials over a ring element type T.
// T supplies +, -, *, unary -, == and the free functions
//   zero_like(x), one_like(x), from_int_like(x, n), is_zero(x)
// and, for field algorithms, inverse(x).

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fiberscope {

inline mpz_class zero_like(const mpz_class&) { return 0; }
inline mpz_class one_like(const mpz_class&) { return 1; }
inline mpz_class from_int_like(const mpz_class&, long n) { return n; }
inline bool is_zero(const mpz_class& x) { return x == 0; }

inline mpq_class zero_like(const mpq_class&) { return 0; }
inline mpq_class one_like(const mpq_class&) { return 1; }
inline mpq_class from_int_like(const mpq_class&, long n) { return n; }
inline bool is_zero(const mpq_class& x) { return x == 0; }
inline mpq_class inverse(const mpq_class& x) {
  if (x == 0) throw std::domain_error("inverse of zero");
  return 1 / x;
}

namespace detail {
// unqualified so that argument-dependent lookup sees each ring's is_zero
template <class T>
bool coeff_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const T& proto) : zero_(zero_like(proto)) {}
  Poly(std::vector<T> c, const T& proto) : c_(std::move(c)), zero_(zero_like(proto)) { trim(); }

  static Poly constant(const T& c) { return Poly(std::vector<T>{c}, c); }
  static Poly monomial(const T& c, int deg) {
    std::vector<T> v(deg + 1, zero_like(c));
    v[deg] = c;
    return Poly(std::move(v), c);
  }
  // z - a
  static Poly linear_root(const T& a) { return Poly(std::vector<T>{-a, one_like(a)}, a); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  const T& zero() const { return zero_; }
  const T& operator[](int i) const {
    return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : zero_;
  }
  const T& lead() const {
    if (c_.empty()) throw std::domain_error("lead of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == one_like(zero_); }

  void set(int i, const T& v) {
    if (i >= static_cast<int>(c_.size())) c_.resize(i + 1, zero_);
    c_[i] = v;
    trim();
  }

  template <class F>
  Poly map(F fn) const {
    std::vector<T> v;
    v.reserve(c_.size());
    for (const auto& x : c_) v.push_back(fn(x));
    return Poly(std::move(v), fn(zero_));
  }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(T(a[int(i)] + b[int(i)]));
    return Poly(std::move(v), a.zero_proto(b));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::size_t n = std::max(a.c_.size(), b.c_.size());
    std::vector<T> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(T(a[int(i)] - b[int(i)]));
    return Poly(std::move(v), a.zero_proto(b));
  }
  friend Poly operator-(const Poly& a) {
    return a.map([](const T& x) { return T(-x); });
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.zero_proto(b));
    std::vector<T> v(a.c_.size() + b.c_.size() - 1, a.zero_proto(b));
    // no skipping of zero coefficients: an approximate zero still carries its precision
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] = T(v[i + j] + a.c_[i] * b.c_[j]);
    }
    return Poly(std::move(v), a.zero_proto(b));
  }
  friend Poly operator*(const T& s, const Poly& a) {
    return a.map([&](const T& x) { return T(s * x); });
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

 private:
  void trim() {
    while (!c_.empty() && detail::coeff_is_zero(c_.back())) c_.pop_back();
  }
  // an element carrying the ring context, from whichever operand has one
  const T& zero_proto(const Poly& b) const { return c_.empty() && !b.c_.empty() ? b.zero_ : zero_; }

  std::vector<T> c_;
  T zero_{};
};

template <class T>
T eval(const Poly<T>& f, const T& x) {
  T r = zero_like(x);
  for (int i = f.degree(); i >= 0; --i) r = T(r * x + f[i]);
  return r;
}

template <class T>
Poly<T> derivative(const Poly<T>& f) {
  std::vector<T> v;
  for (int i = 1; i <= f.degree(); ++i) v.push_back(T(from_int_like(f.zero(), i) * f[i]));
  return Poly<T>(std::move(v), f.zero());
}

// f(z + c)
template <class T>
Poly<T> taylor_shift(const Poly<T>& f, const T& c) {
  // Horner on raw coefficient vectors so that approximate zeros keep their precision
  if (f.is_zero()) return f;
  std::vector<T> r;
  for (int i = f.degree(); i >= 0; --i) {
    std::vector<T> nr(r.size() + 1, zero_like(c));
    for (std::size_t k = 0; k < r.size(); ++k) {
      nr[k + 1] = T(nr[k + 1] + r[k]);
      nr[k] = T(nr[k] + c * r[k]);
    }
    nr[0] = T(nr[0] + f[i]);
    r = std::move(nr);
  }
  return Poly<T>(std::move(r), c);
}

// division by a monic polynomial, valid over any commutative ring
template <class T>
std::pair<Poly<T>, Poly<T>> divrem_monic(const Poly<T>& a, const Poly<T>& b) {
  if (!b.is_monic()) throw std::domain_error("divrem_monic: divisor not monic");
  int db = b.degree();
  if (a.degree() < db) return {Poly<T>(a.zero()), a};
  std::vector<T> r = a.coeffs();
  std::vector<T> q(a.degree() - db + 1, a.zero());
  for (int i = a.degree(); i >= db; --i) {
    T c = r[i];
    q[i - db] = c;
    if (is_zero(c)) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = T(r[i - db + j] - c * b[j]);
  }
  r.resize(db);
  return {Poly<T>(std::move(q), a.zero()), Poly<T>(std::move(r), a.zero())};
}

template <class T>
std::pair<Poly<T>, Poly<T>> divrem(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw std::domain_error("division by zero polynomial");
  T li = inverse(b.lead());
  auto [q, r] = divrem_monic(a, li * b);
  return {li * q, r};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divrem(a, b).second;
}

template <class T>
Poly<T> make_monic(const Poly<T>& f) {
  if (f.is_zero()) return f;
  return inverse(f.lead()) * f;
}

template <class T>
Poly<T> poly_gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

// returns (g, s, t) with s a + t b = g monic
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> ext_gcd(const Poly<T>& a, const Poly<T>& b) {
  const T& z = a.is_zero() ? b.zero() : a.zero();
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0 = Poly<T>::constant(one_like(z)), s1(z);
  Poly<T> t0(z), t1 = Poly<T>::constant(one_like(z));
  while (!r1.is_zero()) {
    auto [q, r] = divrem(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T li = inverse(r0.lead());
  return {li * r0, li * s0, li * t0};
}

template <class T, class E>
Poly<T> pow_mod(Poly<T> base, E e, const Poly<T>& m) {
  Poly<T> r = Poly<T>::constant(one_like(m.zero())) % m;
  base = base % m;
  while (e > 0) {
    if (e % 2 == 1) r = (r * base) % m;
    e /= 2;
    if (e > 0) base = (base * base) % m;
  }
  return r;
}

template <class T>
Poly<T> poly_pow(const Poly<T>& a, int e) {
  Poly<T> r = Poly<T>::constant(one_like(a.zero()));
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

// division-free determinant (Berkowitz); works over any commutative ring
template <class T>
T determinant(const std::vector<std::vector<T>>& A, const T& proto) {
  int n = static_cast<int>(A.size());
  if (n == 0) return one_like(proto);
  // characteristic polynomial coefficients, built up over leading principal minors
  std::vector<T> c{one_like(proto), T(-A[0][0])};
  for (int k = 1; k < n; ++k) {
    // column vector R = A[0..k-1][k], row S = A[k][0..k-1], a = A[k][k]
    std::vector<T> col(k), row(k);
    for (int i = 0; i < k; ++i) {
      col[i] = A[i][k];
      row[i] = A[k][i];
    }
    // Toeplitz entries: 1, -a, -S R, -S M R, ...
    std::vector<T> t;
    t.push_back(one_like(proto));
    t.push_back(T(-A[k][k]));
    std::vector<T> v = col;
    for (int j = 0; j < k; ++j) {
      T s = zero_like(proto);
      for (int i = 0; i < k; ++i) s = T(s + row[i] * v[i]);
      t.push_back(T(-s));
      std::vector<T> w(k, zero_like(proto));
      for (int i = 0; i < k; ++i)
        for (int l = 0; l < k; ++l) w[i] = T(w[i] + A[i][l] * v[l]);
      v = std::move(w);
    }
    std::vector<T> nc(k + 2, zero_like(proto));
    for (int i = 0; i < k + 2; ++i)
      for (int j = 0; j <= i && j < static_cast<int>(c.size()); ++j)
        if (i - j < static_cast<int>(t.size())) nc[i] = T(nc[i] + t[i - j] * c[j]);
    c = std::move(nc);
  }
  T d = c[n];
  return (n % 2 == 0) ? d : T(-d);
}

template <class T>
std::vector<std::vector<T>> sylvester_matrix(const Poly<T>& f, const Poly<T>& g) {
  int n = f.degree(), m = g.degree();
  int N = n + m;
  const T& z = f.zero();
  std::vector<std::vector<T>> S(N, std::vector<T>(N, z));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) S[i][i + j] = f[n - j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) S[m + i][i + j] = g[m - j];
  return S;
}

// res(f, g) = lc(f)^deg g * prod_{f(a)=0} g(a)
template <class T>
T resultant(const Poly<T>& f, const Poly<T>& g) {
  if (f.is_zero() || g.is_zero()) return zero_like(f.zero());
  if (g.degree() == 0) {
    T r = one_like(f.zero());
    for (int i = 0; i < f.degree(); ++i) r = T(r * g[0]);
    return r;
  }
  if (f.degree() == 0) {
    T r = one_like(f.zero());
    for (int i = 0; i < g.degree(); ++i) r = T(r * f[0]);
    return r;
  }
  return determinant(sylvester_matrix(f, g), f.zero());
}

}  // namespace fiberscope
