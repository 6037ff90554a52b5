#include "fiberscope/cover.hpp"

#include <algorithm>
#include <stdexcept>

#include "fiberscope/fq_factor.hpp"

namespace fiberscope {

ZPoly zpoly(const std::vector<mpz_class>& c) { return ZPoly(c, mpz_class(0)); }

QPoly to_qpoly(const ZPoly& f) {
  std::vector<mpq_class> v;
  for (auto& x : f.coeffs()) v.emplace_back(x);
  return QPoly(v, mpq_class(0));
}

ZPoly primitive_part(const QPoly& f) {
  if (f.is_zero()) return ZPoly(mpz_class(0));
  mpz_class l = 1;
  for (auto& x : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  std::vector<mpz_class> v;
  mpz_class g = 0;
  for (auto& x : f.coeffs()) {
    mpz_class n = x.get_num() * (l / x.get_den());
    v.push_back(n);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  for (auto& x : v) x /= g;
  if (v.back() < 0)
    for (auto& x : v) x = -x;
  return zpoly(v);
}

FqPoly reduce_mod(const ZPoly& f, const FieldPtr& F) {
  std::vector<FqElement> v;
  for (auto& x : f.coeffs()) v.push_back(F->from_int(mpz_fdiv_ui(x.get_mpz_t(), F->p())));
  return FqPoly(v, F->zero());
}

namespace {

QPoly interpolate(const std::vector<mpq_class>& xs, const std::vector<mpq_class>& ys) {
  // Newton divided differences
  std::size_t n = xs.size();
  std::vector<mpq_class> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
      if (i == j) break;
    }
  QPoly r(mpq_class(0));
  for (std::size_t i = n; i-- > 0;) {
    r = r * QPoly(std::vector<mpq_class>{-xs[i], 1}, mpq_class(0)) + QPoly::constant(dd[i]);
  }
  return r;
}

}  // namespace

CoverSpec::CoverSpec(std::vector<std::vector<mpz_class>> coeffs) : c_(std::move(coeffs)) {
  validate();
  compute_branch_data();
  find_witness();
}

void CoverSpec::validate() {
  // trim zero rows at the top and zero columns at the right
  while (!c_.empty() && std::all_of(c_.back().begin(), c_.back().end(), [](const mpz_class& x) { return x == 0; }))
    c_.pop_back();
  for (auto& row : c_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  if (c_.size() < 3) throw PreconditionError("cover: degree in z must be at least 2");
  d_ = static_cast<int>(c_.size()) - 1;
  const auto& top = c_.back();
  if (top.size() != 1 || top[0] != 1) throw PreconditionError("cover: polynomial must be monic in z");
  rows_.clear();
  dt_rows_.clear();
  for (auto& row : c_) {
    rows_.push_back(zpoly(row));
    dt_rows_.push_back(derivative(rows_.back()));
  }
  if (t_degree() < 1) throw PreconditionError("cover: polynomial does not depend on t");
}

int CoverSpec::t_degree() const {
  int m = 0;
  for (auto& r : rows_) m = std::max(m, r.degree());
  return m;
}

void CoverSpec::compute_branch_data() {
  int D = (2 * d_ - 1) * t_degree();
  std::vector<mpq_class> xs, ys;
  for (int k = 0; k <= D; ++k) {
    mpz_class t = k;
    std::vector<mpz_class> v;
    for (auto& r : rows_) v.push_back(eval(r, t));
    xs.emplace_back(k);
    ys.emplace_back(discriminant(zpoly(v)));
  }
  QPoly dq = interpolate(xs, ys);
  std::vector<mpz_class> dc;
  for (auto& x : dq.coeffs()) {
    if (x.get_den() != 1) throw std::logic_error("cover: discriminant interpolation not integral");
    dc.push_back(x.get_num());
  }
  disc_ = zpoly(dc);
  if (disc_.is_zero()) throw PreconditionError("cover: discriminant vanishes identically (not separable)");
  if (disc_.degree() < 1) throw PreconditionError("cover: discriminant is constant");

  // Yun squarefree decomposition over Q
  QPoly a = to_qpoly(disc_);
  QPoly a1 = derivative(a);
  QPoly g = poly_gcd(a, a1);
  QPoly b = divrem(a, g).first;
  QPoly c = divrem(a1, g).first;
  QPoly dd = c - derivative(b);
  components_.clear();
  QPoly rad = QPoly::constant(mpq_class(1));
  for (int i = 1; b.degree() > 0; ++i) {
    QPoly ai = poly_gcd(b, dd);
    b = divrem(b, ai).first;
    c = divrem(dd, ai).first;
    dd = c - derivative(b);
    if (ai.degree() > 0) {
      components_.push_back({primitive_part(ai), i});
      rad = rad * ai;
    }
  }
  radical_ = primitive_part(rad);
}

void CoverSpec::find_witness() {
  witness_.reset();
  for (std::uint32_t p : primes_up_to(60)) {
    auto F = make_field(p, 1);
    for (std::uint32_t t = 0; t < p; ++t) {
      FqPoly g = at(F->from_int(t));
      if (g.degree() == d_ && is_irreducible(g)) {
        witness_ = std::make_pair(p, t);
        return;
      }
    }
  }
}

FqPoly CoverSpec::at(const FqElement& t) const {
  const auto& F = t.field();
  std::vector<FqElement> v;
  for (auto& r : rows_) v.push_back(eval(reduce_mod(r, F), t));
  return FqPoly(v, F->zero());
}

FqPoly CoverSpec::dt_at(const FqElement& t) const {
  const auto& F = t.field();
  std::vector<FqElement> v;
  for (auto& r : dt_rows_) v.push_back(eval(reduce_mod(r, F), t));
  return FqPoly(v, F->zero());
}

ZqPoly CoverSpec::at(const RingPtr& R, const PadicInt& t) const {
  std::vector<UnramifiedElement> v;
  for (auto& r : rows_) {
    PadicInt acc = PadicInt::from_integer(t.p(), t.prec(), 0);
    for (int i = r.degree(); i >= 0; --i) acc = acc * t + PadicInt::from_integer(t.p(), t.prec(), r[i]);
    v.push_back(UnramifiedElement::from_padic(R, acc));
  }
  return ZqPoly(v, UnramifiedElement::from_integer(R, t.prec(), 0));
}

QPoly CoverSpec::at(const mpq_class& t) const {
  std::vector<mpq_class> v;
  for (auto& r : rows_) v.push_back(eval(to_qpoly(r), t));
  return QPoly(v, mpq_class(0));
}

int CoverSpec::infinity_chart_twist() const {
  int k = 0;
  for (int i = 0; i < d_; ++i) {
    int di = rows_[i].degree();
    if (di < 0) continue;
    int need = (di + (d_ - i) - 1) / (d_ - i);
    k = std::max(k, need);
  }
  return k;
}

CoverSpec CoverSpec::infinity_chart() const {
  int k = infinity_chart_twist();
  std::vector<std::vector<mpz_class>> out(d_ + 1);
  for (int i = 0; i < d_; ++i) {
    int width = k * (d_ - i);
    out[i].assign(width + 1, 0);
    for (int j = 0; j <= rows_[i].degree(); ++j) out[i][width - j] = rows_[i][j];
  }
  out[d_] = {1};
  return CoverSpec(out);
}

}  // namespace fiberscope
