#include "fiberscope/fq_factor.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace fiberscope {

namespace {

FqPoly x_poly(const FqElement& z) { return FqPoly::monomial(one_like(z), 1); }

FqPoly pth_root(const FqPoly& f) {
  const auto& F = *f.zero().field();
  std::uint64_t e = F.order() / F.p();
  std::vector<FqElement> c;
  for (int i = 0; i <= f.degree(); i += F.p()) c.push_back(f[i].pow(e));
  return FqPoly(std::move(c), f.zero());
}

FqPoly random_poly(const FqElement& z, int deg, std::mt19937_64& rng) {
  const auto& F = *z.field();
  std::vector<FqElement> c;
  std::uniform_int_distribution<std::uint64_t> dist(0, F.order() - 1);
  for (int i = 0; i < deg; ++i) c.push_back(F.from_ordinal(dist(rng)));
  return FqPoly(std::move(c), z);
}

void edf_rec(const FqPoly& g, int d, std::mt19937_64& rng, std::vector<FqPoly>& out) {
  if (g.degree() == d) {
    out.push_back(g);
    return;
  }
  const auto& F = *g.zero().field();
  mpz_class qd = pow_ui(F.order(), d);
  for (;;) {
    FqPoly a = random_poly(g.zero(), g.degree(), rng);
    if (a.degree() < 1) continue;
    FqPoly b(g.zero());
    if (F.p() == 2) {
      // trace to F_2: a + a^2 + ... + a^(2^(kd-1))
      int k = F.degree() * d;
      FqPoly t = a % g;
      b = t;
      for (int j = 1; j < k; ++j) {
        t = (t * t) % g;
        b = b + t;
      }
    } else {
      mpz_class e = (qd - 1) / 2;
      b = pow_mod(a, e, g) - FqPoly::constant(one_like(g.zero()));
    }
    FqPoly u = poly_gcd(b, g);
    if (u.degree() > 0 && u.degree() < g.degree()) {
      edf_rec(u, d, rng, out);
      edf_rec(divrem(g, u).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

bool poly_less(const FqPoly& a, const FqPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    auto x = a[i].ordinal(), y = b[i].ordinal();
    if (x != y) return x < y;
  }
  return false;
}

std::vector<FqFactor> squarefree_factorization(const FqPoly& f0) {
  if (f0.is_zero()) throw PreconditionError("squarefree_factorization of zero");
  std::vector<FqFactor> out;
  FqPoly f = make_monic(f0);
  if (f.degree() == 0) return out;
  const std::uint32_t p = f.zero().field()->p();
  FqPoly one = FqPoly::constant(one_like(f.zero()));
  FqPoly c = poly_gcd(f, derivative(f));
  FqPoly w = divrem(f, c).first;
  int i = 1;
  while (w.degree() > 0) {
    FqPoly y = poly_gcd(w, c);
    FqPoly fac = divrem(w, y).first;
    if (fac.degree() > 0) out.push_back({fac, i});
    ++i;
    w = y;
    c = divrem(c, y).first;
  }
  if (c.degree() > 0) {
    for (auto& [g, m] : squarefree_factorization(pth_root(c))) out.push_back({g, m * static_cast<int>(p)});
  }
  std::sort(out.begin(), out.end(), [](const FqFactor& a, const FqFactor& b) {
    return a.multiplicity != b.multiplicity ? a.multiplicity < b.multiplicity : poly_less(a.factor, b.factor);
  });
  return out;
}

std::vector<std::pair<FqPoly, int>> distinct_degree_factorization(const FqPoly& f0) {
  std::vector<std::pair<FqPoly, int>> out;
  FqPoly f = make_monic(f0);
  const std::uint64_t q = f.zero().field()->order();
  FqPoly x = x_poly(f.zero());
  FqPoly h = x % f;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = pow_mod(h, q, f);
    FqPoly g = poly_gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = divrem(f, g).first;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

std::vector<FqPoly> equal_degree_factorization(const FqPoly& f, int d) {
  std::vector<FqPoly> out;
  if (f.degree() % d != 0) throw std::invalid_argument("equal_degree_factorization: degree mismatch");
  std::mt19937_64 rng(0x5eedf00dULL + static_cast<unsigned>(f.degree()));
  edf_rec(make_monic(f), d, rng, out);
  std::sort(out.begin(), out.end(), poly_less);
  return out;
}

std::vector<FqFactor> factor(const FqPoly& f) {
  std::vector<FqFactor> out;
  for (auto& [g, m] : squarefree_factorization(f))
    for (auto& [h, d] : distinct_degree_factorization(g))
      for (auto& irr : equal_degree_factorization(h, d)) out.push_back({irr, m});
  std::sort(out.begin(), out.end(), [](const FqFactor& a, const FqFactor& b) {
    if (poly_less(a.factor, b.factor)) return true;
    if (poly_less(b.factor, a.factor)) return false;
    return a.multiplicity < b.multiplicity;
  });
  return out;
}

bool is_irreducible(const FqPoly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].multiplicity == 1;
}

bool is_squarefree(const FqPoly& f) {
  if (f.is_zero()) return false;
  return poly_gcd(f, derivative(f)).degree() == 0;
}

std::vector<FqElement> roots(const FqPoly& f) {
  std::vector<FqElement> out;
  for (auto& [g, m] : factor(f))
    if (g.degree() == 1) out.push_back(-g[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fiberscope
