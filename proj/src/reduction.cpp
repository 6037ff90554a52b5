#include "fiberscope/reduction.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

#include "fiberscope/fq_factor.hpp"

namespace fiberscope {

std::uint64_t precision_cap() {
  const char* s = std::getenv("FIBERSCOPE_PRECISION_CAP");
  if (!s || !*s) return 256;
  char* end = nullptr;
  unsigned long v = std::strtoul(s, &end, 10);
  if (*end != '\0' || v < 4) throw PreconditionError("FIBERSCOPE_PRECISION_CAP must be an integer >= 4");
  return v;
}

ReductionReport check_good_reduction(const CoverSpec& cover, std::uint32_t p) {
  if (!is_prime_u64(p)) throw PreconditionError("check_good_reduction: p = " + std::to_string(p) + " is not prime");
  ReductionReport rep;
  rep.p = p;
  auto& why = rep.failure_reasons;
  const int d = cover.degree();
  const ZPoly& r = cover.radical();
  auto divides = [p](const mpz_class& x) { return mpz_divisible_ui_p(x.get_mpz_t(), p) != 0; };

  if (d % p == 0) why.push_back("p divides the degree d (wild ramification)");
  if (divides(r.lead()))
    why.push_back("p divides the leading coefficient of the branch locus (a branch point reduces to infinity)");
  if (divides(cover.disc().lead())) why.push_back("p divides the leading coefficient of the discriminant");

  auto Fp = make_field(p, 1);
  FqPoly rb = reduce_mod(r, Fp);
  if (rb.degree() != r.degree()) {
    rep.warnings.push_back("branch locus drops degree mod p; only the affine chart is analyzed");
  } else if (!is_squarefree(rb)) {
    why.push_back("branch points collide mod p (branch locus not squarefree mod p)");
  }
  if (!why.empty()) return rep;

  for (auto& [rho, mult] : factor(rb)) {
    const int k = rho.degree();
    auto F = make_field(p, k);
    // rho has coefficients in F_p; view it over F_{p^k} to find a root
    std::vector<FqElement> lifted;
    for (auto& c : rho.coeffs()) lifted.push_back(F->from_int(c.coeffs()[0]));
    auto tb = roots(FqPoly(lifted, F->zero())).at(0);
    FqPoly fib = cover.at(tb);
    FqPoly dt = cover.dt_at(tb);
    std::vector<RamificationEntry> entries;
    int ram = 0;
    for (auto& [ft, e] : factor(fib)) {
      entries.push_back({ft.degree(), e});
      ram += (e - 1) * ft.degree();
      if (e > 1 && e % static_cast<int>(p) == 0) why.push_back("wild ramification: p divides e = " + std::to_string(e));
      if (e > 1 && poly_gcd(ft, dt).degree() > 0)
        why.push_back("the reduced curve is singular at a ramification point (d/dt f vanishes there)");
    }
    std::sort(entries.begin(), entries.end());
    // multiplicity of the characteristic-0 discriminant at the lifted branch point
    int m = 0;
    for (auto& comp : cover.disc_components())
      if (eval(reduce_mod(comp.factor, F), tb).is_zero()) m = comp.multiplicity;
    if (ram != m)
      why.push_back("ramification changes under reduction: sum (e-1) deg = " + std::to_string(ram) +
                    " but the discriminant has order " + std::to_string(m));
    if (k == 1) {
      std::uint64_t t = tb.coeffs()[0];
      rep.branch_points_mod_p.push_back(t);
      rep.ramification_table[t] = entries;
    } else {
      rep.nonrational_branch_points.emplace_back(k, entries);
    }
  }
  std::sort(rep.branch_points_mod_p.begin(), rep.branch_points_mod_p.end());
  std::sort(why.begin(), why.end());
  why.erase(std::unique(why.begin(), why.end()), why.end());
  rep.good = why.empty();
  return rep;
}

BadPrimeReport bad_primes(const CoverSpec& cover, std::uint64_t bound) {
  if (bound < 2) throw PreconditionError("bad_primes: bound must be >= 2");
  BadPrimeReport out;
  std::set<mpz_class> s;
  for (auto p : primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, 1u << 24))))
    if (!check_good_reduction(cover, p).good) s.insert(mpz_class(static_cast<unsigned long>(p)));
  const ZPoly& r = cover.radical();
  mpz_class fact = 1;
  for (int i = 2; i <= cover.degree(); ++i) fact *= i;
  std::vector<std::pair<std::string, mpz_class>> sources = {
      {"lc(r)", r.lead()}, {"disc(r)", discriminant(r)}, {"d!", fact}, {"lc(disc)", cover.disc().lead()}};
  for (auto& [name, v] : sources) {
    mpz_class rest;
    for (auto& q : prime_divisors(v, 1'000'000, &rest)) s.insert(q);
    if (rest > 1) out.notes.push_back("unfactored composite divisor of " + name + ": " + rest.get_str());
  }
  out.primes.assign(s.begin(), s.end());
  return out;
}

}  // namespace fiberscope
