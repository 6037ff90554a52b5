#include "fiberscope/fiber.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <stdexcept>

#include "fiberscope/hensel.hpp"
#include "fiberscope/newton.hpp"

namespace fiberscope {

namespace {

std::atomic<std::uint64_t> g_dimension_checks{0};

FqPoly embed(const FqPoly& f, const FieldPtr& F) {
  std::vector<FqElement> c;
  for (auto& x : f.coeffs()) c.push_back(F->from_int(x.coeffs()[0]));
  return FqPoly(c, F->zero());
}

std::uint64_t residue_of(const mpq_class& t, std::uint32_t p) {
  std::uint64_t num = mpz_fdiv_ui(t.get_num_mpz_t(), p);
  std::uint64_t den = mpz_fdiv_ui(t.get_den_mpz_t(), p);
  if (den == 0) throw PreconditionError("t is not p-integral");
  return mulmod(num, invmod(den, p), p);
}

void require_good(const CoverSpec& cover, std::uint32_t p) {
  auto rep = check_good_reduction(cover, p);
  if (!rep.good) {
    std::string why = "no good reduction at p = " + std::to_string(p);
    for (auto& s : rep.failure_reasons) why += "; " + s;
    throw PreconditionError(why);
  }
}

void require_off_branch(const CoverSpec& cover, const mpq_class& t) {
  if (eval(to_qpoly(cover.radical()), t) == 0) throw PreconditionError("t lies on the branch locus");
}

}  // namespace

std::vector<EtaleFactor> EtaleAlgebraDescriptor::all_factors() const {
  std::vector<EtaleFactor> out;
  for (auto& b : blocks) out.insert(out.end(), b.factors.begin(), b.factors.end());
  std::sort(out.begin(), out.end());
  return out;
}

void assert_dimension(const EtaleAlgebraDescriptor& d) {
  int total = 0;
  for (auto& b : d.blocks) {
    if (b.indeterminate) {
      total += b.e * b.deg;
      continue;
    }
    int s = 0;
    for (auto& f : b.factors) s += f.e * f.f;
    if (s != b.e * b.deg)
      throw std::logic_error("dimension check failed for a block: " + std::to_string(s) + " != " +
                             std::to_string(b.e * b.deg));
    total += s;
  }
  if (total != d.degree)
    throw std::logic_error("dimension check failed: " + std::to_string(total) + " != " + std::to_string(d.degree));
  ++g_dimension_checks;
}

std::uint64_t dimension_checks_performed() { return g_dimension_checks.load(); }

FiberSite fiber_site(const CoverSpec& cover, std::uint32_t p, const mpq_class& t, bool allow_infinity_chart) {
  if (t == 0 || padic_valuation(t, p) >= 0) return {cover, t, false};
  if (!allow_infinity_chart)
    throw PreconditionError("t reduces to infinity mod p; pass the infinity chart option to analyze it");
  return {cover.infinity_chart(), mpq_class(1) / t, true};
}

std::vector<FiberPointClass> special_fiber_data(const CoverSpec& cover, std::uint32_t p, std::uint64_t tbar) {
  auto F1 = make_field(p, 1);
  std::vector<FiberPointClass> out;
  for (auto& [rho, e] : factor(cover.at(F1->from_int(static_cast<long long>(tbar % p))))) {
    if (e > 1 && e % static_cast<int>(p) == 0) throw PreconditionError("wild ramification: p divides e");
    FiberPointClass pt;
    pt.tbar = tbar % p;
    pt.ftilde = rho;
    pt.deg = rho.degree();
    pt.e = e;
    auto Fk = make_field(p, pt.deg);
    FqPoly rk = embed(rho, Fk);
    pt.theta = roots(rk).at(0);
    if (e > 1) {
      FqElement tk = Fk->from_int(static_cast<long long>(pt.tbar));
      auto [G, rem] = divrem(cover.at(tk), poly_pow(rk, e));
      if (!rem.is_zero()) throw std::logic_error("special_fiber_data: factor multiplicity mismatch");
      FqElement dt = eval(cover.dt_at(tk), pt.theta);
      if (dt.is_zero()) throw PreconditionError("the reduced curve is singular at a ramification point");
      FqElement s = dt * eval(G, pt.theta).inverse();
      FqElement d = eval(derivative(rk), pt.theta);
      pt.s_class = -(s * d.pow(static_cast<std::uint64_t>(e)).inverse());
    }
    out.push_back(std::move(pt));
  }
  return out;
}

BranchDistance branch_distance(const CoverSpec& cover, std::uint32_t p, const mpq_class& t, int start_prec) {
  BranchDistance bd;
  bd.tbar = residue_of(t, p);
  const ZPoly& r = cover.radical();
  auto F1 = make_field(p, 1);
  if (!eval(reduce_mod(r, F1), F1->from_int(static_cast<long long>(bd.tbar))).is_zero()) return bd;
  require_off_branch(cover, t);
  const int cap = static_cast<int>(precision_cap());
  for (int P = std::max(start_prec > 0 ? start_prec : 16, 2);; P = std::min(2 * P, cap)) {
    PadicInt t0 = hensel_root(r, p, bd.tbar, P);
    PadicInt diff = PadicInt::from_rational(p, P, t) - t0;
    if (!diff.is_zero()) {
      bd.infinite = false;
      bd.value = diff.valuation().get();
      bd.t0 = t0.mantissa();
      bd.prec = P;
      return bd;
    }
    if (P >= cap) throw BelowPrecision("branch_distance: t agrees with a branch point to the precision cap");
  }
}

namespace {

// classes are only meaningful up to precision; the predictor needs ((t - t0)/p^v) mod p
FqElement unit_part(const BranchDistance& bd, std::uint32_t p, const mpq_class& t, const FieldPtr& F) {
  PadicInt diff = PadicInt::from_rational(p, bd.prec, t) - PadicInt::approximate(p, bd.prec, bd.t0);
  return F->from_int(static_cast<long long>(diff.divide_by_p(bd.value).residue()));
}

EtaleAlgebraDescriptor predict_at(const CoverSpec& C, std::uint32_t p, const mpq_class& t, int start_prec) {
  require_good(C, p);
  EtaleAlgebraDescriptor out;
  out.degree = C.degree();
  BranchDistance bd = branch_distance(C, p, t, start_prec);
  for (auto& pt : special_fiber_data(C, p, bd.tbar)) {
    FiberBlock b;
    b.residue_factor = pt.ftilde;
    b.deg = pt.deg;
    b.e = pt.e;
    b.e_lo = b.e_hi = pt.e;
    if (pt.e == 1) {
      b.factors.push_back({1, pt.deg, std::nullopt});
    } else {
      if (bd.infinite) throw std::logic_error("predict_fiber: ramified point over a non-branch residue");
      const int g = std::gcd(bd.value, pt.e);
      if (g == 1) {
        auto Fk = pt.theta.field();
        FqElement W = unit_part(bd, p, t, Fk) * *pt.s_class;
        std::uint64_t m = invmod(static_cast<std::uint64_t>(bd.value % pt.e), static_cast<std::uint64_t>(pt.e));
        auto cls = classify_binomial(p, pt.deg, static_cast<std::uint64_t>(pt.e), W.pow(m));
        b.factors.push_back({pt.e, pt.deg, cls});
      } else {
        b.indeterminate = true;
        b.e_lo = pt.e / g;
      }
    }
    out.blocks.push_back(std::move(b));
  }
  assert_dimension(out);
  return out;
}

// a factor over the unramified ring of the block: relative degrees and the unit of its binomial model
struct RelFactor {
  int e = 1;
  int f = 1;
  std::optional<FqElement> u;
};

// H over O_K' with H = (z - r)^n mod p
std::vector<RelFactor> analyze(const ZqPoly& H, const FqElement& r) {
  const int n = H.degree();
  if (n == 1) return {{1, 1, std::nullopt}};
  const RingPtr& R = H.zero().ring();
  int N = min_prec(H);
  if (N < 2) throw BelowPrecision("oracle: precision exhausted");
  // a root may sit exactly on the Teichmuller point; other lifts of r then separate it
  ZqPoly G(H.zero());
  NewtonPolygon np;
  UnramifiedElement theta = teichmuller_lift(R, r, N);
  UnramifiedElement step = UnramifiedElement::from_integer(R, N, R->p());
  for (int j = 0;; ++j, theta = theta + step) {
    G = taylor_shift(H, theta);
    try {
      np = newton_polygon(G);
      break;
    } catch (const BelowPrecision&) {
      if (j >= n) throw;
    }
  }
  if (np.zero_order > 0) throw PreconditionError("oracle: fiber polynomial has an exact root at a Teichmuller point");
  const auto& segs = np.segments;
  if (segs.size() == 1 && segs[0].den == n) {
    const long a = segs[0].num;
    FqElement W = -G[0].divide_by_p(static_cast<int>(a)).reduce();
    std::uint64_t m = invmod(static_cast<std::uint64_t>(a % n), static_cast<std::uint64_t>(n));
    return {{n, 1, W.pow(m)}};
  }
  if (segs[0].den != 1) throw std::domain_error("oracle: Newton polygon shape outside the supported cases " + np.str());
  // z = p^k y with k the smallest root valuation
  const int k = static_cast<int>(segs[0].num);
  std::vector<UnramifiedElement> c;
  int Nr = N;
  for (int i = 0; i <= n; ++i) Nr = std::min(Nr, G[i].prec() - k * (n - i));
  if (Nr < 2) throw BelowPrecision("oracle: precision exhausted after rescaling");
  for (int i = 0; i <= n; ++i) c.push_back(G[i].divide_by_p(k * (n - i)).with_prec(Nr));
  ZqPoly S(c, UnramifiedElement::from_integer(R, Nr, 0));
  std::vector<FqPoly> pieces;
  std::vector<FqFactor> fac = factor(reduce(S));
  for (auto& [rho, mult] : fac) {
    if (rho.degree() > 1 && mult > 1)
      throw std::domain_error("oracle: repeated residual factor of degree > 1 is outside the supported cases");
    pieces.push_back(poly_pow(rho, mult));
  }
  std::vector<ZqPoly> lifted = hensel_multi_split(S, pieces, Nr);
  std::vector<RelFactor> out;
  for (std::size_t i = 0; i < fac.size(); ++i) {
    const auto& [rho, mult] = fac[i];
    if (mult == 1) {
      out.push_back({1, rho.degree(), std::nullopt});
    } else {
      FqElement root = -rho[0];
      for (auto& x : analyze(lifted[i], root)) out.push_back(x);
    }
  }
  return out;
}

EtaleAlgebraDescriptor oracle_at(const CoverSpec& C, std::uint32_t p, const mpq_class& t, int N) {
  EtaleAlgebraDescriptor out;
  out.degree = C.degree();
  auto F1 = make_field(p, 1);
  auto R1 = UnramifiedRing::make(F1);
  ZqPoly Ft = C.at(R1, PadicInt::from_rational(p, N, t));
  std::vector<FqFactor> fac = factor(reduce(Ft));
  std::vector<FqPoly> pieces;
  for (auto& [rho, e] : fac) pieces.push_back(poly_pow(rho, e));
  std::vector<ZqPoly> blocks = hensel_multi_split(Ft, pieces, N);
  for (std::size_t j = 0; j < fac.size(); ++j) {
    const auto& [rho, e] = fac[j];
    FiberBlock b;
    b.residue_factor = rho;
    b.deg = rho.degree();
    b.e = b.e_lo = b.e_hi = e;
    if (e == 1) {
      b.factors.push_back({1, b.deg, std::nullopt});
      out.blocks.push_back(std::move(b));
      continue;
    }
    const int k = b.deg;
    auto Fk = make_field(p, k);
    auto Rk = UnramifiedRing::make(Fk);
    ZqPoly g = blocks[j].map([&](const UnramifiedElement& x) { return UnramifiedElement::from_padic(Rk, x.coefficient(0)); });
    FqPoly rk = embed(rho, Fk);
    FqElement theta = roots(rk).at(0);
    ZqPoly h1 = g;
    if (k > 1) {
      FqPoly g0 = poly_pow(FqPoly::linear_root(theta), e);
      FqPoly h0 = divrem(poly_pow(rk, e), g0).first;
      h1 = hensel_split(g, g0, h0, min_prec(g)).first;
    }
    for (auto& rf : analyze(h1, theta)) {
      EtaleFactor ef{rf.e, k * rf.f, std::nullopt};
      if (rf.e > 1 && rf.f == 1)
        ef.tame_class = classify_binomial(p, k, static_cast<std::uint64_t>(rf.e), *rf.u);
      b.factors.push_back(ef);
    }
    std::sort(b.factors.begin(), b.factors.end());
    out.blocks.push_back(std::move(b));
  }
  assert_dimension(out);
  return out;
}

int max_e(const CoverSpec& C, std::uint32_t p, std::uint64_t tbar) {
  auto F1 = make_field(p, 1);
  int m = 1;
  for (auto& [rho, e] : factor(C.at(F1->from_int(static_cast<long long>(tbar))))) m = std::max(m, e);
  return m;
}

}  // namespace

EtaleAlgebraDescriptor predict_fiber(const CoverSpec& cover, std::uint32_t p, const mpq_class& t,
                                     const FiberOptions& opt) {
  FiberSite s = fiber_site(cover, p, t, opt.infinity_chart);
  return predict_at(s.cover, p, s.t, opt.start_prec);
}

EtaleAlgebraDescriptor factor_fiber_oracle(const CoverSpec& cover, std::uint32_t p, const mpq_class& t,
                                           const FiberOptions& opt) {
  FiberSite s = fiber_site(cover, p, t, opt.infinity_chart);
  require_good(s.cover, p);
  require_off_branch(s.cover, s.t);
  const int cap = static_cast<int>(precision_cap());
  int N = opt.start_prec;
  if (N <= 0) {
    BranchDistance bd = branch_distance(s.cover, p, s.t);
    N = (bd.infinite ? 0 : bd.value) + max_e(s.cover, p, bd.tbar) + 8;
  }
  N = std::min(std::max(N, 2), cap);
  for (;;) {
    try {
      return oracle_at(s.cover, p, s.t, N);
    } catch (const BelowPrecision&) {
      if (!opt.escalate || N >= cap) throw;
      N = std::min(2 * N, cap);
    }
  }
}

std::vector<std::string> compare_descriptors(const EtaleAlgebraDescriptor& pred, const EtaleAlgebraDescriptor& act) {
  std::vector<std::string> diffs;
  if (pred.degree != act.degree) diffs.push_back("degree differs");
  if (pred.blocks.size() != act.blocks.size()) {
    diffs.push_back("number of special-fiber points differs");
    return diffs;
  }
  auto fstr = [](const EtaleFactor& f) {
    std::string s = "(e=" + std::to_string(f.e) + ",f=" + std::to_string(f.f);
    if (f.tame_class) s += "," + f.tame_class->str();
    return s + ")";
  };
  for (std::size_t i = 0; i < pred.blocks.size(); ++i) {
    const auto& a = pred.blocks[i];
    const auto& b = act.blocks[i];
    std::string where = "block " + std::to_string(i) + ": ";
    if (a.residue_factor != b.residue_factor || a.e != b.e) {
      diffs.push_back(where + "residue data differs");
      continue;
    }
    if (a.indeterminate) {
      for (auto& f : b.factors)
        if (f.e < a.e_lo || f.e > a.e_hi || f.f % a.deg != 0)
          diffs.push_back(where + "factor " + fstr(f) + " violates the predicted bounds");
      continue;
    }
    if (a.factors != b.factors) {
      std::string s = where + "predicted";
      for (auto& f : a.factors) s += " " + fstr(f);
      s += " but found";
      for (auto& f : b.factors) s += " " + fstr(f);
      diffs.push_back(s);
    }
  }
  return diffs;
}

AgreementReport agreement_check(const CoverSpec& cover, std::uint32_t p, const mpq_class& t, const FiberOptions& opt) {
  AgreementReport r;
  r.predicted = predict_fiber(cover, p, t, opt);
  r.oracle = factor_fiber_oracle(cover, p, t, opt);
  r.diffs = compare_descriptors(r.predicted, r.oracle);
  r.agree = r.diffs.empty();
  return r;
}

std::vector<TameExtensionClass> realizable_classes(const CoverSpec& cover, std::uint32_t p, std::uint64_t tbar,
                                                   std::size_t block) {
  require_good(cover, p);
  auto pts = special_fiber_data(cover, p, tbar);
  if (block >= pts.size()) throw PreconditionError("realizable_classes: no such point in the special fiber");
  const auto& pt = pts[block];
  if (pt.e == 1) throw PreconditionError("realizable_classes: the point is unramified");
  auto Fk = pt.theta.field();
  std::set<TameExtensionClass> s;
  for (std::uint32_t u = 1; u < p; ++u)
    s.insert(classify_binomial(p, pt.deg, static_cast<std::uint64_t>(pt.e), Fk->from_int(u) * *pt.s_class));
  return {s.begin(), s.end()};
}

CensusReport measure_census(const CoverSpec& cover, std::uint32_t p, std::uint64_t tbar, int depth,
                            bool verify_with_oracle) {
  if (depth < 2) throw PreconditionError("measure_census: depth must be at least 2");
  require_good(cover, p);
  tbar %= p;
  auto pts = special_fiber_data(cover, p, tbar);
  CensusReport rep;
  rep.p = p;
  rep.tbar = tbar;
  rep.depth = depth;
  std::vector<std::size_t> ramified;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (pts[i].e > 1) ramified.push_back(i);
  if (ramified.empty()) throw PreconditionError("measure_census: tbar is not a branch point");
  const mpz_class M = pow_ui(p, static_cast<unsigned>(depth));
  const mpz_class inner = pow_ui(p, static_cast<unsigned>(depth - 1));
  if (inner > 1'000'000) throw PreconditionError("measure_census: too many lifts");
  mpz_class t0 = hensel_root(cover.radical(), p, tbar, depth).mantissa();

  for (std::size_t i : ramified) {
    CensusBlock cb;
    cb.residue_factor = pts[i].ftilde;
    cb.deg = pts[i].deg;
    cb.e = pts[i].e;
    cb.realizable = realizable_classes(cover, p, tbar, i);
    cb.theoretical_frequency = mpq_class(1, cb.realizable.size());
    rep.blocks.push_back(std::move(cb));
  }
  for (unsigned long u = 1; u < inner.get_ui(); ++u) {
    if (u % p == 0) continue;
    mpz_class a = (t0 + mpz_class(p) * u) % M;
    mpq_class t(a);
    auto pred = predict_fiber(cover, p, t);
    if (verify_with_oracle && !compare_descriptors(pred, factor_fiber_oracle(cover, p, t)).empty())
      ++rep.oracle_mismatches;
    ++rep.lifts;
    for (std::size_t k = 0; k < ramified.size(); ++k) {
      const auto& b = pred.blocks.at(ramified[k]);
      rep.blocks[k].histogram[*b.factors.at(0).tame_class]++;
    }
  }
  for (auto& cb : rep.blocks) {
    std::set<TameExtensionClass> seen;
    std::set<std::uint64_t> counts;
    for (auto& [c, n] : cb.histogram) {
      seen.insert(c);
      counts.insert(n);
    }
    cb.uniform = counts.size() == 1 && std::vector<TameExtensionClass>(seen.begin(), seen.end()) == cb.realizable;
  }
  return rep;
}

}  // namespace fiberscope
