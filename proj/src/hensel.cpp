#include "fiberscope/hensel.hpp"

#include <stdexcept>

namespace fiberscope {

std::pair<ZqPoly, ZqPoly> hensel_split(const ZqPoly& f, const FqPoly& g0, const FqPoly& h0, int N) {
  if (!f.is_monic()) throw PreconditionError("hensel_split: f not monic");
  if (!g0.is_monic() || !h0.is_monic()) throw PreconditionError("hensel_split: residue factors not monic");
  if (g0.degree() < 1 || h0.degree() < 1) throw PreconditionError("hensel_split: no coprime split (trivial factor)");
  if (N < 1) throw PreconditionError("hensel_split: target precision < 1");
  if (min_prec(f) < N) throw BelowPrecision("hensel_split: input precision below target");
  if (reduce(f) != g0 * h0) throw PreconditionError("hensel_split: f mod p != g0 h0");
  auto [d, s, t] = ext_gcd(g0, h0);
  if (d.degree() != 0) throw PreconditionError("hensel_split: residue factors not coprime");

  const RingPtr& R = f.zero().ring();
  const std::uint32_t p = R->p();
  ZqPoly G = lift(R, g0, N), H = lift(R, h0, N);
  ZqPoly F = f.map([N](const UnramifiedElement& x) { return x.with_prec(N); });
  for (int k = 1; k < N; ++k) {
    ZqPoly E = F - G * H;
    std::vector<FqElement> eb;
    for (int i = 0; i <= E.degree(); ++i) eb.push_back(E[i].divide_by_p(k).reduce());
    FqPoly Eb(std::move(eb), g0.zero());
    if (Eb.is_zero()) continue;
    FqPoly A = (Eb * t) % g0;
    auto [B, rem] = divrem(Eb - A * h0, g0);
    if (!rem.is_zero()) throw std::logic_error("hensel_split: inexact correction");
    UnramifiedElement pk = UnramifiedElement::from_integer(R, N, p_power(p, k));
    G = G + pk * lift(R, A, N);
    H = H + pk * lift(R, B, N);
  }
  ZqPoly check = F - G * H;
  for (auto& c : check.coeffs())
    if (!c.is_zero()) throw std::logic_error("hensel_split: lift failed to converge");
  return {G, H};
}

std::vector<ZqPoly> hensel_multi_split(const ZqPoly& f, const std::vector<FqPoly>& pieces, int N) {
  if (pieces.empty()) throw PreconditionError("hensel_multi_split: no pieces");
  if (pieces.size() == 1) {
    if (reduce(f) != pieces[0]) throw PreconditionError("hensel_multi_split: product mismatch");
    return {f.map([N](const UnramifiedElement& x) { return x.with_prec(N); })};
  }
  FqPoly rest = FqPoly::constant(one_like(pieces[0].zero()));
  for (std::size_t i = 1; i < pieces.size(); ++i) rest = rest * pieces[i];
  auto [g, h] = hensel_split(f, pieces[0], rest, N);
  std::vector<FqPoly> tail(pieces.begin() + 1, pieces.end());
  auto out = hensel_multi_split(h, tail, N);
  out.insert(out.begin(), g);
  return out;
}

}  // namespace fiberscope
