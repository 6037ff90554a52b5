#pragma once

#include <utility>
#include <vector>

#include "fiberscope/fq_factor.hpp"
#include "fiberscope/unramified.hpp"

namespace fiberscope {

// monic (g, h) with f = g h mod p^N, g = g0 and h = h0 mod p
std::pair<ZqPoly, ZqPoly> hensel_split(const ZqPoly& f, const FqPoly& g0, const FqPoly& h0, int N);

// lifts of pairwise coprime monic residue pieces whose product is f mod p, in input order
std::vector<ZqPoly> hensel_multi_split(const ZqPoly& f, const std::vector<FqPoly>& pieces, int N);

}  // namespace fiberscope
