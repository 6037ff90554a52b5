#pragma once

#include <utility>
#include <vector>

#include "fiberscope/finite_field.hpp"

namespace fiberscope {

struct FqFactor {
  FqPoly factor;  // monic irreducible
  int multiplicity;
};

// canonical order: degree, then coefficient ordinals from the constant term up
bool poly_less(const FqPoly& a, const FqPoly& b);

std::vector<FqFactor> squarefree_factorization(const FqPoly& f);
// distinct-degree pieces (product of all irreducible factors of that degree)
std::vector<std::pair<FqPoly, int>> distinct_degree_factorization(const FqPoly& f);
std::vector<FqPoly> equal_degree_factorization(const FqPoly& f, int d);

// full factorization of a nonzero polynomial into monic irreducibles, sorted
std::vector<FqFactor> factor(const FqPoly& f);
bool is_irreducible(const FqPoly& f);
bool is_squarefree(const FqPoly& f);
// distinct roots in F_q, sorted by ordinal
std::vector<FqElement> roots(const FqPoly& f);

}  // namespace fiberscope
