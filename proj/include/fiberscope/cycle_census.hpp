#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fiberscope/cover.hpp"
#include "fiberscope/perm_group.hpp"

namespace fiberscope {

struct CycleCensusReport {
  std::uint32_t p = 0;
  int f = 1;
  std::uint64_t q = 0;
  std::map<CycleType, std::uint64_t> counts;
  std::uint64_t sampled = 0;
  std::uint64_t branch = 0;
  std::uint64_t out_of_chart = 0;  // always 0: only the affine chart is enumerated
};

// splitting types of f(tbar, z) over F_q for tbar off the branch locus
CycleCensusReport cycle_census(const CoverSpec& cover, std::uint32_t p, int f, bool require_good = true);

struct ChebotarevRow {
  CycleType type;
  double observed = 0;
  double expected = 0;
  double deviation = 0;
};
struct ChebotarevResult {
  std::vector<ChebotarevRow> rows;
  double max_deviation = 0;
  double bound = 0;  // C q^(-1/2)
  bool pass = false;
};

ChebotarevResult chebotarev_compare(const CycleCensusReport& report, const PermutationGroup& G, double C);
// the effective constant built from a genus guess for the Galois closure
double default_tolerance_constant(int genus_hat, std::size_t group_order);

}  // namespace fiberscope
