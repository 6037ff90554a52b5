#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fiberscope/cover.hpp"

namespace fiberscope {

struct RamificationEntry {
  int deg;
  int e;
  bool operator==(const RamificationEntry&) const = default;
  auto operator<=>(const RamificationEntry&) const = default;
};

struct ReductionReport {
  std::uint32_t p = 0;
  bool good = false;
  std::vector<std::uint64_t> branch_points_mod_p;  // F_p-rational, affine chart
  std::map<std::uint64_t, std::vector<RamificationEntry>> ramification_table;
  // branch points over extensions of F_p: (degree of the point, entries)
  std::vector<std::pair<int, std::vector<RamificationEntry>>> nonrational_branch_points;
  std::vector<std::string> failure_reasons;
  std::vector<std::string> warnings;
};

ReductionReport check_good_reduction(const CoverSpec& cover, std::uint32_t p);

struct BadPrimeReport {
  std::vector<mpz_class> primes;
  std::vector<std::string> notes;
};
BadPrimeReport bad_primes(const CoverSpec& cover, std::uint64_t bound);

std::uint64_t precision_cap();

}  // namespace fiberscope
