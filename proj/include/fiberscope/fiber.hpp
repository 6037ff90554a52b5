#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fiberscope/cover.hpp"
#include "fiberscope/fq_factor.hpp"
#include "fiberscope/reduction.hpp"
#include "fiberscope/tame_class.hpp"

namespace fiberscope {

// a point of the special fiber over an F_p-rational tbar
struct FiberPointClass {
  std::uint64_t tbar = 0;
  FqPoly ftilde;  // monic irreducible over F_p
  int deg = 1;
  int e = 1;
  FqElement theta;                   // smallest root of ftilde in F_{p^deg}
  std::optional<FqElement> s_class;  // e > 1: -s(theta) ftilde'(theta)^(-e)
};

struct EtaleFactor {
  int e = 1;
  int f = 1;
  std::optional<TameExtensionClass> tame_class;
  bool operator==(const EtaleFactor&) const = default;
  auto operator<=>(const EtaleFactor&) const = default;
};

// the part of the fiber algebra over one point of the special fiber
struct FiberBlock {
  FqPoly residue_factor;
  int deg = 1;
  int e = 1;
  bool indeterminate = false;  // gcd(v, e) > 1: only bounds are known
  int e_lo = 1, e_hi = 1;
  std::vector<EtaleFactor> factors;  // sorted; empty when indeterminate
};

struct EtaleAlgebraDescriptor {
  int degree = 0;
  std::vector<FiberBlock> blocks;
  std::vector<EtaleFactor> all_factors() const;
};

// the point where the fiber is taken, after choosing a chart
struct FiberSite {
  CoverSpec cover;
  mpq_class t;
  bool infinity_chart = false;
};
// maps t of negative valuation through s = 1/t when allowed
FiberSite fiber_site(const CoverSpec& cover, std::uint32_t p, const mpq_class& t, bool allow_infinity_chart);

std::vector<FiberPointClass> special_fiber_data(const CoverSpec& cover, std::uint32_t p, std::uint64_t tbar);

struct BranchDistance {
  bool infinite = true;  // tbar is not a branch point
  int value = 0;
  std::uint64_t tbar = 0;
  mpz_class t0;  // branch point, mod p^prec
  int prec = 0;
};
// start_prec = 0 picks a default; doubles up to precision_cap()
BranchDistance branch_distance(const CoverSpec& cover, std::uint32_t p, const mpq_class& t, int start_prec = 0);

struct FiberOptions {
  int start_prec = 0;  // 0: chosen from v and e
  bool infinity_chart = false;
  bool escalate = true;  // double the precision on BelowPrecision, up to precision_cap()
};

EtaleAlgebraDescriptor predict_fiber(const CoverSpec& cover, std::uint32_t p, const mpq_class& t,
                                     const FiberOptions& opt = {});
EtaleAlgebraDescriptor factor_fiber_oracle(const CoverSpec& cover, std::uint32_t p, const mpq_class& t,
                                           const FiberOptions& opt = {});

struct AgreementReport {
  bool agree = false;
  EtaleAlgebraDescriptor predicted, oracle;
  std::vector<std::string> diffs;
};
AgreementReport agreement_check(const CoverSpec& cover, std::uint32_t p, const mpq_class& t,
                                const FiberOptions& opt = {});
// a block of an indeterminate prediction is matched by the oracle on bounds only
std::vector<std::string> compare_descriptors(const EtaleAlgebraDescriptor& predicted,
                                             const EtaleAlgebraDescriptor& actual);

// sum of e f over the factors must equal the degree; throws std::logic_error otherwise
void assert_dimension(const EtaleAlgebraDescriptor& d);
std::uint64_t dimension_checks_performed();

struct CensusBlock {
  FqPoly residue_factor;
  int deg = 1;
  int e = 1;
  std::map<TameExtensionClass, std::uint64_t> histogram;
  std::vector<TameExtensionClass> realizable;
  mpq_class theoretical_frequency;  // each realized class, within the v = 1 stratum
  bool uniform = false;
};
struct CensusReport {
  std::uint32_t p = 0;
  std::uint64_t tbar = 0;
  int depth = 0;
  std::uint64_t lifts = 0;
  std::uint64_t oracle_mismatches = 0;
  std::vector<CensusBlock> blocks;
};
CensusReport measure_census(const CoverSpec& cover, std::uint32_t p, std::uint64_t tbar, int depth,
                            bool verify_with_oracle = true);

// classes of the ramified point `block` over tbar realized by v = 1 lifts
std::vector<TameExtensionClass> realizable_classes(const CoverSpec& cover, std::uint32_t p, std::uint64_t tbar,
                                                   std::size_t block);

}  // namespace fiberscope
