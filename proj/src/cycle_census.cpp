#include "fiberscope/cycle_census.hpp"

#include <cmath>
#include <set>

#include "fiberscope/fq_factor.hpp"
#include "fiberscope/reduction.hpp"

namespace fiberscope {

CycleCensusReport cycle_census(const CoverSpec& cover, std::uint32_t p, int f, bool require_good) {
  if (require_good) {
    auto rep = check_good_reduction(cover, p);
    if (!rep.good) throw PreconditionError("cycle_census: no good reduction at p = " + std::to_string(p));
  }
  auto F = make_field(p, f);
  CycleCensusReport out;
  out.p = p;
  out.f = f;
  out.q = F->order();
  FqPoly r = reduce_mod(cover.radical(), F);
  for (auto& t : F->elements()) {
    if (eval(r, t).is_zero()) {
      ++out.branch;
      continue;
    }
    CycleType c;
    for (auto& fac : factor(cover.at(t))) {
      if (fac.multiplicity != 1) throw std::logic_error("cycle_census: repeated factor off the branch locus");
      c.push_back(fac.factor.degree());
    }
    std::sort(c.rbegin(), c.rend());
    out.counts[c]++;
    ++out.sampled;
  }
  return out;
}

double default_tolerance_constant(int genus_hat, std::size_t group_order) {
  double g = genus_hat, G = static_cast<double>(group_order);
  return 4 * (g + G) + G * (g - 1 + G);
}

ChebotarevResult chebotarev_compare(const CycleCensusReport& report, const PermutationGroup& G, double C) {
  std::map<CycleType, std::uint64_t> inG;
  for (auto& g : G.elements()) inG[cycle_type(g)]++;
  int d = G.degree();
  for (auto& [c, n] : report.counts) {
    int s = 0;
    for (int x : c) s += x;
    if (s != d) throw PreconditionError("chebotarev_compare: census degree differs from the group degree");
  }
  if (!G.is_transitive()) throw PreconditionError("chebotarev_compare: G is not transitive");
  std::set<CycleType> types;
  for (auto& [c, n] : inG) types.insert(c);
  for (auto& [c, n] : report.counts) types.insert(c);
  ChebotarevResult res;
  for (auto& c : types) {
    ChebotarevRow row;
    row.type = c;
    auto it = report.counts.find(c);
    row.observed = report.sampled ? double(it == report.counts.end() ? 0 : it->second) / double(report.sampled) : 0;
    auto jt = inG.find(c);
    row.expected = double(jt == inG.end() ? 0 : jt->second) / double(G.order());
    row.deviation = std::fabs(row.observed - row.expected);
    res.max_deviation = std::max(res.max_deviation, row.deviation);
    res.rows.push_back(row);
  }
  res.bound = C / std::sqrt(double(report.q));
  res.pass = res.max_deviation <= res.bound;
  return res;
}

}  // namespace fiberscope
