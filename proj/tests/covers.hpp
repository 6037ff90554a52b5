#pragma once

#include <vector>

#include "fiberscope/cover.hpp"

namespace testcovers {

using fiberscope::CoverSpec;

// rows[i] = coefficients in t (low first) of z^i
inline CoverSpec make(std::vector<std::vector<long>> rows) {
  std::vector<std::vector<mpz_class>> c;
  for (auto& r : rows) c.emplace_back(r.begin(), r.end());
  return CoverSpec(c);
}

// (z^2 - nu)^e - t
inline CoverSpec quadratic_power(long nu, int e) {
  std::vector<std::vector<long>> rows(2 * e + 1, std::vector<long>{0});
  long binom = 1;
  for (int k = 0; k <= e; ++k) {
    // coefficient of z^(2k) in (z^2 - nu)^e is C(e,k) (-nu)^(e-k)
    long c = binom;
    for (int j = 0; j < e - k; ++j) c *= -nu;
    rows[2 * k] = {c};
    binom = binom * (e - k) / (k + 1);
  }
  rows[0].push_back(-1);
  return make(rows);
}

inline CoverSpec z_power_minus_t(int e) {
  std::vector<std::vector<long>> rows(e + 1, std::vector<long>{0});
  rows[0] = {0, -1};
  rows[e] = {1};
  return make(rows);
}

inline CoverSpec z2_minus_t() { return z_power_minus_t(2); }
inline CoverSpec z3_minus_t() { return z_power_minus_t(3); }
inline CoverSpec z3_plus_z_plus_t() { return make({{0, 1}, {1}, {0}, {1}}); }
// z^2 - t(t-1)(t-2)(t-3)
inline CoverSpec z2_minus_quartic() { return make({{0, 6, -11, 6, -1}, {0}, {1}}); }

}  // namespace testcovers
