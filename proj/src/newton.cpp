#include "fiberscope/newton.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fiberscope {

std::string NewtonPolygon::str() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (i) os << ",";
    os << "(" << segments[i].num;
    if (segments[i].den != 1) os << "/" << segments[i].den;
    os << "," << segments[i].length << ")";
  }
  os << "}";
  return os.str();
}

NewtonPolygon newton_polygon(const std::vector<Valuation>& vals) {
  NewtonPolygon np;
  int n = static_cast<int>(vals.size()) - 1;
  if (n < 0) throw PreconditionError("newton_polygon: zero polynomial");
  int i0 = 0;
  while (i0 <= n && vals[i0].is_infinite()) ++i0;
  if (i0 > n) throw PreconditionError("newton_polygon: zero polynomial");
  if (vals[i0].is_at_least()) throw BelowPrecision("newton_polygon: low coefficient undetermined");
  if (!vals[n].is_finite()) throw BelowPrecision("newton_polygon: leading coefficient undetermined");
  np.zero_order = i0;

  struct Pt {
    long x, y;
  };
  std::vector<Pt> hull;
  for (int i = i0; i <= n; ++i) {
    if (!vals[i].is_finite()) continue;
    Pt c{i, vals[i].value};
    while (hull.size() >= 2) {
      const Pt& a = hull[hull.size() - 2];
      const Pt& b = hull.back();
      // drop b when it is on or above the segment a -> c
      long cross = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
      if (cross <= 0)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(c);
  }
  // undetermined interior points must lie on or above the hull
  for (int i = i0; i <= n; ++i) {
    if (!vals[i].is_at_least()) continue;
    for (std::size_t k = 0; k + 1 < hull.size(); ++k) {
      const Pt& a = hull[k];
      const Pt& b = hull[k + 1];
      if (i < a.x || i > b.x) continue;
      // bound >= a.y + (b.y - a.y)(i - a.x)/(b.x - a.x)
      long lhs = long(vals[i].value) * (b.x - a.x);
      long rhs = a.y * (b.x - a.x) + (b.y - a.y) * (i - a.x);
      if (lhs < rhs) throw BelowPrecision("newton_polygon: coefficient " + std::to_string(i) + " undetermined");
    }
  }
  for (std::size_t k = hull.size(); k-- > 1;) {
    const Pt& a = hull[k - 1];
    const Pt& b = hull[k];
    long num = a.y - b.y, den = b.x - a.x;
    long g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    np.segments.push_back({num / g, den / g, static_cast<int>(den)});
  }
  return np;
}

NewtonPolygon newton_polygon(const ZqPoly& f) {
  std::vector<Valuation> v;
  for (auto& c : f.coeffs()) v.push_back(c.valuation());
  return newton_polygon(v);
}

NewtonPolygon newton_polygon(const Poly<PadicInt>& f) {
  std::vector<Valuation> v;
  for (auto& c : f.coeffs()) v.push_back(c.valuation());
  return newton_polygon(v);
}

}  // namespace fiberscope
