#pragma once

#include <string>
#include <vector>

#include "fiberscope/unramified.hpp"

namespace fiberscope {

// roots of valuation num/den, `length` of them
struct NewtonSegment {
  long num = 0;
  long den = 1;
  int length = 0;
  bool operator==(const NewtonSegment&) const = default;
};

struct NewtonPolygon {
  std::vector<NewtonSegment> segments;  // increasing slope
  int zero_order = 0;                   // exact vanishing order at z = 0
  std::string str() const;
};

NewtonPolygon newton_polygon(const std::vector<Valuation>& vals);
NewtonPolygon newton_polygon(const ZqPoly& f);
NewtonPolygon newton_polygon(const Poly<PadicInt>& f);

}  // namespace fiberscope
