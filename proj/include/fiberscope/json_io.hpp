#pragma once

#include <string>

#include <json.hpp>

#include "fiberscope/cover.hpp"
#include "fiberscope/cycle_census.hpp"
#include "fiberscope/fiber.hpp"
#include "fiberscope/heights.hpp"
#include "fiberscope/reduction.hpp"
#include "fiberscope/tame_class.hpp"

namespace fiberscope {

using Json = nlohmann::json;

// malformed input files and flags: the caller's configuration is wrong
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// {"f": [[c_ij]], "var_order": "t,z"}: row i is the z^i coefficient, column j the t^j part
CoverSpec cover_from_json(const Json& j);
CoverSpec load_cover(const std::string& path);
Json cover_to_json(const CoverSpec& c);
Json read_json_file(const std::string& path);

Json to_json(const TameExtensionClass& c);
Json to_json(const EtaleFactor& f);
Json to_json(const EtaleAlgebraDescriptor& d);
Json to_json(const ReductionReport& r);
Json to_json(const BadPrimeReport& r);
Json to_json(const CensusReport& r);
Json to_json(const CycleCensusReport& r);
Json to_json(const ChebotarevResult& r);
Json to_json(const EquidistResult& r);
Json poly_to_json(const FqPoly& f);
Json poly_to_json(const ZPoly& f);

}  // namespace fiberscope
