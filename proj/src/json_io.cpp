#include "fiberscope/json_io.hpp"

#include <fstream>

namespace fiberscope {

namespace {

mpz_class json_integer(const Json& v) {
  if (v.is_number_integer()) return mpz_class(std::to_string(v.get<long long>()));
  if (v.is_string()) {
    mpz_class z;
    if (z.set_str(v.get<std::string>(), 10) != 0) throw ConfigError("cover: bad integer '" + v.get<std::string>() + "'");
    return z;
  }
  throw ConfigError("cover: coefficients must be integers or decimal strings");
}

Json big(const mpz_class& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

CoverSpec cover_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("f")) throw ConfigError("cover: expected an object with key \"f\"");
  std::string order = j.value("var_order", std::string("t,z"));
  if (order != "t,z") throw ConfigError("cover: only var_order \"t,z\" is supported");
  const Json& f = j.at("f");
  if (!f.is_array()) throw ConfigError("cover: \"f\" must be an array of rows");
  std::vector<std::vector<mpz_class>> rows;
  for (auto& row : f) {
    if (!row.is_array()) throw ConfigError("cover: each row of \"f\" must be an array");
    std::vector<mpz_class> r;
    for (auto& c : row) r.push_back(json_integer(c));
    rows.push_back(std::move(r));
  }
  try {
    return CoverSpec(rows);
  } catch (const PreconditionError& e) {
    throw ConfigError(e.what());
  }
}

CoverSpec load_cover(const std::string& path) { return cover_from_json(read_json_file(path)); }

Json cover_to_json(const CoverSpec& c) {
  Json rows = Json::array();
  for (auto& r : c.coefficients()) {
    Json row = Json::array();
    for (auto& x : r) row.push_back(big(x));
    rows.push_back(row);
  }
  return {{"f", rows}, {"var_order", "t,z"}};
}

Json poly_to_json(const FqPoly& f) {
  Json a = Json::array();
  for (auto& c : f.coeffs()) a.push_back(c.ordinal());
  return a;
}

Json poly_to_json(const ZPoly& f) {
  Json a = Json::array();
  for (auto& c : f.coeffs()) a.push_back(big(c));
  return a;
}

Json to_json(const TameExtensionClass& c) {
  return {{"p", c.p}, {"f", c.f}, {"e", c.e}, {"unit_index", c.unit_index}, {"g", c.g}};
}

Json to_json(const EtaleFactor& f) {
  Json j = {{"e", f.e}, {"f", f.f}};
  if (f.tame_class) j["tame_class"] = to_json(*f.tame_class);
  return j;
}

Json to_json(const EtaleAlgebraDescriptor& d) {
  Json blocks = Json::array();
  for (auto& b : d.blocks) {
    Json fs = Json::array();
    for (auto& f : b.factors) fs.push_back(to_json(f));
    Json jb = {{"residue_factor", poly_to_json(b.residue_factor)},
               {"deg", b.deg},
               {"e", b.e},
               {"indeterminate", b.indeterminate},
               {"factors", fs}};
    if (b.indeterminate) jb["e_bounds"] = {b.e_lo, b.e_hi};
    blocks.push_back(jb);
  }
  Json all = Json::array();
  for (auto& f : d.all_factors()) all.push_back(to_json(f));
  return {{"degree", d.degree}, {"blocks", blocks}, {"factors", all}};
}

Json to_json(const ReductionReport& r) {
  Json table = Json::object();
  for (auto& [t, entries] : r.ramification_table) {
    Json col = Json::array();
    for (auto& e : entries) col.push_back({{"deg", e.deg}, {"e", e.e}});
    table[std::to_string(t)] = col;
  }
  Json nonrat = Json::array();
  for (auto& [k, entries] : r.nonrational_branch_points) {
    Json col = Json::array();
    for (auto& e : entries) col.push_back({{"deg", e.deg}, {"e", e.e}});
    nonrat.push_back({{"point_degree", k}, {"fiber", col}});
  }
  return {{"p", r.p},
          {"good", r.good},
          {"branch_points_mod_p", r.branch_points_mod_p},
          {"ramification_table", table},
          {"nonrational_branch_points", nonrat},
          {"failure_reasons", r.failure_reasons},
          {"warnings", r.warnings}};
}

Json to_json(const BadPrimeReport& r) {
  Json ps = Json::array();
  for (auto& p : r.primes) ps.push_back(big(p));
  return {{"primes", ps}, {"notes", r.notes}};
}

Json to_json(const CensusReport& r) {
  Json blocks = Json::array();
  for (auto& b : r.blocks) {
    Json hist = Json::array();
    for (auto& [c, n] : b.histogram)
      hist.push_back({{"tame_class", to_json(c)}, {"count", n}, {"frequency", to_string(mpq_class(n, r.lifts))}});
    Json real = Json::array();
    for (auto& c : b.realizable) real.push_back(to_json(c));
    blocks.push_back({{"residue_factor", poly_to_json(b.residue_factor)},
                      {"deg", b.deg},
                      {"e", b.e},
                      {"histogram", hist},
                      {"realizable", real},
                      {"theoretical_frequency", to_string(b.theoretical_frequency)},
                      {"uniform", b.uniform}});
  }
  return {{"p", r.p},     {"tbar", r.tbar}, {"depth", r.depth}, {"lifts", r.lifts}, {"oracle_mismatches", r.oracle_mismatches},
          {"blocks", blocks}};
}

Json to_json(const CycleCensusReport& r) {
  Json counts = Json::array();
  for (auto& [c, n] : r.counts) counts.push_back({{"cycle_type", c}, {"count", n}});
  return {{"p", r.p},           {"f", r.f},           {"q", r.q},
          {"counts", counts},   {"sampled", r.sampled}, {"branch", r.branch},
          {"out_of_chart", r.out_of_chart}};
}

Json to_json(const ChebotarevResult& r) {
  Json rows = Json::array();
  for (auto& x : r.rows)
    rows.push_back({{"cycle_type", x.type}, {"observed", x.observed}, {"expected", x.expected}, {"deviation", x.deviation}});
  return {{"rows", rows}, {"max_deviation", r.max_deviation}, {"bound", r.bound}, {"pass", r.pass}};
}

Json to_json(const EquidistResult& r) {
  Json rows = Json::array();
  for (auto& x : r.rows)
    rows.push_back({{"class", {x.cls.u, x.cls.v}},
                    {"count", x.count},
                    {"main_term", x.main_term},
                    {"residual", x.residual}});
  return {{"m", r.m},         {"N", r.N},           {"rows", rows},
          {"counted", r.counted}, {"raw_total", r.raw_total}, {"max_residual", r.max_residual},
          {"ratio_to_N_log_N", r.ratio}};
}

}  // namespace fiberscope
