#include "fiberscope/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fiberscope/cycle_census.hpp"
#include "fiberscope/fiber.hpp"
#include "fiberscope/heights.hpp"
#include "fiberscope/integer.hpp"
#include "fiberscope/perm_group.hpp"
#include "fiberscope/reduction.hpp"

namespace fiberscope {

namespace {

struct Flags {
  std::string cover, t, chart = "affine", manifest, group, generators, sigma, op, format = "json";
  std::uint64_t p = 0, tbar = 0, bound = 1000;
  int depth = 2, precision = 0, f = 1, genus = 0, degree = 0;
  long m = 0, N = 0;
  double C = 0;
  unsigned threads = 0;
  bool no_verify = false, write_fixtures = false, have_tbar = false;
};

std::uint32_t checked_prime(std::uint64_t p) {
  if (p < 2 || p > 0xffffffffu || !is_prime_u64(p)) throw ConfigError("--p " + std::to_string(p) + " is not a prime");
  return static_cast<std::uint32_t>(p);
}

mpq_class rational_flag(const std::string& s) {
  try {
    return parse_rational(s);
  } catch (const PreconditionError& e) {
    throw ConfigError(std::string("--t: ") + e.what());
  }
}

Json parse_json_flag(const std::string& name, const std::string& s) {
  try {
    return Json::parse(s);
  } catch (const Json::parse_error&) {
    throw ConfigError(name + ": not valid JSON");
  }
}

std::vector<Perm> parse_generators(const std::string& s) {
  Json j = parse_json_flag("--generators", s);
  if (!j.is_array() || j.empty()) throw ConfigError("--generators: expected a non-empty array of one-line permutations");
  std::vector<Perm> gens;
  std::size_t d = 0;
  for (auto& g : j) {
    if (!g.is_array()) throw ConfigError("--generators: each generator must be an array");
    std::vector<int> images;
    for (auto& x : g) {
      if (!x.is_number_integer()) throw ConfigError("--generators: images must be integers");
      images.push_back(x.get<int>());
    }
    if (d && images.size() != d) throw ConfigError("--generators: generators have different degrees");
    d = images.size();
    try {
      gens.push_back(from_one_line(images));
    } catch (const std::exception& e) {
      throw ConfigError(std::string("--generators: ") + e.what());
    }
  }
  return gens;
}

PermutationGroup named_group(const std::string& name) {
  if (name.size() < 2) throw ConfigError("--group: expected S<d>, A<d>, D<d> or C<d>");
  int d = 0;
  try {
    std::size_t used = 0;
    d = std::stoi(name.substr(1), &used);
    if (used != name.size() - 1) throw std::invalid_argument(name);
  } catch (const std::exception&) {
    throw ConfigError("--group: bad degree in '" + name + "'");
  }
  if (d < 1 || d > 8) throw ConfigError("--group: degree must be in [1, 8]");
  switch (name[0]) {
    case 'S': return symmetric_group(d);
    case 'A': return alternating_group(d);
    case 'D': return dihedral_group(d);
    case 'C': return cyclic_group(d);
  }
  throw ConfigError("--group: expected S<d>, A<d>, D<d> or C<d>");
}

Json perm_json(const Perm& a) {
  Json j = Json::array();
  for (int x : a) j.push_back(x + 1);
  return j;
}

Json document(Json body) {
  body["schema"] = 1;
  return body;
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

FiberOptions fiber_options(const Flags& fl) {
  FiberOptions opt;
  opt.start_prec = fl.precision;
  if (fl.chart == "infinity") opt.infinity_chart = true;
  else if (fl.chart != "affine") throw ConfigError("--chart must be 'affine' or 'infinity'");
  return opt;
}

int run_check(const Flags& fl, std::ostream& out) {
  CoverSpec c = load_cover(fl.cover);
  auto p = checked_prime(fl.p);
  Json j = to_json(check_good_reduction(c, p));
  j["cover"] = cover_to_json(c);
  emit(out, document(j));
  return exit_code::ok;
}

int run_fiber(const Flags& fl, std::ostream& out) {
  CoverSpec c = load_cover(fl.cover);
  auto p = checked_prime(fl.p);
  mpq_class t = rational_flag(fl.t);
  FiberOptions opt = fiber_options(fl);
  Json j;
  int code = exit_code::ok;
  if (fl.no_verify) {
    j = to_json(predict_fiber(c, p, t, opt));
  } else {
    AgreementReport a = agreement_check(c, p, t, opt);
    j = to_json(a.predicted);
    j["verification"] = {{"agree", a.agree}, {"diffs", a.diffs}, {"oracle", to_json(a.oracle)}};
    if (!a.agree) code = exit_code::mismatch;
  }
  FiberSite site = fiber_site(c, p, t, opt.infinity_chart);
  BranchDistance bd = branch_distance(site.cover, p, site.t, opt.start_prec);
  j["p"] = p;
  j["t"] = t.get_str();
  j["chart"] = site.infinity_chart ? "infinity" : "affine";
  j["branch_distance"] = bd.infinite ? Json("infinity") : Json(bd.value);
  j["tbar"] = bd.tbar;
  emit(out, document(j));
  return code;
}

int run_census(const Flags& fl, std::ostream& out, std::ostream& err) {
  CoverSpec c = load_cover(fl.cover);
  auto p = checked_prime(fl.p);
  if (fl.have_tbar) {
    if (!fl.group.empty() || !fl.generators.empty()) throw ConfigError("census: --tbar and --group/--generators exclude each other");
    if (fl.depth < 2 || fl.depth > 12) throw ConfigError("--depth must be in [2, 12]");
    CensusReport r = measure_census(c, p, fl.tbar % p, fl.depth, !fl.no_verify);
    emit(out, document(to_json(r)));
    return r.oracle_mismatches ? exit_code::mismatch : exit_code::ok;
  }
  if (fl.f < 1) throw ConfigError("--f must be positive");
  CycleCensusReport r = cycle_census(c, p, fl.f);
  Json j = to_json(r);
  if (!fl.group.empty() || !fl.generators.empty()) {
    if (!fl.group.empty() && !fl.generators.empty()) throw ConfigError("census: give --group or --generators, not both");
    PermutationGroup G = fl.group.empty() ? [&] {
      auto gens = parse_generators(fl.generators);
      return PermutationGroup(static_cast<int>(gens[0].size()), gens);
    }() : named_group(fl.group);
    if (G.degree() != c.degree()) throw ConfigError("census: group degree differs from the cover degree");
    if (fl.genus == 0 && fl.C <= 0) err << "warning: --genus not given; the tolerance assumes genus 0\n";
    double C = fl.C > 0 ? fl.C : default_tolerance_constant(fl.genus, G.order());
    ChebotarevResult ch = chebotarev_compare(r, G, C);
    j["chebotarev"] = to_json(ch);
    j["chebotarev"]["C"] = C;
    j["group_order"] = G.order();
  }
  emit(out, document(j));
  return exit_code::ok;
}

int run_badprimes(const Flags& fl, std::ostream& out) {
  CoverSpec c = load_cover(fl.cover);
  Json j = to_json(bad_primes(c, fl.bound));
  j["bound"] = fl.bound;
  emit(out, document(j));
  return exit_code::ok;
}

int run_group(const Flags& fl, std::ostream& out) {
  if (fl.op == "transpositions") {
    auto ts = parse_generators(fl.generators);
    int d = static_cast<int>(ts[0].size());
    bool ok = transposition_transitivity_check(ts, d);
    emit(out, document({{"op", fl.op}, {"degree", d}, {"connected", ok}}));
    return exit_code::ok;
  }
  PermutationGroup G = fl.generators.empty() ? named_group(fl.group) : [&] {
    auto gens = parse_generators(fl.generators);
    return PermutationGroup(static_cast<int>(gens[0].size()), gens);
  }();
  if (fl.sigma.empty()) throw ConfigError("group: --sigma is required");
  Perm sigma;
  try {
    sigma = parse_cycles(fl.sigma, G.degree());
  } catch (const std::exception& e) {
    throw ConfigError(std::string("--sigma: ") + e.what());
  }
  if (!G.contains(sigma)) throw PreconditionError("sigma is not an element of G");
  Json j = {{"op", fl.op}, {"degree", G.degree()}, {"group_order", G.order()}, {"sigma", perm_json(sigma)},
            {"cycle_type", cycle_type(sigma)}};
  if (fl.op == "double-cosets") {
    Json cs = Json::array();
    for (auto& dc : double_cosets(G, sigma))
      cs.push_back({{"representative", perm_json(dc.representative)}, {"block_size", dc.block_size}});
    j["double_cosets"] = cs;
  } else if (fl.op == "etale") {
    j["inertia_degrees"] = etale_from_frobenius(sigma, G);
  } else {
    throw ConfigError("group: --op must be double-cosets, etale or transpositions");
  }
  emit(out, document(j));
  return exit_code::ok;
}

int run_heights(const Flags& fl, std::ostream& out) {
  const bool csv = fl.format == "csv";
  if (!csv && fl.format != "json") throw ConfigError("--format must be json or csv");
  if (fl.op == "threshold") {
    long thr = surjectivity_threshold(fl.m), b = surjectivity_bound(fl.m);
    if (csv)
      out << "m,size,threshold,bound\n" << fl.m << "," << projective_line_size(fl.m) << "," << thr << "," << b << "\n";
    else
      emit(out, document({{"op", fl.op}, {"m", fl.m}, {"size", projective_line_size(fl.m)}, {"threshold", thr},
                          {"bound", b}, {"within_bound", thr <= b}}));
  } else if (fl.op == "inject") {
    long N = fl.N;
    if (N <= 0)
      while (2 * (N + 1) * (N + 1) < fl.m) ++N;
    if (N <= 0) throw PreconditionError("inject: no positive height below sqrt(m/2); pass --N");
    bool inj = injectivity_check(fl.m, N);
    if (csv) out << "m,N,injective\n" << fl.m << "," << N << "," << (inj ? 1 : 0) << "\n";
    else emit(out, document({{"op", fl.op}, {"m", fl.m}, {"N", N}, {"injective", inj}}));
  } else if (fl.op == "equidist") {
    if (fl.N <= 0) throw ConfigError("equidist: --N is required");
    EquidistResult r = equidistribution_test(fl.m, fl.N);
    if (csv) {
      out << "index,u,v,count,main_term,residual\n";
      for (auto& row : r.rows)
        out << row.index << "," << row.cls.u << "," << row.cls.v << "," << row.count << "," << row.main_term << ","
            << row.residual << "\n";
    } else {
      Json j = to_json(r);
      j["op"] = fl.op;
      emit(out, document(j));
    }
  } else {
    throw ConfigError("heights: --op must be threshold, inject or equidist");
  }
  return exit_code::ok;
}

int run_corpus(const Flags& fl, std::ostream& out, std::ostream& err) {
  CorpusSummary s = corpus_run(fl.manifest, fl.write_fixtures, fl.threads);
  emit(out, document(s.report));
  if (s.mismatches) {
    err << s.mismatches << " of " << s.cases << " corpus cases mismatched\n";
    return exit_code::mismatch;
  }
  return exit_code::ok;
}

}  // namespace

CorpusSummary corpus_run(const std::string& manifest_path, bool write_fixtures, unsigned threads) {
  namespace fs = std::filesystem;
  Json manifest = read_json_file(manifest_path);
  if (!manifest.is_object() || manifest.value("schema", 0) != 1)
    throw ConfigError("manifest: expected an object with \"schema\": 1");
  if (!manifest.contains("rows")) manifest["rows"] = Json::array();
  Json& rows = manifest["rows"];
  if (!rows.is_array()) throw ConfigError("manifest: \"rows\" must be an array");
  const fs::path base = fs::path(manifest_path).parent_path();

  struct Row {
    CoverSpec cover;
    std::uint32_t p;
  };
  std::vector<Row> parsed;
  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Json& row = rows[r];
    if (!row.is_object() || !row.contains("cover") || !row.contains("p") || !row.contains("cases"))
      throw ConfigError("manifest row " + std::to_string(r) + ": needs cover, p and cases");
    CoverSpec c = load_cover((base / row.at("cover").get<std::string>()).string());
    parsed.push_back({c, checked_prime(row.at("p").get<std::uint64_t>())});
    for (std::size_t k = 0; k < row.at("cases").size(); ++k) {
      const Json& cs = row["cases"][k];
      if (!cs.contains("t")) throw ConfigError("manifest row " + std::to_string(r) + ": case without t");
      if (!write_fixtures && !cs.contains("expected"))
        throw ConfigError("manifest row " + std::to_string(r) + ", t = " + cs["t"].get<std::string>() +
                          ": missing fixture");
      jobs.emplace_back(r, k);
    }
  }

  struct Outcome {
    Json oracle;
    std::vector<std::string> diffs;
    std::string error;
  };
  std::vector<Outcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < jobs.size();) {
      auto [r, k] = jobs[i];
      const Json& cs = rows[r]["cases"][k];
      Outcome& o = outcomes[i];
      try {
        AgreementReport a = agreement_check(parsed[r].cover, parsed[r].p, rational_flag(cs.at("t").get<std::string>()));
        o.oracle = to_json(a.oracle);
        o.diffs = a.diffs;
        if (!write_fixtures && o.oracle != cs.at("expected")) o.diffs.push_back("oracle differs from the stored fixture");
      } catch (const std::exception& e) {
        o.error = e.what();
      }
    }
  };
  unsigned n = threads ? threads : std::max(1u, std::thread::hardware_concurrency());
  n = static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs.size(), 1)));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  CorpusSummary s;
  s.rows = rows.size();
  s.cases = jobs.size();
  Json table = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    auto [r, k] = jobs[i];
    Json& cs = rows[r]["cases"][k];
    const Outcome& o = outcomes[i];
    bool ok = o.error.empty() && o.diffs.empty();
    if (!ok) ++s.mismatches;
    Json line = {{"cover", rows[r]["cover"]}, {"p", rows[r]["p"]}, {"t", cs["t"]}, {"pass", ok}};
    if (!o.error.empty()) line["error"] = o.error;
    if (!o.diffs.empty()) {
      line["diffs"] = o.diffs;
      if (cs.contains("expected")) line["expected"] = cs["expected"];
      line["oracle"] = o.oracle;
    }
    table.push_back(line);
    if (write_fixtures && o.error.empty()) cs["expected"] = o.oracle;
  }
  if (write_fixtures) {
    std::ofstream f(manifest_path);
    if (!f) throw ConfigError("cannot write " + manifest_path);
    f << manifest.dump(1) << "\n";
    s.fixtures_written = true;
  }
  s.report = {{"rows", s.rows}, {"cases", s.cases}, {"mismatches", s.mismatches}, {"results", table},
              {"fixtures_written", s.fixtures_written}};
  return s;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (auto& a : args) argv.push_back(a.c_str());
  return dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
}

int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fiberscope: fibers of covers of the projective line over p-adic fields"};
  app.require_subcommand(1);
  Flags fl;

  auto add_cover = [&](CLI::App* s) { s->add_option("--cover", fl.cover, "cover JSON file")->required(); };
  auto add_p = [&](CLI::App* s) { s->add_option("--p", fl.p, "prime")->required(); };

  auto* check = app.add_subcommand("check", "good reduction report at p");
  add_cover(check);
  add_p(check);

  auto* fiber = app.add_subcommand("fiber", "predicted etale algebra of the fiber over t, verified by the oracle");
  add_cover(fiber);
  add_p(fiber);
  fiber->add_option("--t", fl.t, "rational point, e.g. 5 or -3/25")->required();
  fiber->add_option("--precision", fl.precision, "starting absolute precision (0: automatic)");
  fiber->add_option("--chart", fl.chart, "affine (default) or infinity");
  fiber->add_flag("--no-verify", fl.no_verify, "skip the Newton polygon oracle");

  auto* census = app.add_subcommand("census", "tame class census over tbar, or Frobenius cycle census over F_{p^f}");
  add_cover(census);
  add_p(census);
  census->add_option("--tbar", fl.tbar, "residue of the branch point (tame census)");
  census->add_option("--depth", fl.depth, "lifts are taken mod p^depth");
  census->add_flag("--no-verify", fl.no_verify, "skip the per-lift oracle check");
  census->add_option("--f", fl.f, "residue field degree (cycle census)");
  census->add_option("--group", fl.group, "candidate monodromy group: S<d>, A<d>, D<d>, C<d>");
  census->add_option("--generators", fl.generators, "candidate monodromy group as JSON one-line generators");
  census->add_option("--genus", fl.genus, "genus guess for the Galois closure (tolerance constant)");
  census->add_option("--C", fl.C, "explicit tolerance constant");

  auto* bad = app.add_subcommand("badprimes", "primes of bad reduction up to a bound");
  add_cover(bad);
  bad->add_option("--bound", fl.bound, "largest prime reported");

  auto* group = app.add_subcommand("group", "permutation group computations");
  group->add_option("--op", fl.op, "double-cosets, etale or transpositions")->required();
  group->add_option("--generators", fl.generators, "JSON array of one-line permutations (1-based)");
  group->add_option("--group", fl.group, "S<d>, A<d>, D<d> or C<d>");
  group->add_option("--sigma", fl.sigma, "element in cycle notation, e.g. \"(1 2)(3 4)\"");

  auto* heights = app.add_subcommand("heights", "rational points of bounded height modulo m");
  heights->add_option("--op", fl.op, "threshold, inject or equidist")->required();
  heights->add_option("--m", fl.m, "modulus")->required();
  heights->add_option("--N", fl.N, "height bound");
  heights->add_option("--format", fl.format, "json (default) or csv");

  auto* corpus = app.add_subcommand("corpus", "run a manifest of fibers against stored fixtures");
  corpus->add_option("--manifest", fl.manifest, "manifest JSON file")->required();
  corpus->add_flag("--write-fixtures", fl.write_fixtures, "store the oracle's descriptors as fixtures");
  corpus->add_option("--threads", fl.threads, "worker threads (0: hardware concurrency)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? exit_code::ok : exit_code::config;
  }
  fl.have_tbar = census->count("--tbar") > 0;

  try {
    precision_cap();
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << "\n";
    return exit_code::config;
  }

  try {
    if (*check) return run_check(fl, out);
    if (*fiber) return run_fiber(fl, out);
    if (*census) return run_census(fl, out, err);
    if (*bad) return run_badprimes(fl, out);
    if (*group) return run_group(fl, out);
    if (*heights) return run_heights(fl, out);
    if (*corpus) return run_corpus(fl, out, err);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return exit_code::config;
  } catch (const BelowPrecision& e) {
    err << "below precision: " << e.what() << "\n";
    return exit_code::below_precision;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return exit_code::precondition;
  } catch (const std::domain_error& e) {
    err << "unsupported: " << e.what() << "\n";
    return exit_code::precondition;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::mismatch;
  }
  return exit_code::config;
}

}  // namespace fiberscope
