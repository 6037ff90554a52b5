#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "fiberscope/json_io.hpp"

namespace fiberscope {

namespace exit_code {
constexpr int ok = 0;
constexpr int mismatch = 1;  // corpus or predictor/oracle disagreement, internal failure
constexpr int precondition = 2;
constexpr int below_precision = 3;
constexpr int config = 4;
}  // namespace exit_code

// parses argv, runs one subcommand, writes the report to out and diagnostics to err
int dispatch(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CorpusSummary {
  std::size_t rows = 0;
  std::size_t cases = 0;
  std::size_t mismatches = 0;
  bool fixtures_written = false;
  Json report;
};
// manifest: {"schema": 1, "rows": [{"cover": path, "p": int, "cases": [{"t": str, "expected": descriptor}]}]}
// cover paths are relative to the manifest; write_fixtures stores the oracle's descriptor as "expected"
CorpusSummary corpus_run(const std::string& manifest_path, bool write_fixtures, unsigned threads = 0);

}  // namespace fiberscope
