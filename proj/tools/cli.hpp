#pragma once

#include "io.hpp"

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace hermex::cli {

enum ExitCode : int { ok = 0, unsolvable = 2, input_error = 3, violated = 4 };

struct Options {
  std::string backend;  ///< "exact", "float", or "" for whatever the instance holds
  std::optional<double> tol;
};

/// A finished command: exit code plus the document it reports.
struct Output {
  int code = ok;
  io::json doc;
};

// The commands below throw hermex::Error subclasses for bad input; run()
// maps those to exit codes.

Output analyze(const io::LoadedInstance& in, const Options& o);
Output solve(const io::LoadedInstance& in, const Options& o, std::uint64_t seed);
Output check_triple(const io::LoadedInstance& in, const Options& o);

struct VerifyOptions {
  std::size_t trials = 1000;
  long grid = 2;
  std::uint64_t seed = 1;
  std::optional<io::Report> report;  ///< check these summaries instead of recomputing
};
Output verify(const io::LoadedInstance& in, const Options& o, const VerifyOptions& v);

/// `kind` for gen_instance, or `triple` ("consistent" / "infeasible") for a
/// three-equation pair instance; exactly one must be non-empty.
GeneratedInstance generate(const std::string& kind, const std::string& triple, std::size_t n, std::uint64_t seed);

/// Runs one command line (without the program name). The report goes to
/// `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hermex::cli
