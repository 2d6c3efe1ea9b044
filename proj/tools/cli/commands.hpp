#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "phasecomp/io.hpp"

namespace phasecomp::cli {

namespace fs = std::filesystem;
using io::Json;

enum class Status { ok, violation, error };

std::string_view to_string(Status s);

/// Process exit code for a status: 0 ok, 2 violation, 1 error.
int exit_code(Status s);

struct Options {
  double tol = 1e-9;
  std::uint64_t seed = 0;
  bool degrees = false;  // angles in and out are degrees
  std::optional<double> alpha;
  std::optional<double> beta;
  std::optional<fs::path> out;
};

struct RunReport {
  std::string command;
  Status status = Status::ok;
  Json payload = Json::object();
  Json tolerances = Json::object();
  double timing_ms = 0.0;

  /// The report as JSON. Leaving out the timing gives a byte-stable document.
  Json to_json(bool with_timing = true) const;
};

RunReport cmd_chordal(const fs::path& pattern_file, const Options& opt);
RunReport cmd_check(const fs::path& input_file, const Options& opt);

struct CompleteArgs {
  fs::path partial_file;
  std::optional<fs::path> gamma1_file;
  std::optional<fs::path> gamma2_file;
  bool sample_gammas = false;
};
RunReport cmd_complete(const CompleteArgs& args, const Options& opt);

RunReport cmd_decompose(const fs::path& matrix_file, const fs::path& pattern_file,
                        bool rank_one, const Options& opt);
RunReport cmd_phases(const fs::path& matrix_file, std::optional<int> boundary,
                     const Options& opt);

/// Full command-line entry point. The report goes to `out` (JSON with --json,
/// a short summary otherwise); usage errors go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace phasecomp::cli
