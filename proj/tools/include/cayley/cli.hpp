#pragma once

// Command layer behind the `cayley` executable. Every subcommand is a plain
// function from an Options value to its rendered output, so tests can call
// them without spawning a process.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cayley/model.hpp"

namespace cayley::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

inline constexpr int kSchemaVersion = 1;

/// Raised for configurations that parse but violate a command precondition.
class ConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Format { Csv, Json, Text };

struct Grid {
  double from = 0.0;
  double to = 1.0;
  int steps = 2;

  /// `steps` points from `from` to `to` inclusive. Throws ConfigError unless
  /// from < to and steps >= 2.
  std::vector<double> points() const;
};

struct Options {
  int k = 2;
  double J = 1.0;
  double B = 0.0;
  double beta = 1.0;
  /// Overrides J: J = atanh(theta) / beta.
  std::optional<double> theta;
  std::string family = "ti";  // alt | ti | per
  int q = 1;
  int r = 0;
  std::string root = "zero";
  std::optional<std::string> out;
  std::optional<Format> format;
  std::string axis = "beta";  // sweep: beta | B | theta
  std::optional<Grid> grid;
  int max_n = 12;
  /// Worker threads for sweep grids; 0 picks the hardware concurrency.
  int threads = 0;

  ModelParams params() const;
};

std::string cmd_solve(const Options& options);
std::string cmd_fig1(const Options& options);
std::string cmd_fig2(const Options& options);
std::string cmd_sweep(const Options& options);

struct VerifyReport {
  bool passed = true;
  std::string text;
};
VerifyReport cmd_verify(const Options& options);

/// One fig2 data row. branch is hmin, h0, hmax or spinodal.
struct Fig2Row {
  double h;
  double B;
  double F;
  std::string branch;
};
std::vector<Fig2Row> fig2_rows(const ModelParams& params, int steps);

struct Fig1Row {
  double beta;
  double alt_even;
  double alt_odd;
  double alt_zero;
  double ti_star;
};
std::vector<Fig1Row> fig1_rows(int k, int q, double J, const Grid& grid);

/// Parses argv, dispatches, writes output to `out` (or --out) and diagnostics
/// to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cayley::cli
