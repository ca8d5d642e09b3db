#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "cayley/cli.hpp"

namespace cayley::cli {

namespace {

Format parse_format(const std::string& text) {
  if (text == "csv") return Format::Csv;
  if (text == "json") return Format::Json;
  return Format::Text;
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (!o.out) {
    out << text;
    return;
  }
  std::ofstream file(*o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw ConfigError("cannot open --out file '" + *o.out + "'");
  file << text;
  if (!file) throw std::runtime_error("failed writing '" + *o.out + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ising model on a Cayley tree: compatible boundary conditions, "
               "free energies and finite-volume checks",
               "cayley"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_config("--config", "", "TOML or INI file with option values; flags win");

  Options o;
  std::string format;
  double theta = 0.0;
  std::string out_path;
  Grid grid;

  app.add_option("-k", o.k, "Branching ratio (k >= 2)")->capture_default_str();
  app.add_option("-J", o.J, "Coupling J")->capture_default_str();
  app.add_option("-B", o.B, "External field B")->capture_default_str();
  app.add_option("--beta", o.beta, "Inverse temperature")->capture_default_str();
  auto* theta_opt = app.add_option("--theta", theta, "tanh(beta J); overrides -J");
  app.add_option("--family", o.family, "Boundary family")
      ->check(CLI::IsMember({"alt", "ti", "per"}))
      ->capture_default_str();
  app.add_option("-q", o.q, "Alternating q (1 <= q <= k-1)")->capture_default_str();
  app.add_option("-r", o.r, "Alternating r (0 <= r <= k, r = k mod 2)")->capture_default_str();
  app.add_option("--root", o.root, "Alternating root label")
      ->check(CLI::IsMember({"zero", "+h1", "-h1", "+h2", "-h2"}))
      ->capture_default_str();
  auto* out_opt = app.add_option("--out", out_path, "Write output to this file");
  auto* format_opt = app.add_option("--format", format, "Output format")
                         ->check(CLI::IsMember({"csv", "json", "text"}));
  app.add_option("--axis", o.axis, "Sweep axis")
      ->check(CLI::IsMember({"beta", "B", "theta"}))
      ->capture_default_str();
  auto* from_opt = app.add_option("--from", grid.from, "Grid start");
  auto* to_opt = app.add_option("--to", grid.to, "Grid end");
  auto* steps_opt = app.add_option("--steps", grid.steps, "Grid points");
  app.add_option("--max-n", o.max_n, "Deepest ball for verify")->capture_default_str();
  app.add_option("--threads", o.threads, "Sweep worker threads (0 = all cores)")
      ->capture_default_str();

  auto* solve = app.add_subcommand("solve", "Solve the compatibility system (JSON)");
  auto* fig1 = app.add_subcommand("fig1", "Alternating free energies against beta (CSV)");
  auto* fig2 = app.add_subcommand("fig2", "TI free energy against field, parametric in h (CSV)");
  auto* sweep = app.add_subcommand("sweep", "Solutions and free energies along one axis (CSV)");
  auto* verify = app.add_subcommand("verify", "Finite-volume oracle checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (*theta_opt) o.theta = theta;
  if (*out_opt) o.out = out_path;
  if (*format_opt) o.format = parse_format(format);
  if (*from_opt || *to_opt || *steps_opt) {
    if (!*from_opt || !*to_opt || !*steps_opt) {
      err << "error: --from, --to and --steps must be given together\n";
      return kExitUsage;
    }
    o.grid = grid;
  }

  try {
    if (app.got_subcommand(solve)) {
      emit(o, cmd_solve(o), out);
    } else if (app.got_subcommand(fig1)) {
      emit(o, cmd_fig1(o), out);
    } else if (app.got_subcommand(fig2)) {
      emit(o, cmd_fig2(o), out);
    } else if (app.got_subcommand(sweep)) {
      emit(o, cmd_sweep(o), out);
    } else if (app.got_subcommand(verify)) {
      const VerifyReport report = cmd_verify(o);
      emit(o, report.text, out);
      return report.passed ? kExitOk : kExitVerifyFailed;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace cayley::cli
