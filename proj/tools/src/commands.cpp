#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <variant>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "cayley/boundary.hpp"
#include "cayley/cli.hpp"
#include "cayley/free_energy.hpp"
#include "cayley/oracle.hpp"
#include "cayley/solver.hpp"

namespace cayley::cli {

namespace {

using json = nlohmann::ordered_json;
using Cell = std::variant<double, std::string>;
using Row = std::vector<Cell>;

struct Table {
  std::string command;
  std::vector<std::string> columns;
  std::vector<Row> rows;
};

std::string number(double x) { return fmt::format("{:.17g}", x); }

std::string render_csv(const Table& table) {
  std::string out;
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    if (i) out += ',';
    out += table.columns[i];
  }
  out += '\n';
  for (const Row& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      if (const double* x = std::get_if<double>(&row[i])) {
        out += number(*x);
      } else {
        out += std::get<std::string>(row[i]);
      }
    }
    out += '\n';
  }
  return out;
}

std::string render_json(const Table& table, json params) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = table.command;
  doc["params"] = std::move(params);
  doc["columns"] = table.columns;
  json rows = json::array();
  for (const Row& row : table.rows) {
    json r = json::array();
    for (const Cell& cell : row) {
      std::visit([&r](const auto& v) { r.push_back(v); }, cell);
    }
    rows.push_back(std::move(r));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + '\n';
}

std::string render(const Table& table, const Options& o, Format fallback, json params) {
  switch (o.format.value_or(fallback)) {
    case Format::Json: return render_json(table, std::move(params));
    case Format::Csv: return render_csv(table);
    case Format::Text: break;
  }
  throw ConfigError(table.command + ": text output is only available for verify");
}

// Evaluates f(0..count-1) on a small pool; results keep index order.
template <class T, class F>
std::vector<T> parallel_map(std::size_t count, int threads, F&& f) {
  std::vector<T> results(count);
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        results[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
  }
  if (error) std::rethrow_exception(error);
  return results;
}

SystemTag parse_family(const std::string& family) {
  if (family == "alt") return SystemTag::Alternating;
  if (family == "ti") return SystemTag::TranslationInvariant;
  if (family == "per") return SystemTag::Periodic;
  throw ConfigError("unknown family '" + family + "' (expected alt, ti or per)");
}

json params_json(const Options& o, const ModelParams& p) {
  json j;
  j["family"] = o.family;
  j["k"] = p.k();
  j["J"] = p.J();
  j["B"] = p.B();
  j["beta"] = p.beta();
  j["theta"] = p.theta();
  if (o.family == "alt") {
    j["q"] = o.q;
    j["r"] = o.r;
    j["root"] = o.root;
  }
  return j;
}

SolutionSet solve_family(SystemTag system, const Options& o, const ModelParams& p) {
  switch (system) {
    case SystemTag::Alternating:
      if (p.B() != 0.0) throw ConfigError("alt family requires B = 0");
      return solve_alternating_coupling(p.k(), o.q, p.coupling());
    case SystemTag::TranslationInvariant: return solve_TI(p);
    case SystemTag::Periodic: return solve_periodic(p);
  }
  throw ConfigError("unknown system");
}

std::string regime(const SolutionSet& set) {
  switch (set.system) {
    case SystemTag::Alternating: return set.size() == 1 ? "unique" : "three";
    case SystemTag::TranslationInvariant:
      return set.size() == 1 ? "unique" : set.size() == 2 ? "two" : "three";
    case SystemTag::Periodic: return set.count(Branch::CycleAscending) ? "cycle" : "diagonal";
  }
  return "?";
}

FreeEnergyResult family_free_energy(SystemTag system, const Options& o, const ModelParams& p,
                                    const Solution& s) {
  switch (system) {
    case SystemTag::Alternating:
      return fe_alt(p.k(), o.q, o.r, s.first, s.second, p.beta(), p.J(),
                    parse_root_label(o.root.c_str()));
    case SystemTag::TranslationInvariant: return fe_TI(s.first, p);
    case SystemTag::Periodic: return fe_periodic(s.first, s.second, p);
  }
  throw ConfigError("unknown system");
}

// The solution used by verify: the ordered or nonzero branch when present.
const Solution& representative(const SolutionSet& set) {
  for (Branch b : {Branch::Plus, Branch::CycleAscending}) {
    if (const Solution* s = set.find(b)) return *s;
  }
  return set.solutions.back();
}

}  // namespace

std::vector<double> Grid::points() const {
  if (!(from < to) || steps < 2 || !std::isfinite(from) || !std::isfinite(to)) {
    throw ConfigError(fmt::format("grid must satisfy from < to and steps >= 2 (got {}, {}, {})",
                                  from, to, steps));
  }
  std::vector<double> out(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i) {
    const double w = static_cast<double>(i) / (steps - 1);
    out[static_cast<std::size_t>(i)] = (1.0 - w) * from + w * to;
  }
  return out;
}

ModelParams Options::params() const {
  double coupling_J = J;
  if (theta) {
    if (!(std::abs(*theta) < 1.0)) throw ConfigError("--theta must satisfy |theta| < 1");
    if (!(beta > 0.0)) throw ConfigError("--beta must be > 0");
    coupling_J = std::atanh(*theta) / beta;
  }
  return ModelParams(k, coupling_J, B, beta);
}

std::string cmd_solve(const Options& o) {
  const SystemTag system = parse_family(o.family);
  const ModelParams p = o.params();
  const SolutionSet set = solve_family(system, o, p);
  json params = params_json(o, p);
  if (o.format.value_or(Format::Json) == Format::Csv) {
    Table table{"solve", {"branch", "first", "second", "residual"}, {}};
    for (const auto& s : set.solutions) {
      table.rows.push_back({std::string(to_string(s.branch)), s.first, s.second, s.residual});
    }
    return render_csv(table);
  }
  if (o.format == Format::Text) throw ConfigError("solve: text output is not available");
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["command"] = "solve";
  doc["system"] = to_string(set.system);
  doc["regime"] = regime(set);
  doc["params"] = std::move(params);
  doc["iterations"] = set.iterations;
  json solutions = json::array();
  for (const auto& s : set.solutions) {
    solutions.push_back({{"branch", to_string(s.branch)},
                         {"first", s.first},
                         {"second", s.second},
                         {"residual", s.residual}});
  }
  doc["solutions"] = std::move(solutions);
  return doc.dump(2) + '\n';
}

std::vector<Fig1Row> fig1_rows(int k, int q, double J, const Grid& grid) {
  AltParams{q, 0, FieldLabel::Zero}.validate(k);
  const auto betas = grid.points();
  if (!(betas.front() > 0.0)) throw ConfigError("fig1: beta grid must be positive");
  const auto even = alternating_curve(k, q, 0, J, FieldLabel::Zero, 0);
  const auto odd = alternating_curve(k, q, 0, J, FieldLabel::Zero, 1);
  const auto zero = free_bc_curve(k, J);
  const auto ti = ti_star_curve(k, J);
  return parallel_map<Fig1Row>(betas.size(), 0, [&](std::size_t i) {
    const double b = betas[i];
    return Fig1Row{b, even(b), odd(b), zero(b), ti(b)};
  });
}

std::string cmd_fig1(const Options& o) {
  const Grid grid = o.grid.value_or(Grid{0.3, 1.6, 131});
  Table table{"fig1", {"beta", "F_alt_even", "F_alt_odd", "F_alt_zero", "F_ti_star"}, {}};
  for (const auto& r : fig1_rows(o.k, o.q, o.J, grid)) {
    table.rows.push_back({r.beta, r.alt_even, r.alt_odd, r.alt_zero, r.ti_star});
  }
  json params{{"k", o.k}, {"q", o.q}, {"r", 0}, {"J", o.J}};
  return render(table, o, Format::Csv, std::move(params));
}

namespace {

constexpr double kFig2Margin = 1e-6;

Fig2Row fig2_row(double h, const ModelParams& p, double h_s) {
  const double B = B_of_h(h, p);
  const double F = fe_TI(h, p.with_B(B)).value();
  const char* branch = h > h_s ? "hmax" : h < -h_s ? "hmin" : "h0";
  return {h, B, F, branch};
}

std::vector<Fig2Row> fig2_rows_on(const ModelParams& p, const std::vector<double>& hs) {
  if (!(p.J() > 0.0) || !(p.k() * p.theta() > 1.0)) {
    throw ConfigError("fig2 requires J > 0 and k theta > 1");
  }
  const double limit = p.k() * p.coupling() - kFig2Margin;
  if (hs.front() < -limit || hs.back() > limit) {
    throw ConfigError(fmt::format("fig2: h grid must lie inside (-{0}, {0})", limit));
  }
  const double h_s = spinodal_h(p);
  auto rows = parallel_map<Fig2Row>(hs.size(), 0,
                                    [&](std::size_t i) { return fig2_row(hs[i], p, h_s); });
  for (double h : {-h_s, h_s}) {
    Fig2Row marker = fig2_row(h, p, h_s);
    marker.branch = "spinodal";
    rows.push_back(marker);
  }
  return rows;
}

}  // namespace

std::vector<Fig2Row> fig2_rows(const ModelParams& params, int steps) {
  const double limit = params.k() * params.coupling() - kFig2Margin;
  return fig2_rows_on(params, Grid{-limit, limit, steps}.points());
}

std::string cmd_fig2(const Options& o) {
  const ModelParams p = o.params();
  std::vector<Fig2Row> rows;
  if (o.grid) {
    rows = fig2_rows_on(p, o.grid->points());
  } else {
    rows = fig2_rows(p, 401);
  }
  Table table{"fig2", {"h", "B", "F", "branch"}, {}};
  for (const auto& r : rows) table.rows.push_back({r.h, r.B, r.F, r.branch});
  return render(table, o, Format::Csv, params_json(o, p));
}

std::string cmd_sweep(const Options& o) {
  if (!o.grid) throw ConfigError("sweep requires --from, --to and --steps");
  const SystemTag system = parse_family(o.family);
  if (system == SystemTag::Alternating) {
    AltParams{o.q, o.r, parse_root_label(o.root.c_str())}.validate(o.k);
    if (o.axis == "B") throw ConfigError("alt family requires B = 0; cannot sweep B");
  }
  const auto xs = o.grid->points();
  const auto options_at = [&](double x) {
    Options at = o;
    if (o.axis == "beta") {
      at.beta = x;
    } else if (o.axis == "B") {
      at.B = x;
    } else if (o.axis == "theta") {
      at.theta = x;
    } else {
      throw ConfigError("unknown sweep axis '" + o.axis + "' (expected beta, B or theta)");
    }
    return at;
  };
  options_at(xs.front()).params();  // validate the axis before spawning work

  const auto blocks = parallel_map<std::vector<Row>>(xs.size(), o.threads, [&](std::size_t i) {
    const Options at = options_at(xs[i]);
    const ModelParams p = at.params();
    const SolutionSet set = solve_family(system, at, p);
    std::vector<Row> rows;
    for (const auto& s : set.solutions) {
      const FreeEnergyResult fe = family_free_energy(system, at, p, s);
      rows.push_back({xs[i], std::string(to_string(s.branch)), s.first, s.second, fe.value_even,
                      fe.value_odd, s.residual});
    }
    return rows;
  });
  Table table{"sweep", {"axis", "branch", "first", "second", "F_even", "F_odd", "residual"}, {}};
  for (const auto& block : blocks) {
    table.rows.insert(table.rows.end(), block.begin(), block.end());
  }
  json params = params_json(o, o.params());
  params["axis"] = o.axis;
  return render(table, o, Format::Csv, std::move(params));
}

namespace {

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

int largest_depth(const TreeSpec& tree, std::uint64_t max_sites, int cap) {
  int n = 0;
  while (n < cap && ball_size(tree.with_depth(n + 1), n + 1) <= max_sites) ++n;
  return n;
}

}  // namespace

VerifyReport cmd_verify(const Options& o) {
  const SystemTag system = parse_family(o.family);
  const ModelParams p = o.params();
  if (o.max_n < 2) throw ConfigError("verify: --max-n must be >= 2");
  const TreeSpec tree(p.k(), Rooting::Half, o.max_n);
  constexpr std::uint64_t kMaxVolume = 40'000'000;
  if (ball_size(tree, o.max_n) > kMaxVolume) {
    throw ConfigError(fmt::format("verify: |V_{}| exceeds {} sites", o.max_n, kMaxVolume));
  }

  const SolutionSet set = solve_family(system, o, p);
  const Solution& s = representative(set);
  const FreeEnergyResult target = family_free_energy(system, o, p, s);
  const BoundaryAssignment assignment = [&] {
    switch (system) {
      case SystemTag::Alternating:
        return build_alternating(tree, {o.q, o.r, parse_root_label(o.root.c_str())}, s.first,
                                 s.second);
      case SystemTag::TranslationInvariant: return build_translation_invariant(tree, s.first);
      case SystemTag::Periodic: return build_periodic(tree, s.first, s.second);
    }
    throw ConfigError("unknown system");
  }();

  std::vector<Check> checks;

  const int n_enum = largest_depth(tree, kMaxEnumerationSites, o.max_n);
  {
    const TreeSpec t = tree.with_depth(n_enum);
    const double delta = std::abs(log_partition_recursive(t, assignment, p).log_Z -
                                  log_partition_enumerate(t, assignment, p).log_Z);
    checks.push_back({"method_crosscheck", delta <= 1e-10,
                      fmt::format("n={} |dlnZ|={:.3e} tol=1e-10", n_enum, delta)});
  }
  {
    const int n_max = largest_depth(tree, 1'000'000, std::min(o.max_n, 12));
    double worst = 0.0;
    bool ok = true;
    for (int n = 0; n <= n_max; ++n) {
      const double oracle = log_partition_recursive(tree.with_depth(n), assignment, p).log_Z;
      const double delta = std::abs(oracle - telescoped_log_partition(assignment, p, n));
      ok = ok && delta <= 1e-9 * std::max(1.0, std::abs(oracle) / 1e3);
      worst = std::max(worst, delta);
    }
    checks.push_back({"telescoping", ok,
                      fmt::format("n<={} max|dlnZ|={:.3e} tol=1e-9", n_max, worst)});
  }
  {
    const int n_marg = std::max(1, largest_depth(tree, kMaxMarginalSites, o.max_n));
    const double defect = marginal_consistency_check(assignment, p, n_marg);
    checks.push_back({"marginal_consistency", defect <= 1e-12,
                      fmt::format("n={} defect={:.3e} tol=1e-12", n_marg, defect)});
  }
  std::vector<int> ns;
  for (int n = std::max(1, o.max_n - 7); n <= o.max_n; ++n) ns.push_back(n);
  const auto rows = convergence_study(assignment, p, target, ns);
  {
    bool decays = true;
    for (std::size_t i = 2; i < rows.size(); ++i) {
      decays = decays && std::abs(rows[i].gap) <= std::abs(rows[i - 2].gap) + 1e-15;
    }
    checks.push_back({"convergence", decays,
                      fmt::format("n={}..{} |gap| decays along each parity", ns.front(),
                                  ns.back())});
  }

  VerifyReport report;
  for (const auto& c : checks) report.passed = report.passed && c.passed;

  if (o.format.value_or(Format::Text) == Format::Json) {
    json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["command"] = "verify";
    doc["params"] = params_json(o, p);
    doc["solution"] = {{"branch", to_string(s.branch)}, {"first", s.first}, {"second", s.second}};
    json jc = json::array();
    for (const auto& c : checks) {
      jc.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    }
    doc["checks"] = std::move(jc);
    json gaps = json::array();
    for (const auto& r : rows) {
      gaps.push_back({{"n", r.n}, {"fe_finite", r.fe_finite}, {"target", r.target},
                      {"gap", r.gap}});
    }
    doc["convergence"] = std::move(gaps);
    doc["passed"] = report.passed;
    report.text = doc.dump(2) + '\n';
    return report;
  }
  if (o.format == Format::Csv) {
    Table table{"verify", {"n", "fe_finite", "target", "gap"}, {}};
    for (const auto& r : rows) {
      table.rows.push_back({static_cast<double>(r.n), r.fe_finite, r.target, r.gap});
    }
    report.text = render_csv(table);
    return report;
  }
  std::string& text = report.text;
  text += fmt::format("family={} k={} J={} B={} beta={} solution={} ({}, {})\n", o.family, p.k(),
                      p.J(), p.B(), p.beta(), to_string(s.branch), number(s.first),
                      number(s.second));
  for (const auto& c : checks) {
    text += fmt::format("{} {} {}\n", c.passed ? "PASS" : "FAIL", c.name, c.detail);
  }
  text += fmt::format("{:>4} {:>24} {:>24} {:>12}\n", "n", "fe_finite", "target", "gap");
  for (const auto& r : rows) {
    text += fmt::format("{:>4} {:>24.17g} {:>24.17g} {:>12.4e}\n", r.n, r.fe_finite, r.target,
                        r.gap);
  }
  return report;
}

}  // namespace cayley::cli
