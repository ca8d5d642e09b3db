#include "cayley/solver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>

namespace cayley {

namespace {

constexpr int kScanCells = 2048;
constexpr double kMergeTolerance = 1e-9;

using ScalarFn = std::function<double(double)>;

struct Root {
  double x;
  int iterations;
};

// Bisection on a bracketing cell, then Newton steps that stay inside it.
Root refine(const ScalarFn& fn, const ScalarFn& derivative, double lo, double hi, double f_lo) {
  int iterations = 0;
  for (; iterations < 200; ++iterations) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (hi - lo <= 1e-13 * std::max(1.0, std::abs(mid))) break;
    const double f_mid = fn(mid);
    if (f_mid == 0.0) {
      return {mid, iterations + 1};
    }
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  double x = 0.5 * (lo + hi);
  double fx = fn(x);
  for (int step = 0; step < 8 && fx != 0.0; ++step, ++iterations) {
    const double slope = derivative(x);
    if (slope == 0.0 || !std::isfinite(slope)) break;
    const double candidate = x - fx / slope;
    if (candidate < lo || candidate > hi) break;
    const double f_candidate = fn(candidate);
    if (!(std::abs(f_candidate) < std::abs(fx))) break;
    x = candidate;
    fx = f_candidate;
  }
  return {x, iterations};
}

// Sign-change scan of fn over [lo, hi] with kScanCells cells. Roots closer
// than kMergeTolerance are reported once.
std::vector<double> scan_roots(const ScalarFn& fn, const ScalarFn& derivative, double lo,
                               double hi, int& iterations) {
  std::vector<double> roots;
  const double step = (hi - lo) / kScanCells;
  double x_prev = lo;
  double f_prev = fn(lo);
  if (f_prev == 0.0) roots.push_back(lo);
  for (int i = 1; i <= kScanCells; ++i) {
    const double x = (i == kScanCells) ? hi : lo + step * i;
    const double fx = fn(x);
    if (fx == 0.0) {
      roots.push_back(x);
    } else if (f_prev != 0.0 && (fx > 0.0) != (f_prev > 0.0)) {
      const Root root = refine(fn, derivative, x_prev, x, f_prev);
      iterations += root.iterations;
      roots.push_back(root.x);
    }
    x_prev = x;
    f_prev = fx;
  }
  std::sort(roots.begin(), roots.end());
  std::vector<double> merged;
  for (double r : roots) {
    if (merged.empty() || std::abs(r - merged.back()) > kMergeTolerance) {
      merged.push_back(r);
    }
  }
  return merged;
}

// Padded interval that contains every solution of h = k f(h + c) with a
// strict sign of h - k f(.) at both ends.
std::pair<double, double> ti_interval(const ModelParams& params) {
  const double bound = params.k() * std::abs(params.coupling());
  const double shift = params.field() * params.k();
  return {-bound + std::min(0.0, shift) - 1.0, bound + std::max(0.0, shift) + 1.0};
}

void require_q(int k, int q) {
  if (k < 2 || q < 1 || q > k - 1) {
    throw std::invalid_argument("alternating system requires k >= 2 and 1 <= q <= k-1 (k=" +
                                std::to_string(k) + ", q=" + std::to_string(q) + ")");
  }
}

double log_abs_sinh(double x) {
  const double ax = std::abs(x);
  return ax + std::log1p(-std::exp(-2.0 * ax)) - std::log(2.0);
}

}  // namespace

const char* to_string(SystemTag tag) noexcept {
  switch (tag) {
    case SystemTag::Alternating: return "alt";
    case SystemTag::TranslationInvariant: return "ti";
    case SystemTag::Periodic: return "per";
  }
  return "?";
}

const char* to_string(Branch branch) noexcept {
  switch (branch) {
    case Branch::Zero: return "zero";
    case Branch::Plus: return "plus";
    case Branch::Minus: return "minus";
    case Branch::Unique: return "unique";
    case Branch::HMin: return "h_min";
    case Branch::H0: return "h_0";
    case Branch::HMax: return "h_max";
    case Branch::Diagonal: return "diagonal";
    case Branch::CycleAscending: return "cycle_ascending";
    case Branch::CycleDescending: return "cycle_descending";
  }
  return "?";
}

double SolutionSet::max_residual() const noexcept {
  double worst = 0.0;
  for (const auto& s : solutions) worst = std::max(worst, s.residual);
  return worst;
}

const Solution* SolutionSet::find(Branch branch) const noexcept {
  for (const auto& s : solutions) {
    if (s.branch == branch) return &s;
  }
  return nullptr;
}

std::size_t SolutionSet::count(Branch branch) const noexcept {
  return static_cast<std::size_t>(std::count_if(
      solutions.begin(), solutions.end(), [branch](const Solution& s) { return s.branch == branch; }));
}

double theta_c(int k, int q) {
  require_q(k, q);
  return 1.0 / std::sqrt(static_cast<double>(q) * k);
}

double alternating_map(double u, int k, int q, double coupling) noexcept {
  return k * edge_field(q * edge_field(u, coupling), coupling);
}

double alternating_residual(int k, int q, double coupling, double h1, double h2) noexcept {
  return std::max(std::abs(h1 - q * edge_field(h2, coupling)),
                  std::abs(h2 - k * edge_field(h1, coupling)));
}

double ti_residual(const ModelParams& params, double h) noexcept {
  return std::abs(h - params.k() * edge_field(h + params.field(), params.coupling()));
}

double periodic_residual(const ModelParams& params, double h, double h_prime) noexcept {
  const double K = params.coupling();
  const double c = params.field();
  const int k = params.k();
  return std::max(std::abs(h - k * edge_field(h_prime + c, K)),
                  std::abs(h_prime - k * edge_field(h + c, K)));
}

SolutionSet solve_alternating(int k, int q, double theta) {
  require_q(k, q);
  if (!(std::abs(theta) < 1.0)) {
    throw std::invalid_argument("solve_alternating: |theta| must be < 1");
  }
  if (std::abs(theta) <= theta_c(k, q)) {
    return SolutionSet{SystemTag::Alternating, {{Branch::Zero, 0.0, 0.0, 0.0}}, 0};
  }
  return solve_alternating_coupling(k, q, std::atanh(theta));
}

SolutionSet solve_alternating_coupling(int k, int q, double coupling) {
  require_q(k, q);
  SolutionSet out{SystemTag::Alternating, {{Branch::Zero, 0.0, 0.0, 0.0}}, 0};
  if (!(std::abs(std::tanh(coupling)) > theta_c(k, q))) {
    return out;
  }
  const auto phi = [&](double u) { return alternating_map(u, k, q, coupling) - u; };
  const auto dphi = [&](double u) {
    const double inner = q * edge_field(u, coupling);
    return k * edge_field_derivative(inner, coupling) * q * edge_field_derivative(u, coupling) -
           1.0;
  };
  // g is bounded by k |K| and g(u) > u just above 0.
  const double upper = k * std::abs(coupling);
  double lower = std::min(1e-3, 0.25 * upper);
  while (lower > 1e-300 && !(phi(lower) > 0.0)) {
    lower *= 1e-3;
  }
  if (!(phi(lower) > 0.0) || !(phi(upper) < 0.0)) {
    return out;
  }
  const Root root = refine(phi, dphi, lower, upper, phi(lower));
  out.iterations = root.iterations;
  const double h2 = root.x;
  const double h1 = q * edge_field(h2, coupling);
  const double residual = alternating_residual(k, q, coupling, h1, h2);
  out.solutions.push_back({Branch::Plus, h1, h2, residual});
  out.solutions.push_back({Branch::Minus, -h1, -h2, residual});
  return out;
}

AltClosedForm closed_form_k2q1(double theta) {
  const double disc = 2.0 * theta * theta - 1.0;
  if (!(disc > 0.0) || !(theta < 1.0)) {
    throw std::domain_error("closed_form_k2q1: requires 1/sqrt(2) < theta < 1");
  }
  const double s = std::sqrt(disc);
  const double t2 = theta * theta;
  const double h1 = 0.5 * std::log(((1.0 + theta) / (1.0 - theta)) *
                                   ((theta * s + t2 + theta - 1.0) / (theta * s - t2 + theta + 1.0)));
  const double h2 = 0.5 * std::log((2.0 * t2 * s + t2 * t2 + 2.0 * t2 - 1.0) /
                                   ((1.0 - t2) * (1.0 - t2)));
  return {h1, h2};
}

SolutionSet solve_TI(const ModelParams& params) {
  const int k = params.k();
  const double K = params.coupling();
  const double c = params.field();
  const auto phi = [&](double h) { return h - k * edge_field(h + c, K); };
  const auto dphi = [&](double h) { return 1.0 - k * edge_field_derivative(h + c, K); };
  const auto [lo, hi] = ti_interval(params);
  SolutionSet out{SystemTag::TranslationInvariant, {}, 0};
  const std::vector<double> roots = scan_roots(phi, dphi, lo, hi, out.iterations);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    Branch branch = Branch::H0;
    if (roots.size() == 1) {
      branch = Branch::Unique;
    } else if (i == 0) {
      branch = Branch::HMin;
    } else if (i + 1 == roots.size()) {
      branch = Branch::HMax;
    }
    out.solutions.push_back({branch, roots[i], roots[i], ti_residual(params, roots[i])});
  }
  return out;
}

SolutionSet solve_periodic(const ModelParams& params) {
  const int k = params.k();
  const double K = params.coupling();
  const double c = params.field();
  const auto partner = [&](double h) { return k * edge_field(h + c, K); };
  const auto psi = [&](double h) { return h - k * edge_field(partner(h) + c, K); };
  const auto dpsi = [&](double h) {
    return 1.0 - k * edge_field_derivative(partner(h) + c, K) * k * edge_field_derivative(h + c, K);
  };
  const auto [lo, hi] = ti_interval(params);
  SolutionSet out{SystemTag::Periodic, {}, 0};
  for (double h : scan_roots(psi, dpsi, lo, hi, out.iterations)) {
    const double h_prime = partner(h);
    Branch branch = Branch::Diagonal;
    if (std::abs(h - h_prime) > kMergeTolerance * std::max(1.0, std::abs(h))) {
      branch = h < h_prime ? Branch::CycleAscending : Branch::CycleDescending;
    }
    out.solutions.push_back({branch, h, h_prime, periodic_residual(params, h, h_prime)});
  }
  return out;
}

namespace {

struct SpinodalTerms {
  double outer;  // k arctanh sqrt((k t - 1)/(k/t - 1))
  double inner;  // arctanh sqrt((k - 1/t)/(k - t))
};

SpinodalTerms spinodal_terms(int k, double t, const char* who) {
  const double x1 = (k * t - 1.0) / (k / t - 1.0);
  const double x2 = (k - 1.0 / t) / (k - t);
  if (!(x1 >= 0.0 && x1 < 1.0) || !(x2 >= 0.0 && x2 < 1.0)) {
    throw std::domain_error(std::string(who) + ": arctanh arguments outside [0, 1)");
  }
  return {k * std::atanh(std::sqrt(x1)), std::atanh(std::sqrt(x2))};
}

}  // namespace

double spinodal_BF(const ModelParams& params) {
  const double t = params.theta();
  if (!(params.J() > 0.0) || !(params.k() * t > 1.0)) {
    throw std::domain_error("spinodal_BF: requires J > 0 and k theta > 1");
  }
  const auto terms = spinodal_terms(params.k(), t, "spinodal_BF");
  return (terms.outer - terms.inner) / params.beta();
}

double spinodal_BAF(const ModelParams& params) {
  const double t = std::abs(params.theta());
  if (!(params.J() < 0.0) || !(params.k() * t > 1.0)) {
    throw std::domain_error("spinodal_BAF: requires J < 0 and k |theta| > 1");
  }
  const auto terms = spinodal_terms(params.k(), t, "spinodal_BAF");
  return (terms.outer + terms.inner) / params.beta();
}

double B_of_h(double h, const ModelParams& params) {
  if (h == 0.0) {
    return 0.0;
  }
  const double K = params.coupling();
  const double x = h / params.k();
  if (!(std::abs(x) < std::abs(K))) {
    throw std::domain_error("B_of_h: requires |h/k| < beta |J|");
  }
  const double log_ratio = log_abs_sinh(K + x) - log_abs_sinh(K - x);
  return (-h + 0.5 * log_ratio) / params.beta();
}

double spinodal_h(const ModelParams& params) {
  const double K = params.coupling();
  const int k = params.k();
  if (!(params.J() > 0.0) || !(k * params.theta() > 1.0)) {
    throw std::domain_error("spinodal_h: requires J > 0 and k theta > 1");
  }
  // coth(K + x) + coth(K - x) = 2k  <=>  sinh^2 x = sinh^2 K - sinh(2K)/(2k)
  const double s = std::sinh(K);
  const double rhs = s * s - std::sinh(2.0 * K) / (2.0 * k);
  return k * std::asinh(std::sqrt(rhs));
}

}  // namespace cayley
