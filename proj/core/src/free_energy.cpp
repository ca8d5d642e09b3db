#include "cayley/free_energy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "cayley/solver.hpp"

namespace cayley {

namespace {

void require_alt(int k, int q, int r) { AltParams{q, r, FieldLabel::Zero}.validate(k); }

}  // namespace

const char* to_string(FreeEnergyFormula formula) noexcept {
  switch (formula) {
    case FreeEnergyFormula::AlternatingLimit: return "alt_limit";
    case FreeEnergyFormula::AlternatingAccumulation: return "alt_accumulation";
    case FreeEnergyFormula::TranslationInvariant: return "ti";
    case FreeEnergyFormula::Periodic: return "periodic";
  }
  return "?";
}

double FreeEnergyResult::value() const {
  if (kind != FreeEnergyKind::Limit) {
    throw std::logic_error("FreeEnergyResult::value: result has two accumulation points");
  }
  return value_even;
}

double CharRoots::subleading_modulus() const noexcept {
  return std::max(std::abs(lambda2), std::abs(lambda3));
}

CharRoots char_roots(int k, int q, int r) {
  require_alt(k, q, r);
  const double kr = k - r;
  const double root = std::sqrt(kr * kr + 4.0 * r * q);
  return {static_cast<double>(k), 0.5 * (-kr + root), 0.5 * (-kr - root)};
}

double char_polynomial(double lambda, int k, int q, int r) noexcept {
  const double kk = k;
  return ((lambda - r) * lambda - (kk * kk - r * kk + r * q)) * lambda + r * kk * q;
}

double c1(int k, int q, int r) {
  require_alt(k, q, r);
  const double kk = k;
  return (kk * kk - kk * q) / (2.0 * kk * kk - r * kk - r * static_cast<double>(q));
}

SiteWeights alt_limit_weights(int k, int q, int r) {
  const double c = c1(k, q, r);
  const double kk = k;
  return {c, c * (kk - r) / (kk - q), c * q * (kk - r) / (kk * (kk - q))};
}

ParitySiteWeights alt_accumulation_weights(int k, int q, double w0, double w1) {
  const double kk = k;
  const double norm = kk * (kk + 1.0);
  const double sum_w = w0 + w1;
  const double lead = kk * kk * w0 + w1;
  ParitySiteWeights out;
  out.even = {(kk - q) * sum_w / norm, lead / norm, q * sum_w / norm};
  // The a(h2) term carries the factor q, as in the root-specific forms.
  out.odd = {(kk - q) * lead / (kk * norm), sum_w / (kk + 1.0), q * lead / (kk * norm)};
  return out;
}

ParitySiteWeights alt_accumulation_weights(int k, int q, FieldLabel root) {
  switch (root) {
    case FieldLabel::Zero:
    case FieldLabel::PlusH2:
    case FieldLabel::MinusH2:
      return alt_accumulation_weights(k, q, 0.0, static_cast<double>(k));
    case FieldLabel::PlusH1:
    case FieldLabel::MinusH1:
      return alt_accumulation_weights(k, q, 1.0, 0.0);
    default:
      throw std::invalid_argument("alt_accumulation_weights: root must be zero, +-h1 or +-h2");
  }
}

PeriodicWeights periodic_weights(int k) {
  const double kk = k;
  return {kk / (kk + 1.0), 1.0 / (kk + 1.0), 1.0 / (kk + 1.0), kk / (kk + 1.0)};
}

FreeEnergyResult fe_alt(int k, int q, int r, double h1, double h2, double beta, double J,
                        FieldLabel root) {
  AltParams{q, r, root}.validate(k);
  const ModelParams params(k, J, 0.0, beta);
  const double a0 = a_fn(0.0, params);
  const double a1 = a_fn(h1, params);
  const double a2 = a_fn(h2, params);
  if (r != 0) {
    return FreeEnergyResult::limit(alt_limit_weights(k, q, r).apply(a0, a1, a2),
                                   FreeEnergyFormula::AlternatingLimit);
  }
  const ParitySiteWeights w = alt_accumulation_weights(k, q, root);
  return FreeEnergyResult::accumulation(w.even.apply(a0, a1, a2), w.odd.apply(a0, a1, a2),
                                        FreeEnergyFormula::AlternatingAccumulation);
}

FreeEnergyResult fe_TI(double h, const ModelParams& params) {
  return FreeEnergyResult::limit(-d_fn(h, params), FreeEnergyFormula::TranslationInvariant);
}

FreeEnergyResult fe_periodic(double h, double h_prime, const ModelParams& params) {
  const PeriodicWeights w = periodic_weights(params.k());
  const double dh = d_fn(h, params);
  const double dhp = d_fn(h_prime, params);
  if (h == h_prime) {
    return FreeEnergyResult::accumulation(-dh, -dh, FreeEnergyFormula::Periodic);
  }
  return FreeEnergyResult::accumulation(-(w.even_h * dh + w.even_h_prime * dhp),
                                        -(w.odd_h * dh + w.odd_h_prime * dhp),
                                        FreeEnergyFormula::Periodic);
}

LevelSums level_sums(const AltParams& alt, int k, int n) {
  LevelSums sums;
  for (int m = 0; m <= n; ++m) {
    const LabelCounts c = label_counts(alt, k, m);
    sums.A += static_cast<double>(c.zero);
    sums.B += static_cast<double>(c.w());
    sums.C += static_cast<double>(c.v());
  }
  return sums;
}

double site_average_fe(const BoundaryAssignment& assignment, const ModelParams& params, int n) {
  const TreeSpec& tree = assignment.tree();
  if (n < 0 || n > tree.depth()) {
    throw std::out_of_range("site_average_fe: n outside assignment depth");
  }
  const bool zero_field = params.B() == 0.0;
  const auto site_term = [&](double h) {
    return zero_field ? a_fn(h, params) : -d_fn(h, params);
  };
  double total = 0.0;
  for (int m = 0; m <= n; ++m) {
    const auto histogram = assignment.level_histogram(m);
    for (std::size_t s = 0; s < histogram.size(); ++s) {
      if (histogram[s] == 0) continue;
      total += static_cast<double>(histogram[s]) *
               site_term(assignment.value(static_cast<FieldLabel>(s)));
    }
  }
  return total / static_cast<double>(ball_size(tree, n));
}

double telescoped_log_partition(const BoundaryAssignment& assignment, const ModelParams& params,
                                int n) {
  const TreeSpec& tree = assignment.tree();
  if (n < 0 || n > tree.depth()) {
    throw std::out_of_range("telescoped_log_partition: n outside assignment depth");
  }
  const double beta = params.beta();
  double log_z = 0.0;
  for (int m = 1; m <= n; ++m) {
    const auto histogram = assignment.level_histogram(m);
    for (std::size_t s = 0; s < histogram.size(); ++s) {
      if (histogram[s] == 0) continue;
      log_z += static_cast<double>(histogram[s]) * beta *
               d_fn(assignment.value(static_cast<FieldLabel>(s)), params);
    }
  }
  const FieldLabel root = assignment.root_label();
  double root_field = assignment.value(root);
  if (tree.rooting() == Rooting::Full && n > 0) {
    root_field = 0.0;
    for (int c = 0; c < tree.arity(0); ++c) {
      const double child = assignment.value(assignment.child_label(root, 0, c));
      root_field += edge_field(child + params.field(), params.coupling());
    }
  }
  return log_z + std::log(2.0) + log_cosh(root_field + params.field());
}

FreeEnergyCurve free_bc_curve(int k, double J) {
  return [k, J](double beta) { return a_fn(0.0, ModelParams(k, J, 0.0, beta)); };
}

FreeEnergyCurve alternating_curve(int k, int q, int r, double J, FieldLabel root,
                                  int depth_parity) {
  AltParams{q, r, root}.validate(k);
  return [=](double beta) {
    const SolutionSet set = solve_alternating_coupling(k, q, beta * J);
    const Solution* s = set.find(Branch::Plus);
    const double h1 = s ? s->first : 0.0;
    const double h2 = s ? s->second : 0.0;
    return fe_alt(k, q, r, h1, h2, beta, J, root).at_depth(depth_parity);
  };
}

FreeEnergyCurve ti_star_curve(int k, double J) {
  return [k, J](double beta) {
    const ModelParams params(k, J, 0.0, beta);
    const SolutionSet set = solve_TI(params);
    const double h = set.solutions.back().first;
    return fe_TI(h, params).value();
  };
}

std::vector<double> residual_entropy_estimate(const FreeEnergyCurve& curve,
                                              std::span<const double> betas) {
  if (betas.size() < 2) {
    throw std::invalid_argument("residual_entropy_estimate: need at least two betas");
  }
  for (std::size_t i = 1; i < betas.size(); ++i) {
    if (!(betas[i] > betas[i - 1]) || !(betas[i - 1] > 0.0)) {
      throw std::invalid_argument("residual_entropy_estimate: betas must be positive, increasing");
    }
  }
  std::vector<double> F;
  F.reserve(betas.size());
  for (double beta : betas) F.push_back(curve(beta));
  const std::size_t last = betas.size() - 1;
  const double x_last = 1.0 / betas[last];
  const double x_prev = 1.0 / betas[last - 1];
  const double slope = (F[last - 1] - F[last]) / (x_prev - x_last);
  const double f_inf = F[last] - slope * x_last;
  std::vector<double> out;
  out.reserve(betas.size());
  for (std::size_t i = 0; i < betas.size(); ++i) {
    out.push_back(betas[i] * (F[i] - f_inf));
  }
  return out;
}

}  // namespace cayley
