#pragma once

// Closed-form free energies per site for the alternating, translation-
// invariant and periodic boundary families, the level-count machinery
// behind them, and finite-volume site sums that converge to them.
//
// Convention: F = -ln Z_n / (beta |V_n|),
//   a(t) = -(1/(2 beta)) ln[4 cosh(t + beta J) cosh(t - beta J)],
//   d(t) = +(1/(2 beta)) ln[4 cosh(t + beta(B+J)) cosh(t + beta(B-J))],
// so that F_TI(h) = -d(h), which equals a(h) at B = 0.

#include <functional>
#include <span>
#include <vector>

#include "cayley/boundary.hpp"
#include "cayley/model.hpp"

namespace cayley {

enum class FreeEnergyKind { Limit, Accumulation };

enum class FreeEnergyFormula {
  AlternatingLimit,         // r != 0
  AlternatingAccumulation,  // r == 0
  TranslationInvariant,
  Periodic,
};

const char* to_string(FreeEnergyFormula formula) noexcept;

/// Either one limit (value_even == value_odd) or the pair of accumulation
/// points along even and odd depths n.
struct FreeEnergyResult {
  FreeEnergyKind kind = FreeEnergyKind::Limit;
  double value_even = 0.0;
  double value_odd = 0.0;
  FreeEnergyFormula formula = FreeEnergyFormula::TranslationInvariant;

  static FreeEnergyResult limit(double value, FreeEnergyFormula formula) {
    return {FreeEnergyKind::Limit, value, value, formula};
  }
  static FreeEnergyResult accumulation(double even, double odd, FreeEnergyFormula formula) {
    return {FreeEnergyKind::Accumulation, even, odd, formula};
  }

  /// Target for a finite depth n (parity-matched for accumulation points).
  double at_depth(int n) const noexcept { return n % 2 == 0 ? value_even : value_odd; }
  /// The limit value. Throws std::logic_error for accumulation results.
  double value() const;
};

/// Coefficients of a(0), a(h1), a(h2) in a site-averaged free energy.
struct SiteWeights {
  double zero = 0.0;
  double h1 = 0.0;
  double h2 = 0.0;

  double sum() const noexcept { return zero + h1 + h2; }
  double apply(double a0, double a1, double a2) const noexcept {
    return zero * a0 + h1 * a1 + h2 * a2;
  }
};

struct ParitySiteWeights {
  SiteWeights even;
  SiteWeights odd;
};

/// Roots of lambda^3 - r lambda^2 - (k^2 - rk + rq) lambda + rkq:
/// lambda1 = k, lambda2,3 = (-(k-r) +- sqrt((k-r)^2 + 4rq)) / 2.
struct CharRoots {
  double lambda1;
  double lambda2;
  double lambda3;

  /// max(|lambda2|, |lambda3|): the decay rate of finite-size corrections
  /// relative to lambda1.
  double subleading_modulus() const noexcept;
};

CharRoots char_roots(int k, int q, int r);
double char_polynomial(double lambda, int k, int q, int r) noexcept;

/// Dominant coefficient of alpha_n: (k^2 - kq) / (2k^2 - rk - rq).
double c1(int k, int q, int r);

/// Weights of the r != 0 limit: c1 * (1, (k-r)/(k-q), q(k-r)/(k(k-q))).
SiteWeights alt_limit_weights(int k, int q, int r);

/// Even/odd weights of the r == 0 accumulation points for general initial
/// values (w0, w1) of w_n = beta_n + gamma_n.
ParitySiteWeights alt_accumulation_weights(int k, int q, double w0, double w1);

/// (w0, w1) = (0, k) for root ZERO or +-H2, (1, 0) for root +-H1.
ParitySiteWeights alt_accumulation_weights(int k, int q, FieldLabel root);

/// Periodic weights of d(h), d(h') at even and odd depth.
struct PeriodicWeights {
  double even_h;
  double even_h_prime;
  double odd_h;
  double odd_h_prime;
};
PeriodicWeights periodic_weights(int k);

/// Alternating free energy at (h1, h2) with B = 0. LIMIT for r != 0
/// (independent of the root label), ACCUMULATION for r == 0.
FreeEnergyResult fe_alt(int k, int q, int r, double h1, double h2, double beta, double J,
                        FieldLabel root);

/// -(1/(2 beta)) ln[4 cosh(h + beta(B+J)) cosh(h + beta(B-J))].
FreeEnergyResult fe_TI(double h, const ModelParams& params);

/// (-(k d(h) + d(h'))/(k+1), -(d(h) + k d(h'))/(k+1)).
FreeEnergyResult fe_periodic(double h, double h_prime, const ModelParams& params);

/// A_n, B_n, C_n: cumulative counts of ZERO, +-H1 and +-H2 vertices over V_n.
struct LevelSums {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};
LevelSums level_sums(const AltParams& alt, int k, int n);

/// (1/|V_n|) sum_{x in V_n} a(h_x) for B == 0, or with -d(h_x) otherwise.
double site_average_fe(const BoundaryAssignment& assignment, const ModelParams& params, int n);

/// ln Z_n obtained by summing single-edge factors leaf to root:
///   sum_{m=1}^{n} sum_{y in W_m} beta d(h_y) + ln 2cosh(h_root + beta B).
/// Exact for assignments compatible below the root. On FULL trees the root
/// field is replaced by the sum over its k+1 successors.
double telescoped_log_partition(const BoundaryAssignment& assignment, const ModelParams& params,
                                int n);

/// beta -> F(beta), re-solving the boundary fixed point at each beta.
using FreeEnergyCurve = std::function<double(double beta)>;

/// Free boundary condition (h = 0) at B = 0: a(0).
FreeEnergyCurve free_bc_curve(int k, double J);

/// Alternating nonzero branch (falls back to (0,0) where it does not exist);
/// `depth_parity` picks the even (0) or odd (1) accumulation point.
FreeEnergyCurve alternating_curve(int k, int q, int r, double J, FieldLabel root,
                                  int depth_parity);

/// Largest TI solution h* at B = 0.
FreeEnergyCurve ti_star_curve(int k, double J);

/// beta_i (F(beta_i) - F_inf) where F_inf is extrapolated linearly in 1/beta
/// from the two largest betas. betas must be strictly increasing, size >= 2.
std::vector<double> residual_entropy_estimate(const FreeEnergyCurve& curve,
                                              std::span<const double> betas);

}  // namespace cayley
