#pragma once

// Solutions of the compatibility systems for the three boundary families:
//
//   alternating:  h1 = q f(h2),            h2 = k f(h1)           (B = 0)
//   TI:           h  = k f(h + beta B)
//   periodic:     h  = k f(h' + beta B),   h' = k f(h + beta B)
//
// Roots are located by a sign-change scan on a bounded interval followed by
// bisection and a Newton polish. Every returned solution carries its system
// residual.

#include <cstddef>
#include <vector>

#include "cayley/model.hpp"

namespace cayley {

enum class SystemTag { Alternating, TranslationInvariant, Periodic };

enum class Branch {
  Zero,             // ALT (0, 0)
  Plus,             // ALT nonzero solution with h2 > 0
  Minus,            // its negation
  Unique,           // TI, single solution
  HMin,             // TI, smallest of two or three
  H0,               // TI, middle of three
  HMax,             // TI, largest of two or three
  Diagonal,         // PER solution with h == h'
  CycleAscending,   // PER 2-cycle ordered with h < h'
  CycleDescending,  // the same cycle ordered with h > h'
};

const char* to_string(SystemTag tag) noexcept;
const char* to_string(Branch branch) noexcept;

/// Field tuple of one solution: ALT (h1, h2), TI (h, h), PER (h, h').
struct Solution {
  Branch branch;
  double first = 0.0;
  double second = 0.0;
  double residual = 0.0;
};

struct SolutionSet {
  SystemTag system;
  std::vector<Solution> solutions;
  /// Bisection plus Newton steps spent over all roots.
  int iterations = 0;

  std::size_t size() const noexcept { return solutions.size(); }
  double max_residual() const noexcept;
  /// First solution on `branch`, or nullptr.
  const Solution* find(Branch branch) const noexcept;
  std::size_t count(Branch branch) const noexcept;
};

/// 1 / sqrt(q k). Requires 1 <= q <= k-1.
double theta_c(int k, int q);

/// g(u) = k f(q f(u)), the map whose fixed points are the h2 of the
/// alternating system.
double alternating_map(double u, int k, int q, double coupling) noexcept;

double alternating_residual(int k, int q, double coupling, double h1, double h2) noexcept;
double ti_residual(const ModelParams& params, double h) noexcept;
double periodic_residual(const ModelParams& params, double h, double h_prime) noexcept;

/// All solutions of the alternating system at theta (|theta| < 1). For
/// |theta| <= theta_c only (0, 0) is returned; otherwise (0,0), Plus, Minus.
SolutionSet solve_alternating(int k, int q, double theta);

/// Same system parametrised by the coupling K = beta J, so that strong
/// couplings where tanh(K) rounds to 1 remain solvable.
SolutionSet solve_alternating_coupling(int k, int q, double coupling);

struct AltClosedForm {
  double h1_star;
  double h2_star;
};

/// Explicit positive solution for k = 2, q = 1. Requires 2 theta^2 > 1.
AltClosedForm closed_form_k2q1(double theta);

SolutionSet solve_TI(const ModelParams& params);
SolutionSet solve_periodic(const ModelParams& params);

/// Ferromagnetic spinodal field. Requires J > 0 and k theta > 1.
double spinodal_BF(const ModelParams& params);
/// Antiferromagnetic spinodal field, evaluated with |theta|. Requires J < 0
/// and k |theta| > 1.
double spinodal_BAF(const ModelParams& params);

/// The field B for which h solves the TI equation:
///   B(h) = -h/beta + (1/(2 beta)) ln[sinh(beta J + h/k) / sinh(beta J - h/k)].
/// Requires |h/k| < beta |J| (h = 0 always gives 0).
double B_of_h(double h, const ModelParams& params);

/// Positive turning point of B(h) (dB/dh = 0), where B = -B^F. Requires
/// J > 0 and k theta > 1.
double spinodal_h(const ModelParams& params);

}  // namespace cayley
