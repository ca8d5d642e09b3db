#pragma once

// Physical parameters of the nearest-neighbour Ising model on a Cayley tree
// and the scalar functions every other module is built from.

namespace cayley {

/// Branching number k, coupling J, external field B and inverse temperature
/// beta. Construction validates k >= 2 and a finite beta > 0.
class ModelParams {
 public:
  ModelParams(int k, double J, double B, double beta);

  int k() const noexcept { return k_; }
  double J() const noexcept { return J_; }
  double B() const noexcept { return B_; }
  double beta() const noexcept { return beta_; }

  /// beta * J, the dimensionless coupling.
  double coupling() const noexcept { return beta_ * J_; }
  /// beta * B, the dimensionless field added to every boundary field.
  double field() const noexcept { return beta_ * B_; }
  double theta() const noexcept;

  ModelParams with_B(double B) const { return {k_, J_, B, beta_}; }
  ModelParams with_beta(double beta) const { return {k_, J_, B_, beta}; }

 private:
  int k_;
  double J_;
  double B_;
  double beta_;
};

/// tanh(beta * J).
double theta(const ModelParams& params) noexcept;

/// arctanh(theta * tanh(h)). Requires |theta| < 1; not clamped.
double f_theta(double h, double theta);

/// The same kernel written through the coupling K = beta*J:
///   arctanh(tanh(K) tanh(h)) = (1/2) ln[cosh(h + K) / cosh(h - K)].
/// Accurate for any K, including couplings where tanh(K) rounds to 1.
double edge_field(double h, double coupling) noexcept;

/// Derivative of edge_field with respect to h:
///   (tanh(h + K) - tanh(h - K)) / 2.
double edge_field_derivative(double h, double coupling) noexcept;

/// ln cosh(x) without overflow.
double log_cosh(double x) noexcept;

/// ln(e^a + e^b) as max + ln(1 + e^{-|a-b|}).
double log_sum_exp(double a, double b) noexcept;

/// Zero-field site term -(1/(2 beta)) ln[4 cosh(t + beta J) cosh(t - beta J)].
/// The field B of params is ignored.
double a_fn(double t, const ModelParams& params) noexcept;

/// Site term with field (1/(2 beta)) ln(4 cosh[t + beta(B+J)] cosh[t + beta(B-J)]).
/// d_fn(t) == -a_fn(t) when B == 0.
double d_fn(double t, const ModelParams& params) noexcept;

}  // namespace cayley
