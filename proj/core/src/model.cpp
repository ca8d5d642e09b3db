#include "cayley/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cayley {

ModelParams::ModelParams(int k, double J, double B, double beta)
    : k_(k), J_(J), B_(B), beta_(beta) {
  if (k < 2) {
    throw std::invalid_argument("ModelParams: branching number k must be >= 2, got " +
                                std::to_string(k));
  }
  if (!(beta > 0.0) || !std::isfinite(beta)) {
    throw std::invalid_argument("ModelParams: beta must be finite and > 0");
  }
  if (!std::isfinite(J) || !std::isfinite(B)) {
    throw std::invalid_argument("ModelParams: J and B must be finite");
  }
}

double ModelParams::theta() const noexcept { return std::tanh(coupling()); }

double theta(const ModelParams& params) noexcept { return params.theta(); }

double f_theta(double h, double theta) {
  const double x = theta * std::tanh(h);
  // 0.5 * ln((1 + x) / (1 - x)), split so small x keeps full relative precision.
  return 0.5 * (std::log1p(x) - std::log1p(-x));
}

namespace {

// 1 - tanh(y) for y >= 0, without cancellation.
double tanh_complement(double y) noexcept { return 2.0 / (std::exp(2.0 * y) + 1.0); }

}  // namespace

double edge_field(double h, double coupling) noexcept {
  if (h == 0.0 || coupling == 0.0) {
    return 0.0;
  }
  const double sign = ((h > 0.0) == (coupling > 0.0)) ? 1.0 : -1.0;
  const double ah = std::abs(h);
  const double ak = std::abs(coupling);
  const double t = std::tanh(ah);
  const double tau = std::tanh(ak);
  const double x = t * tau;
  if (x < 0.5) {
    return sign * std::atanh(x);
  }
  // 1 - t*tau = (1 - t) + t (1 - tau): both terms nonnegative.
  const double one_minus_x = tanh_complement(ah) + t * tanh_complement(ak);
  return sign * 0.5 * (std::log1p(x) - std::log(one_minus_x));
}

double edge_field_derivative(double h, double coupling) noexcept {
  return 0.5 * (std::tanh(h + coupling) - std::tanh(h - coupling));
}

double log_cosh(double x) noexcept {
  const double ax = std::abs(x);
  return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

double log_sum_exp(double a, double b) noexcept {
  const double hi = a > b ? a : b;
  const double lo = a > b ? b : a;
  return hi + std::log1p(std::exp(lo - hi));
}

double a_fn(double t, const ModelParams& params) noexcept {
  const double K = params.coupling();
  const double log_arg = 2.0 * std::numbers::ln2 + log_cosh(t + K) + log_cosh(t - K);
  return -log_arg / (2.0 * params.beta());
}

double d_fn(double t, const ModelParams& params) noexcept {
  const double plus = params.beta() * (params.B() + params.J());
  const double minus = params.beta() * (params.B() - params.J());
  const double log_arg = 2.0 * std::numbers::ln2 + log_cosh(t + plus) + log_cosh(t + minus);
  return log_arg / (2.0 * params.beta());
}

}  // namespace cayley
