#include "cayley/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cayley {

namespace {

void require_matching(const TreeSpec& tree, const BoundaryAssignment& assignment,
                      const ModelParams& params, const char* who) {
  const TreeSpec& own = assignment.tree();
  if (tree.k() != own.k() || tree.rooting() != own.rooting()) {
    throw std::invalid_argument(std::string(who) + ": tree and assignment differ in k or rooting");
  }
  if (tree.depth() > own.depth()) {
    throw std::invalid_argument(std::string(who) + ": assignment depth " +
                                std::to_string(own.depth()) + " below tree depth " +
                                std::to_string(tree.depth()));
  }
  if (params.k() != tree.k()) {
    throw std::invalid_argument(std::string(who) + ": params.k differs from tree k");
  }
}

// Ball V_n flattened level by level; parent[i] < i for i > 0.
struct FlatBall {
  std::vector<int> parent;
  std::vector<double> boundary;  // h_x on W_n, 0 elsewhere
  std::size_t interior = 0;      // |V_{n-1}|, the leading block
};

FlatBall flatten(const TreeSpec& tree, const BoundaryAssignment& assignment) {
  const int n = tree.depth();
  FlatBall ball;
  const auto volume = ball_size(tree, n);
  ball.parent.reserve(volume);
  ball.parent.push_back(-1);
  std::size_t level_start = 0;
  std::size_t level_size = 1;
  for (int m = 0; m < n; ++m) {
    const int arity = tree.arity(m);
    for (std::size_t i = 0; i < level_size; ++i) {
      for (int c = 0; c < arity; ++c) {
        ball.parent.push_back(static_cast<int>(level_start + i));
      }
    }
    level_start += level_size;
    level_size *= static_cast<std::size_t>(arity);
  }
  ball.interior = level_start;
  ball.boundary.assign(ball.parent.size(), 0.0);
  const auto labels = assignment.level_labels(n);
  for (std::size_t i = 0; i < labels.size(); ++i) {
    ball.boundary[level_start + i] = assignment.value(labels[i]);
  }
  return ball;
}

double log_weight(const FlatBall& ball, std::uint64_t config, double K, double bB) {
  const auto spin = [config](std::size_t i) { return ((config >> i) & 1U) ? 1.0 : -1.0; };
  double e = 0.0;
  for (std::size_t i = 0; i < ball.parent.size(); ++i) {
    const double s = spin(i);
    e += (bB + ball.boundary[i]) * s;
    if (i > 0) {
      e += K * s * spin(static_cast<std::size_t>(ball.parent[i]));
    }
  }
  return e;
}

// Online log-sum-exp over every configuration; `visit` sees (config, log weight).
template <class Visit>
double enumerate_log_z(const FlatBall& ball, double K, double bB, Visit&& visit) {
  const std::uint64_t configs = std::uint64_t{1} << ball.parent.size();
  double running_max = -std::numeric_limits<double>::infinity();
  double scaled_sum = 0.0;
  for (std::uint64_t c = 0; c < configs; ++c) {
    const double e = log_weight(ball, c, K, bB);
    visit(c, e);
    if (e > running_max) {
      scaled_sum = scaled_sum * std::exp(running_max - e) + 1.0;
      running_max = e;
    } else {
      scaled_sum += std::exp(e - running_max);
    }
  }
  return running_max + std::log(scaled_sum);
}

FiniteVolumeReport make_report(const TreeSpec& tree, const ModelParams& params, double log_z,
                               OracleMethod method) {
  const std::uint64_t volume = ball_size(tree, tree.depth());
  return {tree.depth(), log_z, -log_z / (params.beta() * static_cast<double>(volume)), method,
          volume};
}

}  // namespace

const char* to_string(OracleMethod method) noexcept {
  return method == OracleMethod::Recursion ? "recursion" : "enumeration";
}

FiniteVolumeReport log_partition_recursive(const TreeSpec& tree,
                                           const BoundaryAssignment& assignment,
                                           const ModelParams& params) {
  require_matching(tree, assignment, params, "log_partition_recursive");
  const int n = tree.depth();
  const double K = params.coupling();
  const double bB = params.field();

  // ln m(+1), ln m(-1) for the current level, leaves first.
  const auto labels = assignment.level_labels(n);
  std::vector<double> plus(labels.size());
  std::vector<double> minus(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const double h = bB + assignment.value(labels[i]);
    plus[i] = h;
    minus[i] = -h;
  }
  for (int m = n - 1; m >= 0; --m) {
    const auto arity = static_cast<std::size_t>(tree.arity(m));
    const std::size_t parents = plus.size() / arity;
    std::vector<double> up_plus(parents, bB);
    std::vector<double> up_minus(parents, -bB);
    for (std::size_t p = 0; p < parents; ++p) {
      for (std::size_t c = p * arity; c < (p + 1) * arity; ++c) {
        up_plus[p] += log_sum_exp(K + plus[c], -K + minus[c]);
        up_minus[p] += log_sum_exp(-K + plus[c], K + minus[c]);
      }
    }
    plus = std::move(up_plus);
    minus = std::move(up_minus);
  }
  return make_report(tree, params, log_sum_exp(plus[0], minus[0]), OracleMethod::Recursion);
}

FiniteVolumeReport log_partition_enumerate(const TreeSpec& tree,
                                           const BoundaryAssignment& assignment,
                                           const ModelParams& params) {
  require_matching(tree, assignment, params, "log_partition_enumerate");
  if (ball_size(tree, tree.depth()) > kMaxEnumerationSites) {
    throw std::length_error("log_partition_enumerate: ball exceeds " +
                            std::to_string(kMaxEnumerationSites) + " sites");
  }
  const FlatBall ball = flatten(tree, assignment);
  const double log_z =
      enumerate_log_z(ball, params.coupling(), params.field(), [](std::uint64_t, double) {});
  return make_report(tree, params, log_z, OracleMethod::Enumeration);
}

double marginal_consistency_check(const BoundaryAssignment& assignment,
                                  const ModelParams& params, int n) {
  const TreeSpec outer = assignment.tree().with_depth(n);
  const int min_n = outer.rooting() == Rooting::Full ? 2 : 1;
  if (n < min_n) {
    throw std::invalid_argument("marginal_consistency_check: n must be >= " +
                                std::to_string(min_n) + " for " + to_string(outer.rooting()) +
                                " rooting");
  }
  require_matching(outer, assignment, params, "marginal_consistency_check");
  if (ball_size(outer, n) > kMaxMarginalSites) {
    throw std::length_error("marginal_consistency_check: ball exceeds " +
                            std::to_string(kMaxMarginalSites) + " sites");
  }
  const double K = params.coupling();
  const double bB = params.field();
  const FlatBall big = flatten(outer, assignment);
  const FlatBall small = flatten(outer.with_depth(n - 1), assignment);
  const std::uint64_t mask = (std::uint64_t{1} << small.parent.size()) - 1;

  std::vector<double> energies(std::size_t{1} << big.parent.size());
  const double log_z_big =
      enumerate_log_z(big, K, bB, [&](std::uint64_t c, double e) { energies[c] = e; });
  std::vector<double> marginal(std::size_t{1} << small.parent.size(), 0.0);
  for (std::uint64_t c = 0; c < energies.size(); ++c) {
    marginal[c & mask] += std::exp(energies[c] - log_z_big);
  }
  std::vector<double> small_energies(marginal.size());
  const double log_z_small =
      enumerate_log_z(small, K, bB, [&](std::uint64_t c, double e) { small_energies[c] = e; });
  double worst = 0.0;
  for (std::size_t s = 0; s < marginal.size(); ++s) {
    worst = std::max(worst, std::abs(marginal[s] - std::exp(small_energies[s] - log_z_small)));
  }
  return worst;
}

std::vector<ConvergenceRow> convergence_study(const BoundaryAssignment& assignment,
                                              const ModelParams& params,
                                              const FreeEnergyResult& target,
                                              std::span<const int> n_list) {
  std::vector<ConvergenceRow> rows;
  rows.reserve(n_list.size());
  for (std::size_t i = 0; i < n_list.size(); ++i) {
    if (i > 0 && n_list[i] <= n_list[i - 1]) {
      throw std::invalid_argument("convergence_study: n_list must be increasing");
    }
    const int n = n_list[i];
    const auto report =
        log_partition_recursive(assignment.tree().with_depth(n), assignment, params);
    const double goal = target.at_depth(n);
    rows.push_back({n, report.fe_finite, goal, report.fe_finite - goal});
  }
  return rows;
}

}  // namespace cayley
