#pragma once

// Exact finite-volume ground truth. Z_n sums
//   exp{ beta J sum_<x,y> s(x)s(y) + beta B sum_x s(x) + sum_{x in W_n} h_x s(x) }
// over all spin configurations on V_n; boundary fields act on W_n only.

#include <cstdint>
#include <span>
#include <vector>

#include "cayley/boundary.hpp"
#include "cayley/free_energy.hpp"
#include "cayley/model.hpp"
#include "cayley/tree.hpp"

namespace cayley {

enum class OracleMethod { Recursion, Enumeration };

const char* to_string(OracleMethod method) noexcept;

struct FiniteVolumeReport {
  int n = 0;
  double log_Z = 0.0;
  /// -log_Z / (beta |V_n|)
  double fe_finite = 0.0;
  OracleMethod method = OracleMethod::Recursion;
  std::uint64_t volume = 0;
};

/// Largest ball enumerated by log_partition_enumerate.
inline constexpr std::uint64_t kMaxEnumerationSites = 22;
/// Largest ball accepted by marginal_consistency_check.
inline constexpr std::uint64_t kMaxMarginalSites = 18;

/// ln Z_n by leaf-to-root message passing in log domain, n = tree.depth().
/// The assignment must share k and rooting with `tree` and reach its depth.
FiniteVolumeReport log_partition_recursive(const TreeSpec& tree,
                                           const BoundaryAssignment& assignment,
                                           const ModelParams& params);

/// ln Z_n by summing all 2^|V_n| configurations. |V_n| <= kMaxEnumerationSites.
FiniteVolumeReport log_partition_enumerate(const TreeSpec& tree,
                                           const BoundaryAssignment& assignment,
                                           const ModelParams& params);

/// max over s in {-1,1}^{V_{n-1}} of |sum_w mu_n(s, w) - mu_{n-1}(s)|, with
/// both measures built from the same assignment. Requires n >= 1 (n >= 2 on
/// FULL trees) and |V_n| <= kMaxMarginalSites.
double marginal_consistency_check(const BoundaryAssignment& assignment,
                                  const ModelParams& params, int n);

struct ConvergenceRow {
  int n = 0;
  double fe_finite = 0.0;
  double target = 0.0;
  double gap = 0.0;  // fe_finite - target
};

/// Finite free energies along n_list against a closed-form target
/// (parity-matched for accumulation results).
std::vector<ConvergenceRow> convergence_study(const BoundaryAssignment& assignment,
                                              const ModelParams& params,
                                              const FreeEnergyResult& target,
                                              std::span<const int> n_list);

}  // namespace cayley
