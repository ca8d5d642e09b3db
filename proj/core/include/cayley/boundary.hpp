#pragma once

// Boundary-field assignments h = {h_x} on a Cayley tree: the alternating
// family built from (q, r) rules, translation-invariant and two-periodic
// fields, and the compatibility test h_x = sum_{y in S(x)} f(h_y + beta B).

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "cayley/model.hpp"
#include "cayley/tree.hpp"

namespace cayley {

enum class FieldLabel : std::uint8_t {
  Zero,
  PlusH1,
  MinusH1,
  PlusH2,
  MinusH2,
  ConstEven,
  ConstOdd,
  Const,
};

const char* to_string(FieldLabel label) noexcept;
/// Parses "zero", "+h1", "-h1", "+h2", "-h2" (alternating root labels).
FieldLabel parse_root_label(const char* text);

/// The opposite-sign label; labels without a sign map to themselves.
FieldLabel negate(FieldLabel label) noexcept;

enum class BoundaryFamily { Alternating, TranslationInvariant, Periodic };

const char* to_string(BoundaryFamily family) noexcept;

/// Parameters of the alternating construction. Valid for a branching k when
/// 1 <= q <= k-1, 0 <= r <= k, r = k (mod 2) and root_label is one of
/// Zero, +-H1, +-H2.
struct AltParams {
  int q = 1;
  int r = 0;
  FieldLabel root_label = FieldLabel::Zero;

  /// Throws std::invalid_argument describing the first violated condition.
  void validate(int k) const;
};

/// Per-vertex boundary fields, generated lazily from the parent's label and
/// the child index; nothing is stored per vertex.
class BoundaryAssignment {
 public:
  const TreeSpec& tree() const noexcept { return tree_; }
  BoundaryFamily family() const noexcept { return family_; }
  const std::optional<AltParams>& alt() const noexcept { return alt_; }

  FieldLabel root_label() const noexcept;
  /// Label of child `child_index` of a vertex at `parent_level` carrying `parent`.
  FieldLabel child_label(FieldLabel parent, int parent_level, int child_index) const;

  FieldLabel label(const VertexId& v) const;
  double field(const VertexId& v) const { return value(label(v)); }
  double value(FieldLabel label) const;

  /// Labels of the whole sphere W_m in canonical order.
  std::vector<FieldLabel> level_labels(int m) const;

  /// Label multiplicities on W_m, indexed by FieldLabel.
  std::array<std::uint64_t, 8> level_histogram(int m) const;

  /// Same family and fields on a tree of another depth.
  BoundaryAssignment with_tree(const TreeSpec& tree) const;

 private:
  friend BoundaryAssignment build_alternating(const TreeSpec&, const AltParams&, double, double);
  friend BoundaryAssignment build_translation_invariant(const TreeSpec&, double);
  friend BoundaryAssignment build_periodic(const TreeSpec&, double, double);

  BoundaryAssignment(TreeSpec tree, BoundaryFamily family) : tree_(tree), family_(family) {}

  TreeSpec tree_;
  BoundaryFamily family_;
  std::optional<AltParams> alt_;
  std::map<FieldLabel, double> values_;
};

/// Alternating assignment on a HALF-rooted tree. Children of a ZERO vertex
/// are ordered (ZERO^r, +H1^{(k-r)/2}, -H1^{(k-r)/2}); children of a +-H1
/// vertex (+-H2^q, ZERO^{k-q}); children of +-H2 are all +-H1.
BoundaryAssignment build_alternating(const TreeSpec& tree, const AltParams& alt, double h1,
                                     double h2);

BoundaryAssignment build_translation_invariant(const TreeSpec& tree, double h);

/// h on even levels (the root is even), h_prime on odd levels.
BoundaryAssignment build_periodic(const TreeSpec& tree, double h, double h_prime);

/// (alpha, beta, gamma, delta, xi): counts of ZERO, +H1, -H1, +H2, -H2 on W_n.
struct LabelCounts {
  std::uint64_t zero = 0;
  std::uint64_t plus_h1 = 0;
  std::uint64_t minus_h1 = 0;
  std::uint64_t plus_h2 = 0;
  std::uint64_t minus_h2 = 0;

  std::uint64_t w() const noexcept { return plus_h1 + minus_h1; }
  std::uint64_t v() const noexcept { return plus_h2 + minus_h2; }
  std::uint64_t total() const noexcept { return zero + w() + v(); }

  friend bool operator==(const LabelCounts&, const LabelCounts&) = default;
};

/// Iterates the five-component label recurrence from the root indicator.
LabelCounts label_counts(const AltParams& alt, int k, int n);

/// max over x with level < n of |h_x - sum_{y in S(x)} f(h_y + beta B)|.
/// On FULL trees the root (k+1 successors) is not part of the check.
double compatibility_residual(const BoundaryAssignment& assignment, const ModelParams& params,
                              int n);

}  // namespace cayley
