#include "cayley/boundary.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <string>

namespace cayley {

namespace {

constexpr std::size_t kLabelCount = 8;

std::size_t slot(FieldLabel label) noexcept { return static_cast<std::size_t>(label); }

bool is_alternating_label(FieldLabel label) noexcept {
  switch (label) {
    case FieldLabel::Zero:
    case FieldLabel::PlusH1:
    case FieldLabel::MinusH1:
    case FieldLabel::PlusH2:
    case FieldLabel::MinusH2:
      return true;
    default:
      return false;
  }
}

}  // namespace

const char* to_string(FieldLabel label) noexcept {
  switch (label) {
    case FieldLabel::Zero: return "zero";
    case FieldLabel::PlusH1: return "+h1";
    case FieldLabel::MinusH1: return "-h1";
    case FieldLabel::PlusH2: return "+h2";
    case FieldLabel::MinusH2: return "-h2";
    case FieldLabel::ConstEven: return "const_even";
    case FieldLabel::ConstOdd: return "const_odd";
    case FieldLabel::Const: return "const";
  }
  return "?";
}

FieldLabel parse_root_label(const char* text) {
  for (FieldLabel label : {FieldLabel::Zero, FieldLabel::PlusH1, FieldLabel::MinusH1,
                           FieldLabel::PlusH2, FieldLabel::MinusH2}) {
    if (std::strcmp(text, to_string(label)) == 0) {
      return label;
    }
  }
  throw std::invalid_argument(std::string("unknown root label '") + text +
                              "' (expected zero, +h1, -h1, +h2, -h2)");
}

FieldLabel negate(FieldLabel label) noexcept {
  switch (label) {
    case FieldLabel::PlusH1: return FieldLabel::MinusH1;
    case FieldLabel::MinusH1: return FieldLabel::PlusH1;
    case FieldLabel::PlusH2: return FieldLabel::MinusH2;
    case FieldLabel::MinusH2: return FieldLabel::PlusH2;
    default: return label;
  }
}

const char* to_string(BoundaryFamily family) noexcept {
  switch (family) {
    case BoundaryFamily::Alternating: return "alt";
    case BoundaryFamily::TranslationInvariant: return "ti";
    case BoundaryFamily::Periodic: return "per";
  }
  return "?";
}

void AltParams::validate(int k) const {
  if (q < 1 || q > k - 1) {
    throw std::invalid_argument("alternating: q must satisfy 1 <= q <= k-1 (q=" +
                                std::to_string(q) + ", k=" + std::to_string(k) + ")");
  }
  if (r < 0 || r > k) {
    throw std::invalid_argument("alternating: r must satisfy 0 <= r <= k (r=" +
                                std::to_string(r) + ")");
  }
  if ((k - r) % 2 != 0) {
    throw std::invalid_argument("alternating: r must have the parity of k (r=" +
                                std::to_string(r) + ", k=" + std::to_string(k) + ")");
  }
  if (!is_alternating_label(root_label)) {
    throw std::invalid_argument("alternating: root label must be zero, +-h1 or +-h2");
  }
}

FieldLabel BoundaryAssignment::root_label() const noexcept {
  switch (family_) {
    case BoundaryFamily::Alternating: return alt_->root_label;
    case BoundaryFamily::TranslationInvariant: return FieldLabel::Const;
    case BoundaryFamily::Periodic: return FieldLabel::ConstEven;
  }
  return FieldLabel::Const;
}

FieldLabel BoundaryAssignment::child_label(FieldLabel parent, int parent_level,
                                           int child_index) const {
  switch (family_) {
    case BoundaryFamily::TranslationInvariant:
      return FieldLabel::Const;
    case BoundaryFamily::Periodic:
      return (parent_level + 1) % 2 == 0 ? FieldLabel::ConstEven : FieldLabel::ConstOdd;
    case BoundaryFamily::Alternating:
      break;
  }
  const int k = tree_.k();
  const int q = alt_->q;
  const int r = alt_->r;
  switch (parent) {
    case FieldLabel::Zero:
      if (child_index < r) return FieldLabel::Zero;
      if (child_index < r + (k - r) / 2) return FieldLabel::PlusH1;
      return FieldLabel::MinusH1;
    case FieldLabel::PlusH1:
      return child_index < q ? FieldLabel::PlusH2 : FieldLabel::Zero;
    case FieldLabel::MinusH1:
      return child_index < q ? FieldLabel::MinusH2 : FieldLabel::Zero;
    case FieldLabel::PlusH2:
      return FieldLabel::PlusH1;
    case FieldLabel::MinusH2:
      return FieldLabel::MinusH1;
    default:
      throw std::logic_error("child_label: non-alternating label in alternating assignment");
  }
}

FieldLabel BoundaryAssignment::label(const VertexId& v) const {
  FieldLabel current = root_label();
  const auto& path = v.path();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int level = static_cast<int>(i);
    if (path[i] < 0 || path[i] >= tree_.arity(level)) {
      throw std::out_of_range("BoundaryAssignment::label: child index outside arity");
    }
    current = child_label(current, level, path[i]);
  }
  return current;
}

double BoundaryAssignment::value(FieldLabel label) const {
  const auto it = values_.find(label);
  if (it == values_.end()) {
    throw std::out_of_range(std::string("BoundaryAssignment: no value for label ") +
                            to_string(label));
  }
  return it->second;
}

std::vector<FieldLabel> BoundaryAssignment::level_labels(int m) const {
  const std::uint64_t size = sphere_size(tree_, m);
  std::vector<FieldLabel> current{root_label()};
  current.reserve(size);
  for (int level = 0; level < m; ++level) {
    const int arity = tree_.arity(level);
    std::vector<FieldLabel> next;
    next.reserve(current.size() * static_cast<std::size_t>(arity));
    for (FieldLabel parent : current) {
      for (int c = 0; c < arity; ++c) {
        next.push_back(child_label(parent, level, c));
      }
    }
    current = std::move(next);
  }
  return current;
}

std::array<std::uint64_t, 8> BoundaryAssignment::level_histogram(int m) const {
  sphere_size(tree_, m);  // range and overflow guard
  std::array<std::uint64_t, kLabelCount> counts{};
  counts[slot(root_label())] = 1;
  for (int level = 0; level < m; ++level) {
    std::array<std::uint64_t, kLabelCount> next{};
    const int arity = tree_.arity(level);
    for (std::size_t s = 0; s < kLabelCount; ++s) {
      if (counts[s] == 0) continue;
      for (int c = 0; c < arity; ++c) {
        next[slot(child_label(static_cast<FieldLabel>(s), level, c))] += counts[s];
      }
    }
    counts = next;
  }
  return counts;
}

BoundaryAssignment BoundaryAssignment::with_tree(const TreeSpec& tree) const {
  if (tree.k() != tree_.k() || tree.rooting() != tree_.rooting()) {
    throw std::invalid_argument("BoundaryAssignment::with_tree: k and rooting must match");
  }
  BoundaryAssignment copy = *this;
  copy.tree_ = tree;
  return copy;
}

BoundaryAssignment build_alternating(const TreeSpec& tree, const AltParams& alt, double h1,
                                     double h2) {
  if (tree.rooting() != Rooting::Half) {
    throw std::invalid_argument("build_alternating: requires a HALF-rooted tree");
  }
  alt.validate(tree.k());
  BoundaryAssignment out(tree, BoundaryFamily::Alternating);
  out.alt_ = alt;
  out.values_ = {
      {FieldLabel::Zero, 0.0},    {FieldLabel::PlusH1, h1},  {FieldLabel::MinusH1, -h1},
      {FieldLabel::PlusH2, h2},   {FieldLabel::MinusH2, -h2},
  };
  return out;
}

BoundaryAssignment build_translation_invariant(const TreeSpec& tree, double h) {
  BoundaryAssignment out(tree, BoundaryFamily::TranslationInvariant);
  out.values_ = {{FieldLabel::Const, h}};
  return out;
}

BoundaryAssignment build_periodic(const TreeSpec& tree, double h, double h_prime) {
  BoundaryAssignment out(tree, BoundaryFamily::Periodic);
  out.values_ = {{FieldLabel::ConstEven, h}, {FieldLabel::ConstOdd, h_prime}};
  return out;
}

LabelCounts label_counts(const AltParams& alt, int k, int n) {
  alt.validate(k);
  if (n < 0) {
    throw std::invalid_argument("label_counts: n must be >= 0");
  }
  LabelCounts c;
  switch (alt.root_label) {
    case FieldLabel::Zero: c.zero = 1; break;
    case FieldLabel::PlusH1: c.plus_h1 = 1; break;
    case FieldLabel::MinusH1: c.minus_h1 = 1; break;
    case FieldLabel::PlusH2: c.plus_h2 = 1; break;
    case FieldLabel::MinusH2: c.minus_h2 = 1; break;
    default: break;
  }
  const auto uk = static_cast<std::uint64_t>(k);
  const auto uq = static_cast<std::uint64_t>(alt.q);
  const auto ur = static_cast<std::uint64_t>(alt.r);
  const std::uint64_t half_rest = (uk - ur) / 2;
  for (int step = 0; step < n; ++step) {
    LabelCounts next;
    next.zero = ur * c.zero + (uk - uq) * (c.plus_h1 + c.minus_h1);
    next.plus_h1 = half_rest * c.zero + uk * c.plus_h2;
    next.minus_h1 = half_rest * c.zero + uk * c.minus_h2;
    next.plus_h2 = uq * c.plus_h1;
    next.minus_h2 = uq * c.minus_h1;
    c = next;
  }
  return c;
}

double compatibility_residual(const BoundaryAssignment& assignment, const ModelParams& params,
                              int n) {
  const TreeSpec& tree = assignment.tree();
  if (n < 0 || n > tree.depth()) {
    throw std::out_of_range("compatibility_residual: n outside assignment depth");
  }
  if (params.k() != tree.k()) {
    throw std::invalid_argument("compatibility_residual: params.k differs from tree k");
  }
  const double K = params.coupling();
  const double bB = params.field();
  double worst = 0.0;
  // Children depend only on the parent label and level, so one check per
  // label present on a level covers every vertex of that level.
  std::array<bool, kLabelCount> present{};
  present[slot(assignment.root_label())] = true;
  for (int level = 0; level < n; ++level) {
    std::array<bool, kLabelCount> next{};
    const int arity = tree.arity(level);
    const bool skip = level == 0 && tree.rooting() == Rooting::Full;
    for (std::size_t s = 0; s < kLabelCount; ++s) {
      if (!present[s]) continue;
      const auto parent = static_cast<FieldLabel>(s);
      double sum = 0.0;
      for (int c = 0; c < arity; ++c) {
        const FieldLabel child = assignment.child_label(parent, level, c);
        next[slot(child)] = true;
        sum += edge_field(assignment.value(child) + bB, K);
      }
      if (!skip) {
        worst = std::max(worst, std::abs(assignment.value(parent) - sum));
      }
    }
    present = next;
  }
  return worst;
}

}  // namespace cayley
