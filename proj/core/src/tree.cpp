#include "cayley/tree.hpp"

#include <limits>
#include <stdexcept>
#include <string>

namespace cayley {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("tree: vertex count exceeds 64 bits");
  }
  return out;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) {
    throw std::overflow_error("tree: vertex count exceeds 64 bits");
  }
  return out;
}

void require_level(const TreeSpec& spec, int m, const char* what) {
  if (m < 0 || m > spec.depth()) {
    throw std::out_of_range(std::string(what) + ": level " + std::to_string(m) +
                            " outside [0, " + std::to_string(spec.depth()) + "]");
  }
}

}  // namespace

const char* to_string(Rooting rooting) noexcept {
  return rooting == Rooting::Half ? "half" : "full";
}

TreeSpec::TreeSpec(int k, Rooting rooting, int depth) : k_(k), rooting_(rooting), depth_(depth) {
  if (k < 2) {
    throw std::invalid_argument("TreeSpec: k must be >= 2");
  }
  if (depth < 0) {
    throw std::invalid_argument("TreeSpec: depth must be >= 0");
  }
}

int TreeSpec::arity(int level) const noexcept {
  return (level == 0 && rooting_ == Rooting::Full) ? k_ + 1 : k_;
}

VertexId VertexId::child(int index) const {
  std::vector<int> path = path_;
  path.push_back(index);
  return VertexId(std::move(path));
}

VertexId VertexId::parent() const {
  if (path_.empty()) {
    throw std::logic_error("VertexId::parent: root has no parent");
  }
  return VertexId(std::vector<int>(path_.begin(), path_.end() - 1));
}

std::uint64_t sphere_size(const TreeSpec& spec, int m) {
  require_level(spec, m, "sphere_size");
  std::uint64_t count = 1;
  for (int level = 0; level < m; ++level) {
    count = checked_mul(count, static_cast<std::uint64_t>(spec.arity(level)));
  }
  return count;
}

std::uint64_t ball_size(const TreeSpec& spec, int n) {
  require_level(spec, n, "ball_size");
  std::uint64_t total = 0;
  for (int m = 0; m <= n; ++m) {
    total = checked_add(total, sphere_size(spec, m));
  }
  return total;
}

ParityCounts parity_counts(const TreeSpec& spec, int n) {
  if (spec.rooting() != Rooting::Full) {
    throw std::invalid_argument("parity_counts: requires FULL rooting");
  }
  require_level(spec, n, "parity_counts");
  ParityCounts counts;
  for (int m = 0; m <= n; ++m) {
    auto& slot = (m % 2 == 0) ? counts.even : counts.odd;
    slot = checked_add(slot, sphere_size(spec, m));
  }
  return counts;
}

std::uint64_t level_index(const TreeSpec& spec, const VertexId& v) {
  std::uint64_t index = 0;
  const auto& path = v.path();
  for (std::size_t i = 0; i < path.size(); ++i) {
    const int arity = spec.arity(static_cast<int>(i));
    if (path[i] < 0 || path[i] >= arity) {
      throw std::out_of_range("level_index: child index outside parent arity");
    }
    index = checked_add(checked_mul(index, static_cast<std::uint64_t>(arity)),
                        static_cast<std::uint64_t>(path[i]));
  }
  return index;
}

VertexId vertex_at(const TreeSpec& spec, int level, std::uint64_t index) {
  if (index >= sphere_size(spec, level)) {
    throw std::out_of_range("vertex_at: index outside sphere");
  }
  std::vector<int> path(static_cast<std::size_t>(level));
  for (int i = level - 1; i >= 0; --i) {
    const auto arity = static_cast<std::uint64_t>(spec.arity(i));
    path[static_cast<std::size_t>(i)] = static_cast<int>(index % arity);
    index /= arity;
  }
  return VertexId(std::move(path));
}

std::vector<VertexId> children(const TreeSpec& spec, const VertexId& v) {
  std::vector<VertexId> out;
  if (v.level() >= spec.depth()) {
    return out;
  }
  const int arity = spec.arity(v.level());
  out.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    out.push_back(v.child(i));
  }
  return out;
}

LevelRange::iterator& LevelRange::iterator::operator++() {
  if (remaining_ == 0) {
    return *this;
  }
  --remaining_;
  if (remaining_ == 0) {
    return *this;
  }
  // Odometer increment over the mixed-radix path.
  std::vector<int> path = current_.path();
  for (int i = static_cast<int>(path.size()) - 1; i >= 0; --i) {
    auto& digit = path[static_cast<std::size_t>(i)];
    if (++digit < spec_->arity(i)) {
      break;
    }
    digit = 0;
  }
  current_ = VertexId(std::move(path));
  return *this;
}

LevelRange::LevelRange(const TreeSpec& spec, int level)
    : spec_(spec), level_(level), size_(sphere_size(spec, level)) {}

LevelRange::iterator LevelRange::begin() const {
  return iterator(&spec_, VertexId(std::vector<int>(static_cast<std::size_t>(level_), 0)), size_);
}

LevelRange iterate_level(const TreeSpec& spec, int m) { return LevelRange(spec, m); }

}  // namespace cayley
