#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

namespace cayley {

/// HALF: the root has k children (the half tree). FULL: the root has k+1
/// children, every other vertex has k.
enum class Rooting { Half, Full };

const char* to_string(Rooting rooting) noexcept;

class TreeSpec {
 public:
  TreeSpec(int k, Rooting rooting, int depth);

  int k() const noexcept { return k_; }
  Rooting rooting() const noexcept { return rooting_; }
  int depth() const noexcept { return depth_; }

  /// Number of children of a vertex at `level`.
  int arity(int level) const noexcept;

  TreeSpec with_depth(int depth) const { return {k_, rooting_, depth}; }

  friend bool operator==(const TreeSpec&, const TreeSpec&) = default;

 private:
  int k_;
  Rooting rooting_;
  int depth_;
};

/// Vertex addressed by its path of child indices from the root.
class VertexId {
 public:
  VertexId() = default;
  explicit VertexId(std::vector<int> path) : path_(std::move(path)) {}

  int level() const noexcept { return static_cast<int>(path_.size()); }
  bool is_root() const noexcept { return path_.empty(); }
  const std::vector<int>& path() const noexcept { return path_; }

  VertexId child(int index) const;
  VertexId parent() const;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;

 private:
  std::vector<int> path_;
};

/// |W_m|. Throws std::out_of_range unless 0 <= m <= depth, and
/// std::overflow_error if the count does not fit in 64 bits.
std::uint64_t sphere_size(const TreeSpec& spec, int m);

/// |V_n| = sum of sphere sizes up to n.
std::uint64_t ball_size(const TreeSpec& spec, int n);

struct ParityCounts {
  std::uint64_t even = 0;
  std::uint64_t odd = 0;

  friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Even- and odd-level vertex counts of V_n. FULL rooting only.
ParityCounts parity_counts(const TreeSpec& spec, int n);

/// Canonical (lexicographic) position of v within its level.
std::uint64_t level_index(const TreeSpec& spec, const VertexId& v);

/// Inverse of level_index.
VertexId vertex_at(const TreeSpec& spec, int level, std::uint64_t index);

/// Children of v in canonical order. Empty at the depth boundary.
std::vector<VertexId> children(const TreeSpec& spec, const VertexId& v);

/// Forward range over the vertices of one sphere in canonical order. Holds a
/// single path (O(depth) state); nothing is materialised.
class LevelRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = VertexId;
    using difference_type = std::ptrdiff_t;
    using reference = const VertexId&;
    using pointer = const VertexId*;

    iterator() = default;

    reference operator*() const noexcept { return current_; }
    pointer operator->() const noexcept { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator copy = *this;
      ++*this;
      return copy;
    }
    friend bool operator==(const iterator& a, const iterator& b) noexcept {
      return a.remaining_ == b.remaining_;
    }

   private:
    friend class LevelRange;
    iterator(const TreeSpec* spec, VertexId first, std::uint64_t remaining)
        : spec_(spec), current_(std::move(first)), remaining_(remaining) {}

    const TreeSpec* spec_ = nullptr;
    VertexId current_;
    std::uint64_t remaining_ = 0;
  };

  LevelRange(const TreeSpec& spec, int level);

  iterator begin() const;
  iterator end() const { return iterator(&spec_, VertexId{}, 0); }
  std::uint64_t size() const noexcept { return size_; }

 private:
  TreeSpec spec_;
  int level_;
  std::uint64_t size_;
};

LevelRange iterate_level(const TreeSpec& spec, int m);

}  // namespace cayley
