#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace smallcx {

using VertexId = std::uint8_t;

/// Hard vertex capacity: every vertex set fits in one 16-bit word.
inline constexpr int kMaxVertices = 16;

/// A finite set of vertex ids in [0, 16), stored as a bitmask.
///
/// Used both for faces of a complex and for arbitrary vertex sets. The
/// empty set is representable (it shows up as an intermediate value) but
/// complexes never hold it as a face.
class Simplex {
 public:
  using Mask = std::uint16_t;

  constexpr Simplex() = default;
  constexpr explicit Simplex(Mask mask) : mask_(mask) {}
  constexpr Simplex(std::initializer_list<int> vertices) {
    for (int v : vertices) mask_ = static_cast<Mask>(mask_ | (Mask{1} << v));
  }

  static constexpr Simplex vertex(int v) { return Simplex(static_cast<Mask>(Mask{1} << v)); }
  /// {0, 1, ..., n-1}
  static constexpr Simplex range(int n) {
    return Simplex(static_cast<Mask>(n >= 16 ? 0xFFFFu : ((1u << n) - 1u)));
  }

  [[nodiscard]] constexpr Mask mask() const { return mask_; }
  [[nodiscard]] constexpr bool empty() const { return mask_ == 0; }
  [[nodiscard]] constexpr int size() const { return std::popcount(mask_); }
  [[nodiscard]] constexpr int dimension() const { return size() - 1; }

  [[nodiscard]] constexpr bool contains(int v) const { return (mask_ >> v) & 1u; }
  /// Superset test: every vertex of `other` is in this set.
  [[nodiscard]] constexpr bool contains(Simplex other) const {
    return (mask_ & other.mask_) == other.mask_;
  }
  [[nodiscard]] constexpr bool disjoint(Simplex other) const { return (mask_ & other.mask_) == 0; }

  [[nodiscard]] constexpr Simplex with(int v) const {
    return Simplex(static_cast<Mask>(mask_ | (Mask{1} << v)));
  }
  [[nodiscard]] constexpr Simplex without(int v) const {
    return Simplex(static_cast<Mask>(mask_ & ~(Mask{1} << v)));
  }

  /// Smallest vertex; undefined on the empty set.
  [[nodiscard]] constexpr int min_vertex() const { return std::countr_zero(mask_); }
  [[nodiscard]] constexpr int max_vertex() const { return 15 - std::countl_zero(mask_); }

  [[nodiscard]] std::vector<VertexId> vertices() const {
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (Mask m = mask_; m != 0; m &= static_cast<Mask>(m - 1)) {
      out.push_back(static_cast<VertexId>(std::countr_zero(m)));
    }
    return out;
  }

  /// Calls f(v) for every vertex in ascending order.
  template <typename F>
  constexpr void for_each(F&& f) const {
    for (Mask m = mask_; m != 0; m &= static_cast<Mask>(m - 1)) f(std::countr_zero(m));
  }

  friend constexpr Simplex operator|(Simplex a, Simplex b) {
    return Simplex(static_cast<Mask>(a.mask_ | b.mask_));
  }
  friend constexpr Simplex operator&(Simplex a, Simplex b) {
    return Simplex(static_cast<Mask>(a.mask_ & b.mask_));
  }
  friend constexpr Simplex operator-(Simplex a, Simplex b) {
    return Simplex(static_cast<Mask>(a.mask_ & ~b.mask_));
  }
  friend constexpr bool operator==(Simplex a, Simplex b) = default;
  /// Bitmask order. This is the order faces() and the boundary matrices use.
  friend constexpr auto operator<=>(Simplex a, Simplex b) { return a.mask_ <=> b.mask_; }

 private:
  Mask mask_ = 0;
};

/// Lexicographic order on ascending vertex-id tuples ({0,1,5} < {0,2}).
/// Used wherever a deterministic "least" choice must be human-predictable.
bool lex_less(Simplex a, Simplex b);

/// "{0,1,5}" using raw ids.
std::string to_string(Simplex s);

/// Enumerates all k-subsets of `from`, in increasing bitmask order.
std::vector<Simplex> subsets_of_size(Simplex from, int k);

}  // namespace smallcx
