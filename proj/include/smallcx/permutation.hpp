#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "smallcx/simplex.hpp"

namespace smallcx {

/// A permutation of {0..15}. Points outside the acting domain stay fixed.
class Permutation {
 public:
  Permutation();
  explicit Permutation(const std::array<VertexId, kMaxVertices>& images);
  /// Builds from cycles, e.g. {{0,1},{2,3}}. Throws on repeated points.
  static Permutation from_cycles(const std::vector<std::vector<int>>& cycles);

  [[nodiscard]] int operator()(int v) const { return image_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] Simplex operator()(Simplex s) const;
  [[nodiscard]] const std::array<VertexId, kMaxVertices>& images() const { return image_; }

  [[nodiscard]] bool is_identity() const;
  [[nodiscard]] Permutation inverse() const;
  /// Points moved.
  [[nodiscard]] Simplex support() const;

  /// (a * b)(x) = a(b(x)): apply b first.
  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::array<VertexId, kMaxVertices> image_;
};

/// Cycle notation over raw ids, "(0 1)(2 3)"; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// A permutation group given by generators, with its order computed exactly
/// by a Schreier-Sims stabilizer chain.
class PermutationGroup {
 public:
  PermutationGroup() = default;
  /// `degree` is the number of points acted on (points >= degree are fixed).
  PermutationGroup(std::vector<Permutation> generators, int degree);

  [[nodiscard]] const std::vector<Permutation>& generators() const { return generators_; }
  [[nodiscard]] int degree() const { return degree_; }
  [[nodiscard]] std::uint64_t order() const { return order_; }

  /// Membership via sifting through the stabilizer chain.
  [[nodiscard]] bool contains(const Permutation& p) const;
  /// Orbit of a point under the generators.
  [[nodiscard]] Simplex orbit(int point) const;
  /// All elements; throws PreconditionError when order() > limit.
  [[nodiscard]] std::vector<Permutation> elements(std::uint64_t limit = 100000) const;
  [[nodiscard]] bool is_abelian() const;
  /// Every point orbit is one orbit on [0, degree) restricted to moved points.
  [[nodiscard]] bool is_transitive_on(Simplex points) const;

 private:
  struct Level {
    int base = 0;
    std::vector<Permutation> gens;
    // transversal[p] maps base -> p, valid when in_orbit bit set.
    std::array<Permutation, kMaxVertices> transversal;
    Simplex orbit;
  };

  void build_chain();
  void recompute_orbit(Level& level) const;
  /// Returns the residue and the level index where sifting stopped.
  [[nodiscard]] std::pair<Permutation, std::size_t> sift(Permutation g, std::size_t from) const;

  std::vector<Permutation> generators_;
  int degree_ = 0;
  std::uint64_t order_ = 1;
  std::vector<Level> chain_;
};

}  // namespace smallcx
