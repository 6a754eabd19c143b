#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semireg/errors.hpp"

namespace semireg {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}. Permutations act on the right:
/// p^(g h) = (p^g)^h, so (g * h)(p) = h(g(p)).
class Permutation {
 public:
  Permutation() = default;
  /// Throws ParameterError unless `images` is a bijection.
  explicit Permutation(std::vector<Point> images);
  static Permutation identity(std::size_t n);

  std::size_t degree() const { return images_.size(); }
  Point operator()(Point p) const { return images_[p]; }
  std::span<const Point> images() const { return images_; }

  bool is_identity() const;
  Permutation inverse() const;
  /// Sorted lengths of the disjoint cycles, fixed points included.
  std::vector<std::size_t> cycle_lengths() const;
  /// Least common multiple of the cycle lengths.
  std::uint64_t order() const;
  /// All cycles have the same length.
  bool is_semiregular() const;

  friend Permutation operator*(const Permutation& g, const Permutation& h);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  std::vector<Point> images_;
};

/// A permutation group given by generators, with a stabilizer chain (base
/// and strong generating set) computed by the deterministic Schreier-Sims
/// algorithm at construction.
class PermGroup {
 public:
  /// `base_prefix` fixes the first base points; further points are chosen
  /// as the lowest moved point.
  PermGroup(std::size_t degree, std::vector<Permutation> generators, std::vector<Point> base_prefix = {});

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<Point>& base() const { return base_; }

  /// Orbit of `point` in ascending order.
  std::vector<Point> orbit(Point point) const;
  bool is_transitive() const;
  std::uint64_t order() const;
  bool contains(const Permutation& p) const;

  /// Sizes of the basic orbits along the base.
  std::vector<std::size_t> basic_orbit_sizes() const;

  /// Strong generators of the stabilizer of `point`.
  PermGroup point_stabilizer(Point point) const;
  /// Some element mapping `from` to `to`, if one exists.
  std::optional<Permutation> find_mapping(Point from, Point to) const;

  /// Calls `visit` once for every element of the group.
  template <typename Visitor>
  void for_each_element(Visitor&& visit) const {
    enumerate(0, Permutation::identity(degree_), visit);
  }

 private:
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::int32_t> slot;  // point -> index into reps, or -1
    std::vector<Permutation> reps;   // reps[k] maps base_point to orbit[k]
  };

  void build_chain(std::vector<Point> prefix);
  void rebuild_orbit(Level& level) const;
  /// Sifts g through the levels starting at `from`; returns the residue and
  /// the level where sifting stopped (levels_.size() when it went through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  template <typename Visitor>
  void enumerate(std::size_t depth, const Permutation& right, Visitor& visit) const {
    // Every element is uniquely u_{k-1} ... u_1 u_0 with u_i a transversal
    // element of level i; the word is assembled right to left.
    if (depth == levels_.size()) {
      visit(right);
      return;
    }
    for (const auto& u : levels_[depth].reps) enumerate(depth + 1, u * right, visit);
  }

  void check_degree(const Permutation& p) const;

  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<Point> base_;
  std::vector<Level> levels_;
};

}  // namespace semireg
