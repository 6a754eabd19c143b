#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "semireg/groupg.hpp"

namespace semireg {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph in compressed adjacency form. Neighbor lists are
/// sorted and duplicate-free; loops are rejected at construction.
class Graph {
 public:
  Graph() = default;

  /// Builds from per-vertex neighbor lists; each list is sorted and checked.
  /// Throws ConstructionError on loops, duplicates, out-of-range targets or
  /// asymmetric adjacency.
  static Graph from_adjacency(std::vector<std::vector<Vertex>> adj);
  /// Builds from an edge list; duplicate edges collapse, loops throw.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  std::size_t vertex_count() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const { return targets_.size() / 2; }
  std::span<const Vertex> neighbors(Vertex v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> targets_;
};

struct Partition {
  std::vector<std::uint32_t> block;
  std::uint32_t block_count = 0;

  /// Renumbers blocks by first occurrence and checks that every block is used.
  static Partition from_labels(std::vector<std::uint32_t> labels);
  static Partition singletons(std::size_t n);
  static Partition whole(std::size_t n);
  std::vector<std::size_t> block_sizes() const;
};

bool is_connected(const Graph& g);
std::vector<std::size_t> degree_sequence(const Graph& g);
bool is_regular(const Graph& g, std::size_t k);

/// Arcs w -> H s h g for every connection element s and h in H, with vertices
/// numbered by coset_number. The arc set must be symmetric and loop-free.
Graph coset_graph(const SemidirectGroup& grp, const std::vector<GElem>& connection, int threads = 1);

/// The connection set {ab, b v_1, b v_1^-1}.
std::vector<GElem> gamma_connection(const SemidirectGroup& grp);

/// The cubic coset graph on the cosets of H, validated cubic and connected
/// with the expected vertex count. Explicit construction is limited to m <= 3.
Graph gamma(const SemidirectGroup& grp, int threads = 1);

/// Cayley graph on `elements` with x adjacent to y x for y in `connection`.
/// The connection set must be inverse-closed and avoid the identity.
template <typename Element, typename Mul, typename Hash = std::hash<Element>>
Graph cayley_graph(std::span<const Element> elements, std::span<const Element> connection, Mul mul,
                   const Element& identity) {
  std::unordered_map<Element, Vertex, Hash> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index.emplace(elements[i], static_cast<Vertex>(i));
  if (index.size() != elements.size()) throw ParameterError("cayley_graph: repeated group element");
  for (const auto& y : connection) {
    if (y == identity) throw ParameterError("cayley_graph: connection set contains the identity");
    if (!index.contains(y)) throw ParameterError("cayley_graph: connection element outside the group");
    bool has_inverse = false;
    for (const auto& y2 : connection)
      if (mul(y, y2) == identity) has_inverse = true;
    if (!has_inverse) throw ParameterError("cayley_graph: connection set is not inverse-closed");
  }
  std::vector<std::vector<Vertex>> adj(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (const auto& y : connection) {
      const auto it = index.find(mul(y, elements[i]));
      if (it == index.end()) throw ParameterError("cayley_graph: elements are not closed under multiplication");
      adj[i].push_back(it->second);
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

/// Simple cycles of exactly `length` through every vertex of `required`.
/// Each cycle is reported once, starting at required[0], in the direction
/// whose second vertex is smaller than its last.
std::vector<std::vector<Vertex>> cycles_through(const Graph& g, const std::vector<Vertex>& required, int length);

/// True iff `cycle` equals `pattern` up to rotation and reversal.
bool same_cycle(const std::vector<Vertex>& cycle, const std::vector<Vertex>& pattern);

struct Subgraph {
  Graph graph;
  /// Original vertex of each subgraph vertex, ascending.
  std::vector<Vertex> vertices;
};

/// Induced subgraph on all vertices within `radius` of some center.
Subgraph ball(const Graph& g, const std::vector<Vertex>& centers, int radius);

struct QuotientResult {
  Graph graph;
  /// Crossing edges beyond the first between the same pair of blocks.
  std::size_t collapsed_multiplicity = 0;
  /// Edges with both ends in one block.
  std::size_t dropped_internal = 0;
};

QuotientResult normal_quotient(const Graph& g, const Partition& p);

/// Orbits on the coset vertices of the subgroup generated by `gens`.
Partition orbit_partition(const SemidirectGroup& grp, std::size_t vertex_count, const std::vector<GElem>& gens);

/// Canonical text form: "n e" then one "u v" line per edge, u < v, sorted.
void write_edge_list(std::ostream& os, const Graph& g);
Graph read_edge_list(std::istream& is);

}  // namespace semireg
