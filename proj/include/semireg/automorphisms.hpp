#pragma once

// Graph automorphism groups by individualization and refinement, and the
// analyses run on them: vertex stabilizers and their local action,
// semiregular elements, and small transitive generating sets.

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "semireg/graphs.hpp"
#include "semireg/groupg.hpp"
#include "semireg/permutation.hpp"

namespace semireg {

struct AutomorphismOptions {
  std::size_t max_vertices = 2500;
  /// Upper bound on refinement calls before giving up.
  std::size_t node_budget = 2'000'000;
};

struct AutomorphismSearch {
  PermGroup group;
  /// Base points of the first path and the orbit length found at each level;
  /// their product is the group order.
  std::vector<Vertex> base;
  std::vector<std::size_t> orbit_sizes;
  std::size_t refinements = 0;
};

/// Full automorphism group; generators are sorted by image array.
/// Throws CapacityError when the graph or the search exceeds the options.
AutomorphismSearch search_automorphisms(const Graph& g, const AutomorphismOptions& opts = {});
PermGroup graph_automorphisms(const Graph& g, const AutomorphismOptions& opts = {});

/// Coarsest equitable refinement of `colors` (color-class ids must be dense).
/// Returns the refined colors, renumbered canonically.
std::vector<std::uint32_t> refine_coloring(const Graph& g, std::vector<std::uint32_t> colors);

bool is_automorphism(const Graph& g, const Permutation& p);

struct StabilizerAnalysis {
  Vertex vertex = 0;
  std::uint64_t stab_order = 0;
  std::uint64_t local_action_size = 0;
  std::uint64_t kernel_order = 0;
  bool stab_is_2group = false;
  bool kernel_is_2group = false;
  bool local_action_transitive = false;
};

StabilizerAnalysis stabilizer_analysis(const PermGroup& gp, const Graph& g, Vertex vertex);

struct SemiregularSpectrum {
  std::set<std::uint64_t> orders;
  std::uint64_t elements_scanned = 0;
  std::uint64_t semiregular_count = 0;
};

/// Orders of the semiregular elements, by cycle type over the whole group.
SemiregularSpectrum semiregular_elements(const PermGroup& gp, std::uint64_t budget = 10'000'000);

struct TransitiveGenerators {
  std::vector<Permutation> elements;
  bool transitive = false;
};

/// One element of `gp` per neighbor of `alpha`, mapping alpha onto it. The
/// subgroup they generate is transitive on a connected graph.
TransitiveGenerators find_transitive_generators(const Graph& g, const PermGroup& gp, Vertex alpha = 0);

struct ArcTransitiveGenerators {
  bool available = false;
  std::string reason;
  std::vector<Permutation> elements;
  bool arc_transitive = false;
};

/// Adds to the vertex-transitive set elements of the stabilizer of alpha
/// moving its first neighbor onto each other neighbor. Unavailable when the
/// stabilizer is intransitive on the neighborhood.
ArcTransitiveGenerators find_arc_transitive_generators(const Graph& g, const PermGroup& gp, Vertex alpha = 0);

/// Permutation of the coset vertices induced by g; vertices are numbered by
/// coset_number.
Permutation coset_permutation(const SemidirectGroup& grp, const GElem& g);

/// Converts each element to its vertex permutation and checks that it
/// preserves adjacency (ContractViolation otherwise).
PermGroup verify_subgroup_action(const SemidirectGroup& grp, const Graph& g, const std::vector<GElem>& gens);

}  // namespace semireg
