#pragma once

// Verification certificates for the coset graphs and the lemma suite that
// fills them.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "semireg/graphs.hpp"
#include "semireg/groupg.hpp"

namespace semireg {

inline constexpr const char* kToolVersion = "semireg 1.0.0";
inline constexpr int kMaxGraphM = 3;
inline constexpr int kMaxAutM = 2;

enum class LemmaStatus { pass, fail, skipped };

std::string to_string(LemmaStatus s);

struct LemmaResult {
  LemmaStatus status = LemmaStatus::skipped;
  std::vector<std::string> diagnostics;
};

struct Certificate {
  int m = 0;
  std::uint64_t vertex_count = 0;
  std::uint64_t edge_count = 0;
  bool is_cubic = false;
  bool is_connected = false;
  std::optional<std::uint64_t> aut_order;
  std::optional<std::uint64_t> stab_order;
  std::optional<std::vector<std::uint64_t>> semiregular_spectrum;
  /// Generators of Aut as image arrays, when the group was computed.
  std::vector<std::vector<Vertex>> aut_generators;
  std::map<std::string, LemmaResult> lemma_results;
  std::vector<std::string> notes;
  std::string tool_version = kToolVersion;
};

/// Lemma ids accepted by the suite, in execution order.
const std::vector<std::string>& lemma_ids();

/// Expands "all" and validates ids; ParameterError on an unknown id.
std::vector<std::string> resolve_lemmas(const std::vector<std::string>& selectors);

/// Describes how coset vertices are numbered.
nlohmann::json vertex_numbering_descriptor(int m);

nlohmann::json to_json(const Certificate& cert);

bool all_passed(const Certificate& cert);

/// First failing lemma id, if any.
std::optional<std::string> first_failure(const Certificate& cert);

/// Coset labels "a^j b^eps v=[..] z^c" indexed by vertex, with the numbering
/// descriptor.
nlohmann::json label_map(const SemidirectGroup& grp);

/// Runs the selected lemma checks on gamma(m); m in [1, kMaxGraphM].
Certificate run_verification(int m, const std::vector<std::string>& lemmas, int threads = 1);

/// Vertex of the coset H·g.
Vertex coset_vertex(const SemidirectGroup& grp, const GElem& g);

/// The 14 vertices at distance at most 2 from H or Hab, as (label, element)
/// pairs in the drawing's order, and the 13 drawn edges as index pairs.
struct LocalPicture {
  std::vector<std::pair<std::string, GElem>> vertices;
  std::vector<std::pair<int, int>> edges;
};
LocalPicture local_picture(const SemidirectGroup& grp);

}  // namespace semireg
