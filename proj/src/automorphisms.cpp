#include "semireg/automorphisms.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace semireg {

namespace {

struct Coloring {
  std::vector<std::uint32_t> colors;
  std::uint32_t count = 0;
  /// Hash of every signature table seen while refining; isomorphic inputs
  /// produce equal traces.
  std::uint64_t trace = 0;
};

inline std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0x100000001b3ULL;
}

class Refiner {
 public:
  Refiner(const Graph& g, std::size_t budget) : g_(g), budget_(budget) {}

  std::size_t calls() const { return calls_; }

  Coloring refine(Coloring c) {
    if (++calls_ > budget_) throw CapacityError("automorphism search: refinement budget exhausted");
    const std::size_t n = g_.vertex_count();
    std::vector<std::uint32_t> order(n);
    std::vector<std::uint32_t> sig_offset(n + 1, 0);
    for (std::size_t v = 0; v < n; ++v) sig_offset[v + 1] = static_cast<std::uint32_t>(sig_offset[v] + 1 + g_.degree(static_cast<Vertex>(v)));
    std::vector<std::uint32_t> sig(sig_offset[n]);
    std::vector<std::uint32_t> next(n);
    for (;;) {
      for (std::size_t v = 0; v < n; ++v) {
        std::uint32_t* s = &sig[sig_offset[v]];
        s[0] = c.colors[v];
        std::size_t k = 1;
        for (Vertex u : g_.neighbors(static_cast<Vertex>(v))) s[k++] = c.colors[u];
        std::sort(s + 1, s + k);
      }
      auto sig_less = [&](std::uint32_t a, std::uint32_t b) {
        return std::lexicographical_compare(&sig[sig_offset[a]], &sig[sig_offset[a + 1]], &sig[sig_offset[b]],
                                            &sig[sig_offset[b + 1]]);
      };
      auto sig_equal = [&](std::uint32_t a, std::uint32_t b) {
        return std::equal(&sig[sig_offset[a]], &sig[sig_offset[a + 1]], &sig[sig_offset[b]], &sig[sig_offset[b + 1]]);
      };
      std::iota(order.begin(), order.end(), 0u);
      std::sort(order.begin(), order.end(), sig_less);

      std::uint32_t count = 0;
      std::uint64_t run = 0;
      for (std::size_t i = 0; i < n; ++i) {
        const bool fresh = i == 0 || !sig_equal(order[i - 1], order[i]);
        if (fresh) {
          if (i > 0) c.trace = mix(c.trace, run);
          ++count;
          run = 0;
          for (std::uint32_t k = sig_offset[order[i]]; k < sig_offset[order[i] + 1]; ++k) c.trace = mix(c.trace, sig[k]);
        }
        ++run;
        next[order[i]] = count - 1;
      }
      c.trace = mix(c.trace, run);
      c.trace = mix(c.trace, count);
      const bool stable = count == c.count;
      c.colors.swap(next);
      c.count = count;
      if (stable) break;
    }
    return c;
  }

  Coloring individualize(const Coloring& c, Vertex v) const {
    // v moves just ahead of the rest of its cell; later cells shift by one.
    Coloring r;
    r.colors.resize(c.colors.size());
    const std::uint32_t cv = c.colors[v];
    bool cell_has_others = false;
    for (std::size_t x = 0; x < c.colors.size(); ++x)
      if (x != v && c.colors[x] == cv) cell_has_others = true;
    for (std::size_t x = 0; x < c.colors.size(); ++x) {
      const std::uint32_t col = c.colors[x];
      r.colors[x] = (col > cv || (col == cv && x != v && cell_has_others)) ? col + 1 : col;
    }
    r.count = c.count + (cell_has_others ? 1 : 0);
    r.trace = mix(c.trace, cv);
    return r;
  }

  /// Smallest non-singleton cell, lowest color on ties; -1 if discrete.
  std::int64_t target_cell(const Coloring& c) const {
    if (c.count == c.colors.size()) return -1;
    std::vector<std::uint32_t> sizes(c.count, 0);
    for (auto col : c.colors) ++sizes[col];
    std::int64_t best = -1;
    for (std::uint32_t k = 0; k < c.count; ++k)
      if (sizes[k] > 1 && (best < 0 || sizes[k] < sizes[static_cast<std::size_t>(best)])) best = k;
    return best;
  }

  std::vector<Vertex> cell(const Coloring& c, std::uint32_t color) const {
    std::vector<Vertex> out;
    for (std::size_t x = 0; x < c.colors.size(); ++x)
      if (c.colors[x] == color) out.push_back(static_cast<Vertex>(x));
    return out;
  }

  /// Looks for an automorphism matching the left coloring onto the right one.
  std::optional<Permutation> extend(const Coloring& left, const Coloring& right) {
    const std::int64_t target = target_cell(left);
    if (target < 0) {
      std::vector<Vertex> by_color(left.count);
      for (std::size_t x = 0; x < right.colors.size(); ++x) by_color[right.colors[x]] = static_cast<Vertex>(x);
      std::vector<Point> images(left.colors.size());
      for (std::size_t x = 0; x < left.colors.size(); ++x) images[x] = by_color[left.colors[x]];
      Permutation p(std::move(images));
      if (is_automorphism(g_, p)) return p;
      return std::nullopt;
    }
    const auto color = static_cast<std::uint32_t>(target);
    const Vertex v = cell(left, color).front();
    const Coloring left_child = refine(individualize(left, v));
    for (Vertex w : cell(right, color)) {
      const Coloring right_child = refine(individualize(right, w));
      if (right_child.trace != left_child.trace || right_child.count != left_child.count) continue;
      if (auto p = extend(left_child, right_child)) return p;
    }
    return std::nullopt;
  }

 private:
  const Graph& g_;
  std::size_t budget_;
  std::size_t calls_ = 0;
};

bool is_power_of_two(std::uint64_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace

std::vector<std::uint32_t> refine_coloring(const Graph& g, std::vector<std::uint32_t> colors) {
  if (colors.size() != g.vertex_count()) throw ParameterError("refine_coloring: size mismatch");
  Coloring c;
  std::uint32_t max_color = 0;
  for (auto col : colors) max_color = std::max(max_color, col);
  c.count = colors.empty() ? 0 : max_color + 1;
  c.colors = std::move(colors);
  Refiner r(g, SIZE_MAX);
  return r.refine(std::move(c)).colors;
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.degree() != g.vertex_count()) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    if (g.degree(u) != g.degree(p(u))) return false;
    for (Vertex v : g.neighbors(u))
      if (u < v && !g.adjacent(p(u), p(v))) return false;
  }
  return true;
}

AutomorphismSearch search_automorphisms(const Graph& g, const AutomorphismOptions& opts) {
  const std::size_t n = g.vertex_count();
  if (n > opts.max_vertices)
    throw CapacityError("graph_automorphisms: " + std::to_string(n) + " vertices exceeds the limit of " +
                        std::to_string(opts.max_vertices));
  Refiner refiner(g, opts.node_budget);

  // First path: individualize the lowest vertex of the target cell until discrete.
  std::vector<Coloring> path;
  std::vector<Vertex> base;
  {
    Coloring unit;
    unit.colors.assign(n, 0);
    unit.count = n ? 1 : 0;
    path.push_back(refiner.refine(std::move(unit)));
  }
  for (;;) {
    const std::int64_t target = refiner.target_cell(path.back());
    if (target < 0) break;
    const Vertex b = refiner.cell(path.back(), static_cast<std::uint32_t>(target)).front();
    base.push_back(b);
    path.push_back(refiner.refine(refiner.individualize(path.back(), b)));
  }

  std::vector<Permutation> gens;
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto absorb = [&](const Permutation& p) {
    for (std::uint32_t x = 0; x < n; ++x) {
      const auto a = find(x), b = find(p(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  };

  std::vector<std::size_t> orbit_sizes(base.size(), 1);
  for (std::size_t level = base.size(); level-- > 0;) {
    const Coloring& here = path[level];
    const Vertex b = base[level];
    try {
      for (Vertex w : refiner.cell(here, here.colors[b])) {
        if (find(w) == find(b)) continue;
        const Coloring right = refiner.refine(refiner.individualize(here, w));
        if (right.trace != path[level + 1].trace || right.count != path[level + 1].count) continue;
        if (auto p = refiner.extend(path[level + 1], right)) {
          absorb(*p);
          gens.push_back(std::move(*p));
        }
      }
    } catch (const CapacityError& e) {
      std::ostringstream os;
      os << e.what() << " at level " << level << " of " << base.size() << "; orbit sizes of completed levels:";
      for (std::size_t l = level + 1; l < base.size(); ++l) os << ' ' << orbit_sizes[l];
      os << "; generators found: " << gens.size();
      throw CapacityError(os.str());
    }
    const auto root = find(b);
    std::size_t size = 0;
    for (std::uint32_t x = 0; x < n; ++x)
      if (find(x) == root) ++size;
    orbit_sizes[level] = size;
  }

  std::sort(gens.begin(), gens.end());
  std::vector<Point> base_points(base.begin(), base.end());
  PermGroup group(n, std::move(gens), base_points);
  std::uint64_t product = 1;
  for (auto s : orbit_sizes) product *= s;
  if (group.order() != product) throw ContractViolation("graph_automorphisms: stabilizer chain disagrees with search orbits");
  return {std::move(group), std::move(base), std::move(orbit_sizes), refiner.calls()};
}

PermGroup graph_automorphisms(const Graph& g, const AutomorphismOptions& opts) {
  return search_automorphisms(g, opts).group;
}

StabilizerAnalysis stabilizer_analysis(const PermGroup& gp, const Graph& g, Vertex vertex) {
  if (gp.degree() != g.vertex_count()) throw ParameterError("stabilizer_analysis: degree mismatch");
  if (vertex >= g.vertex_count()) throw ParameterError("stabilizer_analysis: vertex out of range");
  StabilizerAnalysis r;
  r.vertex = vertex;
  const PermGroup stab = gp.point_stabilizer(vertex);
  r.stab_order = stab.order();
  if (r.stab_order * gp.orbit(vertex).size() != gp.order())
    throw ContractViolation("stabilizer_analysis: orbit-stabilizer mismatch");

  const auto nb = g.neighbors(vertex);
  const std::size_t d = nb.size();
  auto local_index = [&](Vertex u) {
    const auto it = std::lower_bound(nb.begin(), nb.end(), u);
    if (it == nb.end() || *it != u) throw ParameterError("stabilizer_analysis: group does not preserve adjacency");
    return static_cast<Point>(it - nb.begin());
  };
  std::vector<Permutation> local_gens;
  for (const auto& s : stab.generators()) {
    std::vector<Point> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = local_index(s(nb[i]));
    local_gens.emplace_back(std::move(images));
  }
  const PermGroup local(d, std::move(local_gens));
  r.local_action_size = local.order();
  r.kernel_order = r.stab_order / r.local_action_size;
  r.stab_is_2group = is_power_of_two(r.stab_order);
  r.kernel_is_2group = is_power_of_two(r.kernel_order);
  r.local_action_transitive = d == 0 || local.orbit(0).size() == d;
  return r;
}

SemiregularSpectrum semiregular_elements(const PermGroup& gp, std::uint64_t budget) {
  const std::uint64_t order = gp.order();
  if (order > budget)
    throw CapacityError("semiregular_elements: group order " + std::to_string(order) + " exceeds budget " +
                        std::to_string(budget));
  SemiregularSpectrum s;
  gp.for_each_element([&](const Permutation& p) {
    ++s.elements_scanned;
    const auto lengths = p.cycle_lengths();
    if (!lengths.empty() && lengths.front() != lengths.back()) return;
    ++s.semiregular_count;
    s.orders.insert(lengths.empty() ? 1 : lengths.front());
  });
  return s;
}

TransitiveGenerators find_transitive_generators(const Graph& g, const PermGroup& gp, Vertex alpha) {
  if (gp.degree() != g.vertex_count()) throw ParameterError("find_transitive_generators: degree mismatch");
  if (!gp.is_transitive()) throw ParameterError("find_transitive_generators: group is not transitive");
  const PermGroup rebased(gp.degree(), gp.generators(), {alpha});
  TransitiveGenerators r;
  for (Vertex beta : g.neighbors(alpha)) {
    auto p = rebased.find_mapping(alpha, beta);
    if (!p) throw ContractViolation("find_transitive_generators: transitive group without a mapping");
    r.elements.push_back(std::move(*p));
  }
  r.transitive = g.vertex_count() == 0 || PermGroup(gp.degree(), r.elements).orbit(alpha).size() == g.vertex_count();
  return r;
}

ArcTransitiveGenerators find_arc_transitive_generators(const Graph& g, const PermGroup& gp, Vertex alpha) {
  ArcTransitiveGenerators r;
  const TransitiveGenerators base = find_transitive_generators(g, gp, alpha);
  const auto nb = g.neighbors(alpha);
  if (nb.empty()) {
    r.reason = "vertex has no neighbors";
    return r;
  }
  const PermGroup stab = gp.point_stabilizer(alpha);
  const PermGroup stab_rebased(stab.degree(), stab.generators(), {nb.front()});
  std::vector<Permutation> local;
  for (Vertex beta : nb) {
    auto x = stab_rebased.find_mapping(nb.front(), beta);
    if (!x) {
      r.reason = "the stabilizer of vertex " + std::to_string(alpha) + " is intransitive on its neighbourhood";
      return r;
    }
    if (!x->is_identity()) local.push_back(std::move(*x));
  }
  r.available = true;
  r.elements = base.elements;
  r.elements.insert(r.elements.end(), local.begin(), local.end());
  const PermGroup k(gp.degree(), r.elements);
  const PermGroup k_alpha = k.point_stabilizer(alpha);
  const auto local_orbit = k_alpha.orbit(nb.front());
  r.arc_transitive = k.is_transitive() &&
                     std::all_of(nb.begin(), nb.end(), [&](Vertex beta) {
                       return std::binary_search(local_orbit.begin(), local_orbit.end(), beta);
                     });
  return r;
}

Permutation coset_permutation(const SemidirectGroup& grp, const GElem& g) {
  const std::size_t n = grp.coset_count();
  std::vector<Point> images(n);
  for (std::size_t v = 0; v < n; ++v)
    images[v] = static_cast<Point>(coset_number(grp, coset_act(grp, coset_from_number(grp, v), g)));
  return Permutation(std::move(images));
}

PermGroup verify_subgroup_action(const SemidirectGroup& grp, const Graph& g, const std::vector<GElem>& gens) {
  if (g.vertex_count() != grp.coset_count()) throw ParameterError("verify_subgroup_action: graph is not labeled by cosets");
  std::vector<Permutation> perms;
  for (const auto& x : gens) {
    Permutation p = coset_permutation(grp, x);
    if (!is_automorphism(g, p))
      throw ContractViolation("verify_subgroup_action: " + to_string(grp, x) + " does not preserve adjacency");
    perms.push_back(std::move(p));
  }
  return PermGroup(g.vertex_count(), std::move(perms));
}

}  // namespace semireg
