#include "semireg/graphs.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <queue>
#include <sstream>
#include <thread>

namespace semireg {

Graph Graph::from_adjacency(std::vector<std::vector<Vertex>> adj) {
  Graph g;
  const std::size_t n = adj.size();
  g.offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    auto& list = adj[v];
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size(); ++i) {
      if (list[i] >= n) throw ConstructionError("graph: neighbor out of range at vertex " + std::to_string(v));
      if (list[i] == v) throw ConstructionError("graph: loop at vertex " + std::to_string(v));
      if (i > 0 && list[i] == list[i - 1])
        throw ConstructionError("graph: repeated neighbor " + std::to_string(list[i]) + " at vertex " + std::to_string(v));
    }
    g.offsets_[v + 1] = g.offsets_[v] + list.size();
  }
  g.targets_.reserve(g.offsets_[n]);
  for (const auto& list : adj) g.targets_.insert(g.targets_.end(), list.begin(), list.end());
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : g.neighbors(v))
      if (!g.adjacent(u, v))
        throw ConstructionError("graph: arc " + std::to_string(v) + "->" + std::to_string(u) + " has no reverse");
  return g;
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  std::vector<std::vector<Vertex>> adj(n);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw ConstructionError("graph: edge endpoint out of range");
    if (u == v) throw ConstructionError("graph: loop at vertex " + std::to_string(u));
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return from_adjacency(std::move(adj));
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : neighbors(u))
      if (u < v) out.emplace_back(u, v);
  return out;
}

Partition Partition::from_labels(std::vector<std::uint32_t> labels) {
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (auto& l : labels) {
    auto [it, inserted] = renumber.emplace(l, static_cast<std::uint32_t>(renumber.size()));
    l = it->second;
  }
  return {std::move(labels), static_cast<std::uint32_t>(renumber.size())};
}

Partition Partition::singletons(std::size_t n) {
  Partition p;
  p.block.resize(n);
  std::iota(p.block.begin(), p.block.end(), 0u);
  p.block_count = static_cast<std::uint32_t>(n);
  return p;
}

Partition Partition::whole(std::size_t n) {
  return {std::vector<std::uint32_t>(n, 0u), n ? 1u : 0u};
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes(block_count, 0);
  for (auto b : block) ++sizes[b];
  return sizes;
}

namespace {

std::vector<int> bfs_distances(const Graph& g, const std::vector<Vertex>& sources, int limit) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  for (Vertex s : sources) {
    if (s >= g.vertex_count()) throw ParameterError("vertex out of range");
    if (dist[s] == 0) continue;
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    const Vertex v = q.front();
    q.pop();
    if (limit >= 0 && dist[v] >= limit) continue;
    for (Vertex u : g.neighbors(v)) {
      if (dist[u] >= 0) continue;
      dist[u] = dist[v] + 1;
      q.push(u);
    }
  }
  return dist;
}

}  // namespace

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  const auto dist = bfs_distances(g, {0}, -1);
  return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0; });
}

std::vector<std::size_t> degree_sequence(const Graph& g) {
  std::vector<std::size_t> deg(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
  std::sort(deg.begin(), deg.end());
  return deg;
}

bool is_regular(const Graph& g, std::size_t k) {
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    if (g.degree(v) != k) return false;
  return true;
}

Graph coset_graph(const SemidirectGroup& grp, const std::vector<GElem>& connection, int threads) {
  const std::size_t n = grp.coset_count();
  const auto hs = h_elements(grp);
  // Coset H g is joined to H s h g for all h in H.
  std::vector<GElem> multipliers;
  for (const auto& s : connection)
    for (const auto& h : hs) multipliers.push_back(g_mul(grp, s, h));

  std::vector<std::vector<Vertex>> adj(n);
  auto work = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t v = lo; v < hi; ++v) {
      const GElem rep = coset_rep(coset_from_number(grp, v));
      auto& list = adj[v];
      for (const auto& s : multipliers)
        list.push_back(static_cast<Vertex>(coset_number(grp, canonical_coset(grp, g_mul(grp, s, rep)))));
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
    }
  };
  threads = std::max(1, threads);
  if (threads == 1) {
    work(0, n);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, n * t / threads, n * (t + 1) / threads);
  }

  for (std::size_t v = 0; v < n; ++v) {
    for (Vertex u : adj[v]) {
      const auto label = [&](std::size_t x) { return to_string(grp, coset_from_number(grp, x)); };
      if (u == v) throw ConstructionError("coset_graph: loop at coset " + label(v));
      if (!std::binary_search(adj[u].begin(), adj[u].end(), static_cast<Vertex>(v)))
        throw ConstructionError("coset_graph: arc (" + label(v) + ") -> (" + label(u) + ") has no reverse arc");
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

std::vector<GElem> gamma_connection(const SemidirectGroup& grp) {
  const GElem b = g_b(grp);
  const GElem v1 = g_from_v(v_gen(grp.vctx(), 1));
  const GElem v1_inv = g_from_v(v_inv(grp.vctx(), v_gen(grp.vctx(), 1)));
  return {g_mul(grp, g_a(grp), b), g_mul(grp, b, v1), g_mul(grp, b, v1_inv)};
}

Graph gamma(const SemidirectGroup& grp, int threads) {
  if (grp.m() > 3) throw CapacityError("gamma: explicit construction limited to m <= 3");
  Graph g = coset_graph(grp, gamma_connection(grp), threads);
  std::uint64_t expected = std::uint64_t{1} << (grp.m() + 1);
  expected *= grp.vctx().order_V();
  if (g.vertex_count() != expected) throw ContractViolation("gamma: unexpected vertex count");
  if (!is_regular(g, 3)) throw ContractViolation("gamma: graph is not cubic");
  if (!is_connected(g)) throw ContractViolation("gamma: graph is not connected");
  return g;
}

std::vector<std::vector<Vertex>> cycles_through(const Graph& g, const std::vector<Vertex>& required, int length) {
  if (required.empty()) throw ParameterError("cycles_through: no required vertex");
  if (required.size() > 3) throw ParameterError("cycles_through: at most three required vertices");
  if (length < 3 || length > 12) throw ParameterError("cycles_through: length must lie in [3, 12]");
  for (std::size_t i = 0; i < required.size(); ++i) {
    if (required[i] >= g.vertex_count()) throw ParameterError("cycles_through: vertex out of range");
    for (std::size_t j = 0; j < i; ++j)
      if (required[i] == required[j]) throw ParameterError("cycles_through: required vertices repeat");
  }

  const Vertex start = required[0];
  const auto dist = bfs_distances(g, {start}, length / 2 + 1);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> path{start};
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[start] = 1;

  auto contains_required = [&]() {
    return std::all_of(required.begin(), required.end(),
                       [&](Vertex r) { return std::find(path.begin(), path.end(), r) != path.end(); });
  };

  std::function<void()> extend = [&]() {
    const Vertex v = path.back();
    const int steps = static_cast<int>(path.size());
    if (steps == length) {
      if (g.adjacent(v, start) && path[1] < path.back() && contains_required()) out.push_back(path);
      return;
    }
    for (Vertex u : g.neighbors(v)) {
      if (on_path[u]) continue;
      // From u, length - steps edges remain to close the cycle.
      if (dist[u] < 0 || dist[u] > length - steps) continue;
      on_path[u] = 1;
      path.push_back(u);
      extend();
      path.pop_back();
      on_path[u] = 0;
    }
  };
  extend();
  std::sort(out.begin(), out.end());
  return out;
}

bool same_cycle(const std::vector<Vertex>& cycle, const std::vector<Vertex>& pattern) {
  if (cycle.size() != pattern.size()) return false;
  const std::size_t n = cycle.size();
  if (n == 0) return true;
  for (std::size_t shift = 0; shift < n; ++shift) {
    bool fwd = true, bwd = true;
    for (std::size_t i = 0; i < n && (fwd || bwd); ++i) {
      if (cycle[(shift + i) % n] != pattern[i]) fwd = false;
      if (cycle[(shift + n - i) % n] != pattern[i]) bwd = false;
    }
    if (fwd || bwd) return true;
  }
  return false;
}

Subgraph ball(const Graph& g, const std::vector<Vertex>& centers, int radius) {
  if (radius < 0) throw ParameterError("ball: negative radius");
  if (centers.empty()) throw ParameterError("ball: no center");
  const auto dist = bfs_distances(g, centers, radius);
  Subgraph sub;
  std::vector<Vertex> local(g.vertex_count(), 0);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (dist[v] < 0) continue;
    local[v] = static_cast<Vertex>(sub.vertices.size());
    sub.vertices.push_back(v);
  }
  std::vector<std::vector<Vertex>> adj(sub.vertices.size());
  for (std::size_t i = 0; i < sub.vertices.size(); ++i)
    for (Vertex u : g.neighbors(sub.vertices[i]))
      if (dist[u] >= 0) adj[i].push_back(local[u]);
  sub.graph = Graph::from_adjacency(std::move(adj));
  return sub;
}

QuotientResult normal_quotient(const Graph& g, const Partition& p) {
  if (p.block.size() != g.vertex_count()) throw ParameterError("normal_quotient: partition size mismatch");
  for (auto b : p.block)
    if (b >= p.block_count) throw ParameterError("normal_quotient: block id out of range");
  const auto sizes = p.block_sizes();
  if (std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s == 0; }))
    throw ParameterError("normal_quotient: empty block");

  QuotientResult r;
  std::vector<Edge> crossing;
  for (const auto& [u, v] : g.edges()) {
    const Vertex bu = p.block[u], bv = p.block[v];
    if (bu == bv) {
      ++r.dropped_internal;
      continue;
    }
    crossing.emplace_back(std::min(bu, bv), std::max(bu, bv));
  }
  std::sort(crossing.begin(), crossing.end());
  const auto last = std::unique(crossing.begin(), crossing.end());
  r.collapsed_multiplicity = static_cast<std::size_t>(crossing.end() - last);
  crossing.erase(last, crossing.end());
  r.graph = Graph::from_edges(p.block_count, crossing);
  return r;
}

Partition orbit_partition(const SemidirectGroup& grp, std::size_t vertex_count, const std::vector<GElem>& gens) {
  if (vertex_count != grp.coset_count()) throw ParameterError("orbit_partition: graph is not labeled by cosets");
  std::vector<std::uint32_t> parent(vertex_count);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const CosetIndex w = coset_from_number(grp, v);
    for (const auto& s : gens) {
      const auto u = static_cast<std::uint32_t>(coset_number(grp, coset_act(grp, w, s)));
      const auto a = find(static_cast<std::uint32_t>(v)), b = find(u);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> labels(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) labels[v] = find(static_cast<std::uint32_t>(v));
  return Partition::from_labels(std::move(labels));
}

void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

Graph read_edge_list(std::istream& is) {
  std::size_t n = 0, e = 0;
  if (!(is >> n >> e)) throw ParameterError("edge list: missing header \"n e\"");
  std::vector<Edge> edges;
  edges.reserve(e);
  for (std::size_t i = 0; i < e; ++i) {
    long long u = 0, v = 0;
    if (!(is >> u >> v)) throw ParameterError("edge list: expected " + std::to_string(e) + " edges, read " + std::to_string(i));
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n || static_cast<std::size_t>(v) >= n)
      throw ParameterError("edge list: endpoint out of range on edge " + std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const ConstructionError& err) {
    throw ParameterError(std::string("edge list: ") + err.what());
  }
}

}  // namespace semireg
