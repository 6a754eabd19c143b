#include "semireg/certificate.hpp"

#include <algorithm>
#include <set>

#include "semireg/automorphisms.hpp"
#include "semireg/errors.hpp"
#include "semireg/ff3.hpp"

namespace semireg {

namespace {

std::uint64_t expected_vertex_count(const SemidirectGroup& grp) {
  return (std::uint64_t{1} << (grp.m() + 1)) * grp.vctx().order_V();
}

bool is_power_of(std::uint64_t v, std::uint64_t p) {
  if (v == 0) return false;
  while (v % p == 0) v /= p;
  return v == 1;
}

std::string join(const std::set<std::uint64_t>& s) {
  std::string out = "{";
  for (auto it = s.begin(); it != s.end(); ++it) out += (it == s.begin() ? "" : ",") + std::to_string(*it);
  return out + "}";
}

/// Collects named boolean checks and turns them into a lemma result.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    result_.diagnostics.push_back(std::string(ok ? "ok: " : "FAILED: ") + what);
    failed_ = failed_ || !ok;
  }
  void note(const std::string& what) { result_.diagnostics.push_back(what); }
  LemmaResult finish() {
    result_.status = failed_ ? LemmaStatus::fail : LemmaStatus::pass;
    return std::move(result_);
  }

 private:
  LemmaResult result_;
  bool failed_ = false;
};

LemmaResult skipped(const std::string& reason) {
  LemmaResult r;
  r.status = LemmaStatus::skipped;
  r.diagnostics.push_back(reason);
  return r;
}

/// State shared by the lemma checks of one run.
struct Session {
  explicit Session(int m, int threads) : grp(m), threads(threads) {}

  const PermGroup& aut() {
    if (!aut_group) aut_group = graph_automorphisms(graph);
    return *aut_group;
  }
  const InvolutionClass& involutions() {
    if (!cls) cls.emplace(grp);
    return *cls;
  }
  Vertex h_vertex() const { return coset_vertex(grp, g_identity(grp)); }

  SemidirectGroup grp;
  int threads;
  Graph graph;
  std::optional<PermGroup> aut_group;
  std::optional<InvolutionClass> cls;
};

LemmaResult check_construction(Session& s) {
  const SemidirectGroup& grp = s.grp;
  const GroupContext& ctx = grp.vctx();
  Checks c;
  const std::uint64_t n = expected_vertex_count(grp);
  c.expect(s.graph.vertex_count() == n, "vertex count " + std::to_string(s.graph.vertex_count()) + " = " +
                                              std::to_string(n));
  c.expect(s.graph.edge_count() == 3 * n / 2, "edge count " + std::to_string(s.graph.edge_count()));
  c.expect(is_regular(s.graph, 3), "cubic");
  c.expect(is_connected(s.graph), "connected");

  const VAut a = aut_a(ctx);
  const VAut b = aut_b(ctx);
  c.expect(verify_relations(ctx, a), "a preserves the relations of V");
  c.expect(verify_relations(ctx, b), "b preserves the relations of V");
  c.expect(aut_order(ctx, a) == grp.a_order(), "a has order " + std::to_string(aut_order(ctx, a)));
  c.expect(aut_order(ctx, b) == 2, "b has order " + std::to_string(aut_order(ctx, b)));
  c.expect(aut_compose(ctx, aut_compose(ctx, b, a), b) == aut_power(ctx, a, grp.a_order() - 1),
           "bab = a^-1 on V");

  const GElem ga = g_a(grp);
  const GElem gb = g_b(grp);
  c.expect(g_mul(grp, g_mul(grp, gb, ga), gb) == g_inv(grp, ga), "bab = a^-1 in G");
  for (const GElem& x : gamma_connection(grp))
    c.expect(is_identity(g_mul(grp, x, x)), "(" + to_string(grp, x) + ")^2 = 1");
  return c.finish();
}

LemmaResult check_local_structure(Session& s) {
  if (s.grp.m() > kMaxAutM)
    return skipped("capacity: automorphism search is limited to m <= " + std::to_string(kMaxAutM));
  Checks c;
  const StabilizerAnalysis st = stabilizer_analysis(s.aut(), s.graph, s.h_vertex());
  c.expect(st.stab_order == 2, "|A_H| = " + std::to_string(st.stab_order));
  c.expect(st.stab_is_2group, "A_H is a 2-group");
  c.expect(!st.local_action_transitive, "A_H is intransitive on the neighbors of H");
  const std::uint64_t index = s.aut().order() / s.grp.order();
  c.expect(s.aut().order() % s.grp.order() == 0 && is_power_of(index, 2), "|A:G| is a power of 2");
  return c.finish();
}

LemmaResult check_aut(Session& s, Certificate& cert) {
  if (s.grp.m() > kMaxAutM)
    return skipped("capacity: automorphism search is limited to m <= " + std::to_string(kMaxAutM));
  Checks c;
  const PermGroup& aut = s.aut();
  const std::uint64_t expected = s.grp.order();
  c.expect(aut.order() == expected, "|Aut| = " + std::to_string(aut.order()) + ", |G| = " + std::to_string(expected));
  const PermGroup g_action = verify_subgroup_action(s.grp, s.graph, g_generators(s.grp));
  c.expect(g_action.order() == expected, "G acts faithfully on the cosets");
  bool members = true;
  for (const auto& p : g_action.generators()) members = members && aut.contains(p);
  c.expect(members, "every generator of G lies in Aut");
  cert.aut_order = aut.order();
  cert.aut_generators.clear();
  for (const auto& p : aut.generators())
    cert.aut_generators.emplace_back(p.images().begin(), p.images().end());
  return c.finish();
}

LemmaResult check_semiregular(Session& s, Certificate& cert) {
  Checks c;
  const SemiregSpectrum spectrum = max_semiregular_order(s.grp, s.involutions(), s.threads);
  std::set<std::uint64_t> orders(spectrum.orders.begin(), spectrum.orders.end());
  const std::set<std::uint64_t> allowed{1, 2, 3, 6};
  c.expect(std::includes(allowed.begin(), allowed.end(), orders.begin(), orders.end()),
           "semiregular orders " + join(orders) + " lie in {1,2,3,6}");
  c.note("elements scanned " + std::to_string(spectrum.elements_scanned) + ", semiregular " +
         std::to_string(spectrum.semiregular_count));
  cert.semiregular_spectrum = std::vector<std::uint64_t>(orders.begin(), orders.end());
  if (s.grp.m() == 1) {
    const PermGroup g_action = verify_subgroup_action(s.grp, s.graph, g_generators(s.grp));
    const SemiregularSpectrum by_cycles = semiregular_elements(g_action);
    c.expect(by_cycles.orders == orders, "cycle-type spectrum " + join(by_cycles.orders) + " matches");
    bool agree = true;
    for (std::uint64_t code = 0; code < s.grp.order(); ++code) {
      const GElem g = g_from_code(s.grp, code);
      if (is_identity(g)) continue;
      agree = agree && fixed_point_free(s.grp, s.involutions(), g) == fixed_point_free_by_scan(s.grp, g);
    }
    c.expect(agree, "conjugacy criterion agrees with the coset scan on all of G");
  }
  return c.finish();
}

LemmaResult check_qirr(Session& s) {
  const GroupContext& ctx = s.grp.vctx();
  const int n = ctx.dim();
  Checks c;
  const F3Matrix A = matrix_on_W(ctx, aut_a(ctx));
  const F3Matrix B = matrix_on_W(ctx, aut_b(ctx));
  c.expect(is_irreducible({A, B}), "Q acts irreducibly on W");
  const F3Poly target = F3Poly::monomial(n) + F3Poly::constant(F3(1));
  const F3Poly chi = char_poly(A);
  c.expect(chi == target, "char poly of a is " + to_string(chi));
  if (s.grp.m() >= 2) {
    const int h = n / 2, q = n / 4;
    const F3Poly plus = F3Poly::monomial(h) + F3Poly::monomial(q) - F3Poly::constant(F3(1));
    const F3Poly minus = F3Poly::monomial(h) - F3Poly::monomial(q) - F3Poly::constant(F3(1));
    c.expect(poly_mul(plus, minus) == target, "(" + to_string(plus) + ")(" + to_string(minus) + ") = " +
                                                  to_string(target));
    const F3Matrix I = F3Matrix::Identity(n, n);
    const F3Matrix Ah = matrix_power(A, static_cast<unsigned long long>(h));
    const F3Matrix Aq = matrix_power(A, static_cast<unsigned long long>(q));
    const auto w_plus = kernel(F3Matrix(Ah + Aq - I));
    const auto w_minus = kernel(F3Matrix(Ah - Aq - I));
    c.expect(static_cast<int>(w_plus.size()) == h, "dim W+ = " + std::to_string(w_plus.size()));
    c.expect(static_cast<int>(w_minus.size()) == h, "dim W- = " + std::to_string(w_minus.size()));
    auto both = w_plus;
    both.insert(both.end(), w_minus.begin(), w_minus.end());
    c.expect(span_dimension(both, n) == n, "W = W+ + W- (direct)");
    std::vector<F3Vec> image;
    for (const auto& w : w_plus) image.push_back(B * w);
    c.expect(same_span(image, w_minus, n), "b maps W+ onto W-");
  }
  return c.finish();
}

LemmaResult check_figure1(Session& s) {
  const SemidirectGroup& grp = s.grp;
  const GroupContext& ctx = grp.vctx();
  Checks c;
  auto vx = [&](const GElem& g) { return coset_vertex(grp, g); };
  const GElem b = g_b(grp);
  const GElem v1 = g_from_v(v_gen(ctx, 1));
  const GElem v1i = g_from_v(v_inv(ctx, v_gen(ctx, 1)));
  const GElem ab = g_mul(grp, g_a(grp), b);
  const GElem bv1 = g_mul(grp, b, v1);
  const GElem bv1i = g_mul(grp, b, v1i);
  const Vertex h = s.h_vertex();

  const std::vector<Vertex> shown{h, vx(bv1), vx(v1i), vx(b), vx(v1), vx(bv1i)};
  const auto through = cycles_through(s.graph, {h, vx(bv1), vx(bv1i)}, 6);
  const bool present =
      std::any_of(through.begin(), through.end(), [&](const auto& cyc) { return same_cycle(cyc, shown); });
  c.expect(present, "6-cycle (H, Hbv1, Hv1^-1, Hb, Hv1, Hbv1^-1) exists");
  const auto blocked = cycles_through(s.graph, {h, vx(ab), vx(bv1)}, 6);
  c.expect(blocked.empty(), "no 6-cycle contains H, Hab, Hbv1 (found " + std::to_string(blocked.size()) + ")");

  const LocalPicture pic = local_picture(grp);
  std::vector<Vertex> drawn;
  for (const auto& [label, g] : pic.vertices) drawn.push_back(vx(g));
  std::set<Vertex> distinct(drawn.begin(), drawn.end());
  c.expect(distinct.size() == pic.vertices.size(), "the 14 drawn cosets are distinct");
  const Subgraph near = ball(s.graph, {h, vx(ab)}, 2);
  const std::set<Vertex> near_set(near.vertices.begin(), near.vertices.end());
  c.expect(near_set == distinct, "ball of radius 2 about H and Hab is the drawn vertex set");
  bool edges_ok = true;
  for (const auto& [i, j] : pic.edges) {
    const bool e = s.graph.adjacent(drawn[static_cast<std::size_t>(i)], drawn[static_cast<std::size_t>(j)]);
    if (!e) c.note("missing edge " + pic.vertices[static_cast<std::size_t>(i)].first + " - " +
                   pic.vertices[static_cast<std::size_t>(j)].first);
    edges_ok = edges_ok && e;
  }
  c.expect(edges_ok, "the 13 drawn edges are present");
  c.note("induced subgraph has " + std::to_string(near.graph.edge_count()) + " edges");
  return c.finish();
}

LemmaResult check_stabilizer(Session& s, Certificate& cert) {
  if (s.grp.m() > kMaxAutM)
    return skipped("capacity: automorphism search is limited to m <= " + std::to_string(kMaxAutM));
  Checks c;
  const StabilizerAnalysis st = stabilizer_analysis(s.aut(), s.graph, s.h_vertex());
  cert.stab_order = st.stab_order;
  c.expect(st.stab_order == st.local_action_size * st.kernel_order,
           "stab order " + std::to_string(st.stab_order) + " = local " + std::to_string(st.local_action_size) +
               " x kernel " + std::to_string(st.kernel_order));
  c.expect(st.kernel_is_2group, "pointwise neighborhood stabilizer is a 2-group");
  c.expect(st.stab_is_2group || st.local_action_transitive, "A_H is a 2-group or the graph is arc-transitive");
  c.expect(st.stab_order * s.graph.vertex_count() == s.aut().order(), "orbit-stabilizer");
  return c.finish();
}

}  // namespace

std::string to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::pass: return "pass";
    case LemmaStatus::fail: return "fail";
    case LemmaStatus::skipped: return "skipped";
  }
  return "unknown";
}

const std::vector<std::string>& lemma_ids() {
  static const std::vector<std::string> ids{"1", "2", "4", "semireg", "qirr", "figure1", "stab"};
  return ids;
}

std::vector<std::string> resolve_lemmas(const std::vector<std::string>& selectors) {
  std::set<std::string> chosen;
  for (const auto& s : selectors) {
    if (s == "all") {
      chosen.insert(lemma_ids().begin(), lemma_ids().end());
      continue;
    }
    if (std::find(lemma_ids().begin(), lemma_ids().end(), s) == lemma_ids().end())
      throw ParameterError("unknown lemma id '" + s + "'");
    chosen.insert(s);
  }
  std::vector<std::string> out;
  for (const auto& id : lemma_ids())
    if (chosen.contains(id)) out.push_back(id);
  return out;
}

Vertex coset_vertex(const SemidirectGroup& grp, const GElem& g) {
  return static_cast<Vertex>(coset_number(grp, canonical_coset(grp, g)));
}

LocalPicture local_picture(const SemidirectGroup& grp) {
  const GroupContext& ctx = grp.vctx();
  const int n = ctx.dim();
  const std::string vn = "v_" + std::to_string(n);
  const GElem a = g_a(grp);
  const GElem a2 = g_a(grp, 2);
  const GElem a_inv = g_a(grp, grp.a_order() - 1);
  const GElem b = g_b(grp);
  const GElem v1 = g_from_v(v_gen(ctx, 1));
  const GElem v1i = g_from_v(v_inv(ctx, v_gen(ctx, 1)));
  const GElem w = g_from_v(v_gen(ctx, n));
  const GElem wi = g_from_v(v_inv(ctx, v_gen(ctx, n)));
  auto mul = [&](std::initializer_list<GElem> xs) {
    GElem r = g_identity(grp);
    for (const auto& x : xs) r = g_mul(grp, r, x);
    return r;
  };
  LocalPicture pic;
  pic.vertices = {
      {"1", g_identity(grp)},
      {"ab", mul({a, b})},
      {"bv_1", mul({b, v1})},
      {"bv_1^-1", mul({b, v1i})},
      {"v_1", v1},
      {"av_1^-1", mul({a, v1i})},
      {"v_1^-1", v1i},
      {"av_1", mul({a, v1})},
      {"a^-1" + vn, mul({a_inv, w})},
      {"a^-1" + vn + "^-1", mul({a_inv, wi})},
      {"ab" + vn + "^-1", mul({a, b, wi})},
      {"a^2b" + vn, mul({a2, b, w})},
      {"a^2b" + vn + "^-1", mul({a2, b, wi})},
      {"ab" + vn, mul({a, b, w})},
  };
  pic.edges = {{0, 1}, {1, 8}, {1, 9}, {8, 10}, {8, 11}, {9, 12}, {9, 13},
               {0, 3}, {0, 2}, {3, 4}, {3, 5}, {2, 6}, {2, 7}};
  return pic;
}

nlohmann::json vertex_numbering_descriptor(int m) {
  const int n = 1 << m;
  nlohmann::json d;
  d["scheme"] = "mixed-radix";
  d["coset_representative"] = "a^j b^eps v with 0 <= j < " + std::to_string(n) + " (H = {1, a^" + std::to_string(n) +
                              "})";
  d["formula"] = "vertex = (2*j + eps) * 3^" + std::to_string(n + 1) + " + sum_i x_i * 3^(" + std::to_string(n + 1) +
                 "-i) + c";
  d["digits"] = nlohmann::json::array({"j", "eps", "x_1..x_" + std::to_string(n) + " (base 3)", "c (base 3)"});
  d["element_normal_form"] = "v = v_1^x_1 ... v_n^x_n z^c";
  return d;
}

nlohmann::json to_json(const Certificate& cert) {
  nlohmann::json j;
  j["m"] = cert.m;
  j["vertex_count"] = cert.vertex_count;
  j["edge_count"] = cert.edge_count;
  j["is_cubic"] = cert.is_cubic;
  j["is_connected"] = cert.is_connected;
  j["aut_order"] = cert.aut_order ? nlohmann::json(*cert.aut_order) : nlohmann::json();
  j["stab_order"] = cert.stab_order ? nlohmann::json(*cert.stab_order) : nlohmann::json();
  j["semiregular_spectrum"] =
      cert.semiregular_spectrum ? nlohmann::json(*cert.semiregular_spectrum) : nlohmann::json();
  j["aut_generators"] = cert.aut_generators;
  nlohmann::json lemmas = nlohmann::json::object();
  for (const auto& [id, r] : cert.lemma_results)
    lemmas[id] = {{"status", to_string(r.status)}, {"diagnostics", r.diagnostics}};
  j["lemma_results"] = lemmas;
  j["notes"] = cert.notes;
  j["tool_version"] = cert.tool_version;
  j["vertex_numbering"] = vertex_numbering_descriptor(cert.m);
  return j;
}

bool all_passed(const Certificate& cert) { return !first_failure(cert); }

std::optional<std::string> first_failure(const Certificate& cert) {
  for (const auto& id : lemma_ids()) {
    const auto it = cert.lemma_results.find(id);
    if (it != cert.lemma_results.end() && it->second.status == LemmaStatus::fail) return id;
  }
  return std::nullopt;
}

nlohmann::json label_map(const SemidirectGroup& grp) {
  nlohmann::json labels = nlohmann::json::array();
  for (std::uint64_t v = 0; v < grp.coset_count(); ++v) labels.push_back(to_string(grp, coset_from_number(grp, v)));
  return {{"labels", labels}, {"m", grp.m()}, {"vertex_numbering", vertex_numbering_descriptor(grp.m())}};
}

Certificate run_verification(int m, const std::vector<std::string>& lemmas, int threads) {
  if (m < 1 || m > kMaxGraphM)
    throw CapacityError("verification limited to 1 <= m <= " + std::to_string(kMaxGraphM));
  const auto ids = resolve_lemmas(lemmas);
  Session s(m, threads);
  s.graph = coset_graph(s.grp, gamma_connection(s.grp), threads);

  Certificate cert;
  cert.m = m;
  cert.vertex_count = s.graph.vertex_count();
  cert.edge_count = s.graph.edge_count();
  cert.is_cubic = is_regular(s.graph, 3);
  cert.is_connected = is_connected(s.graph);
  cert.notes.push_back(
      "primitive prime divisors: x = 2, f = 1 has x^f - 1 = 1 with no prime divisor; it is reported with tag "
      "'degenerate' and is not one of the two stated exceptions");

  for (const auto& id : ids) {
    LemmaResult r;
    if (id == "1") r = check_construction(s);
    else if (id == "2") r = check_local_structure(s);
    else if (id == "4") r = check_aut(s, cert);
    else if (id == "semireg") r = check_semiregular(s, cert);
    else if (id == "qirr") r = check_qirr(s);
    else if (id == "figure1") r = check_figure1(s);
    else if (id == "stab") r = check_stabilizer(s, cert);
    cert.lemma_results[id] = std::move(r);
  }
  if (s.aut_group && !cert.aut_order) cert.aut_order = s.aut_group->order();
  return cert;
}

}  // namespace semireg
