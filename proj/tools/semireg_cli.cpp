// Command-line front end: builds the coset graphs, runs the lemma suite,
// and offers the primitive prime divisor, quotient and Cayley tools.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
// 3 capacity.

#include <algorithm>
#include <deque>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "semireg/certificate.hpp"
#include "semireg/errors.hpp"
#include "semireg/graphs.hpp"
#include "semireg/groupg.hpp"
#include "semireg/numth.hpp"
#include "semireg/permutation.hpp"

namespace {

using namespace semireg;

constexpr int kExitOk = 0;
constexpr int kExitVerify = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

void require_graph_m(int m) {
  if (m < 1 || m > kMaxGraphM)
    throw ParameterError("capacity: gamma(m) is built only for 1 <= m <= " + std::to_string(kMaxGraphM) +
                         " (got m = " + std::to_string(m) + ")");
}

/// Runs `body` with `path` as output stream; "-" or empty means stdout.
template <typename Body>
void with_output(const std::string& path, Body body) {
  if (path.empty() || path == "-") {
    body(std::cout);
    return;
  }
  std::ofstream os(path);
  if (!os) throw ParameterError("cannot open '" + path + "' for writing");
  body(os);
  if (!os) throw std::runtime_error("write to '" + path + "' failed");
}

Graph load_graph(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot open '" + path + "'");
  return read_edge_list(is);
}

int cmd_build(int m, const std::string& out, const std::string& json_path, int threads) {
  require_graph_m(m);
  const SemidirectGroup grp(m);
  const Graph g = gamma(grp, threads);
  with_output(out, [&](std::ostream& os) { write_edge_list(os, g); });
  std::string labels = json_path;
  if (labels.empty() && !out.empty() && out != "-") labels = out + ".labels.json";
  if (!labels.empty()) with_output(labels, [&](std::ostream& os) { os << label_map(grp).dump(1) << '\n'; });
  return kExitOk;
}

int cmd_verify(int m, std::vector<std::string> lemmas, const std::string& json_path, int threads) {
  require_graph_m(m);
  if (lemmas.empty()) lemmas.push_back("all");
  const Certificate cert = run_verification(m, lemmas, threads);
  for (const auto& [id, r] : cert.lemma_results) {
    std::cout << "lemma " << id << ": " << to_string(r.status) << '\n';
    for (const auto& d : r.diagnostics) std::cout << "  " << d << '\n';
  }
  std::cout << "vertices " << cert.vertex_count << ", edges " << cert.edge_count;
  if (cert.aut_order) std::cout << ", aut_order " << *cert.aut_order;
  std::cout << '\n';
  if (!json_path.empty()) with_output(json_path, [&](std::ostream& os) { os << to_json(cert).dump(1) << '\n'; });
  if (const auto failed = first_failure(cert)) {
    std::cerr << "verification failed: lemma " << *failed << '\n';
    return kExitVerify;
  }
  return kExitOk;
}

std::string power_text(std::uint64_t x, unsigned f) {
  return std::to_string(x) + "^" + std::to_string(f) + "−1";
}

int cmd_ppd(std::uint64_t x, unsigned f, bool as_json) {
  const PpdResult r = primitive_prime_divisor(x, f);
  if (as_json) {
    nlohmann::json j{{"x", x}, {"f", f}, {"exists", r.exists}};
    // Primes beyond 64 bits do not fit a JSON number and are written as decimal strings.
    if (!r.prime) j["prime"] = nullptr;
    else if (*r.prime <= UINT64_MAX) j["prime"] = static_cast<std::uint64_t>(*r.prime);
    else j["prime"] = to_string(*r.prime);
    j["exception"] = r.exception_kind ? nlohmann::json(to_string(*r.exception_kind)) : nlohmann::json();
    std::cout << j.dump() << '\n';
    return kExitOk;
  }
  if (r.exists) {
    std::cout << to_string(*r.prime) << '\n';
  } else if (r.exception_kind == PpdException::degenerate) {
    std::cout << "none (degenerate: " << power_text(x, f) << " = 1)\n";
  } else {
    std::cout << "none (exception: " << power_text(x, f) << ")\n";
  }
  return kExitOk;
}

Partition read_partition(const std::string& path, std::size_t n) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot open partition file '" + path + "'");
  std::vector<std::uint32_t> labels;
  std::uint32_t v;
  while (is >> v) labels.push_back(v);
  if (!is.eof()) throw ParameterError("partition file: expected one nonnegative label per vertex");
  if (labels.size() != n)
    throw ParameterError("partition file has " + std::to_string(labels.size()) + " labels for " + std::to_string(n) +
                         " vertices");
  return Partition::from_labels(std::move(labels));
}

int cmd_quotient(const std::string& in, int m, const std::string& by, const std::string& out, int threads) {
  std::optional<SemidirectGroup> grp;
  Graph g;
  if (m != 0) {
    require_graph_m(m);
    grp.emplace(m);
  }
  if (!in.empty()) g = load_graph(in);
  else if (grp) g = gamma(*grp, threads);
  else throw ParameterError("quotient: give --in or -m");

  Partition p;
  if (by == "V") {
    if (!grp) throw ParameterError("quotient --by V needs -m to label vertices by cosets");
    if (g.vertex_count() != grp->coset_count()) throw ParameterError("quotient --by V: graph is not gamma(m)");
    std::vector<GElem> gens;
    for (int i = 1; i <= grp->vctx().dim(); ++i) gens.push_back(g_from_v(v_gen(grp->vctx(), i)));
    p = orbit_partition(*grp, g.vertex_count(), gens);
  } else if (by == "singletons") {
    p = Partition::singletons(g.vertex_count());
  } else {
    p = read_partition(by, g.vertex_count());
  }
  const QuotientResult q = normal_quotient(g, p);
  with_output(out, [&](std::ostream& os) { write_edge_list(os, q.graph); });
  return kExitOk;
}

/// Group given by permutation generators or a multiplication table.
/// Elements are numbered in breadth-first order from the identity,
/// multiplying by generators in file order.
struct FiniteGroup {
  std::vector<std::vector<std::uint32_t>> table;  // table[i][j] = index of i*j
};

FiniteGroup read_group(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw ParameterError("cannot open group file '" + path + "'");
  std::string kind;
  std::size_t size = 0;
  if (!(is >> kind >> size) || size == 0) throw ParameterError("group file: expected 'perm <degree>' or 'table <order>'");
  FiniteGroup grp;
  if (kind == "table") {
    grp.table.assign(size, std::vector<std::uint32_t>(size));
    for (auto& row : grp.table)
      for (auto& e : row)
        if (!(is >> e) || e >= size) throw ParameterError("group file: bad table entry");
    for (std::size_t i = 0; i < size; ++i)
      if (grp.table[0][i] != i || grp.table[i][0] != i) throw ParameterError("group file: element 0 is not the identity");
    return grp;
  }
  if (kind != "perm") throw ParameterError("group file: unknown kind '" + kind + "'");
  std::vector<Permutation> gens;
  std::string line;
  std::getline(is, line);
  while (std::getline(is, line)) {
    std::istringstream ls(line);
    std::vector<Point> images;
    Point p;
    while (ls >> p) images.push_back(p);
    if (!ls.eof()) throw ParameterError("group file: bad permutation line '" + line + "'");
    if (images.empty()) continue;
    if (images.size() != size) throw ParameterError("group file: permutation of wrong degree");
    gens.emplace_back(std::move(images));
  }
  if (gens.empty()) throw ParameterError("group file: no generators");
  std::vector<Permutation> elements{Permutation::identity(size)};
  std::map<Permutation, std::uint32_t> index{{elements[0], 0}};
  for (std::size_t k = 0; k < elements.size(); ++k)
    for (const auto& s : gens) {
      Permutation next = elements[k] * s;
      if (index.contains(next)) continue;
      if (elements.size() >= 100000) throw CapacityError("group file: group has more than 100000 elements");
      index.emplace(next, static_cast<std::uint32_t>(elements.size()));
      elements.push_back(std::move(next));
    }
  grp.table.assign(elements.size(), std::vector<std::uint32_t>(elements.size()));
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = 0; j < elements.size(); ++j) grp.table[i][j] = index.at(elements[i] * elements[j]);
  return grp;
}

std::vector<std::uint32_t> parse_connection(const std::string& spec) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw ParameterError("connection: bad element index '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw ParameterError("connection: empty");
  return out;
}

int cmd_cayley(const std::string& group_path, const std::string& conn, const std::string& out) {
  const FiniteGroup grp = read_group(group_path);
  const std::uint32_t order = static_cast<std::uint32_t>(grp.table.size());
  std::vector<std::uint32_t> elements(order);
  for (std::uint32_t i = 0; i < order; ++i) elements[i] = i;
  const auto connection = parse_connection(conn);
  for (auto y : connection)
    if (y >= order) throw ParameterError("connection: element " + std::to_string(y) + " outside the group");
  auto mul = [&](std::uint32_t x, std::uint32_t y) { return grp.table[x][y]; };
  const Graph g = cayley_graph<std::uint32_t>(elements, connection, mul, 0u);
  with_output(out, [&](std::ostream& os) { write_edge_list(os, g); });
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coset graphs of the extraspecial construction and their verification"};
  app.require_subcommand(1);
  int m = 0;
  int threads = 1;
  std::string out, json_path;

  auto* build = app.add_subcommand("build", "write the edge list of gamma(m) and its coset labels");
  build->add_option("-m", m, "parameter m (1..3)")->required();
  build->add_option("--out", out, "edge-list path (default stdout)");
  build->add_option("--json", json_path, "label-map path (default <out>.labels.json)");
  build->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));

  std::vector<std::string> lemmas;
  bool all = false;
  auto* verify = app.add_subcommand("verify", "run lemma checks on gamma(m) and emit a certificate");
  verify->add_option("-m", m, "parameter m (1..3)")->required();
  verify->add_option("--lemma", lemmas, "lemma ids: all|1|2|4|semireg|qirr|figure1|stab")
      ->check(CLI::IsMember({"all", "1", "2", "4", "semireg", "qirr", "figure1", "stab"}));
  verify->add_flag("--all", all, "run every lemma (default)");
  verify->add_option("--json,--out", json_path, "certificate path ('-' for stdout)");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));

  std::uint64_t x = 0;
  unsigned f = 0;
  bool ppd_json = false;
  auto* ppd = app.add_subcommand("ppd", "smallest primitive prime divisor of x^f - 1");
  ppd->add_option("x", x, "base (>= 2)")->required();
  ppd->add_option("f", f, "exponent (>= 1)")->required();
  ppd->add_flag("--json", ppd_json, "print JSON");

  std::string in, by = "V";
  auto* quotient = app.add_subcommand("quotient", "quotient graph by a vertex partition");
  quotient->add_option("--in", in, "edge-list input (default: gamma(m))");
  quotient->add_option("-m", m, "parameter m, labels vertices by cosets");
  quotient->add_option("--by", by, "V, singletons, or a file with one block label per vertex");
  quotient->add_option("--out", out, "edge-list path (default stdout)");
  quotient->add_option("--threads", threads, "worker threads")->check(CLI::Range(1, 64));

  std::string group_path, conn;
  auto* cayley = app.add_subcommand("cayley", "Cayley graph of a user-supplied group");
  cayley->add_option("--group", group_path, "'perm <degree>' + generator lines, or 'table <order>' + rows")
      ->required();
  cayley->add_option("--conn", conn, "comma-separated element indices")->required();
  cayley->add_option("--out", out, "edge-list path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*build) return cmd_build(m, out, json_path, threads);
    if (*verify) {
      if (all) lemmas.push_back("all");
      return cmd_verify(m, lemmas, json_path, threads);
    }
    if (*ppd) return cmd_ppd(x, f, ppd_json);
    if (*quotient) return cmd_quotient(in, m, by, out, threads);
    if (*cayley) return cmd_cayley(group_path, conn, out);
  } catch (const ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    std::cerr << "error: capacity: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
  return kExitUsage;
}
