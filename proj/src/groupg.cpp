#include "semireg/groupg.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <thread>

namespace semireg {

SemidirectGroup::SemidirectGroup(int m) : ctx_(m) {
  const int order_a = ctx_.a_order();
  const VAut a = aut_a(ctx_);
  const VAut b = aut_b(ctx_);
  tables_.resize(static_cast<std::size_t>(2 * order_a));
  actions_.resize(tables_.size());
  VAut a_pow = aut_identity(ctx_);
  for (int j = 0; j < order_a; ++j) {
    tables_[static_cast<std::size_t>(2 * j)] = a_pow;
    tables_[static_cast<std::size_t>(2 * j + 1)] = aut_compose(ctx_, a_pow, b);
    a_pow = aut_compose(ctx_, a_pow, a);
  }
  for (std::size_t i = 0; i < tables_.size(); ++i) actions_[i] = VAction(ctx_, tables_[i]);
}

QElem q_identity() { return {}; }

QElem q_mul(const SemidirectGroup& grp, const QElem& p, const QElem& q) {
  // b a^k = a^-k b.
  const int n = grp.a_order();
  const int j = p.eps ? p.j - q.j : p.j + q.j;
  return {((j % n) + n) % n, p.eps ^ q.eps};
}

QElem q_inv(const SemidirectGroup& grp, const QElem& q) {
  if (q.eps) return q;
  const int n = grp.a_order();
  return {(n - q.j) % n, 0};
}

int q_order(const SemidirectGroup& grp, const QElem& q) {
  if (q.eps) return 2;
  const int n = grp.a_order();
  return n / std::gcd(n, q.j == 0 ? n : q.j);
}

GElem g_identity(const SemidirectGroup& grp) { return {q_identity(), v_identity(grp.vctx())}; }

GElem g_a(const SemidirectGroup& grp, int power) {
  const int n = grp.a_order();
  return {{((power % n) + n) % n, 0}, v_identity(grp.vctx())};
}

GElem g_b(const SemidirectGroup& grp) { return {{0, 1}, v_identity(grp.vctx())}; }

GElem g_from_q(const SemidirectGroup& grp, const QElem& q) { return {q, v_identity(grp.vctx())}; }

GElem g_from_v(const VElem& v) { return {q_identity(), v}; }

GElem g_make(const QElem& q, const VElem& v) { return {q, v}; }

bool is_identity(const GElem& g) { return g.q == QElem{} && is_identity(g.v); }

GElem g_mul(const SemidirectGroup& grp, const GElem& g, const GElem& h) {
  const VElem moved = grp.action(h.q).apply(g.v);
  return {q_mul(grp, g.q, h.q), v_mul(grp.vctx(), moved, h.v)};
}

GElem g_inv(const SemidirectGroup& grp, const GElem& g) {
  const QElem qi = q_inv(grp, g.q);
  return {qi, grp.action(qi).apply(v_inv(grp.vctx(), g.v))};
}

GElem g_pow(const SemidirectGroup& grp, const GElem& g, long long k) {
  GElem base = k < 0 ? g_inv(grp, g) : g;
  unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
  GElem r = g_identity(grp);
  while (e > 0) {
    if (e & 1ULL) r = g_mul(grp, r, base);
    base = g_mul(grp, base, base);
    e >>= 1ULL;
  }
  return r;
}

int g_order(const SemidirectGroup& grp, const GElem& g) {
  // g^|q| lies in V, which has exponent 3.
  const int r = q_order(grp, g.q);
  GElem p = g;
  for (int i = 1; i < r; ++i) p = g_mul(grp, p, g);
  if (!(p.q == QElem{})) throw ContractViolation("g_order: Q-part order mismatch");
  return is_identity(p.v) ? r : 3 * r;
}

std::uint64_t g_code(const SemidirectGroup& grp, const GElem& g) {
  return static_cast<std::uint64_t>(grp.q_slot(g.q)) * grp.vctx().order_V() + v_index(grp.vctx(), g.v);
}

GElem g_from_code(const SemidirectGroup& grp, std::uint64_t code) {
  const std::uint64_t ov = grp.vctx().order_V();
  const auto slot = static_cast<int>(code / ov);
  if (slot >= 2 * grp.a_order()) throw ParameterError("g_from_code: code out of range");
  return {{slot / 2, slot % 2}, v_from_index(grp.vctx(), code % ov)};
}

std::vector<GElem> g_generators(const SemidirectGroup& grp) {
  return {g_a(grp), g_b(grp), g_from_v(v_gen(grp.vctx(), 1))};
}

namespace {

void write_q(std::ostream& os, int j, int eps) {
  os << "a^" << j << " b^" << eps;
}

}  // namespace

std::string to_string(const SemidirectGroup&, const GElem& g) {
  std::ostringstream os;
  write_q(os, g.q.j, g.q.eps);
  os << ' ' << to_string(g.v);
  return os.str();
}

std::string to_string(const SemidirectGroup&, const CosetIndex& w) {
  std::ostringstream os;
  write_q(os, w.j, w.eps);
  os << ' ' << to_string(w.v);
  return os.str();
}

CosetIndex canonical_coset(const SemidirectGroup& grp, const GElem& g) {
  // a^(2^m) has trivial V-part, so left multiplication by it only shifts j.
  const int half = grp.a_order() / 2;
  return {g.q.j % half, g.q.eps, g.v};
}

GElem coset_rep(const CosetIndex& w) { return {{w.j, w.eps}, w.v}; }

CosetIndex coset_act(const SemidirectGroup& grp, const CosetIndex& w, const GElem& g) {
  return canonical_coset(grp, g_mul(grp, coset_rep(w), g));
}

std::uint64_t coset_number(const SemidirectGroup& grp, const CosetIndex& w) {
  return static_cast<std::uint64_t>(w.j * 2 + w.eps) * grp.vctx().order_V() + v_index(grp.vctx(), w.v);
}

CosetIndex coset_from_number(const SemidirectGroup& grp, std::uint64_t number) {
  if (number >= grp.coset_count()) throw ParameterError("coset_from_number: out of range");
  const std::uint64_t ov = grp.vctx().order_V();
  const auto head = static_cast<int>(number / ov);
  return {head / 2, head % 2, v_from_index(grp.vctx(), number % ov)};
}

std::vector<GElem> h_elements(const SemidirectGroup& grp) {
  return {g_identity(grp), g_a(grp, grp.a_order() / 2)};
}

InvolutionClass::InvolutionClass(const SemidirectGroup& grp) {
  if (grp.m() > 3) throw CapacityError("InvolutionClass: class of a^(2^m) too large for m > 3");
  const GElem h = g_a(grp, grp.a_order() / 2);
  const auto gens = g_generators(grp);
  std::vector<GElem> gen_inv;
  for (const auto& u : gens) gen_inv.push_back(g_inv(grp, u));

  std::deque<std::pair<GElem, GElem>> queue;  // (member, conjugator)
  conjugator_.emplace(g_code(grp, h), g_code(grp, g_identity(grp)));
  queue.emplace_back(h, g_identity(grp));
  while (!queue.empty()) {
    auto [s, t] = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const GElem next = g_mul(grp, g_mul(grp, gen_inv[k], s), gens[k]);
      const std::uint64_t code = g_code(grp, next);
      if (conjugator_.contains(code)) continue;
      const GElem tn = g_mul(grp, t, gens[k]);
      conjugator_.emplace(code, g_code(grp, tn));
      queue.emplace_back(next, tn);
    }
  }
}

bool InvolutionClass::contains(const SemidirectGroup& grp, const GElem& g) const {
  return conjugator_.contains(g_code(grp, g));
}

std::optional<GElem> InvolutionClass::conjugator(const SemidirectGroup& grp, const GElem& g) const {
  const auto it = conjugator_.find(g_code(grp, g));
  if (it == conjugator_.end()) return std::nullopt;
  return g_from_code(grp, it->second);
}

bool fixed_point_free(const SemidirectGroup& grp, const InvolutionClass& cls, const GElem& g) {
  if (is_identity(g)) throw ParameterError("fixed_point_free: identity element");
  return !cls.contains(grp, g);
}

bool fixed_point_free_by_scan(const SemidirectGroup& grp, const GElem& g) {
  if (is_identity(g)) throw ParameterError("fixed_point_free_by_scan: identity element");
  if (grp.m() > 2) throw CapacityError("fixed_point_free_by_scan: m > 2");
  for (std::uint64_t i = 0; i < grp.coset_count(); ++i) {
    const CosetIndex w = coset_from_number(grp, i);
    if (coset_act(grp, w, g) == w) return false;
  }
  return true;
}

namespace {

std::vector<int> prime_divisors(int k) {
  std::vector<int> ps;
  for (int p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    ps.push_back(p);
    while (k % p == 0) k /= p;
  }
  if (k > 1) ps.push_back(k);
  return ps;
}

}  // namespace

SemiregReport is_semiregular(const SemidirectGroup& grp, const InvolutionClass& cls, const GElem& g) {
  SemiregReport rep;
  rep.element = g;
  rep.order = g_order(grp, g);
  // Any point fixed by a nontrivial power of g is fixed by a power of prime order.
  for (int p : prime_divisors(rep.order)) {
    const GElem h = g_pow(grp, g, rep.order / p);
    if (fixed_point_free(grp, cls, h)) continue;
    rep.semiregular = false;
    rep.witness = canonical_coset(grp, *cls.conjugator(grp, h));
    break;
  }
  return rep;
}

SemiregSpectrum max_semiregular_order(const SemidirectGroup& grp, const InvolutionClass& cls, int threads) {
  if (grp.m() > 3) throw CapacityError("max_semiregular_order: full scan limited to m <= 3");
  threads = std::max(1, threads);
  const std::uint64_t total = grp.order();
  std::vector<SemiregSpectrum> partial(static_cast<std::size_t>(threads));
  auto work = [&](int t) {
    SemiregSpectrum& out = partial[static_cast<std::size_t>(t)];
    const std::uint64_t lo = total * static_cast<std::uint64_t>(t) / static_cast<std::uint64_t>(threads);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(t + 1) / static_cast<std::uint64_t>(threads);
    for (std::uint64_t code = lo; code < hi; ++code) {
      const SemiregReport r = is_semiregular(grp, cls, g_from_code(grp, code));
      ++out.elements_scanned;
      if (!r.semiregular) continue;
      ++out.semiregular_count;
      out.orders.insert(r.order);
    }
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
  }
  SemiregSpectrum result;
  result.orders.clear();
  for (const auto& p : partial) {
    result.orders.insert(p.orders.begin(), p.orders.end());
    result.elements_scanned += p.elements_scanned;
    result.semiregular_count += p.semiregular_count;
  }
  result.max_order = result.orders.empty() ? 0 : *result.orders.rbegin();
  return result;
}

}  // namespace semireg
