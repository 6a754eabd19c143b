#pragma once

// The dihedral group Q = <a, b> of order 2^(m+2) acting on V, the semidirect
// product G = V x| Q, and the action of G on the right cosets of
// H = <a^(2^m)>.
//
// Elements of G are pairs x v with x in Q and v in V, multiplied by
// (x v)(y w) = (x y)(v^y w).

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "semireg/extraspecial.hpp"

namespace semireg {

/// a^j b^eps with 0 <= j < 2^(m+1).
struct QElem {
  int j = 0;
  int eps = 0;
  friend bool operator==(const QElem&, const QElem&) = default;
};

struct GElem {
  QElem q;
  VElem v;
  friend bool operator==(const GElem&, const GElem&) = default;
};

/// Canonical representative a^j b^eps v of a right coset of H, 0 <= j < 2^m.
struct CosetIndex {
  int j = 0;
  int eps = 0;
  VElem v;
  friend bool operator==(const CosetIndex&, const CosetIndex&) = default;
};

class SemidirectGroup {
 public:
  explicit SemidirectGroup(int m);

  const GroupContext& vctx() const { return ctx_; }
  int m() const { return ctx_.m(); }
  int a_order() const { return ctx_.a_order(); }

  std::uint64_t order() const { return ctx_.order_Q() * ctx_.order_V(); }
  std::uint64_t coset_count() const { return order() / 2; }

  /// Right action of the Q-element on V.
  const VAction& action(const QElem& q) const { return actions_[static_cast<std::size_t>(q_slot(q))]; }
  const VAut& action_table(const QElem& q) const { return tables_[static_cast<std::size_t>(q_slot(q))]; }

  int q_slot(const QElem& q) const { return q.j * 2 + q.eps; }

 private:
  GroupContext ctx_;
  std::vector<VAut> tables_;
  std::vector<VAction> actions_;
};

QElem q_identity();
QElem q_mul(const SemidirectGroup& grp, const QElem& p, const QElem& q);
QElem q_inv(const SemidirectGroup& grp, const QElem& q);
int q_order(const SemidirectGroup& grp, const QElem& q);

GElem g_identity(const SemidirectGroup& grp);
GElem g_a(const SemidirectGroup& grp, int power = 1);
GElem g_b(const SemidirectGroup& grp);
GElem g_from_q(const SemidirectGroup& grp, const QElem& q);
GElem g_from_v(const VElem& v);
GElem g_make(const QElem& q, const VElem& v);

bool is_identity(const GElem& g);

GElem g_mul(const SemidirectGroup& grp, const GElem& g, const GElem& h);
GElem g_inv(const SemidirectGroup& grp, const GElem& g);
GElem g_pow(const SemidirectGroup& grp, const GElem& g, long long k);
/// Least k >= 1 with g^k = 1; always divides 3 * 2^(m+1).
int g_order(const SemidirectGroup& grp, const GElem& g);

/// Dense numbering of G: Q-slot major, then the V index.
std::uint64_t g_code(const SemidirectGroup& grp, const GElem& g);
GElem g_from_code(const SemidirectGroup& grp, std::uint64_t code);

/// Generators a, b, v_1 of G.
std::vector<GElem> g_generators(const SemidirectGroup& grp);

std::string to_string(const SemidirectGroup& grp, const GElem& g);
std::string to_string(const SemidirectGroup& grp, const CosetIndex& w);

CosetIndex canonical_coset(const SemidirectGroup& grp, const GElem& g);
GElem coset_rep(const CosetIndex& w);
CosetIndex coset_act(const SemidirectGroup& grp, const CosetIndex& w, const GElem& g);

/// Mixed-radix vertex number (j, eps, x_1..x_n, c), most significant first.
std::uint64_t coset_number(const SemidirectGroup& grp, const CosetIndex& w);
CosetIndex coset_from_number(const SemidirectGroup& grp, std::uint64_t number);

/// Elements of H = <a^(2^m)>.
std::vector<GElem> h_elements(const SemidirectGroup& grp);

/// The conjugacy class of the involution a^(2^m), with a conjugator for each
/// member. An element other than 1 fixes a coset iff it lies in this class,
/// since H has order 2.
class InvolutionClass {
 public:
  explicit InvolutionClass(const SemidirectGroup& grp);

  std::size_t size() const { return conjugator_.size(); }
  bool contains(const SemidirectGroup& grp, const GElem& g) const;
  /// t with g = t^-1 a^(2^m) t, so that the coset H t is fixed by g.
  std::optional<GElem> conjugator(const SemidirectGroup& grp, const GElem& g) const;

 private:
  std::unordered_map<std::uint64_t, std::uint64_t> conjugator_;
};

/// Fixed-point-freeness through the conjugacy criterion.
bool fixed_point_free(const SemidirectGroup& grp, const InvolutionClass& cls, const GElem& g);
/// Reference implementation scanning every coset; feasible for m <= 2.
bool fixed_point_free_by_scan(const SemidirectGroup& grp, const GElem& g);

struct SemiregReport {
  GElem element;
  int order = 1;
  bool semiregular = true;
  std::optional<CosetIndex> witness;
};

SemiregReport is_semiregular(const SemidirectGroup& grp, const InvolutionClass& cls, const GElem& g);

struct SemiregSpectrum {
  int max_order = 1;
  std::set<int> orders;
  std::uint64_t elements_scanned = 0;
  std::uint64_t semiregular_count = 0;
};

/// Scans all of G. Deterministic for any thread count.
SemiregSpectrum max_semiregular_order(const SemidirectGroup& grp, const InvolutionClass& cls, int threads = 1);

}  // namespace semireg

template <>
struct std::hash<semireg::VElem> {
  std::size_t operator()(const semireg::VElem& g) const noexcept {
    std::uint64_t h = g.c;
    for (int i = 0; i < g.n; ++i) h = h * 3 + g.x[static_cast<std::size_t>(i)];
    return std::hash<std::uint64_t>{}(h ^ (std::uint64_t{g.n} << 58));
  }
};

template <>
struct std::hash<semireg::GElem> {
  std::size_t operator()(const semireg::GElem& g) const noexcept {
    const std::size_t hv = std::hash<semireg::VElem>{}(g.v);
    return hv ^ (static_cast<std::size_t>(g.q.j * 2 + g.q.eps) * 0x9e3779b97f4a7c15ULL);
  }
};
