#pragma once

// The extraspecial group V of order 3^(2^m+1) and exponent 3.
//
// Elements are kept in the normal form v_1^x_1 ... v_n^x_n z^c (n = 2^m) and
// multiplied through the collection cocycle
//
//   (x, c) (y, d) = (x + y, c + d + beta(x, y)),
//   beta(x, y) = sum_{j > i} J_{j,i} x_j y_i,
//
// which comes from moving every generator of the right factor leftwards past
// the higher-indexed generators of the left one using v_j v_i = v_i v_j z^J_{j,i}.
// Commutators follow [g, h] = g^-1 h^-1 g h. Automorphisms act on the right
// and compose left to right: g^(phi psi) = (g^phi)^psi.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "semireg/ff3.hpp"

namespace semireg {

inline constexpr int kMaxExtraspecialM = 5;
inline constexpr int kMaxExtraspecialDim = 1 << kMaxExtraspecialM;

class GroupContext {
 public:
  explicit GroupContext(int m);

  int m() const { return m_; }
  /// n = 2^m, the number of v-generators.
  int dim() const { return dim_; }
  const F3Matrix& J() const { return j_; }
  /// J_{i,j} as 0, 1 or 2 with 0-based indices.
  int j_entry(int i, int j) const { return j_flat_[static_cast<std::size_t>(i * dim_ + j)]; }

  std::uint64_t order_Q() const { return std::uint64_t{1} << (m_ + 2); }
  std::uint64_t order_V() const;
  /// Order of a, 2^(m+1).
  int a_order() const { return 1 << (m_ + 1); }

 private:
  int m_;
  int dim_;
  F3Matrix j_;
  std::vector<std::uint8_t> j_flat_;
};

struct VElem {
  std::array<std::uint8_t, kMaxExtraspecialDim> x{};
  std::uint8_t c = 0;
  std::uint8_t n = 0;

  friend bool operator==(const VElem&, const VElem&) = default;
};

VElem v_identity(const GroupContext& ctx);
/// v_i with 1-based index i.
VElem v_gen(const GroupContext& ctx, int i);
VElem v_z(const GroupContext& ctx);
VElem v_make(const GroupContext& ctx, const std::vector<int>& x, int c);

bool is_identity(const VElem& g);
bool is_central(const VElem& g);

int collection_cocycle(const GroupContext& ctx, const VElem& g, const VElem& h);

VElem v_mul(const GroupContext& ctx, const VElem& g, const VElem& h);
VElem v_inv(const GroupContext& ctx, const VElem& g);
VElem v_pow(const GroupContext& ctx, const VElem& g, long long k);
VElem v_commutator(const GroupContext& ctx, const VElem& g, const VElem& h);

/// Position in the lexicographic enumeration (x_1 most significant, c last).
std::uint64_t v_index(const GroupContext& ctx, const VElem& g);
VElem v_from_index(const GroupContext& ctx, std::uint64_t index);

std::string to_string(const VElem& g);

/// An endomorphism given by images of the generators: v_i -> images[i-1] and
/// z -> z^z_exponent.
struct VAut {
  std::vector<VElem> images;
  F3 z_exponent{1};

  friend bool operator==(const VAut&, const VAut&) = default;
};

VAut aut_identity(const GroupContext& ctx);
VAut aut_a(const GroupContext& ctx);
VAut aut_b(const GroupContext& ctx);

/// Image of g, recollected through v_mul from the generator images.
VElem apply_aut(const GroupContext& ctx, const VAut& phi, const VElem& g);
/// phi followed by psi.
VAut aut_compose(const GroupContext& ctx, const VAut& phi, const VAut& psi);
/// phi^k; a negative k is reduced modulo the order of phi.
VAut aut_power(const GroupContext& ctx, const VAut& phi, long long k);

bool verify_relations(const GroupContext& ctx, const VAut& phi);
/// Least k >= 1 with phi^k trivial; throws ContractViolation unless phi
/// preserves the defining relations.
long long aut_order(const GroupContext& ctx, const VAut& phi);

/// Induced map on W = V/<z>; column i holds the image of v_{i+1}.
F3Matrix matrix_on_W(const GroupContext& ctx, const VAut& phi);

/// Precompiled form of an automorphism: the linear part on exponent vectors
/// plus the bilinear correction on the central coordinate. Agrees with
/// apply_aut on every element but costs O(n^2) word operations.
class VAction {
 public:
  VAction() = default;
  VAction(const GroupContext& ctx, const VAut& phi);

  VElem apply(const VElem& g) const;

 private:
  int n_ = 0;
  std::uint8_t z_exp_ = 1;
  // Row k: exponent vector of the image of v_{k+1}.
  std::vector<std::uint8_t> linear_;
  std::vector<std::uint8_t> image_c_;
  // cross_[k*n + l] = beta(L_k, L_l).
  std::vector<std::uint8_t> cross_;
};

}  // namespace semireg
