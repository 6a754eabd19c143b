#include "semireg/extraspecial.hpp"

#include <sstream>

namespace semireg {

namespace {

inline std::uint8_t mod3(int v) { return static_cast<std::uint8_t>(((v % 3) + 3) % 3); }

void check_compatible(const GroupContext& ctx, const VElem& g) {
  if (g.n != ctx.dim()) throw ParameterError("VElem length does not match the group context");
}

}  // namespace

GroupContext::GroupContext(int m) : m_(m), dim_(0) {
  if (m < 1 || m > kMaxExtraspecialM)
    throw ParameterError("GroupContext: m must lie in [1, " + std::to_string(kMaxExtraspecialM) + "]");
  dim_ = 1 << m;
  j_ = build_J(m);
  j_flat_.resize(static_cast<std::size_t>(dim_ * dim_));
  for (int i = 0; i < dim_; ++i)
    for (int k = 0; k < dim_; ++k) j_flat_[static_cast<std::size_t>(i * dim_ + k)] = static_cast<std::uint8_t>(j_(i, k).value());
}

std::uint64_t GroupContext::order_V() const {
  std::uint64_t r = 1;
  for (int i = 0; i <= dim_; ++i) r *= 3;
  return r;
}

VElem v_identity(const GroupContext& ctx) {
  VElem g;
  g.n = static_cast<std::uint8_t>(ctx.dim());
  return g;
}

VElem v_gen(const GroupContext& ctx, int i) {
  if (i < 1 || i > ctx.dim()) throw ParameterError("v_gen: index out of range");
  VElem g = v_identity(ctx);
  g.x[static_cast<std::size_t>(i - 1)] = 1;
  return g;
}

VElem v_z(const GroupContext& ctx) {
  VElem g = v_identity(ctx);
  g.c = 1;
  return g;
}

VElem v_make(const GroupContext& ctx, const std::vector<int>& x, int c) {
  if (static_cast<int>(x.size()) != ctx.dim()) throw ParameterError("v_make: exponent vector length mismatch");
  VElem g = v_identity(ctx);
  for (std::size_t i = 0; i < x.size(); ++i) g.x[i] = mod3(x[i]);
  g.c = mod3(c);
  return g;
}

bool is_central(const VElem& g) {
  for (int i = 0; i < g.n; ++i)
    if (g.x[static_cast<std::size_t>(i)] != 0) return false;
  return true;
}

bool is_identity(const VElem& g) { return g.c == 0 && is_central(g); }

int collection_cocycle(const GroupContext& ctx, const VElem& g, const VElem& h) {
  const int n = ctx.dim();
  int acc = 0;
  for (int j = 1; j < n; ++j) {
    const int xj = g.x[static_cast<std::size_t>(j)];
    if (xj == 0) continue;
    int row = 0;
    for (int i = 0; i < j; ++i) row += ctx.j_entry(j, i) * h.x[static_cast<std::size_t>(i)];
    acc += xj * row;
  }
  return acc % 3;
}

VElem v_mul(const GroupContext& ctx, const VElem& g, const VElem& h) {
  check_compatible(ctx, g);
  check_compatible(ctx, h);
  VElem r = v_identity(ctx);
  for (int i = 0; i < ctx.dim(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.x[k] = static_cast<std::uint8_t>((g.x[k] + h.x[k]) % 3);
  }
  r.c = mod3(g.c + h.c + collection_cocycle(ctx, g, h));
  return r;
}

VElem v_inv(const GroupContext& ctx, const VElem& g) {
  check_compatible(ctx, g);
  VElem r = v_identity(ctx);
  for (int i = 0; i < ctx.dim(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    r.x[k] = mod3(-g.x[k]);
  }
  // (x, c)(-x, d) = (0, c + d - beta(x, x)).
  r.c = mod3(-g.c + collection_cocycle(ctx, g, g));
  return r;
}

VElem v_pow(const GroupContext& ctx, const VElem& g, long long k) {
  long long e = ((k % 3) + 3) % 3;
  VElem r = v_identity(ctx);
  for (long long i = 0; i < e; ++i) r = v_mul(ctx, r, g);
  return r;
}

VElem v_commutator(const GroupContext& ctx, const VElem& g, const VElem& h) {
  return v_mul(ctx, v_mul(ctx, v_inv(ctx, g), v_inv(ctx, h)), v_mul(ctx, g, h));
}

std::uint64_t v_index(const GroupContext& ctx, const VElem& g) {
  std::uint64_t idx = 0;
  for (int i = 0; i < ctx.dim(); ++i) idx = idx * 3 + g.x[static_cast<std::size_t>(i)];
  return idx * 3 + g.c;
}

VElem v_from_index(const GroupContext& ctx, std::uint64_t index) {
  if (index >= ctx.order_V()) throw ParameterError("v_from_index: index out of range");
  VElem g = v_identity(ctx);
  g.c = static_cast<std::uint8_t>(index % 3);
  index /= 3;
  for (int i = ctx.dim() - 1; i >= 0; --i) {
    g.x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(index % 3);
    index /= 3;
  }
  return g;
}

std::string to_string(const VElem& g) {
  std::ostringstream os;
  os << "v=[";
  for (int i = 0; i < g.n; ++i) os << (i ? "," : "") << int{g.x[static_cast<std::size_t>(i)]};
  os << "] z^" << int{g.c};
  return os.str();
}

VAut aut_identity(const GroupContext& ctx) {
  VAut phi;
  for (int i = 1; i <= ctx.dim(); ++i) phi.images.push_back(v_gen(ctx, i));
  phi.z_exponent = F3(1);
  return phi;
}

VAut aut_a(const GroupContext& ctx) {
  const int n = ctx.dim();
  VAut phi;
  for (int i = 1; i <= n; ++i)
    phi.images.push_back(i != n ? v_gen(ctx, i + 1) : v_inv(ctx, v_gen(ctx, 1)));
  phi.z_exponent = F3(1);
  return phi;
}

VAut aut_b(const GroupContext& ctx) {
  const int n = ctx.dim();
  VAut phi;
  for (int i = 1; i <= n; ++i)
    phi.images.push_back(i != 1 ? v_gen(ctx, n - i + 2) : v_inv(ctx, v_gen(ctx, 1)));
  phi.z_exponent = F3(-1);
  return phi;
}

VElem apply_aut(const GroupContext& ctx, const VAut& phi, const VElem& g) {
  check_compatible(ctx, g);
  if (static_cast<int>(phi.images.size()) != ctx.dim()) throw ParameterError("apply_aut: image table size mismatch");
  VElem r = v_identity(ctx);
  for (int i = 0; i < ctx.dim(); ++i) {
    const auto k = static_cast<std::size_t>(i);
    for (int e = 0; e < g.x[k]; ++e) r = v_mul(ctx, r, phi.images[k]);
  }
  VElem zc = v_identity(ctx);
  zc.c = mod3(phi.z_exponent.value() * g.c);
  return v_mul(ctx, r, zc);
}

VAut aut_compose(const GroupContext& ctx, const VAut& phi, const VAut& psi) {
  VAut r;
  r.images.reserve(phi.images.size());
  for (const auto& img : phi.images) r.images.push_back(apply_aut(ctx, psi, img));
  r.z_exponent = phi.z_exponent * psi.z_exponent;
  return r;
}

VAut aut_power(const GroupContext& ctx, const VAut& phi, long long k) {
  if (k < 0) {
    const long long n = aut_order(ctx, phi);
    k = ((k % n) + n) % n;
  }
  VAut r = aut_identity(ctx);
  VAut base = phi;
  while (k > 0) {
    if (k & 1) r = aut_compose(ctx, r, base);
    base = aut_compose(ctx, base, base);
    k >>= 1;
  }
  return r;
}

bool verify_relations(const GroupContext& ctx, const VAut& phi) {
  const int n = ctx.dim();
  if (static_cast<int>(phi.images.size()) != n) return false;
  if (phi.z_exponent.is_zero()) return false;
  VElem z_img = v_identity(ctx);
  z_img.c = static_cast<std::uint8_t>(phi.z_exponent.value());
  for (const auto& img : phi.images) {
    if (img.n != n) return false;
    if (!is_identity(v_pow(ctx, img, 3))) return false;
    if (!is_identity(v_commutator(ctx, img, z_img))) return false;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const VElem lhs = v_commutator(ctx, phi.images[static_cast<std::size_t>(i)], phi.images[static_cast<std::size_t>(j)]);
      const VElem rhs = v_pow(ctx, z_img, ctx.j_entry(i, j));
      if (!(lhs == rhs)) return false;
    }
  }
  return true;
}

long long aut_order(const GroupContext& ctx, const VAut& phi) {
  if (!verify_relations(ctx, phi)) throw ContractViolation("aut_order: map does not preserve the relations of V");
  const VAut id = aut_identity(ctx);
  constexpr long long kLimit = 1LL << 20;
  VAut cur = phi;
  for (long long k = 1; k <= kLimit; ++k) {
    if (cur == id) return k;
    cur = aut_compose(ctx, cur, phi);
  }
  throw CapacityError("aut_order: order exceeds search limit");
}

F3Matrix matrix_on_W(const GroupContext& ctx, const VAut& phi) {
  const int n = ctx.dim();
  if (static_cast<int>(phi.images.size()) != n) throw ParameterError("matrix_on_W: image table size mismatch");
  F3Matrix m(n, n);
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row)
      m(row, col) = F3(phi.images[static_cast<std::size_t>(col)].x[static_cast<std::size_t>(row)]);
  return m;
}

VAction::VAction(const GroupContext& ctx, const VAut& phi) : n_(ctx.dim()) {
  if (static_cast<int>(phi.images.size()) != n_) throw ParameterError("VAction: image table size mismatch");
  z_exp_ = static_cast<std::uint8_t>(phi.z_exponent.value());
  linear_.resize(static_cast<std::size_t>(n_ * n_));
  image_c_.resize(static_cast<std::size_t>(n_));
  cross_.resize(static_cast<std::size_t>(n_ * n_));
  for (int k = 0; k < n_; ++k) {
    const VElem& img = phi.images[static_cast<std::size_t>(k)];
    for (int i = 0; i < n_; ++i) linear_[static_cast<std::size_t>(k * n_ + i)] = img.x[static_cast<std::size_t>(i)];
    image_c_[static_cast<std::size_t>(k)] = img.c;
  }
  for (int k = 0; k < n_; ++k)
    for (int l = 0; l < n_; ++l)
      cross_[static_cast<std::size_t>(k * n_ + l)] = static_cast<std::uint8_t>(
          collection_cocycle(ctx, phi.images[static_cast<std::size_t>(k)], phi.images[static_cast<std::size_t>(l)]));
}

VElem VAction::apply(const VElem& g) const {
  // Image of v_1^x_1 ... v_n^x_n z^c is the ordered product of (x_k L_k, x_k c_k)
  // plus the power corrections binom(x_k, 2) beta(L_k, L_k) and the pairwise
  // terms x_k x_l beta(L_k, L_l) for k < l.
  VElem r;
  r.n = static_cast<std::uint8_t>(n_);
  int acc = z_exp_ * g.c;
  int sum[kMaxExtraspecialDim] = {};
  for (int k = 0; k < n_; ++k) {
    const int xk = g.x[static_cast<std::size_t>(k)];
    if (xk == 0) continue;
    const std::uint8_t* row = &linear_[static_cast<std::size_t>(k * n_)];
    for (int i = 0; i < n_; ++i) sum[i] += xk * row[i];
    acc += xk * image_c_[static_cast<std::size_t>(k)];
    const std::uint8_t* cr = &cross_[static_cast<std::size_t>(k * n_)];
    if (xk == 2) acc += cr[k];
    int pair = 0;
    for (int l = k + 1; l < n_; ++l) pair += g.x[static_cast<std::size_t>(l)] * cr[l];
    acc += xk * pair;
  }
  for (int i = 0; i < n_; ++i) r.x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(sum[i] % 3);
  r.c = static_cast<std::uint8_t>(acc % 3);
  return r;
}

}  // namespace semireg
