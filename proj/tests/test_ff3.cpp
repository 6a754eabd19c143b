#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "semireg/errors.hpp"
#include "semireg/extraspecial.hpp"
#include "semireg/ff3.hpp"

using namespace semireg;

namespace {

F3Matrix random_matrix(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> d(0, 2);
  F3Matrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = F3(d(rng));
  return a;
}

// Leibniz expansion over polynomial entries; only for tiny n.
F3Poly leibniz_det(const std::vector<std::vector<F3Poly>>& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  F3Poly total;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) inversions += perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)];
    F3Poly term = F3Poly::constant(F3(inversions % 2 ? 2 : 1));
    for (int i = 0; i < n; ++i) term = term * m[static_cast<std::size_t>(i)][static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])];
    total = total + term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

F3Poly char_poly_oracle(const F3Matrix& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<std::vector<F3Poly>> m(static_cast<std::size_t>(n), std::vector<F3Poly>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      F3Poly e = F3Poly::constant(-a(i, j));
      if (i == j) e = e + F3Poly::monomial(1);
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = e;
    }
  return leibniz_det(m);
}

std::vector<F3Vec> all_vectors(int n) {
  std::vector<F3Vec> out;
  int total = 1;
  for (int i = 0; i < n; ++i) total *= 3;
  for (int code = 0; code < total; ++code) {
    F3Vec v(n);
    int c = code;
    for (int i = 0; i < n; ++i, c /= 3) v(i) = F3(c % 3);
    out.push_back(v);
  }
  return out;
}

int vec_code(const F3Vec& v) {
  int c = 0;
  for (Eigen::Index i = v.size(); i-- > 0;) c = c * 3 + v(i).value();
  return c;
}

// The set of vectors reachable from seed by F3-linear combinations and the
// generators, grown one element at a time.
std::set<int> closure_oracle(const F3Vec& seed, const std::vector<F3Matrix>& gens) {
  std::set<int> codes{0};
  std::vector<F3Vec> members{F3Vec::Zero(seed.size())};
  std::vector<F3Vec> frontier{seed};
  while (!frontier.empty()) {
    F3Vec v = frontier.back();
    frontier.pop_back();
    if (codes.contains(vec_code(v))) continue;
    const std::size_t old = members.size();
    for (std::size_t i = 0; i < old; ++i)
      for (int s = 1; s <= 2; ++s) {
        F3Vec w = members[i] + v * F3(s);
        if (codes.insert(vec_code(w)).second) {
          members.push_back(w);
          for (const auto& g : gens) frontier.push_back(g * w);
        }
      }
  }
  return codes;
}

}  // namespace

TEST_CASE("F3 arithmetic matches integers mod 3") {
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      CHECK((F3(a) + F3(b)).value() == (a + b) % 3);
      CHECK((F3(a) - F3(b)).value() == (a - b + 3) % 3);
      CHECK((F3(a) * F3(b)).value() == (a * b) % 3);
      if (b != 0) CHECK((F3(a) / F3(b)) * F3(b) == F3(a));
    }
  CHECK(F3(5) == F3(2));
  CHECK(F3(-1) == F3(2));
  CHECK_THROWS_AS(inverse(F3(0)), ParameterError);
}

TEST_CASE("J is antisymmetric and nondegenerate") {
  for (int m = 1; m <= 6; ++m) {
    const F3Matrix j = build_J(m);
    const int n = 1 << m;
    REQUIRE(j.rows() == n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) {
        CHECK(j(r, c) == -j(c, r));
        const int i = r + 1, k = c + 1;
        const int expected = i > k ? ((i - k) % 2 ? -1 : 1) : i < k ? -((k - i) % 2 ? -1 : 1) : 0;
        CHECK(j(r, c) == F3(expected));
      }
    CHECK(det(j) != F3(0));
  }
  const F3Matrix j1 = build_J(1);
  CHECK(j1(1, 0) == F3(-1));
  CHECK(j1(0, 1) == F3(1));
}

TEST_CASE("det is multiplicative and agrees with the characteristic polynomial") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + trial % 4;
    const F3Matrix a = random_matrix(rng, n);
    const F3Matrix b = random_matrix(rng, n);
    CHECK(det(F3Matrix(a * b)) == det(a) * det(b));
    const F3Poly chi = char_poly(a);
    CHECK(chi == char_poly_oracle(a));
    // chi(0) = det(-A)
    const F3 sign = n % 2 ? F3(-1) : F3(1);
    CHECK(chi.coeff(0) == sign * det(a));
  }
  CHECK_THROWS_AS(det(F3Matrix(2, 3)), ParameterError);
}

TEST_CASE("kernel and rank satisfy rank-nullity") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 4;
    F3Matrix a = random_matrix(rng, n);
    if (trial % 3 == 0) a.row(n - 1) = a.row(0) + a.row(1);
    const auto ker = kernel(a);
    CHECK(static_cast<Eigen::Index>(ker.size()) + rank(a) == n);
    for (const auto& v : ker) CHECK((a * v).isZero());
    // The image has 3^rank elements.
    std::set<int> image;
    for (const auto& v : all_vectors(n)) image.insert(vec_code(a * v));
    int expected = 1;
    for (Eigen::Index i = 0; i < rank(a); ++i) expected *= 3;
    CHECK(static_cast<int>(image.size()) == expected);
  }
}

TEST_CASE("polynomial factorization of T^4 + 1 over F3") {
  const F3Poly t2 = F3Poly::monomial(2);
  const F3Poly t1 = F3Poly::monomial(1);
  const F3Poly one = F3Poly::constant(F3(1));
  const F3Poly product = poly_mul(t2 + t1 - one, t2 - t1 - one);
  CHECK(product == F3Poly::monomial(4) + one);
  CHECK(to_string(product) == "T^4 + 1");
  CHECK(F3Poly().degree() == -1);
  CHECK(to_string(t2 - t1 - one) == "T^2 - T - 1");
}

TEST_CASE("spin contains the seed and is invariant") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 3;
    const std::vector<F3Matrix> gens{random_matrix(rng, n)};
    F3Vec seed = F3Vec::Zero(n);
    seed(trial % n) = F3(1);
    const auto basis = spin(seed, gens);
    EchelonBasis<F3> eb(n);
    for (const auto& v : basis) eb.insert(v);
    CHECK(eb.contains(seed));
    for (const auto& v : basis)
      for (const auto& g : gens) CHECK(eb.contains(g * v));
    int expected = 1;
    for (Eigen::Index i = 0; i < eb.dimension(); ++i) expected *= 3;
    CHECK(static_cast<int>(closure_oracle(seed, gens).size()) == expected);
  }
  CHECK_THROWS_AS(spin(F3Vec(F3Vec::Zero(2)), std::vector<F3Matrix>{}), ParameterError);
}

TEST_CASE("irreducibility by projective points") {
  CHECK_FALSE(is_irreducible({F3Matrix::Identity(2, 2)}));
  for (int m = 1; m <= 3; ++m) {
    const GroupContext ctx(m);
    const F3Matrix a = matrix_on_W(ctx, aut_a(ctx));
    const F3Matrix b = matrix_on_W(ctx, aut_b(ctx));
    CHECK(is_irreducible({a, b}));
    if (m <= 2) {
      // Oracle: no nonzero vector spans a proper invariant subspace.
      const int n = 1 << m;
      bool irreducible = true;
      for (const auto& v : all_vectors(n)) {
        if (v.isZero()) continue;
        int full = 1;
        for (int i = 0; i < n; ++i) full *= 3;
        irreducible = irreducible && static_cast<int>(closure_oracle(v, {a, b}).size()) == full;
      }
      CHECK(irreducible);
    }
  }
  CHECK_THROWS_AS(is_irreducible({F3Matrix::Identity(11, 11)}), CapacityError);
}

TEST_CASE("module structure of W under a and b") {
  for (int m = 1; m <= 3; ++m) {
    const GroupContext ctx(m);
    const int n = 1 << m;
    const F3Matrix a = matrix_on_W(ctx, aut_a(ctx));
    CHECK(char_poly(a) == F3Poly::monomial(n) + F3Poly::constant(F3(1)));
    CHECK(matrix_power(a, static_cast<unsigned long long>(n)) == F3Matrix(-F3Matrix::Identity(n, n)));
  }
  for (int m = 2; m <= 3; ++m) {
    const GroupContext ctx(m);
    const int n = 1 << m;
    const F3Matrix a = matrix_on_W(ctx, aut_a(ctx));
    const F3Matrix b = matrix_on_W(ctx, aut_b(ctx));
    const F3Matrix i = F3Matrix::Identity(n, n);
    const F3Matrix ah = matrix_power(a, static_cast<unsigned long long>(n / 2));
    const F3Matrix aq = matrix_power(a, static_cast<unsigned long long>(n / 4));
    const auto plus = kernel(F3Matrix(ah + aq - i));
    const auto minus = kernel(F3Matrix(ah - aq - i));
    CHECK(static_cast<int>(plus.size()) == n / 2);
    CHECK(static_cast<int>(minus.size()) == n / 2);
    auto both = plus;
    both.insert(both.end(), minus.begin(), minus.end());
    CHECK(span_dimension(both, n) == n);
    std::vector<F3Vec> image;
    for (const auto& w : plus) image.push_back(b * w);
    CHECK(same_span(image, minus, n));
    // W+ is a-invariant.
    EchelonBasis<F3> eb(n);
    for (const auto& w : plus) eb.insert(w);
    for (const auto& w : plus) CHECK(eb.contains(a * w));
  }
}
