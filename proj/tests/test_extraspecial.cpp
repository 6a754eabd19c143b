#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "collection_oracle.hpp"
#include "semireg/errors.hpp"
#include "semireg/extraspecial.hpp"

using namespace semireg;

namespace {

VElem random_velem(const GroupContext& ctx, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, 2);
  std::vector<int> x(static_cast<std::size_t>(ctx.dim()));
  for (auto& e : x) e = d(rng);
  return v_make(ctx, x, d(rng));
}

}  // namespace

TEST_CASE("normal-form product of two generators at m=1") {
  const GroupContext ctx(1);
  const VElem p = v_mul(ctx, v_gen(ctx, 2), v_gen(ctx, 1));
  CHECK(p == v_make(ctx, {1, 1}, 2));
  CHECK(v_mul(ctx, v_gen(ctx, 1), v_gen(ctx, 2)) == v_make(ctx, {1, 1}, 0));
  CHECK(v_inv(ctx, v_gen(ctx, 1)) == v_make(ctx, {2, 0}, 0));
  CHECK(is_identity(v_inv(ctx, v_identity(ctx))));
}

TEST_CASE("v_mul agrees with word collection on every pair at m=1") {
  const GroupContext ctx(1);
  for (std::uint64_t i = 0; i < ctx.order_V(); ++i)
    for (std::uint64_t j = 0; j < ctx.order_V(); ++j) {
      const VElem g = v_from_index(ctx, i), h = v_from_index(ctx, j);
      CHECK(v_mul(ctx, g, h) == oracle::mul(ctx, g, h));
    }
}

TEST_CASE("v_mul agrees with word collection on random pairs") {
  std::mt19937 rng(2024);
  for (int m = 2; m <= 3; ++m) {
    const GroupContext ctx(m);
    int mismatches = 0;
    for (int t = 0; t < 10000; ++t) {
      const VElem g = random_velem(ctx, rng), h = random_velem(ctx, rng);
      mismatches += !(v_mul(ctx, g, h) == oracle::mul(ctx, g, h));
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("group axioms and exponent 3") {
  std::mt19937 rng(5);
  for (int m = 1; m <= 4; ++m) {
    const GroupContext ctx(m);
    for (int t = 0; t < 300; ++t) {
      const VElem g = random_velem(ctx, rng), h = random_velem(ctx, rng), k = random_velem(ctx, rng);
      CHECK(v_mul(ctx, v_mul(ctx, g, h), k) == v_mul(ctx, g, v_mul(ctx, h, k)));
      CHECK(is_identity(v_mul(ctx, g, v_inv(ctx, g))));
      CHECK(is_identity(v_mul(ctx, v_inv(ctx, g), g)));
      CHECK(is_identity(v_pow(ctx, g, 3)));
      CHECK(v_mul(ctx, v_identity(ctx), h) == h);
      CHECK(is_central(v_commutator(ctx, g, h)));
    }
  }
}

TEST_CASE("commutators of generators follow J") {
  for (int m = 1; m <= 3; ++m) {
    const GroupContext ctx(m);
    for (int i = 1; i <= ctx.dim(); ++i) {
      CHECK(is_identity(v_commutator(ctx, v_gen(ctx, i), v_z(ctx))));
      for (int j = 1; j <= ctx.dim(); ++j)
        CHECK(v_commutator(ctx, v_gen(ctx, i), v_gen(ctx, j)) == v_pow(ctx, v_z(ctx), ctx.j_entry(i - 1, j - 1)));
    }
  }
}

TEST_CASE("context sizes and mismatched lengths") {
  const GroupContext ctx(2);
  CHECK(ctx.dim() == 4);
  CHECK(ctx.order_V() == 243);
  CHECK(ctx.order_Q() == 16);
  CHECK_THROWS_AS(GroupContext(0), ParameterError);
  CHECK_THROWS_AS(GroupContext(kMaxExtraspecialM + 1), ParameterError);
  const GroupContext other(1);
  CHECK_THROWS_AS(v_mul(ctx, v_gen(ctx, 1), v_gen(other, 1)), ParameterError);
  for (std::uint64_t i = 0; i < ctx.order_V(); ++i) CHECK(v_index(ctx, v_from_index(ctx, i)) == i);
}

TEST_CASE("generator images of a and b at m=2") {
  const GroupContext ctx(2);
  const VAut a = aut_a(ctx);
  CHECK(a.images[0] == v_gen(ctx, 2));
  CHECK(a.images[1] == v_gen(ctx, 3));
  CHECK(a.images[2] == v_gen(ctx, 4));
  CHECK(a.images[3] == v_inv(ctx, v_gen(ctx, 1)));
  CHECK(a.z_exponent == F3(1));
  const VAut b = aut_b(ctx);
  CHECK(b.images[0] == v_inv(ctx, v_gen(ctx, 1)));
  CHECK(b.images[1] == v_gen(ctx, 4));
  CHECK(b.images[2] == v_gen(ctx, 3));
  CHECK(b.images[3] == v_gen(ctx, 2));
  CHECK(b.z_exponent == F3(-1));
}

TEST_CASE("automorphisms: relations, orders and the dihedral relation") {
  for (int m = 1; m <= 4; ++m) {
    const GroupContext ctx(m);
    const VAut a = aut_a(ctx), b = aut_b(ctx);
    CHECK(verify_relations(ctx, a));
    CHECK(verify_relations(ctx, b));
    CHECK(aut_order(ctx, a) == (1LL << (m + 1)));
    CHECK(aut_order(ctx, b) == 2);
    CHECK(aut_compose(ctx, aut_compose(ctx, b, a), b) == aut_power(ctx, a, -1));
  }
  const GroupContext ctx(2);
  VAut bad = aut_identity(ctx);
  bad.images[1] = v_gen(ctx, 1);
  CHECK_FALSE(verify_relations(ctx, bad));
  CHECK_THROWS_AS(aut_order(ctx, bad), ContractViolation);
}

TEST_CASE("apply_aut is substitution into the normal-form word") {
  std::mt19937 rng(99);
  for (int m = 1; m <= 3; ++m) {
    const GroupContext ctx(m);
    const VAut a = aut_a(ctx), b = aut_b(ctx);
    const VAut half = aut_power(ctx, a, 1LL << m);
    const VAction fast_a(ctx, a), fast_b(ctx, b);
    for (int t = 0; t < 500; ++t) {
      const VElem g = random_velem(ctx, rng);
      CHECK(apply_aut(ctx, a, g) == oracle::apply(ctx, a.images, 1, g));
      CHECK(apply_aut(ctx, b, g) == oracle::apply(ctx, b.images, -1, g));
      CHECK(fast_a.apply(g) == apply_aut(ctx, a, g));
      CHECK(fast_b.apply(g) == apply_aut(ctx, b, g));
      VElem neg = g;
      for (int i = 0; i < ctx.dim(); ++i) neg.x[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((3 - g.x[static_cast<std::size_t>(i)]) % 3);
      CHECK(apply_aut(ctx, half, g) == neg);
      CHECK(apply_aut(ctx, aut_identity(ctx), g) == g);
    }
  }
  const GroupContext ctx(1);
  CHECK(apply_aut(ctx, aut_a(ctx), v_gen(ctx, 1)) == v_gen(ctx, 2));
}
