#include "doctest.h"

#include <numeric>
#include <random>
#include <set>

#include "jfcohom/group.hpp"

using namespace jfc;

namespace {

GroupElement random_element(std::mt19937_64& rng, std::int64_t cap) {
  std::uniform_int_distribution<int> coin(0, 2), shift(1, 40);
  GroupElement g = kIdentity;
  while (true) {
    GroupElement next = coin(rng) == 0 ? g * kS
                                       : g * T_power(coin(rng) == 1 ? shift(rng) : -shift(rng));
    auto big = std::max({std::llabs(next.a), std::llabs(next.b), std::llabs(next.c), std::llabs(next.d)});
    if (big > cap) return g;
    g = next;
  }
}

}  // namespace

TEST_CASE("jacobi_compose basics") {
  JacobiElement t1{kIdentity, 1, 0}, t2{kIdentity, 0, 1};
  CHECK(jacobi_compose(t1, t2) == JacobiElement{kIdentity, 1, 1});

  // (I,(1,0)) * (S,(0,0)) -> (S, (1,0)*S) = (S,(0,-1))
  JacobiElement s{kS, 0, 0};
  CHECK(jacobi_compose(t1, s) == JacobiElement{kS, 0, -1});

  std::mt19937_64 rng(81);
  for (int i = 0; i < 20; ++i) {
    JacobiElement g{random_element(rng, 50), (std::int64_t)(rng() % 7) - 3, (std::int64_t)(rng() % 7) - 3};
    CHECK(jacobi_compose(g, JacobiElement{kIdentity, 0, 0}) == g);
    CHECK(jacobi_compose(jacobi_inverse(g), g) == JacobiElement{kIdentity, 0, 0});
  }
}

TEST_CASE("jacobi_compose is associative") {
  std::mt19937_64 rng(82);
  for (int i = 0; i < 1000; ++i) {
    JacobiElement a{random_element(rng, 30), (std::int64_t)(rng() % 5) - 2, (std::int64_t)(rng() % 5) - 2};
    JacobiElement b{random_element(rng, 30), (std::int64_t)(rng() % 5) - 2, (std::int64_t)(rng() % 5) - 2};
    JacobiElement c{random_element(rng, 30), (std::int64_t)(rng() % 5) - 2, (std::int64_t)(rng() % 5) - 2};
    CHECK(jacobi_compose(jacobi_compose(a, b), c) == jacobi_compose(a, jacobi_compose(b, c)));
  }
}

TEST_CASE("jacobi_act basics and composition") {
  auto [t1, z1] = jacobi_act(JacobiElement{kIdentity, 0, 1}, Complex(0, 1), Complex(0, 0));
  CHECK(std::abs(t1 - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(z1 - Complex(1, 0)) < 1e-15);

  Complex z{0.3, 0.2};
  auto [t2, z2] = jacobi_act(JacobiElement{kS}, Complex(0, 1), z);
  CHECK(std::abs(t2 - Complex(0, 1)) < 1e-15);
  CHECK(std::abs(z2 - z / Complex(0, 1)) < 1e-15);

  std::mt19937_64 rng(83);
  std::uniform_real_distribution<double> ux(-1.5, 1.5), uy(0.2, 2.5);
  for (int i = 0; i < 50; ++i) {
    JacobiElement a{random_element(rng, 20), (std::int64_t)(rng() % 5) - 2, (std::int64_t)(rng() % 5) - 2};
    JacobiElement b{random_element(rng, 20), (std::int64_t)(rng() % 5) - 2, (std::int64_t)(rng() % 5) - 2};
    Complex tau{ux(rng), uy(rng)}, zz{ux(rng), ux(rng)};
    auto [ti, zi] = jacobi_act(b, tau, zz);
    auto [to, zo] = jacobi_act(a, ti, zi);
    auto [tc, zc] = jacobi_act(jacobi_compose(a, b), tau, zz);
    CHECK(std::abs(to - tc) < 1e-12);
    CHECK(std::abs(zo - zc) < 1e-12);
    CHECK(tc.imag() > 0);
  }
}

TEST_CASE("word_decompose round trips") {
  CHECK(word_decompose(kT).product() == kT);
  CHECK(word_decompose(kMinusI).product() == kMinusI);
  CHECK(word_decompose(GroupElement{1, 0, 1, 1}).product() == GroupElement{1, 0, 1, 1});
  CHECK(word_decompose(kIdentity).product() == kIdentity);

  std::mt19937_64 rng(84);
  for (int i = 0; i < 1000; ++i) {
    GroupElement g = random_element(rng, 1000000);
    Word w = word_decompose(g);
    CHECK(w.product() == g);
    // O(log max entry) tokens
    CHECK(w.tokens.size() <= 64);
  }
}

TEST_CASE("coset_reps enumeration") {
  auto r1 = coset_reps(1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == kIdentity);
  CHECK(r1[1].c == 1);
  CHECK(r1[1].d == 0);

  auto r2 = coset_reps(2);
  REQUIRE(r2.size() == 3);
  CHECK(r2[2].c == 2);
  CHECK(r2[2].d == 1);

  // Nesting and distinct coprime rows.
  auto r7 = coset_reps(7), r8 = coset_reps(8);
  for (size_t i = 0; i < r7.size(); ++i) CHECK(r7[i] == r8[i]);
  std::set<std::pair<std::int64_t, std::int64_t>> rows;
  for (const auto& g : r8) {
    CHECK(g.det() == 1);
    CHECK(std::gcd(std::llabs(g.c), std::llabs(g.d == 0 ? 1 : g.d)) >= 1);
    CHECK(rows.insert({g.c, g.d}).second);
  }

  // Independent oracle: count of coprime pairs (c,d), 0 <= d < c <= 8.
  size_t expected = 1;
  for (int c = 1; c <= 8; ++c)
    for (int d = 0; d < c; ++d)
      if (std::gcd(c, d) == 1) ++expected;
  CHECK(r8.size() == expected);
}

TEST_CASE("reduce_to_fundamental lands in the fundamental domain") {
  std::mt19937_64 rng(85);
  std::uniform_real_distribution<double> ux(-8, 8), uy(0.05, 3);
  for (int i = 0; i < 200; ++i) {
    Complex tau{ux(rng), uy(rng)};
    Complex reduced;
    GroupElement g = reduce_to_fundamental(tau, &reduced);
    CHECK(std::abs(g.act(tau) - reduced) < 1e-9);
    CHECK(std::abs(reduced.real()) < 0.5 + 1e-9);
    CHECK(std::norm(reduced) > 1.0 - 1e-9);
  }
}
