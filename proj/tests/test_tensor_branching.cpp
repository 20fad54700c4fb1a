#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "specdim/tensor_branching.hpp"

using namespace specdim;

namespace {

Weight iw(std::vector<int> v) {
  Weight w;
  for (int x : v) w.coords.emplace_back(x);
  return w;
}

std::vector<Rational> rw(std::vector<int> v) { return iw(std::move(v)).coords; }

template <typename F>
void for_dominant(RootKind kind, int rank, int max_entry, F&& f) {
  const int len = kind == RootKind::A ? rank + 1 : rank;
  std::vector<int> e(len, 0);
  const bool d_last = kind == RootKind::D;
  if (d_last) e[len - 1] = -max_entry;
  while (true) {
    Weight w = iw(e);
    if (is_dominant(kind, w)) f(w);
    int i = len - 1;
    for (; i >= 0; --i) {
      if (e[i] < max_entry) {
        ++e[i];
        for (int j = i + 1; j < len; ++j) e[j] = (d_last && j == len - 1) ? -max_entry : 0;
        break;
      }
    }
    if (i < 0) return;
  }
}

BigInt defining_dim(RootKind kind, int rank) {
  switch (kind) {
    case RootKind::A: return rank + 1;
    case RootKind::B: return 2 * rank + 1;
    case RootKind::D: return 2 * rank;
  }
  return 0;
}

}  // namespace

TEST_CASE("one-box tensor rules on known decompositions") {
  auto a = fundamental_tensor(RootKind::A, 2, iw({1, 0, -1}));
  REQUIRE(a.size() == 3);
  CHECK(a[rw({2, 0, -1})] == 1);
  CHECK(a[rw({1, 1, -1})] == 1);
  CHECK(a[rw({1, 0, 0})] == 1);

  auto b = fundamental_tensor(RootKind::B, 2, iw({1, 0}));
  REQUIRE(b.size() == 3);
  CHECK(b[rw({2, 0})] == 1);
  CHECK(b[rw({1, 1})] == 1);
  CHECK(b[rw({0, 0})] == 1);
  CHECK(b.count(rw({1, 0})) == 0);  // zero weight cancels when lambda_n = 0

  auto b11 = fundamental_tensor(RootKind::B, 2, iw({1, 1}));
  CHECK(b11.count(rw({1, 1})) == 1);  // zero weight survives when lambda_n > 0

  auto t = fundamental_tensor(RootKind::A, 1, iw({0, 0}));
  REQUIRE(t.size() == 1);
  CHECK(t[rw({1, 0})] == 1);

  CHECK_THROWS_AS(fundamental_tensor(RootKind::A, 2, iw({0, 1, 0})), NotDominant);
}

TEST_CASE("reflection oracle basics") {
  auto t = brauer_klimyk_oracle(RootKind::A, 2, iw({0, 0, 0}));
  REQUIRE(t.size() == 1);
  CHECK(t[rw({1, 0, 0})] == 1);

  auto b = brauer_klimyk_oracle(RootKind::B, 2, iw({1, 0}));
  REQUIRE(b.size() == 3);
  CHECK(b.count(rw({1, 0})) == 0);

  CHECK_THROWS_AS(brauer_klimyk_oracle(RootKind::A, 7, Weight::zero(8)), RankLimit);
}

TEST_CASE("tensor rules agree with the reflection oracle exhaustively") {
  for (RootKind k : {RootKind::A, RootKind::B, RootKind::D})
    for (int rank = (k == RootKind::D ? 2 : 1); rank <= 4; ++rank)
      for_dominant(k, rank, 3, [&](const Weight& w) {
        REQUIRE(fundamental_tensor(k, rank, w) == brauer_klimyk_oracle(k, rank, w));
      });
}

TEST_CASE("tensor decompositions conserve dimension") {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> pick_entry(0, 6);
  for (int t = 0; t < 200; ++t) {
    RootKind kind = t % 3 == 0 ? RootKind::A : t % 3 == 1 ? RootKind::B : RootKind::D;
    int rank = 2 + int(rng() % (kind == RootKind::D ? 4 : 4));
    const int len = kind == RootKind::A ? rank + 1 : rank;
    std::vector<int> e(len);
    for (auto& x : e) x = pick_entry(rng);
    std::sort(e.rbegin(), e.rend());
    if (kind == RootKind::A)
      for (auto& x : e) x -= e.back();
    if (kind == RootKind::D && rng() % 2) e.back() = -e.back();
    Weight w = iw(e);
    if (!is_dominant(kind, w)) continue;

    RootSystem rs = make_root_system(kind, rank);
    BigInt total = 0;
    for (const auto& [mu, mult] : fundamental_tensor(kind, rank, w))
      total += mult * weyl_dimension(rs, Weight(mu));
    REQUIRE(total == defining_dim(kind, rank) * weyl_dimension(rs, w));
  }
}

TEST_CASE("bounded leap examples") {
  // every dominant su(3) weight is spherical (the single middle entry can
  // always absorb the branching chain), so all three tensor components map
  // back to spectrum indices
  auto a = bounded_leap_check(SphereFamily(Family::OddA, 2), {1, 1});
  REQUIRE(a.reachable.size() == 3);
  CHECK(a.reachable[0] == SpectrumIndex(0, 2));
  CHECK(a.reachable[1] == SpectrumIndex(1, 0));
  CHECK(a.reachable[2] == SpectrumIndex(2, 1));
  CHECK(a.max_abs_shift == 1);
  CHECK(a.two_sided_ok);
  CHECK(a.one_sided_discrepancy);  // the (1,0) component sits below (1,1)

  // for n >= 3 the extra component is no longer spherical and the set
  // matches the one-sided pattern plus the conjugate drop
  auto a3 = bounded_leap_check(SphereFamily(Family::OddA, 3), {1, 1});
  REQUIRE(a3.reachable.size() == 2);
  CHECK(a3.reachable[0] == SpectrumIndex(1, 0));
  CHECK(a3.reachable[1] == SpectrumIndex(2, 1));

  auto b = bounded_leap_check(SphereFamily(Family::EvenB, 2), SpectrumIndex::single(3));
  REQUIRE(b.reachable.size() == 2);
  CHECK(b.reachable[0] == SpectrumIndex::single(2));
  CHECK(b.reachable[1] == SpectrumIndex::single(4));
  CHECK(b.max_abs_shift == 1);
  CHECK_FALSE(b.one_sided_discrepancy);

  auto d = bounded_leap_check(SphereFamily(Family::OddD, 2), SpectrumIndex::single(0));
  REQUIRE(d.reachable.size() == 1);
  CHECK(d.reachable[0] == SpectrumIndex::single(1));
}

TEST_CASE("leaps stay bounded across the families") {
  for (int n = 1; n <= 4; ++n) {
    SphereFamily fam(Family::OddA, n);
    for (int g1 = 0; g1 <= 12; ++g1)
      for (int g2 = 0; g2 <= 12; ++g2) REQUIRE(bounded_leap_check(fam, {g1, g2}).two_sided_ok);
  }
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 12; ++k)
      REQUIRE(bounded_leap_check(SphereFamily(Family::EvenB, n), SpectrumIndex::single(k))
                  .two_sided_ok);
  for (int n = 2; n <= 4; ++n)
    for (int k = 0; k <= 12; ++k)
      REQUIRE(bounded_leap_check(SphereFamily(Family::OddD, n), SpectrumIndex::single(k))
                  .two_sided_ok);
}
