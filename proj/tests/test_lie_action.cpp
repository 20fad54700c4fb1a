#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <complex>
#include <random>

#include "specdim/lie_action.hpp"

using namespace specdim;

namespace {

GaussianRational gr(int re, int im = 0) { return {Rational(re), Rational(im)}; }

CoordinatePolynomial random_monomial(const SphereFamily& fam, std::mt19937_64& rng,
                                     int max_degree) {
  const int nv = coordinate_count(fam);
  CoordinatePolynomial::Exponents e(nv, 0);
  int deg = 1 + int(rng() % max_degree);
  for (int i = 0; i < deg; ++i) ++e[rng() % nv];
  CoordinatePolynomial p(nv);
  p.add_term(e, gr(1 + int(rng() % 3), int(rng() % 3) - 1));
  return p;
}

}  // namespace

TEST_CASE("polynomial arithmetic") {
  CoordinatePolynomial x = CoordinatePolynomial::variable(2, 0);
  CoordinatePolynomial y = CoordinatePolynomial::variable(2, 1);
  CoordinatePolynomial one = CoordinatePolynomial::constant(2, gr(1));

  CHECK((x + y) - y == x);
  CHECK((x - x).is_zero());
  CHECK(x * one == x);
  CHECK((x * y).terms().size() == 1);
  CHECK((x + y) * (x - y) == x * x - y * y);

  GaussianRational s;
  CHECK(x.scaled(gr(0, 2)).proportional_to(x, s));
  CHECK(s == gr(0, 2));
  CHECK_FALSE((x + y).proportional_to(x, s));

  auto v = x * x + y.scaled(gr(3));
  std::complex<double> val = v.eval({{2.0, 0.0}, {0.0, 1.0}});
  CHECK(val.real() == doctest::Approx(4.0));
  CHECK(val.imag() == doctest::Approx(3.0));
}

TEST_CASE("generator action on coordinates") {
  SphereFamily a1(Family::OddA, 1);
  const int nv = coordinate_count(a1);
  REQUIRE(nv == 4);
  auto z1 = CoordinatePolynomial::variable(nv, 0);
  auto z2 = CoordinatePolynomial::variable(nv, 1);

  CHECK(act(a1, {GenType::E, 1}, z2) == z1);
  CHECK(act(a1, {GenType::E, 1}, z1).is_zero());
  CHECK(act(a1, {GenType::H, 1}, z1) == z1);
  CHECK(act(a1, {GenType::H, 1}, z2) == z2.scaled(gr(-1)));
  CHECK(act(a1, {GenType::F, 1}, z1) == z2);
  CHECK(act(a1, {GenType::E, 1}, CoordinatePolynomial::constant(nv, gr(5))).is_zero());

  ActionConvention unset{StarRule::Unset};
  CHECK_THROWS_AS(act(a1, {GenType::E, 1}, z1, unset), ConventionUnset);
}

TEST_CASE("action is a derivation") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    SphereFamily fam = t % 3 == 0   ? SphereFamily(Family::OddA, 1 + int(rng() % 3))
                       : t % 3 == 1 ? SphereFamily(Family::EvenB, 1 + int(rng() % 3))
                                    : SphereFamily(Family::OddD, 2 + int(rng() % 2));
    auto p = random_monomial(fam, rng, 3);
    auto q = random_monomial(fam, rng, 3);
    GenType ty = t % 2 ? GenType::E : GenType::F;
    ChevalleyGenerator gen{ty, 1 + int(rng() % fam.n)};
    CHECK(act(fam, gen, p * q) == act(fam, gen, p) * q + p * act(fam, gen, q));
  }
}

TEST_CASE("highest-weight monomials are annihilated by every raising operator") {
  for (int n = 1; n <= 3; ++n) {
    SphereFamily fam(Family::OddA, n);
    for (int g1 = 0; g1 <= 5; ++g1)
      for (int g2 = 0; g2 <= 5; ++g2) {
        auto rep = hwv_check_symbolic(fam, {g1, g2});
        REQUIRE(rep.all_annihilated);
        REQUIRE(rep.h_eigenvector);
      }
  }
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k <= 10; ++k) {
      auto rep = hwv_check_symbolic(SphereFamily(Family::EvenB, n), SpectrumIndex::single(k));
      REQUIRE(rep.all_annihilated);
      REQUIRE(rep.h_eigenvector);
    }
  for (int n = 2; n <= 3; ++n)
    for (int k = 0; k <= 10; ++k) {
      auto rep = hwv_check_symbolic(SphereFamily(Family::OddD, n), SpectrumIndex::single(k));
      REQUIRE(rep.all_annihilated);
      REQUIRE(rep.h_eigenvector);
    }
}

TEST_CASE("measured Cartan eigenvalues") {
  auto rep = hwv_check_symbolic(SphereFamily(Family::OddA, 2), {2, 1});
  REQUIRE(rep.h_eigenvalues.size() == 2);
  CHECK(rep.h_eigenvalues[0] == 2);
  CHECK(rep.h_eigenvalues[1] == 1);

  auto rep1 = hwv_check_symbolic(SphereFamily(Family::OddA, 1), {2, 1});
  CHECK(rep1.h_eigenvalues[0] == 3);  // both exponents feed the single Cartan

  auto repb = hwv_check_symbolic(SphereFamily(Family::EvenB, 2), SpectrumIndex::single(4));
  CHECK(repb.h_eigenvalues[0] == 4);
  CHECK(repb.h_eigenvalues[1] == 0);

  auto rep0 = hwv_check_symbolic(SphereFamily(Family::OddD, 2), SpectrumIndex::single(0));
  CHECK(rep0.h_eigenvalues == std::vector<Rational>{0, 0});
}

TEST_CASE("numerical oracle confirms annihilation") {
  SphereFamily a1(Family::OddA, 1);
  CHECK(directional_derivative_oracle(a1, hwv_monomial(a1, {2, 1}), {GenType::E, 1}, 20, 42) <
        1e-6);
  CHECK(directional_derivative_oracle(a1, CoordinatePolynomial::constant(4, gr(1)),
                                      {GenType::F, 1}, 5, 42) < 1e-10);
  SphereFamily d2(Family::OddD, 2);
  CHECK(directional_derivative_oracle(d2, hwv_monomial(d2, SpectrumIndex::single(3)),
                                      {GenType::E, 2}, 20, 42) < 1e-6);
}

TEST_CASE("oracle matches the symbolic action sample by sample") {
  SphereFamily a1(Family::OddA, 1);
  auto z2 = CoordinatePolynomial::variable(4, 1);
  for (const auto& s : directional_derivative_samples(a1, z2, {GenType::E, 1}, 20, 42))
    CHECK(std::abs(s.derivative - s.coords[0]) <= 1e-6);  // E_1(z_2) = z_1

  std::mt19937_64 rng(23);
  int done = 0;
  while (done < 50) {
    SphereFamily fam = done % 3 == 0   ? SphereFamily(Family::OddA, 1 + int(rng() % 3))
                       : done % 3 == 1 ? SphereFamily(Family::EvenB, 1 + int(rng() % 3))
                                       : SphereFamily(Family::OddD, 2 + int(rng() % 2));
    auto p = random_monomial(fam, rng, 4);
    GenType ty = done % 3 ? GenType::E : GenType::F;
    ChevalleyGenerator gen{ty, 1 + int(rng() % fam.n)};
    auto q = act(fam, gen, p);
    for (const auto& s : directional_derivative_samples(fam, p, gen, 5, 100 + done))
      REQUIRE(std::abs(q.eval(s.coords) - s.derivative) <= 1e-6);
    ++done;
  }
}

TEST_CASE("the conjugate star rule contradicts the oracle") {
  SphereFamily a1(Family::OddA, 1);
  auto w2 = CoordinatePolynomial::variable(4, 3);
  ChevalleyGenerator f1{GenType::F, 1};

  ActionConvention minus{StarRule::MinusTranspose};
  ActionConvention conj{StarRule::Conjugate};
  auto qm = act(a1, f1, w2, minus);
  auto qc = act(a1, f1, w2, conj);
  CHECK(qm == CoordinatePolynomial::variable(4, 2).scaled(gr(-1)));
  CHECK(qc.is_zero());

  bool minus_ok = true, conj_ok = true;
  for (const auto& s : directional_derivative_samples(a1, w2, f1, 10, 42)) {
    if (std::abs(qm.eval(s.coords) - s.derivative) > 1e-6) minus_ok = false;
    if (std::abs(qc.eval(s.coords) - s.derivative) > 1e-6) conj_ok = false;
  }
  CHECK(minus_ok);
  CHECK_FALSE(conj_ok);
}

TEST_CASE("oracle sampling is deterministic in the seed") {
  SphereFamily b2(Family::EvenB, 2);
  auto p = hwv_monomial(b2, SpectrumIndex::single(2));
  auto s1 = directional_derivative_samples(b2, p, {GenType::F, 1}, 4, 7);
  auto s2 = directional_derivative_samples(b2, p, {GenType::F, 1}, 4, 7);
  REQUIRE(s1.size() == s2.size());
  for (std::size_t i = 0; i < s1.size(); ++i) {
    CHECK(s1[i].derivative == s2[i].derivative);
    CHECK(s1[i].coords == s2[i].coords);
  }
}
