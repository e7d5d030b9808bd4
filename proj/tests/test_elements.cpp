#include <doctest.h>

#include "helpers.hpp"
#include "mlat/corpus.hpp"
#include "mlat/elements.hpp"
#include "mlat/error.hpp"
#include "oracles.hpp"

using namespace mlat;
using testing::E;
using testing::named;
using testing::S;

TEST_CASE("residuals") {
  auto C3 = fixture("C3");
  CHECK(residual(C3, E(0), E(1)) == E(0));
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    for (auto a : M.elements()) {
      CHECK(residual(M, a, M.bottom()) == M.top());
      CHECK(residual(M, M.top(), a) == M.top());
    }
  }
}

TEST_CASE("annihilators on the small fixtures") {
  auto B2 = fixture("B2");
  CHECK(annihilator(B2, E(1)) == E(2));
  CHECK(double_annihilator(B2, E(1)) == E(1));
  auto C3 = fixture("C3");
  CHECK(annihilator(C3, E(1)) == E(0));
  CHECK(double_annihilator(C3, E(1)) == E(2));
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    CHECK(annihilator(M, M.bottom()) == M.top());
    CHECK(annihilator(M, M.top()) == M.bottom());
    CHECK(double_annihilator(M, M.bottom()) == M.bottom());
  }
}

TEST_CASE("annihilators in Z_n are complementary divisors") {
  for (unsigned n : {6u, 30u, 105u, 210u}) {
    auto M = gen_zn(n);
    const auto d = oracle::divisors_descending(n);
    for (auto x : M.elements()) {
      const unsigned want = n / d[x.index()];
      CHECK(M.label(annihilator(M, x)) == "(" + std::to_string(want) + ")");
    }
  }
}

TEST_CASE("annihilator algebra") {
  auto B2 = annihilator_algebra(fixture("B2"));
  CHECK(B2.carrier == S({0, 1, 2, 3}));
  CHECK(B2.complement[1] == E(2));
  CHECK(B2.complement[2] == E(1));
  CHECK(annihilator_algebra(fixture("C3")).carrier == S({0, 2}));
  auto one = gen_chain(0);
  CHECK(annihilator_algebra(one).carrier == S({0}));
}

TEST_CASE("radicals") {
  auto N4 = fixture("N4");
  CHECK(radical(N4, named(N4, "a")) == named(N4, "b"));
  CHECK(primes(N4) == S({0, 2}));
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    CHECK(radical(M, M.top()) == M.top());
  }
  CHECK(radical(fixture("B2"), E(1)) == E(1));
}

TEST_CASE("radical matches the power oracle") {
  for (auto M : {fixture("N4"), gen_zn(30), gen_zn(12), gen_zn(72), gen_chain(4),
                 product(fixture("N4"), fixture("C2"))}) {
    const auto r = oracle::raw(M);
    for (auto x : M.elements()) {
      CHECK(int(radical_by_powers(M, x).value) == oracle::radical(r, int(x.value)));
      CHECK(is_prime(M, x) == oracle::prime(r, int(x.value)));
    }
  }
  // The three routes agree on non-reduced lattices too.
  auto Z12 = gen_zn(12);
  CHECK(Z12.label(radical(Z12, Z12.bottom())) == "(6)");
}

TEST_CASE("maximal elements and meet-irreducibility") {
  CHECK(maximal_elements(fixture("C3")) == S({1}));
  auto B2 = fixture("B2");
  CHECK(classify(B2, E(1)).is_meet_irreducible);
  CHECK_FALSE(classify(B2, E(0)).is_meet_irreducible);
}

TEST_CASE("domains") {
  CHECK(is_domain(fixture("C3")));
  CHECK_FALSE(is_domain(fixture("B2")));
  CHECK(is_domain(fixture("N4")));
  CHECK(zero_divisors(fixture("B2")) == S({0, 1, 2}));
}

TEST_CASE("Jacobson radical") {
  CHECK(jacobson_radical(fixture("C3")) == E(1));
  CHECK_FALSE(is_semisimple(fixture("C3")));
  CHECK(jacobson_radical(fixture("B2")) == E(0));
  CHECK(is_semisimple(fixture("B2")));
  auto Z30 = fixture("Z30");
  CHECK(jacobson_radical(Z30) == Z30.bottom());
}

TEST_CASE("z-elements") {
  auto C3 = fixture("C3");
  CHECK_FALSE(is_z_element(C3, E(0)));
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    CHECK(is_z_element(M, M.top()));
    for (auto x : M.elements()) {
      CHECK(is_z_element(M, x) == is_z_element_by_inclusion(M, x));
      CHECK(is_z_element(M, x) == is_z_element_by_lower(M, x));
    }
  }
  auto Z30 = fixture("Z30");
  for (auto x : Z30.elements()) CHECK(is_z_element(Z30, x));
  CHECK(m_lower(C3, C3.top()) == C3.top());
}

TEST_CASE("classification flags match their definitions") {
  auto N4 = fixture("N4");
  const auto a = named(N4, "a"), b = named(N4, "b");
  auto ca = classify(N4, a);
  CHECK_FALSE(ca.is_prime);
  CHECK_FALSE(ca.is_radical);
  CHECK(ca.is_meet_irreducible);
  auto cb = classify(N4, b);
  CHECK(cb.is_prime);
  CHECK(cb.is_minimal_prime == false);
  CHECK(cb.is_maximal);
  CHECK(cb.is_semiprime);
  CHECK(classify(N4, N4.bottom()).is_minimal_prime);
}
