#include <doctest.h>

#include "helpers.hpp"
#include "mlat/baer.hpp"
#include "mlat/corpus.hpp"
#include "mlat/elements.hpp"
#include "mlat/error.hpp"
#include "oracles.hpp"

using namespace mlat;
using testing::E;
using testing::S;

namespace {

std::vector<ElementId> ids(std::initializer_list<std::uint32_t> xs) {
  std::vector<ElementId> out;
  for (auto x : xs) out.emplace_back(x);
  return out;
}

ClosureMap identity(const MultLattice& M) {
  ClosureMap f;
  f.table = M.elements();
  return f;
}

}  // namespace

TEST_CASE("Baer elements of the fixtures") {
  auto C3 = fixture("C3");
  CHECK_FALSE(is_baer(C3, E(1)));
  CHECK(baer_elements(C3) == S({0, 2}));
  CHECK(baer_elements(fixture("B2")) == S({0, 1, 2, 3}));
  CHECK(baer_elements(fixture("N4")) == S({0, 3}));
  CHECK(baer_elements(fixture("Z30")).size() == 8);
  CHECK(baer_elements(gen_chain(0)) == S({0}));
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    CHECK(is_baer(M, M.bottom()));
    CHECK(is_baer(M, M.top()));
  }
}

TEST_CASE("Baer predicate matches the definition oracle") {
  for (auto M : {fixture("N4"), gen_zn(30), gen_zn(210), gen_chain(5), gen_boolean(3),
                 product(fixture("C3"), fixture("N4"))}) {
    const auto r = oracle::raw(M);
    for (auto x : M.elements()) {
      const bool want = oracle::baer(r, int(x.value));
      CHECK(is_baer(M, x) == want);
      CHECK(is_baer_char2(M, x) == want);
      CHECK(is_baer_char3(M, x) == want);
      CHECK(is_baer_char4(M, x) == want);
      CHECK(int(baer_closure(M)(x).value) == oracle::closure(r, int(x.value)));
    }
  }
}

TEST_CASE("Baer closure tables") {
  auto C3 = fixture("C3");
  CHECK(baer_closure(C3).table == ids({0, 2, 2}));
  CHECK(d_closure(C3).table == ids({0, 2, 2}));
  CHECK(baer_closure(fixture("N4")).table == ids({0, 3, 3, 3}));
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    auto cz = baer_closure(M);
    auto d = d_closure(M);
    CHECK(cz.kind == ClosureKind::BaerClosure);
    CHECK(d.kind == ClosureKind::DClosure);
    CHECK(is_closure_operator(M, cz));
    for (auto x : M.elements()) {
      CHECK((cz(x) == x) == is_baer(M, x));
      CHECK((d(x) == x) == is_baer(M, x));
      CHECK(M.leq(d(x), cz(x)));
    }
  }
  CHECK(to_string(ClosureKind::DClosure) == "d_closure");
}

TEST_CASE("B-multiplicativity") {
  CHECK(is_B_multiplicative(fixture("N4")));
  CHECK(is_B_multiplicative(gen_boolean(3)));
  CHECK(is_B_multiplicative(gen_chain(4)));
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    CHECK(is_B_multiplicative(M) == baer_closed_under_products(M));
  }
}

TEST_CASE("Baer frames") {
  auto C3 = baer_frame(fixture("C3"));
  CHECK(C3.carrier == S({0, 2}));
  CHECK(C3.frame.size() == 2);

  auto B2 = fixture("B2");
  auto fB2 = baer_frame(B2);
  CHECK(fB2.frame == B2);

  auto Z30 = baer_frame(fixture("Z30"));
  CHECK(Z30.frame.size() == 8);
  CHECK(oracle::isomorphic(oracle::raw(Z30.frame), oracle::raw(gen_boolean(3))));

  auto N4 = fixture("N4");
  auto fN4 = baer_frame(N4);
  CHECK(fN4.product(N4, N4.top(), N4.top()) == N4.top());
  CHECK(fN4.join(N4, N4.bottom(), N4.bottom()) == N4.bottom());
}

TEST_CASE("nucleus classification of the Baer closure") {
  // m is not Baer in C3, so cz(m) = 1 although m != 1; the
  // multiplicative-nucleus condition cz(a) = 1 iff a = 1 fails at m.
  auto C3 = fixture("C3");
  auto r = classify_nucleus(C3, baer_closure(C3));
  CHECK(r.nucleus.holds);
  CHECK(r.quantic_nucleus.holds);
  CHECK_FALSE(r.multiplicative_nucleus.holds);
  CHECK(r.multiplicative_nucleus.witness == ids({1}));

  auto N4 = fixture("N4");
  CHECK(classify_nucleus(N4, baer_closure(N4)).quantic_nucleus.holds);

  for (const auto& name : {"B2", "Z30"}) {
    auto M = fixture(name);
    auto rep = classify_nucleus(M, baer_closure(M));
    CHECK(rep.nucleus.holds);
    CHECK(rep.multiplicative_nucleus.holds);
    CHECK(rep.quantic_nucleus.holds);
    CHECK(rep.localic.holds);
  }
}

TEST_CASE("identity map as a nucleus") {
  auto B2 = fixture("B2");
  auto rep = classify_nucleus(B2, identity(B2));
  CHECK(rep.nucleus.holds);
  CHECK(rep.quantic_nucleus.holds);
  CHECK(rep.multiplicative_nucleus.holds);

  // N4: a·a = a but b·b = a != b = b ∧ b.
  auto N4 = fixture("N4");
  auto n4 = classify_nucleus(N4, identity(N4));
  CHECK(n4.nucleus.holds);
  CHECK(n4.quantic_nucleus.holds);
  CHECK_FALSE(n4.multiplicative_nucleus.holds);
  CHECK_FALSE(n4.localic.holds);
}

TEST_CASE("quantic identities") {
  CHECK(quantic_identities_check(fixture("C3")));
  CHECK(quantic_identities_check(fixture("N4")));
  CHECK(quantic_identities_check(gen_boolean(3)));
  CHECK(quantic_identities_check(fixture("Z30")));
}

TEST_CASE("Baer elements of a product") {
  auto C3 = fixture("C3");
  auto P = product(C3, C3);
  ElementSet want;
  for (auto a : baer_elements(C3))
    for (auto b : baer_elements(C3)) want.emplace_back(std::uint32_t(a.index() * 3 + b.index()));
  std::sort(want.begin(), want.end());
  CHECK(baer_elements(P) == want);
}
