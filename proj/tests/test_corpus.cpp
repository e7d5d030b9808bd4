#include <doctest.h>

#include <numeric>

#include "helpers.hpp"
#include "mlat/corpus.hpp"
#include "mlat/elements.hpp"
#include "mlat/error.hpp"
#include "mlat/io.hpp"
#include "oracles.hpp"

using namespace mlat;
using testing::E;
using testing::named;

namespace {

ErrorKind parse_failure(const std::string& text) {
  try {
    parse_mlat(text);
  } catch (const ValidationError& e) {
    return e.cause();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("parsed");
  return ErrorKind::InvalidArgument;
}

const char* kC3 =
    "MLAT 1\n"
    "n 3\n"
    "leq\n"
    "1 1 1\n"
    "0 1 1\n"
    "0 0 1\n"
    "mul\n"
    "0 0 0\n"
    "0 1 1\n"
    "0 1 2\n";

}  // namespace

TEST_CASE("generators") {
  CHECK(gen_chain(2) == fixture("C3"));
  CHECK(gen_chain(1) == fixture("C2"));
  CHECK(gen_boolean(2) == fixture("B2"));
  CHECK(gen_chain(0).size() == 1);
  CHECK(gen_boolean(4).size() == 16);
  CHECK(oracle::isomorphic(oracle::raw(gen_zn(2)), oracle::raw(fixture("C2"))));
}

TEST_CASE("meet multiplication needs distributivity") {
  auto M3 = build_lattice(order_from_covers(
      5, std::vector<std::pair<std::uint32_t, std::uint32_t>>{
             {0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  try {
    gen_meet_mult(M3);
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDistributive);
    CHECK(e.witness().size() == 3);
  }
}

TEST_CASE("Z_n against divisor arithmetic") {
  for (unsigned n : {2u, 6u, 12u, 30u, 36u, 210u}) {
    auto M = gen_zn(n);
    const auto d = oracle::divisors_descending(n);
    REQUIRE(M.size() == d.size());
    CHECK(oracle::is_multiplicative_lattice(oracle::raw(M)));
    for (std::size_t i = 0; i < d.size(); ++i) {
      CHECK(M.label(ElementId(std::uint32_t(i))) == "(" + std::to_string(d[i]) + ")");
      for (std::size_t j = 0; j < d.size(); ++j) {
        const auto ei = ElementId(std::uint32_t(i)), ej = ElementId(std::uint32_t(j));
        CHECK(M.leq(ei, ej) == (d[i] % d[j] == 0));
        const auto g = std::gcd(static_cast<unsigned long long>(d[i]) * d[j],
                                static_cast<unsigned long long>(n));
        CHECK(M.label(M.mul(ei, ej)) == "(" + std::to_string(g) + ")");
        CHECK(M.label(M.join(ei, ej)) == "(" + std::to_string(std::gcd(d[i], d[j])) + ")");
        CHECK(M.label(M.meet(ei, ej)) == "(" + std::to_string(std::lcm(d[i], d[j])) + ")");
      }
    }
    CHECK(is_reduced(M) == oracle::squarefree(n));
  }
  auto Z30 = gen_zn(30);
  CHECK(is_semisimple(Z30));
  CHECK_FALSE(is_reduced(gen_zn(12)));
  CHECK_THROWS_AS(gen_zn(1), Error);
}

TEST_CASE("products") {
  auto C2 = fixture("C2");
  CHECK(oracle::isomorphic(oracle::raw(product(C2, C2)), oracle::raw(fixture("B2"))));
  auto N4 = fixture("N4");
  auto P = product(N4, gen_chain(0));
  CHECK(oracle::isomorphic(oracle::raw(P), oracle::raw(N4)));
  CHECK(P.label(E(1)) == "(a,0)");
  auto Q = product(fixture("C3"), fixture("C3"));
  CHECK(Q.size() == 9);
  CHECK(oracle::is_multiplicative_lattice(oracle::raw(Q)));
}

TEST_CASE("fixtures") {
  auto N4 = fixture("N4");
  CHECK(is_reduced(N4));
  CHECK(radical(N4, named(N4, "a")) == named(N4, "b"));
  CHECK(fixture("Z30").size() == 8);
  CHECK_THROWS_AS(fixture("Q8"), Error);
  try {
    fixture("Q8");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::UnknownFixture);
  }
}

TEST_CASE("specifiers") {
  auto s = LatticeSpecifier::parse("chain:2*zn:6*fixture:N4");
  CHECK(s.to_string() == "chain:2*zn:6*fixture:N4");
  CHECK(realize(s).size() == 3 * 4 * 4);
  CHECK(realize(LatticeSpecifier::parse("boolean:3")).size() == 8);
  CHECK_THROWS_AS(LatticeSpecifier::parse("chain"), Error);
  CHECK_THROWS_AS(LatticeSpecifier::parse("chain:x"), Error);
  CHECK_THROWS_AS(LatticeSpecifier::parse("torus:3"), Error);
}

TEST_CASE("MLAT round trip") {
  for (const auto& name : fixture_names()) {
    auto M = fixture(name);
    CHECK(parse_mlat(emit_mlat(M)) == M);
  }
  auto P = product(fixture("N4"), fixture("B2"));
  CHECK(parse_mlat(emit_mlat(P)) == P);
  CHECK(parse_mlat(kC3) == fixture("C3"));
}

TEST_CASE("MLAT parse errors") {
  std::string bad = kC3;
  bad.replace(bad.rfind('2'), 1, "3");
  try {
    parse_mlat(bad);
    FAIL("parsed");
  } catch (const ParseError& e) {
    CHECK(e.line() == 10);
    CHECK(e.column() == 5);
  }
  CHECK(parse_failure("MLAT 2\n") == ErrorKind::ParseError);
  CHECK(parse_failure("") == ErrorKind::ParseError);
  CHECK(parse_failure("MLAT 1\nn 0\n") == ErrorKind::ParseError);
  CHECK(parse_failure(std::string(kC3) + "extra\n") == ErrorKind::ParseError);
  std::string crlf = kC3;
  crlf.insert(6, "\r");
  CHECK(parse_failure(crlf) == ErrorKind::ParseError);
  std::string leq2 = kC3;
  leq2.replace(leq2.find("0 1 1\n"), 1, "2");
  CHECK(parse_failure(leq2) == ErrorKind::ParseError);
}

TEST_CASE("MLAT validation errors") {
  std::string mm1 = kC3;
  mm1.replace(mm1.rfind("0 1 1"), 5, "0 2 1");
  const auto k = parse_failure(mm1);
  CHECK((k == ErrorKind::IdentityFails || k == ErrorKind::NotJoinDistributive));
  std::string cyc = kC3;
  cyc.replace(cyc.find("0 0 1"), 5, "1 0 1");
  CHECK(parse_failure(cyc) == ErrorKind::NotAPartialOrder);
}

TEST_CASE("names and tabs") {
  const std::string text =
      "MLAT 1\nn 3\nnames 0 m 1\nleq\n1\t1 1\n0 1 1\n0 0 1\nmul\n0 0 0\n0 1 1\n0 1 2\n";
  auto M = parse_mlat(text);
  CHECK(M.label(E(1)) == "m");
  CHECK(emit_mlat(M) == "MLAT 1\nn 3\nnames 0 m 1\nleq\n1 1 1\n0 1 1\n0 0 1\nmul\n0 0 0\n0 1 1\n0 1 2\n");
}

TEST_CASE("DOT export") {
  const auto dot = emit_dot(fixture("N4"));
  CHECK(dot.find("rankdir=BT") != std::string::npos);
  CHECK(dot.find("n1 [label=\"a\"]") != std::string::npos);
  CHECK(dot.find("n0 -> n1;") != std::string::npos);
  CHECK(dot.find("n0 -> n2;") == std::string::npos);
  const auto named_dot = emit_dot(parse_mlat(
      "MLAT 1\nn 2\nnames 0 x\"y\nleq\n1 1\n0 1\nmul\n0 0\n0 1\n"));
  CHECK(named_dot.find("label=\"x\\\"y\"") != std::string::npos);
}

TEST_CASE("enumeration counts") {
  EnumerationConfig c;
  c.max_n = 1;
  CHECK(enumerate(c).size() == 1);
  c.max_n = 2;
  const auto two = enumerate(c);
  REQUIRE(two.size() == 2);
  CHECK(two[1] == fixture("C2"));

  auto c3_tables = enumerate_multiplications(fixture("C3").lattice(), true);
  CHECK(c3_tables.size() == 2);
  std::size_t reduced = 0;
  for (const auto& M : c3_tables)
    if (is_reduced(M)) {
      ++reduced;
      CHECK(M == fixture("C3"));
    }
  CHECK(reduced == 1);
}

TEST_CASE("enumeration matches the axiom oracle on all commutative tables") {
  // Every symmetric table with top identity and bottom absorbing, filtered
  // by the oracle, against the library's enumeration without dedup.
  for (unsigned n = 2; n <= 4; ++n)
    for (const auto& L : enumerate_lattices(n, false)) {
      std::vector<std::pair<unsigned, unsigned>> free;
      for (unsigned i = 1; i + 1 < n; ++i)
        for (unsigned j = i; j + 1 < n; ++j) free.emplace_back(i, j);
      std::size_t total = 1;
      for (std::size_t k = 0; k < free.size(); ++k) total *= n;
      std::vector<MulTable> accepted;
      for (std::size_t code = 0; code < total; ++code) {
        MulTable t(n * n);
        for (unsigned x = 0; x < n; ++x) {
          t[x] = t[x * n] = ElementId(0);
          t[(n - 1) * n + x] = t[x * n + n - 1] = ElementId(x);
        }
        std::size_t c = code;
        for (auto [i, j] : free) {
          t[i * n + j] = t[j * n + i] = ElementId(std::uint32_t(c % n));
          c /= n;
        }
        if (oracle::is_multiplicative_lattice(oracle::raw_from(L, t))) accepted.push_back(t);
      }
      auto found = enumerate_multiplications(L, false);
      std::vector<MulTable> tables;
      for (auto& M : found) tables.push_back(M.table());
      std::sort(tables.begin(), tables.end());
      std::sort(accepted.begin(), accepted.end());
      CHECK(tables == accepted);
    }
}
