#include <doctest.h>

#include <set>

#include <json.hpp>

#include "helpers.hpp"
#include "mlat/baer.hpp"
#include "mlat/corpus.hpp"
#include "mlat/elements.hpp"
#include "mlat/error.hpp"
#include "mlat/verifier.hpp"

using namespace mlat;
using testing::E;

TEST_CASE("catalog ids are unique and cover T1 to T23") {
  std::set<std::string> ids, heads;
  for (const auto& c : check_catalog()) {
    CHECK(ids.insert(c.id).second);
    heads.insert(c.id.substr(0, c.id.find('.')));
  }
  CHECK(heads.size() == 23);
  for (int k = 1; k <= 23; ++k) CHECK(heads.count("T" + std::to_string(k)) == 1);
  CHECK(ids.count("T16.12") == 1);
  CHECK(ids.count("T16.13") == 0);
}

TEST_CASE("id filters") {
  CHECK(id_matches("T16", "T16"));
  CHECK(id_matches("T16.3", "T16"));
  CHECK_FALSE(id_matches("T16.3", "T1"));
  CHECK(id_matches("T1.3", "T1"));
  CHECK_FALSE(id_matches("T16", "T16.3"));
}

TEST_CASE("suite on Z30 passes everything") {
  auto r = run_suite(fixture("Z30"));
  CHECK(r.checks.size() == check_catalog().size());
  CHECK(r.count(CheckStatus::Fail) == 0);
  CHECK(r.count(CheckStatus::Skipped) == 0);
  REQUIRE(r.find("T13"));
  CHECK(r.find("T13")->detail.find("z-element: true, semisimple: true") != std::string::npos);
}

TEST_CASE("suite on C3") {
  auto r = run_suite(fixture("C3"));
  REQUIRE(r.find("T13"));
  CHECK(r.find("T13")->status == CheckStatus::Pass);
  CHECK(r.find("T13")->detail.find("z-element: false, semisimple: false") != std::string::npos);
  CHECK(r.find("T14")->status == CheckStatus::Pass);
  CHECK(r.find("T16.1")->status == CheckStatus::Pass);
  CHECK(r.find("T16.11")->status == CheckStatus::Pass);
  CHECK(r.find("T20.1")->status == CheckStatus::Pass);
}

TEST_CASE("reduced-only checks are skipped on Z12") {
  auto r = run_suite(gen_zn(12));
  for (const auto& info : check_catalog()) {
    const auto* c = r.find(info.id);
    REQUIRE(c);
    if (info.reduced_only) {
      CHECK(c->status == CheckStatus::Skipped);
      CHECK(c->status_text() == "SKIPPED(not-reduced)");
    } else {
      CHECK(c->status == CheckStatus::Pass);
    }
  }
}

TEST_CASE("--only selects clauses") {
  SuiteOptions o;
  o.only = {"T16"};
  auto r = run_suite(fixture("B2"), o);
  CHECK(r.checks.size() == 12);
  o.only = {"T1.3", "T9"};
  CHECK(run_suite(fixture("B2"), o).checks.size() == 2);
}

TEST_CASE("FAIL witnesses replay through the module operations") {
  // C3 with m·m = 0 is not reduced; forcing the reduced-only annihilator
  // identity gives m⊥⊥ ∧ m⊥⊥ = 1 but (mm)⊥⊥ = 0.
  auto M = testing::nilpotent_c3();
  SuiteOptions o;
  o.only = {"T4.4"};
  o.ignore_reduced = true;
  auto r = run_suite(M, o);
  REQUIRE(r.checks.size() == 1);
  const auto& c = r.checks[0];
  REQUIRE(c.status == CheckStatus::Fail);
  REQUIRE(c.witness);
  REQUIRE(c.witness->size() == 2);
  const auto a = (*c.witness)[0], b = (*c.witness)[1];
  CHECK(M.meet(double_annihilator(M, a), double_annihilator(M, b)) !=
        double_annihilator(M, M.mul(a, b)));
}

TEST_CASE("every FAIL on the fixtures and chains replays") {
  for (auto M : {fixture("C3"), fixture("N4"), gen_chain(4)}) {
    auto r = run_suite(M);
    const auto cz = baer_closure(M);
    for (const auto& c : r.checks) {
      if (c.status != CheckStatus::Fail) continue;
      REQUIRE(c.witness);
      const auto& w = *c.witness;
      if (c.id == "T16.3" || c.id == "T19.2") {
        CHECK(cz(w[0]) == M.top());
        CHECK(w[0] != M.top());
      } else if (c.id == "T21.1") {
        const auto m = w[0];
        CHECK(is_baer(M, m));
        CHECK_FALSE(is_maximal(M, m));
        for (auto x : baer_elements(M)) CHECK((!M.less(m, x) || x == M.top()));
      } else {
        FAIL("unexpected failing check " << c.id);
      }
    }
  }
}

TEST_CASE("JSON report") {
  auto M = fixture("N4");
  const auto a = run_suite(M).to_json();
  const auto b = run_suite(M).to_json();
  CHECK(a == b);
  auto j = nlohmann::json::parse(a);
  REQUIRE(j.is_array());
  CHECK(j.size() == check_catalog().size());
  for (const auto& e : j) {
    CHECK(e.contains("id"));
    CHECK(e.contains("status"));
    CHECK(e.contains("witness"));
    if (e["status"] == "FAIL")
      CHECK(e["witness"].is_array());
    else
      CHECK(e["witness"].is_null());
  }
}

TEST_CASE("search") {
  EnumerationConfig c;
  c.max_n = 3;
  auto nr = search(c, "not-reduced");
  REQUIRE(nr.hit);
  CHECK(*nr.hit == testing::nilpotent_c3());
  CHECK(nr.witness == std::vector<ElementId>{E(1)});

  c.max_n = 2;
  auto nb = search(c, "non-B-multiplicative");
  CHECK_FALSE(nb.hit);
  CHECK(nb.examined == 1);

  c.max_n = 4;
  auto cup = search(c, "theorem-cup-violated");
  CHECK_FALSE(cup.hit);
  CHECK(cup.examined > 0);

  CHECK_THROWS_AS(search(c, "no-such-predicate"), Error);
}
