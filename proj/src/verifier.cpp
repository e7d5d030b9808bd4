#include "mlat/verifier.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <random>
#include <sstream>

#include <json.hpp>

#include "mlat/baer.hpp"
#include "mlat/corpus.hpp"
#include "mlat/elements.hpp"
#include "mlat/error.hpp"
#include "mlat/morphism.hpp"

namespace mlat {

namespace {

using u32 = std::uint32_t;

// Everything the checks read, computed once per lattice.
struct Analysis {
  explicit Analysis(const MultLattice& lattice)
      : M(lattice), n(lattice.size()), reduced(is_reduced(lattice)) {
    for (auto x : M.elements()) perp.push_back(annihilator(M, x));
    for (auto x : M.elements()) dd.push_back(perp[perp[x.index()].index()]);
    for (auto x : M.elements()) rad.push_back(radical_by_powers(M, x));
    res.resize(n * n);
    for (auto a : M.elements())
      for (auto b : M.elements()) res[a.index() * n + b.index()] = residual(M, a, b);
    B = baer_elements(M);
    baer.assign(n, 0);
    for (auto b : B) baer[b.index()] = 1;
    P = primes(M);
    prime.assign(n, 0);
    for (auto p : P) prime[p.index()] = 1;
    Max = maximal_elements(M);
    maximal.assign(n, 0);
    for (auto m : Max) maximal[m.index()] = 1;
    cz = baer_closure(M);
    d = d_closure(M);
    b_mult = is_B_multiplicative(M);
    for (auto a : M.elements()) {
      max_above.push_back(maximal_set_above(M, a));
      mlow.push_back(M.meet_set(max_above.back()));
    }
  }

  bool is_baer(ElementId x) const { return baer[x.index()] != 0; }
  bool is_prime(ElementId x) const { return prime[x.index()] != 0; }
  bool is_max(ElementId x) const { return maximal[x.index()] != 0; }
  ElementId perp_of(ElementId x) const { return perp[x.index()]; }
  ElementId dd_of(ElementId x) const { return dd[x.index()]; }
  ElementId rad_of(ElementId x) const { return rad[x.index()]; }
  ElementId residual_of(ElementId a, ElementId b) const {
    return res[a.index() * n + b.index()];
  }
  const std::vector<ElementId>& E() const { return M.elements(); }

  const MultLattice& M;
  std::size_t n;
  bool reduced;
  std::vector<ElementId> perp, dd, rad, res;
  ElementSet B, P, Max;
  std::vector<char> baer, prime, maximal;
  ClosureMap cz, d;
  bool b_mult = false;
  std::vector<ElementSet> max_above;
  std::vector<ElementId> mlow;
};

struct Outcome {
  CheckStatus status = CheckStatus::Pass;
  std::string reason;
  std::optional<std::vector<ElementId>> witness;
  std::string detail;
};

Outcome pass(std::string detail = {}) { return {CheckStatus::Pass, {}, {}, std::move(detail)}; }
Outcome fail(std::vector<ElementId> witness, std::string detail = {}) {
  return {CheckStatus::Fail, {}, std::move(witness), std::move(detail)};
}
Outcome fail_no_witness(std::string detail) {
  return {CheckStatus::Fail, {}, std::nullopt, std::move(detail)};
}
Outcome skip(std::string reason) { return {CheckStatus::Skipped, std::move(reason), {}, {}}; }

std::string yes_no(bool b) { return b ? "true" : "false"; }

// Visits every subset of `items` when small, otherwise all pairs plus a
// fixed-seed random sample. Stops and returns false when `f` does.
bool for_subsets(const std::vector<ElementId>& items,
                 const std::function<bool(const std::vector<ElementId>&)>& f) {
  const std::size_t k = items.size();
  if (k <= 12) {
    for (u32 mask = 0; mask < (1u << k); ++mask) {
      std::vector<ElementId> S;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) S.push_back(items[i]);
      if (!f(S)) return false;
    }
    return true;
  }
  for (auto a : items)
    for (auto b : items)
      if (!f({a, b})) return false;
  std::mt19937 rng(0x5eed + static_cast<unsigned>(k));
  for (int trial = 0; trial < 512; ++trial) {
    std::vector<ElementId> S;
    for (auto x : items)
      if (rng() & 1u) S.push_back(x);
    if (!f(S)) return false;
  }
  return true;
}

using CheckFn = std::function<Outcome(const Analysis&)>;

struct CheckDef {
  CheckInfo info;
  CheckFn run;
};

// ---- T1 multiplication laws ----------------------------------------------

Outcome bip_1(const Analysis& A) {
  for (auto x : A.E())
    for (auto y : A.E())
      if (!A.M.leq(A.M.mul(x, y), x)) return fail({x, y});
  return pass();
}
Outcome bip_2(const Analysis& A) {
  for (auto x : A.E())
    for (auto y : A.E())
      if (!A.M.leq(A.M.mul(x, y), A.M.meet(x, y))) return fail({x, y});
  return pass();
}
Outcome bip_3(const Analysis& A) {
  for (auto x : A.E())
    if (A.M.mul(x, A.M.bottom()) != A.M.bottom()) return fail({x});
  return pass();
}
Outcome bip_4(const Analysis& A) {
  for (auto x : A.E())
    for (auto y : A.E())
      if (A.M.leq(x, y))
        for (auto z : A.E())
          if (!A.M.leq(A.M.mul(x, z), A.M.mul(y, z))) return fail({x, y, z});
  return pass();
}
Outcome bip_5(const Analysis& A) {
  for (auto x : A.E())
    for (auto y : A.E()) {
      if (!A.M.leq(x, y)) continue;
      for (auto u : A.E())
        for (auto v : A.E())
          if (A.M.leq(u, v) && !A.M.leq(A.M.mul(x, u), A.M.mul(y, v)))
            return fail({x, y, u, v});
    }
  return pass();
}

// ---- T2, T3 ------------------------------------------------------------------

Outcome flm(const Analysis& A) {
  for (auto a : A.E()) {
    if (a == A.M.top()) continue;
    if (A.max_above[a.index()].empty()) return fail({a});
  }
  return pass();
}

Outcome radical_formula(const Analysis& A) {
  for (auto x : A.E()) {
    const auto r1 = A.rad_of(x);
    const auto r2 = radical_via_primes(A.M, x);
    const auto r3 = radical_via_minimal_primes(A.M, x);
    if (r1 != r2 || r1 != r3) return fail({x, r1, r2, r3});
  }
  return pass();
}

// ---- T4 annihilators --------------------------------------------------------

Outcome pae_1(const Analysis& A) {
  for (auto a : A.E())
    for (auto b : A.E())
      if (A.M.leq(a, b) && !A.M.leq(A.perp_of(b), A.perp_of(a))) return fail({a, b});
  return pass();
}
Outcome pae_2(const Analysis& A) {
  for (auto a : A.E())
    if (!A.M.leq(a, A.dd_of(a))) return fail({a});
  return pass();
}
Outcome pae_3(const Analysis& A) {
  for (auto a : A.E())
    if (A.perp_of(A.dd_of(a)) != A.perp_of(a)) return fail({a});
  return pass();
}
Outcome pae_4(const Analysis& A) {
  for (auto a : A.E())
    for (auto b : A.E())
      if (A.M.meet(A.dd_of(a), A.dd_of(b)) != A.dd_of(A.M.mul(a, b))) return fail({a, b});
  return pass();
}
Outcome pae_5(const Analysis& A) {
  for (auto a : A.E())
    for (auto b : A.E()) {
      if (!A.M.leq(A.perp_of(a), A.perp_of(b))) continue;
      for (auto c : A.E())
        if (!A.M.leq(A.perp_of(A.M.mul(a, c)), A.perp_of(A.M.mul(b, c))))
          return fail({a, b, c});
    }
  return pass();
}

Outcome annihilators_boolean(const Analysis& A) {
  try {
    const auto alg = annihilator_algebra(A.M);
    return pass(std::to_string(alg.carrier.size()) + " annihilator elements");
  } catch (const Error& e) {
    std::vector<ElementId> w;
    for (auto i : e.witness()) w.emplace_back(i);
    return fail(w, e.what());
  }
}

// ---- T6, T7 Baer characterizations -----------------------------------------

Outcome epbe_1(const Analysis& A) {
  for (auto b : A.E())
    if (is_baer_char2(A.M, b) != A.is_baer(b)) return fail({b});
  return pass();
}
Outcome epbe_2(const Analysis& A) {
  for (auto b : A.B)
    if (A.rad_of(b) != b) return fail({b});
  return pass();
}
Outcome epbe_3(const Analysis& A) {
  for (auto b : A.B)
    for (auto p : minimal_primes_above(A.M, b))
      if (!A.is_baer(p)) return fail({b, p});
  return pass();
}
Outcome epbe_4(const Analysis& A) {
  for (auto b : A.B) {
    ElementId acc = A.M.top();
    for (auto p : A.P)
      if (A.is_baer(p) && A.M.leq(b, p)) acc = A.M.meet(acc, p);
    if (acc != b) return fail({b, acc});
  }
  return pass();
}
Outcome epbe_5(const Analysis& A) {
  if (!A.is_baer(A.M.bottom())) return fail({A.M.bottom()});
  if (!A.is_baer(A.M.top())) return fail({A.M.top()});
  return pass();
}
Outcome epbe_6(const Analysis& A) {
  // Binary meets plus the empty meet (top) cover every finite family.
  if (!A.is_baer(A.M.top())) return fail({A.M.top()});
  for (auto a : A.B)
    for (auto b : A.B)
      if (!A.is_baer(A.M.meet(a, b))) return fail({a, b});
  return pass();
}
Outcome baer_char3(const Analysis& A) {
  for (auto b : A.E())
    if (is_baer_char3(A.M, b) != A.is_baer(b)) return fail({b});
  return pass();
}
Outcome baer_char4(const Analysis& A) {
  for (auto b : A.E())
    if (is_baer_char4(A.M, b) != A.is_baer(b)) return fail({b});
  return pass();
}

// ---- T8 .. T11 ---------------------------------------------------------------

Outcome mibe(const Analysis& A) {
  const auto& M = A.M;
  const auto top = M.top();
  auto members_baer = [&](std::initializer_list<ElementId> xs) {
    return std::all_of(xs.begin(), xs.end(), [&](ElementId x) { return A.is_baer(x); });
  };
  for (auto a : A.E())
    for (auto b : A.E()) {
      if (b <= a || M.join(a, b) != top) continue;
      if (A.is_baer(M.meet(a, b)) && !members_baer({a, b})) return fail({a, b});
      for (auto c : A.E()) {
        if (c <= b || M.join(a, c) != top || M.join(b, c) != top) continue;
        if (A.is_baer(M.meet(M.meet(a, b), c)) && !members_baer({a, b, c}))
          return fail({a, b, c});
      }
    }
  return pass();
}

Outcome cup(const Analysis& A) {
  const bool closed = baer_closed_under_products(A.M);
  const auto detail = "closed under products: " + yes_no(closed) +
                      ", B-multiplicative: " + yes_no(A.b_mult);
  if (closed != A.b_mult) return fail_no_witness(detail);
  return pass(detail);
}

Outcome rpb_1(const Analysis& A) {
  for (auto a : A.B)
    for (auto b : A.E())
      if (!A.is_baer(A.residual_of(a, b))) return fail({a, b});
  return pass();
}
Outcome rpb_2(const Analysis& A) {
  for (auto a : A.E())
    if (!A.is_baer(A.perp_of(a))) return fail({a});
  return pass();
}
Outcome rpb_3(const Analysis& A) {
  const auto& M = A.M;
  auto res = [&](ElementId a, ElementId b) { return A.residual_of(a, b); };
  for (auto a : A.B)
    for (auto b : A.E())
      for (auto c : A.E()) {
        const auto r1 = res(res(a, b), c), r2 = res(a, M.mul(b, c)),
                   r3 = res(res(a, c), b);
        if (!A.is_baer(r1) || !A.is_baer(r2) || !A.is_baer(r3) || r1 != r2 || r2 != r3)
          return fail({a, b, c});
      }
  // Families of size 1..3.
  auto families = [](const std::vector<ElementId>& pool) {
    std::vector<std::vector<ElementId>> out;
    for (std::size_t i = 0; i < pool.size(); ++i) {
      out.push_back({pool[i]});
      for (std::size_t j = i + 1; j < pool.size(); ++j) {
        out.push_back({pool[i], pool[j]});
        for (std::size_t k = j + 1; k < pool.size(); ++k)
          out.push_back({pool[i], pool[j], pool[k]});
      }
    }
    return out;
  };
  for (const auto& fam : families(A.B))
    for (auto b : A.E()) {
      const auto lhs = res(M.meet_set(fam), b);
      ElementId rhs = M.top();
      for (auto a : fam) rhs = M.meet(rhs, res(a, b));
      if (!A.is_baer(lhs) || !A.is_baer(rhs) || lhs != rhs) {
        std::vector<ElementId> w{b};
        w.insert(w.end(), fam.begin(), fam.end());
        return fail(w, "meet-of-family residual");
      }
    }
  for (auto a : A.B)
    for (const auto& fam : families(A.E())) {
      const auto lhs = res(a, M.join_set(fam));
      ElementId rhs = M.top();
      for (auto b : fam) rhs = M.meet(rhs, res(a, b));
      if (!A.is_baer(lhs) || !A.is_baer(rhs) || lhs != rhs) {
        std::vector<ElementId> w{a};
        w.insert(w.end(), fam.begin(), fam.end());
        return fail(w, "join-of-family residual");
      }
    }
  return pass();
}

Outcome contraction(const Analysis& A) {
  std::vector<std::pair<std::string, MultLattice>> sources;
  for (const char* name : {"C2", "C3", "B2", "N4"}) sources.emplace_back(name, fixture(name));
  if (A.n <= 8) sources.emplace_back("self", A.M);
  std::size_t strong = 0;
  for (const auto& [name, S] : sources) {
    for (auto& table : enumerate_homomorphisms(S, A.M, true)) {
      Homomorphism h(S, A.M, std::move(table));
      if (!is_strong(h)) continue;
      ++strong;
      const auto r = contraction_check(h);
      if (!r.holds) {
        std::vector<ElementId> w{*r.witness};
        w.insert(w.end(), h.table().begin(), h.table().end());
        return fail(w, "from " + name + ": source element, then the map table");
      }
    }
  }
  return pass(std::to_string(strong) + " strong homomorphisms checked");
}

// ---- T12 .. T15 --------------------------------------------------------------

Outcome z_inclusion(const Analysis& A) {
  for (auto x : A.E())
    if (is_z_element(A.M, x) != is_z_element_by_inclusion(A.M, x)) return fail({x});
  return pass();
}
Outcome z_lower(const Analysis& A) {
  for (auto x : A.E())
    if (is_z_element(A.M, x) != is_z_element_by_lower(A.M, x)) return fail({x});
  return pass();
}

Outcome beiz(const Analysis& A) {
  std::optional<ElementId> non_z;
  for (auto b : A.B)
    if (!is_z_element(A.M, b)) {
      non_z = b;
      break;
    }
  const bool all_z = !non_z;
  const bool semisimple = is_semisimple(A.M);
  const auto detail = "every Baer element a z-element: " + yes_no(all_z) +
                      ", semisimple: " + yes_no(semisimple);
  if (all_z != semisimple) {
    return non_z ? fail({*non_z}, detail) : fail_no_witness(detail);
  }
  return pass(detail);
}

Outcome cdbe(const Analysis& A) {
  const bool domain = is_domain(A.M);
  std::optional<ElementId> nontrivial;
  for (auto b : A.B)
    if (b != A.M.bottom() && b != A.M.top()) {
      nontrivial = b;
      break;
    }
  const auto detail = "domain: " + yes_no(domain) +
                      ", Baer set within {0,1}: " + yes_no(!nontrivial);
  if (domain == !nontrivial) return pass(detail);
  return nontrivial ? fail({*nontrivial}, detail) : fail_no_witness(detail);
}

Outcome pmb_1(const Analysis& A) {
  for (auto x : A.E())
    for (auto p : A.P)
      if (A.is_baer(A.M.meet(x, p)) && !A.is_baer(x) && !A.is_baer(p)) return fail({x, p});
  return pass();
}
Outcome pmb_2(const Analysis& A) {
  for (auto p : A.P)
    for (auto q : A.P) {
      if (A.M.leq(p, q) || A.M.leq(q, p)) continue;
      if (A.is_baer(A.M.meet(p, q)) && !(A.is_baer(p) && A.is_baer(q))) return fail({p, q});
    }
  return pass();
}
Outcome pmb_3(const Analysis& A) {
  for (auto x : A.E())
    for (auto m : A.Max) {
      if (A.M.leq(x, m)) continue;
      if (A.is_baer(A.M.meet(x, m)) && !(A.is_baer(x) && A.is_baer(m))) return fail({x, m});
    }
  return pass();
}
Outcome pmb_4(const Analysis& A) {
  for (auto p : A.P) {
    ElementSet below;
    for (auto b : A.B)
      if (A.M.leq(b, p)) below.push_back(b);
    for (auto m : below) {
      const bool is_max = std::none_of(below.begin(), below.end(),
                                       [&](ElementId y) { return A.M.less(m, y); });
      if (is_max && !A.is_prime(m)) return fail({p, m});
    }
  }
  return pass();
}

// ---- T16 Baer closure ---------------------------------------------------------

Outcome lclk_1(const Analysis& A) {
  for (auto a : A.E()) {
    const auto c = A.cz(a);
    if (!A.is_baer(c) || !A.M.leq(a, c)) return fail({a});
    for (auto y : A.B)
      if (A.M.leq(a, y) && !A.M.leq(c, y)) return fail({a, y});
  }
  return pass();
}
Outcome lclk_2(const Analysis& A) {
  for (auto a : A.E())
    if ((A.cz(a) == a) != A.is_baer(a)) return fail({a});
  return pass();
}
Outcome lclk_3(const Analysis& A) {
  for (auto a : A.E())
    if ((A.cz(a) == A.M.top()) != (a == A.M.top())) return fail({a});
  return pass();
}
Outcome lclk_4(const Analysis& A) {
  if (A.cz(A.M.bottom()) != A.M.bottom()) return fail({A.M.bottom()});
  return pass();
}
Outcome lclk_5(const Analysis& A) {
  for (auto a : A.E())
    for (auto b : A.E())
      if (A.M.leq(a, b) && !A.M.leq(A.cz(a), A.cz(b))) return fail({a, b});
  return pass();
}
Outcome lclk_6(const Analysis& A) {
  for (auto a : A.E())
    if (A.cz(A.cz(a)) != A.cz(a)) return fail({a});
  return pass();
}
Outcome lclk_7(const Analysis& A) {
  for (auto a : A.E())
    if (!A.M.leq(A.rad_of(a), A.cz(a))) return fail({a});
  return pass();
}
Outcome lclk_8(const Analysis& A) {
  for (auto a : A.E())
    if (A.cz(a) != A.cz(A.rad_of(a))) return fail({a});
  return pass();
}
Outcome lclk_9(const Analysis& A) {
  for (auto a : A.E()) {
    ElementId p = a;
    for (std::size_t k = 1; k <= A.n; ++k) {
      if (A.cz(p) != A.cz(a)) return fail({a, ElementId(u32(k))}, "element, exponent");
      p = A.M.mul(p, a);
    }
  }
  return pass();
}
Outcome lclk_10(const Analysis& A) {
  for (auto a : A.E())
    for (auto b : A.E()) {
      const auto cj = A.cz(A.M.join(a, b));
      if (!A.M.leq(A.M.join(A.cz(a), A.cz(b)), cj)) return fail({a, b});
      if (cj != A.cz(A.M.join(A.cz(a), A.cz(b)))) return fail({a, b});
    }
  return pass();
}
Outcome lclk_11(const Analysis& A) {
  for (auto a : A.E())
    for (auto b : A.E()) {
      const auto p = A.cz(A.M.mul(a, b));
      if (p != A.cz(A.M.meet(a, b)) || p != A.M.meet(A.cz(a), A.cz(b))) return fail({a, b});
    }
  return pass();
}
Outcome lclk_12(const Analysis& A) {
  if (!A.b_mult) return skip("not-B-multiplicative");
  for (auto a : A.E())
    for (auto b : A.E())
      if (A.cz(A.M.mul(a, b)) != A.M.mul(A.cz(a), A.cz(b))) return fail({a, b});
  return pass();
}

// ---- T17 .. T20 ----------------------------------------------------------------

Outcome d_fixed_points(const Analysis& A) {
  for (auto x : A.E())
    if ((A.d(x) == x) != A.is_baer(x)) return fail({x});
  return pass();
}
Outcome d_below_cz(const Analysis& A) {
  for (auto x : A.E())
    if (!A.M.leq(A.d(x), A.cz(x))) return fail({x});
  return pass();
}

Outcome cujo(const Analysis& A) {
  const auto& M = A.M;
  bool binary_closed = true;
  for (auto a : A.B)
    for (auto b : A.B)
      if (!A.is_baer(M.join(a, b))) binary_closed = false;
  bool binary_cz = true;
  for (auto a : A.E())
    for (auto b : A.E())
      if (A.cz(M.join(a, b)) != M.join(A.cz(a), A.cz(b))) binary_cz = false;
  const bool family_closed = for_subsets(A.B, [&](const std::vector<ElementId>& S) {
    return A.is_baer(M.join_set(S));
  });
  const bool family_cz = for_subsets(A.E(), [&](const std::vector<ElementId>& S) {
    ElementId rhs = M.bottom();
    for (auto s : S) rhs = M.join(rhs, A.cz(s));
    return A.cz(M.join_set(S)) == rhs;
  });
  const auto detail = "join-closed: " + yes_no(binary_closed) +
                      ", cz join-preserving: " + yes_no(binary_cz) +
                      ", family join-closed: " + yes_no(family_closed) +
                      ", cz family join-preserving: " + yes_no(family_cz);
  if (binary_closed == binary_cz && binary_cz == family_closed &&
      family_closed == family_cz)
    return pass(detail);
  return fail_no_witness(detail);
}

Verdict to_verdict_ok(const Verdict& v) { return v; }

Outcome from_verdict(const Verdict& v) {
  if (v.holds) return pass();
  return fail(v.witness);
}

Outcome nucleus(const Analysis& A) {
  return from_verdict(classify_nucleus(A.M, A.cz).nucleus);
}
Outcome multiplicative_nucleus(const Analysis& A) {
  return from_verdict(classify_nucleus(A.M, A.cz).multiplicative_nucleus);
}
Outcome quantic_nucleus(const Analysis& A) {
  if (!A.b_mult) return skip("not-B-multiplicative");
  return from_verdict(to_verdict_ok(classify_nucleus(A.M, A.cz).quantic_nucleus));
}
Outcome quantic_identities(const Analysis& A) {
  if (!A.b_mult) return skip("not-B-multiplicative");
  const auto& M = A.M;
  for (auto a : A.E())
    for (auto b : A.E()) {
      const auto lhs = A.cz(M.mul(a, b));
      if (A.cz(M.mul(a, A.cz(b))) != lhs || A.cz(M.mul(A.cz(a), b)) != lhs ||
          A.cz(M.mul(A.cz(a), A.cz(b))) != lhs)
        return fail({a, b});
    }
  return pass();
}

Outcome frame_distributive(const Analysis& A) {
  const auto& M = A.M;
  std::optional<std::vector<ElementId>> witness;
  for_subsets(A.B, [&](const std::vector<ElementId>& S) {
    for (auto x : A.B) {
      ElementId rhs_join = M.bottom();
      for (auto s : S) rhs_join = M.join(rhs_join, M.meet(x, s));
      if (M.meet(x, A.cz(M.join_set(S))) != A.cz(rhs_join)) {
        witness = std::vector<ElementId>{x};
        witness->insert(witness->end(), S.begin(), S.end());
        return false;
      }
    }
    return true;
  });
  if (witness) return fail(*witness);
  return pass();
}
Outcome frame_product_is_meet(const Analysis& A) {
  for (auto a : A.B)
    for (auto b : A.B)
      if (A.cz(A.M.mul(a, b)) != A.M.meet(a, b)) return fail({a, b});
  return pass();
}
Outcome frame_closure_homomorphism(const Analysis& A) {
  const auto& M = A.M;
  for (auto a : A.E())
    for (auto b : A.E()) {
      const auto ca = A.cz(a), cb = A.cz(b);
      if (M.leq(a, b) && !M.leq(ca, cb)) return fail({a, b}, "order");
      if (A.cz(M.join(a, b)) != A.cz(M.join(ca, cb))) return fail({a, b}, "join");
      if (A.cz(M.meet(a, b)) != M.meet(ca, cb)) return fail({a, b}, "meet");
      if (A.cz(M.mul(a, b)) != A.cz(M.mul(ca, cb))) return fail({a, b}, "product");
    }
  return pass();
}
Outcome frame_is_multiplicative_lattice(const Analysis& A) {
  try {
    const auto F = baer_frame(A.M);
    return pass(std::to_string(F.carrier.size()) + "-element frame");
  } catch (const Error& e) {
    std::vector<ElementId> w;
    for (auto i : e.witness()) w.emplace_back(i);
    return fail(w, e.what());
  }
}

// ---- T21 .. T23 ---------------------------------------------------------------

bool maximal_among_baer(const Analysis& A, ElementId m) {
  if (!A.is_baer(m) || m == A.M.top()) return false;
  for (auto x : A.B)
    if (A.M.less(m, x) && x != A.M.top()) return false;
  return true;
}

Outcome baer_maximal(const Analysis& A) {
  for (auto m : A.B)
    if (A.is_max(m) != maximal_among_baer(A, m)) return fail({m});
  return pass();
}
Outcome baer_maximal_prime(const Analysis& A) {
  for (auto m : A.B)
    if (maximal_among_baer(A, m) && !A.is_prime(m)) return fail({m});
  return pass();
}

Outcome pebe_1(const Analysis& A) {
  if (!A.b_mult) return skip("not-B-multiplicative");
  for (auto p : A.B) {
    bool restricted = p != A.M.top();
    for (auto x : A.B)
      for (auto y : A.B)
        if (A.M.leq(A.M.mul(x, y), p) && !A.M.leq(x, p) && !A.M.leq(y, p)) restricted = false;
    if (restricted != A.is_prime(p)) return fail({p});
  }
  return pass();
}
Outcome pebe_2(const Analysis& A) {
  if (!A.b_mult) return skip("not-B-multiplicative");
  for (auto q : A.B) {
    bool restricted = true;
    for (auto x : A.B)
      if (A.M.leq(A.M.mul(x, x), q) && !A.M.leq(x, q)) restricted = false;
    if (restricted != is_semiprime(A.M, q)) return fail({q});
  }
  return pass();
}

Outcome meet_irreducible_via_baer(const Analysis& A) {
  for (auto s : A.B) {
    bool restricted = true;
    for (auto x : A.B)
      for (auto y : A.B)
        if (A.M.leq(A.M.meet(x, y), s) && !A.M.leq(x, s) && !A.M.leq(y, s))
          restricted = false;
    if (restricted != is_meet_irreducible(A.M, s)) return fail({s});
  }
  return pass();
}

const std::vector<CheckDef>& checks() {
  static const std::vector<CheckDef> defs = [] {
    std::vector<CheckDef> v;
    auto add = [&](std::string id, std::string title, bool reduced_only, CheckFn fn) {
      v.push_back({{std::move(id), std::move(title), reduced_only}, std::move(fn)});
    };
    add("T1.1", "xy <= x", false, bip_1);
    add("T1.2", "xy <= x ∧ y", false, bip_2);
    add("T1.3", "x0 = 0", false, bip_3);
    add("T1.4", "x <= y implies xz <= yz", false, bip_4);
    add("T1.5", "x <= y, u <= v implies xu <= yv", false, bip_5);
    add("T2", "every proper element lies below a maximal element", false, flm);
    add("T3", "radical = meet of primes above = meet of minimal primes above", false,
        radical_formula);
    add("T4.1", "a <= b implies b⊥ <= a⊥", false, pae_1);
    add("T4.2", "a <= a⊥⊥", false, pae_2);
    add("T4.3", "a⊥⊥⊥ = a⊥", false, pae_3);
    add("T4.4", "a⊥⊥ ∧ b⊥⊥ = (ab)⊥⊥", true, pae_4);
    add("T4.5", "a⊥ <= b⊥ implies (ac)⊥ <= (bc)⊥", false, pae_5);
    add("T5", "annihilator elements form a Boolean algebra", true, annihilators_boolean);
    add("T6.1", "Baer iff u⊥ = v⊥, u <= b imply v <= b", true, epbe_1);
    add("T6.2", "Baer elements are radical", true, epbe_2);
    add("T6.3", "minimal primes above a Baer element are Baer", true, epbe_3);
    add("T6.4", "Baer element = meet of prime Baer elements above it", true, epbe_4);
    add("T6.5", "0 and 1 are Baer", true, epbe_5);
    add("T6.6", "meets of Baer elements are Baer", true, epbe_6);
    add("T7.1", "Baer iff u⊥ <= v⊥, u <= b imply v <= b", true, baer_char3);
    add("T7.2", "Baer iff b = join of c⊥⊥ over c <= b", true, baer_char4);
    add("T8", "pairwise comaximal family with Baer meet has Baer members", true, mibe);
    add("T9", "Baer elements product-closed iff B-multiplicative", true, cup);
    add("T10.1", "(a:b) is Baer for Baer a", true, rpb_1);
    add("T10.2", "a⊥ is Baer", true, rpb_2);
    add("T10.3", "composite residuals of Baer elements are Baer", true, rpb_3);
    add("T11", "strong homomorphisms contract Baer elements", true, contraction);
    add("T12.1", "z-element iff inclusion characterization", false, z_inclusion);
    add("T12.2", "z-element iff m-lower characterization", false, z_lower);
    add("T13", "every Baer element is a z-element iff semisimple", true, beiz);
    add("T14", "domain iff Baer elements are exactly 0 and 1", true, cdbe);
    add("T15.1", "x ∧ p Baer implies x or p Baer", true, pmb_1);
    add("T15.2", "incomparable primes with Baer meet are Baer", true, pmb_2);
    add("T15.3", "x not below maximal m, x ∧ m Baer implies both Baer", true, pmb_3);
    add("T15.4", "maximal Baer elements below a prime are prime", true, pmb_4);
    add("T16.1", "cz(a) is the least Baer element above a", true, lclk_1);
    add("T16.2", "cz(a) = a iff a is Baer", true, lclk_2);
    add("T16.3", "cz(a) = 1 iff a = 1", true, lclk_3);
    add("T16.4", "cz(0) = 0", true, lclk_4);
    add("T16.5", "cz is monotone", true, lclk_5);
    add("T16.6", "cz is idempotent", true, lclk_6);
    add("T16.7", "√a <= cz(a)", true, lclk_7);
    add("T16.8", "cz(a) = cz(√a)", true, lclk_8);
    add("T16.9", "cz(a^k) = cz(a)", true, lclk_9);
    add("T16.10", "cz(a) ∨ cz(b) <= cz(a ∨ b) = cz(cz(a) ∨ cz(b))", true, lclk_10);
    add("T16.11", "cz(ab) = cz(a ∧ b) = cz(a) ∧ cz(b)", true, lclk_11);
    add("T16.12", "B-multiplicative implies cz(ab) = cz(a)cz(b)", true, lclk_12);
    add("T17.1", "d(x) = x iff x is Baer", true, d_fixed_points);
    add("T17.2", "d(x) <= cz(x)", true, d_below_cz);
    add("T18", "join-closure conditions are equivalent", true, cujo);
    add("T19.1", "cz is a nucleus", true, nucleus);
    add("T19.2", "cz is a multiplicative nucleus", true, multiplicative_nucleus);
    add("T19.3", "B-multiplicative implies cz is a quantic nucleus", true, quantic_nucleus);
    add("T19.4", "B-multiplicative implies cz(ab) = cz(a cz(b)) = cz(cz(a) b) = cz(cz(a) cz(b))",
        true, quantic_identities);
    add("T20.1", "Baer frame distributive law", true, frame_distributive);
    add("T20.2", "a ⊙ b = a ∧ b on Baer elements", true, frame_product_is_meet);
    add("T20.3", "cz preserves order, joins, meets, products", true,
        frame_closure_homomorphism);
    add("T20.4", "Baer elements form a compact multiplicative lattice", true,
        frame_is_multiplicative_lattice);
    add("T21.1", "Baer m maximal iff maximal among Baer elements", true, baer_maximal);
    add("T21.2", "maximal Baer elements are prime", true, baer_maximal_prime);
    add("T22.1", "Baer p prime iff prime against Baer witnesses", true, pebe_1);
    add("T22.2", "Baer q semiprime iff semiprime against Baer witnesses", true, pebe_2);
    add("T23", "Baer s meet-irreducible iff so against Baer witnesses", true,
        meet_irreducible_via_baer);
    return v;
  }();
  return defs;
}

}  // namespace

std::string CheckResult::status_text() const {
  switch (status) {
    case CheckStatus::Pass: return "PASS";
    case CheckStatus::Fail: return "FAIL";
    case CheckStatus::Skipped: return "SKIPPED(" + reason + ")";
  }
  return "FAIL";
}

std::size_t TheoremReport::count(CheckStatus s) const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [&](const CheckResult& c) { return c.status == s; }));
}

const CheckResult* TheoremReport::find(std::string_view id) const {
  for (const auto& c : checks)
    if (c.id == id) return &c;
  return nullptr;
}

std::string TheoremReport::to_json() const {
  auto arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json entry;
    entry["id"] = c.id;
    entry["status"] = c.status_text();
    if (c.witness) {
      auto w = nlohmann::json::array();
      for (auto x : *c.witness) w.push_back(x.value);
      entry["witness"] = w;
    } else {
      entry["witness"] = nullptr;
    }
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

std::string TheoremReport::to_text() const {
  std::ostringstream out;
  const auto& catalog = check_catalog();
  auto title = [&](const std::string& id) -> std::string {
    for (const auto& info : catalog)
      if (info.id == id) return info.title;
    return {};
  };
  if (!lattice.empty()) out << "lattice: " << lattice << '\n';
  for (const auto& c : checks) {
    out << c.id << ' ' << c.status_text() << "  " << title(c.id);
    if (c.witness) {
      out << "  witness:";
      for (auto x : *c.witness) out << ' ' << x.value;
    }
    if (!c.detail.empty()) out << "  [" << c.detail << ']';
    out << '\n';
  }
  out << count(CheckStatus::Pass) << " passed, " << count(CheckStatus::Fail)
      << " failed, " << count(CheckStatus::Skipped) << " skipped";
  out.precision(3);
  out << std::fixed << " in " << wall_seconds << " s\n";
  return out.str();
}

const std::vector<CheckInfo>& check_catalog() {
  static const std::vector<CheckInfo> catalog = [] {
    std::vector<CheckInfo> out;
    for (const auto& def : checks()) out.push_back(def.info);
    return out;
  }();
  return catalog;
}

bool id_matches(std::string_view id, std::string_view filter) {
  if (id == filter) return true;
  return id.size() > filter.size() && id.substr(0, filter.size()) == filter &&
         id[filter.size()] == '.';
}

TheoremReport run_suite(const MultLattice& M, const SuiteOptions& options,
                        std::string lattice_name) {
  const auto start = std::chrono::steady_clock::now();
  const Analysis analysis(M);
  TheoremReport report;
  report.lattice = std::move(lattice_name);
  for (const auto& def : checks()) {
    if (!options.only.empty() &&
        std::none_of(options.only.begin(), options.only.end(),
                     [&](const std::string& f) { return id_matches(def.info.id, f); }))
      continue;
    CheckResult r;
    r.id = def.info.id;
    if (def.info.reduced_only && !analysis.reduced && !options.ignore_reduced) {
      r.status = CheckStatus::Skipped;
      r.reason = "not-reduced";
    } else {
      auto o = def.run(analysis);
      r.status = o.status;
      r.reason = std::move(o.reason);
      r.witness = std::move(o.witness);
      r.detail = std::move(o.detail);
    }
    report.checks.push_back(std::move(r));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

// ---------------------------------------------------------------------------
// Counterexample search

const std::vector<std::string>& search_predicates() {
  static const std::vector<std::string> names{
      "not-reduced",
      "non-B-multiplicative",
      "baer-not-join-closed",
      "pebe-fails-without-B-multiplicative",
      "theorem-cup-violated",
      "epbe-violated",
      "lclk-violated",
      "suite-fail",
  };
  return names;
}

namespace {

bool pebe_biconditional_fails(const Analysis& A, std::vector<ElementId>& witness) {
  for (auto p : A.B) {
    bool prime_restricted = p != A.M.top();
    bool semiprime_restricted = true;
    for (auto x : A.B) {
      if (A.M.leq(A.M.mul(x, x), p) && !A.M.leq(x, p)) semiprime_restricted = false;
      for (auto y : A.B)
        if (A.M.leq(A.M.mul(x, y), p) && !A.M.leq(x, p) && !A.M.leq(y, p))
          prime_restricted = false;
    }
    if (prime_restricted != A.is_prime(p) ||
        semiprime_restricted != is_semiprime(A.M, p)) {
      witness = {p};
      return true;
    }
  }
  return false;
}

bool suite_fails(const MultLattice& M, std::string_view prefix,
                 std::vector<ElementId>& witness) {
  SuiteOptions opts;
  if (!prefix.empty()) opts.only.emplace_back(prefix);
  const auto report = run_suite(M, opts);
  for (const auto& c : report.checks)
    if (c.status == CheckStatus::Fail) {
      if (c.witness) witness = *c.witness;
      return true;
    }
  return false;
}

}  // namespace

bool evaluate_predicate(std::string_view predicate, const MultLattice& M,
                        std::vector<ElementId>& witness) {
  witness.clear();
  if (predicate == "not-reduced") {
    for (auto x : M.elements())
      if (x != M.bottom() && power(M, x, unsigned(M.size())) == M.bottom()) {
        witness = {x};
        return true;
      }
    return false;
  }
  if (std::find(search_predicates().begin(), search_predicates().end(), predicate) ==
      search_predicates().end()) {
    throw Error(ErrorKind::UnknownPredicate,
                "unknown predicate '" + std::string(predicate) + "'");
  }
  if (!is_reduced(M)) return false;
  if (predicate == "suite-fail") return suite_fails(M, "", witness);
  if (predicate == "epbe-violated") return suite_fails(M, "T6", witness);
  if (predicate == "lclk-violated") return suite_fails(M, "T16", witness);

  const Analysis A(M);
  if (predicate == "non-B-multiplicative") {
    for (auto c : M.elements()) {
      const auto e = A.dd_of(c);
      if (M.mul(e, e) != e) {
        witness = {c};
        return true;
      }
    }
    return false;
  }
  if (predicate == "baer-not-join-closed") {
    for (auto a : A.B)
      for (auto b : A.B)
        if (!A.is_baer(M.join(a, b))) {
          witness = {a, b};
          return true;
        }
    return false;
  }
  if (predicate == "pebe-fails-without-B-multiplicative") {
    return !A.b_mult && pebe_biconditional_fails(A, witness);
  }
  // theorem-cup-violated
  return baer_closed_under_products(M) != A.b_mult;
}

SearchResult search(const EnumerationConfig& config, std::string_view predicate) {
  if (std::find(search_predicates().begin(), search_predicates().end(), predicate) ==
      search_predicates().end()) {
    throw Error(ErrorKind::UnknownPredicate,
                "unknown predicate '" + std::string(predicate) + "'");
  }
  SearchResult result;
  enumerate(config, [&](const MultLattice& M) {
    if (M.size() < 2) return true;
    ++result.examined;
    std::vector<ElementId> witness;
    if (evaluate_predicate(predicate, M, witness)) {
      result.hit = M;
      result.witness = std::move(witness);
      return false;
    }
    return true;
  });
  return result;
}

}  // namespace mlat
