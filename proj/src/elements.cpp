#include "mlat/elements.hpp"

#include <algorithm>

#include "mlat/error.hpp"

namespace mlat {

namespace {

using u32 = std::uint32_t;

template <class Pred>
ElementSet filter(const MultLattice& M, Pred&& pred) {
  ElementSet out;
  for (auto x : M.elements())
    if (pred(x)) out.push_back(x);
  return out;
}

}  // namespace

ElementId residual(const MultLattice& M, ElementId a, ElementId b) {
  ElementId acc = M.bottom();
  for (auto x : M.elements())
    if (M.leq(M.mul(x, b), a)) acc = M.join(acc, x);
  return acc;
}

ElementId annihilator(const MultLattice& M, ElementId a) {
  ElementId acc = M.bottom();
  for (auto x : M.elements())
    if (M.mul(x, a) == M.bottom()) acc = M.join(acc, x);
  return acc;
}

ElementId double_annihilator(const MultLattice& M, ElementId a) {
  return annihilator(M, annihilator(M, a));
}

ElementId AnnihilatorAlgebra::join(const MultLattice& M, ElementId a,
                                   ElementId b) const {
  return complement[M.meet(complement[a.index()], complement[b.index()]).index()];
}

AnnihilatorAlgebra annihilator_algebra(const MultLattice& M) {
  AnnihilatorAlgebra A;
  A.complement.resize(M.size());
  for (auto x : M.elements()) A.complement[x.index()] = annihilator(M, x);

  ElementSet perps, double_perps;
  for (auto x : M.elements()) {
    perps.push_back(A.complement[x.index()]);
    double_perps.push_back(A.complement[A.complement[x.index()].index()]);
  }
  for (auto* s : {&perps, &double_perps}) {
    std::sort(s->begin(), s->end());
    s->erase(std::unique(s->begin(), s->end()), s->end());
  }
  if (perps != double_perps) {
    throw Error(ErrorKind::NotBoolean, "{x⊥} differs from {x⊥⊥}");
  }
  A.carrier = std::move(perps);

  auto fail = [](const char* what, std::initializer_list<ElementId> w) {
    std::vector<u32> ids;
    for (auto x : w) ids.push_back(x.value);
    throw Error(ErrorKind::NotBoolean, what, std::move(ids));
  };
  const auto& C = A.carrier;
  const auto& perp = A.complement;
  if (!contains(C, M.bottom()) || !contains(C, M.top())) {
    fail("bounds missing from annihilator carrier", {});
  }
  for (auto a : C) {
    if (perp[perp[a.index()].index()] != a) fail("a⊥⊥ != a on carrier", {a});
    if (M.meet(a, perp[a.index()]) != M.bottom()) fail("a ∧ a⊥ != 0", {a});
    if (A.join(M, a, perp[a.index()]) != M.top()) fail("a ∨' a⊥ != 1", {a});
    for (auto b : C) {
      const auto m = M.meet(a, b);
      const auto j = A.join(M, a, b);
      if (!contains(C, m)) fail("carrier not closed under meet", {a, b});
      // ∨' must be the least upper bound inside the carrier.
      if (!M.leq(a, j) || !M.leq(b, j)) fail("a ∨' b is not an upper bound", {a, b});
      for (auto u : C)
        if (M.leq(a, u) && M.leq(b, u) && !M.leq(j, u))
          fail("a ∨' b is not least", {a, b, u});
      if (perp[m.index()] != A.join(M, perp[a.index()], perp[b.index()]))
        fail("(a ∧ b)⊥ != a⊥ ∨' b⊥", {a, b});
      for (auto c : C) {
        if (M.meet(a, A.join(M, b, c)) != A.join(M, M.meet(a, b), M.meet(a, c)))
          fail("a ∧ (b ∨' c) != (a ∧ b) ∨' (a ∧ c)", {a, b, c});
      }
    }
  }
  return A;
}

ElementId radical_by_powers(const MultLattice& M, ElementId x) {
  const auto n = static_cast<unsigned>(M.size());
  ElementId acc = M.bottom();
  for (auto y : M.elements()) {
    // y^k decreases in k, so y^k <= x for some k <= n iff y^n <= x.
    if (M.leq(power(M, y, n), x)) acc = M.join(acc, y);
  }
  return acc;
}

ElementId radical_via_primes(const MultLattice& M, ElementId x) {
  ElementId acc = M.top();
  for (auto p : M.elements())
    if (M.leq(x, p) && is_prime(M, p)) acc = M.meet(acc, p);
  return acc;
}

ElementId radical_via_minimal_primes(const MultLattice& M, ElementId x) {
  auto mins = minimal_primes_above(M, x);
  return M.meet_set(mins);
}

ElementId radical(const MultLattice& M, ElementId x) {
  const auto r1 = radical_by_powers(M, x);
  const auto r2 = radical_via_primes(M, x);
  const auto r3 = radical_via_minimal_primes(M, x);
  if (r1 != r2 || r1 != r3) {
    throw Error(ErrorKind::RadicalMismatch,
                "power, prime and minimal-prime radicals disagree",
                {x.value, r1.value, r2.value, r3.value});
  }
  return r1;
}

bool is_prime(const MultLattice& M, ElementId p) {
  if (p == M.top()) return false;
  for (auto x : M.elements())
    for (auto y : M.elements())
      if (M.leq(M.mul(x, y), p) && !M.leq(x, p) && !M.leq(y, p)) return false;
  return true;
}

bool is_maximal(const MultLattice& M, ElementId m) {
  if (m == M.top()) return false;
  for (auto x : M.elements())
    if (M.less(m, x) && x != M.top()) return false;
  return true;
}

bool is_semiprime(const MultLattice& M, ElementId q) {
  for (auto x : M.elements())
    if (M.leq(M.mul(x, x), q) && !M.leq(x, q)) return false;
  return true;
}

bool is_meet_irreducible(const MultLattice& M, ElementId s) {
  for (auto x : M.elements())
    for (auto y : M.elements())
      if (M.leq(M.meet(x, y), s) && !M.leq(x, s) && !M.leq(y, s)) return false;
  return true;
}

bool is_zero_divisor(const MultLattice& M, ElementId x) {
  for (auto y : M.elements())
    if (y != M.bottom() && M.mul(x, y) == M.bottom()) return true;
  return false;
}

ElementSet primes(const MultLattice& M) {
  return filter(M, [&](ElementId p) { return is_prime(M, p); });
}

ElementSet minimal_primes(const MultLattice& M) {
  const auto P = primes(M);
  return filter(M, [&](ElementId p) {
    if (!contains(P, p)) return false;
    return std::none_of(P.begin(), P.end(),
                        [&](ElementId q) { return M.less(q, p); });
  });
}

ElementSet maximal_elements(const MultLattice& M) {
  return filter(M, [&](ElementId m) { return is_maximal(M, m); });
}

ElementSet minimal_primes_above(const MultLattice& M, ElementId x) {
  ElementSet above;
  for (auto p : primes(M))
    if (M.leq(x, p)) above.push_back(p);
  ElementSet out;
  for (auto p : above) {
    bool minimal = std::none_of(above.begin(), above.end(),
                                [&](ElementId q) { return M.less(q, p); });
    if (minimal) out.push_back(p);
  }
  return out;
}

bool is_domain(const MultLattice& M) {
  for (auto x : M.elements()) {
    if (x == M.bottom()) continue;
    if (is_zero_divisor(M, x)) return false;
  }
  return true;
}

ElementSet zero_divisors(const MultLattice& M) {
  return filter(M, [&](ElementId x) { return is_zero_divisor(M, x); });
}

ElementId jacobson_radical(const MultLattice& M) {
  return M.meet_set(maximal_elements(M));
}

bool is_semisimple(const MultLattice& M) {
  return jacobson_radical(M) == M.bottom();
}

ElementSet maximal_set_above(const MultLattice& M, ElementId a) {
  return filter(M, [&](ElementId m) { return M.leq(a, m) && is_maximal(M, m); });
}

ElementId m_lower(const MultLattice& M, ElementId a) {
  return M.meet_set(maximal_set_above(M, a));
}

namespace {

std::vector<ElementSet> all_maximal_sets(const MultLattice& M) {
  std::vector<ElementSet> out;
  out.reserve(M.size());
  for (auto a : M.elements()) out.push_back(maximal_set_above(M, a));
  return out;
}

bool includes(const ElementSet& big, const ElementSet& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

bool is_z_element(const MultLattice& M, ElementId x) {
  const auto sets = all_maximal_sets(M);
  for (auto a : M.elements())
    for (auto b : M.elements())
      if (sets[a.index()] == sets[b.index()] && M.leq(b, x) && !M.leq(a, x))
        return false;
  return true;
}

bool is_z_element_by_inclusion(const MultLattice& M, ElementId x) {
  const auto sets = all_maximal_sets(M);
  for (auto a : M.elements())
    for (auto b : M.elements())
      if (includes(sets[a.index()], sets[b.index()]) && M.leq(b, x) &&
          !M.leq(a, x))
        return false;
  return true;
}

bool is_z_element_by_lower(const MultLattice& M, ElementId x) {
  std::vector<ElementId> lower;
  for (auto a : M.elements()) lower.push_back(m_lower(M, a));
  for (auto a : M.elements())
    for (auto b : M.elements())
      if (M.leq(lower[b.index()], lower[a.index()]) && M.leq(a, x) &&
          !M.leq(b, x))
        return false;
  return true;
}

ElementClassification classify(const MultLattice& M, ElementId x) {
  ElementClassification c;
  c.element = x;
  c.is_prime = is_prime(M, x);
  c.is_minimal_prime = c.is_prime && [&] {
    for (auto q : M.elements())
      if (M.less(q, x) && is_prime(M, q)) return false;
    return true;
  }();
  c.is_maximal = is_maximal(M, x);
  c.is_semiprime = is_semiprime(M, x);
  c.is_meet_irreducible = is_meet_irreducible(M, x);
  c.is_radical = radical_by_powers(M, x) == x;
  c.is_zero_divisor = is_zero_divisor(M, x);
  c.is_z_element = is_z_element(M, x);
  return c;
}

}  // namespace mlat
