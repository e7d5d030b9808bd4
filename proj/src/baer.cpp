#include "mlat/baer.hpp"

#include <algorithm>
#include <random>

#include "mlat/elements.hpp"
#include "mlat/error.hpp"

namespace mlat {

namespace {

using u32 = std::uint32_t;

std::vector<ElementId> perp_table(const MultLattice& M) {
  std::vector<ElementId> t(M.size());
  for (auto x : M.elements()) t[x.index()] = annihilator(M, x);
  return t;
}

std::vector<ElementId> double_perp_table(const MultLattice& M) {
  auto perp = perp_table(M);
  std::vector<ElementId> t(M.size());
  for (auto x : M.elements()) t[x.index()] = perp[perp[x.index()].index()];
  return t;
}

[[noreturn]] void frame_violation(const char* what,
                                  std::initializer_list<ElementId> w) {
  std::vector<u32> ids;
  for (auto x : w) ids.push_back(x.value);
  throw Error(ErrorKind::FrameLawViolation, what, std::move(ids));
}

}  // namespace

bool is_baer(const MultLattice& M, ElementId b) {
  for (auto c : compact_elements(M))
    if (M.leq(c, b) && !M.leq(double_annihilator(M, c), b)) return false;
  return true;
}

bool is_baer_char2(const MultLattice& M, ElementId b) {
  const auto perp = perp_table(M);
  const auto C = compact_elements(M);
  for (auto u : C) {
    if (!M.leq(u, b)) continue;
    for (auto v : C)
      if (perp[u.index()] == perp[v.index()] && !M.leq(v, b)) return false;
  }
  return true;
}

bool is_baer_char3(const MultLattice& M, ElementId b) {
  const auto perp = perp_table(M);
  const auto C = compact_elements(M);
  for (auto u : C) {
    if (!M.leq(u, b)) continue;
    for (auto v : C)
      if (M.leq(perp[u.index()], perp[v.index()]) && !M.leq(v, b)) return false;
  }
  return true;
}

bool is_baer_char4(const MultLattice& M, ElementId b) {
  const auto dd = double_perp_table(M);
  ElementId acc = M.bottom();
  for (auto c : compact_elements(M))
    if (M.leq(c, b)) acc = M.join(acc, dd[c.index()]);
  return acc == b;
}

ElementSet baer_elements(const MultLattice& M) {
  const auto dd = double_perp_table(M);
  ElementSet out;
  for (auto b : M.elements()) {
    bool baer = true;
    for (auto c : M.elements())
      if (M.leq(c, b) && !M.leq(dd[c.index()], b)) {
        baer = false;
        break;
      }
    if (baer) out.push_back(b);
  }
  return out;
}

std::string_view to_string(ClosureKind kind) {
  switch (kind) {
    case ClosureKind::BaerClosure: return "baer_closure";
    case ClosureKind::DClosure: return "d_closure";
    case ClosureKind::User: return "user";
  }
  return "user";
}

bool is_closure_operator(const MultLattice& M, const ClosureMap& f) {
  for (auto x : M.elements()) {
    if (!M.leq(x, f(x)) || f(f(x)) != f(x)) return false;
    for (auto y : M.elements())
      if (M.leq(x, y) && !M.leq(f(x), f(y))) return false;
  }
  return true;
}

ClosureMap baer_closure(const MultLattice& M) {
  const auto B = baer_elements(M);
  ClosureMap cz{std::vector<ElementId>(M.size()), ClosureKind::BaerClosure};
  for (auto a : M.elements()) {
    ElementId acc = M.top();
    for (auto x : B)
      if (M.leq(a, x)) acc = M.meet(acc, x);
    cz.table[a.index()] = acc;
  }
  return cz;
}

ClosureMap d_closure(const MultLattice& M) {
  const auto dd = double_perp_table(M);
  ClosureMap d{std::vector<ElementId>(M.size()), ClosureKind::DClosure};
  for (auto x : M.elements()) {
    ElementId acc = M.bottom();
    for (auto c : compact_elements(M))
      if (M.leq(c, x)) acc = M.join(acc, dd[c.index()]);
    d.table[x.index()] = acc;
  }
  return d;
}

bool is_B_multiplicative(const MultLattice& M) {
  const auto dd = double_perp_table(M);
  for (auto c : compact_elements(M)) {
    const auto e = dd[c.index()];
    if (M.mul(e, e) != e) return false;
  }
  return true;
}

bool baer_closed_under_products(const MultLattice& M) {
  const auto B = baer_elements(M);
  for (auto a : B)
    for (auto b : B)
      if (!contains(B, M.mul(a, b))) return false;
  return true;
}

ElementId BaerFrame::join(const MultLattice& M, ElementId a, ElementId b) const {
  return closure(M.join(a, b));
}

ElementId BaerFrame::join_set(const MultLattice& M,
                              std::span<const ElementId> s) const {
  return closure(M.join_set(s));
}

ElementId BaerFrame::product(const MultLattice& M, ElementId a,
                             ElementId b) const {
  return closure(M.mul(a, b));
}

BaerFrame baer_frame(const MultLattice& M) {
  auto cz = baer_closure(M);
  auto B = baer_elements(M);

  if (!contains(B, M.bottom()) || !contains(B, M.top()))
    frame_violation("carrier misses a bound", {});
  for (auto a : B)
    for (auto b : B)
      if (!contains(B, M.meet(a, b)))
        frame_violation("carrier not closed under meet", {a, b});

  const std::size_t k = B.size();
  std::vector<std::uint32_t> index_of(M.size(), 0);
  for (std::size_t i = 0; i < k; ++i) index_of[B[i].index()] = u32(i);

  Relation order(k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) order.set(i, j, M.leq(B[i], B[j]));
    if (M.lattice().has_names()) names.push_back(M.label(B[i]));
  }
  MulTable odot(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      odot[i * k + j] = ElementId(index_of[cz(M.mul(B[i], B[j])).index()]);

  std::optional<MultLattice> frame;
  try {
    frame = validate_quantale(build_lattice(order, std::move(names)), std::move(odot));
  } catch (const Error& e) {
    std::vector<u32> w;
    for (auto i : e.witness()) w.push_back(i < k ? B[i].value : i);
    throw Error(ErrorKind::FrameLawViolation,
                std::string("carrier is not a multiplicative lattice: ") + e.what(),
                std::move(w));
  }

  BaerFrame F{B, B, std::move(*frame), cz};

  for (auto a : B)
    for (auto b : B) {
      if (F.product(M, a, b) != M.meet(a, b))
        frame_violation("a ⊙ b != a ∧ b on the carrier", {a, b});
      // ∨' must be the least upper bound inside the carrier.
      const auto j = F.join(M, a, b);
      for (auto u : B)
        if (M.leq(a, u) && M.leq(b, u) && !M.leq(j, u))
          frame_violation("∨' is not the least upper bound", {a, b, u});
    }

  // Frame law x ∧ ∨'S = ∨'{x ∧ s}: every subset of a small carrier,
  // otherwise all pairs plus a fixed-seed sample of larger subsets.
  auto check_subset = [&](ElementId x, const std::vector<ElementId>& S) {
    std::vector<ElementId> meets;
    for (auto s : S) meets.push_back(M.meet(x, s));
    if (M.meet(x, F.join_set(M, S)) != F.join_set(M, meets)) {
      std::vector<u32> w{x.value};
      for (auto s : S) w.push_back(s.value);
      throw Error(ErrorKind::FrameLawViolation, "x ∧ ∨'S != ∨'{x ∧ s}", w);
    }
  };
  if (k <= 12) {
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      std::vector<ElementId> S;
      for (std::size_t i = 0; i < k; ++i)
        if (mask & (1u << i)) S.push_back(B[i]);
      for (auto x : B) check_subset(x, S);
    }
  } else {
    for (auto a : B)
      for (auto b : B)
        for (auto x : B) check_subset(x, {a, b});
    std::mt19937 rng(0x5eed);
    for (int trial = 0; trial < 512; ++trial) {
      std::vector<ElementId> S;
      for (auto b : B)
        if (rng() & 1u) S.push_back(b);
      for (auto x : B) check_subset(x, S);
    }
  }

  for (auto a : M.elements())
    for (auto b : M.elements()) {
      if (M.leq(a, b) && !M.leq(cz(a), cz(b)))
        frame_violation("cz does not preserve order", {a, b});
      if (cz(M.join(a, b)) != F.join(M, cz(a), cz(b)))
        frame_violation("cz(a ∨ b) != cz(a) ∨' cz(b)", {a, b});
      if (cz(M.meet(a, b)) != M.meet(cz(a), cz(b)))
        frame_violation("cz(a ∧ b) != cz(a) ∧ cz(b)", {a, b});
      if (cz(M.mul(a, b)) != F.product(M, cz(a), cz(b)))
        frame_violation("cz(ab) != cz(a) ⊙ cz(b)", {a, b});
    }
  return F;
}

NucleusReport classify_nucleus(const MultLattice& M, const ClosureMap& f) {
  if (f.size() != M.size()) {
    throw Error(ErrorKind::InvalidArgument, "map size differs from lattice size");
  }
  NucleusReport r;
  auto fail = [](Verdict& v, std::vector<ElementId> w) {
    if (v.holds) {
      v.holds = false;
      v.witness = std::move(w);
    }
  };
  Verdict inflationary_idempotent;
  for (auto a : M.elements()) {
    if (!M.leq(a, f(a)) || f(f(a)) != f(a)) fail(inflationary_idempotent, {a});
  }
  if (!inflationary_idempotent) {
    r.nucleus = r.quantic_nucleus = r.localic = inflationary_idempotent;
  }
  for (auto a : M.elements()) {
    if ((f(a) == M.top()) != (a == M.top())) fail(r.multiplicative_nucleus, {a});
  }
  for (auto a : M.elements())
    for (auto b : M.elements()) {
      const auto meet_image = M.meet(f(a), f(b));
      if (f(M.meet(a, b)) != meet_image) fail(r.nucleus, {a, b});
      if (f(M.mul(a, b)) != f(M.meet(a, b)) || f(M.meet(a, b)) != meet_image)
        fail(r.multiplicative_nucleus, {a, b});
      if (f(M.mul(a, b)) != M.mul(f(a), f(b))) {
        fail(r.quantic_nucleus, {a, b});
        fail(r.localic, {a, b});
      }
    }
  // On the image, the induced product f(ab) must coincide with ∧.
  for (auto a : M.elements())
    for (auto b : M.elements())
      if (f(a) == a && f(b) == b && f(M.mul(a, b)) != M.meet(a, b))
        fail(r.localic, {a, b});
  return r;
}

bool quantic_identities_check(const MultLattice& M) {
  const auto cz = baer_closure(M);
  for (auto a : M.elements())
    for (auto b : M.elements()) {
      const auto lhs = cz(M.mul(a, b));
      if (cz(M.mul(a, cz(b))) != lhs || cz(M.mul(cz(a), b)) != lhs ||
          cz(M.mul(cz(a), cz(b))) != lhs)
        return false;
    }
  return true;
}

}  // namespace mlat
