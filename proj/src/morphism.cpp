#include "mlat/morphism.hpp"

#include <functional>

#include "mlat/baer.hpp"
#include "mlat/elements.hpp"
#include "mlat/error.hpp"

namespace mlat {

Homomorphism::Homomorphism(const MultLattice& source, const MultLattice& target,
                           std::vector<ElementId> table)
    : source_(&source), target_(&target), table_(std::move(table)) {
  if (table_.size() != source.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "map must be total on the source elements");
  }
  for (auto y : table_)
    if (!target.lattice().contains(y)) {
      throw Error(ErrorKind::InvalidArgument, "map value outside target",
                  {y.value});
    }
}

MorphismProperties analyze(const Homomorphism& h) {
  const auto& S = h.source();
  const auto& T = h.target();
  MorphismProperties p;
  p.preserves_order = p.preserves_joins = p.preserves_meets =
      p.preserves_products = p.injective = true;
  for (auto a : S.elements())
    for (auto b : S.elements()) {
      if (S.leq(a, b) && !T.leq(h(a), h(b))) p.preserves_order = false;
      if (h(S.join(a, b)) != T.join(h(a), h(b))) p.preserves_joins = false;
      if (h(S.meet(a, b)) != T.meet(h(a), h(b))) p.preserves_meets = false;
      if (h(S.mul(a, b)) != T.mul(h(a), h(b))) p.preserves_products = false;
      if (a != b && h(a) == h(b)) p.injective = false;
    }
  const auto target_compacts = compact_elements(T);
  p.compacts_to_compacts = true;
  p.commutes_with_annihilation = true;
  for (auto c : compact_elements(S)) {
    if (!contains(target_compacts, h(c))) p.compacts_to_compacts = false;
    if (h(annihilator(S, c)) != annihilator(T, h(c)))
      p.commutes_with_annihilation = false;
  }
  p.preserves_bottom = h(S.bottom()) == T.bottom();
  p.preserves_top = h(S.top()) == T.top();
  return p;
}

bool is_homomorphism(const Homomorphism& h) {
  const auto p = analyze(h);
  return p.preserves_order && p.preserves_joins && p.preserves_meets &&
         p.preserves_products;
}

bool is_strong(const Homomorphism& h) {
  const auto p = analyze(h);
  return p.preserves_order && p.preserves_joins && p.preserves_meets &&
         p.preserves_products && p.injective && p.compacts_to_compacts &&
         p.commutes_with_annihilation;
}

ContractionResult contraction_check(const Homomorphism& h) {
  if (!is_strong(h)) {
    throw Error(ErrorKind::PreconditionViolated,
                "contraction check needs a strong homomorphism");
  }
  const auto source_baer = baer_elements(h.source());
  const auto target_baer = baer_elements(h.target());
  for (auto x : h.source().elements()) {
    if (contains(target_baer, h(x)) && !contains(source_baer, x)) {
      return {false, x};
    }
  }
  return {};
}

std::vector<std::vector<ElementId>> enumerate_homomorphisms(
    const MultLattice& source, const MultLattice& target, bool injective_only) {
  const std::size_t n = source.size();
  std::vector<ElementId> table(n);
  std::vector<bool> used(target.size(), false);
  std::vector<std::vector<ElementId>> out;

  // Every constraint between already-assigned elements i, j < k.
  auto consistent = [&](std::size_t k) {
    const ElementId a(static_cast<std::uint32_t>(k));
    for (std::size_t j = 0; j <= k; ++j) {
      const ElementId b(static_cast<std::uint32_t>(j));
      const auto fa = table[k], fb = table[j];
      if (source.leq(a, b) && !target.leq(fa, fb)) return false;
      if (source.leq(b, a) && !target.leq(fb, fa)) return false;
      const auto jn = source.join(a, b), mt = source.meet(a, b),
                 pr = source.mul(a, b);
      if (jn.index() <= k && table[jn.index()] != target.join(fa, fb)) return false;
      if (mt.index() <= k && table[mt.index()] != target.meet(fa, fb)) return false;
      if (pr.index() <= k && table[pr.index()] != target.mul(fa, fb)) return false;
    }
    // Pairs (i, j) whose join/meet/product is the newly assigned element.
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i; j < k; ++j) {
        const ElementId x(static_cast<std::uint32_t>(i)),
            y(static_cast<std::uint32_t>(j));
        const auto fx = table[i], fy = table[j];
        if (source.join(x, y) == a && table[k] != target.join(fx, fy)) return false;
        if (source.meet(x, y) == a && table[k] != target.meet(fx, fy)) return false;
        if (source.mul(x, y) == a && table[k] != target.mul(fx, fy)) return false;
      }
    return true;
  };

  std::function<void(std::size_t)> extend = [&](std::size_t k) {
    if (k == n) {
      out.push_back(table);
      return;
    }
    for (auto y : target.elements()) {
      if (injective_only && used[y.index()]) continue;
      table[k] = y;
      if (!consistent(k)) continue;
      used[y.index()] = true;
      extend(k + 1);
      used[y.index()] = false;
    }
  };
  extend(0);
  return out;
}

}  // namespace mlat
