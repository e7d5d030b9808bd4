#include "mlat/lattice.hpp"

#include <algorithm>
#include <optional>

#include "mlat/error.hpp"

namespace mlat {

ElementSet make_set(std::initializer_list<std::uint32_t> indices) {
  ElementSet out;
  for (auto i : indices) out.emplace_back(i);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool contains(const ElementSet& set, ElementId x) {
  return std::binary_search(set.begin(), set.end(), x);
}

Relation Relation::from_rows(
    std::initializer_list<std::initializer_list<int>> rows) {
  Relation r(rows.size());
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorKind::InvalidArgument, "relation rows must be square");
    }
    std::size_t j = 0;
    for (int v : row) r.set(i, j++, v != 0);
    ++i;
  }
  return r;
}

Relation order_from_covers(
    std::size_t n,
    std::span<const std::pair<std::uint32_t, std::uint32_t>> edges) {
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i) r.set(i, i);
  for (auto [lo, hi] : edges) {
    if (lo >= n || hi >= n) {
      throw Error(ErrorKind::InvalidArgument, "cover edge out of range",
                  {lo, hi});
    }
    r.set(lo, hi);
  }
  // Warshall
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (r(i, k))
        for (std::size_t j = 0; j < n; ++j)
          if (r(k, j)) r.set(i, j);
  return r;
}

namespace {

using u32 = std::uint32_t;

void check_partial_order(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (!r(i, i)) {
      throw Error(ErrorKind::NotAPartialOrder, "reflexivity fails",
                  {u32(i), u32(i)});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (r(i, j) && r(j, i)) {
        throw Error(ErrorKind::NotAPartialOrder, "antisymmetry fails",
                    {u32(i), u32(j)});
      }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!r(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k)
        if (r(j, k) && !r(i, k)) {
          throw Error(ErrorKind::NotAPartialOrder, "transitivity fails",
                      {u32(i), u32(j), u32(k)});
        }
    }
}

// Greatest common lower bound (or least common upper bound when `upper`).
std::optional<std::size_t> bound(const Relation& r, std::size_t a,
                                 std::size_t b, bool upper) {
  const std::size_t n = r.size();
  auto below = [&](std::size_t x, std::size_t y) {
    return upper ? r(y, x) : r(x, y);
  };
  std::optional<std::size_t> best;
  for (std::size_t c = 0; c < n; ++c) {
    if (!(below(c, a) && below(c, b))) continue;
    if (!best || below(*best, c)) {
      best = c;
    }
  }
  if (!best) return std::nullopt;
  for (std::size_t c = 0; c < n; ++c) {
    if (below(c, a) && below(c, b) && !below(c, *best)) return std::nullopt;
  }
  return best;
}

}  // namespace

FiniteLattice build_lattice(const Relation& leq, std::vector<std::string> names) {
  const std::size_t n = leq.size();
  if (n == 0) {
    throw Error(ErrorKind::NoBounds, "empty carrier has no bottom or top");
  }
  if (!names.empty() && names.size() != n) {
    throw Error(ErrorKind::InvalidArgument,
                "expected " + std::to_string(n) + " names, got " +
                    std::to_string(names.size()));
  }
  check_partial_order(leq);

  FiniteLattice L;
  L.n_ = n;
  L.order_ = leq;
  L.names_ = std::move(names);
  L.meet_.resize(n * n);
  L.join_.resize(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      auto m = bound(leq, a, b, false);
      if (!m) {
        throw Error(ErrorKind::NotALattice, "pair has no greatest lower bound",
                    {u32(a), u32(b)});
      }
      auto j = bound(leq, a, b, true);
      if (!j) {
        throw Error(ErrorKind::NotALattice, "pair has no least upper bound",
                    {u32(a), u32(b)});
      }
      L.meet_[a * n + b] = L.meet_[b * n + a] = ElementId(u32(*m));
      L.join_[a * n + b] = L.join_[b * n + a] = ElementId(u32(*j));
    }
  }

  std::optional<std::size_t> bot, top;
  for (std::size_t c = 0; c < n; ++c) {
    bool is_bot = true, is_top = true;
    for (std::size_t x = 0; x < n; ++x) {
      is_bot = is_bot && leq(c, x);
      is_top = is_top && leq(x, c);
    }
    if (is_bot) bot = c;
    if (is_top) top = c;
  }
  // Unreachable for a nonempty lattice, kept as a guard.
  if (!bot || !top) throw Error(ErrorKind::NoBounds, "no bottom or top");
  L.bottom_ = ElementId(u32(*bot));
  L.top_ = ElementId(u32(*top));

  L.elements_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) L.elements_.emplace_back(u32(i));
  return L;
}

ElementId FiniteLattice::meet_set(std::span<const ElementId> s) const {
  ElementId acc = top_;
  for (auto x : s) acc = meet(acc, x);
  return acc;
}

ElementId FiniteLattice::join_set(std::span<const ElementId> s) const {
  ElementId acc = bottom_;
  for (auto x : s) acc = join(acc, x);
  return acc;
}

std::string FiniteLattice::label(ElementId x) const {
  if (has_names()) return names_[x.index()];
  return std::to_string(x.value);
}

std::vector<std::pair<ElementId, ElementId>> covers(const FiniteLattice& L) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (auto a : L.elements()) {
    for (auto b : L.elements()) {
      if (!L.less(a, b)) continue;
      bool between = false;
      for (auto c : L.elements()) {
        if (L.less(a, c) && L.less(c, b)) {
          between = true;
          break;
        }
      }
      if (!between) out.emplace_back(a, b);
    }
  }
  return out;
}

std::vector<ElementId> distributivity_witness(const FiniteLattice& L) {
  for (auto a : L.elements())
    for (auto b : L.elements())
      for (auto c : L.elements())
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c)))
          return {a, b, c};
  return {};
}

}  // namespace mlat
