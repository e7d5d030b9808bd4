#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mlat {

/// Index of an element, meaningful only relative to the lattice it came from.
struct ElementId {
  std::uint32_t value = 0;

  constexpr ElementId() = default;
  constexpr explicit ElementId(std::uint32_t v) : value(v) {}

  constexpr std::size_t index() const noexcept { return value; }
  friend constexpr auto operator<=>(ElementId, ElementId) = default;
};

/// Sorted, duplicate-free list of elements.
using ElementSet = std::vector<ElementId>;

ElementSet make_set(std::initializer_list<std::uint32_t> indices);
bool contains(const ElementSet& set, ElementId x);

/// Square boolean relation on {0, ..., n-1}, row-major.
class Relation {
 public:
  Relation() = default;
  explicit Relation(std::size_t n) : n_(n), bits_(n * n, 0) {}

  static Relation from_rows(
      std::initializer_list<std::initializer_list<int>> rows);

  std::size_t size() const noexcept { return n_; }
  bool operator()(std::size_t i, std::size_t j) const {
    return bits_[i * n_ + j] != 0;
  }
  void set(std::size_t i, std::size_t j, bool v = true) {
    bits_[i * n_ + j] = v ? 1 : 0;
  }
  const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// Reflexive-transitive closure of a list of (lower, upper) pairs.
Relation order_from_covers(
    std::size_t n, std::span<const std::pair<std::uint32_t, std::uint32_t>> edges);

/// A validated finite bounded lattice. Immutable once built; meet and join
/// are table lookups.
class FiniteLattice {
 public:
  std::size_t size() const noexcept { return n_; }
  const std::vector<ElementId>& elements() const noexcept { return elements_; }

  ElementId bottom() const noexcept { return bottom_; }
  ElementId top() const noexcept { return top_; }

  bool leq(ElementId a, ElementId b) const {
    return order_(a.index(), b.index());
  }
  bool less(ElementId a, ElementId b) const { return a != b && leq(a, b); }

  ElementId meet(ElementId a, ElementId b) const {
    return meet_[a.index() * n_ + b.index()];
  }
  ElementId join(ElementId a, ElementId b) const {
    return join_[a.index() * n_ + b.index()];
  }
  /// meet_set({}) is top.
  ElementId meet_set(std::span<const ElementId> s) const;
  /// join_set({}) is bottom.
  ElementId join_set(std::span<const ElementId> s) const;

  const Relation& order() const noexcept { return order_; }
  bool has_names() const noexcept { return !names_.empty(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  /// Label for display: the name if present, otherwise the decimal index.
  std::string label(ElementId x) const;

  bool contains(ElementId x) const noexcept { return x.index() < n_; }

  friend bool operator==(const FiniteLattice& a, const FiniteLattice& b) {
    return a.order_ == b.order_ && a.names_ == b.names_;
  }

 private:
  friend FiniteLattice build_lattice(const Relation&, std::vector<std::string>);

  std::size_t n_ = 0;
  Relation order_;
  ElementId bottom_{};
  ElementId top_{};
  std::vector<ElementId> elements_;
  std::vector<ElementId> meet_;
  std::vector<ElementId> join_;
  std::vector<std::string> names_;
};

/// Validates `leq` and precomputes meet/join tables.
/// Throws Error{NotAPartialOrder | NotALattice | NoBounds | InvalidArgument}.
FiniteLattice build_lattice(const Relation& leq,
                            std::vector<std::string> names = {});

/// Hasse edges (lower, upper), sorted.
std::vector<std::pair<ElementId, ElementId>> covers(const FiniteLattice& L);

/// First triple (a, b, c) with a ∧ (b ∨ c) != (a ∧ b) ∨ (a ∧ c), if any.
std::vector<ElementId> distributivity_witness(const FiniteLattice& L);

}  // namespace mlat
