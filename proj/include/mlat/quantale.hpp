#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "mlat/lattice.hpp"

namespace mlat {

/// Row-major n×n multiplication table.
using MulTable = std::vector<ElementId>;

MulTable table_from_rows(std::initializer_list<std::initializer_list<int>> rows);

/// A finite multiplicative lattice: commutative, associative, distributes
/// over joins, top is the identity. Only validate_quantale constructs one.
class MultLattice {
 public:
  const FiniteLattice& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }
  const std::vector<ElementId>& elements() const noexcept {
    return lattice_.elements();
  }
  ElementId bottom() const noexcept { return lattice_.bottom(); }
  ElementId top() const noexcept { return lattice_.top(); }

  bool leq(ElementId a, ElementId b) const { return lattice_.leq(a, b); }
  bool less(ElementId a, ElementId b) const { return lattice_.less(a, b); }
  ElementId meet(ElementId a, ElementId b) const { return lattice_.meet(a, b); }
  ElementId join(ElementId a, ElementId b) const { return lattice_.join(a, b); }
  ElementId meet_set(std::span<const ElementId> s) const {
    return lattice_.meet_set(s);
  }
  ElementId join_set(std::span<const ElementId> s) const {
    return lattice_.join_set(s);
  }
  ElementId mul(ElementId a, ElementId b) const {
    return table_[a.index() * size() + b.index()];
  }
  const MulTable& table() const noexcept { return table_; }
  std::string label(ElementId x) const { return lattice_.label(x); }

  friend bool operator==(const MultLattice&, const MultLattice&) = default;

 private:
  friend MultLattice validate_quantale(FiniteLattice, MulTable);

  FiniteLattice lattice_;
  MulTable table_;
};

/// Checks, in order: entries in range, commutativity, top identity,
/// x·0 = 0, binary-join distributivity, associativity.
/// Throws Error{NotCommutative | IdentityFails | BottomNotAbsorbing |
/// NotJoinDistributive | NotAssociative | InvalidArgument}, each with a
/// witness tuple.
MultLattice validate_quantale(FiniteLattice L, MulTable mul);

/// Lattice with · = ∧. Throws Error{NotDistributive} with witness triple
/// when ∧ does not distribute over ∨.
MultLattice meet_multiplication(FiniteLattice L);

/// k-fold product, k >= 1.
ElementId power(const MultLattice& M, ElementId x, unsigned k);

/// True iff bottom is the only element with some power (exponent <= n)
/// equal to bottom.
bool is_reduced(const MultLattice& M);

/// Every element of a finite lattice is compact.
ElementSet compact_elements(const MultLattice& M);

}  // namespace mlat
