#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "mlat/quantale.hpp"

namespace mlat {

/// Baer element: every compact c <= b has c⊥⊥ <= b.
bool is_baer(const MultLattice& M, ElementId b);
/// u⊥ = v⊥ with u <= b (u, v compact) implies v <= b.
bool is_baer_char2(const MultLattice& M, ElementId b);
/// u⊥ <= v⊥ with u <= b (u, v compact) implies v <= b.
bool is_baer_char3(const MultLattice& M, ElementId b);
/// b is the join of c⊥⊥ over compacts c <= b.
bool is_baer_char4(const MultLattice& M, ElementId b);

ElementSet baer_elements(const MultLattice& M);

enum class ClosureKind { BaerClosure, DClosure, User };

std::string_view to_string(ClosureKind kind);

/// A self-map on the elements of a particular MultLattice.
struct ClosureMap {
  std::vector<ElementId> table;
  ClosureKind kind = ClosureKind::User;

  ElementId operator()(ElementId x) const { return table[x.index()]; }
  std::size_t size() const noexcept { return table.size(); }
};

/// Inflationary, idempotent and monotone.
bool is_closure_operator(const MultLattice& M, const ClosureMap& f);

/// cz(a) = meet of the Baer elements above a.
ClosureMap baer_closure(const MultLattice& M);

/// d(x) = join of c⊥⊥ over compacts c <= x. Its fixed points are the Baer
/// elements, but it need not be idempotent.
ClosureMap d_closure(const MultLattice& M);

/// (c⊥⊥)² = c⊥⊥ for every compact c.
bool is_B_multiplicative(const MultLattice& M);

/// Baer elements closed under products.
bool baer_closed_under_products(const MultLattice& M);

/// The Baer elements as a frame: meets inherited, a ∨' b = cz(a ∨ b),
/// a ⊙ b = cz(ab). `frame` re-indexes the carrier in host order;
/// embed[i] is the host element of frame element i.
struct BaerFrame {
  ElementSet carrier;
  std::vector<ElementId> embed;
  MultLattice frame;
  ClosureMap closure;

  ElementId join(const MultLattice& M, ElementId a, ElementId b) const;
  ElementId join_set(const MultLattice& M, std::span<const ElementId> s) const;
  ElementId product(const MultLattice& M, ElementId a, ElementId b) const;
};

/// Builds the frame and verifies: meet-closure of the carrier, the frame
/// distributive law, ⊙ = ∧ on the carrier, and that cz preserves order,
/// binary joins, binary meets and products.
/// Throws Error{FrameLawViolation} with a witness.
BaerFrame baer_frame(const MultLattice& M);

struct Verdict {
  bool holds = true;
  std::vector<ElementId> witness;  // empty when holds

  explicit operator bool() const noexcept { return holds; }
};

struct NucleusReport {
  Verdict nucleus;                 // inflationary, idempotent, f(a∧b) = f(a)∧f(b)
  Verdict multiplicative_nucleus;  // f(a)=1 ⇔ a=1, f(ab) = f(a∧b) = f(a)∧f(b)
  Verdict quantic_nucleus;         // inflationary, idempotent, f(ab) = f(a)f(b)
  Verdict localic;                 // quantic, and f(ab) = a∧b on the image
};

NucleusReport classify_nucleus(const MultLattice& M, const ClosureMap& f);

/// cz(ab) = cz(a cz(b)) = cz(cz(a) b) = cz(cz(a) cz(b)) for all pairs.
bool quantic_identities_check(const MultLattice& M);

}  // namespace mlat
