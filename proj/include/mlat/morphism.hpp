#pragma once

#include <optional>
#include <vector>

#include "mlat/quantale.hpp"

namespace mlat {

/// An element map between two multiplicative lattices. Non-owning: both
/// lattices must outlive it.
class Homomorphism {
 public:
  Homomorphism(const MultLattice& source, const MultLattice& target,
               std::vector<ElementId> table);

  const MultLattice& source() const noexcept { return *source_; }
  const MultLattice& target() const noexcept { return *target_; }
  const std::vector<ElementId>& table() const noexcept { return table_; }
  ElementId operator()(ElementId x) const { return table_[x.index()]; }

 private:
  const MultLattice* source_;
  const MultLattice* target_;
  std::vector<ElementId> table_;
};

/// Each clause of the homomorphism and strong-homomorphism definitions,
/// evaluated separately.
struct MorphismProperties {
  bool preserves_order = false;
  bool preserves_joins = false;
  bool preserves_meets = false;
  bool preserves_products = false;
  bool injective = false;
  bool compacts_to_compacts = false;
  bool commutes_with_annihilation = false;  // φ(c⊥) = φ(c)⊥ for compact c
  // Informational, not part of either definition.
  bool preserves_bottom = false;
  bool preserves_top = false;
};

MorphismProperties analyze(const Homomorphism& h);

/// Preserves ≤, binary joins, binary meets and multiplication.
bool is_homomorphism(const Homomorphism& h);
/// Homomorphism that is injective, sends compacts to compacts and
/// commutes with annihilation of compacts.
bool is_strong(const Homomorphism& h);

struct ContractionResult {
  bool holds = true;
  std::optional<ElementId> witness;  // source element with Baer image, not Baer
};

/// Every source element whose image is Baer in the target is Baer in the
/// source. Throws Error{PreconditionViolated} if h is not strong.
ContractionResult contraction_check(const Homomorphism& h);

/// All homomorphism tables source → target, by backtracking over monotone
/// partial maps pruned by join, meet and product preservation.
std::vector<std::vector<ElementId>> enumerate_homomorphisms(
    const MultLattice& source, const MultLattice& target,
    bool injective_only = false);

}  // namespace mlat
