#pragma once

#include <optional>
#include <vector>

#include "mlat/quantale.hpp"

namespace mlat {

/// (a : b), the join of all x with x·b <= a.
ElementId residual(const MultLattice& M, ElementId a, ElementId b);

/// a⊥, the join of all x with x·a = 0.
ElementId annihilator(const MultLattice& M, ElementId a);

/// a⊥⊥.
ElementId double_annihilator(const MultLattice& M, ElementId a);

/// The annihilator elements {x⊥}, with complement x ↦ x⊥, meet inherited
/// from the host and join a ∨' b = (a⊥ ∧ b⊥)⊥.
struct AnnihilatorAlgebra {
  ElementSet carrier;
  std::vector<ElementId> complement;  // indexed by host element, valid on carrier

  ElementId join(const MultLattice& M, ElementId a, ElementId b) const;
};

/// Builds the annihilator algebra and verifies the Boolean-algebra laws.
/// Throws Error{NotBoolean} with a witness when a law fails (in practice,
/// a non-reduced input).
AnnihilatorAlgebra annihilator_algebra(const MultLattice& M);

/// Join of all y with y^k <= x for some k in 1..n.
ElementId radical_by_powers(const MultLattice& M, ElementId x);
/// Meet of the primes above x (top when there are none).
ElementId radical_via_primes(const MultLattice& M, ElementId x);
/// Meet of the minimal primes above x.
ElementId radical_via_minimal_primes(const MultLattice& M, ElementId x);
/// Radical of x. All three routes are computed; throws
/// Error{RadicalMismatch} if they disagree.
ElementId radical(const MultLattice& M, ElementId x);

bool is_prime(const MultLattice& M, ElementId p);
bool is_maximal(const MultLattice& M, ElementId m);
bool is_semiprime(const MultLattice& M, ElementId q);
bool is_meet_irreducible(const MultLattice& M, ElementId s);
bool is_zero_divisor(const MultLattice& M, ElementId x);

ElementSet primes(const MultLattice& M);
ElementSet minimal_primes(const MultLattice& M);
ElementSet maximal_elements(const MultLattice& M);
/// Primes p >= x that are minimal among such primes.
ElementSet minimal_primes_above(const MultLattice& M, ElementId x);

bool is_domain(const MultLattice& M);
ElementSet zero_divisors(const MultLattice& M);

/// Meet of the maximal elements.
ElementId jacobson_radical(const MultLattice& M);
bool is_semisimple(const MultLattice& M);

/// Maximal elements above a. Empty for a = top.
ElementSet maximal_set_above(const MultLattice& M, ElementId a);
/// Meet of maximal_set_above(a); top when that set is empty.
ElementId m_lower(const MultLattice& M, ElementId a);

/// z-element: M_a = M_b and b <= x imply a <= x.
bool is_z_element(const MultLattice& M, ElementId x);
/// M_a ⊇ M_b and b <= x imply a <= x.
bool is_z_element_by_inclusion(const MultLattice& M, ElementId x);
/// m_b <= m_a and a <= x imply b <= x.
bool is_z_element_by_lower(const MultLattice& M, ElementId x);

struct ElementClassification {
  ElementId element;
  bool is_prime = false;
  bool is_minimal_prime = false;
  bool is_maximal = false;
  bool is_semiprime = false;
  bool is_meet_irreducible = false;
  bool is_radical = false;
  bool is_zero_divisor = false;
  bool is_z_element = false;
};

/// Each flag computed from its own definition, not derived from the others.
ElementClassification classify(const MultLattice& M, ElementId x);

}  // namespace mlat
