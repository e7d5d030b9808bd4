#pragma once

#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "mlat/quantale.hpp"

namespace mlat {

/// Chain of k+1 elements, · = ∧.
MultLattice gen_chain(unsigned k);
/// Powerset of a k-set, · = ∧. Element i is the subset with bitmask i.
MultLattice gen_boolean(unsigned k);
/// Frame multiplication · = ∧ on a distributive lattice.
/// Throws Error{NotDistributive} with a witness triple.
MultLattice gen_meet_mult(FiniteLattice L);
/// Ideal lattice of Z_n: element (d) for each divisor d of n, listed by
/// decreasing d, so bottom (n) is index 0 and top (1) is last.
/// (d)(e) = (gcd(de, n)).
MultLattice gen_zn(unsigned n);
/// Componentwise order and product; element (i, j) has index i*|M2| + j.
MultLattice product(const MultLattice& M1, const MultLattice& M2);

/// One of C2, C3, B2, N4, Z30. Throws Error{UnknownFixture}.
MultLattice fixture(std::string_view name);
const std::vector<std::string>& fixture_names();

/// Textual lattice specifier:
///   chain:K | boolean:K | zn:N | fixture:NAME | file:PATH | SPEC*SPEC
/// `*` is the product and associates to the left.
struct LatticeSpecifier {
  enum class Kind { Chain, Boolean, Zn, Product, Fixture, File };
  Kind kind = Kind::Chain;
  unsigned parameter = 0;
  std::string name;  // fixture name or file path
  std::shared_ptr<const LatticeSpecifier> left, right;

  static LatticeSpecifier parse(std::string_view text);
  std::string to_string() const;
};

MultLattice realize(const LatticeSpecifier& spec);

struct EnumerationConfig {
  unsigned max_n = 4;  // at most 6
  bool dedup = true;
  bool require_reduced = false;
};

/// Lattice orders on {0..n-1} with bottom 0, top n-1 and i <= j only if
/// i <= j as integers. With dedup, one per isomorphism class.
std::vector<FiniteLattice> enumerate_lattices(unsigned n, bool dedup);

/// Every valid multiplication on L, in lexicographic order of the
/// table cells. With dedup, one per orbit under automorphisms of L.
std::vector<MultLattice> enumerate_multiplications(const FiniteLattice& L,
                                                   bool dedup);

/// Calls `visit` for each structure on 1..max_n elements in deterministic
/// order; stops early when `visit` returns false.
void enumerate(const EnumerationConfig& config,
               const std::function<bool(const MultLattice&)>& visit);

std::vector<MultLattice> enumerate(const EnumerationConfig& config);

}  // namespace mlat
