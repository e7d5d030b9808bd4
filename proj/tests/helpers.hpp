#pragma once

#include <initializer_list>
#include <stdexcept>
#include <string>

#include "mlat/quantale.hpp"

namespace testing {

inline mlat::ElementId E(std::uint32_t v) { return mlat::ElementId(v); }

inline mlat::ElementSet S(std::initializer_list<std::uint32_t> xs) { return mlat::make_set(xs); }

// The element carrying `name`, for named fixtures.
inline mlat::ElementId named(const mlat::MultLattice& M, const std::string& name) {
  for (auto x : M.elements())
    if (M.label(x) == name) return x;
  throw std::runtime_error("no element " + name);
}

// C3 with m·m = 0.
inline mlat::MultLattice nilpotent_c3() {
  auto order = mlat::Relation::from_rows({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}});
  return mlat::validate_quantale(mlat::build_lattice(order),
                                 mlat::table_from_rows({{0, 0, 0}, {0, 0, 1}, {0, 1, 2}}));
}

}  // namespace testing
