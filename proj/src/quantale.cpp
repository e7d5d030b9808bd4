#include "mlat/quantale.hpp"

#include <stdexcept>
#include <string>

#include "mlat/error.hpp"

namespace mlat {

MulTable table_from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  MulTable t;
  for (const auto& row : rows) {
    if (row.size() != rows.size()) {
      throw Error(ErrorKind::InvalidArgument, "table rows must be square");
    }
    for (int v : row) {
      if (v < 0) throw Error(ErrorKind::InvalidArgument, "negative entry");
      t.emplace_back(static_cast<std::uint32_t>(v));
    }
  }
  return t;
}

namespace {

using u32 = std::uint32_t;

std::vector<u32> ids(std::initializer_list<ElementId> xs) {
  std::vector<u32> out;
  for (auto x : xs) out.push_back(x.value);
  return out;
}

// Consequences of the axioms; a failure here means the validation above
// has a hole.
void sweep_multiplication_laws(const MultLattice& M) {
  for (auto x : M.elements()) {
    if (M.mul(x, M.bottom()) != M.bottom()) {
      throw std::logic_error("x*0 = 0 failed after validation");
    }
    for (auto y : M.elements()) {
      const auto xy = M.mul(x, y);
      if (!M.leq(xy, x) || !M.leq(xy, M.meet(x, y))) {
        throw std::logic_error("xy <= x meet y failed after validation");
      }
      if (!M.leq(x, y)) continue;
      for (auto z : M.elements()) {
        if (!M.leq(M.mul(x, z), M.mul(y, z))) {
          throw std::logic_error("monotonicity failed after validation");
        }
      }
    }
  }
}

}  // namespace

MultLattice validate_quantale(FiniteLattice L, MulTable mul) {
  const std::size_t n = L.size();
  if (mul.size() != n * n) {
    throw Error(ErrorKind::InvalidArgument,
                "multiplication table must have " + std::to_string(n * n) +
                    " entries");
  }
  for (std::size_t i = 0; i < mul.size(); ++i) {
    if (mul[i].index() >= n) {
      throw Error(ErrorKind::InvalidArgument, "table entry out of range",
                  {u32(i / n), u32(i % n), mul[i].value});
    }
  }
  auto m = [&](ElementId a, ElementId b) { return mul[a.index() * n + b.index()]; };
  const auto& E = L.elements();

  for (auto x : E)
    for (auto y : E)
      if (m(x, y) != m(y, x))
        throw Error(ErrorKind::NotCommutative, "xy != yx", ids({x, y}));

  for (auto x : E)
    if (m(L.top(), x) != x)
      throw Error(ErrorKind::IdentityFails, "1x != x", ids({x}));

  for (auto x : E)
    if (m(x, L.bottom()) != L.bottom())
      throw Error(ErrorKind::BottomNotAbsorbing, "x0 != 0", ids({x}));

  for (auto x : E)
    for (auto y : E)
      for (auto z : E)
        if (m(x, L.join(y, z)) != L.join(m(x, y), m(x, z)))
          throw Error(ErrorKind::NotJoinDistributive, "x(y v z) != xy v xz",
                      ids({x, y, z}));

  for (auto x : E)
    for (auto y : E)
      for (auto z : E)
        if (m(m(x, y), z) != m(x, m(y, z)))
          throw Error(ErrorKind::NotAssociative, "(xy)z != x(yz)",
                      ids({x, y, z}));

  MultLattice M;
  M.lattice_ = std::move(L);
  M.table_ = std::move(mul);
  sweep_multiplication_laws(M);
  return M;
}

MultLattice meet_multiplication(FiniteLattice L) {
  if (auto w = distributivity_witness(L); !w.empty()) {
    throw Error(ErrorKind::NotDistributive,
                "meet does not distribute over join",
                {w[0].value, w[1].value, w[2].value});
  }
  const std::size_t n = L.size();
  MulTable t(n * n);
  for (auto a : L.elements())
    for (auto b : L.elements()) t[a.index() * n + b.index()] = L.meet(a, b);
  return validate_quantale(std::move(L), std::move(t));
}

ElementId power(const MultLattice& M, ElementId x, unsigned k) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "power exponent must be >= 1");
  ElementId acc = x;
  for (unsigned i = 1; i < k; ++i) acc = M.mul(acc, x);
  return acc;
}

bool is_reduced(const MultLattice& M) {
  const auto n = static_cast<unsigned>(M.size());
  for (auto x : M.elements()) {
    if (x == M.bottom()) continue;
    if (power(M, x, n) == M.bottom()) return false;
  }
  return true;
}

ElementSet compact_elements(const MultLattice& M) { return M.elements(); }

}  // namespace mlat
