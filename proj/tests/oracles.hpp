#pragma once

// Brute-force reference computations. Everything here works on raw tables
// (an order matrix and a product matrix over 0..n-1) and shares no code
// with the library, so agreement is evidence rather than tautology.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "mlat/quantale.hpp"

namespace oracle {

struct Raw {
  int n = 0;
  std::vector<std::vector<bool>> leq;
  std::vector<std::vector<int>> mul;

  bool le(int a, int b) const { return leq[a][b]; }
};

inline Raw raw_from(const mlat::FiniteLattice& L, const mlat::MulTable& t) {
  Raw r;
  r.n = int(L.size());
  r.leq.assign(r.n, std::vector<bool>(r.n));
  r.mul.assign(r.n, std::vector<int>(r.n));
  for (int i = 0; i < r.n; ++i)
    for (int j = 0; j < r.n; ++j) {
      r.leq[i][j] = L.order()(i, j);
      r.mul[i][j] = int(t[std::size_t(i) * r.n + j].value);
    }
  return r;
}

inline Raw raw(const mlat::MultLattice& M) { return raw_from(M.lattice(), M.table()); }

// Least upper bound by scanning all upper bounds; nullopt if none or not unique.
inline std::optional<int> lub(const Raw& r, const std::vector<int>& xs) {
  std::vector<int> ub;
  for (int u = 0; u < r.n; ++u)
    if (std::all_of(xs.begin(), xs.end(), [&](int x) { return r.le(x, u); })) ub.push_back(u);
  for (int u : ub)
    if (std::all_of(ub.begin(), ub.end(), [&](int v) { return r.le(u, v); })) return u;
  return std::nullopt;
}

inline std::optional<int> glb(const Raw& r, const std::vector<int>& xs) {
  std::vector<int> lb;
  for (int u = 0; u < r.n; ++u)
    if (std::all_of(xs.begin(), xs.end(), [&](int x) { return r.le(u, x); })) lb.push_back(u);
  for (int u : lb)
    if (std::all_of(lb.begin(), lb.end(), [&](int v) { return r.le(v, u); })) return u;
  return std::nullopt;
}

inline bool is_lattice_order(const Raw& r) {
  for (int a = 0; a < r.n; ++a) {
    if (!r.le(a, a)) return false;
    for (int b = 0; b < r.n; ++b) {
      if (a != b && r.le(a, b) && r.le(b, a)) return false;
      for (int c = 0; c < r.n; ++c)
        if (r.le(a, b) && r.le(b, c) && !r.le(a, c)) return false;
      if (!lub(r, {a, b}) || !glb(r, {a, b})) return false;
    }
  }
  return r.n > 0 && lub(r, {}) && glb(r, {});
}

inline int join(const Raw& r, int a, int b) { return *lub(r, {a, b}); }
inline int meet(const Raw& r, int a, int b) { return *glb(r, {a, b}); }
inline int bottom(const Raw& r) { return *lub(r, {}); }
inline int top(const Raw& r) { return *glb(r, {}); }

// Every axiom instance, by triple enumeration. The order is checked and
// its joins tabulated once, so many tables can be tested against it.
class AxiomOracle {
 public:
  explicit AxiomOracle(Raw order) : r_(std::move(order)), lattice_(is_lattice_order(r_)) {
    if (!lattice_) return;
    join_.assign(r_.n, std::vector<int>(r_.n));
    for (int a = 0; a < r_.n; ++a)
      for (int b = 0; b < r_.n; ++b) join_[a][b] = join(r_, a, b);
    bottom_ = bottom(r_);
    top_ = top(r_);
  }

  bool accepts(const std::vector<std::vector<int>>& mul) const {
    if (!lattice_) return false;
    const int n = r_.n;
    for (const auto& row : mul)
      for (int v : row)
        if (v < 0 || v >= n) return false;
    for (int x = 0; x < n; ++x) {
      if (mul[top_][x] != x) return false;
      if (mul[x][bottom_] != bottom_) return false;
      for (int y = 0; y < n; ++y) {
        if (mul[x][y] != mul[y][x]) return false;
        for (int w = 0; w < n; ++w) {
          if (mul[mul[x][y]][w] != mul[x][mul[y][w]]) return false;
          if (mul[x][join_[y][w]] != join_[mul[x][y]][mul[x][w]]) return false;
        }
      }
    }
    return true;
  }

 private:
  Raw r_;
  bool lattice_;
  std::vector<std::vector<int>> join_;
  int bottom_ = 0, top_ = 0;
};

inline bool is_multiplicative_lattice(const Raw& r) { return AxiomOracle(r).accepts(r.mul); }

inline bool reduced(const Raw& r) {
  const int z = bottom(r);
  for (int x = 0; x < r.n; ++x) {
    int p = x;
    for (int k = 0; k <= r.n; ++k) {
      if (p == z && x != z) return false;
      p = r.mul[p][x];
    }
  }
  return true;
}

inline int perp(const Raw& r, int a) {
  std::vector<int> xs;
  for (int x = 0; x < r.n; ++x)
    if (r.mul[x][a] == bottom(r)) xs.push_back(x);
  return *lub(r, xs);
}

// Baer by the defining condition: c <= b implies c⊥⊥ <= b.
inline bool baer(const Raw& r, int b) {
  for (int c = 0; c < r.n; ++c)
    if (r.le(c, b) && !r.le(perp(r, perp(r, c)), b)) return false;
  return true;
}

inline std::vector<int> baer_set(const Raw& r) {
  std::vector<int> out;
  for (int b = 0; b < r.n; ++b)
    if (baer(r, b)) out.push_back(b);
  return out;
}

inline int closure(const Raw& r, int a) {
  std::vector<int> above;
  for (int b : baer_set(r))
    if (r.le(a, b)) above.push_back(b);
  return *glb(r, above);
}

inline bool prime(const Raw& r, int p) {
  if (p == top(r)) return false;
  for (int x = 0; x < r.n; ++x)
    for (int y = 0; y < r.n; ++y)
      if (r.le(r.mul[x][y], p) && !r.le(x, p) && !r.le(y, p)) return false;
  return true;
}

inline int radical(const Raw& r, int a) {
  std::vector<int> xs;
  for (int x = 0; x < r.n; ++x) {
    int p = x;
    for (int k = 0; k <= r.n; ++k, p = r.mul[p][x])
      if (r.le(p, a)) {
        xs.push_back(x);
        break;
      }
  }
  return *lub(r, xs);
}

// Permutation p with p(a) <= p(b) iff a <= b and p(ab) = p(a)p(b).
inline bool isomorphic(const Raw& a, const Raw& b) {
  if (a.n != b.n) return false;
  std::vector<int> p(a.n);
  std::iota(p.begin(), p.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = 0; j < a.n && ok; ++j)
        ok = a.le(i, j) == b.le(p[i], p[j]) && p[a.mul[i][j]] == b.mul[p[i]][p[j]];
    if (ok) return true;
  } while (std::next_permutation(p.begin(), p.end()));
  return false;
}

inline std::vector<unsigned> divisors_descending(unsigned n) {
  std::vector<unsigned> d;
  for (unsigned k = n; k >= 1; --k)
    if (n % k == 0) d.push_back(k);
  return d;
}

inline bool squarefree(unsigned n) {
  for (unsigned p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

}  // namespace oracle
