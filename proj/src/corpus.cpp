#include "mlat/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "mlat/error.hpp"
#include "mlat/io.hpp"

namespace mlat {

namespace {

using u32 = std::uint32_t;

}  // namespace

MultLattice gen_chain(unsigned k) {
  const std::size_t n = std::size_t(k) + 1;
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r.set(i, j);
  return gen_meet_mult(build_lattice(r));
}

MultLattice gen_boolean(unsigned k) {
  if (k > 10) throw Error(ErrorKind::InvalidArgument, "boolean rank above 10");
  const std::size_t n = std::size_t(1) << k;
  Relation r(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.set(i, j, (i & j) == i);
  return gen_meet_mult(build_lattice(r));
}

MultLattice gen_meet_mult(FiniteLattice L) { return meet_multiplication(std::move(L)); }

MultLattice gen_zn(unsigned n) {
  if (n < 2) throw Error(ErrorKind::InvalidArgument, "zn requires n >= 2");
  std::vector<unsigned> divisors;
  for (unsigned d = n; d >= 1; --d)
    if (n % d == 0) divisors.push_back(d);
  const std::size_t k = divisors.size();
  std::map<unsigned, u32> index;
  for (std::size_t i = 0; i < k; ++i) index[divisors[i]] = u32(i);

  Relation r(k);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) {
    names.push_back("(" + std::to_string(divisors[i]) + ")");
    for (std::size_t j = 0; j < k; ++j)
      r.set(i, j, divisors[i] % divisors[j] == 0);  // (d) <= (e) iff e | d
  }
  MulTable t(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      const unsigned long long de =
          static_cast<unsigned long long>(divisors[i]) * divisors[j];
      t[i * k + j] = ElementId(index.at(
          static_cast<unsigned>(std::gcd(de, static_cast<unsigned long long>(n)))));
    }
  return validate_quantale(build_lattice(r, std::move(names)), std::move(t));
}

MultLattice product(const MultLattice& M1, const MultLattice& M2) {
  const std::size_t n1 = M1.size(), n2 = M2.size(), n = n1 * n2;
  auto split = [&](std::size_t p) {
    return std::pair{ElementId(u32(p / n2)), ElementId(u32(p % n2))};
  };
  Relation r(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [a1, a2] = split(p);
      auto [b1, b2] = split(q);
      r.set(p, q, M1.leq(a1, b1) && M2.leq(a2, b2));
    }
  MulTable t(n * n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      auto [a1, a2] = split(p);
      auto [b1, b2] = split(q);
      t[p * n + q] = ElementId(u32(M1.mul(a1, b1).index() * n2 + M2.mul(a2, b2).index()));
    }
  std::vector<std::string> names;
  if (M1.lattice().has_names() || M2.lattice().has_names()) {
    for (std::size_t p = 0; p < n; ++p) {
      auto [a1, a2] = split(p);
      names.push_back("(" + M1.label(a1) + "," + M2.label(a2) + ")");
    }
  }
  return validate_quantale(build_lattice(r, std::move(names)), std::move(t));
}

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"C2", "C3", "B2", "N4", "Z30"};
  return names;
}

MultLattice fixture(std::string_view name) {
  if (name == "C2") return gen_chain(1);
  if (name == "C3") return gen_chain(2);
  if (name == "B2") return gen_boolean(2);
  if (name == "N4") {
    // Chain 0 < a < b < 1 with a·a = a·b = b·b = a.
    const auto chain = gen_chain(3);
    auto t = table_from_rows({{0, 0, 0, 0},
                              {0, 1, 1, 1},
                              {0, 1, 1, 2},
                              {0, 1, 2, 3}});
    return validate_quantale(
        build_lattice(chain.lattice().order(), {"0", "a", "b", "1"}), std::move(t));
  }
  if (name == "Z30") return gen_zn(30);
  throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

LatticeSpecifier LatticeSpecifier::parse(std::string_view text) {
  if (const auto star = text.rfind('*'); star != std::string_view::npos &&
                                          text.substr(0, 5) != "file:") {
    LatticeSpecifier s;
    s.kind = Kind::Product;
    s.left = std::make_shared<LatticeSpecifier>(parse(text.substr(0, star)));
    s.right = std::make_shared<LatticeSpecifier>(parse(text.substr(star + 1)));
    return s;
  }
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorKind::InvalidArgument,
                "specifier must look like KIND:PARAM, got '" + std::string(text) + "'");
  }
  const auto kind = text.substr(0, colon);
  const auto param = text.substr(colon + 1);
  LatticeSpecifier s;
  auto number = [&]() -> unsigned {
    unsigned v = 0;
    auto [ptr, ec] = std::from_chars(param.data(), param.data() + param.size(), v);
    if (ec != std::errc() || ptr != param.data() + param.size()) {
      throw Error(ErrorKind::InvalidArgument,
                  "expected a number in '" + std::string(text) + "'");
    }
    return v;
  };
  if (kind == "chain") {
    s.kind = Kind::Chain;
    s.parameter = number();
    if (s.parameter < 1) throw Error(ErrorKind::InvalidArgument, "chain needs k >= 1");
  } else if (kind == "boolean") {
    s.kind = Kind::Boolean;
    s.parameter = number();
    if (s.parameter < 1) throw Error(ErrorKind::InvalidArgument, "boolean needs k >= 1");
  } else if (kind == "zn") {
    s.kind = Kind::Zn;
    s.parameter = number();
    if (s.parameter < 2) throw Error(ErrorKind::InvalidArgument, "zn needs n >= 2");
  } else if (kind == "fixture") {
    s.kind = Kind::Fixture;
    s.name = std::string(param);
  } else if (kind == "file") {
    s.kind = Kind::File;
    s.name = std::string(param);
  } else {
    throw Error(ErrorKind::InvalidArgument, "unknown lattice kind '" + std::string(kind) + "'");
  }
  return s;
}

std::string LatticeSpecifier::to_string() const {
  switch (kind) {
    case Kind::Chain: return "chain:" + std::to_string(parameter);
    case Kind::Boolean: return "boolean:" + std::to_string(parameter);
    case Kind::Zn: return "zn:" + std::to_string(parameter);
    case Kind::Fixture: return "fixture:" + name;
    case Kind::File: return "file:" + name;
    case Kind::Product: return left->to_string() + "*" + right->to_string();
  }
  return {};
}

MultLattice realize(const LatticeSpecifier& spec) {
  using Kind = LatticeSpecifier::Kind;
  switch (spec.kind) {
    case Kind::Chain: return gen_chain(spec.parameter);
    case Kind::Boolean: return gen_boolean(spec.parameter);
    case Kind::Zn: return gen_zn(spec.parameter);
    case Kind::Fixture: return fixture(spec.name);
    case Kind::File: return read_mlat_file(spec.name);
    case Kind::Product: return product(realize(*spec.left), realize(*spec.right));
  }
  throw Error(ErrorKind::InvalidArgument, "bad specifier");
}

// ---------------------------------------------------------------------------
// Enumeration

namespace {

std::vector<std::vector<u32>> middle_permutations(std::size_t n) {
  // Permutations of {0..n-1} fixing 0 and n-1.
  std::vector<std::vector<u32>> out;
  std::vector<u32> p(n);
  std::iota(p.begin(), p.end(), 0u);
  if (n <= 2) return {p};
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin() + 1, p.end() - 1));
  return out;
}

std::vector<std::uint8_t> permuted_bits(const Relation& r, const std::vector<u32>& p) {
  const std::size_t n = r.size();
  std::vector<std::uint8_t> bits(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) bits[p[i] * n + p[j]] = r(i, j) ? 1 : 0;
  return bits;
}

std::vector<std::uint8_t> canonical_key(const Relation& r) {
  std::vector<std::uint8_t> best;
  for (const auto& p : middle_permutations(r.size())) {
    auto bits = permuted_bits(r, p);
    if (best.empty() || bits < best) best = std::move(bits);
  }
  return best;
}

bool transitive(const Relation& r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (r(i, j))
        for (std::size_t k = 0; k < n; ++k)
          if (r(j, k) && !r(i, k)) return false;
  return true;
}

std::vector<std::vector<u32>> automorphisms(const FiniteLattice& L) {
  std::vector<std::vector<u32>> out;
  const std::size_t n = L.size();
  for (const auto& p : middle_permutations(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = L.order()(i, j) == L.order()(p[i], p[j]);
    if (ok) out.push_back(p);
  }
  return out;
}

}  // namespace

std::vector<FiniteLattice> enumerate_lattices(unsigned n, bool dedup) {
  std::vector<FiniteLattice> out;
  if (n == 0) return out;
  if (n == 1) {
    out.push_back(build_lattice(Relation::from_rows({{1}})));
    return out;
  }
  const std::size_t top = n - 1;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 1; i < top; ++i)
    for (std::size_t j = i + 1; j < top; ++j) pairs.emplace_back(i, j);

  std::set<std::vector<std::uint8_t>> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << pairs.size()); ++mask) {
    Relation r(n);
    for (std::size_t i = 0; i < n; ++i) {
      r.set(i, i);
      r.set(0, i);
      r.set(i, top);
    }
    for (std::size_t b = 0; b < pairs.size(); ++b)
      if (mask & (std::uint64_t(1) << b)) r.set(pairs[b].first, pairs[b].second);
    if (!transitive(r)) continue;
    std::optional<FiniteLattice> L;
    try {
      L = build_lattice(r);
    } catch (const Error&) {
      continue;
    }
    if (dedup && !seen.insert(canonical_key(r)).second) continue;
    out.push_back(std::move(*L));
  }
  return out;
}

namespace {

constexpr int kUnknown = -1;

class TableSearch {
 public:
  TableSearch(const FiniteLattice& L, bool dedup) : L_(L), n_(L.size()), dedup_(dedup) {
    t_.assign(n_ * n_, kUnknown);
    const auto bot = int(L.bottom().index()), top = int(L.top().index());
    for (std::size_t x = 0; x < n_; ++x) {
      set(bot, int(x), bot);
      set(top, int(x), int(x));
    }
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        if (at(int(i), int(j)) == kUnknown) cells_.emplace_back(int(i), int(j));
    if (dedup_) autos_ = automorphisms(L);
  }

  std::vector<MultLattice> run() {
    if (consistent()) extend(0);
    return std::move(found_);
  }

 private:
  int at(int x, int y) const { return t_[std::size_t(x) * n_ + std::size_t(y)]; }
  void set(int x, int y, int v) {
    t_[std::size_t(x) * n_ + std::size_t(y)] = v;
    t_[std::size_t(y) * n_ + std::size_t(x)] = v;
  }
  int join(int a, int b) const { return int(L_.join(ElementId(u32(a)), ElementId(u32(b))).index()); }
  bool leq(int a, int b) const { return L_.order()(std::size_t(a), std::size_t(b)); }

  // Every distributivity, monotonicity and associativity instance whose
  // products are already determined.
  bool consistent() const {
    const int n = int(n_);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int xy = at(x, y);
        if (xy == kUnknown) continue;
        for (int z = 0; z < n; ++z) {
          const int xz = at(x, z);
          if (xz != kUnknown) {
            if (leq(y, z) && !leq(xy, xz)) return false;
            const int xyz = at(x, join(y, z));
            if (xyz != kUnknown && xyz != join(xy, xz)) return false;
          }
          const int yz = at(y, z);
          if (yz == kUnknown) continue;
          const int left = at(xy, z), right = at(x, yz);
          if (left != kUnknown && right != kUnknown && left != right) return false;
        }
      }
    return true;
  }

  void extend(std::size_t k) {
    if (k == cells_.size()) {
      emit();
      return;
    }
    const auto [i, j] = cells_[k];
    const int bound = int(L_.meet(ElementId(u32(i)), ElementId(u32(j))).index());
    for (int v = 0; v < int(n_); ++v) {
      if (!leq(v, bound)) continue;
      set(i, j, v);
      if (consistent()) extend(k + 1);
    }
    set(i, j, kUnknown);
  }

  void emit() {
    MulTable table(n_ * n_);
    for (std::size_t c = 0; c < t_.size(); ++c) table[c] = ElementId(u32(t_[c]));
    if (dedup_) {
      for (const auto& p : autos_) {
        std::vector<int> image(n_ * n_);
        for (std::size_t x = 0; x < n_; ++x)
          for (std::size_t y = 0; y < n_; ++y)
            image[p[x] * n_ + p[y]] = int(p[std::size_t(t_[x * n_ + y])]);
        if (image < t_) return;  // not the orbit representative
      }
    }
    try {
      found_.push_back(validate_quantale(L_, std::move(table)));
    } catch (const Error&) {
      // Pruning only covers determined instances; the full check decides.
    }
  }

  const FiniteLattice& L_;
  std::size_t n_;
  bool dedup_;
  std::vector<int> t_;
  std::vector<std::pair<int, int>> cells_;
  std::vector<std::vector<u32>> autos_;
  std::vector<MultLattice> found_;
};

}  // namespace

std::vector<MultLattice> enumerate_multiplications(const FiniteLattice& L, bool dedup) {
  return TableSearch(L, dedup).run();
}

void enumerate(const EnumerationConfig& config,
               const std::function<bool(const MultLattice&)>& visit) {
  if (config.max_n > 6) {
    throw Error(ErrorKind::InvalidArgument, "enumeration is limited to max_n <= 6");
  }
  for (unsigned n = 1; n <= config.max_n; ++n) {
    for (const auto& L : enumerate_lattices(n, config.dedup)) {
      for (const auto& M : enumerate_multiplications(L, config.dedup)) {
        if (config.require_reduced && !is_reduced(M)) continue;
        if (!visit(M)) return;
      }
    }
  }
}

std::vector<MultLattice> enumerate(const EnumerationConfig& config) {
  std::vector<MultLattice> out;
  enumerate(config, [&](const MultLattice& M) {
    out.push_back(M);
    return true;
  });
  return out;
}

}  // namespace mlat
