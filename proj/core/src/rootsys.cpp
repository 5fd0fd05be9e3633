#include "homspace/rootsys.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "homspace/rational.hpp"

namespace homspace {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::E6: return "E6";
    case Family::E7: return "E7";
    case Family::E8: return "E8";
    case Family::F4: return "F4";
    case Family::G2: return "G2";
  }
  return "?";
}

bool is_classical(Family family) {
  return family == Family::A || family == Family::B || family == Family::C || family == Family::D;
}

int min_rank(Family family) {
  switch (family) {
    case Family::A: return 1;
    case Family::B:
    case Family::C: return 2;
    case Family::D: return 3;
    case Family::E6: return 6;
    case Family::E7: return 7;
    case Family::E8: return 8;
    case Family::F4: return 4;
    case Family::G2: return 2;
  }
  return 0;
}

SimpleType::SimpleType(Family family, int rank) : family_(family), rank_(rank) {
  if (is_classical(family)) {
    if (rank < min_rank(family)) {
      throw std::invalid_argument(std::string(family_name(family)) + " requires rank >= " +
                                  std::to_string(min_rank(family)) + " (got " +
                                  std::to_string(rank) + ")");
    }
  } else if (rank != min_rank(family)) {
    throw std::invalid_argument(std::string(family_name(family)) + " has fixed rank " +
                                std::to_string(min_rank(family)) + " (got " +
                                std::to_string(rank) + ")");
  }
}

SimpleType::SimpleType(Family family) : SimpleType(family, min_rank(family)) {
  if (is_classical(family)) {
    throw std::invalid_argument(std::string(family_name(family)) +
                                " is a classical family and needs an explicit rank");
  }
}

std::string SimpleType::name() const {
  if (classical()) return std::string(family_name(family_)) + std::to_string(rank_);
  return std::string(family_name(family_));
}

SimpleType SimpleType::parse(std::string_view text) {
  const auto bad = [&](const std::string& why) {
    return std::invalid_argument("invalid type '" + std::string(text) + "': " + why);
  };
  if (text.size() < 2) throw bad("expected <letter><rank>, e.g. A4 or E6");
  constexpr std::array exceptional{Family::E6, Family::E7, Family::E8, Family::F4, Family::G2};
  for (Family f : exceptional) {
    if (text == family_name(f)) return SimpleType(f);
  }
  Family family;
  switch (text.front()) {
    case 'A': family = Family::A; break;
    case 'B': family = Family::B; break;
    case 'C': family = Family::C; break;
    case 'D': family = Family::D; break;
    default: throw bad("unknown family");
  }
  int rank = 0;
  for (char ch : text.substr(1)) {
    if (ch < '0' || ch > '9') throw bad("rank must be a positive integer");
    rank = rank * 10 + (ch - '0');
    if (rank > 1000) throw bad("rank too large");
  }
  try {
    return SimpleType(family, rank);
  } catch (const std::invalid_argument& e) {
    throw bad(e.what());
  }
}

int algebra_dimension(const SimpleType& type) {
  const int l = type.rank();
  switch (type.family()) {
    case Family::A: return l * l + 2 * l;
    case Family::B:
    case Family::C: return 2 * l * l + l;
    case Family::D: return 2 * l * l - l;
    case Family::E6: return 78;
    case Family::E7: return 133;
    case Family::E8: return 248;
    case Family::F4: return 52;
    case Family::G2: return 14;
  }
  return 0;
}

std::string_view dimension_formula(Family family) {
  switch (family) {
    case Family::A: return "l^2 + 2l";
    case Family::B:
    case Family::C: return "2l^2 + l";
    case Family::D: return "2l^2 - l";
    case Family::E6: return "78";
    case Family::E7: return "133";
    case Family::E8: return "248";
    case Family::F4: return "52";
    case Family::G2: return "14";
  }
  return "";
}

std::vector<SimpleType> all_simple_types(int max_rank) {
  std::vector<SimpleType> out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
    for (int l = min_rank(f); l <= max_rank; ++l) out.emplace_back(f, l);
  }
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2}) {
    if (min_rank(f) <= max_rank) out.emplace_back(f);
  }
  return out;
}

Root Root::operator-() const {
  Root out{coords};
  for (int& c : out.coords) c = -c;
  return out;
}

Root operator+(const Root& a, const Root& b) {
  Root out{a.coords};
  for (std::size_t i = 0; i < out.coords.size(); ++i) out.coords[i] += b.coords[i];
  return out;
}

Root operator*(int scale, const Root& r) {
  Root out{r.coords};
  for (int& c : out.coords) c *= scale;
  return out;
}

bool Root::is_zero() const {
  return std::ranges::all_of(coords, [](int c) { return c == 0; });
}

std::int64_t doubled_inner(const Root& a, const Root& b) {
  std::int64_t sum = 0;
  for (std::size_t i = 0; i < a.coords.size(); ++i) {
    sum += static_cast<std::int64_t>(a.coords[i]) * b.coords[i];
  }
  return sum;
}

namespace {

using RationalMatrix = std::vector<std::vector<Rational>>;

// Gauss-Jordan inverse; the Gram matrix of a basis is always invertible.
RationalMatrix invert(RationalMatrix m) {
  const std::size_t n = m.size();
  RationalMatrix inv(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = Rational(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == Rational(0)) ++pivot;
    if (pivot == n) throw std::logic_error("singular Gram matrix for simple roots");
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= scale;
      inv[col][j] /= scale;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == Rational(0)) continue;
      const Rational factor = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

Root unit(std::size_t dim, std::initializer_list<std::pair<std::size_t, int>> entries) {
  Root r{std::vector<int>(dim, 0)};
  for (auto [i, v] : entries) r.coords[i] = v;
  return r;
}

// +-e_i +- e_j for i < j (doubled).
void add_pair_roots(std::size_t dim, std::vector<Root>& out) {
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i + 1; j < dim; ++j) {
      for (int si : {2, -2}) {
        for (int sj : {2, -2}) out.push_back(unit(dim, {{i, si}, {j, sj}}));
      }
    }
  }
}

// (1/2)(+-e_1 ... +-e_dim) with the number of minus signs of the given parity,
// or all sign patterns when parity < 0.
void add_half_spin_roots(std::size_t dim, int parity, std::vector<Root>& out) {
  for (std::uint32_t mask = 0; mask < (1U << dim); ++mask) {
    const int minus = std::popcount(mask);
    if (parity >= 0 && minus % 2 != parity) continue;
    Root r{std::vector<int>(dim, 1)};
    for (std::size_t i = 0; i < dim; ++i) {
      if (mask & (1U << i)) r.coords[i] = -1;
    }
    out.push_back(std::move(r));
  }
}

std::vector<Root> e8_simple_roots() {
  std::vector<Root> simple;
  simple.push_back(Root{{1, -1, -1, -1, -1, -1, -1, 1}});
  simple.push_back(unit(8, {{0, 2}, {1, 2}}));
  for (std::size_t i = 3; i <= 8; ++i) {
    // a_i = e_{i-1} - e_{i-2}, 1-based
    simple.push_back(unit(8, {{i - 2, 2}, {i - 3, -2}}));
  }
  return simple;
}

}  // namespace

RootSystem::RootSystem(SimpleType type, std::size_t ambient, std::vector<Root> simple,
                       const std::vector<Root>& candidates)
    : type_(type), ambient_(ambient), simple_(std::move(simple)) {
  const std::size_t n = simple_.size();
  RationalMatrix gram(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) gram[i][j] = doubled_inner(simple_[i], simple_[j]);
  }
  const RationalMatrix gram_inv = invert(gram);

  struct Entry {
    Root root;
    std::vector<int> coeffs;
    int height;
  };
  std::vector<Entry> entries;
  for (const Root& cand : candidates) {
    std::vector<Rational> rhs(n);
    for (std::size_t j = 0; j < n; ++j) rhs[j] = doubled_inner(cand, simple_[j]);
    std::vector<Rational> c(n, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) c[i] += gram_inv[i][j] * rhs[j];
    }
    // Orthogonal projection onto span(P); keep cand only if it lies in the span.
    std::vector<Rational> recomposed(ambient_, Rational(0));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < ambient_; ++a) recomposed[a] += c[i] * simple_[i].coords[a];
    }
    bool in_span = true;
    for (std::size_t a = 0; a < ambient_; ++a) {
      if (recomposed[a] != Rational(cand.coords[a])) {
        in_span = false;
        break;
      }
    }
    if (!in_span) continue;
    Entry e{cand, std::vector<int>(n), 0};
    bool any_pos = false;
    bool any_neg = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i].denominator() != 1) {
        throw std::logic_error("non-integral simple-root coefficient in " + type.name());
      }
      e.coeffs[i] = static_cast<int>(c[i].numerator());
      e.height += e.coeffs[i];
      any_pos |= e.coeffs[i] > 0;
      any_neg |= e.coeffs[i] < 0;
    }
    if (any_pos == any_neg) {
      throw std::logic_error("root with mixed-sign coefficients in " + type.name());
    }
    entries.push_back(std::move(e));
  }

  std::ranges::sort(entries, {}, &Entry::root);
  entries.erase(std::unique(entries.begin(), entries.end(),
                            [](const Entry& a, const Entry& b) { return a.root == b.root; }),
                entries.end());
  for (const auto& e : entries) {
    roots_.push_back(e.root);
    root_coefficients_.push_back(e.coeffs);
  }

  std::vector<const Entry*> pos;
  for (const auto& e : entries) {
    if (e.height > 0) pos.push_back(&e);
  }
  std::ranges::sort(pos, [](const Entry* a, const Entry* b) {
    if (a->height != b->height) return a->height < b->height;
    return a->coeffs > b->coeffs;
  });
  for (const Entry* e : pos) {
    positive_.push_back(e->root);
    negative_.push_back(-e->root);
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (e->coeffs[i] != 0) mask |= 1U << i;
    }
    positive_support_.push_back(mask);
  }
}

bool RootSystem::contains(const Root& r) const {
  return std::ranges::binary_search(roots_, r);
}

const std::vector<int>& RootSystem::coefficients(const Root& r) const {
  const auto it = std::ranges::lower_bound(roots_, r);
  if (it == roots_.end() || *it != r) {
    throw std::domain_error("vector is not a root of " + type_.name());
  }
  return root_coefficients_[static_cast<std::size_t>(it - roots_.begin())];
}

std::vector<std::vector<int>> RootSystem::cartan_matrix() const {
  const std::size_t n = simple_.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      out[i][j] = static_cast<int>(2 * doubled_inner(simple_[i], simple_[j]) /
                                   doubled_inner(simple_[j], simple_[j]));
    }
  }
  return out;
}

RootSystem build_root_system(const SimpleType& type) {
  const auto l = static_cast<std::size_t>(type.rank());
  std::vector<Root> simple;
  std::vector<Root> candidates;
  std::size_t ambient = l;

  const auto classical_chain = [&](std::size_t dim) {
    for (std::size_t i = 0; i + 1 < l; ++i) simple.push_back(unit(dim, {{i, 2}, {i + 1, -2}}));
  };

  switch (type.family()) {
    case Family::A:
      ambient = l + 1;
      for (std::size_t i = 0; i < l; ++i) simple.push_back(unit(ambient, {{i, 2}, {i + 1, -2}}));
      for (std::size_t i = 0; i < ambient; ++i) {
        for (std::size_t j = 0; j < ambient; ++j) {
          if (i != j) candidates.push_back(unit(ambient, {{i, 2}, {j, -2}}));
        }
      }
      break;
    case Family::B:
      classical_chain(l);
      simple.push_back(unit(l, {{l - 1, 2}}));
      add_pair_roots(l, candidates);
      for (std::size_t i = 0; i < l; ++i) {
        candidates.push_back(unit(l, {{i, 2}}));
        candidates.push_back(unit(l, {{i, -2}}));
      }
      break;
    case Family::C:
      classical_chain(l);
      simple.push_back(unit(l, {{l - 1, 4}}));
      add_pair_roots(l, candidates);
      for (std::size_t i = 0; i < l; ++i) {
        candidates.push_back(unit(l, {{i, 4}}));
        candidates.push_back(unit(l, {{i, -4}}));
      }
      break;
    case Family::D:
      classical_chain(l);
      simple.push_back(unit(l, {{l - 2, 2}, {l - 1, 2}}));
      add_pair_roots(l, candidates);
      break;
    case Family::G2:
      ambient = 3;
      simple.push_back(unit(3, {{0, 2}, {1, -2}}));
      simple.push_back(unit(3, {{0, -4}, {1, 2}, {2, 2}}));
      for (std::size_t i = 0; i < 3; ++i) {
        for (std::size_t j = 0; j < 3; ++j) {
          if (i == j) continue;
          candidates.push_back(unit(3, {{i, 2}, {j, -2}}));
        }
        Root longr{std::vector<int>(3, -2)};
        longr.coords[i] = 4;
        candidates.push_back(longr);
        candidates.push_back(-longr);
      }
      break;
    case Family::F4:
      ambient = 4;
      simple.push_back(unit(4, {{1, 2}, {2, -2}}));
      simple.push_back(unit(4, {{2, 2}, {3, -2}}));
      simple.push_back(unit(4, {{3, 2}}));
      simple.push_back(Root{{1, -1, -1, -1}});
      for (std::size_t i = 0; i < 4; ++i) {
        candidates.push_back(unit(4, {{i, 2}}));
        candidates.push_back(unit(4, {{i, -2}}));
      }
      add_pair_roots(4, candidates);
      add_half_spin_roots(4, -1, candidates);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      ambient = 8;
      simple = e8_simple_roots();
      simple.resize(l);
      add_pair_roots(8, candidates);
      add_half_spin_roots(8, 0, candidates);
      break;
  }
  return RootSystem(type, ambient, std::move(simple), candidates);
}

int enumerated_dimension(const RootSystem& rs) {
  return rs.rank() + static_cast<int>(rs.roots().size());
}

int verified_algebra_dimension(const SimpleType& type) {
  const int closed = algebra_dimension(type);
  const int counted = enumerated_dimension(build_root_system(type));
  if (closed != counted) {
    throw std::logic_error("dimension mismatch for " + type.name() + ": closed form " +
                           std::to_string(closed) + " vs rank + |Phi| = " +
                           std::to_string(counted));
  }
  return closed;
}

std::vector<int> simple_root_decomposition(const Root& r, const RootSystem& rs) {
  return rs.coefficients(r);
}

}  // namespace homspace
