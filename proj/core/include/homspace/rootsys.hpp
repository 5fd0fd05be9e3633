#pragma once

// Root systems of the simple Lie algebras in exact ambient coordinates.
//
// Models (coordinates are stored doubled so that every entry is an integer):
//   A_l  in R^{l+1}: roots e_i - e_j.
//   B_l  in R^l:     +-e_i +- e_j, +-e_i.
//   C_l  in R^l:     +-e_i +- e_j, +-2e_i.
//   D_l  in R^l:     +-e_i +- e_j.
//   G2   in R^3:     e_i - e_j and +-(2e_i - e_j - e_k) on the plane x1+x2+x3 = 0.
//   F4   in R^4:     +-e_i, +-e_i +- e_j, (1/2)(+-e1 +- e2 +- e3 +- e4).
//   E8   in R^8:     +-e_i +- e_j, (1/2)(+-e1 ... +-e8) with an even number of minus signs.
//   E7, E6:          the E8 roots lying in the span of the first 7 (resp. 6) E8 simple roots.
//
// Simple roots follow Bourbaki numbering (Plates I-IX):
//   A_l: a_i = e_i - e_{i+1}
//   B_l: a_i = e_i - e_{i+1} (i < l), a_l = e_l
//   C_l: a_i = e_i - e_{i+1} (i < l), a_l = 2e_l
//   D_l: a_i = e_i - e_{i+1} (i < l), a_l = e_{l-1} + e_l
//   G2:  a_1 = e1 - e2 (short), a_2 = -2e1 + e2 + e3 (long)
//   F4:  a_1 = e2 - e3, a_2 = e3 - e4, a_3 = e4, a_4 = (1/2)(e1 - e2 - e3 - e4)
//   E8:  a_1 = (1/2)(e1 + e8 - e2 - ... - e7), a_2 = e1 + e2, a_{i} = e_{i-1} - e_{i-2} (3 <= i <= 8)
// Index sets over simple roots are 1-based against this numbering everywhere
// in the library and on the command line.

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace homspace {

enum class Family { A, B, C, D, E6, E7, E8, F4, G2 };

inline constexpr int kDefaultRankCap = 12;

std::string_view family_name(Family family);
bool is_classical(Family family);

/// Smallest rank at which the family exists (A: 1, B/C: 2, D: 3; exceptional: its fixed rank).
int min_rank(Family family);

/// A simple type together with its rank. Construction validates the
/// per-family rank constraint and throws std::invalid_argument otherwise.
class SimpleType {
 public:
  SimpleType(Family family, int rank);
  /// Exceptional families only; the rank is implied.
  explicit SimpleType(Family family);

  Family family() const { return family_; }
  int rank() const { return rank_; }
  bool classical() const { return is_classical(family_); }

  /// "A4", "D5", "E6", "G2".
  std::string name() const;

  /// Accepts the grammar produced by name(): `<A|B|C|D><rank>` or a bare
  /// exceptional name. Throws std::invalid_argument naming the bad token.
  static SimpleType parse(std::string_view text);

  friend auto operator<=>(const SimpleType&, const SimpleType&) = default;

 private:
  Family family_;
  int rank_;
};

/// Closed-form dimension of the simple Lie algebra (Table of simple Lie algebras):
/// l^2 + 2l, 2l^2 + l, 2l^2 + l, 2l^2 - l, 78, 133, 248, 52, 14.
int algebra_dimension(const SimpleType& type);

/// The closed form as printed, e.g. "l^2 + 2l" or "78".
std::string_view dimension_formula(Family family);

/// Every valid simple type of rank <= max_rank, ordered by family then rank.
std::vector<SimpleType> all_simple_types(int max_rank);

/// A root in doubled ambient coordinates (true coordinate = coords[i] / 2).
struct Root {
  std::vector<int> coords;

  Root operator-() const;
  friend Root operator+(const Root& a, const Root& b);
  friend Root operator*(int scale, const Root& r);
  friend auto operator<=>(const Root&, const Root&) = default;
  bool is_zero() const;
};

/// Inner product of the true coordinates, times 4.
std::int64_t doubled_inner(const Root& a, const Root& b);

class RootSystem {
 public:
  const SimpleType& type() const { return type_; }
  int rank() const { return type_.rank(); }
  std::size_t ambient_dimension() const { return ambient_; }

  /// Phi, sorted lexicographically by coordinates.
  const std::vector<Root>& roots() const { return roots_; }
  /// Phi_+, ordered by height and then by coefficient vector.
  const std::vector<Root>& positive() const { return positive_; }
  /// Phi_-, the negatives of positive() in the same order.
  const std::vector<Root>& negative() const { return negative_; }
  /// P, in Bourbaki order.
  const std::vector<Root>& simple() const { return simple_; }

  bool contains(const Root& r) const;

  /// Coefficients of r over the simple roots. Throws std::domain_error if r is not a root.
  const std::vector<int>& coefficients(const Root& r) const;

  /// Bit j set iff simple root j+1 has a nonzero coefficient in the root.
  /// Indexed like positive(); the negative root has the same support.
  const std::vector<std::uint32_t>& positive_supports() const { return positive_support_; }

  const Root& highest_root() const { return positive_.back(); }

  /// a_ij = 2 (a_i, a_j) / (a_j, a_j).
  std::vector<std::vector<int>> cartan_matrix() const;

 private:
  friend RootSystem build_root_system(const SimpleType& type);
  RootSystem(SimpleType type, std::size_t ambient, std::vector<Root> simple,
             const std::vector<Root>& candidates);

  SimpleType type_;
  std::size_t ambient_;
  std::vector<Root> simple_;
  std::vector<Root> roots_;
  std::vector<std::vector<int>> root_coefficients_;  // parallel to roots_
  std::vector<Root> positive_;
  std::vector<Root> negative_;
  std::vector<std::uint32_t> positive_support_;
};

RootSystem build_root_system(const SimpleType& type);

/// rank + |Phi|, computed from an explicit root system.
int enumerated_dimension(const RootSystem& rs);

/// Closed form cross-checked against an explicitly built root system;
/// throws std::logic_error if the two disagree.
int verified_algebra_dimension(const SimpleType& type);

std::vector<int> simple_root_decomposition(const Root& r, const RootSystem& rs);

}  // namespace homspace
