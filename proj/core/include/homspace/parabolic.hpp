#pragma once

// Parabolic subalgebras p_I <-> subsets I of the simple roots.
//
// p_I = t + sum over Phi_+ u I_- of root spaces, where I_- (resp. I_+) are the
// negative (resp. positive) roots whose simple-root support lies inside I.
// The Levi factor h_r = t + root spaces over I_+ u I_-, and X = G/P_I has
// dim X = |Phi_+ \ I_+| and Picard rank k = |P| - |I| (simply connected G).
//
// I = {} is the Borel subalgebra; I = P gives p = g and X a point. Each
// conjugacy class of parabolics is represented by its unique I.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homspace/rootsys.hpp"

namespace homspace {

/// Subset of simple roots as a bitmask: bit j <-> Bourbaki index j+1.
using SimpleSubset = std::uint32_t;

/// "{1,3}" for bits 0 and 2; "{}" for the empty set.
std::string format_subset(SimpleSubset subset);

/// Parses a comma-separated list of 1-based indices ("" is the empty set).
/// Throws std::invalid_argument naming the offending token.
SimpleSubset parse_subset(std::string_view text, int rank);

/// Borrows the root system; the RootSystem must outlive the spec.
class ParabolicSpec {
 public:
  /// 1-based Bourbaki indices. Duplicates are ignored; an index outside
  /// 1..rank throws std::invalid_argument.
  ParabolicSpec(const RootSystem& rs, const std::vector<int>& indices);
  ParabolicSpec(const RootSystem& rs, SimpleSubset subset);

  static ParabolicSpec borel(const RootSystem& rs) { return {rs, SimpleSubset{0}}; }
  static ParabolicSpec whole(const RootSystem& rs);

  const RootSystem& root_system() const { return *rs_; }
  SimpleSubset subset() const { return subset_; }
  std::vector<int> indices() const;
  int size() const;
  bool is_full() const;

 private:
  const RootSystem* rs_;
  SimpleSubset subset_;
};

struct ClosureSets {
  std::vector<Root> positive;  // I_+
  std::vector<Root> negative;  // I_-
};

ClosureSets closure_sets(const ParabolicSpec& spec);

/// |I_+| (= |I_-|) without materialising the roots.
int closure_size(const ParabolicSpec& spec);

/// rank + |Phi_+| + |I_-|
int parabolic_dimension(const ParabolicSpec& spec);

/// rank + |I_+| + |I_-|
int levi_dimension(const ParabolicSpec& spec);

struct FlagInvariants {
  int dim_X = 0;
  int picard_rank = 0;
  int dim_parabolic = 0;
  int dim_levi = 0;
  int dim_unipotent_radical = 0;

  friend bool operator==(const FlagInvariants&, const FlagInvariants&) = default;
};

FlagInvariants flag_invariants(const ParabolicSpec& spec);

}  // namespace homspace
