#pragma once

// Maximal dimensions of simple (D^s) and semisimple (D^ss) Lie algebras of a
// given rank, and the exceptional-case lower bound on dim X:
//
//   floor(g, t) = dim g - t - D^ss(rk g - t),   1 <= t <= rk g.

#include <optional>
#include <vector>

#include "homspace/rootsys.hpp"

namespace homspace {

struct SimpleMax {
  int value = 0;
  /// Every family attaining the maximum, in Family order.
  std::vector<SimpleType> witnesses;
};

/// D^s(l). Throws std::domain_error for l < 1.
SimpleMax simple_max_dim(int rank);

struct SemisimpleMax {
  int value = 0;
  /// Ranks of simple factors of one maximizing algebra, sorted descending;
  /// empty for rank 0.
  std::vector<int> partition;
};

/// D^ss(l), with D^ss(0) = 0. Throws std::domain_error for l < 0.
SemisimpleMax semisimple_max_dim(int rank);

/// D^ss(0..max_rank) in one pass of the binary-split recurrence
///   D^ss(l) = max(D^s(l), max_{1 <= a <= l/2} D^ss(a) + D^ss(l - a)).
std::vector<SemisimpleMax> semisimple_max_dim_table(int max_rank);

struct MaxDimEntry {
  int rank = 0;
  int d_simple = 0;  // 0 at rank 0
  int d_semisimple = 0;
  std::vector<SimpleType> witnesses_simple;
  std::vector<int> witness_partition;
};

std::vector<MaxDimEntry> max_dim_entries(int max_rank);

/// Throws std::domain_error unless type is exceptional and 1 <= t_dim <= rank.
int exceptional_floor(const SimpleType& type, int t_dim);

struct FloorRow {
  SimpleType type;
  /// Column t (1-based) holds floor(type, t) for t <= rank, nullopt after.
  std::vector<std::optional<int>> cells;
};

/// Rows E6, E7, E8, F4, G2; eight columns each.
std::vector<FloorRow> table3();

inline constexpr int kTable3Columns = 8;

}  // namespace homspace
