#include "homspace/maxdim.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace homspace {

SimpleMax simple_max_dim(int rank) {
  if (rank < 1) {
    throw std::domain_error("no simple Lie algebra of rank " + std::to_string(rank));
  }
  SimpleMax out;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::E6, Family::E7, Family::E8,
                   Family::F4, Family::G2}) {
    const bool valid = is_classical(f) ? rank >= min_rank(f) : rank == min_rank(f);
    if (!valid) continue;
    const SimpleType t(f, rank);
    const int dim = algebra_dimension(t);
    if (dim > out.value) {
      out.value = dim;
      out.witnesses.clear();
    }
    if (dim == out.value) out.witnesses.push_back(t);
  }
  return out;
}

std::vector<SemisimpleMax> semisimple_max_dim_table(int max_rank) {
  if (max_rank < 0) {
    throw std::domain_error("rank must be nonnegative (got " + std::to_string(max_rank) + ")");
  }
  std::vector<SemisimpleMax> table(static_cast<std::size_t>(max_rank) + 1);
  for (int l = 1; l <= max_rank; ++l) {
    auto& best = table[static_cast<std::size_t>(l)];
    best.value = simple_max_dim(l).value;
    best.partition = {l};
    for (int a = 1; a <= l / 2; ++a) {
      const auto& left = table[static_cast<std::size_t>(a)];
      const auto& right = table[static_cast<std::size_t>(l - a)];
      const int candidate = left.value + right.value;
      if (candidate > best.value) {
        best.value = candidate;
        best.partition = left.partition;
        best.partition.insert(best.partition.end(), right.partition.begin(),
                              right.partition.end());
        std::ranges::sort(best.partition, std::greater<>{});
      }
    }
  }
  return table;
}

SemisimpleMax semisimple_max_dim(int rank) {
  return semisimple_max_dim_table(rank).back();
}

std::vector<MaxDimEntry> max_dim_entries(int max_rank) {
  const auto ss = semisimple_max_dim_table(max_rank);
  std::vector<MaxDimEntry> out;
  for (int l = 0; l <= max_rank; ++l) {
    MaxDimEntry e;
    e.rank = l;
    if (l >= 1) {
      auto s = simple_max_dim(l);
      e.d_simple = s.value;
      e.witnesses_simple = std::move(s.witnesses);
    }
    e.d_semisimple = ss[static_cast<std::size_t>(l)].value;
    e.witness_partition = ss[static_cast<std::size_t>(l)].partition;
    out.push_back(std::move(e));
  }
  return out;
}

int exceptional_floor(const SimpleType& type, int t_dim) {
  if (type.classical()) {
    throw std::domain_error("exceptional_floor needs an exceptional type (got " + type.name() + ")");
  }
  if (t_dim < 1 || t_dim > type.rank()) {
    throw std::domain_error("torus dimension " + std::to_string(t_dim) + " outside 1.." +
                            std::to_string(type.rank()) + " for " + type.name());
  }
  return algebra_dimension(type) - t_dim - semisimple_max_dim(type.rank() - t_dim).value;
}

std::vector<FloorRow> table3() {
  std::vector<FloorRow> rows;
  for (Family f : {Family::E6, Family::E7, Family::E8, Family::F4, Family::G2}) {
    FloorRow row{SimpleType(f), std::vector<std::optional<int>>(kTable3Columns)};
    for (int t = 1; t <= row.type.rank(); ++t) {
      row.cells[static_cast<std::size_t>(t - 1)] = exceptional_floor(row.type, t);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace homspace
