#include "homspace/parabolic.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

namespace homspace {

namespace {

SimpleSubset full_mask(int rank) {
  return rank >= 32 ? ~SimpleSubset{0} : (SimpleSubset{1} << rank) - 1;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string format_subset(SimpleSubset subset) {
  std::string out = "{";
  bool first = true;
  for (int j = 0; j < 32; ++j) {
    if (!(subset & (SimpleSubset{1} << j))) continue;
    if (!first) out += ',';
    out += std::to_string(j + 1);
    first = false;
  }
  return out + "}";
}

SimpleSubset parse_subset(std::string_view text, int rank) {
  SimpleSubset out = 0;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view token = trim(text.substr(0, comma));
    int index = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), index);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed parabolic index '" + std::string(token) + "'");
    }
    if (index < 1 || index > rank) {
      throw std::invalid_argument("parabolic index '" + std::string(token) +
                                  "' outside 1.." + std::to_string(rank));
    }
    out |= SimpleSubset{1} << (index - 1);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

ParabolicSpec::ParabolicSpec(const RootSystem& rs, const std::vector<int>& indices)
    : rs_(&rs), subset_(0) {
  for (int i : indices) {
    if (i < 1 || i > rs.rank()) {
      throw std::invalid_argument("simple-root index " + std::to_string(i) + " outside 1.." +
                                  std::to_string(rs.rank()) + " for " + rs.type().name());
    }
    subset_ |= SimpleSubset{1} << (i - 1);
  }
}

ParabolicSpec::ParabolicSpec(const RootSystem& rs, SimpleSubset subset)
    : rs_(&rs), subset_(subset) {
  if (subset & ~full_mask(rs.rank())) {
    throw std::invalid_argument("subset " + format_subset(subset) + " exceeds rank " +
                                std::to_string(rs.rank()) + " of " + rs.type().name());
  }
}

ParabolicSpec ParabolicSpec::whole(const RootSystem& rs) {
  return {rs, full_mask(rs.rank())};
}

std::vector<int> ParabolicSpec::indices() const {
  std::vector<int> out;
  for (int j = 0; j < rs_->rank(); ++j) {
    if (subset_ & (SimpleSubset{1} << j)) out.push_back(j + 1);
  }
  return out;
}

int ParabolicSpec::size() const { return std::popcount(subset_); }

bool ParabolicSpec::is_full() const { return subset_ == full_mask(rs_->rank()); }

ClosureSets closure_sets(const ParabolicSpec& spec) {
  const RootSystem& rs = spec.root_system();
  ClosureSets out;
  const auto& supports = rs.positive_supports();
  for (std::size_t i = 0; i < supports.size(); ++i) {
    if ((supports[i] & ~spec.subset()) == 0) {
      out.positive.push_back(rs.positive()[i]);
      out.negative.push_back(rs.negative()[i]);
    }
  }
  return out;
}

int closure_size(const ParabolicSpec& spec) {
  int count = 0;
  for (SimpleSubset support : spec.root_system().positive_supports()) {
    if ((support & ~spec.subset()) == 0) ++count;
  }
  return count;
}

int parabolic_dimension(const ParabolicSpec& spec) {
  const RootSystem& rs = spec.root_system();
  return rs.rank() + static_cast<int>(rs.positive().size()) + closure_size(spec);
}

int levi_dimension(const ParabolicSpec& spec) {
  return spec.root_system().rank() + 2 * closure_size(spec);
}

FlagInvariants flag_invariants(const ParabolicSpec& spec) {
  const RootSystem& rs = spec.root_system();
  const int closed = closure_size(spec);
  const int positives = static_cast<int>(rs.positive().size());
  FlagInvariants out;
  out.picard_rank = rs.rank() - spec.size();
  out.dim_X = positives - closed;
  out.dim_parabolic = rs.rank() + positives + closed;
  out.dim_levi = rs.rank() + 2 * closed;
  out.dim_unipotent_radical = out.dim_parabolic - out.dim_levi;
  return out;
}

}  // namespace homspace
