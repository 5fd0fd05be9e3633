#include "homspace/classical.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>

namespace homspace {

namespace {

void require_classical(Family family) {
  if (!is_classical(family)) {
    throw std::invalid_argument(std::string(family_name(family)) + " is not a classical family");
  }
}

void require_k(int rank, int k) {
  if (k < 1 || k > rank) {
    throw std::domain_error("k = " + std::to_string(k) + " outside 1.." + std::to_string(rank));
  }
}

// Partitions of total into exactly parts positive summands, each sorted
// descending and no larger than max_part, in lexicographically decreasing order.
void for_each_partition(int total, int parts, int max_part, std::vector<int>& prefix,
                        const std::function<void(const std::vector<int>&)>& visit) {
  if (parts == 0) {
    if (total == 0) visit(prefix);
    return;
  }
  // The remaining parts - 1 summands need at least 1 each.
  const int hi = std::min(max_part, total - (parts - 1));
  const int lo = (total + parts - 1) / parts;
  for (int first = hi; first >= lo; --first) {
    prefix.push_back(first);
    for_each_partition(total - first, parts - 1, first, prefix, visit);
    prefix.pop_back();
  }
}

}  // namespace

int EigenPattern::torus_bound() const {
  const int blocks_count = static_cast<int>(blocks.size());
  return family == Family::A ? blocks_count - 1 : blocks_count;
}

void validate(const EigenPattern& p) {
  if (!is_classical(p.family)) {
    throw std::domain_error("eigen patterns exist only for classical families");
  }
  if (p.rank < min_rank(p.family)) {
    throw std::domain_error(std::string(family_name(p.family)) + " requires rank >= " +
                            std::to_string(min_rank(p.family)));
  }
  int sum = 0;
  for (const auto& b : p.blocks) {
    if (b.n < 0 || b.m < 0 || b.total() < 1) {
      throw std::domain_error("every block needs n_i, m_i >= 0 and n_i + m_i >= 1");
    }
    sum += b.total();
  }
  if (p.zero_multiplicity < 0) throw std::domain_error("N_0 must be nonnegative");
  if (p.family == Family::A) {
    if (p.zero_multiplicity != 0) throw std::domain_error("type A patterns carry no N_0");
    if (std::ranges::any_of(p.blocks, [](const auto& b) { return b.m != 0; })) {
      throw std::domain_error("type A blocks carry a single multiplicity");
    }
    if (sum != p.rank + 1) {
      throw std::domain_error("type A block sizes must sum to l + 1 = " +
                              std::to_string(p.rank + 1) + " (got " + std::to_string(sum) + ")");
    }
  } else if (sum + p.zero_multiplicity != p.rank) {
    throw std::domain_error("sum of N_i plus N_0 must equal l = " + std::to_string(p.rank) +
                            " (got " + std::to_string(sum + p.zero_multiplicity) + ")");
  }
}

int centralizer_dim(const EigenPattern& p) {
  validate(p);
  int squares = 0;
  for (const auto& b : p.blocks) squares += b.total() * b.total();
  const int n0 = p.zero_multiplicity;
  switch (p.family) {
    case Family::A: return squares - 1;
    case Family::D: return squares + 2 * n0 * n0 - n0;
    case Family::B:
    case Family::C: return squares + 2 * n0 * n0 + n0;
    default: break;
  }
  throw std::domain_error("eigen patterns exist only for classical families");
}

CentralizerMax max_centralizer_dim(Family family, int rank, int k) {
  require_classical(family);
  const SimpleType type(family, rank);
  require_k(rank, k);

  CentralizerMax best;
  best.value = -1;
  std::vector<int> prefix;
  const auto consider = [&](const std::vector<int>& sizes, int n0) {
    EigenPattern p{family, rank, {}, n0};
    p.blocks.reserve(sizes.size());
    for (int s : sizes) p.blocks.push_back({s, 0});
    const int value = centralizer_dim(p);
    if (value > best.value) {
      best.value = value;
      best.witness = std::move(p);
    }
  };

  if (family == Family::A) {
    for_each_partition(rank + 1, k + 1, rank + 1, prefix,
                       [&](const std::vector<int>& sizes) { consider(sizes, 0); });
  } else {
    for (int n0 = 0; n0 <= rank - k; ++n0) {
      for_each_partition(rank - n0, k, rank - n0, prefix,
                         [&](const std::vector<int>& sizes) { consider(sizes, n0); });
    }
  }
  return best;
}

int min_homspace_dim(Family family, int rank, int k) {
  const auto best = max_centralizer_dim(family, rank, k);
  return algebra_dimension(SimpleType(family, rank)) - best.value;
}

int closed_form_max_centralizer_dim(Family family, int rank, int k) {
  require_classical(family);
  const SimpleType type(family, rank);
  require_k(rank, k);
  const int l = rank;
  const int m = l - k;
  switch (family) {
    case Family::A: return k - 1 + (l + 1 - k) * (l + 1 - k);
    case Family::D:
      if (m >= 3) return k + 2 * m * m - m;
      return k - 1 + (m + 1) * (m + 1);
    case Family::B:
    case Family::C:
      if (m > 0) return 2 * m * m + l;
      return k - 1 + (m + 1) * (m + 1);
    default: break;
  }
  return 0;
}

int closed_form_min_homspace_dim(Family family, int rank, int k) {
  require_classical(family);
  const SimpleType type(family, rank);
  require_k(rank, k);
  const int l = rank;
  switch (family) {
    case Family::A: return k * (2 * l + 1 - k);
    case Family::D:
      if (l - k >= 3) return 2 * k * (2 * l - k - 1);
      return l * (l - 3) + k * (2 * l + 1 - k);
    case Family::B:
    case Family::C: return 2 * k * (2 * l - k);
    default: break;
  }
  return 0;
}

std::vector<VerificationReport> verify_affine_classical(Family family, int max_rank) {
  require_classical(family);
  if (max_rank < min_rank(family)) {
    throw std::invalid_argument(std::string(family_name(family)) + " requires rank >= " +
                                std::to_string(min_rank(family)) + " (got max rank " +
                                std::to_string(max_rank) + ")");
  }
  std::vector<VerificationReport> out;
  for (int l = min_rank(family); l <= max_rank; ++l) {
    const SimpleType type(family, l);
    for (int k = 1; k <= l; ++k) {
      const int dim = min_homspace_dim(family, l, k);
      out.push_back(make_report(type.name() + "/k=" + std::to_string(k), dim, k,
                                Inequality::thm_affine, Rational(k), Rational(dim, l + 1)));
    }
  }
  return out;
}

}  // namespace homspace
