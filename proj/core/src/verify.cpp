#include "homspace/verify.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>

#include "homspace/classical.hpp"
#include "homspace/maxdim.hpp"
#include "homspace/parabolic.hpp"

namespace homspace {

std::string SemisimpleProduct::name() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += 'x';
    out += f.name();
  }
  return out;
}

int SemisimpleProduct::min_factor_rank() const {
  if (factors.empty()) throw std::invalid_argument("semisimple product needs at least one factor");
  int best = factors.front().rank();
  for (const auto& f : factors) best = std::min(best, f.rank());
  return best;
}

SemisimpleProduct SemisimpleProduct::parse(std::string_view text) {
  SemisimpleProduct out;
  std::string token;
  const auto flush = [&] {
    if (token.empty()) {
      throw std::invalid_argument("empty factor in product '" + std::string(text) + "'");
    }
    out.factors.push_back(SimpleType::parse(token));
    token.clear();
  };
  for (char c : text) {
    if (c == ',' || c == 'x' || c == '*') {
      flush();
    } else if (c != ' ') {
      token += c;
    }
  }
  flush();
  return out;
}

int affine_floor(const SimpleType& type, int t_dim) {
  if (t_dim == 0) return 0;
  if (type.classical()) return min_homspace_dim(type.family(), type.rank(), t_dim);
  return exceptional_floor(type, t_dim);
}

std::vector<VerificationReport> verify_projective_simple(const SimpleType& type,
                                                         const SweepOptions&) {
  const RootSystem rs = build_root_system(type);
  const int l = type.rank();
  const SimpleSubset full = (SimpleSubset{1} << l) - 1;
  std::vector<VerificationReport> out;
  out.reserve(static_cast<std::size_t>(full) * 3);
  for (SimpleSubset subset = 0; subset < full; ++subset) {
    const auto inv = flag_invariants(ParabolicSpec(rs, subset));
    const std::string id = type.name() + "/I=" + format_subset(subset);
    const int k = inv.picard_rank;
    const int dim = inv.dim_X;
    out.push_back(make_report(id, dim, k, Inequality::prop1, Rational(k), Rational(dim)));
    out.push_back(make_report(id, dim, k, Inequality::thm_proj_linear, Rational(k),
                              Rational(2 * dim, l + 1)));
    out.push_back(make_report(id, dim, k, Inequality::thm_proj_sqrt, Rational(k * k),
                              Rational(2 * dim)));
  }
  return out;
}

std::vector<VerificationReport> verify_affine_simple(const SimpleType& type,
                                                     const SweepOptions&) {
  const int l = type.rank();
  std::vector<VerificationReport> out;
  for (int k = 1; k <= l; ++k) {
    const int dim = affine_floor(type, k);
    const std::string id = type.name() + "/k=" + std::to_string(k);
    out.push_back(make_report(id, dim, k, Inequality::prop1, Rational(k), Rational(dim)));
    out.push_back(make_report(id, dim, k, Inequality::thm_affine, Rational(k),
                              Rational(dim, l + 1)));
    out.push_back(make_report(id, dim, k, Inequality::cor_half, Rational(k), Rational(dim, 2)));
    out.push_back(make_report(id, dim, k, Inequality::cor_sqrt_affine, Rational(k * k),
                              Rational(dim)));
  }
  return out;
}

namespace {

std::uint64_t checked_product(const std::vector<std::uint64_t>& radices) {
  std::uint64_t total = 1;
  for (auto r : radices) {
    if (total > std::numeric_limits<std::uint64_t>::max() / r) {
      throw std::invalid_argument("semisimple product has too many instances to index");
    }
    total *= r;
  }
  return total;
}

// Instance indices in [0, total) except `skip`: all of them up to the limit,
// otherwise a deterministic sample of `limit` distinct ones. Ascending order.
std::vector<std::uint64_t> instance_indices(std::uint64_t total, std::uint64_t skip,
                                            const SweepOptions& options) {
  std::vector<std::uint64_t> out;
  if (total - 1 <= options.sample_limit) {
    for (std::uint64_t i = 0; i < total; ++i) {
      if (i != skip) out.push_back(i);
    }
    return out;
  }
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::uint64_t> pick(0, total - 1);
  std::set<std::uint64_t> chosen;
  while (chosen.size() < options.sample_limit) {
    const auto i = pick(rng);
    if (i != skip) chosen.insert(i);
  }
  return {chosen.begin(), chosen.end()};
}

std::vector<std::uint64_t> decode(std::uint64_t index, const std::vector<std::uint64_t>& radices) {
  std::vector<std::uint64_t> digits(radices.size());
  for (std::size_t i = radices.size(); i-- > 0;) {
    digits[i] = index % radices[i];
    index /= radices[i];
  }
  return digits;
}

}  // namespace

std::vector<VerificationReport> verify_semisimple_product(const SemisimpleProduct& product,
                                                          SweepMode mode,
                                                          const SweepOptions& options) {
  const int min_rk = product.min_factor_rank();
  const std::string prefix = product.name();
  std::vector<VerificationReport> out;

  if (mode == SweepMode::affine) {
    std::vector<std::uint64_t> radices;
    std::vector<std::vector<int>> floors;
    for (const auto& f : product.factors) {
      radices.push_back(static_cast<std::uint64_t>(f.rank()) + 1);
      std::vector<int> per_t;
      for (int t = 0; t <= f.rank(); ++t) per_t.push_back(affine_floor(f, t));
      floors.push_back(std::move(per_t));
    }
    const auto total = checked_product(radices);
    for (auto index : instance_indices(total, 0, options)) {
      const auto digits = decode(index, radices);
      int t_sum = 0;
      int dim = 0;
      std::string id = prefix + "/t=(";
      for (std::size_t i = 0; i < digits.size(); ++i) {
        const int t = static_cast<int>(digits[i]);
        t_sum += t;
        dim += floors[i][static_cast<std::size_t>(t)];
        if (i) id += ',';
        id += std::to_string(t);
      }
      id += ')';
      out.push_back(make_report(id, dim, t_sum, Inequality::prop1, Rational(t_sum), Rational(dim)));
      out.push_back(make_report(id, dim, t_sum, Inequality::cor_ss, Rational(t_sum),
                                Rational(dim, 1 + min_rk)));
      out.push_back(make_report(id, dim, t_sum, Inequality::cor_half, Rational(t_sum),
                                Rational(dim, 2)));
    }
    return out;
  }

  std::vector<RootSystem> systems;
  std::vector<std::uint64_t> radices;
  int total_rank = 0;
  for (const auto& f : product.factors) {
    total_rank += f.rank();
    if (total_rank >= 64) throw std::invalid_argument("semisimple product rank too large to index");
    systems.push_back(build_root_system(f));
    radices.push_back(std::uint64_t{1} << f.rank());
  }
  std::vector<std::vector<FlagInvariants>> invariants;
  for (const auto& rs : systems) {
    std::vector<FlagInvariants> per_subset;
    for (SimpleSubset s = 0; s < (SimpleSubset{1} << rs.rank()); ++s) {
      per_subset.push_back(flag_invariants(ParabolicSpec(rs, s)));
    }
    invariants.push_back(std::move(per_subset));
  }
  const auto total = checked_product(radices);
  // Each digit is a subset bitmask, so the all-full instance is total - 1.
  for (auto index : instance_indices(total, total - 1, options)) {
    const auto digits = decode(index, radices);
    int k_sum = 0;
    int dim = 0;
    std::string id = prefix + "/I=";
    for (std::size_t i = 0; i < digits.size(); ++i) {
      const auto& inv = invariants[i][digits[i]];
      k_sum += inv.picard_rank;
      dim += inv.dim_X;
      if (i) id += ',';
      id += format_subset(static_cast<SimpleSubset>(digits[i]));
    }
    out.push_back(make_report(id, dim, k_sum, Inequality::prop1, Rational(k_sum), Rational(dim)));
    out.push_back(make_report(id, dim, k_sum, Inequality::cor_proj_ss, Rational(k_sum),
                              Rational(2 * dim, 1 + min_rk)));
  }
  return out;
}

std::string_view verdict_name(Verdict verdict) {
  return verdict == Verdict::excluded ? "excluded" : "not-excluded";
}

Verdict flag_variety_verdict(int dim_X, int rho) {
  if (dim_X < 1 || rho < 1) {
    throw std::domain_error("dimension and Picard number must be positive (got dim=" +
                            std::to_string(dim_X) + ", rho=" + std::to_string(rho) + ")");
  }
  return rho > dim_X ? Verdict::excluded : Verdict::not_excluded;
}

}  // namespace homspace
