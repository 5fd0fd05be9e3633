#pragma once

// Exhaustive sweeps over simple types, parabolic subsets, torus dimensions
// and semisimple products, producing one VerificationReport per
// (instance, inequality). Every comparison is exact.
//
// Instance ids:
//   projective simple   "A3/I={1,3}"
//   affine simple       "E6/k=3"
//   affine product      "A1xB2/t=(1,0)"
//   projective product  "A1xB2/I={},{1}"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "homspace/report.hpp"
#include "homspace/rootsys.hpp"

namespace homspace {

struct SweepOptions {
  /// Product sweeps enumerate exhaustively when the instance count is at most
  /// this; above it, exactly this many distinct instances are drawn.
  std::size_t sample_limit = 1U << 16;
  std::uint64_t seed = 0x9e3779b97f4a7c15ULL;
};

struct SemisimpleProduct {
  std::vector<SimpleType> factors;

  /// "A1xA1xB2"
  std::string name() const;
  int min_factor_rank() const;

  /// Factors separated by ',' or 'x', e.g. "A1,A1,B2" or "A1xG2".
  /// Throws std::invalid_argument on an empty list or a bad factor.
  static SemisimpleProduct parse(std::string_view text);
};

enum class SweepMode { affine, projective };

/// Lower bound on dim X for an affine G/H with dim t = t_dim inside a simple
/// G: min_homspace_dim for classical types, exceptional_floor otherwise. 0 at t_dim = 0.
int affine_floor(const SimpleType& type, int t_dim);

/// Every proper subset I of P, in increasing bitmask order; rows prop1,
/// thm_proj_linear, thm_proj_sqrt per subset.
std::vector<VerificationReport> verify_projective_simple(const SimpleType& type,
                                                         const SweepOptions& options = {});

/// Every 1 <= k <= rank; rows prop1, thm_affine, cor_half, cor_sqrt_affine.
std::vector<VerificationReport> verify_affine_simple(const SimpleType& type,
                                                     const SweepOptions& options = {});

/// Affine: torus dimensions (t_1..t_m), 0 <= t_i <= rk G_i, not all zero;
/// rows prop1, cor_ss, cor_half. Projective: parabolic subsets (I_1..I_m), not
/// all full; rows prop1, cor_proj_ss.
std::vector<VerificationReport> verify_semisimple_product(const SemisimpleProduct& product,
                                                          SweepMode mode,
                                                          const SweepOptions& options = {});

enum class Verdict { excluded, not_excluded };

std::string_view verdict_name(Verdict verdict);

/// excluded iff rho > dim_X: such a variety cannot be a generalized flag
/// variety. Nothing is certified in the other direction. Throws
/// std::domain_error for non-positive inputs.
Verdict flag_variety_verdict(int dim_X, int rho);

}  // namespace homspace
