#pragma once

// Centralizers of semisimple elements in the classical Lie algebras.
//
// A central element x of a reductive subalgebra h, in general position in the
// centre t, is diagonal with eigenvalue multiplicities described by an
// EigenPattern. h lies in the commutant of x, so
//
//   sl(l+1):         dim h <= sum n_i^2 - 1                       (k + 1 blocks)
//   so(2l):          dim h <= sum N_i^2 + 2 N_0^2 - N_0           N_i = n_i + m_i
//   sp(2l), so(2l+1): dim h <= sum N_i^2 + 2 N_0^2 + N_0
//
// with dim t <= k. Maximising over patterns gives the smallest possible
// dim X = dim g - dim h for a given k. The maximum is found by enumeration;
// the closed forms below are kept as an independent cross-check.

#include <vector>

#include "homspace/report.hpp"
#include "homspace/rootsys.hpp"

namespace homspace {

struct BlockMultiplicity {
  int n = 0;  // multiplicity of +x_i
  int m = 0;  // multiplicity of -x_i (always 0 for type A)

  int total() const { return n + m; }
  friend bool operator==(const BlockMultiplicity&, const BlockMultiplicity&) = default;
};

struct EigenPattern {
  Family family = Family::A;
  int rank = 0;
  /// A: the k+1 block sizes n_1..n_{k+1}. B/C/D: the k pairs (n_i, m_i).
  std::vector<BlockMultiplicity> blocks;
  /// N_0; always 0 for type A.
  int zero_multiplicity = 0;

  /// k: the bound on dim t carried by this pattern.
  int torus_bound() const;

  friend bool operator==(const EigenPattern&, const EigenPattern&) = default;
};

/// Throws std::domain_error if the pattern violates its invariants
/// (classical family, block sums, nonempty blocks).
void validate(const EigenPattern& pattern);

int centralizer_dim(const EigenPattern& pattern);

struct CentralizerMax {
  int value = 0;
  EigenPattern witness;
};

/// Exact maximum of centralizer_dim over all patterns with torus_bound() == k.
/// Patterns are enumerated with N_0 ascending and, within that, the sorted
/// block sizes in lexicographically decreasing order; the first maximiser
/// found is the witness. Requires 1 <= k <= l (std::domain_error otherwise)
/// and a valid classical (family, l) (std::invalid_argument otherwise).
CentralizerMax max_centralizer_dim(Family family, int rank, int k);

/// algebra_dimension - max_centralizer_dim.
int min_homspace_dim(Family family, int rank, int k);

/// Closed forms for the maximum, split as in the case analysis:
///   A:   k - 1 + (l + 1 - k)^2
///   D:   k + 2(l-k)^2 - (l-k)            if l - k >= 3,
///        k - 1 + (l - k + 1)^2           if l - k <= 2
///   B,C: 2(l-k)^2 + l                    if l > k,
///        k - 1 + (l - k + 1)^2  (= l)    if l = k
int closed_form_max_centralizer_dim(Family family, int rank, int k);

///   A:   k(2l + 1 - k)
///   D:   2k(2l - k - 1)                  if l - k >= 3,
///        l(l - 3) + k(2l + 1 - k)        if l - k <= 2
///   B,C: 2k(2l - k)
int closed_form_min_homspace_dim(Family family, int rank, int k);

/// One thm_affine row per (l, k), min_rank(family) <= l <= max_rank,
/// 1 <= k <= l: k <= min_homspace_dim / (l + 1). Ids look like "A4/k=2".
std::vector<VerificationReport> verify_affine_classical(Family family, int max_rank);

}  // namespace homspace
