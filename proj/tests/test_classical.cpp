#include <doctest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "homspace/classical.hpp"

using namespace homspace;

namespace {

// Ambient vector of the diagonal element a pattern describes, with generic
// values x_i = 3^i, in the same (doubled) coordinates as the root system.
std::vector<std::int64_t> element_for(const EigenPattern& p) {
  std::vector<std::int64_t> h;
  std::int64_t x = 1;
  for (const auto& b : p.blocks) {
    x *= 3;
    for (int i = 0; i < b.n; ++i) h.push_back(x);
    for (int i = 0; i < b.m; ++i) h.push_back(-x);
  }
  for (int i = 0; i < p.zero_multiplicity; ++i) h.push_back(0);
  return h;
}

// dim of the centralizer = rank + number of roots vanishing on h.
int centralizer_by_roots(const RootSystem& rs, const EigenPattern& p) {
  const auto h = element_for(p);
  REQUIRE(h.size() == rs.ambient_dimension());
  int vanishing = 0;
  for (const auto& r : rs.roots()) {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < h.size(); ++i) s += r.coords[i] * h[i];
    vanishing += s == 0 ? 1 : 0;
  }
  return rs.rank() + vanishing;
}

// Every pattern with exactly k blocks (k + 1 for type A), including every
// (n_i, m_i) split for B/C/D. Blocks are unordered, so sizes are generated
// as partitions.
void for_each_pattern(Family f, int l, int k, const std::function<void(const EigenPattern&)>& visit) {
  std::vector<int> sizes;
  std::function<void(int, int, int)> parts = [&](int total, int count, int cap) {
    if (count == 0) {
      if (total != 0) return;
      if (f == Family::A) {
        EigenPattern p{f, l, {}, 0};
        for (int s : sizes) p.blocks.push_back({s, 0});
        visit(p);
        return;
      }
      std::function<void(std::size_t, EigenPattern&)> split = [&](std::size_t i,
                                                                  EigenPattern& p) {
        if (i == sizes.size()) {
          visit(p);
          return;
        }
        for (int n = sizes[i]; n >= 0; --n) {
          p.blocks.push_back({n, sizes[i] - n});
          split(i + 1, p);
          p.blocks.pop_back();
        }
      };
      EigenPattern p{f, l, {}, l - std::accumulate(sizes.begin(), sizes.end(), 0)};
      split(0, p);
      return;
    }
    for (int s = std::min(cap, total); s >= 1; --s) {
      sizes.push_back(s);
      parts(total - s, count - 1, s);
      sizes.pop_back();
    }
  };
  if (f == Family::A) {
    parts(l + 1, k + 1, l + 1);
  } else {
    for (int n0 = 0; n0 <= l - k; ++n0) parts(l - n0, k, l - n0);
  }
}

constexpr Family kClassical[] = {Family::A, Family::B, Family::C, Family::D};

}  // namespace

TEST_CASE("centralizer examples") {
  // sl2 with a regular diagonal element: the torus.
  CHECK(centralizer_dim({Family::A, 1, {{1, 0}, {1, 0}}, 0}) == 1);
  // s(gl2 + gl1) inside sl3.
  CHECK(centralizer_dim({Family::A, 2, {{2, 0}, {1, 0}}, 0}) == 4);
  // gl1 + so(4) inside so(6).
  CHECK(centralizer_dim({Family::D, 3, {{1, 0}}, 2}) == 7);
  // gl1 + sp(2) inside sp(4).
  CHECK(centralizer_dim({Family::C, 2, {{1, 0}}, 1}) == 4);
  // gl2 inside so(5) from (n, m) = (1, 1).
  CHECK(centralizer_dim({Family::B, 2, {{1, 1}}, 0}) == 4);

  CHECK(EigenPattern{Family::A, 3, {{2, 0}, {1, 0}, {1, 0}}, 0}.torus_bound() == 2);
  CHECK(EigenPattern{Family::C, 3, {{2, 0}, {1, 0}}, 0}.torus_bound() == 2);
}

TEST_CASE("invalid patterns") {
  CHECK_THROWS_AS(centralizer_dim({Family::A, 2, {{2, 0}}, 0}), std::domain_error);
  CHECK_THROWS_AS(centralizer_dim({Family::A, 2, {{2, 0}, {1, 0}}, 1}), std::domain_error);
  CHECK_THROWS_AS(centralizer_dim({Family::A, 2, {{1, 1}, {1, 0}}, 0}), std::domain_error);
  CHECK_THROWS_AS(centralizer_dim({Family::B, 3, {{0, 0}, {3, 0}}, 0}), std::domain_error);
  CHECK_THROWS_AS(centralizer_dim({Family::D, 3, {{1, 0}}, 1}), std::domain_error);
  CHECK_THROWS_AS(centralizer_dim({Family::D, 3, {{-1, 2}, {2, 0}}, 0}), std::domain_error);
  CHECK_THROWS_AS(centralizer_dim({Family::E6, 6, {{6, 0}}, 0}), std::domain_error);
}

TEST_CASE("pattern dimensions agree with root counting") {
  for (Family f : kClassical) {
    for (int l = min_rank(f); l <= 6; ++l) {
      const auto rs = build_root_system(SimpleType(f, l));
      for (int k = 1; k <= l; ++k) {
        int best = -1;
        int seen = 0;
        for_each_pattern(f, l, k, [&](const EigenPattern& p) {
          CAPTURE(SimpleType(f, l).name());
          CAPTURE(k);
          CHECK(p.torus_bound() == k);
          const int by_roots = centralizer_by_roots(rs, p);
          CHECK(centralizer_dim(p) == by_roots);
          best = std::max(best, by_roots);
          ++seen;
        });
        CHECK(seen > 0);
        CHECK(max_centralizer_dim(f, l, k).value == best);
      }
    }
  }
}

TEST_CASE("swapping n_i and m_i leaves the centralizer unchanged") {
  for (Family f : {Family::B, Family::C, Family::D}) {
    for (int l = min_rank(f); l <= 7; ++l) {
      for (int k = 1; k <= l; ++k) {
        for_each_pattern(f, l, k, [&](const EigenPattern& p) {
          EigenPattern swapped = p;
          for (auto& b : swapped.blocks) std::swap(b.n, b.m);
          CHECK(centralizer_dim(swapped) == centralizer_dim(p));
        });
      }
    }
  }
}

TEST_CASE("brute force matches the closed forms up to rank 30") {
  for (Family f : kClassical) {
    for (int l = min_rank(f); l <= 30; ++l) {
      const int dim_g = algebra_dimension(SimpleType(f, l));
      for (int k = 1; k <= l; ++k) {
        CAPTURE(SimpleType(f, l).name());
        CAPTURE(k);
        const auto best = max_centralizer_dim(f, l, k);
        CHECK(best.value == closed_form_max_centralizer_dim(f, l, k));
        CHECK(best.witness.torus_bound() == k);
        CHECK(centralizer_dim(best.witness) == best.value);
        const int min_dim = min_homspace_dim(f, l, k);
        CHECK(min_dim == dim_g - best.value);
        CHECK(min_dim == closed_form_min_homspace_dim(f, l, k));
        CHECK(k * (l + 1) <= min_dim);
        CHECK(k * k < min_dim);
      }
    }
  }
}

TEST_CASE("maximising patterns") {
  // A: k singletons and one big block.
  const auto a = max_centralizer_dim(Family::A, 5, 2).witness;
  CHECK(a.blocks == std::vector<BlockMultiplicity>{{4, 0}, {1, 0}, {1, 0}});

  // D far from k: all singletons and a large zero block.
  const auto d = max_centralizer_dim(Family::D, 8, 2);
  CHECK(d.witness.zero_multiplicity == 6);
  CHECK(d.value == 2 + 2 * 36 - 6);

  // D close to k: no zero block.
  const auto d2 = max_centralizer_dim(Family::D, 6, 4);
  CHECK(d2.witness.zero_multiplicity == 0);
  CHECK(d2.value == 3 + 9);

  // C at l = k: every block is a singleton.
  const auto c = max_centralizer_dim(Family::C, 5, 5).witness;
  CHECK(c.zero_multiplicity == 0);
  CHECK(std::ranges::all_of(c.blocks, [](const auto& b) { return b.total() == 1; }));

  // k = l in type A is the torus; k = 1 in type B keeps so(2l - 1).
  CHECK(max_centralizer_dim(Family::A, 6, 6).value == 6);
  CHECK(max_centralizer_dim(Family::B, 4, 1).value == 1 + 2 * 9 + 3);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(max_centralizer_dim(Family::E7, 7, 1), std::invalid_argument);
  CHECK_THROWS_AS(max_centralizer_dim(Family::D, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(max_centralizer_dim(Family::A, 3, 0), std::domain_error);
  CHECK_THROWS_AS(max_centralizer_dim(Family::A, 3, 4), std::domain_error);
  CHECK_THROWS_AS(closed_form_min_homspace_dim(Family::G2, 2, 1), std::invalid_argument);
}

TEST_CASE("affine classical rows") {
  const auto rows = verify_affine_classical(Family::A, 8);
  CHECK(rows.size() == 36);
  CHECK(rows.front().instance_id == "A1/k=1");
  CHECK(rows.back().instance_id == "A8/k=8");
  for (const auto& r : rows) {
    CHECK(r.inequality == Inequality::thm_affine);
    CHECK(r.passed);
  }
  // SL2/T: dim 2, bound 1 = 2/2.
  CHECK(rows.front().dim_X == 2);
  CHECK(rows.front().slack == Rational(0));

  CHECK(verify_affine_classical(Family::D, 5).size() == 3 + 4 + 5);
  CHECK_THROWS_AS(verify_affine_classical(Family::D, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify_affine_classical(Family::F4, 4), std::invalid_argument);
}
