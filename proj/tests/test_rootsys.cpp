#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "homspace/rootsys.hpp"

using namespace homspace;

namespace {

// Cartan matrices written out from the Dynkin diagrams (Bourbaki numbering,
// a_ij = <a_i, a_j^vee>), independent of the coordinate models.
std::vector<std::vector<int>> bourbaki_cartan(const SimpleType& t) {
  const auto l = static_cast<std::size_t>(t.rank());
  std::vector<std::vector<int>> a(l, std::vector<int>(l, 0));
  for (std::size_t i = 0; i < l; ++i) a[i][i] = 2;
  const auto link = [&](std::size_t i, std::size_t j, int aij = -1, int aji = -1) {
    a[i - 1][j - 1] = aij;
    a[j - 1][i - 1] = aji;
  };
  switch (t.family()) {
    case Family::A:
      for (std::size_t i = 1; i < l; ++i) link(i, i + 1);
      break;
    case Family::B:
      for (std::size_t i = 1; i + 1 < l; ++i) link(i, i + 1);
      link(l - 1, l, -2, -1);
      break;
    case Family::C:
      for (std::size_t i = 1; i + 1 < l; ++i) link(i, i + 1);
      link(l - 1, l, -1, -2);
      break;
    case Family::D:
      for (std::size_t i = 1; i + 1 < l; ++i) link(i, i + 1);
      link(l - 2, l);
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      link(1, 3);
      link(2, 4);
      for (std::size_t i = 3; i < l; ++i) link(i, i + 1);
      break;
    case Family::F4:
      link(1, 2);
      link(2, 3, -2, -1);
      link(3, 4);
      break;
    case Family::G2:
      link(1, 2, -1, -3);
      break;
  }
  return a;
}

// Positive roots as coefficient vectors, generated from the Cartan matrix by
// root strings: beta + a_i is a root iff q > 0, where p - q = <beta, a_i^vee>
// and p is the length of the string beta - a_i, beta - 2a_i, ...
std::set<std::vector<int>> positive_roots_from_cartan(const std::vector<std::vector<int>>& a) {
  const std::size_t l = a.size();
  std::set<std::vector<int>> roots;
  std::vector<std::vector<int>> layer;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<int> e(l, 0);
    e[i] = 1;
    roots.insert(e);
    layer.push_back(e);
  }
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer) {
      for (std::size_t i = 0; i < l; ++i) {
        int p = 0;
        auto down = beta;
        while (true) {
          down[i] -= 1;
          if (!roots.contains(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < l; ++j) pairing += beta[j] * a[j][i];
        const int q = p - pairing;
        if (q > 0) {
          auto up = beta;
          up[i] += 1;
          if (!roots.contains(up)) next.insert(up);
        }
      }
    }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  return roots;
}

}  // namespace

TEST_CASE("root counts from explicit construction") {
  CHECK(build_root_system(SimpleType(Family::A, 2)).roots().size() == 6);
  CHECK(build_root_system(SimpleType(Family::G2)).roots().size() == 12);
  CHECK(build_root_system(SimpleType(Family::F4)).roots().size() == 48);
  CHECK(build_root_system(SimpleType(Family::E6)).roots().size() == 72);
  CHECK(build_root_system(SimpleType(Family::E7)).roots().size() == 126);
  CHECK(build_root_system(SimpleType(Family::E8)).roots().size() == 240);
}

TEST_CASE("closed-form dimension equals rank + |Phi| up to rank 12") {
  for (const auto& t : all_simple_types(12)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    CHECK(enumerated_dimension(rs) == algebra_dimension(t));
    CHECK(verified_algebra_dimension(t) == algebra_dimension(t));
  }
  CHECK(algebra_dimension(SimpleType(Family::B, 5)) == 55);
  CHECK(algebra_dimension(SimpleType(Family::F4)) == 52);
}

TEST_CASE("A3 and D3 have the same dimension") {
  const int a3 = enumerated_dimension(build_root_system(SimpleType(Family::A, 3)));
  const int d3 = enumerated_dimension(build_root_system(SimpleType(Family::D, 3)));
  CHECK(a3 == 15);
  CHECK(d3 == 15);
}

TEST_CASE("rank constraints") {
  CHECK_THROWS_AS(SimpleType(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType(Family::C, 1), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType(Family::E6, 7), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType(Family::A), std::invalid_argument);
  CHECK_THROWS_WITH_AS(SimpleType(Family::D, 2), "D requires rank >= 3 (got 2)",
                       std::invalid_argument);
}

TEST_CASE("type names parse back") {
  for (const auto& t : all_simple_types(12)) CHECK(SimpleType::parse(t.name()) == t);
  CHECK(SimpleType::parse("E7").rank() == 7);
  CHECK_THROWS_AS(SimpleType::parse("D2"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("E9"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("Q3"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("A"), std::invalid_argument);
  CHECK_THROWS_AS(SimpleType::parse("A-1"), std::invalid_argument);
}

TEST_CASE("Cartan matrices follow Bourbaki numbering") {
  for (const auto& t : all_simple_types(9)) {
    CAPTURE(t.name());
    CHECK(build_root_system(t).cartan_matrix() == bourbaki_cartan(t));
  }
}

TEST_CASE("positive roots agree with root-string generation from the Cartan matrix") {
  for (const auto& t : all_simple_types(9)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    std::set<std::vector<int>> decomposed;
    for (const auto& r : rs.positive()) decomposed.insert(rs.coefficients(r));
    CHECK(decomposed == positive_roots_from_cartan(bourbaki_cartan(t)));
  }
}

TEST_CASE("simple root decomposition") {
  const auto a2 = build_root_system(SimpleType(Family::A, 2));
  // e1 - e3 solved by hand: (e1 - e2) + (e2 - e3).
  const Root highest{{2, 0, -2}};
  CHECK(a2.highest_root() == highest);
  CHECK(simple_root_decomposition(highest, a2) == std::vector<int>{1, 1});

  for (const auto& t : all_simple_types(8)) {
    const auto rs = build_root_system(t);
    for (std::size_t j = 0; j < rs.simple().size(); ++j) {
      std::vector<int> e(rs.simple().size(), 0);
      e[j] = 1;
      CHECK(simple_root_decomposition(rs.simple()[j], rs) == e);
      e[j] = -1;
      CHECK(simple_root_decomposition(-rs.simple()[j], rs) == e);
    }
  }

  CHECK_THROWS_AS(a2.coefficients(Root{{2, -2, 2}}), std::domain_error);
  CHECK_THROWS_AS(a2.coefficients(Root{{0, 0, 0}}), std::domain_error);
}

TEST_CASE("root system invariants up to rank 12") {
  for (const auto& t : all_simple_types(12)) {
    CAPTURE(t.name());
    const auto rs = build_root_system(t);
    CHECK(rs.simple().size() == static_cast<std::size_t>(t.rank()));
    CHECK(rs.positive().size() == rs.negative().size());
    CHECK(rs.positive().size() + rs.negative().size() == rs.roots().size());

    Root total{std::vector<int>(rs.ambient_dimension(), 0)};
    std::set<Root> all(rs.roots().begin(), rs.roots().end());
    CHECK(all.size() == rs.roots().size());
    for (const auto& r : rs.roots()) {
      CHECK_FALSE(r.is_zero());
      CHECK(all.contains(-r));
      CHECK_FALSE(all.contains(2 * r));
      total = total + r;
    }
    CHECK(total.is_zero());

    std::set<Root> positives(rs.positive().begin(), rs.positive().end());
    for (const auto& r : rs.positive()) {
      const auto& c = rs.coefficients(r);
      CHECK(std::ranges::all_of(c, [](int x) { return x >= 0; }));
      Root recomposed{std::vector<int>(rs.ambient_dimension(), 0)};
      for (std::size_t j = 0; j < c.size(); ++j) recomposed = recomposed + c[j] * rs.simple()[j];
      CHECK(recomposed == r);
    }
    for (const auto& r : rs.negative()) {
      CHECK_FALSE(positives.contains(r));
      const auto& c = rs.coefficients(r);
      CHECK(std::ranges::all_of(c, [](int x) { return x <= 0; }));
    }
  }
}

TEST_CASE("construction is deterministic") {
  const auto a = build_root_system(SimpleType(Family::E7));
  const auto b = build_root_system(SimpleType(Family::E7));
  CHECK(a.roots() == b.roots());
  CHECK(a.positive() == b.positive());
  CHECK(a.positive_supports() == b.positive_supports());
}
