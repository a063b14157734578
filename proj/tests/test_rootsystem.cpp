#include <doctest.h>

#include <cmath>
#include <set>

#include "weylnorm/errors.hpp"
#include "weylnorm/rootsystem.hpp"

using namespace weylnorm;

namespace {

using Vec = std::vector<double>;

// Oracle: Cartan matrix from an explicit Euclidean realization.
IntMatrix cartan_from(const std::vector<Vec>& simple) {
  auto dot = [](const Vec& a, const Vec& b) {
    double s = 0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
  };
  IntMatrix a(simple.size(), IntVector(simple.size()));
  for (std::size_t i = 0; i < simple.size(); ++i)
    for (std::size_t j = 0; j < simple.size(); ++j)
      a[i][j] = static_cast<int>(std::lround(2 * dot(simple[i], simple[j]) / dot(simple[i], simple[i])));
  return a;
}

Vec unit(std::size_t n, std::size_t i, double s = 1) {
  Vec v(n, 0);
  v[i] = s;
  return v;
}

Vec diff(Vec a, const Vec& b) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] -= b[k];
  return a;
}

std::vector<Vec> realization(char type, std::size_t n) {
  std::vector<Vec> s;
  const std::size_t d = type == 'A' ? n + 1 : n;
  for (std::size_t i = 0; i + 1 < n; ++i) s.push_back(diff(unit(d, i), unit(d, i + 1)));
  switch (type) {
    case 'A': s.push_back(diff(unit(d, n - 1), unit(d, n))); break;
    case 'B': s.push_back(unit(d, n - 1)); break;
    case 'C': s.push_back(unit(d, n - 1, 2)); break;
    case 'D': {
      Vec v = unit(d, n - 2);
      v[n - 1] = 1;
      s.push_back(v);
      break;
    }
    default: break;
  }
  return s;
}

std::vector<std::size_t> compose(const std::vector<std::size_t>& p, const std::vector<std::size_t>& q) {
  std::vector<std::size_t> out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[k] = p[q[k]];
  return out;
}

}  // namespace

TEST_CASE("build_cartan examples") {
  CHECK(build_cartan(CartanType::A, 1).a == IntMatrix{{2}});
  CHECK(build_cartan(CartanType::A, 2).a == cartan_from(realization('A', 2)));
  CHECK(build_cartan(CartanType::G, 2).a == IntMatrix{{2, -1}, {-3, 2}});
  // G2 with alpha_1 long: alpha_2 = (1, 0), alpha_1 = (-3/2, sqrt(3)/2).
  CHECK(build_cartan(CartanType::G, 2).a == cartan_from({{-1.5, std::sqrt(3.0) / 2}, {1, 0}}));
}

TEST_CASE("classical Cartan matrices match Euclidean realizations") {
  for (std::size_t n = 1; n <= 6; ++n) CHECK(build_cartan(CartanType::A, static_cast<int>(n)).a == cartan_from(realization('A', n)));
  for (std::size_t n = 2; n <= 6; ++n) {
    CHECK(build_cartan(CartanType::B, static_cast<int>(n)).a == cartan_from(realization('B', n)));
    CHECK(build_cartan(CartanType::C, static_cast<int>(n)).a == cartan_from(realization('C', n)));
  }
  for (std::size_t n = 4; n <= 7; ++n) CHECK(build_cartan(CartanType::D, static_cast<int>(n)).a == cartan_from(realization('D', n)));
  const std::vector<Vec> f4{{0, 1, -1, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}, {0.5, -0.5, -0.5, -0.5}};
  CHECK(build_cartan(CartanType::F, 4).a == cartan_from(f4));
}

TEST_CASE("Cartan axioms hold for every valid type") {
  const std::vector<std::pair<CartanType, int>> cases{{CartanType::A, 5}, {CartanType::B, 4}, {CartanType::C, 5},
                                                      {CartanType::D, 5}, {CartanType::E, 6}, {CartanType::E, 7},
                                                      {CartanType::E, 8}, {CartanType::F, 4}, {CartanType::G, 2}};
  for (auto [t, r] : cases) CHECK(satisfies_cartan_axioms(build_cartan(t, r).a));
}

TEST_CASE("invalid types and ranks") {
  CHECK_THROWS_AS(parse_cartan_type("Z"), ConfigError);
  CHECK_THROWS_AS(build_cartan(CartanType::A, 0), ConfigError);
  CHECK_THROWS_AS(build_cartan(CartanType::B, 1), ConfigError);
  CHECK_THROWS_AS(build_cartan(CartanType::D, 3), ConfigError);
  CHECK_THROWS_AS(build_cartan(CartanType::E, 9), ConfigError);
  CHECK_THROWS_AS(build_cartan(CartanType::F, 3), ConfigError);
  CHECK_THROWS_AS(build_cartan(CartanType::G, 3), ConfigError);
}

TEST_CASE("generate_roots examples") {
  const RootSystem a1 = generate_roots(build_cartan(CartanType::A, 1));
  CHECK(a1.roots() == std::vector<IntVector>{{1}, {-1}});
  const RootSystem a2 = generate_roots(build_cartan(CartanType::A, 2));
  const std::set<IntVector> expected{{1, 0}, {0, 1}, {1, 1}, {-1, 0}, {0, -1}, {-1, -1}};
  CHECK(std::set<IntVector>(a2.roots().begin(), a2.roots().end()) == expected);
  CHECK(generate_roots(build_cartan(CartanType::G, 2)).roots().size() == 12);
}

TEST_CASE("root counts") {
  auto count = [](CartanType t, int r) { return generate_roots(build_cartan(t, r)).roots().size(); };
  for (int n = 1; n <= 6; ++n) CHECK(count(CartanType::A, n) == static_cast<std::size_t>(n * (n + 1)));
  for (int n = 2; n <= 5; ++n) {
    CHECK(count(CartanType::B, n) == static_cast<std::size_t>(2 * n * n));
    CHECK(count(CartanType::C, n) == static_cast<std::size_t>(2 * n * n));
  }
  for (int n = 4; n <= 6; ++n) CHECK(count(CartanType::D, n) == static_cast<std::size_t>(2 * n * (n - 1)));
  CHECK(count(CartanType::E, 6) == 72);
  CHECK(count(CartanType::E, 7) == 126);
  CHECK(count(CartanType::E, 8) == 240);
  CHECK(count(CartanType::F, 4) == 48);
}

TEST_CASE("closure, involutions, braid relations and pairing invariance") {
  const std::vector<std::pair<CartanType, int>> cases{{CartanType::A, 3}, {CartanType::B, 3}, {CartanType::C, 3},
                                                      {CartanType::D, 4}, {CartanType::F, 4}, {CartanType::G, 2}};
  for (auto [t, r] : cases) {
    const RootSystem rs = generate_roots(build_cartan(t, r));
    const auto& roots = rs.roots();
    const std::size_t np = rs.num_positive();
    for (std::size_t k = 0; k < np; ++k) {
      IntVector neg = roots[k];
      for (auto& x : neg) x = -x;
      CHECK(roots[np + k] == neg);
      CHECK(height(roots[k]) > 0);
    }
    std::vector<std::size_t> id(roots.size());
    for (std::size_t k = 0; k < id.size(); ++k) id[k] = k;
    for (int i = 0; i < r; ++i) {
      for (const auto& a : roots) CHECK(rs.is_root(rs.reflect(i, a)));
      const auto& p = rs.reflection_permutation(i);
      CHECK(compose(p, p) == id);
      for (int j = 0; j < r; ++j) {
        CHECK(rs.pairing(roots[rs.simple_index(j)], i) == rs.cartan()(i, j));
        if (i == j) continue;
        const int m = coxeter_m(rs.cartan(), i, j);
        const auto& q = rs.reflection_permutation(j);
        std::vector<std::size_t> x = p, y = q;
        for (int k = 1; k < m; ++k) {
          x = compose(x, k % 2 ? q : p);
          y = compose(y, k % 2 ? p : q);
        }
        CHECK(x == y);
      }
      // <s_i(a), s_i(b)^vee> = <a, b^vee> through the invariant form.
      for (const auto& a : roots)
        for (const auto& b : roots)
          CHECK(rs.inner(rs.reflect(i, a), rs.reflect(i, b)) == rs.inner(a, b));
    }
  }
}

TEST_CASE("coxeter_m") {
  CHECK(coxeter_m(build_cartan(CartanType::A, 2), 0, 1) == 3);
  CHECK(coxeter_m(build_cartan(CartanType::A, 3), 0, 2) == 2);
  CHECK(coxeter_m(build_cartan(CartanType::B, 2), 0, 1) == 4);
  CHECK(coxeter_m(build_cartan(CartanType::G, 2), 0, 1) == 6);
  CHECK_THROWS(coxeter_m(build_cartan(CartanType::A, 2), 1, 1));
}

TEST_CASE("weyl_reflect_cartan") {
  const CartanMatrix b2 = build_cartan(CartanType::B, 2);
  const CartanMatrix g2 = build_cartan(CartanType::G, 2);
  CHECK(weyl_reflect_cartan(b2, 0, {1, 0}) == IntVector{-1, 0});
  // a_ji = -2 for (i, j) = (1, 2) in B2: s_1(h_2) = h_2 + 2 h_1.
  CHECK(b2(1, 0) == -2);
  CHECK(weyl_reflect_cartan(b2, 0, {0, 1}) == IntVector{2, 1});
  CHECK(weyl_reflect_cartan(b2, 1, {1, 0}) == IntVector{1, 1});
  CHECK(g2(1, 0) == -3);
  CHECK(weyl_reflect_cartan(g2, 0, {0, 1}) == IntVector{3, 1});
  CHECK(weyl_reflect_cartan(g2, 1, {1, 0}) == IntVector{1, 1});
}

TEST_CASE("weyl_group_order agrees with permutation BFS and known orders") {
  const std::vector<std::tuple<CartanType, int, std::uint64_t>> cases{
      {CartanType::A, 1, 2},  {CartanType::A, 2, 6},   {CartanType::A, 3, 24},  {CartanType::A, 4, 120},
      {CartanType::B, 2, 8},  {CartanType::B, 3, 48},  {CartanType::C, 3, 48},  {CartanType::D, 4, 192},
      {CartanType::G, 2, 12}, {CartanType::F, 4, 1152}};
  for (auto [t, r, order] : cases) {
    const RootSystem rs = generate_roots(build_cartan(t, r));
    CHECK(weyl_group_order(rs) == order);
    CHECK(weyl_group_permutations(rs, 1 << 20).size() == order);
  }
  CHECK(weyl_group_order(generate_roots(build_cartan(CartanType::E, 6))) == 51840);
  CHECK(weyl_group_order(generate_roots(build_cartan(CartanType::E, 7))) == 2903040);
  CHECK(weyl_group_order(generate_roots(build_cartan(CartanType::E, 8))) == 696729600);
}

TEST_CASE("summary json") {
  const auto j = roots_summary_json(generate_roots(build_cartan(CartanType::G, 2)));
  CHECK(j["type"] == "G");
  CHECK(j["rank"] == 2);
  CHECK(j["num_roots"] == 12);
  CHECK(j["weyl_order"] == 12);
  CHECK(j["cartan"] == nlohmann::json::parse("[[2,-1],[-3,2]]"));
}
