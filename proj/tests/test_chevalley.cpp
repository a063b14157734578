#include <doctest.h>

#include "weylnorm/chevalley.hpp"
#include "weylnorm/errors.hpp"

using namespace weylnorm;

namespace {

RootSystem roots_of(CartanType t, int r) { return generate_roots(build_cartan(t, r)); }

IntVector plus(const IntVector& a, const IntVector& b) {
  IntVector c = a;
  for (std::size_t k = 0; k < c.size(); ++k) c[k] += b[k];
  return c;
}

// Oracle: p = largest integer with beta - p alpha a root.
int string_p(const RootSystem& rs, const IntVector& a, const IntVector& b) {
  int p = 0;
  IntVector x = b;
  for (;;) {
    for (std::size_t k = 0; k < x.size(); ++k) x[k] -= a[k];
    if (!rs.is_root(x)) return p;
    ++p;
  }
}

const std::vector<std::pair<CartanType, int>> kTypes{{CartanType::A, 1}, {CartanType::A, 2}, {CartanType::A, 3},
                                                     {CartanType::A, 4}, {CartanType::B, 2}, {CartanType::B, 3},
                                                     {CartanType::C, 3}, {CartanType::D, 4}, {CartanType::G, 2},
                                                     {CartanType::F, 4}};

}  // namespace

TEST_CASE("structure_constants examples") {
  const RootSystem a1 = roots_of(CartanType::A, 1);
  CHECK(structure_constants(a1).defined_pairs() == 0);

  const RootSystem a2 = roots_of(CartanType::A, 2);
  const StructureConstants n2 = structure_constants(a2);
  std::size_t pairs = 0;
  for (std::size_t a = 0; a < a2.roots().size(); ++a)
    for (std::size_t b = 0; b < a2.roots().size(); ++b)
      if (a2.is_root(plus(a2.roots()[a], a2.roots()[b]))) {
        ++pairs;
        CHECK(std::abs(n2(a, b)) == 1);
      }
  CHECK(n2.defined_pairs() == pairs);
  CHECK(pairs == 12);  // six unordered pairs

  CHECK(structure_constants(roots_of(CartanType::G, 2)).max_abs() == 3);
}

TEST_CASE("|N| equals the root-string length p+1 and the table is consistent") {
  for (auto [t, r] : kTypes) {
    const RootSystem rs = roots_of(t, r);
    const StructureConstants n = structure_constants(rs);
    const auto& roots = rs.roots();
    for (std::size_t a = 0; a < roots.size(); ++a)
      for (std::size_t b = 0; b < roots.size(); ++b) {
        const bool defined = rs.is_root(plus(roots[a], roots[b]));
        if (defined) {
          CHECK(std::abs(n(a, b)) == string_p(rs, roots[a], roots[b]) + 1);
          CHECK(n(a, b) == -n(b, a));
        } else {
          CHECK(n(a, b) == 0);
        }
      }
    CHECK(check_structure_constants(rs, n).empty());
  }
}

TEST_CASE("adjoint_rep dimensions, Serre relations, integrality") {
  CHECK(adjoint_rep(roots_of(CartanType::A, 1)).dim == 3);
  CHECK(adjoint_rep(roots_of(CartanType::G, 2)).dim == 14);
  CHECK(adjoint_rep(roots_of(CartanType::F, 4)).dim == 52);
  for (auto [t, r] : kTypes) {
    const Representation rep = adjoint_rep(roots_of(t, r));
    CHECK(check_serre_relations(rep).empty());
    for (int i = 0; i < r; ++i) {
      const auto u = static_cast<std::size_t>(i);
      CHECK(rep.e[u].has_integer_entries());
      CHECK(rep.f[u].has_integer_entries());
      CHECK(rep.h[u].is_diagonal());
      for (std::size_t b = 0; b < rep.dim; ++b) CHECK(rep.h[u].at(b, b) == CycloNum(rep.weights[b][u]));
    }
  }
}

TEST_CASE("adjoint representation of E6 satisfies the Serre relations") {
  const Representation rep = adjoint_rep(roots_of(CartanType::E, 6));
  CHECK(rep.dim == 78);
  CHECK(check_serre_relations(rep).empty());
}

TEST_CASE("the Jacobi identity holds on basis triples of the adjoint representation of B3") {
  // ad is a homomorphism iff [ad x, ad y] = ad [x, y]; with ad determined by
  // e_i, f_i this is covered by commuting ad e_i with ad f_j and Serre, so
  // here we test the brackets of the simple root vectors directly.
  const Representation rep = adjoint_rep(roots_of(CartanType::B, 3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        const auto& x = rep.e[static_cast<std::size_t>(i)];
        const auto& y = rep.e[static_cast<std::size_t>(j)];
        const auto& z = rep.f[static_cast<std::size_t>(k)];
        const ExactMatrix jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
        CHECK(jac.is_zero());
      }
}

TEST_CASE("defining representations") {
  const Representation s = sl2_rep();
  CHECK(s.e[0] == ExactMatrix::from_rows({{0, 1}, {0, 0}}));
  CHECK(s.f[0] == ExactMatrix::from_rows({{0, 0}, {1, 0}}));
  CHECK(s.h[0] == ExactMatrix::from_rows({{1, 0}, {0, -1}}));

  const Representation a2 = defining_rep(CartanType::A, 2);
  CHECK(a2.dim == 3);
  CHECK(a2.e[0] == ExactMatrix::from_triplets(3, 3, {{0, 1, CycloNum(1)}}));
  CHECK(a2.weights == std::vector<IntVector>{{1, 0}, {-1, 1}, {0, -1}});

  const Representation c2 = defining_rep(CartanType::C, 2);
  CHECK(c2.dim == 4);
  std::vector<int> h1;
  for (const auto& w : c2.weights) h1.push_back(w[0]);
  CHECK(h1 == std::vector<int>{1, -1, 1, -1});

  for (auto [t, r] : std::vector<std::pair<CartanType, int>>{{CartanType::A, 3}, {CartanType::A, 4}, {CartanType::C, 3}, {CartanType::C, 4}})
    CHECK(check_serre_relations(defining_rep(t, r)).empty());

  CHECK_THROWS_AS(defining_rep(CartanType::B, 2), ConfigError);
  CHECK_THROWS_AS(make_representation(CartanType::A, 2, RepKind::sl2), ConfigError);
  CHECK_THROWS_AS(parse_rep_kind("spin"), ConfigError);
}

TEST_CASE("exp_nilpotent") {
  const Representation s = sl2_rep();
  CHECK(exp_nilpotent(s.f[0]) == ExactMatrix::from_rows({{1, 0}, {1, 1}}));
  CHECK(exp_nilpotent(ExactMatrix::zero(3, 3)).is_identity());
  const Representation g2 = adjoint_rep(roots_of(CartanType::G, 2));
  for (const auto& x : {g2.e[0], g2.e[1], g2.f[0] + g2.f[1]})
    CHECK((exp_nilpotent(x) * exp_nilpotent(x, CycloNum(-1))).is_identity());
  CHECK_THROWS_AS(exp_nilpotent(s.h[0]), std::invalid_argument);
}

TEST_CASE("exp_ih_quarter") {
  const Representation s = sl2_rep();
  CHECK(exp_ih_quarter(s, 0, 4) == -ExactMatrix::identity(2));
  CHECK(exp_ih_quarter(s, 0, 0).is_identity());
  for (auto [t, r] : kTypes) {
    const Representation rep = adjoint_rep(roots_of(t, r));
    for (int i = 0; i < r; ++i) CHECK(exp_ih_quarter(rep, i, 8).is_identity());
  }
  CHECK(exp_ih_quarter(s, 0, 1) == ExactMatrix::diagonal(std::vector<CycloNum>{CycloNum::zeta_power(1), CycloNum::zeta_power(-1)}));
}

TEST_CASE("exp_semisimple_interp") {
  const Representation s = sl2_rep();
  const CycloNum i = CycloNum::imag();
  CHECK(exp_semisimple_interp(s.e[0] + s.f[0], {-1, 1}, 2) == ExactMatrix::from_rows({{0, i}, {i, 0}}));
  const Representation a1 = adjoint_rep(roots_of(CartanType::A, 1));
  const ExactMatrix x = a1.e[0] + a1.f[0];
  const ExactMatrix expected = ExactMatrix::identity(3) - (x * x).scaled(CycloNum::rational(1, 2));
  CHECK(exp_semisimple_interp(x, {-2, 0, 2}, 2) == expected);
  CHECK(exp_semisimple_interp(x, {-2, 0, 2}, 0).is_identity());
  CHECK_THROWS_AS(exp_semisimple_interp(x, {-1, 1}, 2), std::invalid_argument);
}

TEST_CASE("h_spectrum and json dump") {
  const Representation a1 = adjoint_rep(roots_of(CartanType::A, 1));
  CHECK(h_spectrum(a1, 0) == std::vector<int>{-2, 0, 2});
  const auto j = to_json(defining_rep(CartanType::A, 2));
  CHECK(j["dim"] == 3);
  CHECK(j["generators"].size() == 2);
  CHECK(j["weights"][0] == nlohmann::json({1, 0}));
}
