#include <doctest.h>

#include "weylnorm/adjoint_action.hpp"
#include "weylnorm/errors.hpp"

using namespace weylnorm;

namespace {

Representation adj(CartanType t, int r) { return adjoint_rep(generate_roots(build_cartan(t, r))); }

}  // namespace

TEST_CASE("conj_generator") {
  const Representation b2 = adj(CartanType::B, 2);
  const TitsElements t = make_tits_elements(b2);
  CHECK(conj_generator(GroupElement::identity(b2.dim), b2.e[0]) == b2.e[0]);
  CHECK(conj_generator({t.sdot[0], false}, b2.h[1]) == b2.h[1] + b2.h[0].scaled(2));
  const CycloNum i = CycloNum::imag();
  CHECK(conj_generator(GroupElement::gamma(b2.dim), b2.h[0].scaled(i)) == b2.h[0].scaled(-i));
}

TEST_CASE("Tits closed forms") {
  const Representation a2 = adj(CartanType::A, 2);
  const TitsElements t = make_tits_elements(a2);
  CHECK(bracket_rhs_tits(a2, 0, 0, GenKind::e) == -a2.f[0]);
  CHECK(t.sdot[0] * a2.e[0] * t.sdot_inv[0] == -a2.f[0]);
  CHECK(bracket_rhs_tits(a2, 0, 1, GenKind::e) == -bracket(a2.e[0], a2.e[1]));
  CHECK(t.sdot[0] * a2.e[1] * t.sdot_inv[0] == -bracket(a2.e[0], a2.e[1]));

  const Representation a3 = adj(CartanType::A, 3);
  const TitsElements t3 = make_tits_elements(a3);
  CHECK(bracket_rhs_tits(a3, 0, 2, GenKind::e) == a3.e[2]);
  CHECK(t3.sdot[0] * a3.e[2] * t3.sdot_inv[0] == a3.e[2]);
}

TEST_CASE("unitary closed forms") {
  const CycloNum i = CycloNum::imag();
  const Representation a3 = adj(CartanType::A, 3);
  const auto u3 = make_unitary_lifts(a3, make_tits_elements(a3));
  CHECK(bracket_rhs_unitary(a3, 0, 0, GenKind::e) == a3.f[0].scaled(-i));
  CHECK(conj_generator(u3.sigma[0], a3.e[0].scaled(i)) == a3.f[0].scaled(-i));
  CHECK(bracket_rhs_unitary(a3, 0, 2, GenKind::e) == a3.e[2].scaled(-i));

  const Representation g2 = adj(CartanType::G, 2);
  const auto ug = make_unitary_lifts(g2, make_tits_elements(g2));
  // Node 1 is long, so a_12 = -1 and a_21 = -3: the triple bracket is at (2, 1).
  REQUIRE(g2.cartan(1, 0) == -3);
  const ExactMatrix ie1 = g2.e[0].scaled(i);
  const ExactMatrix ie2 = g2.e[1].scaled(i);
  const ExactMatrix triple = bracket(ie2, bracket(ie2, bracket(ie2, ie1)));
  const ExactMatrix expected = triple.scaled(CycloNum::rational(-1, 6));
  CHECK(bracket_rhs_unitary(g2, 1, 0, GenKind::e) == expected);
  CHECK(conj_generator(ug.sigma[1], ie1) == expected);
}

TEST_CASE("full tables match brute-force conjugation") {
  for (const auto& rep : {adj(CartanType::A, 2), adj(CartanType::B, 2), adj(CartanType::G, 2), sl2_rep(),
                          defining_rep(CartanType::C, 2)}) {
    CAPTURE(rep.describe());
    const TitsElements t = make_tits_elements(rep);
    const auto u = make_unitary_lifts(rep, t);
    const ActionTable table = verify_action_tables(rep, t, u, {}, 2);
    CHECK(table.all_match());
    const auto r2 = static_cast<std::size_t>(rep.rank() * rep.rank());
    CHECK(table.entries.size() == 3 * 2 * r2);
    CHECK(table.to_report(rep.describe()).all_pass());
    CHECK(verify_weight_consistency(rep, t).all_pass());
  }
}

TEST_CASE("tilde table has no sign factors") {
  for (const auto& rep : {adj(CartanType::A, 2), adj(CartanType::B, 2), adj(CartanType::G, 2)}) {
    const TitsElements t = make_tits_elements(rep);
    const auto u = make_unitary_lifts(rep, t);
    const ActionTable table = verify_action_tables(rep, t, u, {true, false, true});
    for (const auto& e : table.entries) {
      if (!e.tilde) continue;
      CHECK(e.match);
      CHECK(e.coefficient.find('-') == std::string::npos);
    }
  }
}

TEST_CASE("table json is thread-count independent") {
  const Representation g2 = adj(CartanType::G, 2);
  const TitsElements t = make_tits_elements(g2);
  const auto u = make_unitary_lifts(g2, t);
  CHECK(verify_action_tables(g2, t, u, {}, 1).to_json(true).dump() ==
        verify_action_tables(g2, t, u, {}, 4).to_json(true).dump());
}

TEST_CASE("parse_lift_kind") {
  CHECK(parse_lift_kind("tits") == LiftKind::tits);
  CHECK(parse_lift_kind("unitary") == LiftKind::unitary);
  CHECK_THROWS_AS(parse_lift_kind("x"), ConfigError);
}
