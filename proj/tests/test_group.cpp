#include <catch2/catch_amalgamated.hpp>

#include "graycat/group.hpp"

using namespace graycat;

namespace {

PivotalStructure zeta_lambda(const FiniteGroup& g, int k) {
  // cyclic group: lambda(x) = zeta_n^{k x}
  int n = g.order();
  std::vector<int> e(size_t(n), 0);
  for (int x = 0; x < n; ++x) e[size_t(x)] = (x * k) % n;
  return PivotalStructure(g, n, std::move(e));
}

} // namespace

TEST_CASE("group construction and validation") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.order() == 4);
  CHECK(z4.identity() == 0);
  CHECK(z4.mul(3, 2) == 1);
  CHECK(z4.inv(1) == 3);
  CHECK(z4.exponent() == 4);
  CHECK(z4.is_abelian());

  auto d4 = FiniteGroup::dihedral(4);
  CHECK(d4.order() == 8);
  CHECK(!d4.is_abelian());
  CHECK(d4.exponent() == 4);
  // r s r s = e
  int r = 1, s = 4;
  CHECK(d4.mul(d4.mul(r, s), d4.mul(r, s)) == d4.identity());

  // a broken table is rejected
  std::vector<std::vector<int>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(FiniteGroup("bad", bad), std::invalid_argument);
}

TEST_CASE("automorphisms and characters") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.automorphisms().size() == 2);
  CHECK(z4.characters(4).size() == 4);
  auto d4 = FiniteGroup::dihedral(4);
  CHECK(d4.automorphisms().size() == 8);
  CHECK(d4.characters(4).size() == 4); // abelianisation Z/2 x Z/2
  auto z3 = FiniteGroup::cyclic(3);
  CHECK(z3.characters(3).size() == 3);
}

TEST_CASE("tensor product in the group category") {
  auto z4 = FiniteGroup::cyclic(4);
  auto one = Cyclotomic::one(4);
  GroupCatMorphism f(1, one), k(3, one);
  auto t = groupcat::tensor(z4, f, k);
  CHECK(t.object == 0);
  CHECK(t.scalar == one);

  // unit object is neutral
  GroupCatMorphism e(0, one);
  CHECK(groupcat::tensor(z4, f, e) == f);

  GroupCatMorphism zi(1, Cyclotomic::root(4, 1));
  auto sq = groupcat::tensor(z4, zi, zi);
  CHECK(sq.object == 2);
  CHECK(sq.scalar == -one);
}

TEST_CASE("traces through the compositional route") {
  auto z4 = FiniteGroup::cyclic(4);
  auto piv = zeta_lambda(z4, 1);
  // closed formulas are the oracle: tr_L = alpha lambda(g)^2, tr_R = alpha lambda(g^-1)^2
  std::vector<Cyclotomic> alphas = {Cyclotomic::one(4), -Cyclotomic::one(4),
                                    Cyclotomic::root(4, 1), Cyclotomic::zero(4)};
  for (int g = 0; g < 4; ++g) {
    for (const auto& a : alphas) {
      GroupCatMorphism f(g, a);
      auto l = groupcat::trace_left(f, piv);
      auto r = groupcat::trace_right(f, piv);
      CHECK(l == a * piv.lambda(g) * piv.lambda(g));
      CHECK(r == a * piv.lambda_inv(g) * piv.lambda_inv(g));
    }
  }
  GroupCatMorphism f1(1, Cyclotomic::one(4));
  CHECK(groupcat::trace_left(f1, piv) == -Cyclotomic::one(4));
  GroupCatMorphism fe(0, Cyclotomic::one(4));
  CHECK(groupcat::trace_left(fe, piv) == Cyclotomic::one(4));

  auto z3 = FiniteGroup::cyclic(3);
  auto piv3 = zeta_lambda(z3, 1);
  GroupCatMorphism h(1, Cyclotomic::one(3));
  CHECK(groupcat::trace_left(h, piv3) == Cyclotomic::root(3, 2));
  CHECK(groupcat::trace_right(h, piv3) == Cyclotomic::root(3, 1));

  // multiplicativity under tensor, all pairs
  for (int g = 0; g < 4; ++g)
    for (int h2 = 0; h2 < 4; ++h2) {
      GroupCatMorphism x(g, Cyclotomic::root(4, g));
      GroupCatMorphism y(h2, -Cyclotomic::one(4));
      CHECK(groupcat::trace_left(groupcat::tensor(z4, x, y), piv) ==
            groupcat::trace_left(x, piv) * groupcat::trace_left(y, piv));
    }
}

TEST_CASE("sphericality criterion") {
  auto z4 = FiniteGroup::cyclic(4);
  auto z3 = FiniteGroup::cyclic(3);
  CHECK(groupcat::is_spherical(zeta_lambda(z4, 1)));
  CHECK(!groupcat::is_spherical(zeta_lambda(z3, 1)));
  CHECK(groupcat::is_spherical(PivotalStructure::trivial(z3)));
  CHECK(groupcat::is_spherical(PivotalStructure::trivial(FiniteGroup::dihedral(4))));
  // spherical lambda makes both traces agree, exhaustively
  auto piv = zeta_lambda(z4, 1);
  for (int g = 0; g < 4; ++g) {
    GroupCatMorphism f(g, Cyclotomic::root(4, 1));
    CHECK(groupcat::trace_left(f, piv) == groupcat::trace_right(f, piv));
  }
}

TEST_CASE("pivotal functors") {
  auto z4 = FiniteGroup::cyclic(4);
  auto id = GroupHom::identity(z4);
  auto piv = zeta_lambda(z4, 1);
  CHECK(groupcat::is_pivotal_functor(id, piv, piv));

  GroupHom inv3(z4, z4, {0, 3, 2, 1});
  CHECK(!groupcat::is_pivotal_functor(inv3, piv, piv));
  auto pivm1 = zeta_lambda(z4, 2); // lambda(1) = -1
  CHECK(groupcat::is_pivotal_functor(inv3, pivm1, pivm1));
}

TEST_CASE("character check") {
  auto z4 = FiniteGroup::cyclic(4);
  CHECK(groupcat::check_character(z4, [](int) { return Cyclotomic::one(4); }));
  CHECK(groupcat::check_character(
      z4, [](int x) { return Cyclotomic::root(4, x); }));
  // zeta_3 valued map on Z/4 cannot be a character
  CHECK(!groupcat::check_character(
      z4, [](int x) { return Cyclotomic::root(12, 4 * (x % 2)); }));
}
