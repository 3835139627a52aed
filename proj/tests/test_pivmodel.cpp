#include <catch2/catch_amalgamated.hpp>

#include "graycat/pivmodel.hpp"

using namespace graycat;

namespace {
PivModel z4_model() { return parse_pivdec_spec("pivdec:cyclic:4:lambda=z^1"); }
} // namespace

TEST_CASE("model spec parsing and enumerations") {
  auto m = z4_model();
  CHECK(m.scalar_order() == 4);
  CHECK(m.sample_ones().size() == 4);    // only the identity automorphism preserves lambda
  CHECK(m.sample_twos().size() == 64);   // 4 src dec x 4 h x 4 chi
  CHECK(m.sample_characters().size() == 4);

  auto mt = parse_pivdec_spec("pivdec:cyclic:4:lambda=trivial");
  CHECK(mt.sample_ones().size() == 8);   // both automorphisms allowed

  auto mc = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^1:chi=trivial");
  CHECK(mc.sample_twos().size() == 16);

  auto d4 = parse_pivdec_spec("pivdec:dihedral:4:lambda=r^0,s^1");
  CHECK(d4.group().order() == 8);
  CHECK(d4.scalar_order() == 4);

  CHECK_THROWS_AS(parse_pivdec_spec("pivdec:icosahedral:5"), std::invalid_argument);
}

TEST_CASE("box of decorated functors") {
  auto m = z4_model();
  auto one_of = [&](int c) { return m.make_one({0, 1, 2, 3}, c); };
  // (id,1) box (id,2) = (id,3)
  CHECK(m.box(one_of(1), one_of(2)) == one_of(3));
  // unit 1-morphism
  for (int c = 0; c < 4; ++c) {
    CHECK(m.box(one_of(c), m.unit_one()) == one_of(c));
    CHECK(m.box(m.unit_one(), one_of(c)) == one_of(c));
  }
  // associativity by brute force over all triples
  const auto& ones = m.sample_ones();
  for (const auto& a : ones)
    for (const auto& b : ones)
      for (const auto& c : ones)
        CHECK(m.box(m.box(a, b), c) == m.box(a, m.box(b, c)));
}

TEST_CASE("hash dual of 1-morphisms") {
  auto m = z4_model();
  auto one_of = [&](int c) { return m.make_one({0, 1, 2, 3}, c); };
  // abelian group, identity functor: (id,1)^# = (id,1)
  CHECK(m.hash(one_of(1)) == one_of(1));
  CHECK(m.hash(m.unit_one()) == m.unit_one());
  for (const auto& f : m.sample_ones()) CHECK(m.hash(m.hash(f)) == f);
  // (F box G)^# = G^# box F^#
  for (const auto& f : m.sample_ones())
    for (const auto& g : m.sample_ones())
      CHECK(m.hash(m.box(f, g)) == m.box(m.hash(g), m.hash(f)));

  // nonabelian case: hash uses conjugation by the decoration
  auto d4 = parse_pivdec_spec("pivdec:dihedral:4:lambda=trivial");
  for (const auto& f : d4.sample_ones()) CHECK(d4.hash(d4.hash(f)) == f);
}

TEST_CASE("two-morphism data") {
  auto m = z4_model();
  auto F = m.make_one({0, 1, 2, 3}, 0);
  auto mu = m.make_two(F, F, 1, {0, 0, 0, 0});
  auto nu = m.make_two(F, F, 2, {0, 0, 0, 0});
  auto c = m.hcomp(nu, mu);
  CHECK(c.h == 3);

  // whisker right composes the character with the functor
  auto chi = m.make_two(F, F, 0, {0, 1, 2, 3});
  auto w = m.whisk_r(chi, m.make_one({0, 1, 2, 3}, 2));
  CHECK(w.chi == chi.chi); // identity permutation
  // whisker by the unit is the identity operation
  CHECK(m.whisk_l(m.unit_one(), mu) == mu);
  CHECK(m.whisk_r(mu, m.unit_one()) == mu);
  // star is an involution
  for (const auto& t : m.sample_twos()) CHECK(m.star(m.star(t)) == t);

  CHECK_THROWS_AS(m.make_two(F, F, 1, {0, 1, 0, 1}), TypeError);
}

TEST_CASE("tensorator component") {
  auto m = z4_model();
  auto F = m.make_one({0, 1, 2, 3}, 0);
  auto chi1 = m.make_two(F, F, 2, {0, 1, 2, 3}); // chi(1) = zeta_4, element 2
  auto triv = m.make_two(F, F, 2, {0, 0, 0, 0});
  // sigma value is chi_upper evaluated at the element of the lower 2-morphism
  CHECK(m.sigma(chi1, triv).s == -Cyclotomic::one(4)); // chi(2) = zeta_4^2 = -1
  CHECK(m.sigma(triv, chi1).s == Cyclotomic::one(4));  // trivial character
  // sigma against identity 2-morphisms is an identity 3-morphism
  for (const auto& f : m.sample_ones()) {
    CHECK(m.eq(m.sigma(chi1, m.id_two(f)), m.id_three(m.whisk_r(chi1, f))));
    CHECK(m.eq(m.sigma(m.id_two(f), chi1), m.id_three(m.whisk_l(f, chi1))));
  }
}

TEST_CASE("folds, cusps and caps") {
  auto m = z4_model();
  // eta of the unit 1-morphism is the unit 2-morphism
  CHECK(m.eta(m.unit_one()) == m.id_two(m.unit_one()));
  // epsilon carries lambda of the underlying element
  auto F = m.make_one({0, 1, 2, 3}, 0);
  auto mu = m.make_two(F, F, 1, {0, 0, 0, 0});
  CHECK(m.eps(mu).s == Cyclotomic::root(4, 1));
  CHECK(m.eps_star(mu).s == Cyclotomic::root(4, 1));
  // triangulator data
  for (const auto& f : m.sample_ones()) {
    auto t = m.tri(f);
    CHECK(t.s == Cyclotomic::one(4));
    CHECK(m.eq(m.tgt(t), m.id_two(f)));
    CHECK(m.eq(m.vcomp(t, m.tri_inv(f)), m.id_three(m.id_two(f))));
    // eta of (F,c) has element F(c)
    CHECK(m.eta(f).h == int(f.perm[size_t(f.c)]));
  }
}

TEST_CASE("thinness") {
  auto m = z4_model();
  const auto& twos = m.sample_twos();
  for (size_t i = 0; i < twos.size(); i += 17)
    for (size_t j = 0; j < twos.size(); j += 13) {
      int d = m.thin_hom_dim(twos[i], twos[j]);
      if (i == j) CHECK(d == 1);
      CHECK((d == 0 || d == 1));
    }
  auto F = m.make_one({0, 1, 2, 3}, 0);
  auto a = m.make_two(F, F, 1, {0, 0, 0, 0});
  auto b = m.make_two(F, F, 2, {0, 0, 0, 0});
  CHECK_THROWS_AS(m.make_three(a, b, Cyclotomic::one(4)), TypeError);
  CHECK(m.make_three(a, b, Cyclotomic::zero(4)).s.is_zero());
}
