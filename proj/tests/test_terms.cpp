#include <catch2/catch_amalgamated.hpp>

#include "graycat/pivmodel.hpp"
#include "graycat/term.hpp"

using namespace graycat;

using TT = ThreeTerm<PivModel>;
using T2 = TwoTerm<PivModel>;

namespace {
PivModel z4_model() { return parse_pivdec_spec("pivdec:cyclic:4:lambda=z^1"); }
} // namespace

TEST_CASE("two-term evaluation") {
  auto m = z4_model();
  auto F = m.make_one({0, 1, 2, 3}, 1);
  auto mu = m.make_two(F, F, 1, {0, 1, 2, 3});

  CHECK(eval2(m, T2::gen(mu)) == mu);
  CHECK(eval2(m, T2::id(F)) == m.id_two(F));
  CHECK(eval2(m, T2::eta(F)) == m.eta(F));
  CHECK(eval2(m, T2::star(T2::gen(mu))) == m.star(mu));
  CHECK(eval2(m, T2::hcomp(T2::gen(mu), T2::gen(mu))) == m.hcomp(mu, mu));
  CHECK(eval2(m, T2::whisk_l(F, T2::gen(mu))) == m.whisk_l(F, mu));
  CHECK(eval2(m, T2::hash(T2::gen(mu))) == hash_two(m, mu));
}

TEST_CASE("source and target of terms") {
  auto m = z4_model();
  auto F = m.make_one({0, 1, 2, 3}, 1);
  auto mu = m.make_two(F, F, 1, {0, 0, 0, 0});

  // src2(Eps(mu)) is the identity 2-morphism of the target 1-morphism of mu
  CHECK(src2(m, TT::eps(mu)) == m.id_two(m.tgt(mu)));
  // src2 of an identity 3-morphism is the 2-morphism itself
  CHECK(src2(m, TT::id(mu)) == mu);
  CHECK(tgt2(m, TT::id(mu)) == mu);
  // tgt2 of the triangulator is the unit 2-morphism on F
  CHECK(tgt2(m, TT::tri(F)) == m.id_two(F));
}

TEST_CASE("evaluation is a homomorphism for every constructor") {
  auto m = z4_model();
  auto F = m.make_one({0, 1, 2, 3}, 1);
  auto mu = m.make_two(F, F, 1, {0, 1, 2, 3});
  auto psi = m.make_three(mu, mu, Cyclotomic::root(4, 1));
  auto phi = m.make_three(mu, mu, -Cyclotomic::one(4));

  CHECK(eval_term(m, TT::vcomp(TT::gen(psi), TT::gen(phi))) == m.vcomp(psi, phi));
  CHECK(eval_term(m, TT::hcomp(TT::gen(psi), TT::gen(phi))) == m.hcomp(psi, phi));
  CHECK(eval_term(m, TT::whisk_l(F, TT::gen(psi))) == m.whisk_l(F, psi));
  CHECK(eval_term(m, TT::whisk_r(TT::gen(psi), F)) == m.whisk_r(psi, F));
  CHECK(eval_term(m, TT::star(TT::gen(psi))) == m.star(psi));
  CHECK(eval_term(m, TT::sigma(mu, mu)) == m.sigma(mu, mu));
  CHECK(eval_term(m, TT::eps(mu)) == m.eps(mu));
  CHECK(eval_term(m, TT::tri(F)) == m.tri(F));
}

TEST_CASE("identity and cusp-pair evaluation") {
  auto m = z4_model();
  // identity 3-morphism on the unit 2-morphism of the unit 1-morphism
  auto u = m.id_two(m.unit_one());
  auto idterm = TT::id(u);
  auto v = eval_term(m, idterm);
  CHECK(v.s == Cyclotomic::one(4));
  CHECK(m.eq(m.src(v), u));

  for (const auto& f : m.sample_ones()) {
    auto cusp = eval_term(m, TT::vcomp(TT::tri(f), TT::tri_inv(f)));
    CHECK(m.eq(cusp, m.id_three(m.id_two(f))));
  }
}

TEST_CASE("ill-typed composites report the offending path") {
  auto m = z4_model();
  auto F = m.make_one({0, 1, 2, 3}, 1);
  auto mu = m.make_two(F, F, 1, {0, 0, 0, 0});
  auto nu = m.make_two(F, F, 2, {0, 0, 0, 0});
  auto a = m.id_three(mu);
  auto b = m.id_three(nu);
  try {
    eval_term(m, TT::hcomp(TT::id(m.id_two(F)), TT::vcomp(TT::gen(a), TT::gen(b))));
    FAIL("expected a TypeError");
  } catch (const TypeError& e) {
    std::string msg = e.what();
    CHECK(msg.find("term path") != std::string::npos);
    CHECK(msg.find("/hcomp.right") != std::string::npos);
  }
}

TEST_CASE("derived box products") {
  auto m = z4_model();
  auto F = m.make_one({0, 1, 2, 3}, 1);
  auto mu = m.make_two(F, F, 1, {0, 1, 2, 3});
  auto nu = m.make_two(F, F, 2, {0, 2, 0, 2});
  // Psi box Phi = (Psi box F2) o (G1 box Phi)
  auto psi = m.make_three(mu, mu, Cyclotomic::root(4, 1));
  auto phi = m.make_three(nu, nu, Cyclotomic::one(4));
  auto b3 = box3(m, psi, phi);
  CHECK(m.eq(m.src(b3), box2(m, mu, nu)));
  CHECK(b3.s == psi.s * phi.s);
}
