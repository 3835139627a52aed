#include <catch2/catch_amalgamated.hpp>

#include "graycat/pivmodel.hpp"
#include "graycat/strictify.hpp"

using namespace graycat;

namespace {

StrictSampler<PivModel> make_sampler(const Strict<PivModel>& s, const PivModel& m) {
  auto pick = [&m](const PivModel::One& a, const PivModel::One& b,
                   SplitMix64& rng) -> std::optional<PivModel::Two> {
    auto hs = m.conjugators(a, b);
    if (hs.empty()) return std::nullopt;
    int h = hs[size_t(rng.below(hs.size()))];
    const auto& chis = m.sample_characters();
    return m.make_two(a, b, h, chis[size_t(rng.below(chis.size()))]);
  };
  return StrictSampler<PivModel>{s, m, pick};
}

} // namespace

TEST_CASE("strictification refuses a non-spatial base") {
  auto bad = parse_pivdec_spec("pivdec:cyclic:3:lambda=z^1");
  CHECK_THROWS_AS(Strict<PivModel>(bad), TypeError);
  // lambda = zeta_4 is spatial only on decoration-preserving 2-morphisms;
  // the strict star needs more, so construction must refuse
  auto partial = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^1");
  CHECK_THROWS_AS(Strict<PivModel>(partial), TypeError);
}

TEST_CASE("evaluation of strings") {
  auto m = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^2");
  Strict<PivModel> s(m);
  auto F = m.make_one({0, 1, 2, 3}, 1);
  auto G = m.make_one({0, 1, 2, 3}, 2);
  // e((F,+1),(G,-1)) = F box #G
  auto w = s.one_string({{F, 1}, {G, -1}});
  CHECK(s.eval(w) == m.box(F, m.hash(G)));
  // e of the empty string is the unit 1-morphism
  CHECK(s.eval(s.empty_one(m.object())) == m.unit_one());
  // evaluation splits box products of strings
  auto v = s.one_string({{G, 1}});
  CHECK(s.eval(s.box(w, v)) == m.box(s.eval(w), s.eval(v)));
  // concatenation is strictly associative
  auto u = s.one_string({{F, -1}});
  CHECK(s.box(s.box(w, v), u) == s.box(w, s.box(v, u)));
}

TEST_CASE("strict hash and star on strings") {
  auto m = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^2");
  Strict<PivModel> s(m);
  auto F = m.make_one({0, 1, 2, 3}, 1);
  auto G = m.make_one({0, 1, 2, 3}, 2);
  auto w = s.one_string({{F, 1}, {G, -1}});
  CHECK(s.hash(s.hash(w)) == w);
  CHECK(s.hash(s.empty_one(m.object())) == s.empty_one(m.object()));
  // the hash of a string reverses it with flipped signs
  auto hw = s.hash(w);
  REQUIRE(hw.word.size() == 2);
  CHECK(hw.word[0] == std::make_pair(G, 1));
  CHECK(hw.word[1] == std::make_pair(F, -1));

  // on a forward basic, the strict hash evaluates through the expansion
  auto mu = m.sample_twos()[9];
  auto a = s.embed2(mu);
  CHECK(s.eval(s.hash(a)) == hash_two(m, mu));
}

TEST_CASE("iota cells") {
  auto m = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^2");
  Strict<PivModel> s(m);
  auto mu = m.sample_twos()[9];
  auto a = s.embed2(mu);
  auto k = s.one_string({{m.make_one({0, 1, 2, 3}, 1), 1}});
  // iota on a forward basic is an identity
  CHECK(m.eq(s.iota_r(a, k), m.id_three(m.whisk_r(mu, s.eval(k)))));
  // iota on a reversed basic is the kappa correction, an invertible cell
  auto rb = s.basic2(s.embed(m.hash(m.tgt(mu))), s.embed(m.hash(m.src(mu))), mu, -1);
  auto r = s.two_string({rb});
  auto cell = s.iota_r(r, k);
  CHECK(m.try_inverse(cell).has_value());
  CHECK(m.eq(m.src(cell), m.whisk_r(s.eval(r), s.eval(k))));
  CHECK(m.eq(m.tgt(cell), s.eval(s.whisk_r(r, k))));
}

TEST_CASE("strict duals report on the spatial z4 base") {
  auto m = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^2");
  Strict<PivModel> s(m);
  auto gen = make_sampler(s, m);
  auto rep = strict_duals_check(s, gen, 60, 11);
  for (const auto& l : rep.laws) {
    INFO(l.name << " [" << (l.failures.empty() ? "" : l.failures[0]) << "]");
    CHECK(l.pass());
    CHECK(l.instances > 0);
  }
}

TEST_CASE("strict duals report with trivial characters") {
  auto m = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^2:chi=trivial");
  Strict<PivModel> s(m);
  auto gen = make_sampler(s, m);
  auto rep = strict_duals_check(s, gen, 40, 3);
  CHECK(rep.pass());
}
