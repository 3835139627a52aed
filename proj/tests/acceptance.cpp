// Acceptance suite: every criterion prints one PASS/FAIL line; all scalar
// comparisons are exact.

#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include "graycat/diagram_text.hpp"
#include "graycat/laws.hpp"
#include "graycat/moves.hpp"
#include "graycat/pivmodel.hpp"
#include "graycat/strictify.hpp"
#include "graycat/trace.hpp"

using namespace graycat;

namespace {

void verdict(int n, bool ok, const std::string& what) {
  std::cout << "[criterion " << n << "] " << (ok ? "PASS" : "FAIL") << "  " << what
            << std::endl;
  CHECK(ok);
}

std::vector<Cyclotomic> scalar_set(int N) {
  std::vector<Cyclotomic> s = {Cyclotomic::zero(N), Cyclotomic::one(N), -Cyclotomic::one(N)};
  if (N > 2) {
    s.push_back(Cyclotomic::root(N, 1));
    s.push_back(Cyclotomic::root(N, -1));
  }
  return s;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

StrictSampler<PivModel> sampler_for(const Strict<PivModel>& s, const PivModel& m) {
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

TEST_CASE("criterion 1: trace formulas") {
  auto g4 = FiniteGroup::cyclic(4);
  std::vector<int> exps = {0, 1, 2, 3};
  PivotalStructure piv(g4, 4, exps);
  bool ok = true;
  for (int g = 0; g < 4 && ok; ++g)
    for (const auto& a : scalar_set(4)) {
      GroupCatMorphism f(g, a);
      ok = ok && groupcat::trace_left(f, piv) == a * piv.lambda(g) * piv.lambda(g);
      ok = ok && groupcat::trace_right(f, piv) == a * piv.lambda_inv(g) * piv.lambda_inv(g);
      if (!ok) break;
    }
  verdict(1, ok,
          "compositional left/right traces equal the closed formulas, exhaustively "
          "over Z/4 with lambda = zeta_4");
}

TEST_CASE("criterion 2: sphericality criterion") {
  auto z4 = FiniteGroup::cyclic(4);
  auto z3 = FiniteGroup::cyclic(3);
  auto d4 = FiniteGroup::dihedral(4);
  bool crit = groupcat::is_spherical(PivotalStructure(z4, 4, {0, 1, 2, 3})) &&
              groupcat::is_spherical(PivotalStructure::trivial(z3)) &&
              groupcat::is_spherical(PivotalStructure::trivial(d4)) &&
              !groupcat::is_spherical(PivotalStructure(z3, 3, {0, 1, 2}));

  auto m_good = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^1");
  auto m_triv = parse_pivdec_spec("pivdec:dihedral:4:lambda=trivial");
  auto m_bad = parse_pivdec_spec("pivdec:cyclic:3:lambda=z^1");
  bool suite_match = check_laws(m_good, Suite::Spherical, UINT64_MAX, 7).pass() &&
                     check_laws(m_triv, Suite::Spherical, 4000, 7).pass() &&
                     !check_laws(m_bad, Suite::Spherical, UINT64_MAX, 7).pass();
  verdict(2, crit && suite_match,
          "closed sphericality criterion and SPHERICAL suite agree on (Z/4, zeta_4), "
          "trivial lambda, and (Z/3, zeta_3)");
}

TEST_CASE("criterion 3: surface invariants") {
  bool ok = true;
  for (const char* fam : {"4", "3"}) {
    std::string spec = std::string("pivdec:cyclic:") + fam + ":lambda=z^1";
    PivModel m = parse_pivdec_spec(spec);
    DiagramEngine<PivModel> eng(m);
    int n = m.group().order();
    std::vector<int> idperm;
    for (int i = 0; i < n; ++i) idperm.push_back(i);
    auto F = m.make_one(idperm, 1);
    const auto& piv = m.pivotal();
    for (int g = 0; g <= 4 && ok; ++g) {
      auto composite = surface_invariant<PivModel, Cyclotomic>(m, F, g);
      int fc = F.perm[size_t(F.c)];
      auto closed = Cyclotomic::root(n, (2 * g - 2) * piv.lambda_exp[size_t(fc)]);
      ok = ok && composite == closed;
      // the checked-in genus file must agree
      std::string path = std::string(GRAYCAT_ROOT) + "/diagrams/genus" +
                         std::to_string(g) + "_z" + fam + ".gcd";
      auto doc = parse_diagram(read_file(path), nullptr, &m);
      auto br = m.bracket(eng.evaluate(doc.diagram));
      ok = ok && br.has_value() && *br == closed;
      // reciprocity
      auto dual = surface_invariant<PivModel, Cyclotomic>(m, m.hash(F), g);
      ok = ok && (composite * dual).is_one();
    }
  }
  verdict(3, ok,
          "genus 0..4 surfaces: trace composite, diagram files and the closed formula "
          "lambda(F(c))^(2g-2) agree exactly on Z/4 and Z/3, with reciprocity");
}

TEST_CASE("criterion 4: gray axioms exhaustively") {
  bool ok = true;
  std::string detail;
  for (const char* spec : {"pivdec:cyclic:2:lambda=z^1", "pivdec:cyclic:3:lambda=z^1",
                           "pivdec:cyclic:4:lambda=z^1"}) {
    auto m = parse_pivdec_spec(spec);
    for (Suite s : {Suite::Gray, Suite::Planar, Suite::Duals}) {
      auto rep = check_laws(m, s, UINT64_MAX, 7);
      if (!rep.pass()) {
        ok = false;
        for (const auto& l : rep.laws)
          if (!l.failures.empty())
            detail = std::string(spec) + "/" + rep.suite + "/" + l.name + ": " + l.failures[0];
      }
    }
  }
  // a nontrivial tensorator value: chi(1) = zeta_4 against the element 2
  auto m4 = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^1");
  auto F = m4.make_one({0, 1, 2, 3}, 0);
  auto mu = m4.make_two(F, F, 1, {0, 1, 2, 3});
  auto nu = m4.make_two(F, F, 2, {0, 0, 0, 0});
  ok = ok && m4.sigma(mu, nu).s == -Cyclotomic::one(4);
  verdict(4, ok,
          "GRAY+PLANAR+DUALS pass exhaustively on Z/2, Z/3, Z/4 with all characters; "
          "sigma with chi(1)=zeta_4 at element 2 equals -1" +
              (detail.empty() ? "" : " [" + detail + "]"));
}

TEST_CASE("criterion 5: coherence identities") {
  bool ok = true;
  for (const char* spec : {"pivdec:cyclic:2:lambda=z^1", "pivdec:cyclic:3:lambda=z^1",
                           "pivdec:cyclic:4:lambda=z^1"}) {
    auto m = parse_pivdec_spec(spec);
    for (Suite s : {Suite::Functoriality, Suite::Natiso, Suite::Folds})
      ok = ok && check_laws(m, s, 30000, 7).pass();
    // the three named identities, exhaustively over the enumerations
    Canon<PivModel> cn(m);
    for (const auto& nu : m.sample_twos()) {
      auto th = eval_term(m, cn.theta(nu));
      ok = ok && m.eq(th, m.vcomp(eval_term(m, cn.gamma(nu)),
                                  eval_term(m, cn.delta(hash_two(m, nu)))));
      ok = ok && m.eq(hash_three(m, th), eval_term(m, cn.theta(hash_two(m, nu))));
      if (!ok) break;
    }
    for (const auto& f : m.sample_ones()) {
      auto lhs = eval_term(m, cn.omega(m.id_two(f)));
      auto rhs = m.hcomp(m.id_three(m.eta_star(f)),
                         m.whisk_l(f, eval_term(m, cn.phi_f_inv(f))));
      ok = ok && m.eq(m.src(lhs), m.src(rhs)) && m.eq(m.tgt(lhs), m.tgt(rhs)) &&
           lhs.s == rhs.s;
    }
  }
  verdict(5, ok,
          "FUNCTORIALITY+NATISO+FOLDS pass on Z/2, Z/3, Z/4; Theta = Gamma . Delta_#, "
          "#Theta = Theta_#, and the unit fold-crossing identity hold exactly on every "
          "enumerated 2-morphism and 1-morphism");
}

TEST_CASE("criterion 6: spatial and spherical implications") {
  bool ok = true;
  std::string blocker;
  for (const char* spec :
       {"pivdec:cyclic:2:lambda=trivial", "pivdec:cyclic:2:lambda=z^1",
        "pivdec:cyclic:3:lambda=trivial", "pivdec:cyclic:3:lambda=z^1",
        "pivdec:cyclic:4:lambda=trivial", "pivdec:cyclic:4:lambda=z^1",
        "pivdec:cyclic:4:lambda=z^2", "pivdec:cyclic:4:lambda=z^3",
        "pivdec:dihedral:3:lambda=trivial", "pivdec:dihedral:4:lambda=trivial",
        "pivdec:dihedral:4:lambda=r^1,s^0", "pivdec:dihedral:4:lambda=r^0,s^1",
        "pivdec:dihedral:4:lambda=r^1,s^1"}) {
    auto m = parse_pivdec_spec(spec);
    bool spatial = check_laws(m, Suite::Spatial, 4000, 7).pass();
    bool spherical = check_laws(m, Suite::Spherical, 4000, 7).pass();
    bool semi = check_laws(m, Suite::Semisimple, 4000, 7).pass();
    if (spatial && !spherical) {
      ok = false;
      blocker = std::string(spec) + " is spatial but not spherical";
    }
    if (semi && spherical && !spatial) {
      ok = false;
      blocker = std::string(spec) + " is thin semisimple spherical but not spatial";
    }
  }
  verdict(6, ok,
          "spatial implies spherical, and semisimple+spherical implies spatial, on all "
          "13 sampled bases" +
              (blocker.empty() ? "" : " [build-blocking: " + blocker + "]"));
}

TEST_CASE("criterion 7: strictification") {
  auto m = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^2");
  Strict<PivModel> s(m);
  auto gen = sampler_for(s, m);
  bool ok = true;

  // involutions on >= 500 sampled strings of length <= 4
  SplitMix64 rng(7);
  int checked = 0;
  for (int i = 0; i < 520 && ok; ++i) {
    auto f = gen.random_one(rng, 4);
    ok = ok && s.hash(s.hash(f)) == f && s.star(f) == f;
    auto a = gen.random_two(rng, 4, 3);
    ok = ok && s.hash(s.hash(a)) == a;
    ok = ok && s.star(s.star(a)) == a;
    ok = ok && s.star(s.hash(s.star(s.hash(a)))) == a;
    auto cell = s.id3(a);
    ok = ok && m.eq(s.hash(s.hash(cell)).base, cell.base);
    ok = ok && m.eq(s.star(s.star(cell)).base, cell.base);
    ok = ok && m.eq(s.star(s.hash(s.star(s.hash(cell)))).base, cell.base);
    ++checked;
  }
  ok = ok && checked >= 500;

  // e o f = 1 exactly on the model enumerations
  for (const auto& mu : m.sample_twos()) ok = ok && s.eval(s.embed2(mu)) == mu;
  for (const auto& ps : m.sample_threes()) ok = ok && m.eq(s.eval(s.embed3(ps)), ps);

  auto rep = strict_duals_check(s, gen, 60, 11);
  std::string detail;
  for (const auto& l : rep.laws)
    if (!l.failures.empty()) detail = l.name + ": " + l.failures[0];
  ok = ok && rep.pass();
  verdict(7, ok,
          "strict duals over Z/4: ##=1, **=1, *#*#=1 on " + std::to_string(checked) +
              " sampled strings, e o f = 1, and the strict-duals report passes "
              "including #eps = eps_{*#}" +
              (detail.empty() ? "" : " [" + detail + "]"));
}

TEST_CASE("criterion 8: move invariance") {
  std::vector<std::string> corpus = {
      "cross_pair", "cross_triple", "caps_basic", "caps_nested", "snake_zigzag",
      "cusp_pair",  "cusp_double",  "vertex_slide", "genus1_spatial",
      "genus2_spatial", "twist_loop"};
  std::vector<Move> all = {Move::Interchange, Move::RII,      Move::RIII,
                           Move::Slide,       Move::Snake,    Move::Pivotal,
                           Move::CuspCancel,  Move::CuspFlip, Move::DoubleTwist};
  std::vector<std::future<std::pair<std::string, FuzzReport>>> jobs;
  for (const auto& name : corpus) {
    jobs.push_back(std::async(std::launch::async, [name, all]() {
      std::string path = std::string(GRAYCAT_ROOT) + "/diagrams/" + name + ".gcd";
      std::ifstream in(path);
      std::stringstream buf;
      buf << in.rdbuf();
      std::unique_ptr<PivModel> owned;
      auto doc = parse_diagram(buf.str(), &owned);
      DiagramEngine<PivModel> eng(*owned);
      auto rep = fuzz_moves(eng, doc.diagram, 1000, 7, all, 16, 40);
      return std::make_pair(name, rep);
    }));
  }
  bool ok = true;
  long long total = 0;
  std::string detail;
  for (auto& j : jobs) {
    auto [name, rep] = j.get();
    total += rep.steps_applied;
    if (!rep.pass() || rep.steps_applied != 1000) {
      ok = false;
      detail = name + (rep.witnesses.empty() ? " stalled" : ": " + rep.witnesses[0]);
    }
  }
  verdict(8, ok,
          "1000-step fuzz at seed 7 over " + std::to_string(corpus.size()) +
              " spatial-base diagrams applied " + std::to_string(total) +
              " moves with 0 violations" + (detail.empty() ? "" : " [" + detail + "]"));

  // the non-spatial base, double twist enabled: document the observed outcome
  std::string text =
      "diagram tw {\n"
      "  model pivdec:cyclic:3:lambda=z^1;\n"
      "  let F = one perm [0 1 2] dec 1;\n"
      "  let G = one perm [0 1 2] dec 2;\n"
      "  let mu = two F -> F h 1 chi [0 0 0];\n"
      "  let nu = two G -> G h 2 chi [0 1 2];\n"
      "  input [ (G F) ; nu @ 0 ; (G F) ; mu @ 1 ; (G F) ];\n"
      "  layer cross 1 -;\n"
      "  layer cross 1 +;\n"
      "}\n";
  std::unique_ptr<PivModel> owned;
  auto doc = parse_diagram(text, &owned);
  DiagramEngine<PivModel> eng(*owned);
  auto rep3 = fuzz_moves(eng, doc.diagram, 1000, 7, all, 16, 40);
  std::cout << "[criterion 8] observed outcome on the non-spatial (Z/3, zeta_3) base "
               "with double_twist enabled: "
            << rep3.violations << " violation(s) after " << rep3.steps_applied
            << " steps"
            << (rep3.witnesses.empty() ? "" : " [" + rep3.witnesses[0] + "]") << std::endl;
  // empirically the double twist is not the identity there, so the fuzzer
  // must catch it; documented above either way
  CHECK(rep3.violations > 0);
}

TEST_CASE("criterion 9: frobenius laws") {
  auto m = parse_pivdec_spec("pivdec:cyclic:4:lambda=z^1");
  bool ok = true;
  std::string detail;
  for (const auto& f : m.sample_ones()) {
    auto rep = frobenius_check(m, f);
    for (const auto& item : rep.items)
      if (!item.pass) {
        ok = false;
        detail = m.describe(f) + " " + item.name;
      }
  }
  verdict(9, ok,
          "Frobenius unit/associativity/compatibility laws hold exactly for every "
          "decorated functor over Z/4" +
              (detail.empty() ? "" : " [" + detail + "]"));
}
