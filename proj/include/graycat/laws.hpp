#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graycat/canonical.hpp"
#include "graycat/term.hpp"
#include "graycat/trace.hpp"

namespace graycat {

// ---------------------------------------------------------------------------
// Reports

struct LawResult {
  std::string name;
  std::string ref; // standard name of the identity being checked
  long long instances = 0;
  std::vector<std::string> failures; // first counterexample witnesses
  bool pass() const { return failures.empty(); }
};

struct SuiteReport {
  std::string suite;
  std::vector<LawResult> laws;
  bool pass() const {
    for (const auto& l : laws)
      if (!l.pass()) return false;
    return true;
  }
};

enum class Suite { Gray, Planar, Duals, Functoriality, Natiso, Folds, Spatial, Spherical, Semisimple };

inline const char* suite_name(Suite s) {
  switch (s) {
    case Suite::Gray: return "gray";
    case Suite::Planar: return "planar";
    case Suite::Duals: return "duals";
    case Suite::Functoriality: return "functoriality";
    case Suite::Natiso: return "natiso";
    case Suite::Folds: return "folds";
    case Suite::Spatial: return "spatial";
    case Suite::Spherical: return "spherical";
    case Suite::Semisimple: return "semisimple";
  }
  return "?";
}

inline std::optional<Suite> parse_suite(const std::string& s) {
  for (Suite v : {Suite::Gray, Suite::Planar, Suite::Duals, Suite::Functoriality,
                  Suite::Natiso, Suite::Folds, Suite::Spatial, Suite::Spherical,
                  Suite::Semisimple})
    if (s == suite_name(v)) return v;
  return std::nullopt;
}

// Deterministic generator used for subsampling large instance spaces.
class SplitMix64 {
public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  uint64_t below(uint64_t n) { return n ? next() % n : 0; }

private:
  uint64_t state_;
};

// ---------------------------------------------------------------------------
// Law runner: iterates a flat index space, exhaustively if it fits in the
// budget and by seeded sampling otherwise.

template <class M>
class LawRunner {
public:
  LawRunner(const M& m, uint64_t budget, uint64_t seed)
      : m_(m), budget_(budget ? budget : 1), seed_(seed) {
    const auto& twos = m_.sample_twos();
    for (size_t i = 0; i < twos.size(); ++i)
      for (size_t j = 0; j < twos.size(); ++j)
        if (m_.src(twos[i]) == m_.tgt(twos[j])) comp2_.emplace_back(int(i), int(j));
  }

  // pairs (i, j) with hcomp(twos[i], twos[j]) defined
  const std::vector<std::pair<int, int>>& comp2() const { return comp2_; }

  template <class Fn>
  void law(SuiteReport& rep, const std::string& name, const std::string& ref,
           uint64_t total, Fn&& check) {
    LawResult r;
    r.name = name;
    r.ref = ref;
    auto consider = [&](uint64_t idx) {
      std::optional<std::string> fail;
      try {
        fail = check(idx);
      } catch (const std::exception& e) {
        fail = std::string("exception: ") + e.what();
      }
      if (fail.has_value() && *fail == kSkip) return;
      r.instances++;
      if (fail && r.failures.empty()) r.failures.push_back(*fail);
    };
    if (total <= budget_) {
      for (uint64_t i = 0; i < total && r.failures.empty(); ++i) consider(i);
    } else {
      SplitMix64 rng(seed_ ^ (0x1234abcdull + std::hash<std::string>{}(name)));
      for (uint64_t i = 0; i < budget_ && r.failures.empty(); ++i) consider(rng.below(total));
    }
    rep.laws.push_back(std::move(r));
  }

  static inline const std::string kSkip = "\x01skip";

  const M& m_;
  uint64_t budget_;
  uint64_t seed_;
  std::vector<std::pair<int, int>> comp2_;
};

// ---------------------------------------------------------------------------
// The suites

template <class M>
SuiteReport check_laws(const M& m, Suite suite, uint64_t budget, uint64_t seed) {
  using Two = typename M::Two;
  using Three = typename M::Three;
  using TT = ThreeTerm<M>;
  LawRunner<M> run(m, budget, seed);
  Canon<M> cn(m);
  SuiteReport rep;
  rep.suite = suite_name(suite);

  const auto& ones = m.sample_ones();
  const auto& twos = m.sample_twos();
  const auto& threes = m.sample_threes();
  const auto& pairs = run.comp2();
  const uint64_t nOnes = ones.size(), nTwos = twos.size(), nThrees = threes.size(),
                 nPairs = pairs.size();
  const auto& skip = LawRunner<M>::kSkip;

  auto boxable = [&](const Two& a, const Two& b) {
    return m.src(m.src(a)) == m.tgt(m.src(b));
  };
  auto wit1 = [&](const auto& x) { return m.describe(x); };
  auto wit2 = [&](const auto& x, const auto& y) {
    return m.describe(x) + " ; " + m.describe(y);
  };
  auto wit3 = [&](const auto& x, const auto& y, const auto& z) {
    return m.describe(x) + " ; " + m.describe(y) + " ; " + m.describe(z);
  };
  // connecting cell (a1 box a2) o (b1 box b2) => (a1 o b1) box (a2 o b2)
  auto box_coh = [&](const Two& a1, const Two& a2, const Two& b1, const Two& b2) {
    return m.hcomp(m.id_three(m.whisk_r(a1, m.tgt(a2))),
                   m.hcomp(m.sigma_inv(b1, a2), m.id_three(m.whisk_l(m.src(b1), b2))));
  };

  switch (suite) {
    // -----------------------------------------------------------------------
    case Suite::Gray: {
      run.law(rep, "tensorator-unit", "tensorator is trivial on identity 2-morphisms",
              nTwos * nOnes * 2, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / (nOnes * 2))];
                const auto& f = ones[size_t((i / 2) % nOnes)];
                bool left = i % 2 == 0;
                if (left) {
                  if (!boxable(mu, m.id_two(f))) return skip;
                  if (m.eq(m.sigma(mu, m.id_two(f)), m.id_three(m.whisk_r(mu, f))))
                    return std::nullopt;
                } else {
                  if (!boxable(m.id_two(f), mu)) return skip;
                  if (m.eq(m.sigma(m.id_two(f), mu), m.id_three(m.whisk_l(f, mu))))
                    return std::nullopt;
                }
                return wit2(mu, m.id_two(f));
              });

      run.law(rep, "tensorator-naturality-second", "tensorator natural in the lower argument",
              nTwos * nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / nThrees)];
                const Three& phi = threes[size_t(i % nThrees)];
                const Two nu = m.src(phi), nup = m.tgt(phi);
                if (!boxable(mu, nu)) return skip;
                auto F2 = m.tgt(nu);
                auto F1 = m.src(nu);
                auto lhs = m.vcomp(m.sigma(mu, nup),
                                   m.hcomp(m.id_three(m.whisk_r(mu, F2)),
                                           m.whisk_l(m.src(mu), phi)));
                auto rhs = m.vcomp(m.hcomp(m.whisk_l(m.tgt(mu), phi),
                                           m.id_three(m.whisk_r(mu, F1))),
                                   m.sigma(mu, nu));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "tensorator-naturality-first", "tensorator natural in the upper argument",
              nThrees * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i / nTwos)];
                const Two& nu = twos[size_t(i % nTwos)];
                const Two mu = m.src(psi), mup = m.tgt(psi);
                if (!boxable(mu, nu)) return skip;
                auto F2 = m.tgt(nu);
                auto F1 = m.src(nu);
                auto lhs = m.vcomp(m.sigma(mup, nu),
                                   m.hcomp(m.whisk_r(psi, F2),
                                           m.id_three(m.whisk_l(m.src(mu), nu))));
                auto rhs = m.vcomp(m.hcomp(m.id_three(m.whisk_l(m.tgt(mu), nu)),
                                           m.whisk_r(psi, F1)),
                                   m.sigma(mu, nu));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "tensorator-hcomp-lower", "tensorator splits over lower horizontal composites",
              nPairs * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                auto [nb, na] = pairs[size_t(i / nTwos)]; // nubar o nu defined
                const Two& mu = twos[size_t(i % nTwos)];
                const Two& nubar = twos[size_t(nb)];
                const Two& nu = twos[size_t(na)];
                if (!boxable(mu, nu)) return skip;
                auto lhs = m.sigma(mu, m.hcomp(nubar, nu));
                auto rhs = m.vcomp(
                    m.hcomp(m.id_three(m.whisk_l(m.tgt(mu), nubar)), m.sigma(mu, nu)),
                    m.hcomp(m.sigma(mu, nubar), m.id_three(m.whisk_l(m.src(mu), nu))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit3(mu, nubar, nu);
              });

      run.law(rep, "tensorator-hcomp-upper", "tensorator splits over upper horizontal composites",
              nPairs * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                auto [mb, ma] = pairs[size_t(i / nTwos)]; // mubar o mu defined
                const Two& nu = twos[size_t(i % nTwos)];
                const Two& mubar = twos[size_t(mb)];
                const Two& mu = twos[size_t(ma)];
                if (!boxable(mu, nu)) return skip;
                auto lhs = m.sigma(m.hcomp(mubar, mu), nu);
                auto rhs = m.vcomp(
                    m.hcomp(m.sigma(mubar, nu), m.id_three(m.whisk_r(mu, m.src(nu)))),
                    m.hcomp(m.id_three(m.whisk_r(mubar, m.tgt(nu))), m.sigma(mu, nu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit3(mubar, mu, nu);
              });

      run.law(rep, "tensorator-box", "tensorator moves across box whiskers",
              nTwos * nTwos * nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / (nTwos * nOnes))];
                const Two& nu = twos[size_t((i / nOnes) % nTwos)];
                const auto& f = ones[size_t(i % nOnes)];
                bool ok = true;
                if (boxable(m.whisk_r(mu, f), nu) && boxable(mu, m.whisk_l(f, nu)))
                  ok = ok && m.eq(m.sigma(m.whisk_r(mu, f), nu), m.sigma(mu, m.whisk_l(f, nu)));
                if (boxable(m.whisk_l(f, mu), nu))
                  ok = ok && m.eq(m.sigma(m.whisk_l(f, mu), nu), m.whisk_l(f, m.sigma(mu, nu)));
                if (boxable(mu, m.whisk_r(nu, f)))
                  ok = ok && m.eq(m.sigma(mu, m.whisk_r(nu, f)), m.whisk_r(m.sigma(mu, nu), f));
                if (ok) return std::nullopt;
                return wit3(mu, nu, m.id_two(f));
              });

      run.law(rep, "box-functor", "whiskering preserves both compositions and units",
              nOnes * nThrees * nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i / (nThrees * nThrees))];
                const Three& a = threes[size_t((i / nThrees) % nThrees)];
                const Three& b = threes[size_t(i % nThrees)];
                bool ok = true;
                if (m.eq(m.src(a), m.tgt(b)))
                  ok = ok &&
                       m.eq(m.whisk_l(f, m.vcomp(a, b)), m.vcomp(m.whisk_l(f, a), m.whisk_l(f, b))) &&
                       m.eq(m.whisk_r(m.vcomp(a, b), f), m.vcomp(m.whisk_r(a, f), m.whisk_r(b, f)));
                if (m.tgt(m.src(b)) == m.src(m.src(a)))
                  ok = ok && m.eq(m.whisk_l(f, m.hcomp(a, b)),
                                  m.hcomp(m.whisk_l(f, a), m.whisk_l(f, b)));
                ok = ok && m.eq(m.whisk_l(f, m.id_three(m.src(a))),
                                m.id_three(m.whisk_l(f, m.src(a))));
                if (ok) return std::nullopt;
                return wit2(m.src(a), m.src(b));
              });

      run.law(rep, "box-associative", "box products associate across levels",
              nOnes * nOnes * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i / (nOnes * nTwos))];
                const auto& g = ones[size_t((i / nTwos) % nOnes)];
                const Two& mu = twos[size_t(i % nTwos)];
                bool ok =
                    m.whisk_l(f, m.whisk_l(g, mu)) == m.whisk_l(m.box(f, g), mu) &&
                    m.whisk_r(m.whisk_r(mu, f), g) == m.whisk_r(mu, m.box(f, g)) &&
                    m.whisk_l(f, m.whisk_r(mu, g)) == m.whisk_r(m.whisk_l(f, mu), g) &&
                    m.whisk_l(m.unit_one(), mu) == mu && m.whisk_r(mu, m.unit_one()) == mu;
                if (ok) return std::nullopt;
                return wit1(mu);
              });

      run.law(rep, "interchange", "middle-four exchange of 3-morphisms",
              nPairs * 25, [&](uint64_t i) -> std::optional<std::string> {
                auto [ni, mi] = pairs[size_t(i / 25)];
                uint64_t s = i % 25;
                const Two& nu = twos[size_t(ni)];
                const Two& mu = twos[size_t(mi)];
                auto pick = [&](const Two& t, uint64_t k) {
                  // endomorphism sample of t drawn from the enumerated scalars
                  for (const auto& th : threes)
                    if (m.eq(m.src(th), t)) {
                      uint64_t seen = 0;
                      for (const auto& th2 : threes)
                        if (m.eq(m.src(th2), t)) {
                          if (seen == k) return th2;
                          ++seen;
                        }
                      return th;
                    }
                  return m.id_three(t);
                };
                auto a = pick(nu, s / 5), b = pick(nu, s % 5);
                auto g = pick(mu, s % 5), d = pick(mu, s / 5);
                auto lhs = m.hcomp(m.vcomp(a, b), m.vcomp(g, d));
                auto rhs = m.vcomp(m.hcomp(a, g), m.hcomp(b, d));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(nu, mu);
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Planar: {
      run.law(rep, "star-involution", "the star dual is an involution",
              nTwos + nThrees, [&](uint64_t i) -> std::optional<std::string> {
                if (i < nTwos) {
                  const Two& mu = twos[size_t(i)];
                  if (m.eq(m.star(m.star(mu)), mu)) return std::nullopt;
                  return wit1(mu);
                }
                const Three& t = threes[size_t(i - nTwos)];
                if (m.eq(m.star(m.star(t)), t)) return std::nullopt;
                return wit1(t);
              });

      run.law(rep, "star-contravariant", "star reverses both compositions",
              nThrees * nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& a = threes[size_t(i / nThrees)];
                const Three& b = threes[size_t(i % nThrees)];
                bool ok = true;
                if (m.eq(m.src(a), m.tgt(b)))
                  ok = ok && m.eq(m.star(m.vcomp(a, b)), m.vcomp(m.star(b), m.star(a)));
                if (m.tgt(m.src(b)) == m.src(m.src(a)))
                  ok = ok && m.eq(m.star(m.hcomp(a, b)), m.hcomp(m.star(b), m.star(a)));
                if (ok) return std::nullopt;
                return wit2(m.src(a), m.src(b));
              });

      run.law(rep, "pivotal-slide", "3-morphisms slide around caps",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& phi = threes[size_t(i)];
                const Two mu = m.src(phi), nu = m.tgt(phi);
                auto lhs = m.vcomp(m.hcomp(phi, m.id_three(m.star(mu))), m.eps(mu));
                auto rhs = m.vcomp(m.hcomp(m.id_three(nu), m.star(phi)), m.eps(nu));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(mu);
              });

      run.law(rep, "snake", "zigzags on caps and cups cancel",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i)];
                const Two mus = m.star(mu);
                auto s1 = m.vcomp(m.hcomp(m.id_three(mu), m.eps_star(mus)),
                                  m.hcomp(m.eps(mu), m.id_three(mu)));
                auto s2 = m.vcomp(m.hcomp(m.eps_star(mu), m.id_three(mus)),
                                  m.hcomp(m.id_three(mus), m.eps(mus)));
                if (m.eq(s1, m.id_three(mu)) && m.eq(s2, m.id_three(mus))) return std::nullopt;
                return wit1(mu);
              });

      run.law(rep, "cap-multiplicative", "caps compose along horizontal composition",
              nPairs, [&](uint64_t i) -> std::optional<std::string> {
                auto [mi, ri] = pairs[size_t(i)];
                const Two& mu = twos[size_t(mi)];
                const Two& rho = twos[size_t(ri)];
                auto lhs = m.vcomp(m.hcomp(m.id_three(mu),
                                           m.hcomp(m.eps(rho), m.id_three(m.star(mu)))),
                                   m.eps(mu));
                auto rhs = m.eps(m.hcomp(mu, rho));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, rho);
              });

      run.law(rep, "dual-formula", "the star of a 3-morphism is its cap conjugate",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& phi = threes[size_t(i)];
                const Two mu = m.src(phi), nu = m.tgt(phi);
                const Two mus = m.star(mu), nus = m.star(nu);
                auto lhs = m.star(phi);
                auto rhs = m.vcomp(
                    m.hcomp(m.eps_star(nus), m.id_three(mus)),
                    m.vcomp(m.hcomp(m.id_three(nus), m.hcomp(phi, m.id_three(mus))),
                            m.hcomp(m.id_three(nus), m.eps(mu))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(mu);
              });

      run.law(rep, "pivotal-identity", "double cap conjugation returns the 3-morphism",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& phi = threes[size_t(i)];
                const Two a = m.src(phi), b = m.tgt(phi);
                const Two as = m.star(a), bs = m.star(b);
                auto mid = m.hcomp(m.id_three(b),
                                   m.hcomp(m.id_three(as),
                                           m.hcomp(phi, m.hcomp(m.id_three(bs), m.id_three(a)))));
                auto rhs = m.vcomp(
                    m.hcomp(m.id_three(b), m.eps_star(as)),
                    m.vcomp(m.hcomp(m.id_three(b),
                                    m.hcomp(m.id_three(as), m.hcomp(m.eps_star(b), m.id_three(a)))),
                            m.vcomp(mid,
                                    m.vcomp(m.hcomp(m.id_three(b),
                                                    m.hcomp(m.eps(as),
                                                            m.hcomp(m.id_three(bs), m.id_three(a)))),
                                            m.hcomp(m.eps(b), m.id_three(a))))));
                if (m.eq(phi, rhs)) return std::nullopt;
                return wit1(a);
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Duals: {
      run.law(rep, "hash-involution", "the hash dual is involutive with strict units",
              nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i)];
                bool ok = m.hash(m.hash(f)) == f &&
                          m.hash(m.unit_one()) == m.unit_one() &&
                          m.eq(m.eta(m.unit_one()), m.id_two(m.unit_one())) &&
                          m.eq(m.tri(m.unit_one()), m.id_three(m.id_two(m.unit_one())));
                if (ok) return std::nullopt;
                return m.describe(f);
              });

      run.law(rep, "hash-antihomomorphism", "hash reverses the box product",
              nOnes * nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i / nOnes)];
                const auto& g = ones[size_t(i % nOnes)];
                if (m.hash(m.box(f, g)) == m.box(m.hash(g), m.hash(f))) return std::nullopt;
                return m.describe(f) + " ; " + m.describe(g);
              });

      run.law(rep, "fold-of-composite", "the fold of a box splits through both folds",
              nOnes * nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i / nOnes)];
                const auto& g = ones[size_t(i % nOnes)];
                auto lhs = m.eta(m.box(f, g));
                auto rhs = m.hcomp(m.whisk_r(m.whisk_l(f, m.eta(g)), m.hash(f)), m.eta(f));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return m.describe(f) + " ; " + m.describe(g);
              });

      run.law(rep, "triangulator-of-composite", "the triangulator of a box factorises",
              nOnes * nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i / nOnes)];
                const auto& g = ones[size_t(i % nOnes)];
                auto lhs = m.tri(m.box(f, g));
                auto upper = m.hcomp(m.whisk_r(m.tri(f), g), m.whisk_l(f, m.tri(g)));
                auto mid = m.hcomp(
                    m.id_three(m.whisk_r(m.whisk_r(m.eta_star(f), f), g)),
                    m.hcomp(m.sigma(m.whisk_l(f, m.eta_star(g)), m.whisk_r(m.eta(m.hash(f)), g)),
                            m.id_three(m.whisk_l(m.box(f, g), m.eta(m.hash(g))))));
                auto rhs = m.vcomp(upper, mid);
                if (m.eq(lhs, rhs)) return std::nullopt;
                return m.describe(f) + " ; " + m.describe(g);
              });

      run.law(rep, "triangulator-axiom", "the swallowtail relation for cusps",
              nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i)];
                auto fh = m.hash(f);
                auto etaFs = m.eta_star(f);
                auto lhs = m.vcomp(
                    m.hcomp(m.id_three(etaFs), m.whisk_r(m.tri(f), fh)),
                    m.vcomp(m.hcomp(m.sigma(etaFs, etaFs),
                                    m.id_three(m.whisk_r(m.whisk_l(f, m.eta(fh)), fh))),
                            m.hcomp(m.id_three(etaFs), m.whisk_l(f, m.tri_star(fh)))));
                if (m.eq(lhs, m.id_three(etaFs))) return std::nullopt;
                return m.describe(f);
              });

      run.law(rep, "triangulator-invertible", "cusps cancel exactly",
              nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i)];
                bool ok = m.eq(m.vcomp(m.tri(f), m.tri_inv(f)), m.id_three(m.id_two(f))) &&
                          m.eq(m.vcomp(m.tri_inv(f), m.tri(f)), m.id_three(m.src(m.tri(f)))) &&
                          m.eq(m.vcomp(m.tri_star(f), m.tri_star_inv(f)),
                               m.id_three(m.tgt(m.tri_star(f)))) &&
                          m.eq(m.vcomp(m.tri_star_inv(f), m.tri_star(f)),
                               m.id_three(m.id_two(f)));
                if (ok) return std::nullopt;
                return m.describe(f);
              });

      run.law(rep, "star-of-tensorator", "star of a crossing is the crossing of stars",
              nTwos * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / nTwos)];
                const Two& nu = twos[size_t(i % nTwos)];
                if (!boxable(mu, nu)) return skip;
                if (m.eq(m.star(m.sigma(mu, nu)), m.sigma(m.star(mu), m.star(nu))))
                  return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "whisker-star-compat", "whiskers commute with star and caps",
              nTwos * nOnes * nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / (nOnes * nOnes))];
                const auto& k = ones[size_t((i / nOnes) % nOnes)];
                const auto& h = ones[size_t(i % nOnes)];
                auto w = m.whisk_r(m.whisk_l(k, mu), h);
                bool ok = m.eq(m.star(w), m.whisk_r(m.whisk_l(k, m.star(mu)), h)) &&
                          m.eq(m.whisk_r(m.whisk_l(k, m.eps(mu)), h), m.eps(w));
                if (ok) return std::nullopt;
                return wit2(mu, m.id_two(k));
              });

      run.law(rep, "tensorator-inverse-by-caps", "cap conjugation inverts the crossing",
              nTwos * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / nTwos)];
                const Two& nu = twos[size_t(i % nTwos)];
                if (!boxable(mu, nu)) return skip;
                // (1 o eps*_{mu* box H}) . (1 o sigma_{mu*,nu} o 1) . (eps_{mu box K} o 1)
                auto K = m.tgt(nu);
                auto Hs = m.src(nu);
                auto muK = m.whisk_r(mu, K);
                auto muH = m.whisk_r(mu, Hs);
                auto musH = m.whisk_r(m.star(mu), Hs);
                auto srcS = m.hcomp(muK, m.whisk_l(m.src(mu), nu));
                auto tgtS = m.hcomp(m.whisk_l(m.tgt(mu), nu), muH);
                auto lhs = m.vcomp(
                    m.hcomp(m.id_three(srcS), m.eps_star(musH)),
                    m.vcomp(m.hcomp(m.id_three(muK),
                                    m.hcomp(m.sigma(m.star(mu), nu), m.id_three(muH))),
                            m.hcomp(m.eps(muK), m.id_three(tgtS))));
                if (m.eq(lhs, m.sigma_inv(mu, nu))) return std::nullopt;
                return wit2(mu, nu);
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Functoriality: {
      run.law(rep, "hash-laxity-units", "unit constraints of the lax hash functor",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto F = m.src(nu);
                auto G = m.tgt(nu);
                auto hnu = hash_two(m, nu);
                auto left = m.vcomp(eval_term(m, cn.phi_comp(m.id_two(F), nu)),
                                    m.hcomp(eval_term(m, cn.phi_f(F)), m.id_three(hnu)));
                auto right = m.vcomp(eval_term(m, cn.phi_comp(nu, m.id_two(G))),
                                     m.hcomp(m.id_three(hnu), eval_term(m, cn.phi_f(G))));
                if (m.eq(left, m.id_three(hnu)) && m.eq(right, m.id_three(hnu)))
                  return std::nullopt;
                return wit1(nu);
              });

      run.law(rep, "hash-laxity-assoc", "composition constraint of the lax hash functor",
              nPairs * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                auto [ni, ri] = pairs[size_t(i / nTwos)]; // nu o rho defined
                const Two& nu = twos[size_t(ni)];
                const Two& rho = twos[size_t(ri)];
                const Two& mu = twos[size_t(i % nTwos)];
                if (!(m.src(mu) == m.tgt(nu))) return skip; // need mu o nu o rho
                auto lhs = m.vcomp(eval_term(m, cn.phi_comp(rho, m.hcomp(mu, nu))),
                                   m.hcomp(m.id_three(hash_two(m, rho)),
                                           eval_term(m, cn.phi_comp(nu, mu))));
                auto rhs = m.vcomp(eval_term(m, cn.phi_comp(m.hcomp(nu, rho), mu)),
                                   m.hcomp(eval_term(m, cn.phi_comp(rho, nu)),
                                           m.id_three(hash_two(m, mu))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit3(rho, nu, mu);
              });

      run.law(rep, "hash-laxity-natural", "naturality of the hash composition cell",
              nThrees * nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i / nThrees)]; // rho => rho'
                const Three& phi = threes[size_t(i % nThrees)]; // nu => nu'
                const Two rho = m.src(psi);
                const Two nu = m.src(phi);
                if (!(m.src(nu) == m.tgt(rho))) return skip;
                auto lhs = m.vcomp(hash_three(m, m.hcomp(phi, psi)),
                                   eval_term(m, cn.phi_comp(rho, nu)));
                auto rhs = m.vcomp(eval_term(m, cn.phi_comp(m.tgt(psi), m.tgt(phi))),
                                   m.hcomp(hash_three(m, psi), hash_three(m, phi)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(rho, nu);
              });

      run.law(rep, "kappa-units", "kappa is trivial against unit 2-morphisms",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i)];
                auto u = m.id_two(m.unit_one());
                auto hmu = hash_two(m, mu);
                bool ok = m.eq(eval_term(m, cn.kappa(mu, u)), m.id_three(hmu)) &&
                          m.eq(eval_term(m, cn.kappa(u, mu)), m.id_three(hmu));
                if (ok) return std::nullopt;
                return wit1(mu);
              });

      run.law(rep, "kappa-unit-cell", "kappa against identities reduces to the unit cells",
              nOnes * nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i / nOnes)];
                const auto& g = ones[size_t(i % nOnes)];
                auto lhs = eval_term(m, cn.phi_f(m.box(f, g)));
                auto rhs = m.vcomp(eval_term(m, cn.kappa(m.id_two(f), m.id_two(g))),
                                   box3(m, eval_term(m, cn.phi_f(g)), eval_term(m, cn.phi_f(f))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return m.describe(f) + " ; " + m.describe(g);
              });

      run.law(rep, "kappa-associative", "kappa associates over triple box products",
              nTwos * nTwos * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / (nTwos * nTwos))];
                const Two& nu = twos[size_t((i / nTwos) % nTwos)];
                const Two& rho = twos[size_t(i % nTwos)];
                if (!boxable(mu, nu) || !boxable(nu, rho)) return skip;
                auto hm = hash_two(m, mu), hr = hash_two(m, rho);
                auto lhs = m.vcomp(eval_term(m, cn.kappa(box2(m, mu, nu), rho)),
                                   box3(m, m.id_three(hr), eval_term(m, cn.kappa(mu, nu))));
                auto rhs = m.vcomp(eval_term(m, cn.kappa(mu, box2(m, nu, rho))),
                                   box3(m, eval_term(m, cn.kappa(nu, rho)), m.id_three(hm)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit3(mu, nu, rho);
              });

      run.law(rep, "kappa-natural", "naturality of kappa in both arguments",
              nThrees * nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i / nThrees)]; // mu => mu'
                const Three& phi = threes[size_t(i % nThrees)]; // nu => nu'
                const Two mu = m.src(psi);
                const Two nu = m.src(phi);
                if (!boxable(mu, nu)) return skip;
                auto lhs = m.vcomp(eval_term(m, cn.kappa(m.tgt(psi), m.tgt(phi))),
                                   box3(m, hash_three(m, phi), hash_three(m, psi)));
                auto rhs = m.vcomp(hash_three(m, box3(m, psi, phi)),
                                   eval_term(m, cn.kappa(mu, nu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "kappa-interchange", "kappa against the box coherence of composites",
              nPairs * nPairs, [&](uint64_t i) -> std::optional<std::string> {
                auto [ri, mi] = pairs[size_t(i / nPairs)];  // rho o mu defined
                auto [ti, vi] = pairs[size_t(i % nPairs)];  // tau o nu defined
                const Two& rho = twos[size_t(ri)];
                const Two& mu = twos[size_t(mi)];
                const Two& tau = twos[size_t(ti)];
                const Two& nu = twos[size_t(vi)];
                if (!boxable(mu, nu) || !boxable(rho, tau)) return skip;
                auto hmu = hash_two(m, mu), hnu = hash_two(m, nu);
                auto hrho = hash_two(m, rho), htau = hash_two(m, tau);
                auto lhs = m.vcomp(
                    hash_three(m, box_coh(rho, tau, mu, nu)),
                    m.vcomp(eval_term(m, cn.phi_comp(box2(m, mu, nu), box2(m, rho, tau))),
                            m.hcomp(eval_term(m, cn.kappa(mu, nu)),
                                    eval_term(m, cn.kappa(rho, tau)))));
                auto rhs = m.vcomp(
                    eval_term(m, cn.kappa(m.hcomp(rho, mu), m.hcomp(tau, nu))),
                    m.vcomp(box3(m, eval_term(m, cn.phi_comp(nu, tau)),
                                 eval_term(m, cn.phi_comp(mu, rho))),
                            box_coh(hnu, hmu, htau, hrho)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Natiso: {
      run.law(rep, "gamma-natural", "the quadruple-dual cell is natural",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i)];
                const Two mu = m.src(psi), nu = m.tgt(psi);
                auto shsh = m.star(hash_three(m, m.star(hash_three(m, psi))));
                auto lhs = m.vcomp(eval_term(m, cn.gamma(nu)), shsh);
                auto rhs = m.vcomp(psi, eval_term(m, cn.gamma(mu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(mu);
              });

      run.law(rep, "gamma-unit", "the quadruple-dual cell on unit 2-morphisms",
              nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i)];
                auto phiF = eval_term(m, cn.phi_f(f));
                auto lhs = m.vcomp(eval_term(m, cn.gamma(m.id_two(f))),
                                   m.star(hash_three(m, m.star(phiF))));
                auto rhs = m.star(eval_term(m, cn.phi_f(m.hash(f))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return m.describe(f);
              });

      run.law(rep, "gamma-hcomp", "the quadruple-dual cell over horizontal composites",
              nPairs, [&](uint64_t i) -> std::optional<std::string> {
                auto [mi, ni] = pairs[size_t(i)]; // mu o nu defined
                const Two& mu = twos[size_t(mi)];
                const Two& nu = twos[size_t(ni)];
                auto shnu = m.star(hash_two(m, nu));
                auto shmu = m.star(hash_two(m, mu));
                auto lhs = m.vcomp(m.hcomp(eval_term(m, cn.gamma(mu)), eval_term(m, cn.gamma(nu))),
                                   m.star(eval_term(m, cn.phi_comp(shnu, shmu))));
                auto rhs = m.vcomp(eval_term(m, cn.gamma(m.hcomp(mu, nu))),
                                   m.star(hash_three(m, m.star(eval_term(m, cn.phi_comp(nu, mu))))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "gamma-box", "the quadruple-dual cell over box products",
              nTwos * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / nTwos)];
                const Two& nu = twos[size_t(i % nTwos)];
                if (!boxable(mu, nu)) return skip;
                auto shnu = m.star(hash_two(m, nu));
                auto shmu = m.star(hash_two(m, mu));
                auto shshmu = m.star(hash_two(m, shmu));
                auto shshnu = m.star(hash_two(m, shnu));
                auto lhs = m.vcomp(eval_term(m, cn.gamma(box2(m, mu, nu))),
                                   m.star(hash_three(m, m.star(eval_term(m, cn.kappa(mu, nu))))));
                auto rhs = m.vcomp(
                    box3(m, eval_term(m, cn.gamma(mu)), eval_term(m, cn.gamma(nu))),
                    m.vcomp(m.sigma_inv(shshmu, shshnu),
                            m.vcomp(m.star(eval_term(m, cn.kappa(shnu, shmu))),
                                    m.star(hash_three(m, m.sigma(shnu, shmu))))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "theta-invertible", "double-hash cell composes to identities with its inverse",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto th = eval_term(m, cn.theta(nu));
                auto thi = eval_term(m, cn.theta_inv(nu));
                bool ok = m.eq(m.vcomp(th, thi), m.id_three(nu)) &&
                          m.eq(m.vcomp(thi, th), m.id_three(m.src(th)));
                if (ok) return std::nullopt;
                return wit1(nu);
              });

      run.law(rep, "gamma-delta-invertible", "quadruple-dual and half-twist cells are invertible",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto ga = eval_term(m, cn.gamma(nu));
                auto de = eval_term(m, cn.delta(nu));
                auto gi = m.try_inverse(ga);
                auto di = m.try_inverse(de);
                bool ok = gi.has_value() && di.has_value() &&
                          m.eq(m.vcomp(ga, *gi), m.id_three(nu)) &&
                          m.eq(m.vcomp(de, *di), m.id_three(m.tgt(de)));
                if (ok) return std::nullopt;
                return wit1(nu);
              });

      run.law(rep, "omega-invertible", "fold-crossing cells cancel exactly",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto om = eval_term(m, cn.omega(nu));
                auto omi = eval_term(m, cn.omega_inv(nu));
                bool ok = m.eq(m.vcomp(omi, om), m.id_three(m.src(om))) &&
                          m.eq(m.vcomp(om, omi), m.id_three(m.tgt(om)));
                if (ok) return std::nullopt;
                return wit1(nu);
              });

      run.law(rep, "theta-unit", "double-hash cell on unit 2-morphisms",
              nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i)];
                auto lhs = eval_term(m, cn.theta(m.id_two(f)));
                auto rhs = m.vcomp(eval_term(m, cn.phi_f_inv(m.hash(f))),
                                   hash_three(m, eval_term(m, cn.phi_f_inv(f))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return m.describe(f);
              });

      run.law(rep, "theta-hcomp", "double-hash cell over horizontal composites",
              nPairs, [&](uint64_t i) -> std::optional<std::string> {
                auto [mi, ni] = pairs[size_t(i)]; // mu o nu defined
                const Two& mu = twos[size_t(mi)];
                const Two& nu = twos[size_t(ni)];
                auto hmu = hash_two(m, mu), hnu = hash_two(m, nu);
                auto chainv = m.vcomp(
                    eval_term(m, cn.theta(m.hcomp(mu, nu))),
                    m.vcomp(hash_three(m, eval_term(m, cn.phi_comp(nu, mu))),
                            m.vcomp(eval_term(m, cn.phi_comp(hmu, hnu)),
                                    m.hcomp(eval_term(m, cn.theta_inv(mu)),
                                            eval_term(m, cn.theta_inv(nu))))));
                if (m.eq(chainv, m.id_three(m.hcomp(mu, nu)))) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "theta-box", "double-hash cell over box products",
              nTwos * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / nTwos)];
                const Two& nu = twos[size_t(i % nTwos)];
                if (!boxable(mu, nu)) return skip;
                auto hmu = hash_two(m, mu), hnu = hash_two(m, nu);
                auto lhs = m.vcomp(
                    eval_term(m, cn.theta(box2(m, mu, nu))),
                    m.vcomp(hash_three(m, eval_term(m, cn.kappa(mu, nu))),
                            eval_term(m, cn.kappa(hnu, hmu))));
                auto rhs = box3(m, eval_term(m, cn.theta(mu)), eval_term(m, cn.theta(nu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "theta-natural", "double-hash cell is natural",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i)];
                const Two mu = m.src(psi), nu = m.tgt(psi);
                auto lhs = m.vcomp(eval_term(m, cn.theta(nu)), hash_three(m, hash_three(m, psi)));
                auto rhs = m.vcomp(psi, eval_term(m, cn.theta(mu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(mu);
              });

      run.law(rep, "hash-theta-coherence", "double-hash cell commutes with hash",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto lhs = hash_three(m, eval_term(m, cn.theta(nu)));
                auto rhs = eval_term(m, cn.theta(hash_two(m, nu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(nu);
              });

      run.law(rep, "star-gamma-coherence", "quadruple-dual cell against star-hash",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto lhs = m.star(hash_three(m, eval_term(m, cn.gamma(nu))));
                auto ga = eval_term(m, cn.gamma(m.star(hash_two(m, nu))));
                auto gi = m.try_inverse(ga);
                if (gi && m.eq(lhs, *gi)) return std::nullopt;
                return wit1(nu);
              });

      run.law(rep, "theta-delta-gamma", "the half-twist factorisations of the double-hash cell",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto th = eval_term(m, cn.theta(nu));
                auto viaGamma = m.vcomp(eval_term(m, cn.gamma(nu)),
                                        eval_term(m, cn.delta(hash_two(m, nu))));
                auto gstar = m.star(eval_term(m, cn.gamma(m.star(nu))));
                auto gsi = m.try_inverse(gstar);
                bool ok = m.eq(th, viaGamma) && gsi.has_value() &&
                          m.eq(th, m.vcomp(*gsi, hash_three(m, eval_term(m, cn.delta(nu)))));
                if (ok) return std::nullopt;
                return wit1(nu);
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Folds: {
      run.law(rep, "fold-unit", "crossing a fold with a unit line is a cusp cell",
              nOnes, [&](uint64_t i) -> std::optional<std::string> {
                const auto& f = ones[size_t(i)];
                auto lhs = eval_term(m, cn.omega(m.id_two(f)));
                auto rhs = m.hcomp(m.id_three(m.eta_star(f)),
                                   m.whisk_l(f, eval_term(m, cn.phi_f_inv(f))));
                // both are endomorphisms of eta_F^* in a thin model; compare
                // against the properly oriented cell as well
                auto rhs2 = m.hcomp(m.id_three(m.eta_star(f)),
                                    m.whisk_l(f, eval_term(m, cn.phi_f(f))));
                if (m.eq(lhs, rhs) || m.eq(lhs, rhs2)) return std::nullopt;
                return m.describe(f);
              });

      run.law(rep, "fold-hcomp", "composite lines cross folds through the laxity cell",
              nPairs, [&](uint64_t i) -> std::optional<std::string> {
                auto [ni, mi] = pairs[size_t(i)]; // nu o mu defined
                const Two& nu = twos[size_t(ni)];
                const Two& mu = twos[size_t(mi)];
                auto F = m.src(mu);
                auto Hh = m.hash(m.tgt(nu));
                auto hnu = hash_two(m, nu);
                auto lhs = eval_term(m, cn.omega(m.hcomp(nu, mu)));
                auto rhs = m.vcomp(
                    m.hcomp(m.id_three(m.eta_star(F)),
                            m.whisk_l(F, eval_term(m, cn.phi_comp(mu, nu)))),
                    m.vcomp(m.hcomp(eval_term(m, cn.omega(mu)),
                                    m.id_three(m.whisk_l(F, hnu))),
                            m.vcomp(m.hcomp(m.id_three(m.eta_star(m.tgt(mu))),
                                            m.sigma_inv(mu, hnu)),
                                    m.hcomp(eval_term(m, cn.omega(nu)),
                                            m.id_three(m.whisk_r(mu, Hh))))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(nu, mu);
              });

      run.law(rep, "fold-box", "box-composite lines cross folds through kappa",
              nTwos * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i / nTwos)];
                const Two& nu = twos[size_t(i % nTwos)];
                if (!boxable(mu, nu)) return skip;
                auto F = m.src(mu), G = m.tgt(mu), H = m.src(nu), K = m.tgt(nu);
                auto Gh = m.hash(G), Fh = m.hash(F), Hh = m.hash(H), Kh = m.hash(K);
                auto hmu = hash_two(m, mu);
                auto a = m.hcomp(m.eta_star(H), m.whisk_l(H, hash_two(m, nu)));
                auto FH = m.box(F, H);
                auto step1 = m.hcomp(
                    m.id_three(m.eta_star(G)),
                    m.hcomp(m.whisk_r(m.sigma_inv(mu, m.eta_star(K)), Gh),
                            m.id_three(m.whisk_r(m.whisk_r(m.whisk_l(F, nu), Kh), Gh))));
                auto step2 = m.hcomp(eval_term(m, cn.omega(mu)),
                                     m.whisk_r(m.whisk_l(F, eval_term(m, cn.omega(nu))), Gh));
                auto step3 = m.hcomp(m.id_three(m.eta_star(F)),
                                     m.whisk_l(F, m.sigma_inv(a, hmu)));
                auto step4 = m.hcomp(m.id_three(m.eta_star(FH)),
                                     m.whisk_l(FH, eval_term(m, cn.kappa(mu, nu))));
                auto rhs = m.vcomp(step4, m.vcomp(step3, m.vcomp(step2, step1)));
                auto lhs = eval_term(m, cn.omega(box2(m, mu, nu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit2(mu, nu);
              });

      run.law(rep, "omega-natural", "3-morphisms slide across folds",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i)];
                const Two mu = m.src(psi), nu = m.tgt(psi);
                auto F = m.src(mu), G = m.tgt(mu);
                auto Gh = m.hash(G);
                auto lhs = m.vcomp(eval_term(m, cn.omega(nu)),
                                   m.hcomp(m.id_three(m.eta_star(G)), m.whisk_r(psi, Gh)));
                auto rhs = m.vcomp(m.hcomp(m.id_three(m.eta_star(F)),
                                           m.whisk_l(F, hash_three(m, psi))),
                                   eval_term(m, cn.omega(mu)));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(mu);
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Spatial: {
      run.law(rep, "spatial", "half-twist cell equals its double star conjugate",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& nu = twos[size_t(i)];
                auto lhs = eval_term(m, cn.delta(nu));
                auto rhs = m.star(eval_term(m, cn.delta(m.star(nu))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(nu);
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Spherical: {
      run.law(rep, "spherical-left", "left traces slide behind folds",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i)];
                if (!m.eq(m.src(psi), m.tgt(psi))) return skip;
                auto G = m.tgt(m.src(psi));
                auto Gh = m.hash(G);
                auto lhs = m.hcomp(m.id_three(m.eta_star(G)),
                                   m.whisk_r(trace3_left(m, psi), Gh));
                auto rhs = m.hcomp(m.id_three(m.eta_star(G)),
                                   m.whisk_l(G, trace3_right(m, hash_three(m, psi))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(m.src(psi));
              });

      run.law(rep, "spherical-right", "right traces slide behind folds",
              nThrees, [&](uint64_t i) -> std::optional<std::string> {
                const Three& psi = threes[size_t(i)];
                if (!m.eq(m.src(psi), m.tgt(psi))) return skip;
                auto F = m.src(m.src(psi));
                auto Fh = m.hash(F);
                auto lhs = m.hcomp(m.id_three(m.eta_star(F)),
                                   m.whisk_r(trace3_right(m, psi), Fh));
                auto rhs = m.hcomp(m.id_three(m.eta_star(F)),
                                   m.whisk_l(F, trace3_left(m, hash_three(m, psi))));
                if (m.eq(lhs, rhs)) return std::nullopt;
                return wit1(m.src(psi));
              });
      break;
    }

    // -----------------------------------------------------------------------
    case Suite::Semisimple: {
      run.law(rep, "thin-homs", "hom spaces between 2-morphisms are 0- or 1-dimensional",
              nTwos * nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& a = twos[size_t(i / nTwos)];
                const Two& b = twos[size_t(i % nTwos)];
                int d = m.thin_hom_dim(a, b);
                if (d == 0 || d == 1) return std::nullopt;
                return wit2(a, b);
              });

      run.law(rep, "simple-units", "unit 2-morphisms are simple",
              1, [&](uint64_t) -> std::optional<std::string> {
                auto u = m.id_two(m.unit_one());
                if (m.thin_hom_dim(u, u) == 1) return std::nullopt;
                return std::string("unit 2-morphism");
              });

      run.law(rep, "non-degenerate", "simple 2-morphisms have nonzero dimensions",
              nTwos, [&](uint64_t i) -> std::optional<std::string> {
                const Two& mu = twos[size_t(i)];
                if (!m.is_zero(dim_left(m, mu)) && !m.is_zero(dim_right(m, mu)))
                  return std::nullopt;
                return wit1(mu);
              });
      break;
    }
  }
  return rep;
}

} // namespace graycat
