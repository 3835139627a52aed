#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "graycat/canonical.hpp"
#include "graycat/laws.hpp"

namespace graycat {

// The strictification of a spatial base model: 1- and 2-morphisms become
// composable strings of signed basics, the duality operations become strict
// involutions on strings, and 3-morphisms are carried by their evaluations
// in the base. Evaluation e is strictly compatible with both compositions;
// its only coherence data are the cells iota (for the Gray product), chi
// (for the hash dual) and xi (for the star dual).
template <class M>
class Strict {
public:
  using One = typename M::One;
  using Two = typename M::Two;
  using Three = typename M::Three;
  using Obj = typename M::Obj;

  struct SOne {
    Obj src_obj{}, tgt_obj{};
    std::vector<std::pair<One, int>> word; // box order, leftmost factor first
    friend bool operator==(const SOne& a, const SOne& b) {
      return a.word == b.word && a.src_obj == b.src_obj && a.tgt_obj == b.tgt_obj;
    }
    friend bool operator!=(const SOne& a, const SOne& b) { return !(a == b); }
  };

  struct Basic2 {
    SOne src, tgt;
    Two a{};
    int z = 1;
    friend bool operator==(const Basic2& x, const Basic2& y) {
      return x.src == y.src && x.tgt == y.tgt && x.a == y.a && x.z == y.z;
    }
    friend bool operator!=(const Basic2& x, const Basic2& y) { return !(x == y); }
  };

  struct STwo {
    SOne src, tgt;
    std::vector<Basic2> word; // composition order, first applied first
    friend bool operator==(const STwo& x, const STwo& y) {
      return x.src == y.src && x.tgt == y.tgt && x.word == y.word;
    }
    friend bool operator!=(const STwo& x, const STwo& y) { return !(x == y); }
  };

  struct SThree {
    STwo src, tgt;
    Three base{};
  };

  explicit Strict(const M& base, uint64_t spatial_budget = 4096, uint64_t seed = 7)
      : m(base), cn(base) {
    auto rep = check_laws(m, Suite::Spatial, spatial_budget, seed);
    std::optional<std::string> witness;
    if (!rep.pass()) {
      for (const auto& l : rep.laws)
        if (!l.failures.empty()) witness = l.failures[0];
    } else {
      // the strict star needs the spatial identity on every 2-morphism the
      // string calculus can reach, not only the standard enumeration
      const auto& broad = m.sample_twos_broad();
      SplitMix64 rng(seed);
      uint64_t n = std::min<uint64_t>(broad.size(), spatial_budget);
      for (uint64_t i = 0; i < n && !witness; ++i) {
        const auto& nu = broad.size() <= spatial_budget
                             ? broad[size_t(i)]
                             : broad[size_t(rng.below(broad.size()))];
        auto lhs = eval_term(m, cn.delta(nu));
        auto rhs = m.star(eval_term(m, cn.delta(m.star(nu))));
        if (!m.eq(lhs, rhs)) witness = m.describe(nu);
      }
    }
    if (witness)
      throw TypeError("strictification requires a spatial base model; witness: " + *witness);
  }

  const M& m;
  Canon<M> cn;

  // ---- construction --------------------------------------------------------

  SOne empty_one(const Obj& a) const { return SOne{a, a, {}}; }

  SOne one_string(std::vector<std::pair<One, int>> word) const {
    if (word.empty()) return empty_one(Obj{});
    SOne s;
    s.word = std::move(word);
    s.tgt_obj = m.tgt(eval_basic1(s.word.front()));
    s.src_obj = m.src(eval_basic1(s.word.back()));
    for (size_t i = 0; i + 1 < s.word.size(); ++i)
      if (!(m.src(eval_basic1(s.word[i])) == m.tgt(eval_basic1(s.word[i + 1]))))
        throw TypeError("strict: 1-morphism string not composable");
    return s;
  }

  One eval_basic1(const std::pair<One, int>& b) const {
    return b.second == 1 ? b.first : m.hash(b.first);
  }

  One eval(const SOne& f) const {
    if (f.word.empty()) return m.id_one(f.src_obj);
    One acc = eval_basic1(f.word.front());
    for (size_t i = 1; i < f.word.size(); ++i) acc = m.box(acc, eval_basic1(f.word[i]));
    return acc;
  }

  Basic2 basic2(SOne src, SOne tgt, Two a, int z) const {
    Basic2 b{std::move(src), std::move(tgt), std::move(a), z};
    if (z == 1) {
      if (!(m.src(b.a) == eval(b.src)) || !(m.tgt(b.a) == eval(b.tgt)))
        throw TypeError("strict: basic 2-morphism does not match its string endpoints");
    } else {
      if (!(m.src(b.a) == m.hash(eval(b.tgt))) || !(m.tgt(b.a) == m.hash(eval(b.src))))
        throw TypeError("strict: reversed basic 2-morphism does not match its endpoints");
    }
    return b;
  }

  STwo empty_two(const SOne& f) const { return STwo{f, f, {}}; }

  STwo two_string(std::vector<Basic2> word) const {
    if (word.empty()) throw TypeError("strict: empty 2-string needs an anchor");
    STwo s;
    s.src = word.front().src;
    s.tgt = word.back().tgt;
    for (size_t i = 0; i + 1 < word.size(); ++i)
      if (!(word[i].tgt == word[i + 1].src))
        throw TypeError("strict: 2-morphism string not composable");
    s.word = std::move(word);
    return s;
  }

  Two eval_basic2(const Basic2& b) const {
    return b.z == 1 ? b.a : hash_two(m, b.a);
  }

  Two eval(const STwo& t) const {
    Two acc = m.id_two(eval(t.src));
    for (const auto& b : t.word) acc = m.hcomp(eval_basic2(b), acc);
    return acc;
  }

  SThree three(STwo src, STwo tgt, Three base) const {
    if (!(m.src(base) == eval(src)) || !(m.tgt(base) == eval(tgt)))
      throw TypeError("strict: 3-morphism base does not match the string boundaries");
    return SThree{std::move(src), std::move(tgt), std::move(base)};
  }

  Three eval(const SThree& t) const { return t.base; }

  // ---- compositions --------------------------------------------------------

  SOne box(const SOne& f, const SOne& g) const {
    if (!(f.src_obj == g.tgt_obj)) throw TypeError("strict: 1-strings not box composable");
    SOne r;
    r.src_obj = g.src_obj;
    r.tgt_obj = f.tgt_obj;
    r.word = f.word;
    r.word.insert(r.word.end(), g.word.begin(), g.word.end());
    return r;
  }

  Basic2 whisk_l(const SOne& f, const Basic2& b) const {
    Basic2 r;
    r.src = box(f, b.src);
    r.tgt = box(f, b.tgt);
    if (b.z == 1) {
      r.a = m.whisk_l(eval(f), b.a);
      r.z = 1;
    } else {
      r.a = m.whisk_r(b.a, m.hash(eval(f)));
      r.z = -1;
    }
    return r;
  }

  Basic2 whisk_r(const Basic2& b, const SOne& g) const {
    Basic2 r;
    r.src = box(b.src, g);
    r.tgt = box(b.tgt, g);
    if (b.z == 1) {
      r.a = m.whisk_r(b.a, eval(g));
      r.z = 1;
    } else {
      r.a = m.whisk_l(m.hash(eval(g)), b.a);
      r.z = -1;
    }
    return r;
  }

  STwo whisk_l(const SOne& f, const STwo& t) const {
    STwo r;
    r.src = box(f, t.src);
    r.tgt = box(f, t.tgt);
    for (const auto& b : t.word) r.word.push_back(whisk_l(f, b));
    return r;
  }

  STwo whisk_r(const STwo& t, const SOne& g) const {
    STwo r;
    r.src = box(t.src, g);
    r.tgt = box(t.tgt, g);
    for (const auto& b : t.word) r.word.push_back(whisk_r(b, g));
    return r;
  }

  STwo hcomp(const STwo& x, const STwo& y) const {
    if (!(y.tgt == x.src)) throw TypeError("strict: 2-strings not composable");
    STwo r;
    r.src = y.src;
    r.tgt = x.tgt;
    r.word = y.word;
    r.word.insert(r.word.end(), x.word.begin(), x.word.end());
    return r;
  }

  STwo box(const STwo& a, const STwo& b) const {
    return hcomp(whisk_r(a, b.tgt), whisk_l(a.src, b));
  }

  SThree vcomp(const SThree& x, const SThree& y) const {
    if (!(y.tgt == x.src)) throw TypeError("strict: 3-cells not vertically composable");
    return SThree{y.src, x.tgt, m.vcomp(x.base, y.base)};
  }

  SThree hcomp(const SThree& x, const SThree& y) const {
    return SThree{hcomp(x.src, y.src), hcomp(x.tgt, y.tgt), m.hcomp(x.base, y.base)};
  }

  SThree id3(const STwo& t) const { return SThree{t, t, m.id_three(eval(t))}; }

  // ---- coherence cells -----------------------------------------------------

  // iota_{alpha,K} : e(alpha) box e(K) => e(alpha box K)
  Three iota_r(const STwo& t, const SOne& k) const {
    One ek = eval(k);
    Three acc = m.id_three(m.whisk_r(m.id_two(eval(t.src)), ek));
    for (const auto& b : t.word) acc = m.hcomp(iota_basic_r(b, ek), acc);
    return acc;
  }

  Three iota_basic_r(const Basic2& b, const One& ek) const {
    if (b.z == 1) return m.id_three(m.whisk_r(b.a, ek));
    One hk = m.hash(ek);
    auto shift = box3(m, m.id_three(hash_two(m, b.a)), eval_term(m, cn.phi_f(hk)));
    return m.vcomp(eval_term(m, cn.kappa(m.id_two(hk), b.a)), shift);
  }

  // iota_{L,alpha} : e(L) box e(alpha) => e(L box alpha)
  Three iota_l(const SOne& l, const STwo& t) const {
    One el = eval(l);
    Three acc = m.id_three(m.whisk_l(el, m.id_two(eval(t.src))));
    for (const auto& b : t.word) acc = m.hcomp(iota_basic_l(el, b), acc);
    return acc;
  }

  Three iota_basic_l(const One& el, const Basic2& b) const {
    if (b.z == 1) return m.id_three(m.whisk_l(el, b.a));
    One hl = m.hash(el);
    auto shift = box3(m, eval_term(m, cn.phi_f(hl)), m.id_three(hash_two(m, b.a)));
    return m.vcomp(eval_term(m, cn.kappa(b.a, m.id_two(hl))), shift);
  }

  // Gray product of strict 3-cells via the iota conjugation
  SThree box(const SThree& x, const SThree& y) const {
    const STwo& al = x.src;
    const STwo& alp = x.tgt;
    const STwo& be = y.src;
    const STwo& bep = y.tgt;
    const SOne& F = al.src;
    const SOne& K = be.tgt;
    Three up = m.hcomp(iota_r(alp, K), iota_l(F, bep));
    Three down = m.hcomp(iota_r(al, K), iota_l(F, be));
    Three inv = must_invert(down, "iota");
    return SThree{box(al, be), box(alp, bep),
                  m.vcomp(up, m.vcomp(box3(m, x.base, y.base), inv))};
  }

  SThree whisk_r(const SThree& x, const SOne& k) const {
    Three up = iota_r(x.tgt, k);
    Three down = must_invert(iota_r(x.src, k), "iota");
    return SThree{whisk_r(x.src, k), whisk_r(x.tgt, k),
                  m.vcomp(up, m.vcomp(m.whisk_r(x.base, eval(k)), down))};
  }

  SThree whisk_l(const SOne& l, const SThree& x) const {
    Three up = iota_l(l, x.tgt);
    Three down = must_invert(iota_l(l, x.src), "iota");
    return SThree{whisk_l(l, x.src), whisk_l(l, x.tgt),
                  m.vcomp(up, m.vcomp(m.whisk_l(eval(l), x.base), down))};
  }

  // tensorator of the strictification
  SThree sigma(const STwo& a, const STwo& b) const {
    const SOne& F = a.src;
    const SOne& G = a.tgt;
    const SOne& H = b.src;
    const SOne& K = b.tgt;
    Three up = m.hcomp(iota_l(G, b), iota_r(a, H));
    Three down = must_invert(m.hcomp(iota_r(a, K), iota_l(F, b)), "iota");
    return SThree{hcomp(whisk_r(a, K), whisk_l(F, b)),
                  hcomp(whisk_l(G, b), whisk_r(a, H)),
                  m.vcomp(up, m.vcomp(m.sigma(eval(a), eval(b)), down))};
  }

  // chi_{alpha} : #e(alpha) => e(#alpha)
  Three chi(const STwo& t) const {
    if (t.word.empty()) return eval_term(m, cn.phi_f_inv(eval(t.src)));
    Three acc = chi_basic(t.word.front());
    std::vector<Two> mus = {eval_basic2(t.word.front())};
    for (size_t i = 1; i < t.word.size(); ++i) {
      acc = m.hcomp(acc, chi_basic(t.word[i]));
      mus.push_back(eval_basic2(t.word[i]));
    }
    return m.vcomp(acc, must_invert(phi_chain(mus), "phi chain"));
  }

  Three chi_basic(const Basic2& b) const {
    if (b.z == 1) return m.id_three(hash_two(m, b.a));
    return eval_term(m, cn.theta(b.a));
  }

  // Phi_{mu_1,...,mu_n} : #mu_1 o ... o #mu_n => #(mu_n o ... o mu_1)
  Three phi_chain(const std::vector<Two>& mus) const {
    if (mus.empty()) throw TypeError("strict: empty phi chain");
    if (mus.size() == 1) return m.id_three(hash_two(m, mus[0]));
    std::vector<Two> rest(mus.begin() + 1, mus.end());
    Two tail = rest[0];
    for (size_t i = 1; i < rest.size(); ++i) tail = m.hcomp(rest[i], tail);
    Three inner = m.hcomp(m.id_three(hash_two(m, mus[0])), phi_chain(rest));
    return m.vcomp(eval_term(m, cn.phi_comp(mus[0], tail)), inner);
  }

  // xi_{alpha} : *e(alpha) => e(*alpha)
  Three xi(const STwo& t) const {
    if (t.word.empty()) return m.id_three(m.id_two(eval(t.src)));
    Three acc = xi_basic(t.word.front());
    for (size_t i = 1; i < t.word.size(); ++i) acc = m.hcomp(acc, xi_basic(t.word[i]));
    return acc;
  }

  Three xi_basic(const Basic2& b) const {
    if (b.z == 1) return m.id_three(m.star(b.a));
    return must_invert(eval_term(m, cn.delta(m.star(b.a))), "delta");
  }

  // ---- the strict duality functors -----------------------------------------

  SOne hash(const SOne& f) const {
    SOne r;
    r.src_obj = f.tgt_obj;
    r.tgt_obj = f.src_obj;
    for (auto it = f.word.rbegin(); it != f.word.rend(); ++it)
      r.word.emplace_back(it->first, -it->second);
    return r;
  }

  Basic2 hash(const Basic2& b) const {
    return Basic2{hash(b.tgt), hash(b.src), b.a, -b.z};
  }

  STwo hash(const STwo& t) const {
    STwo r;
    r.src = hash(t.tgt);
    r.tgt = hash(t.src);
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) r.word.push_back(hash(*it));
    return r;
  }

  SThree hash(const SThree& x) const {
    Three base = m.vcomp(chi(x.tgt), m.vcomp(hash_three(m, x.base),
                                             must_invert(chi(x.src), "chi")));
    return SThree{hash(x.src), hash(x.tgt), base};
  }

  SOne star(const SOne& f) const { return f; }

  Basic2 star(const Basic2& b) const {
    return Basic2{b.tgt, b.src, m.star(b.a), b.z};
  }

  STwo star(const STwo& t) const {
    STwo r;
    r.src = t.tgt;
    r.tgt = t.src;
    for (auto it = t.word.rbegin(); it != t.word.rend(); ++it) r.word.push_back(star(*it));
    return r;
  }

  SThree star(const SThree& x) const {
    Three base = m.vcomp(xi(x.src), m.vcomp(m.star(x.base), must_invert(xi(x.tgt), "xi")));
    return SThree{star(x.tgt), star(x.src), base};
  }

  // ---- duals data: folds, cusps, caps ---------------------------------------

  // recursive fold string, built so the box-splitting axiom holds exactly
  STwo eta(const SOne& f) const {
    if (f.word.empty()) return empty_two(f);
    SOne head = one_string({f.word.front()});
    SOne rest = f;
    rest.word.erase(rest.word.begin());
    rest.tgt_obj = m.src(eval_basic1(f.word.front()));
    if (rest.word.empty()) rest.src_obj = rest.tgt_obj;
    Basic2 headEta = basic2(empty_one(head.tgt_obj), box(head, hash(head)),
                            m.eta(eval(head)), 1);
    if (rest.word.empty()) return two_string({headEta});
    STwo inner = eta(rest);
    return hcomp(whisk_r(whisk_l(head, inner), hash(head)), two_string({headEta}));
  }

  STwo eta_star(const SOne& f) const { return star(eta(f)); }

  SThree tri(const SOne& f) const {
    STwo src = hcomp(whisk_r(eta_star(f), f), whisk_l(f, eta(hash(f))));
    if (f.word.empty())
      return SThree{src, empty_two(f), m.id_three(m.id_two(m.id_one(f.src_obj)))};
    if (f.word.size() == 1)
      return SThree{src, empty_two(f), m.tri(eval_basic1(f.word.front()))};
    SOne head = one_string({f.word.front()});
    SOne rest = f;
    rest.word.erase(rest.word.begin());
    rest.tgt_obj = m.src(eval_basic1(f.word.front()));
    SThree cusps = hcomp(whisk_r(tri(head), rest), whisk_l(head, tri(rest)));
    SThree braid = hcomp(
        id3(whisk_r(whisk_r(eta_star(head), head), rest)),
        hcomp(sigma(whisk_l(head, eta_star(rest)), whisk_r(eta(hash(head)), rest)),
              id3(whisk_l(box(head, rest), eta(hash(rest))))));
    return vcomp(cusps, braid);
  }

  SThree eps(const STwo& t) const {
    Three base = m.vcomp(m.hcomp(m.id_three(eval(t)), xi(t)), m.eps(eval(t)));
    return SThree{empty_two(t.tgt), hcomp(t, star(t)), base};
  }

  SThree eps_star(const STwo& t) const { return star(eps(t)); }

  // ---- embedding -----------------------------------------------------------

  SOne embed(const One& f) const { return one_string({{f, 1}}); }
  STwo embed2(const Two& a) const {
    return two_string({basic2(embed(m.src(a)), embed(m.tgt(a)), a, 1)});
  }
  SThree embed3(const Three& g) const {
    return SThree{embed2(m.src(g)), embed2(m.tgt(g)), g};
  }

private:
  Three must_invert(const Three& t, const char* what) const {
    auto inv = m.try_inverse(t);
    if (!inv) throw TypeError(std::string("strict: non-invertible ") + what + " cell");
    return *inv;
  }
};

// ---------------------------------------------------------------------------
// Sampling and the verification report for the strictified duals.

template <class M>
struct StrictSampler {
  using S = Strict<M>;
  const S& s;
  const M& m;
  // returns a model 2-morphism between the given 1-morphisms, if any
  std::function<std::optional<typename M::Two>(const typename M::One&,
                                               const typename M::One&, SplitMix64&)>
      two_between;

  typename S::SOne random_one(SplitMix64& rng, int max_len) const {
    const auto& ones = m.sample_ones();
    int len = int(rng.below(uint64_t(max_len + 1)));
    std::vector<std::pair<typename M::One, int>> w;
    for (int i = 0; i < len; ++i)
      w.emplace_back(ones[size_t(rng.below(ones.size()))], rng.below(2) ? 1 : -1);
    if (w.empty()) return s.empty_one(typename M::Obj{});
    return s.one_string(std::move(w));
  }

  std::optional<typename S::Basic2> random_basic(const typename S::SOne& from,
                                                 const typename S::SOne& to,
                                                 SplitMix64& rng) const {
    int z = rng.below(2) ? 1 : -1;
    std::optional<typename M::Two> a;
    if (z == 1)
      a = two_between(s.eval(from), s.eval(to), rng);
    else
      a = two_between(m.hash(s.eval(to)), m.hash(s.eval(from)), rng);
    if (!a) return std::nullopt;
    return s.basic2(from, to, *a, z);
  }

  typename S::STwo random_two(SplitMix64& rng, int max_len, int max_word) const {
    for (int attempt = 0; attempt < 64; ++attempt) {
      auto cur = random_one(rng, max_len);
      int len = int(rng.below(uint64_t(max_word + 1)));
      std::vector<typename S::Basic2> w;
      bool ok = true;
      for (int i = 0; i < len; ++i) {
        auto to = rng.below(2) ? cur : random_one(rng, max_len);
        auto b = random_basic(cur, to, rng);
        if (!b) b = random_basic(cur, cur, rng);
        if (!b) { ok = false; break; }
        w.push_back(*b);
        cur = w.back().tgt;
      }
      if (!ok) continue;
      if (w.empty()) return s.empty_two(cur);
      return s.two_string(std::move(w));
    }
    throw TypeError("strict sampler: could not build a 2-string");
  }
};

template <class M>
SuiteReport strict_duals_check(const Strict<M>& s, const StrictSampler<M>& gen,
                               uint64_t samples, uint64_t seed) {
  const M& m = s.m;
  SuiteReport rep;
  rep.suite = "strict-duals";

  auto law = [&](const std::string& name, const std::string& ref, auto&& body) {
    LawResult r;
    r.name = name;
    r.ref = ref;
    SplitMix64 rng(seed ^ std::hash<std::string>{}(name));
    for (uint64_t i = 0; i < samples; ++i) {
      try {
        auto fail = body(rng);
        r.instances++;
        if (fail && r.failures.empty()) {
          r.failures.push_back(*fail);
          break;
        }
      } catch (const std::exception& e) {
        r.instances++;
        r.failures.push_back(std::string("exception: ") + e.what());
        break;
      }
    }
    rep.laws.push_back(std::move(r));
  };

  using R = std::optional<std::string>;

  law("hash-involution", "the strict hash squares to the identity",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 3, 2);
        if (!(s.hash(s.hash(a)) == a)) return std::string("2-string");
        auto f = gen.random_one(rng, 4);
        if (!(s.hash(s.hash(f)) == f)) return std::string("1-string");
        auto psi = s.id3(a);
        auto h2v = s.hash(s.hash(psi));
        if (!m.eq(h2v.base, psi.base)) return std::string("3-cell base");
        return std::nullopt;
      });

  law("star-involution", "the strict star squares to the identity",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 3, 2);
        if (!(s.star(s.star(a)) == a)) return std::string("2-string");
        auto psi = s.id3(a);
        auto v = s.star(s.star(psi));
        if (!m.eq(v.base, psi.base)) return std::string("3-cell base");
        return std::nullopt;
      });

  law("rotation-involution", "star-hash-star-hash is the identity",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 3, 2);
        if (!(s.star(s.hash(s.star(s.hash(a)))) == a)) return std::string("2-string");
        auto psi = s.id3(a);
        auto v = s.star(s.hash(s.star(s.hash(psi))));
        if (!m.eq(v.base, psi.base)) return std::string("3-cell base");
        return std::nullopt;
      });

  law("section", "evaluation retracts the embedding",
      [&](SplitMix64& rng) -> R {
        const auto& twos = m.sample_twos();
        const auto& threes = m.sample_threes();
        auto a = twos[size_t(rng.below(twos.size()))];
        if (!(s.eval(s.embed2(a)) == a)) return m.describe(a);
        auto g = threes[size_t(rng.below(threes.size()))];
        if (!m.eq(s.eval(s.embed3(g)), g)) return m.describe(g);
        return std::nullopt;
      });

  law("iota-multiplicative", "iota cells compose along 2-strings",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 2, 2);
        auto bsrc = a.tgt;
        typename Strict<M>::STwo b = s.empty_two(bsrc);
        auto nb = gen.random_basic(bsrc, bsrc, rng);
        if (nb) b = s.two_string({*nb});
        auto k = gen.random_one(rng, 2);
        auto lhs = s.iota_r(s.hcomp(b, a), k);
        auto rhs = m.hcomp(s.iota_r(b, k), s.iota_r(a, k));
        if (!m.eq(lhs, rhs)) return std::string("iota split");
        return std::nullopt;
      });

  law("chi-multiplicative", "chi cells compose through the laxity chain",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 2, 2);
        typename Strict<M>::STwo b = s.empty_two(a.tgt);
        auto nb = gen.random_basic(a.tgt, a.tgt, rng);
        if (nb) b = s.two_string({*nb});
        auto ab = s.hcomp(b, a);
        if (ab.word.empty()) return std::nullopt;
        auto lhs = s.chi(ab);
        std::vector<typename M::Two> mus;
        for (const auto& w : ab.word) mus.push_back(s.eval_basic2(w));
        auto inv = m.try_inverse(s.phi_chain(mus));
        if (!inv) return std::string("phi chain not invertible");
        typename M::Three chis = s.chi_basic(ab.word.front());
        for (size_t i = 1; i < ab.word.size(); ++i)
          chis = m.hcomp(chis, s.chi_basic(ab.word[i]));
        auto rhs = m.vcomp(chis, *inv);
        if (!m.eq(lhs, rhs)) return std::string("chi split");
        return std::nullopt;
      });

  law("theta-reconstruction", "the double-hash cell from the chi cells",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 2, 2);
        auto lhs = eval_term(m, s.cn.theta(s.eval(a)));
        auto rhs = m.vcomp(s.chi(s.hash(a)), hash_three(m, s.chi(a)));
        if (!m.eq(lhs, rhs)) return std::string("theta split");
        return std::nullopt;
      });

  law("fold-splitting", "the strict fold satisfies the box axiom at every split",
      [&](SplitMix64& rng) -> R {
        auto f = gen.random_one(rng, 4);
        for (size_t cut = 0; cut <= f.word.size(); ++cut) {
          typename Strict<M>::SOne a = f, b = f;
          a.word.assign(f.word.begin(), f.word.begin() + long(cut));
          b.word.assign(f.word.begin() + long(cut), f.word.end());
          if (!a.word.empty()) a.src_obj = m.src(s.eval_basic1(a.word.back()));
          else a.src_obj = f.tgt_obj;
          a.tgt_obj = f.tgt_obj;
          if (!b.word.empty()) b.tgt_obj = m.tgt(s.eval_basic1(b.word.front()));
          else b.tgt_obj = a.src_obj;
          b.src_obj = f.src_obj;
          if (cut == 0 || cut == f.word.size()) continue;
          auto lhs = s.eta(s.box(a, b));
          auto rhs = s.hcomp(s.whisk_r(s.whisk_l(a, s.eta(b)), s.hash(a)), s.eta(a));
          if (!(lhs == rhs)) return std::string("fold split");
        }
        return std::nullopt;
      });

  law("cusp-splitting", "the strict triangulator satisfies the box axiom",
      [&](SplitMix64& rng) -> R {
        auto f = gen.random_one(rng, 3);
        for (size_t cut = 1; cut < f.word.size(); ++cut) {
          typename Strict<M>::SOne a = f, b = f;
          a.word.assign(f.word.begin(), f.word.begin() + long(cut));
          b.word.assign(f.word.begin() + long(cut), f.word.end());
          a.src_obj = m.src(s.eval_basic1(a.word.back()));
          a.tgt_obj = f.tgt_obj;
          b.tgt_obj = m.tgt(s.eval_basic1(b.word.front()));
          b.src_obj = f.src_obj;
          auto lhs = s.tri(s.box(a, b));
          auto cusps = s.hcomp(s.whisk_r(s.tri(a), b), s.whisk_l(a, s.tri(b)));
          auto braid = s.hcomp(
              s.id3(s.whisk_r(s.whisk_r(s.eta_star(a), a), b)),
              s.hcomp(s.sigma(s.whisk_l(a, s.eta_star(b)), s.whisk_r(s.eta(s.hash(a)), b)),
                      s.id3(s.whisk_l(s.box(a, b), s.eta(s.hash(b))))));
          auto rhs = s.vcomp(cusps, braid);
          if (!(lhs.src == rhs.src) || !(lhs.tgt == rhs.tgt))
            return std::string("cusp split boundaries");
          if (!m.eq(lhs.base, rhs.base)) return std::string("cusp split base");
        }
        return std::nullopt;
      });

  law("triangulator-axiom", "the swallowtail relation in the strictification",
      [&](SplitMix64& rng) -> R {
        auto f = gen.random_one(rng, 3);
        auto fh = s.hash(f);
        auto etaFs = s.eta_star(f);
        auto lhs = s.vcomp(
            s.hcomp(s.id3(etaFs), s.whisk_r(s.tri(f), fh)),
            s.vcomp(s.hcomp(s.sigma(etaFs, etaFs),
                            s.id3(s.whisk_r(s.whisk_l(f, s.eta(fh)), fh))),
                    s.hcomp(s.id3(etaFs), s.whisk_l(f, s.star(s.tri(fh))))));
        if (!(lhs.src == etaFs) || !(lhs.tgt == etaFs))
          return std::string("swallowtail boundaries");
        if (!m.eq(lhs.base, m.id_three(s.eval(etaFs)))) return std::string("swallowtail base");
        return std::nullopt;
      });

  law("snake", "caps and cups of strict 2-strings cancel",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 2, 2);
        auto as = s.star(a);
        auto z1 = s.vcomp(s.hcomp(s.id3(a), s.eps_star(as)),
                          s.hcomp(s.eps(a), s.id3(a)));
        if (!(z1.src == a) || !(z1.tgt == a)) return std::string("snake boundaries");
        if (!m.eq(z1.base, m.id_three(s.eval(a)))) return std::string("snake base");
        return std::nullopt;
      });

  law("hash-of-cap", "the strict hash fixes caps up to the rotation",
      [&](SplitMix64& rng) -> R {
        auto a = gen.random_two(rng, 2, 2);
        auto lhs = s.hash(s.eps(a));
        auto rhs = s.eps(s.star(s.hash(a)));
        if (!(lhs.src == rhs.src) || !(lhs.tgt == rhs.tgt))
          return std::string("cap boundaries");
        if (!m.eq(lhs.base, rhs.base)) return std::string("cap base");
        return std::nullopt;
      });

  law("basic-cusp", "on basic strings the triangulator evaluates to the base cusp",
      [&](SplitMix64& rng) -> R {
        const auto& ones = m.sample_ones();
        auto f = ones[size_t(rng.below(ones.size()))];
        auto sf = s.embed(f);
        if (!m.eq(s.tri(sf).base, m.tri(f))) return m.describe(f);
        auto e0 = s.empty_one(typename M::Obj{});
        if (!(s.eta(e0) == s.empty_two(e0))) return std::string("empty fold");
        return std::nullopt;
      });

  return rep;
}

} // namespace graycat
