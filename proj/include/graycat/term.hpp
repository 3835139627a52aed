#pragma once

#include <memory>
#include <string>
#include <vector>

#include "graycat/errors.hpp"

namespace graycat {

// Requirements on a model type M (checked structurally at use):
//   types    Obj, One, Two, Three, all regular with operator==
//   typing   src/tgt at every level, id_one/id_two/id_three
//   ops      box (1,1), whisk_l/whisk_r (1 with 2 and 3), hcomp (2,2 and 3,3),
//            vcomp (3,3), sigma/sigma_inv, star (2 and 3), eps/eps_star,
//            hash (1), eta/eta_star, tri/tri_inv/tri_star/tri_star_inv,
//            eq (2 and 3)
// Composition failures must raise TypeError.

// ---------------------------------------------------------------------------
// Terms denoting 2-morphisms of a model.
template <class M>
class TwoTerm {
public:
  enum class Kind { Gen2, Id2, Eta, EtaStar, HComp, WhiskL, WhiskR, Star, Hash };

  static TwoTerm gen(typename M::Two v) { return make(Kind::Gen2, {}, std::move(v), {}); }
  static TwoTerm id(typename M::One f) { return make(Kind::Id2, {}, {}, std::move(f)); }
  static TwoTerm eta(typename M::One f) { return make(Kind::Eta, {}, {}, std::move(f)); }
  static TwoTerm eta_star(typename M::One f) { return make(Kind::EtaStar, {}, {}, std::move(f)); }
  static TwoTerm hcomp(TwoTerm a, TwoTerm b) { return make(Kind::HComp, {a.node_, b.node_}, {}, {}); }
  static TwoTerm whisk_l(typename M::One f, TwoTerm t) { return make(Kind::WhiskL, {t.node_}, {}, std::move(f)); }
  static TwoTerm whisk_r(TwoTerm t, typename M::One f) { return make(Kind::WhiskR, {t.node_}, {}, std::move(f)); }
  static TwoTerm star(TwoTerm t) { return make(Kind::Star, {t.node_}, {}, {}); }
  static TwoTerm hash(TwoTerm t) { return make(Kind::Hash, {t.node_}, {}, {}); }

  Kind kind() const { return node_->kind; }

private:
  struct Node {
    Kind kind;
    std::vector<std::shared_ptr<const Node>> kids;
    typename M::Two two{};
    typename M::One one{};
  };

  static TwoTerm make(Kind k, std::vector<std::shared_ptr<const Node>> kids,
                      typename M::Two two, typename M::One one) {
    TwoTerm t;
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    n->two = std::move(two);
    n->one = std::move(one);
    t.node_ = std::move(n);
    return t;
  }

  std::shared_ptr<const Node> node_;

  template <class MM> friend typename MM::Two eval2_node(const MM&, const TwoTerm<MM>&, std::string&);
};

// The canonical #-dual of a 2-morphism, obtained from the defining expansion
//   #nu = (F^# box eta_G^*) o (F^# box nu box G^#) o (eta_{F^#} box G^#).
template <class M>
typename M::Two hash_two(const M& m, const typename M::Two& nu) {
  auto F = m.src(nu);
  auto G = m.tgt(nu);
  auto Fh = m.hash(F);
  auto Gh = m.hash(G);
  return m.hcomp(m.whisk_l(Fh, m.eta_star(G)),
                 m.hcomp(m.whisk_r(m.whisk_l(Fh, nu), Gh),
                         m.whisk_r(m.eta(Fh), Gh)));
}

// Same expansion one level up:
//   #Phi = 1 o (F^# box Phi box G^#) o 1.
template <class M>
typename M::Three hash_three(const M& m, const typename M::Three& t) {
  auto F = m.src(m.src(t));
  auto G = m.tgt(m.src(t));
  auto Fh = m.hash(F);
  auto Gh = m.hash(G);
  return m.hcomp(m.id_three(m.whisk_l(Fh, m.eta_star(G))),
                 m.hcomp(m.whisk_r(m.whisk_l(Fh, t), Gh),
                         m.id_three(m.whisk_r(m.eta(Fh), Gh))));
}

// Derived Gray products in the opcubical convention.
template <class M>
typename M::Two box2(const M& m, const typename M::Two& a, const typename M::Two& b) {
  return m.hcomp(m.whisk_r(a, m.tgt(b)), m.whisk_l(m.src(a), b));
}
template <class M>
typename M::Three box3(const M& m, const typename M::Three& a, const typename M::Three& b) {
  return m.hcomp(m.whisk_r(a, m.tgt(m.src(b))), m.whisk_l(m.src(m.src(a)), b));
}

template <class M>
typename M::Two eval2_node(const M& m, const TwoTerm<M>& t, std::string& path) {
  using K = typename TwoTerm<M>::Kind;
  const auto& n = *t.node_;
  auto recur = [&](size_t i, const char* seg) {
    path += seg;
    TwoTerm<M> kid;
    kid.node_ = n.kids[i];
    auto v = eval2_node(m, kid, path);
    path.resize(path.size() - std::string(seg).size());
    return v;
  };
  switch (n.kind) {
    case K::Gen2: return n.two;
    case K::Id2: return m.id_two(n.one);
    case K::Eta: return m.eta(n.one);
    case K::EtaStar: return m.eta_star(n.one);
    case K::HComp: {
      auto a = recur(0, "/hcomp.left");
      auto b = recur(1, "/hcomp.right");
      try {
        return m.hcomp(a, b);
      } catch (const TypeError& e) {
        throw TypeError(std::string(e.what()) + "\n  at term path " + (path.empty() ? "/" : path));
      }
    }
    case K::WhiskL: return m.whisk_l(n.one, recur(0, "/whiskl"));
    case K::WhiskR: return m.whisk_r(recur(0, "/whiskr"), n.one);
    case K::Star: return m.star(recur(0, "/star"));
    case K::Hash: return hash_two(m, recur(0, "/hash"));
  }
  throw std::logic_error("eval2: bad node");
}

template <class M>
typename M::Two eval2(const M& m, const TwoTerm<M>& t) {
  std::string path;
  return eval2_node(m, t, path);
}

// ---------------------------------------------------------------------------
// Terms denoting 3-morphisms of a model.
template <class M>
class ThreeTerm {
public:
  enum class Kind {
    Gen3, Id3, VComp, HComp, WhiskL, WhiskR, Sigma, SigmaInv, Star,
    Eps, EpsStar, Tri, TriInv, TriStar, TriStarInv
  };

  static ThreeTerm gen(typename M::Three v) { return make(Kind::Gen3, {}, std::move(v), {}, {}, {}); }
  static ThreeTerm id(typename M::Two mu) { return make(Kind::Id3, {}, {}, std::move(mu), {}, {}); }
  // a . b, b applied first
  static ThreeTerm vcomp(ThreeTerm a, ThreeTerm b) { return make(Kind::VComp, {a.node_, b.node_}, {}, {}, {}, {}); }
  // a o b, b on the source side
  static ThreeTerm hcomp(ThreeTerm a, ThreeTerm b) { return make(Kind::HComp, {a.node_, b.node_}, {}, {}, {}, {}); }
  static ThreeTerm whisk_l(typename M::One f, ThreeTerm t) { return make(Kind::WhiskL, {t.node_}, {}, {}, {}, std::move(f)); }
  static ThreeTerm whisk_r(ThreeTerm t, typename M::One f) { return make(Kind::WhiskR, {t.node_}, {}, {}, {}, std::move(f)); }
  static ThreeTerm sigma(typename M::Two mu, typename M::Two nu) { return make(Kind::Sigma, {}, {}, std::move(mu), std::move(nu), {}); }
  static ThreeTerm sigma_inv(typename M::Two mu, typename M::Two nu) { return make(Kind::SigmaInv, {}, {}, std::move(mu), std::move(nu), {}); }
  static ThreeTerm star(ThreeTerm t) { return make(Kind::Star, {t.node_}, {}, {}, {}, {}); }
  static ThreeTerm eps(typename M::Two mu) { return make(Kind::Eps, {}, {}, std::move(mu), {}, {}); }
  static ThreeTerm eps_star(typename M::Two mu) { return make(Kind::EpsStar, {}, {}, std::move(mu), {}, {}); }
  static ThreeTerm tri(typename M::One f) { return make(Kind::Tri, {}, {}, {}, {}, std::move(f)); }
  static ThreeTerm tri_inv(typename M::One f) { return make(Kind::TriInv, {}, {}, {}, {}, std::move(f)); }
  static ThreeTerm tri_star(typename M::One f) { return make(Kind::TriStar, {}, {}, {}, {}, std::move(f)); }
  static ThreeTerm tri_star_inv(typename M::One f) { return make(Kind::TriStarInv, {}, {}, {}, {}, std::move(f)); }

  Kind kind() const { return node_->kind; }

  // vertical chain c1 . c2 . ... . cn, rightmost applied first
  static ThreeTerm chain(std::vector<ThreeTerm> factors) {
    if (factors.empty()) throw std::invalid_argument("ThreeTerm::chain: empty");
    ThreeTerm acc = factors.back();
    for (size_t i = factors.size() - 1; i-- > 0;) acc = vcomp(factors[i], acc);
    return acc;
  }

private:
  struct Node {
    Kind kind;
    std::vector<std::shared_ptr<const Node>> kids;
    typename M::Three three{};
    typename M::Two two_a{};
    typename M::Two two_b{};
    typename M::One one{};
  };

  static ThreeTerm make(Kind k, std::vector<std::shared_ptr<const Node>> kids,
                        typename M::Three three, typename M::Two a, typename M::Two b,
                        typename M::One one) {
    ThreeTerm t;
    auto n = std::make_shared<Node>();
    n->kind = k;
    n->kids = std::move(kids);
    n->three = std::move(three);
    n->two_a = std::move(a);
    n->two_b = std::move(b);
    n->one = std::move(one);
    t.node_ = std::move(n);
    return t;
  }

  std::shared_ptr<const Node> node_;

  template <class MM> friend typename MM::Three eval_node(const MM&, const ThreeTerm<MM>&, std::string&);
};

template <class M>
typename M::Three eval_node(const M& m, const ThreeTerm<M>& t, std::string& path) {
  using K = typename ThreeTerm<M>::Kind;
  const auto& n = *t.node_;
  auto recur = [&](size_t i, const char* seg) {
    path += seg;
    ThreeTerm<M> kid;
    kid.node_ = n.kids[i];
    auto v = eval_node(m, kid, path);
    path.resize(path.size() - std::string(seg).size());
    return v;
  };
  auto rethrow = [&](const TypeError& e) -> typename M::Three {
    throw TypeError(std::string(e.what()) + "\n  at term path " + (path.empty() ? "/" : path));
  };
  switch (n.kind) {
    case K::Gen3: return n.three;
    case K::Id3: return m.id_three(n.two_a);
    case K::VComp: {
      auto a = recur(0, "/vcomp.upper");
      auto b = recur(1, "/vcomp.lower");
      try { return m.vcomp(a, b); } catch (const TypeError& e) { return rethrow(e); }
    }
    case K::HComp: {
      auto a = recur(0, "/hcomp.left");
      auto b = recur(1, "/hcomp.right");
      try { return m.hcomp(a, b); } catch (const TypeError& e) { return rethrow(e); }
    }
    case K::WhiskL: return m.whisk_l(n.one, recur(0, "/whiskl"));
    case K::WhiskR: return m.whisk_r(recur(0, "/whiskr"), n.one);
    case K::Sigma:
      try { return m.sigma(n.two_a, n.two_b); } catch (const TypeError& e) { return rethrow(e); }
    case K::SigmaInv:
      try { return m.sigma_inv(n.two_a, n.two_b); } catch (const TypeError& e) { return rethrow(e); }
    case K::Star: return m.star(recur(0, "/star"));
    case K::Eps: return m.eps(n.two_a);
    case K::EpsStar: return m.eps_star(n.two_a);
    case K::Tri: return m.tri(n.one);
    case K::TriInv: return m.tri_inv(n.one);
    case K::TriStar: return m.tri_star(n.one);
    case K::TriStarInv: return m.tri_star_inv(n.one);
  }
  throw std::logic_error("eval: bad node");
}

// Interpretation of a term in the model.
template <class M>
typename M::Three eval_term(const M& m, const ThreeTerm<M>& t) {
  std::string path;
  return eval_node(m, t, path);
}

// Structural source and target of a term's denotation.
template <class M>
typename M::Two src2(const M& m, const ThreeTerm<M>& t) {
  return m.src(eval_term(m, t));
}
template <class M>
typename M::Two tgt2(const M& m, const ThreeTerm<M>& t) {
  return m.tgt(eval_term(m, t));
}

} // namespace graycat
