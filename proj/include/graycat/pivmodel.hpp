#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "graycat/errors.hpp"
#include "graycat/group.hpp"

namespace graycat {

// The concrete Gray category with duals: decorated pivotal functors on the
// group category C_G.
//
//   objects      one per model instance, the category C_G with its pivotal
//                structure lambda
//   1-morphisms  pairs (F, c) of a lambda-preserving automorphism F and a
//                decoration c in G
//   2-morphisms  pseudo-natural transformations: a conjugating element h
//                with tgt.F = Ad_h src.F, plus a character chi of G
//   3-morphisms  modifications: a single scalar in Q(zeta_N), nonzero only
//                between 2-morphisms with equal (h, chi)
//
// All scalars live in the fixed order N = exponent(G), which contains the
// image of every character of G.
class PivModel {
public:
  enum class ChiMode { All, Trivial };

  struct Obj {
    int idx = 0;
    friend bool operator==(const Obj& a, const Obj& b) { return a.idx == b.idx; }
    friend bool operator!=(const Obj& a, const Obj& b) { return !(a == b); }
  };

  struct One {
    std::vector<uint8_t> perm;  // the automorphism F
    std::vector<uint8_t> iperm; // F^{-1}, kept alongside
    int c = 0;                  // decoration
    friend bool operator==(const One& a, const One& b) {
      return a.perm == b.perm && a.c == b.c;
    }
    friend bool operator!=(const One& a, const One& b) { return !(a == b); }
  };

  struct Two {
    One src1, tgt1;
    int h = 0;
    std::vector<int16_t> chi;   // chi(g) = zeta_N^{chi[g]}
    friend bool operator==(const Two& a, const Two& b) {
      return a.src1 == b.src1 && a.tgt1 == b.tgt1 && a.h == b.h && a.chi == b.chi;
    }
    friend bool operator!=(const Two& a, const Two& b) { return !(a == b); }
  };

  struct Three {
    Two src2, tgt2;
    Cyclotomic s;
    friend bool operator==(const Three& a, const Three& b) {
      return a.src2 == b.src2 && a.tgt2 == b.tgt2 && a.s == b.s;
    }
    friend bool operator!=(const Three& a, const Three& b) { return !(a == b); }
  };

  PivModel(FiniteGroup group, std::vector<int> lambda_exp_in_N,
           ChiMode mode = ChiMode::All, std::string spec_name = "")
      : group_(std::make_shared<FiniteGroup>(std::move(group))),
        chi_mode_(mode),
        name_(std::move(spec_name)) {
    N_ = group_->exponent();
    piv_ = PivotalStructure(*group_, N_, std::move(lambda_exp_in_N));
    build_enumerations();
  }

  const FiniteGroup& group() const { return *group_; }
  const PivotalStructure& pivotal() const { return piv_; }
  int scalar_order() const { return N_; }
  const std::string& name() const { return name_; }

  // ---- carriers -----------------------------------------------------------

  Obj object() const { return Obj{0}; }

  One unit_one() const {
    One u;
    int m = group_->order();
    u.perm.resize(size_t(m));
    u.iperm.resize(size_t(m));
    for (int i = 0; i < m; ++i) { u.perm[size_t(i)] = uint8_t(i); u.iperm[size_t(i)] = uint8_t(i); }
    u.c = group_->identity();
    return u;
  }

  One make_one(const std::vector<int>& perm, int c) const {
    One f;
    int m = group_->order();
    if (int(perm.size()) != m) throw TypeError("pivmodel: permutation size mismatch");
    for (int v : perm)
      if (v < 0 || v >= m) throw TypeError("pivmodel: permutation entry out of range");
    if (c < 0 || c >= m) throw TypeError("pivmodel: decoration out of range");
    f.perm.resize(size_t(m));
    f.iperm.resize(size_t(m));
    for (int i = 0; i < m; ++i) f.perm[size_t(i)] = uint8_t(perm[size_t(i)]);
    for (int i = 0; i < m; ++i) f.iperm[size_t(perm[size_t(i)])] = uint8_t(i);
    f.c = c;
    // validity: automorphism and compatibility with the pivotal structure
    GroupHom check(*group_, *group_, std::vector<int>(perm.begin(), perm.end()));
    for (int g = 0; g < m; ++g)
      if (piv_.lambda_exp[size_t(perm[size_t(g)])] != piv_.lambda_exp[size_t(g)])
        throw TypeError("pivmodel: automorphism does not preserve lambda");
    return f;
  }

  Two make_two(const One& a, const One& b, int h, std::vector<int16_t> chi) const {
    Two m;
    m.src1 = a;
    m.tgt1 = b;
    m.h = h;
    m.chi = std::move(chi);
    normalize_chi(m.chi);
    for (int g = 0; g < group_->order(); ++g)
      if (int(b.perm[size_t(g)]) != group_->mul(h, group_->mul(a.perm[size_t(g)], group_->inv(h))))
        throw TypeError("pivmodel: target is not Ad_h of source");
    check_chi_hom(m.chi);
    return m;
  }

  Three make_three(const Two& a, const Two& b, Cyclotomic s) const {
    if (!(a.src1 == b.src1) || !(a.tgt1 == b.tgt1))
      throw TypeError("pivmodel: 3-morphism endpoints not parallel");
    if (!s.is_zero() && !(a.h == b.h && a.chi == b.chi))
      throw TypeError("pivmodel: hom space is zero unless (h, chi) agree");
    return Three{a, b, std::move(s)};
  }

  // ---- sources and targets ------------------------------------------------

  Obj src(const One&) const { return object(); }
  Obj tgt(const One&) const { return object(); }
  One src(const Two& m) const { return m.src1; }
  One tgt(const Two& m) const { return m.tgt1; }
  Two src(const Three& t) const { return t.src2; }
  Two tgt(const Three& t) const { return t.tgt2; }

  // ---- identities ---------------------------------------------------------

  One id_one(const Obj&) const { return unit_one(); }
  Two id_two(const One& f) const {
    Two m;
    m.src1 = f;
    m.tgt1 = f;
    m.h = group_->identity();
    m.chi.assign(size_t(group_->order()), 0);
    return m;
  }
  Three id_three(const Two& m) const { return Three{m, m, Cyclotomic::one(N_)}; }

  // ---- compositions -------------------------------------------------------

  // Gray product of 1-morphisms, a after b: (H,d) box (F,c) = (HF, c . F^{-1}(d)).
  One box(const One& a, const One& b) const {
    One r;
    int m = group_->order();
    r.perm.resize(size_t(m));
    r.iperm.resize(size_t(m));
    for (int i = 0; i < m; ++i) r.perm[size_t(i)] = a.perm[size_t(b.perm[size_t(i)])];
    for (int i = 0; i < m; ++i) r.iperm[size_t(r.perm[size_t(i)])] = uint8_t(i);
    r.c = group_->mul(b.c, b.iperm[size_t(a.c)]);
    return r;
  }

  Two whisk_l(const One& f, const Two& m) const {
    Two r;
    r.src1 = box(f, m.src1);
    r.tgt1 = box(f, m.tgt1);
    r.h = f.perm[size_t(m.h)];
    r.chi = m.chi;
    return r;
  }

  Two whisk_r(const Two& m, const One& f) const {
    Two r;
    r.src1 = box(m.src1, f);
    r.tgt1 = box(m.tgt1, f);
    r.h = m.h;
    r.chi.resize(m.chi.size());
    for (size_t g = 0; g < r.chi.size(); ++g) r.chi[g] = m.chi[size_t(f.perm[g])];
    return r;
  }

  Three whisk_l(const One& f, const Three& t) const {
    return Three{whisk_l(f, t.src2), whisk_l(f, t.tgt2), t.s};
  }
  Three whisk_r(const Three& t, const One& f) const {
    return Three{whisk_r(t.src2, f), whisk_r(t.tgt2, f), t.s};
  }

  // horizontal composition n o m, m first
  Two hcomp(const Two& n, const Two& m) const {
    if (!(m.tgt1 == n.src1))
      throw TypeError("pivmodel: 2-morphisms not horizontally composable\n  left : " +
                      describe(n) + "\n  right: " + describe(m));
    Two r;
    r.src1 = m.src1;
    r.tgt1 = n.tgt1;
    r.h = group_->mul(n.h, m.h);
    r.chi.resize(n.chi.size());
    for (size_t g = 0; g < r.chi.size(); ++g)
      r.chi[g] = int16_t((n.chi[g] + m.chi[g]) % N_);
    return r;
  }

  Three hcomp(const Three& a, const Three& b) const {
    return Three{hcomp(a.src2, b.src2), hcomp(a.tgt2, b.tgt2), a.s * b.s};
  }

  // vertical composition a . b, b first
  Three vcomp(const Three& a, const Three& b) const {
    if (!(b.tgt2 == a.src2))
      throw TypeError("pivmodel: 3-morphisms not vertically composable\n  upper src: " +
                      describe(a.src2) + "\n  lower tgt: " + describe(b.tgt2));
    return Three{b.src2, a.tgt2, a.s * b.s};
  }

  // ---- duals and canonical data -------------------------------------------

  // tensorator sigma_{mu,nu}; its value is the component chi_mu at the
  // element underlying nu
  Three sigma(const Two& mu, const Two& nu) const {
    Two s = hcomp(whisk_r(mu, nu.tgt1), whisk_l(mu.src1, nu));
    Two t = hcomp(whisk_l(mu.tgt1, nu), whisk_r(mu, nu.src1));
    return Three{s, t, Cyclotomic::root(N_, mu.chi[size_t(nu.h)])};
  }
  Three sigma_inv(const Two& mu, const Two& nu) const {
    Two s = hcomp(whisk_r(mu, nu.tgt1), whisk_l(mu.src1, nu));
    Two t = hcomp(whisk_l(mu.tgt1, nu), whisk_r(mu, nu.src1));
    return Three{t, s, Cyclotomic::root(N_, -mu.chi[size_t(nu.h)])};
  }

  Two star(const Two& m) const {
    Two r;
    r.src1 = m.tgt1;
    r.tgt1 = m.src1;
    r.h = group_->inv(m.h);
    r.chi.resize(m.chi.size());
    for (size_t g = 0; g < r.chi.size(); ++g)
      r.chi[g] = int16_t((N_ - m.chi[g]) % N_);
    return r;
  }

  Three star(const Three& t) const {
    return Three{star(t.tgt2), star(t.src2), t.s};
  }

  // eps_mu : 1_G => mu o mu^*, valued lambda(h)
  Three eps(const Two& mu) const {
    return Three{id_two(mu.tgt1), hcomp(mu, star(mu)),
                 Cyclotomic::root(N_, piv_.lambda_exp[size_t(mu.h)])};
  }
  Three eps_star(const Two& mu) const {
    return Three{hcomp(mu, star(mu)), id_two(mu.tgt1),
                 Cyclotomic::root(N_, piv_.lambda_exp[size_t(mu.h)])};
  }

  // #-dual of 1-morphisms: (F,c)^# = (Ad_c F^{-1}, F(c))
  One hash(const One& f) const {
    One r;
    int m = group_->order();
    r.perm.resize(size_t(m));
    r.iperm.resize(size_t(m));
    for (int x = 0; x < m; ++x)
      r.perm[size_t(x)] =
          uint8_t(group_->mul(f.c, group_->mul(f.iperm[size_t(x)], group_->inv(f.c))));
    for (int x = 0; x < m; ++x) r.iperm[size_t(r.perm[size_t(x)])] = uint8_t(x);
    r.c = f.perm[size_t(f.c)];
    return r;
  }

  // fold 2-morphism eta_F : 1 => F box F^#, with element F(c) and trivial chi
  Two eta(const One& f) const {
    Two r;
    r.src1 = unit_one();
    r.tgt1 = box(f, hash(f));
    r.h = f.perm[size_t(f.c)];
    r.chi.assign(size_t(group_->order()), 0);
    return r;
  }
  Two eta_star(const One& f) const { return star(eta(f)); }

  // triangulator T_F : (eta_F^* box F) o (F box eta_{F^#}) => 1_F, valued 1
  Three tri(const One& f) const {
    return Three{tri_src(f), id_two(f), Cyclotomic::one(N_)};
  }
  Three tri_inv(const One& f) const {
    return Three{id_two(f), tri_src(f), Cyclotomic::one(N_)};
  }
  Three tri_star(const One& f) const { return star(tri(f)); }
  Three tri_star_inv(const One& f) const { return star(tri_inv(f)); }

  // ---- equality and thin structure ----------------------------------------

  bool eq(const Two& a, const Two& b) const { return a == b; }
  bool eq(const Three& a, const Three& b) const { return a == b; }

  bool is_zero(const Three& t) const { return t.s.is_zero(); }

  // elements h with b.F = Ad_h a.F; each together with a character gives a
  // 2-morphism a => b
  std::vector<int> conjugators(const One& a, const One& b) const {
    std::vector<int> out;
    for (int h = 0; h < group_->order(); ++h) {
      bool ok = true;
      for (int g = 0; g < group_->order() && ok; ++g)
        ok = int(b.perm[size_t(g)]) ==
             group_->mul(h, group_->mul(a.perm[size_t(g)], group_->inv(h)));
      if (ok) out.push_back(h);
    }
    return out;
  }

  // dimension of the hom space between parallel 2-morphisms (0 or 1)
  int thin_hom_dim(const Two& a, const Two& b) const {
    if (!(a.src1 == b.src1) || !(a.tgt1 == b.tgt1)) return 0;
    return (a.h == b.h && a.chi == b.chi) ? 1 : 0;
  }

  std::optional<Three> try_inverse(const Three& t) const {
    if (t.s.is_zero()) return std::nullopt;
    return Three{t.tgt2, t.src2, t.s.inverse()};
  }

  // <Psi> for an endomorphism of a (simple) 2-morphism
  std::optional<Cyclotomic> bracket(const Three& t) const {
    if (!(t.src2 == t.tgt2)) return std::nullopt;
    return t.s;
  }

  Three scale(const Two& mu, Cyclotomic s) const { return make_three(mu, mu, std::move(s)); }

  // ---- enumerators for law checking ----------------------------------------

  std::vector<Obj> sample_objects() const { return {object()}; }
  const std::vector<One>& sample_ones() const { return ones_; }
  const std::vector<Two>& sample_twos() const { return twos_; }
  const std::vector<Three>& sample_threes() const { return threes_; }
  const std::vector<std::vector<int16_t>>& sample_characters() const { return chis_; }
  // every 2-morphism between enumerated 1-morphisms, including the
  // decoration-shifting ones that the standard enumeration leaves out
  const std::vector<Two>& sample_twos_broad() const { return broad_twos_; }

  // ---- description (for law-failure witnesses) -----------------------------

  std::string describe(const One& f) const {
    std::ostringstream os;
    os << "(F=[";
    for (size_t i = 0; i < f.perm.size(); ++i) os << (i ? " " : "") << int(f.perm[i]);
    os << "],c=" << f.c << ")";
    return os.str();
  }
  std::string describe(const Two& m) const {
    std::ostringstream os;
    os << "{" << describe(m.src1) << "=>" << describe(m.tgt1) << " h=" << m.h << " chi=[";
    for (size_t i = 0; i < m.chi.size(); ++i) os << (i ? " " : "") << m.chi[i];
    os << "]}";
    return os.str();
  }
  std::string describe(const Three& t) const {
    return "[" + describe(t.src2) + " ==> " + describe(t.tgt2) + " : " + t.s.str() + "]";
  }

private:
  Two tri_src(const One& f) const {
    return hcomp(whisk_r(eta_star(f), f), whisk_l(f, eta(hash(f))));
  }

  void normalize_chi(std::vector<int16_t>& chi) const {
    if (int(chi.size()) != group_->order())
      throw TypeError("pivmodel: character length mismatch");
    for (auto& e : chi) e = int16_t(((e % N_) + N_) % N_);
  }

  void check_chi_hom(const std::vector<int16_t>& chi) const {
    for (int a = 0; a < group_->order(); ++a)
      for (int b = 0; b < group_->order(); ++b)
        if (chi[size_t(group_->mul(a, b))] != (chi[size_t(a)] + chi[size_t(b)]) % N_)
          throw TypeError("pivmodel: chi is not a character");
  }

  void build_enumerations() {
    const int m = group_->order();
    for (const auto& perm : group_->automorphisms()) {
      bool keeps_lambda = true;
      for (int g = 0; g < m && keeps_lambda; ++g)
        keeps_lambda = piv_.lambda_exp[size_t(perm[size_t(g)])] == piv_.lambda_exp[size_t(g)];
      if (!keeps_lambda) continue;
      for (int c = 0; c < m; ++c) ones_.push_back(make_one(perm, c));
    }

    for (const auto& chi : group_->characters(N_)) {
      std::vector<int16_t> v(chi.begin(), chi.end());
      bool trivial = true;
      for (auto e : v) trivial = trivial && e == 0;
      if (chi_mode_ == ChiMode::Trivial && !trivial) continue;
      chis_.push_back(std::move(v));
    }

    // one sample 2-morphism per (source, h, chi); the target automorphism is
    // forced to Ad_h of the source and the decoration travels along
    for (const auto& a : ones_)
      for (int h = 0; h < m; ++h) {
        std::vector<int> tperm(size_t(m), 0);
        for (int g = 0; g < m; ++g)
          tperm[size_t(g)] = group_->mul(h, group_->mul(a.perm[size_t(g)], group_->inv(h)));
        One b = make_one(tperm, a.c);
        for (const auto& chi : chis_) {
          Two t;
          t.src1 = a;
          t.tgt1 = b;
          t.h = h;
          t.chi = chi;
          twos_.push_back(std::move(t));
        }
      }

    for (const auto& a : ones_)
      for (const auto& b : ones_)
        for (int h = 0; h < m; ++h) {
          bool compat = true;
          for (int g = 0; g < m && compat; ++g)
            compat = int(b.perm[size_t(g)]) ==
                     group_->mul(h, group_->mul(a.perm[size_t(g)], group_->inv(h)));
          if (!compat) continue;
          for (const auto& chi : chis_) {
            Two t;
            t.src1 = a;
            t.tgt1 = b;
            t.h = h;
            t.chi = chi;
            broad_twos_.push_back(std::move(t));
          }
        }

    std::vector<Cyclotomic> scalars = {Cyclotomic::zero(N_), Cyclotomic::one(N_),
                                       -Cyclotomic::one(N_)};
    if (N_ > 2) {
      scalars.push_back(Cyclotomic::root(N_, 1));
      scalars.push_back(Cyclotomic::root(N_, -1));
    }
    for (const auto& mu : twos_)
      for (const auto& s : scalars)
        threes_.push_back(Three{mu, mu, s});
  }

  std::shared_ptr<FiniteGroup> group_;
  PivotalStructure piv_;
  int N_ = 1;
  ChiMode chi_mode_ = ChiMode::All;
  std::string name_;
  std::vector<One> ones_;
  std::vector<Two> twos_;
  std::vector<Two> broad_twos_;
  std::vector<Three> threes_;
  std::vector<std::vector<int16_t>> chis_;
};

// Parse builtin model specs of the form
//   pivdec:cyclic:<n>:lambda=<z^k|trivial>[:chi=<all|trivial>]
//   pivdec:dihedral:<n>:lambda=<r^a,s^b|trivial>[:chi=...]
inline PivModel parse_pivdec_spec(const std::string& spec) {
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("model spec '" + spec + "': " + why);
  };
  std::vector<std::string> parts;
  {
    std::string cur;
    for (char ch : spec) {
      if (ch == ':') { parts.push_back(cur); cur.clear(); }
      else cur.push_back(ch);
    }
    parts.push_back(cur);
  }
  if (parts.empty() || parts[0] != "pivdec") fail("expected prefix 'pivdec'");
  if (parts.size() < 3) fail("expected pivdec:<family>:<n>[:lambda=...][:chi=...]");
  const std::string family = parts[1];
  int n = 0;
  try { n = std::stoi(parts[2]); } catch (...) { fail("bad group size"); }

  FiniteGroup g = family == "cyclic"     ? FiniteGroup::cyclic(n)
                  : family == "dihedral" ? FiniteGroup::dihedral(n)
                                         : (fail("unknown family '" + family + "'"),
                                            FiniteGroup::cyclic(1));
  int N = g.exponent();
  std::vector<int> lam(size_t(g.order()), 0);
  PivModel::ChiMode mode = PivModel::ChiMode::All;

  for (size_t i = 3; i < parts.size(); ++i) {
    const std::string& p = parts[i];
    if (p.rfind("lambda=", 0) == 0) {
      std::string v = p.substr(7);
      if (v == "trivial" || v == "1") {
        std::fill(lam.begin(), lam.end(), 0);
      } else if (family == "cyclic") {
        if (v.rfind("z^", 0) != 0) fail("cyclic lambda must be z^k or trivial");
        int k = std::stoi(v.substr(2));
        int step = N / n; // generator 1 of Z/n has order n inside mu_N
        for (int x = 0; x < n; ++x) lam[size_t(x)] = ((x * k * step) % N + N) % N;
      } else if (family == "dihedral") {
        // values on r and s given as r^a,s^b with a,b exponents of -1
        int a = 0, b = 0;
        if (v.rfind("r^", 0) != 0) fail("dihedral lambda must be r^a,s^b (signs)");
        size_t comma = v.find(',');
        if (comma == std::string::npos || v.compare(comma + 1, 2, "s^") != 0)
          fail("dihedral lambda must be r^a,s^b");
        a = std::stoi(v.substr(2, comma - 2)) & 1;
        b = std::stoi(v.substr(comma + 3)) & 1;
        int half = N / 2;
        for (int i2 = 0; i2 < n; ++i2)
          for (int j = 0; j < 2; ++j)
            lam[size_t(i2 + n * j)] = ((i2 * a + j * b) % 2) * half;
      }
    } else if (p.rfind("chi=", 0) == 0) {
      std::string v = p.substr(4);
      if (v == "trivial") mode = PivModel::ChiMode::Trivial;
      else if (v == "all") mode = PivModel::ChiMode::All;
      else fail("chi must be all or trivial");
    } else {
      fail("unknown option '" + p + "'");
    }
  }
  return PivModel(std::move(g), std::move(lam), mode, spec);
}

} // namespace graycat
