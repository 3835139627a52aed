#pragma once

#include <algorithm>
#include <functional>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "graycat/cyclotomic.hpp"

namespace graycat {

// A finite group presented by its full multiplication table. Elements are
// indices 0..order-1; index 0 need not be the identity (it is located on
// construction). The table is validated: associativity, unit, inverses.
class FiniteGroup {
public:
  FiniteGroup(std::string name, std::vector<std::vector<int>> table)
      : name_(std::move(name)), table_(std::move(table)) {
    const int m = int(table_.size());
    if (m == 0) throw std::invalid_argument("group: empty table");
    for (const auto& row : table_) {
      if (int(row.size()) != m) throw std::invalid_argument("group: ragged table");
      for (int v : row)
        if (v < 0 || v >= m) throw std::invalid_argument("group: entry out of range");
    }
    identity_ = -1;
    for (int e = 0; e < m; ++e) {
      bool unit = true;
      for (int g = 0; g < m && unit; ++g)
        unit = table_[size_t(e)][size_t(g)] == g && table_[size_t(g)][size_t(e)] == g;
      if (unit) { identity_ = e; break; }
    }
    if (identity_ < 0) throw std::invalid_argument("group: no identity element");
    inverse_.assign(size_t(m), -1);
    for (int g = 0; g < m; ++g) {
      for (int h = 0; h < m; ++h) {
        if (table_[size_t(g)][size_t(h)] == identity_ && table_[size_t(h)][size_t(g)] == identity_) {
          inverse_[size_t(g)] = h;
          break;
        }
      }
      if (inverse_[size_t(g)] < 0) throw std::invalid_argument("group: missing inverse");
    }
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        for (int c = 0; c < m; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw std::invalid_argument("group: table not associative");
  }

  static FiniteGroup cyclic(int n) {
    if (n < 1) throw std::invalid_argument("group: cyclic order must be >= 1");
    std::vector<std::vector<int>> t(size_t(n), std::vector<int>(size_t(n), 0));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[size_t(a)][size_t(b)] = (a + b) % n;
    return FiniteGroup("Z/" + std::to_string(n), std::move(t));
  }

  // Dihedral group of order 2n; element i + n*j stands for r^i s^j.
  static FiniteGroup dihedral(int n) {
    if (n < 1) throw std::invalid_argument("group: dihedral parameter must be >= 1");
    int m = 2 * n;
    auto enc = [n](int i, int j) { return ((i % n + n) % n) + n * (j & 1); };
    std::vector<std::vector<int>> t(size_t(m), std::vector<int>(size_t(m), 0));
    for (int i1 = 0; i1 < n; ++i1)
      for (int j1 = 0; j1 < 2; ++j1)
        for (int i2 = 0; i2 < n; ++i2)
          for (int j2 = 0; j2 < 2; ++j2) {
            // r^i1 s^j1 r^i2 s^j2 = r^(i1 + (-1)^j1 i2) s^(j1+j2)
            int i = j1 ? i1 - i2 : i1 + i2;
            t[size_t(enc(i1, j1))][size_t(enc(i2, j2))] = enc(i, j1 ^ j2);
          }
    return FiniteGroup("D" + std::to_string(n), std::move(t));
  }

  const std::string& name() const { return name_; }
  int order() const { return int(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[size_t(a)][size_t(b)]; }
  int inv(int a) const { return inverse_[size_t(a)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  int element_order(int g) const {
    int k = 1, x = g;
    while (x != identity_) { x = mul(x, g); ++k; }
    return k;
  }

  // lcm of all element orders (the group exponent)
  int exponent() const {
    long long l = 1;
    for (int g = 0; g < order(); ++g) {
      long long o = element_order(g);
      l = std::lcm(l, o);
    }
    return int(l);
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a)
      for (int b = 0; b < order(); ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  // All automorphisms, found by backtracking over images.
  std::vector<std::vector<int>> automorphisms() const {
    const int m = order();
    std::vector<std::vector<int>> out;
    std::vector<int> img(size_t(m), -1);
    std::vector<bool> used(size_t(m), false);
    img[size_t(identity_)] = identity_;
    used[size_t(identity_)] = true;
    std::function<void(int)> rec = [&](int g) {
      while (g < m && img[size_t(g)] >= 0) ++g;
      if (g == m) { out.push_back(img); return; }
      for (int v = 0; v < m; ++v) {
        if (used[size_t(v)]) continue;
        if (element_order(v) != element_order(g)) continue;
        // tentatively map g -> v and close under known products
        auto simg = img;
        auto sused = used;
        img[size_t(g)] = v;
        used[size_t(v)] = true;
        bool ok = true;
        for (int it = 0; it < 2 && ok; ++it) {
          for (int a = 0; a < m && ok; ++a) {
            if (img[size_t(a)] < 0) continue;
            for (int b = 0; b < m && ok; ++b) {
              if (img[size_t(b)] < 0) continue;
              int ab = mul(a, b);
              int v2 = mul(img[size_t(a)], img[size_t(b)]);
              if (img[size_t(ab)] < 0) {
                if (used[size_t(v2)]) { ok = false; break; }
                img[size_t(ab)] = v2;
                used[size_t(v2)] = true;
              } else if (img[size_t(ab)] != v2) {
                ok = false;
              }
            }
          }
        }
        if (ok) rec(g + 1);
        img = simg;
        used = sused;
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // All homomorphisms into Z/N written as exponent vectors: chi(g) = zeta_N^{exps[g]}.
  std::vector<std::vector<int>> characters(int N) const {
    const int m = order();
    std::vector<std::vector<int>> out;
    std::vector<int> val(size_t(m), -1);
    val[size_t(identity_)] = 0;
    std::function<void(int)> rec = [&](int g) {
      while (g < m && val[size_t(g)] >= 0) ++g;
      if (g == m) { out.push_back(val); return; }
      for (int k = 0; k < N; ++k) {
        auto sval = val;
        val[size_t(g)] = k;
        bool ok = true;
        for (int it = 0; it < 2 && ok; ++it) {
          for (int a = 0; a < m && ok; ++a) {
            if (val[size_t(a)] < 0) continue;
            for (int b = 0; b < m && ok; ++b) {
              if (val[size_t(b)] < 0) continue;
              int ab = mul(a, b);
              int s = (val[size_t(a)] + val[size_t(b)]) % N;
              if (val[size_t(ab)] < 0) val[size_t(ab)] = s;
              else if (val[size_t(ab)] != s) ok = false;
            }
          }
        }
        if (ok) rec(g + 1);
        val = sval;
      }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

private:
  std::string name_;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// A homomorphism between explicitly tabulated groups.
struct GroupHom {
  const FiniteGroup* dom = nullptr;
  const FiniteGroup* cod = nullptr;
  std::vector<int> map;

  GroupHom() = default;
  GroupHom(const FiniteGroup& d, const FiniteGroup& c, std::vector<int> m)
      : dom(&d), cod(&c), map(std::move(m)) {
    if (int(map.size()) != dom->order()) throw std::invalid_argument("hom: size mismatch");
    if (map[size_t(dom->identity())] != cod->identity())
      throw std::invalid_argument("hom: identity not preserved");
    for (int a = 0; a < dom->order(); ++a)
      for (int b = 0; b < dom->order(); ++b)
        if (map[size_t(dom->mul(a, b))] != cod->mul(map[size_t(a)], map[size_t(b)]))
          throw std::invalid_argument("hom: not multiplicative");
  }

  int operator()(int g) const { return map[size_t(g)]; }

  static GroupHom identity(const FiniteGroup& g) {
    std::vector<int> m(size_t(g.order()));
    for (int i = 0; i < g.order(); ++i) m[size_t(i)] = i;
    return GroupHom(g, g, std::move(m));
  }
};

// Pivotal structure on the group category C_G: a homomorphism
// lambda: G -> C^x with values among roots of unity, stored as exponents
// of zeta_N for a session-wide order N.
struct PivotalStructure {
  const FiniteGroup* group = nullptr;
  int scalar_order = 1;            // N
  std::vector<int> lambda_exp;     // lambda(g) = zeta_N^{lambda_exp[g]}

  PivotalStructure() = default;
  PivotalStructure(const FiniteGroup& g, int N, std::vector<int> exps)
      : group(&g), scalar_order(N), lambda_exp(std::move(exps)) {
    if (int(lambda_exp.size()) != g.order())
      throw std::invalid_argument("pivotal: size mismatch");
    for (auto& e : lambda_exp) e = ((e % N) + N) % N;
    if (lambda_exp[size_t(g.identity())] != 0)
      throw std::invalid_argument("pivotal: lambda(e) != 1");
    for (int a = 0; a < g.order(); ++a)
      for (int b = 0; b < g.order(); ++b)
        if (lambda_exp[size_t(g.mul(a, b))] !=
            (lambda_exp[size_t(a)] + lambda_exp[size_t(b)]) % N)
          throw std::invalid_argument("pivotal: lambda not a homomorphism");
  }

  static PivotalStructure trivial(const FiniteGroup& g, int N = 1) {
    return PivotalStructure(g, N, std::vector<int>(size_t(g.order()), 0));
  }

  Cyclotomic lambda(int g) const {
    return Cyclotomic::root(scalar_order, lambda_exp[size_t(g)]);
  }
  Cyclotomic lambda_inv(int g) const {
    return Cyclotomic::root(scalar_order, -lambda_exp[size_t(g)]);
  }
};

// A morphism in C_G: hom(g,h) = 0 unless g = h, and hom(g,g) = C. A value
// is a group element together with a scalar.
struct GroupCatMorphism {
  int object = 0;
  Cyclotomic scalar;

  GroupCatMorphism() = default;
  GroupCatMorphism(int g, Cyclotomic s) : object(g), scalar(std::move(s)) {}

  friend bool operator==(const GroupCatMorphism& a, const GroupCatMorphism& b) {
    return a.object == b.object && a.scalar == b.scalar;
  }
};

namespace groupcat {

inline GroupCatMorphism identity_morphism(const FiniteGroup& g, int obj, int N) {
  (void)g;
  return GroupCatMorphism(obj, Cyclotomic::one(N));
}

// Tensor product g (x) h = g.h with scalars multiplying.
inline GroupCatMorphism tensor(const FiniteGroup& g, const GroupCatMorphism& f,
                               const GroupCatMorphism& k) {
  return GroupCatMorphism(g.mul(f.object, k.object), f.scalar * k.scalar);
}

// Categorical composition; defined only for morphisms of the same object.
inline GroupCatMorphism compose(const GroupCatMorphism& f, const GroupCatMorphism& k) {
  if (f.object != k.object)
    throw std::invalid_argument("groupcat: composing morphisms of distinct objects");
  return GroupCatMorphism(f.object, f.scalar * k.scalar);
}

// epsilon_g : e -> g (x) g^*, the pivotal cap; equal to its own dual.
inline GroupCatMorphism epsilon(const PivotalStructure& piv, int g) {
  return GroupCatMorphism(piv.group->identity(), piv.lambda(g));
}

inline GroupCatMorphism dual(const FiniteGroup& g, const GroupCatMorphism& f) {
  return GroupCatMorphism(g.inv(f.object), f.scalar);
}

// tr_L(f) = eps_g^* . (f (x) 1_{g^*}) . eps_g, computed through the
// composite rather than the closed formula.
inline Cyclotomic trace_left(const GroupCatMorphism& f, const PivotalStructure& piv) {
  const FiniteGroup& g = *piv.group;
  GroupCatMorphism cap = epsilon(piv, f.object);
  GroupCatMorphism mid = tensor(g, f, identity_morphism(g, g.inv(f.object), piv.scalar_order));
  GroupCatMorphism cup = epsilon(piv, f.object); // self-dual scalar
  return compose(cup, compose(mid, cap)).scalar;
}

// tr_R(f) = eps_{g^*}^* . (1_{g^*} (x) f) . eps_{g^*}
inline Cyclotomic trace_right(const GroupCatMorphism& f, const PivotalStructure& piv) {
  const FiniteGroup& g = *piv.group;
  int gs = g.inv(f.object);
  GroupCatMorphism cap = epsilon(piv, gs);
  GroupCatMorphism mid = tensor(g, identity_morphism(g, gs, piv.scalar_order), f);
  GroupCatMorphism cup = epsilon(piv, gs);
  return compose(cup, compose(mid, cap)).scalar;
}

// C_G is spherical iff lambda(g)^4 = 1 for every g.
inline bool is_spherical(const PivotalStructure& piv) {
  for (int g = 0; g < piv.group->order(); ++g)
    if ((4 * piv.lambda_exp[size_t(g)]) % piv.scalar_order != 0) return false;
  return true;
}

// A strict tensor functor C_G -> C_H is pivotal iff lambda_G = lambda_H o F.
inline bool is_pivotal_functor(const GroupHom& f, const PivotalStructure& pivG,
                               const PivotalStructure& pivH) {
  if (pivG.group != f.dom || pivH.group != f.cod)
    throw std::invalid_argument("groupcat: functor/pivotal mismatch");
  for (int g = 0; g < f.dom->order(); ++g)
    if (pivG.lambda(g).embed(std::lcm(pivG.scalar_order, pivH.scalar_order)) !=
        pivH.lambda(f(g)).embed(std::lcm(pivG.scalar_order, pivH.scalar_order)))
      return false;
  return true;
}

// chi must be a homomorphism into C^x with chi(e) = 1.
inline bool check_character(const FiniteGroup& g,
                            const std::function<Cyclotomic(int)>& chi) {
  if (!(chi(g.identity()) == Cyclotomic::one(chi(g.identity()).order()))) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (chi(g.mul(a, b)) != chi(a) * chi(b)) return false;
  return true;
}

} // namespace groupcat
} // namespace graycat
