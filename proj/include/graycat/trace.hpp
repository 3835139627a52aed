#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graycat/term.hpp"

namespace graycat {

// tr_L(Psi) = eps_mu^* . (Psi o 1_{mu^*}) . eps_mu, evaluated through the
// defining composite.
template <class M>
typename M::Three trace3_left(const M& m, const typename M::Three& psi) {
  auto mu = m.src(psi);
  if (!(m.tgt(psi) == mu)) throw TypeError("trace: not an endomorphism");
  auto mus = m.star(mu);
  return m.vcomp(m.eps_star(mu),
                 m.vcomp(m.hcomp(psi, m.id_three(mus)), m.eps(mu)));
}

// tr_R(Psi) = eps_{mu^*}^* . (1_{mu^*} o Psi) . eps_{mu^*}
template <class M>
typename M::Three trace3_right(const M& m, const typename M::Three& psi) {
  auto mu = m.src(psi);
  if (!(m.tgt(psi) == mu)) throw TypeError("trace: not an endomorphism");
  auto mus = m.star(mu);
  return m.vcomp(m.eps_star(mus),
                 m.vcomp(m.hcomp(m.id_three(mus), psi), m.eps(mus)));
}

template <class M>
typename M::Three dim_left(const M& m, const typename M::Two& mu) {
  return trace3_left(m, m.id_three(mu));
}
template <class M>
typename M::Three dim_right(const M& m, const typename M::Two& mu) {
  return trace3_right(m, m.id_three(mu));
}

// A partition of a 2-morphism into simples. In a thin model every nonzero
// hom space is one-dimensional, so each 2-morphism is itself simple and the
// partition is the singleton {1_rho}; the defining identities are validated
// before returning.
template <class M>
struct Partition {
  typename M::Two rho;
  std::vector<typename M::Three> into;   // p^A : mu => rho
  std::vector<typename M::Three> out_of; // p_A : rho => mu
};

template <class M>
Partition<M> partition_of(const M& m, const typename M::Two& rho) {
  for (const auto& other : m.sample_twos())
    if (m.thin_hom_dim(rho, other) > 1)
      throw TypeError("partition: model is not thin at this 2-morphism");
  Partition<M> p;
  p.rho = rho;
  p.into.push_back(m.id_three(rho));
  p.out_of.push_back(m.id_three(rho));
  // sum_A p^A . p_A = 1_rho (a single summand here)
  if (!m.eq(m.vcomp(p.into[0], p.out_of[0]), m.id_three(rho)))
    throw TypeError("partition: completeness identity failed");
  // p_B . p^A = delta 1_mu
  if (!m.eq(m.vcomp(p.out_of[0], p.into[0]), m.id_three(rho)))
    throw TypeError("partition: orthogonality identity failed");
  return p;
}

// Frobenius structure carried by eta_F^* o eta_F and eta_F o eta_F^*.
struct FrobeniusReport {
  struct Item {
    std::string name;
    bool pass = false;
  };
  std::vector<Item> items;
  bool pass() const {
    for (const auto& i : items)
      if (!i.pass) return false;
    return true;
  }
};

namespace detail_frob {

template <class M>
void frobenius_laws(const M& m, const std::string& tag, const typename M::Three& unit,
                    const typename M::Three& counit, const typename M::Three& mult,
                    const typename M::Three& comult, const typename M::Two& alg,
                    FrobeniusReport& rep) {
  auto idA = m.id_three(alg);
  auto check = [&](const std::string& n, bool ok) {
    rep.items.push_back({tag + n, ok});
  };
  // associativity and unit laws
  check("assoc", m.eq(m.vcomp(mult, m.hcomp(mult, idA)), m.vcomp(mult, m.hcomp(idA, mult))));
  check("unit-left", m.eq(m.vcomp(mult, m.hcomp(unit, idA)), idA));
  check("unit-right", m.eq(m.vcomp(mult, m.hcomp(idA, unit)), idA));
  // coassociativity and counit laws
  check("coassoc", m.eq(m.vcomp(m.hcomp(comult, idA), comult), m.vcomp(m.hcomp(idA, comult), comult)));
  check("counit-left", m.eq(m.vcomp(m.hcomp(counit, idA), comult), idA));
  check("counit-right", m.eq(m.vcomp(m.hcomp(idA, counit), comult), idA));
  // Frobenius compatibility
  auto middle = m.vcomp(comult, mult);
  check("frobenius-left", m.eq(m.vcomp(m.hcomp(idA, mult), m.hcomp(comult, idA)), middle));
  check("frobenius-right", m.eq(m.vcomp(m.hcomp(mult, idA), m.hcomp(idA, comult)), middle));
}

} // namespace detail_frob

template <class M>
FrobeniusReport frobenius_check(const M& m, const typename M::One& F) {
  FrobeniusReport rep;
  auto etaF = m.eta(F);
  auto etaFs = m.eta_star(F);
  {
    // A = eta_F^* o eta_F : 1_D => 1_D
    auto alg = m.hcomp(etaFs, etaF);
    auto unit = m.eps(etaFs);
    auto counit = m.eps_star(etaFs);
    auto mult = m.hcomp(m.id_three(etaFs), m.hcomp(m.eps_star(etaF), m.id_three(etaF)));
    auto comult = m.hcomp(m.id_three(etaFs), m.hcomp(m.eps(etaF), m.id_three(etaF)));
    detail_frob::frobenius_laws(m, "loop/", unit, counit, mult, comult, alg, rep);
  }
  {
    // B = eta_F o eta_F^* : F F^# => F F^#
    auto alg = m.hcomp(etaF, etaFs);
    auto unit = m.eps(etaF);
    auto counit = m.eps_star(etaF);
    auto mult = m.hcomp(m.id_three(etaF), m.hcomp(m.eps_star(etaFs), m.id_three(etaFs)));
    auto comult = m.hcomp(m.id_three(etaF), m.hcomp(m.eps(etaFs), m.id_three(etaFs)));
    detail_frob::frobenius_laws(m, "pair/", unit, counit, mult, comult, alg, rep);
  }
  return rep;
}

// Evaluation of the closed genus-g surface labelled by F: the composite
//   eps*_{eta_F^*} . [ 1_{eta_F^*} o dim_L(eta_F) o 1_{eta_F} ]^g . eps_{eta_F^*}
// which is a scalar multiple of 1_{1_{1_D}} in a thin model.
template <class M, class Scalar>
Scalar surface_invariant(const M& m, const typename M::One& F, int genus) {
  if (genus < 0) throw std::invalid_argument("surface_invariant: genus must be >= 0");
  auto etaF = m.eta(F);
  auto etaFs = m.eta_star(F);
  auto handle = m.hcomp(m.id_three(etaFs),
                        m.hcomp(dim_left(m, etaF), m.id_three(etaF)));
  auto acc = m.eps(etaFs);
  for (int i = 0; i < genus; ++i) acc = m.vcomp(handle, acc);
  acc = m.vcomp(m.eps_star(etaFs), acc);
  auto sc = m.bracket(acc);
  if (!sc) throw TypeError("surface_invariant: evaluation is not a scalar (model not thin)");
  return *sc;
}

} // namespace graycat
