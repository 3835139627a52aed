#pragma once

#include <optional>

#include "graycat/term.hpp"

namespace graycat {

// Canonical 3-morphisms of a Gray category with duals, materialised as their
// defining composites over any model. Each builder returns a term whose
// evaluation realises the construction; nothing here takes model shortcuts.
//
// Conventions: vertical chains list the factor applied first on the right;
// horizontal composites put the source side on the right.

template <class M>
struct Canon {
  using TT = ThreeTerm<M>;
  using Two = typename M::Two;
  using One = typename M::One;
  using Three = typename M::Three;

  const M& m;
  explicit Canon(const M& model) : m(model) {}

  // -- shorthands -----------------------------------------------------------
  TT id(const Two& x) const { return TT::id(x); }
  TT hc(TT a, TT b) const { return TT::hcomp(std::move(a), std::move(b)); }
  TT vchain(std::vector<TT> fs) const { return TT::chain(std::move(fs)); }
  Two h2(const Two& a, const Two& b) const { return m.hcomp(a, b); }
  Two wl(const One& f, const Two& x) const { return m.whisk_l(f, x); }
  Two wr(const Two& x, const One& f) const { return m.whisk_r(x, f); }

  // -- duality functor data ---------------------------------------------------

  // Phi_F = T*_{F^#} : 1_{F^#} => #1_F
  TT phi_f(const One& F) const { return TT::tri_star(m.hash(F)); }
  TT phi_f_inv(const One& F) const { return TT::tri_star_inv(m.hash(F)); }

  // #Phi for an explicit 3-morphism, as a term
  TT hash3(const Three& phi) const {
    One F = m.src(m.src(phi)), G = m.tgt(m.src(phi));
    One Fh = m.hash(F), Gh = m.hash(G);
    return hc(id(wl(Fh, m.eta_star(G))),
              hc(TT::whisk_r(TT::whisk_l(Fh, TT::gen(phi)), Gh),
                 id(wr(m.eta(Fh), Gh))));
  }

  // Phi_{rho,nu} : #rho o #nu => #(nu o rho), for rho: E => F, nu: F => G
  TT phi_comp(const Two& rho, const Two& nu) const {
    One E = m.src(rho), F = m.tgt(rho), G = m.tgt(nu);
    if (!(m.src(nu) == F)) throw TypeError("phi_comp: arguments not composable");
    One Eh = m.hash(E), Fh = m.hash(F), Gh = m.hash(G);
    Two hnu = hash_two(m, nu);
    Two muP = h2(wl(Eh, rho), m.eta(Eh));           // (E^# rho) o eta_{E^#} : 1 => E^# F
    Two mu4 = h2(m.eta_star(G), wr(nu, Gh));        // eta_G^* o (nu G^#) : F G^# => 1
    Two specA = h2(wr(wl(Eh, rho), Gh), wr(m.eta(Eh), Gh));
    TT p1 = hc(id(wl(Eh, m.eta_star(F))), TT::sigma(muP, hnu));
    TT p2 = hc(TT::sigma(wl(Eh, m.eta_star(F)), mu4),
               hc(id(wr(wl(Eh, wl(F, m.eta(Fh))), Gh)), id(specA)));
    TT p3 = hc(id(h2(wl(Eh, m.eta_star(G)), wr(wl(Eh, nu), Gh))),
               hc(TT::whisk_r(TT::whisk_l(Eh, TT::tri(F)), Gh), id(specA)));
    return vchain({p3, p2, p1});
  }

  // kappa_{mu,nu} : #nu box #mu => #(mu box nu), for mu: F => G, nu: H => K
  TT kappa(const Two& mu, const Two& nu) const {
    One F = m.src(mu), G = m.tgt(mu), H = m.src(nu), K = m.tgt(nu);
    One Fh = m.hash(F), Gh = m.hash(G), Hh = m.hash(H), Kh = m.hash(K);
    One KhGh = m.box(Kh, Gh);
    Two hmu = hash_two(m, mu), hnu = hash_two(m, nu);
    Two mu9 = h2(wl(Fh, mu), m.eta(Fh));            // (F^# mu) o eta_{F^#} : 1 => F^# G
    TT k1 = TT::sigma(hnu, hmu);
    TT k2 = hc(id(wl(m.box(Hh, Fh), m.eta_star(G))),
               hc(TT::whisk_r(TT::whisk_l(Hh, TT::sigma(mu9, m.eta_star(K))), Gh),
                  hc(id(wr(wr(wl(Hh, nu), Kh), Gh)), id(wr(m.eta(Hh), KhGh)))));
    TT k3 = hc(id(wl(m.box(Hh, Fh), m.eta_star(G))),
               hc(id(wr(wl(m.box(Hh, Fh), wl(G, m.eta_star(K))), Gh)),
                  hc(id(wr(wr(wl(m.box(Hh, Fh), wr(mu, K)), Kh), Gh)),
                     hc(TT::whisk_r(TT::whisk_l(Hh, TT::sigma(m.eta(Fh), nu)), KhGh),
                        id(wr(m.eta(Hh), KhGh))))));
    return vchain({k3, k2, k1});
  }

  // Gamma_nu : *#*#nu => nu, for nu: F => G
  TT gamma(const Two& nu) const {
    One F = m.src(nu), G = m.tgt(nu);
    One Fh = m.hash(F), Gh = m.hash(G);
    One GhG = m.box(Gh, G);
    Two mu3 = h2(wr(m.eta_star(G), G), wr(wr(nu, Gh), G));
    TT w1 = hc(TT::sigma(m.eta_star(F), mu3),
               id(h2(wr(wl(F, m.eta(Fh)), GhG), wl(F, m.eta(Gh)))));
    TT w2 = hc(id(mu3),
               hc(TT::whisk_r(TT::whisk_r(TT::tri(F), Gh), G), id(wl(F, m.eta(Gh)))));
    TT w3 = hc(id(wr(m.eta_star(G), G)), TT::sigma(nu, m.eta(Gh)));
    TT w4 = hc(TT::tri(G), id(nu));
    return vchain({w4, w3, w2, w1});
  }

  // Theta_nu : ##nu => nu, for nu: F => G
  TT theta(const Two& nu) const {
    One F = m.src(nu), G = m.tgt(nu);
    One Fh = m.hash(F), Gh = m.hash(G);
    Two hnu = hash_two(m, nu);
    Two hhnu = hash_two(m, hnu);
    Two nus = m.star(nu);
    Two mu0 = h2(m.eta_star(Fh), wr(hnu, F));       // eta_{F^#}^* o (#nu F)
    Two mu1 = wr(m.eta(F), F);                      // eta_F box F
    Two mu2 = h2(wr(m.eta_star(G), F), wr(wr(nu, Gh), F));
    Two nusGhF = wr(wr(nus, Gh), F);
    Two etaGF = wr(m.eta(G), F);
    TT v1 = hc(TT::eps(nu), id(hhnu));
    TT v2 = hc(id(nu), hc(TT::sigma(nus, mu0), id(etaGF)));
    TT v3 = hc(id(h2(nu, wl(F, m.eta_star(Fh)))),
               hc(TT::eps(mu1), id(h2(h2(wr(wl(F, hnu), F), nusGhF), etaGF))));
    TT v4 = hc(id(nu),
               hc(TT::tri_star_inv(F),
                  hc(TT::sigma(m.eta_star(F), mu2),
                     id(h2(h2(wr(wr(wl(F, m.eta(Fh)), Gh), F), nusGhF), etaGF)))));
    TT v5 = hc(id(h2(nu, mu2)),
               hc(TT::whisk_r(TT::whisk_r(TT::tri(F), Gh), F), id(h2(nusGhF, etaGF))));
    TT v6 = hc(id(nu), TT::eps_star(mu2));
    return vchain({v6, v5, v4, v3, v2, v1});
  }

  // Theta_nu^{-1} : nu => ##nu
  TT theta_inv(const Two& nu) const {
    One F = m.src(nu), G = m.tgt(nu);
    One Fh = m.hash(F), Gh = m.hash(G);
    One GFh = m.box(G, Fh);
    One GhG = m.box(Gh, G);
    Two hnu = hash_two(m, nu);
    Two nus = m.star(nu);
    Two rho1 = h2(wl(G, m.eta_star(Fh)), wl(GFh, nus));
    // rho1 = (G eta_{F^#}^*) o (G F^# nu^*) : G F^# G => G
    Two mu7 = h2(wl(GFh, nu), wl(G, m.eta(Fh)));
    // mu7 = (G F^# nu) o (G eta_{F^#}) : G => G F^# G
    Two mu6 = h2(wl(G, hnu), m.eta(G));             // (G #nu) o eta_G : 1 => G F^#
    TT t1 = hc(TT::eps(rho1), id(nu));
    TT t2 = hc(id(h2(rho1, mu7)), hc(TT::tri_star(G), id(nu)));
    TT t3 = hc(id(rho1),
               hc(TT::sigma(mu7, m.eta_star(Gh)), id(h2(wr(m.eta(G), G), nu))));
    TT t4 = hc(id(rho1),
               hc(TT::whisk_l(GFh, TT::tri_inv(G)),
                  id(h2(h2(wl(GFh, wl(G, m.eta_star(Gh))), wr(mu7, GhG)),
                        h2(wr(m.eta(G), G), nu)))));
    TT t5 = hc(id(h2(rho1, wr(wl(GFh, m.eta_star(G)), G))),
               hc(TT::eps_star(wl(GFh, wl(G, m.eta(Gh)))),
                  id(h2(wr(mu7, GhG), h2(wr(m.eta(G), G), nu)))));
    TT t6 = hc(id(rho1), TT::sigma(mu6, nu));
    TT t7 = hc(id(wl(G, m.eta_star(Fh))),
               hc(TT::eps_star(wl(GFh, nus)), id(wr(mu6, F))));
    return vchain({t7, t6, t5, t4, t3, t2, t1});
  }

  // Delta_nu : #nu => *#*nu, for nu: F => G
  TT delta(const Two& nu) const {
    One F = m.src(nu), G = m.tgt(nu);
    One Fh = m.hash(F), Gh = m.hash(G);
    Two hnu = hash_two(m, nu);
    Two nus = m.star(nu);
    Two shs = m.star(hash_two(m, nus));             // *#*nu : G^# => F^#
    Two hns = hash_two(m, nus);                     // #(nu^*) = (*#*nu)^*
    Two mu5 = h2(wl(Gh, nus), m.eta(Gh));           // (G^# nu^*) o eta_{G^#} : 1 => G^# F
    Two mu4 = h2(m.eta_star(G), wr(nu, Gh));        // eta_G^* o (nu G^#) : F G^# => 1
    TT d1 = hc(TT::eps(shs), id(hnu));
    TT d2 = hc(id(h2(shs, wl(Gh, m.eta_star(F)))), TT::sigma(mu5, hnu));
    TT d3 = hc(id(shs),
               hc(TT::sigma(wl(Gh, m.eta_star(F)), mu4),
                  id(h2(h2(wr(wl(Gh, wl(F, m.eta(Fh))), Gh), wr(wl(Gh, nus), Gh)),
                        wr(m.eta(Gh), Gh)))));
    TT d4 = hc(id(h2(h2(shs, wl(Gh, m.eta_star(G))), wr(wl(Gh, nu), Gh))),
               hc(TT::whisk_r(TT::whisk_l(Gh, TT::tri(F)), Gh),
                  id(h2(wr(wl(Gh, nus), Gh), wr(m.eta(Gh), Gh)))));
    TT d5 = hc(id(h2(shs, wl(Gh, m.eta_star(G)))),
               hc(TT::whisk_r(TT::whisk_l(Gh, TT::eps_star(nu)), Gh),
                  id(wr(m.eta(Gh), Gh))));
    TT d6 = hc(id(shs), TT::tri_star_inv(Gh));
    return vchain({d6, d5, d4, d3, d2, d1});
  }

  // Omega_mu : eta_G^* o (mu G^#) => eta_F^* o (F #mu), for mu: F => G
  TT omega(const Two& mu) const {
    One F = m.src(mu), G = m.tgt(mu);
    One Fh = m.hash(F), Gh = m.hash(G);
    Two mu4 = h2(m.eta_star(G), wr(mu, Gh));
    TT u1 = hc(id(mu4), TT::whisk_r(TT::tri_inv(F), Gh));
    TT u2 = hc(TT::sigma_inv(m.eta_star(F), mu4), id(wr(wl(F, m.eta(Fh)), Gh)));
    return vchain({u2, u1});
  }

  // Omega_mu^{-1} : eta_F^* o (F #mu) => eta_G^* o (mu G^#)
  TT omega_inv(const Two& mu) const {
    One F = m.src(mu), G = m.tgt(mu);
    One Fh = m.hash(F), Gh = m.hash(G);
    Two mu4 = h2(m.eta_star(G), wr(mu, Gh));
    TT u1 = hc(TT::sigma(m.eta_star(F), mu4), id(wr(wl(F, m.eta(Fh)), Gh)));
    TT u2 = hc(id(mu4), TT::whisk_r(TT::tri(F), Gh));
    return vchain({u2, u1});
  }
};

// Dispatch form of the canonical constructions.
enum class CanonicalKind {
  Hash3, PhiF, PhiComp, Kappa, Gamma, Theta, ThetaInv, Delta, Omega, OmegaInv
};

template <class M>
struct CanonicalArgs {
  std::optional<typename M::One> F;
  std::optional<typename M::Two> mu;
  std::optional<typename M::Two> nu;
  std::optional<typename M::Three> phi;
};

template <class M>
ThreeTerm<M> derived_canonical(CanonicalKind kind, const CanonicalArgs<M>& a, const M& m) {
  Canon<M> c(m);
  auto need = [](bool ok, const char* what) {
    if (!ok) throw TypeError(std::string("derived_canonical: missing argument ") + what);
  };
  switch (kind) {
    case CanonicalKind::Hash3: need(a.phi.has_value(), "phi"); return c.hash3(*a.phi);
    case CanonicalKind::PhiF: need(a.F.has_value(), "F"); return c.phi_f(*a.F);
    case CanonicalKind::PhiComp:
      need(a.mu.has_value() && a.nu.has_value(), "mu,nu");
      return c.phi_comp(*a.mu, *a.nu);
    case CanonicalKind::Kappa:
      need(a.mu.has_value() && a.nu.has_value(), "mu,nu");
      return c.kappa(*a.mu, *a.nu);
    case CanonicalKind::Gamma: need(a.nu.has_value(), "nu"); return c.gamma(*a.nu);
    case CanonicalKind::Theta: need(a.nu.has_value(), "nu"); return c.theta(*a.nu);
    case CanonicalKind::ThetaInv: need(a.nu.has_value(), "nu"); return c.theta_inv(*a.nu);
    case CanonicalKind::Delta: need(a.nu.has_value(), "nu"); return c.delta(*a.nu);
    case CanonicalKind::Omega: need(a.mu.has_value(), "mu"); return c.omega(*a.mu);
    case CanonicalKind::OmegaInv: need(a.mu.has_value(), "mu"); return c.omega_inv(*a.mu);
  }
  throw std::logic_error("derived_canonical: bad kind");
}

} // namespace graycat
