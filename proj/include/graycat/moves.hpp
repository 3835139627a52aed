#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graycat/diagram.hpp"

namespace graycat {

enum class Move {
  Interchange, RII, RIII, Slide, Snake, Pivotal, CuspCancel, CuspFlip, DoubleTwist
};

inline const char* move_name(Move mv) {
  switch (mv) {
    case Move::Interchange: return "interchange";
    case Move::RII: return "rii";
    case Move::RIII: return "riii";
    case Move::Slide: return "slide";
    case Move::Snake: return "snake";
    case Move::Pivotal: return "pivotal";
    case Move::CuspCancel: return "cusp_cancel";
    case Move::CuspFlip: return "cusp_flip";
    case Move::DoubleTwist: return "double_twist";
  }
  return "?";
}

inline std::optional<Move> parse_move(const std::string& s) {
  for (Move mv : {Move::Interchange, Move::RII, Move::RIII, Move::Slide, Move::Snake,
                  Move::Pivotal, Move::CuspCancel, Move::CuspFlip, Move::DoubleTwist})
    if (s == move_name(mv)) return mv;
  return std::nullopt;
}

template <class M>
class MoveEngine {
public:
  using D = Diag<M>;
  using E = typename D::Event;
  using K = typename D::EventKind;
  using Line = typename D::Line;
  using Frame = typename D::Frame;
  using Word = typename D::Word;

  // candidates carry a lazy builder; the expensive construction and the
  // typecheck run only for the candidate actually picked
  struct Candidate {
    Move move;
    int layer = 0;
    int pos = 0;
    std::function<D()> build;
    std::string where() const {
      return "layer " + std::to_string(layer) +
             (pos ? " pos " + std::to_string(pos) : std::string());
    }
  };

  MoveEngine(const DiagramEngine<M>& engine, size_t max_lines = 24, size_t max_layers = 64)
      : eng(engine), m(engine.m), cn(engine.m), max_lines_(max_lines), max_layers_(max_layers) {}

  const DiagramEngine<M>& eng;
  const M& m;
  Canon<M> cn;
  size_t max_lines_;
  size_t max_layers_;

  std::optional<D> materialize(const Candidate& c) const {
    D cand = c.build();
    if (!admits(cand)) return std::nullopt;
    return cand;
  }

  // the twist cell of the double-twist cancellation; the identity exactly on
  // spatial models
  typename M::Three twist_cell(const typename M::Two& nu) const {
    auto key = m.describe(nu);
    auto hit = twist_cache_.find(key);
    if (hit != twist_cache_.end()) return hit->second;
    auto A = m.star(eval_term(m, cn.gamma(m.star(nu))));
    auto dstar = m.star(eval_term(m, cn.delta(m.star(nu))));
    auto dinv = m.try_inverse(eval_term(m, cn.delta(nu)));
    auto Ainv = m.try_inverse(A);
    if (!dinv || !Ainv) throw TypeError("twist: non-invertible half-twist cell");
    auto B = hash_three(m, m.vcomp(dstar, *dinv));
    auto cell = m.vcomp(*Ainv, m.vcomp(B, A));
    twist_cache_.emplace(std::move(key), cell);
    return cell;
  }

  // `salt` deterministically subsamples the insertion positions so candidate
  // lists stay bounded on long diagrams
  std::vector<Candidate> candidates(const D& d, const std::vector<Move>& enabled,
                                    uint64_t salt = 0) const {
    std::vector<Candidate> out;
    std::vector<Frame> frames;
    try {
      frames = eng.typecheck(d);
    } catch (const TypeError&) {
      return out;
    }
    std::vector<size_t> slots;
    {
      size_t n = frames.size();
      const size_t cap = 8;
      if (n <= cap) {
        for (size_t i = 0; i < n; ++i) slots.push_back(i);
      } else {
        SplitMix64 rng(salt ^ 0x5bd1e995ull);
        size_t start = size_t(rng.below(n));
        size_t stride = 1 + size_t(rng.below(n / cap + 1));
        for (size_t i = 0; i < cap; ++i) slots.push_back((start + i * stride) % n);
      }
    }
    for (Move mv : enabled) {
      switch (mv) {
        case Move::Interchange: enum_interchange(d, out); break;
        case Move::RII: enum_rii(d, frames, slots, out); break;
        case Move::RIII: enum_riii(d, out); break;
        case Move::Slide: enum_slide(d, out); break;
        case Move::Snake: enum_snake(d, frames, slots, out); break;
        case Move::Pivotal: enum_pivotal(d, out); break;
        case Move::CuspCancel: enum_cusp_cancel(d, frames, slots, out); break;
        case Move::CuspFlip: enum_cusp_flip(d, frames, slots, out); break;
        case Move::DoubleTwist: enum_double_twist(d, frames, slots, out); break;
      }
    }
    return out;
  }

  bool admits(const D& cand) const {
    if (cand.events.size() > max_layers_) return false;
    try {
      auto frames = eng.typecheck(cand);
      for (const auto& f : frames)
        if (f.lines.size() > max_lines_) return false;
    } catch (const TypeError&) {
      return false;
    }
    return true;
  }

private:
  mutable std::map<std::string, typename M::Three> twist_cache_;

  void push(std::vector<Candidate>& out, Move mv, size_t layer, size_t pos,
            std::function<D()> build) const {
    out.push_back(Candidate{mv, int(layer), int(pos), std::move(build)});
  }

  static int consumed_of(const E& e) {
    switch (e.kind) {
      case K::Vertex: return e.vto - e.vfrom + 1;
      case K::Cross: return 2;
      case K::Cap: return 0;
      case K::Cup: return 2;
    }
    return 0;
  }
  static int produced_of(const E& e) {
    switch (e.kind) {
      case K::Vertex: return e.src_len < 0 ? 1 : int(e.outputs.size());
      case K::Cross: return 2;
      case K::Cap: return 2;
      case K::Cup: return 0;
    }
    return 0;
  }
  static int lo_of(const E& e) { return e.kind == K::Vertex ? e.vfrom : e.cpos; }
  static void shift(E& e, int by) {
    if (e.kind == K::Vertex) {
      e.vfrom += by;
      e.vto += by;
    } else {
      e.cpos += by;
    }
  }

  void enum_interchange(const D& d, std::vector<Candidate>& out) const {
    for (size_t k = 0; k + 1 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      int aLo = lo_of(a), bLo = lo_of(b);
      int dA = produced_of(a) - consumed_of(a);
      int dB = produced_of(b) - consumed_of(b);
      int aProducedEnd = aLo + produced_of(a) - 1;
      int bConsumedEnd = bLo + std::max(consumed_of(b), 1) - 1;
      if (bConsumedEnd < aLo && bLo + produced_of(b) - 1 < aLo) {
        push(out, Move::Interchange, k + 1, 0, [&d, k, dB]() {
          D cand = d;
          E x = cand.events[k + 1];
          cand.events[k + 1] = cand.events[k];
          shift(cand.events[k + 1], dB);
          cand.events[k] = x;
          return cand;
        });
      } else if (bLo > aProducedEnd && bLo - dA > aLo + std::max(consumed_of(a), 1) - 1) {
        push(out, Move::Interchange, k + 1, 1, [&d, k, dA]() {
          D cand = d;
          E x = cand.events[k + 1];
          shift(x, -dA);
          cand.events[k + 1] = cand.events[k];
          cand.events[k] = x;
          return cand;
        });
      }
    }
  }

  void enum_rii(const D& d, const std::vector<Frame>& frames,
                const std::vector<size_t>& slots, std::vector<Candidate>& out) const {
    for (size_t k = 0; k + 1 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      if (a.kind == K::Cross && b.kind == K::Cross && a.cpos == b.cpos &&
          a.csign == -b.csign) {
        push(out, Move::RII, k + 1, 0, [&d, k]() {
          D cand = d;
          cand.events.erase(cand.events.begin() + long(k), cand.events.begin() + long(k + 2));
          return cand;
        });
      }
    }
    for (size_t k : slots) {
      const Frame& f = frames[k];
      for (size_t i = 0; i + 1 < f.lines.size(); ++i) {
        for (int sign : {+1, -1}) {
          push(out, Move::RII, k + 1, i + 1, [&d, k, i, sign]() {
            E c1;
            c1.kind = K::Cross;
            c1.cpos = int(i + 1);
            c1.csign = sign;
            E c2 = c1;
            c2.csign = -sign;
            D cand = d;
            cand.events.insert(cand.events.begin() + long(k), {c1, c2});
            return cand;
          });
        }
      }
    }
  }

  void enum_riii(const D& d, std::vector<Candidate>& out) const {
    for (size_t k = 0; k + 2 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      const E& c = d.events[k + 2];
      if (a.kind != K::Cross || b.kind != K::Cross || c.kind != K::Cross) continue;
      if (a.csign != b.csign || b.csign != c.csign) continue;
      if (a.cpos == c.cpos && (b.cpos == a.cpos + 1 || b.cpos + 1 == a.cpos)) {
        int pa = b.cpos, pb = a.cpos;
        push(out, Move::RIII, k + 1, 0, [&d, k, pa, pb]() {
          D cand = d;
          cand.events[k].cpos = pa;
          cand.events[k + 1].cpos = pb;
          cand.events[k + 2].cpos = pa;
          return cand;
        });
      }
    }
  }

  void enum_slide(const D& d, std::vector<Candidate>& out) const {
    auto one_one = [](const E& e) {
      return e.kind == K::Vertex && e.vfrom == e.vto &&
             (e.outputs.size() == 1 || e.src_len < 0);
    };
    for (size_t k = 0; k + 1 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      if (a.kind == K::Cross && one_one(b) && (b.vfrom == a.cpos || b.vfrom == a.cpos + 1)) {
        int np = b.vfrom == a.cpos ? a.cpos + 1 : a.cpos;
        push(out, Move::Slide, k + 1, 0, [&d, k, np]() {
          D cand = d;
          E v = cand.events[k + 1];
          v.vfrom = v.vto = np;
          cand.events[k + 1] = cand.events[k];
          cand.events[k] = v;
          return cand;
        });
      }
      if (one_one(a) && b.kind == K::Cross && (a.vfrom == b.cpos || a.vfrom == b.cpos + 1)) {
        int np = a.vfrom == b.cpos ? b.cpos + 1 : b.cpos;
        push(out, Move::Slide, k + 1, 1, [&d, k, np]() {
          D cand = d;
          E v = cand.events[k];
          v.vfrom = v.vto = np;
          cand.events[k] = cand.events[k + 1];
          cand.events[k + 1] = v;
          return cand;
        });
      }
    }
  }

  void enum_snake(const D& d, const std::vector<Frame>& frames,
                  const std::vector<size_t>& slots, std::vector<Candidate>& out) const {
    for (size_t k = 0; k + 1 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      if (a.kind != K::Cap || b.kind != K::Cup) continue;
      if (!(b.cap == m.star(a.cap)) || a.cdepth != b.cdepth) continue;
      if (b.cpos == a.cpos - 1 || b.cpos == a.cpos + 1) {
        push(out, Move::Snake, k + 1, 0, [&d, k]() {
          D cand = d;
          cand.events.erase(cand.events.begin() + long(k), cand.events.begin() + long(k + 2));
          return cand;
        });
      }
    }
    for (size_t k : slots) {
      const Frame& fr = frames[k];
      for (size_t p = 0; p < fr.lines.size(); ++p) {
        for (int variant : {0, 1}) {
          Line l = fr.lines[p];
          push(out, Move::Snake, k + 1, p + 1, [this, &d, k, p, variant, l]() {
            E cap;
            cap.kind = K::Cap;
            E cup;
            cup.kind = K::Cup;
            if (variant == 0) {
              cap.cname = l.name;
              cap.cap = l.label;
              cap.cap_src_word = l.src_word;
              cap.cap_tgt_word = l.tgt_word;
              cap.cpos = int(p + 2);
              cup.cname = l.name + "*";
              cup.cap = m.star(l.label);
              cup.cap_src_word = l.tgt_word;
              cup.cap_tgt_word = l.src_word;
              cup.cpos = int(p + 1);
            } else {
              cap.cname = l.name + "*";
              cap.cap = m.star(l.label);
              cap.cap_src_word = l.tgt_word;
              cap.cap_tgt_word = l.src_word;
              cap.cpos = int(p + 1);
              cup.cname = l.name;
              cup.cap = l.label;
              cup.cap_src_word = l.src_word;
              cup.cap_tgt_word = l.tgt_word;
              cup.cpos = int(p + 2);
            }
            cap.cdepth = l.depth;
            cup.cdepth = l.depth;
            D cand = d;
            cand.events.insert(cand.events.begin() + long(k), {cap, cup});
            return cand;
          });
        }
      }
    }
  }

  void enum_pivotal(const D& d, std::vector<Candidate>& out) const {
    for (size_t k = 0; k + 1 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      if (a.kind != K::Cap || b.kind != K::Vertex) continue;
      if (!(b.vfrom == b.vto) || b.outputs.size() != 1) continue;
      bool right_leg = b.vfrom == a.cpos + 1 && m.eq(m.src(b.vertex), a.cap);
      bool left_leg = b.vfrom == a.cpos && m.eq(m.src(b.vertex), m.star(a.cap));
      if (!right_leg && !left_leg) continue;
      push(out, Move::Pivotal, k + 1, right_leg ? 1 : 2, [this, &d, k, right_leg]() {
        D cand = d;
        const E& a2 = d.events[k];
        const E& b2 = d.events[k + 1];
        const Line& outl = b2.outputs[0];
        E cap2;
        cap2.kind = K::Cap;
        E v2;
        v2.kind = K::Vertex;
        v2.vname = b2.vname + "*";
        v2.vertex = m.star(b2.vertex);
        v2.vdepth = -1;
        v2.src_len = -1;
        if (right_leg) {
          cap2.cname = outl.name;
          cap2.cap = outl.label;
          cap2.cap_src_word = outl.src_word;
          cap2.cap_tgt_word = outl.tgt_word;
          v2.vfrom = v2.vto = a2.cpos;
        } else {
          cap2.cname = outl.name + "*";
          cap2.cap = m.star(outl.label);
          cap2.cap_src_word = outl.tgt_word;
          cap2.cap_tgt_word = outl.src_word;
          v2.vfrom = v2.vto = a2.cpos + 1;
        }
        cap2.cpos = a2.cpos;
        cap2.cdepth = a2.cdepth;
        cand.events[k] = cap2;
        cand.events[k + 1] = v2;
        return cand;
      });
    }
  }

  std::pair<E, E> cusp_pair(const typename M::One& F, int slot, int depth) const {
    auto Fh = m.hash(F);
    Line etaH{"eta:#", m.eta(Fh), {}, {Fh, F}, depth + 1};
    Line etaS{"eta*:_", m.eta_star(F), {F, Fh}, {}, depth};
    E mk;
    mk.kind = K::Vertex;
    mk.vname = "Tinv:_";
    mk.vertex = m.tri_inv(F);
    mk.vfrom = slot;
    mk.vto = slot - 1;
    mk.vdepth = depth;
    mk.src_len = 1;
    mk.outputs = {etaH, etaS};
    E rm;
    rm.kind = K::Vertex;
    rm.vname = "T:_";
    rm.vertex = m.tri(F);
    rm.vfrom = slot;
    rm.vto = slot + 1;
    rm.vdepth = depth;
    rm.src_len = 1;
    rm.outputs = {};
    return {mk, rm};
  }

  void enum_cusp_cancel(const D& d, const std::vector<Frame>& frames,
                        const std::vector<size_t>& slots, std::vector<Candidate>& out) const {
    for (size_t k = 0; k + 1 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      if (a.kind != K::Vertex || b.kind != K::Vertex) continue;
      auto cancels = [&](const E& x, const E& y) {
        if (!m.eq(m.tgt(x.vertex), m.src(y.vertex))) return false;
        return m.eq(m.vcomp(y.vertex, x.vertex), m.id_three(m.src(x.vertex)));
      };
      bool mk_then_rm = a.vto < a.vfrom && b.vto == b.vfrom + 1 && b.vfrom == a.vfrom &&
                        a.outputs.size() == 2 && cancels(a, b);
      bool rm_then_mk = a.vto == a.vfrom + 1 && b.vto < b.vfrom && b.vfrom == a.vfrom &&
                        b.outputs.size() == 2 && cancels(a, b);
      if (mk_then_rm || rm_then_mk) {
        push(out, Move::CuspCancel, k + 1, 0, [&d, k]() {
          D cand = d;
          cand.events.erase(cand.events.begin() + long(k), cand.events.begin() + long(k + 2));
          return cand;
        });
      }
    }
    for (size_t k : slots) {
      const Frame& fr = frames[k];
      size_t nslots = fr.lines.size() + 1;
      for (size_t slot = 0; slot < nslots; ++slot) {
        Word r = eng.region(fr, slot);
        for (size_t dep = 0; dep < r.size(); ++dep) {
          typename M::One entry = r[dep];
          for (int flip : {0, 1}) {
            push(out, Move::CuspCancel, k + 1, (slot * 8 + dep) * 2 + size_t(flip) + 1,
                 [this, &d, k, slot, dep, flip, entry]() {
                   auto [mk, rm] = cusp_pair(entry, int(slot + 1), int(dep));
                   D cand = d;
                   if (flip == 0)
                     cand.events.insert(cand.events.begin() + long(k), {mk, rm});
                   else
                     cand.events.insert(cand.events.begin() + long(k), {rm, mk});
                   return cand;
                 });
          }
        }
      }
    }
  }

  void enum_cusp_flip(const D& d, const std::vector<Frame>& frames,
                      const std::vector<size_t>& slots, std::vector<Candidate>& out) const {
    for (size_t k = 0; k + 2 < d.events.size(); ++k) {
      const E& a = d.events[k];
      const E& b = d.events[k + 1];
      const E& c = d.events[k + 2];
      if (a.kind != K::Vertex || b.kind != K::Cross || c.kind != K::Vertex) continue;
      if (!(a.vto < a.vfrom) || c.vto != c.vfrom + 1) continue;
      if (!(b.csign > 0 && b.cpos == a.vfrom + 1 && c.vfrom == a.vfrom)) continue;
      auto F = m.src(m.tgt(c.vertex));
      if (!m.eq(c.vertex, m.tri(F)) || !m.eq(a.vertex, m.tri_star(m.hash(F)))) continue;
      push(out, Move::CuspFlip, k + 1, 0, [&d, k]() {
        D cand = d;
        cand.events.erase(cand.events.begin() + long(k), cand.events.begin() + long(k + 3));
        return cand;
      });
    }
    for (size_t k : slots) {
      const Frame& fr = frames[k];
      for (size_t p = 0; p < fr.lines.size(); ++p) {
        const Line& l = fr.lines[p];
        if (l.src_word.size() != 2 || !l.tgt_word.empty()) continue;
        auto F = l.src_word[0];
        if (!(l.label == m.eta_star(F)) || !(l.src_word[1] == m.hash(F))) continue;
        int ldepth = l.depth;
        push(out, Move::CuspFlip, k + 1, p + 1, [this, &d, k, p, F, ldepth]() {
          auto F2 = F;
          auto Fh = m.hash(F2);
          int dpt = ldepth;
          E v1;
          v1.kind = K::Vertex;
          v1.vname = "Tstar:_#";
          v1.vertex = m.tri_star(Fh);
          v1.vfrom = int(p + 1);
          v1.vto = int(p);
          v1.vdepth = dpt + 1;
          v1.src_len = 1;
          v1.outputs = {Line{"eta:#", m.eta(Fh), {}, {Fh, F2}, dpt + 1},
                        Line{"eta*:_", m.eta_star(F2), {F2, Fh}, {}, dpt + 2}};
          E v2;
          v2.kind = K::Cross;
          v2.cpos = int(p + 2);
          v2.csign = +1;
          E v3;
          v3.kind = K::Vertex;
          v3.vname = "T:_";
          v3.vertex = m.tri(F2);
          v3.vfrom = int(p + 1);
          v3.vto = int(p + 2);
          v3.vdepth = dpt;
          v3.src_len = 1;
          D cand = d;
          cand.events.insert(cand.events.begin() + long(k), {v1, v2, v3});
          return cand;
        });
      }
    }
  }

  void enum_double_twist(const D& d, const std::vector<Frame>& frames,
                         const std::vector<size_t>& slots, std::vector<Candidate>& out) const {
    for (size_t k = 0; k < d.events.size(); ++k) {
      const E& e = d.events[k];
      if (e.kind != K::Vertex || e.vname.rfind("twist:", 0) != 0) continue;
      push(out, Move::DoubleTwist, k + 1, 0, [&d, k]() {
        D cand = d;
        cand.events.erase(cand.events.begin() + long(k));
        return cand;
      });
    }
    for (size_t k : slots) {
      const Frame& fr = frames[k];
      for (size_t p = 0; p < fr.lines.size(); ++p) {
        typename M::Two label = fr.lines[p].label;
        std::string lname = fr.lines[p].name;
        push(out, Move::DoubleTwist, k + 1, p + 1, [this, &d, k, p, label, lname]() {
          auto tw = twist_cell(label);
          if (!m.eq(m.src(tw), label) || !m.eq(m.tgt(tw), label))
            throw TypeError("twist: cell is not an endomorphism of the line");
          E v;
          v.kind = K::Vertex;
          v.vname = "twist:" + lname;
          v.vertex = tw;
          v.vfrom = v.vto = int(p + 1);
          v.vdepth = -1;
          v.src_len = -1;
          D cand = d;
          cand.events.insert(cand.events.begin() + long(k), v);
          return cand;
        });
      }
    }
  }
};

// ---------------------------------------------------------------------------

struct FuzzReport {
  long long steps_requested = 0;
  long long steps_applied = 0;
  long long violations = 0;
  uint64_t seed = 0;
  std::vector<std::string> witnesses;
  std::map<std::string, long long> applied;
  bool pass() const { return violations == 0; }
};

template <class M>
FuzzReport fuzz_moves(const DiagramEngine<M>& eng, const Diag<M>& d0, long long steps,
                      uint64_t seed, const std::vector<Move>& enabled,
                      size_t max_lines = 24, size_t max_layers = 64) {
  FuzzReport rep;
  rep.steps_requested = steps;
  rep.seed = seed;
  MoveEngine<M> mv(eng, max_lines, max_layers);
  const M& m = eng.m;
  auto reference = eng.evaluate(d0);
  Diag<M> cur = d0;
  SplitMix64 rng(seed);
  for (long long s = 0; s < steps; ++s) {
    auto cands = mv.candidates(cur, enabled, rng.next());
    std::optional<Diag<M>> next;
    std::string mv_name, mv_where;
    while (!cands.empty()) {
      size_t idx = size_t(rng.below(cands.size()));
      std::optional<Diag<M>> made;
      try {
        made = mv.materialize(cands[idx]);
      } catch (const TypeError&) {
        made = std::nullopt;
      }
      if (made) {
        next = std::move(made);
        mv_name = move_name(cands[idx].move);
        mv_where = cands[idx].where();
        break;
      }
      cands.erase(cands.begin() + long(idx));
    }
    if (!next) break;
    auto value = eng.evaluate(*next);
    rep.steps_applied++;
    rep.applied[mv_name]++;
    if (!m.eq(value, reference)) {
      rep.violations++;
      rep.witnesses.push_back(mv_name + " (" + mv_where + ") at step " +
                              std::to_string(s + 1) + " changed the value");
      break;
    }
    cur = std::move(*next);
  }
  return rep;
}

} // namespace graycat
