#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graycat/canonical.hpp"
#include "graycat/laws.hpp"

namespace graycat {

// Combinatorial encoding of a generic progressive diagram: a y-sequence of
// frames, each an x-ordered list of lines over depth words, transformed one
// event per layer. The w-deepest word entry comes first and composes
// leftmost; the x-leftmost line is on the source side of the horizontal
// composite.
template <class M>
struct Diag {
  using One = typename M::One;
  using Two = typename M::Two;
  using Three = typename M::Three;
  using Word = std::vector<One>;

  struct Line {
    std::string name;
    Two label{};
    Word src_word, tgt_word;
    int depth = 0;
    friend bool operator==(const Line& a, const Line& b) {
      return a.label == b.label && a.src_word == b.src_word &&
             a.tgt_word == b.tgt_word && a.depth == b.depth;
    }
  };

  struct Frame {
    Word r0; // leftmost region
    std::vector<Line> lines;
  };

  enum class EventKind { Vertex, Cross, Cap, Cup };

  struct Event {
    EventKind kind{};
    // vertex
    std::string vname;
    Three vertex{};
    int vfrom = 1, vto = 0; // consumed lines, 1-indexed; vto < vfrom means none
    int vdepth = 0;
    int src_len = 0;
    std::vector<Line> outputs;
    // cross
    int cpos = 1;
    int csign = +1;
    // cap / cup
    std::string cname;
    Two cap{};
    Word cap_src_word, cap_tgt_word;
    int cdepth = 0;

    friend bool operator==(const Event& a, const Event& b) {
      return a.kind == b.kind && a.vertex == b.vertex && a.vfrom == b.vfrom &&
             a.vto == b.vto && a.vdepth == b.vdepth && a.src_len == b.src_len &&
             a.outputs == b.outputs && a.cpos == b.cpos && a.csign == b.csign &&
             a.cap == b.cap && a.cap_src_word == b.cap_src_word &&
             a.cap_tgt_word == b.cap_tgt_word && a.cdepth == b.cdepth;
    }
  };

  friend bool operator==(const Diag& a, const Diag& b) {
    return a.input.r0 == b.input.r0 && a.input.lines == b.input.lines &&
           a.events == b.events;
  }

  std::string name;
  std::string model_spec;
  Frame input;
  std::vector<Event> events;
};

// ---------------------------------------------------------------------------

template <class M>
class DiagramEngine {
public:
  using D = Diag<M>;
  using Line = typename D::Line;
  using Frame = typename D::Frame;
  using Event = typename D::Event;
  using EventKind = typename D::EventKind;
  using Word = typename D::Word;
  using One = typename M::One;
  using Two = typename M::Two;
  using Three = typename M::Three;

  explicit DiagramEngine(const M& model) : m(model) {}

  const M& m;

  One box_word(const Word& w) const {
    if (w.empty()) return m.unit_one();
    One acc = w.front();
    for (size_t i = 1; i < w.size(); ++i) acc = m.box(acc, w[i]);
    return acc;
  }

  // region to the right of line k (0 = leftmost region)
  Word region(const Frame& f, size_t k) const {
    Word r = f.r0;
    for (size_t i = 0; i < k && i < f.lines.size(); ++i) r = apply_line(r, f.lines[i], int(i));
    return r;
  }

  Word apply_line(const Word& r, const Line& l, int idx) const {
    size_t d = size_t(l.depth);
    if (d + l.src_word.size() > r.size() ||
        !std::equal(l.src_word.begin(), l.src_word.end(), r.begin() + long(d)))
      throw TypeError("diagram: line " + std::to_string(idx + 1) + " (" + l.name +
                      ") does not match its region at depth " + std::to_string(l.depth));
    Word out(r.begin(), r.begin() + long(d));
    out.insert(out.end(), l.tgt_word.begin(), l.tgt_word.end());
    out.insert(out.end(), r.begin() + long(d + l.src_word.size()), r.end());
    return out;
  }

  void validate_line(const Line& l) const {
    if (!(m.src(l.label) == box_word(l.src_word)) || !(m.tgt(l.label) == box_word(l.tgt_word)))
      throw TypeError("diagram: line '" + l.name + "' label does not match its words");
  }

  void validate_frame(const Frame& f) const {
    for (const auto& l : f.lines) validate_line(l);
    region(f, f.lines.size());
  }

  // whisker of a line's 2-morphism inside its region
  Two whisker_line(const Word& pre, const Line& l) const {
    if (l.depth < 0 || size_t(l.depth) + l.src_word.size() > pre.size() ||
        !std::equal(l.src_word.begin(), l.src_word.end(), pre.begin() + long(l.depth)))
      throw TypeError("diagram: line '" + l.name + "' does not match its region");
    Word p(pre.begin(), pre.begin() + long(l.depth));
    Word q(pre.begin() + long(size_t(l.depth) + l.src_word.size()), pre.end());
    return m.whisk_l(box_word(p), m.whisk_r(l.label, box_word(q)));
  }

  Two frame_two(const Frame& f) const {
    Two acc = m.id_two(box_word(f.r0));
    Word r = f.r0;
    for (size_t i = 0; i < f.lines.size(); ++i) {
      acc = m.hcomp(whisker_line(r, f.lines[i]), acc);
      r = apply_line(r, f.lines[i], int(i));
    }
    return acc;
  }

  struct Step {
    Frame frame;  // frame after the event
    Three layer;  // whiskered 3-morphism of the layer
  };

  // ---- event application ----------------------------------------------------

  Step apply(const Frame& f, const Event& e) const {
    switch (e.kind) {
      case EventKind::Vertex: return apply_vertex(f, e);
      case EventKind::Cross: return apply_cross(f, e);
      case EventKind::Cap: return apply_cap(f, e);
      case EventKind::Cup: return apply_cup(f, e);
    }
    throw std::logic_error("diagram: bad event");
  }

  std::vector<Frame> typecheck(const typename D::Frame& input,
                               const std::vector<Event>& events) const {
    validate_frame(input);
    std::vector<Frame> out;
    out.push_back(input);
    Frame cur = input;
    for (size_t i = 0; i < events.size(); ++i) {
      try {
        cur = apply(cur, events[i]).frame;
      } catch (const TypeError& te) {
        throw TypeError("layer " + std::to_string(i + 1) + ": " + te.what());
      }
      out.push_back(cur);
    }
    return out;
  }

  std::vector<Frame> typecheck(const D& d) const { return typecheck(d.input, d.events); }

  Three evaluate(const D& d, std::vector<Three>* per_layer = nullptr) const {
    validate_frame(d.input);
    Frame cur = d.input;
    Three acc = m.id_three(frame_two(cur));
    for (size_t i = 0; i < d.events.size(); ++i) {
      Step s;
      try {
        s = apply(cur, d.events[i]);
      } catch (const TypeError& te) {
        throw TypeError("layer " + std::to_string(i + 1) + ": " + te.what());
      }
      if (per_layer) per_layer->push_back(s.layer);
      acc = m.vcomp(s.layer, acc);
      cur = s.frame;
    }
    return acc;
  }

private:
  // horizontal composite of the layer: identity whiskers for spectator
  // lines, the active cell in x-position
  Three layer_three(const Frame& f, size_t from, size_t count, const Three& active,
                    const Frame& post) const {
    Three acc = m.id_three(m.id_two(box_word(f.r0)));
    Word r = f.r0;
    for (size_t i = 0; i < from; ++i) {
      acc = m.hcomp(m.id_three(whisker_line(r, f.lines[i])), acc);
      r = apply_line(r, f.lines[i], int(i));
    }
    acc = m.hcomp(active, acc);
    // spectators to the right keep their pre-frame context
    Word r2 = r;
    for (size_t i = from; i < from + count; ++i) r2 = apply_line(r2, f.lines[i], int(i));
    for (size_t i = from + count; i < f.lines.size(); ++i) {
      acc = m.hcomp(m.id_three(whisker_line(r2, f.lines[i])), acc);
      r2 = apply_line(r2, f.lines[i], int(i));
    }
    (void)post;
    return acc;
  }

  Step apply_vertex(const Frame& f, const Event& e0) const {
    Event e = e0;
    int from = e.vfrom, to = e.vto;
    if (from < 1 || to > int(f.lines.size()) || to < from - 1)
      throw TypeError("diagram: vertex line range out of bounds");
    size_t ifrom = size_t(from - 1);
    size_t count = size_t(to - from + 1);
    if (e.src_len < 0 || e.vdepth < 0) {
      // derive the whisker split from a single consumed line
      if (count != 1)
        throw TypeError("diagram: vertex '" + e.vname + "' needs exactly one line");
      const Line& l = f.lines[ifrom];
      e.vdepth = l.depth;
      e.src_len = int(l.src_word.size());
      if (e.outputs.empty()) {
        Line outl = l;
        outl.name = e.vname;
        outl.label = m.tgt(e.vertex);
        e.outputs = {outl};
      }
    }
    Word pre = region(f, ifrom);
    // local whisker split at the vertex depth
    if (e.vdepth < 0 || size_t(e.vdepth) + size_t(e.src_len) > pre.size())
      throw TypeError("diagram: vertex depth does not fit the region");
    Word P(pre.begin(), pre.begin() + e.vdepth);
    Word Q(pre.begin() + e.vdepth + e.src_len, pre.end());
    One bp = box_word(P), bq = box_word(Q);
    // consumed composite must match the whiskered source
    Two comp_in = m.id_two(box_word(pre));
    Word r = pre;
    for (size_t i = ifrom; i < ifrom + count; ++i) {
      comp_in = m.hcomp(whisker_line(r, f.lines[i]), comp_in);
      r = apply_line(r, f.lines[i], int(i));
    }
    Two want_in = m.whisk_l(bp, m.whisk_r(m.src(e.vertex), bq));
    if (!m.eq(comp_in, want_in))
      throw TypeError("diagram: vertex '" + e.vname + "' source does not match lines " +
                      std::to_string(from) + ".." + std::to_string(to));
    // outputs must carry the region from pre to post
    Word post = r;
    Word walk = pre;
    Two comp_out = m.id_two(box_word(pre));
    for (size_t i = 0; i < e.outputs.size(); ++i) {
      validate_line(e.outputs[i]);
      comp_out = m.hcomp(whisker_line(walk, e.outputs[i]), comp_out);
      walk = apply_line(walk, e.outputs[i], int(ifrom + i));
    }
    if (walk != post)
      throw TypeError("diagram: vertex '" + e.vname + "' outputs do not restore the frame");
    Two want_out = m.whisk_l(bp, m.whisk_r(m.tgt(e.vertex), bq));
    if (!m.eq(comp_out, want_out))
      throw TypeError("diagram: vertex '" + e.vname + "' target does not match its outputs");

    Three active = m.whisk_l(bp, m.whisk_r(e.vertex, bq));
    Step s;
    s.layer = layer_three(f, ifrom, count, active, f);
    s.frame = f;
    s.frame.lines.erase(s.frame.lines.begin() + long(ifrom),
                        s.frame.lines.begin() + long(ifrom + count));
    s.frame.lines.insert(s.frame.lines.begin() + long(ifrom), e.outputs.begin(),
                         e.outputs.end());
    return s;
  }

  Step apply_cross(const Frame& f, const Event& e) const {
    size_t i = size_t(e.cpos - 1);
    if (e.cpos < 1 || i + 1 >= f.lines.size())
      throw TypeError("diagram: crossing position out of bounds");
    Line left = f.lines[i];
    Line right = f.lines[i + 1];
    Word r0 = region(f, i);
    Word r1 = apply_line(r0, left, int(i));
    apply_line(r1, right, int(i + 1));
    if (left.depth < 0 || right.depth < 0)
      throw TypeError("diagram: negative line depth at a crossing");
    Three cell{};
    Line nleft, nright;
    if (e.csign > 0) {
      // left line is shallower in w (bigger depth index), right is deeper
      int dR = right.depth, dL = left.depth;
      if (!(dR + int(right.src_word.size()) <= dL) ||
          size_t(dL) + left.src_word.size() > r0.size())
        throw TypeError("diagram: positive crossing needs the right line deeper");
      Word H(r0.begin(), r0.begin() + dR);
      Word G(r0.begin() + dR + long(right.src_word.size()), r0.begin() + dL);
      Word F(r0.begin() + dL + long(left.src_word.size()), r0.end());
      Two Mm = m.whisk_r(right.label, box_word(G));
      cell = m.whisk_l(box_word(H), m.whisk_r(m.sigma(Mm, left.label), box_word(F)));
      nleft = right;
      nright = left;
      nright.depth = dL + int(right.tgt_word.size()) - int(right.src_word.size());
    } else {
      // left line deeper in w
      int dL = left.depth, dR = right.depth;
      if (!(dL + int(left.src_word.size()) <= dR) ||
          size_t(dR) + right.src_word.size() > r0.size())
        throw TypeError("diagram: negative crossing needs the left line deeper");
      Word H(r0.begin(), r0.begin() + dL);
      Word G(r0.begin() + dL + long(left.src_word.size()), r0.begin() + dR);
      Word F(r0.begin() + dR + long(right.src_word.size()), r0.end());
      Two Mm = m.whisk_r(left.label, box_word(G));
      cell = m.whisk_l(box_word(H), m.whisk_r(m.sigma_inv(Mm, right.label), box_word(F)));
      nleft = right;
      nleft.depth = dR + int(left.src_word.size()) - int(left.tgt_word.size());
      nright = left;
    }
    Step s;
    s.layer = layer_three(f, i, 2, cell, f);
    s.frame = f;
    s.frame.lines[i] = nleft;
    s.frame.lines[i + 1] = nright;
    return s;
  }

  Step apply_cap(const Frame& f, const Event& e) const {
    size_t slot = size_t(e.cpos - 1); // insert so new lines sit at cpos, cpos+1
    if (e.cpos < 1 || slot > f.lines.size())
      throw TypeError("diagram: cap slot out of bounds");
    Word r = region(f, slot);
    size_t d = size_t(e.cdepth);
    if (d + e.cap_tgt_word.size() > r.size() ||
        !std::equal(e.cap_tgt_word.begin(), e.cap_tgt_word.end(), r.begin() + long(d)))
      throw TypeError("diagram: cap '" + e.cname + "' does not match the region");
    Line l1{e.cname + "*", m.star(e.cap), e.cap_tgt_word, e.cap_src_word, int(d)};
    Line l2{e.cname, e.cap, e.cap_src_word, e.cap_tgt_word, int(d)};
    Word P(r.begin(), r.begin() + long(d));
    Word Q(r.begin() + long(d + e.cap_tgt_word.size()), r.end());
    Three cell = m.whisk_l(box_word(P), m.whisk_r(m.eps(e.cap), box_word(Q)));
    Step s;
    s.layer = layer_three(f, slot, 0, cell, f);
    s.frame = f;
    s.frame.lines.insert(s.frame.lines.begin() + long(slot), {l1, l2});
    return s;
  }

  Step apply_cup(const Frame& f, const Event& e) const {
    size_t i = size_t(e.cpos - 1);
    if (e.cpos < 1 || i + 1 >= f.lines.size())
      throw TypeError("diagram: cup position out of bounds");
    const Line& l1 = f.lines[i];
    const Line& l2 = f.lines[i + 1];
    size_t d = size_t(e.cdepth);
    bool shape = l1.depth == int(d) && l2.depth == int(d) &&
                 l1.label == m.star(e.cap) && l2.label == e.cap &&
                 l1.src_word == e.cap_tgt_word && l2.src_word == e.cap_src_word;
    if (!shape)
      throw TypeError("diagram: cup '" + e.cname + "' does not match lines " +
                      std::to_string(e.cpos) + "," + std::to_string(e.cpos + 1));
    Word r = region(f, i);
    Word P(r.begin(), r.begin() + long(d));
    Word Q(r.begin() + long(d + e.cap_tgt_word.size()), r.end());
    Three cell = m.whisk_l(box_word(P), m.whisk_r(m.eps_star(e.cap), box_word(Q)));
    Step s;
    s.layer = layer_three(f, i, 2, cell, f);
    s.frame = f;
    s.frame.lines.erase(s.frame.lines.begin() + long(i), s.frame.lines.begin() + long(i + 2));
    return s;
  }
};

} // namespace graycat
