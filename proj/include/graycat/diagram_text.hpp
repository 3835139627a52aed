#pragma once

#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "graycat/diagram.hpp"
#include "graycat/moves.hpp"
#include "graycat/pivmodel.hpp"

namespace graycat {

// Text form of diagrams over the group model.
//
//   diagram <name> {
//     model <spec>;
//     let F  = one perm [0 1 2 3] dec 1;
//     let mu = two F -> F h 1 chi [0 1 2 3];
//     let P  = three mu -> mu scalar z^1;
//     input [ (F G) ; mu @ 0 ; ( ) ];
//     layer cross 1 +;
//     layer cap eta:F at 1 depth 0;
//     layer cup mu at 2 depth 1;
//     layer vertex T:F lines 2..3 depth 1;
//     layer vertex Tinv:F at 2 depth 1;
//     layer vertex P lines 1..1;
//   }
//
// Canonical references: eta:<one>, eta*:<one> for folds; T:, Tinv:, Tstar:,
// Tstarinv:<one> for cusps; twist:<two> for the double-twist cell.

struct PivDiagramDoc {
  std::string model_spec;
  std::vector<std::string> decl_lines; // verbatim declaration text for printing
  std::map<std::string, PivModel::One> ones;
  std::map<std::string, PivModel::Two> twos;
  std::map<std::string, PivModel::Three> threes;
  Diag<PivModel> diagram;
};

namespace diagtext {

struct Token {
  std::string text;
  int line = 1, col = 1;
};

inline std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto is_punct = [](char c) {
    return c == '{' || c == '}' || c == '[' || c == ']' || c == '(' || c == ')' ||
           c == ';' || c == '@' || c == '=' || c == '.';
  };
  while (i < s.size()) {
    char c = s[i];
    if (c == '\n') { ++line; col = 1; ++i; continue; }
    if (c == ' ' || c == '\t' || c == '\r') { ++col; ++i; continue; }
    if (c == '#') { while (i < s.size() && s[i] != '\n') ++i; continue; }
    if (c == '.' && i + 1 < s.size() && s[i + 1] == '.') {
      out.push_back({"..", line, col});
      i += 2; col += 2; continue;
    }
    if (is_punct(c)) {
      out.push_back({std::string(1, c), line, col});
      ++i; ++col; continue;
    }
    int c0 = col;
    std::string w;
    while (i < s.size() && !is_punct(s[i]) && s[i] != ' ' && s[i] != '\t' &&
           s[i] != '\n' && s[i] != '\r' && s[i] != '#') {
      w.push_back(s[i]);
      ++i; ++col;
    }
    out.push_back({w, line, c0});
  }
  return out;
}

class Parser {
public:
  Parser(std::string text) : toks_(lex(text)) {}

  PivDiagramDoc parse(const PivModel* external_model = nullptr) {
    PivDiagramDoc doc;
    expect("diagram");
    doc.diagram.name = word("diagram name");
    expect("{");
    expect("model");
    {
      std::string spec;
      while (peek() != ";" && peek() != "<eof>") spec += word("model spec");
      doc.model_spec = spec;
    }
    expect(";");
    doc.diagram.model_spec = doc.model_spec;
    const PivModel* m = external_model;
    std::unique_ptr<PivModel> owned;
    if (!m) {
      owned = std::make_unique<PivModel>(parse_pivdec_spec(doc.model_spec));
      m = owned.get();
    }
    model_ = m;
    while (peek() == "let") parse_let(doc);
    parse_input(doc);
    while (peek() == "layer") parse_layer(doc);
    expect("}");
    if (owned) owned_model_ = std::move(owned);
    return doc;
  }

  std::unique_ptr<PivModel> take_model() { return std::move(owned_model_); }

private:
  [[noreturn]] void fail(const std::string& why) {
    int l = 1, c = 1;
    if (pos_ < toks_.size()) { l = toks_[pos_].line; c = toks_[pos_].col; }
    else if (!toks_.empty()) { l = toks_.back().line; c = toks_.back().col; }
    throw ParseError(l, c, why);
  }
  const std::string& peek() {
    static const std::string eof = "<eof>";
    return pos_ < toks_.size() ? toks_[pos_].text : eof;
  }
  std::string word(const std::string& what) {
    if (pos_ >= toks_.size()) fail("expected " + what);
    return toks_[pos_++].text;
  }
  void expect(const std::string& t) {
    if (peek() != t) fail("expected '" + t + "', found '" + peek() + "'");
    ++pos_;
  }
  int integer(const std::string& what) {
    std::string w = word(what);
    try {
      size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument(w);
      return v;
    } catch (...) { fail("expected integer " + what + ", found '" + w + "'"); }
  }
  std::vector<int> int_list() {
    expect("[");
    std::vector<int> out;
    while (peek() != "]") out.push_back(integer("list entry"));
    expect("]");
    return out;
  }

  Cyclotomic scalar_value() {
    int N = model_->scalar_order();
    std::string w = word("scalar");
    bool neg = false;
    if (!w.empty() && w[0] == '-') { neg = true; w = w.substr(1); }
    Cyclotomic v = Cyclotomic::zero(N);
    if (w == "0") v = Cyclotomic::zero(N);
    else if (w == "1") v = Cyclotomic::one(N);
    else if (w.rfind("z^", 0) == 0) {
      try { v = Cyclotomic::root(N, std::stoi(w.substr(2))); }
      catch (...) { fail("bad scalar '" + w + "'"); }
    } else fail("bad scalar '" + w + "'");
    return neg ? -v : v;
  }

  void parse_let(PivDiagramDoc& doc) {
    size_t start = pos_;
    expect("let");
    std::string name = word("declaration name");
    expect("=");
    std::string kind = word("declaration kind");
    const PivModel& m = *model_;
    if (kind == "one") {
      expect("perm");
      auto perm = int_list();
      expect("dec");
      int dec = integer("decoration");
      expect(";");
      doc.ones.emplace(name, m.make_one(perm, dec));
    } else if (kind == "two") {
      std::string sname = word("source 1-morphism");
      expect("->");
      std::string tname = word("target 1-morphism");
      expect("h");
      int h = integer("conjugator");
      expect("chi");
      auto chi = int_list();
      expect(";");
      auto src = find(doc.ones, sname, "1-morphism");
      auto tgt = find(doc.ones, tname, "1-morphism");
      std::vector<int16_t> c(chi.begin(), chi.end());
      doc.twos.emplace(name, m.make_two(src, tgt, h, c));
    } else if (kind == "three") {
      std::string sname = word("source 2-morphism");
      expect("->");
      std::string tname = word("target 2-morphism");
      expect("scalar");
      auto v = scalar_value();
      expect(";");
      auto src = find(doc.twos, sname, "2-morphism");
      auto tgt = find(doc.twos, tname, "2-morphism");
      doc.threes.emplace(name, m.make_three(src, tgt, v));
    } else {
      fail("unknown declaration kind '" + kind + "'");
    }
    std::ostringstream os;
    for (size_t i = start; i < pos_; ++i) os << (i > start ? " " : "") << toks_[i].text;
    doc.decl_lines.push_back(os.str());
  }

  template <class T>
  const T& find(const std::map<std::string, T>& table, const std::string& name,
                const std::string& what) {
    auto it = table.find(name);
    if (it == table.end()) fail("unknown " + what + " '" + name + "'");
    return it->second;
  }

  PivModel::One one_ref(PivDiagramDoc& doc, const std::string& name) {
    return find(doc.ones, name, "1-morphism");
  }

  // a named 2-morphism together with its depth words
  struct TwoRef {
    std::string name;
    PivModel::Two label;
    std::vector<PivModel::One> src_word, tgt_word;
  };

  TwoRef two_ref(PivDiagramDoc& doc, const std::string& name) {
    const PivModel& m = *model_;
    if (name.rfind("eta*:", 0) == 0) {
      auto F = one_ref(doc, name.substr(5));
      return {name, m.eta_star(F), {F, m.hash(F)}, {}};
    }
    if (name.rfind("eta:", 0) == 0) {
      auto F = one_ref(doc, name.substr(4));
      return {name, m.eta(F), {}, {F, m.hash(F)}};
    }
    auto t = find(doc.twos, name, "2-morphism");
    return {name, t, {m.src(t)}, {m.tgt(t)}};
  }

  void parse_input(PivDiagramDoc& doc) {
    expect("input");
    expect("[");
    expect("(");
    while (peek() != ")") doc.diagram.input.r0.push_back(one_ref(doc, word("1-morphism")));
    expect(")");
    while (peek() == ";") {
      expect(";");
      auto ref = two_ref(doc, word("line label"));
      expect("@");
      int depth = integer("line depth");
      typename Diag<PivModel>::Line l{ref.name, ref.label, ref.src_word, ref.tgt_word, depth};
      doc.diagram.input.lines.push_back(std::move(l));
      expect(";");
      expect("(");
      while (peek() != ")") word("1-morphism"); // redundant region, derived
      expect(")");
    }
    expect("]");
    expect(";");
  }

  void parse_layer(PivDiagramDoc& doc) {
    using D = Diag<PivModel>;
    using E = typename D::Event;
    using K = typename D::EventKind;
    const PivModel& m = *model_;
    expect("layer");
    std::string kind = word("event kind");
    E e;
    if (kind == "cross") {
      e.kind = K::Cross;
      e.cpos = integer("crossing position");
      std::string sgn = word("crossing sign");
      if (sgn == "+") e.csign = +1;
      else if (sgn == "-") e.csign = -1;
      else fail("crossing sign must be + or -");
    } else if (kind == "cap" || kind == "cup") {
      e.kind = kind == "cap" ? K::Cap : K::Cup;
      auto ref = two_ref(doc, word("cap label"));
      e.cname = ref.name;
      e.cap = ref.label;
      e.cap_src_word = ref.src_word;
      e.cap_tgt_word = ref.tgt_word;
      expect("at");
      e.cpos = integer("slot");
      if (peek() == "depth") { expect("depth"); e.cdepth = integer("depth"); }
    } else if (kind == "vertex") {
      e.kind = K::Vertex;
      std::string name = word("vertex label");
      e.vname = name;
      bool ranged = false;
      if (peek() == "lines") {
        expect("lines");
        e.vfrom = integer("range start");
        expect("..");
        e.vto = integer("range end");
        ranged = true;
      } else {
        expect("at");
        e.vfrom = integer("slot");
        e.vto = e.vfrom - 1;
      }
      int depth = 0;
      bool have_depth = false;
      if (peek() == "depth") { expect("depth"); depth = integer("depth"); have_depth = true; }
      fill_vertex(doc, e, name, depth, have_depth, ranged);
    } else {
      fail("unknown event kind '" + kind + "'");
    }
    expect(";");
    doc.diagram.events.push_back(std::move(e));
  }

  void fill_vertex(PivDiagramDoc& doc, typename Diag<PivModel>::Event& e,
                   const std::string& name, int depth, bool have_depth, bool ranged) {
    using Line = typename Diag<PivModel>::Line;
    const PivModel& m = *model_;
    auto cusp_one = [&](size_t off) { return one_ref(doc, name.substr(off)); };
    if (name.rfind("T:", 0) == 0) {
      auto F = cusp_one(2);
      e.vertex = m.tri(F);
      e.vdepth = depth;
      e.src_len = 1;
    } else if (name.rfind("Tinv:", 0) == 0) {
      auto F = cusp_one(5);
      auto Fh = m.hash(F);
      std::string fn = name.substr(5);
      e.vertex = m.tri_inv(F);
      e.vdepth = depth;
      e.src_len = 1;
      e.outputs = {Line{"eta:" + fn + "#", m.eta(Fh), {}, {Fh, F}, depth + 1},
                   Line{"eta*:" + fn, m.eta_star(F), {F, Fh}, {}, depth}};
    } else if (name.rfind("Tstarinv:", 0) == 0) {
      auto F = cusp_one(9);
      e.vertex = m.tri_star_inv(F);
      e.vdepth = depth;
      e.src_len = 1;
    } else if (name.rfind("Tstar:", 0) == 0) {
      auto F = cusp_one(6);
      auto Fh = m.hash(F);
      std::string fn = name.substr(6);
      e.vertex = m.tri_star(F);
      e.vdepth = depth;
      e.src_len = 1;
      e.outputs = {Line{"eta:" + fn, m.eta(F), {}, {F, Fh}, depth},
                   Line{"eta*:" + fn + "#", m.eta_star(Fh), {Fh, F}, {}, depth + 1}};
    } else if (name.rfind("twist:", 0) == 0) {
      auto t = find(doc.twos, name.substr(6), "2-morphism");
      DiagramEngine<PivModel> eng(m);
      MoveEngine<PivModel> mv(eng);
      e.vertex = mv.twist_cell(t);
      e.vdepth = -1;
      e.src_len = -1;
    } else {
      e.vertex = find(doc.threes, name, "3-morphism");
      if (ranged && e.vto == e.vfrom && !have_depth) {
        e.vdepth = -1;
        e.src_len = -1;
      } else {
        e.vdepth = depth;
        e.src_len = -1;
      }
    }
  }

  const PivModel* model_ = nullptr;
  std::vector<Token> toks_;
  size_t pos_ = 0;
  std::unique_ptr<PivModel> owned_model_;
};

} // namespace diagtext

// Parse a diagram document; if `model` is null, the document's own spec is
// instantiated and returned through `owned`.
inline PivDiagramDoc parse_diagram(const std::string& text,
                                   std::unique_ptr<PivModel>* owned = nullptr,
                                   const PivModel* model = nullptr) {
  diagtext::Parser p(text);
  auto doc = p.parse(model);
  if (owned) *owned = p.take_model();
  return doc;
}

// Serialise a document back to text. Declarations are kept verbatim; frames
// and layers are regenerated from the structure.
inline std::string print_diagram(const PivDiagramDoc& doc) {
  using K = Diag<PivModel>::EventKind;
  std::ostringstream os;
  os << "diagram " << doc.diagram.name << " {\n";
  os << "  model " << doc.model_spec << ";\n";
  for (const auto& l : doc.decl_lines) os << "  " << l << "\n";
  auto region_names = [&](const std::vector<PivModel::One>& w) {
    std::string out = "(";
    for (size_t i = 0; i < w.size(); ++i) {
      std::string nm = "?";
      for (const auto& [k, v] : doc.ones)
        if (v == w[i]) { nm = k; break; }
      out += (i ? " " : "") + nm;
    }
    return out + ")";
  };
  os << "  input [ " << region_names(doc.diagram.input.r0);
  for (const auto& l : doc.diagram.input.lines) {
    os << " ; " << l.name << " @ " << l.depth << " ; ()";
  }
  os << " ];\n";
  for (const auto& e : doc.diagram.events) {
    os << "  layer ";
    switch (e.kind) {
      case K::Cross:
        os << "cross " << e.cpos << " " << (e.csign > 0 ? "+" : "-");
        break;
      case K::Cap:
        os << "cap " << e.cname << " at " << e.cpos << " depth " << e.cdepth;
        break;
      case K::Cup:
        os << "cup " << e.cname << " at " << e.cpos << " depth " << e.cdepth;
        break;
      case K::Vertex:
        os << "vertex " << e.vname;
        if (e.vto >= e.vfrom) os << " lines " << e.vfrom << " .. " << e.vto;
        else os << " at " << e.vfrom;
        if (e.src_len >= 0) os << " depth " << e.vdepth;
        break;
    }
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace graycat
