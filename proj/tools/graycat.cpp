// Command-line driver: law suites, diagram evaluation, surface invariants
// and move fuzzing over the group model, with reproducible JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "graycat/diagram_text.hpp"
#include "graycat/laws.hpp"
#include "graycat/moves.hpp"
#include "graycat/pivmodel.hpp"
#include "graycat/trace.hpp"

using namespace graycat;
using Json = nlohmann::ordered_json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

uint64_t default_seed() {
  if (const char* env = std::getenv("GRAYCAT_SEED")) {
    try { return std::stoull(env); } catch (...) {}
  }
  return 7;
}

int parse_power(const std::string& tok, const std::string& what) {
  // "z^k" | "1" | "-1"
  if (tok == "1" || tok == "z^0") return 0;
  if (tok.rfind("z^", 0) == 0) return std::stoi(tok.substr(2));
  throw std::invalid_argument(what + ": expected z^k, found '" + tok + "'");
}

PivModel load_model(const std::string& spec) {
  if (spec.rfind("pivdec:", 0) == 0) return parse_pivdec_spec(spec);
  // otherwise a JSON model file: either a flat group file
  //   { "name", "order", "table", "lambda": ["z^k",...], "chi": "all" }
  // or { "group": "cyclic:4", "lambda": "z^1", "chi": "trivial" }
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open model file '" + spec + "'");
  Json j = Json::parse(in);
  PivModel::ChiMode mode = PivModel::ChiMode::All;
  if (j.contains("chi") && j["chi"].get<std::string>() == "trivial")
    mode = PivModel::ChiMode::Trivial;
  if (j.contains("group") && j["group"].is_string()) {
    std::string g = j["group"].get<std::string>();
    std::string lam = j.value("lambda", std::string("trivial"));
    std::string full = "pivdec:" + g + ":lambda=" + lam +
                       (mode == PivModel::ChiMode::Trivial ? ":chi=trivial" : "");
    return parse_pivdec_spec(full);
  }
  auto table = j.at("table").get<std::vector<std::vector<int>>>();
  FiniteGroup group(j.value("name", std::string("group")), table);
  int N = group.exponent();
  std::vector<int> lam(size_t(group.order()), 0);
  if (j.contains("lambda")) {
    auto entries = j["lambda"].get<std::vector<std::string>>();
    if (int(entries.size()) != group.order())
      throw std::invalid_argument("lambda must list one value per element");
    for (int i = 0; i < group.order(); ++i)
      lam[size_t(i)] = ((parse_power(entries[size_t(i)], "lambda") % N) + N) % N;
  }
  return PivModel(std::move(group), std::move(lam), mode, spec);
}

void emit(const Json& j, const std::string& path) {
  std::string text = j.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    std::ofstream out(path, std::ios::binary);
    out << text;
  }
}

Json suite_json(const SuiteReport& rep) {
  Json laws = Json::array();
  for (const auto& l : rep.laws) {
    Json failures = Json::array();
    for (const auto& f : l.failures) failures.push_back(f);
    laws.push_back(Json{{"name", l.name},
                        {"paper_ref", l.ref},
                        {"instances", l.instances},
                        {"failures", failures}});
  }
  return Json{{"suite", rep.suite}, {"pass", rep.pass()}, {"laws", laws}};
}

std::string frame_text(const DiagramEngine<PivModel>& eng, const PivModel& m,
                       const Diag<PivModel>::Frame& f) {
  std::ostringstream os;
  auto word = [&](const Diag<PivModel>::Word& w) {
    std::string t = "(";
    for (size_t i = 0; i < w.size(); ++i) t += (i ? " " : "") + m.describe(w[i]);
    return t + ")";
  };
  os << "[" << word(f.r0);
  Diag<PivModel>::Word r = f.r0;
  for (size_t i = 0; i < f.lines.size(); ++i) {
    os << "; " << f.lines[i].name << "@" << f.lines[i].depth;
    r = eng.apply_line(r, f.lines[i], int(i));
    os << "; " << word(r);
  }
  os << "]";
  return os.str();
}

int cmd_laws(const std::string& model_spec, const std::string& suites_csv,
             uint64_t samples, uint64_t seed, const std::string& json_path) {
  PivModel m = load_model(model_spec);
  std::vector<Suite> suites;
  std::stringstream ss(suites_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (Suite s : {Suite::Gray, Suite::Planar, Suite::Duals, Suite::Functoriality,
                      Suite::Natiso, Suite::Folds, Suite::Spatial, Suite::Spherical,
                      Suite::Semisimple})
        suites.push_back(s);
      continue;
    }
    auto s = parse_suite(item);
    if (!s) {
      std::cerr << "unknown suite '" << item << "'\n";
      return kExitUsage;
    }
    suites.push_back(*s);
  }
  if (suites.empty()) {
    std::cerr << "no suites selected\n";
    return kExitUsage;
  }
  Json out;
  out["command"] = "laws";
  out["model"] = model_spec;
  out["seed"] = seed;
  out["samples"] = samples;
  Json arr = Json::array();
  bool pass = true;
  for (Suite s : suites) {
    auto rep = check_laws(m, s, samples, seed);
    pass = pass && rep.pass();
    arr.push_back(suite_json(rep));
  }
  out["suites"] = arr;
  out["pass"] = pass;
  emit(out, json_path);
  return pass ? kExitPass : kExitFailure;
}

int cmd_eval(const std::string& diagram_path, const std::string& model_spec,
             const std::string& json_path) {
  std::ifstream in(diagram_path);
  if (!in) {
    std::cerr << "cannot open diagram file '" << diagram_path << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::unique_ptr<PivModel> owned;
  PivDiagramDoc doc;
  std::optional<PivModel> external;
  if (!model_spec.empty()) external = load_model(model_spec);
  doc = parse_diagram(buf.str(), &owned, external ? &*external : nullptr);
  const PivModel& m = external ? *external : *owned;
  DiagramEngine<PivModel> eng(m);
  auto frames = eng.typecheck(doc.diagram);
  std::vector<PivModel::Three> layers;
  auto value = eng.evaluate(doc.diagram, &layers);
  Json out;
  out["command"] = "eval";
  out["model"] = external ? model_spec : doc.model_spec;
  out["diagram"] = doc.diagram.name;
  out["zeta_order"] = m.scalar_order();
  out["frame_out"] = frame_text(eng, m, frames.back());
  out["value"] = Json{{"src", m.describe(m.src(value))},
                      {"tgt", m.describe(m.tgt(value))},
                      {"scalar", value.s.str()}};
  Json trace = Json::array();
  for (const auto& l : layers) trace.push_back(m.describe(l));
  out["trace"] = trace;
  emit(out, json_path);
  return kExitPass;
}

int cmd_invariant(const std::string& model_spec, const std::string& functor,
                  int genus, const std::string& json_path) {
  PivModel m = load_model(model_spec);
  // --functor id:<c> or p0,p1,...:<c>
  auto colon = functor.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "functor must be of the form id:<dec> or p0,p1,..:<dec>\n";
    return kExitUsage;
  }
  std::string ptext = functor.substr(0, colon);
  int dec = std::stoi(functor.substr(colon + 1));
  std::vector<int> perm;
  if (ptext == "id") {
    for (int i = 0; i < m.group().order(); ++i) perm.push_back(i);
  } else {
    std::stringstream ps(ptext);
    std::string tok;
    while (std::getline(ps, tok, ',')) perm.push_back(std::stoi(tok));
  }
  PivModel::One F;
  try {
    F = m.make_one(perm, dec);
  } catch (const std::exception& e) {
    std::cerr << "invalid decorated functor: " << e.what() << "\n";
    return kExitUsage;
  }
  if (genus < 0) {
    std::cerr << "genus must be non-negative\n";
    return kExitUsage;
  }
  Json out;
  out["command"] = "invariant";
  out["model"] = model_spec;
  out["functor"] = functor;
  out["zeta_order"] = m.scalar_order();
  Json results = Json::array();
  bool pass = true;
  for (int g = 0; g <= genus; ++g) {
    auto a = surface_invariant<PivModel, Cyclotomic>(m, F, g);
    auto b = surface_invariant<PivModel, Cyclotomic>(m, m.hash(F), g);
    auto rec = a * b;
    pass = pass && rec.is_one();
    results.push_back(Json{{"genus", g},
                           {"lambda", a.str()},
                           {"dual_lambda", b.str()},
                           {"reciprocity", rec.str()}});
  }
  out["results"] = results;
  out["pass"] = pass;
  emit(out, json_path);
  return pass ? kExitPass : kExitFailure;
}

int cmd_fuzz(const std::string& diagram_path, const std::string& model_spec,
             long long steps, uint64_t seed, const std::string& moves_csv,
             const std::string& json_path) {
  std::ifstream in(diagram_path);
  if (!in) {
    std::cerr << "cannot open diagram file '" << diagram_path << "'\n";
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  std::unique_ptr<PivModel> owned;
  std::optional<PivModel> external;
  if (!model_spec.empty()) external = load_model(model_spec);
  auto doc = parse_diagram(buf.str(), &owned, external ? &*external : nullptr);
  const PivModel& m = external ? *external : *owned;
  std::vector<Move> moves;
  std::stringstream ms(moves_csv);
  std::string item;
  while (std::getline(ms, item, ',')) {
    if (item.empty()) continue;
    if (item == "all") {
      for (Move mv : {Move::Interchange, Move::RII, Move::RIII, Move::Slide, Move::Snake,
                      Move::Pivotal, Move::CuspCancel, Move::CuspFlip, Move::DoubleTwist})
        moves.push_back(mv);
      continue;
    }
    auto mv = parse_move(item);
    if (!mv) {
      std::cerr << "unknown move '" << item << "'\n";
      return kExitUsage;
    }
    moves.push_back(*mv);
  }
  if (moves.empty()) {
    std::cerr << "no moves selected\n";
    return kExitUsage;
  }
  DiagramEngine<PivModel> eng(m);
  auto rep = fuzz_moves(eng, doc.diagram, steps, seed, moves, 16, 40);
  Json out;
  out["command"] = "fuzz";
  out["model"] = external ? model_spec : doc.model_spec;
  out["diagram"] = doc.diagram.name;
  out["steps"] = rep.steps_requested;
  out["steps_applied"] = rep.steps_applied;
  out["seed"] = rep.seed;
  Json applied = Json::object();
  for (const auto& [k, v] : rep.applied) applied[k] = v;
  out["applied"] = applied;
  out["violations"] = rep.violations;
  Json wits = Json::array();
  for (const auto& w : rep.witnesses) wits.push_back(w);
  out["witnesses"] = wits;
  out["pass"] = rep.pass();
  emit(out, json_path);
  return rep.pass() ? kExitPass : kExitFailure;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact evaluator for the group model of a Gray category with duals"};
  app.require_subcommand(1);

  std::string model, suites = "all", diagram, json_path, functor = "id:1",
              moves = "all";
  uint64_t samples = 200000;
  uint64_t seed = default_seed();
  long long steps = 100;
  int genus = 3;

  auto* laws = app.add_subcommand("laws", "run axiom/law suites on a model");
  laws->add_option("--model", model, "model spec or JSON file")->required();
  laws->add_option("--suite", suites, "comma list: gray,planar,duals,functoriality,natiso,folds,spatial,spherical,semisimple or all");
  laws->add_option("--samples", samples, "per-law instance budget");
  laws->add_option("--seed", seed, "sampling seed");
  laws->add_option("--json", json_path, "write the report to this path");

  auto* ev = app.add_subcommand("eval", "typecheck and evaluate a diagram file");
  ev->add_option("--diagram", diagram, "diagram file")->required();
  ev->add_option("--model", model, "override the file's model");
  ev->add_option("--json", json_path, "write the report to this path");

  auto* inv = app.add_subcommand("invariant", "genus-g surface invariants of a decorated functor");
  inv->add_option("--model", model, "model spec or JSON file")->required();
  inv->add_option("--functor", functor, "decorated functor, id:<dec> or p0,p1,..:<dec>");
  inv->add_option("--genus", genus, "compute genus 0..G");
  inv->add_option("--json", json_path, "write the report to this path");

  auto* fz = app.add_subcommand("fuzz", "apply random moves and check invariance");
  fz->add_option("--diagram", diagram, "diagram file")->required();
  fz->add_option("--model", model, "override the file's model");
  fz->add_option("--steps", steps, "number of moves to apply");
  fz->add_option("--seed", seed, "move-selection seed");
  fz->add_option("--moves", moves, "comma list of move names or all");
  fz->add_option("--json", json_path, "write the report to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (laws->parsed()) return cmd_laws(model, suites, samples, seed, json_path);
    if (ev->parsed()) return cmd_eval(diagram, model, json_path);
    if (inv->parsed()) return cmd_invariant(model, functor, genus, json_path);
    if (fz->parsed()) return cmd_fuzz(diagram, model, steps, seed, moves, json_path);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const TypeError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
