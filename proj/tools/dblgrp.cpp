// Command-line front end. Exit codes: 0 success, 1 mathematical failure, 2 malformed input.
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dblgrp/cocycle.hpp"
#include "dblgrp/cohomology.hpp"
#include "dblgrp/io.hpp"
#include "dblgrp/wha.hpp"
#include "json.hpp"

#ifndef DBLGRP_CORPUS_DIR
#define DBLGRP_CORPUS_DIR "corpus"
#endif

using namespace dblgrp;
using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

struct Options {
  std::string input;
  std::string cocycle;
  std::string on;
  std::string output;
  std::string to = "double_groupoid";
  std::string part = "D";
  long p = 0;
  std::optional<int> m;
  std::optional<long> zeta;
  int degree = 3;
  bool strict = false;
  std::string format = "text";
  int threads = 1;
};

// "examples/<name>" refers to the shipped corpus.
std::string resolve(const std::string& path) {
  if (fs::exists(path)) return path;
  if (fs::exists(path + ".json")) return path + ".json";
  const std::string prefix = "examples/";
  if (path.rfind(prefix, 0) == 0) {
    const char* env = std::getenv("DBLGRP_CORPUS");
    const fs::path dir = env ? fs::path(env) : fs::path(DBLGRP_CORPUS_DIR);
    const fs::path p = dir / (path.substr(prefix.size()) + ".json");
    if (fs::exists(p)) return p.string();
  }
  throw StructuralError("no such input: " + path);
}

DoubleGroupoid as_double(const Document& doc) {
  if (const auto* t = std::get_if<DoubleGroupoid>(&doc)) return *t;
  if (const auto* mp = std::get_if<MatchedPair>(&doc)) {
    const Report r = validate_matched_pair(*mp);
    if (!r.ok()) throw MathError("matched pair fails " + r.violations.front().axiom, r.violations.front().witness);
    return to_vacant_double(*mp);
  }
  throw FormatError(FormatCode::Kind, std::string("expected a double groupoid or matched pair, got ") + kind_name(doc));
}

std::optional<CocyclePair> load_cocycle(const std::string& path) {
  if (path.empty()) return std::nullopt;
  const Document doc = load_document(resolve(path));
  if (const auto* cp = std::get_if<CocyclePair>(&doc)) return *cp;
  throw FormatError(FormatCode::Kind, "expected a cocycle pair");
}

FieldSpec field_for(const Options& o, const std::optional<CocyclePair>& cp) {
  const int m = o.m.value_or(cp ? cp->m : 1);
  return make_field_spec(o.p, m, o.zeta);
}

std::string field_name(const FieldSpec& fs) {
  std::string s = fs.p == 0 ? "Q" : "F_" + std::to_string(fs.p);
  if (fs.m > 1) s += " (zeta = " + std::to_string(fs.zeta) + " of order " + std::to_string(fs.m) + ")";
  return s;
}

Normalization normalization(const Options& o) { return o.strict ? Normalization::Strict : Normalization::Default; }

json violations(const Report& r) {
  json out = json::array();
  for (const auto& v : r.violations) out.push_back({{"axiom", v.axiom}, {"witness", v.witness}});
  return out;
}

std::string flat(const json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_array()) {
    std::string s;
    for (size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + (j[i].is_array() ? "[" + flat(j[i]) + "]" : flat(j[i]));
    return s;
  }
  if (j.is_object()) {
    std::string s;
    for (const auto& [k, v] : j.items()) s += (s.empty() ? "" : ", ") + k + "=" + flat(v);
    return s;
  }
  return j.dump();
}

void render(const json& report, const std::string& format) {
  if (format == "machine") {
    std::cout << report.dump(2) << "\n";
    return;
  }
  for (const auto& [k, v] : report.items()) {
    if (v.is_array() && !v.empty() && v[0].is_object()) {
      std::cout << k << ":\n";
      for (const auto& e : v) std::cout << "  " << flat(e) << "\n";
    } else {
      std::cout << k << ": " << flat(v) << "\n";
    }
  }
}

int finish(const json& report, const Options& o, bool ok) {
  render(report, o.format);
  return ok ? 0 : 1;
}

int cmd_validate(const Options& o) {
  const Document doc = load_document(resolve(o.input));
  json rep{{"kind", kind_name(doc)}};
  Report r;
  switch (doc.index()) {
    case 0: r = validate_groupoid(std::get<Groupoid>(doc)); break;
    case 1: r = validate_double_groupoid(std::get<DoubleGroupoid>(doc)); break;
    case 2: r = validate_matched_pair(std::get<MatchedPair>(doc)); break;
    case 3: {
      if (o.on.empty()) throw StructuralError("validating a cocycle pair needs --on <double groupoid>");
      r = validate_cocycle_pair(as_double(load_document(resolve(o.on))), std::get<CocyclePair>(doc));
      break;
    }
    case 4: break;  // checked while parsing
  }
  rep["ok"] = r.ok();
  rep["violations"] = violations(r);
  return finish(rep, o, r.ok());
}

int cmd_vacant(const Options& o) {
  const DoubleGroupoid t = as_double(load_document(resolve(o.input)));
  const VacancyVerdict v = is_vacant(t);
  json rep{{"vacant", v.vacant}, {"consistent", v.consistent}};
  rep["corners"] = json::object();
  for (const auto& [k, b] : v.by_corner) rep["corners"][k] = b;
  rep["witnesses"] = json::array();
  for (const auto& w : v.witnesses)
    rep["witnesses"].push_back({{"corner", w.corner}, {"edge_h", w.edge_h}, {"edge_v", w.edge_v}, {"fillers", w.fillers}});
  return finish(rep, o, v.vacant);
}

int cmd_convert(const Options& o) {
  const Document doc = load_document(resolve(o.input));
  Document out;
  if (o.to == "double_groupoid") {
    out = as_double(doc);
  } else if (o.to == "matched_pair") {
    if (const auto* mp = std::get_if<MatchedPair>(&doc))
      out = *mp;
    else
      out = from_vacant_double(as_double(doc));
  } else {
    throw StructuralError("--to must be double_groupoid or matched_pair");
  }
  if (o.output.empty())
    std::cout << emit_document(out);
  else
    save_document(o.output, out);
  return 0;
}

json hopf_json(const QuantumGroupoid& w) {
  const HopfVerdict h = hopf_verdict(w);
  return {{"hopf", h.hopf}, {"single_point", h.single_point}, {"cross_term", h.cross_term}};
}

int cmd_wha_build(const Options& o) {
  const DoubleGroupoid t = as_double(load_document(resolve(o.input)));
  const auto cp = load_cocycle(o.cocycle);
  const QuantumGroupoid w = build_quantum_groupoid(t, cp, field_for(o, cp));
  json rep{{"field", field_name(w.field.spec())}, {"dimension", w.dim()}, {"twisted", w.twisted}};
  rep["unit"] = json::array();
  for (const auto& [b, c] : w.unit) rep["unit"].push_back(b);
  rep["hopf"] = hopf_json(w);
  rep["involutory"] = check_involutory(w);
  if (o.format == "machine") {
    json prod = json::array(), coprod = json::array();
    for (int a = 0; a < w.dim(); ++a)
      for (int b = 0; b < w.dim(); ++b) {
        const size_t k = static_cast<size_t>(a) * w.dim() + b;
        if (w.prod_box[k] >= 0) prod.push_back({a, b, w.prod_box[k], w.prod_coef[k].get_str()});
      }
    for (int a = 0; a < w.dim(); ++a)
      for (const auto& term : w.coprod[a]) coprod.push_back({a, term.left, term.right, term.coef.get_str()});
    rep["product"] = prod;
    rep["coproduct"] = coprod;
  }
  return finish(rep, o, true);
}

int cmd_wha_verify(const Options& o) {
  const DoubleGroupoid t = as_double(load_document(resolve(o.input)));
  const auto cp = load_cocycle(o.cocycle);
  const QuantumGroupoid w = build_quantum_groupoid(t, cp, field_for(o, cp));
  const Report r = verify_axioms(w, o.threads);
  const bool inv = check_involutory(w);
  json rep{{"field", field_name(w.field.spec())}, {"dimension", w.dim()}, {"twisted", w.twisted}, {"axioms_ok", r.ok()},
           {"involutory", inv}, {"violations", violations(r)}};
  return finish(rep, o, r.ok() && inv);
}

int cmd_cocycles(const Options& o, bool classes) {
  const DoubleGroupoid t = as_double(load_document(resolve(o.input)));
  SearchBudget budget;
  budget.threads = o.threads;
  const int m = o.m.value_or(2);
  const GaugeClasses gc = gauge_classes(t, m, budget);
  json rep{{"m", m}, {"pairs", gc.pairs.size()}};
  if (classes) {
    rep["classes"] = gc.count;
    rep["class_of"] = gc.class_of;
  } else if (o.format == "machine") {
    rep["documents"] = json::array();
    for (const auto& cp : gc.pairs) rep["documents"].push_back(json::parse(emit_document(cp)));
  }
  if (!o.output.empty() && !gc.pairs.empty()) {
    fs::create_directories(o.output);
    for (size_t i = 0; i < gc.pairs.size(); ++i)
      save_document((fs::path(o.output) / ("cocycle_" + std::to_string(i) + ".json")).string(), gc.pairs[i]);
  }
  return finish(rep, o, true);
}

json cohomology_json(const CohomologyReport& c) {
  json out = json::array();
  for (const auto& d : c.degrees) {
    json e{{"degree", d.degree}, {c.p > 0 ? "dimension" : "rank", d.free_rank}};
    if (c.p == 0) {
      e["torsion"] = json::array();
      for (const auto& t : d.torsion) e["torsion"].push_back(t.get_str());
    }
    out.push_back(e);
  }
  return out;
}

int cmd_cohomology(const Options& o) {
  const Document doc = load_document(resolve(o.input));
  CohomologyBudget budget;
  budget.max_degree = std::max(budget.max_degree, o.degree + 3);
  json rep{{"coefficients", o.p == 0 ? std::string("Z") : "F_" + std::to_string(o.p)}};
  bool ok = true;
  if (const auto* g = std::get_if<Groupoid>(&doc)) {
    const ComplexSpec c = groupoid_complex(*g, o.degree + 2);
    for (size_t n = 0; n + 1 < c.d.size(); ++n) ok = ok && multiply(c.d[n + 1], c.d[n]).is_zero();
    rep["complex"] = "groupoid";
    rep["square_zero"] = ok;
    rep["groups"] = cohomology_json(groupoid_cohomology(*g, o.degree, o.p, budget));
    return finish(rep, o, ok);
  }
  const DoubleGroupoid t = as_double(doc);
  DoubleComplex dc(t, normalization(o), budget);
  const TotalPart part = o.part == "A" ? TotalPart::A : o.part == "E" ? TotalPart::E : TotalPart::D;
  if (o.part != "A" && o.part != "D" && o.part != "E") throw StructuralError("--part must be D, A or E");
  const DoubleComplexCheck chk = check_double_complex(dc, std::min(o.degree + 2, budget.max_degree));
  ok = chk.commute && chk.total_square_zero;
  rep["complex"] = "Tot " + o.part;
  rep["normalization"] = o.strict ? "strict" : "default";
  rep["squares_commute"] = chk.commute;
  rep["square_zero"] = chk.total_square_zero;
  if (!chk.first_failure.empty()) rep["first_failure"] = chk.first_failure;
  rep["groups"] = cohomology_json(total_cohomology(dc, part, o.degree, o.p));
  return finish(rep, o, ok);
}

int cmd_kac(const Options& o) {
  const DoubleGroupoid t = as_double(load_document(resolve(o.input)));
  const long p = o.p == 0 ? 2 : o.p;
  const KacReport k = kac_report(t, p, normalization(o));
  json rep{{"coefficients", "F_" + std::to_string(p)}};
  rep["terms"] = json::array();
  for (size_t i = 0; i < k.terms.size(); ++i) {
    json e{{"group", k.terms[i].name}, {"dimension", k.terms[i].dim}};
    if (i < k.map_ranks.size()) e["outgoing_rank"] = k.map_ranks[i];
    if (i < k.exact_at.size()) e["exact"] = static_cast<bool>(k.exact_at[i]);
    rep["terms"].push_back(e);
  }
  rep["sequence"] = k.exact ? "exact" : "not exact";
  rep["diagonal"] = k.diagonal_dims;
  rep["total_D"] = k.total_d_dims;
  rep["diagonal_matches"] = k.diagonal_matches;
  rep["edge_sum"] = k.edge_sum_dims;
  rep["total_E"] = k.total_e_dims;
  rep["edge_splits"] = k.edge_splits;
  return finish(rep, o, k.exact);
}

int cmd_blocks(const Options& o) {
  const DoubleGroupoid t = as_double(load_document(resolve(o.input)));
  const QuantumGroupoid w = build_quantum_groupoid(t, std::nullopt, field_for(o, std::nullopt));
  const BlockStructure b = block_structure(w);
  auto blocks = [](const std::vector<Block>& v) {
    json out = json::array();
    for (const auto& x : v)
      out.push_back({{"representative", x.representative}, {"group_order", x.group_order}, {"matrix_size", x.class_size}});
    return out;
  };
  const UnitObjectCheck u = unit_object_summands(w);
  const auto cond = simple_algebra_conditions(t);
  json rep{{"algebra_blocks", blocks(b.algebra)},
           {"coalgebra_blocks", blocks(b.coalgebra)},
           {"algebra_dimension_ok", b.algebra_dimension_ok},
           {"coalgebra_dimension_ok", b.coalgebra_dimension_ok},
           {"simple_algebra", is_simple_algebra(b)},
           {"simple_algebra_conditions", {cond[0], cond[1], cond[2], cond[3]}},
           {"unit_object_simple", unit_object_simple(t)},
           {"unit_object_summands", u.summands},
           {"unit_object_action_ok", u.action_ok}};
  return finish(rep, o, b.algebra_dimension_ok && b.coalgebra_dimension_ok && u.action_ok);
}

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("input", o.input, "input document (or examples/<name>)")->required();
  cmd->add_option("--p", o.p, "field characteristic, 0 for the rationals");
  cmd->add_option("--m", o.m, "cocycle modulus / root-of-unity order");
  cmd->add_option("--zeta", o.zeta, "root of unity in F_p");
  cmd->add_option("--degree", o.degree, "cohomology degree bound");
  cmd->add_flag("--strict-normalization", o.strict, "literal degeneracy clauses in the double complex");
  cmd->add_option("--format", o.format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
  cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double groupoids, quantum groupoids and their cohomology"};
  app.require_subcommand(1);
  Options o;

  auto* validate = app.add_subcommand("validate", "check the axioms of a document");
  add_common(validate, o);
  validate->add_option("--on", o.on, "double groupoid for a cocycle pair");
  auto* vacant = app.add_subcommand("vacant", "decide vacancy");
  add_common(vacant, o);
  auto* convert = app.add_subcommand("convert", "matched pair <-> vacant double groupoid");
  add_common(convert, o);
  convert->add_option("--to", o.to, "double_groupoid or matched_pair");
  convert->add_option("-o,--output", o.output, "output file");
  auto* wha = app.add_subcommand("wha", "weak Hopf algebra on the boxes");
  wha->require_subcommand(1);
  auto* build = wha->add_subcommand("build", "build and summarize");
  auto* verify = wha->add_subcommand("verify", "check every axiom on basis tuples");
  for (auto* c : {build, verify}) {
    add_common(c, o);
    c->add_option("--cocycle", o.cocycle, "cocycle pair document");
  }
  auto* cocycles = app.add_subcommand("cocycles", "normalized cocycle pairs");
  cocycles->require_subcommand(1);
  auto* enumerate = cocycles->add_subcommand("enumerate", "list all pairs");
  auto* classes = cocycles->add_subcommand("classes", "count pairs up to gauge");
  for (auto* c : {enumerate, classes}) {
    add_common(c, o);
    c->add_option("-o,--output", o.output, "directory for one document per pair");
  }
  auto* cohomology = app.add_subcommand("cohomology", "groupoid or total-complex cohomology");
  add_common(cohomology, o);
  cohomology->add_option("--part", o.part, "D, A or E for double groupoids");
  auto* kac = app.add_subcommand("kac", "long exact sequence terms and exactness");
  add_common(kac, o);
  auto* blocks = app.add_subcommand("blocks", "matrix block structure");
  add_common(blocks, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (vacant->parsed()) return cmd_vacant(o);
    if (convert->parsed()) return cmd_convert(o);
    if (build->parsed()) return cmd_wha_build(o);
    if (verify->parsed()) return cmd_wha_verify(o);
    if (enumerate->parsed()) return cmd_cocycles(o, false);
    if (classes->parsed()) return cmd_cocycles(o, true);
    if (cohomology->parsed()) return cmd_cohomology(o);
    if (kac->parsed()) return cmd_kac(o);
    if (blocks->parsed()) return cmd_blocks(o);
  } catch (const MathError& e) {
    std::cerr << "error: " << e.what();
    if (!e.witness().empty()) {
      std::cerr << " (witness";
      for (int x : e.witness()) std::cerr << " " << x;
      std::cerr << ")";
    }
    std::cerr << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
