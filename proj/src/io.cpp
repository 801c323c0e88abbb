#include "dblgrp/io.hpp"

#include <algorithm>
#include <array>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

#include "json.hpp"

namespace dblgrp {

using nlohmann::json;

const char* format_code_name(FormatCode c) {
  switch (c) {
    case FormatCode::Syntax: return "syntax";
    case FormatCode::Version: return "version";
    case FormatCode::Kind: return "kind";
    case FormatCode::Unknown: return "unknown-field";
    case FormatCode::Missing: return "missing";
    case FormatCode::Duplicate: return "duplicate";
    case FormatCode::Range: return "range";
    case FormatCode::Inconsistent: return "inconsistent";
  }
  return "?";
}

const char* kind_name(const Document& doc) {
  static const char* names[] = {"groupoid", "double_groupoid", "matched_pair", "cocycle_pair", "field_spec"};
  return names[doc.index()];
}

namespace {

[[noreturn]] void fail(FormatCode c, const std::string& what) { throw FormatError(c, what); }

// ---------------------------------------------------------------- reading

void check_fields(const json& j, const std::string& where, std::initializer_list<const char*> allowed) {
  if (!j.is_object()) fail(FormatCode::Syntax, where + " must be an object");
  for (const auto& [key, _] : j.items())
    if (std::find_if(allowed.begin(), allowed.end(), [&](const char* a) { return key == a; }) == allowed.end())
      fail(FormatCode::Unknown, where + "." + key);
  for (const char* a : allowed)
    if (!j.contains(a)) fail(FormatCode::Missing, where + "." + a);
}

long get_long(const json& j, const std::string& where) {
  if (!j.is_number_integer()) fail(FormatCode::Syntax, where + " must be an integer");
  return j.get<long>();
}

int get_int(const json& j, const std::string& where) {
  const long v = get_long(j, where);
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    fail(FormatCode::Range, where + " does not fit");
  return static_cast<int>(v);
}

int get_index(const json& j, int bound, const std::string& where) {
  const int v = get_int(j, where);
  if (v < 0 || v >= bound) fail(FormatCode::Range, where + " = " + std::to_string(v) + " outside [0, " + std::to_string(bound) + ")");
  return v;
}

int get_count(const json& j, const std::string& where) {
  const int v = get_int(j, where);
  if (v < 0) fail(FormatCode::Range, where + " is negative");
  return v;
}

const json& get_array(const json& j, const std::string& where) {
  if (!j.is_array()) fail(FormatCode::Syntax, where + " must be an array");
  return j;
}

std::vector<int> index_list(const json& j, int size, int bound, const std::string& where) {
  get_array(j, where);
  if (static_cast<int>(j.size()) != size)
    fail(j.size() < static_cast<size_t>(size) ? FormatCode::Missing : FormatCode::Range,
         where + " must have " + std::to_string(size) + " entries");
  std::vector<int> out;
  for (size_t i = 0; i < j.size(); ++i) out.push_back(get_index(j[i], bound, where + "[" + std::to_string(i) + "]"));
  return out;
}

std::array<int, 3> triple(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) fail(FormatCode::Syntax, where + " entries must be triples");
  return {get_int(j[0], where), get_int(j[1], where), get_int(j[2], where)};
}

// Partial binary table given as triples (a, b, value); `defined(a, b)` names the domain.
template <class Defined>
std::vector<int> partial_table(const json& j, int n, int value_bound, Defined defined, const std::string& where) {
  get_array(j, where);
  std::vector<int> table(static_cast<size_t>(n) * n, -1);
  for (const json& e : j) {
    const auto [a, b, v] = triple(e, where);
    if (a < 0 || a >= n || b < 0 || b >= n || v < 0 || v >= value_bound)
      fail(FormatCode::Range, where + " entry (" + std::to_string(a) + ", " + std::to_string(b) + ") out of range");
    if (!defined(a, b))
      fail(FormatCode::Range, where + " entry (" + std::to_string(a) + ", " + std::to_string(b) + ") off the domain");
    int& slot = table[static_cast<size_t>(a) * n + b];
    if (slot >= 0) fail(FormatCode::Duplicate, where + " entry (" + std::to_string(a) + ", " + std::to_string(b) + ")");
    slot = v;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (defined(a, b) && table[static_cast<size_t>(a) * n + b] < 0)
        fail(FormatCode::Missing, where + " entry (" + std::to_string(a) + ", " + std::to_string(b) + ")");
  return table;
}

Groupoid read_groupoid(const json& j, const std::string& where) {
  Groupoid g;
  g.n_objects = get_count(j.at("n_objects"), where + ".n_objects");
  const json& arrows = get_array(j.at("arrows"), where + ".arrows");
  for (const json& a : arrows) {
    if (!a.is_array() || a.size() != 2) fail(FormatCode::Syntax, where + ".arrows entries must be pairs");
    g.source.push_back(get_index(a[0], g.n_objects, where + ".arrows"));
    g.target.push_back(get_index(a[1], g.n_objects, where + ".arrows"));
  }
  const int m = g.n_arrows();
  g.identity = index_list(j.at("identities"), g.n_objects, m, where + ".identities");
  for (int p = 0; p < g.n_objects; ++p)
    if (g.source[g.identity[p]] != p || g.target[g.identity[p]] != p)
      fail(FormatCode::Inconsistent, where + ".identities[" + std::to_string(p) + "] is not a loop at its object");
  g.compose = partial_table(j.at("compose"), m, m, [&](int f, int h) { return g.target[f] == g.source[h]; },
                            where + ".compose");
  const std::vector<int> stored = index_list(j.at("inverses"), m, m, where + ".inverses");
  g.derive_inverses();
  for (int f = 0; f < m; ++f)
    if (g.inverse[f] >= 0 && g.inverse[f] != stored[f])
      fail(FormatCode::Inconsistent, where + ".inverses[" + std::to_string(f) + "] disagrees with the composition table");
  return g;
}

void check_groupoid_fields(const json& j, const std::string& where, bool top_level) {
  if (top_level)
    check_fields(j, where, {"kind", "version", "n_objects", "arrows", "identities", "compose", "inverses"});
  else
    check_fields(j, where, {"n_objects", "arrows", "identities", "compose", "inverses"});
}

DoubleGroupoid read_double(const json& j) {
  check_fields(j, "document", {"kind", "version", "n_points", "horizontal", "vertical", "boxes", "vertical_composition",
                               "horizontal_composition", "vertical_identities", "horizontal_identities"});
  DoubleGroupoid t;
  t.n_points = get_count(j.at("n_points"), "n_points");
  check_groupoid_fields(j.at("horizontal"), "horizontal", false);
  check_groupoid_fields(j.at("vertical"), "vertical", false);
  t.horiz = read_groupoid(j.at("horizontal"), "horizontal");
  t.vert = read_groupoid(j.at("vertical"), "vertical");
  if (t.horiz.n_objects != t.n_points || t.vert.n_objects != t.n_points)
    fail(FormatCode::Inconsistent, "edge groupoids must have n_points objects");
  for (const json& b : get_array(j.at("boxes"), "boxes")) {
    if (!b.is_array() || b.size() != 4) fail(FormatCode::Syntax, "boxes entries must be [top, bottom, left, right]");
    t.top.push_back(get_index(b[0], t.horiz.n_arrows(), "boxes.top"));
    t.bottom.push_back(get_index(b[1], t.horiz.n_arrows(), "boxes.bottom"));
    t.left.push_back(get_index(b[2], t.vert.n_arrows(), "boxes.left"));
    t.right.push_back(get_index(b[3], t.vert.n_arrows(), "boxes.right"));
  }
  const int n = t.n_boxes();
  t.vcomp = partial_table(j.at("vertical_composition"), n, n, [&](int a, int b) { return t.bottom[a] == t.top[b]; },
                          "vertical_composition");
  t.hcomp = partial_table(j.at("horizontal_composition"), n, n, [&](int a, int b) { return t.right[a] == t.left[b]; },
                          "horizontal_composition");
  t.vid = index_list(j.at("vertical_identities"), t.horiz.n_arrows(), n, "vertical_identities");
  t.hid = index_list(j.at("horizontal_identities"), t.vert.n_arrows(), n, "horizontal_identities");
  for (int x = 0; x < t.horiz.n_arrows(); ++x) {
    const int b = t.vid[x];
    if (t.top[b] != x || t.bottom[b] != x || t.left[b] != t.vert.identity[t.horiz.source[x]] ||
        t.right[b] != t.vert.identity[t.horiz.target[x]])
      fail(FormatCode::Inconsistent, "vertical_identities[" + std::to_string(x) + "] has the wrong frame");
  }
  for (int g = 0; g < t.vert.n_arrows(); ++g) {
    const int b = t.hid[g];
    if (t.left[b] != g || t.right[b] != g || t.top[b] != t.horiz.identity[t.vert.source[g]] ||
        t.bottom[b] != t.horiz.identity[t.vert.target[g]])
      fail(FormatCode::Inconsistent, "horizontal_identities[" + std::to_string(g) + "] has the wrong frame");
  }
  return t;
}

MatchedPair read_matched_pair(const json& j) {
  check_fields(j, "document", {"kind", "version", "vertical", "horizontal", "left_action", "right_action"});
  MatchedPair mp;
  check_groupoid_fields(j.at("vertical"), "vertical", false);
  check_groupoid_fields(j.at("horizontal"), "horizontal", false);
  mp.vert = read_groupoid(j.at("vertical"), "vertical");
  mp.horiz = read_groupoid(j.at("horizontal"), "horizontal");
  if (mp.vert.n_objects != mp.horiz.n_objects) fail(FormatCode::Inconsistent, "groupoids must share the base");
  const int nh = mp.horiz.n_arrows(), nv = mp.vert.n_arrows();
  auto action = [&](const char* key, int value_bound) {
    std::vector<int> table(static_cast<size_t>(nh) * nv, -1);
    for (const json& e : get_array(j.at(key), key)) {
      const auto [x, g, v] = triple(e, key);
      if (x < 0 || x >= nh || g < 0 || g >= nv || v < 0 || v >= value_bound)
        fail(FormatCode::Range, std::string(key) + " entry out of range");
      if (!mp.on_domain(x, g)) fail(FormatCode::Range, std::string(key) + " entry off the domain");
      int& slot = table[static_cast<size_t>(x) * nv + g];
      if (slot >= 0) fail(FormatCode::Duplicate, std::string(key) + " entry (" + std::to_string(x) + ", " + std::to_string(g) + ")");
      slot = v;
    }
    for (int x = 0; x < nh; ++x)
      for (int g = 0; g < nv; ++g)
        if (mp.on_domain(x, g) && table[static_cast<size_t>(x) * nv + g] < 0)
          fail(FormatCode::Missing, std::string(key) + " entry (" + std::to_string(x) + ", " + std::to_string(g) + ")");
    return table;
  };
  mp.act_left = action("left_action", nv);
  mp.act_right = action("right_action", nh);
  return mp;
}

CocyclePair read_cocycle(const json& j) {
  check_fields(j, "document", {"kind", "version", "m", "n_boxes", "sigma", "tau"});
  CocyclePair cp;
  cp.m = get_int(j.at("m"), "m");
  if (cp.m < 1) fail(FormatCode::Range, "m must be positive");
  cp.n = get_count(j.at("n_boxes"), "n_boxes");
  auto values = [&](const char* key) {
    std::vector<int> table(static_cast<size_t>(cp.n) * cp.n, -1);
    for (const json& e : get_array(j.at(key), key)) {
      const auto [a, b, v] = triple(e, key);
      if (a < 0 || a >= cp.n || b < 0 || b >= cp.n || v < 0 || v >= cp.m)
        fail(FormatCode::Range, std::string(key) + " entry out of range");
      int& slot = table[static_cast<size_t>(a) * cp.n + b];
      if (slot >= 0) fail(FormatCode::Duplicate, std::string(key) + " entry (" + std::to_string(a) + ", " + std::to_string(b) + ")");
      slot = v;
    }
    return table;
  };
  cp.sigma = values("sigma");
  cp.tau = values("tau");
  return cp;
}

FieldSpec read_field(const json& j) {
  check_fields(j, "document", {"kind", "version", "characteristic", "m", "zeta"});
  const long p = get_long(j.at("characteristic"), "characteristic");
  const int m = get_int(j.at("m"), "m");
  const long zeta = get_long(j.at("zeta"), "zeta");
  FieldSpec fs;
  try {
    fs = make_field_spec(p, m, zeta);
  } catch (const std::exception& e) {
    fail(FormatCode::Inconsistent, std::string("field spec: ") + e.what());
  }
  return fs;
}

// ---------------------------------------------------------------- writing

// Objects with sorted keys; arrays of scalars on one line, nested arrays one entry per line.
void write(std::ostringstream& out, const json& j, int indent) {
  const std::string pad(indent, ' '), inner(indent + 2, ' ');
  if (j.is_object()) {
    if (j.empty()) {
      out << "{}";
      return;
    }
    out << "{\n";
    bool first = true;
    for (const auto& [k, v] : j.items()) {
      if (!first) out << ",\n";
      first = false;
      out << inner << json(k).dump() << ": ";
      write(out, v, indent + 2);
    }
    out << "\n" << pad << "}";
  } else if (j.is_array()) {
    const bool flat = std::all_of(j.begin(), j.end(), [](const json& e) { return e.is_primitive(); });
    if (j.empty()) {
      out << "[]";
    } else if (flat) {
      out << "[";
      for (size_t i = 0; i < j.size(); ++i) out << (i ? ", " : "") << j[i].dump();
      out << "]";
    } else {
      out << "[\n";
      for (size_t i = 0; i < j.size(); ++i) {
        out << inner;
        write(out, j[i], indent + 2);
        out << (i + 1 < j.size() ? ",\n" : "\n");
      }
      out << pad << "]";
    }
  } else {
    out << j.dump();
  }
}

json triples(const std::vector<int>& table, int n) {
  json out = json::array();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int v = table[static_cast<size_t>(a) * n + b];
      if (v >= 0) out.push_back({a, b, v});
    }
  return out;
}

json groupoid_payload(Groupoid g) {
  json j;
  g.derive_inverses();
  j["n_objects"] = g.n_objects;
  j["arrows"] = json::array();
  for (int f = 0; f < g.n_arrows(); ++f) j["arrows"].push_back({g.source[f], g.target[f]});
  j["identities"] = g.identity;
  j["compose"] = triples(g.compose, g.n_arrows());
  j["inverses"] = g.inverse;
  return j;
}

json to_json(const Groupoid& g) { return groupoid_payload(g); }

json to_json(const DoubleGroupoid& t) {
  json j;
  j["n_points"] = t.n_points;
  j["horizontal"] = groupoid_payload(t.horiz);
  j["vertical"] = groupoid_payload(t.vert);
  j["boxes"] = json::array();
  for (int b = 0; b < t.n_boxes(); ++b) j["boxes"].push_back({t.top[b], t.bottom[b], t.left[b], t.right[b]});
  j["vertical_composition"] = triples(t.vcomp, t.n_boxes());
  j["horizontal_composition"] = triples(t.hcomp, t.n_boxes());
  j["vertical_identities"] = t.vid;
  j["horizontal_identities"] = t.hid;
  return j;
}

json to_json(const MatchedPair& mp) {
  json j;
  j["vertical"] = groupoid_payload(mp.vert);
  j["horizontal"] = groupoid_payload(mp.horiz);
  j["left_action"] = json::array();
  j["right_action"] = json::array();
  for (int x = 0; x < mp.horiz.n_arrows(); ++x)
    for (int g = 0; g < mp.vert.n_arrows(); ++g)
      if (mp.on_domain(x, g)) {
        j["left_action"].push_back({x, g, mp.lt(x, g)});
        j["right_action"].push_back({x, g, mp.rt(x, g)});
      }
  return j;
}

json to_json(const CocyclePair& cp) {
  json j;
  j["m"] = cp.m;
  j["n_boxes"] = cp.n;
  j["sigma"] = triples(cp.sigma, cp.n);
  j["tau"] = triples(cp.tau, cp.n);
  return j;
}

json to_json(const FieldSpec& fs) {
  json j;
  j["characteristic"] = fs.p;
  j["m"] = fs.m;
  j["zeta"] = fs.zeta;
  return j;
}

}  // namespace

Document parse_document(std::string_view text) {
  // duplicate keys are detected per object while parsing
  std::vector<std::set<std::string>> open;
  std::string duplicate;
  auto cb = [&](int, json::parse_event_t ev, json& parsed) {
    if (ev == json::parse_event_t::object_start) {
      open.emplace_back();
    } else if (ev == json::parse_event_t::object_end) {
      open.pop_back();
    } else if (ev == json::parse_event_t::key) {
      const std::string k = parsed.get<std::string>();
      if (!open.back().insert(k).second && duplicate.empty()) duplicate = k;
    }
    return true;
  };
  json j;
  try {
    j = json::parse(text.begin(), text.end(), cb);
  } catch (const json::parse_error& e) {
    fail(FormatCode::Syntax, e.what());
  }
  if (!duplicate.empty()) fail(FormatCode::Duplicate, "key \"" + duplicate + "\"");
  if (!j.is_object()) fail(FormatCode::Syntax, "document must be an object");
  if (!j.contains("version")) fail(FormatCode::Missing, "version");
  if (!j.at("version").is_string() || j.at("version").get<std::string>() != kFormatVersion)
    fail(FormatCode::Version, "expected version \"" + std::string(kFormatVersion) + "\"");
  if (!j.contains("kind")) fail(FormatCode::Missing, "kind");
  if (!j.at("kind").is_string()) fail(FormatCode::Kind, "kind must be a string");
  const std::string kind = j.at("kind").get<std::string>();
  try {
    if (kind == "groupoid") {
      check_groupoid_fields(j, "document", true);
      return read_groupoid(j, "document");
    }
    if (kind == "double_groupoid") return read_double(j);
    if (kind == "matched_pair") return read_matched_pair(j);
    if (kind == "cocycle_pair") return read_cocycle(j);
    if (kind == "field_spec") return read_field(j);
  } catch (const json::exception& e) {
    fail(FormatCode::Syntax, e.what());
  }
  fail(FormatCode::Kind, "unknown kind \"" + kind + "\"");
}

std::string emit_document(const Document& doc) {
  json j = std::visit([](const auto& x) { return to_json(x); }, doc);
  j["kind"] = kind_name(doc);
  j["version"] = kFormatVersion;
  std::ostringstream out;
  write(out, j, 0);
  out << "\n";
  return out.str();
}

Document load_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StructuralError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_document(buf.str());
}

void save_document(const std::string& path, const Document& doc) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StructuralError("cannot write " + path);
  out << emit_document(doc);
}

}  // namespace dblgrp
