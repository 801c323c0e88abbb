#include <catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "dblgrp/corpus.hpp"
#include "dblgrp/io.hpp"

using namespace dblgrp;
using nlohmann::json;

namespace {

Document as_document(const CorpusInstance& c) {
  return std::visit([](const auto& x) { return Document(x); }, c.object);
}

FormatCode code_of(const std::string& text) {
  try {
    parse_document(text);
  } catch (const FormatError& e) {
    return e.code();
  }
  FAIL("document was accepted: " << text);
  return FormatCode::Syntax;
}

json groupoid_json() { return json::parse(emit_document(cyclic_group(2))); }

}  // namespace

TEST_CASE("corpus documents round trip") {
  for (const auto& c : corpus()) {
    const Document d = as_document(c);
    const std::string text = emit_document(d);
    INFO(c.name);
    CHECK(parse_document(text) == d);
    CHECK(emit_document(parse_document(text)) == text);
    CHECK(text.back() == '\n');
  }
}

TEST_CASE("shipped corpus files are canonical") {
  for (const auto& c : corpus()) {
    const std::filesystem::path path = std::filesystem::path(DBLGRP_CORPUS_DIR) / (c.name + ".json");
    std::ifstream in(path);
    REQUIRE(in);
    std::stringstream ss;
    ss << in.rdbuf();
    INFO(c.name);
    CHECK(ss.str() == emit_document(as_document(c)));
  }
}

TEST_CASE("other kinds round trip") {
  const DoubleGroupoid t = double_groupoid_of(corpus().front());
  const std::vector<Document> docs = {Document(coarse_groupoid(3)), Document(zero_cocycle_pair(t, 2)),
                                      Document(make_field_spec(7, 3))};
  for (const auto& d : docs) CHECK(parse_document(emit_document(d)) == d);
  CHECK(std::string(kind_name(docs[2])) == "field_spec");
}

TEST_CASE("malformed documents name their error") {
  CHECK(code_of("{\"kind\": ") == FormatCode::Syntax);
  CHECK(code_of("[1, 2]") == FormatCode::Syntax);

  json j = groupoid_json();
  j["version"] = "2";
  CHECK(code_of(j.dump()) == FormatCode::Version);

  j = groupoid_json();
  j["kind"] = "hypergroupoid";
  CHECK(code_of(j.dump()) == FormatCode::Kind);

  j = groupoid_json();
  j["colour"] = 1;
  CHECK(code_of(j.dump()) == FormatCode::Unknown);

  j = groupoid_json();
  j.erase("inverses");
  CHECK(code_of(j.dump()) == FormatCode::Missing);

  j = groupoid_json();
  j["arrows"][1][0] = 1;
  CHECK(code_of(j.dump()) == FormatCode::Range);

  j = groupoid_json();
  j["compose"].push_back(j["compose"][0]);
  CHECK(code_of(j.dump()) == FormatCode::Duplicate);

  j = groupoid_json();
  j["compose"].erase(j["compose"].begin());
  CHECK(code_of(j.dump()) == FormatCode::Missing);

  j = groupoid_json();
  j["inverses"] = {0, 0};
  CHECK(code_of(j.dump()) == FormatCode::Inconsistent);

  std::string dup = groupoid_json().dump();
  dup.insert(1, "\"n_objects\": 1, ");
  CHECK(code_of(dup) == FormatCode::Duplicate);

  j = json::parse(emit_document(make_field_spec(7, 3)));
  j["m"] = 4;
  CHECK(code_of(j.dump()) == FormatCode::Inconsistent);
}

TEST_CASE("format errors are structural errors") {
  CHECK_THROWS_AS(parse_document("{}"), StructuralError);
  CHECK_THROWS_AS(load_document("/nonexistent/file.json"), std::exception);
}
