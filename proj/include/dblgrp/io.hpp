#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "dblgrp/cocycle.hpp"
#include "dblgrp/double_groupoid.hpp"
#include "dblgrp/field.hpp"
#include "dblgrp/groupoid.hpp"
#include "dblgrp/matched_pair.hpp"

namespace dblgrp {

enum class FormatCode { Syntax, Version, Kind, Unknown, Missing, Duplicate, Range, Inconsistent };

const char* format_code_name(FormatCode c);

class FormatError : public StructuralError {
 public:
  FormatError(FormatCode code, const std::string& what)
      : StructuralError(std::string(format_code_name(code)) + ": " + what), code_(code) {}
  FormatCode code() const { return code_; }

 private:
  FormatCode code_;
};

using Document = std::variant<Groupoid, DoubleGroupoid, MatchedPair, CocyclePair, FieldSpec>;

inline constexpr const char* kFormatVersion = "1";

const char* kind_name(const Document& doc);

// JSON syntax, one object per document with a "kind" and "version" field.
// Unknown fields, duplicate keys and duplicate table entries are rejected.
// Redundant tables (identities, inverses, composition domains, identity frames)
// are cross-checked against the rest of the document.
Document parse_document(std::string_view text);
// Canonical text: keys sorted, index tables in ascending order, trailing newline.
std::string emit_document(const Document& doc);

Document load_document(const std::string& path);
void save_document(const std::string& path, const Document& doc);

}  // namespace dblgrp
