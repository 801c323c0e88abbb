#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace dblgrp {

// Malformed input: bad indices, tables that are not total, format errors.
class StructuralError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input is well formed but a mathematical requirement fails (not a group,
// not vacant, factorization not exact, ...). Carries a witness tuple.
class MathError : public std::runtime_error {
 public:
  MathError(const std::string& what, std::vector<int> witness = {})
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::vector<int>& witness() const { return witness_; }

 private:
  std::vector<int> witness_;
};

// A configured size budget was exceeded, or a feature is deliberately unsupported.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  std::string axiom;
  std::vector<int> witness;
};

struct Report {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<int> witness) {
    violations.push_back({std::move(axiom), std::move(witness)});
  }
  bool has(const std::string& axiom) const {
    for (const auto& v : violations)
      if (v.axiom == axiom) return true;
    return false;
  }
};

}  // namespace dblgrp
