#pragma once

#include <array>
#include <map>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "dblgrp/cocycle.hpp"
#include "dblgrp/double_groupoid.hpp"
#include "dblgrp/errors.hpp"
#include "dblgrp/field.hpp"

namespace dblgrp {

// Sparse vectors over the box basis; zero coefficients are never stored.
using Element = std::map<int, Scalar>;
using Tensor2 = std::map<std::pair<int, int>, Scalar>;
using Tensor3 = std::map<std::array<int, 3>, Scalar>;

struct CoproductTerm {
  int left = 0;
  int right = 0;
  Scalar coef;
};

// Weak Hopf algebra on the boxes of a vacant double groupoid:
//   A.B = sigma(A,B) (A over B) when A stacks over B, else 0
//   Delta(A) = sum of tau(B,C) B (x) C over B|C with BC = A
//   eps(A) = 1 iff A is the horizontal identity of its left edge
//   S(A) = (tau(A, A^h) sigma(A^-1, A^h))^-1 A^-1
struct QuantumGroupoid {
  DoubleGroupoid t;
  Field field{FieldSpec{}};
  bool twisted = false;
  std::vector<int> prod_box;  // n^2, -1 when the product is zero
  std::vector<Scalar> prod_coef;
  std::vector<std::vector<CoproductTerm>> coprod;
  std::vector<Scalar> counit_table;
  std::vector<int> antipode_box;
  std::vector<Scalar> antipode_coef;
  Element unit;
  std::vector<Element> target_units;  // _P 1: vertical identities of edges leaving P
  std::vector<Element> source_units;  // 1_P: vertical identities of edges entering P

  int dim() const { return t.n_boxes(); }
};

// Throws MathError if T is not vacant or cp fails validation, and the field's
// error if cp does not embed.
QuantumGroupoid build_quantum_groupoid(const DoubleGroupoid& t, const std::optional<CocyclePair>& cp,
                                       const FieldSpec& fs);

Element basis_element(const QuantumGroupoid& w, int box);
// All element operations throw StructuralError on an index outside the basis.
Element add(const QuantumGroupoid& w, const Element& a, const Element& b);
Element scale(const QuantumGroupoid& w, const Scalar& c, const Element& a);
Element multiply(const QuantumGroupoid& w, const Element& a, const Element& b);
Tensor2 comultiply(const QuantumGroupoid& w, const Element& a);
Scalar counit(const QuantumGroupoid& w, const Element& a);
Element antipode(const QuantumGroupoid& w, const Element& a);

Tensor2 tensor_multiply(const QuantumGroupoid& w, const Tensor2& x, const Tensor2& y);
Tensor3 tensor_multiply(const QuantumGroupoid& w, const Tensor3& x, const Tensor3& y);
// (Delta (x) id) Delta
Tensor3 double_coproduct(const QuantumGroupoid& w, const Element& a);

// Target and source maps from their defining formulas
// eps_t(h) = (eps (x) id)(Delta(1)(h (x) 1)), eps_s(h) = (id (x) eps)((1 (x) h)Delta(1)).
Element target_map(const QuantumGroupoid& w, const Element& h);
Element source_map(const QuantumGroupoid& w, const Element& h);

// Keys: "associativity", "unit", "coassociativity", "counit", "multiplicativity" (A,B),
// "weak-unit" (0 for the first equality, 1 for the second), "weak-counit" (A,B,C),
// "antipode-target", "antipode-source", "antipode-triple" (A).
// Basis tuples are split across threads by first index; the merged report is ordered.
Report verify_axioms(const QuantumGroupoid& w, int threads = 1);

struct HopfVerdict {
  bool hopf = false;
  bool single_point = false;
  std::vector<int> cross_term;  // (B, C) where Delta(1) and 1 (x) 1 differ
};

// Throws std::logic_error if Delta(1) = 1 (x) 1 disagrees with |points| = 1.
HopfVerdict hopf_verdict(const QuantumGroupoid& w);
bool is_hopf(const QuantumGroupoid& w);
bool check_involutory(const QuantumGroupoid& w);

struct Block {
  int representative = 0;  // smallest edge of the class
  int group_order = 0;     // boxes from the representative to itself
  int class_size = 0;
};

struct BlockStructure {
  std::vector<Block> algebra;    // classes of horizontal edges under the vertical box groupoid
  std::vector<Block> coalgebra;  // classes of vertical edges under the horizontal box groupoid
  bool algebra_dimension_ok = false;
  bool coalgebra_dimension_ok = false;
};

// Throws UnsupportedError for twisted input.
BlockStructure block_structure(const QuantumGroupoid& w);
bool unit_object_simple(const DoubleGroupoid& t);

// Conditions forced by a simple algebra: boxes over horizontal edges form a coarse
// groupoid; every horizontal edge is an identity; vertical edges form a coarse
// groupoid; every box is a horizontal identity.
std::array<bool, 4> simple_algebra_conditions(const DoubleGroupoid& t);
bool is_simple_algebra(const BlockStructure& b);

struct UnitObjectCheck {
  std::vector<std::vector<int>> summands;  // point classes of the vertical edge groupoid
  bool action_ok = false;                  // eps_t(A _P1) matches the edge-wise formula
};

UnitObjectCheck unit_object_summands(const QuantumGroupoid& w);

// w over T with (sigma, tau), wt over the transpose with (tau, sigma);
// the pairing (B | C) = [B = C] on box indices. Throws StructuralError on mismatched bases.
bool duality_check(const QuantumGroupoid& w, const QuantumGroupoid& wt);

// Psi(B) = psi(B) B as a map w1 -> w2 of weak Hopf algebras. Throws MathError on a zero value.
bool gauge_isomorphism_check(const QuantumGroupoid& w1, const QuantumGroupoid& w2, const std::vector<Scalar>& psi);
// zeta'^psi with zeta' of order m, as used by gauge_transform.
std::vector<Scalar> gauge_scalars(const Field& field, int m, const std::vector<int>& psi);

struct ProductUnionVerdict {
  bool union_ok = false;
  bool product_ok = false;
};

// Untwisted constructions compared table by table: the union against the
// direct sum, the product against the tensor product.
ProductUnionVerdict product_union_check(const DoubleGroupoid& t1, const DoubleGroupoid& t2, const FieldSpec& fs);

}  // namespace dblgrp
