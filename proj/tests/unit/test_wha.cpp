#include <catch_amalgamated.hpp>

#include "dblgrp/cocycle.hpp"
#include "dblgrp/corpus.hpp"
#include "dblgrp/wha.hpp"
#include "oracles.hpp"

using namespace dblgrp;

namespace {

const FieldSpec kQ = make_field_spec(0);
const FieldSpec kF3 = make_field_spec(3, 2);

bool same(const Element& a, const Element& b) { return a == b; }

}  // namespace

TEST_CASE("untwisted algebras satisfy the axioms on every vacant instance") {
  for (const auto& c : corpus()) {
    if (!c.vacant) continue;
    const DoubleGroupoid t = double_groupoid_of(c);
    const QuantumGroupoid w = build_quantum_groupoid(t, std::nullopt, kQ);
    INFO(c.name);
    const Report r = verify_axioms(w, 2);
    CHECK(r.ok());
    CHECK(check_involutory(w));
  }
}

TEST_CASE("every cocycle pair gives a weak Hopf algebra") {
  for (const char* name : {"s3_matched_pair", "x22"}) {
    const DoubleGroupoid t = oracle::double_of(name);
    for (const auto& cp : enumerate_cocycle_pairs_pruned(t, 2)) {
      INFO(name);
      const QuantumGroupoid w = build_quantum_groupoid(t, cp, kF3);
      CHECK(w.twisted);
      CHECK(verify_axioms(w).ok());
    }
  }
}

TEST_CASE("a broken cocycle pair is rejected") {
  const DoubleGroupoid t = oracle::double_of("x22");
  CocyclePair cp = zero_cocycle_pair(t, 2);
  cp.sigma[0] = 5;
  CHECK_THROWS(build_quantum_groupoid(t, cp, kF3));
}

TEST_CASE("non-vacant input is refused") {
  CHECK_THROWS_AS(build_quantum_groupoid(commuting_squares_z2(), std::nullopt, kQ), MathError);
}

TEST_CASE("Hopf exactly on one point") {
  const QuantumGroupoid s3 = build_quantum_groupoid(oracle::double_of("s3_matched_pair"), std::nullopt, kQ);
  const HopfVerdict hs = hopf_verdict(s3);
  CHECK(hs.hopf);
  CHECK(hs.single_point);

  const QuantumGroupoid x22 = build_quantum_groupoid(oracle::double_of("x22"), std::nullopt, kQ);
  const HopfVerdict hx = hopf_verdict(x22);
  CHECK_FALSE(hx.hopf);
  REQUIRE(hx.cross_term.size() == 2);
  const Tensor2 d1 = comultiply(x22, x22.unit);
  const auto key = std::pair{hx.cross_term[0], hx.cross_term[1]};
  const bool in_delta = d1.count(key) > 0;
  const bool in_square = x22.unit.count(key.first) && x22.unit.count(key.second);
  CHECK(in_delta != in_square);
}

TEST_CASE("target and source maps are idempotent") {
  for (const char* name : {"x22", "union_s3_x22"}) {
    const QuantumGroupoid w = build_quantum_groupoid(oracle::double_of(name), std::nullopt, kQ);
    for (int b = 0; b < w.dim(); ++b) {
      const Element e = basis_element(w, b);
      const Element t1 = target_map(w, e);
      const Element s1 = source_map(w, e);
      CHECK(same(target_map(w, t1), t1));
      CHECK(same(source_map(w, s1), s1));
    }
  }
}

TEST_CASE("block structure accounts for the whole dimension") {
  for (const auto& c : corpus()) {
    if (!c.vacant) continue;
    const QuantumGroupoid w = build_quantum_groupoid(double_groupoid_of(c), std::nullopt, kQ);
    const BlockStructure bs = block_structure(w);
    INFO(c.name);
    CHECK(bs.algebra_dimension_ok);
    CHECK(bs.coalgebra_dimension_ok);
    long da = 0, dc = 0;
    for (const auto& b : bs.algebra) da += static_cast<long>(b.group_order) * b.class_size * b.class_size;
    for (const auto& b : bs.coalgebra) dc += static_cast<long>(b.group_order) * b.class_size * b.class_size;
    CHECK(da == w.dim());
    CHECK(dc == w.dim());
  }
  const DoubleGroupoid t = oracle::double_of("s3_matched_pair");
  const QuantumGroupoid tw = build_quantum_groupoid(t, enumerate_cocycle_pairs(t, 2).back(), kF3);
  CHECK_THROWS_AS(block_structure(tw), UnsupportedError);
}

TEST_CASE("simple algebras come from a single column of points") {
  for (int r = 1; r <= 4; ++r) {
    const DoubleGroupoid t = build_Xrs(r, 1);
    const auto cond = simple_algebra_conditions(t);
    for (bool b : cond) CHECK(b);
    CHECK(is_simple_algebra(block_structure(build_quantum_groupoid(t, std::nullopt, kQ))));
  }
  const DoubleGroupoid x22 = build_Xrs(2, 2);
  const auto cond = simple_algebra_conditions(x22);
  CHECK_FALSE(cond[1]);
  CHECK_FALSE(is_simple_algebra(block_structure(build_quantum_groupoid(x22, std::nullopt, kQ))));
}

TEST_CASE("unit object summands") {
  for (const char* name : {"s3_matched_pair", "x22", "union_x11_x23"}) {
    const QuantumGroupoid w = build_quantum_groupoid(oracle::double_of(name), std::nullopt, kQ);
    const UnitObjectCheck u = unit_object_summands(w);
    CHECK(u.action_ok);
    size_t points = 0;
    for (const auto& s : u.summands) points += s.size();
    CHECK(static_cast<int>(points) == w.t.n_points);
  }
}

TEST_CASE("the transpose with swapped cocycles is the dual") {
  for (const char* name : {"s3_matched_pair", "x22"}) {
    const DoubleGroupoid t = oracle::double_of(name);
    for (const auto& cp : enumerate_cocycle_pairs_pruned(t, 2)) {
      const QuantumGroupoid w = build_quantum_groupoid(t, cp, kF3);
      const QuantumGroupoid wt = build_quantum_groupoid(transpose(t), swap_cocycle_pair(cp), kF3);
      CHECK(duality_check(w, wt));
    }
  }
  const QuantumGroupoid a = build_quantum_groupoid(oracle::double_of("x11"), std::nullopt, kQ);
  const QuantumGroupoid b = build_quantum_groupoid(oracle::double_of("x22"), std::nullopt, kQ);
  CHECK_THROWS_AS(duality_check(a, b), StructuralError);
}

TEST_CASE("gauge equivalent pairs give isomorphic algebras") {
  const DoubleGroupoid t = oracle::double_of("x22");
  const Field f3(kF3);
  const auto pairs = enumerate_cocycle_pairs_pruned(t, 2);
  const auto base = build_quantum_groupoid(t, pairs.front(), kF3);
  for (const auto& cp : pairs) {
    const auto psi = is_gauge_equivalent(t, pairs.front(), cp);
    REQUIRE(psi.has_value());
    const auto w2 = build_quantum_groupoid(t, cp, kF3);
    CHECK(gauge_isomorphism_check(base, w2, gauge_scalars(f3, 2, *psi)));
  }
}

TEST_CASE("unions and products match direct sums and tensor products") {
  const ProductUnionVerdict v = product_union_check(oracle::double_of("s3_matched_pair"), oracle::double_of("x22"), kQ);
  CHECK(v.union_ok);
  CHECK(v.product_ok);
}

TEST_CASE("element operations reject indices outside the basis") {
  const QuantumGroupoid w = build_quantum_groupoid(oracle::double_of("x11"), std::nullopt, kQ);
  Element bad{{w.dim(), Scalar(1)}};
  CHECK_THROWS_AS(multiply(w, bad, w.unit), StructuralError);
  CHECK_THROWS_AS(antipode(w, bad), StructuralError);
}
