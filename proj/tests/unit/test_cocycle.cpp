#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "dblgrp/cocycle.hpp"
#include "dblgrp/corpus.hpp"
#include "oracles.hpp"

using namespace dblgrp;

TEST_CASE("the zero pair is a cocycle pair") {
  for (const auto& c : corpus()) {
    const DoubleGroupoid t = double_groupoid_of(c);
    CHECK(validate_cocycle_pair(t, zero_cocycle_pair(t, 2)).ok());
  }
}

TEST_CASE("tables defined off the composable pairs are structural errors") {
  const DoubleGroupoid t = oracle::double_of("s3_matched_pair");
  CocyclePair cp = zero_cocycle_pair(t, 2);
  for (int a = 0; a < t.n_boxes(); ++a)
    for (int b = 0; b < t.n_boxes(); ++b)
      if (!t.stackable(a, b)) {
        cp.sigma[static_cast<size_t>(a) * cp.n + b] = 0;
        CHECK_THROWS_AS(validate_cocycle_pair(t, cp), StructuralError);
        return;
      }
}

TEST_CASE("brute force and pruned enumeration agree") {
  for (auto [name, m] : {std::pair{"s3_matched_pair", 2}, {"s3_matched_pair", 3}, {"x11", 2}}) {
    INFO(name << " m=" << m);
    const DoubleGroupoid t = oracle::double_of(name);
    const auto brute = enumerate_cocycle_pairs(t, m);
    CHECK(brute == enumerate_cocycle_pairs_pruned(t, m));
    for (const auto& cp : brute) CHECK(validate_cocycle_pair(t, cp).ok());
  }
}

TEST_CASE("threaded enumeration matches the sequential one") {
  const DoubleGroupoid t = oracle::double_of("s3_matched_pair");
  SearchBudget two;
  two.threads = 2;
  CHECK(enumerate_cocycle_pairs(t, 2) == enumerate_cocycle_pairs(t, 2, two));
}

TEST_CASE("gauge transforms preserve the cocycle conditions") {
  std::mt19937 rng(17);
  for (const char* name : {"s3_matched_pair", "x22", "union_s3_x22"}) {
    const DoubleGroupoid t = oracle::double_of(name);
    const auto support = gauge_support(t);
    for (int trial = 0; trial < 10; ++trial) {
      const int m = 2 + static_cast<int>(rng() % 3);
      std::vector<int> psi(t.n_boxes(), 0);
      for (int b : support) psi[b] = static_cast<int>(rng() % m);
      const CocyclePair cp = gauge_transform(t, zero_cocycle_pair(t, m), psi);
      INFO(name << " m=" << m);
      CHECK(validate_cocycle_pair(t, cp).ok());
      CHECK(is_gauge_equivalent(t, zero_cocycle_pair(t, m), cp).has_value());
    }
  }
}

TEST_CASE("psi must vanish on identity boxes") {
  const DoubleGroupoid t = oracle::double_of("x22");
  std::vector<int> psi(t.n_boxes(), 0);
  psi[t.vid[0]] = 1;
  CHECK_THROWS_AS(gauge_transform(t, zero_cocycle_pair(t, 2), psi), MathError);
}

TEST_CASE("single-entry perturbations are valid exactly when enumerated") {
  const DoubleGroupoid t = oracle::double_of("s3_matched_pair");
  const auto all = enumerate_cocycle_pairs(t, 3);
  int rejected = 0;
  for (int a = 0; a < t.n_boxes(); ++a)
    for (int b = 0; b < t.n_boxes(); ++b) {
      if (!t.stackable(a, b) || t.is_vid(a) || t.is_vid(b)) continue;
      CocyclePair cp = zero_cocycle_pair(t, 3);
      cp.sigma[static_cast<size_t>(a) * cp.n + b] = 1;
      const bool ok = validate_cocycle_pair(t, cp).ok();
      CHECK(ok == std::binary_search(all.begin(), all.end(), cp));
      rejected += !ok;
    }
  CHECK(rejected > 0);
}

TEST_CASE("gauge classes") {
  CHECK(count_modulo_gauge(oracle::double_of("s3_matched_pair"), 2) == 1);
  CHECK(count_modulo_gauge(oracle::double_of("x22"), 2) == 1);
  const GaugeClasses gc = gauge_classes(oracle::double_of("s3_matched_pair"), 2);
  CHECK(gc.pairs.size() == 4);
  for (int c : gc.class_of) CHECK(c == 0);
}

TEST_CASE("swapped pairs live on the transpose") {
  const DoubleGroupoid t = oracle::double_of("s3_matched_pair");
  for (const auto& cp : enumerate_cocycle_pairs(t, 2)) CHECK(validate_cocycle_pair(transpose(t), swap_cocycle_pair(cp)).ok());
}

TEST_CASE("embedding in a field keeps the multiplicative identities") {
  const DoubleGroupoid t = oracle::double_of("s3_matched_pair");
  const Field f3(make_field_spec(3, 2));
  for (const auto& cp : enumerate_cocycle_pairs(t, 2)) CHECK(validate_field_cocycle_pair(t, embed_in_field(cp, f3), f3).ok());
  const Field f7(make_field_spec(7, 3));
  CHECK_THROWS_AS(embed_in_field(zero_cocycle_pair(t, 2), f7), MathError);
}

TEST_CASE("the enumeration budget is enforced") {
  SearchBudget tiny;
  tiny.max_candidates = 4;
  CHECK_THROWS_AS(enumerate_cocycle_pairs(oracle::double_of("s3_matched_pair"), 2, tiny), ResourceError);
  CHECK_THROWS_AS(enumerate_cocycle_pairs_pruned(oracle::double_of("x22"), 2, tiny), ResourceError);
}
