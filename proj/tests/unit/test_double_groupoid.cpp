#include <catch_amalgamated.hpp>

#include <random>

#include "dblgrp/corpus.hpp"
#include "dblgrp/double_groupoid.hpp"
#include "oracles.hpp"

using namespace dblgrp;

TEST_CASE("every corpus instance satisfies the double groupoid axioms") {
  for (const auto& c : corpus()) {
    INFO(c.name);
    const DoubleGroupoid t = double_groupoid_of(c);
    CHECK(validate_double_groupoid(t).ok());
    CHECK(validate_groupoid(vertical_box_groupoid(t)).ok());
    CHECK(validate_groupoid(horizontal_box_groupoid(t)).ok());
  }
}

TEST_CASE("vacancy verdicts agree across corner kinds and with filler counts") {
  for (const auto& c : corpus()) {
    INFO(c.name);
    const DoubleGroupoid t = double_groupoid_of(c);
    const VacancyVerdict v = is_vacant(t);
    CHECK(v.consistent);
    CHECK(v.vacant == c.vacant);
    bool all_one = true;
    for (int x = 0; x < t.horiz.n_arrows(); ++x)
      for (int g = 0; g < t.vert.n_arrows(); ++g) {
        if (t.horiz.target[x] != t.vert.source[g]) continue;
        const int n = oracle::fillers(t, x, g);
        CHECK(count_fillers(t, x, g) == n);
        all_one = all_one && n == 1;
      }
    CHECK(all_one == v.vacant);
  }
}

TEST_CASE("the commuting-squares control has a two-filler witness") {
  const VacancyVerdict v = is_vacant(commuting_squares_z2());
  REQUIRE_FALSE(v.vacant);
  REQUIRE_FALSE(v.witnesses.empty());
  CHECK(v.witnesses.front().corner == "top-right");
  CHECK(v.witnesses.front().fillers == 2);
}

TEST_CASE("box inverses compose to identities") {
  for (const char* name : {"s3_matched_pair", "x22", "commuting_squares_z2"}) {
    INFO(name);
    const DoubleGroupoid t = oracle::double_of(name);
    const BoxInverseTable inv = compute_inverses(t);
    for (int a = 0; a < t.n_boxes(); ++a) {
      CHECK(t.hc(a, inv.h_inv[a]) == t.hid[t.left[a]]);
      CHECK(t.vc(a, inv.v_inv[a]) == t.vid[t.top[a]]);
      CHECK(inv.full_inv[a] == inv.v_inv[inv.h_inv[a]]);
      CHECK(inv.full_inv[a] == inv.h_inv[inv.v_inv[a]]);
    }
  }
}

TEST_CASE("transpose is an involution that keeps box indices") {
  for (const auto& c : corpus()) {
    const DoubleGroupoid t = double_groupoid_of(c);
    const DoubleGroupoid tt = transpose(t);
    CHECK(transpose(tt) == t);
    CHECK(validate_double_groupoid(tt).ok());
    for (int a = 0; a < t.n_boxes(); ++a) {
      CHECK(tt.top[a] == t.left[a]);
      CHECK(tt.right[a] == t.bottom[a]);
    }
  }
}

TEST_CASE("grid double relations") {
  for (auto [r, s] : {std::pair{1, 1}, {2, 2}, {2, 3}, {3, 1}}) {
    const DoubleGroupoid t = build_Xrs(r, s);
    CHECK(t.n_boxes() == r * r * s * s);
    CHECK(is_vacant(t).vacant);
    const RelationClass rc = classify_vacant_relation(t);
    CHECK(rc.r == r);
    CHECK(rc.s == s);
    CHECK(rc.verified);
    CHECK(is_double_isomorphism(t, build_Xrs(r, s), rc.iso));
  }
  CHECK_THROWS_AS(build_Xrs(0, 2), StructuralError);
  CHECK_THROWS_AS(classify_vacant_relation(commuting_squares_z2()), MathError);
}

TEST_CASE("random double relations are double groupoids") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 5);
    DoubleRelation rel;
    for (int i = 0; i < n; ++i) {
      rel.rel_h.push_back(static_cast<int>(rng() % 2));
      rel.rel_v.push_back(static_cast<int>(rng() % 3));
    }
    const DoubleGroupoid t = from_double_relation(rel);
    CHECK(validate_double_groupoid(t).ok());
    CHECK(is_vacant(t).consistent);
  }
}

TEST_CASE("unions and products keep the axioms and vacancy") {
  const DoubleGroupoid a = oracle::double_of("s3_matched_pair"), b = build_Xrs(2, 2);
  const DoubleGroupoid u = disjoint_union(a, b), p = direct_product(a, b);
  CHECK(u.n_boxes() == 22);
  CHECK(p.n_boxes() == 96);
  CHECK(validate_double_groupoid(u).ok());
  CHECK(validate_double_groupoid(p).ok());
  CHECK(is_vacant(u).vacant);
  CHECK(is_vacant(p).vacant);
  CHECK(is_vacant(direct_product(a, commuting_squares_z2())).vacant == false);
}

TEST_CASE("the antipode factorization is unique on small vacant instances") {
  for (const auto& c : corpus()) {
    const DoubleGroupoid t = double_groupoid_of(c);
    if (!c.vacant || t.n_boxes() > 50) continue;
    INFO(c.name);
    const BoxInverseTable inv = compute_inverses(t);
    for (int a = 0; a < t.n_boxes(); ++a) {
      CHECK(antipode_factorizations(t, inv, a).size() == 1);
      CHECK(oracle::antipode_factorization_count(t, a) == 1);
    }
  }
}

TEST_CASE("diagonal components of a vacant instance") {
  const auto labels = diagonal_components(disjoint_union(build_Xrs(2, 2), build_Xrs(1, 1)));
  CHECK(labels == std::vector<int>{0, 0, 0, 0, 4});
}
