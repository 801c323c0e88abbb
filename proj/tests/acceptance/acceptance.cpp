// One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "dblgrp/cocycle.hpp"
#include "dblgrp/cohomology.hpp"
#include "dblgrp/corpus.hpp"
#include "dblgrp/matched_pair.hpp"
#include "dblgrp/wha.hpp"
#include "oracles.hpp"

using namespace dblgrp;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream note;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) note << what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome out;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(out);
  } catch (const std::exception& e) {
    out.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0) out.require(secs < limit_s, "over the time limit");
  failures += !out.pass;
  std::printf("%s %2d  %-44s %7.2fs%s%s\n", out.pass ? "PASS" : "FAIL", id, title, secs,
              out.pass ? "" : "  ", out.pass ? "" : out.note.str().c_str());
  std::fflush(stdout);
}

std::vector<CorpusInstance> vacant_corpus() {
  std::vector<CorpusInstance> v;
  for (auto& c : corpus())
    if (c.vacant) v.push_back(std::move(c));
  return v;
}

const FieldSpec kQ = make_field_spec(0);
const FieldSpec kF3 = make_field_spec(3, 2);

// Twisted and untwisted builds named in the criteria.
std::vector<std::pair<std::string, QuantumGroupoid>> builds() {
  std::vector<std::pair<std::string, QuantumGroupoid>> out;
  for (const auto& c : vacant_corpus()) out.emplace_back(c.name, build_quantum_groupoid(double_groupoid_of(c), std::nullopt, kQ));
  for (const char* name : {"s3_matched_pair", "x22"}) {
    const DoubleGroupoid t = oracle::double_of(name);
    for (const auto& cp : enumerate_cocycle_pairs_pruned(t, 2))
      out.emplace_back(std::string(name) + " twisted", build_quantum_groupoid(t, cp, kF3));
  }
  return out;
}

}  // namespace

int main() {
  criterion(1, "untwisted axioms on vacant instances", 0, [](Outcome& o) {
    for (const auto& c : vacant_corpus()) {
      const auto start = std::chrono::steady_clock::now();
      const QuantumGroupoid w = build_quantum_groupoid(double_groupoid_of(c), std::nullopt, kQ);
      const bool ok = verify_axioms(w).ok();
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      o.require(ok, c.name + " violates an axiom");
      o.require(secs < 5.0, c.name + " over 5 s");
    }
  });

  criterion(2, "twisted axioms for every cocycle pair", 60, [](Outcome& o) {
    for (const char* name : {"s3_matched_pair", "x22"}) {
      const DoubleGroupoid t = oracle::double_of(name);
      const auto pairs = enumerate_cocycle_pairs_pruned(t, 2);
      o.require(!pairs.empty(), std::string(name) + " has no pairs");
      for (const auto& cp : pairs) o.require(verify_axioms(build_quantum_groupoid(t, cp, kF3)).ok(), name);
      for (const auto& cp : enumerate_cocycle_pairs_pruned(t, 1))
        o.require(verify_axioms(build_quantum_groupoid(t, cp, kQ)).ok(), std::string(name) + " over Q");
    }
  });

  criterion(3, "Hopf exactly on one point", 0, [](Outcome& o) {
    for (const auto& c : vacant_corpus()) {
      const DoubleGroupoid t = double_groupoid_of(c);
      const QuantumGroupoid w = build_quantum_groupoid(t, std::nullopt, kQ);
      o.require(is_hopf(w) == (t.n_points == 1), c.name);
    }
    const QuantumGroupoid x22 = build_quantum_groupoid(oracle::double_of("x22"), std::nullopt, kQ);
    const HopfVerdict v = hopf_verdict(x22);
    o.require(!v.hopf && v.cross_term.size() == 2, "no cross term for x22");
    if (v.cross_term.size() == 2) {
      const Tensor2 d1 = comultiply(x22, x22.unit);
      const bool in_delta = d1.count({v.cross_term[0], v.cross_term[1]}) > 0;
      const bool in_square = x22.unit.count(v.cross_term[0]) && x22.unit.count(v.cross_term[1]);
      o.require(in_delta != in_square, "cross term does not separate");
    }
  });

  criterion(4, "involutory antipode", 0, [](Outcome& o) {
    for (const auto& [name, w] : builds()) o.require(check_involutory(w), name);
  });

  criterion(5, "block dimensions", 0, [](Outcome& o) {
    for (const auto& c : vacant_corpus()) {
      const BlockStructure b = block_structure(build_quantum_groupoid(double_groupoid_of(c), std::nullopt, kQ));
      o.require(b.algebra_dimension_ok && b.coalgebra_dimension_ok, c.name);
    }
    const BlockStructure b = block_structure(build_quantum_groupoid(oracle::double_of("x22"), std::nullopt, kQ));
    o.require(b.algebra.size() == 4, "x22 algebra block count");
    for (const auto& blk : b.algebra) o.require(blk.group_order == 1 && blk.class_size == 2, "x22 block shape");
  });

  criterion(6, "vacancy verdicts agree; unique factorization", 0, [](Outcome& o) {
    for (const auto& c : corpus()) {
      const DoubleGroupoid t = double_groupoid_of(c);
      const VacancyVerdict v = is_vacant(t);
      o.require(v.consistent, c.name + " corner kinds disagree");
      o.require(v.vacant == c.vacant, c.name + " wrong verdict");
      if (!c.vacant || t.n_boxes() > 50) continue;
      const BoxInverseTable inv = compute_inverses(t);
      for (int a = 0; a < t.n_boxes(); ++a) {
        o.require(oracle::antipode_factorization_count(t, a) == 1, c.name + " brute force count");
        o.require(antipode_factorizations(t, inv, a).size() == 1, c.name + " solver count");
      }
    }
  });

  criterion(7, "matched pair round trips", 0, [](Outcome& o) {
    const MatchedPair s3 = s3_matched_pair();
    o.require(from_vacant_double(to_vacant_double(s3)) == s3, "s3 pair");
    for (const auto& c : vacant_corpus()) {
      const DoubleGroupoid t = double_groupoid_of(c);
      const MatchedPair mp = from_vacant_double(t);
      o.require(is_double_isomorphism(t, to_vacant_double(mp), vacant_relabeling(t)), c.name + " double");
      const DiagonalGroupoid dg = diagonal_groupoid(mp);
      o.require(from_exact_factorization(dg.diag, dg.embed_vert, dg.embed_horiz) == mp, c.name + " diagonal");
    }
    const Groupoid g = symmetric_group_s3();
    const std::vector<int> v = {0, 2}, h = {0, 3, 4};
    const MatchedPair fact = from_exact_factorization(g, v, h);
    const DiagonalGroupoid dg = diagonal_groupoid(fact);
    o.require(is_isomorphism(dg.diag, g, {0}, factorization_arrow_map(g, dg, v, h)), "factorization map");
    o.require(oracle::groups_isomorphic(diagonal_groupoid(s3).diag, g), "diagonal of s3");
  });

  criterion(8, "connected factorization verdicts", 0, [](Outcome& o) {
    const ConnectedFactorizationData s3 = s3_factorization_data();
    const FactorizationVerdict ok = verify_connected_factorization(s3);
    o.require(ok.kind == FactorizationVerdict::Exact && ok.cross_checked, "s3 rejected");
    o.require(s3.group.n_arrows() == static_cast<int>(s3.horiz.vertex_groups[0].size() * s3.vert.vertex_groups[0].size()),
              "6 != 3*2");
    const FactorizationVerdict bad = verify_connected_factorization(z4_overlap_data());
    o.require(bad.kind == FactorizationVerdict::FailsCosets && bad.witness.size() == 2, "z4 overlap accepted");
  });

  criterion(9, "cohomology engine", 10, [](Outcome& o) {
    for (const Groupoid& g : {cyclic_group(2), coarse_groupoid(3), symmetric_group_s3()}) {
      const ComplexSpec c = groupoid_complex(g, 4);
      for (size_t n = 0; n + 1 < c.d.size(); ++n) o.require(multiply(c.d[n + 1], c.d[n]).is_zero(), "groupoid d^2");
    }
    for (const auto& c : corpus()) {
      if (c.name == "product_s3_x22") continue;
      DoubleComplex dc = build_double_complex(double_groupoid_of(c));
      const DoubleComplexCheck chk = check_double_complex(dc, 3);
      o.require(chk.commute && chk.total_square_zero, c.name + " double complex");
    }
    const CohomologyReport z2 = groupoid_cohomology(cyclic_group(2), 2, 2);
    for (int n = 1; n <= 2; ++n) {
      o.require(z2.dim(n) == 1, "H^n(Z/2, F2)");
      o.require(oracle::bar_cohomology_dim(cyclic_group(2), n, 2) == 1, "oracle H^n(Z/2, F2)");
    }
    const CohomologyReport c3 = groupoid_cohomology(coarse_groupoid(3), 2, 5);
    for (int n = 1; n <= 2; ++n) {
      o.require(c3.dim(n) == 0, "H^n(coarse 3, F5)");
      o.require(oracle::bar_cohomology_dim(coarse_groupoid(3), n, 5) == 0, "oracle H^n(coarse 3, F5)");
    }
  });

  criterion(10, "long exact sequence and edge splitting", 120, [](Outcome& o) {
    for (auto [name, p] : {std::pair{"s3_matched_pair", 2L}, {"x22", 3L}}) {
      const KacReport k = kac_report(oracle::double_of(name), p);
      for (int n = 1; n <= 2; ++n)
        o.require(k.total_d_dims[n] == k.diagonal_dims[n], std::string(name) + " Tot D vs diagonal");
      o.require(k.exact, std::string(name) + " not exact");
      for (int n = 1; n <= 2; ++n)
        if (k.total_e_dims[n] != k.edge_sum_dims[n]) {
          std::ostringstream s;
          s << name << ": dim H^" << n << "(Tot E) = " << k.total_e_dims[n] << " but edge sum = " << k.edge_sum_dims[n];
          o.require(false, s.str());
        }
    }
  });

  criterion(11, "Opext equals gauge classes", 0, [](Outcome& o) {
    for (const char* name : {"s3_matched_pair", "x22"}) {
      const DoubleGroupoid t = oracle::double_of(name);
      o.require(aut_and_opext(t, 2).second.order() == count_modulo_gauge(t, 2), name);
    }
  });

  criterion(12, "duality with the transpose", 0, [](Outcome& o) {
    for (const auto& c : vacant_corpus()) {
      const DoubleGroupoid t = double_groupoid_of(c);
      o.require(duality_check(build_quantum_groupoid(t, std::nullopt, kQ),
                              build_quantum_groupoid(transpose(t), std::nullopt, kQ)),
                c.name);
    }
    for (const char* name : {"s3_matched_pair", "x22"}) {
      const DoubleGroupoid t = oracle::double_of(name);
      for (const auto& cp : enumerate_cocycle_pairs_pruned(t, 2))
        o.require(duality_check(build_quantum_groupoid(t, cp, kF3),
                                build_quantum_groupoid(transpose(t), swap_cocycle_pair(cp), kF3)),
                  std::string(name) + " twisted");
    }
  });

  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
