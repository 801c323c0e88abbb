#pragma once

#include <optional>
#include <vector>

#include "dblgrp/double_groupoid.hpp"
#include "dblgrp/errors.hpp"
#include "dblgrp/field.hpp"

namespace dblgrp {

// Values in Z/m, written additively. Both tables are n_boxes^2:
// sigma(A, B) is defined iff A stacks over B, tau(A, B) iff A sits left of B;
// -1 marks undefined entries.
struct CocyclePair {
  int m = 1;
  int n = 0;
  std::vector<int> sigma;
  std::vector<int> tau;

  int s(int a, int b) const { return sigma[static_cast<size_t>(a) * n + b]; }
  int t(int a, int b) const { return tau[static_cast<size_t>(a) * n + b]; }
  bool operator==(const CocyclePair&) const = default;
  auto operator<=>(const CocyclePair&) const = default;
};

CocyclePair zero_cocycle_pair(const DoubleGroupoid& t, int m);

// The pair (tau, sigma) on the transposed double groupoid.
inline CocyclePair swap_cocycle_pair(const CocyclePair& cp) { return {cp.m, cp.n, cp.tau, cp.sigma}; }

// Keys: "sigma-normalization" (A,B), "sigma-cocycle" (A,B,C), "tau-normalization",
// "tau-cocycle", "compatibility" (A,B,C,D) for the square with A|B over C|D,
// and the derived "sigma-symmetry" / "tau-symmetry" (A).
// Throws StructuralError if a table is not defined exactly on the composable pairs.
Report validate_cocycle_pair(const DoubleGroupoid& t, const CocyclePair& cp);

// nu(A,B) = sigma(A,B) + psi(A over B) - psi(A) - psi(B),
// eta(C,D) = tau(C,D) + psi(C) + psi(D) - psi(CD).
// psi must vanish on identity boxes; otherwise MathError naming the box.
CocyclePair gauge_transform(const DoubleGroupoid& t, const CocyclePair& cp, const std::vector<int>& psi);

// Boxes that are neither vertical nor horizontal identities, ascending.
std::vector<int> gauge_support(const DoubleGroupoid& t);

struct SearchBudget {
  long max_candidates = 1L << 22;
  int threads = 1;
};

// Exhaustive search over normalized psi. Returns a psi with
// gauge_transform(cp1, psi) == cp2, or nothing.
std::optional<std::vector<int>> is_gauge_equivalent(const DoubleGroupoid& t, const CocyclePair& cp1,
                                                    const CocyclePair& cp2, const SearchBudget& budget = {});

// Every normalized assignment on the free pairs, kept when validate_cocycle_pair
// passes. Sorted. Throws ResourceError if m^(free pairs) exceeds the budget.
std::vector<CocyclePair> enumerate_cocycle_pairs(const DoubleGroupoid& t, int m, const SearchBudget& budget = {});

// Backtracking over the same free pairs against the linear constraint system,
// pruning each constraint as soon as its last variable is set. Sorted.
// The budget bounds the number of search nodes.
std::vector<CocyclePair> enumerate_cocycle_pairs_pruned(const DoubleGroupoid& t, int m,
                                                        const SearchBudget& budget = {});

struct GaugeClasses {
  std::vector<CocyclePair> pairs;  // enumerate_cocycle_pairs order
  std::vector<int> class_of;       // smallest pair index in the orbit
  int count = 0;
};

GaugeClasses gauge_classes(const DoubleGroupoid& t, int m, const SearchBudget& budget = {});
int count_modulo_gauge(const DoubleGroupoid& t, int m, const SearchBudget& budget = {});

struct FieldCocyclePair {
  int n = 0;
  std::vector<Scalar> sigma;  // zero where undefined
  std::vector<Scalar> tau;
};

// sigma -> zeta'^sigma with zeta' = zeta^(field m / cp m), a root of order cp.m.
// Throws MathError if cp.m does not divide the field's m.
FieldCocyclePair embed_in_field(const CocyclePair& cp, const Field& field);

// The multiplicative identities rechecked in the field, same keys as validate_cocycle_pair.
Report validate_field_cocycle_pair(const DoubleGroupoid& t, const FieldCocyclePair& fc, const Field& field);

}  // namespace dblgrp
