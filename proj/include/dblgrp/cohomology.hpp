#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dblgrp/double_groupoid.hpp"
#include "dblgrp/groupoid.hpp"
#include "dblgrp/linalg.hpp"

namespace dblgrp {

using Tuple = std::vector<int>;

// A cochain complex with explicit bases: d[n] maps degree n to degree n + 1,
// as a matrix with one row per basis element of degree n + 1.
struct ComplexSpec {
  std::vector<std::vector<Tuple>> basis;
  std::vector<IntMatrix> d;
};

// Normalized nerve: objects (as 1-tuples) for n = 0, otherwise composable
// n-tuples with no identity coordinate.
std::vector<Tuple> nerve(const Groupoid& g, int n);
// d^n : C^n -> C^{n+1}; faces with an identity coordinate are dropped.
IntMatrix differential_matrix(const Groupoid& g, int n);
ComplexSpec groupoid_complex(const Groupoid& g, int top_degree);

// Per degree: over F_p (p > 0) `free_rank` is the dimension and torsion is empty;
// over Z (p = 0) the free rank and the invariant factors > 1 of the torsion part.
struct DegreeInvariants {
  int degree = 0;
  long free_rank = 0;
  std::vector<mpz_class> torsion;
};

struct CohomologyReport {
  long p = 0;
  std::vector<DegreeInvariants> degrees;
  long dim(int n) const { return degrees.at(n).free_rank; }
};

struct CohomologyBudget {
  int max_degree = 6;
  long max_basis = 200000;
};

// dims[n] = basis size in degree n, d[n] : degree n -> n + 1; reports degrees 0..n_max.
CohomologyReport complex_cohomology(const std::vector<int>& dims, const std::vector<IntMatrix>& d, long p, int n_max);
// p = 0 for integer coefficients, otherwise a prime.
CohomologyReport groupoid_cohomology(const Groupoid& g, int n_max, long p, const CohomologyBudget& budget = {});

// Default: a cochain vanishes on a box matrix with a row of vertical identities
// or a column of horizontal identities, and on an edge tuple with an identity.
// Strict: the literal clauses with thresholds r > 1 and s > 1 (see README).
enum class Normalization { Default, Strict };

// Grid of cochain groups D^{r,s}. Boxes matrices are stored row-major; edge
// tuples and points (for r = s = 0) as plain tuples.
class DoubleComplex {
 public:
  DoubleComplex(const DoubleGroupoid& t, Normalization mode, const CohomologyBudget& budget = {});

  const std::vector<Tuple>& basis(int r, int s);
  int index(int r, int s, const Tuple& x);
  // D^{r,s} -> D^{r,s+1}, composing columns
  IntMatrix d_h(int r, int s);
  // D^{r,s} -> D^{r+1,s}, composing rows
  IntMatrix d_v(int r, int s);

  const DoubleGroupoid& groupoid() const { return t_; }
  Normalization mode() const { return mode_; }
  int max_degree() const { return budget_.max_degree; }

 private:
  bool degenerate(int r, int s, const Tuple& x) const;
  void enumerate(int r, int s);
  std::vector<std::pair<Tuple, int>> vertical_faces(int r, int s, const Tuple& x) const;
  std::vector<std::pair<Tuple, int>> horizontal_faces(int r, int s, const Tuple& x) const;

  DoubleGroupoid t_;
  Normalization mode_;
  CohomologyBudget budget_;
  long total_basis_ = 0;
  std::map<std::pair<int, int>, std::vector<Tuple>> bases_;
  std::map<std::pair<int, int>, std::map<Tuple, int>> index_;
};

DoubleComplex build_double_complex(const DoubleGroupoid& t, Normalization mode = Normalization::Default,
                                   const CohomologyBudget& budget = {});

// D: the full grid. A: pieces r, s >= 1, with A^k made of the D^{r,s} with r + s = k + 2.
// E: the row r = 0 and the column s = 0.
enum class TotalPart { D, A, E };

struct TotalComplex {
  TotalPart part = TotalPart::D;
  std::vector<std::vector<std::pair<int, int>>> pieces;  // per degree, bidegrees by ascending r
  std::vector<std::vector<int>> offsets;                 // start of each piece in the degree's basis
  std::vector<int> dims;
  std::vector<IntMatrix> d;  // total differential d_H + (-1)^s d_V, restricted or projected
};

// Degrees 0..top. Throws ResourceError when a needed bidegree exceeds the bound.
TotalComplex total_complex(DoubleComplex& dc, TotalPart part, int top);
CohomologyReport total_cohomology(DoubleComplex& dc, TotalPart part, int n, long p);

struct DoubleComplexCheck {
  bool commute = true;  // d_H d_V = d_V d_H before signs
  bool total_square_zero = true;
  std::vector<int> first_failure;  // bidegree (r, s) or total degree (n)
};

DoubleComplexCheck check_double_complex(DoubleComplex& dc, int top);

struct KacTerm {
  std::string name;
  long dim = 0;
};

struct KacReport {
  long p = 0;
  // H^1(D), H^1(E), H^0(A), H^2(D), H^2(E), H^1(A), H^3(D), H^3(E), from the total complexes
  std::vector<KacTerm> terms;
  std::vector<long> map_ranks;  // between consecutive terms
  std::vector<bool> exact_at;   // every term but the last, with 0 before the first
  bool exact = false;
  std::vector<long> diagonal_dims;   // H^n of the diagonal groupoid, n = 0..3
  std::vector<long> total_d_dims;    // H^n(Tot D), n = 0..3
  std::vector<long> edge_sum_dims;   // dim H^n(horizontal) + dim H^n(vertical), n = 0..3
  std::vector<long> total_e_dims;    // H^n(Tot E), n = 0..3
  bool diagonal_matches = false;     // n = 1, 2, 3
  bool edge_splits = false;          // n = 1, 2, 3
};

// T must be vacant (MathError otherwise); p prime.
KacReport kac_report(const DoubleGroupoid& t, long p, Normalization mode = Normalization::Default);

struct AbelianGroup {
  std::vector<mpz_class> cyclic_orders;  // direct sum of Z/n
  mpz_class order() const;
};

// H^0 and H^1 of Tot A with Z/m coefficients. Prime m uses F_m directly;
// composite m goes through the integer complex and is refused with
// UnsupportedError when integer torsion shares a factor with m.
std::pair<AbelianGroup, AbelianGroup> aut_and_opext(const DoubleGroupoid& t, long m,
                                                    Normalization mode = Normalization::Default);

}  // namespace dblgrp
