#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace dblgrp {

// Dense integer matrix, row-major.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<long> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }
  bool is_zero() const;
  bool operator==(const IntMatrix&) const = default;
};

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);

int rank_mod_p(const IntMatrix& m, long p);
// Basis of {v : m v = 0 mod p}, each of length m.cols.
std::vector<std::vector<long>> nullspace_mod_p(const IntMatrix& m, long p);
// Dimension of the span of the vectors (all of length dim) mod p.
int span_rank_mod_p(const std::vector<std::vector<long>>& vecs, int dim, long p);
// The columns of m as vectors.
std::vector<std::vector<long>> columns(const IntMatrix& m);
// m v over the integers.
std::vector<long> apply(const IntMatrix& m, const std::vector<long>& v);

// Nonzero invariant factors d1 | d2 | ... of m (Smith normal form), exact.
std::vector<mpz_class> invariant_factors(const IntMatrix& m);

}  // namespace dblgrp
