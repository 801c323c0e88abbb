#include "dblgrp/linalg.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace dblgrp {

bool IntMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](long v) { return v == 0; });
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  if (x.cols != y.rows) throw std::invalid_argument("matrix shapes do not compose");
  IntMatrix z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const long v = x(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += v * y(k, j);
    }
  return z;
}

namespace {

long reduce(long v, long p) {
  v %= p;
  return v < 0 ? v + p : v;
}

long inverse_mod(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a;
  while (nr != 0) {
    const long q = r / nr;
    std::tie(t, nt) = std::pair{nt, t - q * nt};
    std::tie(r, nr) = std::pair{nr, r - q * nr};
  }
  return reduce(t, p);
}

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> echelon(std::vector<long>& a, int rows, int cols, long p) {
  for (auto& v : a) v = reduce(v, p);
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<size_t>(i) * cols + c] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<size_t>(piv) * cols + j], a[static_cast<size_t>(r) * cols + j]);
    const long inv = inverse_mod(a[static_cast<size_t>(r) * cols + c], p);
    for (int j = c; j < cols; ++j) {
      long& x = a[static_cast<size_t>(r) * cols + j];
      x = x * inv % p;
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const long f = a[static_cast<size_t>(i) * cols + c];
      if (f == 0) continue;
      for (int j = c; j < cols; ++j) {
        long& x = a[static_cast<size_t>(i) * cols + j];
        x = reduce(x - f * a[static_cast<size_t>(r) * cols + j], p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

int rank_mod_p(const IntMatrix& m, long p) {
  std::vector<long> a = m.a;
  return static_cast<int>(echelon(a, m.rows, m.cols, p).size());
}

std::vector<std::vector<long>> nullspace_mod_p(const IntMatrix& m, long p) {
  std::vector<long> a = m.a;
  const std::vector<int> pivots = echelon(a, m.rows, m.cols, p);
  std::vector<char> is_pivot(m.cols, 0);
  for (int c : pivots) is_pivot[c] = 1;
  std::vector<std::vector<long>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<long> v(m.cols, 0);
    v[free] = 1;
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = reduce(-a[r * m.cols + free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

int span_rank_mod_p(const std::vector<std::vector<long>>& vecs, int dim, long p) {
  if (vecs.empty() || dim == 0) return 0;
  std::vector<long> a;
  a.reserve(vecs.size() * dim);
  for (const auto& v : vecs) a.insert(a.end(), v.begin(), v.end());
  return static_cast<int>(echelon(a, static_cast<int>(vecs.size()), dim, p).size());
}

std::vector<std::vector<long>> columns(const IntMatrix& m) {
  std::vector<std::vector<long>> out(m.cols, std::vector<long>(m.rows));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[j][i] = m(i, j);
  return out;
}

std::vector<long> apply(const IntMatrix& m, const std::vector<long>& v) {
  std::vector<long> out(m.rows, 0);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i] += m(i, j) * v[j];
  return out;
}

std::vector<mpz_class> invariant_factors(const IntMatrix& m) {
  const int rows = m.rows, cols = m.cols;
  std::vector<mpz_class> a(m.a.begin(), m.a.end());
  auto at = [&](int i, int j) -> mpz_class& { return a[static_cast<size_t>(i) * cols + j]; };
  std::vector<mpz_class> diag;

  for (int t = 0; t < std::min(rows, cols); ++t) {
    // smallest nonzero entry of the remaining block becomes the pivot
    int pi = -1, pj = -1;
    for (int i = t; i < rows; ++i)
      for (int j = t; j < cols; ++j)
        if (sgn(at(i, j)) != 0 && (pi < 0 || abs(at(i, j)) < abs(at(pi, pj)))) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    for (;;) {
      if (pi != t)
        for (int j = 0; j < cols; ++j) std::swap(at(pi, j), at(t, j));
      if (pj != t)
        for (int i = 0; i < rows; ++i) std::swap(at(i, pj), at(i, t));
      const mpz_class piv = at(t, t);
      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (sgn(at(i, t)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), at(i, t).get_mpz_t(), piv.get_mpz_t());
        for (int j = t; j < cols; ++j) at(i, j) -= q * at(t, j);
        if (sgn(at(i, t)) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (sgn(at(t, j)) == 0) continue;
        mpz_class q;
        mpz_tdiv_q(q.get_mpz_t(), at(t, j).get_mpz_t(), piv.get_mpz_t());
        for (int i = t; i < rows; ++i) at(i, j) -= q * at(i, t);
        if (sgn(at(t, j)) != 0) clean = false;
      }
      if (clean) break;
      pi = t;
      pj = t;
      for (int i = t + 1; i < rows; ++i)
        if (sgn(at(i, t)) != 0 && abs(at(i, t)) < abs(at(pi, pj))) {
          pi = i;
          pj = t;
        }
      for (int j = t + 1; j < cols; ++j)
        if (sgn(at(t, j)) != 0 && abs(at(t, j)) < abs(at(pi, pj))) {
          pi = t;
          pj = j;
        }
    }
    diag.push_back(abs(at(t, t)));
  }

  for (size_t i = 0; i < diag.size(); ++i)
    for (size_t j = i + 1; j < diag.size(); ++j) {
      mpz_class g, l;
      mpz_gcd(g.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      mpz_lcm(l.get_mpz_t(), diag[i].get_mpz_t(), diag[j].get_mpz_t());
      diag[i] = g;
      diag[j] = l;
    }
  return diag;
}

}  // namespace dblgrp
