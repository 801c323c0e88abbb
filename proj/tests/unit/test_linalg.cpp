#include <catch_amalgamated.hpp>

#include <random>

#include "dblgrp/linalg.hpp"
#include "oracles.hpp"

using namespace dblgrp;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int range) {
  IntMatrix m(r, c);
  for (auto& v : m.a) v = static_cast<long>(rng() % (2 * range + 1)) - range;
  return m;
}

std::vector<std::vector<long>> rows_of(const IntMatrix& m) {
  std::vector<std::vector<long>> out(m.rows, std::vector<long>(m.cols));
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out[i][j] = m(i, j);
  return out;
}

}  // namespace

TEST_CASE("rank mod p matches dense elimination") {
  std::mt19937 rng(3);
  for (long p : {2L, 3L, 5L, 7L})
    for (int trial = 0; trial < 30; ++trial) {
      const IntMatrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7, 3);
      CHECK(rank_mod_p(m, p) == oracle::dense_rank(rows_of(m), p));
    }
}

TEST_CASE("null space vectors are in the kernel and have the right count") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const long p = 3;
    const IntMatrix m = random_matrix(rng, 1 + rng() % 6, 1 + rng() % 6, 2);
    const auto ns = nullspace_mod_p(m, p);
    CHECK(static_cast<int>(ns.size()) == m.cols - rank_mod_p(m, p));
    for (const auto& v : ns)
      for (long x : apply(m, v)) CHECK(((x % p) + p) % p == 0);
    CHECK(span_rank_mod_p(ns, m.cols, p) == static_cast<int>(ns.size()));
  }
}

TEST_CASE("invariant factors") {
  IntMatrix m(2, 2);
  m.a = {2, 0, 0, 3};
  CHECK(invariant_factors(m) == std::vector<mpz_class>{1, 6});
  IntMatrix z(3, 3);
  CHECK(invariant_factors(z).empty());
  IntMatrix d(1, 1);
  d.a = {-2};
  CHECK(invariant_factors(d) == std::vector<mpz_class>{2});
}

TEST_CASE("invariant factors agree with ranks mod every prime") {
  std::mt19937 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 4);
    const auto f = invariant_factors(m);
    for (size_t i = 1; i < f.size(); ++i) CHECK(f[i] % f[i - 1] == 0);
    for (long p : {2L, 3L, 5L}) {
      long coprime = 0;
      for (const auto& x : f) coprime += (x % p != 0);
      CHECK(rank_mod_p(m, p) == coprime);
    }
    CHECK(static_cast<long>(f.size()) == oracle::dense_rank(rows_of(m), 1000003));
  }
}

TEST_CASE("matrix products") {
  IntMatrix a(2, 3), b(3, 1);
  a.a = {1, 2, 3, 4, 5, 6};
  b.a = {1, 0, -1};
  const IntMatrix c = multiply(a, b);
  CHECK(c.a == std::vector<long>{-2, -2});
  CHECK_THROWS(multiply(b, b));
}
