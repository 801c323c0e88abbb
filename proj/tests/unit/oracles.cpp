#include "oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace oracle {

long dense_rank(std::vector<std::vector<long>> rows, long p) {
  auto md = [p](long v) { return ((v % p) + p) % p; };
  auto pw = [&](long b, long e) {
    long r = 1;
    b = md(b);
    for (; e > 0; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  for (auto& r : rows)
    for (auto& v : r) v = md(v);
  long rank = 0;
  const size_t cols = rows.empty() ? 0 : rows[0].size();
  for (size_t c = 0; c < cols && rank < static_cast<long>(rows.size()); ++c) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const long inv = pw(rows[rank][c], p - 2);
    for (size_t i = rank + 1; i < rows.size(); ++i) {
      const long f = rows[i][c] * inv % p;
      if (f == 0) continue;
      for (size_t j = c; j < cols; ++j) rows[i][j] = md(rows[i][j] - f * rows[rank][j]);
    }
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::vector<int>> all_tuples(const dblgrp::Groupoid& g, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    for (int p = 0; p < g.n_objects; ++p) out.push_back({p});
    return out;
  }
  if (n == 1) {
    for (int f = 0; f < g.n_arrows(); ++f) out.push_back({f});
    return out;
  }
  for (const auto& t : all_tuples(g, n - 1)) {
    for (int f = 0; f < g.n_arrows(); ++f)
      if (g.target[t.back()] == g.source[f]) {
        auto u = t;
        u.push_back(f);
        out.push_back(u);
      }
  }
  return out;
}

// Rows indexed by (n+1)-tuples, columns by n-tuples.
std::vector<std::vector<long>> bar_matrix(const dblgrp::Groupoid& g, int n) {
  const auto src = all_tuples(g, n), dst = all_tuples(g, n + 1);
  auto col = [&](const std::vector<int>& x) {
    return static_cast<size_t>(std::find(src.begin(), src.end(), x) - src.begin());
  };
  std::vector<std::vector<long>> m(dst.size(), std::vector<long>(src.size(), 0));
  for (size_t i = 0; i < dst.size(); ++i) {
    const auto& x = dst[i];
    if (n == 0) {
      m[i][col({g.target[x[0]]})] += 1;
      m[i][col({g.source[x[0]]})] -= 1;
      continue;
    }
    m[i][col(std::vector<int>(x.begin() + 1, x.end()))] += 1;
    for (int k = 0; k < n; ++k) {
      std::vector<int> y;
      for (int j = 0; j <= n; ++j) {
        if (j == k + 1) continue;
        y.push_back(j == k ? g.comp(x[k], x[k + 1]) : x[j]);
      }
      m[i][col(y)] += (k % 2 == 0) ? -1 : 1;
    }
    m[i][col(std::vector<int>(x.begin(), x.end() - 1))] += (n % 2 == 0) ? -1 : 1;
  }
  return m;
}

}  // namespace

long bar_cohomology_dim(const dblgrp::Groupoid& g, int n, long p) {
  const long dim = static_cast<long>(all_tuples(g, n).size());
  const long out = dense_rank(bar_matrix(g, n), p);
  const long in = n == 0 ? 0 : dense_rank(bar_matrix(g, n - 1), p);
  return dim - out - in;
}

int fillers(const dblgrp::DoubleGroupoid& t, int top, int right) {
  int c = 0;
  for (int b = 0; b < t.n_boxes(); ++b) c += t.top[b] == top && t.right[b] == right;
  return c;
}

int antipode_factorization_count(const dblgrp::DoubleGroupoid& t, int a) {
  const int n = t.n_boxes();
  auto vinv = [&](int x) {
    for (int y = 0; y < n; ++y)
      if (t.stackable(x, y) && t.stackable(y, x) && t.vc(x, y) == t.vid[t.top[x]] && t.vc(y, x) == t.vid[t.bottom[x]])
        return y;
    return -1;
  };
  auto hinv = [&](int x) {
    for (int y = 0; y < n; ++y)
      if (t.adjacent(x, y) && t.adjacent(y, x) && t.hc(x, y) == t.hid[t.left[x]] && t.hc(y, x) == t.hid[t.right[x]])
        return y;
    return -1;
  };
  auto full = [&](int x) { return vinv(hinv(x)); };
  const int a_inv = full(a);
  int count = 0;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!t.adjacent(x, y) || !t.adjacent(y, z)) continue;
        if (t.hc(t.hc(x, y), z) != a) continue;
        const int xi = full(x), zi = full(z);
        if (!t.stackable(xi, y) || !t.stackable(y, zi)) continue;
        if (t.vc(t.vc(xi, y), zi) == a_inv) ++count;
      }
  return count;
}

bool groups_isomorphic(const dblgrp::Groupoid& a, const dblgrp::Groupoid& b) {
  if (a.n_objects != 1 || b.n_objects != 1 || a.n_arrows() != b.n_arrows()) return false;
  std::vector<int> perm(a.n_arrows());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < a.n_arrows() && ok; ++x)
      for (int y = 0; y < a.n_arrows() && ok; ++y) ok = perm[a.comp(x, y)] == b.comp(perm[x], perm[y]);
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

dblgrp::CorpusInstance instance(const std::string& name) {
  for (auto& c : dblgrp::corpus())
    if (c.name == name) return c;
  throw std::invalid_argument("no corpus instance " + name);
}

dblgrp::DoubleGroupoid double_of(const std::string& name) { return dblgrp::double_groupoid_of(instance(name)); }

}  // namespace oracle
