#include "dblgrp/corpus.hpp"

#include <algorithm>
#include <array>

namespace dblgrp {

namespace {

std::vector<std::array<int, 3>> s3_elements() {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> p{0, 1, 2};
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

int s3_index(const std::array<int, 3>& p) {
  const auto els = s3_elements();
  return static_cast<int>(std::find(els.begin(), els.end(), p) - els.begin());
}

}  // namespace

Groupoid symmetric_group_s3() {
  const auto els = s3_elements();
  std::vector<std::vector<int>> table(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c{};
      for (int i = 0; i < 3; ++i) c[i] = els[b][els[a][i]];
      table[a][b] = s3_index(c);
    }
  return one_object_group(table);
}

namespace {

std::vector<int> s3_transposition_subgroup() { return {s3_index({0, 1, 2}), s3_index({1, 0, 2})}; }
std::vector<int> s3_rotation_subgroup() {
  std::vector<int> r{s3_index({0, 1, 2}), s3_index({1, 2, 0}), s3_index({2, 0, 1})};
  std::sort(r.begin(), r.end());
  return r;
}

}  // namespace

MatchedPair s3_matched_pair() {
  return from_exact_factorization(symmetric_group_s3(), s3_transposition_subgroup(), s3_rotation_subgroup());
}

ConnectedFactorizationData s3_factorization_data() {
  ConnectedFactorizationData d;
  d.group = symmetric_group_s3();
  d.n_points = 1;
  const int e = d.group.identity[0];
  d.horiz = {{0}, {s3_rotation_subgroup()}, {{{0, 0}, e}}, {}};
  d.vert = {{0}, {s3_transposition_subgroup()}, {{{0, 0}, e}}, {}};
  return d;
}

ConnectedFactorizationData z4_overlap_data() {
  ConnectedFactorizationData d;
  d.group = cyclic_group(4);
  d.n_points = 1;
  d.horiz = {{0}, {{0, 2}}, {{{0, 0}, 0}}, {}};
  d.vert = d.horiz;
  return d;
}

DoubleGroupoid commuting_squares_z2() {
  DoubleGroupoid t;
  t.n_points = 1;
  t.horiz = cyclic_group(2);
  t.vert = cyclic_group(2);
  std::vector<std::array<int, 4>> frames;  // top, bottom, left, right
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int l = 0; l < 2; ++l)
        for (int r = 0; r < 2; ++r)
          if ((a + r) % 2 == (l + b) % 2) frames.push_back({a, b, l, r});
  auto box = [&](const std::array<int, 4>& f) {
    return static_cast<int>(std::find(frames.begin(), frames.end(), f) - frames.begin());
  };
  const int n = static_cast<int>(frames.size());
  for (const auto& f : frames) {
    t.top.push_back(f[0]);
    t.bottom.push_back(f[1]);
    t.left.push_back(f[2]);
    t.right.push_back(f[3]);
  }
  t.vcomp.assign(static_cast<size_t>(n) * n, -1);
  t.hcomp.assign(static_cast<size_t>(n) * n, -1);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto &x = frames[i], &y = frames[j];
      if (x[1] == y[0]) t.vcomp[static_cast<size_t>(i) * n + j] = box({x[0], y[1], (x[2] + y[2]) % 2, (x[3] + y[3]) % 2});
      if (x[3] == y[2]) t.hcomp[static_cast<size_t>(i) * n + j] = box({(x[0] + y[0]) % 2, (x[1] + y[1]) % 2, x[2], y[3]});
    }
  for (int x = 0; x < 2; ++x) t.vid.push_back(box({x, x, 0, 0}));
  for (int g = 0; g < 2; ++g) t.hid.push_back(box({0, 0, g, g}));
  return t;
}

std::vector<CorpusInstance> corpus() {
  const DoubleGroupoid s3 = to_vacant_double(s3_matched_pair());
  const DoubleGroupoid x11 = build_Xrs(1, 1), x22 = build_Xrs(2, 2), x23 = build_Xrs(2, 3);
  return {
      {"s3_matched_pair", s3_matched_pair(), true},
      {"x11", x11, true},
      {"x22", x22, true},
      {"x23", x23, true},
      {"commuting_squares_z2", commuting_squares_z2(), false},
      {"union_s3_x22", disjoint_union(s3, x22), true},
      {"union_x11_x23", disjoint_union(x11, x23), true},
      {"product_s3_x22", direct_product(s3, x22), true},
  };
}

DoubleGroupoid double_groupoid_of(const CorpusInstance& c) {
  if (const auto* mp = std::get_if<MatchedPair>(&c.object)) return to_vacant_double(*mp);
  return std::get<DoubleGroupoid>(c.object);
}

}  // namespace dblgrp
