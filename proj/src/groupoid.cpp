#include "dblgrp/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>

namespace dblgrp {

void Groupoid::derive_inverses() {
  const int m = n_arrows();
  inverse.assign(m, -1);
  for (int f = 0; f < m; ++f) {
    for (int g = 0; g < m; ++g) {
      if (!composable(f, g) || !composable(g, f)) continue;
      if (comp(f, g) == identity[source[f]] && comp(g, f) == identity[target[f]]) {
        inverse[f] = g;
        break;
      }
    }
  }
}

void check_structure(const Groupoid& g) {
  const int n = g.n_objects;
  const int m = g.n_arrows();
  if (n <= 0) throw StructuralError("groupoid has no objects");
  if (static_cast<int>(g.target.size()) != m) throw StructuralError("source/target size mismatch");
  if (static_cast<int>(g.identity.size()) != n) throw StructuralError("identity table size mismatch");
  if (g.compose.size() != static_cast<size_t>(m) * m) throw StructuralError("compose table size mismatch");
  for (int f = 0; f < m; ++f) {
    if (g.source[f] < 0 || g.source[f] >= n) throw StructuralError("arrow source out of range: " + std::to_string(f));
    if (g.target[f] < 0 || g.target[f] >= n) throw StructuralError("arrow target out of range: " + std::to_string(f));
  }
  for (int p = 0; p < n; ++p)
    if (g.identity[p] < 0 || g.identity[p] >= m) throw StructuralError("identity out of range: " + std::to_string(p));
  for (int f = 0; f < m; ++f) {
    for (int h = 0; h < m; ++h) {
      const int c = g.comp(f, h);
      if (g.composable(f, h)) {
        if (c < 0 || c >= m)
          throw StructuralError("composite missing or out of range: " + std::to_string(f) + "," + std::to_string(h));
      } else if (c != -1) {
        throw StructuralError("composite defined on non-composable pair: " + std::to_string(f) + "," +
                              std::to_string(h));
      }
    }
  }
  if (!g.inverse.empty() && static_cast<int>(g.inverse.size()) != m)
    throw StructuralError("inverse table size mismatch");
}

Report validate_groupoid(const Groupoid& g) {
  check_structure(g);
  Report rep;
  const int m = g.n_arrows();
  for (int p = 0; p < g.n_objects; ++p) {
    const int e = g.identity[p];
    if (g.source[e] != p || g.target[e] != p) rep.add("identity-endpoints", {p});
  }
  for (int f = 0; f < m; ++f) {
    for (int h = 0; h < m; ++h) {
      if (!g.composable(f, h)) continue;
      const int c = g.comp(f, h);
      if (g.source[c] != g.source[f] || g.target[c] != g.target[h]) rep.add("composite-endpoints", {f, h});
    }
  }
  if (!rep.ok()) return rep;
  for (int f = 0; f < m; ++f) {
    if (g.comp(g.identity[g.source[f]], f) != f || g.comp(f, g.identity[g.target[f]]) != f) rep.add("unit", {f});
  }
  for (int f = 0; f < m; ++f)
    for (int h = 0; h < m; ++h) {
      if (!g.composable(f, h)) continue;
      const int fh = g.comp(f, h);
      for (int k = 0; k < m; ++k) {
        if (!g.composable(h, k)) continue;
        if (g.comp(fh, k) != g.comp(f, g.comp(h, k))) rep.add("associativity", {f, h, k});
      }
    }
  for (int f = 0; f < m; ++f) {
    bool found = false;
    for (int h = 0; h < m && !found; ++h)
      found = g.composable(f, h) && g.composable(h, f) && g.comp(f, h) == g.identity[g.source[f]] &&
              g.comp(h, f) == g.identity[g.target[f]];
    if (!found) rep.add("inverse", {f});
  }
  if (!g.inverse.empty()) {
    Groupoid copy = g;
    copy.derive_inverses();
    for (int f = 0; f < m; ++f)
      if (copy.inverse[f] != -1 && copy.inverse[f] != g.inverse[f]) rep.add("inverse-table", {f});
  }
  return rep;
}

Groupoid relation_groupoid(const std::vector<int>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n == 0) throw StructuralError("empty base");
  Groupoid g;
  g.n_objects = n;
  g.identity.assign(n, -1);
  std::vector<int> index(static_cast<size_t>(n) * n, -1);
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (labels[p] == labels[q]) {
        index[static_cast<size_t>(p) * n + q] = g.n_arrows();
        g.source.push_back(p);
        g.target.push_back(q);
      }
  for (int p = 0; p < n; ++p) g.identity[p] = index[static_cast<size_t>(p) * n + p];
  const int m = g.n_arrows();
  g.compose.assign(static_cast<size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f)
    for (int h = 0; h < m; ++h)
      if (g.target[f] == g.source[h]) g.compose[static_cast<size_t>(f) * m + h] = index[g.source[f] * n + g.target[h]];
  g.derive_inverses();
  return g;
}

Groupoid coarse_groupoid(int n) {
  if (n <= 0) throw StructuralError("coarse groupoid needs a nonempty base");
  return relation_groupoid(std::vector<int>(n, 0));
}

Groupoid one_object_group(const std::vector<std::vector<int>>& table) {
  const int m = static_cast<int>(table.size());
  if (m == 0) throw StructuralError("empty group table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != m) throw StructuralError("group table is not square");
    for (int v : row)
      if (v < 0 || v >= m) throw StructuralError("group table entry out of range");
  }
  int e = -1;
  for (int a = 0; a < m && e < 0; ++a) {
    bool unit = true;
    for (int b = 0; b < m && unit; ++b) unit = table[a][b] == b && table[b][a] == b;
    if (unit) e = a;
  }
  if (e < 0) throw MathError("table has no identity element");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      for (int c = 0; c < m; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]]) throw MathError("table is not associative", {a, b, c});
  for (int a = 0; a < m; ++a) {
    bool inv = false;
    for (int b = 0; b < m && !inv; ++b) inv = table[a][b] == e && table[b][a] == e;
    if (!inv) throw MathError("element has no inverse", {a});
  }
  Groupoid g;
  g.n_objects = 1;
  g.source.assign(m, 0);
  g.target.assign(m, 0);
  g.identity = {e};
  g.compose.resize(static_cast<size_t>(m) * m);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) g.compose[static_cast<size_t>(a) * m + b] = table[a][b];
  g.derive_inverses();
  return g;
}

Groupoid cyclic_group(int n) {
  if (n <= 0) throw StructuralError("cyclic group of order 0");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return one_object_group(t);
}

Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2) {
  check_structure(g1);
  check_structure(g2);
  const int n1 = g1.n_objects, m1 = g1.n_arrows(), m2 = g2.n_arrows();
  const int m = m1 + m2;
  Groupoid g;
  g.n_objects = n1 + g2.n_objects;
  g.source = g1.source;
  g.target = g1.target;
  for (int f = 0; f < m2; ++f) {
    g.source.push_back(g2.source[f] + n1);
    g.target.push_back(g2.target[f] + n1);
  }
  g.identity = g1.identity;
  for (int e : g2.identity) g.identity.push_back(e + m1);
  g.compose.assign(static_cast<size_t>(m) * m, -1);
  for (int f = 0; f < m1; ++f)
    for (int h = 0; h < m1; ++h) g.compose[static_cast<size_t>(f) * m + h] = g1.comp(f, h);
  for (int f = 0; f < m2; ++f)
    for (int h = 0; h < m2; ++h) {
      const int c = g2.comp(f, h);
      g.compose[static_cast<size_t>(f + m1) * m + h + m1] = c < 0 ? -1 : c + m1;
    }
  g.derive_inverses();
  return g;
}

Groupoid direct_product(const Groupoid& g1, const Groupoid& g2) {
  check_structure(g1);
  check_structure(g2);
  const int n2 = g2.n_objects, m1 = g1.n_arrows(), m2 = g2.n_arrows();
  const int m = m1 * m2;
  Groupoid g;
  g.n_objects = g1.n_objects * n2;
  g.source.resize(m);
  g.target.resize(m);
  for (int a = 0; a < m1; ++a)
    for (int b = 0; b < m2; ++b) {
      g.source[a * m2 + b] = g1.source[a] * n2 + g2.source[b];
      g.target[a * m2 + b] = g1.target[a] * n2 + g2.target[b];
    }
  g.identity.resize(g.n_objects);
  for (int p = 0; p < g1.n_objects; ++p)
    for (int q = 0; q < n2; ++q) g.identity[p * n2 + q] = g1.identity[p] * m2 + g2.identity[q];
  g.compose.assign(static_cast<size_t>(m) * m, -1);
  for (int f = 0; f < m; ++f)
    for (int h = 0; h < m; ++h) {
      const int c1 = g1.comp(f / m2, h / m2), c2 = g2.comp(f % m2, h % m2);
      if (c1 >= 0 && c2 >= 0) g.compose[static_cast<size_t>(f) * m + h] = c1 * m2 + c2;
    }
  g.derive_inverses();
  return g;
}

Groupoid restrict(const Groupoid& g, const std::vector<int>& objects, const std::vector<int>& arrows) {
  std::vector<int> obj_index(g.n_objects, -1), arr_index(g.n_arrows(), -1);
  for (size_t i = 0; i < objects.size(); ++i) obj_index[objects[i]] = static_cast<int>(i);
  for (size_t i = 0; i < arrows.size(); ++i) arr_index[arrows[i]] = static_cast<int>(i);
  Groupoid r;
  r.n_objects = static_cast<int>(objects.size());
  const int m = static_cast<int>(arrows.size());
  for (int a : arrows) {
    if (obj_index[g.source[a]] < 0 || obj_index[g.target[a]] < 0)
      throw MathError("arrow leaves the restricted object set", {a});
    r.source.push_back(obj_index[g.source[a]]);
    r.target.push_back(obj_index[g.target[a]]);
  }
  for (int p : objects) {
    if (arr_index[g.identity[p]] < 0) throw MathError("restriction misses an identity", {p});
    r.identity.push_back(arr_index[g.identity[p]]);
  }
  r.compose.assign(static_cast<size_t>(m) * m, -1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      const int c = g.comp(arrows[i], arrows[j]);
      if (c < 0) continue;
      if (arr_index[c] < 0) throw MathError("restriction not closed under composition", {arrows[i], arrows[j]});
      r.compose[static_cast<size_t>(i) * m + j] = arr_index[c];
    }
  r.derive_inverses();
  for (int i = 0; i < m; ++i)
    if (r.inverse[i] < 0) throw MathError("restriction not closed under inverses", {arrows[i]});
  return r;
}

std::vector<int> component_labels(const Groupoid& g) {
  std::vector<int> parent(g.n_objects);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  for (int f = 0; f < g.n_arrows(); ++f) {
    int a = find(g.source[f]), b = find(g.target[f]);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> labels(g.n_objects);
  for (int p = 0; p < g.n_objects; ++p) labels[p] = find(p);
  return labels;
}

bool is_connected(const Groupoid& g) {
  for (int l : component_labels(g))
    if (l != 0) return false;
  return true;
}

bool is_isomorphism(const Groupoid& a, const Groupoid& b, const std::vector<int>& object_map,
                    const std::vector<int>& arrow_map) {
  if (a.n_objects != b.n_objects || a.n_arrows() != b.n_arrows()) return false;
  if (static_cast<int>(object_map.size()) != a.n_objects || static_cast<int>(arrow_map.size()) != a.n_arrows())
    return false;
  std::vector<char> seen_o(b.n_objects, 0), seen_a(b.n_arrows(), 0);
  for (int o : object_map) {
    if (o < 0 || o >= b.n_objects || seen_o[o]) return false;
    seen_o[o] = 1;
  }
  for (int f : arrow_map) {
    if (f < 0 || f >= b.n_arrows() || seen_a[f]) return false;
    seen_a[f] = 1;
  }
  for (int f = 0; f < a.n_arrows(); ++f)
    if (b.source[arrow_map[f]] != object_map[a.source[f]] || b.target[arrow_map[f]] != object_map[a.target[f]])
      return false;
  for (int p = 0; p < a.n_objects; ++p)
    if (arrow_map[a.identity[p]] != b.identity[object_map[p]]) return false;
  for (int f = 0; f < a.n_arrows(); ++f)
    for (int h = 0; h < a.n_arrows(); ++h) {
      const int c = a.comp(f, h);
      if (c >= 0 && b.comp(arrow_map[f], arrow_map[h]) != arrow_map[c]) return false;
    }
  return true;
}

std::vector<Component> connected_decomposition(const Groupoid& g) {
  check_structure(g);
  const auto labels = component_labels(g);
  std::vector<Component> out;
  for (int base = 0; base < g.n_objects; ++base) {
    if (labels[base] != base) continue;
    Component c;
    c.base = base;
    for (int p = 0; p < g.n_objects; ++p)
      if (labels[p] == base) c.objects.push_back(p);
    const int k = static_cast<int>(c.objects.size());
    std::vector<int> pos(g.n_objects, -1);
    for (int i = 0; i < k; ++i) pos[c.objects[i]] = i;
    for (int f = 0; f < g.n_arrows(); ++f)
      if (g.source[f] == base && g.target[f] == base) c.loops.push_back(f);
    c.transversal.assign(k, -1);
    for (int f = 0; f < g.n_arrows(); ++f)
      if (g.source[f] == base && c.transversal[pos[g.target[f]]] < 0) c.transversal[pos[g.target[f]]] = f;
    const Groupoid vertex = restrict(g, {base}, c.loops);
    c.model = direct_product(vertex, coarse_groupoid(k));
    std::vector<int> loop_pos(g.n_arrows(), -1);
    for (size_t i = 0; i < c.loops.size(); ++i) loop_pos[c.loops[i]] = static_cast<int>(i);
    c.arrow_map.assign(g.n_arrows(), -1);
    std::vector<int> comp_arrows;
    for (int f = 0; f < g.n_arrows(); ++f) {
      if (labels[g.source[f]] != base) continue;
      comp_arrows.push_back(f);
      const int y = pos[g.source[f]], z = pos[g.target[f]];
      const int loop = g.comp(g.comp(c.transversal[y], f), g.inverse[c.transversal[z]]);
      c.arrow_map[f] = loop_pos[loop] * (k * k) + y * k + z;
    }
    const Groupoid piece = restrict(g, c.objects, comp_arrows);
    std::vector<int> amap;
    for (int f : comp_arrows) amap.push_back(c.arrow_map[f]);
    std::vector<int> omap(k);
    std::iota(omap.begin(), omap.end(), 0);
    c.witness_verified = is_isomorphism(piece, c.model, omap, amap);
    out.push_back(std::move(c));
  }
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_isomorphism(const Groupoid& a, const Groupoid& b) {
  if (a.n_objects != b.n_objects || a.n_arrows() != b.n_arrows()) return std::nullopt;
  const int n = a.n_objects, m = a.n_arrows();
  std::vector<int> omap(n);
  std::iota(omap.begin(), omap.end(), 0);
  do {
    std::vector<int> amap(m, -1);
    std::vector<char> used(m, 0);
    bool ok = true;
    for (int p = 0; p < n && ok; ++p) {
      amap[a.identity[p]] = b.identity[omap[p]];
      ok = !used[b.identity[omap[p]]];
      used[b.identity[omap[p]]] = 1;
    }
    if (!ok) continue;
    std::vector<int> order;
    for (int f = 0; f < m; ++f)
      if (amap[f] < 0) order.push_back(f);
    std::function<bool(size_t)> assign = [&](size_t i) -> bool {
      if (i == order.size()) return is_isomorphism(a, b, omap, amap);
      const int f = order[i];
      for (int x = 0; x < m; ++x) {
        if (used[x] || b.source[x] != omap[a.source[f]] || b.target[x] != omap[a.target[f]]) continue;
        amap[f] = x;
        bool consistent = true;
        for (int h = 0; h < m && consistent; ++h) {
          if (amap[h] < 0) continue;
          const int c1 = a.comp(f, h);
          if (c1 >= 0 && amap[c1] >= 0) consistent = b.comp(x, amap[h]) == amap[c1];
          const int c2 = a.comp(h, f);
          if (consistent && c2 >= 0 && amap[c2] >= 0) consistent = b.comp(amap[h], x) == amap[c2];
        }
        if (consistent) {
          used[x] = 1;
          if (assign(i + 1)) return true;
          used[x] = 0;
        }
        amap[f] = -1;
      }
      return false;
    };
    if (assign(0)) return std::make_pair(omap, amap);
  } while (std::next_permutation(omap.begin(), omap.end()));
  return std::nullopt;
}

Groupoid ambient_groupoid(const Groupoid& group, int n_objects) {
  if (group.n_objects != 1) throw StructuralError("ambient group must have one object");
  return direct_product(group, coarse_groupoid(n_objects));
}

int ambient_arrow(const Groupoid& group, int n_objects, int d, int p, int q) {
  (void)group;
  return d * n_objects * n_objects + p * n_objects + q;
}

namespace {

int mul(const Groupoid& d, int a, int b) { return d.comp(a, b); }

std::vector<int> left_coset(const Groupoid& d, int x, const std::vector<int>& h) {
  std::vector<int> out;
  for (int a : h) out.push_back(mul(d, x, a));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> right_coset(const Groupoid& d, const std::vector<int>& h, int x) {
  std::vector<int> out;
  for (int a : h) out.push_back(mul(d, a, x));
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const std::vector<int>& sorted, int x) { return std::binary_search(sorted.begin(), sorted.end(), x); }

bool is_subgroup(const Groupoid& d, const std::vector<int>& h) {
  if (h.empty() || !contains(h, d.identity[0])) return false;
  for (int a : h)
    for (int b : h)
      if (!contains(h, mul(d, a, b))) return false;
  return true;
}

std::vector<int> transversal_or_identity(const std::vector<int>& t, const Groupoid& d, int n) {
  if (t.empty()) return std::vector<int>(n, d.identity[0]);
  if (static_cast<int>(t.size()) != n) throw StructuralError("transversal size mismatch");
  return t;
}

}  // namespace

bool same_double_coset(const Groupoid& group, const std::vector<int>& left, const std::vector<int>& right, int d1,
                       int d2) {
  for (int a : left)
    for (int b : right)
      if (mul(group, mul(group, a, d1), b) == d2) return true;
  return false;
}

void validate_wide_data(const WideSubgroupoidData& data, const Groupoid& group, int n) {
  if (group.n_objects != 1) throw StructuralError("ambient group must have one object");
  if (static_cast<int>(data.relation.size()) != n || static_cast<int>(data.vertex_groups.size()) != n)
    throw StructuralError("wide subgroupoid data size mismatch");
  const int m = group.n_arrows();
  for (const auto& h : data.vertex_groups)
    for (int a : h)
      if (a < 0 || a >= m) throw StructuralError("vertex group element out of range");
  for (const auto& [pq, d] : data.coset_reps) {
    if (pq.first < 0 || pq.first >= n || pq.second < 0 || pq.second >= n || d < 0 || d >= m)
      throw StructuralError("coset representative out of range");
  }
  for (int p = 0; p < n; ++p) {
    if (!std::is_sorted(data.vertex_groups[p].begin(), data.vertex_groups[p].end()))
      throw StructuralError("vertex group list not sorted");
    if (!is_subgroup(group, data.vertex_groups[p])) throw MathError("H_P is not a subgroup", {p});
  }
  auto rep = [&](int p, int q) {
    auto it = data.coset_reps.find({p, q});
    if (it == data.coset_reps.end()) throw MathError("missing coset representative", {p, q});
    return it->second;
  };
  for (const auto& [pq, d] : data.coset_reps)
    if (data.relation[pq.first] != data.relation[pq.second])
      throw MathError("coset representative for unrelated objects", {pq.first, pq.second});
  for (int p = 0; p < n; ++p) {
    if (!contains(data.vertex_groups[p], rep(p, p))) throw MathError("d_PP not in H_P", {p});
    for (int q = 0; q < n; ++q) {
      if (data.relation[p] != data.relation[q]) continue;
      const int d = rep(p, q);
      if (left_coset(group, d, data.vertex_groups[q]) != right_coset(group, data.vertex_groups[p], d))
        throw MathError("d_PQ H_Q != H_P d_PQ", {p, q});
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (data.relation[p] != data.relation[q]) continue;
      for (int r = 0; r < n; ++r) {
        if (data.relation[q] != data.relation[r]) continue;
        const int prod = mul(group, rep(p, q), rep(q, r));
        if (!contains(right_coset(group, data.vertex_groups[p], rep(p, r)), prod))
          throw MathError("d_PQ d_QR not in H_P d_PR", {p, q, r});
      }
    }
}

EmbeddedSubgroupoid wide_subgroupoid_from_data(const WideSubgroupoidData& data, const Groupoid& group, int n) {
  validate_wide_data(data, group, n);
  const auto t = transversal_or_identity(data.transversal, group, n);
  std::set<int> arrows;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (data.relation[p] != data.relation[q]) continue;
      const int d = data.coset_reps.at({p, q});
      for (int h : data.vertex_groups[p]) {
        const int g = mul(group, mul(group, mul(group, group.inverse[t[p]], h), d), t[q]);
        arrows.insert(ambient_arrow(group, n, g, p, q));
      }
    }
  EmbeddedSubgroupoid out;
  out.embedding.assign(arrows.begin(), arrows.end());
  std::vector<int> objects(n);
  std::iota(objects.begin(), objects.end(), 0);
  out.sub = restrict(ambient_groupoid(group, n), objects, out.embedding);
  return out;
}

WideSubgroupoidData data_from_wide_subgroupoid(const std::vector<int>& ambient_arrows, const Groupoid& group, int n,
                                               std::vector<int> transversal) {
  const Groupoid amb = ambient_groupoid(group, n);
  std::vector<int> objects(n);
  std::iota(objects.begin(), objects.end(), 0);
  std::vector<int> sorted = ambient_arrows;
  std::sort(sorted.begin(), sorted.end());
  for (int a : sorted)
    if (a < 0 || a >= amb.n_arrows()) throw StructuralError("ambient arrow out of range");
  const Groupoid sub = restrict(amb, objects, sorted);  // throws unless closed and wide
  (void)sub;
  const auto t = transversal_or_identity(transversal, group, n);
  WideSubgroupoidData data;
  data.transversal = transversal;
  data.relation.assign(n, -1);
  data.vertex_groups.assign(n, {});
  const int nn = n * n;
  std::map<std::pair<int, int>, int> first;
  for (int a : sorted) {
    const int d = a / nn, p = (a % nn) / n, q = a % n;
    if (!first.count({p, q})) first[{p, q}] = d;
    if (p == q) data.vertex_groups[p].push_back(mul(group, mul(group, t[p], d), group.inverse[t[p]]));
  }
  for (int p = 0; p < n; ++p) {
    std::sort(data.vertex_groups[p].begin(), data.vertex_groups[p].end());
    for (int q = 0; q < n; ++q)
      if (first.count({p, q}) && data.relation[p] < 0) data.relation[p] = std::min(p, q);
  }
  for (int p = 0; p < n; ++p)
    for (int q = 0; q <= p; ++q)
      if (first.count({q, p})) {
        data.relation[p] = data.relation[q];
        break;
      }
  for (const auto& [pq, d] : first)
    data.coset_reps[pq] = mul(group, mul(group, t[pq.first], d), group.inverse[t[pq.second]]);
  return data;
}

}  // namespace dblgrp
