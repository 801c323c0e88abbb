#include "dblgrp/double_groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dblgrp {

namespace {

std::vector<std::vector<int>> bucket(const std::vector<int>& key, int n_keys) {
  std::vector<std::vector<int>> out(n_keys);
  for (int i = 0; i < static_cast<int>(key.size()); ++i) out[key[i]].push_back(i);
  return out;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw StructuralError(msg);
}

}  // namespace

void check_structure(const DoubleGroupoid& t) {
  require(t.n_points > 0, "double groupoid has no points");
  check_structure(t.horiz);
  check_structure(t.vert);
  require(t.horiz.n_objects == t.n_points && t.vert.n_objects == t.n_points, "edge groupoids on a different base");
  const int n = t.n_boxes();
  require(n > 0, "double groupoid has no boxes");
  require(static_cast<int>(t.bottom.size()) == n && static_cast<int>(t.left.size()) == n &&
              static_cast<int>(t.right.size()) == n,
          "frame table size mismatch");
  const int mh = t.horiz.n_arrows(), mv = t.vert.n_arrows();
  for (int a = 0; a < n; ++a) {
    require(t.top[a] >= 0 && t.top[a] < mh && t.bottom[a] >= 0 && t.bottom[a] < mh,
            "box horizontal side out of range: " + std::to_string(a));
    require(t.left[a] >= 0 && t.left[a] < mv && t.right[a] >= 0 && t.right[a] < mv,
            "box vertical side out of range: " + std::to_string(a));
  }
  require(static_cast<int>(t.vid.size()) == mh && static_cast<int>(t.hid.size()) == mv, "identity table size mismatch");
  for (int b : t.vid) require(b >= 0 && b < n, "vertical identity out of range");
  for (int b : t.hid) require(b >= 0 && b < n, "horizontal identity out of range");
  require(t.vcomp.size() == static_cast<size_t>(n) * n && t.hcomp.size() == static_cast<size_t>(n) * n,
          "box composition table size mismatch");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int v = t.vc(a, b), h = t.hc(a, b);
      if (t.stackable(a, b))
        require(v >= 0 && v < n, "vertical composite missing: " + std::to_string(a) + "," + std::to_string(b));
      else
        require(v == -1, "vertical composite on non-stackable pair: " + std::to_string(a) + "," + std::to_string(b));
      if (t.adjacent(a, b))
        require(h >= 0 && h < n, "horizontal composite missing: " + std::to_string(a) + "," + std::to_string(b));
      else
        require(h == -1, "horizontal composite on non-adjacent pair: " + std::to_string(a) + "," + std::to_string(b));
    }
}

Report validate_double_groupoid(const DoubleGroupoid& t) {
  check_structure(t);
  Report rep;
  const Groupoid& H = t.horiz;
  const Groupoid& V = t.vert;
  const int n = t.n_boxes();
  if (!validate_groupoid(H).ok()) rep.add("edge-groupoids", {0});
  if (!validate_groupoid(V).ok()) rep.add("edge-groupoids", {1});

  for (int a = 0; a < n; ++a) {
    const bool ok = H.source[t.top[a]] == V.source[t.left[a]] && H.target[t.top[a]] == V.source[t.right[a]] &&
                    H.source[t.bottom[a]] == V.target[t.left[a]] && H.target[t.bottom[a]] == V.target[t.right[a]];
    if (!ok) rep.add("frame-corners", {a});
  }

  auto by_top = bucket(t.top, H.n_arrows());
  auto by_left = bucket(t.left, V.n_arrows());

  for (int a = 0; a < n; ++a) {
    for (int b : by_top[t.bottom[a]]) {
      const int c = t.vc(a, b);
      const bool ok = t.top[c] == t.top[a] && t.bottom[c] == t.bottom[b] &&
                      V.composable(t.left[a], t.left[b]) && V.composable(t.right[a], t.right[b]) &&
                      t.left[c] == V.comp(t.left[a], t.left[b]) && t.right[c] == V.comp(t.right[a], t.right[b]);
      if (!ok) rep.add("composite-frames", {a, b});
    }
    for (int b : by_left[t.right[a]]) {
      const int c = t.hc(a, b);
      const bool ok = t.left[c] == t.left[a] && t.right[c] == t.right[b] && H.composable(t.top[a], t.top[b]) &&
                      H.composable(t.bottom[a], t.bottom[b]) && t.top[c] == H.comp(t.top[a], t.top[b]) &&
                      t.bottom[c] == H.comp(t.bottom[a], t.bottom[b]);
      if (!ok) rep.add("composite-frames", {a, b});
    }
  }

  for (int a = 0; a < n; ++a)
    for (int b : by_left[t.right[a]])
      for (int c : by_top[t.bottom[a]])
        for (int d : by_top[t.bottom[b]]) {
          if (t.left[d] != t.right[c]) continue;
          const int ab = t.hc(a, b), cd = t.hc(c, d), ac = t.vc(a, c), bd = t.vc(b, d);
          const int lhs = t.stackable(ab, cd) ? t.vc(ab, cd) : -1;
          const int rhs = t.adjacent(ac, bd) ? t.hc(ac, bd) : -1;
          if (lhs < 0 || lhs != rhs) rep.add("interchange", {a, b, c, d});
        }

  for (int x = 0; x < H.n_arrows(); ++x) {
    const int b = t.vid[x];
    if (t.top[b] != x || t.bottom[b] != x || t.left[b] != V.identity[H.source[x]] ||
        t.right[b] != V.identity[H.target[x]])
      rep.add("identity-frames", {b});
  }
  for (int g = 0; g < V.n_arrows(); ++g) {
    const int b = t.hid[g];
    if (t.left[b] != g || t.right[b] != g || t.top[b] != H.identity[V.source[g]] ||
        t.bottom[b] != H.identity[V.target[g]])
      rep.add("identity-frames", {b});
  }

  for (int p = 0; p < t.n_points; ++p)
    if (t.vid[H.identity[p]] != t.hid[V.identity[p]]) rep.add("point-identity", {p});

  for (int g = 0; g < V.n_arrows(); ++g)
    for (int h = 0; h < V.n_arrows(); ++h) {
      if (!V.composable(g, h)) continue;
      const int a = t.hid[g], b = t.hid[h];
      if (!t.stackable(a, b) || t.vc(a, b) != t.hid[V.comp(g, h)]) rep.add("identity-functoriality", {g, h});
    }
  for (int x = 0; x < H.n_arrows(); ++x)
    for (int y = 0; y < H.n_arrows(); ++y) {
      if (!H.composable(x, y)) continue;
      const int a = t.vid[x], b = t.vid[y];
      if (!t.adjacent(a, b) || t.hc(a, b) != t.vid[H.comp(x, y)]) rep.add("identity-functoriality", {x, y});
    }

  // Box categories: units, associativity, inverses.
  for (int a = 0; a < n; ++a) {
    const int u = t.vid[t.top[a]], w = t.vid[t.bottom[a]];
    if (!t.stackable(u, a) || t.vc(u, a) != a || !t.stackable(a, w) || t.vc(a, w) != a)
      rep.add("vertical-groupoid", {a});
    const int p = t.hid[t.left[a]], q = t.hid[t.right[a]];
    if (!t.adjacent(p, a) || t.hc(p, a) != a || !t.adjacent(a, q) || t.hc(a, q) != a)
      rep.add("horizontal-groupoid", {a});
  }
  for (int a = 0; a < n; ++a) {
    for (int b : by_top[t.bottom[a]]) {
      const int ab = t.vc(a, b);
      for (int c : by_top[t.bottom[b]]) {
        const int bc = t.vc(b, c);
        const int l = t.stackable(ab, c) ? t.vc(ab, c) : -1;
        const int r = t.stackable(a, bc) ? t.vc(a, bc) : -1;
        if (l < 0 || l != r) rep.add("vertical-groupoid", {a, b, c});
      }
    }
    for (int b : by_left[t.right[a]]) {
      const int ab = t.hc(a, b);
      for (int c : by_left[t.right[b]]) {
        const int bc = t.hc(b, c);
        const int l = t.adjacent(ab, c) ? t.hc(ab, c) : -1;
        const int r = t.adjacent(a, bc) ? t.hc(a, bc) : -1;
        if (l < 0 || l != r) rep.add("horizontal-groupoid", {a, b, c});
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    bool v_found = false, h_found = false;
    for (int b : by_top[t.bottom[a]])
      if (t.vc(a, b) == t.vid[t.top[a]] && t.stackable(b, a) && t.vc(b, a) == t.vid[t.bottom[a]]) v_found = true;
    for (int b : by_left[t.right[a]])
      if (t.hc(a, b) == t.hid[t.left[a]] && t.adjacent(b, a) && t.hc(b, a) == t.hid[t.right[a]]) h_found = true;
    if (!v_found) rep.add("vertical-groupoid", {a});
    if (!h_found) rep.add("horizontal-groupoid", {a});
  }
  return rep;
}

BoxInverseTable compute_inverses(const DoubleGroupoid& t) {
  const int n = t.n_boxes();
  auto by_top = bucket(t.top, t.horiz.n_arrows());
  auto by_left = bucket(t.left, t.vert.n_arrows());
  BoxInverseTable inv;
  inv.h_inv.assign(n, -1);
  inv.v_inv.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b : by_left[t.right[a]])
      if (t.hc(a, b) == t.hid[t.left[a]] && t.adjacent(b, a) && t.hc(b, a) == t.hid[t.right[a]]) {
        inv.h_inv[a] = b;
        break;
      }
    for (int b : by_top[t.bottom[a]])
      if (t.vc(a, b) == t.vid[t.top[a]] && t.stackable(b, a) && t.vc(b, a) == t.vid[t.bottom[a]]) {
        inv.v_inv[a] = b;
        break;
      }
    if (inv.h_inv[a] < 0) throw MathError("box has no horizontal inverse", {a});
    if (inv.v_inv[a] < 0) throw MathError("box has no vertical inverse", {a});
  }
  inv.full_inv.resize(n);
  for (int a = 0; a < n; ++a) {
    inv.full_inv[a] = inv.v_inv[inv.h_inv[a]];
    if (inv.full_inv[a] != inv.h_inv[inv.v_inv[a]]) throw MathError("(A^h)^v differs from (A^v)^h", {a});
  }
  return inv;
}

int count_fillers(const DoubleGroupoid& t, int top_edge, int right_edge) {
  int c = 0;
  for (int a = 0; a < t.n_boxes(); ++a)
    if (t.top[a] == top_edge && t.right[a] == right_edge) ++c;
  return c;
}

VacancyVerdict is_vacant(const DoubleGroupoid& t) {
  check_structure(t);
  const Groupoid& H = t.horiz;
  const Groupoid& V = t.vert;
  const int mh = H.n_arrows(), mv = V.n_arrows();
  VacancyVerdict out;
  struct Cond {
    const char* id;
    const std::vector<int>& hside;
    const std::vector<int>& vside;
    // corner admissible for (x, g)
    bool (*admissible)(const Groupoid&, const Groupoid&, int, int);
  };
  const Cond conds[] = {
      {"top-right", t.top, t.right, [](const Groupoid& h, const Groupoid& v, int x, int g) { return h.target[x] == v.source[g]; }},
      {"left-bottom", t.bottom, t.left, [](const Groupoid& h, const Groupoid& v, int y, int f) { return h.source[y] == v.target[f]; }},
      {"top-left", t.top, t.left, [](const Groupoid& h, const Groupoid& v, int x, int f) { return h.source[x] == v.source[f]; }},
      {"right-bottom", t.bottom, t.right, [](const Groupoid& h, const Groupoid& v, int y, int g) { return h.target[y] == v.target[g]; }},
  };
  for (const auto& c : conds) {
    std::vector<int> count(static_cast<size_t>(mh) * mv, 0);
    for (int a = 0; a < t.n_boxes(); ++a) ++count[static_cast<size_t>(c.hside[a]) * mv + c.vside[a]];
    bool ok = true;
    for (int x = 0; x < mh && ok; ++x)
      for (int g = 0; g < mv && ok; ++g) {
        if (!c.admissible(H, V, x, g)) continue;
        const int k = count[static_cast<size_t>(x) * mv + g];
        if (k != 1) {
          ok = false;
          out.witnesses.push_back({c.id, x, g, k});
        }
      }
    out.by_corner[c.id] = ok;
  }
  out.vacant = out.by_corner["top-right"];
  for (const auto& [id, v] : out.by_corner)
    if (v != out.vacant) out.consistent = false;
  return out;
}

Groupoid vertical_box_groupoid(const DoubleGroupoid& t) {
  Groupoid g;
  g.n_objects = t.horiz.n_arrows();
  g.source = t.top;
  g.target = t.bottom;
  g.identity = t.vid;
  g.compose = t.vcomp;
  g.derive_inverses();
  return g;
}

Groupoid horizontal_box_groupoid(const DoubleGroupoid& t) {
  Groupoid g;
  g.n_objects = t.vert.n_arrows();
  g.source = t.left;
  g.target = t.right;
  g.identity = t.hid;
  g.compose = t.hcomp;
  g.derive_inverses();
  return g;
}

DoubleGroupoid transpose(const DoubleGroupoid& t) {
  DoubleGroupoid u;
  u.n_points = t.n_points;
  u.horiz = t.vert;
  u.vert = t.horiz;
  u.top = t.left;
  u.bottom = t.right;
  u.left = t.top;
  u.right = t.bottom;
  u.vcomp = t.hcomp;
  u.hcomp = t.vcomp;
  u.vid = t.hid;
  u.hid = t.vid;
  return u;
}

namespace {

// index of the arrow P -> Q of a relation groupoid, or -1
std::vector<int> pair_index(const Groupoid& g) {
  const int n = g.n_objects;
  std::vector<int> idx(static_cast<size_t>(n) * n, -1);
  for (int f = 0; f < g.n_arrows(); ++f) {
    int& slot = idx[static_cast<size_t>(g.source[f]) * n + g.target[f]];
    if (slot >= 0) throw MathError("edge groupoid is not a relation", {slot, f});
    slot = f;
  }
  return idx;
}

}  // namespace

DoubleGroupoid from_double_relation(const DoubleRelation& rel) {
  const int n = static_cast<int>(rel.rel_h.size());
  if (n == 0 || static_cast<int>(rel.rel_v.size()) != n) throw StructuralError("double relation size mismatch");
  DoubleGroupoid t;
  t.n_points = n;
  t.horiz = relation_groupoid(rel.rel_h);
  t.vert = relation_groupoid(rel.rel_v);
  const auto hx = pair_index(t.horiz), vx = pair_index(t.vert);
  auto h = [&](int p, int q) { return hx[static_cast<size_t>(p) * n + q]; };
  auto v = [&](int p, int q) { return vx[static_cast<size_t>(p) * n + q]; };
  std::vector<std::array<int, 4>> quads;
  std::map<std::array<int, 4>, int> index;
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s)
          if (h(p, q) >= 0 && v(p, r) >= 0 && v(q, s) >= 0 && h(r, s) >= 0) {
            index[{p, q, r, s}] = static_cast<int>(quads.size());
            quads.push_back({p, q, r, s});
          }
  const int nb = static_cast<int>(quads.size());
  for (const auto& [p, q, r, s] : quads) {
    t.top.push_back(h(p, q));
    t.bottom.push_back(h(r, s));
    t.left.push_back(v(p, r));
    t.right.push_back(v(q, s));
  }
  t.vcomp.assign(static_cast<size_t>(nb) * nb, -1);
  t.hcomp.assign(static_cast<size_t>(nb) * nb, -1);
  for (int a = 0; a < nb; ++a)
    for (int b = 0; b < nb; ++b) {
      const auto& A = quads[a];
      const auto& B = quads[b];
      if (A[2] == B[0] && A[3] == B[1]) t.vcomp[static_cast<size_t>(a) * nb + b] = index.at({A[0], A[1], B[2], B[3]});
      if (A[1] == B[0] && A[3] == B[2]) t.hcomp[static_cast<size_t>(a) * nb + b] = index.at({A[0], B[1], A[2], B[3]});
    }
  for (int x = 0; x < t.horiz.n_arrows(); ++x) {
    const int p = t.horiz.source[x], q = t.horiz.target[x];
    t.vid.push_back(index.at({p, q, p, q}));
  }
  for (int g = 0; g < t.vert.n_arrows(); ++g) {
    const int p = t.vert.source[g], r = t.vert.target[g];
    t.hid.push_back(index.at({p, p, r, r}));
  }
  return t;
}

DoubleGroupoid build_Xrs(int r, int s) {
  if (r <= 0 || s <= 0) throw StructuralError("grid dimensions must be positive");
  DoubleRelation rel;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) {
      rel.rel_h.push_back(i);
      rel.rel_v.push_back(j);
    }
  return from_double_relation(rel);
}

namespace {

bool is_bijection(const std::vector<int>& m, int n) {
  if (static_cast<int>(m.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : m) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

bool is_double_isomorphism(const DoubleGroupoid& a, const DoubleGroupoid& b, const DoubleIsomorphism& iso) {
  if (a.n_points != b.n_points || a.n_boxes() != b.n_boxes()) return false;
  if (!is_isomorphism(a.horiz, b.horiz, iso.points, iso.horiz)) return false;
  if (!is_isomorphism(a.vert, b.vert, iso.points, iso.vert)) return false;
  if (!is_bijection(iso.boxes, a.n_boxes())) return false;
  const int n = a.n_boxes();
  for (int x = 0; x < n; ++x) {
    const int y = iso.boxes[x];
    if (b.top[y] != iso.horiz[a.top[x]] || b.bottom[y] != iso.horiz[a.bottom[x]] ||
        b.left[y] != iso.vert[a.left[x]] || b.right[y] != iso.vert[a.right[x]])
      return false;
  }
  for (int x = 0; x < n; ++x)
    for (int z = 0; z < n; ++z) {
      const int v = a.vc(x, z), h = a.hc(x, z);
      if (v >= 0 && b.vc(iso.boxes[x], iso.boxes[z]) != iso.boxes[v]) return false;
      if (h >= 0 && b.hc(iso.boxes[x], iso.boxes[z]) != iso.boxes[h]) return false;
    }
  for (int e = 0; e < a.horiz.n_arrows(); ++e)
    if (b.vid[iso.horiz[e]] != iso.boxes[a.vid[e]]) return false;
  for (int e = 0; e < a.vert.n_arrows(); ++e)
    if (b.hid[iso.vert[e]] != iso.boxes[a.hid[e]]) return false;
  return true;
}

RelationClass classify_vacant_relation(const DoubleGroupoid& t) {
  check_structure(t);
  const auto verdict = is_vacant(t);
  if (!verdict.vacant) {
    const auto& w = verdict.witnesses.front();
    throw MathError("double relation is not vacant: a point has distinct horizontal and vertical neighbours",
                    {w.edge_h, w.edge_v, w.fillers});
  }
  pair_index(t.horiz);
  pair_index(t.vert);
  {
    std::map<std::array<int, 4>, int> frames;
    for (int a = 0; a < t.n_boxes(); ++a) {
      auto [it, fresh] = frames.insert({{t.top[a], t.bottom[a], t.left[a], t.right[a]}, a});
      if (!fresh) throw MathError("boxes are not determined by their frames", {it->second, a});
    }
  }
  const auto diag = diagonal_components(t);
  for (int p = 0; p < t.n_points; ++p)
    if (diag[p] != 0) throw MathError("double relation is not connected", {0, p});

  const auto hl = component_labels(t.horiz), vl = component_labels(t.vert);
  std::vector<int> h_class(t.n_points, -1), v_class(t.n_points, -1);
  int r = 0, s = 0;
  std::vector<int> h_rank(t.n_points, -1), v_rank(t.n_points, -1);
  for (int p = 0; p < t.n_points; ++p) {
    if (hl[p] == p) h_rank[p] = r++;
    if (vl[p] == p) v_rank[p] = s++;
  }
  RelationClass out;
  out.r = r;
  out.s = s;
  // phi_i sends the horizontal class X_i into the vertical classes; anchored at
  // a_i = min X_i, it is the bijection P -> class of P.
  out.iso.points.assign(t.n_points, -1);
  for (int p = 0; p < t.n_points; ++p) {
    const int i = h_rank[hl[p]];
    const int phi = v_rank[vl[p]];
    out.iso.points[p] = i * s + phi;
  }
  if (!is_bijection(out.iso.points, r * s)) throw MathError("class map is not a bijection onto the grid");
  const DoubleGroupoid model = build_Xrs(r, s);
  const int n = t.n_points;
  const auto mh = pair_index(model.horiz), mv = pair_index(model.vert);
  for (int f = 0; f < t.horiz.n_arrows(); ++f)
    out.iso.horiz.push_back(mh[static_cast<size_t>(out.iso.points[t.horiz.source[f]]) * n +
                               out.iso.points[t.horiz.target[f]]]);
  for (int f = 0; f < t.vert.n_arrows(); ++f)
    out.iso.vert.push_back(mv[static_cast<size_t>(out.iso.points[t.vert.source[f]]) * n +
                              out.iso.points[t.vert.target[f]]]);
  for (int e : out.iso.horiz)
    if (e < 0) throw MathError("horizontal edge has no image in the grid");
  for (int e : out.iso.vert)
    if (e < 0) throw MathError("vertical edge has no image in the grid");
  std::map<std::array<int, 4>, int> model_frames;
  for (int a = 0; a < model.n_boxes(); ++a)
    model_frames[{model.top[a], model.bottom[a], model.left[a], model.right[a]}] = a;
  for (int a = 0; a < t.n_boxes(); ++a) {
    auto it = model_frames.find({out.iso.horiz[t.top[a]], out.iso.horiz[t.bottom[a]], out.iso.vert[t.left[a]],
                                 out.iso.vert[t.right[a]]});
    if (it == model_frames.end()) throw MathError("box has no image in the grid", {a});
    out.iso.boxes.push_back(it->second);
  }
  out.verified = is_double_isomorphism(t, model, out.iso);
  return out;
}

DoubleGroupoid disjoint_union(const DoubleGroupoid& t1, const DoubleGroupoid& t2) {
  check_structure(t1);
  check_structure(t2);
  DoubleGroupoid t;
  t.n_points = t1.n_points + t2.n_points;
  t.horiz = disjoint_union(t1.horiz, t2.horiz);
  t.vert = disjoint_union(t1.vert, t2.vert);
  const int n1 = t1.n_boxes(), n2 = t2.n_boxes(), n = n1 + n2;
  const int mh1 = t1.horiz.n_arrows(), mv1 = t1.vert.n_arrows();
  t.top = t1.top;
  t.bottom = t1.bottom;
  t.left = t1.left;
  t.right = t1.right;
  for (int a = 0; a < n2; ++a) {
    t.top.push_back(t2.top[a] + mh1);
    t.bottom.push_back(t2.bottom[a] + mh1);
    t.left.push_back(t2.left[a] + mv1);
    t.right.push_back(t2.right[a] + mv1);
  }
  t.vcomp.assign(static_cast<size_t>(n) * n, -1);
  t.hcomp.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n1; ++a)
    for (int b = 0; b < n1; ++b) {
      t.vcomp[static_cast<size_t>(a) * n + b] = t1.vc(a, b);
      t.hcomp[static_cast<size_t>(a) * n + b] = t1.hc(a, b);
    }
  for (int a = 0; a < n2; ++a)
    for (int b = 0; b < n2; ++b) {
      const int v = t2.vc(a, b), h = t2.hc(a, b);
      t.vcomp[static_cast<size_t>(a + n1) * n + b + n1] = v < 0 ? -1 : v + n1;
      t.hcomp[static_cast<size_t>(a + n1) * n + b + n1] = h < 0 ? -1 : h + n1;
    }
  t.vid = t1.vid;
  for (int b : t2.vid) t.vid.push_back(b + n1);
  t.hid = t1.hid;
  for (int b : t2.hid) t.hid.push_back(b + n1);
  return t;
}

DoubleGroupoid direct_product(const DoubleGroupoid& t1, const DoubleGroupoid& t2) {
  check_structure(t1);
  check_structure(t2);
  DoubleGroupoid t;
  t.n_points = t1.n_points * t2.n_points;
  t.horiz = direct_product(t1.horiz, t2.horiz);
  t.vert = direct_product(t1.vert, t2.vert);
  const int n2 = t2.n_boxes(), n = t1.n_boxes() * n2;
  const int mh2 = t2.horiz.n_arrows(), mv2 = t2.vert.n_arrows();
  t.top.resize(n);
  t.bottom.resize(n);
  t.left.resize(n);
  t.right.resize(n);
  for (int a = 0; a < t1.n_boxes(); ++a)
    for (int b = 0; b < n2; ++b) {
      const int k = a * n2 + b;
      t.top[k] = t1.top[a] * mh2 + t2.top[b];
      t.bottom[k] = t1.bottom[a] * mh2 + t2.bottom[b];
      t.left[k] = t1.left[a] * mv2 + t2.left[b];
      t.right[k] = t1.right[a] * mv2 + t2.right[b];
    }
  t.vcomp.assign(static_cast<size_t>(n) * n, -1);
  t.hcomp.assign(static_cast<size_t>(n) * n, -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      const int v1 = t1.vc(x / n2, y / n2), v2 = t2.vc(x % n2, y % n2);
      if (v1 >= 0 && v2 >= 0) t.vcomp[static_cast<size_t>(x) * n + y] = v1 * n2 + v2;
      const int h1 = t1.hc(x / n2, y / n2), h2 = t2.hc(x % n2, y % n2);
      if (h1 >= 0 && h2 >= 0) t.hcomp[static_cast<size_t>(x) * n + y] = h1 * n2 + h2;
    }
  t.vid.resize(t.horiz.n_arrows());
  for (int e = 0; e < t.horiz.n_arrows(); ++e) t.vid[e] = t1.vid[e / mh2] * n2 + t2.vid[e % mh2];
  t.hid.resize(t.vert.n_arrows());
  for (int e = 0; e < t.vert.n_arrows(); ++e) t.hid[e] = t1.hid[e / mv2] * n2 + t2.hid[e % mv2];
  return t;
}

std::vector<int> diagonal_components(const DoubleGroupoid& t) {
  check_structure(t);
  const int n = t.n_points;
  std::vector<char> hh(static_cast<size_t>(n) * n, 0), vv(static_cast<size_t>(n) * n, 0),
      dd(static_cast<size_t>(n) * n, 0);
  for (int f = 0; f < t.horiz.n_arrows(); ++f) hh[static_cast<size_t>(t.horiz.source[f]) * n + t.horiz.target[f]] = 1;
  for (int f = 0; f < t.vert.n_arrows(); ++f) vv[static_cast<size_t>(t.vert.source[f]) * n + t.vert.target[f]] = 1;
  for (int p = 0; p < n; ++p)
    for (int r = 0; r < n; ++r) {
      if (!hh[static_cast<size_t>(p) * n + r]) continue;
      for (int q = 0; q < n; ++q)
        if (vv[static_cast<size_t>(r) * n + q]) dd[static_cast<size_t>(p) * n + q] = 1;
    }
  auto d = [&](int p, int q) { return dd[static_cast<size_t>(p) * n + q] != 0; };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      if (d(p, q) && !d(q, p)) throw MathError("diagonal relation is not symmetric", {p, q});
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      if (!d(p, q)) continue;
      for (int r = 0; r < n; ++r)
        if (d(q, r) && !d(p, r)) throw MathError("diagonal relation is not transitive", {p, q, r});
    }
  std::vector<int> labels(n);
  for (int p = 0; p < n; ++p) {
    int q = 0;
    while (!d(p, q)) ++q;
    labels[p] = q;
  }
  return labels;
}

std::vector<std::array<int, 3>> antipode_factorizations(const DoubleGroupoid& t, const BoxInverseTable& inv, int a) {
  const int n = t.n_boxes();
  auto by_left = bucket(t.left, t.vert.n_arrows());
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < n; ++x) {
    const int xi = inv.full_inv[x];
    for (int y : by_left[t.right[x]]) {
      if (!t.stackable(xi, y)) continue;
      const int xy = t.hc(x, y), upper = t.vc(xi, y);
      for (int z : by_left[t.right[y]]) {
        const int zi = inv.full_inv[z];
        if (!t.stackable(y, zi)) continue;
        if (t.hc(xy, z) == a && t.vc(upper, zi) == inv.full_inv[a]) out.push_back({x, y, z});
      }
    }
  }
  return out;
}

}  // namespace dblgrp
