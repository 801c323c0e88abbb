#include "dblgrp/matched_pair.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dblgrp {

Report validate_matched_pair(const MatchedPair& mp) {
  check_structure(mp.vert);
  check_structure(mp.horiz);
  const Groupoid& V = mp.vert;
  const Groupoid& H = mp.horiz;
  if (V.n_objects != H.n_objects) throw StructuralError("matched pair groupoids on different bases");
  const int mh = H.n_arrows(), mv = V.n_arrows();
  if (mp.act_left.size() != static_cast<size_t>(mh) * mv || mp.act_right.size() != static_cast<size_t>(mh) * mv)
    throw StructuralError("action table size mismatch");
  for (int x = 0; x < mh; ++x)
    for (int g = 0; g < mv; ++g) {
      const int a = mp.lt(x, g), b = mp.rt(x, g);
      if (mp.on_domain(x, g)) {
        if (a < 0 || a >= mv || b < 0 || b >= mh)
          throw StructuralError("action missing or out of range at (" + std::to_string(x) + "," + std::to_string(g) + ")");
      } else if (a != -1 || b != -1) {
        throw StructuralError("action defined off its domain at (" + std::to_string(x) + "," + std::to_string(g) + ")");
      }
    }
  Report rep;
  if (!validate_groupoid(V).ok()) rep.add("vertical-groupoid", {});
  if (!validate_groupoid(H).ok()) rep.add("horizontal-groupoid", {});
  if (!rep.ok()) return rep;

  for (int x = 0; x < mh; ++x)
    for (int g = 0; g < mv; ++g) {
      if (!mp.on_domain(x, g)) continue;
      const int a = mp.lt(x, g), b = mp.rt(x, g);
      if (V.source[a] != H.source[x]) rep.add("left-action-endpoint", {x, g});
      if (H.target[b] != V.target[g]) rep.add("right-action-endpoint", {x, g});
      if (V.target[a] != H.source[b]) rep.add("corner", {x, g});
    }
  if (!rep.ok()) return rep;

  for (int x = 0; x < mh; ++x)
    for (int y = 0; y < mh; ++y) {
      if (!H.composable(x, y)) continue;
      const int xy = H.comp(x, y);
      for (int g = 0; g < mv; ++g) {
        if (!mp.on_domain(y, g)) continue;
        if (mp.lt(x, mp.lt(y, g)) != mp.lt(xy, g)) rep.add("left-action-composition", {x, y, g});
        const int rhs = H.comp(mp.rt(x, mp.lt(y, g)), mp.rt(y, g));
        if (mp.rt(xy, g) != rhs) rep.add("right-action-product", {x, y, g});
      }
    }
  for (int g = 0; g < mv; ++g)
    if (mp.lt(H.identity[V.source[g]], g) != g) rep.add("left-action-unit", {g});
  for (int x = 0; x < mh; ++x)
    for (int f = 0; f < mv; ++f) {
      if (!mp.on_domain(x, f)) continue;
      for (int g = 0; g < mv; ++g) {
        if (!V.composable(f, g)) continue;
        const int fg = V.comp(f, g);
        if (mp.rt(mp.rt(x, f), g) != mp.rt(x, fg)) rep.add("right-action-composition", {x, f, g});
        const int rhs = V.comp(mp.lt(x, f), mp.lt(mp.rt(x, f), g));
        if (mp.lt(x, fg) != rhs) rep.add("left-action-product", {x, f, g});
      }
    }
  for (int x = 0; x < mh; ++x)
    if (mp.rt(x, V.identity[H.target[x]]) != x) rep.add("right-action-unit", {x});
  if (!rep.ok()) return rep;

  for (int x = 0; x < mh; ++x)
    if (mp.lt(x, V.identity[H.target[x]]) != V.identity[H.source[x]]) rep.add("left-action-identity", {x});
  for (int g = 0; g < mv; ++g)
    if (mp.rt(H.identity[V.source[g]], g) != H.identity[V.target[g]]) rep.add("right-action-identity", {g});
  return rep;
}

std::vector<std::pair<int, int>> matched_pair_boxes(const MatchedPair& mp) {
  std::vector<std::pair<int, int>> boxes;
  for (int x = 0; x < mp.horiz.n_arrows(); ++x)
    for (int g = 0; g < mp.vert.n_arrows(); ++g)
      if (mp.on_domain(x, g)) boxes.push_back({x, g});
  return boxes;
}

DoubleGroupoid to_vacant_double(const MatchedPair& mp) {
  const Groupoid& V = mp.vert;
  const Groupoid& H = mp.horiz;
  const int mv = V.n_arrows();
  const auto boxes = matched_pair_boxes(mp);
  const int n = static_cast<int>(boxes.size());
  std::vector<int> index(static_cast<size_t>(H.n_arrows()) * mv, -1);
  for (int i = 0; i < n; ++i) index[static_cast<size_t>(boxes[i].first) * mv + boxes[i].second] = i;
  auto at = [&](int x, int g) {
    const int i = index[static_cast<size_t>(x) * mv + g];
    if (i < 0) throw MathError("matched pair composite leaves the box set", {x, g});
    return i;
  };
  DoubleGroupoid t;
  t.n_points = V.n_objects;
  t.horiz = H;
  t.vert = V;
  for (const auto& [x, g] : boxes) {
    t.top.push_back(x);
    t.right.push_back(g);
    t.left.push_back(mp.lt(x, g));
    t.bottom.push_back(mp.rt(x, g));
  }
  t.vcomp.assign(static_cast<size_t>(n) * n, -1);
  t.hcomp.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.bottom[a] == t.top[b]) t.vcomp[static_cast<size_t>(a) * n + b] = at(boxes[a].first, V.comp(boxes[a].second, boxes[b].second));
      if (t.right[a] == t.left[b]) t.hcomp[static_cast<size_t>(a) * n + b] = at(H.comp(boxes[a].first, boxes[b].first), boxes[b].second);
    }
  for (int x = 0; x < H.n_arrows(); ++x) t.vid.push_back(at(x, V.identity[H.target[x]]));
  for (int g = 0; g < mv; ++g) t.hid.push_back(at(H.identity[V.source[g]], g));
  return t;
}

MatchedPair from_vacant_double(const DoubleGroupoid& t) {
  const auto verdict = is_vacant(t);
  if (!verdict.vacant) {
    const auto& w = verdict.witnesses.front();
    throw MathError("double groupoid is not vacant", {w.edge_h, w.edge_v, w.fillers});
  }
  MatchedPair mp;
  mp.vert = t.vert;
  mp.horiz = t.horiz;
  const int mv = t.vert.n_arrows();
  mp.act_left.assign(static_cast<size_t>(t.horiz.n_arrows()) * mv, -1);
  mp.act_right.assign(static_cast<size_t>(t.horiz.n_arrows()) * mv, -1);
  for (int a = 0; a < t.n_boxes(); ++a) {
    const size_t k = static_cast<size_t>(t.top[a]) * mv + t.right[a];
    mp.act_left[k] = t.left[a];
    mp.act_right[k] = t.bottom[a];
  }
  return mp;
}

DoubleIsomorphism vacant_relabeling(const DoubleGroupoid& t) {
  const MatchedPair mp = from_vacant_double(t);
  const auto boxes = matched_pair_boxes(mp);
  std::map<std::pair<int, int>, int> index;
  for (int i = 0; i < static_cast<int>(boxes.size()); ++i) index[boxes[i]] = i;
  DoubleIsomorphism iso;
  iso.points.resize(t.n_points);
  std::iota(iso.points.begin(), iso.points.end(), 0);
  iso.horiz.resize(t.horiz.n_arrows());
  std::iota(iso.horiz.begin(), iso.horiz.end(), 0);
  iso.vert.resize(t.vert.n_arrows());
  std::iota(iso.vert.begin(), iso.vert.end(), 0);
  for (int a = 0; a < t.n_boxes(); ++a) iso.boxes.push_back(index.at({t.top[a], t.right[a]}));
  return iso;
}

DiagonalGroupoid diagonal_groupoid(const MatchedPair& mp) {
  const Groupoid& V = mp.vert;
  const Groupoid& H = mp.horiz;
  DiagonalGroupoid out;
  std::map<std::pair<int, int>, int> index;
  for (int f = 0; f < V.n_arrows(); ++f)
    for (int y = 0; y < H.n_arrows(); ++y)
      if (V.target[f] == H.source[y]) {
        index[{f, y}] = static_cast<int>(out.factors.size());
        out.factors.push_back({f, y});
      }
  Groupoid& d = out.diag;
  d.n_objects = V.n_objects;
  const int m = static_cast<int>(out.factors.size());
  for (const auto& [f, y] : out.factors) {
    d.source.push_back(V.source[f]);
    d.target.push_back(H.target[y]);
  }
  for (int p = 0; p < d.n_objects; ++p) d.identity.push_back(index.at({V.identity[p], H.identity[p]}));
  d.compose.assign(static_cast<size_t>(m) * m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      const auto [f, y] = out.factors[a];
      const auto [h, z] = out.factors[b];
      if (H.target[y] != V.source[h]) continue;
      const int f2 = V.comp(f, mp.lt(y, h));
      const int z2 = H.comp(mp.rt(y, h), z);
      d.compose[static_cast<size_t>(a) * m + b] = index.at({f2, z2});
    }
  d.derive_inverses();
  for (int f = 0; f < V.n_arrows(); ++f) out.embed_vert.push_back(index.at({f, H.identity[V.target[f]]}));
  for (int y = 0; y < H.n_arrows(); ++y) out.embed_horiz.push_back(index.at({V.identity[H.source[y]], y}));
  return out;
}

MatchedPair from_exact_factorization(const Groupoid& d, const std::vector<int>& v_arrows,
                                     const std::vector<int>& h_arrows) {
  check_structure(d);
  std::vector<int> objects(d.n_objects);
  std::iota(objects.begin(), objects.end(), 0);
  MatchedPair mp;
  mp.vert = restrict(d, objects, v_arrows);
  mp.horiz = restrict(d, objects, h_arrows);
  const int m = d.n_arrows();
  std::vector<int> count(m, 0), fac_v(m, -1), fac_h(m, -1);
  for (int f = 0; f < static_cast<int>(v_arrows.size()); ++f)
    for (int y = 0; y < static_cast<int>(h_arrows.size()); ++y) {
      const int c = d.comp(v_arrows[f], h_arrows[y]);
      if (c < 0) continue;
      ++count[c];
      fac_v[c] = f;
      fac_h[c] = y;
    }
  for (int a = 0; a < m; ++a) {
    if (count[a] == 0) throw MathError("factorization is not total", {a});
    if (count[a] > 1) throw MathError("factorization is not unique", {a});
  }
  const int mh = mp.horiz.n_arrows(), mv = mp.vert.n_arrows();
  mp.act_left.assign(static_cast<size_t>(mh) * mv, -1);
  mp.act_right.assign(static_cast<size_t>(mh) * mv, -1);
  for (int x = 0; x < mh; ++x)
    for (int g = 0; g < mv; ++g) {
      if (!mp.on_domain(x, g)) continue;
      const int c = d.comp(h_arrows[x], v_arrows[g]);
      mp.act_left[static_cast<size_t>(x) * mv + g] = fac_v[c];
      mp.act_right[static_cast<size_t>(x) * mv + g] = fac_h[c];
    }
  return mp;
}

std::vector<int> factorization_arrow_map(const Groupoid& d, const DiagonalGroupoid& dg,
                                         const std::vector<int>& v_arrows, const std::vector<int>& h_arrows) {
  std::vector<int> out;
  for (const auto& [f, y] : dg.factors) out.push_back(d.comp(v_arrows[f], h_arrows[y]));
  return out;
}

FactorizationVerdict verify_connected_factorization(const ConnectedFactorizationData& data) {
  const Groupoid& D = data.group;
  const int n = data.n_points;
  validate_wide_data(data.horiz, D, n);
  validate_wide_data(data.vert, D, n);
  const int m = D.n_arrows();
  auto mul = [&](int a, int b) { return D.comp(a, b); };
  FactorizationVerdict out;
  bool decided = false;
  for (int p = 0; p < n && !decided; ++p)
    for (int q = 0; q < n && !decided; ++q) {
      std::vector<int> hits(m, 0);
      for (int r = 0; r < n; ++r) {
        if (data.vert.relation[p] != data.vert.relation[r] || data.horiz.relation[r] != data.horiz.relation[q]) continue;
        const int rep = mul(data.vert.coset_reps.at({p, r}), data.horiz.coset_reps.at({r, q}));
        std::set<int> coset;
        for (int v : data.vert.vertex_groups[p])
          for (int h : data.horiz.vertex_groups[q]) coset.insert(mul(mul(v, rep), h));
        for (int c : coset) ++hits[c];
      }
      for (int c = 0; c < m; ++c)
        if (hits[c] != 1) {
          out.kind = FactorizationVerdict::FailsCosets;
          out.witness = {p, q};
          decided = true;
          break;
        }
    }
  for (int p = 0; p < n && !decided; ++p) {
    const auto& vp = data.vert.vertex_groups[p];
    const auto& hp = data.horiz.vertex_groups[p];
    for (int v : vp)
      if (v != D.identity[0] && std::binary_search(hp.begin(), hp.end(), v)) {
        out.kind = FactorizationVerdict::FailsIntersection;
        out.witness = {p};
        decided = true;
        break;
      }
  }
  const EmbeddedSubgroupoid hs = wide_subgroupoid_from_data(data.horiz, D, n);
  const EmbeddedSubgroupoid vs = wide_subgroupoid_from_data(data.vert, D, n);
  bool exact = true;
  try {
    from_exact_factorization(ambient_groupoid(D, n), vs.embedding, hs.embedding);
  } catch (const MathError&) {
    exact = false;
  }
  out.cross_checked = exact == (out.kind == FactorizationVerdict::Exact);
  return out;
}

}  // namespace dblgrp
