#pragma once

#include <utility>
#include <vector>

#include "dblgrp/double_groupoid.hpp"
#include "dblgrp/groupoid.hpp"

namespace dblgrp {

// vert: edges g with t(g) = source, b(g) = target.
// horiz: edges x with l(x) = source, r(x) = target.
// Both actions are tables over (x, g) with r(x) = t(g); -1 elsewhere.
//   act_left(x, g)  = x |> g, a vertical edge from l(x)
//   act_right(x, g) = x <| g, a horizontal edge into b(g)
struct MatchedPair {
  Groupoid vert;
  Groupoid horiz;
  std::vector<int> act_left;   // |horiz| * |vert|
  std::vector<int> act_right;  // |horiz| * |vert|

  int lt(int x, int g) const { return act_left[static_cast<size_t>(x) * vert.n_arrows() + g]; }
  int rt(int x, int g) const { return act_right[static_cast<size_t>(x) * vert.n_arrows() + g]; }
  bool on_domain(int x, int g) const { return horiz.target[x] == vert.source[g]; }

  bool operator==(const MatchedPair&) const = default;
};

// Keys: "left-action-endpoint" t(x|>g) = l(x), "right-action-endpoint" r(x<|g) = b(g),
// "corner" b(x|>g) = l(x<|g), "left-action-composition", "left-action-unit",
// "right-action-composition", "right-action-unit", "left-action-product"
// x|>fg = (x|>f)((x<|f)|>g), "right-action-product" xy<|g = (x<|(y|>g))(y<|g),
// and the derived "left-action-identity" x|>id = id, "right-action-identity" id<|g = id.
// Throws StructuralError when an action is defined off its domain or out of range.
Report validate_matched_pair(const MatchedPair& mp);

// Boxes are the pairs (x, g) with r(x) = t(g), in lexicographic order, with
// top x, right g, left x|>g, bottom x<|g.
DoubleGroupoid to_vacant_double(const MatchedPair& mp);
std::vector<std::pair<int, int>> matched_pair_boxes(const MatchedPair& mp);
// Reads the actions off the unique top-right fillers. Throws MathError with a
// corner witness (x, g, fillers) when T is not vacant.
MatchedPair from_vacant_double(const DoubleGroupoid& t);
// Box relabeling from T to to_vacant_double(from_vacant_double(T)); edges fixed.
DoubleIsomorphism vacant_relabeling(const DoubleGroupoid& t);

// Arrows are pairs (f, y) with b(f) = l(y), lexicographic; source t(f), target r(y);
// (f, y)(h, z) = (f (y|>h), (y<|h) z).
struct DiagonalGroupoid {
  Groupoid diag;
  std::vector<std::pair<int, int>> factors;  // arrow -> (f, y)
  std::vector<int> embed_vert;               // f -> (f, id)
  std::vector<int> embed_horiz;              // y -> (id, y)
};

DiagonalGroupoid diagonal_groupoid(const MatchedPair& mp);

// V and H are given as lists of arrows of D; vertical edge i of the result is
// v_arrows[i], horizontal edge j is h_arrows[j]. Throws MathError with the
// offending arrow of D if some arrow does not factor exactly once as f y.
MatchedPair from_exact_factorization(const Groupoid& d, const std::vector<int>& v_arrows,
                                     const std::vector<int>& h_arrows);

// Arrow map diagonal_groupoid(mp) -> D, (f, y) -> v_arrows[f] h_arrows[y].
std::vector<int> factorization_arrow_map(const Groupoid& d, const DiagonalGroupoid& dg,
                                         const std::vector<int>& v_arrows, const std::vector<int>& h_arrows);

struct ConnectedFactorizationData {
  Groupoid group;  // one object
  int n_points = 1;
  WideSubgroupoidData horiz;  // relation ~H, groups H_P, representatives d_PQ
  WideSubgroupoidData vert;   // relation ~V, groups V_P, representatives e_PQ
};

struct FactorizationVerdict {
  enum Kind { Exact, FailsCosets, FailsIntersection } kind = Exact;
  std::vector<int> witness;   // (P, Q) for the coset partition, (P) for the intersection
  bool cross_checked = false;  // agrees with from_exact_factorization on the assembled subgroupoids
};

// Coset condition: for all P, Q the sets V_P e_PR d_RQ H_Q over R with
// P ~V R ~H Q partition D. Intersection condition: V_P and H_P meet in e.
FactorizationVerdict verify_connected_factorization(const ConnectedFactorizationData& data);

}  // namespace dblgrp
