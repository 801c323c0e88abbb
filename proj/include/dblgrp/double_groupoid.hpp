#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "dblgrp/errors.hpp"
#include "dblgrp/groupoid.hpp"

namespace dblgrp {

// Boxes are dense indices with cached frames. The horizontal groupoid carries
// top/bottom edges (source = left point, target = right point); the vertical
// groupoid carries left/right edges (source = top point, target = bottom point).
//
//   vcomp(A, B): A stacked over B, defined iff bottom(A) == top(B)
//   hcomp(A, B): A beside B,        defined iff right(A) == left(B)
//   vid(x): identity for vcomp with top = bottom = x
//   hid(g): identity for hcomp with left = right = g
struct DoubleGroupoid {
  int n_points = 0;
  Groupoid horiz;
  Groupoid vert;
  std::vector<int> top, bottom, left, right;
  std::vector<int> vcomp, hcomp;  // n_boxes^2, -1 when undefined
  std::vector<int> vid;           // per horizontal edge
  std::vector<int> hid;           // per vertical edge

  int n_boxes() const { return static_cast<int>(top.size()); }
  int vc(int a, int b) const { return vcomp[static_cast<size_t>(a) * top.size() + b]; }
  int hc(int a, int b) const { return hcomp[static_cast<size_t>(a) * top.size() + b]; }
  bool stackable(int a, int b) const { return bottom[a] == top[b]; }
  bool adjacent(int a, int b) const { return right[a] == left[b]; }
  bool is_vid(int a) const { return vid[top[a]] == a; }
  bool is_hid(int a) const { return hid[left[a]] == a; }
  int theta(int p) const { return vid[horiz.identity[p]]; }

  bool operator==(const DoubleGroupoid&) const = default;
};

// Structural (index) checks only; throws StructuralError.
void check_structure(const DoubleGroupoid& t);

// Keys: "edge-groupoids", "frame-corners", "composite-frames", "interchange",
// "identity-frames", "point-identity", "identity-functoriality",
// "vertical-groupoid", "horizontal-groupoid". Witnesses are box tuples, except
// edge pairs for identity-functoriality and a point for point-identity.
Report validate_double_groupoid(const DoubleGroupoid& t);

struct BoxInverseTable {
  std::vector<int> h_inv;
  std::vector<int> v_inv;
  std::vector<int> full_inv;
};

// Throws MathError naming a box without a horizontal or vertical inverse.
BoxInverseTable compute_inverses(const DoubleGroupoid& t);

// Corner kinds: "top-right" (the defining one), "left-bottom", "top-left", "right-bottom".
struct CornerWitness {
  std::string corner;
  int edge_h = -1;    // the horizontal edge of the corner
  int edge_v = -1;    // the vertical edge of the corner
  int fillers = 0;
};

struct VacancyVerdict {
  bool vacant = true;
  std::map<std::string, bool> by_corner;
  std::vector<CornerWitness> witnesses;  // first offending corner per kind
  bool consistent = true;                // all four kinds agree
};

VacancyVerdict is_vacant(const DoubleGroupoid& t);
// Number of boxes with the given top and right edges.
int count_fillers(const DoubleGroupoid& t, int top_edge, int right_edge);

// Boxes as arrows: over the horizontal edges (top -> bottom, composed by vcomp)
// and over the vertical edges (left -> right, composed by hcomp).
Groupoid vertical_box_groupoid(const DoubleGroupoid& t);
Groupoid horizontal_box_groupoid(const DoubleGroupoid& t);

// Swaps the two edge groupoids, (top,bottom) with (left,right), vcomp with hcomp.
DoubleGroupoid transpose(const DoubleGroupoid& t);

// Equivalence relations on a point set, given as class labels.
struct DoubleRelation {
  std::vector<int> rel_h;
  std::vector<int> rel_v;
};

// Boxes are quadruples (P, Q, R, S): top (P,Q), bottom (R,S), left (P,R), right (Q,S),
// listed lexicographically. Edges are pairs of related points in the order of
// relation_groupoid.
DoubleGroupoid from_double_relation(const DoubleRelation& rel);

// Grid of r*s points (i, j) -> i*s + j; horizontal: same i, vertical: same j.
DoubleGroupoid build_Xrs(int r, int s);

struct DoubleIsomorphism {
  std::vector<int> points, horiz, vert, boxes;
};

bool is_double_isomorphism(const DoubleGroupoid& a, const DoubleGroupoid& b, const DoubleIsomorphism& iso);

struct RelationClass {
  int r = 0;
  int s = 0;
  DoubleIsomorphism iso;  // from the input to build_Xrs(r, s)
  bool verified = false;
};

// Input must be vacant, connected and thin (boxes determined by their frames).
RelationClass classify_vacant_relation(const DoubleGroupoid& t);

DoubleGroupoid disjoint_union(const DoubleGroupoid& t1, const DoubleGroupoid& t2);
// Points p1*n2+p2, edges as direct_product of groupoids, boxes b1*nb2+b2.
DoubleGroupoid direct_product(const DoubleGroupoid& t1, const DoubleGroupoid& t2);

// Labels of the classes of P ~ Q iff P ~h R ~v Q for some R. Throws MathError
// with the failing pair or triple if that is not an equivalence relation.
std::vector<int> diagonal_components(const DoubleGroupoid& t);

// All (X, Y, Z) with X^-1 over Y over Z^-1 stackable, X|Y|Z adjacent,
// XYZ = A and the vertical composite of (X^-1, Y, Z^-1) equal to A^-1.
std::vector<std::array<int, 3>> antipode_factorizations(const DoubleGroupoid& t, const BoxInverseTable& inv, int a);

}  // namespace dblgrp
