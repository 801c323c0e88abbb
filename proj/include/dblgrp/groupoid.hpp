#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dblgrp/errors.hpp"

namespace dblgrp {

// Finite groupoid as explicit tables. Composition is juxtaposition:
// comp(f, g) is "f then g" and is defined iff target(f) == source(g).
struct Groupoid {
  int n_objects = 0;
  std::vector<int> source;
  std::vector<int> target;
  std::vector<int> identity;  // per object
  std::vector<int> compose;   // n_arrows * n_arrows, -1 when not composable
  std::vector<int> inverse;   // filled by derive_inverses(), -1 if none

  int n_arrows() const { return static_cast<int>(source.size()); }
  int comp(int f, int g) const { return compose[static_cast<size_t>(f) * source.size() + g]; }
  bool composable(int f, int g) const { return target[f] == source[g]; }
  bool is_identity(int f) const { return identity[source[f]] == f; }

  void derive_inverses();
  bool operator==(const Groupoid&) const = default;
};

// Throws StructuralError if any table is out of range or has the wrong size,
// or if compose is defined exactly off the composable pairs.
void check_structure(const Groupoid& g);

// Category and groupoid axioms. Witnesses: identity (object), associativity
// (f,g,h), unit (f), inverse (f), composite endpoints (f,g).
Report validate_groupoid(const Groupoid& g);

Groupoid coarse_groupoid(int n);
// Groupoid of an equivalence relation given by class labels.
Groupoid relation_groupoid(const std::vector<int>& labels);
// Rejects non-groups with MathError; the witness names the failing element(s).
Groupoid one_object_group(const std::vector<std::vector<int>>& table);
Groupoid cyclic_group(int n);

// Union: objects and arrows of g2 are shifted past those of g1.
Groupoid disjoint_union(const Groupoid& g1, const Groupoid& g2);
// Product: object (p1,p2) -> p1 * n2 + p2, arrow (a1,a2) -> a1 * m2 + a2.
Groupoid direct_product(const Groupoid& g1, const Groupoid& g2);

// Restriction to a set of arrows closed under composition and inverses that
// contains the identities of `objects`. arrows[i] becomes arrow i, objects[j] object j.
Groupoid restrict(const Groupoid& g, const std::vector<int>& objects, const std::vector<int>& arrows);

// Class label per object: the smallest object reachable by an arrow.
std::vector<int> component_labels(const Groupoid& g);
bool is_connected(const Groupoid& g);

struct Component {
  std::vector<int> objects;      // sorted
  int base = 0;                  // smallest object
  std::vector<int> loops;        // arrows base -> base, sorted
  std::vector<int> transversal;  // per entry of objects: smallest arrow base -> object
  Groupoid model;                // vertex group x coarse(objects.size())
  std::vector<int> arrow_map;    // component arrow (global index) -> model arrow, -1 outside
  bool witness_verified = false;
};

// Per component, the isomorphism to vertex group x coarse groupoid given by
// a |-> (tau_y . a . tau_z^-1, (y, z)) for a : y -> z, checked arrow by arrow.
std::vector<Component> connected_decomposition(const Groupoid& g);

bool is_isomorphism(const Groupoid& a, const Groupoid& b, const std::vector<int>& object_map,
                    const std::vector<int>& arrow_map);
// Backtracking search; intended for groupoids with a few dozen arrows.
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_isomorphism(const Groupoid& a,
                                                                              const Groupoid& b);

// Wide subgroupoids of D x coarse(n), D a finite group (one-object groupoid).
// Ambient arrow (d, (P,Q)) has index d * n^2 + P * n + Q. Base point is object 0
// and tau_P = (transversal[P], (0, P)).
struct WideSubgroupoidData {
  std::vector<int> relation;                     // class label per object
  std::vector<std::vector<int>> vertex_groups;   // H_P, sorted
  std::map<std::pair<int, int>, int> coset_reps; // d_PQ for related P, Q
  std::vector<int> transversal;                  // empty means all identity
};

struct EmbeddedSubgroupoid {
  Groupoid sub;
  std::vector<int> embedding;  // sub arrow -> ambient arrow, ascending
};

Groupoid ambient_groupoid(const Groupoid& group, int n_objects);
int ambient_arrow(const Groupoid& group, int n_objects, int d, int p, int q);

// Throws MathError naming the failing pair or triple of objects.
void validate_wide_data(const WideSubgroupoidData& data, const Groupoid& group, int n_objects);
EmbeddedSubgroupoid wide_subgroupoid_from_data(const WideSubgroupoidData& data, const Groupoid& group,
                                               int n_objects);
WideSubgroupoidData data_from_wide_subgroupoid(const std::vector<int>& ambient_arrows, const Groupoid& group,
                                               int n_objects, std::vector<int> transversal = {});

bool same_double_coset(const Groupoid& group, const std::vector<int>& left, const std::vector<int>& right,
                       int d1, int d2);

}  // namespace dblgrp
