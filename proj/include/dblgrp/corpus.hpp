#pragma once

#include <string>
#include <variant>
#include <vector>

#include "dblgrp/double_groupoid.hpp"
#include "dblgrp/groupoid.hpp"
#include "dblgrp/matched_pair.hpp"

namespace dblgrp {

// Permutations of {0,1,2} in lexicographic order; fg applies f first.
Groupoid symmetric_group_s3();
// Exact factorization of S3: vertical edges {e, (0 1)}, horizontal edges the 3-cycles.
MatchedPair s3_matched_pair();
ConnectedFactorizationData s3_factorization_data();
// Z/4 with both subgroups equal to {0, 2}: the products cover only half the group.
ConnectedFactorizationData z4_overlap_data();
// Squares t r = l b over Z/2 on one point; every corner has two fillers.
DoubleGroupoid commuting_squares_z2();

struct CorpusInstance {
  std::string name;
  std::variant<DoubleGroupoid, MatchedPair> object;
  bool vacant = true;
};

// Fixed order. Matched pairs are stored as such; double_groupoid_of converts.
std::vector<CorpusInstance> corpus();
DoubleGroupoid double_groupoid_of(const CorpusInstance& c);

}  // namespace dblgrp
