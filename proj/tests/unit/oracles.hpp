#pragma once
// Independent reference computations used as test oracles. Nothing here calls
// the library routine it is meant to check.

#include <string>
#include <vector>

#include "dblgrp/corpus.hpp"
#include "dblgrp/double_groupoid.hpp"
#include "dblgrp/groupoid.hpp"

namespace oracle {

// Gaussian elimination mod p on a dense row list.
long dense_rank(std::vector<std::vector<long>> rows, long p);

// Cohomology of the unnormalized bar complex (identities allowed in tuples),
// by dense row reduction. Agrees with the normalized complex in every degree.
long bar_cohomology_dim(const dblgrp::Groupoid& g, int n, long p);

int fillers(const dblgrp::DoubleGroupoid& t, int top, int right);

// Boxes X, Y, Z over B^3 with X|Y|Z = A (horizontally) and X^-1 / Y / Z^-1 = A^-1
// (vertically), inverses located by search.
int antipode_factorization_count(const dblgrp::DoubleGroupoid& t, int a);

// Searches all bijections of the arrow sets of two one-object groupoids.
bool groups_isomorphic(const dblgrp::Groupoid& a, const dblgrp::Groupoid& b);

dblgrp::CorpusInstance instance(const std::string& name);
dblgrp::DoubleGroupoid double_of(const std::string& name);

}  // namespace oracle
