#include "dblgrp/cohomology.hpp"

#include <numeric>
#include <stdexcept>

#include "dblgrp/errors.hpp"
#include "dblgrp/field.hpp"
#include "dblgrp/matched_pair.hpp"

namespace dblgrp {

namespace {

using Faces = std::vector<std::pair<Tuple, int>>;

int sign_of(int k) { return k % 2 == 0 ? 1 : -1; }

// All composable tuples of length n (identities allowed).
std::vector<Tuple> composable_tuples(const Groupoid& g, int n) {
  std::vector<Tuple> out;
  if (n == 0) {
    for (int p = 0; p < g.n_objects; ++p) out.push_back({p});
    return out;
  }
  Tuple cur;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back(cur);
      return;
    }
    for (int f = 0; f < g.n_arrows(); ++f) {
      if (!cur.empty() && !g.composable(cur.back(), f)) continue;
      cur.push_back(f);
      self(self);
      cur.pop_back();
    }
  };
  rec(rec);
  return out;
}

// Faces of a composable tuple of length n >= 1, as in the bar complex.
Faces nerve_faces(const Groupoid& g, const Tuple& x) {
  const int n = static_cast<int>(x.size());
  Faces out;
  if (n == 1) {
    out.push_back({{g.target[x[0]]}, 1});
    out.push_back({{g.source[x[0]]}, -1});
    return out;
  }
  out.push_back({Tuple(x.begin() + 1, x.end()), 1});
  for (int i = 0; i + 1 < n; ++i) {
    Tuple y;
    for (int k = 0; k < n; ++k) {
      if (k == i + 1) continue;
      y.push_back(k == i ? g.comp(x[i], x[i + 1]) : x[k]);
    }
    out.push_back({std::move(y), sign_of(i + 1)});
  }
  out.push_back({Tuple(x.begin(), x.end() - 1), sign_of(n)});
  return out;
}

std::map<Tuple, int> index_of(const std::vector<Tuple>& basis) {
  std::map<Tuple, int> idx;
  for (size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], static_cast<int>(i));
  return idx;
}

}  // namespace

std::vector<Tuple> nerve(const Groupoid& g, int n) {
  std::vector<Tuple> out;
  for (Tuple& x : composable_tuples(g, n)) {
    bool degenerate = false;
    if (n > 0)
      for (int f : x) degenerate = degenerate || g.is_identity(f);
    if (!degenerate) out.push_back(std::move(x));
  }
  return out;
}

IntMatrix differential_matrix(const Groupoid& g, int n) {
  const std::vector<Tuple> src = nerve(g, n), dst = nerve(g, n + 1);
  const std::map<Tuple, int> idx = index_of(src);
  IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(src.size()));
  for (size_t i = 0; i < dst.size(); ++i)
    for (const auto& [y, sg] : nerve_faces(g, dst[i])) {
      auto it = idx.find(y);
      if (it != idx.end()) m(static_cast<int>(i), it->second) += sg;
    }
  return m;
}

ComplexSpec groupoid_complex(const Groupoid& g, int top_degree) {
  ComplexSpec c;
  for (int n = 0; n <= top_degree; ++n) c.basis.push_back(nerve(g, n));
  for (int n = 0; n < top_degree; ++n) c.d.push_back(differential_matrix(g, n));
  return c;
}

CohomologyReport complex_cohomology(const std::vector<int>& dims, const std::vector<IntMatrix>& d, long p, int n_max) {
  if (static_cast<int>(d.size()) <= n_max) throw ResourceError("complex truncated below the requested degree");
  CohomologyReport rep;
  rep.p = p;
  std::vector<long> rank(n_max + 1);
  std::vector<std::vector<mpz_class>> factors(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (p > 0) {
      rank[n] = rank_mod_p(d[n], p);
    } else {
      factors[n] = invariant_factors(d[n]);
      rank[n] = static_cast<long>(factors[n].size());
    }
  }
  for (int n = 0; n <= n_max; ++n) {
    DegreeInvariants di;
    di.degree = n;
    di.free_rank = dims[n] - rank[n] - (n > 0 ? rank[n - 1] : 0);
    if (p == 0 && n > 0)
      for (const mpz_class& f : factors[n - 1])
        if (f > 1) di.torsion.push_back(f);
    rep.degrees.push_back(std::move(di));
  }
  return rep;
}

CohomologyReport groupoid_cohomology(const Groupoid& g, int n_max, long p, const CohomologyBudget& budget) {
  if (p != 0 && !is_prime(p)) throw StructuralError("coefficient characteristic is not prime");
  if (n_max + 1 > budget.max_degree) throw ResourceError("cohomology degree exceeds the configured bound");
  std::vector<int> dims;
  std::vector<IntMatrix> d;
  long total = 0;
  for (int n = 0; n <= n_max + 1; ++n) {
    total += static_cast<long>(nerve(g, n).size());
    if (total > budget.max_basis) throw ResourceError("nerve exceeds the basis budget");
  }
  const ComplexSpec c = groupoid_complex(g, n_max + 1);
  for (const auto& b : c.basis) dims.push_back(static_cast<int>(b.size()));
  return complex_cohomology(dims, c.d, p, n_max);
}

DoubleComplex::DoubleComplex(const DoubleGroupoid& t, Normalization mode, const CohomologyBudget& budget)
    : t_(t), mode_(mode), budget_(budget) {
  check_structure(t_);
}

DoubleComplex build_double_complex(const DoubleGroupoid& t, Normalization mode, const CohomologyBudget& budget) {
  return DoubleComplex(t, mode, budget);
}

bool DoubleComplex::degenerate(int r, int s, const Tuple& x) const {
  const bool strict = mode_ == Normalization::Strict;
  if (r == 0 && s == 0) return false;
  if (r == 0 || s == 0) {
    const Groupoid& g = r == 0 ? t_.horiz : t_.vert;
    const int len = r == 0 ? s : r;
    if (strict && len < 2) return false;
    for (int f : x)
      if (g.is_identity(f)) return true;
    return false;
  }
  auto at = [&](int i, int j) { return x[static_cast<size_t>(i) * s + j]; };
  if (strict) {
    for (int a : x) {
      if (r > 1 && t_.is_hid(a)) return true;
      if (s > 1 && t_.is_vid(a)) return true;
    }
    return false;
  }
  for (int i = 0; i < r; ++i) {
    bool all = true;
    for (int j = 0; j < s && all; ++j) all = t_.is_vid(at(i, j));
    if (all) return true;
  }
  for (int j = 0; j < s; ++j) {
    bool all = true;
    for (int i = 0; i < r && all; ++i) all = t_.is_hid(at(i, j));
    if (all) return true;
  }
  return false;
}

void DoubleComplex::enumerate(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("negative bidegree");
  if (r + s > budget_.max_degree) throw ResourceError("bidegree beyond the configured bound");
  std::vector<Tuple> all;
  if (r == 0) {
    all = composable_tuples(t_.horiz, s);
  } else if (s == 0) {
    all = composable_tuples(t_.vert, r);
  } else {
    const int n = t_.n_boxes();
    std::vector<std::vector<int>> by_left(t_.vert.n_arrows());
    for (int a = 0; a < n; ++a) by_left[t_.left[a]].push_back(a);
    Tuple cur;
    auto rec = [&](auto&& self) -> void {
      const int k = static_cast<int>(cur.size());
      if (k == r * s) {
        all.push_back(cur);
        return;
      }
      const int i = k / s, j = k % s;
      auto fits = [&](int a) { return i == 0 || t_.bottom[cur[k - s]] == t_.top[a]; };
      if (j > 0) {
        for (int a : by_left[t_.right[cur[k - 1]]])
          if (fits(a)) {
            cur.push_back(a);
            self(self);
            cur.pop_back();
          }
      } else {
        for (int a = 0; a < n; ++a)
          if (fits(a)) {
            cur.push_back(a);
            self(self);
            cur.pop_back();
          }
      }
    };
    rec(rec);
  }
  std::vector<Tuple> kept;
  for (Tuple& x : all)
    if (!degenerate(r, s, x)) kept.push_back(std::move(x));
  total_basis_ += static_cast<long>(kept.size());
  if (total_basis_ > budget_.max_basis) throw ResourceError("double complex exceeds the basis budget");
  index_[{r, s}] = index_of(kept);
  bases_[{r, s}] = std::move(kept);
}

const std::vector<Tuple>& DoubleComplex::basis(int r, int s) {
  if (!bases_.count({r, s})) enumerate(r, s);
  return bases_.at({r, s});
}

int DoubleComplex::index(int r, int s, const Tuple& x) {
  basis(r, s);
  const auto& idx = index_.at({r, s});
  auto it = idx.find(x);
  return it == idx.end() ? -1 : it->second;
}

// x has R >= 1 rows of s entries; faces have R - 1 rows.
Faces DoubleComplex::vertical_faces(int R, int s, const Tuple& x) const {
  if (s == 0) return nerve_faces(t_.vert, x);
  Faces out;
  auto at = [&](int i, int j) { return x[static_cast<size_t>(i) * s + j]; };
  if (R == 1) {
    Tuple bottom, top;
    for (int j = 0; j < s; ++j) {
      bottom.push_back(t_.bottom[at(0, j)]);
      top.push_back(t_.top[at(0, j)]);
    }
    out.push_back({bottom, 1});
    out.push_back({top, -1});
    return out;
  }
  out.push_back({Tuple(x.begin() + s, x.end()), 1});
  for (int i = 0; i + 1 < R; ++i) {
    Tuple y;
    for (int k = 0; k < R; ++k) {
      if (k == i + 1) continue;
      for (int j = 0; j < s; ++j) y.push_back(k == i ? t_.vc(at(i, j), at(i + 1, j)) : at(k, j));
    }
    out.push_back({std::move(y), sign_of(i + 1)});
  }
  out.push_back({Tuple(x.begin(), x.end() - s), sign_of(R)});
  return out;
}

// x has r rows of S >= 1 entries; faces have S - 1 columns.
Faces DoubleComplex::horizontal_faces(int r, int S, const Tuple& x) const {
  if (r == 0) return nerve_faces(t_.horiz, x);
  Faces out;
  auto at = [&](int i, int j) { return x[static_cast<size_t>(i) * S + j]; };
  if (S == 1) {
    Tuple right, left;
    for (int i = 0; i < r; ++i) {
      right.push_back(t_.right[at(i, 0)]);
      left.push_back(t_.left[at(i, 0)]);
    }
    out.push_back({right, 1});
    out.push_back({left, -1});
    return out;
  }
  auto drop_column = [&](int c) {
    Tuple y;
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < S; ++j)
        if (j != c) y.push_back(at(i, j));
    return y;
  };
  out.push_back({drop_column(0), 1});
  for (int j = 0; j + 1 < S; ++j) {
    Tuple y;
    for (int i = 0; i < r; ++i)
      for (int k = 0; k < S; ++k) {
        if (k == j + 1) continue;
        y.push_back(k == j ? t_.hc(at(i, j), at(i, j + 1)) : at(i, k));
      }
    out.push_back({std::move(y), sign_of(j + 1)});
  }
  out.push_back({drop_column(S - 1), sign_of(S)});
  return out;
}

IntMatrix DoubleComplex::d_h(int r, int s) {
  const std::vector<Tuple> dst = basis(r, s + 1);
  IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(basis(r, s).size()));
  for (size_t i = 0; i < dst.size(); ++i)
    for (const auto& [y, sg] : horizontal_faces(r, s + 1, dst[i])) {
      const int j = index(r, s, y);
      if (j >= 0) m(static_cast<int>(i), j) += sg;
    }
  return m;
}

IntMatrix DoubleComplex::d_v(int r, int s) {
  const std::vector<Tuple> dst = basis(r + 1, s);
  IntMatrix m(static_cast<int>(dst.size()), static_cast<int>(basis(r, s).size()));
  for (size_t i = 0; i < dst.size(); ++i)
    for (const auto& [y, sg] : vertical_faces(r + 1, s, dst[i])) {
      const int j = index(r, s, y);
      if (j >= 0) m(static_cast<int>(i), j) += sg;
    }
  return m;
}

namespace {

std::vector<std::pair<int, int>> pieces_of(TotalPart part, int n) {
  std::vector<std::pair<int, int>> out;
  switch (part) {
    case TotalPart::D:
      for (int r = 0; r <= n; ++r) out.push_back({r, n - r});
      break;
    case TotalPart::A:
      for (int r = 1; r <= n + 1; ++r) out.push_back({r, n + 2 - r});
      break;
    case TotalPart::E:
      if (n == 0) {
        out.push_back({0, 0});
      } else {
        out.push_back({0, n});
        out.push_back({n, 0});
      }
      break;
  }
  return out;
}

void add_block(IntMatrix& m, const IntMatrix& block, int row0, int col0, int sign) {
  for (int i = 0; i < block.rows; ++i)
    for (int j = 0; j < block.cols; ++j)
      if (block(i, j) != 0) m(row0 + i, col0 + j) += sign * block(i, j);
}

}  // namespace

TotalComplex total_complex(DoubleComplex& dc, TotalPart part, int top) {
  const int needed = part == TotalPart::A ? top + 2 : top;
  if (needed > dc.max_degree()) throw ResourceError("total complex truncated: bidegree bound too small");
  TotalComplex tc;
  tc.part = part;
  for (int n = 0; n <= top; ++n) {
    tc.pieces.push_back(pieces_of(part, n));
    std::vector<int> off;
    int total = 0;
    for (auto [r, s] : tc.pieces.back()) {
      off.push_back(total);
      total += static_cast<int>(dc.basis(r, s).size());
    }
    tc.offsets.push_back(off);
    tc.dims.push_back(total);
  }
  for (int n = 0; n < top; ++n) {
    IntMatrix m(tc.dims[n + 1], tc.dims[n]);
    const auto& src = tc.pieces[n];
    const auto& dst = tc.pieces[n + 1];
    auto find = [&](int r, int s) {
      for (size_t k = 0; k < dst.size(); ++k)
        if (dst[k] == std::pair{r, s}) return static_cast<int>(k);
      return -1;
    };
    for (size_t k = 0; k < src.size(); ++k) {
      const auto [r, s] = src[k];
      if (int h = find(r, s + 1); h >= 0) add_block(m, dc.d_h(r, s), tc.offsets[n + 1][h], tc.offsets[n][k], 1);
      if (int v = find(r + 1, s); v >= 0)
        add_block(m, dc.d_v(r, s), tc.offsets[n + 1][v], tc.offsets[n][k], sign_of(s));
    }
    tc.d.push_back(std::move(m));
  }
  return tc;
}

CohomologyReport total_cohomology(DoubleComplex& dc, TotalPart part, int n, long p) {
  const TotalComplex tc = total_complex(dc, part, n + 1);
  return complex_cohomology(tc.dims, tc.d, p, n);
}

DoubleComplexCheck check_double_complex(DoubleComplex& dc, int top) {
  DoubleComplexCheck out;
  for (int k = 0; k + 2 <= top; ++k)
    for (int r = 0; r <= k; ++r) {
      const int s = k - r;
      const IntMatrix hv = multiply(dc.d_h(r + 1, s), dc.d_v(r, s));
      const IntMatrix vh = multiply(dc.d_v(r, s + 1), dc.d_h(r, s));
      if (!(hv == vh) && out.commute) {
        out.commute = false;
        if (out.first_failure.empty()) out.first_failure = {r, s};
      }
    }
  const TotalComplex tc = total_complex(dc, TotalPart::D, top);
  for (size_t n = 0; n + 1 < tc.d.size(); ++n)
    if (!multiply(tc.d[n + 1], tc.d[n]).is_zero() && out.total_square_zero) {
      out.total_square_zero = false;
      if (out.first_failure.empty()) out.first_failure = {static_cast<int>(n)};
    }
  return out;
}

namespace {

// Coordinates of a sub-collection of pieces inside the D total complex of the same degree.
std::vector<int> coordinates_in_d(DoubleComplex& dc, const std::vector<std::pair<int, int>>& pieces, int degree) {
  const auto dpieces = pieces_of(TotalPart::D, degree);
  std::vector<int> start;
  int total = 0;
  for (auto [r, s] : dpieces) {
    start.push_back(total);
    total += static_cast<int>(dc.basis(r, s).size());
  }
  std::vector<int> out;
  for (auto piece : pieces)
    for (size_t k = 0; k < dpieces.size(); ++k)
      if (dpieces[k] == piece) {
        const int size = static_cast<int>(dc.basis(piece.first, piece.second).size());
        for (int i = 0; i < size; ++i) out.push_back(start[k] + i);
      }
  return out;
}

long induced_rank(const std::vector<std::vector<long>>& images, const std::vector<std::vector<long>>& boundaries,
                  int dim, long p) {
  std::vector<std::vector<long>> both = boundaries;
  both.insert(both.end(), images.begin(), images.end());
  return span_rank_mod_p(both, dim, p) - span_rank_mod_p(boundaries, dim, p);
}

}  // namespace

KacReport kac_report(const DoubleGroupoid& t, long p, Normalization mode) {
  if (!is_prime(p)) throw StructuralError("Kac sequence needs prime coefficients");
  const VacancyVerdict vac = is_vacant(t);
  if (!vac.vacant) throw MathError("double groupoid is not vacant; the diagonal groupoid is undefined");
  CohomologyBudget budget;
  budget.max_degree = std::max(budget.max_degree, 4);
  DoubleComplex dc(t, mode, budget);
  const TotalComplex D = total_complex(dc, TotalPart::D, 4);
  const TotalComplex A = total_complex(dc, TotalPart::A, 2);
  const TotalComplex E = total_complex(dc, TotalPart::E, 4);
  const CohomologyReport hD = complex_cohomology(D.dims, D.d, p, 3);
  const CohomologyReport hE = complex_cohomology(E.dims, E.d, p, 3);
  const CohomologyReport hA = complex_cohomology(A.dims, A.d, p, 1);

  auto boundaries = [&](const TotalComplex& c, int n) {
    return n >= 1 ? columns(c.d[n - 1]) : std::vector<std::vector<long>>{};
  };
  // H^n(D) -> H^n(E)
  auto p_rank = [&](int n) {
    const std::vector<int> coords = coordinates_in_d(dc, E.pieces[n], n);
    std::vector<std::vector<long>> images;
    for (const auto& z : nullspace_mod_p(D.d[n], p)) {
      std::vector<long> v;
      for (int c : coords) v.push_back(z[c]);
      images.push_back(std::move(v));
    }
    return induced_rank(images, boundaries(E, n), E.dims[n], p);
  };
  // H^n(E) -> H^{n-1}(A): lift, apply the total differential, read the interior part
  auto connecting_rank = [&](int n) {
    const std::vector<int> e_coords = coordinates_in_d(dc, E.pieces[n], n);
    const std::vector<int> a_coords = coordinates_in_d(dc, A.pieces[n - 1], n + 1);
    std::vector<std::vector<long>> images;
    for (const auto& z : nullspace_mod_p(E.d[n], p)) {
      std::vector<long> lift(D.dims[n], 0);
      for (size_t i = 0; i < e_coords.size(); ++i) lift[e_coords[i]] = z[i];
      const std::vector<long> w = dblgrp::apply(D.d[n], lift);
      std::vector<long> v;
      for (int c : a_coords) v.push_back(w[c]);
      images.push_back(std::move(v));
    }
    return induced_rank(images, boundaries(A, n - 1), A.dims[n - 1], p);
  };
  // H^k(A) -> H^{k+2}(D)
  auto i_rank = [&](int k) {
    const std::vector<int> coords = coordinates_in_d(dc, A.pieces[k], k + 2);
    std::vector<std::vector<long>> images;
    for (const auto& z : nullspace_mod_p(A.d[k], p)) {
      std::vector<long> v(D.dims[k + 2], 0);
      for (size_t i = 0; i < coords.size(); ++i) v[coords[i]] = z[i];
      images.push_back(std::move(v));
    }
    return induced_rank(images, boundaries(D, k + 2), D.dims[k + 2], p);
  };

  KacReport rep;
  rep.p = p;
  rep.terms = {{"H1(Tot D)", hD.dim(1)}, {"H1(Tot E)", hE.dim(1)}, {"H0(Tot A)", hA.dim(0)},
               {"H2(Tot D)", hD.dim(2)}, {"H2(Tot E)", hE.dim(2)}, {"H1(Tot A)", hA.dim(1)},
               {"H3(Tot D)", hD.dim(3)}, {"H3(Tot E)", hE.dim(3)}};
  rep.map_ranks = {p_rank(1), connecting_rank(1), i_rank(0), p_rank(2), connecting_rank(2), i_rank(1), p_rank(3)};
  rep.exact = true;
  for (size_t k = 0; k + 1 < rep.terms.size(); ++k) {
    const long in = k == 0 ? 0 : rep.map_ranks[k - 1];
    const bool ok = in + rep.map_ranks[k] == rep.terms[k].dim;
    rep.exact_at.push_back(ok);
    rep.exact = rep.exact && ok;
  }

  const Groupoid diag = diagonal_groupoid(from_vacant_double(t)).diag;
  const CohomologyReport hDiag = groupoid_cohomology(diag, 3, p, budget);
  const CohomologyReport hH = groupoid_cohomology(t.horiz, 3, p, budget);
  const CohomologyReport hV = groupoid_cohomology(t.vert, 3, p, budget);
  rep.diagonal_matches = rep.edge_splits = true;
  for (int n = 0; n <= 3; ++n) {
    rep.diagonal_dims.push_back(hDiag.dim(n));
    rep.total_d_dims.push_back(hD.dim(n));
    rep.edge_sum_dims.push_back(hH.dim(n) + hV.dim(n));
    rep.total_e_dims.push_back(hE.dim(n));
    if (n >= 1) {
      rep.diagonal_matches = rep.diagonal_matches && hDiag.dim(n) == hD.dim(n);
      rep.edge_splits = rep.edge_splits && hH.dim(n) + hV.dim(n) == hE.dim(n);
    }
  }
  return rep;
}

mpz_class AbelianGroup::order() const {
  mpz_class o = 1;
  for (const auto& c : cyclic_orders) o *= c;
  return o;
}

std::pair<AbelianGroup, AbelianGroup> aut_and_opext(const DoubleGroupoid& t, long m, Normalization mode) {
  if (m < 1) throw StructuralError("coefficient modulus must be positive");
  if (!is_vacant(t).vacant) throw MathError("double groupoid is not vacant");
  if (m == 1) return {};
  DoubleComplex dc(t, mode);
  AbelianGroup aut, opext;
  if (is_prime(m)) {
    const CohomologyReport h = total_cohomology(dc, TotalPart::A, 1, m);
    aut.cyclic_orders.assign(h.dim(0), mpz_class(m));
    opext.cyclic_orders.assign(h.dim(1), mpz_class(m));
    return {aut, opext};
  }
  const TotalComplex A = total_complex(dc, TotalPart::A, 2);
  const CohomologyReport hz = complex_cohomology(A.dims, A.d, 0, 1);
  // torsion of H^2 is read off d^1 directly
  std::vector<mpz_class> torsion2;
  for (const mpz_class& f : invariant_factors(A.d[1]))
    if (f > 1) torsion2.push_back(f);
  const mpz_class mm(m);
  auto torsion_free_part = [&](int k, AbelianGroup& g) {
    for (int j = k; j <= k + 1; ++j)
      for (const mpz_class& tor : j == 2 ? torsion2 : hz.degrees[j].torsion) {
        mpz_class gcd;
        mpz_gcd(gcd.get_mpz_t(), tor.get_mpz_t(), mm.get_mpz_t());
        if (gcd > 1) throw UnsupportedError("integer torsion meets the coefficient modulus");
      }
    g.cyclic_orders.assign(hz.degrees[k].free_rank, mm);
  };
  torsion_free_part(0, aut);
  torsion_free_part(1, opext);
  return {aut, opext};
}

}  // namespace dblgrp
