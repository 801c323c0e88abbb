#include "dblgrp/cocycle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>

namespace dblgrp {

namespace {

size_t at(int n, int a, int b) { return static_cast<size_t>(a) * n + b; }

int mod(long v, int m) { return static_cast<int>(((v % m) + m) % m); }

// Positions of the pairs not fixed by normalization: sigma pairs first, then tau,
// each in lexicographic order of (A, B).
struct FreePairs {
  std::vector<size_t> sigma_pos;
  std::vector<size_t> tau_pos;
  size_t size() const { return sigma_pos.size() + tau_pos.size(); }
};

FreePairs free_pairs(const DoubleGroupoid& t) {
  FreePairs fp;
  const int n = t.n_boxes();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.stackable(a, b) && !t.is_vid(a) && !t.is_vid(b)) fp.sigma_pos.push_back(at(n, a, b));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t.adjacent(a, b) && !t.is_hid(a) && !t.is_hid(b)) fp.tau_pos.push_back(at(n, a, b));
  return fp;
}

long checked_power(int m, size_t k, long limit) {
  long total = 1;
  for (size_t i = 0; i < k; ++i) {
    if (total > limit / std::max(m, 1)) return -1;
    total *= m;
  }
  return total;
}

void assign(CocyclePair& cp, const FreePairs& fp, long index) {
  for (size_t i = fp.size(); i-- > 0;) {
    const int digit = static_cast<int>(index % cp.m);
    index /= cp.m;
    if (i < fp.sigma_pos.size())
      cp.sigma[fp.sigma_pos[i]] = digit;
    else
      cp.tau[fp.tau_pos[i - fp.sigma_pos.size()]] = digit;
  }
}

template <class Fn>
void for_each_square(const DoubleGroupoid& t, Fn&& fn) {
  const int n = t.n_boxes();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!t.adjacent(a, b)) continue;
      for (int c = 0; c < n; ++c) {
        if (!t.stackable(a, c)) continue;
        for (int d = 0; d < n; ++d)
          if (t.adjacent(c, d) && t.stackable(b, d)) fn(a, b, c, d);
      }
    }
}

}  // namespace

CocyclePair zero_cocycle_pair(const DoubleGroupoid& t, int m) {
  if (m < 1) throw StructuralError("modulus must be positive");
  CocyclePair cp;
  cp.m = m;
  cp.n = t.n_boxes();
  const int n = cp.n;
  cp.sigma.assign(static_cast<size_t>(n) * n, -1);
  cp.tau.assign(static_cast<size_t>(n) * n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.stackable(a, b)) cp.sigma[at(n, a, b)] = 0;
      if (t.adjacent(a, b)) cp.tau[at(n, a, b)] = 0;
    }
  return cp;
}

Report validate_cocycle_pair(const DoubleGroupoid& t, const CocyclePair& cp) {
  const int n = t.n_boxes();
  const size_t nn = static_cast<size_t>(n) * n;
  if (cp.m < 1) throw StructuralError("modulus must be positive");
  if (cp.n != n || cp.sigma.size() != nn || cp.tau.size() != nn)
    throw StructuralError("cocycle tables do not match the box count");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int sv = cp.s(a, b), tv = cp.t(a, b);
      if (t.stackable(a, b) != (sv >= 0))
        throw StructuralError("sigma domain mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (t.adjacent(a, b) != (tv >= 0))
        throw StructuralError("tau domain mismatch at (" + std::to_string(a) + "," + std::to_string(b) + ")");
      if (sv >= cp.m || tv >= cp.m) throw StructuralError("cocycle value out of range");
    }

  const int m = cp.m;
  Report rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.stackable(a, b) && (t.is_vid(a) || t.is_vid(b)) && cp.s(a, b) != 0)
        rep.add("sigma-normalization", {a, b});
      if (t.adjacent(a, b) && (t.is_hid(a) || t.is_hid(b)) && cp.t(a, b) != 0) rep.add("tau-normalization", {a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.stackable(a, b)) {
        const int ab = t.vc(a, b);
        for (int c = 0; c < n; ++c) {
          if (!t.stackable(b, c)) continue;
          const int bc = t.vc(b, c);
          if (mod(cp.s(a, b) + cp.s(ab, c) - cp.s(b, c) - cp.s(a, bc), m) != 0) rep.add("sigma-cocycle", {a, b, c});
        }
      }
      if (t.adjacent(a, b)) {
        const int ab = t.hc(a, b);
        for (int c = 0; c < n; ++c) {
          if (!t.adjacent(b, c)) continue;
          const int bc = t.hc(b, c);
          if (mod(cp.t(a, b) + cp.t(ab, c) - cp.t(b, c) - cp.t(a, bc), m) != 0) rep.add("tau-cocycle", {a, b, c});
        }
      }
    }
  for_each_square(t, [&](int a, int b, int c, int d) {
    const long lhs = cp.s(t.hc(a, b), t.hc(c, d)) + cp.t(t.vc(a, c), t.vc(b, d));
    const long rhs = cp.t(a, b) + cp.t(c, d) + cp.s(a, c) + cp.s(b, d);
    if (mod(lhs - rhs, m) != 0) rep.add("compatibility", {a, b, c, d});
  });

  const BoxInverseTable inv = compute_inverses(t);
  for (int a = 0; a < n; ++a) {
    const int av = inv.v_inv[a], ah = inv.h_inv[a];
    if (cp.s(a, av) != cp.s(av, a)) rep.add("sigma-symmetry", {a});
    if (cp.t(a, ah) != cp.t(ah, a)) rep.add("tau-symmetry", {a});
  }
  return rep;
}

std::vector<int> gauge_support(const DoubleGroupoid& t) {
  std::vector<int> out;
  for (int a = 0; a < t.n_boxes(); ++a)
    if (!t.is_vid(a) && !t.is_hid(a)) out.push_back(a);
  return out;
}

CocyclePair gauge_transform(const DoubleGroupoid& t, const CocyclePair& cp, const std::vector<int>& psi) {
  const int n = t.n_boxes();
  if (static_cast<int>(psi.size()) != n || cp.n != n) throw StructuralError("gauge function size mismatch");
  const int m = cp.m;
  for (int a = 0; a < n; ++a)
    if ((t.is_vid(a) || t.is_hid(a)) && mod(psi[a], m) != 0)
      throw MathError("gauge function does not vanish on an identity box", {a});
  CocyclePair out = cp;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.stackable(a, b)) out.sigma[at(n, a, b)] = mod(long(cp.s(a, b)) + psi[t.vc(a, b)] - psi[a] - psi[b], m);
      if (t.adjacent(a, b)) out.tau[at(n, a, b)] = mod(long(cp.t(a, b)) + psi[a] + psi[b] - psi[t.hc(a, b)], m);
    }
  return out;
}

std::optional<std::vector<int>> is_gauge_equivalent(const DoubleGroupoid& t, const CocyclePair& cp1,
                                                    const CocyclePair& cp2, const SearchBudget& budget) {
  if (cp1.m != cp2.m) throw StructuralError("cocycle moduli differ");
  const std::vector<int> support = gauge_support(t);
  const long total = checked_power(cp1.m, support.size(), budget.max_candidates);
  if (total < 0) throw ResourceError("gauge search exceeds the candidate budget");
  std::vector<int> psi(t.n_boxes(), 0);
  for (long idx = 0; idx < total; ++idx) {
    long rest = idx;
    for (size_t i = support.size(); i-- > 0;) {
      psi[support[i]] = static_cast<int>(rest % cp1.m);
      rest /= cp1.m;
    }
    if (gauge_transform(t, cp1, psi) == cp2) return psi;
  }
  return std::nullopt;
}

std::vector<CocyclePair> enumerate_cocycle_pairs(const DoubleGroupoid& t, int m, const SearchBudget& budget) {
  const CocyclePair base = zero_cocycle_pair(t, m);
  const FreePairs fp = free_pairs(t);
  const long total = checked_power(m, fp.size(), budget.max_candidates);
  if (total < 0) throw ResourceError("cocycle enumeration exceeds the candidate budget");

  const int k = std::max(1, std::min<int>(budget.threads, static_cast<int>(std::min<long>(total, 64))));
  std::vector<std::vector<CocyclePair>> found(k);
  auto work = [&](int w) {
    const long lo = total * w / k, hi = total * (w + 1) / k;
    CocyclePair cp = base;
    for (long idx = lo; idx < hi; ++idx) {
      assign(cp, fp, idx);
      if (validate_cocycle_pair(t, cp).ok()) found[w].push_back(cp);
    }
  };
  if (k == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < k; ++w) pool.emplace_back(work, w);
    for (auto& th : pool) th.join();
  }
  std::vector<CocyclePair> out;
  for (auto& part : found)
    for (auto& cp : part) out.push_back(std::move(cp));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct LinearConstraint {
  std::vector<std::pair<int, int>> terms;  // (variable, coefficient mod m)
  int last = -1;
};

class ConstraintSystem {
 public:
  ConstraintSystem(const DoubleGroupoid& t, int m, const FreePairs& fp) : t_(t), m_(m), n_(t.n_boxes()) {
    const size_t nn = static_cast<size_t>(n_) * n_;
    sigma_var_.assign(nn, -1);
    tau_var_.assign(nn, -1);
    int v = 0;
    for (size_t p : fp.sigma_pos) sigma_var_[p] = v++;
    for (size_t p : fp.tau_pos) tau_var_[p] = v++;
    n_vars_ = v;
    by_last_.resize(n_vars_);
  }

  void build() {
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) {
        if (t_.stackable(a, b)) {
          for (int c = 0; c < n_; ++c)
            if (t_.stackable(b, c))
              add({{sv(a, b), 1}, {sv(t_.vc(a, b), c), 1}, {sv(b, c), -1}, {sv(a, t_.vc(b, c)), -1}});
        }
        if (t_.adjacent(a, b)) {
          for (int c = 0; c < n_; ++c)
            if (t_.adjacent(b, c))
              add({{tv(a, b), 1}, {tv(t_.hc(a, b), c), 1}, {tv(b, c), -1}, {tv(a, t_.hc(b, c)), -1}});
        }
      }
    for_each_square(t_, [&](int a, int b, int c, int d) {
      add({{sv(t_.hc(a, b), t_.hc(c, d)), 1},
           {tv(t_.vc(a, c), t_.vc(b, d)), 1},
           {tv(a, b), -1},
           {tv(c, d), -1},
           {sv(a, c), -1},
           {sv(b, d), -1}});
    });
  }

  int n_vars() const { return n_vars_; }
  const std::vector<LinearConstraint>& ending_at(int v) const { return by_last_[v]; }

 private:
  int sv(int a, int b) const { return sigma_var_[at(n_, a, b)]; }
  int tv(int a, int b) const { return tau_var_[at(n_, a, b)]; }

  // Variables -1 are normalized to zero and drop out.
  void add(std::vector<std::pair<int, int>> raw) {
    std::map<int, int> coeff;
    for (auto [var, c] : raw)
      if (var >= 0) coeff[var] = mod(coeff[var] + c, m_);
    LinearConstraint lc;
    for (auto [var, c] : coeff)
      if (c != 0) lc.terms.emplace_back(var, c);
    if (lc.terms.empty()) return;
    lc.last = lc.terms.back().first;
    by_last_[lc.last].push_back(std::move(lc));
  }

  const DoubleGroupoid& t_;
  int m_, n_;
  int n_vars_ = 0;
  std::vector<int> sigma_var_, tau_var_;
  std::vector<std::vector<LinearConstraint>> by_last_;
};

}  // namespace

std::vector<CocyclePair> enumerate_cocycle_pairs_pruned(const DoubleGroupoid& t, int m, const SearchBudget& budget) {
  if (m < 1) throw StructuralError("modulus must be positive");
  const FreePairs fp = free_pairs(t);
  ConstraintSystem sys(t, m, fp);
  sys.build();
  const int k = sys.n_vars();
  std::vector<int> value(k, 0);
  std::vector<CocyclePair> out;
  const CocyclePair base = zero_cocycle_pair(t, m);
  long nodes = 0;

  auto satisfied = [&](int v) {
    for (const auto& lc : sys.ending_at(v)) {
      long s = 0;
      for (auto [var, c] : lc.terms) s += long(c) * value[var];
      if (s % m != 0) return false;
    }
    return true;
  };
  auto emit = [&] {
    CocyclePair cp = base;
    for (size_t i = 0; i < fp.sigma_pos.size(); ++i) cp.sigma[fp.sigma_pos[i]] = value[i];
    for (size_t i = 0; i < fp.tau_pos.size(); ++i) cp.tau[fp.tau_pos[i]] = value[fp.sigma_pos.size() + i];
    out.push_back(std::move(cp));
  };
  auto dfs = [&](auto&& self, int v) -> void {
    if (v == k) {
      emit();
      return;
    }
    for (int x = 0; x < m; ++x) {
      if (++nodes > budget.max_candidates) throw ResourceError("cocycle search exceeds the node budget");
      value[v] = x;
      if (satisfied(v)) self(self, v + 1);
    }
    value[v] = 0;
  };
  dfs(dfs, 0);
  std::sort(out.begin(), out.end());
  return out;
}

GaugeClasses gauge_classes(const DoubleGroupoid& t, int m, const SearchBudget& budget) {
  GaugeClasses gc;
  gc.pairs = enumerate_cocycle_pairs_pruned(t, m, budget);
  const int total = static_cast<int>(gc.pairs.size());
  std::map<CocyclePair, int> index;
  for (int i = 0; i < total; ++i) index.emplace(gc.pairs[i], i);

  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<int> psi(t.n_boxes(), 0);
  for (int b : gauge_support(t)) {
    psi[b] = 1;
    for (int i = 0; i < total; ++i) {
      auto it = index.find(gauge_transform(t, gc.pairs[i], psi));
      if (it == index.end()) throw std::logic_error("gauge transform left the set of cocycle pairs");
      const int x = find(i), y = find(it->second);
      if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
    psi[b] = 0;
  }
  gc.class_of.resize(total);
  for (int i = 0; i < total; ++i) {
    gc.class_of[i] = find(i);
    if (gc.class_of[i] == i) ++gc.count;
  }
  return gc;
}

int count_modulo_gauge(const DoubleGroupoid& t, int m, const SearchBudget& budget) {
  return gauge_classes(t, m, budget).count;
}

FieldCocyclePair embed_in_field(const CocyclePair& cp, const Field& field) {
  const int fm = field.spec().m;
  if (fm % cp.m != 0)
    throw MathError("cocycle modulus " + std::to_string(cp.m) + " does not divide the root order " +
                    std::to_string(fm));
  const long step = fm / cp.m;
  FieldCocyclePair fc;
  fc.n = cp.n;
  fc.sigma.resize(cp.sigma.size());
  fc.tau.resize(cp.tau.size());
  for (size_t i = 0; i < cp.sigma.size(); ++i) {
    fc.sigma[i] = cp.sigma[i] < 0 ? field.zero() : field.root_power(step * cp.sigma[i]);
    fc.tau[i] = cp.tau[i] < 0 ? field.zero() : field.root_power(step * cp.tau[i]);
  }
  return fc;
}

Report validate_field_cocycle_pair(const DoubleGroupoid& t, const FieldCocyclePair& fc, const Field& f) {
  const int n = t.n_boxes();
  if (fc.n != n) throw StructuralError("cocycle tables do not match the box count");
  auto s = [&](int a, int b) -> const Scalar& { return fc.sigma[at(n, a, b)]; };
  auto tt = [&](int a, int b) -> const Scalar& { return fc.tau[at(n, a, b)]; };
  Report rep;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (t.stackable(a, b)) {
        if (f.is_zero(s(a, b))) rep.add("sigma-normalization", {a, b});
        if ((t.is_vid(a) || t.is_vid(b)) && s(a, b) != f.one()) rep.add("sigma-normalization", {a, b});
        for (int c = 0; c < n; ++c)
          if (t.stackable(b, c) &&
              f.mul(s(a, b), s(t.vc(a, b), c)) != f.mul(s(b, c), s(a, t.vc(b, c))))
            rep.add("sigma-cocycle", {a, b, c});
      }
      if (t.adjacent(a, b)) {
        if (f.is_zero(tt(a, b))) rep.add("tau-normalization", {a, b});
        if ((t.is_hid(a) || t.is_hid(b)) && tt(a, b) != f.one()) rep.add("tau-normalization", {a, b});
        for (int c = 0; c < n; ++c)
          if (t.adjacent(b, c) && f.mul(tt(a, b), tt(t.hc(a, b), c)) != f.mul(tt(b, c), tt(a, t.hc(b, c))))
            rep.add("tau-cocycle", {a, b, c});
      }
    }
  for_each_square(t, [&](int a, int b, int c, int d) {
    const Scalar lhs = f.mul(s(t.hc(a, b), t.hc(c, d)), tt(t.vc(a, c), t.vc(b, d)));
    const Scalar rhs = f.mul(f.mul(tt(a, b), tt(c, d)), f.mul(s(a, c), s(b, d)));
    if (lhs != rhs) rep.add("compatibility", {a, b, c, d});
  });
  const BoxInverseTable inv = compute_inverses(t);
  for (int a = 0; a < n; ++a) {
    if (s(a, inv.v_inv[a]) != s(inv.v_inv[a], a)) rep.add("sigma-symmetry", {a});
    if (tt(a, inv.h_inv[a]) != tt(inv.h_inv[a], a)) rep.add("tau-symmetry", {a});
  }
  return rep;
}

}  // namespace dblgrp
