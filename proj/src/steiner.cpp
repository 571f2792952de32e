#include "ohg/steiner.hpp"

#include <deque>

#include "ohg/errors.hpp"

namespace ohg {

void graded_elem::add(gen_id b, const coeff& c) {
  auto it = coeffs.find(b);
  if (it == coeffs.end()) {
    if (c != 0) coeffs.emplace(b, c);
    return;
  }
  it->second += c;
  if (it->second == 0) coeffs.erase(it);
}

group_elem add(const group_elem& a, const group_elem& b) {
  group_elem out = a;
  out.dim = a.coeffs.empty() ? b.dim : a.dim;
  for (const auto& [k, v] : b.coeffs) out.add(k, v);
  return out;
}

group_elem sub(const group_elem& a, const group_elem& b) {
  group_elem out = a;
  out.dim = a.coeffs.empty() ? b.dim : a.dim;
  for (const auto& [k, v] : b.coeffs) out.add(k, -v);
  return out;
}

monoid_elem meet(const monoid_elem& a, const monoid_elem& b) {
  monoid_elem out;
  out.dim = a.dim;
  for (const auto& [k, v] : a.coeffs) {
    coeff w = b.at(k);
    coeff m = v < w ? v : w;
    if (m > 0) out.coeffs.emplace(k, m);
  }
  return out;
}

bool leq(const monoid_elem& a, const monoid_elem& b) {
  for (const auto& [k, v] : a.coeffs)
    if (v > b.at(k)) return false;
  return true;
}

group_elem boundary(const omega_hypergraph& h, const group_elem& g) {
  group_elem out;
  out.dim = g.dim - 1;
  for (const auto& [x, c] : g.coeffs) {
    for (gen_id b : h.border(x, sign::pos)) out.add(b, c);
    for (gen_id b : h.border(x, sign::neg)) out.add(b, -c);
  }
  return out;
}

coeff augmentation(const omega_hypergraph& h, const group_elem& g) {
  (void)h;
  coeff total = 0;
  for (const auto& [x, c] : g.coeffs) total += c;
  return total;
}

std::pair<monoid_elem, monoid_elem> split(const group_elem& g) {
  monoid_elem neg, pos;
  neg.dim = pos.dim = g.dim;
  for (const auto& [k, v] : g.coeffs) {
    if (v > 0)
      pos.coeffs.emplace(k, v);
    else
      neg.coeffs.emplace(k, -v);
  }
  return {neg, pos};
}

monoid_elem strict_neg(const omega_hypergraph& h, const monoid_elem& x) {
  return split(boundary(h, x)).first;
}

monoid_elem strict_pos(const omega_hypergraph& h, const monoid_elem& x) {
  return split(boundary(h, x)).second;
}

monoid_elem border_neg(const omega_hypergraph& h, const monoid_elem& x) {
  monoid_elem out;
  out.dim = x.dim - 1;
  for (const auto& [b, c] : x.coeffs) {
    monoid_elem part = strict_neg(h, s2m({b}, x.dim));
    for (const auto& [k, v] : part.coeffs) out.add(k, v * c);
  }
  return out;
}

monoid_elem border_pos(const omega_hypergraph& h, const monoid_elem& x) {
  monoid_elem out;
  out.dim = x.dim - 1;
  for (const auto& [b, c] : x.coeffs) {
    monoid_elem part = strict_pos(h, s2m({b}, x.dim));
    for (const auto& [k, v] : part.coeffs) out.add(k, v * c);
  }
  return out;
}

bool monoid_fork_free(const omega_hypergraph& h, const monoid_elem& s) {
  if (s.dim == 0) return augmentation(h, s) == 1;
  std::vector<gen_id> support;
  for (const auto& [k, v] : s.coeffs) support.push_back(k);
  for (size_t i = 0; i < support.size(); ++i)
    for (size_t j = i; j < support.size(); ++j) {
      gen_id x = support[i], y = support[j];
      if (x == y && s.at(x) < 2) continue;  // x + y <= s needs coefficient 2
      for (sign e : {sign::neg, sign::pos})
        if (!disjoint(h.border(x, e), h.border(y, e))) return false;
    }
  return true;
}

bool radical(const monoid_elem& s) {
  for (const auto& [k, v] : s.coeffs)
    if (v >= 2) return false;
  return true;
}

monoid_elem s2m(const gen_set& s, int dim) {
  monoid_elem out;
  out.dim = dim;
  for (gen_id x : s) out.coeffs.emplace(x, 1);
  return out;
}

gen_set m2s(const monoid_elem& u) {
  gen_set out;
  for (const auto& [k, v] : u.coeffs) insert(out, k);
  return out;
}

bool is_adc(const omega_hypergraph& h) {
  for (int n = 1; n <= h.top_dim(); ++n)
    for (gen_id x : h.generators(n)) {
      group_elem dx = boundary(h, s2m({x}, n));
      if (n >= 2) {
        if (!boundary(h, dx).is_zero()) return false;
      } else {
        if (augmentation(h, dx) != 0) return false;
      }
    }
  return true;
}

bool is_adc_cell(const omega_hypergraph& h, const adc_cell& x) {
  int n = x.dim();
  for (int i = 0; i <= n; ++i)
    for (sign e : {sign::neg, sign::pos}) {
      if (x.layer(i, e).dim != i) return false;
      for (const auto& [b, c] : x.layer(i, e).coeffs)
        if (h.dim(b) != i || c < 0) return false;
      if (i == n) break;
    }
  for (int i = 0; i < n; ++i) {
    group_elem want = sub(x.layer(i, sign::pos), x.layer(i, sign::neg));
    want.dim = i;
    for (sign e : {sign::neg, sign::pos})
      if (boundary(h, x.layer(i + 1, e)) != want) return false;
  }
  if (augmentation(h, x.layer(0, sign::neg)) != 1 || augmentation(h, x.layer(0, sign::pos)) != 1)
    return false;
  return true;
}

adc_cell adc_atom(const omega_hypergraph& h, gen_id x) {
  int n = h.dim(x);
  adc_cell out;
  out.neg.resize(n);
  out.pos.resize(n);
  out.top = s2m({x}, n);
  monoid_elem cur_neg = out.top, cur_pos = out.top;
  for (int j = n - 1; j >= 0; --j) {
    cur_neg = strict_neg(h, cur_neg);
    cur_pos = strict_pos(h, cur_pos);
    out.neg[j] = cur_neg;
    out.pos[j] = cur_pos;
  }
  return out;
}

adc_cell adc_boundary(const adc_cell& x, sign e, int k) {
  if (k > x.dim()) throw error(errkind::dimension_mismatch, "boundary above cell dimension");
  adc_cell y;
  y.neg.assign(x.neg.begin(), x.neg.begin() + k);
  y.pos.assign(x.pos.begin(), x.pos.begin() + k);
  y.top = x.layer(k, e);
  return y;
}

adc_cell adc_compose(const omega_hypergraph& h, const adc_cell& x, const adc_cell& y, int i) {
  (void)h;
  int n = x.dim();
  if (y.dim() != n || i < 0 || i >= n)
    throw error(errkind::not_composable, "adc composition index out of range", {{"i", i}});
  if (adc_boundary(x, sign::pos, i) != adc_boundary(y, sign::neg, i))
    throw error(errkind::not_composable, "adc boundary mismatch at composition index", {{"i", i}});
  adc_cell z;
  z.neg.resize(n);
  z.pos.resize(n);
  for (int j = 0; j < n; ++j) {
    if (j < i) {
      z.neg[j] = x.neg[j];
      z.pos[j] = x.pos[j];
    } else if (j == i) {
      z.neg[j] = x.neg[j];
      z.pos[j] = y.pos[j];
    } else {
      z.neg[j] = add(x.neg[j], y.neg[j]);
      z.pos[j] = add(x.pos[j], y.pos[j]);
    }
  }
  z.top = add(x.top, y.top);
  z.top.dim = n;
  return z;
}

adc_cell adc_identity(const adc_cell& x, int m) {
  if (m < x.dim()) throw error(errkind::dimension_mismatch, "identity target below cell dimension");
  adc_cell y = x;
  while (y.dim() < m) {
    y.neg.push_back(y.top);
    y.pos.push_back(y.top);
    y.top = monoid_elem{y.top.dim + 1, {}};
  }
  return y;
}

adc_cell c2st(const pre_cell& x, const omega_hypergraph& h) {
  if (strict_checks() && !is_cell(h, x))
    throw error(errkind::not_a_cell, "c2st applied to a pre-cell that is not a cell");
  adc_cell out;
  for (int i = 0; i < x.dim(); ++i) {
    out.neg.push_back(s2m(x.neg[i], i));
    out.pos.push_back(s2m(x.pos[i], i));
  }
  out.top = s2m(x.top, x.dim());
  return out;
}

pre_cell st2c(const adc_cell& x, const omega_hypergraph& h) {
  if (strict_checks() && !is_adc_cell(h, x))
    throw error(errkind::not_a_cell, "st2c applied to a pre-cell that is not a cell");
  pre_cell out;
  for (int i = 0; i < x.dim(); ++i) {
    out.neg.push_back(m2s(x.neg[i]));
    out.pos.push_back(m2s(x.pos[i]));
  }
  out.top = m2s(x.top);
  return out;
}

adc_order::adc_order(const omega_hypergraph& h, int i) {
  for (int d = i + 1; d <= h.top_dim(); ++d)
    for (gen_id x : h.generators(d)) insert(ground_, x);
  size_t k = ground_.size();
  std::vector<adc_cell> atoms;
  atoms.reserve(k);
  for (gen_id x : ground_) atoms.push_back(adc_atom(h, x));
  step_.assign(k, std::vector<bool>(k, false));
  for (size_t a = 0; a < k; ++a)
    for (size_t b = 0; b < k; ++b)
      if (!meet(atoms[a].layer(i, sign::pos), atoms[b].layer(i, sign::neg)).is_zero())
        step_[a][b] = true;
  reach_ = step_;
  for (size_t m = 0; m < k; ++m)
    for (size_t a = 0; a < k; ++a)
      if (reach_[a][m])
        for (size_t b = 0; b < k; ++b)
          if (reach_[m][b]) reach_[a][b] = true;
}

int adc_order::index(gen_id x) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
  return static_cast<int>(it - ground_.begin());
}

bool adc_order::less(gen_id x, gen_id y) const {
  if (!contains(ground_, x) || !contains(ground_, y)) return false;
  return reach_[index(x)][index(y)];
}

std::optional<std::vector<gen_id>> adc_order::cycle() const {
  for (size_t a = 0; a < ground_.size(); ++a) {
    if (!reach_[a][a]) continue;
    // shortest one-step chain back to a
    std::vector<int> prev(ground_.size(), -2);
    std::deque<int> q;
    for (size_t j = 0; j < ground_.size(); ++j)
      if (step_[a][j] && prev[j] == -2) {
        prev[j] = static_cast<int>(a);
        q.push_back(static_cast<int>(j));
      }
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      if (v == static_cast<int>(a)) break;
      for (size_t j = 0; j < ground_.size(); ++j)
        if (step_[v][j] && prev[j] == -2) {
          prev[j] = v;
          q.push_back(static_cast<int>(j));
        }
    }
    std::vector<gen_id> cyc{ground_[a]};
    int cur = static_cast<int>(a);
    do {
      cur = prev[cur];
      cyc.push_back(ground_[cur]);
    } while (cur != static_cast<int>(a));
    std::reverse(cyc.begin(), cyc.end());
    return cyc;
  }
  return std::nullopt;
}

axiom_report check_steiner(const omega_hypergraph& h) {
  axiom_report rep;
  rep.formalism = "adc";

  auto adc = axiom_result::passed("adc");
  for (int n = 1; n <= h.top_dim() && adc.v == verdict::pass; ++n)
    for (gen_id x : h.generators(n)) {
      group_elem dx = boundary(h, s2m({x}, n));
      bool ok = n >= 2 ? boundary(h, dx).is_zero() : augmentation(h, dx) == 0;
      if (!ok) {
        adc = axiom_result::failed("adc", {{"generator", h.name_of(x)},
                                           {"equation", n >= 2 ? "d.d = 0" : "aug.d = 0"}});
        break;
      }
    }
  rep.axioms.push_back(adc);

  auto unital = axiom_result::passed("unital");
  for (int n = 0; n <= h.top_dim() && unital.v == verdict::pass; ++n)
    for (gen_id x : h.generators(n)) {
      adc_cell a = adc_atom(h, x);
      if (augmentation(h, a.layer(0, sign::neg)) != 1 ||
          augmentation(h, a.layer(0, sign::pos)) != 1) {
        unital = axiom_result::failed("unital", {{"generator", h.name_of(x)}});
        break;
      }
    }
  rep.axioms.push_back(unital);

  auto loopfree = axiom_result::passed("loop-free");
  for (int i = 0; i < h.top_dim() && loopfree.v == verdict::pass; ++i) {
    adc_order ord(h, i);
    if (auto cyc = ord.cycle()) {
      loopfree = axiom_result::failed(
          "loop-free", {{"i", i}, {"cycle", names_of(h, gen_set(cyc->begin(), cyc->end()))}});
    }
  }
  rep.axioms.push_back(loopfree);
  return rep;
}

}  // namespace ohg
