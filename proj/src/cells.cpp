#include "ohg/cells.hpp"

#include <algorithm>
#include <atomic>
#include <tuple>

#include "ohg/errors.hpp"

namespace ohg {

namespace {
std::atomic<bool> g_strict{true};
}

void set_strict_checks(bool on) { g_strict.store(on); }
bool strict_checks() { return g_strict.load(); }

bool pre_cell::operator<(const pre_cell& o) const {
  return std::tie(neg, pos, top) < std::tie(o.neg, o.pos, o.top);
}

bool is_cell(const omega_hypergraph& h, const pre_cell& x, cell_violation* why) {
  int n = x.dim();
  auto fail = [&](int i, sign e, const char* cond) {
    if (why) *why = {i, e, cond};
    return false;
  };
  for (int i = 0; i <= n; ++i) {
    for (sign e : {sign::neg, sign::pos}) {
      for (gen_id g : x.layer(i, e))
        if (h.dim(g) != i) return fail(i, e, "grading");
      if (!h.fork_free(i, x.layer(i, e))) return fail(i, e, "fork_free");
      if (i == n) break;  // the top is a single layer
    }
  }
  for (int i = 0; i + 1 <= n; ++i)
    for (sign e : {sign::neg, sign::pos}) {
      if (!moves(h, x.layer(i + 1, e), x.neg[i], x.pos[i])) return fail(i + 1, e, "movement");
      if (i + 1 == n) break;
    }
  return true;
}

pre_cell boundary(const pre_cell& x, sign e, int k) {
  if (k > x.dim()) throw error(errkind::dimension_mismatch, "boundary above cell dimension");
  pre_cell y;
  y.neg.assign(x.neg.begin(), x.neg.begin() + k);
  y.pos.assign(x.pos.begin(), x.pos.begin() + k);
  y.top = x.layer(k, e);
  return y;
}

bool composable(const pre_cell& x, const pre_cell& y, int i) {
  return boundary(x, sign::pos, i) == boundary(y, sign::neg, i);
}

pre_cell compose(const omega_hypergraph& h, const pre_cell& x, const pre_cell& y, int i) {
  int n = x.dim();
  if (y.dim() != n)
    throw error(errkind::not_composable, "composition of cells of different dimensions",
                {{"i", i}});
  if (i < 0 || i >= n) throw error(errkind::not_composable, "composition index out of range", {{"i", i}});
  if (!composable(x, y, i))
    throw error(errkind::not_composable, "boundary mismatch at composition index",
                {{"i", i},
                 {"target", names_of(h, x.layer(i, sign::pos))},
                 {"source", names_of(h, y.layer(i, sign::neg))}});
  pre_cell z;
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
      z.neg[j] = set_union(x.neg[j], y.neg[j]);
      z.pos[j] = set_union(x.pos[j], y.pos[j]);
    }
  }
  z.top = set_union(x.top, y.top);
  if (strict_checks()) {
    // composites of cells share no generators above the composition index
    // when the axioms hold; a merge here would silently conflate layers
    for (int j = i + 1; j <= n; ++j)
      for (sign e : {sign::neg, sign::pos}) {
        if (!disjoint(x.layer(j, e), y.layer(j, e)))
          throw error(errkind::axiom_violation, "composite layers overlap above composition index",
                      {{"layer", j}});
        if (j == n) break;
      }
  }
  return z;
}

pre_cell identity(const pre_cell& x, int m) {
  if (m < x.dim()) throw error(errkind::dimension_mismatch, "identity target below cell dimension");
  pre_cell y = x;
  while (y.dim() < m) {
    y.neg.push_back(y.top);
    y.pos.push_back(y.top);
    y.top.clear();
  }
  return y;
}

pre_cell atom(const omega_hypergraph& h, gen_id x) {
  auto t = h.atom_layers(x);
  pre_cell c;
  int n = h.dim(x);
  c.neg.assign(t.neg.begin(), t.neg.begin() + n);
  c.pos.assign(t.pos.begin(), t.pos.begin() + n);
  c.top = {x};
  return c;
}

bool is_relevant(const omega_hypergraph& h, gen_id x) { return is_cell(h, atom(h, x)); }

namespace {

pre_cell glue_impl(const omega_hypergraph& h, const pre_cell& x, const gen_set& g, bool dual) {
  int n = x.dim();
  for (gen_id z : g)
    if (h.dim(z) != n + 1)
      throw error(errkind::not_glueable, "glued set not one dimension above the cell",
                  {{"generator", h.name_of(z)}});
  if (!h.fork_free(n + 1, g))
    throw error(errkind::not_glueable, "glued set is not fork-free", {{"set", names_of(h, g)}});
  sign in = dual ? sign::pos : sign::neg;
  if (!subset(h.strict_border(g, in), x.top))
    throw error(errkind::not_glueable,
                dual ? "G^(+\\-) not contained in X_n" : "G^(-\\+) not contained in X_n",
                {{"set", names_of(h, g)}});
  gen_set moved = set_diff(set_union(x.top, h.border(g, opposite(in))), h.border(g, in));
  pre_cell y;
  y.neg = x.neg;
  y.pos = x.pos;
  if (dual) {
    y.neg.push_back(moved);
    y.pos.push_back(x.top);
  } else {
    y.neg.push_back(x.top);
    y.pos.push_back(moved);
  }
  y.top = g;
  if (strict_checks()) {
    // gluing theorem conclusions; failures mean the hypergraph breaks the
    // axioms this construction assumes
    if (!disjoint(h.border(g, opposite(in)), x.top))
      throw error(errkind::axiom_violation, "G border meets X_n against the gluing theorem",
                  {{"set", names_of(h, g)}});
    cell_violation v;
    if (!is_cell(h, y, &v))
      throw error(errkind::axiom_violation, "gluing is not a cell",
                  {{"layer", v.layer}, {"condition", v.condition}});
  }
  return y;
}

}  // namespace

pre_cell glue(const omega_hypergraph& h, const pre_cell& x, const gen_set& g) {
  return glue_impl(h, x, g, false);
}

pre_cell activate(const omega_hypergraph& h, const pre_cell& x, const gen_set& g) {
  return boundary(glue(h, x, g), sign::pos);
}

pre_cell dual_glue(const omega_hypergraph& h, const pre_cell& x, const gen_set& g) {
  return glue_impl(h, x, g, true);
}

pre_cell dual_activate(const omega_hypergraph& h, const pre_cell& x, const gen_set& g) {
  return boundary(dual_glue(h, x, g), sign::neg);
}

std::vector<std::size_t> rank(const pre_cell& x) {
  std::vector<std::size_t> r;
  for (int i = 1; i < x.dim(); ++i) r.push_back(set_inter(x.neg[i], x.pos[i]).size());
  if (x.dim() >= 1) r.push_back(x.top.size());
  return r;
}

bool rank_lt(const std::vector<std::size_t>& r, const std::vector<std::size_t>& s) {
  if (r.size() != s.size())
    throw error(errkind::dimension_mismatch, "rank comparison across dimensions");
  for (auto i = r.size(); i-- > 0;) {
    if (r[i] != s[i]) return r[i] < s[i];
  }
  return false;
}

excision excise(const omega_hypergraph& h, const pre_cell& x, gen_id u) {
  int n = x.dim();
  if (!contains(x.top, u))
    throw error(errkind::precondition_failed, "excised generator not in the top layer",
                {{"generator", h.name_of(u)}});
  pre_cell au = atom(h, u);
  if (x == au) throw error(errkind::is_atom, "cell is the atom of " + h.name_of(u));

  auto matches = [&](int j) {
    if (j == n) return x.top == au.top;
    return x.neg[j] == au.neg[j] && x.pos[j] == au.pos[j];
  };
  // least i >= 0 such that all layers strictly above i+1 agree with <u>
  int i = n - 1;
  while (i >= 1 && matches(i + 1)) --i;
  if (i == 0 && matches(1) && matches(0))
    throw error(errkind::is_atom, "cell is the atom of " + h.name_of(u));

  gen_set crossing =
      set_diff(set_inter(x.layer(i + 1, sign::neg), x.layer(i + 1, sign::pos)),
               set_union(au.layer(i + 1, sign::neg), au.layer(i + 1, sign::pos)));
  if (crossing.empty())
    throw error(errkind::axiom_violation, "no crossing generator to excise at layer",
                {{"layer", i + 1}});
  gen_id w = crossing.front();

  const gen_set& l = x.layer(i + 1, sign::neg);
  tl_relation rel(h, l);
  gen_set before, after;  // candidates for the minimal x / maximal y of the proof
  for (gen_id c : l) {
    if (c == w || rel.reaches(c, w)) insert(before, c);
    if (c == w || rel.reaches(w, c)) insert(after, c);
  }
  gen_id xmin = -1, ymax = -1;
  for (gen_id c : before) {
    bool minimal = true;
    for (gen_id d : before)
      if (d != c && rel.reaches(d, c)) minimal = false;
    if (minimal) {
      xmin = c;
      break;  // smallest id among minimal candidates
    }
  }
  for (gen_id c : after) {
    bool maximal = true;
    for (gen_id d : after)
      if (d != c && rel.reaches(c, d)) maximal = false;
    if (maximal) {
      ymax = c;
      break;
    }
  }

  bool left_branch = !contains(au.layer(i + 1, sign::neg), xmin);
  if (!left_branch && contains(au.layer(i + 1, sign::neg), ymax))
    throw error(errkind::axiom_violation, "segment axiom fails around the excised generator",
                {{"generator", h.name_of(u)}, {"layer", i + 1}});

  excision out;
  out.i = i;
  try {
    if (left_branch) {
      out.left = identity(glue(h, boundary(x, sign::neg, i), {xmin}), n);
      pre_cell z = x;
      if (i + 1 == n) {
        erase(z.top, xmin);
      } else {
        erase(z.neg[i + 1], xmin);
        erase(z.pos[i + 1], xmin);
      }
      z.neg[i] = set_diff(set_union(x.neg[i], h.border(xmin, sign::pos)), h.border(xmin, sign::neg));
      out.right = std::move(z);
    } else {
      out.right = identity(dual_glue(h, boundary(x, sign::pos, i), {ymax}), n);
      pre_cell y = x;
      if (i + 1 == n) {
        erase(y.top, ymax);
      } else {
        erase(y.neg[i + 1], ymax);
        erase(y.pos[i + 1], ymax);
      }
      y.pos[i] = set_diff(set_union(x.pos[i], h.border(ymax, sign::neg)), h.border(ymax, sign::pos));
      out.left = std::move(y);
    }
  } catch (const error& e) {
    if (e.kind() == errkind::not_glueable)
      throw error(errkind::axiom_violation, std::string("excision glue step failed: ") + e.what());
    throw;
  }

  if (strict_checks()) {
    cell_violation v;
    if (!is_cell(h, out.left, &v) || !is_cell(h, out.right, &v))
      throw error(errkind::axiom_violation, "excision produced a non-cell",
                  {{"layer", v.layer}, {"condition", v.condition}});
    auto rx = rank(x);
    if (!rank_lt(rank(out.left), rx) || !rank_lt(rank(out.right), rx))
      throw error(errkind::axiom_violation, "excision did not decrease rank");
  }
  return out;
}

bool comp_tree::operator==(const comp_tree& o) const {
  if (k != o.k) return false;
  switch (k) {
    case kind::gen:
      return g == o.g;
    case kind::ident:
      return dim == o.dim && *l == *o.l;
    case kind::comp:
      return dim == o.dim && *l == *o.l && *r == *o.r;
  }
  return false;
}

std::vector<gen_id> tree_leaves(const comp_tree& t, const omega_hypergraph& h, int dim) {
  std::vector<gen_id> out;
  switch (t.k) {
    case comp_tree::kind::gen:
      if (h.dim(t.g) == dim) out.push_back(t.g);
      break;
    case comp_tree::kind::ident: {
      auto sub = tree_leaves(*t.l, h, dim);
      out.insert(out.end(), sub.begin(), sub.end());
      break;
    }
    case comp_tree::kind::comp: {
      auto a = tree_leaves(*t.l, h, dim);
      auto b = tree_leaves(*t.r, h, dim);
      out.insert(out.end(), a.begin(), a.end());
      out.insert(out.end(), b.begin(), b.end());
      break;
    }
  }
  return out;
}

namespace {

pre_cell evaluate_at(const omega_hypergraph& h, const comp_tree& t, const std::string& path) {
  switch (t.k) {
    case comp_tree::kind::gen: {
      pre_cell a = atom(h, t.g);
      cell_violation v;
      if (!is_cell(h, a, &v))
        throw error(errkind::ill_typed, "atom of irrelevant generator " + h.name_of(t.g),
                    {{"path", path}, {"generator", h.name_of(t.g)}});
      return a;
    }
    case comp_tree::kind::ident: {
      pre_cell sub = evaluate_at(h, *t.l, path + "l");
      if (t.dim < sub.dim())
        throw error(errkind::ill_typed, "identity target below subterm dimension", {{"path", path}});
      return identity(sub, t.dim);
    }
    case comp_tree::kind::comp: {
      pre_cell a = evaluate_at(h, *t.l, path + "l");
      pre_cell b = evaluate_at(h, *t.r, path + "r");
      int i = t.dim;
      if (i >= a.dim() || i >= b.dim())
        throw error(errkind::ill_typed, "composition index not below both arguments",
                    {{"path", path}, {"i", i}});
      int n = std::max(a.dim(), b.dim());
      try {
        return compose(h, identity(a, n), identity(b, n), i);
      } catch (const error& e) {
        if (e.kind() == errkind::not_composable)
          throw error(errkind::ill_typed, e.what(), {{"path", path}, {"i", i}});
        throw;
      }
    }
  }
  throw error(errkind::ill_typed, "corrupt tree", {{"path", path}});
}

}  // namespace

pre_cell evaluate(const omega_hypergraph& h, const comp_tree& t) { return evaluate_at(h, t, ""); }

comp_tree decompose(const omega_hypergraph& h, const pre_cell& x) {
  if (x.dim() == 0) {
    if (x.top.size() != 1)
      throw error(errkind::not_a_cell, "0-dimensional input is not a singleton");
    return comp_tree::leaf(x.top.front());
  }
  if (x.top.empty()) return comp_tree::ident(decompose(h, boundary(x, sign::neg)), x.dim());
  gen_id u = x.top.front();
  if (x == atom(h, u)) return comp_tree::leaf(u);
  excision e = excise(h, x, u);
  return comp_tree::comp(e.i, decompose(h, e.left), decompose(h, e.right));
}

std::vector<gen_set> fork_free_subsets(const omega_hypergraph& h, int n, std::size_t cap) {
  const gen_set& gens = h.generators(n);
  std::vector<gen_set> out;
  if (n == 0) {
    for (gen_id g : gens) out.push_back({g});
    return out;
  }
  out.push_back({});
  // grow sets in id order; fork-freeness is pairwise so it prunes prefixes
  std::vector<std::pair<gen_set, size_t>> stack{{gen_set{}, 0}};
  while (!stack.empty()) {
    auto [cur, next] = stack.back();
    stack.pop_back();
    for (size_t k = next; k < gens.size(); ++k) {
      gen_id cand = gens[k];
      bool ok = true;
      for (gen_id c : cur) {
        if (!disjoint(h.border(c, sign::neg), h.border(cand, sign::neg)) ||
            !disjoint(h.border(c, sign::pos), h.border(cand, sign::pos))) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      gen_set ext = cur;
      insert(ext, cand);
      out.push_back(ext);
      if (out.size() > cap)
        throw error(errkind::cap_exceeded, "fork-free subset enumeration exceeded cap",
                    {{"count", out.size()}});
      stack.push_back({std::move(ext), k + 1});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<pre_cell> enumerate_cells(const omega_hypergraph& h, int n, std::size_t cap) {
  std::vector<pre_cell> out;
  if (n == 0) {
    for (gen_id g : h.generators(0)) out.push_back(atom(h, g));
  } else {
    std::vector<pre_cell> below = enumerate_cells(h, n - 1, cap);
    std::vector<gen_set> subsets = fork_free_subsets(h, n, cap * 4 + 16);
    for (const pre_cell& y : below) {
      for (const gen_set& s : subsets) {
        if (!subset(h.strict_border(s, sign::neg), y.top)) continue;
        gen_set spos = h.border(s, sign::pos);
        if (!disjoint(y.top, spos)) continue;
        pre_cell cand;
        cand.neg = y.neg;
        cand.pos = y.pos;
        cand.neg.push_back(y.top);
        cand.pos.push_back(set_diff(set_union(y.top, spos), h.border(s, sign::neg)));
        cand.top = s;
        if (!is_cell(h, cand)) continue;
        out.push_back(std::move(cand));
        if (out.size() > cap)
          throw error(errkind::cap_exceeded, "cell enumeration exceeded cap",
                      {{"count", out.size()}, {"dim", n}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  if (out.size() > cap)
    throw error(errkind::cap_exceeded, "cell enumeration exceeded cap",
                {{"count", out.size()}, {"dim", n}});
  return out;
}

}  // namespace ohg
