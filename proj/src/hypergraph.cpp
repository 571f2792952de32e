#include "ohg/hypergraph.hpp"

#include <algorithm>
#include <deque>
#include <tuple>

#include "ohg/errors.hpp"

namespace ohg {

std::vector<border_step> parse_border_path(const std::string& path) {
  std::vector<border_step> steps;
  size_t i = 0;
  while (i < path.size()) {
    unsigned char c = path[i];
    if (c == '-') {
      steps.push_back({sign::neg, false});
      i += 1;
    } else if (c == '+') {
      steps.push_back({sign::pos, false});
      i += 1;
    } else if (c == '<') {
      steps.push_back({sign::neg, true});
      i += 1;
    } else if (c == '>') {
      steps.push_back({sign::pos, true});
      i += 1;
    } else if (path.compare(i, 3, "\xe2\x88\x93") == 0) {  // U+2213 minus-plus
      steps.push_back({sign::neg, true});
      i += 3;
    } else if (path.compare(i, 2, "\xc2\xb1") == 0) {  // U+00B1 plus-minus
      steps.push_back({sign::pos, true});
      i += 2;
    } else if (path.compare(i, 3, "\xe2\x88\x92") == 0) {  // U+2212 minus sign
      steps.push_back({sign::neg, false});
      i += 3;
    } else {
      throw error(errkind::parse_error, "bad sign in border path: " + path);
    }
  }
  if (steps.empty()) throw error(errkind::parse_error, "empty border path");
  for (size_t k = 0; k + 1 < steps.size(); ++k)
    if (steps[k].strict)
      throw error(errkind::parse_error, "strict border step allowed only as final step");
  return steps;
}

omega_hypergraph omega_hypergraph::build(std::string name, std::vector<generator_decl> decls) {
  std::sort(decls.begin(), decls.end(), [](const generator_decl& a, const generator_decl& b) {
    return std::tie(a.dim, a.name) < std::tie(b.dim, b.name);
  });

  omega_hypergraph h;
  h.name_ = std::move(name);
  int top = -1;
  for (const auto& d : decls) {
    if (d.dim < 0) throw error(errkind::dimension_mismatch, "negative dimension for " + d.name);
    if (d.name.empty()) throw error(errkind::parse_error, "empty generator name");
    if (h.by_name_.count(d.name))
      throw error(errkind::duplicate_id, "duplicate generator id: " + d.name, {{"id", d.name}});
    gen_id id = static_cast<gen_id>(h.gens_.size());
    h.by_name_.emplace(d.name, id);
    h.gens_.push_back({d.name, d.dim, {}, {}});
    top = std::max(top, d.dim);
  }
  h.by_dim_.assign(top + 1, {});
  for (gen_id id = 0; id < static_cast<gen_id>(h.gens_.size()); ++id)
    h.by_dim_[h.gens_[id].dim].push_back(id);

  for (const auto& d : decls) {
    gen_id id = h.by_name_.at(d.name);
    auto resolve = [&](const std::vector<std::string>& names, gen_set& out, const char* side) {
      for (const auto& n : names) {
        auto it = h.by_name_.find(n);
        if (it == h.by_name_.end())
          throw error(errkind::dangling_border, "generator " + d.name + " has undeclared " + side + " " + n,
                      {{"generator", d.name}, {"missing", n}});
        if (h.gens_[it->second].dim != d.dim - 1)
          throw error(errkind::dimension_mismatch,
                      "border " + n + " of " + d.name + " is not one dimension down",
                      {{"generator", d.name}, {"border", n}});
        insert(out, it->second);
      }
    };
    resolve(d.src, h.gens_[id].src, "src");
    resolve(d.tgt, h.gens_[id].tgt, "tgt");
    if (d.dim == 0 && (!d.src.empty() || !d.tgt.empty()))
      throw error(errkind::dimension_mismatch, "0-generator " + d.name + " has borders");
  }
  h.validate();
  return h;
}

void omega_hypergraph::validate() const {
  // build() already resolves names and checks grading; re-assert the
  // dimension invariant on resolved ids.
  for (gen_id x = 0; x < static_cast<gen_id>(gens_.size()); ++x) {
    for (sign e : {sign::neg, sign::pos})
      for (gen_id b : border(x, e))
        if (gens_[b].dim != gens_[x].dim - 1)
          throw error(errkind::dimension_mismatch, "border dimension mismatch at " + gens_[x].name);
  }
}

gen_id omega_hypergraph::id_of(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end())
    throw error(errkind::unknown_generator, "unknown generator: " + name, {{"id", name}});
  return it->second;
}

std::optional<gen_id> omega_hypergraph::find(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

const gen_set& omega_hypergraph::generators(int dim) const {
  static const gen_set empty;
  if (dim < 0 || dim > top_dim()) return empty;
  return by_dim_[dim];
}

gen_set omega_hypergraph::border(const gen_set& u, sign e) const {
  gen_set out;
  for (gen_id x : u) out = set_union(out, border(x, e));
  return out;
}

gen_set omega_hypergraph::strict_border(const gen_set& u, sign e) const {
  return set_diff(border(u, e), border(u, opposite(e)));
}

gen_set omega_hypergraph::border_path(int n, gen_set u, const std::vector<border_step>& path) const {
  if (static_cast<int>(path.size()) > n)
    throw error(errkind::dimension_underflow,
                "border path longer than set dimension",
                {{"dim", n}, {"path_length", path.size()}});
  for (const auto& st : path)
    u = st.strict ? strict_border(u, st.s) : border(u, st.s);
  return u;
}

bool omega_hypergraph::fork_free(int n, const gen_set& u) const {
  return !fork_violation(n, u).has_value();
}

std::optional<std::tuple<gen_id, gen_id, sign>> omega_hypergraph::fork_violation(int n, const gen_set& u) const {
  if (n == 0) {
    if (u.size() == 1) return std::nullopt;
    // dimension 0 demands a singleton; report the first offending pair (or a
    // sentinel pair for the empty set).
    gen_id a = u.empty() ? -1 : u[0];
    gen_id b = u.size() > 1 ? u[1] : -1;
    return std::make_tuple(a, b, sign::neg);
  }
  for (size_t i = 0; i < u.size(); ++i)
    for (size_t j = i + 1; j < u.size(); ++j)
      for (sign e : {sign::neg, sign::pos})
        if (!disjoint(border(u[i], e), border(u[j], e))) return std::make_tuple(u[i], u[j], e);
  return std::nullopt;
}

fgs omega_hypergraph::closure(const fgs& s) const {
  fgs out = s;
  for (int i = out.dim(); i >= 1; --i) {
    for (gen_id x : out.layers[i]) {
      out.layers[i - 1] = set_union(out.layers[i - 1], border(x, sign::neg));
      out.layers[i - 1] = set_union(out.layers[i - 1], border(x, sign::pos));
    }
  }
  return out;
}

gen_set omega_hypergraph::closure(const gen_set& s) const {
  int d = 0;
  for (gen_id x : s) d = std::max(d, dim(x));
  fgs f(d);
  for (gen_id x : s) insert(f.layers[dim(x)], x);
  return closure(f).flatten();
}

bool omega_hypergraph::is_closed(const fgs& s) const { return closure(s) == s; }

omega_hypergraph::atom_table omega_hypergraph::atom_layers(gen_id x) const {
  int n = dim(x);
  atom_table t;
  t.neg.resize(n + 1);
  t.pos.resize(n + 1);
  t.neg[n] = t.pos[n] = {x};
  for (int j = n - 1; j >= 0; --j) {
    t.neg[j] = strict_border(t.neg[j + 1], sign::neg);
    t.pos[j] = strict_border(t.pos[j + 1], sign::pos);
  }
  return t;
}

// --- tl ---

namespace {

void warshall(std::vector<std::vector<bool>>& r) {
  size_t n = r.size();
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i)
      if (r[i][k])
        for (size_t j = 0; j < n; ++j)
          if (r[k][j]) r[i][j] = true;
}

std::vector<gen_id> bfs_chain(const gen_set& ground, const std::vector<std::vector<bool>>& step, int from,
                              int to) {
  std::vector<int> prev(ground.size(), -2);
  std::deque<int> q;
  for (size_t j = 0; j < ground.size(); ++j)
    if (step[from][j] && prev[j] == -2) {
      prev[j] = from;
      q.push_back(static_cast<int>(j));
    }
  while (!q.empty()) {
    int v = q.front();
    q.pop_front();
    if (v == to) break;
    for (size_t j = 0; j < ground.size(); ++j)
      if (step[v][j] && prev[j] == -2) {
        prev[j] = v;
        q.push_back(static_cast<int>(j));
      }
  }
  if (prev[to] == -2) return {};
  std::vector<int> idx{to};
  int cur = to;
  while (cur != from || idx.size() == 1) {
    cur = prev[cur];
    idx.push_back(cur);
    if (cur == from) break;
  }
  std::vector<gen_id> out;
  for (auto it = idx.rbegin(); it != idx.rend(); ++it) out.push_back(ground[*it]);
  return out;
}

}  // namespace

tl_relation::tl_relation(const omega_hypergraph& h, const gen_set& u) : ground_(u) {
  size_t n = ground_.size();
  step_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (!disjoint(h.border(ground_[i], sign::pos), h.border(ground_[j], sign::neg))) step_[i][j] = true;
  reach_ = step_;
  warshall(reach_);
}

int tl_relation::index(gen_id x) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
  if (it == ground_.end() || *it != x) return -1;
  return static_cast<int>(it - ground_.begin());
}

bool tl_relation::reaches(gen_id x, gen_id y) const {
  int i = index(x), j = index(y);
  return i >= 0 && j >= 0 && reach_[i][j];
}

bool tl_relation::set_reaches(const gen_set& v, const gen_set& w) const {
  for (gen_id x : v)
    for (gen_id y : w)
      if (reaches(x, y)) return true;
  return false;
}

std::vector<gen_id> tl_relation::chain(gen_id x, gen_id y) const {
  int i = index(x), j = index(y);
  if (i < 0 || j < 0 || !reach_[i][j]) return {};
  return bfs_chain(ground_, step_, i, j);
}

tl_relation tl(const omega_hypergraph& h, int n) { return tl_relation(h, h.generators(n)); }

std::optional<std::vector<gen_id>> acyclicity_witness(const omega_hypergraph& h) {
  for (int n = 1; n <= h.top_dim(); ++n) {
    tl_relation r = tl(h, n);
    for (gen_id x : h.generators(n))
      if (r.reaches(x, x)) return r.chain(x, x);
  }
  return std::nullopt;
}

bool is_segment(const omega_hypergraph& h, const gen_set& u, const gen_set& v) {
  tl_relation r(h, u);
  for (gen_id x : v)
    for (gen_id z : v)
      for (gen_id y : set_diff(u, v))
        if (r.reaches(x, y) && r.reaches(y, z)) return false;
  return true;
}

bool is_initial(const omega_hypergraph& h, const gen_set& u, const gen_set& v) {
  tl_relation r(h, u);
  for (gen_id x : u)
    for (gen_id y : v)
      if (r.reaches(x, y) && !contains(v, x)) return false;
  return true;
}

bool is_terminal(const omega_hypergraph& h, const gen_set& u, const gen_set& v) {
  tl_relation r(h, u);
  for (gen_id x : u)
    for (gen_id y : v)
      if (r.reaches(y, x) && !contains(v, x)) return false;
  return true;
}

// --- jtl ---

jtl_relation::jtl_relation(const omega_hypergraph& h, int n) : ground_(h.generators(n)) {
  size_t k = ground_.size();
  step_.assign(k, std::vector<bool>(k, false));
  for (gen_id z : h.generators(n + 1))
    for (gen_id x : h.border(z, sign::neg))
      for (gen_id y : h.border(z, sign::pos)) step_[index(x)][index(y)] = true;
  reach_ = step_;
  warshall(reach_);
  for (size_t i = 0; i < k; ++i) reach_[i][i] = true;  // reflexive closure
}

int jtl_relation::index(gen_id x) const {
  auto it = std::lower_bound(ground_.begin(), ground_.end(), x);
  return static_cast<int>(it - ground_.begin());
}

bool jtl_relation::reaches(gen_id x, gen_id y) const { return reach_[index(x)][index(y)]; }

bool jtl_relation::set_reaches(const gen_set& s, const gen_set& t) const {
  for (gen_id x : s)
    for (gen_id y : t)
      if (reaches(x, y)) return true;
  return false;
}

std::vector<gen_id> jtl_relation::chain(const gen_set& s, const gen_set& t) const {
  if (!disjoint(s, t)) return {set_inter(s, t)[0]};
  for (gen_id x : s)
    for (gen_id y : t)
      if (reaches(x, y)) return bfs_chain(ground_, step_, index(x), index(y));
  return {};
}

jtl_relation jtl(const omega_hypergraph& h, int n) { return jtl_relation(h, n); }

bool jtl_between(const omega_hypergraph& h, int n, const gen_set& s, const gen_set& t) {
  return jtl(h, n).set_reaches(s, t);
}

std::vector<std::string> names_of(const omega_hypergraph& h, const gen_set& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (gen_id x : s) out.push_back(h.name_of(x));
  return out;
}

}  // namespace ohg
