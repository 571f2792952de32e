#include "ohg/freeterm.hpp"

#include "ohg/errors.hpp"

namespace ohg {

namespace {

bool has_threegen(const omega_hypergraph& h, const comp_tree& t) {
  switch (t.k) {
    case comp_tree::kind::gen:
      return h.dim(t.g) == 3;
    case comp_tree::kind::ident:
      return has_threegen(h, *t.l);
    case comp_tree::kind::comp:
      return has_threegen(h, *t.l) || has_threegen(h, *t.r);
  }
  return false;
}

void word_at(const omega_hypergraph& h, const comp_tree& t, const std::string& path,
             std::vector<gen_id>& out) {
  switch (t.k) {
    case comp_tree::kind::gen:
      if (h.dim(t.g) == 3) out.push_back(t.g);
      return;
    case comp_tree::kind::ident:
      return;  // identities contribute nothing
    case comp_tree::kind::comp:
      if (t.dim >= 2) {
        word_at(h, *t.l, path + "l", out);
        word_at(h, *t.r, path + "r", out);
        return;
      }
      // low-index composite: only a whiskering, one side may carry 3-cells
      {
        bool left = has_threegen(h, *t.l), right = has_threegen(h, *t.r);
        if (left && right)
          throw error(errkind::not_whiskering_shape,
                      "both arguments of a low-index composite carry 3-generators",
                      {{"path", path}, {"i", t.dim}});
        if (left) word_at(h, *t.l, path + "l", out);
        if (right) word_at(h, *t.r, path + "r", out);
      }
      return;
  }
}

}  // namespace

std::vector<gen_id> word(const omega_hypergraph& h, const comp_tree& t) {
  std::vector<gen_id> out;
  word_at(h, t, "", out);
  return out;
}

linext_enumerator::linext_enumerator(const omega_hypergraph& h, gen_set u, const tl_relation& lt)
    : u_(std::move(u)) {
  size_t n = u_.size();
  lt_.assign(n, std::vector<bool>(n, false));
  for (size_t i = 0; i < n; ++i) {
    if (lt.reaches(u_[i], u_[i]))
      throw error(errkind::cyclic_order, "relation is cyclic on the ground set",
                  {{"generator", h.name_of(u_[i])}});
    for (size_t j = 0; j < n; ++j) lt_[i][j] = lt.reaches(u_[i], u_[j]);
  }
  used_.assign(n, false);
}

std::optional<std::vector<gen_id>> linext_enumerator::next() {
  if (done_) return std::nullopt;
  size_t n = u_.size();
  if (n == 0) {  // the empty ordering is the unique extension
    started_ = done_ = true;
    return current_;
  }
  auto ready = [&](size_t k) {
    if (used_[k]) return false;
    for (size_t p = 0; p < n; ++p)
      if (!used_[p] && p != k && lt_[p][k]) return false;
    return true;
  };
  auto pop = [&]() {
    size_t k = choice_.back();
    choice_.pop_back();
    current_.pop_back();
    used_[k] = false;
    return k;
  };
  size_t start = 0;
  if (started_) {
    if (choice_.empty()) {  // the empty extension of an empty set
      done_ = true;
      return std::nullopt;
    }
    start = pop() + 1;
  }
  started_ = true;
  while (true) {
    bool pushed = false;
    for (size_t k = start; k < n; ++k) {
      if (!ready(k)) continue;
      used_[k] = true;
      current_.push_back(u_[k]);
      choice_.push_back(k);
      pushed = true;
      break;
    }
    if (pushed) {
      if (choice_.size() == n) return current_;
      start = 0;
      continue;
    }
    if (choice_.empty()) {
      done_ = true;
      return std::nullopt;
    }
    start = pop() + 1;
  }
}

std::vector<std::vector<gen_id>> linear_extensions(const omega_hypergraph& h, const gen_set& u,
                                                   const tl_relation& lt, std::size_t cap) {
  linext_enumerator en(h, u, lt);
  std::vector<std::vector<gen_id>> out;
  while (auto ext = en.next()) {
    out.push_back(*ext);
    if (out.size() > cap)
      throw error(errkind::cap_exceeded, "too many linear extensions", {{"count", out.size()}});
  }
  return out;
}

comp_tree reorder_decomposition(const omega_hypergraph& h, const pre_cell& x,
                                const std::vector<gen_id>& sigma) {
  int n = x.dim();
  gen_set listed(sigma.begin(), sigma.end());
  normalize(listed);
  if (listed != x.top || listed.size() != sigma.size())
    throw error(errkind::precondition_failed, "ordering is not a permutation of the top layer");
  tl_relation rel(h, x.top);
  for (size_t i = 0; i < sigma.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (rel.reaches(sigma[i], sigma[j]))
        throw error(errkind::precondition_failed, "ordering is not a linear extension of tl",
                    {{"earlier", h.name_of(sigma[j])}, {"later", h.name_of(sigma[i])}});
  if (sigma.empty() || x.top.size() <= 1) return decompose(h, x);

  // factor X along sigma: glue one top generator at a time onto the moving
  // source boundary, then decompose each single-generator factor
  pre_cell cursor = boundary(x, sign::neg);
  comp_tree out;
  bool first = true;
  for (gen_id g : sigma) {
    pre_cell factor = glue(h, cursor, {g});
    cursor = boundary(factor, sign::pos);
    comp_tree sub = decompose(h, factor);
    out = first ? std::move(sub) : comp_tree::comp(n - 1, std::move(out), std::move(sub));
    first = false;
  }
  return out;
}

}  // namespace ohg
