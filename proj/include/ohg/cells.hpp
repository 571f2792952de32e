#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ohg/movement.hpp"

namespace ohg {

// Tuple (X_{0,-}, X_{0,+}, ..., X_{n-1,-}, X_{n-1,+}, X_n). By convention
// layer(n, e) is the top for either sign.
struct pre_cell {
  std::vector<gen_set> neg, pos;  // size n
  gen_set top;

  pre_cell() = default;
  pre_cell(std::vector<gen_set> n, std::vector<gen_set> p, gen_set t)
      : neg(std::move(n)), pos(std::move(p)), top(std::move(t)) {}

  int dim() const { return static_cast<int>(neg.size()); }
  const gen_set& layer(int i, sign e) const {
    if (i == dim()) return top;
    return e == sign::neg ? neg[i] : pos[i];
  }
  gen_set& layer(int i, sign e) {
    if (i == dim()) return top;
    return e == sign::neg ? neg[i] : pos[i];
  }
  bool operator==(const pre_cell&) const = default;
  bool operator<(const pre_cell& o) const;  // canonical order, for dedup/sorting
};

struct cell_violation {
  int layer = -1;
  sign s = sign::neg;
  std::string condition;  // "fork_free" or "movement"
};

bool is_cell(const omega_hypergraph& h, const pre_cell& x, cell_violation* why = nullptr);

// Truncation keeping X_{k,eps} as the top layer; k <= dim.
pre_cell boundary(const pre_cell& x, sign e, int k);
inline pre_cell boundary(const pre_cell& x, sign e) { return boundary(x, e, x.dim() - 1); }

bool composable(const pre_cell& x, const pre_cell& y, int i);

// The i-composite; throws not_composable when boundaries mismatch. Both
// arguments must have the same dimension (pad with identities first).
pre_cell compose(const omega_hypergraph& h, const pre_cell& x, const pre_cell& y, int i);

// Iterated identity up to dimension m >= dim(x).
pre_cell identity(const pre_cell& x, int m);

pre_cell atom(const omega_hypergraph& h, gen_id x);
bool is_relevant(const omega_hypergraph& h, gen_id x);

// Gluing of a fork-free G <= P_{n+1} with G^(-\+) <= X_n on top of the n-cell
// X; activate returns its target n-cell. Throws not_glueable when the side
// conditions on G fail. With strict checks enabled the theorem conclusions
// (result cells, G^+ n X_n = 0) are re-verified.
pre_cell glue(const omega_hypergraph& h, const pre_cell& x, const gen_set& g);
pre_cell activate(const omega_hypergraph& h, const pre_cell& x, const gen_set& g);
pre_cell dual_glue(const omega_hypergraph& h, const pre_cell& x, const gen_set& g);
pre_cell dual_activate(const omega_hypergraph& h, const pre_cell& x, const gen_set& g);

// rank(X) = (|X_{1,-} n X_{1,+}|, ..., |X_{n-1,-} n X_{n-1,+}|, |X_n|),
// ordered lexicographically with the most significant coordinate last.
std::vector<std::size_t> rank(const pre_cell& x);
bool rank_lt(const std::vector<std::size_t>& r, const std::vector<std::size_t>& s);

// Excision of extremals: X = left *_i right with both ranks strictly below
// rank(X). Throws is_atom when X = <u>.
struct excision {
  int i;
  pre_cell left, right;
};
excision excise(const omega_hypergraph& h, const pre_cell& x, gen_id u);

// Formal composite tree; shared between decompositions and free terms.
struct comp_tree {
  enum class kind { gen, ident, comp };
  kind k = kind::gen;
  gen_id g = -1;                 // gen
  int dim = 0;                   // ident: target dimension; comp: index i
  std::shared_ptr<comp_tree> l, r;  // ident uses l only

  static comp_tree leaf(gen_id x) { return {kind::gen, x, 0, nullptr, nullptr}; }
  static comp_tree ident(comp_tree sub, int m) {
    return {kind::ident, -1, m, std::make_shared<comp_tree>(std::move(sub)), nullptr};
  }
  static comp_tree comp(int i, comp_tree a, comp_tree b) {
    return {kind::comp, -1, i, std::make_shared<comp_tree>(std::move(a)),
            std::make_shared<comp_tree>(std::move(b))};
  }
  bool operator==(const comp_tree& o) const;
};

// Leaves of the given dimension, left to right.
std::vector<gen_id> tree_leaves(const comp_tree& t, const omega_hypergraph& h, int dim);

// Evaluates a tree into Cell(P). Lower-dimensional arguments of a composite
// are padded with identities; failures raise ill_typed with the node path.
pre_cell evaluate(const omega_hypergraph& h, const comp_tree& t);

// Decomposition into atoms: identities are peeled first, then extremals are
// excised with u = smallest top generator. evaluate(decompose(X)) == X.
comp_tree decompose(const omega_hypergraph& h, const pre_cell& x);

// All n-cells (sorted canonically). Throws cap_exceeded past cap.
std::vector<pre_cell> enumerate_cells(const omega_hypergraph& h, int n, std::size_t cap);

// All fork-free subsets of P_n (helper for enumeration; includes the empty
// set for n > 0).
std::vector<gen_set> fork_free_subsets(const omega_hypergraph& h, int n, std::size_t cap);

// Toggles the re-verification of theorem conclusions inside glue/compose.
void set_strict_checks(bool on);
bool strict_checks();

}  // namespace ohg
