#pragma once

#include <vector>

#include "ohg/cells.hpp"

namespace ohg {

// Formal composites over generators are comp_tree values with gen leaves;
// eval_cell pads lower-dimensional arguments with identities.
inline pre_cell eval_cell(const omega_hypergraph& h, const comp_tree& t) { return evaluate(h, t); }

// The word of a 3-dimensional term in the free monoid on its 3-generators:
// *_2 concatenates, identities vanish, and a *_0 or *_1 composite must be a
// whiskering (at most one argument contains 3-generators). Raises
// not_whiskering_shape otherwise.
std::vector<gen_id> word(const omega_hypergraph& h, const comp_tree& t);

// All linear extensions of the restriction of "lt" to u, emitted in
// lexicographic order by interned id. Throws cyclic_order when the relation
// is cyclic on u.
class linext_enumerator {
 public:
  linext_enumerator(const omega_hypergraph& h, gen_set u, const tl_relation& lt);
  std::optional<std::vector<gen_id>> next();

 private:
  gen_set u_;
  std::vector<std::vector<bool>> lt_;
  std::vector<gen_id> current_;
  std::vector<bool> used_;
  std::vector<size_t> choice_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<std::vector<gen_id>> linear_extensions(const omega_hypergraph& h, const gen_set& u,
                                                   const tl_relation& lt, std::size_t cap = SIZE_MAX);

// A decomposition of X whose top-dimension leaf order is exactly sigma, a
// linear extension of (X_n, tl). evaluate() of the result equals X.
comp_tree reorder_decomposition(const omega_hypergraph& h, const pre_cell& x,
                                const std::vector<gen_id>& sigma);

}  // namespace ohg
