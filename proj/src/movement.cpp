#include "ohg/movement.hpp"

#include "ohg/errors.hpp"

namespace ohg {

bool moves(const omega_hypergraph& h, const gen_set& m, const gen_set& u, const gen_set& v) {
  gen_set mn = h.border(m, sign::neg);
  gen_set mp = h.border(m, sign::pos);
  return u == set_diff(set_union(v, mn), mp) && v == set_diff(set_union(u, mp), mn);
}

move_result move_forward(const omega_hypergraph& h, const gen_set& u, const gen_set& m) {
  gen_set mp = h.border(m, sign::pos);
  if (!subset(h.strict_border(m, sign::neg), u)) return {std::nullopt, "M^(-\\+) not contained in U"};
  if (!disjoint(u, mp)) return {std::nullopt, "U meets M^+"};
  return {set_diff(set_union(u, mp), h.border(m, sign::neg)), ""};
}

move_result move_backward(const omega_hypergraph& h, const gen_set& v, const gen_set& m) {
  gen_set mn = h.border(m, sign::neg);
  if (!subset(h.strict_border(m, sign::pos), v)) return {std::nullopt, "M^(+\\-) not contained in V"};
  if (!disjoint(v, mn)) return {std::nullopt, "V meets M^-"};
  return {set_diff(set_union(v, mn), h.border(m, sign::pos)), ""};
}

bool orthogonal(const omega_hypergraph& h, const gen_set& s, const gen_set& t) {
  return disjoint(h.border(s, sign::neg), h.border(t, sign::neg)) &&
         disjoint(h.border(s, sign::pos), h.border(t, sign::pos));
}

gen_set split_move(const omega_hypergraph& h, const gen_set& u, const gen_set& w, const gen_set& s,
                   const gen_set& t) {
  if (!moves(h, set_union(s, t), u, w))
    throw error(errkind::precondition_failed, "S u T does not move U to W");
  if (!subset(h.strict_border(s, sign::neg), u))
    throw error(errkind::precondition_failed, "S^(-\\+) not contained in U");
  if (!orthogonal(h, s, t)) throw error(errkind::precondition_failed, "S not orthogonal to T");
  gen_set v = set_diff(set_union(u, h.border(s, sign::pos)), h.border(s, sign::neg));
  // both conclusions re-checked: the hypotheses force them
  if (!moves(h, s, u, v) || !moves(h, t, v, w))
    throw error(errkind::precondition_failed, "split does not yield a movement");
  return v;
}

}  // namespace ohg
