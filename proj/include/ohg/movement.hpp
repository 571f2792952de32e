#pragma once

#include <optional>
#include <string>

#include "ohg/hypergraph.hpp"

namespace ohg {

// M moves U to V:  U = (V u M^-) \ M^+  and  V = (U u M^+) \ M^-.
bool moves(const omega_hypergraph& h, const gen_set& m, const gen_set& u, const gen_set& v);

struct move_result {
  std::optional<gen_set> target;
  std::string violated;  // unmet hypothesis when target is absent
  explicit operator bool() const { return target.has_value(); }
};

// If M^(-\+) <= U and U n M^+ = 0, the unique V with "M moves U to V".
move_result move_forward(const omega_hypergraph& h, const gen_set& u, const gen_set& m);
// Dual: if M^(+\-) <= V and V n M^- = 0, the unique U with "M moves U to V".
move_result move_backward(const omega_hypergraph& h, const gen_set& v, const gen_set& m);

// S and T orthogonal: (S^- n T^-) u (S^+ n T^+) = 0.
bool orthogonal(const omega_hypergraph& h, const gen_set& s, const gen_set& t);

// Given S u T moves U to W, S^(-\+) <= U and S _|_ T, the midpoint V with
// S moves U to V and T moves V to W. Throws precondition_failed naming the
// failed hypothesis.
gen_set split_move(const omega_hypergraph& h, const gen_set& u, const gen_set& w, const gen_set& s,
                   const gen_set& t);

}  // namespace ohg
