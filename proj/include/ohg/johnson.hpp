#pragma once

#include <map>
#include <optional>

#include "ohg/axioms.hpp"
#include "ohg/hypergraph.hpp"

namespace ohg {

// The relation tables B (beginning) and E (end). B^n_n is the identity,
// B^n_{n-1}(x) = x^-, and lower rows follow the two-sided composite
// intersection recursion, descending in m. Tables are materialized; fixture
// sizes are tiny.
class pasting_relations {
 public:
  explicit pasting_relations(const omega_hypergraph& h);

  // B^n_m(x) with n = dim(x); empty for m > n.
  const gen_set& b(gen_id x, int m) const;
  const gen_set& e(gen_id x, int m) const;

  // B(x) = union over m <= dim(x); always contains x.
  gen_set b_all(gen_id x) const;
  gen_set e_all(gen_id x) const;
  gen_set b_all(const gen_set& xs) const;
  gen_set e_all(const gen_set& xs) const;

 private:
  std::vector<std::vector<gen_set>> b_, e_;  // [gen][m]
};

pasting_relations derive_relations(const omega_hypergraph& h);

struct direct_loop {
  // first criterion: x tl y with E(y) n B(x) nonempty; second: x == y and
  // E(x) n B(x) larger than {x}
  gen_id x, y;
  gen_id shared;
};

std::optional<direct_loop> has_direct_loop(const omega_hypergraph& h, const pasting_relations& rel);

// Source/target of an n-fgs: X \ E^n(X) and X \ B^n(X), re-graded to n-1.
fgs fgs_src(const omega_hypergraph& h, const pasting_relations& rel, const fgs& x);
fgs fgs_tgt(const omega_hypergraph& h, const pasting_relations& rel, const fgs& x);
fgs fgs_boundary(const omega_hypergraph& h, const pasting_relations& rel, const fgs& x, sign e, int k);

bool is_wfs(const omega_hypergraph& h, const pasting_relations& rel, const fgs& x);

fgs wfs_compose(const omega_hypergraph& h, const pasting_relations& rel, const fgs& x, const fgs& y,
                int i);
fgs wfs_identity(const fgs& x);

// All well-formed sets of dimension n, via the cell enumerator and the
// closed-set translation (one enumerator, two views). Throws cap_exceeded.
std::vector<fgs> enumerate_wfs(const omega_hypergraph& h, const pasting_relations& rel, int n,
                               std::size_t cap);

axiom_report check_johnson(const omega_hypergraph& h, std::size_t cap);

}  // namespace ohg
