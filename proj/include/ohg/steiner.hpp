#pragma once

#include <map>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

#include "ohg/axioms.hpp"
#include "ohg/hypergraph.hpp"

namespace ohg {

// Coefficients are arbitrary-precision so repeated sums in randomized tests
// can never overflow.
using coeff = boost::multiprecision::cpp_int;

// Finitely supported basis -> coefficient map at a fixed dimension. Monoid
// elements keep coefficients > 0, group elements keep them != 0; zero entries
// are never stored.
struct graded_elem {
  int dim = 0;
  std::map<gen_id, coeff> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  coeff at(gen_id b) const {
    auto it = coeffs.find(b);
    return it == coeffs.end() ? coeff(0) : it->second;
  }
  void add(gen_id b, const coeff& c);
  bool operator==(const graded_elem&) const = default;
  bool operator<(const graded_elem& o) const {
    return std::tie(dim, coeffs) < std::tie(o.dim, o.coeffs);
  }
};

using monoid_elem = graded_elem;  // all coefficients >= 0
using group_elem = graded_elem;   // signed coefficients

group_elem add(const group_elem& a, const group_elem& b);
group_elem sub(const group_elem& a, const group_elem& b);
monoid_elem meet(const monoid_elem& a, const monoid_elem& b);
bool leq(const monoid_elem& a, const monoid_elem& b);  // coefficient-wise

// Boundary of the hypergraph-derived pre-adc: linear extension of
// d(x) = m(x^+) - m(x^-). Augmentation sends every 0-generator to 1.
group_elem boundary(const omega_hypergraph& h, const group_elem& g);
coeff augmentation(const omega_hypergraph& h, const group_elem& g);

// g = pos - neg with meet(neg, pos) = 0.
std::pair<monoid_elem, monoid_elem> split(const group_elem& g);

// x^(-\+) and x^(+\-) of a monoid element: the split of its boundary.
monoid_elem strict_neg(const omega_hypergraph& h, const monoid_elem& x);
monoid_elem strict_pos(const omega_hypergraph& h, const monoid_elem& x);
// x^- and x^+: coefficient-weighted sums of b^(-\+) / b^(+\-) over the support.
monoid_elem border_neg(const omega_hypergraph& h, const monoid_elem& x);
monoid_elem border_pos(const omega_hypergraph& h, const monoid_elem& x);

bool monoid_fork_free(const omega_hypergraph& h, const monoid_elem& s);
bool radical(const monoid_elem& s);

monoid_elem s2m(const gen_set& s, int dim);
gen_set m2s(const monoid_elem& u);

// The pre-adc is an adc: d . d = 0 and aug . d_0 = 0 on all generators.
bool is_adc(const omega_hypergraph& h);

struct adc_cell {
  std::vector<monoid_elem> neg, pos;
  monoid_elem top;

  int dim() const { return static_cast<int>(neg.size()); }
  const monoid_elem& layer(int i, sign e) const {
    if (i == dim()) return top;
    return e == sign::neg ? neg[i] : pos[i];
  }
  bool operator==(const adc_cell&) const = default;
};

bool is_adc_cell(const omega_hypergraph& h, const adc_cell& x);

adc_cell adc_atom(const omega_hypergraph& h, gen_id x);

// The globular operations on adc cells: truncation, additive composition,
// identity with zero top.
adc_cell adc_boundary(const adc_cell& x, sign e, int k);
adc_cell adc_compose(const omega_hypergraph& h, const adc_cell& x, const adc_cell& y, int i);
adc_cell adc_identity(const adc_cell& x, int m);

adc_cell c2st(const pre_cell& x, const omega_hypergraph& h);
pre_cell st2c(const adc_cell& x, const omega_hypergraph& h);

// The relation <_i: smallest transitive relation with x <_i y whenever
// <x>_{i,+} meets <y>_{i,-} (basis elements of dimension > i).
class adc_order {
 public:
  adc_order(const omega_hypergraph& h, int i);
  bool less(gen_id x, gen_id y) const;
  // a cycle x <_1 ... <_1 x through one-step edges, if any
  std::optional<std::vector<gen_id>> cycle() const;

 private:
  gen_set ground_;
  std::vector<std::vector<bool>> step_, reach_;
  int index(gen_id x) const;
};

// Unitality and loop-freeness of the canonical basis, plus the adc equations.
axiom_report check_steiner(const omega_hypergraph& h);

}  // namespace ohg
