#pragma once

#include "ohg/cells.hpp"

namespace ohg {

// Maximal elements of an fgs: nothing else in the set sits strictly above
// them for the closure relation.
gen_set maximal_elements(const omega_hypergraph& h, const gen_set& s);
fgs maximal_of(const omega_hypergraph& h, const fgs& x);
bool is_maximal_fgs(const omega_hypergraph& h, const fgs& x);

// The union of all layers of a pre-cell, as an fgs of the same dimension.
fgs cell_support(const pre_cell& x);

// The six translations between tuple cells, maximal fgs and closed fgs.
fgs ctoprinc(const omega_hypergraph& h, const pre_cell& x);    // max(U X)
pre_cell princtoc(const omega_hypergraph& h, const fgs& x);    // upward reconstruction
fgs princtocl(const omega_hypergraph& h, const fgs& x);        // closure
fgs cltoprinc(const omega_hypergraph& h, const fgs& x);        // max
fgs ctocl(const omega_hypergraph& h, const pre_cell& x);       // closure of the support
pre_cell cltoc(const omega_hypergraph& h, const fgs& x);       // princtoc . cltoprinc

// Sources and targets on maximal / closed fgs (dimension drops by one).
fgs prsrc(const omega_hypergraph& h, const fgs& x);
fgs prtgt(const omega_hypergraph& h, const fgs& x);
fgs clsrc(const omega_hypergraph& h, const fgs& x);
fgs cltgt(const omega_hypergraph& h, const fgs& x);
fgs pr_boundary(const omega_hypergraph& h, const fgs& x, sign e, int k);
fgs cl_boundary(const omega_hypergraph& h, const fgs& x, sign e, int k);

bool is_mwf(const omega_hypergraph& h, const fgs& x);
bool is_clwf(const omega_hypergraph& h, const fgs& x);

fgs comppr(const omega_hypergraph& h, const fgs& x, const fgs& y, int i);
fgs compcl(const omega_hypergraph& h, const fgs& x, const fgs& y, int i);
fgs fgs_identity_alt(const fgs& x);

}  // namespace ohg
