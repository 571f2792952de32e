#pragma once

#include <string>

#include <json.hpp>

#include "ohg/cells.hpp"
#include "ohg/steiner.hpp"

namespace ohg {

using nlohmann::json;

// Hypergraph format: { "name": str, "generators": [ {"id", "dim", "src", "tgt"} ] }.
// src/tgt are present exactly when dim > 0.
json hypergraph_to_json(const omega_hypergraph& h);
omega_hypergraph hypergraph_from_json(const json& j);

// Cell: { "dim": n, "neg": [[ids]...], "pos": [[ids]...], "top": [ids] }.
json cell_to_json(const omega_hypergraph& h, const pre_cell& x);
pre_cell cell_from_json(const omega_hypergraph& h, const json& j);

// Fgs: { "dim": n, "layers": [[ids]...] } with n+1 layers.
json fgs_to_json(const omega_hypergraph& h, const fgs& x);
fgs fgs_from_json(const omega_hypergraph& h, const json& j);

// Monoid/group element: { "dim": n, "coeffs": {id: int} }.
json elem_to_json(const omega_hypergraph& h, const graded_elem& x);
graded_elem elem_from_json(const omega_hypergraph& h, const json& j);

json adc_cell_to_json(const omega_hypergraph& h, const adc_cell& x);

// Composition tree: {"atom": id} | {"id": t, "dim": m} | {"comp": i, "l": t, "r": t}.
// Terms use "gen" instead of "atom" for leaves.
json tree_to_json(const omega_hypergraph& h, const comp_tree& t, bool term_style = false);
comp_tree tree_from_json(const omega_hypergraph& h, const json& j);

// Canonical byte output: sorted keys, two-space indent, trailing newline.
std::string canonical_dump(const json& j);

}  // namespace ohg
