#include "ohg/json_io.hpp"

#include "ohg/errors.hpp"

namespace ohg {

json hypergraph_to_json(const omega_hypergraph& h) {
  json gens = json::array();
  for (int n = 0; n <= h.top_dim(); ++n)
    for (gen_id x : h.generators(n)) {
      json g{{"id", h.name_of(x)}, {"dim", n}};
      if (n > 0) {
        g["src"] = names_of(h, h.border(x, sign::neg));
        g["tgt"] = names_of(h, h.border(x, sign::pos));
      }
      gens.push_back(std::move(g));
    }
  return {{"name", h.name()}, {"generators", std::move(gens)}};
}

omega_hypergraph hypergraph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("generators") || !j["generators"].is_array())
    throw error(errkind::parse_error, "hypergraph JSON needs a generators array");
  std::vector<generator_decl> decls;
  for (const auto& g : j["generators"]) {
    generator_decl d;
    if (!g.contains("id") || !g["id"].is_string() || !g.contains("dim") ||
        !g["dim"].is_number_integer())
      throw error(errkind::parse_error, "generator needs a string id and integer dim");
    d.name = g["id"].get<std::string>();
    d.dim = g["dim"].get<int>();
    bool has_borders = g.contains("src") || g.contains("tgt");
    if (d.dim == 0 && has_borders)
      throw error(errkind::parse_error, "0-generator " + d.name + " must not carry src/tgt");
    if (d.dim > 0 && (!g.contains("src") || !g.contains("tgt")))
      throw error(errkind::parse_error, "generator " + d.name + " needs src and tgt");
    if (d.dim > 0) {
      d.src = g["src"].get<std::vector<std::string>>();
      d.tgt = g["tgt"].get<std::vector<std::string>>();
    }
    decls.push_back(std::move(d));
  }
  return omega_hypergraph::build(j.value("name", std::string("unnamed")), std::move(decls));
}

namespace {

gen_set ids_from(const omega_hypergraph& h, const json& arr) {
  if (!arr.is_array()) throw error(errkind::parse_error, "expected an id array");
  gen_set s;
  for (const auto& v : arr) insert(s, h.id_of(v.get<std::string>()));
  return s;
}

void check_layer_dims(const omega_hypergraph& h, const gen_set& s, int expect) {
  for (gen_id x : s)
    if (h.dim(x) != expect)
      throw error(errkind::dimension_mismatch,
                  "generator " + h.name_of(x) + " not of layer dimension",
                  {{"expected", expect}, {"actual", h.dim(x)}});
}

}  // namespace

json cell_to_json(const omega_hypergraph& h, const pre_cell& x) {
  json neg = json::array(), pos = json::array();
  for (int i = 0; i < x.dim(); ++i) {
    neg.push_back(names_of(h, x.neg[i]));
    pos.push_back(names_of(h, x.pos[i]));
  }
  return {{"dim", x.dim()}, {"neg", std::move(neg)}, {"pos", std::move(pos)},
          {"top", names_of(h, x.top)}};
}

pre_cell cell_from_json(const omega_hypergraph& h, const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("neg") || !j.contains("pos") ||
      !j.contains("top"))
    throw error(errkind::parse_error, "cell JSON needs dim, neg, pos, top");
  int n = j["dim"].get<int>();
  if (static_cast<int>(j["neg"].size()) != n || static_cast<int>(j["pos"].size()) != n)
    throw error(errkind::parse_error, "cell JSON layer count does not match dim");
  pre_cell x;
  for (int i = 0; i < n; ++i) {
    x.neg.push_back(ids_from(h, j["neg"][i]));
    x.pos.push_back(ids_from(h, j["pos"][i]));
    check_layer_dims(h, x.neg[i], i);
    check_layer_dims(h, x.pos[i], i);
  }
  x.top = ids_from(h, j["top"]);
  check_layer_dims(h, x.top, n);
  return x;
}

json fgs_to_json(const omega_hypergraph& h, const fgs& x) {
  json layers = json::array();
  for (const auto& l : x.layers) layers.push_back(names_of(h, l));
  return {{"dim", x.dim()}, {"layers", std::move(layers)}};
}

fgs fgs_from_json(const omega_hypergraph& h, const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("layers"))
    throw error(errkind::parse_error, "fgs JSON needs dim and layers");
  int n = j["dim"].get<int>();
  if (static_cast<int>(j["layers"].size()) != n + 1)
    throw error(errkind::parse_error, "fgs JSON needs dim+1 layers");
  fgs x(n);
  for (int i = 0; i <= n; ++i) {
    x.layers[i] = ids_from(h, j["layers"][i]);
    check_layer_dims(h, x.layers[i], i);
  }
  return x;
}

json elem_to_json(const omega_hypergraph& h, const graded_elem& x) {
  json coeffs = json::object();
  for (const auto& [b, c] : x.coeffs) {
    if (c > coeff(INT64_MAX) || c < coeff(INT64_MIN))
      throw error(errkind::parse_error, "coefficient too large for JSON");
    coeffs[h.name_of(b)] = c.convert_to<std::int64_t>();
  }
  return {{"dim", x.dim}, {"coeffs", std::move(coeffs)}};
}

graded_elem elem_from_json(const omega_hypergraph& h, const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("coeffs"))
    throw error(errkind::parse_error, "element JSON needs dim and coeffs");
  graded_elem x;
  x.dim = j["dim"].get<int>();
  for (auto it = j["coeffs"].begin(); it != j["coeffs"].end(); ++it) {
    gen_id b = h.id_of(it.key());
    if (h.dim(b) != x.dim)
      throw error(errkind::dimension_mismatch, "coefficient on " + it.key() + " of wrong dimension");
    x.add(b, coeff(it.value().get<std::int64_t>()));
  }
  return x;
}

json adc_cell_to_json(const omega_hypergraph& h, const adc_cell& x) {
  json neg = json::array(), pos = json::array();
  for (int i = 0; i < x.dim(); ++i) {
    neg.push_back(elem_to_json(h, x.neg[i]));
    pos.push_back(elem_to_json(h, x.pos[i]));
  }
  return {{"dim", x.dim()}, {"neg", std::move(neg)}, {"pos", std::move(pos)},
          {"top", elem_to_json(h, x.top)}};
}

json tree_to_json(const omega_hypergraph& h, const comp_tree& t, bool term_style) {
  switch (t.k) {
    case comp_tree::kind::gen:
      return {{term_style ? "gen" : "atom", h.name_of(t.g)}};
    case comp_tree::kind::ident:
      return {{"id", tree_to_json(h, *t.l, term_style)}, {"dim", t.dim}};
    case comp_tree::kind::comp:
      return {{"comp", t.dim},
              {"l", tree_to_json(h, *t.l, term_style)},
              {"r", tree_to_json(h, *t.r, term_style)}};
  }
  throw error(errkind::parse_error, "corrupt tree");
}

comp_tree tree_from_json(const omega_hypergraph& h, const json& j) {
  if (!j.is_object()) throw error(errkind::parse_error, "tree JSON must be an object");
  if (j.contains("atom")) return comp_tree::leaf(h.id_of(j["atom"].get<std::string>()));
  if (j.contains("gen")) return comp_tree::leaf(h.id_of(j["gen"].get<std::string>()));
  if (j.contains("id")) return comp_tree::ident(tree_from_json(h, j["id"]), j.at("dim").get<int>());
  if (j.contains("comp"))
    return comp_tree::comp(j["comp"].get<int>(), tree_from_json(h, j.at("l")),
                           tree_from_json(h, j.at("r")));
  throw error(errkind::parse_error, "tree JSON needs atom/gen, id, or comp");
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace ohg
