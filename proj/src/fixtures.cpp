#include "ohg/fixtures.hpp"

#include <functional>

#include "ohg/errors.hpp"

namespace ohg {

namespace {

struct builder {
  std::vector<generator_decl> decls;
  void g0(std::initializer_list<const char*> names) {
    for (const char* n : names) decls.push_back({n, 0, {}, {}});
  }
  void g(const char* name, int dim, std::vector<std::string> src, std::vector<std::string> tgt) {
    decls.push_back({name, dim, std::move(src), std::move(tgt)});
  }
};

comp_tree gen(const omega_hypergraph& h, const char* name) { return comp_tree::leaf(h.id_of(name)); }

comp_tree cmp(int i, comp_tree a, comp_tree b) { return comp_tree::comp(i, std::move(a), std::move(b)); }

gen_set ids(const omega_hypergraph& h, std::initializer_list<const char*> names) {
  gen_set s;
  for (const char* n : names) insert(s, h.id_of(n));
  return s;
}

pre_cell cell_of(const omega_hypergraph& h, std::vector<std::initializer_list<const char*>> neg,
                 std::vector<std::initializer_list<const char*>> pos,
                 std::initializer_list<const char*> top) {
  pre_cell c;
  for (auto& l : neg) c.neg.push_back(ids(h, l));
  for (auto& l : pos) c.pos.push_back(ids(h, l));
  c.top = ids(h, top);
  return c;
}

fixture make(const std::string& name) {
  builder b;
  fixture f;
  f.name = name;

  if (name == "ex_ppc") {
    b.g0({"x", "y", "y'", "z"});
    b.g("a", 1, {"x"}, {"y"});
    b.g("b", 1, {"x"}, {"y'"});
    b.g("c", 1, {"y"}, {"z"});
    b.g("d", 1, {"y'"}, {"z"});
    b.g("alpha", 2, {"a", "c"}, {"b", "d"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", true}, {"ps", true}, {"adc", true}, {"gpc", true}};
  } else if (name == "two_pd") {
    b.g0({"u", "v", "w", "x", "y"});
    b.g("a", 1, {"u"}, {"v"});
    b.g("b", 1, {"v"}, {"w"});
    b.g("c", 1, {"v"}, {"w"});
    b.g("d", 1, {"v"}, {"w"});
    b.g("e", 1, {"w"}, {"x"});
    b.g("f", 1, {"w"}, {"x"});
    b.g("g", 1, {"w"}, {"x"});
    b.g("h", 1, {"x"}, {"y"});
    b.g("alpha", 2, {"b"}, {"c"});
    b.g("beta", 2, {"c"}, {"d"});
    b.g("gamma", 2, {"e"}, {"f"});
    b.g("delta", 2, {"f"}, {"g"});
    f.graph = omega_hypergraph::build(name, b.decls);
    const auto& h = f.graph;
    f.cells["full"] = cell_of(h, {{"u"}, {"a", "b", "e", "h"}}, {{"y"}, {"a", "d", "g", "h"}},
                              {"alpha", "beta", "gamma", "delta"});
    // the two displayed composites of the introduction
    f.terms["pd1"] = cmp(0, cmp(0, gen(h, "a"), cmp(1, gen(h, "alpha"), gen(h, "beta"))),
                         cmp(1, cmp(0, gen(h, "gamma"), gen(h, "h")), cmp(0, gen(h, "delta"), gen(h, "h"))));
    f.terms["pd2"] =
        cmp(1,
            cmp(1, cmp(0, cmp(0, cmp(0, gen(h, "a"), gen(h, "alpha")), gen(h, "e")), gen(h, "h")),
                cmp(0, cmp(0, cmp(0, gen(h, "a"), gen(h, "c")), gen(h, "gamma")), gen(h, "h"))),
            cmp(0, cmp(0, cmp(0, gen(h, "a"), gen(h, "beta")), gen(h, "delta")), gen(h, "h")));
    f.expected = {{"pc", true}, {"ps", true}, {"adc", true}, {"gpc", true}};
  } else if (name == "two_pd_ambi") {
    b.g0({"w", "x", "y"});
    b.g("a", 1, {"w"}, {"x"});
    b.g("a'", 1, {"w"}, {"x"});
    b.g("b", 1, {"x"}, {"y"});
    b.g("alpha", 2, {"a", "b"}, {"a'", "b"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", false}, {"ps", false}, {"adc", true}, {"gpc", false}};
  } else if (name == "not_acyclic") {
    b.g0({"x", "y"});
    b.g("f", 1, {"x"}, {"y"});
    b.g("g", 1, {"y"}, {"x"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", false}, {"ps", false}, {"adc", false}, {"gpc", false}};
  } else if (name == "johnson_non_glob") {
    b.g0({"w", "x", "y", "z"});
    b.g("a", 1, {"w"}, {"z"});
    b.g("b", 1, {"x"}, {"y"});
    b.g("f", 2, {"a"}, {"b"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", false}, {"ps", false}, {"adc", false}, {"gpc", false}};
  } else if (name == "ex_non_wfs") {
    b.g0({"x", "y", "z"});
    b.g("f", 1, {"x", "y"}, {"z"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", false}, {"ps", false}, {"adc", false}, {"gpc", false}};
  } else if (name == "not_3b") {
    b.g0({"x", "y", "y'", "z"});
    b.g("f", 1, {"x"}, {"y"});
    b.g("f'", 1, {"x"}, {"y'"});
    b.g("g", 1, {"y"}, {"z"});
    b.g("g'", 1, {"y'"}, {"z"});
    b.g("h", 1, {"y"}, {"y'"});
    b.g("alpha", 2, {"f", "g"}, {"f'", "g'"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", false}, {"ps", true}, {"adc", true}, {"gpc", true}};
  } else if (name == "ohg_cells") {
    b.g0({"t", "u", "v", "v'", "w", "w'", "w''", "x", "x'", "y", "z"});
    b.g("a", 1, {"t"}, {"u"});
    b.g("b", 1, {"u"}, {"v"});
    b.g("b'", 1, {"u"}, {"v'"});
    b.g("c", 1, {"v"}, {"w"});
    b.g("c''", 1, {"v"}, {"w'"});
    b.g("c'''", 1, {"v'"}, {"w'"});
    b.g("c'", 1, {"v'"}, {"w''"});
    b.g("d", 1, {"w"}, {"x"});
    b.g("d''", 1, {"w'"}, {"x"});
    b.g("d'''", 1, {"w'"}, {"x'"});
    b.g("d'", 1, {"w''"}, {"x'"});
    b.g("e", 1, {"x"}, {"y"});
    b.g("e'", 1, {"x'"}, {"y"});
    b.g("f", 1, {"y"}, {"z"});
    b.g("alpha", 2, {"b", "c''"}, {"b'", "c'''"});
    b.g("beta", 2, {"c", "d"}, {"c''", "d''"});
    b.g("gamma", 2, {"c'''", "d'''"}, {"c'", "d'"});
    b.g("delta", 2, {"d''", "e"}, {"d'''", "e'"});
    f.graph = omega_hypergraph::build(name, b.decls);
    const auto& h = f.graph;
    f.cells["full"] = cell_of(h, {{"t"}, {"a", "b", "c", "d", "e", "f"}},
                              {{"z"}, {"a", "b'", "c'", "d'", "e'", "f"}},
                              {"alpha", "beta", "gamma", "delta"});
    f.cells["alpha_whiskered"] =
        cell_of(h, {{"t"}, {"a", "b", "c''"}}, {{"w'"}, {"a", "b'", "c'''"}}, {"alpha"});
    f.expected = {{"pc", true}, {"ps", true}, {"adc", true}, {"gpc", true}};
  } else if (name == "ex_wfs" || name == "ex_johncyclic") {
    // same shape; ex_johncyclic merges the two middle vertices into one
    if (name == "ex_wfs") {
      b.g0({"x", "y1", "y2", "z"});
      b.g("a1", 1, {"x"}, {"y1"});
      b.g("a2", 1, {"y1"}, {"z"});
      b.g("c1", 1, {"x"}, {"y2"});
      b.g("c2", 1, {"y2"}, {"z"});
    } else {
      b.g0({"x", "y", "z"});
      b.g("a1", 1, {"x"}, {"y"});
      b.g("a2", 1, {"y"}, {"z"});
      b.g("c1", 1, {"x"}, {"y"});
      b.g("c2", 1, {"y"}, {"z"});
    }
    b.g("b", 1, {"x"}, {"z"});
    b.g("alpha", 2, {"a1", "a2"}, {"b"});
    b.g("beta", 2, {"b"}, {"c1", "c2"});
    f.graph = omega_hypergraph::build(name, b.decls);
    if (name == "ex_wfs")
      f.expected = {{"pc", true}, {"ps", true}, {"adc", true}, {"gpc", true}};
    else
      f.expected = {{"pc", true}, {"ps", false}, {"adc", true}, {"gpc", true}};
  } else if (name == "ex_non_segment" || name == "ce_inc_johnson") {
    // ce_inc_johnson is ex_non_segment without A, alpha1' and alpha4'
    b.g0({"x", "y", "z", "w"});
    b.g("a", 1, {"x"}, {"y"});
    b.g("a'", 1, {"x"}, {"y"});
    b.g("c", 1, {"x"}, {"y"});
    b.g("d", 1, {"y"}, {"z"});
    b.g("d'", 1, {"y"}, {"z"});
    b.g("b", 1, {"y"}, {"w"});
    b.g("b'", 1, {"x"}, {"w"});
    b.g("e", 1, {"z"}, {"w"});
    b.g("alpha1", 2, {"a"}, {"a'"});
    b.g("alpha4", 2, {"d"}, {"d'"});
    b.g("alpha2", 2, {"a'", "b"}, {"b'"});
    b.g("alpha3", 2, {"b'"}, {"c", "d", "e"});
    if (name == "ex_non_segment") {
      b.g("alpha1'", 2, {"a"}, {"a'"});
      b.g("alpha4'", 2, {"d"}, {"d'"});
      b.g("A", 3, {"alpha1", "alpha4"}, {"alpha1'", "alpha4'"});
    }
    f.graph = omega_hypergraph::build(name, b.decls);
    const auto& h = f.graph;
    // both border paths run from x to w; the 1-layers are the ones pinned by
    // the text
    f.cells["X"] = cell_of(h, {{"x"}, {"a", "b"}}, {{"w"}, {"c", "d'", "e"}},
                           {"alpha1", "alpha2", "alpha3", "alpha4"});
    if (name == "ex_non_segment") {
      f.cells["Y"] = pre_cell{{ids(h, {"x"}), ids(h, {"a", "b"}),
                               ids(h, {"alpha1", "alpha2", "alpha3", "alpha4"})},
                              {ids(h, {"w"}), ids(h, {"c", "d'", "e"}),
                               ids(h, {"alpha1'", "alpha2", "alpha3", "alpha4'"})},
                              ids(h, {"A"})};
      f.expected = {{"pc", false}, {"ps", false}, {"adc", false}, {"gpc", false}};
    } else {
      f.expected = {{"pc", true}, {"ps", false}, {"adc", true}, {"gpc", true}};
    }
  } else if (name == "ce_tf") {
    b.g0({"x", "y", "z"});
    b.g("a", 1, {"x"}, {"y"});
    b.g("b", 1, {"x"}, {"y"});
    b.g("c", 1, {"x"}, {"y"});
    b.g("d", 1, {"y"}, {"z"});
    b.g("e", 1, {"y"}, {"z"});
    b.g("f", 1, {"y"}, {"z"});
    b.g("alpha", 2, {"a"}, {"b"});
    b.g("alpha'", 2, {"a"}, {"b"});
    b.g("beta", 2, {"b"}, {"c"});
    b.g("beta'", 2, {"b"}, {"c"});
    b.g("gamma", 2, {"d"}, {"e"});
    b.g("gamma'", 2, {"d"}, {"e"});
    b.g("delta", 2, {"e"}, {"f"});
    b.g("delta'", 2, {"e"}, {"f"});
    b.g("A", 3, {"alpha", "delta"}, {"alpha'", "delta'"});
    b.g("B", 3, {"beta", "gamma"}, {"beta'", "gamma'"});
    f.graph = omega_hypergraph::build(name, b.decls);
    const auto& h = f.graph;
    f.cells["conflated"] =
        pre_cell{{ids(h, {"x"}), ids(h, {"a", "d"}), ids(h, {"alpha", "beta", "gamma", "delta"})},
                 {ids(h, {"z"}), ids(h, {"c", "f"}),
                  ids(h, {"alpha'", "beta'", "gamma'", "delta'"})},
                 ids(h, {"A", "B"})};
    f.cells["torsion_witness"] = cell_of(h, {{"x"}, {"a", "d"}}, {{"z"}, {"c", "f"}},
                                         {"alpha'", "beta", "gamma", "delta'"});
    // Xi1 = ((a *0 gamma) *1 A *1 (beta *0 f)) *2 ((alpha' *0 d) *1 B *1 (c *0 delta'))
    f.terms["xi1"] =
        cmp(2,
            cmp(1, cmp(1, cmp(0, gen(h, "a"), gen(h, "gamma")), gen(h, "A")),
                cmp(0, gen(h, "beta"), gen(h, "f"))),
            cmp(1, cmp(1, cmp(0, gen(h, "alpha'"), gen(h, "d")), gen(h, "B")),
                cmp(0, gen(h, "c"), gen(h, "delta'"))));
    // Xi2 = ((alpha *0 d) *1 B *1 (c *0 delta)) *2 ((a *0 gamma') *1 A *1 (beta' *0 f))
    f.terms["xi2"] =
        cmp(2,
            cmp(1, cmp(1, cmp(0, gen(h, "alpha"), gen(h, "d")), gen(h, "B")),
                cmp(0, gen(h, "c"), gen(h, "delta"))),
            cmp(1, cmp(1, cmp(0, gen(h, "a"), gen(h, "gamma'")), gen(h, "A")),
                cmp(0, gen(h, "beta'"), gen(h, "f"))));
    f.expected = {{"pc", true}, {"ps", true}, {"adc", false}, {"gpc", false}};
  } else if (name == "ce_inc_steiner") {
    b.g0({"w", "x", "y", "z"});
    b.g("a", 1, {"w"}, {"x"});
    b.g("b", 1, {"w"}, {"x"});
    b.g("c", 1, {"w"}, {"x"});
    b.g("d", 1, {"x"}, {"y"});
    b.g("e", 1, {"x"}, {"y"});
    b.g("f", 1, {"x"}, {"y"});
    b.g("g", 1, {"y"}, {"z"});
    b.g("h", 1, {"y"}, {"z"});
    b.g("i", 1, {"y"}, {"z"});
    b.g("alpha", 2, {"a"}, {"b"});
    b.g("alpha'", 2, {"a"}, {"b"});
    b.g("beta", 2, {"b"}, {"c"});
    b.g("beta'", 2, {"b"}, {"c"});
    b.g("gamma", 2, {"d"}, {"e"});
    b.g("gamma'", 2, {"d"}, {"e"});
    b.g("gamma''", 2, {"d"}, {"f"});
    b.g("delta", 2, {"e"}, {"f"});
    b.g("delta'", 2, {"e"}, {"f"});
    b.g("eps", 2, {"g"}, {"h"});
    b.g("eps'", 2, {"g"}, {"h"});
    b.g("zeta", 2, {"h"}, {"i"});
    b.g("zeta'", 2, {"h"}, {"i"});
    b.g("A", 3, {"beta", "gamma"}, {"beta'", "gamma'"});
    b.g("B", 3, {"delta", "eps"}, {"delta'", "eps'"});
    b.g("C", 3, {"alpha", "gamma'", "delta'", "zeta"}, {"alpha'", "gamma''", "zeta'"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", true}, {"ps", true}, {"adc", false}, {"gpc", true}};
  } else if (name == "loop_ok") {
    b.g0({"w", "x", "y", "z"});
    b.g("a", 1, {"w"}, {"x"});
    b.g("a'", 1, {"w"}, {"x"});
    b.g("b", 1, {"x"}, {"y"});
    b.g("c", 1, {"y"}, {"z"});
    b.g("alpha", 2, {"a", "b"}, {"a'", "b"});
    f.graph = omega_hypergraph::build(name, b.decls);
    f.expected = {{"pc", false}, {"ps", false}, {"adc", true}, {"gpc", false}};
  } else {
    throw error(errkind::unknown_fixture, "unknown fixture: " + name, {{"name", name}});
  }
  return f;
}

}  // namespace

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names = {
      "ex_ppc",         "two_pd",        "two_pd_ambi", "not_acyclic", "johnson_non_glob",
      "ex_non_wfs",     "not_3b",        "ohg_cells",   "ex_wfs",      "ex_johncyclic",
      "ex_non_segment", "ce_tf",         "ce_inc_johnson", "ce_inc_steiner", "loop_ok"};
  return names;
}

fixture load_fixture(const std::string& name) { return make(name); }

}  // namespace ohg
