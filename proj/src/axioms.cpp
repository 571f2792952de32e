#include "ohg/axioms.hpp"

#include "ohg/errors.hpp"
#include "ohg/johnson.hpp"
#include "ohg/steiner.hpp"

namespace ohg {

const char* verdict_name(verdict v) {
  switch (v) {
    case verdict::pass:
      return "pass";
    case verdict::fail:
      return "fail";
    case verdict::skipped:
      return "skipped";
  }
  return "?";
}

bool axiom_report::ok() const {
  for (const auto& a : axioms)
    if (a.v == verdict::fail) return false;
  return true;
}

const axiom_result* axiom_report::find(const std::string& name) const {
  for (const auto& a : axioms)
    if (a.name == name) return &a;
  return nullptr;
}

nlohmann::json axiom_report::to_json() const {
  nlohmann::json items = nlohmann::json::array();
  for (const auto& a : axioms) {
    nlohmann::json j{{"name", a.name}, {"verdict", verdict_name(a.v)}};
    if (a.v == verdict::fail) j["witness"] = a.witness;
    if (a.v == verdict::skipped) j["reason"] = a.reason;
    items.push_back(std::move(j));
  }
  return {{"formalism", formalism}, {"axioms", std::move(items)}};
}

namespace {

axiom_result check_nonempty_borders(const omega_hypergraph& h, const char* name) {
  for (int n = 1; n <= h.top_dim(); ++n)
    for (gen_id x : h.generators(n))
      for (sign e : {sign::neg, sign::pos})
        if (h.border(x, e).empty())
          return axiom_result::failed(
              name, {{"generator", h.name_of(x)}, {"side", sign_name(e)}});
  return axiom_result::passed(name);
}

axiom_result check_acyclic(const omega_hypergraph& h, const char* name) {
  if (auto cyc = acyclicity_witness(h))
    return axiom_result::failed(name, {{"cycle", names_of(h, gen_set(cyc->begin(), cyc->end()))}});
  return axiom_result::passed(name);
}

axiom_result check_relevance(const omega_hypergraph& h, const char* name) {
  for (int n = 1; n <= h.top_dim(); ++n)
    for (gen_id x : h.generators(n)) {
      cell_violation v;
      if (!is_cell(h, atom(h, x), &v))
        return axiom_result::failed(name, {{"generator", h.name_of(x)},
                                           {"layer", v.layer},
                                           {"condition", v.condition}});
    }
  return axiom_result::passed(name);
}

}  // namespace

bool tight(const omega_hypergraph& h, int n, const gen_set& t) {
  if (n < 1) return true;
  gen_set tpm = h.strict_border(t, sign::pos);
  tl_relation rel(h, h.generators(n));
  for (gen_id v : t)
    for (gen_id u : h.generators(n))
      if (rel.reaches(u, v) && !disjoint(h.border(u, sign::neg), tpm)) return false;
  return true;
}

axiom_report check_street(const omega_hypergraph& h, bool strict_c5) {
  axiom_report rep;
  rep.formalism = "pc";
  rep.axioms.push_back(check_nonempty_borders(h, "C0"));

  auto c1 = axiom_result::passed("C1");
  for (int n = 2; n <= h.top_dim() && c1.v == verdict::pass; ++n)
    for (gen_id x : h.generators(n)) {
      gen_set lhs = set_union(h.border_path(n, {x}, {{sign::neg, false}, {sign::neg, false}}),
                              h.border_path(n, {x}, {{sign::pos, false}, {sign::pos, false}}));
      gen_set rhs = set_union(h.border_path(n, {x}, {{sign::neg, false}, {sign::pos, false}}),
                              h.border_path(n, {x}, {{sign::pos, false}, {sign::neg, false}}));
      if (lhs != rhs) {
        c1 = axiom_result::failed(
            "C1", {{"generator", h.name_of(x)}, {"lhs", names_of(h, lhs)}, {"rhs", names_of(h, rhs)}});
        break;
      }
    }
  rep.axioms.push_back(c1);

  auto c2 = axiom_result::passed("C2");
  for (int n = 1; n <= h.top_dim() && c2.v == verdict::pass; ++n)
    for (gen_id x : h.generators(n))
      for (sign e : {sign::neg, sign::pos})
        if (!h.fork_free(n - 1, h.border(x, e))) {
          c2 = axiom_result::failed("C2", {{"generator", h.name_of(x)},
                                           {"side", sign_name(e)},
                                           {"border", names_of(h, h.border(x, e))}});
          goto c2done;
        }
c2done:
  rep.axioms.push_back(c2);

  rep.axioms.push_back(check_acyclic(h, "C3"));

  auto c4 = axiom_result::passed("C4");
  for (int n = 1; n <= h.top_dim() && c4.v == verdict::pass; ++n) {
    tl_relation rel(h, h.generators(n));
    for (gen_id z : h.generators(n + 1))
      for (gen_id x : h.border(z, sign::neg))
        for (gen_id y : h.border(z, sign::pos)) {
          if (rel.reaches(x, y) || rel.reaches(y, x)) {
            c4 = axiom_result::failed("C4", {{"x", h.name_of(rel.reaches(x, y) ? x : y)},
                                             {"y", h.name_of(rel.reaches(x, y) ? y : x)},
                                             {"z", h.name_of(z)}});
            goto c4done;
          }
        }
  }
c4done:
  rep.axioms.push_back(c4);

  auto c5 = axiom_result::passed("C5");
  for (int n = 1; n <= h.top_dim() && c5.v == verdict::pass; ++n)
    for (gen_id x : h.generators(n)) {
      auto layers = h.atom_layers(x);
      for (int i = 1; i < n; ++i) {
        bool bad = !tight(h, i, layers.neg[i]);
        sign side = sign::neg;
        if (!bad && strict_c5 && !tight(h, i, layers.pos[i])) {
          bad = true;
          side = sign::pos;
        }
        if (bad) {
          c5 = axiom_result::failed("C5", {{"generator", h.name_of(x)},
                                           {"layer", i},
                                           {"side", sign_name(side)},
                                           {"slice", names_of(h, side == sign::neg ? layers.neg[i]
                                                                                   : layers.pos[i])}});
          goto c5done;
        }
      }
    }
c5done:
  rep.axioms.push_back(c5);
  return rep;
}

axiom_report check_gpc_computable(const omega_hypergraph& h) {
  axiom_report rep;
  rep.formalism = "gpc";
  rep.axioms.push_back(check_nonempty_borders(h, "A0"));
  rep.axioms.push_back(check_acyclic(h, "A1"));
  rep.axioms.push_back(check_relevance(h, "A2"));

  std::vector<jtl_relation> jt;
  for (int k = 0; k <= h.top_dim(); ++k) jt.push_back(jtl(h, k));

  auto a3 = axiom_result::passed("A3'");
  for (int n = 1; n <= h.top_dim() && a3.v == verdict::pass; ++n)
    for (gen_id x : h.generators(n)) {
      auto layers = h.atom_layers(x);
      for (int k = 0; k < n; ++k)
        if (jt[k].set_reaches(layers.pos[k], layers.neg[k])) {
          auto chain = jt[k].chain(layers.pos[k], layers.neg[k]);
          a3 = axiom_result::failed("A3'", {{"generator", h.name_of(x)},
                                            {"layer", k},
                                            {"chain", names_of(h, chain)}});
          goto a3done;
        }
    }
a3done:
  rep.axioms.push_back(a3);

  auto a4 = axiom_result::passed("A4'");
  for (int n = 1; n <= h.top_dim() && a4.v == verdict::pass; ++n) {
    // pairs of generators of any dimensions i, j > n
    std::vector<gen_id> highs;
    for (int d = n + 1; d <= h.top_dim(); ++d)
      for (gen_id x : h.generators(d)) highs.push_back(x);
    for (gen_id x : highs) {
      auto lx = h.atom_layers(x);
      for (gen_id y : highs) {
        auto ly = h.atom_layers(y);
        if (!disjoint(lx.pos[n], ly.neg[n])) continue;
        int count = (jt[n - 1].set_reaches(lx.pos[n - 1], ly.neg[n - 1]) ? 1 : 0) +
                    (jt[n - 1].set_reaches(ly.pos[n - 1], lx.neg[n - 1]) ? 1 : 0);
        if (x == y && count == 1) count = 2;  // the two clauses coincide
        if (count > 1) {
          a4 = axiom_result::failed("A4'", {{"x", h.name_of(x)}, {"y", h.name_of(y)}, {"n", n}});
          goto a4done;
        }
      }
    }
  }
a4done:
  rep.axioms.push_back(a4);
  return rep;
}

axiom_report check_gpc_full(const omega_hypergraph& h, std::size_t cap) {
  axiom_report rep;
  rep.formalism = "gpc-full";
  rep.axioms.push_back(check_nonempty_borders(h, "A0"));
  rep.axioms.push_back(check_acyclic(h, "A1"));
  rep.axioms.push_back(check_relevance(h, "A2"));

  std::vector<std::vector<pre_cell>> cells_by_dim;  // up to top_dim - 1
  bool capped = false;
  for (int n = 0; n < h.top_dim(); ++n) {
    try {
      cells_by_dim.push_back(enumerate_cells(h, n, cap));
    } catch (const error& e) {
      if (e.kind() != errkind::cap_exceeded) throw;
      capped = true;
      break;
    }
  }

  auto a3 = axiom_result::passed("A3");
  for (int m = 1; m <= h.top_dim() && a3.v == verdict::pass; ++m)
    for (gen_id x : h.generators(m)) {
      auto layers = h.atom_layers(x);
      for (int n = 1; n < m && a3.v == verdict::pass; ++n) {
        if (n >= static_cast<int>(cells_by_dim.size())) {
          a3 = axiom_result::skip("A3", "cell enumeration exceeded cap");
          break;
        }
        for (const pre_cell& c : cells_by_dim[n])
          for (sign e : {sign::neg, sign::pos}) {
            const gen_set& slice = e == sign::neg ? layers.neg[n] : layers.pos[n];
            if (!subset(slice, c.top)) continue;
            if (!is_segment(h, c.top, slice)) {
              a3 = axiom_result::failed("A3", {{"generator", h.name_of(x)},
                                               {"layer", n},
                                               {"side", sign_name(e)},
                                               {"cell_top", names_of(h, c.top)}});
              goto a3done;
            }
          }
      }
    }
a3done:
  if (a3.v == verdict::pass && capped &&
      static_cast<int>(cells_by_dim.size()) < std::max(0, h.top_dim() - 1))
    a3 = axiom_result::skip("A3", "cell enumeration exceeded cap");
  rep.axioms.push_back(a3);

  auto a4 = axiom_result::passed("A4");
  for (int n = 1; n < h.top_dim() && a4.v == verdict::pass; ++n) {
    if (n >= static_cast<int>(cells_by_dim.size())) {
      a4 = axiom_result::skip("A4", "cell enumeration exceeded cap");
      break;
    }
    std::vector<gen_id> highs;
    for (int d = n + 1; d <= h.top_dim(); ++d)
      for (gen_id x : h.generators(d)) highs.push_back(x);
    for (gen_id x : highs) {
      auto lx = h.atom_layers(x);
      for (gen_id y : highs) {
        auto ly = h.atom_layers(y);
        if (!disjoint(lx.pos[n], ly.neg[n])) continue;
        for (const pre_cell& z : cells_by_dim[n]) {
          if (!subset(lx.pos[n], z.top) || !subset(ly.neg[n], z.top)) continue;
          tl_relation rel(h, z.top);
          if (rel.set_reaches(lx.pos[n], ly.neg[n]) && rel.set_reaches(ly.neg[n], lx.pos[n])) {
            a4 = axiom_result::failed("A4", {{"x", h.name_of(x)},
                                             {"y", h.name_of(y)},
                                             {"n", n},
                                             {"cell_top", names_of(h, z.top)}});
            goto a4done;
          }
        }
      }
    }
  }
a4done:
  rep.axioms.push_back(a4);
  return rep;
}

std::map<std::string, axiom_report> check_formalisms(const omega_hypergraph& h, std::size_t cap) {
  std::map<std::string, axiom_report> out;
  out.emplace("pc", check_street(h));
  out.emplace("ps", check_johnson(h, cap));
  out.emplace("adc", check_steiner(h));
  out.emplace("gpc", check_gpc_computable(h));
  out.emplace("gpc-full", check_gpc_full(h, cap));
  return out;
}

}  // namespace ohg
