#include <doctest.h>

#include "ohg/errors.hpp"
#include "test_util.hpp"

using namespace ohg;
using namespace ohgtest;

TEST_CASE("validate accepts the basic fixtures") {
  fixture f = load_fixture("ex_ppc");
  CHECK(f.graph.top_dim() == 2);
  CHECK(f.graph.generators(0).size() == 4);
  CHECK(f.graph.generators(1).size() == 4);
  CHECK(N(f.graph, f.graph.border(f.graph.id_of("alpha"), sign::neg)) ==
        std::vector<std::string>{"a", "c"});
  CHECK(N(f.graph, f.graph.border(f.graph.id_of("alpha"), sign::pos)) ==
        std::vector<std::string>{"b", "d"});

  omega_hypergraph empty = omega_hypergraph::build("empty", {});
  CHECK(empty.top_dim() == -1);
}

TEST_CASE("validate rejects dangling borders") {
  std::vector<generator_decl> decls{{"a", 1, {"q"}, {"q"}}};
  CHECK_THROWS_WITH_AS(omega_hypergraph::build("bad", decls),
                       doctest::Contains("undeclared"), error);
  try {
    omega_hypergraph::build("bad", decls);
  } catch (const error& e) {
    CHECK(e.kind() == errkind::dangling_border);
  }
}

TEST_CASE("validate rejects duplicate ids") {
  std::vector<generator_decl> decls{{"x", 0, {}, {}}, {"x", 0, {}, {}}};
  try {
    omega_hypergraph::build("bad", decls);
    FAIL("expected duplicate_id");
  } catch (const error& e) {
    CHECK(e.kind() == errkind::duplicate_id);
  }
}

TEST_CASE("iterated borders on ex_ppc") {
  const auto h = load_fixture("ex_ppc").graph;
  gen_set alpha = S(h, {"alpha"});
  CHECK(h.border_path(2, alpha, parse_border_path("--")) == S(h, {"x", "y"}));
  CHECK(h.border_path(2, alpha, parse_border_path("+-")) == S(h, {"x", "y'"}));
  CHECK(h.border_path(2, alpha, parse_border_path("-<")) == S(h, {"x"}));
  CHECK(h.border_path(2, alpha, parse_border_path("+>")) == S(h, {"z"}));
  CHECK(h.border_path(1, gen_set{}, parse_border_path("-")).empty());
  CHECK_THROWS_AS(h.border_path(1, alpha, parse_border_path("--")), error);
  // the unicode spellings parse to the same steps
  CHECK(h.border_path(2, alpha, parse_border_path("-\xe2\x88\x93")) == S(h, {"x"}));
  CHECK(h.border_path(2, alpha, parse_border_path("+\xc2\xb1")) == S(h, {"z"}));
}

TEST_CASE("border of a union is the union of borders") {
  std::mt19937 rng(12345);
  for (const auto& name : fixture_names()) {
    const auto h = load_fixture(name).graph;
    for (int n = 1; n <= h.top_dim(); ++n) {
      for (int rep = 0; rep < 20; ++rep) {
        gen_set s = random_subset(h.generators(n), rng);
        gen_set t = random_subset(h.generators(n), rng);
        for (sign e : {sign::neg, sign::pos})
          CHECK(h.border(set_union(s, t), e) == set_union(h.border(s, e), h.border(t, e)));
      }
    }
  }
}

TEST_CASE("fork-freeness on ex_ppc") {
  const auto h = load_fixture("ex_ppc").graph;
  CHECK_FALSE(h.fork_free(1, S(h, {"a", "b"})));  // a^- n b^- = {x}
  CHECK(h.fork_free(1, S(h, {"a", "c"})));
  CHECK_FALSE(h.fork_free(0, {}));
  CHECK(h.fork_free(2, {}));
  auto v = h.fork_violation(1, S(h, {"a", "b"}));
  REQUIRE(v.has_value());
  CHECK(h.name_of(std::get<0>(*v)) == "a");
  CHECK(h.name_of(std::get<1>(*v)) == "b");
}

TEST_CASE("tl cycles and acyclicity") {
  const auto bad = load_fixture("not_acyclic").graph;
  auto cyc = acyclicity_witness(bad);
  REQUIRE(cyc.has_value());
  gen_set visited(cyc->begin(), cyc->end());
  normalize(visited);
  CHECK(visited == S(bad, {"f", "g"}));
  CHECK(cyc->front() == cyc->back());

  CHECK(acyclic(load_fixture("two_pd").graph));

  const auto ppc = load_fixture("ex_ppc").graph;
  tl_relation r(ppc, S(ppc, {"alpha"}));
  CHECK_FALSE(r.reaches(ppc.id_of("alpha"), ppc.id_of("alpha")));
}

TEST_CASE("tl is transitive and matches acyclicity") {
  for (const auto& name : fixture_names()) {
    const auto h = load_fixture(name).graph;
    bool self_loop = false;
    for (int n = 1; n <= h.top_dim(); ++n) {
      tl_relation r = tl(h, n);
      for (gen_id x : h.generators(n)) {
        if (r.reaches(x, x)) self_loop = true;
        for (gen_id y : h.generators(n))
          for (gen_id z : h.generators(n))
            if (r.reaches(x, y) && r.reaches(y, z)) CHECK(r.reaches(x, z));
      }
    }
    CHECK(acyclic(h) == !self_loop);
  }
}

TEST_CASE("segments") {
  const auto h = load_fixture("ex_non_segment").graph;
  fixture f = load_fixture("ex_non_segment");
  gen_set u = f.cells.at("X").top;
  gen_set v = S(h, {"alpha1", "alpha4"});
  CHECK_FALSE(is_segment(h, u, v));  // alpha1 tl alpha2 tl alpha3 tl alpha4
  CHECK(is_segment(h, u, u));
  CHECK(is_segment(h, u, {}));
  CHECK(is_initial(h, u, {}));
  CHECK(is_terminal(h, u, {}));
}

TEST_CASE("atom layers") {
  const auto h = load_fixture("ohg_cells").graph;
  auto t = h.atom_layers(h.id_of("alpha"));
  CHECK(t.neg[0] == S(h, {"u"}));
  CHECK(t.neg[1] == S(h, {"b", "c''"}));
  CHECK(t.pos[1] == S(h, {"b'", "c'''"}));
  CHECK(t.pos[0] == S(h, {"w'"}));

  const auto p = load_fixture("ex_ppc").graph;
  auto t0 = p.atom_layers(p.id_of("x"));
  CHECK(t0.neg[0] == S(p, {"x"}));
  CHECK(t0.pos[0] == S(p, {"x"}));

  const auto ce = load_fixture("ce_tf").graph;
  auto ta = ce.atom_layers(ce.id_of("A"));
  CHECK(ta.pos[1] == S(ce, {"b", "f"}));
  CHECK(ta.neg[1] == S(ce, {"a", "e"}));
  auto tb = ce.atom_layers(ce.id_of("B"));
  CHECK(tb.neg[1] == S(ce, {"b", "d"}));
  CHECK(tb.pos[1] == S(ce, {"c", "e"}));

  // the recursion <x>_{j,-} = (<x>_{j+1,-})^(-\+), re-checked independently
  for (const auto& name : fixture_names()) {
    const auto g = load_fixture(name).graph;
    for (int n = 0; n <= g.top_dim(); ++n)
      for (gen_id x : g.generators(n)) {
        auto layers = g.atom_layers(x);
        for (int j = n - 1; j >= 0; --j) {
          CHECK(layers.neg[j] == g.strict_border(layers.neg[j + 1], sign::neg));
          CHECK(layers.pos[j] == g.strict_border(layers.pos[j + 1], sign::pos));
        }
      }
  }
}

TEST_CASE("jtl is reflexive-transitive") {
  const auto ce = load_fixture("ce_tf").graph;
  CHECK(jtl_between(ce, 1, S(ce, {"b", "f"}), S(ce, {"b", "d"})));  // b jtl b
  CHECK(jtl_between(ce, 1, S(ce, {"a"}), S(ce, {"a"})));

  const auto st = load_fixture("ce_inc_steiner").graph;
  // the borders feeding the <_1 loop: <A>_{1,+} meets <B>_{1,-} at e, etc.
  auto a = st.atom_layers(st.id_of("A"));
  auto b = st.atom_layers(st.id_of("B"));
  auto c = st.atom_layers(st.id_of("C"));
  CHECK(a.pos[1] == S(st, {"c", "e"}));
  CHECK(b.neg[1] == S(st, {"e", "g"}));
  CHECK(jtl_between(st, 1, a.pos[1], b.neg[1]));
  CHECK(jtl_between(st, 1, b.pos[1], c.neg[1]));
  CHECK(jtl_between(st, 1, c.pos[1], a.neg[1]));
}

TEST_CASE("closure") {
  const auto h = load_fixture("ex_ppc").graph;
  CHECK(h.closure(S(h, {"alpha"})) == S(h, {"x", "y", "y'", "z", "a", "b", "c", "d", "alpha"}));
  CHECK(h.closure(S(h, {"x"})) == S(h, {"x"}));

  const auto w = load_fixture("ex_wfs").graph;
  CHECK(subset(S(w, {"x", "y1", "z", "a1", "a2", "b"}), w.closure(S(w, {"alpha"}))));

  // idempotent, monotone, extensive
  std::mt19937 rng(999);
  for (const auto& name : fixture_names()) {
    const auto g = load_fixture(name).graph;
    gen_set all;
    for (int n = 0; n <= g.top_dim(); ++n) all = set_union(all, g.generators(n));
    for (int rep = 0; rep < 25; ++rep) {
      gen_set s = random_subset(all, rng);
      gen_set t = set_union(s, random_subset(all, rng));
      gen_set cs = g.closure(s);
      CHECK(subset(s, cs));
      CHECK(g.closure(cs) == cs);
      CHECK(subset(cs, g.closure(t)));
    }
  }
}
