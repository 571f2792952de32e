#include "ohg/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ohg/altcells.hpp"
#include "ohg/axioms.hpp"
#include "ohg/errors.hpp"
#include "ohg/fixtures.hpp"
#include "ohg/freeterm.hpp"
#include "ohg/johnson.hpp"
#include "ohg/json_io.hpp"
#include "ohg/steiner.hpp"

namespace ohg {

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error(errkind::parse_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw error(errkind::parse_error, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

omega_hypergraph load_graph(const std::string& path) {
  return hypergraph_from_json(read_json_file(path));
}

// gpc report = computable axioms plus the brute-force A3/A4 entries
axiom_report gpc_combined(const omega_hypergraph& h, std::size_t cap) {
  axiom_report rep = check_gpc_computable(h);
  axiom_report full = check_gpc_full(h, cap);
  for (const auto& a : full.axioms)
    if (a.name == "A3" || a.name == "A4") rep.axioms.push_back(a);
  return rep;
}

int run_check(const std::string& file, const std::string& formalism, std::size_t cap,
              std::ostream& out) {
  omega_hypergraph h = load_graph(file);
  std::vector<axiom_report> reports;
  if (formalism == "pc")
    reports.push_back(check_street(h));
  else if (formalism == "ps")
    reports.push_back(check_johnson(h, cap));
  else if (formalism == "adc")
    reports.push_back(check_steiner(h));
  else if (formalism == "gpc")
    reports.push_back(gpc_combined(h, cap));
  else {
    reports.push_back(check_street(h));
    reports.push_back(check_johnson(h, cap));
    reports.push_back(check_steiner(h));
    reports.push_back(gpc_combined(h, cap));
  }
  bool all_ok = true;
  json payload;
  if (reports.size() == 1) {
    payload = reports[0].to_json();
    all_ok = reports[0].ok();
  } else {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back(r.to_json());
      all_ok = all_ok && r.ok();
    }
    payload = {{"name", h.name()}, {"reports", std::move(arr)}};
  }
  out << canonical_dump(payload);
  return all_ok ? 0 : 1;
}

int run_counterexample(std::ostream& out) {
  fixture f = load_fixture("ce_tf");
  const auto& h = f.graph;
  pre_cell c1 = eval_cell(h, f.terms.at("xi1"));
  pre_cell c2 = eval_cell(h, f.terms.at("xi2"));
  auto w1 = word(h, f.terms.at("xi1"));
  auto w2 = word(h, f.terms.at("xi2"));
  bool equal_cells = c1 == c2;
  bool equal_words = w1 == w2;
  json payload{{"cell", cell_to_json(h, c1)},
               {"equal_cells", equal_cells},
               {"equal_words", equal_words},
               {"word_xi1", names_of(h, gen_set(w1.begin(), w1.end()))},
               {"word_xi2", names_of(h, gen_set(w2.begin(), w2.end()))},
               {"free", !(equal_cells && !equal_words)}};
  out << canonical_dump(payload);
  return equal_cells && !equal_words ? 1 : 0;
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"pasting diagrams in strict omega-categories"};
  app.require_subcommand(1);

  std::string file, formalism = "all", gen_name, cell_file, target, emit_name;
  std::vector<std::string> cell_pair;
  std::size_t cap = 100000;
  int dim = 0;
  bool list_names = false;

  auto* check = app.add_subcommand("check", "run axiom checkers on a hypergraph");
  check->add_option("file", file)->required();
  check->add_option("--formalism", formalism)
      ->check(CLI::IsMember({"pc", "ps", "adc", "gpc", "all"}));
  check->add_option("--cap", cap);

  auto* atom_cmd = app.add_subcommand("atom", "atom pre-cell of a generator");
  atom_cmd->add_option("file", file)->required();
  atom_cmd->add_option("--gen", gen_name)->required();

  auto* compose_cmd = app.add_subcommand("compose", "compose two cells");
  compose_cmd->add_option("file", file)->required();
  compose_cmd->add_option("--cells", cell_pair)->required()->expected(2);
  compose_cmd->add_option("--dim", dim)->required();

  auto* decompose_cmd = app.add_subcommand("decompose", "decompose a cell into atoms");
  decompose_cmd->add_option("file", file)->required();
  decompose_cmd->add_option("--cell", cell_file)->required();

  auto* translate_cmd = app.add_subcommand("translate", "translate a cell representation");
  translate_cmd->add_option("file", file)->required();
  translate_cmd->add_option("--cell", cell_file)->required();
  translate_cmd->add_option("--to", target)
      ->required()
      ->check(CLI::IsMember({"precell", "maximal", "closed", "adc"}));

  auto* enum_cmd = app.add_subcommand("enumerate", "enumerate all cells of a dimension");
  enum_cmd->add_option("file", file)->required();
  enum_cmd->add_option("--dim", dim)->required();
  enum_cmd->add_option("--cap", cap);

  auto* ce_cmd = app.add_subcommand("counterexample", "reproduce the freeness counter-example");
  (void)ce_cmd;

  auto* fixtures_cmd = app.add_subcommand("fixtures", "list or emit named fixtures");
  fixtures_cmd->add_flag("--list", list_names);
  fixtures_cmd->add_option("--emit", emit_name);

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      out << app.help();
      return 0;
    }
    err << canonical_dump(json{{"error", "usage"}, {"message", e.what()}});
    return 2;
  }

  try {
    if (check->parsed()) return run_check(file, formalism, cap, out);
    if (atom_cmd->parsed()) {
      omega_hypergraph h = load_graph(file);
      out << canonical_dump(cell_to_json(h, atom(h, h.id_of(gen_name))));
      return 0;
    }
    if (compose_cmd->parsed()) {
      omega_hypergraph h = load_graph(file);
      pre_cell a = cell_from_json(h, read_json_file(cell_pair[0]));
      pre_cell b = cell_from_json(h, read_json_file(cell_pair[1]));
      int n = std::max(a.dim(), b.dim());
      out << canonical_dump(cell_to_json(h, compose(h, identity(a, n), identity(b, n), dim)));
      return 0;
    }
    if (decompose_cmd->parsed()) {
      omega_hypergraph h = load_graph(file);
      pre_cell c = cell_from_json(h, read_json_file(cell_file));
      cell_violation v;
      if (!is_cell(h, c, &v))
        throw error(errkind::not_a_cell, "input is not a cell",
                    {{"layer", v.layer}, {"condition", v.condition}});
      out << canonical_dump(tree_to_json(h, decompose(h, c)));
      return 0;
    }
    if (translate_cmd->parsed()) {
      omega_hypergraph h = load_graph(file);
      pre_cell c = cell_from_json(h, read_json_file(cell_file));
      if (target == "precell")
        out << canonical_dump(cell_to_json(h, c));
      else if (target == "maximal")
        out << canonical_dump(fgs_to_json(h, ctoprinc(h, c)));
      else if (target == "closed")
        out << canonical_dump(fgs_to_json(h, ctocl(h, c)));
      else
        out << canonical_dump(adc_cell_to_json(h, c2st(c, h)));
      return 0;
    }
    if (enum_cmd->parsed()) {
      omega_hypergraph h = load_graph(file);
      auto cells = enumerate_cells(h, dim, cap);
      json arr = json::array();
      for (const auto& c : cells) arr.push_back(cell_to_json(h, c));
      out << canonical_dump(json{{"dim", dim}, {"count", cells.size()}, {"cells", std::move(arr)}});
      return 0;
    }
    if (ce_cmd->parsed()) return run_counterexample(out);
    if (fixtures_cmd->parsed()) {
      if (list_names) {
        out << canonical_dump(json(fixture_names()));
        return 0;
      }
      if (!emit_name.empty()) {
        out << canonical_dump(hypergraph_to_json(load_fixture(emit_name).graph));
        return 0;
      }
      err << canonical_dump(json{{"error", "usage"}, {"message", "fixtures needs --list or --emit"}});
      return 2;
    }
  } catch (const error& e) {
    err << canonical_dump(e.to_json());
    return e.kind() == errkind::cap_exceeded ? 3 : 2;
  }
  return 2;
}

}  // namespace ohg
