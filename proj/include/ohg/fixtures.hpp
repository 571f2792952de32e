#pragma once

#include <map>
#include <string>
#include <vector>

#include "ohg/cells.hpp"

namespace ohg {

// Named example hypergraphs, with the cells and formal composites attached to
// them and the formalism verdicts they are expected to produce.
struct fixture {
  std::string name;
  omega_hypergraph graph;
  std::map<std::string, comp_tree> terms;
  std::map<std::string, pre_cell> cells;
  std::map<std::string, bool> expected;  // keys: pc, ps, adc, gpc
};

const std::vector<std::string>& fixture_names();
fixture load_fixture(const std::string& name);  // throws unknown_fixture

}  // namespace ohg
