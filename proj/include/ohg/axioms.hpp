#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ohg/cells.hpp"

namespace ohg {

enum class verdict { pass, fail, skipped };

struct axiom_result {
  std::string name;
  verdict v = verdict::pass;
  nlohmann::json witness;  // concrete, re-checkable data on failure
  std::string reason;      // set when skipped

  static axiom_result passed(std::string n) { return {std::move(n), verdict::pass, nullptr, ""}; }
  static axiom_result failed(std::string n, nlohmann::json w) {
    return {std::move(n), verdict::fail, std::move(w), ""};
  }
  static axiom_result skip(std::string n, std::string why) {
    return {std::move(n), verdict::skipped, nullptr, std::move(why)};
  }
};

struct axiom_report {
  std::string formalism;
  std::vector<axiom_result> axioms;

  bool ok() const;  // no fail (skips do not fail)
  const axiom_result* find(const std::string& name) const;
  nlohmann::json to_json() const;
};

// Street's parity-complex axioms C0..C5. When strict_c5 both atom slices are
// required tight, not only the printed minus side.
axiom_report check_street(const omega_hypergraph& h, bool strict_c5 = false);

bool tight(const omega_hypergraph& h, int n, const gen_set& t);

// Generalized parity complexes, polynomial variant: A0, A1, A2, A3', A4'.
axiom_report check_gpc_computable(const omega_hypergraph& h);

// Brute-force A3/A4 by cell enumeration, bounded by cap; A0..A2 included.
axiom_report check_gpc_full(const omega_hypergraph& h, std::size_t cap);

// Runs pc, ps, adc, gpc-computable and gpc-full.
std::map<std::string, axiom_report> check_formalisms(const omega_hypergraph& h, std::size_t cap);

const char* verdict_name(verdict v);

}  // namespace ohg
