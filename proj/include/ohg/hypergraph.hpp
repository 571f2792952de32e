#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ohg/sets.hpp"

namespace ohg {

enum class sign : int { neg = 0, pos = 1 };

inline sign opposite(sign e) { return e == sign::neg ? sign::pos : sign::neg; }
inline const char* sign_name(sign e) { return e == sign::neg ? "-" : "+"; }

// One step of a border path: a plain sign or a strict ("-\+" / "+\-") form.
// Strict steps are only allowed as the final step of a path.
struct border_step {
  sign s;
  bool strict = false;
};

// Parses a path such as "--", "+-", "-<", "+>", where '<' stands for the
// strict minus form (S^- \ S^+) and '>' for the strict plus form (S^+ \ S^-).
// The UTF-8 glyphs for minus-plus and plus-minus are accepted as well.
std::vector<border_step> parse_border_path(const std::string& path);

struct generator_decl {
  std::string name;
  int dim = 0;
  std::vector<std::string> src, tgt;
};

// Finite graded subset: layers[i] lives in P_i. dim() is the length of the
// tuple, not the largest inhabited layer.
struct fgs {
  std::vector<gen_set> layers;

  fgs() = default;
  explicit fgs(int dim) : layers(dim + 1) {}

  int dim() const { return static_cast<int>(layers.size()) - 1; }
  bool operator==(const fgs&) const = default;

  gen_set flatten() const {
    gen_set all;
    for (const auto& l : layers) all = set_union(all, l);
    return all;
  }
};

class omega_hypergraph {
 public:
  // Builds and validates. Generators are sorted by (dim, name) before
  // interning so ids are canonical for a given content.
  static omega_hypergraph build(std::string name, std::vector<generator_decl> decls);

  const std::string& name() const { return name_; }
  int top_dim() const { return static_cast<int>(by_dim_.size()) - 1; }
  int num_generators() const { return static_cast<int>(gens_.size()); }

  int dim(gen_id x) const { return gens_[x].dim; }
  const std::string& name_of(gen_id x) const { return gens_[x].name; }
  gen_id id_of(const std::string& name) const;  // throws unknown_generator
  std::optional<gen_id> find(const std::string& name) const;

  // Generators of one dimension, sorted. Empty set above top_dim.
  const gen_set& generators(int dim) const;

  const gen_set& border(gen_id x, sign e) const { return e == sign::neg ? gens_[x].src : gens_[x].tgt; }

  // U^eps = union of x^eps over x in U.
  gen_set border(const gen_set& u, sign e) const;
  // S^-\S^+ (strict=neg) or S^+\S^- (strict=pos).
  gen_set strict_border(const gen_set& u, sign e) const;
  // Iterated border along a parsed path; set must live at dimension n with
  // n >= path length (checked, throws dimension_underflow).
  gen_set border_path(int n, gen_set u, const std::vector<border_step>& path) const;

  bool fork_free(int n, const gen_set& u) const;

  // First fork-freeness violation, if any: (x, y, sign) with x^e meeting y^e.
  std::optional<std::tuple<gen_id, gen_id, sign>> fork_violation(int n, const gen_set& u) const;

  fgs closure(const fgs& s) const;
  gen_set closure(const gen_set& s) const;  // same, flattened view
  bool is_closed(const fgs& s) const;

  // Atom layers <x>_{i,eps} for 0 <= i <= dim(x).
  struct atom_table {
    std::vector<gen_set> neg, pos;  // index = dimension i
  };
  atom_table atom_layers(gen_id x) const;

 private:
  struct gen_rec {
    std::string name;
    int dim;
    gen_set src, tgt;
  };

  std::string name_;
  std::vector<gen_rec> gens_;
  std::vector<gen_set> by_dim_;
  std::unordered_map<std::string, gen_id> by_name_;

  void validate() const;
};

// --- the relation "tl" (one-step: x^+ meets y^-; transitive, not reflexive) ---

// Transitive closure of tl_1 restricted to the ground set u (subset of P_n,
// n > 0). Pairs are exposed through reaches().
class tl_relation {
 public:
  tl_relation(const omega_hypergraph& h, const gen_set& u);

  const gen_set& ground() const { return ground_; }
  bool reaches(gen_id x, gen_id y) const;  // x tl y
  bool set_reaches(const gen_set& v, const gen_set& w) const;

  // Shortest tl_1 chain from x to y (inclusive ends), empty if none.
  std::vector<gen_id> chain(gen_id x, gen_id y) const;

 private:
  gen_set ground_;
  std::vector<std::vector<bool>> step_;   // tl_1 adjacency
  std::vector<std::vector<bool>> reach_;  // transitive closure
  int index(gen_id x) const;
};

// Global per-dimension tl on P_n.
tl_relation tl(const omega_hypergraph& h, int n);

// Acyclicity of tl over all dimensions; on failure returns a witness cycle
// [x_0, ..., x_k] with x_0 = x_k and consecutive tl_1 steps.
std::optional<std::vector<gen_id>> acyclicity_witness(const omega_hypergraph& h);
inline bool acyclic(const omega_hypergraph& h) { return !acyclicity_witness(h).has_value(); }

bool is_segment(const omega_hypergraph& h, const gen_set& u, const gen_set& v);
bool is_initial(const omega_hypergraph& h, const gen_set& u, const gen_set& v);
bool is_terminal(const omega_hypergraph& h, const gen_set& u, const gen_set& v);

// --- the relation "jtl" (one-step: x in z^-, y in z^+; reflexive-transitive) ---

class jtl_relation {
 public:
  jtl_relation(const omega_hypergraph& h, int n);

  bool reaches(gen_id x, gen_id y) const;  // x jtl y (reflexive)
  bool set_reaches(const gen_set& s, const gen_set& t) const;
  // Shortest jtl_1 chain from some s in S to some t in T; a singleton [s]
  // when they share an element. Empty if S jtl T fails.
  std::vector<gen_id> chain(const gen_set& s, const gen_set& t) const;

 private:
  gen_set ground_;
  std::vector<std::vector<bool>> step_;
  std::vector<std::vector<bool>> reach_;
  int index(gen_id x) const;
};

jtl_relation jtl(const omega_hypergraph& h, int n);

bool jtl_between(const omega_hypergraph& h, int n, const gen_set& s, const gen_set& t);

// Names for a whole set, for witnesses and test diagnostics.
std::vector<std::string> names_of(const omega_hypergraph& h, const gen_set& s);

}  // namespace ohg
