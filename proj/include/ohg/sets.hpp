#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace ohg {

// Generators are interned to small integers at load; all generator sets are
// sorted unique vectors so iteration order and witness output are
// deterministic.
using gen_id = std::int32_t;
using gen_set = std::vector<gen_id>;

inline gen_set make_set(std::initializer_list<gen_id> xs) {
  gen_set s(xs);
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

inline void normalize(gen_set& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

inline bool contains(const gen_set& s, gen_id x) {
  return std::binary_search(s.begin(), s.end(), x);
}

inline gen_set set_union(const gen_set& a, const gen_set& b) {
  gen_set out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline gen_set set_diff(const gen_set& a, const gen_set& b) {
  gen_set out;
  out.reserve(a.size());
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline gen_set set_inter(const gen_set& a, const gen_set& b) {
  gen_set out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline bool disjoint(const gen_set& a, const gen_set& b) {
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j)
      ++i;
    else if (*j < *i)
      ++j;
    else
      return false;
  }
  return true;
}

inline bool subset(const gen_set& a, const gen_set& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline void insert(gen_set& s, gen_id x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it == s.end() || *it != x) s.insert(it, x);
}

inline void erase(gen_set& s, gen_id x) {
  auto it = std::lower_bound(s.begin(), s.end(), x);
  if (it != s.end() && *it == x) s.erase(it);
}

}  // namespace ohg
