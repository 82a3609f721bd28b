#pragma once

#include <algorithm>
#include <charconv>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "landau/catalog.hpp"
#include "landau/group.hpp"
#include "landau/named.hpp"

namespace testing {

using namespace landau;

// "(1,2,3)(4,5)" on `degree` points
inline Permutation perm(std::size_t degree, std::string_view text) {
  std::vector<Cycle> cycles;
  Cycle current;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == '(') {
      current.clear();
      ++i;
    } else if (c == ')') {
      cycles.push_back(current);
      ++i;
    } else if (c == ',' || c == ' ') {
      ++i;
    } else {
      Point p = 0;
      auto [end, ec] = std::from_chars(text.data() + i, text.data() + text.size(), p);
      i = static_cast<std::size_t>(end - text.data());
      current.push_back(p);
    }
  }
  return Permutation::from_cycles(degree, cycles);
}

inline FiniteGroup group(std::size_t degree, std::initializer_list<std::string_view> gens) {
  std::vector<Permutation> ps;
  for (std::string_view g : gens) ps.push_back(perm(degree, g));
  return closure(ps, degree);
}

inline FiniteGroup named(std::string_view spec) { return construct_named(parse_named_spec(spec)); }

inline std::string data_file(const std::string& name) { return std::string(LANDAU_DATA_DIR) + "/" + name; }

#ifdef LANDAU_TEST_DATA_DIR
inline std::string test_data_file(const std::string& name) { return std::string(LANDAU_TEST_DATA_DIR) + "/" + name; }
#endif

inline const Catalog& catalog(const std::string& name) {
  static std::map<std::string, Catalog> cache;
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, load_catalog(data_file(name))).first;
  return it->second;
}

inline std::vector<std::size_t> sorted_sizes(const std::vector<ConjClassRecord>& classes) {
  std::vector<std::size_t> s;
  for (const ConjClassRecord& c : classes) s.push_back(c.size);
  std::sort(s.begin(), s.end());
  return s;
}

// Elements of g as plain permutations, brute-force style.
inline bool commutes(const Permutation& a, const Permutation& b) { return a * b == b * a; }

}  // namespace testing
