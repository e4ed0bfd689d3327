// Test-only oracles, deliberately independent of the library's algorithms:
// recursive enumeration for semigroup membership, brute-force Apery sets,
// and exhaustive representation search.
#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "aatoric/common.hpp"

namespace oracle {

using aatoric::Int;

// Membership by plain recursion over the generator list (no DP table).
inline bool member(Int gamma, const std::vector<Int>& gens, std::size_t from = 0) {
  if (gamma == 0) return true;
  if (gamma < 0 || from == gens.size()) return false;
  for (Int k = 0; k * gens[from] <= gamma; ++k)
    if (member(gamma - k * gens[from], gens, from + 1)) return true;
  return false;
}

// All semigroup elements up to bound, by breadth enumeration.
inline std::set<Int> elements_up_to(const std::vector<Int>& gens, Int bound) {
  std::set<Int> out{0};
  for (Int g : gens) {
    std::set<Int> next = out;
    for (Int base : out)
      for (Int v = base + g; v <= bound; v += g) next.insert(v);
    out = std::move(next);
  }
  return out;
}

// Least semigroup element in each residue class mod m0.
inline std::vector<Int> apery(const std::vector<Int>& gens, Int m0) {
  Int bound = m0 * *std::max_element(gens.begin(), gens.end()) + m0;
  auto elems = elements_up_to(gens, bound);
  std::vector<Int> least(static_cast<std::size_t>(m0), -1);
  for (Int v : elems) {
    auto& slot = least[static_cast<std::size_t>(v % m0)];
    if (slot < 0) slot = v;
  }
  std::vector<Int> out(least.begin(), least.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oracle
