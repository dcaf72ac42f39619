#pragma once

// Small brute-force reference computations for tests.  Everything here works
// by explicit element enumeration and ignores the chain machinery under test.

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <vector>

#include "cgt/perm.hpp"

namespace cgt::testutil {

// Closure of the generators under multiplication, as a sorted element list.
inline std::vector<Perm> brute_elements(unsigned degree,
                                        const std::vector<Perm>& gens,
                                        std::size_t cap = 20000) {
  std::set<Perm> seen;
  std::deque<Perm> queue;
  Perm id(degree);
  seen.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap) {
          throw std::runtime_error("brute_elements: cap exceeded");
        }
        queue.push_back(next);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

inline bool brute_is_member(const std::vector<Perm>& elements, const Perm& g) {
  return std::binary_search(elements.begin(), elements.end(), g);
}

}  // namespace cgt::testutil
