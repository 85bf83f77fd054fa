#pragma once

#include <cstddef>
#include <vector>

#include "relrigid/representation.hpp"

namespace relrigid {

struct Approximation {
  ModuleMap map;                    // X -> A for left, A -> X for right
  DirectSum object;                 // A as a sum of the chosen objects
  std::vector<std::size_t> chosen;  // objects[chosen[k]] is the k-th summand of A
};

// Minimal left add(objects)-approximation of x. `objects` should be indecomposable.
Approximation minimal_left_approximation(const Representation& x, const std::vector<Representation>& objects);
// Minimal right add(objects)-approximation of x.
Approximation minimal_right_approximation(const Representation& x, const std::vector<Representation>& objects);

}  // namespace relrigid
