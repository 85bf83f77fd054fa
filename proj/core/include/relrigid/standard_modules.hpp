#pragma once

#include <cstddef>

#include "relrigid/representation.hpp"

namespace relrigid {

// P(i): the vertex-j space has the path classes i -> j as basis.
Representation projective_module(const BoundAlgebra& algebra, std::size_t i);

// I(i): the vertex-j space is dual to the path classes j -> i.
Representation injective_module(const BoundAlgebra& algebra, std::size_t i);

Representation simple_module(const BoundAlgebra& algebra, std::size_t i);

// The regular module, as the sum of all P(i) in vertex order.
DirectSum regular_module(const BoundAlgebra& algebra);

}  // namespace relrigid
