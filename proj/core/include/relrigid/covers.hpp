#pragma once

#include <cstddef>
#include <vector>

#include "relrigid/representation.hpp"

namespace relrigid {

// Omega M >-> P ->> M with P = (+) P(vertices[k]).
struct ProjectiveCover {
  Conflation sequence;
  std::vector<std::size_t> vertices;
  DirectSum projective;

  const Representation& syzygy() const { return sequence.first(); }
  const Representation& module() const { return sequence.middle(); }
  const ModuleMap& deflation() const { return sequence.deflation; }
};

// M >-> I ->> Sigma M with I = (+) I(vertices[k]).
struct InjectiveEnvelope {
  Conflation sequence;
  std::vector<std::size_t> vertices;
  DirectSum injective;

  const Representation& cosyzygy() const { return sequence.last(); }
  const Representation& module() const { return sequence.middle(); }
  const ModuleMap& inflation() const { return sequence.inflation; }
};

ProjectiveCover projective_cover(const Representation& m);
InjectiveEnvelope injective_envelope(const Representation& m);

// Vertices of the projective summands of a minimal cover, one per top basis vector.
std::vector<std::size_t> top_vertices(const Representation& m);

}  // namespace relrigid
