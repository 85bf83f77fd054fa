#include "relrigid/covers.hpp"

#include "relrigid/linalg.hpp"
#include "relrigid/standard_modules.hpp"

namespace relrigid {

namespace {

// The map P(i) -> M sending e_i to x in M_i.
ModuleMap from_projective(const Representation& p, std::size_t i, const Representation& m, const Matrix& x) {
  const BoundAlgebra& alg = m.algebra();
  std::vector<Matrix> comps;
  for (std::size_t j = 0; j < m.vertex_count(); ++j) {
    Matrix c(m.dim(j), p.dim(j), m.field());
    const auto& paths = alg.basis_between(i, j);
    for (std::size_t k = 0; k < paths.size(); ++k) c.set_block(0, k, m.path_matrix(alg.basis()[paths[k]]) * x);
    comps.push_back(std::move(c));
  }
  return ModuleMap(unchecked, p, m, std::move(comps));
}

// The map M -> I(i) induced by a functional xi on M_i.
ModuleMap to_injective(const Representation& m, const Representation& inj, std::size_t i, const Matrix& xi) {
  const BoundAlgebra& alg = m.algebra();
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    Matrix c(inj.dim(v), m.dim(v), m.field());
    const auto& paths = alg.basis_between(v, i);
    for (std::size_t k = 0; k < paths.size(); ++k) c.set_block(k, 0, xi * m.path_matrix(alg.basis()[paths[k]]));
    comps.push_back(std::move(c));
  }
  return ModuleMap(unchecked, m, inj, std::move(comps));
}

}  // namespace

std::vector<std::size_t> top_vertices(const Representation& m) {
  const QuotientModule t = top(m);
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    for (std::size_t k = 0; k < t.module.dim(v); ++k) out.push_back(v);
  }
  return out;
}

ProjectiveCover projective_cover(const Representation& m) {
  const BoundAlgebra& alg = m.algebra();
  const QuotientModule t = top(m);
  std::vector<std::size_t> vertices;
  std::vector<Representation> parts;
  std::vector<Matrix> generators;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    if (t.module.dim(v) == 0) continue;
    const Representation p = projective_module(alg, v);
    for (std::size_t k = 0; k < t.module.dim(v); ++k) {
      vertices.push_back(v);
      parts.push_back(p);
      generators.push_back(t.section[v].column(k));
    }
  }
  DirectSum sum = direct_sum(alg, parts);
  std::vector<ModuleMap> maps;
  for (std::size_t k = 0; k < parts.size(); ++k) maps.push_back(from_projective(parts[k], vertices[k], m, generators[k]));
  const ModuleMap deflation = map_from_sum(sum, maps, m);
  const Submodule omega = kernel(deflation);
  return {{omega.inclusion, deflation}, std::move(vertices), std::move(sum)};
}

InjectiveEnvelope injective_envelope(const Representation& m) {
  const BoundAlgebra& alg = m.algebra();
  const Submodule soc = socle(m);
  std::vector<std::size_t> vertices;
  std::vector<Representation> parts;
  std::vector<Matrix> functionals;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const Matrix& b = soc.inclusion.component(v);
    if (b.cols() == 0) continue;
    const Representation inj = injective_module(alg, v);
    const Matrix dual = left_inverse(b);
    for (std::size_t k = 0; k < b.cols(); ++k) {
      vertices.push_back(v);
      parts.push_back(inj);
      functionals.push_back(dual.block(k, 0, 1, m.dim(v)));
    }
  }
  DirectSum sum = direct_sum(alg, parts);
  std::vector<ModuleMap> maps;
  for (std::size_t k = 0; k < parts.size(); ++k) maps.push_back(to_injective(m, parts[k], vertices[k], functionals[k]));
  const ModuleMap inflation = map_into_sum(sum, maps, m);
  const QuotientModule sigma = cokernel(inflation);
  return {{inflation, sigma.projection}, std::move(vertices), std::move(sum)};
}

}  // namespace relrigid
