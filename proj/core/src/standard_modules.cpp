#include "relrigid/standard_modules.hpp"

#include "relrigid/error.hpp"

namespace relrigid {

Representation projective_module(const BoundAlgebra& algebra, std::size_t i) {
  const Quiver& q = algebra.quiver();
  if (i >= q.vertex_count()) throw InputError("projective_module: no such vertex");
  const Field& field = algebra.field();
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims.push_back(algebra.basis_between(i, j).size());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.target], dims[ar.source], field);
    const auto& cols = algebra.basis_between(i, ar.source);
    for (std::size_t c = 0; c < cols.size(); ++c) {
      const Path moved = algebra.basis()[cols[c]].then(Path::of_arrow(q, a));
      for (const auto& [idx, coeff] : algebra.normal_form(moved)) m.set(algebra.block_position(idx), c, coeff);
    }
    maps.push_back(std::move(m));
  }
  return Representation(unchecked, algebra, std::move(dims), std::move(maps));
}

Representation injective_module(const BoundAlgebra& algebra, std::size_t i) {
  const Quiver& q = algebra.quiver();
  if (i >= q.vertex_count()) throw InputError("injective_module: no such vertex");
  const Field& field = algebra.field();
  std::vector<std::size_t> dims;
  for (std::size_t j = 0; j < q.vertex_count(); ++j) dims.push_back(algebra.basis_between(j, i).size());
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    Matrix m(dims[ar.target], dims[ar.source], field);
    const auto& rows = algebra.basis_between(ar.target, i);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Path moved = Path::of_arrow(q, a).then(algebra.basis()[rows[r]]);
      for (const auto& [idx, coeff] : algebra.normal_form(moved)) m.set(r, algebra.block_position(idx), coeff);
    }
    maps.push_back(std::move(m));
  }
  return Representation(unchecked, algebra, std::move(dims), std::move(maps));
}

Representation simple_module(const BoundAlgebra& algebra, std::size_t i) {
  const Quiver& q = algebra.quiver();
  if (i >= q.vertex_count()) throw InputError("simple_module: no such vertex");
  std::vector<std::size_t> dims(q.vertex_count(), 0);
  dims[i] = 1;
  std::vector<Matrix> maps;
  for (const auto& ar : q.arrows()) maps.emplace_back(dims[ar.target], dims[ar.source], algebra.field());
  return Representation(unchecked, algebra, std::move(dims), std::move(maps));
}

DirectSum regular_module(const BoundAlgebra& algebra) {
  std::vector<Representation> parts;
  for (std::size_t i = 0; i < algebra.vertex_count(); ++i) parts.push_back(projective_module(algebra, i));
  return direct_sum(algebra, parts);
}

}  // namespace relrigid
