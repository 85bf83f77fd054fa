#include "relrigid/representation.hpp"

#include <numeric>
#include <string>

#include "relrigid/error.hpp"
#include "relrigid/linalg.hpp"

namespace relrigid {

namespace {

void check_shapes(const BoundAlgebra& alg, const std::vector<std::size_t>& dims, const std::vector<Matrix>& maps) {
  if (!alg.valid()) throw InputError("representation over an unbuilt algebra");
  const Quiver& q = alg.quiver();
  if (dims.size() != q.vertex_count()) {
    throw InputError("representation has " + std::to_string(dims.size()) + " vertex dimensions, algebra has " +
                     std::to_string(q.vertex_count()) + " vertices");
  }
  if (maps.size() != q.arrow_count()) throw InputError("representation arrow count mismatch");
  for (std::size_t a = 0; a < maps.size(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (maps[a].rows() != dims[ar.target] || maps[a].cols() != dims[ar.source]) {
      throw InputError("arrow '" + ar.name + "' matrix has shape " + std::to_string(maps[a].rows()) + "x" +
                       std::to_string(maps[a].cols()) + ", expected " + std::to_string(dims[ar.target]) + "x" +
                       std::to_string(dims[ar.source]));
    }
    if (!(maps[a].field() == alg.field())) throw InputError("arrow '" + ar.name + "' matrix over the wrong field");
  }
}

void require_same_algebra(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw InputError("modules over different algebras");
}

std::vector<std::size_t> offsets_of(const std::vector<std::size_t>& src, const std::vector<std::size_t>& tgt) {
  std::vector<std::size_t> off(src.size() + 1, 0);
  for (std::size_t v = 0; v < src.size(); ++v) off[v + 1] = off[v] + src[v] * tgt[v];
  return off;
}

}  // namespace

Representation::Representation(BoundAlgebra algebra, std::vector<std::size_t> dims, std::vector<Matrix> arrow_maps)
    : Representation(unchecked, std::move(algebra), std::move(dims), std::move(arrow_maps)) {
  if (!satisfies_relations()) throw InputError("representation does not satisfy the relations");
}

Representation::Representation(Unchecked, BoundAlgebra algebra, std::vector<std::size_t> dims,
                               std::vector<Matrix> arrow_maps) {
  check_shapes(algebra, dims, arrow_maps);
  data_ = std::make_shared<const Data>(Data{std::move(algebra), std::move(dims), std::move(arrow_maps)});
}

Representation Representation::zero(const BoundAlgebra& algebra) {
  const Quiver& q = algebra.quiver();
  std::vector<Matrix> maps(q.arrow_count(), Matrix(0, 0, algebra.field()));
  return Representation(unchecked, algebra, std::vector<std::size_t>(q.vertex_count(), 0), std::move(maps));
}

std::size_t Representation::total_dim() const {
  return std::accumulate(data_->dims.begin(), data_->dims.end(), std::size_t{0});
}

Matrix Representation::path_matrix(const Path& p) const {
  Matrix m = Matrix::identity(dim(p.source), field());
  for (std::size_t a : p.arrows) m = arrow_map(a) * m;
  return m;
}

bool Representation::satisfies_relations() const {
  for (const auto& r : algebra().relations()) {
    const Path& first = r.terms.front().second;
    Matrix sum(dim(first.target), dim(first.source), field());
    for (const auto& [c, p] : r.terms) sum = sum + path_matrix(p).scaled(c);
    if (!sum.is_zero()) return false;
  }
  return true;
}

Representation Representation::dual() const {
  std::vector<Matrix> maps;
  for (const auto& m : data_->maps) maps.push_back(m.transpose());
  return Representation(unchecked, algebra().opposite(), data_->dims, std::move(maps));
}

ModuleMap::ModuleMap(Representation source, Representation target, std::vector<Matrix> components)
    : ModuleMap(unchecked, std::move(source), std::move(target), std::move(components)) {
  if (!is_intertwining()) throw InputError("module map does not commute with the arrows");
}

ModuleMap::ModuleMap(Unchecked, Representation source, Representation target, std::vector<Matrix> components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
  require_same_algebra(source_, target_);
  if (components_.size() != source_.vertex_count()) throw InputError("module map component count mismatch");
  for (std::size_t v = 0; v < components_.size(); ++v) {
    if (components_[v].rows() != target_.dim(v) || components_[v].cols() != source_.dim(v)) {
      throw InputError("module map component shape mismatch at vertex " + std::to_string(v));
    }
  }
}

ModuleMap ModuleMap::zero(const Representation& source, const Representation& target) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < source.vertex_count(); ++v) {
    comps.emplace_back(target.dim(v), source.dim(v), source.field());
  }
  return ModuleMap(unchecked, source, target, std::move(comps));
}

ModuleMap ModuleMap::identity(const Representation& m) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) comps.push_back(Matrix::identity(m.dim(v), m.field()));
  return ModuleMap(unchecked, m, m, std::move(comps));
}

bool ModuleMap::is_intertwining() const {
  const Quiver& q = source_.algebra().quiver();
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    if (!(components_[ar.target] * source_.arrow_map(a) == target_.arrow_map(a) * components_[ar.source])) {
      return false;
    }
  }
  return true;
}

bool ModuleMap::is_zero() const {
  for (const auto& c : components_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool ModuleMap::is_injective() const {
  for (const auto& c : components_) {
    if (rank(c) != c.cols()) return false;
  }
  return true;
}

bool ModuleMap::is_surjective() const {
  for (const auto& c : components_) {
    if (rank(c) != c.rows()) return false;
  }
  return true;
}

bool ModuleMap::is_isomorphism() const {
  for (const auto& c : components_) {
    if (!is_invertible(c)) return false;
  }
  return true;
}

Matrix ModuleMap::flatten() const {
  std::size_t n = 0;
  for (const auto& c : components_) n += c.rows() * c.cols();
  Matrix out(n, 1, source_.field());
  std::size_t k = 0;
  for (const auto& c : components_) {
    for (std::size_t i = 0; i < c.rows(); ++i) {
      for (std::size_t j = 0; j < c.cols(); ++j) out.raw(k++, 0) = c(i, j);
    }
  }
  return out;
}

ModuleMap ModuleMap::dual() const {
  std::vector<Matrix> comps;
  for (const auto& c : components_) comps.push_back(c.transpose());
  return ModuleMap(unchecked, target_.dual(), source_.dual(), std::move(comps));
}

ModuleMap ModuleMap::scaled(const Rational& s) const {
  std::vector<Matrix> comps;
  for (const auto& c : components_) comps.push_back(c.scaled(s));
  return ModuleMap(unchecked, source_, target_, std::move(comps));
}

ModuleMap operator+(const ModuleMap& a, const ModuleMap& b) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < a.components_.size(); ++v) comps.push_back(a.components_[v] + b.components_.at(v));
  return ModuleMap(unchecked, a.source_, a.target_, std::move(comps));
}

ModuleMap operator-(const ModuleMap& a, const ModuleMap& b) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < a.components_.size(); ++v) comps.push_back(a.components_[v] - b.components_.at(v));
  return ModuleMap(unchecked, a.source_, a.target_, std::move(comps));
}

ModuleMap compose(const ModuleMap& g, const ModuleMap& f) {
  if (f.target().dims() != g.source().dims()) throw InputError("compose: maps are not composable");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < f.components().size(); ++v) comps.push_back(g.component(v) * f.component(v));
  return ModuleMap(unchecked, f.source(), g.target(), std::move(comps));
}

bool Conflation::is_exact() const {
  if (!inflation.is_injective() || !deflation.is_surjective()) return false;
  if (!compose(deflation, inflation).is_zero()) return false;
  for (std::size_t v = 0; v < middle().vertex_count(); ++v) {
    if (middle().dim(v) != first().dim(v) + last().dim(v)) return false;
  }
  return true;
}

HomSpace::HomSpace(const Representation& source, const Representation& target) : source_(source), target_(target) {
  require_same_algebra(source, target);
  const Quiver& q = source.algebra().quiver();
  const Field& field = source.field();
  const auto off = offsets_of(source.dims(), target.dims());
  const std::size_t unknowns = off.back();

  std::size_t equations = 0;
  for (const auto& ar : q.arrows()) equations += target.dim(ar.target) * source.dim(ar.source);
  Matrix sys(equations, unknowns, field);
  std::size_t row = 0;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const std::size_t i = ar.source, j = ar.target;
    const Matrix& ma = source.arrow_map(a);
    const Matrix& na = target.arrow_map(a);
    const std::size_t mi = source.dim(i), mj = source.dim(j), ni = target.dim(i), nj = target.dim(j);
    for (std::size_t r = 0; r < nj; ++r) {
      for (std::size_t c = 0; c < mi; ++c, ++row) {
        // (f_j M_a)[r,c] - (N_a f_i)[r,c]
        for (std::size_t k = 0; k < mj; ++k) {
          if (sgn(ma(k, c)) == 0) continue;
          auto& slot = sys.raw(row, off[j] + r * mj + k);
          slot = field.add(slot, ma(k, c));
        }
        for (std::size_t k = 0; k < ni; ++k) {
          if (sgn(na(r, k)) == 0) continue;
          auto& slot = sys.raw(row, off[i] + k * mi + c);
          slot = field.sub(slot, na(r, k));
        }
      }
    }
  }
  const Matrix ker = kernel_basis(sys);
  for (std::size_t b = 0; b < ker.cols(); ++b) {
    std::vector<Matrix> comps;
    for (std::size_t v = 0; v < source.vertex_count(); ++v) {
      Matrix c(target.dim(v), source.dim(v), field);
      for (std::size_t r = 0; r < c.rows(); ++r) {
        for (std::size_t s = 0; s < c.cols(); ++s) c.raw(r, s) = ker(off[v] + r * c.cols() + s, b);
      }
      comps.push_back(std::move(c));
    }
    basis_.emplace_back(unchecked, source, target, std::move(comps));
  }
  coordinate_map_ = ker.cols() == 0 ? Matrix(0, unknowns, field) : left_inverse(ker);
}

Matrix HomSpace::coordinates(const ModuleMap& f) const {
  const Matrix flat = f.flatten();
  if (flat.rows() != coordinate_map_.cols()) throw InputError("coordinates: map of the wrong shape");
  Matrix c = coordinate_map_ * flat;
  if (!(combination(c).flatten() == flat)) throw InputError("coordinates: not a module homomorphism");
  return c;
}

ModuleMap HomSpace::combination(const Matrix& coeffs) const {
  if (coeffs.rows() != basis_.size()) throw InputError("combination: coefficient count mismatch");
  ModuleMap out = ModuleMap::zero(source_, target_);
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (sgn(coeffs(i, 0)) == 0) continue;
    out = out + basis_[i].scaled(coeffs(i, 0));
  }
  return out;
}

std::vector<ModuleMap> hom_basis(const Representation& m, const Representation& n) { return HomSpace(m, n).basis(); }

std::size_t hom_dim(const Representation& m, const Representation& n) { return HomSpace(m, n).dim(); }

Submodule submodule(const Representation& m, const std::vector<Matrix>& spanning) {
  const Quiver& q = m.algebra().quiver();
  const Field& field = m.field();
  std::vector<Matrix> bases;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    Matrix b = spanning.at(v).cols() == 0 ? Matrix(m.dim(v), 0, field) : image_basis(spanning.at(v));
    dims.push_back(b.cols());
    bases.push_back(std::move(b));
  }
  std::vector<Matrix> lefts;
  for (const auto& b : bases) lefts.push_back(b.cols() == 0 ? Matrix(0, b.rows(), field) : left_inverse(b));
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    const Matrix moved = m.arrow_map(a) * bases[ar.source];
    Matrix x = lefts[ar.target] * moved;
    if (!(bases[ar.target] * x == moved)) throw ConsistencyError("submodule: subspace is not invariant");
    maps.push_back(std::move(x));
  }
  Representation sub(unchecked, m.algebra(), dims, std::move(maps));
  ModuleMap inc(unchecked, sub, m, std::move(bases));
  return {sub, inc};
}

QuotientModule quotient(const Representation& m, const std::vector<Matrix>& spanning) {
  const Quiver& q = m.algebra().quiver();
  const Field& field = m.field();
  std::vector<Matrix> sections, projections;
  std::vector<std::size_t> dims;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    const Matrix b = spanning.at(v).cols() == 0 ? Matrix(m.dim(v), 0, field) : image_basis(spanning.at(v));
    const Matrix c = complement_basis(b);
    const Matrix full = Matrix::hstack({b, c}, m.dim(v), field);
    const auto inv = inverse(full);
    if (!inv) throw ConsistencyError("quotient: complement is not complementary");
    projections.push_back(inv->block(b.cols(), 0, c.cols(), m.dim(v)));
    dims.push_back(c.cols());
    sections.push_back(c);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const Arrow& ar = q.arrow(a);
    maps.push_back(projections[ar.target] * m.arrow_map(a) * sections[ar.source]);
  }
  Representation quo(unchecked, m.algebra(), dims, std::move(maps));
  ModuleMap proj(unchecked, m, quo, std::move(projections));
  return {quo, proj, std::move(sections)};
}

Submodule kernel(const ModuleMap& f) {
  std::vector<Matrix> spans;
  for (const auto& c : f.components()) spans.push_back(kernel_basis(c));
  return submodule(f.source(), spans);
}

Submodule image(const ModuleMap& f) { return submodule(f.target(), f.components()); }

QuotientModule cokernel(const ModuleMap& f) { return quotient(f.target(), f.components()); }

namespace {

std::vector<Matrix> radical_spans(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<std::vector<Matrix>> parts(m.vertex_count());
  for (std::size_t a = 0; a < q.arrow_count(); ++a) parts[q.arrow(a).target].push_back(m.arrow_map(a));
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) spans.push_back(Matrix::hstack(parts[v], m.dim(v), m.field()));
  return spans;
}

}  // namespace

Submodule radical(const Representation& m) { return submodule(m, radical_spans(m)); }

QuotientModule top(const Representation& m) { return quotient(m, radical_spans(m)); }

Submodule socle(const Representation& m) {
  const Quiver& q = m.algebra().quiver();
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    std::vector<Matrix> outs;
    for (std::size_t a : q.arrows_from(v)) outs.push_back(m.arrow_map(a));
    const Matrix stacked = Matrix::vstack(outs, m.dim(v), m.field());
    spans.push_back(kernel_basis(stacked));
  }
  return submodule(m, spans);
}

Submodule trace_submodule(const Representation& x, const Representation& n) {
  const HomSpace h(x, n);
  std::vector<Matrix> spans;
  for (std::size_t v = 0; v < n.vertex_count(); ++v) {
    std::vector<Matrix> parts;
    for (const auto& f : h.basis()) parts.push_back(f.component(v));
    spans.push_back(Matrix::hstack(parts, n.dim(v), n.field()));
  }
  return submodule(n, spans);
}

bool in_fac(const Representation& n, const Representation& x) {
  return trace_submodule(x, n).module.dims() == n.dims();
}

DirectSum direct_sum(const BoundAlgebra& algebra, const std::vector<Representation>& parts) {
  const Quiver& q = algebra.quiver();
  const Field& field = algebra.field();
  const std::size_t nv = q.vertex_count();
  DirectSum out;
  std::vector<std::size_t> dims(nv, 0);
  for (const auto& p : parts) {
    if (!(p.algebra() == algebra)) throw InputError("direct_sum: summand over a different algebra");
    out.offsets.push_back(dims);
    for (std::size_t v = 0; v < nv; ++v) dims[v] += p.dim(v);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    std::vector<Matrix> blocks;
    for (const auto& p : parts) blocks.push_back(p.arrow_map(a));
    maps.push_back(Matrix::block_diagonal(blocks, field));
  }
  out.sum = Representation(unchecked, algebra, dims, std::move(maps));
  for (std::size_t k = 0; k < parts.size(); ++k) {
    std::vector<Matrix> inj, proj;
    for (std::size_t v = 0; v < nv; ++v) {
      Matrix i(dims[v], parts[k].dim(v), field);
      for (std::size_t r = 0; r < parts[k].dim(v); ++r) i.raw(out.offsets[k][v] + r, r) = 1;
      proj.push_back(i.transpose());
      inj.push_back(std::move(i));
    }
    out.injections.emplace_back(unchecked, parts[k], out.sum, std::move(inj));
    out.projections.emplace_back(unchecked, out.sum, parts[k], std::move(proj));
  }
  return out;
}

ModuleMap map_from_sum(const DirectSum& sum, const std::vector<ModuleMap>& maps, const Representation& target) {
  if (maps.size() != sum.injections.size()) throw InputError("map_from_sum: wrong number of maps");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < sum.sum.vertex_count(); ++v) {
    std::vector<Matrix> parts;
    for (const auto& f : maps) parts.push_back(f.component(v));
    comps.push_back(Matrix::hstack(parts, target.dim(v), target.field()));
  }
  return ModuleMap(unchecked, sum.sum, target, std::move(comps));
}

ModuleMap map_into_sum(const DirectSum& sum, const std::vector<ModuleMap>& maps, const Representation& source) {
  if (maps.size() != sum.injections.size()) throw InputError("map_into_sum: wrong number of maps");
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < sum.sum.vertex_count(); ++v) {
    std::vector<Matrix> parts;
    for (const auto& f : maps) parts.push_back(f.component(v));
    comps.push_back(Matrix::vstack(parts, source.dim(v), source.field()));
  }
  return ModuleMap(unchecked, source, sum.sum, std::move(comps));
}

ModuleMap diagonal_map(const DirectSum& from, const DirectSum& to, const std::vector<ModuleMap>& maps) {
  if (maps.size() != from.injections.size() || maps.size() != to.injections.size()) {
    throw InputError("diagonal_map: wrong number of maps");
  }
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < from.sum.vertex_count(); ++v) {
    std::vector<Matrix> blocks;
    for (const auto& f : maps) blocks.push_back(f.component(v));
    comps.push_back(Matrix::block_diagonal(blocks, from.sum.field()));
  }
  return ModuleMap(unchecked, from.sum, to.sum, std::move(comps));
}

}  // namespace relrigid
