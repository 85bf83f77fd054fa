#include "relrigid/homological.hpp"

#include "relrigid/error.hpp"
#include "relrigid/standard_modules.hpp"

namespace relrigid {

ProjectivePresentation min_proj_presentation(const Representation& m) {
  ProjectiveCover c0 = projective_cover(m);
  ProjectiveCover c1 = projective_cover(c0.syzygy());
  ModuleMap f = compose(c0.sequence.inflation, c1.deflation());
  return {std::move(c0), std::move(c1), std::move(f)};
}

ProjectiveResolution projective_resolution(const Representation& m, std::size_t length) {
  ProjectiveResolution r;
  r.covers.push_back(projective_cover(m));
  for (std::size_t i = 1; i <= length; ++i) {
    r.covers.push_back(projective_cover(r.covers.back().syzygy()));
    r.differentials.push_back(compose(r.covers[i - 1].sequence.inflation, r.covers[i].deflation()));
  }
  return r;
}

Representation syzygy(const Representation& m, std::size_t times) {
  Representation x = m;
  for (std::size_t i = 0; i < times; ++i) x = projective_cover(x).syzygy();
  return x;
}

Representation cosyzygy(const Representation& m, std::size_t times) {
  Representation x = m;
  for (std::size_t i = 0; i < times; ++i) x = injective_envelope(x).cosyzygy();
  return x;
}

ProjectiveMatrix projective_matrix(const ModuleMap& f, const std::vector<std::size_t>& source_vertices,
                                   const DirectSum& source, const std::vector<std::size_t>& target_vertices,
                                   const DirectSum& target) {
  const BoundAlgebra& alg = f.source().algebra();
  ProjectiveMatrix pm{source_vertices, target_vertices, {}};
  pm.entries.assign(target_vertices.size(), std::vector<SparseVector>(source_vertices.size()));
  for (std::size_t k = 0; k < source_vertices.size(); ++k) {
    const std::size_t s = source_vertices[k];
    const std::size_t gen = source.offsets[k][s] + alg.block_position(alg.idempotent(s));
    const Matrix image = f.component(s).column(gen);
    for (std::size_t j = 0; j < target_vertices.size(); ++j) {
      const auto& paths = alg.basis_between(target_vertices[j], s);
      const std::size_t off = target.offsets[j][s];
      SparseVector x;
      for (std::size_t r = 0; r < paths.size(); ++r) {
        if (sgn(image(off + r, 0)) != 0) x.emplace_back(paths[r], image(off + r, 0));
      }
      pm.entries[j][k] = std::move(x);
    }
  }
  return pm;
}

Matrix hom_into(const ProjectiveMatrix& f, const Representation& n) {
  const BoundAlgebra& alg = n.algebra();
  std::vector<std::size_t> row_off{0}, col_off{0};
  for (auto s : f.source_vertices) row_off.push_back(row_off.back() + n.dim(s));
  for (auto t : f.target_vertices) col_off.push_back(col_off.back() + n.dim(t));
  Matrix out(row_off.back(), col_off.back(), n.field());
  for (std::size_t j = 0; j < f.target_vertices.size(); ++j) {
    for (std::size_t k = 0; k < f.source_vertices.size(); ++k) {
      Matrix block(n.dim(f.source_vertices[k]), n.dim(f.target_vertices[j]), n.field());
      for (const auto& [idx, c] : f.entries[j][k]) block = block + n.path_matrix(alg.basis()[idx]).scaled(c);
      out.set_block(row_off[k], col_off[j], block);
    }
  }
  return out;
}

ModuleMap nakayama(const BoundAlgebra& alg, const ProjectiveMatrix& f) {
  std::vector<Representation> src_parts, tgt_parts;
  for (auto s : f.source_vertices) src_parts.push_back(injective_module(alg, s));
  for (auto t : f.target_vertices) tgt_parts.push_back(injective_module(alg, t));
  const DirectSum src = direct_sum(alg, src_parts);
  const DirectSum tgt = direct_sum(alg, tgt_parts);
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
    Matrix c(tgt.sum.dim(v), src.sum.dim(v), alg.field());
    for (std::size_t j = 0; j < f.target_vertices.size(); ++j) {
      const auto& qs = alg.basis_between(v, f.target_vertices[j]);
      for (std::size_t k = 0; k < f.source_vertices.size(); ++k) {
        const auto& x = f.entries[j][k];
        if (x.empty()) continue;
        for (std::size_t r = 0; r < qs.size(); ++r) {
          for (const auto& [idx, coeff] : x) {
            for (const auto& [p, c2] : alg.multiply(qs[r], idx)) {
              const std::size_t row = tgt.offsets[j][v] + r;
              const std::size_t col = src.offsets[k][v] + alg.block_position(p);
              c.set(row, col, alg.field().add(c(row, col), alg.field().mul(coeff, c2)));
            }
          }
        }
      }
    }
    comps.push_back(std::move(c));
  }
  return ModuleMap(unchecked, src.sum, tgt.sum, std::move(comps));
}

Representation ar_translate(const Representation& m) {
  const ProjectivePresentation pres = min_proj_presentation(m);
  const ProjectiveMatrix pm = projective_matrix(pres.f, pres.cover1.vertices, pres.cover1.projective,
                                                pres.cover0.vertices, pres.cover0.projective);
  return kernel(nakayama(m.algebra(), pm)).module;
}

Representation inverse_ar_translate(const Representation& m) { return ar_translate(m.dual()).dual(); }

std::size_t ext_dim(const Representation& m, const Representation& n, std::size_t i) {
  if (i == 0) throw InputError("ext_dim: degree must be at least 1");
  const ProjectiveResolution res = projective_resolution(m, i + 1);
  auto delta = [&](std::size_t k) {  // Hom(P_k, N) -> Hom(P_(k+1), N)
    const auto& d = res.differentials[k];
    const ProjectiveMatrix pm = projective_matrix(d, res.covers[k + 1].vertices, res.covers[k + 1].projective,
                                                  res.covers[k].vertices, res.covers[k].projective);
    return hom_into(pm, n);
  };
  std::size_t cochain_dim = 0;
  for (auto v : res.covers[i].vertices) cochain_dim += n.dim(v);
  const std::size_t out_rank = rank(delta(i));
  const std::size_t in_rank = rank(delta(i - 1));
  return cochain_dim - out_rank - in_rank;
}

std::size_t ext1_dim_shift(const Representation& m, const Representation& n) {
  const ProjectiveCover c = projective_cover(m);
  std::size_t p0 = 0;
  for (auto v : c.vertices) p0 += n.dim(v);
  return hom_dim(c.syzygy(), n) + hom_dim(m, n) - p0;
}

std::size_t ext1_dim_envelope(const Representation& m, const Representation& n) {
  const InjectiveEnvelope env = injective_envelope(n);
  const HomSpace target(m, env.cosyzygy());
  Subspace lifted(target.dim(), m.field());
  for (const auto& g : hom_basis(m, env.injective.sum)) {
    lifted.add(target.coordinates(compose(env.sequence.deflation, g)));
  }
  return target.dim() - lifted.dim();
}

StableHom::StableHom(HomSpace ambient, Subspace subspace) : ambient_(std::move(ambient)), subspace_(std::move(subspace)) {
  if (subspace_.ambient_dim() != ambient_.dim()) throw ConsistencyError("StableHom: subspace of the wrong size");
}

bool StableHom::is_zero_class(const ModuleMap& f) const { return subspace_.contains(ambient_.coordinates(f)); }

Matrix StableHom::class_of(const ModuleMap& f) const {
  return subspace_.quotient_coordinates(ambient_.coordinates(f));
}

std::vector<ModuleMap> StableHom::representatives() const {
  std::vector<ModuleMap> out;
  for (std::size_t pos : subspace_.free_positions()) out.push_back(ambient_[pos]);
  return out;
}

StableHom stable_hom(const Representation& m, const Representation& n) {
  HomSpace ambient(m, n);
  const ProjectiveCover cover = projective_cover(n);
  Subspace sub(ambient.dim(), m.field());
  if (ambient.dim() > 0) {
    for (const auto& g : hom_basis(m, cover.module())) {
      sub.add(ambient.coordinates(compose(cover.deflation(), g)));
      if (sub.is_full()) break;
    }
  }
  return StableHom(std::move(ambient), std::move(sub));
}

Subspace ideal_subspace(const std::vector<Representation>& through, const HomSpace& ambient) {
  Subspace sub(ambient.dim(), ambient.source().field());
  if (ambient.dim() == 0) return sub;
  for (const auto& x : through) {
    const HomSpace first(ambient.source(), x);
    if (first.dim() == 0) continue;
    const HomSpace second(x, ambient.target());
    for (const auto& h : second.basis()) {
      for (const auto& g : first.basis()) {
        sub.add(ambient.coordinates(compose(h, g)));
        if (sub.is_full()) return sub;
      }
    }
  }
  return sub;
}

StableHom ideal_hom(const std::vector<Representation>& through, const Representation& m, const Representation& n) {
  HomSpace ambient(m, n);
  Subspace sub = ideal_subspace(through, ambient);
  return StableHom(std::move(ambient), std::move(sub));
}

bool factors_through_envelope(const ModuleMap& j, const InjectiveEnvelope& envelope) {
  if (!(j.target().dims() == envelope.cosyzygy().dims())) throw InputError("factors_through_envelope: wrong target");
  const Matrix flat = j.flatten();
  Subspace lifted(flat.rows(), j.source().field());
  for (const auto& g : hom_basis(j.source(), envelope.injective.sum)) {
    lifted.add(compose(envelope.sequence.deflation, g).flatten());
  }
  return lifted.contains(flat);
}

}  // namespace relrigid
