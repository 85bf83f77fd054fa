#include "relrigid/relative_rigid.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>

#include "relrigid/approximation.hpp"
#include "relrigid/error.hpp"
#include "relrigid/linalg.hpp"
#include "relrigid/standard_modules.hpp"

namespace relrigid {

namespace {

// a: A -> C and b: B >-> C with im a inside im b; returns A -> B.
ModuleMap factor_through_mono(const ModuleMap& a, const ModuleMap& b) {
  std::vector<Matrix> comps;
  for (std::size_t v = 0; v < a.source().vertex_count(); ++v) {
    const Matrix& bv = b.component(v);
    if (bv.cols() == 0) {
      comps.emplace_back(0, a.source().dim(v), a.source().field());
    } else {
      comps.push_back(left_inverse(bv) * a.component(v));
    }
  }
  ModuleMap out(a.source(), b.source(), std::move(comps));
  if (!(compose(b, out) - a).is_zero()) throw ConsistencyError("map does not factor through the monomorphism");
  return out;
}

bool in_add(const Representation& m, const std::vector<Representation>& generators) {
  if (m.is_zero()) return true;
  for (const auto& part : decompose(m).parts()) {
    if (!find_isomorphic(generators, part)) return false;
  }
  return true;
}

Conflation zero_conflation(const Representation& x) {
  return Conflation{ModuleMap::identity(x), ModuleMap::zero(x, x)};
}

Conflation witness_or_throw(const RigidSetting& s, const Representation& x) {
  auto w = in_H(s, x);
  if (!w) throw InputError("not in H");
  return *w;
}

// Omega R1 = ker(P ->> R1) inside Omega = ker(P ->> R1 ->> R2), for a cover P of R1.
struct SyzygySquare {
  Submodule omega1;
  Submodule omega2;
  ModuleMap f;  // omega1 -> omega2
};

SyzygySquare syzygy_square(const Conflation& witness) {
  const ProjectiveCover cover = projective_cover(witness.middle());
  const ModuleMap p = cover.deflation();
  SyzygySquare sq;
  sq.omega1 = kernel(p);
  sq.omega2 = kernel(compose(witness.deflation, p));
  sq.f = factor_through_mono(sq.omega1.inclusion, sq.omega2.inclusion);
  return sq;
}

std::vector<Representation> sorted_by_key(std::vector<Representation> parts) {
  std::vector<ModuleKey> keys;
  for (const auto& m : parts) keys.push_back(module_key(m));
  std::vector<std::size_t> order(parts.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::vector<Representation> out;
  for (auto i : order) out.push_back(parts[i]);
  return out;
}

bool same_object(const std::vector<Representation>& a, const std::vector<Representation>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& m : a) {
    bool found = false;
    for (std::size_t k = 0; k < b.size() && !found; ++k) {
      if (!used[k] && module_key(m) == module_key(b[k]) && is_isomorphic(m, b[k])) used[k] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

RigidSetting validate_setting(const BoundAlgebra& algebra, const Representation& r) {
  if (!(r.algebra() == algebra)) throw InputError("setting: R is a module over a different algebra");
  if (r.is_zero()) throw InputError("setting: R is zero");
  const Decomposition d = decompose(r);
  if (!d.is_basic()) throw InputError("setting: R is not basic");
  RigidSetting s;
  s.algebra = algebra;
  s.r = d.parts();
  s.r_sum = r;
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) s.projectives.push_back(projective_module(algebra, v));
  for (const auto& part : s.r) {
    if (projective_vertex(part)) throw InputError("setting: R has a projective summand (" + loewy_name(part) + ")");
  }
  if (ext_dim(r, r, 1) != 0) throw InputError("setting: R is not rigid, Ext^1(R, R) != 0");
  for (const auto& p : s.projectives) {
    if (ext_dim(r, p, 1) != 0) throw InputError("setting: Ext^1(R, Lambda) != 0 (at " + loewy_name(p) + ")");
  }
  for (const auto& part : s.r) {
    s.r_covers.push_back(projective_cover(part));
    const Representation omega = s.r_covers.back().syzygy();
    if (!is_indecomposable(omega)) {
      throw InputError("setting: the syzygy of " + loewy_name(part) + " is not indecomposable");
    }
    s.omega.push_back(omega);
  }
  s.generators = s.r;
  s.generators.insert(s.generators.end(), s.projectives.begin(), s.projectives.end());
  const std::size_t n = s.r.size();
  s.gamma_basis.assign(n, std::vector<std::vector<ModuleMap>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) s.gamma_basis[i][j] = stable_hom(s.omega[i], s.omega[j]).representatives();
  }
  return s;
}

bool in_R(const RigidSetting& s, const Representation& m) { return in_add(m, s.generators); }

std::optional<Conflation> in_H(const RigidSetting& s, const Representation& x) {
  if (x.is_zero()) return zero_conflation(x);
  const Approximation approx = minimal_left_approximation(x, s.generators);
  if (!approx.map.is_injective()) return std::nullopt;
  const QuotientModule c = cokernel(approx.map);
  if (!in_add(c.module, s.generators)) return std::nullopt;
  return Conflation{approx.map, c.projection};
}

std::optional<Conflation> in_H_bruteforce(const RigidSetting& s, const Representation& x, unsigned tries) {
  if (x.is_zero()) return zero_conflation(x);
  const auto& gens = s.generators;
  std::vector<std::vector<ModuleMap>> bases;
  std::vector<std::size_t> bound;
  for (const auto& g : gens) {
    bases.push_back(hom_basis(x, g));
    bound.push_back(bases.back().size());
  }
  std::size_t total = 1;
  for (auto b : bound) {
    total *= b + 1;
    if (total > 2000000) throw BudgetExceeded("in_H_bruteforce: search space too large");
  }
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::size_t> mult(gens.size(), 0);
  for (std::size_t c = 0; c < total; ++c) {
    std::size_t rest = c;
    for (std::size_t l = 0; l < gens.size(); ++l) {
      mult[l] = rest % (bound[l] + 1);
      rest /= bound[l] + 1;
    }
    bool big_enough = true;
    for (std::size_t v = 0; v < x.vertex_count() && big_enough; ++v) {
      std::size_t d = 0;
      for (std::size_t l = 0; l < gens.size(); ++l) d += mult[l] * gens[l].dim(v);
      big_enough = d >= x.dim(v);
    }
    if (big_enough) candidates.push_back(mult);
  }
  std::stable_sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.begin(), a.end(), std::size_t{0}) < std::accumulate(b.begin(), b.end(), std::size_t{0});
  });
  std::mt19937 rng(20240611u);
  std::uniform_int_distribution<int> coeff(-7, 7);
  const Field& field = x.field();
  for (const auto& m : candidates) {
    std::vector<Representation> parts;
    std::vector<std::size_t> owner;
    for (std::size_t l = 0; l < gens.size(); ++l) {
      for (std::size_t k = 0; k < m[l]; ++k) {
        parts.push_back(gens[l]);
        owner.push_back(l);
      }
    }
    const DirectSum target = direct_sum(s.algebra, parts);
    for (unsigned t = 0; t < tries; ++t) {
      std::vector<ModuleMap> maps;
      for (auto l : owner) {
        ModuleMap g = ModuleMap::zero(x, gens[l]);
        for (const auto& b : bases[l]) g = g + b.scaled(field.reduce(Rational(coeff(rng))));
        maps.push_back(g);
      }
      const ModuleMap h = map_into_sum(target, maps, x);
      if (!h.is_injective()) continue;
      const QuotientModule c = cokernel(h);
      if (in_add(c.module, gens)) return Conflation{h, c.projection};
    }
  }
  return std::nullopt;
}

RelRigidObject make_object(const RigidSetting& s, const Representation& x) {
  RelRigidObject o;
  o.module = x;
  if (!x.is_zero()) o.summands = decompose(x).parts();
  o.witness = in_H(s, x);
  return o;
}

bool is_R_rigid_def(const RigidSetting& s, const Representation& x) {
  if (x.is_zero()) return true;
  const InjectiveEnvelope env = injective_envelope(x);
  const HomSpace ambient(x, env.cosyzygy());
  if (ambient.dim() == 0) return true;
  const Subspace through_r = ideal_subspace(s.r, ambient);
  const Matrix basis = through_r.basis();
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    if (!factors_through_envelope(ambient.combination(basis.column(c)), env)) return false;
  }
  return true;
}

bool is_R_rigid_syz(const RigidSetting& s, const Representation& x) {
  return is_R_rigid_syz(s, witness_or_throw(s, x));
}

bool is_R_rigid_syz(const RigidSetting&, const Conflation& witness) {
  const Representation& x = witness.first();
  if (x.is_zero() || witness.middle().is_zero()) return true;
  const SyzygySquare sq = syzygy_square(witness);
  const StableHom target = stable_hom(sq.omega1.module, x);
  Subspace covered = target.subspace();
  for (const auto& b : hom_basis(sq.omega2.module, x)) {
    if (covered.is_full()) break;
    covered.add(target.ambient().coordinates(compose(b, sq.f)));
  }
  return covered.is_full();
}

bool rigid_sum_check(const RigidSetting& s, const Representation& x0, const Representation& r0) {
  if (!in_R(s, r0)) throw InputError("rigid_sum_check: R0 is not in add(R + Lambda)");
  if (!is_R_rigid_def(s, x0)) throw InputError("rigid_sum_check: X0 is not R-rigid");
  const bool ext_vanishes = ext_dim(r0, x0, 1) == 0;
  const bool sum_rigid = is_R_rigid_def(s, direct_sum(s.algebra, {x0, r0}).sum);
  if (ext_vanishes != sum_rigid) {
    throw ConsistencyError("rigid_sum_check: Ext^1(R0, X0) = 0 is " + std::string(ext_vanishes ? "true" : "false") +
                           " but rigidity of X0 + R0 is " + (sum_rigid ? "true" : "false"));
  }
  return ext_vanishes;
}

FImage F_image(const RigidSetting& s, const Representation& x) {
  if (!in_H(s, x)) throw InputError("not in H");
  FImage out;
  out.gamma_dims.assign(s.rank(), 0);
  if (x.is_zero()) return out;
  for (const auto& part : decompose(x).summands) {
    if (auto i = find_isomorphic(s.r, part.module)) {
      out.projective_part.push_back(*i);
    } else if (!projective_vertex(part.module)) {
      out.module_part.push_back(part.module);
      for (std::size_t i = 0; i < s.rank(); ++i) out.gamma_dims[i] += stable_hom(s.omega[i], part.module).dim();
    }
  }
  std::sort(out.projective_part.begin(), out.projective_part.end());
  return out;
}

GammaModule gamma_module(const RigidSetting& s, const Representation& x) {
  const std::size_t n = s.rank();
  std::vector<StableHom> spaces;
  std::vector<std::vector<ModuleMap>> reps;
  GammaModule g;
  for (std::size_t i = 0; i < n; ++i) {
    spaces.push_back(stable_hom(s.omega[i], x));
    reps.push_back(spaces.back().representatives());
    g.dims.push_back(spaces.back().dim());
  }
  g.action.assign(n, std::vector<std::vector<Matrix>>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (const auto& gamma : s.gamma_basis[i][j]) {
        Matrix a(g.dims[i], g.dims[j], x.field());
        for (std::size_t c = 0; c < g.dims[j]; ++c) {
          a.set_block(0, c, spaces[i].class_of(compose(reps[j][c], gamma)));
        }
        g.action[i][j].push_back(std::move(a));
      }
    }
  }
  return g;
}

std::vector<Matrix> gamma_hom_basis(const GammaModule& a, const GammaModule& b, const Field& field) {
  const std::size_t n = a.dims.size();
  if (b.dims.size() != n) throw InputError("gamma_hom_basis: modules over different rings");
  std::vector<std::size_t> offset(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) offset[i + 1] = offset[i] + b.dims[i] * a.dims[i];
  const std::size_t unknowns = offset[n];
  if (unknowns == 0) return {};
  // phi_i * A_gamma = B_gamma * phi_j for gamma: Omega R_i -> Omega R_j.
  std::vector<std::vector<Rational>> rows;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < a.action[i][j].size(); ++k) {
        const Matrix& ag = a.action[i][j][k];
        const Matrix& bg = b.action[i][j][k];
        for (std::size_t r = 0; r < b.dims[i]; ++r) {
          for (std::size_t c = 0; c < a.dims[j]; ++c) {
            std::vector<Rational> row(unknowns, Rational(0));
            for (std::size_t t = 0; t < a.dims[i]; ++t) row[offset[i] + r * a.dims[i] + t] += ag(t, c);
            for (std::size_t t = 0; t < b.dims[j]; ++t) row[offset[j] + t * a.dims[j] + c] -= bg(r, t);
            rows.push_back(std::move(row));
          }
        }
      }
    }
  }
  Matrix system(rows.size(), unknowns, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < unknowns; ++c) {
      if (rows[r][c] != 0) system.set(r, c, rows[r][c]);
    }
  }
  const Matrix kernel = rows.empty() ? Matrix::identity(unknowns, field) : kernel_basis(system);
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < kernel.cols(); ++c) out.push_back(kernel.column(c));
  return out;
}

std::size_t gamma_hom_dim(const GammaModule& a, const GammaModule& b, const Field& field) {
  return gamma_hom_basis(a, b, field).size();
}

bool gamma_isomorphic(const GammaModule& a, const GammaModule& b, const Field& field) {
  if (a.dims != b.dims) return false;
  const std::size_t n = a.dims.size();
  const auto basis = gamma_hom_basis(a, b, field);
  auto invertible = [&](const Matrix& flat) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t d = a.dims[i];
      Matrix block(d, d, field);
      for (std::size_t r = 0; r < d; ++r) {
        for (std::size_t c = 0; c < d; ++c) block.set(r, c, flat(pos++, 0));
      }
      if (!is_invertible(block)) return false;
    }
    return true;
  };
  if (std::accumulate(a.dims.begin(), a.dims.end(), std::size_t{0}) == 0) return true;
  for (const auto& f : basis) {
    if (invertible(f)) return true;
  }
  if (basis.empty()) return false;
  std::mt19937 rng(7u);
  std::uniform_int_distribution<int> coeff(-1000, 1000);
  for (int t = 0; t < 32; ++t) {
    Matrix f(basis.front().rows(), 1, field);
    for (const auto& b : basis) f = f + b.scaled(field.reduce(Rational(coeff(rng))));
    if (invertible(f)) return true;
  }
  return false;
}

bool gamma_in_fac(const GammaModule& a, const GammaModule& n, const Field& field) {
  const std::size_t k = a.dims.size();
  const auto basis = gamma_hom_basis(n, a, field);
  std::size_t pos0 = 0;
  for (std::size_t i = 0; i < k; ++i) {
    Subspace image(a.dims[i], field);
    for (const auto& phi : basis) {
      std::size_t pos = pos0;
      Matrix block(a.dims[i], n.dims[i], field);
      for (std::size_t r = 0; r < a.dims[i]; ++r) {
        for (std::size_t c = 0; c < n.dims[i]; ++c) block.set(r, c, phi(pos++, 0));
      }
      image.add_columns(block);
    }
    if (!image.is_full()) return false;
    pos0 += a.dims[i] * n.dims[i];
  }
  return true;
}

std::size_t hbar_hom_dim(const RigidSetting& s, const Representation& x, const Representation& y) {
  return ideal_hom(s.generators, x, y).dim();
}

bool is_maximal_R_rigid(const RigidSetting& s, const Representation& x) {
  if (x.is_zero()) return s.rank() == 0;
  const Decomposition d = decompose(x);
  if (!d.is_basic()) throw InputError("is_maximal_R_rigid: object is not basic");
  for (const auto& part : d.parts()) {
    if (projective_vertex(part)) throw InputError("is_maximal_R_rigid: object has a projective summand");
  }
  if (!in_H(s, x)) throw InputError("not in H");
  return d.summand_count() == s.rank() && is_R_rigid_def(s, x);
}

bool is_maximal_by_definition(const RigidSetting& s, const Representation& x,
                              const std::vector<Representation>& library) {
  if (!is_R_rigid_def(s, x) || !in_H(s, x)) return false;
  const auto parts = x.is_zero() ? std::vector<Representation>{} : decompose(x).parts();
  for (const auto& z : library) {
    if (projective_vertex(z) || find_isomorphic(parts, z)) continue;
    if (!in_H(s, z)) continue;
    if (is_R_rigid_def(s, direct_sum(s.algebra, {x, z}).sum)) return false;
  }
  return true;
}

bool in_M_star_R(const RigidSetting& s, const Representation& x, const Representation& m) {
  std::vector<Representation> through = s.projectives;
  if (!m.is_zero()) through.push_back(m);
  for (const auto& omega : s.omega) {
    const HomSpace ambient(omega, x);
    if (!ideal_subspace(through, ambient).is_full()) return false;
  }
  return true;
}

bool rel_leq(const RigidSetting& s, const Representation& n, const Representation& m) { return in_M_star_R(s, n, m); }

RigidMutation mutate_max_rigid(const RigidSetting& s, const std::vector<Representation>& summands, std::size_t index) {
  if (index >= summands.size()) throw InputError("mutate_max_rigid: summand index out of range");
  const Representation& x = summands[index];
  if (projective_vertex(x)) throw InputError("mutate_max_rigid: cannot mutate at a projective summand");
  std::vector<Representation> others;
  for (std::size_t k = 0; k < summands.size(); ++k) {
    if (k != index && !projective_vertex(summands[k])) others.push_back(summands[k]);
  }
  std::vector<Representation> u = others;
  u.insert(u.end(), s.projectives.begin(), s.projectives.end());
  const Representation u_sum = direct_sum(s.algebra, u).sum;

  RigidMutation out;
  if (in_M_star_R(s, x, u_sum)) {
    const Approximation approx = minimal_right_approximation(x, u);
    if (!approx.map.is_surjective()) throw ConsistencyError("mutation: right approximation is not a deflation");
    const Submodule k = kernel(approx.map);
    out.complement = k.module;
    out.sequence = Conflation{k.inclusion, approx.map};
    out.direction = Direction::Up;
  } else {
    const Approximation approx = minimal_left_approximation(x, u);
    if (!approx.map.is_injective()) throw ConsistencyError("mutation: left approximation is not an inflation");
    const QuotientModule c = cokernel(approx.map);
    out.complement = c.module;
    out.sequence = Conflation{approx.map, c.projection};
    out.direction = Direction::Down;
  }
  const Representation& y = out.complement;
  if (y.is_zero() || !is_indecomposable(y)) throw ConsistencyError("mutation: complement is not indecomposable");
  for (const auto& m : summands) {
    if (is_isomorphic(m, y)) throw ConsistencyError("mutation: complement lies in add M");
  }
  if (projective_vertex(y)) throw ConsistencyError("mutation: complement is projective");
  out.result = others;
  out.result.push_back(y);
  out.result = sorted_by_key(std::move(out.result));
  if (!is_maximal_R_rigid(s, direct_sum(s.algebra, out.result).sum)) {
    throw ConsistencyError("mutation: result is not maximal R-rigid");
  }
  return out;
}

RigidMutation mutate_max_rigid(const RigidSetting& s, const Representation& m, const Representation& x) {
  const auto parts = decompose(m).parts();
  const auto index = find_isomorphic(parts, x);
  if (!index) throw InputError("mutate_max_rigid: X is not a summand of M");
  return mutate_max_rigid(s, parts, *index);
}

std::string object_label(const std::vector<Representation>& summands, ModuleCatalog& catalog) {
  std::string s;
  for (const auto& m : summands) {
    if (!s.empty()) s += " + ";
    s += catalog.name(m);
  }
  return s.empty() ? "0" : s;
}

RigidExchangeGraph enumerate_max_rigid(const RigidSetting& s, std::size_t budget) {
  if (budget < 1) throw BudgetExceeded("enumeration budget of 0 nodes exceeded");
  struct RawEdge {
    std::size_t from, to;
    Representation replaced, introduced;
    Direction direction;
  };
  RigidExchangeGraph g;
  std::vector<RawEdge> raw;
  g.nodes.push_back(sorted_by_key(s.r));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const auto current = g.nodes[i];
    for (std::size_t k = 0; k < current.size(); ++k) {
      RigidMutation mu = mutate_max_rigid(s, current, k);
      std::size_t j = g.nodes.size();
      for (std::size_t t = 0; t < g.nodes.size(); ++t) {
        if (same_object(g.nodes[t], mu.result)) {
          j = t;
          break;
        }
      }
      if (j == g.nodes.size()) {
        if (g.nodes.size() >= budget) {
          throw BudgetExceeded("enumeration exceeds the budget of " + std::to_string(budget) + " nodes");
        }
        g.nodes.push_back(mu.result);
        queue.push_back(j);
      }
      if (i < j) raw.push_back({i, j, current[k], mu.complement, mu.direction});
    }
  }
  ModuleCatalog catalog;
  for (const auto& node : g.nodes) {
    g.labels.push_back(object_label(node, catalog));
    g.sums.push_back(direct_sum(s.algebra, node).sum);
  }
  for (const auto& e : raw) {
    g.edges.push_back({e.from, e.to, catalog.name(e.replaced), catalog.name(e.introduced)});
    g.directions.push_back(e.direction);
  }
  const std::size_t n = g.nodes.size();
  g.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) g.leq[a][b] = a == b || rel_leq(s, g.sums[a], g.sums[b]);
  }
  return g;
}

BijectionReport verify_bijection(const RigidSetting& s, const RigidExchangeGraph& graph) {
  BijectionReport report;
  const Field& field = s.algebra.field();
  const std::size_t n = s.rank();
  std::vector<GammaModule> modules;
  for (std::size_t a = 0; a < graph.nodes.size(); ++a) {
    const Representation& x = graph.sums[a];
    const std::string& label = graph.labels[a];
    FImage image = F_image(s, x);
    if (image.module_part.size() + image.projective_part.size() != n) {
      report.violations.push_back(label + ": image has " + std::to_string(image.module_part.size()) + " + " +
                                  std::to_string(image.projective_part.size()) + " summands, expected " +
                                  std::to_string(n));
    }
    for (auto i : image.projective_part) {
      if (image.gamma_dims[i] != 0) report.violations.push_back(label + ": Hom(P_" + std::to_string(i + 1) + ", M) != 0");
    }
    std::vector<GammaModule> parts;
    for (const auto& m : image.module_part) {
      parts.push_back(gamma_module(s, m));
      const auto& d = parts.back().dims;
      if (std::accumulate(d.begin(), d.end(), std::size_t{0}) == 0) {
        report.violations.push_back(label + ": summand " + loewy_name(m) + " has zero image");
      }
    }
    for (std::size_t p = 0; p < parts.size(); ++p) {
      for (std::size_t q = p + 1; q < parts.size(); ++q) {
        if (gamma_isomorphic(parts[p], parts[q], field)) report.violations.push_back(label + ": image is not basic");
      }
    }
    modules.push_back(gamma_module(s, x));
    report.rows.push_back({label, std::move(image)});
  }
  for (std::size_t a = 0; a < graph.nodes.size(); ++a) {
    for (std::size_t b = 0; b < graph.nodes.size(); ++b) {
      const std::size_t over_gamma = gamma_hom_dim(modules[a], modules[b], field);
      const std::size_t in_hbar = hbar_hom_dim(s, graph.sums[a], graph.sums[b]);
      ++report.transport_pairs;
      if (over_gamma != in_hbar) {
        report.violations.push_back("transport " + graph.labels[a] + " -> " + graph.labels[b] + ": " +
                                    std::to_string(over_gamma) + " over Gamma, " + std::to_string(in_hbar) +
                                    " modulo R");
      }
      if (b <= a) continue;
      if (report.rows[a].image.projective_part == report.rows[b].image.projective_part &&
          gamma_isomorphic(modules[a], modules[b], field)) {
        report.violations.push_back("images of " + graph.labels[a] + " and " + graph.labels[b] + " coincide");
      }
    }
  }
  return report;
}

TiltingReport tilting_check(const RigidSetting& s, const Representation& x) {
  const Conflation witness = witness_or_throw(s, x);
  if (!x.is_zero()) {
    for (const auto& part : decompose(x).parts()) {
      if (find_isomorphic(s.generators, part)) throw InputError("tilting_check: X has a summand in add(R + Lambda)");
    }
  }
  TiltingReport out;
  const HomSpace rr(s.r_sum, s.r_sum);
  out.ideal_vanishes = stable_hom(s.r_sum, s.r_sum).subspace().contains(ideal_subspace({x}, rr));

  out.pd_le_1 = true;
  if (!witness.middle().is_zero()) {
    const SyzygySquare sq = syzygy_square(witness);
    for (std::size_t i = 0; i < s.rank() && out.pd_le_1; ++i) {
      const StableHom from = stable_hom(s.omega[i], sq.omega1.module);
      const StableHom to = stable_hom(s.omega[i], sq.omega2.module);
      Matrix images(to.dim(), from.dim(), x.field());
      const auto reps = from.representatives();
      for (std::size_t c = 0; c < reps.size(); ++c) images.set_block(0, c, to.class_of(compose(sq.f, reps[c])));
      out.pd_le_1 = rank(images) == from.dim();
    }
  }
  out.is_tilting = out.ideal_vanishes && !x.is_zero() && is_maximal_R_rigid(s, x);
  return out;
}

std::vector<std::size_t> d_rigid_report(const RigidSetting& s, const Representation& x, std::size_t d) {
  if (!in_H(s, x)) throw InputError("not in H");
  std::vector<std::size_t> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back(x.is_zero() ? 0 : ext_dim(x, x, i));
  return out;
}

}  // namespace relrigid
