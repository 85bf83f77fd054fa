#include "relrigid/tau_tilting.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "relrigid/approximation.hpp"
#include "relrigid/error.hpp"
#include "relrigid/standard_modules.hpp"

namespace relrigid {

namespace {

std::vector<ModuleKey> sorted_keys(const TauPair& p) {
  std::vector<ModuleKey> keys;
  for (const auto& m : p.modules) keys.push_back(module_key(m));
  std::sort(keys.begin(), keys.end());
  return keys;
}

std::optional<std::size_t> find_module(const std::vector<Representation>& pool, const Representation& m) {
  return find_isomorphic(pool, m);
}


PairMutation down_mutate(const BoundAlgebra& alg, const TauPair& pair, std::size_t index) {
  const Representation& x = pair.modules.at(index);
  std::vector<Representation> rest;
  for (std::size_t k = 0; k < pair.modules.size(); ++k) {
    if (k != index) rest.push_back(pair.modules[k]);
  }
  if (!rest.empty() && in_fac(x, direct_sum(alg, rest).sum)) {
    throw ConsistencyError("down mutation requested for a summand in Fac of the rest");
  }
  const Approximation approx = minimal_left_approximation(x, rest);
  const Representation y = cokernel(approx.map).module;
  PairMutation out;
  out.direction = Direction::Down;
  if (y.total_dim() == 0) {
    std::vector<std::size_t> candidates;
    for (std::size_t v = 0; v < alg.vertex_count(); ++v) {
      if (std::binary_search(pair.projectives.begin(), pair.projectives.end(), v)) continue;
      const bool vanishes = std::all_of(rest.begin(), rest.end(), [v](const Representation& u) { return u.dim(v) == 0; });
      if (vanishes) candidates.push_back(v);
    }
    if (candidates.size() != 1) {
      throw ConsistencyError("mutation: expected exactly one vertex outside the support, found " +
                             std::to_string(candidates.size()));
    }
    TauPair result{rest, pair.projectives};
    result.projectives.push_back(candidates.front());
    out.result = normalized(std::move(result));
    const auto pos = std::find(out.result.projectives.begin(), out.result.projectives.end(), candidates.front());
    out.introduced = {true, static_cast<std::size_t>(pos - out.result.projectives.begin())};
    return out;
  }
  const Decomposition d = decompose(y);
  if (d.classes.size() != 1) {
    throw ConsistencyError("mutation: cokernel has " + std::to_string(d.classes.size()) +
                           " non-isomorphic summands, expected one");
  }
  const Representation y1 = d.parts().front();
  if (is_isomorphic(y1, x)) throw ConsistencyError("mutation: complement equals the removed summand");
  TauPair result{rest, pair.projectives};
  result.modules.push_back(y1);
  out.result = normalized(std::move(result));
  out.introduced = {false, *find_module(out.result.modules, y1)};
  return out;
}

// Position in `after` of the summand absent from `before`.
PairPosition new_position(const TauPair& before, const TauPair& after) {
  for (std::size_t k = 0; k < after.modules.size(); ++k) {
    if (!find_module(before.modules, after.modules[k])) return {false, k};
  }
  for (std::size_t k = 0; k < after.projectives.size(); ++k) {
    if (!std::binary_search(before.projectives.begin(), before.projectives.end(), after.projectives[k])) return {true, k};
  }
  throw ConsistencyError("mutation produced no new summand");
}

}  // namespace

TauPair normalized(TauPair pair) {
  std::vector<ModuleKey> keys;
  for (const auto& m : pair.modules) keys.push_back(module_key(m));
  std::vector<std::size_t> order(pair.modules.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  TauPair out;
  for (auto i : order) out.modules.push_back(pair.modules[i]);
  out.projectives = std::move(pair.projectives);
  std::sort(out.projectives.begin(), out.projectives.end());
  out.projectives.erase(std::unique(out.projectives.begin(), out.projectives.end()), out.projectives.end());
  return out;
}

TauPair make_tau_pair(const BoundAlgebra& algebra, const Representation& m, std::vector<std::size_t> projectives) {
  if (!(m.algebra() == algebra)) throw InputError("make_tau_pair: module over a different algebra");
  const Decomposition d = decompose(m);
  if (!d.is_basic()) throw InputError("make_tau_pair: module is not basic");
  for (auto v : projectives) {
    if (v >= algebra.vertex_count()) throw InputError("make_tau_pair: no such vertex");
  }
  return normalized(TauPair{d.parts(), std::move(projectives)});
}

Representation pair_module(const BoundAlgebra& algebra, const TauPair& pair) {
  return direct_sum(algebra, pair.modules).sum;
}

bool same_pair(const TauPair& a, const TauPair& b) {
  if (a.projectives != b.projectives || a.modules.size() != b.modules.size()) return false;
  if (sorted_keys(a) != sorted_keys(b)) return false;
  std::vector<bool> used(b.modules.size(), false);
  for (const auto& m : a.modules) {
    bool found = false;
    for (std::size_t k = 0; k < b.modules.size() && !found; ++k) {
      if (!used[k] && is_isomorphic(m, b.modules[k])) used[k] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

bool is_tau_rigid(const Representation& m) {
  if (m.total_dim() == 0) return true;
  const bool by_hom = hom_dim(m, ar_translate(m)) == 0;
  const ProjectivePresentation pres = min_proj_presentation(m);
  const ProjectiveMatrix pm = projective_matrix(pres.f, pres.cover1.vertices, pres.cover1.projective,
                                                pres.cover0.vertices, pres.cover0.projective);
  const Matrix induced = hom_into(pm, m);
  const bool by_presentation = rank(induced) == induced.rows();
  if (by_hom != by_presentation) {
    throw ConsistencyError("tau-rigidity criteria disagree (Hom(M, tau M) = 0 is " + std::string(by_hom ? "true" : "false") +
                           ", presentation criterion is " + (by_presentation ? "true" : "false") + ")");
  }
  return by_hom;
}

bool is_tau_rigid_pair(const BoundAlgebra& algebra, const TauPair& pair) {
  for (const auto& m : pair.modules) {
    for (auto v : pair.projectives) {
      if (m.dim(v) != 0) return false;
    }
  }
  return is_tau_rigid(pair_module(algebra, pair));
}

bool is_support_tau_tilting(const BoundAlgebra& algebra, const TauPair& pair) {
  for (std::size_t a = 0; a < pair.modules.size(); ++a) {
    for (std::size_t b = a + 1; b < pair.modules.size(); ++b) {
      if (is_isomorphic(pair.modules[a], pair.modules[b])) throw InputError("is_support_tau_tilting: pair is not basic");
    }
  }
  return pair.size() == algebra.vertex_count() && is_tau_rigid_pair(algebra, pair);
}

std::optional<std::size_t> projective_vertex(const Representation& m) {
  const auto tops = top_vertices(m);
  if (tops.size() != 1) return std::nullopt;
  const BoundAlgebra& alg = m.algebra();
  std::size_t dim = 0;
  for (std::size_t j = 0; j < alg.vertex_count(); ++j) dim += alg.basis_between(tops.front(), j).size();
  if (dim != m.total_dim()) return std::nullopt;
  return tops.front();
}

TauPair dual_pair(const BoundAlgebra& algebra, const TauPair& pair) {
  const BoundAlgebra op = algebra.opposite();
  TauPair out;
  for (const auto& m : pair.modules) {
    if (auto v = projective_vertex(m)) {
      out.projectives.push_back(*v);
    } else {
      out.modules.push_back(ar_translate(m).dual());
    }
  }
  for (auto v : pair.projectives) out.modules.push_back(projective_module(op, v));
  return normalized(std::move(out));
}

PairMutation mutate_pair(const BoundAlgebra& algebra, const TauPair& pair, PairPosition position) {
  if (position.projective ? position.index >= pair.projectives.size() : position.index >= pair.modules.size()) {
    throw InputError("mutate_pair: selector out of range");
  }
  bool up = position.projective;
  if (!up) {
    std::vector<Representation> rest;
    for (std::size_t k = 0; k < pair.modules.size(); ++k) {
      if (k != position.index) rest.push_back(pair.modules[k]);
    }
    up = !rest.empty() && in_fac(pair.modules[position.index], direct_sum(algebra, rest).sum);
  }
  if (!up) return down_mutate(algebra, pair, position.index);

  const BoundAlgebra op = algebra.opposite();
  const TauPair dual = dual_pair(algebra, pair);
  std::size_t index = 0;
  if (position.projective) {
    const std::size_t v = pair.projectives[position.index];
    const auto it = std::find_if(dual.modules.begin(), dual.modules.end(),
                                 [v](const Representation& m) { return projective_vertex(m) == v; });
    if (it == dual.modules.end()) throw ConsistencyError("dual pair lost a projective summand");
    index = static_cast<std::size_t>(it - dual.modules.begin());
  } else {
    const auto found = find_module(dual.modules, ar_translate(pair.modules[position.index]).dual());
    if (!found) throw ConsistencyError("dual pair lost a summand");
    index = *found;
  }
  const PairMutation there = down_mutate(op, dual, index);
  PairMutation out;
  out.result = dual_pair(op, there.result);
  out.direction = Direction::Up;
  out.introduced = new_position(pair, out.result);
  return out;
}

bool fac_leq(const BoundAlgebra& algebra, const TauPair& a, const TauPair& b) {
  if (a.modules.empty()) return true;
  if (b.modules.empty()) return false;
  return in_fac(pair_module(algebra, a), pair_module(algebra, b));
}

std::string pair_label(const BoundAlgebra& algebra, const TauPair& pair, ModuleCatalog& catalog) {
  std::string s;
  for (const auto& m : pair.modules) {
    if (!s.empty()) s += " + ";
    s += catalog.name(m);
  }
  if (s.empty()) s = "0";
  if (!pair.projectives.empty()) {
    s += " | P(";
    for (std::size_t k = 0; k < pair.projectives.size(); ++k) {
      if (k) s += ",";
      s += algebra.quiver().vertex_label(pair.projectives[k]);
    }
    s += ")";
  }
  return s;
}

TauExchangeGraph exchange_graph(const BoundAlgebra& algebra, std::size_t budget) {
  struct RawEdge {
    std::size_t from, to;
    PairPosition removed, added;
  };
  std::vector<TauPair> nodes;
  std::vector<RawEdge> raw;
  std::vector<Representation> projectives;
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) projectives.push_back(projective_module(algebra, v));
  nodes.push_back(normalized(TauPair{projectives, {}}));
  if (budget < 1) throw BudgetExceeded("exchange graph budget of 0 nodes exceeded");
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    const TauPair current = nodes[i];
    for (std::size_t k = 0; k < current.size(); ++k) {
      const PairPosition pos = k < current.modules.size() ? PairPosition{false, k}
                                                          : PairPosition{true, k - current.modules.size()};
      PairMutation mu = mutate_pair(algebra, current, pos);
      std::size_t j = nodes.size();
      for (std::size_t t = 0; t < nodes.size(); ++t) {
        if (same_pair(nodes[t], mu.result)) {
          j = t;
          break;
        }
      }
      if (j == nodes.size()) {
        if (nodes.size() >= budget) {
          throw BudgetExceeded("exchange graph exceeds the budget of " + std::to_string(budget) + " nodes");
        }
        nodes.push_back(std::move(mu.result));
        queue.push_back(j);
      }
      if (i < j) raw.push_back({i, j, pos, mu.introduced});
    }
  }

  // Canonical order: by sorted summand keys and projective part, BFS order on ties.
  std::vector<std::vector<ModuleKey>> keys;
  for (const auto& p : nodes) keys.push_back(sorted_keys(p));
  std::vector<std::size_t> order(nodes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (nodes[a].size() - nodes[a].projectives.size() != nodes[b].size() - nodes[b].projectives.size()) {
      return nodes[a].modules.size() > nodes[b].modules.size();
    }
    if (keys[a] != keys[b]) return keys[a] < keys[b];
    return nodes[a].projectives < nodes[b].projectives;
  });
  std::vector<std::size_t> rank_of(nodes.size());
  for (std::size_t r = 0; r < order.size(); ++r) rank_of[order[r]] = r;

  TauExchangeGraph g;
  ModuleCatalog catalog;
  for (auto idx : order) g.nodes.push_back(nodes[idx]);
  for (const auto& p : g.nodes) g.labels.push_back(pair_label(algebra, p, catalog));
  auto summand_name = [&](const TauPair& p, PairPosition pos) {
    if (pos.projective) return "P(" + algebra.quiver().vertex_label(p.projectives[pos.index]) + ")";
    return catalog.name(p.modules[pos.index]);
  };
  for (const auto& e : raw) {
    GraphEdge ge{rank_of[e.from], rank_of[e.to], summand_name(nodes[e.from], e.removed),
                 summand_name(nodes[e.to], e.added)};
    if (ge.from > ge.to) {
      std::swap(ge.from, ge.to);
      std::swap(ge.replaced, ge.introduced);
    }
    g.edges.push_back(std::move(ge));
  }
  std::sort(g.edges.begin(), g.edges.end(),
            [](const GraphEdge& a, const GraphEdge& b) { return std::tie(a.from, a.to) < std::tie(b.from, b.to); });

  std::vector<Representation> sums;
  for (const auto& p : g.nodes) sums.push_back(pair_module(algebra, p));
  const std::size_t n = g.nodes.size();
  g.leq.assign(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) {
        g.leq[a][b] = true;
      } else if (g.nodes[a].modules.empty()) {
        g.leq[a][b] = true;
      } else if (!g.nodes[b].modules.empty()) {
        g.leq[a][b] = in_fac(sums[a], sums[b]);
      }
    }
  }
  return g;
}

}  // namespace relrigid
