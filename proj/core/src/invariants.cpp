#include "relrigid/invariants.hpp"

#include <algorithm>
#include <functional>

#include "relrigid/error.hpp"
#include "relrigid/standard_modules.hpp"
#include "relrigid/text_format.hpp"

namespace relrigid {

namespace {

std::string count_detail(std::size_t bad, std::size_t total, const std::string& first) {
  std::string d = std::to_string(total - bad) + "/" + std::to_string(total);
  if (bad > 0) d += "; first failure: " + first;
  return d;
}

// Tallies a family of cases into one check.
class Tally {
 public:
  void record(bool ok, const std::string& what) {
    ++total_;
    if (!ok) {
      if (bad_ == 0) first_ = what;
      ++bad_;
    }
  }
  void flush(SuiteReport& r, const std::string& name) const { r.add(name, bad_ == 0, count_detail(bad_, total_, first_)); }

 private:
  std::size_t total_ = 0;
  std::size_t bad_ = 0;
  std::string first_;
};

std::vector<Representation> modules_of(const std::vector<NamedModule>& named) {
  std::vector<Representation> out;
  for (const auto& m : named) out.push_back(m.module);
  return out;
}

}  // namespace

bool SuiteReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

void SuiteReport::add(std::string check, bool passed, std::string detail) {
  checks.push_back({std::move(check), passed, std::move(detail)});
}

SuiteReport check_homological(const BoundAlgebra& algebra, const std::vector<Representation>& modules) {
  SuiteReport r{"homological", {}, false, {}};
  Tally ext, tau_proj, round_trip, tau_indec;
  for (const auto& m : modules) {
    for (const auto& n : modules) {
      const std::size_t a = ext_dim(m, n, 1);
      const std::size_t b = ext1_dim_shift(m, n);
      const std::size_t c = ext1_dim_envelope(m, n);
      ext.record(a == b && b == c, loewy_name(m) + ", " + loewy_name(n) + ": " + std::to_string(a) + "/" +
                                       std::to_string(b) + "/" + std::to_string(c));
    }
  }
  ext.flush(r, "Ext^1 by resolution, dimension shift and envelope agree");
  for (std::size_t v = 0; v < algebra.vertex_count(); ++v) {
    tau_proj.record(ar_translate(projective_module(algebra, v)).is_zero(), "P(" + algebra.quiver().vertex_label(v) + ")");
  }
  tau_proj.flush(r, "tau of every projective is zero");
  if (!algebra.field().is_rational()) {
    r.notice = "prime field: isomorphism checks skipped";
    return r;
  }
  for (const auto& m : modules) {
    if (m.is_zero() || projective_vertex(m)) continue;
    const Representation t = ar_translate(m);
    tau_indec.record(is_indecomposable(t), loewy_name(m));
    round_trip.record(is_isomorphic(inverse_ar_translate(t), m), loewy_name(m));
  }
  tau_indec.flush(r, "tau of a non-projective indecomposable is indecomposable");
  round_trip.flush(r, "tau^- tau is the identity on non-projective indecomposables");
  return r;
}

std::size_t brute_force_support_tau_tilting_count(const BoundAlgebra& algebra,
                                                  const std::vector<Representation>& indecomposables) {
  const std::size_t k = indecomposables.size();
  const std::size_t n = algebra.vertex_count();
  std::vector<Representation> taus;
  for (const auto& m : indecomposables) taus.push_back(ar_translate(m));
  std::vector<std::vector<bool>> compatible(k, std::vector<bool>(k));
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = 0; b < k; ++b) compatible[a][b] = hom_dim(indecomposables[a], taus[b]) == 0;
  }
  std::size_t count = 0;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    // Projective parts: vertex sets of the right size avoiding the support.
    std::vector<bool> support(n, false);
    for (auto c : chosen) {
      for (std::size_t v = 0; v < n; ++v) support[v] = support[v] || indecomposables[c].dim(v) > 0;
    }
    const std::size_t free = static_cast<std::size_t>(std::count(support.begin(), support.end(), false));
    const std::size_t need = n - chosen.size();
    if (need <= free) {
      // binomial(free, need)
      std::size_t ways = 1;
      for (std::size_t i = 0; i < need; ++i) ways = ways * (free - i) / (i + 1);
      count += ways;
    }
    if (chosen.size() == n) return;
    for (std::size_t c = start; c < k; ++c) {
      if (!compatible[c][c]) continue;
      bool ok = true;
      for (auto d : chosen) ok = ok && compatible[c][d] && compatible[d][c];
      if (!ok) continue;
      chosen.push_back(c);
      extend(c + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return count;
}

SuiteReport check_tau_tilting(const BoundAlgebra& algebra, const std::vector<Representation>& indecomposables) {
  SuiteReport r{"tau-tilting", {}, false, {}};
  if (!algebra.field().is_rational()) {
    r.skipped = true;
    r.notice = "prime field: decomposition is unavailable";
    return r;
  }
  const TauExchangeGraph g = exchange_graph(algebra);
  const std::size_t n = algebra.vertex_count();
  Tally stt, degree, comparable, direction, duality;
  std::vector<std::size_t> deg(g.nodes.size(), 0);
  for (const auto& e : g.edges) {
    ++deg[e.from];
    ++deg[e.to];
    comparable.record(g.leq[e.from][e.to] != g.leq[e.to][e.from], g.labels[e.from] + " -- " + g.labels[e.to]);
  }
  const BoundAlgebra op = algebra.opposite();
  for (std::size_t a = 0; a < g.nodes.size(); ++a) {
    const TauPair& p = g.nodes[a];
    stt.record(is_support_tau_tilting(algebra, p), g.labels[a]);
    degree.record(deg[a] == n, g.labels[a]);
    duality.record(same_pair(dual_pair(op, dual_pair(algebra, p)), p), g.labels[a]);
    for (std::size_t k = 0; k < p.size(); ++k) {
      const PairPosition pos = k < p.modules.size() ? PairPosition{false, k} : PairPosition{true, k - p.modules.size()};
      const PairMutation mu = mutate_pair(algebra, p, pos);
      const bool up = fac_leq(algebra, p, mu.result) && !fac_leq(algebra, mu.result, p);
      const bool down = fac_leq(algebra, mu.result, p) && !fac_leq(algebra, p, mu.result);
      direction.record(mu.direction == Direction::Up ? up : down, g.labels[a]);
    }
  }
  r.add("node count", true, std::to_string(g.nodes.size()) + " pairs, " + std::to_string(g.edges.size()) + " edges");
  stt.flush(r, "every node is a basic support tau-tilting pair");
  degree.flush(r, "every node has n exchange moves");
  const std::string violation = partial_order_violation(g.leq);
  r.add("Fac inclusion is a partial order", violation.empty(), violation);
  comparable.flush(r, "mutation edges are strictly comparable");
  direction.flush(r, "mutation direction matches the order");
  duality.flush(r, "pair duality is an involution");
  if (!indecomposables.empty()) {
    const std::size_t brute = brute_force_support_tau_tilting_count(algebra, indecomposables);
    r.add("traversal count equals brute-force count", brute == g.nodes.size(),
          std::to_string(g.nodes.size()) + " vs " + std::to_string(brute));
  }
  return r;
}

SuiteReport check_setting(const RigidSetting& s, const std::vector<Representation>& library) {
  SuiteReport r{"setting", {}, false, {}};
  Tally membership, agreement, closure, sum, two_rigid, vanish;
  std::vector<Representation> in_h;
  for (const auto& x : library) {
    const bool a = in_H(s, x).has_value();
    const bool b = in_H_bruteforce(s, x).has_value();
    membership.record(a == b, loewy_name(x));
    if (a) in_h.push_back(x);
  }
  membership.flush(r, "H membership agrees with the brute-force witness search");

  struct Candidate {
    Representation module;
    std::string name;
    std::vector<Representation> parts;
  };
  std::vector<Candidate> candidates;
  for (std::size_t a = 0; a < in_h.size(); ++a) {
    candidates.push_back({in_h[a], loewy_name(in_h[a]), {in_h[a]}});
    for (std::size_t b = a + 1; b < in_h.size(); ++b) {
      candidates.push_back({direct_sum(s.algebra, {in_h[a], in_h[b]}).sum,
                            loewy_name(in_h[a]) + " + " + loewy_name(in_h[b]), {in_h[a], in_h[b]}});
    }
  }
  const bool r_two_rigid = ext_dim(s.r_sum, s.r_sum, 2) == 0;
  bool lambda_two_rigid = true;
  for (const auto& p : s.projectives) lambda_two_rigid = lambda_two_rigid && ext_dim(s.r_sum, p, 2) == 0;
  std::vector<std::string> outside;
  std::vector<bool> rigid(candidates.size());
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    const auto& x = candidates[c];
    const auto witness = in_H(s, x.module);
    if (!witness) {
      agreement.record(false, x.name + " (sum left H)");
      continue;
    }
    rigid[c] = is_R_rigid_def(s, x.module);
    agreement.record(rigid[c] == is_R_rigid_syz(s, *witness), x.name);
    if (rigid[c] && x.parts.size() > 1) {
      for (const auto& p : x.parts) closure.record(is_R_rigid_def(s, p), x.name);
    }
    if (rigid[c] && r_two_rigid) {
      const bool has_projective = std::any_of(x.parts.begin(), x.parts.end(),
                                              [](const Representation& p) { return projective_vertex(p).has_value(); });
      const bool rigid_x = ext_dim(x.module, x.module, 1) == 0;
      if (!has_projective || lambda_two_rigid) {
        two_rigid.record(rigid_x, x.name);
      } else if (!rigid_x) {
        outside.push_back(x.name);
      }
    }
    if (rigid[c]) {
      for (const auto& g : s.generators) {
        try {
          rigid_sum_check(s, x.module, g);
          sum.record(true, x.name);
        } catch (const ConsistencyError& e) {
          sum.record(false, x.name + " with " + loewy_name(g) + ": " + e.what());
        }
      }
    }
  }
  agreement.flush(r, "definition and syzygy criteria agree");
  closure.flush(r, "R-rigid objects are closed under summands");
  sum.flush(r, "X0 + R0 is R-rigid iff Ext^1(R0, X0) = 0");
  if (r_two_rigid) {
    two_rigid.flush(r, lambda_two_rigid ? "R 2-rigid implies every R-rigid object in H is rigid"
                                        : "R 2-rigid implies every projective-free R-rigid object in H is rigid");
    if (!outside.empty()) {
      r.notice = std::to_string(outside.size()) + " R-rigid objects with projective summands are not rigid (Ext^2(R, Lambda) != 0), e.g. " +
                 outside.front();
    }
  } else {
    r.notice = "R is not 2-rigid; the rigidity consequence was not tested";
  }
  for (const auto& g : s.generators) {
    std::size_t total = 0;
    for (const auto& omega : s.omega) total += stable_hom(omega, g).dim();
    vanish.record(total == 0, loewy_name(g));
  }
  vanish.flush(r, "stable Hom(Omega R, -) vanishes on add(R + Lambda)");
  return r;
}

SuiteReport check_enumeration(const RigidSetting& s, const RigidExchangeGraph& graph,
                              const std::vector<Representation>& library) {
  SuiteReport r{"enumeration", {}, false, {}};
  const std::size_t nodes = graph.nodes.size();
  r.add("node count", nodes > 0, std::to_string(nodes) + " objects, " + std::to_string(graph.edges.size()) + " edges");
  const BijectionReport bij = verify_bijection(s, graph);
  r.add("F is injective with support tau-tilting counts and transport holds", bij.ok(),
        bij.ok() ? std::to_string(bij.transport_pairs) + " transport pairs"
                 : bij.violations.front() + " (" + std::to_string(bij.violations.size()) + " violations)");
  const std::string violation = partial_order_violation(graph.leq);
  r.add("the order is a partial order", violation.empty(), violation);

  Tally fac, comparable, direction, degree, tilting, maximal, definition;
  const Field& field = s.algebra.field();
  std::vector<GammaModule> gm;
  for (const auto& x : graph.sums) gm.push_back(gamma_module(s, x));
  for (std::size_t a = 0; a < nodes; ++a) {
    for (std::size_t b = 0; b < nodes; ++b) {
      fac.record(gamma_in_fac(gm[a], gm[b], field) == graph.leq[a][b], graph.labels[a] + " vs " + graph.labels[b]);
    }
  }
  fac.flush(r, "order equals Fac inclusion of the images");
  std::vector<std::size_t> deg(nodes, 0);
  for (std::size_t e = 0; e < graph.edges.size(); ++e) {
    const auto& edge = graph.edges[e];
    ++deg[edge.from];
    ++deg[edge.to];
    const bool up = graph.leq[edge.from][edge.to] && !graph.leq[edge.to][edge.from];
    const bool down = graph.leq[edge.to][edge.from] && !graph.leq[edge.from][edge.to];
    comparable.record(up || down, graph.labels[edge.from] + " -- " + graph.labels[edge.to]);
    direction.record(graph.directions[e] == Direction::Up ? up : down, graph.labels[edge.from] + " -- " + graph.labels[edge.to]);
  }
  for (std::size_t a = 0; a < nodes; ++a) {
    degree.record(deg[a] == s.rank(), graph.labels[a]);
    maximal.record(is_maximal_R_rigid(s, graph.sums[a]), graph.labels[a]);
    if (!library.empty()) definition.record(is_maximal_by_definition(s, graph.sums[a], library), graph.labels[a]);
    std::vector<Representation> x0;
    for (const auto& m : graph.nodes[a]) {
      if (!find_isomorphic(s.r, m)) x0.push_back(m);
    }
    if (!x0.empty()) {
      const TiltingReport t = tilting_check(s, direct_sum(s.algebra, x0).sum);
      tilting.record(t.consistent(), graph.labels[a]);
    }
  }
  if (ext_dim(s.r_sum, s.r_sum, 2) == 0) {
    Tally rigid;
    for (std::size_t a = 0; a < nodes; ++a) rigid.record(d_rigid_report(s, graph.sums[a], 1).front() == 0, graph.labels[a]);
    rigid.flush(r, "R 2-rigid implies every node is rigid");
  }
  comparable.flush(r, "mutation edges are strictly comparable");
  direction.flush(r, "mutation direction matches the order");
  degree.flush(r, "every node has n exchange moves");
  maximal.flush(r, "every node is maximal R-rigid");
  if (!library.empty()) definition.flush(r, "maximality holds against the indecomposables list");
  tilting.flush(r, "pd <= 1 over Gamma iff [X](R, R) vanishes stably");
  return r;
}

std::vector<SuiteReport> run_selftest(const std::filesystem::path& data_dir, const Field& field) {
  std::vector<SuiteReport> out;
  auto guarded = [&](const std::string& name, const std::function<SuiteReport()>& body) {
    try {
      SuiteReport r = body();
      r.name = name;
      out.push_back(std::move(r));
    } catch (const Error& e) {
      SuiteReport r{name, {}, false, {}};
      r.add("suite ran", false, e.what());
      out.push_back(std::move(r));
    }
  };
  const bool rational = field.is_rational();
  auto skipped = [&](const std::string& name) {
    SuiteReport r{name, {}, true, "prime field: decomposition is unavailable"};
    out.push_back(std::move(r));
  };

  guarded("homological a3_rad2", [&] {
    const BoundAlgebra a = load_algebra(data_dir / "a3_rad2.alg", field);
    return check_homological(a, modules_of(load_modules(data_dir / "a3_rad2_ind.mod", a)));
  });
  guarded("homological ex1", [&] {
    const BoundAlgebra a = load_algebra(data_dir / "ex1.alg", field);
    return check_homological(a, modules_of(load_modules(data_dir / "ex1_ind.mod", a)));
  });
  if (!rational) {
    for (const char* name : {"tau-tilting a3_rad2", "tau-tilting one_vertex", "setting a3_rad2", "enumeration a3_rad2",
                             "setting nak2", "enumeration nak2", "setting ex1", "enumeration ex1"}) {
      skipped(name);
    }
    return out;
  }
  guarded("tau-tilting a3_rad2", [&] {
    const BoundAlgebra a = load_algebra(data_dir / "a3_rad2.alg", field);
    return check_tau_tilting(a, modules_of(load_modules(data_dir / "a3_rad2_ind.mod", a)));
  });
  guarded("tau-tilting one_vertex", [&] {
    const BoundAlgebra a = load_algebra(data_dir / "one_vertex.alg", field);
    return check_tau_tilting(a, {projective_module(a, 0)});
  });
  for (const char* name : {"a3_rad2", "nak2", "ex1"}) {
    RigidSetting s;
    std::vector<Representation> library;
    try {
      const LoadedSetting ls = load_setting(data_dir / (std::string(name) + ".setting"), field);
      s = validate_setting(ls.algebra, ls.r);
      library = modules_of(ls.library);
    } catch (const Error& e) {
      SuiteReport r{std::string("setting ") + name, {}, false, {}};
      r.add("setting loads and validates", false, e.what());
      out.push_back(std::move(r));
      continue;
    }
    guarded(std::string("setting ") + name, [&] { return check_setting(s, library); });
    guarded(std::string("enumeration ") + name, [&] { return check_enumeration(s, enumerate_max_rigid(s), library); });
  }
  return out;
}

}  // namespace relrigid
