#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "relrigid/relative_rigid.hpp"
#include "relrigid/tau_tilting.hpp"

namespace relrigid {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  bool skipped = false;
  std::string notice;

  bool ok() const;
  void add(std::string check, bool passed, std::string detail = {});
};

// Ext^1 by resolution, dimension shift and envelope lifts on all pairs;
// tau of projectives; tau^- tau on non-projective indecomposables.
SuiteReport check_homological(const BoundAlgebra& algebra, const std::vector<Representation>& modules);

// Every node support tau-tilting, n moves per node, Fac order is a partial
// order, edges strictly comparable; with a full indecomposables list, the
// node count matches a brute-force count of support tau-tilting pairs.
SuiteReport check_tau_tilting(const BoundAlgebra& algebra, const std::vector<Representation>& indecomposables = {});

// Support tau-tilting pairs counted by testing every subset of the given
// indecomposables against every set of vertices.
std::size_t brute_force_support_tau_tilting_count(const BoundAlgebra& algebra,
                                                  const std::vector<Representation>& indecomposables);

// Membership oracle, criterion agreement, summand closure, sum criterion and
// the 2-rigid consequence, over the library and its pairwise sums.
SuiteReport check_setting(const RigidSetting& s, const std::vector<Representation>& library);

// Bijection, transport, order, mutation coherence and tilting agreement on an
// enumerated graph.
SuiteReport check_enumeration(const RigidSetting& s, const RigidExchangeGraph& graph,
                              const std::vector<Representation>& library = {});

// Runs every suite on the bundled fixtures in data_dir.
std::vector<SuiteReport> run_selftest(const std::filesystem::path& data_dir, const Field& field = {});

}  // namespace relrigid
