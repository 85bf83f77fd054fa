#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "relrigid/decompose.hpp"
#include "relrigid/error.hpp"
#include "relrigid/homological.hpp"
#include "relrigid/invariants.hpp"
#include "relrigid/relative_rigid.hpp"
#include "relrigid/standard_modules.hpp"

using namespace relrigid;

namespace {

struct Ex1 {
  fixtures::Library lib = fixtures::ex1();
  RigidSetting s = validate_setting(lib.algebra, sum({"1/2", "1", "2/4"}));

  Representation sum(const std::vector<std::string>& names) const {
    std::vector<Representation> parts;
    for (const auto& n : names) parts.push_back(lib[n]);
    return direct_sum(lib.algebra, parts).sum;
  }
  Representation with_lambda(const std::vector<std::string>& names) const {
    std::vector<Representation> parts = s.projectives;
    for (const auto& n : names) parts.push_back(lib[n]);
    return direct_sum(lib.algebra, parts).sum;
  }
};

const Ex1& ex1() {
  static const Ex1 e;
  return e;
}

std::set<std::string> names_of(const std::vector<Representation>& ms) {
  std::set<std::string> out;
  for (const auto& m : ms) out.insert(loewy_name(m));
  return out;
}

}  // namespace

TEST(Setting, Ex1IsValid) {
  const auto& e = ex1();
  EXPECT_EQ(e.s.rank(), 3u);
  EXPECT_EQ(e.s.generators.size(), 9u);
  std::set<std::string> omegas = names_of(e.s.omega);
  EXPECT_EQ(omegas, (std::set<std::string>{"3/5", "3", "2/3"}));
  EXPECT_EQ(ext_dim(e.s.r_sum, e.s.r_sum, 1), 0u);
}

TEST(Setting, Rejections) {
  const auto& e = ex1();
  EXPECT_THROW(validate_setting(e.lib.algebra, e.sum({"1/2", "1", "2/4", "6"})), InputError);
  EXPECT_THROW(validate_setting(e.lib.algebra, e.sum({"1/2", "1/2"})), InputError);
  // 2/3 lies outside the perpendicular category of R
  EXPECT_THROW(validate_setting(e.lib.algebra, e.sum({"1/2", "1", "2/4", "2/3"})), InputError);
  const auto a3 = fixtures::a3();
  EXPECT_THROW(validate_setting(a3.algebra, a3["2"]), InputError);
  EXPECT_THROW(validate_setting(a3.algebra, a3["3"]), InputError);
  EXPECT_NO_THROW(validate_setting(a3.algebra, a3["1"]));
}

TEST(Setting, LoadFromFile) {
  const LoadedSetting ls = load_setting(fixtures::data("ex1.setting"));
  EXPECT_EQ(ls.r_parts.size(), 3u);
  EXPECT_EQ(ls.library.size(), 17u);
  EXPECT_NO_THROW(resolve_module("2/3+2", ls.algebra, ls.library));
  EXPECT_THROW(resolve_module("2/3+x", ls.algebra, ls.library), InputError);
}

// The quiver of H modulo [R + Lambda] has exactly these vertices.
TEST(Membership, HMatchesTheExample) {
  const auto& e = ex1();
  std::set<std::string> extra;
  for (const auto& m : e.lib.named) {
    const bool in_h = in_H(e.s, m.module).has_value();
    EXPECT_EQ(in_h, in_H_bruteforce(e.s, m.module).has_value()) << m.name;
    if (in_h && !in_R(e.s, m.module)) extra.insert(m.name);
    if (in_R(e.s, m.module)) EXPECT_TRUE(in_h) << m.name;
  }
  EXPECT_EQ(extra, (std::set<std::string>{"3/5", "3", "2/34", "2/3", "2"}));
}

TEST(Membership, WitnessIsAConflation) {
  const auto& e = ex1();
  for (const auto* name : {"3/5", "2/34", "2", "3"}) {
    const auto w = in_H(e.s, e.lib[name]);
    ASSERT_TRUE(w.has_value());
    EXPECT_TRUE(w->is_exact());
    EXPECT_TRUE(in_R(e.s, w->middle()));
    EXPECT_TRUE(in_R(e.s, w->last()));
  }
}

TEST(Rigidity, CriteriaAgreeOnSmallSettings) {
  const auto a3 = fixtures::a3();
  const RigidSetting s = validate_setting(a3.algebra, a3["1"]);
  const Representation x = direct_sum(a3.algebra, {projective_module(a3.algebra, 0), a3["2"]}).sum;
  ASSERT_TRUE(in_H(s, x).has_value());
  EXPECT_EQ(is_R_rigid_def(s, x), is_R_rigid_syz(s, x));
  EXPECT_TRUE(is_R_rigid_def(s, a3["2"]));
}

TEST(Rigidity, TypoRowOfTheExampleIsNotRigid) {
  const auto& e = ex1();
  const Representation x = e.sum({"3", "2/3", "2"});
  ASSERT_TRUE(in_H(e.s, x).has_value());
  EXPECT_FALSE(is_R_rigid_def(e.s, x));
  EXPECT_FALSE(is_R_rigid_syz(e.s, x));
  const Representation y = e.sum({"3", "2/3", "2/34"});
  EXPECT_TRUE(is_R_rigid_def(e.s, y));
  EXPECT_TRUE(is_maximal_R_rigid(e.s, y));
}

TEST(FImage, OfRAndN) {
  const auto& e = ex1();
  const FImage fr = F_image(e.s, e.s.r_sum);
  EXPECT_EQ(fr.gamma_dims, (std::vector<std::size_t>(3, 0)));
  EXPECT_EQ(fr.projective_part, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_TRUE(fr.module_part.empty());
  const FImage fn = F_image(e.s, e.sum({"2/3", "2", "2/4"}));
  EXPECT_EQ(names_of(fn.module_part), (std::set<std::string>{"2/3", "2"}));
  ASSERT_EQ(fn.projective_part.size(), 1u);
  EXPECT_EQ(loewy_name(e.s.omega[fn.projective_part[0]]), "3/5");
}

// Rows of the example: object, and the projective part of its pair named by Omega R_i.
TEST(FImage, ProjectivePartsMatchTheExample) {
  const auto& e = ex1();
  struct Row {
    std::vector<std::string> object;
    std::set<std::string> projective;
  };
  const std::vector<Row> rows = {
      {{"2/4", "1", "1/2"}, {"3/5", "3", "2/3"}}, {{"2/34", "2/4", "1"}, {"3/5", "2/3"}},
      {{"2/3", "2", "2/4"}, {"3/5"}},             {{"3", "2/34", "1"}, {"2/3"}},
      {{"2/34", "2/3", "2/4"}, {"3/5"}},          {{"2/4", "2", "1/2"}, {"3/5", "3"}},
      {{"3/5", "1/2", "1"}, {"3", "2/3"}},        {{"3/5", "2", "1/2"}, {"3"}},
      {{"3/5", "3", "1"}, {"2/3"}},               {{"3/5", "2/3", "2"}, {}},
      {{"3/5", "3", "2/3"}, {}},
  };
  for (const auto& row : rows) {
    const FImage f = F_image(e.s, e.sum(row.object));
    std::set<std::string> proj;
    for (auto i : f.projective_part) proj.insert(loewy_name(e.s.omega[i]));
    EXPECT_EQ(proj, row.projective) << row.object[0];
    EXPECT_EQ(f.module_part.size() + f.projective_part.size(), 3u);
  }
}

TEST(Gamma, HomTransport) {
  const auto& e = ex1();
  const std::vector<std::string> xs = {"3/5", "2/34", "2/3", "2", "3"};
  for (const auto& a : xs) {
    for (const auto& b : xs) {
      const auto ga = gamma_module(e.s, e.lib[a]);
      const auto gb = gamma_module(e.s, e.lib[b]);
      EXPECT_EQ(gamma_hom_dim(ga, gb, e.s.algebra.field()), hbar_hom_dim(e.s, e.lib[a], e.lib[b])) << a << ", " << b;
    }
  }
  EXPECT_TRUE(gamma_isomorphic(gamma_module(e.s, e.lib["2"]), gamma_module(e.s, e.lib["2"]), e.s.algebra.field()));
  EXPECT_FALSE(gamma_isomorphic(gamma_module(e.s, e.lib["2"]), gamma_module(e.s, e.lib["3"]), e.s.algebra.field()));
}

TEST(Mutation, ExampleExchange) {
  const auto& e = ex1();
  const Representation u = e.with_lambda({"2", "2/4"});
  EXPECT_FALSE(in_M_star_R(e.s, e.lib["2/3"], u));
  const std::vector<Representation> n_parts = {e.lib["2"], e.lib["2/4"], e.lib["2/3"]};
  const RigidMutation mu = mutate_max_rigid(e.s, n_parts, 2);
  EXPECT_EQ(mu.direction, Direction::Down);
  EXPECT_TRUE(is_isomorphic(mu.complement, e.lib["1/2"]));
  EXPECT_TRUE(mu.sequence.is_exact());
  EXPECT_TRUE(is_isomorphic(mu.sequence.first(), e.lib["2/3"]));
  EXPECT_TRUE(is_isomorphic(mu.sequence.middle(), e.sum({"1/2/3", "2"})));
  EXPECT_TRUE(is_isomorphic(mu.sequence.last(), e.lib["1/2"]));
  EXPECT_EQ(names_of(mu.result), (std::set<std::string>{"2", "2/4", "1/2"}));
  const Representation lambda_m = e.with_lambda({"2/4", "2", "1/2"});
  const Representation lambda_n = e.with_lambda({"2/3", "2", "2/4"});
  EXPECT_TRUE(rel_leq(e.s, lambda_m, lambda_n));
  EXPECT_FALSE(rel_leq(e.s, lambda_n, lambda_m));
}

TEST(Mutation, UpIsInverseOfDown) {
  const auto& e = ex1();
  const std::vector<Representation> m_parts = {e.lib["2/4"], e.lib["2"], e.lib["1/2"]};
  const RigidMutation mu = mutate_max_rigid(e.s, m_parts, 2);
  EXPECT_EQ(mu.direction, Direction::Up);
  EXPECT_TRUE(is_isomorphic(mu.complement, e.lib["2/3"]));
  EXPECT_THROW(mutate_max_rigid(e.s, e.sum({"2/4", "2", "1/2"}), e.lib["3"]), InputError);
}

TEST(Enumeration, Counts) {
  const auto& e = ex1();
  const RigidExchangeGraph g = enumerate_max_rigid(e.s);
  EXPECT_EQ(g.nodes.size(), 12u);
  EXPECT_EQ(g.edges.size(), 18u);
  EXPECT_EQ(g.labels.front(), "2/4 + 1 + 1/2");
  EXPECT_THROW(enumerate_max_rigid(e.s, 2), BudgetExceeded);

  const auto a3 = fixtures::a3();
  const RigidExchangeGraph small = enumerate_max_rigid(validate_setting(a3.algebra, a3["1"]));
  EXPECT_EQ(small.nodes.size(), 2u);
  const auto nak = fixtures::nak2();
  EXPECT_EQ(enumerate_max_rigid(validate_setting(nak.algebra, nak["1"])).nodes.size(), 2u);
}

TEST(Enumeration, BijectionAndTilting) {
  const auto& e = ex1();
  const RigidExchangeGraph g = enumerate_max_rigid(e.s);
  const BijectionReport rep = verify_bijection(e.s, g);
  EXPECT_TRUE(rep.ok()) << (rep.violations.empty() ? "" : rep.violations.front());
  EXPECT_EQ(rep.transport_pairs, 144u);
  const TiltingReport t = tilting_check(e.s, e.sum({"3/5", "3", "2/3"}));
  EXPECT_TRUE(t.consistent());
  EXPECT_TRUE(t.is_tilting);
  const TiltingReport partial = tilting_check(e.s, e.sum({"2"}));
  EXPECT_TRUE(partial.consistent());
  EXPECT_FALSE(partial.is_tilting);
}

TEST(Enumeration, SuitesPassOnEveryFixtureSetting) {
  for (const char* name : {"a3_rad2", "nak2", "ex1"}) {
    const LoadedSetting ls = load_setting(fixtures::data(std::string(name) + ".setting"));
    const RigidSetting s = validate_setting(ls.algebra, ls.r);
    std::vector<Representation> lib;
    for (const auto& m : ls.library) lib.push_back(m.module);
    for (const auto& c : check_setting(s, lib).checks) EXPECT_TRUE(c.passed) << name << ": " << c.name << ": " << c.detail;
    for (const auto& c : check_enumeration(s, enumerate_max_rigid(s), lib).checks) {
      EXPECT_TRUE(c.passed) << name << ": " << c.name << ": " << c.detail;
    }
  }
}

TEST(Selftest, AllSuitesPass) {
  for (const auto& r : run_selftest(RELRIGID_DATA_DIR)) {
    EXPECT_TRUE(r.ok()) << r.name;
    EXPECT_FALSE(r.skipped) << r.name;
  }
  for (const auto& r : run_selftest(RELRIGID_DATA_DIR, Field::prime(7))) EXPECT_TRUE(r.ok()) << r.name;
}
