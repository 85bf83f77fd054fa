#include <random>
#include <string>

#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "relrigid/covers.hpp"
#include "relrigid/decompose.hpp"
#include "relrigid/error.hpp"
#include "relrigid/linalg.hpp"
#include "relrigid/representation.hpp"
#include "relrigid/standard_modules.hpp"

using namespace relrigid;

namespace {

// dim Hom(M, N) from the raw system f_j M_a = N_a f_i, unknowns f_v row-major.
std::size_t hom_dim_oracle(const Representation& m, const Representation& n) {
  const auto& q = m.algebra().quiver();
  std::vector<std::size_t> offset(q.vertex_count() + 1, 0);
  for (std::size_t v = 0; v < q.vertex_count(); ++v) offset[v + 1] = offset[v] + n.dim(v) * m.dim(v);
  const std::size_t unknowns = offset.back();
  std::vector<std::vector<Rational>> rows;
  for (std::size_t a = 0; a < q.arrow_count(); ++a) {
    const std::size_t i = q.arrow(a).source, j = q.arrow(a).target;
    const Matrix& ma = m.arrow_map(a);
    const Matrix& na = n.arrow_map(a);
    for (std::size_t r = 0; r < n.dim(j); ++r) {
      for (std::size_t c = 0; c < m.dim(i); ++c) {
        std::vector<Rational> row(unknowns, 0);
        for (std::size_t k = 0; k < m.dim(j); ++k) row[offset[j] + r * m.dim(j) + k] += ma(k, c);
        for (std::size_t k = 0; k < n.dim(i); ++k) row[offset[i] + k * m.dim(i) + c] -= na(r, k);
        rows.push_back(row);
      }
    }
  }
  if (rows.empty()) return unknowns;
  return unknowns - rank(Matrix::from_rows(rows, unknowns));
}

Representation random_sum(const fixtures::Library& lib, std::mt19937& rng) {
  std::vector<Representation> parts;
  const auto mods = lib.modules();
  for (int k = 0; k < 2; ++k) parts.push_back(mods[rng() % mods.size()]);
  return direct_sum(lib.algebra, parts).sum;
}

}  // namespace

TEST(Representation, StandardModulesOverA3) {
  const auto lib = fixtures::a3();
  const auto& a = lib.algebra;
  EXPECT_EQ(projective_module(a, 0).dims(), (std::vector<std::size_t>{1, 1, 0}));
  EXPECT_EQ(projective_module(a, 1).dims(), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(injective_module(a, 2).dims(), (std::vector<std::size_t>{0, 1, 1}));
  EXPECT_EQ(hom_dim(simple_module(a, 0), simple_module(a, 0)), 1u);
  EXPECT_EQ(hom_dim(simple_module(a, 0), simple_module(a, 2)), 0u);
  EXPECT_EQ(hom_dim(projective_module(a, 0), simple_module(a, 1)), 0u);
  EXPECT_EQ(hom_dim(projective_module(a, 1), simple_module(a, 1)), 1u);
  EXPECT_EQ(hom_dim(projective_module(a, 0), projective_module(a, 1)), hom_dim_oracle(projective_module(a, 0), projective_module(a, 1)));
}

TEST(Representation, ProjectivesAndInjectivesOfEx1MatchTheFigure) {
  const auto lib = fixtures::ex1();
  const char* projectives[] = {"1/2/3", "2/34/5", "3/5/6", "4/5", "5/6", "6"};
  const char* injectives[] = {"1", "1/2", "1/2/3", "2/4", "2/34/5", "3/5/6"};
  for (std::size_t v = 0; v < 6; ++v) {
    EXPECT_TRUE(is_isomorphic(projective_module(lib.algebra, v), lib[projectives[v]])) << projectives[v];
    EXPECT_TRUE(is_isomorphic(injective_module(lib.algebra, v), lib[injectives[v]])) << injectives[v];
  }
}

TEST(Representation, HomDimensionMatchesOracle) {
  for (const auto& lib : {fixtures::a3(), fixtures::ex1(), fixtures::nak2()}) {
    for (const auto& m : lib.named) {
      for (const auto& n : lib.named) EXPECT_EQ(hom_dim(m.module, n.module), hom_dim_oracle(m.module, n.module)) << m.name << ", " << n.name;
    }
  }
}

TEST(Representation, HomBasisIntertwines) {
  const auto lib = fixtures::ex1();
  for (const auto& f : hom_basis(lib["2/34/5"], lib["1/2/3"])) EXPECT_TRUE(f.is_intertwining());
  for (const auto& f : hom_basis(lib["3/5/6"], lib["2/34/5"])) EXPECT_TRUE(f.is_intertwining());
}

TEST(Representation, KernelsAndCokernels) {
  const auto lib = fixtures::a3();
  const auto& a = lib.algebra;
  const Representation p1 = projective_module(a, 0);
  const Representation s1 = simple_module(a, 0);
  EXPECT_TRUE(kernel(ModuleMap::identity(p1)).module.is_zero());
  EXPECT_TRUE(is_isomorphic(cokernel(ModuleMap::zero(s1, p1)).module, p1));
  const auto cover = projective_cover(s1);
  EXPECT_TRUE(cover.sequence.is_exact());
  EXPECT_TRUE(is_isomorphic(cover.module(), p1));
  EXPECT_TRUE(is_isomorphic(kernel(cover.deflation()).module, simple_module(a, 1)));
  EXPECT_TRUE(hom_basis(p1, projective_module(a, 1)).empty());
  const auto maps = hom_basis(projective_module(a, 1), p1);
  ASSERT_EQ(maps.size(), 1u);
  EXPECT_EQ(image(maps.front()).module.dims(), (std::vector<std::size_t>{0, 1, 0}));
  EXPECT_EQ(cokernel(maps.front()).module.dims(), (std::vector<std::size_t>{1, 0, 0}));
  EXPECT_EQ(kernel(maps.front()).module.dims(), (std::vector<std::size_t>{0, 0, 1}));
}

TEST(Representation, RadicalTopSocle) {
  const auto lib = fixtures::a3();
  const auto& a = lib.algebra;
  EXPECT_TRUE(radical(simple_module(a, 0)).module.is_zero());
  EXPECT_TRUE(is_isomorphic(radical(projective_module(a, 0)).module, simple_module(a, 1)));
  EXPECT_TRUE(is_isomorphic(top(projective_module(a, 0)).module, simple_module(a, 0)));
  EXPECT_TRUE(is_isomorphic(socle(injective_module(a, 2)).module, simple_module(a, 2)));
  const auto ex = fixtures::ex1();
  EXPECT_EQ(radical(ex["2/34/5"]).module.dims(), (std::vector<std::size_t>{0, 0, 1, 1, 1, 0}));
  EXPECT_EQ(socle(ex["2/34/5"]).module.dims(), (std::vector<std::size_t>{0, 0, 0, 0, 1, 0}));
}

TEST(Representation, CoversAndEnvelopes) {
  const auto lib = fixtures::a3();
  const auto& a = lib.algebra;
  const auto pc = projective_cover(projective_module(a, 0));
  EXPECT_TRUE(pc.syzygy().is_zero());
  EXPECT_TRUE(projective_cover(Representation::zero(a)).module().is_zero());
  const auto env = injective_envelope(simple_module(a, 2));
  EXPECT_TRUE(env.sequence.is_exact());
  EXPECT_TRUE(is_isomorphic(env.module(), injective_module(a, 2)));
  EXPECT_TRUE(is_isomorphic(env.cosyzygy(), simple_module(a, 1)));
  EXPECT_TRUE(injective_envelope(injective_module(a, 0)).cosyzygy().is_zero());
}

TEST(Representation, DirectSums) {
  const auto lib = fixtures::a3();
  const auto& a = lib.algebra;
  const Representation s1 = simple_module(a, 0), s2 = simple_module(a, 1), s3 = simple_module(a, 2);
  EXPECT_TRUE(is_isomorphic(direct_sum(a, {s1, Representation::zero(a)}).sum, s1));
  EXPECT_EQ(direct_sum(a, {s1, s1}).sum.dims(), (std::vector<std::size_t>{2, 0, 0}));
  const Representation left = direct_sum(a, {direct_sum(a, {s1, s2}).sum, s3}).sum;
  const Representation right = direct_sum(a, {s1, direct_sum(a, {s2, s3}).sum}).sum;
  EXPECT_TRUE(is_isomorphic(left, right));
}

TEST(Decompose, Examples) {
  const auto lib = fixtures::a3();
  const auto& a = lib.algebra;
  const Representation s1 = simple_module(a, 0), s2 = simple_module(a, 1);
  const Decomposition d = decompose(direct_sum(a, {s1, s1, s2}).sum);
  ASSERT_EQ(d.classes.size(), 2u);
  EXPECT_EQ(d.summand_count(), 3u);
  EXPECT_FALSE(d.is_basic());
  EXPECT_TRUE(is_indecomposable(projective_module(a, 0)));
  EXPECT_TRUE(decompose(Representation::zero(a)).summands.empty());
}

TEST(Decompose, FixtureLibrariesAreIndecomposableAndDistinct) {
  for (const auto& lib : {fixtures::a3(), fixtures::ex1(), fixtures::nak2()}) {
    for (std::size_t i = 0; i < lib.named.size(); ++i) {
      EXPECT_TRUE(is_indecomposable(lib.named[i].module)) << lib.named[i].name;
      EXPECT_EQ(loewy_name(lib.named[i].module), lib.named[i].name);
      for (std::size_t j = i + 1; j < lib.named.size(); ++j) {
        EXPECT_FALSE(is_isomorphic(lib.named[i].module, lib.named[j].module));
      }
    }
  }
}

TEST(Decompose, RandomSumsSplitBack) {
  const auto lib = fixtures::ex1();
  std::mt19937 rng(42);
  for (int trial = 0; trial < 25; ++trial) {
    const Representation m = random_sum(lib, rng);
    const Decomposition d = decompose(m);
    EXPECT_EQ(d.summand_count(), 2u);
    std::vector<Representation> parts;
    for (const auto& s : d.summands) {
      EXPECT_TRUE(is_indecomposable(s.module));
      EXPECT_TRUE(compose(s.projection, s.inclusion).is_isomorphism());
      parts.push_back(s.module);
    }
    EXPECT_TRUE(is_isomorphic(direct_sum(lib.algebra, parts).sum, m));
  }
}

TEST(Decompose, IsomorphismUnderChangeOfBasis) {
  const auto lib = fixtures::ex1();
  const Representation& m = lib["2/34/5"];
  // Conjugate every vertex space by an invertible matrix.
  std::vector<Matrix> g;
  for (std::size_t v = 0; v < m.vertex_count(); ++v) {
    Matrix t = Matrix::identity(m.dim(v));
    for (std::size_t r = 0; r < m.dim(v); ++r) t.set(r, r, Rational(static_cast<long>(v + 2)));
    g.push_back(t);
  }
  std::vector<Matrix> maps;
  for (std::size_t a = 0; a < m.algebra().quiver().arrow_count(); ++a) {
    const auto& arr = m.algebra().quiver().arrow(a);
    maps.push_back(g[arr.target] * m.arrow_map(a) * *inverse(g[arr.source]));
  }
  const Representation n(m.algebra(), m.dims(), maps);
  const auto iso = find_isomorphism(m, n);
  ASSERT_TRUE(iso.has_value());
  EXPECT_TRUE(iso->is_isomorphism());
  EXPECT_FALSE(is_isomorphic(m, lib["2/34"]));
}

TEST(Decompose, RequiresCharacteristicZero) {
  const auto lib = fixtures::load("a3_rad2.alg", "a3_rad2_ind.mod", Field::prime(5));
  EXPECT_THROW(decompose(lib["1/2"]), FieldError);
}

TEST(Fac, TraceSubmodule) {
  const auto lib = fixtures::a3();
  EXPECT_TRUE(in_fac(lib["1"], lib["1/2"]));
  EXPECT_FALSE(in_fac(lib["1/2"], lib["1"]));
  EXPECT_TRUE(in_fac(lib["2"], lib["2/3"]));
  EXPECT_FALSE(in_fac(lib["3"], lib["2/3"]));
}

TEST(ModuleText, ParseErrorsCarryLineNumbers) {
  const BoundAlgebra a = load_algebra(fixtures::data("a3_rad2.alg"));
  auto error_of = [&](const std::string& text) {
    try {
      parse_modules(text, a, "m.mod");
    } catch (const InputError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_NE(error_of("[module] x\ndims: 1 1\n").find("m.mod:2:"), std::string::npos);
  EXPECT_NE(error_of("[module] x\ndims: 1 1 0\narrow gamma:\n1\n").find("m.mod:3:"), std::string::npos);
  EXPECT_NE(error_of("[module] x\ndims: 1 1 0\narrow alpha:\n1 2\n").find("m.mod:4:"), std::string::npos);
  EXPECT_NE(error_of("[module] x\ndims: 1 1 1\narrow alpha:\n1\narrow beta:\n1\n").find("m.mod"), std::string::npos);
}

TEST(ModuleText, RoundTrip) {
  const auto lib = fixtures::ex1();
  for (const auto& m : lib.named) {
    const auto back = parse_modules(write_module(m.name, m.module), lib.algebra);
    ASSERT_EQ(back.size(), 1u);
    EXPECT_EQ(back[0].name, m.name);
    EXPECT_TRUE(is_isomorphic(back[0].module, m.module));
  }
}
