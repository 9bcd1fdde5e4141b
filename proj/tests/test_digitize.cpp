#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <set>

#include "digitop/canonical.hpp"
#include "digitop/digitize.hpp"
#include "digitop/error.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/invariants.hpp"
#include "digitop/manifold.hpp"
#include "digitop/transform.hpp"
#include "oracles.hpp"

using namespace digitop;

using Counts = std::vector<std::uint64_t>;

TEST(Digitize, PointSegmentIsOneCube) {
  auto m = digitize(Segment{{0.1, 0.1}, {0.1, 0.1}}, 1.0);
  ASSERT_EQ(m.cubes.size(), 1u);
  EXPECT_EQ(m.cubes[0], (CubeCoord{0, 0}));
  EXPECT_EQ(m.graph.size(), 1u);
  EXPECT_EQ(m.dim, 2);
}

TEST(Digitize, HorizontalSegmentIsContractible) {
  auto m = digitize(Segment{{0.5, 0.5}, {4.5, 0.5}}, 1.0);
  EXPECT_EQ(m.cubes.size(), 5u);
  EXPECT_TRUE(is_contractible(m.graph));
}

TEST(Digitize, DiagonalSegmentsAreContractible) {
  auto m2 = digitize(Segment{{0.2, 0.3}, {5.7, 3.1}}, 1.0);
  EXPECT_TRUE(is_contractible(m2.graph));
  auto m3 = digitize(Segment{{0, 0, 0}, {3, 2, 1}}, 1.0);
  EXPECT_EQ(m3.dim, 3);
  EXPECT_EQ(betti_numbers(m3.graph), Counts{1});
  EXPECT_EQ(compress(m3.graph).graph.size(), 1u);
}

TEST(Digitize, CircleRadiusThree) {
  auto m = digitize(Circle{0, 0, 3}, 1.0);
  EXPECT_EQ(m.cubes.size(), 28u);
  EXPECT_EQ(m.graph.edge_count(), 52u);
  EXPECT_EQ(betti_numbers(m.graph), (Counts{1, 1}));
  Graph c = compress(m.graph).graph;
  EXPECT_TRUE(oracle::isomorphic(c, cycle_graph(4)));
  auto s = is_sphere(c);
  EXPECT_TRUE(s.holds);
  EXPECT_EQ(s.dim, 1);
}

TEST(Digitize, CircleAtTwoResolutionsHasTheSameHomology) {
  auto coarse = compress(digitize(Circle{0, 0, 3}, 1.0).graph).graph;
  auto fine = compress(digitize(Circle{0, 0, 3}, 0.5).graph).graph;
  EXPECT_EQ(betti_numbers(coarse), (Counts{1, 1}));
  EXPECT_EQ(betti_numbers(fine), (Counts{1, 1}));
}

TEST(Digitize, SphereSurfaceRadiusThree) {
  auto m = digitize(SphereSurface{0, 0, 0, 3}, 1.0);
  EXPECT_EQ(m.cubes.size(), 200u);
  auto r = invariant_report(m.graph);
  EXPECT_EQ(r.euler, 2);
  EXPECT_EQ(r.betti, (Counts{1, 0, 1}));
  auto c = compress(m.graph);
  EXPECT_EQ(betti_numbers(c.graph), (Counts{1, 0, 1}));
  EXPECT_LE(c.graph.size(), HomotopyLimits{}.max_vertices);
}

TEST(Digitize, CubeSurface) {
  auto m = digitize(CubeSurface{0.5, 0.5, 0.5, 2.0}, 1.0);
  EXPECT_EQ(m.cubes.size(), 26u);
  EXPECT_FALSE(std::binary_search(m.cubes.begin(), m.cubes.end(), CubeCoord{1, 1, 1}));
  EXPECT_EQ(betti_numbers(m.graph), (Counts{1, 0, 1}));
}

TEST(ModelGraph, Examples) {
  EXPECT_EQ(model_graph(std::vector<CubeCoord>{{0, 0}}).size(), 1u);
  Graph two = model_graph(std::vector<CubeCoord>{{0, 0}, {1, 0}});
  EXPECT_EQ(two.edge_count(), 1u);
  Graph corner = model_graph(std::vector<CubeCoord>{{0, 0, 0}, {1, 1, 1}});
  EXPECT_EQ(corner.edge_count(), 1u);
  Graph apart = model_graph(std::vector<CubeCoord>{{0, 0}, {2, 0}});
  EXPECT_EQ(apart.edge_count(), 0u);

  std::vector<CubeCoord> ring;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != 1 || j != 1) ring.push_back({i, j});
  Graph r = model_graph(ring);
  EXPECT_EQ(r.size(), 8u);
  EXPECT_TRUE(oracle::isomorphic(compress(r).graph, cycle_graph(4)));
}

TEST(ModelGraph, LabelsFollowCoordinates) {
  EXPECT_EQ(cube_label({0, -1}), VertexId("c0_-1"));
  EXPECT_EQ(cube_label({3, 2, -7}), VertexId("c3_2_-7"));
  auto m = digitize(Segment{{0.5, 0.5}, {1.5, 0.5}}, 1.0);
  EXPECT_EQ(m.graph.vertices(), (std::vector<VertexId>{VertexId("c0_0"), VertexId("c1_0")}));
}

TEST(ModelGraph, AdjacencyIsChebyshev) {
  auto m = digitize(SphereSurface{0.2, -0.1, 0.3, 2.2}, 1.0);
  for (std::size_t i = 0; i < m.cubes.size(); ++i)
    for (std::size_t j = i + 1; j < m.cubes.size(); ++j) {
      std::int64_t cheb = 0;
      for (std::size_t k = 0; k < 3; ++k) cheb = std::max(cheb, std::abs(m.cubes[i][k] - m.cubes[j][k]));
      ASSERT_EQ(m.graph.adjacent(cube_label(m.cubes[i]), cube_label(m.cubes[j])), cheb <= 1);
    }
}

TEST(Digitize, TranslationByGridStepsShiftsCubes) {
  for (double L : {1.0, 0.5}) {
    auto a = digitize(Circle{0.3, 0.2, 2.7}, L);
    auto b = digitize(Circle{0.3 + 2 * L, 0.2 - 3 * L, 2.7}, L);
    ASSERT_EQ(a.cubes.size(), b.cubes.size());
    for (std::size_t i = 0; i < a.cubes.size(); ++i) EXPECT_EQ((CubeCoord{a.cubes[i][0] + 2, a.cubes[i][1] - 3}), b.cubes[i]);
    EXPECT_TRUE(is_isomorphic(a.graph, b.graph));
  }
  auto s = digitize(Segment{{0.1, 0.2, 0.3}, {2.9, 1.7, 0.4}}, 1.0);
  auto t = digitize(Segment{{1.1, 0.2, -0.7}, {3.9, 1.7, -0.6}}, 1.0);
  ASSERT_EQ(s.cubes.size(), t.cubes.size());
  for (std::size_t i = 0; i < s.cubes.size(); ++i)
    EXPECT_EQ((CubeCoord{s.cubes[i][0] + 1, s.cubes[i][1], s.cubes[i][2] - 1}), t.cubes[i]);
}

TEST(Digitize, ImplicitCircleIsInsideTheExactModel) {
  auto exact = digitize(Circle{0, 0, 3}, 1.0);
  for (int depth : {0, 1, 3}) {
    auto sampled = digitize(Implicit{ScalarField::parse("x^2 + y^2 - 9")}, 1.0, depth);
    EXPECT_TRUE(std::includes(exact.cubes.begin(), exact.cubes.end(), sampled.cubes.begin(), sampled.cubes.end()));
    EXPECT_EQ(betti_numbers(compress(sampled.graph).graph), (Counts{1, 1}));
  }
  auto ball = digitize(Implicit{ScalarField::parse("x^2 + y^2 + z^2 - 4"), -4, 4}, 1.0, 1);
  EXPECT_EQ(ball.dim, 3);
  EXPECT_EQ(betti_numbers(ball.graph), (Counts{1, 0, 1}));
}

TEST(Digitize, Errors) {
  EXPECT_THROW(digitize(Circle{0, 0, 3}, 0.0), DomainError);
  EXPECT_THROW(digitize(Circle{0, 0, 3}, -1.0), DomainError);
  EXPECT_THROW(digitize(Circle{0, 0, 3}, 1.0, -1), DomainError);
  EXPECT_THROW(digitize(Circle{0, 0, 0}, 1.0), DomainError);
  EXPECT_THROW(digitize(Circle{0, NAN, 1}, 1.0), DomainError);
  EXPECT_THROW(digitize(CubeSurface{0, 0, 0, -1}, 1.0), DomainError);
  EXPECT_THROW(digitize(Segment{{0, 0}, {1, 1, 1}}, 1.0), DomainError);
  EXPECT_THROW(digitize(Circle{0, 0, 1e6}, 1e-3), CapacityError);
  EXPECT_THROW(digitize(Circle{0, 0, 1e300}, 1.0), CapacityError);
  EXPECT_THROW(digitize(Implicit{ScalarField::parse("x+y+z"), -8, 8}, 0.1, 4), CapacityError);
}

TEST(ParseShape, Grammar) {
  auto c = std::get<Circle>(parse_shape("circle:0,0,3"));
  EXPECT_EQ(c.r, 3.0);
  auto s2 = std::get<Segment>(parse_shape("segment:0.5,0.5,4.5,0.5"));
  EXPECT_EQ(s2.b, (std::vector<double>{4.5, 0.5}));
  auto s3 = std::get<Segment>(parse_shape("segment:0,0,0,1,2,3"));
  EXPECT_EQ(s3.a.size(), 3u);
  EXPECT_EQ(std::get<SphereSurface>(parse_shape("sphere:0,0,0,3")).r, 3.0);
  EXPECT_EQ(std::get<CubeSurface>(parse_shape("cubesurf:1,2,3,4")).side, 4.0);
  auto f = std::get<Implicit>(parse_shape("implicit:min(x,y) - 1"));
  EXPECT_EQ(f.field.dimension(), 2);
  EXPECT_EQ(shape_dimension(parse_shape("sphere:0,0,0,3")), 3);

  for (const char* bad : {"circle", "circle:0,0", "circle:0,0,-1", "circle:a,0,1", "segment:1,2,3", "blob:1",
                          "sphere:0,0,0,0", "implicit:", "circle:0,0,3,"})
    EXPECT_THROW(parse_shape(bad), DomainError) << bad;
}

TEST(Digitize, CompressionOrderOnModels) {
  // Only invariants must agree across contraction orders; isomorphism
  // differences are reported.
  std::mt19937_64 rng(71);
  std::vector<std::pair<std::string, Graph>> models = {
      {"circle L=1", digitize(Circle{0, 0, 3}, 1.0).graph},
      {"circle L=0.5", digitize(Circle{0, 0, 3}, 0.5).graph},
      {"sphere L=1", digitize(SphereSurface{0, 0, 0, 3}, 1.0).graph},
  };
  for (const auto& [name, g] : models) {
    const Graph reference = compress(g).graph;
    const auto betti = betti_numbers(reference);
    std::set<CanonicalForm> shapes{canonical_form(reference)};
    for (int k = 0; k < 10; ++k) {
      Graph h = g;
      for (auto pairs = find_simple_pairs(h); !pairs.empty(); pairs = find_simple_pairs(h)) {
        auto [x, y] = pairs[rng() % pairs.size()];
        h = contract_pair(h, x, y).graph;
      }
      EXPECT_EQ(betti_numbers(h), betti) << name;
      shapes.insert(canonical_form(h));
    }
    if (shapes.size() > 1)
      std::cout << name << ": " << shapes.size() << " non-isomorphic compressed forms over 11 orders\n";
  }
}
