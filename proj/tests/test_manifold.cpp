#include <gtest/gtest.h>

#include "digitop/canonical.hpp"
#include "digitop/error.hpp"
#include "digitop/gallery.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/invariants.hpp"
#include "digitop/manifold.hpp"
#include "oracles.hpp"

using namespace digitop;

namespace {

std::vector<std::string> gallery_spheres() { return {"s0", "s1-min", "s1-5", "s2-min", "s3-min"}; }
std::vector<std::string> gallery_manifolds() { return {"s1-min", "s1-5", "s2-min", "s3-min", "torus16", "projective11"}; }

// Connected vertex subsets of size <= k that induce contractible subgraphs.
std::vector<VertexSet> contractible_subsets(const Graph& g, std::size_t k) {
  std::vector<VertexSet> out;
  std::set<VertexSet> seen;
  std::vector<VertexSet> frontier;
  for (const auto& v : g.vertices()) frontier.push_back({v});
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (const auto& s : frontier) {
      if (!seen.insert(s).second) continue;
      if (oracle::contractible(g.induced(s))) out.push_back(s);
      if (s.size() == k) continue;
      for (const auto& v : s)
        for (const auto& u : g.neighbors(v))
          if (!s.contains(u)) {
            VertexSet t = s;
            t.insert(u);
            next.push_back(std::move(t));
          }
    }
    frontier = std::move(next);
  }
  return out;
}

}  // namespace

TEST(MinimalSphere, SizesAndShapes) {
  Graph s0 = minimal_sphere(0);
  EXPECT_EQ(s0.size(), 2u);
  EXPECT_EQ(s0.edge_count(), 0u);
  EXPECT_TRUE(oracle::isomorphic(minimal_sphere(1), cycle_graph(4)));
  EXPECT_EQ(minimal_sphere(2).edge_count(), 12u);
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(minimal_sphere(n).size(), static_cast<std::size_t>(2 * n + 2));
  EXPECT_THROW(minimal_sphere(-1), DomainError);
}

TEST(Suspend, Examples) {
  EXPECT_TRUE(is_isomorphic(suspend(minimal_sphere(0)), cycle_graph(4)));
  EXPECT_TRUE(is_isomorphic(suspend(cycle_graph(4)), corpus::octahedron()));
  Graph s3 = suspend(corpus::octahedron());
  EXPECT_EQ(s3.size(), 8u);
  EXPECT_TRUE(is_isomorphic(s3, minimal_sphere(3)));
}

TEST(IsSphere, Examples) {
  for (std::size_t n = 4; n <= 12; ++n) {
    auto d = is_sphere(cycle_graph(n));
    EXPECT_TRUE(d.holds);
    EXPECT_EQ(d.dim, 1);
  }
  EXPECT_FALSE(is_sphere(cycle_graph(3)).holds);
  auto oct = is_sphere(corpus::octahedron());
  EXPECT_TRUE(oct.holds);
  EXPECT_EQ(oct.dim, 2);
  ASSERT_TRUE(oct.witness.has_value());
  EXPECT_TRUE(is_contractible(remove(corpus::octahedron(), {*oct.witness})));
  auto t = is_sphere(torus16());
  EXPECT_FALSE(t.holds);
  EXPECT_FALSE(t.dim.has_value());
  EXPECT_FALSE(is_sphere(projective11()).holds);
  EXPECT_FALSE(is_sphere(Graph{}).holds);
  EXPECT_FALSE(is_sphere(corpus::from_edges({"a", "b"}, {{"a", "b"}})).holds);
}

TEST(IsSphere, FixturesFromSplitting) {
  auto h = is_sphere(corpus::hexagon());
  EXPECT_TRUE(h.holds);
  EXPECT_EQ(h.dim, 1);
  auto s7 = is_sphere(corpus::sphere7());
  EXPECT_EQ(corpus::sphere7().size(), 7u);
  EXPECT_TRUE(s7.holds);
  EXPECT_EQ(s7.dim, 2);
}

TEST(IsManifold, Examples) {
  auto oct = is_manifold(corpus::octahedron());
  EXPECT_TRUE(oct.holds);
  EXPECT_EQ(oct.dim, 2);
  auto t = is_manifold(torus16());
  EXPECT_TRUE(t.holds);
  EXPECT_EQ(t.dim, 2);
  auto p = is_manifold(projective11());
  EXPECT_TRUE(p.holds);
  EXPECT_EQ(p.dim, 2);
  auto path = is_manifold(path_graph(3));
  EXPECT_FALSE(path.holds);
  EXPECT_FALSE(path.dim.has_value());
  // two disjoint octahedra: rims fine, but not connected
  Graph a = minimal_sphere(2);
  std::map<VertexId, VertexId> to;
  for (const auto& v : a.vertices()) to.emplace(v, VertexId("b" + v.str()));
  GraphBuilder b(a);
  Graph shifted = corpus::relabel(a, to);
  for (const auto& v : shifted.vertices()) b.add_vertex(v);
  for (const auto& [u, v] : shifted.edges()) b.add_edge(u, v);
  EXPECT_FALSE(is_manifold(b.build()).holds);
}

TEST(IsManifold, MixedRimDimensionsAreRejected) {
  // octahedron with a pendant 4-cycle: rims of dimension 1 and 0 cannot agree
  GraphBuilder b(corpus::octahedron());
  b.add_vertex("t"_v).add_edge("t"_v, "x0"_v);
  EXPECT_FALSE(is_manifold(b.build()).holds);
  EXPECT_EQ(classify(b.build()).kind, Classification::Kind::Other);
}

TEST(DiskFromSphere, Examples) {
  Disk d1 = disk_from_sphere(cycle_graph(4), "v0"_v);
  EXPECT_EQ(d1.dim, 1);
  EXPECT_EQ(d1.boundary, (VertexSet{"v1"_v, "v3"_v}));
  EXPECT_EQ(d1.interior, (VertexSet{"v2"_v}));

  Disk d2 = disk_from_sphere(corpus::octahedron(), "x0"_v);
  EXPECT_EQ(d2.dim, 2);
  EXPECT_TRUE(oracle::isomorphic(d2.graph, corpus::pyramid()));
  EXPECT_EQ(d2.interior, (VertexSet{"y0"_v}));
  EXPECT_EQ(d2.boundary.size(), 4u);

  Disk d5 = disk_from_sphere(cycle_graph(5), "v0"_v);
  EXPECT_EQ(d5.interior.size(), 2u);
  EXPECT_EQ(d5.dim, 1);

  EXPECT_THROW(disk_from_sphere(torus16(), "1"_v), DomainError);
}

TEST(IsDisk, Examples) {
  auto pyr = is_disk(corpus::pyramid(), {"a"_v, "b"_v, "c"_v, "d"_v});
  EXPECT_TRUE(pyr.holds);
  EXPECT_EQ(pyr.dim, 2);
  auto path = is_disk(corpus::from_edges({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}), {"a"_v, "c"_v});
  EXPECT_TRUE(path.holds);
  EXPECT_EQ(path.dim, 1);
  Graph c4 = cycle_graph(4);
  EXPECT_FALSE(is_disk(c4, {"v0"_v, "v2"_v}).holds);
  EXPECT_FALSE(is_disk(c4, {}).holds);
  EXPECT_FALSE(is_disk(corpus::pyramid(), {"a"_v, "c"_v}).holds);
  auto k1 = is_disk(GraphBuilder{}.add_vertex("o"_v).build(), {});
  EXPECT_TRUE(k1.holds);
  EXPECT_EQ(k1.dim, 0);
}

TEST(IsDisk, EveryPuncturedGallerySphere) {
  for (const auto& name : gallery_spheres()) {
    Graph m = gallery(name);
    if (name == "s0") continue;
    for (const auto& v : m.vertices()) {
      Disk d = disk_from_sphere(m, v);
      auto check = is_disk(d.graph, d.boundary);
      ASSERT_TRUE(check.holds) << name << ' ' << v;
      EXPECT_EQ(check.dim, d.dim);
    }
  }
}

TEST(Classify, GalleryVerdicts) {
  EXPECT_EQ(describe(classify(gallery("s0"))), "sphere dim=0");
  EXPECT_EQ(describe(classify(gallery("s2-min"))), "sphere dim=2");
  EXPECT_EQ(describe(classify(gallery("s3-min"))), "sphere dim=3");
  EXPECT_EQ(describe(classify(torus16())), "manifold dim=2 sphere=false");
  EXPECT_EQ(describe(classify(projective11())), "manifold dim=2 sphere=false");
  EXPECT_EQ(describe(classify(gallery("disk2"))), "disk dim=2");
  EXPECT_EQ(describe(classify(gallery("disk1"))), "disk dim=1");
  EXPECT_EQ(describe(classify(complete_graph(4))), "contractible");
  EXPECT_EQ(describe(classify(GraphBuilder{}.add_vertex("o"_v).build())), "contractible");
  EXPECT_EQ(describe(classify(Graph{})), "other");
  Classification c = classify(gallery("disk2"));
  EXPECT_EQ(c.boundary.size(), 4u);
}

TEST(Classify, ConsistentWithRecognizersOnSmallGraphs) {
  using Kind = Classification::Kind;
  for (const auto& g : corpus::graphs_up_to(7, false)) {
    Classification c = classify(g);
    auto s = is_sphere(g);
    auto m = is_manifold(g);
    if (s.holds) {
      ASSERT_TRUE(m.holds || s.dim == 0);
      if (m.holds) ASSERT_EQ(m.dim, s.dim);
      ASSERT_EQ(c.kind, Kind::Sphere);
      ASSERT_EQ(c.dim, *s.dim);
    } else if (m.holds) {
      ASSERT_EQ(c.kind, Kind::Manifold);
    } else if (c.kind == Kind::Contractible || c.kind == Kind::Disk) {
      ASSERT_TRUE(oracle::contractible(g));
    } else {
      ASSERT_EQ(c.kind, Kind::Other);
      ASSERT_FALSE(oracle::contractible(g));
    }
  }
}

TEST(Classify, SpheresOnSmallGraphsAreCycles) {
  // on at most seven points the spheres are S0, the cycles C4..C7, the
  // octahedron and the 7-point 2-sphere
  std::size_t spheres = 0;
  for (const auto& g : corpus::graphs_up_to(7, false)) spheres += is_sphere(g).holds;
  EXPECT_EQ(spheres, 7u);
}

TEST(SphereByComplement, Examples) {
  Graph oct = corpus::octahedron();
  for (const auto& v : oct.vertices()) EXPECT_TRUE(sphere_by_complement(oct, {v}));
  for (const auto& v : torus16().vertex_set()) EXPECT_FALSE(sphere_by_complement(torus16(), {v}));
  for (const auto& v : projective11().vertex_set()) EXPECT_FALSE(sphere_by_complement(projective11(), {v}));
  EXPECT_THROW(sphere_by_complement(path_graph(3), {"v0"_v}), DomainError);
  EXPECT_THROW(sphere_by_complement(oct, {}), DomainError);
  EXPECT_THROW(sphere_by_complement(oct, {"x0"_v, "y0"_v}), DomainError);
}

TEST(SphereProperties, PuncturedSpheresAreContractible) {
  for (const auto& name : gallery_spheres()) {
    Graph m = gallery(name);
    for (const auto& v : m.vertices()) ASSERT_TRUE(is_contractible(remove(m, {v}))) << name << ' ' << v;
  }
}

TEST(SphereProperties, RemovingContractibleSubspacesLeavesContractible) {
  for (const auto& name : gallery_spheres()) {
    if (name == "s0") continue;
    Graph m = gallery(name);
    for (const auto& s : contractible_subsets(m, 4)) {
      Graph rest = remove(m, s);
      ASSERT_TRUE(is_contractible(rest)) << name;
    }
  }
}

TEST(SphereProperties, SuspensionRaisesDimension) {
  for (const auto& name : {"s0", "s1-min", "s1-5", "s2-min"}) {
    Graph m = gallery(name);
    auto d = is_sphere(m);
    ASSERT_TRUE(d.holds);
    auto s = is_sphere(suspend(m));
    EXPECT_TRUE(s.holds) << name;
    EXPECT_EQ(s.dim, *d.dim + 1) << name;
  }
}

TEST(SphereProperties, SpheresAreManifoldsOfTheSameDimension) {
  for (const auto& name : gallery_spheres()) {
    if (name == "s0") continue;
    auto s = is_sphere(gallery(name));
    auto m = is_manifold(gallery(name));
    EXPECT_TRUE(m.holds);
    EXPECT_EQ(m.dim, s.dim);
  }
}

TEST(ManifoldProperties, ComplementsOfContractibleSubspacesShareHomology) {
  for (const auto& name : gallery_manifolds()) {
    Graph m = gallery(name);
    auto reference = betti_numbers(remove(m, {m.vertices().front()}));
    for (const auto& v : m.vertices()) EXPECT_EQ(betti_numbers(remove(m, {v})), reference) << name;
    for (const auto& s : contractible_subsets(m, 3)) EXPECT_EQ(betti_numbers(remove(m, s)), reference) << name;
  }
}

TEST(ManifoldProperties, ComplementCriterionMatchesSphereTest) {
  for (const auto& name : gallery_manifolds()) {
    Graph m = gallery(name);
    bool sphere = is_sphere(m).holds;
    for (const auto& s : contractible_subsets(m, 2)) EXPECT_EQ(sphere_by_complement(m, s), sphere) << name;
  }
}

TEST(Gallery, NamesAndFixtures) {
  EXPECT_EQ(gallery_names().size(), 9u);
  for (const auto& name : gallery_names()) EXPECT_NO_THROW(gallery(name));
  EXPECT_THROW(gallery("s9"), DomainError);
  EXPECT_THROW(gallery_disk("s2-min"), DomainError);
  EXPECT_EQ(torus16().size(), 16u);
  EXPECT_EQ(torus16().edge_count(), 48u);
  EXPECT_EQ(projective11().size(), 11u);
  EXPECT_EQ(projective11().edge_count(), 30u);
  for (const auto& v : torus16().vertex_set()) EXPECT_TRUE(oracle::isomorphic(rim(torus16(), v), cycle_graph(6)));
  for (const auto& v : projective11().vertex_set()) {
    Graph r = rim(projective11(), v);
    EXPECT_GE(r.size(), 4u);
    EXPECT_TRUE(oracle::isomorphic(r, cycle_graph(r.size())));
  }
}
