#include <gtest/gtest.h>

#include "digitop/canonical.hpp"
#include "digitop/gallery.hpp"
#include "digitop/manifold.hpp"
#include "oracles.hpp"

using namespace digitop;

TEST(CanonicalForm, RelabeledFiveCyclesAgree) {
  std::mt19937_64 rng(1);
  Graph c5 = cycle_graph(5);
  EXPECT_EQ(canonical_form(c5), canonical_form(corpus::shuffle_labels(c5, rng)));
  EXPECT_EQ(canonical_form(c5), canonical_form(cycle_graph(5, "w")));
}

TEST(CanonicalForm, FourCycleDiffersFromPath) {
  EXPECT_NE(canonical_form(cycle_graph(4)), canonical_form(path_graph(4)));
}

TEST(CanonicalForm, OctahedronUnderEveryPermutation) {
  Graph oct = corpus::octahedron();
  const CanonicalForm f = canonical_form(oct);
  std::vector<VertexId> ids = oct.vertices();
  std::vector<VertexId> perm = ids;
  do {
    std::map<VertexId, VertexId> to;
    for (std::size_t i = 0; i < ids.size(); ++i) to.emplace(ids[i], perm[i]);
    ASSERT_EQ(canonical_form(corpus::relabel(oct, to)), f);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(CanonicalForm, EncodesVertexCount) {
  EXPECT_EQ(canonical_form(Graph{}).vertex_count(), 0u);
  EXPECT_EQ(canonical_form(torus16()).vertex_count(), 16u);
}

TEST(CanonicalForm, AgreesWithBruteForceOnSmallGallery) {
  std::vector<Graph> pool;
  for (const auto& name : gallery_names()) {
    Graph g = gallery(name);
    if (g.size() <= 7) pool.push_back(g);
  }
  std::mt19937_64 rng(5);
  const std::size_t base = pool.size();
  for (std::size_t i = 0; i < base; ++i) pool.push_back(corpus::shuffle_labels(pool[i], rng));
  pool.push_back(corpus::sphere7());
  pool.push_back(corpus::pyramid());
  pool.push_back(cycle_graph(6));
  pool.push_back(corpus::hexagon());
  for (const auto& a : pool)
    for (const auto& b : pool) EXPECT_EQ(canonical_form(a) == canonical_form(b), oracle::isomorphic(a, b));
}

TEST(CanonicalForm, AgreesWithBruteForceOnRandomPairs) {
  std::mt19937_64 rng(17);
  int iso = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    std::size_t n = 2 + trial % 6;
    Graph a = corpus::random_graph(n, 0.5, rng);
    Graph b = trial % 3 == 0 ? corpus::shuffle_labels(a, rng) : corpus::random_graph(n, 0.5, rng);
    if (a.edge_count() != b.edge_count()) continue;
    bool expected = oracle::isomorphic(a, b);
    iso += expected;
    ASSERT_EQ(canonical_form(a) == canonical_form(b), expected) << trial;
    ASSERT_EQ(is_isomorphic(a, b), expected);
  }
  EXPECT_GT(iso, 500);
}

TEST(CanonicalForm, SeparatesEveryClassOnSevenPoints) {
  // Enumeration dedups by canonical form; the class counts are known.
  const std::size_t expected[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  for (std::size_t n = 0; n <= 7; ++n) EXPECT_EQ(corpus::graphs(n).size(), expected[n]) << n;
}

TEST(FindIsomorphism, MapsEdgesToEdges) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph a = corpus::random_graph(9, 0.45, rng);
    Graph b = corpus::shuffle_labels(a, rng);
    auto iso = find_isomorphism(a, b);
    ASSERT_TRUE(iso.has_value());
    EXPECT_EQ(corpus::relabel(a, *iso), b);
  }
  EXPECT_FALSE(find_isomorphism(cycle_graph(4), path_graph(4)).has_value());
}

TEST(CanonicalLabeling, OrderRebuildsTheForm) {
  Graph t = torus16();
  auto lab = canonical_labeling(t);
  ASSERT_EQ(lab.order.size(), t.size());
  const std::size_t n = t.size();
  std::string bytes = {0, 0, 0, static_cast<char>(n)};
  std::size_t bit = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j, ++bit) {
      if (bit % 8 == 0) bytes.push_back(0);
      if (t.adjacent(lab.order[i], lab.order[j])) bytes.back() = static_cast<char>(bytes.back() | (0x80 >> (bit % 8)));
    }
  EXPECT_EQ(lab.form.bytes(), bytes);
  std::mt19937_64 rng(9);
  Graph u = corpus::shuffle_labels(t, rng);
  EXPECT_EQ(canonical_labeling(u).form, lab.form);
}

TEST(JoinProperty, AssociativeUpToIsomorphism) {
  std::vector<Graph> small;
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& g : corpus::graphs(n)) small.push_back(g);
  auto tagged = [](const Graph& g, const std::string& p) {
    std::map<VertexId, VertexId> to;
    for (const auto& v : g.vertices()) to.emplace(v, VertexId(p + v.str()));
    return corpus::relabel(g, to);
  };
  for (const auto& a0 : small)
    for (const auto& b0 : small)
      for (const auto& c0 : small) {
        Graph a = tagged(a0, "a"), b = tagged(b0, "b"), c = tagged(c0, "c");
        ASSERT_EQ(canonical_form(join(join(a, b), c)), canonical_form(join(a, join(b, c))));
      }
}
