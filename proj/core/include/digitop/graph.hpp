#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace digitop {

/// Vertex label. Nonempty, printable, and free of whitespace and of the
/// separator characters '#', ',' and '|' used by the text formats.
class VertexId {
 public:
  explicit VertexId(std::string label);

  const std::string& str() const noexcept { return label_; }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

  static bool valid_label(std::string_view label) noexcept;

 private:
  std::string label_;
};

std::ostream& operator<<(std::ostream& os, const VertexId& v);

inline namespace literals {
inline VertexId operator""_v(const char* s, std::size_t n) { return VertexId(std::string(s, n)); }
}  // namespace literals

using VertexSet = std::set<VertexId>;

/// Undirected edge stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

Edge make_edge(const VertexId& u, const VertexId& v);

class GraphBuilder;

/// Immutable finite simple undirected graph. Vertices are kept in ascending
/// label order, so index order and label order coincide; equality is
/// label-exact.
class Graph {
 public:
  using Index = std::uint32_t;

  Graph() = default;

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  const std::vector<VertexId>& vertices() const noexcept { return labels_; }
  VertexSet vertex_set() const;
  const VertexId& label(std::size_t i) const { return labels_.at(i); }

  bool contains(const VertexId& v) const { return index_of(v).has_value(); }
  std::optional<std::size_t> index_of(const VertexId& v) const;
  /// Index of `v`, or DomainError when absent.
  std::size_t require(const VertexId& v) const;

  /// Sorted neighbor indices of vertex `i`.
  const std::vector<Index>& neighbors(std::size_t i) const { return adj_.at(i); }
  VertexSet neighbors(const VertexId& v) const;
  std::size_t degree(const VertexId& v) const { return adj_[require(v)].size(); }

  bool adjacent(std::size_t i, std::size_t j) const;
  bool adjacent(const VertexId& u, const VertexId& v) const;

  /// Edges in ascending (min, max) label order.
  std::vector<Edge> edges() const;

  /// Induced subgraph on `keep`; every label must be present.
  Graph induced(const VertexSet& keep) const;
  /// Induced subgraph on ascending vertex indices.
  Graph induced_by_index(const std::vector<std::size_t>& sorted_indices) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;
  friend Graph join(const Graph& g, const Graph& h);

  std::vector<VertexId> labels_;
  std::vector<std::vector<Index>> adj_;
  std::size_t edge_count_ = 0;
};

/// Accumulates vertices and edges; duplicates, self-loops and undeclared
/// endpoints are rejected with DomainError.
class GraphBuilder {
 public:
  GraphBuilder() = default;
  explicit GraphBuilder(const Graph& g);

  GraphBuilder& add_vertex(const VertexId& v);
  GraphBuilder& add_edge(const VertexId& u, const VertexId& v);
  GraphBuilder& remove_vertex(const VertexId& v);
  GraphBuilder& remove_edge(const VertexId& u, const VertexId& v);

  bool has_vertex(const VertexId& v) const { return adjacency_.count(v) != 0; }
  bool has_edge(const VertexId& u, const VertexId& v) const;

  Graph build() const;

 private:
  std::map<VertexId, std::set<VertexId>> adjacency_;
};

/// Rim O(v): induced subgraph on the neighbors of v.
Graph rim(const Graph& g, const VertexId& v);
/// Ball U(v): induced subgraph on v and its neighbors.
Graph ball(const Graph& g, const VertexId& v);
/// Join: disjoint union plus every cross edge. Labels must not collide.
Graph join(const Graph& g, const Graph& h);
/// G - H: induced subgraph on the vertices not in `h`.
Graph remove(const Graph& g, const VertexSet& h);

/// Components ordered by their smallest label.
std::vector<VertexSet> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph complete_graph(std::size_t n, std::string_view prefix = "v");
Graph cycle_graph(std::size_t n, std::string_view prefix = "v");
Graph path_graph(std::size_t n, std::string_view prefix = "v");

/// Generates "z0", "z1", ... skipping labels already taken. The counter only
/// moves forward, so a label is never handed out twice by one generator.
class FreshLabels {
 public:
  FreshLabels() = default;
  explicit FreshLabels(const Graph& taken);

  void reserve(const VertexId& v) { taken_.insert(v); }
  void reserve(const Graph& g);
  VertexId next();

 private:
  VertexSet taken_;
  std::size_t counter_ = 0;
};

}  // namespace digitop
