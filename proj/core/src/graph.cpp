#include "digitop/graph.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

#include "digitop/error.hpp"

namespace digitop {

bool VertexId::valid_label(std::string_view label) noexcept {
  if (label.empty()) return false;
  for (unsigned char c : label) {
    if (c < 0x21 || c == 0x7f) return false;  // whitespace and control characters
    if (c == '#' || c == ',' || c == '|') return false;
  }
  return true;
}

VertexId::VertexId(std::string label) : label_(std::move(label)) {
  if (!valid_label(label_)) throw DomainError("invalid vertex label '" + label_ + "'");
}

std::ostream& operator<<(std::ostream& os, const VertexId& v) { return os << v.str(); }

Edge make_edge(const VertexId& u, const VertexId& v) {
  return u < v ? Edge{u, v} : Edge{v, u};
}

// ---------------------------------------------------------------------------
// Graph

VertexSet Graph::vertex_set() const { return VertexSet(labels_.begin(), labels_.end()); }

std::optional<std::size_t> Graph::index_of(const VertexId& v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::require(const VertexId& v) const {
  auto i = index_of(v);
  if (!i) throw DomainError("unknown vertex '" + v.str() + "'");
  return *i;
}

VertexSet Graph::neighbors(const VertexId& v) const {
  VertexSet out;
  for (Index j : adj_[require(v)]) out.insert(labels_[j]);
  return out;
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  const auto& row = adj_.at(i);
  return std::binary_search(row.begin(), row.end(), static_cast<Index>(j));
}

bool Graph::adjacent(const VertexId& u, const VertexId& v) const {
  return adjacent(require(u), require(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i)
    for (Index j : adj_[i])
      if (j > i) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  for (const auto& v : keep) idx.push_back(require(v));
  return induced_by_index(idx);
}

Graph Graph::induced_by_index(const std::vector<std::size_t>& sorted_indices) const {
  constexpr Index kAbsent = ~Index{0};
  std::vector<Index> remap(labels_.size(), kAbsent);
  Graph out;
  out.labels_.reserve(sorted_indices.size());
  for (std::size_t k = 0; k < sorted_indices.size(); ++k) {
    std::size_t i = sorted_indices[k];
    if (i >= labels_.size() || (k > 0 && sorted_indices[k - 1] >= i))
      throw DomainError("induced_by_index: indices must be ascending and in range");
    remap[i] = static_cast<Index>(k);
    out.labels_.push_back(labels_[i]);
  }
  out.adj_.resize(sorted_indices.size());
  for (std::size_t k = 0; k < sorted_indices.size(); ++k) {
    for (Index j : adj_[sorted_indices[k]]) {
      if (remap[j] != kAbsent) out.adj_[k].push_back(remap[j]);
    }
    out.edge_count_ += out.adj_[k].size();
  }
  out.edge_count_ /= 2;
  return out;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(const Graph& g) {
  for (const auto& v : g.vertices()) adjacency_[v];
  for (const auto& [u, v] : g.edges()) {
    adjacency_[u].insert(v);
    adjacency_[v].insert(u);
  }
}

GraphBuilder& GraphBuilder::add_vertex(const VertexId& v) {
  if (!adjacency_.emplace(v, std::set<VertexId>{}).second)
    throw DomainError("duplicate vertex '" + v.str() + "'");
  return *this;
}

GraphBuilder& GraphBuilder::add_edge(const VertexId& u, const VertexId& v) {
  if (u == v) throw DomainError("self-loop at '" + u.str() + "'");
  auto iu = adjacency_.find(u);
  auto iv = adjacency_.find(v);
  if (iu == adjacency_.end()) throw DomainError("edge endpoint '" + u.str() + "' not declared");
  if (iv == adjacency_.end()) throw DomainError("edge endpoint '" + v.str() + "' not declared");
  if (!iu->second.insert(v).second)
    throw DomainError("duplicate edge '" + u.str() + "' '" + v.str() + "'");
  iv->second.insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_vertex(const VertexId& v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw DomainError("unknown vertex '" + v.str() + "'");
  for (const auto& u : it->second) adjacency_[u].erase(v);
  adjacency_.erase(it);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(const VertexId& u, const VertexId& v) {
  if (!has_edge(u, v)) throw DomainError("no edge '" + u.str() + "' '" + v.str() + "'");
  adjacency_[u].erase(v);
  adjacency_[v].erase(u);
  return *this;
}

bool GraphBuilder::has_edge(const VertexId& u, const VertexId& v) const {
  auto it = adjacency_.find(u);
  return it != adjacency_.end() && it->second.count(v) != 0;
}

Graph GraphBuilder::build() const {
  Graph g;
  g.labels_.reserve(adjacency_.size());
  for (const auto& entry : adjacency_) g.labels_.push_back(entry.first);
  g.adj_.resize(g.labels_.size());
  std::size_t i = 0;
  for (const auto& [v, nbrs] : adjacency_) {
    auto& row = g.adj_[i++];
    row.reserve(nbrs.size());
    for (const auto& u : nbrs) row.push_back(static_cast<Graph::Index>(*g.index_of(u)));
    g.edge_count_ += row.size();
  }
  g.edge_count_ /= 2;
  return g;
}

// ---------------------------------------------------------------------------
// Structural operators

Graph rim(const Graph& g, const VertexId& v) {
  const auto& nb = g.neighbors(g.require(v));
  return g.induced_by_index(std::vector<std::size_t>(nb.begin(), nb.end()));
}

Graph ball(const Graph& g, const VertexId& v) {
  std::size_t i = g.require(v);
  const auto& nb = g.neighbors(i);
  std::vector<std::size_t> idx(nb.begin(), nb.end());
  idx.insert(std::upper_bound(idx.begin(), idx.end(), i), i);
  return g.induced_by_index(idx);
}

Graph join(const Graph& g, const Graph& h) {
  // Merge the two sorted label lists, remembering where each vertex lands.
  Graph out;
  const std::size_t n = g.size() + h.size();
  out.labels_.reserve(n);
  std::vector<Graph::Index> pos_g(g.size()), pos_h(h.size());
  std::size_t a = 0, b = 0;
  while (a < g.size() || b < h.size()) {
    if (b == h.size() || (a < g.size() && g.label(a) < h.label(b))) {
      pos_g[a] = static_cast<Graph::Index>(out.labels_.size());
      out.labels_.push_back(g.label(a++));
    } else {
      if (a < g.size() && g.label(a) == h.label(b))
        throw DomainError("join: label '" + h.label(b).str() + "' occurs in both graphs");
      pos_h[b] = static_cast<Graph::Index>(out.labels_.size());
      out.labels_.push_back(h.label(b++));
    }
  }
  out.adj_.resize(n);
  for (std::size_t i = 0; i < g.size(); ++i) {
    auto& row = out.adj_[pos_g[i]];
    for (auto j : g.neighbors(i)) row.push_back(pos_g[j]);
    row.insert(row.end(), pos_h.begin(), pos_h.end());
  }
  for (std::size_t i = 0; i < h.size(); ++i) {
    auto& row = out.adj_[pos_h[i]];
    for (auto j : h.neighbors(i)) row.push_back(pos_h[j]);
    row.insert(row.end(), pos_g.begin(), pos_g.end());
  }
  for (auto& row : out.adj_) {
    std::sort(row.begin(), row.end());
    out.edge_count_ += row.size();
  }
  out.edge_count_ /= 2;
  return out;
}

Graph remove(const Graph& g, const VertexSet& h) {
  std::vector<bool> drop(g.size(), false);
  for (const auto& v : h) drop[g.require(v)] = true;
  std::vector<std::size_t> keep;
  keep.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!drop[i]) keep.push_back(i);
  return g.induced_by_index(keep);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.size(), false);
  std::vector<std::size_t> stack;
  // Scanning in index (= label) order yields components ordered by smallest label.
  for (std::size_t s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    VertexSet comp;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      comp.insert(g.label(v));
      for (auto u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = true;
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

namespace {

VertexId indexed(std::string_view prefix, std::size_t i) {
  return VertexId(std::string(prefix) + std::to_string(i));
}

}  // namespace

Graph complete_graph(std::size_t n, std::string_view prefix) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(indexed(prefix, i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(indexed(prefix, i), indexed(prefix, j));
  return b.build();
}

Graph cycle_graph(std::size_t n, std::string_view prefix) {
  if (n < 3) throw DomainError("cycle_graph needs at least 3 vertices");
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(indexed(prefix, i));
  for (std::size_t i = 0; i < n; ++i) b.add_edge(indexed(prefix, i), indexed(prefix, (i + 1) % n));
  return b.build();
}

Graph path_graph(std::size_t n, std::string_view prefix) {
  GraphBuilder b;
  for (std::size_t i = 0; i < n; ++i) b.add_vertex(indexed(prefix, i));
  for (std::size_t i = 0; i + 1 < n; ++i) b.add_edge(indexed(prefix, i), indexed(prefix, i + 1));
  return b.build();
}

FreshLabels::FreshLabels(const Graph& taken) { reserve(taken); }

void FreshLabels::reserve(const Graph& g) {
  for (const auto& v : g.vertices()) taken_.insert(v);
}

VertexId FreshLabels::next() {
  for (;;) {
    VertexId candidate = indexed("z", counter_++);
    if (taken_.insert(candidate).second) return candidate;
  }
}

}  // namespace digitop
