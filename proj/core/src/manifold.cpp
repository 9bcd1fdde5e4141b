#include "digitop/manifold.hpp"

#include "digitop/error.hpp"
#include "digitop/invariants.hpp"

namespace digitop {

std::string describe(const Classification& c) {
  using Kind = Classification::Kind;
  switch (c.kind) {
    case Kind::Contractible: return "contractible";
    case Kind::Sphere: return "sphere dim=" + std::to_string(c.dim);
    case Kind::Disk: return "disk dim=" + std::to_string(c.dim);
    case Kind::Manifold:
      return "manifold dim=" + std::to_string(c.dim) + " sphere=" + (c.sphere ? "true" : "false");
    case Kind::Other: break;
  }
  return "other";
}

ManifoldRecognizer::ManifoldRecognizer(HomotopyLimits limits) : engine_(limits) {}

namespace {

bool is_two_point_sphere(const Graph& g) { return g.size() == 2 && g.edge_count() == 0; }

}  // namespace

std::optional<int> ManifoldRecognizer::common_rim_sphere_dimension(const Graph& g,
                                                                   std::optional<VertexId>* failing) {
  std::optional<int> common;
  for (const auto& v : g.vertices()) {
    auto d = sphere_dimension(rim(g, v));
    if (!d || (common && *d != *common)) {
      if (failing) *failing = v;
      return std::nullopt;
    }
    common = d;
  }
  return common;
}

std::optional<int> ManifoldRecognizer::sphere_dimension(const Graph& g) {
  if (is_two_point_sphere(g)) return 0;
  if (g.size() < 4 || !is_connected(g)) return std::nullopt;
  CanonicalForm form = canonical_form(g);
  if (auto it = spheres_.find(form); it != spheres_.end()) return it->second;
  auto result = sphere(g).dim;
  spheres_[form] = result;
  return result;
}

DimensionCheck ManifoldRecognizer::sphere(const Graph& g) {
  if (is_two_point_sphere(g)) return {true, 0, std::nullopt};
  if (g.size() < 4 || !is_connected(g)) return {};
  auto rim_dim = common_rim_sphere_dimension(g, nullptr);
  if (!rim_dim) return {};
  if (g.size() - 1 > engine_.limits().max_vertices)
    throw CapacityError("sphere recognition: " + std::to_string(g.size()) + " points exceeds the cap of " +
                        std::to_string(engine_.limits().max_vertices + 1));
  for (const auto& v : g.vertices()) {
    if (engine_.contractible(remove(g, {v}))) return {true, *rim_dim + 1, v};
  }
  return {};
}

DimensionCheck ManifoldRecognizer::manifold(const Graph& g) {
  if (g.empty()) return {};
  if (!is_connected(g)) return {false, std::nullopt, g.vertices().front()};
  std::optional<VertexId> failing;
  auto rim_dim = common_rim_sphere_dimension(g, &failing);
  if (!rim_dim) return {false, std::nullopt, failing};
  return {true, *rim_dim + 1, std::nullopt};
}

DimensionCheck ManifoldRecognizer::disk(const Graph& g, const VertexSet& boundary) {
  for (const auto& v : boundary) g.require(v);
  if (boundary.empty()) {
    if (g.size() == 1) return {true, 0, std::nullopt};
    return {};
  }
  auto boundary_dim = sphere_dimension(g.induced(boundary));
  if (!boundary_dim) return {};
  const int n = *boundary_dim + 1;
  if (!engine_.contractible(g)) return {};
  for (const auto& v : g.vertices()) {
    Graph r = rim(g, v);
    if (boundary.count(v) == 0) {
      if (sphere_dimension(r) != n - 1) return {false, std::nullopt, v};
    } else {
      VertexSet rim_boundary;
      for (const auto& u : r.vertices())
        if (boundary.count(u) != 0) rim_boundary.insert(u);
      auto sub = disk(r, rim_boundary);
      if (!sub.holds || sub.dim != n - 1) return {false, std::nullopt, v};
    }
  }
  return {true, n, std::nullopt};
}

Classification ManifoldRecognizer::classify(const Graph& g) {
  using Kind = Classification::Kind;
  Classification out;
  if (is_two_point_sphere(g)) {
    out.kind = Kind::Sphere;
    out.dim = 0;
    return out;
  }
  auto m = manifold(g);
  if (m.holds) {
    auto s = sphere(g);
    out.dim = *m.dim;
    out.kind = s.holds ? Kind::Sphere : Kind::Manifold;
    out.witness = s.witness;
    return out;
  }
  out.witness = m.witness;
  if (g.empty() || !is_connected(g)) return out;
  // nontrivial homology rules out contractibility
  if (betti_numbers(g) != std::vector<std::uint64_t>{1}) return out;
  if (!engine_.contractible(g)) return out;
  VertexSet boundary;
  for (const auto& v : g.vertices())
    if (!sphere_dimension(rim(g, v))) boundary.insert(v);
  auto d = disk(g, boundary);
  if (d.holds && *d.dim > 0) {
    out.kind = Kind::Disk;
    out.dim = *d.dim;
    out.boundary = std::move(boundary);
    out.witness.reset();
    return out;
  }
  out.kind = Kind::Contractible;
  out.witness.reset();
  return out;
}

Graph minimal_sphere(int n) {
  if (n < 0) throw DomainError("minimal_sphere: dimension must be non-negative");
  Graph out;
  for (int i = 0; i <= n; ++i) {
    GraphBuilder pair;
    pair.add_vertex(VertexId("x" + std::to_string(i)));
    pair.add_vertex(VertexId("y" + std::to_string(i)));
    out = join(out, pair.build());
  }
  return out;
}

Graph suspend(const Graph& g) {
  FreshLabels fresh(g);
  GraphBuilder pair;
  pair.add_vertex(fresh.next());
  pair.add_vertex(fresh.next());
  return join(pair.build(), g);
}

DimensionCheck is_sphere(const Graph& g, const HomotopyLimits& limits) {
  return ManifoldRecognizer(limits).sphere(g);
}

DimensionCheck is_manifold(const Graph& g, const HomotopyLimits& limits) {
  return ManifoldRecognizer(limits).manifold(g);
}

DimensionCheck is_disk(const Graph& g, const VertexSet& boundary, const HomotopyLimits& limits) {
  return ManifoldRecognizer(limits).disk(g, boundary);
}

Classification classify(const Graph& g, const HomotopyLimits& limits) {
  return ManifoldRecognizer(limits).classify(g);
}

Disk disk_from_sphere(const Graph& m, const VertexId& v, const HomotopyLimits& limits) {
  m.require(v);
  auto s = is_sphere(m, limits);
  if (!s.holds) throw DomainError("disk_from_sphere: graph is not a digital sphere");
  Disk d;
  d.graph = remove(m, {v});
  d.boundary = m.neighbors(v);
  for (const auto& u : d.graph.vertices())
    if (d.boundary.count(u) == 0) d.interior.insert(u);
  d.dim = *s.dim;
  return d;
}

bool sphere_by_complement(const Graph& m, const VertexSet& g, const HomotopyLimits& limits) {
  ManifoldRecognizer rec(limits);
  if (!rec.manifold(m).holds) throw DomainError("sphere_by_complement: graph is not a digital manifold");
  if (g.empty()) throw DomainError("sphere_by_complement: subspace is empty");
  for (const auto& v : g) m.require(v);
  auto& engine = rec.contractibility();
  if (!engine.contractible(m.induced(g)))
    throw DomainError("sphere_by_complement: subspace is not contractible");
  return engine.contractible(remove(m, g));
}

}  // namespace digitop
