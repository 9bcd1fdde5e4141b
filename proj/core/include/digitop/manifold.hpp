#pragma once

#include <optional>
#include <string>
#include <unordered_map>

#include "digitop/canonical.hpp"
#include "digitop/graph.hpp"
#include "digitop/homotopy.hpp"

namespace digitop {

/// Result of a recognizer: whether the property holds, the inferred
/// dimension when it does, and a witness point. For spheres the witness is
/// the first point v (label order) with M - v contractible; for failed
/// manifold checks it is the first point whose rim is not a sphere of the
/// common dimension.
struct DimensionCheck {
  bool holds = false;
  std::optional<int> dim;
  std::optional<VertexId> witness;
};

struct Classification {
  enum class Kind { Contractible, Sphere, Disk, Manifold, Other };

  Kind kind = Kind::Other;
  int dim = -1;
  /// Only meaningful for Manifold; a sphere is always reported as Sphere.
  bool sphere = false;
  std::optional<VertexId> witness;
  /// Disk boundary, empty otherwise.
  VertexSet boundary;
};

/// "sphere dim=2", "manifold dim=2 sphere=false", "disk dim=1",
/// "contractible" or "other".
std::string describe(const Classification& c);

struct Disk {
  Graph graph;
  VertexSet boundary;
  VertexSet interior;
  int dim = 0;
};

/// Recognizes digital spheres, disks and manifolds. Dimensions are inferred
/// bottom-up from rims, with the two-point disconnected graph as the only
/// 0-sphere. Sphere verdicts are memoized by canonical form for the lifetime
/// of the recognizer.
class ManifoldRecognizer {
 public:
  explicit ManifoldRecognizer(HomotopyLimits limits = {});

  DimensionCheck sphere(const Graph& g);
  DimensionCheck manifold(const Graph& g);
  DimensionCheck disk(const Graph& g, const VertexSet& boundary);
  Classification classify(const Graph& g);

  /// Dimension of `g` as a digital sphere, if it is one.
  std::optional<int> sphere_dimension(const Graph& g);

  ContractibilityEngine& contractibility() noexcept { return engine_; }

 private:
  std::optional<int> common_rim_sphere_dimension(const Graph& g, std::optional<VertexId>* failing);

  ContractibilityEngine engine_;
  std::unordered_map<CanonicalForm, std::optional<int>, CanonicalFormHash> spheres_;
};

/// Join of n + 1 copies of S^0 on labels x0, y0, x1, y1, ...
Graph minimal_sphere(int n);
/// Join of `g` with a fresh two-point S^0 (labels from FreshLabels).
Graph suspend(const Graph& g);

DimensionCheck is_sphere(const Graph& g, const HomotopyLimits& limits = {});
DimensionCheck is_manifold(const Graph& g, const HomotopyLimits& limits = {});
DimensionCheck is_disk(const Graph& g, const VertexSet& boundary, const HomotopyLimits& limits = {});
Classification classify(const Graph& g, const HomotopyLimits& limits = {});

/// M - v as a disk with boundary O(v). DomainError unless `m` is a sphere.
Disk disk_from_sphere(const Graph& m, const VertexId& v, const HomotopyLimits& limits = {});

/// Contractibility of M - G for a manifold M and a contractible subspace G.
bool sphere_by_complement(const Graph& m, const VertexSet& g, const HomotopyLimits& limits = {});

}  // namespace digitop
