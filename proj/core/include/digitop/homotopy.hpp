#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "digitop/canonical.hpp"
#include "digitop/graph.hpp"

namespace digitop {

namespace detail {
struct BitGraph;
class DeletionSearch;
}  // namespace detail

struct HomotopyLimits {
  /// Largest graph the contractibility search accepts (hard ceiling 64).
  /// Larger inputs raise CapacityError instead of searching.
  std::size_t max_vertices = 25;
};

struct ReductionStep {
  enum class Kind { DeletePoint, DeleteEdge };

  Kind kind = Kind::DeletePoint;
  VertexId first;
  std::optional<VertexId> second;

  static ReductionStep point(VertexId v) { return {Kind::DeletePoint, std::move(v), std::nullopt}; }
  static ReductionStep edge(VertexId u, VertexId v) { return {Kind::DeleteEdge, std::move(u), std::move(v)}; }

  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

/// Ordered deletions that take a graph down to K(1).
struct ReductionCertificate {
  std::vector<ReductionStep> steps;

  friend bool operator==(const ReductionCertificate&, const ReductionCertificate&) = default;
};

/// Decides contractibility by depth-first search over simple-point deletion
/// orders. The smallest-labeled simple point is always tried first; dead
/// states are remembered by vertex subset within one search and by canonical
/// form across the engine's lifetime, which also covers the recursive rim
/// queries. An engine is not thread-safe; independent engines are.
class ContractibilityEngine {
 public:
  explicit ContractibilityEngine(HomotopyLimits limits = {});
  ~ContractibilityEngine();
  ContractibilityEngine(const ContractibilityEngine&) = delete;
  ContractibilityEngine& operator=(const ContractibilityEngine&) = delete;

  bool contractible(const Graph& g);
  bool simple_point(const Graph& g, const VertexId& v);
  bool simple_edge(const Graph& g, const VertexId& u, const VertexId& v);

  std::optional<ReductionCertificate> certificate(const Graph& g);
  /// Deletion order removing exactly V(g) \ keep with every point simple at
  /// its turn. `keep` must induce a contractible subgraph.
  std::optional<ReductionCertificate> reduce_to_subgraph(const Graph& g, const VertexSet& keep);

  const HomotopyLimits& limits() const noexcept { return limits_; }
  std::size_t memo_size() const noexcept { return verdicts_.size(); }

 private:
  friend class detail::DeletionSearch;

  bool contractible(const detail::BitGraph& g);
  void check_capacity(std::size_t n, const char* what) const;

  HomotopyLimits limits_;
  std::unordered_map<CanonicalForm, bool, CanonicalFormHash> verdicts_;
};

bool is_simple_point(const Graph& g, const VertexId& v, const HomotopyLimits& limits = {});
bool is_simple_edge(const Graph& g, const VertexId& u, const VertexId& v, const HomotopyLimits& limits = {});
bool is_contractible(const Graph& g, const HomotopyLimits& limits = {});
std::optional<ReductionCertificate> contractibility_certificate(const Graph& g,
                                                                const HomotopyLimits& limits = {});
std::optional<ReductionCertificate> reduce_to_subgraph(const Graph& g, const VertexSet& keep,
                                                       const HomotopyLimits& limits = {});

/// Drops one edge, keeping every vertex. No simplicity check.
Graph delete_edge(const Graph& g, const VertexId& u, const VertexId& v);

/// Applies each step after checking that its point or edge is simple at that
/// moment; DomainError names the first step that fails.
Graph replay_certificate(const Graph& g, const ReductionCertificate& cert, const HomotopyLimits& limits = {});
/// True when replay succeeds and ends at K(1).
bool certifies_contractible(const Graph& g, const ReductionCertificate& cert, const HomotopyLimits& limits = {});

// "dp <label>" and "de <label> <label>", one step per line.
void write_certificate(std::ostream& out, const ReductionCertificate& cert);
std::string format_certificate(const ReductionCertificate& cert);
ReductionCertificate parse_certificate(std::string_view text);

}  // namespace digitop
