#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "digitop/graph.hpp"

namespace digitop {

/// Isomorphism-invariant encoding of a graph: the vertex count followed by
/// the upper triangle of the adjacency matrix under a canonical ordering.
/// Two graphs have equal forms iff they are isomorphic.
class CanonicalForm {
 public:
  CanonicalForm() = default;
  explicit CanonicalForm(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const noexcept { return bytes_; }
  std::size_t vertex_count() const noexcept;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;

 private:
  std::string bytes_;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

struct CanonicalLabeling {
  CanonicalForm form;
  /// order[k] is the vertex placed at canonical position k.
  std::vector<VertexId> order;
};

// Individualization-refinement with exhaustive branching over the first
// non-singleton cell. Branches on twin vertices (whose transposition is an
// automorphism) are skipped. Exact; intended for graphs up to a few dozen
// vertices with moderate symmetry.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalForm canonical_form(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

/// A vertex bijection from `g` onto `h` preserving adjacency, if one exists.
std::optional<std::map<VertexId, VertexId>> find_isomorphism(const Graph& g, const Graph& h);

}  // namespace digitop
