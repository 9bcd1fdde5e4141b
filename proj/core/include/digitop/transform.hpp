#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digitop/graph.hpp"
#include "digitop/manifold.hpp"

namespace digitop {

/// One contraction (F) or splitting (R). Both kinds carry the full neighbor
/// partition of z, so every recorded step can be inverted exactly.
struct TransformStep {
  enum class Kind { Contract, Split };

  Kind kind = Kind::Contract;
  VertexId x{"x"};
  VertexId y{"y"};
  VertexId z{"z"};
  VertexSet x_only;
  VertexSet y_only;
  VertexSet shared;

  friend bool operator==(const TransformStep&, const TransformStep&) = default;
};

TransformStep inverse(const TransformStep& step);

struct Transformed {
  Graph graph;
  TransformStep step;
};

/// Adjacent x, y such that no point of U(x) - U(y) is adjacent to a point of
/// U(y) - U(x). DomainError if x, y are not adjacent.
bool is_simple_pair(const Graph& g, const VertexId& x, const VertexId& y);

/// All simple pairs (x < y), ascending.
std::vector<std::pair<VertexId, VertexId>> find_simple_pairs(const Graph& g);

/// Replaces the simple pair {x, y} by z with O(z) = U(x) u U(y) - {x, y}.
/// Without `z`, the first free label of the "z<i>" scheme is used.
Transformed contract_pair(const Graph& g, const VertexId& x, const VertexId& y,
                          const std::optional<VertexId>& z = std::nullopt);

/// Replaces z by adjacent x, y: x joins `x_only` and `shared`, y joins
/// `y_only` and `shared`. The three sets must partition O(z) and no edge may
/// join `x_only` to `y_only`.
Transformed split_point(const Graph& g, const VertexId& z, const VertexSet& x_only, const VertexSet& y_only,
                        const VertexSet& shared,
                        const std::optional<std::pair<VertexId, VertexId>>& labels = std::nullopt);

/// Applies a step, re-checking its preconditions. For contractions the
/// recorded partition is recomputed from `g` and returned in the result.
Transformed apply_step(const Graph& g, const TransformStep& step);

struct TransformLog {
  Graph source;
  std::vector<TransformStep> steps;
};

Graph replay(const TransformLog& log);
/// Applies the inverse steps in reverse order, recovering `log.source`.
Graph unwind(const TransformLog& log, const Graph& result);

struct Compression {
  Graph graph;
  TransformLog log;
};

/// Contracts the lexicographically smallest simple pair until none remain.
Compression compress(const Graph& g);

/// Components of M - S, ordered by smallest label. M must be connected.
std::vector<VertexSet> separate(const Graph& m, const VertexSet& s);

/// D # E: identifies each boundary point b of `d` with boundary_iso[b] of
/// `e`. Interior labels of `e` that clash with `d` are renamed.
Graph connected_sum(const Disk& d, const Disk& e, const std::map<VertexId, VertexId>& boundary_iso);

/// An isomorphism between the boundaries, found through canonical labeling.
std::optional<std::map<VertexId, VertexId>> propose_boundary_isomorphism(const Disk& d, const Disk& e);

// Log lines:
//   F <x> <y> -> <z>
//   R <z> -> <x>|<y> xonly=<csv> yonly=<csv> shared=<csv>
std::string format_step(const TransformStep& step);
void write_log(std::ostream& out, const TransformLog& log);
std::string format_log(const TransformLog& log);

/// Parses step lines without a source graph. Contraction steps come back
/// with empty partitions.
std::vector<TransformStep> parse_steps(std::string_view text);
/// Parses and replays against `source`, filling in every contraction's
/// partition. DomainError if any step fails.
TransformLog load_log(const Graph& source, std::string_view text);

}  // namespace digitop
