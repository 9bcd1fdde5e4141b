#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "digitop/graph.hpp"

namespace digitop {

struct InvariantLimits {
  /// Upper bound on the number of cliques (simplices) enumerated.
  std::size_t max_simplices = 2'000'000;
};

/// Invariants of the clique complex: entry k-1 of `clique_counts` is the
/// number of complete subgraphs on k points; Betti numbers are over the
/// two-element field with trailing zeros trimmed.
struct InvariantReport {
  std::vector<std::uint64_t> clique_counts;
  std::int64_t euler = 0;
  std::vector<std::uint64_t> betti;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

std::vector<std::uint64_t> clique_counts(const Graph& g, const InvariantLimits& limits = {});
std::int64_t euler_characteristic(const Graph& g, const InvariantLimits& limits = {});
std::vector<std::uint64_t> betti_numbers(const Graph& g, const InvariantLimits& limits = {});
InvariantReport invariant_report(const Graph& g, const InvariantLimits& limits = {});

/// Alternating sum of Betti numbers; equals `euler` by Euler-Poincare.
std::int64_t euler_from_betti(const std::vector<std::uint64_t>& betti);

/// All cliques as ascending vertex-index lists, grouped by size and sorted
/// lexicographically within each size (equivalently by sorted labels).
std::vector<std::vector<std::vector<std::uint32_t>>> enumerate_cliques(const Graph& g,
                                                                       const InvariantLimits& limits = {});

// "cliques: k1 k2 ...", "euler: n", "betti: b0 b1 ..."
void write_report(std::ostream& out, const InvariantReport& r);
std::string format_report(const InvariantReport& r);

}  // namespace digitop
