#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "bit_matrix.hpp"
#include "digitop/canonical.hpp"
#include "digitop/graph.hpp"

namespace digitop::detail {

using Mask = std::uint64_t;

inline Mask bit(int i) { return Mask{1} << i; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

/// Graph on at most 64 vertices with one adjacency mask per vertex. Vertex
/// indices follow the source graph's label order.
struct BitGraph {
  int n = 0;
  std::vector<Mask> adj;

  static constexpr int kMaxVertices = 64;

  Mask all() const { return n == 64 ? ~Mask{0} : bit(n) - 1; }

  static BitGraph from_graph(const Graph& g) {
    BitGraph b;
    b.n = static_cast<int>(g.size());
    b.adj.assign(g.size(), 0);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (auto j : g.neighbors(i)) b.adj[i] |= bit(static_cast<int>(j));
    return b;
  }

  /// Compacted induced subgraph on `mask`, preserving index order.
  BitGraph induced(Mask mask) const {
    BitGraph out;
    out.n = popcount(mask);
    out.adj.assign(static_cast<std::size_t>(out.n), 0);
    int pos[64];
    int k = 0;
    for (Mask m = mask; m; m &= m - 1) pos[lowest(m)] = k++;
    k = 0;
    for (Mask m = mask; m; m &= m - 1, ++k) {
      Mask row = adj[static_cast<std::size_t>(lowest(m))] & mask;
      Mask compact = 0;
      for (; row; row &= row - 1) compact |= bit(pos[lowest(row)]);
      out.adj[static_cast<std::size_t>(k)] = compact;
    }
    return out;
  }

  bool connected(Mask mask) const {
    if (mask == 0) return false;
    Mask seen = bit(lowest(mask));
    Mask frontier = seen;
    while (frontier) {
      Mask next = 0;
      for (Mask m = frontier; m; m &= m - 1) next |= adj[static_cast<std::size_t>(lowest(m))];
      next &= mask & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen == mask;
  }

  CanonicalForm canonical() const {
    BitMatrix m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
      for (Mask r = adj[static_cast<std::size_t>(i)]; r; r &= r - 1)
        if (lowest(r) > i) m.set(static_cast<std::size_t>(i), static_cast<std::size_t>(lowest(r)));
    return CanonicalForm(canonical_labeling(m).form);
  }
};

}  // namespace digitop::detail
