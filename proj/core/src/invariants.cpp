#include "digitop/invariants.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>
#include <sstream>

#include "digitop/error.hpp"

namespace digitop {

namespace {

using Simplex = std::vector<std::uint32_t>;

class CliqueWalker {
 public:
  CliqueWalker(const Graph& g, const InvariantLimits& limits, bool keep)
      : g_(g), limits_(limits), keep_(keep) {}

  void run() {
    Simplex clique;
    for (std::uint32_t v = 0; v < g_.size(); ++v) {
      const auto& nb = g_.neighbors(v);
      std::vector<std::uint32_t> cand(std::upper_bound(nb.begin(), nb.end(), v), nb.end());
      clique.push_back(v);
      extend(clique, cand);
      clique.pop_back();
    }
  }

  std::vector<std::uint64_t> counts;
  std::vector<std::vector<Simplex>> cliques;

 private:
  void extend(Simplex& clique, const std::vector<std::uint32_t>& cand) {
    if (++total_ > limits_.max_simplices)
      throw CapacityError("clique enumeration exceeds the budget of " + std::to_string(limits_.max_simplices) +
                          " simplices");
    const std::size_t k = clique.size();
    if (counts.size() < k) {
      counts.resize(k, 0);
      if (keep_) cliques.resize(k);
    }
    ++counts[k - 1];
    if (keep_) cliques[k - 1].push_back(clique);
    std::vector<std::uint32_t> next;
    for (std::size_t i = 0; i < cand.size(); ++i) {
      const auto& nb = g_.neighbors(cand[i]);
      next.clear();
      std::set_intersection(cand.begin() + static_cast<std::ptrdiff_t>(i) + 1, cand.end(), nb.begin(), nb.end(),
                            std::back_inserter(next));
      clique.push_back(cand[i]);
      extend(clique, next);
      clique.pop_back();
    }
  }

  const Graph& g_;
  const InvariantLimits& limits_;
  bool keep_;
  std::size_t total_ = 0;
};

// Rank over the two-element field of a matrix given as sparse columns of
// ascending row indices. Columns are reduced by their largest row index.
std::size_t rank_mod2(std::vector<std::vector<std::uint32_t>> columns, std::size_t rows) {
  std::vector<std::int64_t> owner(rows, -1);
  std::vector<std::vector<std::uint32_t>> reduced;
  std::vector<std::uint32_t> scratch;
  for (auto& col : columns) {
    while (!col.empty()) {
      std::uint32_t low = col.back();
      if (owner[low] < 0) {
        owner[low] = static_cast<std::int64_t>(reduced.size());
        reduced.push_back(std::move(col));
        break;
      }
      const auto& other = reduced[static_cast<std::size_t>(owner[low])];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), other.begin(), other.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
  }
  return reduced.size();
}

// Boundary of every k-simplex (size k + 1) in terms of (k - 1)-simplices.
std::vector<std::vector<std::uint32_t>> boundary_columns(const std::vector<Simplex>& simplices,
                                                         const std::vector<Simplex>& faces) {
  std::vector<std::vector<std::uint32_t>> cols;
  cols.reserve(simplices.size());
  Simplex face;
  for (const auto& s : simplices) {
    std::vector<std::uint32_t> col;
    col.reserve(s.size());
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      face.clear();
      for (std::size_t i = 0; i < s.size(); ++i)
        if (i != drop) face.push_back(s[i]);
      auto it = std::lower_bound(faces.begin(), faces.end(), face);
      col.push_back(static_cast<std::uint32_t>(it - faces.begin()));
    }
    std::sort(col.begin(), col.end());
    cols.push_back(std::move(col));
  }
  return cols;
}

}  // namespace

std::vector<std::vector<std::vector<std::uint32_t>>> enumerate_cliques(const Graph& g, const InvariantLimits& limits) {
  CliqueWalker walker(g, limits, true);
  walker.run();
  return std::move(walker.cliques);
}

std::vector<std::uint64_t> clique_counts(const Graph& g, const InvariantLimits& limits) {
  CliqueWalker walker(g, limits, false);
  walker.run();
  return std::move(walker.counts);
}

std::int64_t euler_characteristic(const Graph& g, const InvariantLimits& limits) {
  std::int64_t chi = 0;
  auto counts = clique_counts(g, limits);
  for (std::size_t k = 0; k < counts.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(counts[k]);
  return chi;
}

std::vector<std::uint64_t> betti_numbers(const Graph& g, const InvariantLimits& limits) {
  auto cliques = enumerate_cliques(g, limits);
  const std::size_t top = cliques.size();
  // rank[k] = rank of the boundary map from k-simplices to (k-1)-simplices.
  std::vector<std::size_t> rank(top + 1, 0);
  for (std::size_t k = 1; k < top; ++k)
    rank[k] = rank_mod2(boundary_columns(cliques[k], cliques[k - 1]), cliques[k - 1].size());
  std::vector<std::uint64_t> betti(top, 0);
  for (std::size_t k = 0; k < top; ++k) betti[k] = cliques[k].size() - rank[k] - rank[k + 1];
  while (!betti.empty() && betti.back() == 0) betti.pop_back();
  return betti;
}

std::int64_t euler_from_betti(const std::vector<std::uint64_t>& betti) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < betti.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(betti[k]);
  return chi;
}

InvariantReport invariant_report(const Graph& g, const InvariantLimits& limits) {
  InvariantReport r;
  r.clique_counts = clique_counts(g, limits);
  for (std::size_t k = 0; k < r.clique_counts.size(); ++k)
    r.euler += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(r.clique_counts[k]);
  r.betti = betti_numbers(g, limits);
  return r;
}

namespace {

template <class T>
void write_list(std::ostream& out, const char* key, const std::vector<T>& values) {
  out << key << ':';
  for (const auto& v : values) out << ' ' << v;
  out << '\n';
}

}  // namespace

void write_report(std::ostream& out, const InvariantReport& r) {
  write_list(out, "cliques", r.clique_counts);
  out << "euler: " << r.euler << '\n';
  write_list(out, "betti", r.betti);
}

std::string format_report(const InvariantReport& r) {
  std::ostringstream out;
  write_report(out, r);
  return out.str();
}

}  // namespace digitop
