#include "digitop/homotopy.hpp"

#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "bit_graph.hpp"
#include "digitop/error.hpp"

namespace digitop {

namespace detail {

class DeletionSearch {
 public:
  // keep == 0: search for a path down to a single point.
  // keep != 0: search for a path down to exactly `keep`.
  DeletionSearch(ContractibilityEngine& engine, const BitGraph& g, Mask keep)
      : engine_(engine), g_(g), keep_(keep) {}

  bool run(std::vector<int>& path) { return dfs(g_.all(), path); }

 private:
  bool goal(Mask state) const { return keep_ != 0 ? state == keep_ : popcount(state) == 1; }

  bool simple(int v, Mask state) {
    Mask rim = g_.adj[static_cast<std::size_t>(v)] & state;
    if (auto it = rim_cache_.find(rim); it != rim_cache_.end()) return it->second;
    bool ok;
    switch (popcount(rim)) {
      case 0: ok = false; break;
      case 1: ok = true; break;
      default: ok = engine_.contractible(g_.induced(rim)); break;
    }
    rim_cache_.emplace(rim, ok);
    return ok;
  }

  bool dfs(Mask state, std::vector<int>& path) {
    if (goal(state)) return true;
    if (dead_.count(state) != 0) return false;
    // Deleting a simple point never merges or erases components.
    if (!g_.connected(state)) {
      dead_.insert(state);
      return false;
    }
    std::optional<CanonicalForm> form;
    if (keep_ == 0) {
      form = g_.induced(state).canonical();
      auto it = engine_.verdicts_.find(*form);
      if (it != engine_.verdicts_.end() && !it->second) {
        dead_.insert(state);
        return false;
      }
    }
    for (Mask cand = state & ~keep_; cand; cand &= cand - 1) {
      int v = lowest(cand);
      if (!simple(v, state)) continue;
      path.push_back(v);
      if (dfs(state & ~bit(v), path)) return true;
      path.pop_back();
    }
    dead_.insert(state);
    if (form) engine_.verdicts_[*form] = false;
    return false;
  }

  ContractibilityEngine& engine_;
  const BitGraph& g_;
  Mask keep_;
  std::unordered_set<Mask> dead_;
  std::unordered_map<Mask, bool> rim_cache_;
};

}  // namespace detail

using detail::BitGraph;
using detail::Mask;

ContractibilityEngine::ContractibilityEngine(HomotopyLimits limits) : limits_(limits) {
  if (limits_.max_vertices > static_cast<std::size_t>(BitGraph::kMaxVertices))
    throw DomainError("max_vertices may not exceed 64");
}

ContractibilityEngine::~ContractibilityEngine() = default;

void ContractibilityEngine::check_capacity(std::size_t n, const char* what) const {
  if (n > limits_.max_vertices)
    throw CapacityError(std::string(what) + ": " + std::to_string(n) + " points exceeds the cap of " +
                        std::to_string(limits_.max_vertices));
}

bool ContractibilityEngine::contractible(const BitGraph& g) {
  if (g.n == 0) return false;
  if (g.n == 1) return true;
  check_capacity(static_cast<std::size_t>(g.n), "contractibility");
  CanonicalForm form = g.canonical();
  if (auto it = verdicts_.find(form); it != verdicts_.end()) return it->second;
  std::vector<int> path;
  bool ok = detail::DeletionSearch(*this, g, 0).run(path);
  verdicts_[form] = ok;
  return ok;
}

bool ContractibilityEngine::contractible(const Graph& g) {
  check_capacity(g.size(), "contractibility");
  return contractible(BitGraph::from_graph(g));
}

bool ContractibilityEngine::simple_point(const Graph& g, const VertexId& v) {
  return contractible(rim(g, v));
}

bool ContractibilityEngine::simple_edge(const Graph& g, const VertexId& u, const VertexId& v) {
  std::size_t iu = g.require(u);
  std::size_t iv = g.require(v);
  if (!g.adjacent(iu, iv)) throw DomainError("'" + u.str() + "' '" + v.str() + "' is not an edge");
  std::vector<std::size_t> common;
  for (auto w : g.neighbors(iu))
    if (g.adjacent(iv, w)) common.push_back(w);
  return contractible(g.induced_by_index(common));
}

std::optional<ReductionCertificate> ContractibilityEngine::certificate(const Graph& g) {
  if (g.empty()) return std::nullopt;
  if (g.size() == 1) return ReductionCertificate{};
  check_capacity(g.size(), "contractibility");
  BitGraph bits = BitGraph::from_graph(g);
  if (auto it = verdicts_.find(bits.canonical()); it != verdicts_.end() && !it->second) return std::nullopt;
  std::vector<int> path;
  if (!detail::DeletionSearch(*this, bits, 0).run(path)) return std::nullopt;
  ReductionCertificate cert;
  for (int v : path) cert.steps.push_back(ReductionStep::point(g.label(static_cast<std::size_t>(v))));
  return cert;
}

std::optional<ReductionCertificate> ContractibilityEngine::reduce_to_subgraph(const Graph& g,
                                                                            const VertexSet& keep) {
  if (keep.empty()) throw DomainError("reduce_to_subgraph: target subgraph is empty");
  Mask keep_mask = 0;
  check_capacity(g.size(), "reduce_to_subgraph");
  for (const auto& v : keep) keep_mask |= detail::bit(static_cast<int>(g.require(v)));
  if (!contractible(g.induced(keep)))
    throw DomainError("reduce_to_subgraph: target subgraph is not contractible");
  BitGraph bits = BitGraph::from_graph(g);
  std::vector<int> path;
  if (!detail::DeletionSearch(*this, bits, keep_mask).run(path)) return std::nullopt;
  ReductionCertificate cert;
  for (int v : path) cert.steps.push_back(ReductionStep::point(g.label(static_cast<std::size_t>(v))));
  return cert;
}

bool is_simple_point(const Graph& g, const VertexId& v, const HomotopyLimits& limits) {
  return ContractibilityEngine(limits).simple_point(g, v);
}

bool is_simple_edge(const Graph& g, const VertexId& u, const VertexId& v, const HomotopyLimits& limits) {
  return ContractibilityEngine(limits).simple_edge(g, u, v);
}

bool is_contractible(const Graph& g, const HomotopyLimits& limits) {
  return ContractibilityEngine(limits).contractible(g);
}

std::optional<ReductionCertificate> contractibility_certificate(const Graph& g, const HomotopyLimits& limits) {
  return ContractibilityEngine(limits).certificate(g);
}

std::optional<ReductionCertificate> reduce_to_subgraph(const Graph& g, const VertexSet& keep,
                                                       const HomotopyLimits& limits) {
  return ContractibilityEngine(limits).reduce_to_subgraph(g, keep);
}

Graph delete_edge(const Graph& g, const VertexId& u, const VertexId& v) {
  GraphBuilder b(g);
  b.remove_edge(u, v);
  return b.build();
}

Graph replay_certificate(const Graph& g, const ReductionCertificate& cert, const HomotopyLimits& limits) {
  ContractibilityEngine engine(limits);
  Graph cur = g;
  for (std::size_t k = 0; k < cert.steps.size(); ++k) {
    const auto& step = cert.steps[k];
    const std::string where = "certificate step " + std::to_string(k + 1) + ": ";
    if (step.kind == ReductionStep::Kind::DeletePoint) {
      if (!cur.contains(step.first)) throw DomainError(where + "unknown point '" + step.first.str() + "'");
      if (!engine.simple_point(cur, step.first))
        throw DomainError(where + "point '" + step.first.str() + "' is not simple");
      cur = remove(cur, {step.first});
    } else {
      if (!step.second) throw DomainError(where + "edge step needs two endpoints");
      const auto& u = step.first;
      const auto& v = *step.second;
      if (!cur.contains(u) || !cur.contains(v) || !cur.adjacent(u, v))
        throw DomainError(where + "'" + u.str() + "' '" + v.str() + "' is not an edge");
      if (!engine.simple_edge(cur, u, v))
        throw DomainError(where + "edge '" + u.str() + "' '" + v.str() + "' is not simple");
      cur = delete_edge(cur, u, v);
    }
  }
  return cur;
}

bool certifies_contractible(const Graph& g, const ReductionCertificate& cert, const HomotopyLimits& limits) {
  try {
    Graph last = replay_certificate(g, cert, limits);
    return last.size() == 1;
  } catch (const DomainError&) {
    return false;
  }
}

void write_certificate(std::ostream& out, const ReductionCertificate& cert) {
  for (const auto& step : cert.steps) {
    if (step.kind == ReductionStep::Kind::DeletePoint)
      out << "dp " << step.first.str() << '\n';
    else
      out << "de " << step.first.str() << ' ' << step.second->str() << '\n';
  }
}

std::string format_certificate(const ReductionCertificate& cert) {
  std::ostringstream out;
  write_certificate(out, cert);
  return out.str();
}

ReductionCertificate parse_certificate(std::string_view text) {
  ReductionCertificate cert;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line.substr(0, line.find('#')));
    std::vector<std::string> toks;
    for (std::string t; ss >> t;) toks.push_back(t);
    if (toks.empty()) continue;
    auto label = [&](const std::string& s) {
      if (!VertexId::valid_label(s)) throw ParseError(lineno, "invalid label '" + s + "'");
      return VertexId(s);
    };
    if (toks[0] == "dp" && toks.size() == 2) {
      cert.steps.push_back(ReductionStep::point(label(toks[1])));
    } else if (toks[0] == "de" && toks.size() == 3) {
      cert.steps.push_back(ReductionStep::edge(label(toks[1]), label(toks[2])));
    } else {
      throw ParseError(lineno, "expected 'dp <label>' or 'de <label> <label>'");
    }
  }
  return cert;
}

}  // namespace digitop
