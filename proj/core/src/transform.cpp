#include "digitop/transform.hpp"

#include <algorithm>
#include <iterator>
#include <sstream>

#include "digitop/canonical.hpp"
#include "digitop/error.hpp"

namespace digitop {

TransformStep inverse(const TransformStep& step) {
  TransformStep inv = step;
  inv.kind = step.kind == TransformStep::Kind::Contract ? TransformStep::Kind::Split : TransformStep::Kind::Contract;
  return inv;
}

namespace {

using Adjacency = std::map<VertexId, VertexSet>;

VertexSet set_minus(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

// Exclusive neighborhoods of an adjacent pair: N(x) \ N[y] and N(y) \ N[x].
std::pair<VertexSet, VertexSet> exclusive_parts(const VertexSet& nx, const VertexSet& ny, const VertexId& x,
                                                const VertexId& y) {
  VertexSet a = set_minus(nx, ny);
  a.erase(y);
  VertexSet b = set_minus(ny, nx);
  b.erase(x);
  return {std::move(a), std::move(b)};
}

bool pair_is_simple(const Adjacency& adj, const VertexId& x, const VertexId& y) {
  const auto& nx = adj.at(x);
  const auto& ny = adj.at(y);
  auto [a, b] = exclusive_parts(nx, ny, x, y);
  for (const auto& v : a)
    for (const auto& u : adj.at(v))
      if (b.count(u) != 0) return false;
  return true;
}

TransformStep contraction_record(const VertexSet& nx, const VertexSet& ny, const VertexId& x, const VertexId& y,
                                 const VertexId& z) {
  TransformStep step;
  step.kind = TransformStep::Kind::Contract;
  step.x = x;
  step.y = y;
  step.z = z;
  auto [a, b] = exclusive_parts(nx, ny, x, y);
  step.x_only = std::move(a);
  step.y_only = std::move(b);
  step.shared = set_intersection(nx, ny);
  return step;
}

void require_edge(const Graph& g, const VertexId& x, const VertexId& y) {
  if (!g.adjacent(x, y)) throw DomainError("'" + x.str() + "' '" + y.str() + "' is not an edge");
}

}  // namespace

bool is_simple_pair(const Graph& g, const VertexId& x, const VertexId& y) {
  std::size_t ix = g.require(x);
  std::size_t iy = g.require(y);
  require_edge(g, x, y);
  std::vector<char> role(g.size(), 0);  // 1: U(x) only, 2: U(y) only, 3: both
  role[ix] |= 1;
  role[iy] |= 2;
  for (auto v : g.neighbors(ix)) role[v] |= 1;
  for (auto v : g.neighbors(iy)) role[v] |= 2;
  role[ix] = role[iy] = 3;
  for (auto v : g.neighbors(ix)) {
    if (role[v] != 1) continue;
    for (auto u : g.neighbors(v))
      if (role[u] == 2) return false;
  }
  return true;
}

std::vector<std::pair<VertexId, VertexId>> find_simple_pairs(const Graph& g) {
  std::vector<std::pair<VertexId, VertexId>> out;
  for (const auto& [x, y] : g.edges())
    if (is_simple_pair(g, x, y)) out.emplace_back(x, y);
  return out;
}

Transformed contract_pair(const Graph& g, const VertexId& x, const VertexId& y, const std::optional<VertexId>& z) {
  if (!is_simple_pair(g, x, y)) throw DomainError("{" + x.str() + ", " + y.str() + "} is not a simple pair");
  VertexId zl = z ? *z : FreshLabels(g).next();
  if (g.contains(zl)) throw DomainError("contract_pair: label '" + zl.str() + "' is already in use");
  VertexSet nx = g.neighbors(x);
  VertexSet ny = g.neighbors(y);
  TransformStep step = contraction_record(nx, ny, x, y, zl);

  GraphBuilder b(g);
  b.remove_vertex(x).remove_vertex(y).add_vertex(zl);
  for (const auto* part : {&step.x_only, &step.y_only, &step.shared})
    for (const auto& v : *part) b.add_edge(zl, v);
  return {b.build(), std::move(step)};
}

Transformed split_point(const Graph& g, const VertexId& z, const VertexSet& x_only, const VertexSet& y_only,
                        const VertexSet& shared, const std::optional<std::pair<VertexId, VertexId>>& labels) {
  VertexSet nz = g.neighbors(z);
  VertexSet all;
  std::size_t total = 0;
  for (const auto* part : {&x_only, &y_only, &shared}) {
    all.insert(part->begin(), part->end());
    total += part->size();
  }
  if (all != nz || total != nz.size())
    throw DomainError("split_point: x-only, y-only and shared must partition the neighbors of '" + z.str() + "'");
  for (const auto& a : x_only)
    for (const auto& b : y_only)
      if (g.adjacent(a, b))
        throw DomainError("split_point: x-only point '" + a.str() + "' is adjacent to y-only point '" + b.str() + "'");

  VertexId xl{"x"}, yl{"y"};
  if (labels) {
    std::tie(xl, yl) = *labels;
  } else {
    FreshLabels fresh(g);
    xl = fresh.next();
    yl = fresh.next();
  }
  if (xl == yl) throw DomainError("split_point: the two new labels must differ");
  for (const auto& l : {xl, yl})
    if (g.contains(l)) throw DomainError("split_point: label '" + l.str() + "' is already in use");

  GraphBuilder b(g);
  b.remove_vertex(z).add_vertex(xl).add_vertex(yl).add_edge(xl, yl);
  for (const auto& v : x_only) b.add_edge(xl, v);
  for (const auto& v : y_only) b.add_edge(yl, v);
  for (const auto& v : shared) {
    b.add_edge(xl, v);
    b.add_edge(yl, v);
  }
  TransformStep step;
  step.kind = TransformStep::Kind::Split;
  step.x = xl;
  step.y = yl;
  step.z = z;
  step.x_only = x_only;
  step.y_only = y_only;
  step.shared = shared;
  return {b.build(), std::move(step)};
}

Transformed apply_step(const Graph& g, const TransformStep& step) {
  if (step.kind == TransformStep::Kind::Contract) return contract_pair(g, step.x, step.y, step.z);
  return split_point(g, step.z, step.x_only, step.y_only, step.shared, std::pair{step.x, step.y});
}

Graph replay(const TransformLog& log) {
  Graph cur = log.source;
  for (const auto& step : log.steps) cur = apply_step(cur, step).graph;
  return cur;
}

Graph unwind(const TransformLog& log, const Graph& result) {
  Graph cur = result;
  for (auto it = log.steps.rbegin(); it != log.steps.rend(); ++it) cur = apply_step(cur, inverse(*it)).graph;
  return cur;
}

Compression compress(const Graph& g) {
  Adjacency adj;
  for (const auto& v : g.vertices()) adj[v] = g.neighbors(v);
  FreshLabels fresh(g);
  Compression out;
  out.log.source = g;
  for (;;) {
    std::optional<std::pair<VertexId, VertexId>> pick;
    for (const auto& [x, nx] : adj) {
      for (auto it = nx.upper_bound(x); it != nx.end(); ++it) {
        if (pair_is_simple(adj, x, *it)) {
          pick.emplace(x, *it);
          break;
        }
      }
      if (pick) break;
    }
    if (!pick) break;
    const auto [x, y] = *pick;
    VertexId z = fresh.next();
    TransformStep step = contraction_record(adj.at(x), adj.at(y), x, y, z);
    VertexSet nz;
    for (const auto* part : {&step.x_only, &step.y_only, &step.shared}) nz.insert(part->begin(), part->end());
    for (const auto& v : adj.at(x)) adj[v].erase(x);
    for (const auto& v : adj.at(y)) adj[v].erase(y);
    adj.erase(x);
    adj.erase(y);
    for (const auto& v : nz) adj[v].insert(z);
    adj[z] = std::move(nz);
    out.log.steps.push_back(std::move(step));
  }
  GraphBuilder b;
  for (const auto& entry : adj) b.add_vertex(entry.first);
  for (const auto& [v, nv] : adj)
    for (auto it = nv.upper_bound(v); it != nv.end(); ++it) b.add_edge(v, *it);
  out.graph = b.build();
  return out;
}

std::vector<VertexSet> separate(const Graph& m, const VertexSet& s) {
  for (const auto& v : s) m.require(v);
  if (!is_connected(m)) throw DomainError("separate: the space must be connected");
  return connected_components(remove(m, s));
}

Graph connected_sum(const Disk& d, const Disk& e, const std::map<VertexId, VertexId>& boundary_iso) {
  if (boundary_iso.size() != d.boundary.size() || d.boundary.size() != e.boundary.size())
    throw DomainError("connected_sum: boundary map must be a bijection between the boundaries");
  std::map<VertexId, VertexId> back;
  for (const auto& [a, b] : boundary_iso) {
    if (d.boundary.count(a) == 0 || e.boundary.count(b) == 0)
      throw DomainError("connected_sum: boundary map must send boundary points to boundary points");
    if (!back.emplace(b, a).second) throw DomainError("connected_sum: boundary map is not injective");
  }
  for (const auto& [a1, b1] : boundary_iso)
    for (const auto& [a2, b2] : boundary_iso)
      if (a1 < a2 && d.graph.adjacent(a1, a2) != e.graph.adjacent(b1, b2))
        throw DomainError("connected_sum: boundary map is not a graph isomorphism");

  FreshLabels fresh(d.graph);
  fresh.reserve(e.graph);
  std::map<VertexId, VertexId> rename = back;
  GraphBuilder b(d.graph);
  for (const auto& v : e.graph.vertices()) {
    if (e.boundary.count(v) != 0) continue;
    VertexId target = d.graph.contains(v) ? fresh.next() : v;
    rename.emplace(v, target);
    b.add_vertex(target);
  }
  for (const auto& [u, v] : e.graph.edges()) {
    const auto& ru = rename.at(u);
    const auto& rv = rename.at(v);
    if (!b.has_edge(ru, rv)) b.add_edge(ru, rv);
  }
  return b.build();
}

std::optional<std::map<VertexId, VertexId>> propose_boundary_isomorphism(const Disk& d, const Disk& e) {
  return find_isomorphism(d.graph.induced(d.boundary), e.graph.induced(e.boundary));
}

// ---------------------------------------------------------------------------
// Serialization

namespace {

std::string csv(const VertexSet& s) {
  std::string out;
  for (const auto& v : s) {
    if (!out.empty()) out += ',';
    out += v.str();
  }
  return out;
}

VertexSet parse_csv(std::size_t lineno, std::string_view text) {
  VertexSet out;
  std::size_t start = 0;
  while (start <= text.size() && !text.empty()) {
    std::size_t comma = text.find(',', start);
    std::string tok(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    if (!VertexId::valid_label(tok)) throw ParseError(lineno, "invalid label '" + tok + "' in list");
    if (!out.insert(VertexId(tok)).second) throw ParseError(lineno, "duplicate label '" + tok + "' in list");
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

VertexId parse_label(std::size_t lineno, const std::string& tok) {
  if (!VertexId::valid_label(tok)) throw ParseError(lineno, "invalid label '" + tok + "'");
  return VertexId(tok);
}

std::string_view keyed(std::size_t lineno, const std::string& tok, std::string_view key) {
  if (tok.rfind(key, 0) != 0) throw ParseError(lineno, "expected '" + std::string(key) + "...'");
  return std::string_view(tok).substr(key.size());
}

}  // namespace

std::string format_step(const TransformStep& step) {
  if (step.kind == TransformStep::Kind::Contract)
    return "F " + step.x.str() + ' ' + step.y.str() + " -> " + step.z.str();
  return "R " + step.z.str() + " -> " + step.x.str() + '|' + step.y.str() + " xonly=" + csv(step.x_only) +
         " yonly=" + csv(step.y_only) + " shared=" + csv(step.shared);
}

void write_log(std::ostream& out, const TransformLog& log) {
  for (const auto& step : log.steps) out << format_step(step) << '\n';
}

std::string format_log(const TransformLog& log) {
  std::ostringstream out;
  write_log(out, log);
  return out.str();
}

std::vector<TransformStep> parse_steps(std::string_view text) {
  std::vector<TransformStep> steps;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ss(line.substr(0, line.find('#')));
    std::vector<std::string> t;
    for (std::string tok; ss >> tok;) t.push_back(tok);
    if (t.empty()) continue;
    TransformStep step;
    if (t[0] == "F") {
      if (t.size() != 5 || t[3] != "->") throw ParseError(lineno, "expected 'F <x> <y> -> <z>'");
      step.kind = TransformStep::Kind::Contract;
      step.x = parse_label(lineno, t[1]);
      step.y = parse_label(lineno, t[2]);
      step.z = parse_label(lineno, t[4]);
    } else if (t[0] == "R") {
      if (t.size() != 7 || t[2] != "->")
        throw ParseError(lineno, "expected 'R <z> -> <x>|<y> xonly=... yonly=... shared=...'");
      step.kind = TransformStep::Kind::Split;
      step.z = parse_label(lineno, t[1]);
      auto bar = t[3].find('|');
      if (bar == std::string::npos) throw ParseError(lineno, "expected '<x>|<y>'");
      step.x = parse_label(lineno, t[3].substr(0, bar));
      step.y = parse_label(lineno, t[3].substr(bar + 1));
      step.x_only = parse_csv(lineno, keyed(lineno, t[4], "xonly="));
      step.y_only = parse_csv(lineno, keyed(lineno, t[5], "yonly="));
      step.shared = parse_csv(lineno, keyed(lineno, t[6], "shared="));
    } else {
      throw ParseError(lineno, "unknown step '" + t[0] + "'");
    }
    steps.push_back(std::move(step));
  }
  return steps;
}

TransformLog load_log(const Graph& source, std::string_view text) {
  TransformLog log{source, {}};
  Graph cur = source;
  std::size_t k = 0;
  for (const auto& step : parse_steps(text)) {
    ++k;
    try {
      auto next = apply_step(cur, step);
      cur = std::move(next.graph);
      log.steps.push_back(std::move(next.step));
    } catch (const DomainError& e) {
      throw DomainError("log step " + std::to_string(k) + ": " + e.what());
    }
  }
  return log;
}

}  // namespace digitop
