#include "digitop/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <vector>

#include "digitop/error.hpp"

namespace digitop {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::string body = line.substr(0, line.find('#'));
  std::istringstream ss(body);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(std::move(tok));
  return out;
}

VertexId parse_label(std::size_t lineno, const std::string& tok) {
  if (!VertexId::valid_label(tok)) throw ParseError(lineno, "invalid label '" + tok + "'");
  return VertexId(tok);
}

}  // namespace

Graph read_graph(std::istream& in) {
  GraphBuilder builder;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    try {
      if (toks[0] == "v") {
        if (toks.size() != 2) throw ParseError(lineno, "expected 'v <label>'");
        builder.add_vertex(parse_label(lineno, toks[1]));
      } else if (toks[0] == "e") {
        if (toks.size() != 3) throw ParseError(lineno, "expected 'e <label> <label>'");
        builder.add_edge(parse_label(lineno, toks[1]), parse_label(lineno, toks[2]));
      } else {
        throw ParseError(lineno, "unknown directive '" + toks[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const DomainError& e) {
      throw ParseError(lineno, e.what());
    }
  }
  return builder.build();
}

Graph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_graph(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  for (const auto& v : g.vertices()) out << "v " << v.str() << '\n';
  for (const auto& [u, v] : g.edges()) out << "e " << u.str() << ' ' << v.str() << '\n';
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void save_graph(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DomainError("cannot write '" + path + "'");
  write_graph(out, g);
}

}  // namespace digitop
