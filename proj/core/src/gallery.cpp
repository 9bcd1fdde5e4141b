#include "digitop/gallery.hpp"

#include <utility>

#include "digitop/error.hpp"

namespace digitop {

namespace {

Disk punctured(const Graph& sphere, int dim) {
  const VertexId v("x0");
  Disk d;
  d.graph = remove(sphere, VertexSet{v});
  d.boundary = rim(sphere, v).vertex_set();
  for (const auto& u : d.graph.vertices())
    if (!d.boundary.contains(u)) d.interior.insert(u);
  d.dim = dim;
  return d;
}

}  // namespace

Graph torus16() {
  GraphBuilder b;
  auto id = [](int i, int j) { return VertexId(std::to_string(4 * ((i + 4) % 4) + (j + 4) % 4 + 1)); };
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) b.add_vertex(id(i, j));
  const std::pair<int, int> offsets[] = {{1, 0}, {0, 1}, {1, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (auto [di, dj] : offsets) b.add_edge(id(i, j), id(i + di, j + dj));
  return b.build();
}

Graph projective11() {
  static constexpr std::pair<char, char> edges[] = {
      {'a', 'b'}, {'a', 'e'}, {'a', 'g'}, {'a', 'h'}, {'a', 'j'}, {'a', 'k'}, {'b', 'd'}, {'b', 'f'},
      {'b', 'h'}, {'b', 'k'}, {'c', 'd'}, {'c', 'e'}, {'c', 'g'}, {'c', 'h'}, {'c', 'i'}, {'c', 'k'},
      {'d', 'e'}, {'d', 'f'}, {'d', 'h'}, {'d', 'j'}, {'e', 'j'}, {'e', 'k'}, {'f', 'i'}, {'f', 'j'},
      {'f', 'k'}, {'g', 'h'}, {'g', 'i'}, {'g', 'j'}, {'i', 'j'}, {'i', 'k'},
  };
  GraphBuilder b;
  for (char c = 'a'; c <= 'k'; ++c) b.add_vertex(VertexId(std::string(1, c)));
  for (auto [x, y] : edges) b.add_edge(VertexId(std::string(1, x)), VertexId(std::string(1, y)));
  return b.build();
}

const std::vector<std::string>& gallery_names() {
  static const std::vector<std::string> names = {"s0",    "s1-min", "s1-5",    "s2-min",      "s3-min",
                                                 "disk1", "disk2",  "torus16", "projective11"};
  return names;
}

Disk gallery_disk(std::string_view name) {
  if (name == "disk1") return punctured(minimal_sphere(1), 1);
  if (name == "disk2") return punctured(minimal_sphere(2), 2);
  throw DomainError("'" + std::string(name) + "' is not a gallery disk");
}

Graph gallery(std::string_view name) {
  if (name == "s0") return minimal_sphere(0);
  if (name == "s1-min") return minimal_sphere(1);
  if (name == "s1-5") return cycle_graph(5);
  if (name == "s2-min") return minimal_sphere(2);
  if (name == "s3-min") return minimal_sphere(3);
  if (name == "disk1" || name == "disk2") return gallery_disk(name).graph;
  if (name == "torus16") return torus16();
  if (name == "projective11") return projective11();
  throw DomainError("unknown gallery object '" + std::string(name) + "'");
}

}  // namespace digitop
