#include "digitop/digitize.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>

#include "digitop/error.hpp"

namespace digitop {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

struct Box {
  std::vector<double> lo, hi;
};

void require_finite(std::initializer_list<double> values) {
  for (double v : values)
    if (!std::isfinite(v)) throw DomainError("shape parameters must be finite");
}

void validate(const ShapeSpec& shape) {
  std::visit(Overloaded{
                 [](const Circle& c) {
                   require_finite({c.cx, c.cy, c.r});
                   if (c.r <= 0) throw DomainError("circle radius must be positive");
                 },
                 [](const Segment& s) {
                   if (s.a.size() != s.b.size() || (s.a.size() != 2 && s.a.size() != 3))
                     throw DomainError("segment endpoints must both be 2- or 3-dimensional");
                   for (std::size_t i = 0; i < s.a.size(); ++i) require_finite({s.a[i], s.b[i]});
                 },
                 [](const SphereSurface& s) {
                   require_finite({s.cx, s.cy, s.cz, s.r});
                   if (s.r <= 0) throw DomainError("sphere radius must be positive");
                 },
                 [](const CubeSurface& c) {
                   require_finite({c.x, c.y, c.z, c.side});
                   if (c.side <= 0) throw DomainError("cube side must be positive");
                 },
                 [](const Implicit& f) {
                   require_finite({f.lo, f.hi});
                   if (!(f.lo < f.hi)) throw DomainError("implicit search box must have lo < hi");
                 },
             },
             shape);
}

Box bounds(const ShapeSpec& shape) {
  return std::visit(Overloaded{
                        [](const Circle& c) { return Box{{c.cx - c.r, c.cy - c.r}, {c.cx + c.r, c.cy + c.r}}; },
                        [](const Segment& s) {
                          Box b{s.a, s.a};
                          for (std::size_t i = 0; i < s.a.size(); ++i) {
                            b.lo[i] = std::min(s.a[i], s.b[i]);
                            b.hi[i] = std::max(s.a[i], s.b[i]);
                          }
                          return b;
                        },
                        [](const SphereSurface& s) {
                          return Box{{s.cx - s.r, s.cy - s.r, s.cz - s.r}, {s.cx + s.r, s.cy + s.r, s.cz + s.r}};
                        },
                        [](const CubeSurface& c) {
                          return Box{{c.x, c.y, c.z}, {c.x + c.side, c.y + c.side, c.z + c.side}};
                        },
                        [](const Implicit& f) {
                          auto d = static_cast<std::size_t>(f.field.dimension());
                          return Box{std::vector<double>(d, f.lo), std::vector<double>(d, f.hi)};
                        },
                    },
                    shape);
}

// Squared distance from `p` to the nearest and farthest points of the box.
std::pair<double, double> distance_range_sq(const double* p, const Box& cube) {
  double near = 0, far = 0;
  for (std::size_t i = 0; i < cube.lo.size(); ++i) {
    double below = cube.lo[i] - p[i];
    double above = p[i] - cube.hi[i];
    double gap = std::max({below, above, 0.0});
    near += gap * gap;
    double span = std::max(std::fabs(cube.lo[i] - p[i]), std::fabs(cube.hi[i] - p[i]));
    far += span * span;
  }
  return {near, far};
}

bool meets_shell(const double* center, double r, const Box& cube) {
  auto [near, far] = distance_range_sq(center, cube);
  return near <= r * r && r * r <= far;
}

// Slab clipping of the parameter interval [0, 1] against a closed box.
bool meets_segment(const Segment& s, const Box& cube) {
  double t0 = 0.0, t1 = 1.0;
  for (std::size_t i = 0; i < s.a.size(); ++i) {
    double d = s.b[i] - s.a[i];
    if (d == 0.0) {
      if (s.a[i] < cube.lo[i] || s.a[i] > cube.hi[i]) return false;
      continue;
    }
    double ta = (cube.lo[i] - s.a[i]) / d;
    double tb = (cube.hi[i] - s.a[i]) / d;
    if (ta > tb) std::swap(ta, tb);
    t0 = std::max(t0, ta);
    t1 = std::min(t1, tb);
    if (t0 > t1) return false;
  }
  return true;
}

// A closed box meets the surface of a solid cube iff it meets the solid and
// is not contained in its open interior.
bool meets_cube_surface(const CubeSurface& c, const Box& cube) {
  const double lo[3] = {c.x, c.y, c.z};
  bool inside = true;
  for (std::size_t i = 0; i < 3; ++i) {
    double hi = lo[i] + c.side;
    if (cube.hi[i] < lo[i] || cube.lo[i] > hi) return false;
    if (!(lo[i] < cube.lo[i] && cube.hi[i] < hi)) inside = false;
  }
  return !inside;
}

bool meets_implicit(const Implicit& f, const Box& cube, int depth) {
  const std::size_t d = cube.lo.size();
  const long steps = 1L << depth;
  bool neg = false, pos = false;
  std::vector<long> idx(d, 0);
  double p[3] = {0, 0, 0};
  for (;;) {
    for (std::size_t i = 0; i < d; ++i)
      p[i] = cube.lo[i] + (cube.hi[i] - cube.lo[i]) * static_cast<double>(idx[i]) / static_cast<double>(steps);
    double v = f.field(p[0], p[1], p[2]);
    if (v == 0.0) return true;
    if (v < 0) neg = true;
    if (v > 0) pos = true;
    if (neg && pos) return true;
    std::size_t k = 0;
    while (k < d && ++idx[k] > steps) idx[k++] = 0;
    if (k == d) return false;
  }
}

double parse_number(std::string_view tok) {
  std::string s(tok);
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw DomainError("bad number '" + s + "' in shape");
  return v;
}

std::vector<double> parse_numbers(std::string_view text) {
  std::vector<double> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = text.find(',', start);
    out.push_back(parse_number(text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) return out;
    start = comma + 1;
  }
}

}  // namespace

int shape_dimension(const ShapeSpec& shape) {
  return std::visit(Overloaded{
                        [](const Circle&) { return 2; },
                        [](const Segment& s) { return static_cast<int>(s.a.size()); },
                        [](const SphereSurface&) { return 3; },
                        [](const CubeSurface&) { return 3; },
                        [](const Implicit& f) { return f.field.dimension(); },
                    },
                    shape);
}

ShapeSpec parse_shape(std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos) throw DomainError("shape must look like '<kind>:<parameters>'");
  std::string_view kind = text.substr(0, colon);
  std::string_view rest = text.substr(colon + 1);
  if (kind == "implicit") return Implicit{ScalarField::parse(rest)};
  auto v = parse_numbers(rest);
  auto want = [&](std::size_t n) {
    if (v.size() != n)
      throw DomainError(std::string(kind) + " expects " + std::to_string(n) + " numbers, got " +
                        std::to_string(v.size()));
  };
  ShapeSpec shape;
  if (kind == "circle") {
    want(3);
    shape = Circle{v[0], v[1], v[2]};
  } else if (kind == "segment") {
    if (v.size() == 4)
      shape = Segment{{v[0], v[1]}, {v[2], v[3]}};
    else if (v.size() == 6)
      shape = Segment{{v[0], v[1], v[2]}, {v[3], v[4], v[5]}};
    else
      throw DomainError("segment expects 4 or 6 numbers");
  } else if (kind == "sphere") {
    want(4);
    shape = SphereSurface{v[0], v[1], v[2], v[3]};
  } else if (kind == "cubesurf") {
    want(4);
    shape = CubeSurface{v[0], v[1], v[2], v[3]};
  } else {
    throw DomainError("unknown shape kind '" + std::string(kind) + "'");
  }
  validate(shape);
  return shape;
}

VertexId cube_label(const CubeCoord& c) {
  std::string s = "c";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i > 0) s += '_';
    s += std::to_string(c[i]);
  }
  return VertexId(s);
}

Graph model_graph(const std::vector<CubeCoord>& cubes) {
  std::map<CubeCoord, VertexId> labels;
  for (const auto& c : cubes) labels.emplace(c, cube_label(c));
  GraphBuilder b;
  for (const auto& [c, label] : labels) b.add_vertex(label);
  for (const auto& [c, label] : labels) {
    const std::size_t d = c.size();
    std::vector<int> off(d, -1);
    for (;;) {
      CubeCoord n = c;
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) {
        n[i] += off[i];
        zero = zero && off[i] == 0;
      }
      if (!zero && c < n) {
        if (auto it = labels.find(n); it != labels.end()) b.add_edge(label, it->second);
      }
      std::size_t k = 0;
      while (k < d && ++off[k] > 1) off[k++] = -1;
      if (k == d) break;
    }
  }
  return b.build();
}

Graph model_graph(const CubicalModel& model) { return model_graph(model.cubes); }

CubicalModel digitize(const ShapeSpec& shape, double edge_length, int subdivision_depth,
                      const DigitizeLimits& limits) {
  if (!(edge_length > 0) || !std::isfinite(edge_length)) throw DomainError("edge length must be positive");
  if (subdivision_depth < 0 || subdivision_depth > 16) throw DomainError("subdivision depth must be in [0, 16]");
  validate(shape);

  const Box box = bounds(shape);
  const std::size_t d = box.lo.size();
  std::vector<std::int64_t> first(d), last(d);
  double examined = 1;
  for (std::size_t i = 0; i < d; ++i) {
    double a = std::floor(box.lo[i] / edge_length) - 1;
    double b = std::floor(box.hi[i] / edge_length);
    if (!(std::fabs(a) < 1e15 && std::fabs(b) < 1e15)) throw CapacityError("shape is unbounded at this resolution");
    first[i] = static_cast<std::int64_t>(a);
    last[i] = static_cast<std::int64_t>(b);
    examined *= static_cast<double>(last[i] - first[i] + 1);
  }
  if (examined > static_cast<double>(limits.max_cubes_examined))
    throw CapacityError("digitization would examine " + std::to_string(static_cast<long long>(examined)) +
                        " cubes, over the budget of " + std::to_string(limits.max_cubes_examined));
  if (std::holds_alternative<Implicit>(shape)) {
    double samples = examined * std::pow(std::ldexp(1.0, subdivision_depth) + 1, static_cast<double>(d));
    if (samples > static_cast<double>(limits.max_samples))
      throw CapacityError("implicit sampling exceeds the budget of " + std::to_string(limits.max_samples) +
                          " samples");
  }

  CubicalModel model;
  model.edge_length = edge_length;
  model.dim = static_cast<int>(d);
  CubeCoord c = first;
  Box cube{std::vector<double>(d), std::vector<double>(d)};
  for (;;) {
    for (std::size_t i = 0; i < d; ++i) {
      cube.lo[i] = static_cast<double>(c[i]) * edge_length;
      cube.hi[i] = static_cast<double>(c[i] + 1) * edge_length;
    }
    bool hit = std::visit(Overloaded{
                              [&](const Circle& s) {
                                const double p[2] = {s.cx, s.cy};
                                return meets_shell(p, s.r, cube);
                              },
                              [&](const Segment& s) { return meets_segment(s, cube); },
                              [&](const SphereSurface& s) {
                                const double p[3] = {s.cx, s.cy, s.cz};
                                return meets_shell(p, s.r, cube);
                              },
                              [&](const CubeSurface& s) { return meets_cube_surface(s, cube); },
                              [&](const Implicit& s) { return meets_implicit(s, cube, subdivision_depth); },
                          },
                          shape);
    if (hit) model.cubes.push_back(c);
    std::size_t k = 0;
    while (k < d && ++c[k] > last[k]) c[k] = first[k], ++k;
    if (k == d) break;
  }
  std::sort(model.cubes.begin(), model.cubes.end());
  model.graph = model_graph(model.cubes);
  return model;
}

}  // namespace digitop
