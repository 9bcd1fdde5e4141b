#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "digitop/expression.hpp"
#include "digitop/graph.hpp"

namespace digitop {

struct Circle {
  double cx = 0, cy = 0, r = 1;
};

/// Segment in the plane or in space (both endpoints of equal dimension 2 or 3).
struct Segment {
  std::vector<double> a, b;
};

struct SphereSurface {
  double cx = 0, cy = 0, cz = 0, r = 1;
};

/// Surface of the axis-aligned cube [x, x+side] x [y, y+side] x [z, z+side].
struct CubeSurface {
  double x = 0, y = 0, z = 0, side = 1;
};

/// Zero set of a scalar field, searched inside the box [lo, hi]^dim.
struct Implicit {
  ScalarField field;
  double lo = -8, hi = 8;
};

using ShapeSpec = std::variant<Circle, Segment, SphereSurface, CubeSurface, Implicit>;

int shape_dimension(const ShapeSpec& shape);

/// "circle:cx,cy,r", "segment:x1,y1,x2,y2" (or six numbers in space),
/// "sphere:cx,cy,cz,r", "cubesurf:x,y,z,side", "implicit:<expression>".
ShapeSpec parse_shape(std::string_view text);

using CubeCoord = std::vector<std::int64_t>;

/// Closed grid cube with lower corner coord * edge_length.
struct CubicalModel {
  double edge_length = 1;
  int dim = 2;
  std::vector<CubeCoord> cubes;  // ascending
  Graph graph;
};

struct DigitizeLimits {
  std::size_t max_cubes_examined = 4'000'000;
  std::size_t max_samples = 50'000'000;
};

/// Collects every grid cube meeting the shape. Circles, segments, sphere and
/// cube surfaces use exact distance/clipping tests; implicit fields are
/// sampled on a (2^depth + 1)^dim lattice per cube and a cube is kept when
/// the samples include zero or both signs, which can miss features smaller
/// than the sample spacing.
CubicalModel digitize(const ShapeSpec& shape, double edge_length, int subdivision_depth = 0,
                      const DigitizeLimits& limits = {});

/// "c<i>_<j>[_<k>]".
VertexId cube_label(const CubeCoord& c);

/// Intersection graph of closed cubes: distinct cubes are adjacent iff their
/// coordinates differ by at most one in every component.
Graph model_graph(const std::vector<CubeCoord>& cubes);
Graph model_graph(const CubicalModel& model);

}  // namespace digitop
