#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "digitop/graph.hpp"
#include "digitop/manifold.hpp"

namespace digitop {

/// Named reference graphs: "s0", "s1-min", "s1-5", "s2-min", "s3-min",
/// "disk1", "disk2", "torus16", "projective11".
Graph gallery(std::string_view name);
const std::vector<std::string>& gallery_names();

/// Disks carry their boundary; DomainError for names that are not disks.
Disk gallery_disk(std::string_view name);

/// 4x4 toroidal grid, offsets (+-1,0), (0,+-1), (1,1), (-1,-1); labels 1..16.
Graph torus16();
/// Flag triangulation of the projective plane on labels a..k.
Graph projective11();

}  // namespace digitop
