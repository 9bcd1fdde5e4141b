#include "verify.hpp"

#include <functional>
#include <map>
#include <ostream>

#include "digitop/canonical.hpp"
#include "digitop/error.hpp"
#include "digitop/gallery.hpp"
#include "digitop/graph_io.hpp"
#include "digitop/invariants.hpp"
#include "digitop/manifold.hpp"
#include "digitop/transform.hpp"

namespace digitop::cli {

namespace {

const std::map<std::string, std::string>& expected_kind() {
  static const std::map<std::string, std::string> kinds = {
      {"s0", "sphere dim=0"},
      {"s1-min", "sphere dim=1"},
      {"s1-5", "sphere dim=1"},
      {"s2-min", "sphere dim=2"},
      {"s3-min", "sphere dim=3"},
      {"disk1", "disk dim=1"},
      {"disk2", "disk dim=2"},
      {"torus16", "manifold dim=2 sphere=false"},
      {"projective11", "manifold dim=2 sphere=false"},
  };
  return kinds;
}

}  // namespace

bool verify_gallery(std::ostream& out, const HomotopyLimits& limits) {
  bool all = true;
  auto row = [&](const std::string& name, const char* check, const std::function<bool()>& test) {
    bool ok = false;
    try {
      ok = test();
    } catch (const std::exception&) {
      ok = false;
    }
    all = all && ok;
    out << name << ' ' << check << ' ' << (ok ? "PASS" : "FAIL") << '\n';
  };

  for (const auto& name : gallery_names()) {
    const Graph g = gallery(name);
    const Classification c = classify(g, limits);
    row(name, "classify", [&] { return describe(c) == expected_kind().at(name); });
    row(name, "text-round-trip", [&] { return parse_graph(format_graph(g)) == g; });
    row(name, "euler-poincare", [&] { return euler_characteristic(g) == euler_from_betti(betti_numbers(g)); });
    row(name, "compress-unwind", [&] {
      Compression k = compress(g);
      return replay(k.log) == k.graph && unwind(k.log, k.graph) == g;
    });

    if (c.kind == Classification::Kind::Sphere) {
      const int n = c.dim;
      row(name, "punctured-contractible", [&] {
        ContractibilityEngine engine(limits);
        for (const auto& v : g.vertices())
          if (!engine.contractible(remove(g, VertexSet{v}))) return false;
        return true;
      });
      row(name, "compresses-to-minimal", [&] { return is_isomorphic(compress(g).graph, minimal_sphere(n)); });
      row(name, "contraction-keeps-sphere", [&] {
        for (const auto& [x, y] : find_simple_pairs(g)) {
          auto d = is_sphere(contract_pair(g, x, y).graph, limits);
          if (!d.holds || d.dim != n) return false;
        }
        return true;
      });
      if (n <= 2) {
        row(name, "suspension", [&] {
          auto d = is_sphere(suspend(g), limits);
          return d.holds && d.dim == n + 1;
        });
      }
    }

    if (c.kind == Classification::Kind::Manifold) {
      row(name, "no-simple-pairs", [&] { return find_simple_pairs(g).empty(); });
      row(name, "punctured-not-contractible", [&] {
        for (const auto& v : g.vertices())
          if (sphere_by_complement(g, VertexSet{v}, limits)) return false;
        return true;
      });
    }

    if (c.kind == Classification::Kind::Disk) {
      row(name, "boundary-sphere", [&] {
        Disk d = gallery_disk(name);
        auto b = is_sphere(g.induced(d.boundary), limits);
        auto check = is_disk(g, d.boundary, limits);
        return b.holds && b.dim == d.dim - 1 && check.holds && check.dim == d.dim;
      });
    }
  }
  return all;
}

}  // namespace digitop::cli
