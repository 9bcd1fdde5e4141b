#include "cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>

#include "digitop/digitize.hpp"
#include "digitop/error.hpp"
#include "digitop/gallery.hpp"
#include "digitop/graph_io.hpp"
#include "digitop/homotopy.hpp"
#include "digitop/invariants.hpp"
#include "digitop/manifold.hpp"
#include "digitop/transform.hpp"
#include "verify.hpp"

namespace digitop::cli {

namespace {

VertexSet parse_csv(const std::string& text) {
  VertexSet out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.insert(VertexId(item));
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot write '" + path + "'");
  f << text;
}

// Graph to `path`, or to `out` when no path was given.
void emit_graph(const Graph& g, const std::string& path, std::ostream& out) {
  if (path.empty())
    write_graph(out, g);
  else
    save_graph(path, g);
}

int verdict(bool yes, std::ostream& out) {
  out << (yes ? "yes" : "no") << '\n';
  return yes ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"digital topology on graphs", "digitop"};
  app.require_subcommand(1);

  std::size_t max_vertices = HomotopyLimits{}.max_vertices;
  app.add_option("--max-vertices", max_vertices, "largest graph handed to the contractibility search")
      ->check(CLI::Range(std::size_t{1}, std::size_t{64}));

  std::function<int()> action;
  auto limits = [&] { return HomotopyLimits{max_vertices}; };

  std::string file, file2, v1, v2, v3, output, log_path, csv_x, csv_y, csv_s, csv_remove, labels, as_label, shape;
  std::string box;
  bool with_certificate = false;
  double edge_length = 0;
  int depth = 0;

  auto* classify_cmd = app.add_subcommand("classify", "sphere / disk / manifold / contractible / other");
  classify_cmd->add_option("file", file)->required();
  classify_cmd->callback([&] {
    action = [&] {
      out << describe(classify(load_graph(file), limits())) << '\n';
      return int{kOk};
    };
  });

  auto* contractible_cmd = app.add_subcommand("contractible", "reducible to one point by simple-point deletions?");
  contractible_cmd->add_option("file", file)->required();
  contractible_cmd->add_flag("--certificate", with_certificate, "print a deletion order after 'yes'");
  contractible_cmd->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      if (!with_certificate) return verdict(is_contractible(g, limits()), out);
      auto cert = contractibility_certificate(g, limits());
      int code = verdict(cert.has_value(), out);
      if (cert) write_certificate(out, *cert);
      return code;
    };
  });

  auto* simple_point_cmd = app.add_subcommand("simple-point", "is the rim of v contractible?");
  simple_point_cmd->add_option("file", file)->required();
  simple_point_cmd->add_option("v", v1)->required();
  simple_point_cmd->callback([&] {
    action = [&] { return verdict(is_simple_point(load_graph(file), VertexId(v1), limits()), out); };
  });

  auto* simple_pair_cmd = app.add_subcommand("simple-pair", "can the edge xy be contracted?");
  simple_pair_cmd->add_option("file", file)->required();
  simple_pair_cmd->add_option("x", v1)->required();
  simple_pair_cmd->add_option("y", v2)->required();
  simple_pair_cmd->callback([&] {
    action = [&] { return verdict(is_simple_pair(load_graph(file), VertexId(v1), VertexId(v2)), out); };
  });

  auto* compress_cmd = app.add_subcommand("compress", "contract simple pairs until none remain");
  compress_cmd->add_option("file", file)->required();
  compress_cmd->add_option("-o,--output", output, "write the compressed graph here");
  compress_cmd->add_option("--log", log_path, "write the contraction log here");
  compress_cmd->callback([&] {
    action = [&] {
      Compression c = compress(load_graph(file));
      if (!log_path.empty()) write_file(log_path, format_log(c.log));
      emit_graph(c.graph, output, out);
      return int{kOk};
    };
  });

  auto* transform_cmd = app.add_subcommand("transform", "single contraction or splitting");
  transform_cmd->require_subcommand(1);
  auto* contract_cmd = transform_cmd->add_subcommand("contract", "contract the simple pair x, y");
  contract_cmd->add_option("file", file)->required();
  contract_cmd->add_option("x", v1)->required();
  contract_cmd->add_option("y", v2)->required();
  contract_cmd->add_option("--as", as_label, "label of the new point");
  contract_cmd->add_option("-o,--output", output);
  contract_cmd->callback([&] {
    action = [&] {
      std::optional<VertexId> z;
      if (!as_label.empty()) z = VertexId(as_label);
      auto t = contract_pair(load_graph(file), VertexId(v1), VertexId(v2), z);
      emit_graph(t.graph, output, out);
      return int{kOk};
    };
  });
  auto* split_cmd = transform_cmd->add_subcommand("split", "split z into adjacent x, y");
  split_cmd->add_option("file", file)->required();
  split_cmd->add_option("z", v3)->required();
  split_cmd->add_option("--x-only", csv_x, "rim points joined to x only (comma separated)");
  split_cmd->add_option("--y-only", csv_y, "rim points joined to y only");
  split_cmd->add_option("--shared", csv_s, "rim points joined to both");
  split_cmd->add_option("--labels", labels, "x,y labels for the new points");
  split_cmd->add_option("-o,--output", output);
  split_cmd->callback([&] {
    action = [&] {
      std::optional<std::pair<VertexId, VertexId>> names;
      if (!labels.empty()) {
        auto comma = labels.find(',');
        if (comma == std::string::npos) throw DomainError("--labels expects x,y");
        names.emplace(VertexId(labels.substr(0, comma)), VertexId(labels.substr(comma + 1)));
      }
      auto t = split_point(load_graph(file), VertexId(v3), parse_csv(csv_x), parse_csv(csv_y), parse_csv(csv_s),
                           names);
      emit_graph(t.graph, output, out);
      return int{kOk};
    };
  });
  auto* replay_cmd = transform_cmd->add_subcommand("replay", "apply every step of a transform log");
  replay_cmd->add_option("file", file)->required();
  replay_cmd->add_option("log", file2)->required();
  replay_cmd->add_option("-o,--output", output);
  replay_cmd->callback([&] {
    action = [&] {
      Graph g = load_graph(file);
      emit_graph(replay(load_log(g, read_file(file2))), output, out);
      return int{kOk};
    };
  });

  auto* separate_cmd = app.add_subcommand("separate", "components left after removing a set of points");
  separate_cmd->add_option("file", file)->required();
  separate_cmd->add_option("--remove", csv_remove, "points to remove (comma separated)")->required();
  separate_cmd->callback([&] {
    action = [&] {
      auto parts = separate(load_graph(file), parse_csv(csv_remove));
      for (const auto& part : parts) {
        out << "component:";
        for (const auto& v : part) out << ' ' << v;
        out << '\n';
      }
      return int{kOk};
    };
  });

  auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic of the clique complex");
  euler_cmd->add_option("file", file)->required();
  euler_cmd->callback([&] {
    action = [&] {
      out << euler_characteristic(load_graph(file)) << '\n';
      return int{kOk};
    };
  });

  auto* betti_cmd = app.add_subcommand("betti", "mod-2 Betti numbers of the clique complex");
  betti_cmd->add_option("file", file)->required();
  betti_cmd->callback([&] {
    action = [&] {
      auto b = betti_numbers(load_graph(file));
      for (std::size_t i = 0; i < b.size(); ++i) out << (i ? " " : "") << b[i];
      out << '\n';
      return int{kOk};
    };
  });

  auto* report_cmd = app.add_subcommand("report", "clique counts, Euler characteristic, Betti numbers");
  report_cmd->add_option("file", file)->required();
  report_cmd->callback([&] {
    action = [&] {
      write_report(out, invariant_report(load_graph(file)));
      return int{kOk};
    };
  });

  auto* digitize_cmd = app.add_subcommand("digitize", "cubical model of a shape");
  digitize_cmd->add_option("shape", shape, "circle:cx,cy,r | segment:... | sphere:cx,cy,cz,r | cubesurf:x,y,z,side | implicit:<expr>")
      ->required();
  digitize_cmd->add_option("--edge-length", edge_length, "cube edge length")->required();
  digitize_cmd->add_option("--depth", depth, "sampling depth for implicit shapes");
  digitize_cmd->add_option("--box", box, "search box lo,hi for implicit shapes");
  digitize_cmd->add_option("-o,--output", output);
  digitize_cmd->callback([&] {
    action = [&] {
      ShapeSpec s = parse_shape(shape);
      if (!box.empty()) {
        auto* f = std::get_if<Implicit>(&s);
        if (!f) throw DomainError("--box applies to implicit shapes only");
        auto comma = box.find(',');
        if (comma == std::string::npos) throw DomainError("--box expects lo,hi");
        try {
          f->lo = std::stod(box.substr(0, comma));
          f->hi = std::stod(box.substr(comma + 1));
        } catch (const std::logic_error&) {
          throw DomainError("--box expects two numbers");
        }
      }
      CubicalModel m = digitize(s, edge_length, depth);
      emit_graph(m.graph, output, out);
      if (!output.empty()) out << "cubes: " << m.cubes.size() << "\nedges: " << m.graph.edge_count() << '\n';
      return int{kOk};
    };
  });

  std::string name;
  auto* gallery_cmd = app.add_subcommand("gallery", "print a named reference graph");
  gallery_cmd->add_option("name", name)->required()->check(CLI::IsMember(gallery_names()));
  gallery_cmd->add_option("-o,--output", output);
  gallery_cmd->callback([&] {
    action = [&] {
      emit_graph(gallery(name), output, out);
      return int{kOk};
    };
  });

  auto* verify_cmd = app.add_subcommand("verify", "check structural properties of every gallery object");
  verify_cmd->callback([&] { action = [&] { return verify_gallery(out, limits()) ? kOk : kNegative; }; });

  std::vector<const char*> argv{"digitop"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    return action();
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << '\n';
    return kCapacity;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace digitop::cli
