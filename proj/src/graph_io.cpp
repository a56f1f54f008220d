#include "hecke/graph_io.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "hecke/error.hpp"

namespace hecke {

using ojson = nlohmann::ordered_json;

std::string graph_to_json(const HeckeGraph& g) {
  ojson j;
  j["q"] = g.desc.field->q();
  j["level"] = g.desc.level_name();
  if (g.desc.level == Level::GeneralR) j["r"] = g.desc.r;
  j["degree_y"] = g.desc.degree_y;
  j["at_x"] = g.desc.at_x;
  j["radius"] = g.radius;
  ojson vs = ojson::array();
  for (const Vertex& v : g.vertices) vs.push_back({{"n", v.n}, {"w", vertex_tag(g.desc, v)}});
  j["vertices"] = std::move(vs);
  ojson es = ojson::array();
  for (const Edge& e : g.edges) es.push_back({{"src", e.src}, {"dst", e.dst}, {"mult", e.mult}});
  j["edges"] = std::move(es);
  j["frontier"] = g.frontier;
  return j.dump(2) + "\n";
}

HeckeGraph graph_from_json(const std::string& text) {
  try {
    ojson j = ojson::parse(text);
    const Field& f = field_of_order(j.at("q").get<std::uint32_t>());
    const std::string level = j.at("level").get<std::string>();
    const bool at_x = j.at("at_x").get<bool>();
    const int d = j.at("degree_y").get<int>();
    OperatorDesc desc;
    if (level == "K") {
      desc = OperatorDesc::unramified(f, d);
    } else if (level == "K1") {
      desc = at_x ? OperatorDesc::ramified_at_x(f) : OperatorDesc::ramified(f, d);
    } else if (level == "Kr") {
      desc = OperatorDesc::level_r(f, j.at("r").get<int>(), at_x, d);
    } else {
      throw Error(ErrorKind::Parse, "unknown level '" + level + "'");
    }
    desc.validate();
    HeckeGraph g;
    g.desc = desc;
    g.radius = j.at("radius").get<int>();
    for (const auto& v : j.at("vertices")) {
      g.vertices.push_back(vertex_from_tag(desc, v.at("n").get<int>(), v.at("w").get<std::string>()));
    }
    for (std::size_t i = 1; i < g.vertices.size(); ++i)
      if (!(g.vertices[i - 1] < g.vertices[i])) throw Error(ErrorKind::Parse, "vertices not strictly sorted");
    for (const auto& e : j.at("edges")) {
      Edge ed{e.at("src").get<std::size_t>(), e.at("dst").get<std::size_t>(), e.at("mult").get<long long>()};
      if (ed.src >= g.vertices.size() || ed.dst >= g.vertices.size() || ed.mult < 1)
        throw Error(ErrorKind::Parse, "edge out of range");
      g.edges.push_back(ed);
    }
    g.finalize();
    if (g.frontier != j.at("frontier").get<std::vector<std::size_t>>())
      throw Error(ErrorKind::Parse, "frontier does not match radius");
    return g;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("graph json: ") + e.what());
  }
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string graph_to_dot(const HeckeGraph& g) {
  std::ostringstream os;
  os << "digraph hecke {\n";
  for (std::size_t i = 0; i < g.vertices.size(); ++i) {
    os << "  v" << i << " [label=\"" << dot_escape(vertex_label(g.desc, g.vertices[i])) << "\"";
    if (g.is_frontier(i)) os << ", style=dashed";
    os << "];\n";
  }
  for (const Edge& e : g.edges) os << "  v" << e.src << " -> v" << e.dst << " [label=\"" << e.mult << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_csv(const HeckeGraph& g) {
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += '"';
      out += c;
    }
    return out + "\"";
  };
  std::ostringstream os;
  os << "src,dst,mult\n";
  for (const Edge& e : g.edges)
    os << quote(vertex_label(g.desc, g.vertices[e.src])) << "," << quote(vertex_label(g.desc, g.vertices[e.dst])) << ","
       << e.mult << "\n";
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << contents;
    out.flush();
    if (!out) throw std::runtime_error("write to " + tmp + " failed");
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace hecke
