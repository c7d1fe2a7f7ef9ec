#include "volent/complex_io.hpp"

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "volent/errors.hpp"

namespace volent {

using nlohmann::json;

std::string read_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw invalid_input("cannot write file: " + path);
  out << text;
}

ComplexFile parse_complex_json(const std::string& text,
                               const std::string& base_dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw invalid_input(std::string("complex JSON parse error: ") + e.what());
  }
  if (!j.contains("vertices"))
    throw invalid_input("complex JSON: missing 'vertices'");
  int n = j["vertices"].get<int>();

  std::vector<EdgeCell> edges;
  std::vector<double> lengths;
  for (const auto& e : j.value("edges", json::array())) {
    if (!e.is_array() || e.size() < 2)
      throw invalid_input("complex JSON: bad edge entry");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
    lengths.push_back(e.size() >= 3 ? e[2].get<double>() : 1.0);
  }
  std::vector<TriCell> tris;
  for (const auto& t : j.value("triangles", json::array()))
    tris.push_back({t[0].get<int>(), t[1].get<int>(), t[2].get<int>()});
  std::vector<TetCell> tets;
  for (const auto& t : j.value("tetrahedra", json::array()))
    tets.push_back(
        {t[0].get<int>(), t[1].get<int>(), t[2].get<int>(), t[3].get<int>()});

  // Respect the file's cell list; edge lengths are keyed by the (sorted)
  // edge, then applied to the closure-completed complex.
  auto complex = std::make_shared<SimplicialComplex>(n, edges, tris, tets);
  std::map<EdgeCell, double> length_of;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    EdgeCell key = edges[i];
    if (key[0] > key[1]) std::swap(key[0], key[1]);
    length_of[key] = lengths[i];
  }
  std::vector<double> full_lengths;
  for (const EdgeCell& e : complex->edges()) {
    auto it = length_of.find(e);
    full_lengths.push_back(it == length_of.end() ? 1.0 : it->second);
  }

  ComplexFile out{MetricComplex(complex, std::move(full_lengths)), {}};

  for (const auto& [name, spec] : j.value("maps", json::object()).items()) {
    if (!spec.contains("target") || !spec.contains("vertex_image"))
      throw invalid_input("complex JSON: map needs 'target' and 'vertex_image'");
    std::filesystem::path target_path =
        std::filesystem::path(base_dir) / spec["target"].get<std::string>();
    ComplexFile target = load_complex_file(target_path.string());
    std::vector<VertexId> image = spec["vertex_image"].get<std::vector<int>>();
    out.maps.emplace(name, SimplicialMap(complex, target.metric.complex_ptr(),
                                         std::move(image)));
  }
  return out;
}

ComplexFile load_complex_file(const std::string& path) {
  std::filesystem::path p(path);
  return parse_complex_json(read_text_file(path), p.parent_path().string());
}

std::string complex_to_json(
    const MetricComplex& metric,
    const std::map<std::string, std::string>& map_targets,
    const std::map<std::string, std::vector<VertexId>>& map_images) {
  const SimplicialComplex& c = metric.complex();
  json j;
  j["vertices"] = c.vertex_count();
  json edges = json::array();
  for (std::size_t e = 0; e < c.edges().size(); ++e)
    edges.push_back({c.edges()[e][0], c.edges()[e][1], metric.edge_length(e)});
  j["edges"] = edges;
  json tris = json::array();
  for (const TriCell& t : c.triangles()) tris.push_back({t[0], t[1], t[2]});
  j["triangles"] = tris;
  if (!c.tetrahedra().empty()) {
    json tets = json::array();
    for (const TetCell& t : c.tetrahedra())
      tets.push_back({t[0], t[1], t[2], t[3]});
    j["tetrahedra"] = tets;
  }
  if (!map_targets.empty()) {
    json maps = json::object();
    for (const auto& [name, target] : map_targets) {
      json m;
      m["target"] = target;
      m["vertex_image"] = map_images.at(name);
      maps[name] = m;
    }
    j["maps"] = maps;
  }
  return j.dump(2);
}

void save_complex_file(const std::string& path, const MetricComplex& metric) {
  write_text_file(path, complex_to_json(metric));
}

}  // namespace volent
