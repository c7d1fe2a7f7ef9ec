#ifndef VOLENT_COMPLEX_IO_HPP
#define VOLENT_COMPLEX_IO_HPP

#include <map>
#include <optional>
#include <string>

#include "volent/metric_complex.hpp"
#include "volent/simplicial_complex.hpp"
#include "volent/simplicial_map.hpp"

namespace volent {

/// A complex file: metric complex plus named simplicial maps to complexes
/// loaded from referenced files.
///
/// Format:
///   {"vertices": N,
///    "edges": [[u,v,length], ...],          // length optional, default 1.0
///    "triangles": [[a,b,c], ...],
///    "tetrahedra": [[a,b,c,d], ...],        // optional
///    "maps": {"name": {"target": "file.json", "vertex_image": [...]}}}
struct ComplexFile {
  MetricComplex metric;
  std::map<std::string, SimplicialMap> maps;
};

ComplexFile load_complex_file(const std::string& path);
ComplexFile parse_complex_json(const std::string& text,
                               const std::string& base_dir);

std::string complex_to_json(const MetricComplex& metric,
                            const std::map<std::string, std::string>& map_targets = {},
                            const std::map<std::string, std::vector<VertexId>>&
                                map_images = {});

void save_complex_file(const std::string& path, const MetricComplex& metric);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace volent

#endif
