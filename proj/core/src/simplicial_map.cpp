#include "volent/simplicial_map.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "volent/errors.hpp"

namespace volent {

namespace {

// Distinct image vertices of a cell, ascending.
std::vector<VertexId> image_span(const std::vector<VertexId>& image,
                                 const VertexId* verts, int n) {
  std::vector<VertexId> out;
  for (int i = 0; i < n; ++i) out.push_back(image[verts[i]]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool spans_cell(const SimplicialComplex& target, const std::vector<VertexId>& s) {
  switch (s.size()) {
    case 1:
      return s[0] >= 0 && s[0] < target.vertex_count();
    case 2:
      return target.edge_index(s[0], s[1]) >= 0;
    case 3:
      return target.triangle_index(s[0], s[1], s[2]) >= 0;
    case 4:
      return target.tetrahedron_index({s[0], s[1], s[2], s[3]}) >= 0;
    default:
      return false;
  }
}

}  // namespace

SimplicialMap::SimplicialMap(ComplexPtr source, ComplexPtr target,
                             std::vector<VertexId> vertex_image)
    : source_(std::move(source)),
      target_(std::move(target)),
      image_(std::move(vertex_image)) {
  if (static_cast<int>(image_.size()) != source_->vertex_count())
    throw invalid_input("simplicial map: one image per source vertex");
  for (VertexId v : image_)
    if (v < 0 || v >= target_->vertex_count())
      throw invalid_input("simplicial map: image vertex out of range");
  for (const EdgeCell& e : source_->edges())
    if (!spans_cell(*target_, image_span(image_, e.data(), 2)))
      throw invalid_input("simplicial map: edge image spans no target cell");
  for (const TriCell& t : source_->triangles())
    if (!spans_cell(*target_, image_span(image_, t.data(), 3)))
      throw invalid_input("simplicial map: triangle image spans no target cell");
  for (const TetCell& t : source_->tetrahedra())
    if (!spans_cell(*target_, image_span(image_, t.data(), 4)))
      throw invalid_input("simplicial map: tetrahedron image spans no target cell");
}

SimplicialMap SimplicialMap::identity(ComplexPtr complex) {
  std::vector<VertexId> image(complex->vertex_count());
  for (int v = 0; v < complex->vertex_count(); ++v) image[v] = v;
  return SimplicialMap(complex, complex, std::move(image));
}

bool SimplicialMap::edge_is_long(int edge_id) const {
  const EdgeCell& e = source_->edges().at(edge_id);
  return image_[e[0]] != image_[e[1]];
}

Subcomplex SimplicialMap::fiber(VertexId p) const {
  if (p < 0 || p >= target_->vertex_count())
    throw invalid_input("fiber: target vertex out of range");
  std::vector<VertexId> verts;
  for (int v = 0; v < source_->vertex_count(); ++v)
    if (image_[v] == p) verts.push_back(v);
  if (verts.empty())
    throw Error(ErrorCode::EmptyFiber,
                "fiber: no vertex maps to " + std::to_string(p));
  return Subcomplex::full_on_vertices(source_, verts);
}

bool SimplicialMap::surjective_on_vertices() const {
  std::vector<char> hit(target_->vertex_count(), 0);
  for (VertexId v : image_) hit[v] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

Eigen::MatrixXd pullback_gram(const SimplicialMap& map,
                              const MetricComplex& target_metric, int dim,
                              int cell_id) {
  if (target_metric.complex_ptr().get() != map.target_ptr().get())
    throw invalid_input("pullback_gram: metric lives on a different complex");
  const SimplicialComplex& src = map.source();
  std::vector<VertexId> verts;
  switch (dim) {
    case 1: {
      const EdgeCell& e = src.edges().at(cell_id);
      verts = {e[0], e[1]};
      break;
    }
    case 2: {
      const TriCell& t = src.triangles().at(cell_id);
      verts = {t[0], t[1], t[2]};
      break;
    }
    case 3: {
      const TetCell& t = src.tetrahedra().at(cell_id);
      verts = {t[0], t[1], t[2], t[3]};
      break;
    }
    default:
      throw invalid_input("pullback_gram: dim must be 1..3");
  }
  const int k = dim;
  auto len2 = [&](VertexId u, VertexId v) -> double {
    VertexId a = map.apply(u), b = map.apply(v);
    if (a == b) return 0.0;
    int e = map.target().edge_index(a, b);
    if (e < 0) throw invalid_input("pullback_gram: image edge missing");
    double l = target_metric.edge_length(e);
    return l * l;
  };
  Eigen::MatrixXd g(k, k);
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      double val = (i == j) ? len2(verts[0], verts[i])
                            : 0.5 * (len2(verts[0], verts[i]) +
                                     len2(verts[0], verts[j]) -
                                     len2(verts[i], verts[j]));
      g(i - 1, j - 1) = val;
      g(j - 1, i - 1) = val;
    }
  }
  return g;
}

FiberQuotient connected_fiber_quotient(const SimplicialMap& map) {
  const SimplicialComplex& X = map.source();
  // Component id per source vertex, where components are taken within each
  // vertex fiber (edges whose endpoints share an image).
  std::vector<int> comp(X.vertex_count(), -1);
  std::vector<VertexId> comp_target;
  int next = 0;
  for (int start = 0; start < X.vertex_count(); ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    comp_target.push_back(map.apply(start));
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : X.adjacency()[v]) {
        if (comp[w] < 0 && map.apply(w) == map.apply(v)) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }

  // Cells of the quotient: images of source cells under the component map.
  std::set<EdgeCell> edges;
  std::set<TriCell> tris;
  std::set<TetCell> tets;
  auto add_image = [&](const VertexId* verts, int n) {
    std::vector<int> img;
    for (int i = 0; i < n; ++i) img.push_back(comp[verts[i]]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    switch (img.size()) {
      case 2:
        edges.insert({img[0], img[1]});
        break;
      case 3:
        tris.insert({img[0], img[1], img[2]});
        break;
      case 4:
        tets.insert({img[0], img[1], img[2], img[3]});
        break;
      default:
        break;
    }
  };
  for (const EdgeCell& e : X.edges()) add_image(e.data(), 2);
  for (const TriCell& t : X.triangles()) add_image(t.data(), 3);
  for (const TetCell& t : X.tetrahedra()) add_image(t.data(), 4);

  auto quotient = std::make_shared<SimplicialComplex>(
      next, std::vector<EdgeCell>(edges.begin(), edges.end()),
      std::vector<TriCell>(tris.begin(), tris.end()),
      std::vector<TetCell>(tets.begin(), tets.end()));

  std::vector<VertexId> image(X.vertex_count());
  for (int v = 0; v < X.vertex_count(); ++v) image[v] = comp[v];
  FiberQuotient out{quotient,
                    SimplicialMap(map.source_ptr(), quotient, std::move(image)),
                    std::move(comp_target)};
  return out;
}

}  // namespace volent
