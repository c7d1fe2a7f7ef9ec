#include "volent/subdivision.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "volent/errors.hpp"

namespace volent {

namespace {

struct Builder {
  std::map<std::vector<VertexId>, VertexId> ids;
  std::vector<std::vector<VertexId>> vertex_cell;

  explicit Builder(int n_old) {
    for (int v = 0; v < n_old; ++v) {
      ids[{v}] = v;
      vertex_cell.push_back({v});
    }
  }

  VertexId at(std::vector<VertexId> cell) {
    std::sort(cell.begin(), cell.end());
    auto it = ids.find(cell);
    if (it != ids.end()) return it->second;
    VertexId id = static_cast<VertexId>(vertex_cell.size());
    ids[cell] = id;
    vertex_cell.push_back(cell);
    return id;
  }
};

}  // namespace

VertexId Subdivision::vertex_for_cell(std::vector<VertexId> cell) const {
  std::sort(cell.begin(), cell.end());
  for (std::size_t v = 0; v < vertex_cell.size(); ++v)
    if (vertex_cell[v] == cell) return static_cast<VertexId>(v);
  throw invalid_input("subdivision: no vertex for the given cell");
}

Subdivision barycentric_subdivide(const SimplicialComplex& X) {
  Builder b(X.vertex_count());
  std::vector<EdgeCell> edges;
  std::vector<TriCell> tris;
  std::vector<TetCell> tets;

  for (const EdgeCell& e : X.edges()) {
    VertexId m = b.at({e[0], e[1]});
    edges.push_back({e[0], m});
    edges.push_back({e[1], m});
  }
  for (const TriCell& t : X.triangles()) {
    // One triangle per vertex ordering: chains v < edge < triangle.
    TriCell p = t;
    std::sort(p.begin(), p.end());
    do {
      VertexId v0 = p[0];
      VertexId v1 = b.at({p[0], p[1]});
      VertexId v2 = b.at({p[0], p[1], p[2]});
      tris.push_back({v0, v1, v2});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  for (const TetCell& t : X.tetrahedra()) {
    TetCell p = t;
    std::sort(p.begin(), p.end());
    do {
      VertexId v0 = p[0];
      VertexId v1 = b.at({p[0], p[1]});
      VertexId v2 = b.at({p[0], p[1], p[2]});
      VertexId v3 = b.at({p[0], p[1], p[2], p[3]});
      tets.push_back({v0, v1, v2, v3});
    } while (std::next_permutation(p.begin(), p.end()));
  }

  Subdivision out;
  out.complex = std::make_shared<SimplicialComplex>(
      static_cast<int>(b.vertex_cell.size()), std::move(edges), std::move(tris),
      std::move(tets));
  out.vertex_cell = std::move(b.vertex_cell);
  return out;
}

Subdivision midpoint_subdivide(const SimplicialComplex& X) {
  Builder b(X.vertex_count());
  std::vector<EdgeCell> edges;
  std::vector<TriCell> tris;
  std::vector<TetCell> tets;

  for (const EdgeCell& e : X.edges()) {
    VertexId m = b.at({e[0], e[1]});
    edges.push_back({e[0], m});
    edges.push_back({e[1], m});
  }
  for (const TriCell& t : X.triangles()) {
    VertexId mab = b.at({t[0], t[1]});
    VertexId mac = b.at({t[0], t[2]});
    VertexId mbc = b.at({t[1], t[2]});
    tris.push_back({t[0], mab, mac});
    tris.push_back({t[1], mab, mbc});
    tris.push_back({t[2], mac, mbc});
    tris.push_back({mab, mac, mbc});
  }
  for (const TetCell& t : X.tetrahedra()) {
    VertexId mab = b.at({t[0], t[1]});
    VertexId mac = b.at({t[0], t[2]});
    VertexId mad = b.at({t[0], t[3]});
    VertexId mbc = b.at({t[1], t[2]});
    VertexId mbd = b.at({t[1], t[3]});
    VertexId mcd = b.at({t[2], t[3]});
    tets.push_back({t[0], mab, mac, mad});
    tets.push_back({t[1], mab, mbc, mbd});
    tets.push_back({t[2], mac, mbc, mcd});
    tets.push_back({t[3], mad, mbd, mcd});
    // central octahedron around the (mab, mcd) diagonal
    tets.push_back({mab, mcd, mac, mad});
    tets.push_back({mab, mcd, mad, mbd});
    tets.push_back({mab, mcd, mbd, mbc});
    tets.push_back({mab, mcd, mbc, mac});
  }

  Subdivision out;
  out.complex = std::make_shared<SimplicialComplex>(
      static_cast<int>(b.vertex_cell.size()), std::move(edges), std::move(tris),
      std::move(tets));
  out.vertex_cell = std::move(b.vertex_cell);
  return out;
}

MetricComplex subdivide_metric(const MetricComplex& metric,
                               const Subdivision& sub) {
  const SimplicialComplex& fine = *sub.complex;
  std::vector<double> lengths(fine.edges().size());
  for (std::size_t e = 0; e < fine.edges().size(); ++e) {
    const std::vector<VertexId>& cu = sub.vertex_cell[fine.edges()[e][0]];
    const std::vector<VertexId>& cv = sub.vertex_cell[fine.edges()[e][1]];
    std::vector<VertexId> cell = cu;
    cell.insert(cell.end(), cv.begin(), cv.end());
    std::sort(cell.begin(), cell.end());
    cell.erase(std::unique(cell.begin(), cell.end()), cell.end());
    std::vector<double> lambda(cell.size(), 0), mu(cell.size(), 0);
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (std::find(cu.begin(), cu.end(), cell[i]) != cu.end())
        lambda[i] = 1.0 / static_cast<double>(cu.size());
      if (std::find(cv.begin(), cv.end(), cell[i]) != cv.end())
        mu[i] = 1.0 / static_cast<double>(cv.size());
    }
    lengths[e] = std::sqrt(metric.barycentric_distance2(cell, lambda, mu));
  }
  return MetricComplex(sub.complex, std::move(lengths));
}

SimplicialMap subdivide_map(const SimplicialMap& map, const Subdivision& source,
                            const Subdivision& target) {
  std::vector<VertexId> image(source.complex->vertex_count());
  for (int v = 0; v < source.complex->vertex_count(); ++v) {
    std::vector<VertexId> span;
    for (VertexId pv : source.vertex_cell[v]) span.push_back(map.apply(pv));
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    image[v] = target.vertex_for_cell(span);
  }
  return SimplicialMap(source.complex, target.complex, std::move(image));
}

}  // namespace volent
