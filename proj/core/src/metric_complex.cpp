#include "volent/metric_complex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>

#include "volent/errors.hpp"

namespace volent {

MetricComplex::MetricComplex(ComplexPtr complex, std::vector<double> edge_lengths)
    : complex_(std::move(complex)), lengths_(std::move(edge_lengths)) {
  if (lengths_.size() != complex_->edges().size())
    throw invalid_input("metric: one length per edge required");
  for (double l : lengths_)
    if (!(l > 0)) throw invalid_input("metric: edge lengths must be positive");
  check_realizable();
}

MetricComplex MetricComplex::unit(ComplexPtr complex) {
  std::vector<double> lengths(complex->edges().size(), 1.0);
  return MetricComplex(std::move(complex), std::move(lengths));
}

MetricComplex MetricComplex::scaled(double factor) const {
  if (!(factor > 0)) throw invalid_input("scale factor must be positive");
  std::vector<double> lengths = lengths_;
  for (double& l : lengths) l *= factor;
  return MetricComplex(complex_, std::move(lengths));
}

double MetricComplex::min_edge_length() const {
  return lengths_.empty() ? 0.0
                          : *std::min_element(lengths_.begin(), lengths_.end());
}

double MetricComplex::max_edge_length() const {
  return lengths_.empty() ? 0.0
                          : *std::max_element(lengths_.begin(), lengths_.end());
}

Eigen::MatrixXd MetricComplex::gram(const VertexId* verts, int k) const {
  // Edge vectors e_i = v_i - v_0 for i = 1..k.
  Eigen::MatrixXd g(k, k);
  auto len2 = [this](VertexId u, VertexId v) {
    int e = complex_->edge_index(u, v);
    if (e < 0) throw invalid_input("gram: cell edge not present");
    double l = lengths_[e];
    return l * l;
  };
  for (int i = 1; i <= k; ++i) {
    for (int j = i; j <= k; ++j) {
      double val;
      if (i == j) {
        val = len2(verts[0], verts[i]);
      } else {
        val = 0.5 * (len2(verts[0], verts[i]) + len2(verts[0], verts[j]) -
                     len2(verts[i], verts[j]));
      }
      g(i - 1, j - 1) = val;
      g(j - 1, i - 1) = val;
    }
  }
  return g;
}

Eigen::MatrixXd MetricComplex::gram_of_edge(int edge_id) const {
  const EdgeCell& e = complex_->edges().at(edge_id);
  return gram(e.data(), 1);
}

Eigen::MatrixXd MetricComplex::gram_of_triangle(int tri_id) const {
  const TriCell& t = complex_->triangles().at(tri_id);
  return gram(t.data(), 2);
}

Eigen::MatrixXd MetricComplex::gram_of_tetrahedron(int tet_id) const {
  const TetCell& t = complex_->tetrahedra().at(tet_id);
  return gram(t.data(), 3);
}

void MetricComplex::check_realizable() const {
  auto check = [](const Eigen::MatrixXd& g, const char* what) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(g);
    if (eig.eigenvalues().minCoeff() < -kGramTolerance)
      throw Error(ErrorCode::NonRealizable,
                  std::string("simplex not realizable: negative Gram "
                              "eigenvalue in ") +
                      what);
  };
  for (std::size_t t = 0; t < complex_->triangles().size(); ++t)
    check(gram_of_triangle(static_cast<int>(t)), "triangle");
  for (std::size_t t = 0; t < complex_->tetrahedra().size(); ++t)
    check(gram_of_tetrahedron(static_cast<int>(t)), "tetrahedron");
}

double MetricComplex::simplex_volume(int dim, int cell_id) const {
  double det;
  switch (dim) {
    case 1:
      return lengths_.at(cell_id);
    case 2:
      det = gram_of_triangle(cell_id).determinant();
      return det < kDegenerateDet ? 0.0 : std::sqrt(det) / 2.0;
    case 3:
      det = gram_of_tetrahedron(cell_id).determinant();
      return det < kDegenerateDet ? 0.0 : std::sqrt(det) / 6.0;
    default:
      throw invalid_input("simplex_volume: dim must be 1..3");
  }
}

double MetricComplex::total_volume(int dim) const {
  if (dim > complex_->dimension())
    throw invalid_input("total_volume: dim exceeds complex dimension");
  if (dim == 0) return static_cast<double>(complex_->vertex_count());
  std::size_t cells = dim == 1   ? complex_->edges().size()
                      : dim == 2 ? complex_->triangles().size()
                                 : complex_->tetrahedra().size();
  double vol = 0;
  for (std::size_t i = 0; i < cells; ++i)
    vol += simplex_volume(dim, static_cast<int>(i));
  return vol;
}

double MetricComplex::barycentric_distance2(const std::vector<VertexId>& cell,
                                            const std::vector<double>& lambda,
                                            const std::vector<double>& mu) const {
  const std::size_t n = cell.size();
  if (lambda.size() != n || mu.size() != n)
    throw invalid_input("barycentric coordinates size mismatch");
  double d2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      int e = complex_->edge_index(cell[i], cell[j]);
      if (e < 0) throw invalid_input("barycentric_distance2: missing edge");
      double l = lengths_[e];
      d2 += -(lambda[i] - mu[i]) * (lambda[j] - mu[j]) * l * l;
    }
  }
  return std::max(0.0, d2);
}

std::vector<double> MetricComplex::dijkstra(VertexId source) const {
  const auto& adj = complex_->adjacency();
  std::vector<double> dist(complex_->vertex_count(),
                           std::numeric_limits<double>::infinity());
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist.at(source) = 0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, v] = pq.top();
    pq.pop();
    if (d > dist[v]) continue;
    for (auto [w, e] : adj[v]) {
      double nd = d + lengths_[e];
      if (nd < dist[w]) {
        dist[w] = nd;
        pq.push({nd, w});
      }
    }
  }
  return dist;
}

double MetricComplex::ambient_diameter(const Subcomplex& sub) const {
  if (sub.parent().get() != complex_.get())
    throw invalid_input("ambient_diameter: subcomplex of a different complex");
  std::vector<VertexId> verts = sub.vertices();
  if (verts.empty()) throw invalid_input("ambient_diameter: empty subcomplex");

  double max_pair = 0;
  for (VertexId v : verts) {
    std::vector<double> dist = dijkstra(v);
    for (VertexId w : verts) max_pair = std::max(max_pair, dist[w]);
  }
  double slack = 0;
  const auto& edges = complex_->edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (sub.vertex_mask()[edges[e][0]] || sub.vertex_mask()[edges[e][1]])
      slack = std::max(slack, lengths_[e]);
  }
  return max_pair + slack / 2.0;
}

double MetricComplex::diameter_upper_bound() const {
  std::vector<VertexId> all(complex_->vertex_count());
  for (int v = 0; v < complex_->vertex_count(); ++v) all[v] = v;
  Subcomplex whole = Subcomplex::full_on_vertices(complex_, all);
  return ambient_diameter(whole);
}

}  // namespace volent
