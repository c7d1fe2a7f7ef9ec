#ifndef VOLENT_METRIC_COMPLEX_HPP
#define VOLENT_METRIC_COMPLEX_HPP

#include <Eigen/Dense>
#include <vector>

#include "volent/simplicial_complex.hpp"

namespace volent {

/// A piecewise-flat metric: one positive length per edge, with each simplex
/// carrying the constant geometry determined by its edge lengths.
class MetricComplex {
 public:
  MetricComplex() = default;
  /// Throws unless every length is positive and every simplex is realizable
  /// (Gram eigenvalues >= -tolerance).
  MetricComplex(ComplexPtr complex, std::vector<double> edge_lengths);

  /// All edges length 1: the piecewise-flat metric h_X where every simplex
  /// is isometric to the standard one.
  static MetricComplex unit(ComplexPtr complex);

  const SimplicialComplex& complex() const { return *complex_; }
  const ComplexPtr& complex_ptr() const { return complex_; }
  const std::vector<double>& edge_lengths() const { return lengths_; }
  double edge_length(int edge_id) const { return lengths_.at(edge_id); }

  MetricComplex scaled(double factor) const;

  double min_edge_length() const;
  double max_edge_length() const;

  /// Gram matrix of the edge vectors based at the cell's first vertex:
  /// G_ij = (l_{0i}^2 + l_{0j}^2 - l_{ij}^2) / 2.
  Eigen::MatrixXd gram_of_edge(int edge_id) const;
  Eigen::MatrixXd gram_of_triangle(int tri_id) const;
  Eigen::MatrixXd gram_of_tetrahedron(int tet_id) const;

  /// sqrt(det G) / dim! with determinants below 1e-12 treated as zero.
  double simplex_volume(int dim, int cell_id) const;
  /// Sum of dim-cell volumes.
  double total_volume(int dim) const;

  /// Squared distance between two points of one simplex given in barycentric
  /// coordinates (each summing to 1):
  ///   |p-q|^2 = -1/2 sum_{ij} (l_i-m_i)(l_j-m_j) d(v_i,v_j)^2.
  double barycentric_distance2(const std::vector<VertexId>& cell,
                               const std::vector<double>& lambda,
                               const std::vector<double>& mu) const;

  /// Single-source shortest-path distances in the 1-skeleton.
  std::vector<double> dijkstra(VertexId source) const;

  /// Max over vertex pairs of the sub of ambient skeleton distance, plus
  /// half the longest ambient edge incident to the sub.  A certified upper
  /// bound for the diameter of the subcomplex as a subset of X.
  double ambient_diameter(const Subcomplex& sub) const;

  /// Diameter upper bound for the whole complex (all-pairs + slack).
  double diameter_upper_bound() const;

 private:
  Eigen::MatrixXd gram(const VertexId* verts, int k) const;
  void check_realizable() const;

  ComplexPtr complex_;
  std::vector<double> lengths_;
};

/// PSD tolerance used by realizability checks.
inline constexpr double kGramTolerance = 1e-9;
/// Determinants below this count as degenerate (volume zero).
inline constexpr double kDegenerateDet = 1e-12;

}  // namespace volent

#endif
