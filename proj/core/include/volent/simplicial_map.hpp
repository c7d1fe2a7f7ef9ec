#ifndef VOLENT_SIMPLICIAL_MAP_HPP
#define VOLENT_SIMPLICIAL_MAP_HPP

#include <Eigen/Dense>

#include "volent/metric_complex.hpp"
#include "volent/simplicial_complex.hpp"

namespace volent {

/// A simplicial map determined by its vertex assignment.  Construction
/// verifies that every cell's image spans a cell of the target (possibly a
/// lower-dimensional one).
class SimplicialMap {
 public:
  SimplicialMap(ComplexPtr source, ComplexPtr target,
                std::vector<VertexId> vertex_image);

  static SimplicialMap identity(ComplexPtr complex);

  const SimplicialComplex& source() const { return *source_; }
  const SimplicialComplex& target() const { return *target_; }
  const ComplexPtr& source_ptr() const { return source_; }
  const ComplexPtr& target_ptr() const { return target_; }
  VertexId apply(VertexId v) const { return image_.at(v); }
  const std::vector<VertexId>& vertex_image() const { return image_; }

  /// An edge is long when it maps onto an edge of the target, short when it
  /// collapses to a vertex.
  bool edge_is_long(int edge_id) const;

  /// Full subcomplex of the source spanned by the preimage vertices of p.
  /// Throws Error(EmptyFiber) when no vertex maps to p.
  Subcomplex fiber(VertexId p) const;

  bool surjective_on_vertices() const;

 private:
  ComplexPtr source_;
  ComplexPtr target_;
  std::vector<VertexId> image_;
};

/// Gram form on a source simplex of the pullback of the target metric:
/// the Gram matrix of the image vertex configuration.  Degenerate exactly
/// on simplices whose image has lower dimension.
Eigen::MatrixXd pullback_gram(const SimplicialMap& map,
                              const MetricComplex& target_metric, int dim,
                              int cell_id);

struct FiberQuotient {
  ComplexPtr quotient;       // P-bar
  SimplicialMap projection;  // X -> P-bar, fibers connected
  /// target vertex of the original map for each quotient vertex
  std::vector<VertexId> quotient_to_target;
};

/// Collapses each connected fiber component to one target vertex, giving a
/// surjective simplicial map whose fibers agree with the connected
/// components of the original fibers.  dim(P-bar) <= dim(P).
FiberQuotient connected_fiber_quotient(const SimplicialMap& map);

}  // namespace volent

#endif
