#ifndef VOLENT_SUBDIVISION_HPP
#define VOLENT_SUBDIVISION_HPP

#include "volent/metric_complex.hpp"
#include "volent/simplicial_complex.hpp"
#include "volent/simplicial_map.hpp"

namespace volent {

/// A subdivision together with the provenance of every new vertex: the
/// parent cell (as a sorted vertex list) whose barycenter it is.  Original
/// vertices keep their ids and have singleton parent cells.
struct Subdivision {
  ComplexPtr complex;
  std::vector<std::vector<VertexId>> vertex_cell;

  VertexId vertex_for_cell(std::vector<VertexId> cell) const;
};

/// Full barycentric subdivision: one new vertex per cell, one d-simplex per
/// vertex ordering of each d-cell.
Subdivision barycentric_subdivide(const SimplicialComplex& complex);

/// Midpoint (4T/8T) subdivision: new vertices at edge midpoints only.
/// Triangles split into 4, tetrahedra into 4 corners plus an octahedron cut
/// along a fixed diagonal.
Subdivision midpoint_subdivide(const SimplicialComplex& complex);

/// Piecewise-flat metric induced on a subdivision: each new edge length is
/// measured inside the smallest parent cell containing both endpoints.
MetricComplex subdivide_metric(const MetricComplex& metric,
                               const Subdivision& subdivision);

/// The induced simplicial map between subdivisions: the barycenter of a
/// cell maps to the barycenter of its image cell.
SimplicialMap subdivide_map(const SimplicialMap& map, const Subdivision& source,
                            const Subdivision& target);

}  // namespace volent

#endif
