#ifndef VOLENT_COVERS_HPP
#define VOLENT_COVERS_HPP

#include <optional>
#include <string>

#include "volent/metric_complex.hpp"
#include "volent/pi1.hpp"
#include "volent/simplicial_map.hpp"

namespace volent {

/// An open cover modelled combinatorially: every element is a set of cells
/// (an open star union, not face-closed).  A cell sigma lies in the open
/// star of v iff v is a vertex of sigma, so intersections and multiplicity
/// are decided on shared cells; the face closure is used when the element
/// is measured (pi1, diameter).
struct CoverElement {
  std::string label;
  std::vector<char> vertex_in, edge_in, tri_in, tet_in;  // support masks

  Subcomplex closure(const ComplexPtr& parent) const;
  bool intersects(const CoverElement& other) const;
};

struct Cover {
  ComplexPtr complex;
  std::vector<CoverElement> elements;

  /// max over cells of the number of elements containing that cell
  int multiplicity() const;
  /// every cell covered, every element connected
  void validate() const;
};

/// One element per vertex: the open star (all cells containing the vertex).
/// Multiplicity is dim(P) + 1.
Cover star_cover(const ComplexPtr& complex);

/// Connected components of the preimages of the target cover's elements.
/// Never increases multiplicity.
Cover pullback_cover(const SimplicialMap& map, const Cover& target_cover);

/// Nerve: one vertex per element, a k-simplex whenever k+1 elements share a
/// cell.  dim(nerve) = multiplicity - 1.  Throws Error(DimensionTooHigh)
/// when the multiplicity exceeds 4 (cells are capped at dimension 3).
ComplexPtr nerve(const Cover& cover);

struct WidthEstimate {
  double value = 0;
  VertexId witness_target = -1;  // target vertex of the widest fiber
  int witness_component = 0;
  int subdivisions = 1;
  std::string kind = "upper_bound";
};

/// Upper bound for the Urysohn width UW_{m-1}: max ambient fiber-component
/// diameter after `subdivisions` barycentric subdivisions of source and
/// target.  Requires dim(P) <= dim(X) - 1.
WidthEstimate width_upper_bound(const MetricComplex& metric,
                                const SimplicialMap& map, int subdivisions = 1);

enum class CoverVerdict { CollapsingViaCover, ExponentialWitness, Undetermined };

struct CoverGrowthReport {
  std::vector<GrowthVerdict> element_verdicts;
  CoverVerdict verdict = CoverVerdict::Undetermined;
  int multiplicity = 0;
  int witness = -1;          // element index with an exponential verdict
  double witness_bound = 0;  // its entropy lower bound (candidate h)
};

/// Tags each element with the growth verdict of i_*[pi1(U)] and combines:
/// collapsing-via-cover iff all polynomial and multiplicity <= dim(X).
CoverGrowthReport cover_growth_tagging(const Cover& cover,
                                       const ComplexBackend& backend,
                                       const ClassifyOptions& options = {});

/// JSON (de)serialization: a list of elements, each with cell-id lists.
std::string cover_to_json(const Cover& cover);
Cover cover_from_json(const ComplexPtr& complex, const std::string& text);

}  // namespace volent

#endif
