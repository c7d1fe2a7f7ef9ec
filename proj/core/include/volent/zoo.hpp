#ifndef VOLENT_ZOO_HPP
#define VOLENT_ZOO_HPP

#include <map>
#include <optional>
#include <string>

#include "volent/homology.hpp"
#include "volent/metric_complex.hpp"
#include "volent/simplicial_map.hpp"

namespace volent {

/// Canonical triangulations of the example complexes.  The builders fix the
/// cell structure (and hence edge counts) so bound checks are reproducible.
struct ZooSpec {
  enum class Family {
    Torus,             // n x n grid torus
    Surface,           // closed orientable genus-h surface
    WedgeCircles,      // k circles of 4*subdivision edges sharing a vertex
    ProductWithCircle, // base x S^1, prism-triangulated
    AttachedSurface,   // X(h,d): genus-h surface with a disk removed, boundary
                       // attached to a circle with degree d
    Bouquet,           // wedge of parts at their basepoints
    CyclicCover        // the d-sheeted cyclic cover of X(h,d)
  };

  Family family = Family::Torus;
  int n = 3;            // torus grid size
  int genus = 2;        // Surface / AttachedSurface / CyclicCover
  int degree = 3;       // AttachedSurface / CyclicCover
  int count = 2;        // WedgeCircles
  int subdivision = 1;  // WedgeCircles / ProductWithCircle circle subdivision
  int refinement = 0;   // extra midpoint subdivisions after building
  std::vector<ZooSpec> parts;  // Bouquet members; ProductWithCircle base

  static ZooSpec torus(int n);
  static ZooSpec surface(int genus, int refinement = 0);
  static ZooSpec wedge_circles(int count, int subdivision = 1);
  static ZooSpec product_with_circle(ZooSpec base, int subdivision = 1);
  static ZooSpec attached_surface(int genus, int degree);
  static ZooSpec bouquet(std::vector<ZooSpec> parts);
  static ZooSpec cyclic_cover(int genus, int degree);

  std::string family_name() const;
  static ZooSpec parse(const std::string& family,
                       const std::vector<int>& params);
};

struct ZooBuild {
  ZooSpec spec;
  ComplexPtr complex;
  VertexId basepoint = 0;
  /// Canonical metric: unit edges except WedgeCircles, where each circle
  /// has total length 1.
  std::vector<double> edge_lengths;
  /// Named simplicial maps (product projections "base", "circle").
  std::map<std::string, SimplicialMap> maps;
  /// CyclicCover: vertex map of the covering onto the base X(h,d).
  std::vector<VertexId> covering_image;
  ComplexPtr covering_base;
  /// CyclicCover: the pi1-embedded genus-2h surface from two sheets.
  std::optional<Subcomplex> embedded_surface;

  MetricComplex metric() const;
};

/// Throws Error(InvalidInput) on out-of-range parameters (torus needs
/// n >= 3, surfaces genus >= 1, attached surfaces d >= 3, ...).
ZooBuild build(const ZooSpec& spec);

struct ZooCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ZooVerifyReport {
  bool pass = true;
  std::vector<ZooCheck> checks;
  std::string backend;  // detected backend description or "unsupported"
  std::string to_json() const;
};

/// Euler characteristic, connectivity, homology, and (where applicable)
/// presentation abelianization and covering checks.
ZooVerifyReport verify(const ZooBuild& build);

}  // namespace volent

#endif
