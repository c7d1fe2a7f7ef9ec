#ifndef VOLENT_HOMOLOGY_HPP
#define VOLENT_HOMOLOGY_HPP

#include <string>
#include <vector>

#include "volent/simplicial_complex.hpp"

namespace volent {

/// A finitely generated abelian group: Z^rank + sum Z/torsion[i].
struct AbelianGroup {
  int rank = 0;
  std::vector<long long> torsion;  // invariant factors > 1, ascending

  bool trivial() const { return rank == 0 && torsion.empty(); }
  bool operator==(const AbelianGroup&) const = default;
  std::string describe() const;
};

/// Signed boundary matrix of dim-cells (rows: (dim-1)-cells, columns:
/// dim-cells, entries from the alternating face sum on ascending vertex
/// order).
std::vector<std::vector<long long>> boundary_matrix(
    const SimplicialComplex& complex, int dim);

/// Invariant factors (diagonal of the Smith normal form, nonzero entries).
std::vector<long long> smith_invariant_factors(
    std::vector<std::vector<long long>> matrix);

/// Integral simplicial homology in dimension dim (0..3).
AbelianGroup homology(const SimplicialComplex& complex, int dim);

/// Abelianization of a presentation via the Smith normal form of the
/// relator exponent matrix.
struct Presentation;  // fwd (include presentation.hpp for the definition)
AbelianGroup abelianization(const std::vector<std::vector<long long>>& exponent_rows,
                            int n_generators);

}  // namespace volent

#endif
