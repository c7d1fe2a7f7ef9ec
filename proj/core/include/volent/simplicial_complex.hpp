#ifndef VOLENT_SIMPLICIAL_COMPLEX_HPP
#define VOLENT_SIMPLICIAL_COMPLEX_HPP

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace volent {

using VertexId = int;
using EdgeCell = std::array<VertexId, 2>;   // ascending
using TriCell = std::array<VertexId, 3>;    // ascending
using TetCell = std::array<VertexId, 4>;    // ascending

/// A finite simplicial complex of dimension <= 3.  Immutable after
/// construction; cells are stored with ascending vertex order and no
/// duplicates.  The default constructor path completes face closure;
/// `raw()` keeps the cells exactly as given so `validate()` can report
/// violations.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Sorts cell vertices, deduplicates, and adds all missing faces.
  SimplicialComplex(int n_vertices, std::vector<EdgeCell> edges,
                    std::vector<TriCell> triangles = {},
                    std::vector<TetCell> tetrahedra = {});

  /// Keeps the given cells as-is (apart from vertex sorting); may violate
  /// face closure.  For validation tests and file loading.
  static SimplicialComplex raw(int n_vertices, std::vector<EdgeCell> edges,
                               std::vector<TriCell> triangles = {},
                               std::vector<TetCell> tetrahedra = {});

  int vertex_count() const { return n_vertices_; }
  const std::vector<EdgeCell>& edges() const { return edges_; }
  const std::vector<TriCell>& triangles() const { return triangles_; }
  const std::vector<TetCell>& tetrahedra() const { return tetrahedra_; }

  int dimension() const;
  long long euler_characteristic() const;

  int edge_index(VertexId u, VertexId v) const;     // -1 if absent
  int triangle_index(VertexId a, VertexId b, VertexId c) const;
  int tetrahedron_index(const TetCell& t) const;

  /// Edge ids of a triangle's three sides, and triangle ids of a
  /// tetrahedron's four faces (throws if a face is missing).
  std::array<int, 3> triangle_edges(int tri) const;
  std::array<int, 4> tetrahedron_triangles(int tet) const;

  /// Neighbours in the 1-skeleton: (vertex, edge id) pairs.
  const std::vector<std::vector<std::pair<VertexId, int>>>& adjacency() const {
    return adjacency_;
  }

  bool connected() const;
  /// Component id per vertex (0-based, BFS order from vertex 0).
  std::vector<int> vertex_components() const;

  bool operator==(const SimplicialComplex& other) const = default;

 private:
  void build_index();

  int n_vertices_ = 0;
  std::vector<EdgeCell> edges_;
  std::vector<TriCell> triangles_;
  std::vector<TetCell> tetrahedra_;
  std::vector<std::vector<std::pair<VertexId, int>>> adjacency_;
};

using ComplexPtr = std::shared_ptr<const SimplicialComplex>;

struct ValidationReport {
  bool valid = true;
  bool connected = false;
  std::vector<std::string> violations;  // face closure, duplicates, bad edges
};

ValidationReport validate(const SimplicialComplex& complex);

/// A face-closed subset of a parent complex's cells.
class Subcomplex {
 public:
  /// Full subcomplex on a vertex subset: every parent cell whose vertices
  /// all lie in the subset.
  static Subcomplex full_on_vertices(ComplexPtr parent,
                                     const std::vector<VertexId>& vertices);
  /// Face closure of an arbitrary cell selection.
  static Subcomplex from_cells(ComplexPtr parent,
                               const std::vector<int>& edge_ids,
                               const std::vector<int>& triangle_ids,
                               const std::vector<int>& tetrahedron_ids = {},
                               const std::vector<VertexId>& extra_vertices = {});

  const ComplexPtr& parent() const { return parent_; }
  const std::vector<char>& vertex_mask() const { return vertex_in_; }
  const std::vector<char>& edge_mask() const { return edge_in_; }
  const std::vector<char>& triangle_mask() const { return tri_in_; }
  const std::vector<char>& tetrahedron_mask() const { return tet_in_; }

  std::vector<VertexId> vertices() const;
  std::size_t vertex_count() const;
  bool empty() const { return vertex_count() == 0; }

  bool connected() const;
  /// Splits into connected components (each again a full Subcomplex of the
  /// parent, restricted to this subcomplex's cells).
  std::vector<Subcomplex> components() const;

  /// Standalone copy of this subcomplex plus the vertex relabelling back to
  /// the parent (index = new id, value = parent id).
  std::pair<SimplicialComplex, std::vector<VertexId>> as_complex() const;

 private:
  ComplexPtr parent_;
  std::vector<char> vertex_in_, edge_in_, tri_in_, tet_in_;
};

}  // namespace volent

#endif
