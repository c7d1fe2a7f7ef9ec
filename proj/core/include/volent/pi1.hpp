#ifndef VOLENT_PI1_HPP
#define VOLENT_PI1_HPP

#include "volent/backend.hpp"
#include "volent/presentation.hpp"
#include "volent/simplicial_complex.hpp"

namespace volent {

/// Spanning-tree presentation of the fundamental group: one generator per
/// non-tree edge, one relator per triangle boundary.
struct Pi1Data {
  Presentation presentation;
  VertexId basepoint = 0;
  /// generator index per edge, -1 for tree edges; the positive letter is
  /// the crossing from the lower vertex id to the higher one.
  std::vector<int> edge_generator;
  /// BFS tree: parent vertex / connecting edge id (-1 at the basepoint).
  std::vector<VertexId> tree_parent;
  std::vector<int> tree_edge;

  /// Word (over the raw generators) of a directed edge crossing.
  Word crossing_word(int edge_id, bool forward) const;
};

/// Throws Error(Disconnected) when the complex is not connected.
Pi1Data pi1_presentation(const ComplexPtr& complex, VertexId basepoint);

/// pi1 data plus the detected normal-form backend, with every directed edge
/// crossing rewritten into the backend alphabet.
struct ComplexBackend {
  ComplexPtr complex;
  Pi1Data pi1;
  DetectedBackend detected;
  /// [2*edge]: forward crossing word, [2*edge+1]: backward.
  std::vector<Word> edge_words;

  const Backend& backend() const { return *detected.backend; }
  const Word& edge_word(int edge_id, bool forward) const {
    return edge_words[2 * edge_id + (forward ? 0 : 1)];
  }
};

/// Builds pi1 at the basepoint and auto-detects a backend.  Throws
/// Error(Unsupported) when no variant canonicalizes the word problem.
ComplexBackend make_complex_backend(const ComplexPtr& complex,
                                    VertexId basepoint);

/// Generators of the image subgroup i_*[pi1(sub)] <= pi1(X): one word per
/// non-tree edge of the subcomplex, closed through a spanning tree of the
/// subcomplex (conjugation by the connecting arc is dropped; growth
/// verdicts are conjugation-invariant).
std::vector<Word> subgroup_of_subcomplex(const ComplexBackend& backend,
                                         const Subcomplex& sub,
                                         VertexId sub_basepoint = -1);

}  // namespace volent

#endif
