#ifndef VOLENT_STALLINGS_HPP
#define VOLENT_STALLINGS_HPP

#include <vector>

#include "volent/word.hpp"

namespace volent {

/// Folded subgroup graph of a finitely generated subgroup of a free group.
/// Built by wedging loops for each generator at a base vertex and folding
/// until no vertex has two equally-labelled outgoing edges.
class StallingsGraph {
 public:
  StallingsGraph(int ambient_rank, const std::vector<Word>& generators);

  /// First Betti number of the core graph: the rank of the subgroup.
  int rank() const { return rank_; }

  /// True iff the word lies in the subgroup (path exists and closes up).
  bool contains(const Word& w) const;

  int vertex_count() const { return static_cast<int>(live_.size()); }

 private:
  int ambient_rank_;
  int rank_ = 0;
  int base_ = 0;
  // transitions_[v][letter_slot] = target vertex or -1
  std::vector<std::vector<int>> transitions_;
  std::vector<int> live_;  // live vertex ids after folding
  int slot(Letter x) const { return 2 * letter_gen(x) + (x < 0 ? 1 : 0); }
};

}  // namespace volent

#endif
