#ifndef VOLENT_SMALL_CANCELLATION_HPP
#define VOLENT_SMALL_CANCELLATION_HPP

#include <vector>

#include "volent/presentation.hpp"
#include "volent/word.hpp"

namespace volent {

struct PieceReport {
  bool passes = true;
  double max_ratio = 0.0;  // max piece length / min relator length over pairs
  int max_piece_length = 0;
};

/// Enumerates all pieces (common prefixes of distinct words in the
/// symmetrized relator set) and checks the metric condition C'(lambda).
PieceReport small_cancellation_check(const Presentation& p,
                                     double lambda = 1.0 / 6.0);

/// Rewriting tables for a fixed C'(1/6) presentation.  All methods are pure;
/// the tables are immutable after construction.
class DehnRewriter {
 public:
  /// Throws Error(NotSmallCancellation) unless the presentation passes
  /// C'(1/6) (a free presentation passes vacuously).
  explicit DehnRewriter(const Presentation& p);

  /// Greedy Dehn reduction: repeatedly replaces any subword that is more
  /// than half of a cyclic relator conjugate by the inverse of the shorter
  /// complement, freely reducing in between.  Returns the empty word iff the
  /// input represents the identity (Greendlinger).
  Word dehn_reduce(const Word& w) const;

  bool is_trivial(const Word& w) const { return dehn_reduce(w).empty(); }
  bool equal(const Word& u, const Word& v) const {
    return is_trivial(concat(u, inverse(v)));
  }

  /// Canonical representative: the shortlex-least word in the closure of w
  /// under relator rewrites that never exceed the shortest known length plus
  /// `slack`.  Half-relator swaps make the closure catch equal-length
  /// representatives that plain Dehn reduction cannot identify.
  Word normal_form(const Word& w, int slack = 0) const;

  const Presentation& presentation() const { return presentation_; }

 private:
  struct Rotation {
    Word word;      // full cyclic conjugate of a relator or inverse
    int half;       // ceil(|word| / 2)
  };

  // longest common prefix of rot.word and w[i..]
  static int match_length(const Word& w, std::size_t i, const Word& rot);

  Presentation presentation_;
  std::vector<Rotation> rotations_;
  // rotations_by_first_[letter index] -> indices into rotations_
  std::vector<std::vector<int>> rotations_by_first_;
  int letter_index(Letter x) const;
};

}  // namespace volent

#endif
