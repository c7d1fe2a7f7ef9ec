#ifndef VOLENT_TIETZE_HPP
#define VOLENT_TIETZE_HPP

#include <vector>

#include "volent/presentation.hpp"
#include "volent/word.hpp"

namespace volent {

/// Result of Tietze simplification.  gen_images[i] rewrites original
/// generator i as a word over the simplified presentation's generators, so
/// words over the input alphabet can be transported forward.
struct TietzeResult {
  Presentation presentation;
  std::vector<Word> gen_images;

  Word rewrite(const Word& w) const;
};

/// Greedy Tietze simplification: repeatedly eliminates generators that occur
/// exactly once in some relator (substituting their defining word
/// everywhere) and shortens relators against one another Dehn-style.
/// Deterministic; terminates since every elimination removes a generator
/// and every cross-simplification reduces total relator length.
TietzeResult tietze_simplify(const Presentation& p);

/// The simplification trajectory: intermediate presentations recorded after
/// each elimination once they are small enough to inspect, ending with the
/// fully simplified one.  Greedy elimination can overshoot (a presentation
/// may lose a recognizable structure when one more generator is removed),
/// so callers can walk the snapshots from the back.
std::vector<TietzeResult> tietze_snapshots(const Presentation& p,
                                           std::size_t keep = 24);

}  // namespace volent

#endif
