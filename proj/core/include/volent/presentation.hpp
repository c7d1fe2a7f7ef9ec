#ifndef VOLENT_PRESENTATION_HPP
#define VOLENT_PRESENTATION_HPP

#include <string>
#include <vector>

#include "volent/word.hpp"

namespace volent {

/// A finite group presentation.  Relators are stored freely and cyclically
/// reduced; empty relators are rejected.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(std::vector<std::string> gens, std::vector<Word> rels);

  int rank() const { return static_cast<int>(generators.size()); }

  static Presentation free_group(int rank);
  /// Parses generator names plus "abAB"-style relator strings.
  static Presentation parse(const std::vector<std::string>& gens,
                            const std::vector<std::string>& relator_words);

  /// Genus-h orientable surface group <x1,y1,..,xh,yh | prod [xi,yi]>.
  static Presentation surface_group(int genus);
  /// <x1,y1,..,xh,yh,z | prod [xi,yi] z^d>, the one-relator group of the
  /// disk-with-handles attached to a circle with degree d.
  static Presentation attached_surface_group(int genus, int degree);

  std::string to_json_string() const;
  static Presentation from_json_string(const std::string& text);
};

}  // namespace volent

#endif
