#include "volent/presentation.hpp"
#include <array>

#include <nlohmann/json.hpp>

#include "volent/errors.hpp"

namespace volent {

using nlohmann::json;

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels)
    : generators(std::move(gens)) {
  relators.reserve(rels.size());
  for (const Word& r : rels) {
    Word red = cyclic_reduce(r);
    if (red.empty()) throw invalid_input("empty relator after reduction");
    for (Letter x : red) {
      if (letter_gen(x) >= rank())
        throw invalid_input("relator uses unknown generator");
    }
    relators.push_back(std::move(red));
  }
}

Presentation Presentation::free_group(int rank) {
  std::vector<std::string> gens;
  for (int i = 0; i < rank; ++i) gens.push_back(std::string(1, char('a' + i)));
  return Presentation(std::move(gens), {});
}

Presentation Presentation::parse(const std::vector<std::string>& gens,
                                 const std::vector<std::string>& relator_words) {
  // Relator letters refer to generator names; names must be single
  // lowercase letters for the text form.
  std::array<int, 26> index;
  index.fill(-1);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].size() != 1 || gens[i][0] < 'a' || gens[i][0] > 'z')
      throw invalid_input("presentation text form needs single-letter "
                          "lowercase generator names, got: " + gens[i]);
    if (index[gens[i][0] - 'a'] >= 0)
      throw invalid_input("duplicate generator name: " + gens[i]);
    index[gens[i][0] - 'a'] = static_cast<int>(i);
  }
  std::vector<Word> rels;
  rels.reserve(relator_words.size());
  for (const auto& s : relator_words) {
    Word w;
    for (char c : s) {
      if (c == ' ') continue;
      bool inv = (c >= 'A' && c <= 'Z');
      char lower = inv ? static_cast<char>(c - 'A' + 'a') : c;
      if (lower < 'a' || lower > 'z' || index[lower - 'a'] < 0)
        throw invalid_input(std::string("unknown generator in relator: ") + c);
      w.push_back(make_letter(index[lower - 'a'], inv));
    }
    rels.push_back(std::move(w));
  }
  return Presentation(gens, std::move(rels));
}

Presentation Presentation::surface_group(int genus) {
  if (genus < 1) throw invalid_input("surface_group: genus must be >= 1");
  std::vector<std::string> gens;
  Word rel;
  for (int i = 0; i < genus; ++i) {
    gens.push_back("x" + std::to_string(i + 1));
    gens.push_back("y" + std::to_string(i + 1));
    Letter x = make_letter(2 * i, false), y = make_letter(2 * i + 1, false);
    rel.insert(rel.end(), {x, y, -x, -y});
  }
  return Presentation(std::move(gens), {rel});
}

Presentation Presentation::attached_surface_group(int genus, int degree) {
  if (genus < 1 || degree < 1)
    throw invalid_input("attached_surface_group: bad parameters");
  Presentation surf = surface_group(genus);
  std::vector<std::string> gens = surf.generators;
  gens.push_back("z");
  Word rel = surf.relators[0];
  Letter z = make_letter(2 * genus, false);
  for (int i = 0; i < degree; ++i) rel.push_back(z);
  return Presentation(std::move(gens), {rel});
}

std::string Presentation::to_json_string() const {
  json j;
  j["generators"] = generators;
  std::vector<std::string> rels;
  for (const Word& r : relators) rels.push_back(format_word(r));
  j["relators"] = rels;
  return j.dump(2);
}

Presentation Presentation::from_json_string(const std::string& text) {
  json j = json::parse(text);
  if (!j.contains("generators") || !j["generators"].is_array())
    throw invalid_input("presentation JSON: missing generators array");
  std::vector<std::string> gens = j["generators"].get<std::vector<std::string>>();
  std::vector<std::string> rels;
  if (j.contains("relators"))
    rels = j["relators"].get<std::vector<std::string>>();
  return Presentation::parse(gens, rels);
}

}  // namespace volent
