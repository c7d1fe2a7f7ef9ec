#include "volent/tietze.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "volent/errors.hpp"

namespace volent {

namespace {

// Substitute generator `gen` by `image` (a word over the same alphabet) in w.
Word substitute(const Word& w, int gen, const Word& image) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (letter_gen(x) != gen) {
      out.push_back(x);
    } else if (x > 0) {
      out.insert(out.end(), image.begin(), image.end());
    } else {
      Word inv = inverse(image);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

// Canonical representative of the cyclic word class of w and its inverse,
// used to drop duplicate relators.
Word cyclic_canonical(const Word& w) {
  Word best;
  bool first = true;
  for (bool use_inv : {false, true}) {
    Word b = use_inv ? inverse(w) : w;
    for (std::size_t i = 0; i < b.size(); ++i) {
      Word rot(b.begin() + i, b.end());
      rot.insert(rot.end(), b.begin(), b.begin() + i);
      if (first || shortlex_less(rot, best)) {
        best = rot;
        first = false;
      }
    }
  }
  return best;
}

struct Simplifier {
  std::vector<Word> relators;   // over original generator indices
  std::vector<Word> images;     // original gen -> word over live gens
  std::vector<bool> live;
  int n;

  explicit Simplifier(const Presentation& p)
      : relators(p.relators), n(p.rank()) {
    live.assign(n, true);
    images.resize(n);
    for (int i = 0; i < n; ++i) images[i] = {make_letter(i, false)};
  }

  void clean_relators() {
    std::set<Word> seen;
    std::vector<Word> out;
    for (Word& r : relators) {
      Word c = cyclic_reduce(r);
      if (c.empty()) continue;
      Word key = cyclic_canonical(c);
      if (seen.insert(key).second) out.push_back(std::move(c));
    }
    relators = std::move(out);
  }

  // Eliminate generator gen using relator index ri where it occurs once.
  void eliminate(std::size_t ri, int gen) {
    Word r = relators[ri];
    std::size_t pos = 0;
    for (; pos < r.size(); ++pos)
      if (letter_gen(r[pos]) == gen) break;
    // Rotate so the occurrence is first: r = x^e t, hence x^e = t^{-1}.
    Word rot(r.begin() + pos, r.end());
    rot.insert(rot.end(), r.begin(), r.begin() + pos);
    Word tail(rot.begin() + 1, rot.end());
    Word image = inverse(tail);
    if (rot[0] < 0) image = tail;  // x^{-1} t = e  =>  x = t

    relators.erase(relators.begin() + ri);
    for (Word& s : relators) s = substitute(s, gen, image);
    for (Word& s : images) s = substitute(s, gen, image);
    live[gen] = false;
  }

  // Returns (relator index, generator) for the cheapest elimination, or
  // nullopt encoded as ri == SIZE_MAX.
  std::pair<std::size_t, int> find_elimination() const {
    std::vector<long> occurrences(n, 0);
    for (const Word& s : relators)
      for (Letter x : s) occurrences[letter_gen(x)]++;

    std::size_t best_ri = SIZE_MAX;
    int best_gen = -1;
    long best_cost = 0;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
      const Word& r = relators[ri];
      std::map<int, int> count;
      for (Letter x : r) count[letter_gen(x)]++;
      for (auto [gen, c] : count) {
        if (c != 1) continue;
        // growth if eliminated: each other occurrence becomes |r|-1 letters
        long cost =
            (static_cast<long>(r.size()) - 1) * (occurrences[gen] - 1);
        if (best_ri == SIZE_MAX || cost < best_cost ||
            (cost == best_cost && r.size() < relators[best_ri].size())) {
          best_ri = ri;
          best_gen = gen;
          best_cost = cost;
        }
      }
    }
    return {best_ri, best_gen};
  }

  // Dehn-style cross simplification: shorten a relator that shares more
  // than half of another relator's cyclic conjugate.
  bool cross_simplify() {
    bool any = false;
    for (std::size_t i = 0; i < relators.size(); ++i) {
      for (std::size_t j = 0; j < relators.size(); ++j) {
        if (i == j) continue;
        const Word& rj = relators[j];
        if (rj.size() >= 2 * relators[i].size()) continue;
        bool improved = true;
        while (improved) {
          improved = false;
          Word ri_cyc = relators[i];
          for (std::size_t rot_i = 0;
               rot_i < ri_cyc.size() && !improved; ++rot_i) {
            Word ri(ri_cyc.begin() + rot_i, ri_cyc.end());
            ri.insert(ri.end(), ri_cyc.begin(), ri_cyc.begin() + rot_i);
            for (bool use_inv : {false, true}) {
              Word s = use_inv ? inverse(rj) : rj;
              for (std::size_t rot_j = 0; rot_j < s.size(); ++rot_j) {
                Word rho(s.begin() + rot_j, s.end());
                rho.insert(rho.end(), s.begin(), s.begin() + rot_j);
                std::size_t k = 0;
                while (k < ri.size() && k < rho.size() && ri[k] == rho[k]) ++k;
                if (2 * k > rho.size()) {
                  Word repl = inverse(Word(rho.begin() + k, rho.end()));
                  Word next = repl;
                  next.insert(next.end(), ri.begin() + k, ri.end());
                  next = cyclic_reduce(next);
                  if (next.size() < relators[i].size()) {
                    relators[i] = next;
                    improved = true;
                    any = true;
                    break;
                  }
                }
              }
              if (improved) break;
            }
          }
          if (relators[i].empty()) break;
        }
      }
    }
    return any;
  }

  // Snapshot hook: called after every cleanup while the presentation is
  // small enough to be worth recording.
  std::function<void(const Simplifier&)> on_step;

  void step_done() {
    if (!on_step) return;
    std::size_t total = 0;
    for (const Word& r : relators) total += r.size();
    if (relators.size() <= 40 && total <= 600) on_step(*this);
  }

  void run() {
    clean_relators();
    step_done();
    bool progress = true;
    while (progress) {
      progress = false;
      auto [ri, gen] = find_elimination();
      if (ri != SIZE_MAX) {
        eliminate(ri, gen);
        clean_relators();
        step_done();
        progress = true;
        continue;
      }
      if (relators.size() <= 400 && cross_simplify()) {
        clean_relators();
        step_done();
        progress = true;
      }
    }
  }
};

}  // namespace

Word TietzeResult::rewrite(const Word& w) const {
  Word out;
  for (Letter x : w) {
    const Word& img = gen_images.at(letter_gen(x));
    if (x > 0) {
      out.insert(out.end(), img.begin(), img.end());
    } else {
      Word inv = inverse(img);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

namespace {

TietzeResult pack(const Presentation& p, const Simplifier& s) {
  // Renumber live generators consecutively.
  std::vector<int> new_index(s.n, -1);
  std::vector<std::string> gens;
  for (int i = 0; i < s.n; ++i) {
    if (s.live[i]) {
      new_index[i] = static_cast<int>(gens.size());
      gens.push_back(p.generators[i]);
    }
  }
  auto renumber = [&](const Word& w) {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) {
      int g = new_index[letter_gen(x)];
      if (g < 0) throw invalid_input("tietze: dead generator survived");
      out.push_back(make_letter(g, x < 0));
    }
    return out;
  };

  TietzeResult result;
  std::vector<Word> rels;
  for (const Word& r : s.relators) rels.push_back(renumber(r));
  result.presentation = Presentation(std::move(gens), std::move(rels));
  result.gen_images.reserve(s.n);
  for (int i = 0; i < s.n; ++i) result.gen_images.push_back(renumber(s.images[i]));
  return result;
}

}  // namespace

TietzeResult tietze_simplify(const Presentation& p) {
  Simplifier s(p);
  s.run();
  return pack(p, s);
}

std::vector<TietzeResult> tietze_snapshots(const Presentation& p,
                                           std::size_t keep) {
  std::vector<TietzeResult> out;
  Simplifier s(p);
  s.on_step = [&out, &p, keep](const Simplifier& state) {
    out.push_back(pack(p, state));
    if (out.size() > keep) out.erase(out.begin());
  };
  s.run();
  TietzeResult final_result = pack(p, s);
  if (out.empty() || !(out.back().presentation.generators ==
                           final_result.presentation.generators &&
                       out.back().presentation.relators ==
                           final_result.presentation.relators))
    out.push_back(std::move(final_result));
  return out;
}

}  // namespace volent
