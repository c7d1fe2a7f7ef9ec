#include "volent/small_cancellation.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "volent/errors.hpp"

namespace volent {

namespace {

std::vector<Word> symmetrized_rotations(const Presentation& p) {
  std::set<Word> seen;
  std::vector<Word> out;
  for (const Word& r : p.relators) {
    for (bool inv : {false, true}) {
      Word w = inv ? inverse(r) : r;
      for (std::size_t i = 0; i < w.size(); ++i) {
        Word rot(w.begin() + i, w.end());
        rot.insert(rot.end(), w.begin(), w.begin() + i);
        if (seen.insert(rot).second) out.push_back(std::move(rot));
      }
    }
  }
  return out;
}

}  // namespace

PieceReport small_cancellation_check(const Presentation& p, double lambda) {
  PieceReport report;
  std::vector<Word> rots = symmetrized_rotations(p);
  for (std::size_t a = 0; a < rots.size(); ++a) {
    for (std::size_t b = a + 1; b < rots.size(); ++b) {
      std::size_t k = 0;
      std::size_t lim = std::min(rots[a].size(), rots[b].size());
      while (k < lim && rots[a][k] == rots[b][k]) ++k;
      if (k == 0) continue;
      double ratio = static_cast<double>(k) / static_cast<double>(lim);
      if (ratio > report.max_ratio) report.max_ratio = ratio;
      report.max_piece_length =
          std::max(report.max_piece_length, static_cast<int>(k));
    }
  }
  report.passes = report.max_ratio < lambda;
  return report;
}

DehnRewriter::DehnRewriter(const Presentation& p) : presentation_(p) {
  PieceReport check = small_cancellation_check(p);
  if (!check.passes)
    throw Error(ErrorCode::NotSmallCancellation,
                "presentation fails C'(1/6), max piece ratio " +
                    std::to_string(check.max_ratio));
  for (Word& rot : symmetrized_rotations(p)) {
    Rotation r;
    r.half = static_cast<int>((rot.size() + 1) / 2);
    r.word = std::move(rot);
    rotations_.push_back(std::move(r));
  }
  rotations_by_first_.assign(2 * p.rank(), {});
  for (std::size_t i = 0; i < rotations_.size(); ++i)
    rotations_by_first_[letter_index(rotations_[i].word[0])].push_back(
        static_cast<int>(i));
}

int DehnRewriter::letter_index(Letter x) const {
  int g = letter_gen(x);
  return 2 * g + (x < 0 ? 1 : 0);
}

int DehnRewriter::match_length(const Word& w, std::size_t i, const Word& rot) {
  std::size_t k = 0;
  while (i + k < w.size() && k < rot.size() && w[i + k] == rot[k]) ++k;
  return static_cast<int>(k);
}

namespace {

// Splices cur[0..i) + inverse(rot[k..full)) + cur[i+k..) into `out`,
// free-reducing on the fly.  Returns false (leaving out unspecified) when
// the reduced length would exceed max_len.
bool splice_reduced(const Word& cur, std::size_t i, int k, const Word& rot,
                    std::size_t max_len, Word& out) {
  out.clear();
  auto push = [&out](Letter x) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  };
  for (std::size_t j = 0; j < i; ++j) push(cur[j]);
  for (std::size_t j = rot.size(); j > static_cast<std::size_t>(k); --j)
    push(-rot[j - 1]);
  for (std::size_t j = i + k; j < cur.size(); ++j) push(cur[j]);
  return out.size() <= max_len;
}

}  // namespace

Word DehnRewriter::dehn_reduce(const Word& w) const {
  Word cur = free_reduce(w);
  if (rotations_.empty()) return cur;
  Word scratch;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < cur.size() && !changed; ++i) {
      for (int ri : rotations_by_first_[letter_index(cur[i])]) {
        const Rotation& rot = rotations_[ri];
        int k = match_length(cur, i, rot.word);
        if (2 * k > static_cast<int>(rot.word.size())) {
          splice_reduced(cur, i, k, rot.word, cur.size() + rot.word.size(),
                         scratch);
          std::swap(cur, scratch);
          changed = true;
          break;
        }
      }
    }
  }
  return cur;
}

Word DehnRewriter::normal_form(const Word& w, int slack) const {
  Word best = dehn_reduce(w);
  if (rotations_.empty() || best.empty()) return best;

  // Explore the rewrite closure at bounded length; restart whenever a
  // strictly shorter representative appears.  Closure sets are small, so a
  // flat vector with linear membership checks beats node containers here.
  std::vector<Word> seen;
  Word scratch;
  while (true) {
    const std::size_t cap = best.size() + static_cast<std::size_t>(slack);
    seen.clear();
    seen.push_back(best);
    bool restart = false;
    for (std::size_t qi = 0; qi < seen.size() && !restart; ++qi) {
      const Word cur = seen[qi];  // copy: pushing into seen may reallocate
      for (std::size_t i = 0; i < cur.size() && !restart; ++i) {
        for (int ri : rotations_by_first_[letter_index(cur[i])]) {
          const Rotation& rot = rotations_[ri];
          const int full = static_cast<int>(rot.word.size());
          const int maxk = match_length(cur, i, rot.word);
          for (int k = maxk; k >= 1; --k) {
            if (cur.size() - k + (full - k) > cap + 4) break;  // k smaller only grows
            if (!splice_reduced(cur, i, k, rot.word, cap, scratch)) continue;
            if (scratch.size() < best.size()) {
              best = dehn_reduce(scratch);
              restart = true;
              break;
            }
            bool known = false;
            for (const Word& s : seen)
              if (s.size() == scratch.size() && s == scratch) {
                known = true;
                break;
              }
            if (!known) seen.push_back(scratch);
          }
          if (restart) break;
        }
      }
    }
    if (restart) continue;
    Word out = best;
    for (const Word& cand : seen)
      if (shortlex_less(cand, out)) out = cand;
    return out;
  }
}

}  // namespace volent
