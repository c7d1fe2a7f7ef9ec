#include "volent/backend.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "volent/errors.hpp"
#include "volent/growth.hpp"
#include "volent/stallings.hpp"
#include "volent/tietze.hpp"

namespace volent {

std::string GrowthVerdict::describe() const {
  switch (kind) {
    case GrowthKind::Polynomial:
      return "polynomial(deg<=" + std::to_string(degree_bound) + ")";
    case GrowthKind::Exponential:
      return "exponential(>=" + std::to_string(entropy_lower_bound) +
             (provenance == Provenance::Empirical ? ", empirical)" : ")");
    default:
      return "unknown";
  }
}

std::vector<Word> Backend::standard_generators() const {
  std::vector<Word> gens;
  for (int i = 0; i < generator_count(); ++i)
    gens.push_back({make_letter(i, false)});
  return gens;
}

Word apply_word_map(const std::vector<Word>& images, const Word& w) {
  Word out;
  for (Letter x : w) {
    std::size_t g = static_cast<std::size_t>(letter_gen(x));
    if (g >= images.size()) throw invalid_input("word map: letter out of range");
    if (x > 0) {
      out.insert(out.end(), images[g].begin(), images[g].end());
    } else {
      Word inv = inverse(images[g]);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(out);
}

// ---------------------------------------------------------------------------
// Variants

namespace {

class FreeBackend final : public Backend {
 public:
  explicit FreeBackend(int rank) : rank_(rank) {}
  int generator_count() const override { return rank_; }
  std::string describe() const override {
    return "free(" + std::to_string(rank_) + ")";
  }
  Word normal_form(const Word& w) const override { return free_reduce(w); }
  GrowthVerdict classify_subgroup(const std::vector<Word>& generators,
                                  const ClassifyOptions& options) const override;

 private:
  int rank_;
};

class FreeAbelianBackend final : public Backend {
 public:
  explicit FreeAbelianBackend(int rank) : rank_(rank) {}
  int generator_count() const override { return rank_; }
  std::string describe() const override {
    return "free_abelian(" + std::to_string(rank_) + ")";
  }
  Word normal_form(const Word& w) const override {
    std::vector<long> exps(rank_, 0);
    for (Letter x : w) exps[letter_gen(x)] += (x > 0 ? 1 : -1);
    Word out;
    for (int g = 0; g < rank_; ++g) {
      long e = exps[g];
      for (long i = 0; i < std::abs(e); ++i)
        out.push_back(make_letter(g, e < 0));
    }
    return out;
  }
  GrowthVerdict classify_subgroup(const std::vector<Word>& generators,
                                  const ClassifyOptions& options) const override;

 private:
  int rank_;
};

class ProductBackendBase : public Backend {
 public:
  explicit ProductBackendBase(std::vector<BackendPtr> factors)
      : factors_(std::move(factors)) {
    offsets_.push_back(0);
    for (const auto& f : factors_)
      offsets_.push_back(offsets_.back() + f->generator_count());
  }
  int generator_count() const override { return offsets_.back(); }

  int factor_of(Letter x) const {
    int g = letter_gen(x);
    for (std::size_t i = 0; i + 1 < offsets_.size(); ++i)
      if (g < offsets_[i + 1]) return static_cast<int>(i);
    throw invalid_input("letter outside product alphabet");
  }
  Letter to_local(Letter x, int factor) const {
    int g = letter_gen(x) - offsets_[factor];
    return make_letter(g, x < 0);
  }
  Letter to_global(Letter x, int factor) const {
    int g = letter_gen(x) + offsets_[factor];
    return make_letter(g, x < 0);
  }
  Word localize(const Word& w, int factor) const {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) out.push_back(to_local(x, factor));
    return out;
  }
  Word globalize(const Word& w, int factor) const {
    Word out;
    out.reserve(w.size());
    for (Letter x : w) out.push_back(to_global(x, factor));
    return out;
  }

 protected:
  std::vector<BackendPtr> factors_;
  std::vector<int> offsets_;
};

class DirectProductBackend final : public ProductBackendBase {
 public:
  using ProductBackendBase::ProductBackendBase;
  std::string describe() const override {
    std::string s = "direct_product(";
    for (std::size_t i = 0; i < factors_.size(); ++i)
      s += (i ? ", " : "") + factors_[i]->describe();
    return s + ")";
  }
  Word normal_form(const Word& w) const override {
    Word out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      Word proj;
      for (Letter x : w)
        if (factor_of(x) == static_cast<int>(i))
          proj.push_back(to_local(x, static_cast<int>(i)));
      Word nf = factors_[i]->normal_form(proj);
      Word glob = globalize(nf, static_cast<int>(i));
      out.insert(out.end(), glob.begin(), glob.end());
    }
    return out;
  }
  GrowthVerdict classify_subgroup(const std::vector<Word>& generators,
                                  const ClassifyOptions& options) const override {
    GrowthVerdict result = GrowthVerdict::polynomial(0);
    int degree_sum = 0;
    bool any_unknown = false;
    double best_exp = 0;
    Provenance prov = Provenance::Exact;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      std::vector<Word> proj;
      for (const Word& g : generators) {
        Word p;
        for (Letter x : g)
          if (factor_of(x) == static_cast<int>(i))
            p.push_back(to_local(x, static_cast<int>(i)));
        proj.push_back(std::move(p));
      }
      GrowthVerdict v = factors_[i]->classify_subgroup(proj, options);
      if (v.is_exponential()) {
        best_exp = std::max(best_exp, v.entropy_lower_bound);
        if (v.provenance == Provenance::Empirical) prov = Provenance::Empirical;
      } else if (v.is_unknown()) {
        any_unknown = true;
      } else {
        degree_sum += v.degree_bound;
        if (v.provenance == Provenance::Empirical) prov = Provenance::Empirical;
      }
    }
    if (best_exp > 0) return GrowthVerdict::exponential(best_exp, prov);
    if (any_unknown) return GrowthVerdict::unknown();
    result = GrowthVerdict::polynomial(degree_sum, prov);
    return result;
  }
};

class FreeProductBackend final : public ProductBackendBase {
 public:
  using ProductBackendBase::ProductBackendBase;
  std::string describe() const override {
    std::string s = "free_product(";
    for (std::size_t i = 0; i < factors_.size(); ++i)
      s += (i ? ", " : "") + factors_[i]->describe();
    return s + ")";
  }

  Word normal_form(const Word& w) const override {
    // Alternating syllable form: normalize each maximal same-factor run,
    // drop trivial syllables, merge neighbours, repeat until stable.
    std::vector<std::pair<int, Word>> syllables;
    for (Letter x : w) {
      int f = factor_of(x);
      if (syllables.empty() || syllables.back().first != f)
        syllables.push_back({f, {}});
      syllables.back().second.push_back(to_local(x, f));
    }
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<std::pair<int, Word>> next;
      for (auto& [f, sw] : syllables) {
        Word nf = factors_[f]->normal_form(sw);
        if (nf.empty()) {
          changed = true;
          continue;
        }
        if (nf != sw) changed = true;
        if (!next.empty() && next.back().first == f) {
          next.back().second = concat(next.back().second, nf);
          changed = true;
        } else {
          next.push_back({f, std::move(nf)});
        }
      }
      syllables = std::move(next);
    }
    Word out;
    for (auto& [f, sw] : syllables) {
      Word glob = globalize(sw, f);
      out.insert(out.end(), glob.begin(), glob.end());
    }
    return out;
  }

  GrowthVerdict classify_subgroup(const std::vector<Word>& generators,
                                  const ClassifyOptions& options) const override {
    std::vector<Word> nfs;
    for (const Word& g : generators) {
      Word nf = normal_form(g);
      if (!nf.empty()) nfs.push_back(std::move(nf));
    }
    if (nfs.empty()) return GrowthVerdict::polynomial(0);

    // All generators inside one factor: defer to that factor.
    std::set<int> support;
    for (const Word& g : nfs)
      for (Letter x : g) support.insert(factor_of(x));
    if (support.size() == 1) {
      int f = *support.begin();
      std::vector<Word> local;
      for (const Word& g : nfs) local.push_back(localize(g, f));
      return factors_[f]->classify_subgroup(local, options);
    }

    // Whole group: all standard generators appear as length-1 normal forms.
    std::set<Letter> singles;
    for (const Word& g : nfs)
      if (g.size() == 1) {
        singles.insert(g[0]);
        singles.insert(-g[0]);
      }
    bool whole = true;
    for (int i = 0; i < generator_count(); ++i)
      if (!singles.count(make_letter(i, false))) whole = false;
    if (whole) {
      // Free product of >= 2 nontrivial (here: infinite) factors contains a
      // free group of rank 2; log 3 is the conservative uniform bound.
      return GrowthVerdict::exponential(std::log(3.0));
    }

    if (nfs.size() == 1 ||
        (nfs.size() == 2 && equal(nfs[0], inverse(nfs[1]))))
      return GrowthVerdict::polynomial(1);  // cyclic

    return GrowthVerdict::unknown();
  }
};

class SmallCancellationBackend final : public Backend {
 public:
  SmallCancellationBackend(const Presentation& p, int slack)
      : rewriter_(p), slack_(slack) {}
  int generator_count() const override {
    return rewriter_.presentation().rank();
  }
  std::string describe() const override {
    return "small_cancellation(rank " + std::to_string(generator_count()) +
           ", " + std::to_string(rewriter_.presentation().relators.size()) +
           " relators)";
  }
  Word normal_form(const Word& w) const override {
    return rewriter_.normal_form(w, slack_);
  }
  bool equal(const Word& u, const Word& v) const override {
    return rewriter_.equal(u, v);
  }
  GrowthVerdict classify_subgroup(const std::vector<Word>& generators,
                                  const ClassifyOptions& options) const override;
  const DehnRewriter& rewriter() const { return rewriter_; }

 private:
  DehnRewriter rewriter_;
  int slack_;
};

GrowthVerdict FreeBackend::classify_subgroup(
    const std::vector<Word>& generators, const ClassifyOptions&) const {
  std::vector<Word> reduced;
  for (const Word& g : generators) {
    Word w = free_reduce(g);
    if (!w.empty()) reduced.push_back(std::move(w));
  }
  if (reduced.empty()) return GrowthVerdict::polynomial(0);
  StallingsGraph graph(rank_, reduced);
  int r = graph.rank();
  if (r <= 1) return GrowthVerdict::polynomial(r);
  return GrowthVerdict::exponential(std::log(2.0 * r - 1.0));
}

GrowthVerdict FreeAbelianBackend::classify_subgroup(
    const std::vector<Word>& generators, const ClassifyOptions&) const {
  // Rank of the exponent-vector lattice via fraction-free elimination.
  std::vector<std::vector<long long>> rows;
  for (const Word& g : generators) {
    std::vector<long long> row(rank_, 0);
    for (Letter x : g) row[letter_gen(x)] += (x > 0 ? 1 : -1);
    rows.push_back(std::move(row));
  }
  int rank = 0;
  int col = 0;
  while (col < rank_ && rank < static_cast<int>(rows.size())) {
    int pivot = -1;
    for (int r = rank; r < static_cast<int>(rows.size()); ++r)
      if (rows[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) {
      ++col;
      continue;
    }
    std::swap(rows[rank], rows[pivot]);
    for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
      while (rows[r][col] != 0) {
        long long q = rows[r][col] / rows[rank][col];
        for (int c = col; c < rank_; ++c) rows[r][c] -= q * rows[rank][c];
        if (rows[r][col] != 0) std::swap(rows[r], rows[rank]);
      }
    }
    ++rank;
    ++col;
  }
  return GrowthVerdict::polynomial(rank);
}

GrowthVerdict SmallCancellationBackend::classify_subgroup(
    const std::vector<Word>& generators, const ClassifyOptions& options) const {
  std::vector<Word> nfs;
  for (const Word& g : generators) {
    Word w = normal_form(g);
    if (!w.empty()) nfs.push_back(std::move(w));
  }
  if (nfs.empty()) return GrowthVerdict::polynomial(0);

  // Empirical dichotomy: fit log |B(n)| over the top half of the window.
  GrowthSeries series;
  try {
    BallCountOptions ball;
    ball.state_cap = options.sc_state_cap;
    series = ball_counts(*this, nfs, options.sc_n_max, ball);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::BudgetExceeded) return GrowthVerdict::unknown();
    throw;
  }
  EntropyEstimate est = entropy_estimate(series);
  if (est.value > options.exp_slope_threshold)
    return GrowthVerdict::exponential(est.value, Provenance::Empirical);
  if (est.value < options.poly_slope_threshold) {
    // Polynomial when log-log growth is also well fit by a line.
    std::vector<double> lx, ly;
    for (std::size_t i = 0; i < series.radii.size(); ++i) {
      if (series.radii[i] < 1) continue;
      lx.push_back(std::log(series.radii[i]));
      ly.push_back(std::log(static_cast<double>(series.counts[i])));
    }
    if (lx.size() >= 3) {
      EntropyEstimate loglog = fit_top_half_slope(lx, ly);
      int degree = static_cast<int>(std::lround(std::max(0.0, loglog.value)));
      return GrowthVerdict::polynomial(degree, Provenance::Empirical);
    }
    return GrowthVerdict::polynomial(0, Provenance::Empirical);
  }
  return GrowthVerdict::unknown();
}

}  // namespace

BackendPtr make_free_backend(int rank) {
  return std::make_shared<FreeBackend>(rank);
}
BackendPtr make_free_abelian_backend(int rank) {
  return std::make_shared<FreeAbelianBackend>(rank);
}
BackendPtr make_direct_product_backend(std::vector<BackendPtr> factors) {
  return std::make_shared<DirectProductBackend>(std::move(factors));
}
BackendPtr make_free_product_backend(std::vector<BackendPtr> factors) {
  return std::make_shared<FreeProductBackend>(std::move(factors));
}
BackendPtr make_small_cancellation_backend(const Presentation& p, int slack) {
  return std::make_shared<SmallCancellationBackend>(p, slack);
}

// ---------------------------------------------------------------------------
// Recognition

namespace {

struct Recognized {
  BackendPtr backend;
  std::vector<Word> gen_words;  // presentation generator -> backend word
};

bool is_two_generator_commutator(const Word& r, int* u_out, int* v_out) {
  if (r.size() != 4) return false;
  // cyclically: x y x^{-1} y^{-1} in some rotation
  for (int i = 0; i < 4; ++i) {
    Letter a = r[i], b = r[(i + 1) % 4], c = r[(i + 2) % 4], d = r[(i + 3) % 4];
    if (a == -c && b == -d && letter_gen(a) != letter_gen(b)) {
      *u_out = letter_gen(a);
      *v_out = letter_gen(b);
      return true;
    }
  }
  return false;
}

Recognized recognize(const Presentation& p);

// Build the sub-presentation on a generator subset and recognize it.
Recognized recognize_block(const Presentation& p, const std::vector<int>& gens,
                           const std::vector<Word>& relators) {
  std::vector<int> local_index(p.rank(), -1);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    local_index[gens[i]] = static_cast<int>(i);
    names.push_back(p.generators[gens[i]]);
  }
  std::vector<Word> local_rels;
  for (const Word& r : relators) {
    Word lr;
    for (Letter x : r) {
      int li = local_index[letter_gen(x)];
      if (li < 0) throw invalid_input("relator escapes block");
      lr.push_back(make_letter(li, x < 0));
    }
    local_rels.push_back(std::move(lr));
  }
  return recognize(Presentation(std::move(names), std::move(local_rels)));
}

Recognized recognize(const Presentation& p) {
  const int n = p.rank();
  Recognized out;

  if (p.relators.empty()) {
    out.backend = make_free_backend(n);
    for (int i = 0; i < n; ++i) out.gen_words.push_back({make_letter(i, false)});
    return out;
  }

  // Free-product split: blocks of generators linked by relator support.
  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Word& r : p.relators) {
      int first = letter_gen(r[0]);
      for (Letter x : r) parent[find(letter_gen(x))] = find(first);
    }
    std::map<int, std::vector<int>> blocks;
    for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i);

    if (blocks.size() > 1) {
      // Merge relator-free generators into a single free factor.
      std::vector<int> free_gens;
      std::vector<std::pair<std::vector<int>, std::vector<Word>>> rel_blocks;
      for (auto& [root, members] : blocks) {
        std::vector<Word> rels;
        for (const Word& r : p.relators)
          if (find(letter_gen(r[0])) == root) rels.push_back(r);
        if (rels.empty()) {
          free_gens.insert(free_gens.end(), members.begin(), members.end());
        } else {
          rel_blocks.push_back({members, std::move(rels)});
        }
      }
      if (rel_blocks.empty()) {
        // every block relator-free: the whole group is free
        out.backend = make_free_backend(n);
        for (int i = 0; i < n; ++i)
          out.gen_words.push_back({make_letter(i, false)});
        return out;
      }
      std::vector<BackendPtr> factors;
      std::vector<Word> gen_words(n);
      int offset = 0;
      if (!free_gens.empty()) {
        factors.push_back(make_free_backend(static_cast<int>(free_gens.size())));
        for (std::size_t i = 0; i < free_gens.size(); ++i)
          gen_words[free_gens[i]] = {make_letter(offset + static_cast<int>(i), false)};
        offset += static_cast<int>(free_gens.size());
      }
      for (auto& [members, rels] : rel_blocks) {
        Recognized sub = recognize_block(p, members, rels);
        factors.push_back(sub.backend);
        for (std::size_t i = 0; i < members.size(); ++i) {
          Word w;
          for (Letter x : sub.gen_words[i])
            w.push_back(make_letter(letter_gen(x) + offset, x < 0));
          gen_words[members[i]] = std::move(w);
        }
        offset += sub.backend->generator_count();
      }
      if (factors.size() == 1) {
        out.backend = factors[0];
      } else {
        out.backend = make_free_product_backend(std::move(factors));
      }
      out.gen_words = std::move(gen_words);
      return out;
    }
  }

  // Single block.  Free-abelian: all relators are commutators covering all
  // generator pairs.
  {
    std::set<std::pair<int, int>> pairs;
    bool all_comm = true;
    for (const Word& r : p.relators) {
      int u, v;
      if (is_two_generator_commutator(r, &u, &v))
        pairs.insert({std::min(u, v), std::max(u, v)});
      else
        all_comm = false;
    }
    if (all_comm) {
      bool covered = true;
      for (int i = 0; i < n && covered; ++i)
        for (int j = i + 1; j < n && covered; ++j)
          if (!pairs.count({i, j})) covered = false;
      if (covered && n >= 1) {
        out.backend = make_free_abelian_backend(n);
        for (int i = 0; i < n; ++i)
          out.gen_words.push_back({make_letter(i, false)});
        return out;
      }
    }
  }

  // Direct-product split: atoms = components of co-occurrence in
  // non-commutator relators; look for a bipartition with complete
  // cross-commutators.
  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::set<std::pair<int, int>> comm_pairs;
    std::vector<const Word*> non_comm;
    for (const Word& r : p.relators) {
      int u, v;
      if (is_two_generator_commutator(r, &u, &v)) {
        comm_pairs.insert({std::min(u, v), std::max(u, v)});
      } else {
        non_comm.push_back(&r);
        int first = letter_gen(r[0]);
        for (Letter x : r) parent[find(letter_gen(x))] = find(first);
      }
    }
    std::map<int, std::vector<int>> atom_map;
    for (int i = 0; i < n; ++i) atom_map[find(i)].push_back(i);
    std::vector<std::vector<int>> atoms;
    for (auto& [root, members] : atom_map) atoms.push_back(members);

    if (atoms.size() > 1 && atoms.size() <= 16) {
      auto has_comm = [&](int a, int b) {
        return comm_pairs.count({std::min(a, b), std::max(a, b)}) > 0;
      };
      const std::size_t k = atoms.size();
      for (std::size_t mask = 1; mask + 1 < (1ull << k); ++mask) {
        if (!(mask & 1)) continue;  // fix atom 0 on side A for determinism
        std::vector<int> A, B;
        for (std::size_t i = 0; i < k; ++i) {
          auto& dst = (mask >> i) & 1 ? A : B;
          dst.insert(dst.end(), atoms[i].begin(), atoms[i].end());
        }
        bool ok = true;
        for (int a : A)
          for (int b : B)
            if (!has_comm(a, b)) ok = false;
        if (!ok) continue;
        std::vector<bool> in_A(n, false);
        for (int a : A) in_A[a] = true;
        // split relators by side; cross commutators disappear
        std::vector<Word> rels_A, rels_B;
        bool splits = true;
        for (const Word& r : p.relators) {
          bool anyA = false, anyB = false;
          for (Letter x : r) (in_A[letter_gen(x)] ? anyA : anyB) = true;
          if (anyA && anyB) {
            int u, v;
            if (!is_two_generator_commutator(r, &u, &v)) splits = false;
            continue;  // cross commutator: realized by the product structure
          }
          (anyA ? rels_A : rels_B).push_back(r);
        }
        if (!splits) continue;
        std::sort(A.begin(), A.end());
        std::sort(B.begin(), B.end());
        Recognized sub_A, sub_B;
        try {
          sub_A = recognize_block(p, A, rels_A);
          sub_B = recognize_block(p, B, rels_B);
        } catch (const Error&) {
          continue;
        }
        std::vector<Word> gen_words(n);
        int offset_B = sub_A.backend->generator_count();
        for (std::size_t i = 0; i < A.size(); ++i)
          gen_words[A[i]] = sub_A.gen_words[i];
        for (std::size_t i = 0; i < B.size(); ++i) {
          Word w;
          for (Letter x : sub_B.gen_words[i])
            w.push_back(make_letter(letter_gen(x) + offset_B, x < 0));
          gen_words[B[i]] = std::move(w);
        }
        out.backend = make_direct_product_backend(
            {sub_A.backend, sub_B.backend});
        out.gen_words = std::move(gen_words);
        return out;
      }
    }
  }

  // Last resort: metric small cancellation.
  if (small_cancellation_check(p).passes) {
    out.backend = make_small_cancellation_backend(p);
    for (int i = 0; i < n; ++i) out.gen_words.push_back({make_letter(i, false)});
    return out;
  }

  throw unsupported_error(
      "no backend matches the presentation (not free, free-abelian, a "
      "recognizable product, or C'(1/6))");
}

}  // namespace

DetectedBackend detect_backend(const Presentation& p) {
  TietzeResult t = tietze_simplify(p);
  Recognized rec = recognize(t.presentation);
  DetectedBackend out;
  out.backend = rec.backend;
  out.simplified = t.presentation;
  out.gen_images.reserve(p.rank());
  for (int i = 0; i < p.rank(); ++i)
    out.gen_images.push_back(apply_word_map(rec.gen_words, t.gen_images[i]));
  return out;
}

}  // namespace volent
