#ifndef VOLENT_BACKEND_HPP
#define VOLENT_BACKEND_HPP

#include <memory>
#include <string>
#include <vector>

#include "volent/presentation.hpp"
#include "volent/small_cancellation.hpp"
#include "volent/word.hpp"

namespace volent {

enum class GrowthKind { Polynomial, Exponential, Unknown };
enum class Provenance { Exact, Empirical };

struct GrowthVerdict {
  GrowthKind kind = GrowthKind::Unknown;
  int degree_bound = 0;             // Polynomial only
  double entropy_lower_bound = 0;   // Exponential only, strictly positive
  Provenance provenance = Provenance::Exact;

  static GrowthVerdict polynomial(int degree,
                                  Provenance prov = Provenance::Exact) {
    return {GrowthKind::Polynomial, degree, 0.0, prov};
  }
  static GrowthVerdict exponential(double bound,
                                   Provenance prov = Provenance::Exact) {
    return {GrowthKind::Exponential, 0, bound, prov};
  }
  static GrowthVerdict unknown() { return {GrowthKind::Unknown, 0, 0.0, Provenance::Empirical}; }

  bool is_polynomial() const { return kind == GrowthKind::Polynomial; }
  bool is_exponential() const { return kind == GrowthKind::Exponential; }
  bool is_unknown() const { return kind == GrowthKind::Unknown; }
  std::string describe() const;
};

struct ClassifyOptions {
  int sc_n_max = 8;                      // ball radius for empirical fits
  std::size_t sc_state_cap = 2000000;
  double exp_slope_threshold = 0.2;      // slope above this => Exponential
  double poly_slope_threshold = 0.05;    // slope below this + good fit => Polynomial
};

/// A normal-form strategy deciding the word problem for one group.
/// Immutable and safe to share across threads.
class Backend {
 public:
  virtual ~Backend() = default;

  virtual int generator_count() const = 0;
  virtual std::string describe() const = 0;

  /// Canonical representative: idempotent, and two words have equal normal
  /// forms iff they represent the same group element.
  virtual Word normal_form(const Word& w) const = 0;

  virtual bool equal(const Word& u, const Word& v) const {
    return normal_form(u) == normal_form(v);
  }
  bool is_identity(const Word& w) const { return normal_form(w).empty(); }

  /// Growth classification of the subgroup generated by `generators`.
  /// Exact where decidable (free, free-abelian, and product closures),
  /// empirical ball-count fits for small-cancellation groups, Unknown
  /// otherwise.
  virtual GrowthVerdict classify_subgroup(const std::vector<Word>& generators,
                                          const ClassifyOptions& options) const = 0;

  /// Single-letter words for generators 0..count-1.
  std::vector<Word> standard_generators() const;
};

using BackendPtr = std::shared_ptr<const Backend>;

BackendPtr make_free_backend(int rank);
BackendPtr make_free_abelian_backend(int rank);
/// Factors own consecutive generator ranges in the combined alphabet.
BackendPtr make_direct_product_backend(std::vector<BackendPtr> factors);
BackendPtr make_free_product_backend(std::vector<BackendPtr> factors);
/// Throws Error(NotSmallCancellation) unless p passes C'(1/6).
BackendPtr make_small_cancellation_backend(const Presentation& p,
                                           int rewrite_slack = 2);

/// Applies a generator->word map letterwise.
Word apply_word_map(const std::vector<Word>& images, const Word& w);

/// Result of automatic backend recognition for a presentation.
struct DetectedBackend {
  BackendPtr backend;
  std::vector<Word> gen_images;  // input generator -> word over backend alphabet
  Presentation simplified;       // the Tietze-reduced presentation

  Word rewrite(const Word& w) const { return apply_word_map(gen_images, w); }
};

/// Tietze-simplifies the presentation, then matches it against the
/// supported variants: free, free-abelian, direct products, free products,
/// C'(1/6) small cancellation.  Throws Error(Unsupported) when nothing
/// matches; silent misidentification is never an option.
DetectedBackend detect_backend(const Presentation& p);

}  // namespace volent

#endif
