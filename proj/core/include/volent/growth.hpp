#ifndef VOLENT_GROWTH_HPP
#define VOLENT_GROWTH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "volent/backend.hpp"
#include "volent/word.hpp"

namespace volent {

/// Radius-indexed cumulative ball counts, either over a Cayley graph
/// (integer radii) or over loop lengths in a metric complex.
struct GrowthSeries {
  enum class Kind { Cayley, Loop };
  Kind kind = Kind::Cayley;
  std::vector<double> radii;
  std::vector<std::uint64_t> counts;
  int generator_count = 0;  // metadata: generating-set size before symmetrization

  /// Throws unless radii are strictly increasing, counts nondecreasing and
  /// counts[0] >= 1.
  void validate() const;
  /// Cayley series also satisfy |B(m+n)| <= |B(m)| |B(n)|.
  bool submultiplicative() const;

  std::string to_csv() const;
};

struct BallCountOptions {
  std::size_t state_cap = 50000000;  // canonical forms kept before BudgetExceeded
};

/// Breadth-first Cayley ball enumeration with normal-form deduplication.
/// `generators` empty means the backend's standard set; the set is closed
/// under inversion internally.  counts[n] = |B(n)|.
GrowthSeries ball_counts(const Backend& backend, std::vector<Word> generators,
                         int n_max, const BallCountOptions& options = {});

struct EntropyEstimate {
  double value = 0;  // clamped at 0
  double ci = 0;     // 2 x standard error of the fitted slope
  double window_lo = 0;
  double window_hi = 0;
  int points = 0;
};

/// Least-squares slope of log counts against radius over the top half of
/// the radius window.
EntropyEstimate entropy_estimate(const GrowthSeries& series);

/// Shared fitting kernel (also used for loop-count series).
EntropyEstimate fit_top_half_slope(const std::vector<double>& xs,
                                   const std::vector<double>& log_counts);

/// ent(G1) >= ent(G2) - tolerance for an epimorphism G1 -> G2 given by
/// generator images.  Throws Error(MismatchedGenerators) when the image
/// list does not match the source generating set.
bool quotient_entropy_check(const GrowthSeries& source,
                            const GrowthSeries& target,
                            const std::vector<Word>& epi_images,
                            double tolerance = 0.05);

/// A finitely generated subgroup of a backend's group.
struct SubgroupSpec {
  BackendPtr backend;
  std::vector<Word> generators;
};

GrowthVerdict classify_growth(const SubgroupSpec& spec,
                              const ClassifyOptions& options = {});

struct ThicknessEntry {
  std::size_t index = 0;
  GrowthVerdict verdict;
  bool violates = false;  // exponential with bound < delta
};

struct ThicknessReport {
  double delta = 0;
  std::vector<ThicknessEntry> entries;
  std::vector<std::size_t> violations;
  std::vector<std::size_t> unknowns;
  bool ok() const { return violations.empty(); }
};

/// Flags every subgroup spec whose exponential-growth bound undercuts delta.
ThicknessReport thickness_check(const BackendPtr& backend,
                                const std::vector<std::vector<Word>>& specs,
                                double delta,
                                const ClassifyOptions& options = {});

}  // namespace volent

#endif
