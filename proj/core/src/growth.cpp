#include "volent/growth.hpp"

#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

#include "volent/errors.hpp"

namespace volent {

void GrowthSeries::validate() const {
  if (radii.size() != counts.size())
    throw invalid_input("growth series: radii/counts size mismatch");
  if (counts.empty()) throw invalid_input("growth series: empty");
  if (counts[0] < 1) throw invalid_input("growth series: counts[0] < 1");
  for (std::size_t i = 1; i < counts.size(); ++i) {
    if (radii[i] <= radii[i - 1])
      throw invalid_input("growth series: radii not increasing");
    if (counts[i] < counts[i - 1])
      throw invalid_input("growth series: counts decreasing");
  }
}

bool GrowthSeries::submultiplicative() const {
  if (kind != Kind::Cayley) return true;
  const std::size_t n = counts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) {
      long double lhs = counts[i + j];
      long double rhs =
          static_cast<long double>(counts[i]) * static_cast<long double>(counts[j]);
      if (lhs > rhs) return false;
    }
  }
  return true;
}

std::string GrowthSeries::to_csv() const {
  std::ostringstream os;
  os << "radius,count\n";
  for (std::size_t i = 0; i < radii.size(); ++i) {
    if (kind == Kind::Cayley)
      os << static_cast<long long>(radii[i]);
    else
      os << radii[i];
    os << "," << counts[i] << "\n";
  }
  return os.str();
}

GrowthSeries ball_counts(const Backend& backend, std::vector<Word> generators,
                         int n_max, const BallCountOptions& options) {
  if (n_max < 1) throw invalid_input("ball_counts: n_max must be >= 1");
  if (generators.empty()) generators = backend.standard_generators();
  const int raw_count = static_cast<int>(generators.size());

  // Symmetric closure, deduplicated by normal form, identity dropped.
  std::vector<Word> sym;
  {
    std::set<std::string> keys;
    for (const Word& g : generators) {
      for (bool inv : {false, true}) {
        Word w = backend.normal_form(inv ? inverse(g) : g);
        if (w.empty()) continue;
        if (keys.insert(word_key(w)).second) sym.push_back(std::move(w));
      }
    }
  }

  GrowthSeries series;
  series.kind = GrowthSeries::Kind::Cayley;
  series.generator_count = raw_count;
  series.radii.push_back(0);
  series.counts.push_back(1);

  std::unordered_set<std::string> visited;
  visited.insert(word_key({}));
  std::vector<std::string> frontier{word_key({})};

  for (int n = 1; n <= n_max; ++n) {
    std::vector<std::string> next;
    for (const std::string& key : frontier) {
      Word w = word_from_key(key);
      for (const Word& g : sym) {
        Word x = backend.normal_form(concat(w, g));
        std::string k = word_key(x);
        if (visited.insert(k).second) {
          if (visited.size() > options.state_cap)
            throw budget_error("ball_counts: state cap " +
                               std::to_string(options.state_cap) + " exceeded");
          next.push_back(std::move(k));
        }
      }
    }
    frontier = std::move(next);
    series.radii.push_back(n);
    series.counts.push_back(visited.size());
    if (frontier.empty()) {
      // group exhausted; later balls stay constant
      for (int m = n + 1; m <= n_max; ++m) {
        series.radii.push_back(m);
        series.counts.push_back(visited.size());
      }
      break;
    }
  }
  return series;
}

EntropyEstimate fit_top_half_slope(const std::vector<double>& xs,
                                   const std::vector<double>& log_counts) {
  if (xs.size() != log_counts.size() || xs.size() < 2)
    throw invalid_input("slope fit: need at least two points");
  const double x_hi = xs.back();
  std::vector<double> wx, wy;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (xs[i] >= x_hi / 2 - 1e-12) {
      wx.push_back(xs[i]);
      wy.push_back(log_counts[i]);
    }
  }
  if (wx.size() < 2) {
    wx = xs;
    wy = log_counts;
  }
  const std::size_t m = wx.size();
  double mean_x = 0, mean_y = 0;
  for (std::size_t i = 0; i < m; ++i) {
    mean_x += wx[i];
    mean_y += wy[i];
  }
  mean_x /= static_cast<double>(m);
  mean_y /= static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (wx[i] - mean_x) * (wx[i] - mean_x);
    sxy += (wx[i] - mean_x) * (wy[i] - mean_y);
  }
  double slope = (sxx > 0) ? sxy / sxx : 0.0;
  double rss = 0;
  for (std::size_t i = 0; i < m; ++i) {
    double e = wy[i] - mean_y - slope * (wx[i] - mean_x);
    rss += e * e;
  }
  EntropyEstimate est;
  est.points = static_cast<int>(m);
  est.window_lo = wx.front();
  est.window_hi = wx.back();
  double se2 = (m > 2 && sxx > 0) ? (rss / static_cast<double>(m - 2)) / sxx : 0.0;
  est.ci = 2.0 * std::sqrt(std::max(0.0, se2));
  est.value = std::max(0.0, slope);
  return est;
}

EntropyEstimate entropy_estimate(const GrowthSeries& series) {
  series.validate();
  if (series.radii.size() < 4)
    throw invalid_input("entropy_estimate: need at least 4 radii");
  std::vector<double> logs;
  logs.reserve(series.counts.size());
  for (std::uint64_t c : series.counts)
    logs.push_back(std::log(static_cast<double>(c)));
  return fit_top_half_slope(series.radii, logs);
}

bool quotient_entropy_check(const GrowthSeries& source,
                            const GrowthSeries& target,
                            const std::vector<Word>& epi_images,
                            double tolerance) {
  if (static_cast<int>(epi_images.size()) != source.generator_count)
    throw Error(ErrorCode::MismatchedGenerators,
                "quotient_entropy_check: epimorphism image count " +
                    std::to_string(epi_images.size()) +
                    " does not match source generating set of " +
                    std::to_string(source.generator_count));
  EntropyEstimate a = entropy_estimate(source);
  EntropyEstimate b = entropy_estimate(target);
  return a.value >= b.value - tolerance - a.ci - b.ci;
}

GrowthVerdict classify_growth(const SubgroupSpec& spec,
                              const ClassifyOptions& options) {
  if (!spec.backend) throw invalid_input("classify_growth: null backend");
  return spec.backend->classify_subgroup(spec.generators, options);
}

ThicknessReport thickness_check(const BackendPtr& backend,
                                const std::vector<std::vector<Word>>& specs,
                                double delta,
                                const ClassifyOptions& options) {
  ThicknessReport report;
  report.delta = delta;
  for (std::size_t i = 0; i < specs.size(); ++i) {
    ThicknessEntry entry;
    entry.index = i;
    entry.verdict = backend->classify_subgroup(specs[i], options);
    entry.violates = entry.verdict.is_exponential() &&
                     entry.verdict.entropy_lower_bound < delta;
    if (entry.violates) report.violations.push_back(i);
    if (entry.verdict.is_unknown()) report.unknowns.push_back(i);
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace volent
