#ifndef VOLENT_LOOP_COUNT_HPP
#define VOLENT_LOOP_COUNT_HPP

#include "volent/growth.hpp"
#include "volent/metric_complex.hpp"
#include "volent/pi1.hpp"

namespace volent {

/// Counts N(t) of homotopy classes of based loops of length <= t, sampled
/// on the grid t_k = k * (min edge length) / 2.
struct LoopCountSeries {
  std::vector<double> thresholds;
  std::vector<std::uint64_t> counts;
  VertexId basepoint = 0;
  std::size_t state_count = 0;  // lifted states explored

  GrowthSeries as_growth_series() const;
  std::string to_csv() const;  // t,count,log_count
};

struct LoopCountOptions {
  std::size_t state_cap = 50000000;
  double epsilon = 1e-9;  // threshold slack for non-quantized metrics
};

/// Dijkstra over lifted states (vertex, deck element) in the universal
/// cover: crossing a non-tree edge multiplies the element by the edge's
/// generator word; N(t) counts distinct elements whose basepoint lift is
/// within distance t.
LoopCountSeries count_loops(const MetricComplex& metric, VertexId basepoint,
                            const ComplexBackend& backend, double t_max,
                            const LoopCountOptions& options = {});

/// Same search restricted to the edges of a connected subcomplex; elements
/// are still canonicalized in pi1(X), so this counts the image subgroup's
/// classes by length within the subcomplex.
LoopCountSeries subcomplex_loop_counts(const MetricComplex& metric,
                                       const Subcomplex& sub,
                                       VertexId basepoint,
                                       const ComplexBackend& backend,
                                       double t_max,
                                       const LoopCountOptions& options = {});

/// The deck-orbit sample behind N(t): every element g with
/// d(x, g x) <= t_max together with that distance.  Identity included.
std::vector<std::pair<Word, double>> basepoint_orbit(
    const MetricComplex& metric, VertexId basepoint,
    const ComplexBackend& backend, double t_max,
    const LoopCountOptions& options = {});

/// Slope fit of log N(t) over the top-half window.
EntropyEstimate volume_entropy_estimate(const LoopCountSeries& series);

struct EntropyVolumeSample {
  EntropyEstimate entropy;
  double volume = 0;
  double product = 0;  // entropy * volume^(1/m)
  int dimension = 0;
};

/// ent estimate times vol^(1/m): an upper-bound sample for the minimal
/// volume entropy functional, never the infimum itself.
EntropyVolumeSample entropy_volume_product(const MetricComplex& metric,
                                           VertexId basepoint,
                                           const ComplexBackend& backend,
                                           double t_max,
                                           const LoopCountOptions& options = {});

}  // namespace volent

#endif
