#ifndef VOLENT_COLLAPSE_HPP
#define VOLENT_COLLAPSE_HPP

#include "volent/loop_count.hpp"
#include "volent/metric_complex.hpp"
#include "volent/pi1.hpp"
#include "volent/simplicial_map.hpp"

namespace volent {

struct FiberComponentVerdict {
  VertexId target_vertex = 0;
  int component = 0;
  std::size_t generator_count = 0;
  GrowthVerdict verdict;
};

/// Growth verdict of i_*[pi1(F)] for every connected component F of every
/// vertex fiber of the projection.
std::vector<FiberComponentVerdict> classify_fiber_subgroups(
    const SimplicialMap& projection, const ComplexBackend& backend,
    const ClassifyOptions& options = {});

enum class CollapseKind { Collapsing, NotCollapsing, Undetermined };

struct CollapseVerdict {
  CollapseKind kind = CollapseKind::Undetermined;
  std::vector<FiberComponentVerdict> fibers;
  int witness = -1;          // index into fibers for NotCollapsing
  double witness_bound = 0;  // entropy lower bound of the witness (this map)
};

/// Collapsing iff every fiber-component subgroup verdict is polynomial;
/// any exponential component is returned as the witness (with the largest
/// bound found); otherwise any Unknown makes the verdict Undetermined.
CollapseVerdict check_collapsing(const SimplicialMap& projection,
                                 const ComplexBackend& backend,
                                 const ClassifyOptions& options = {});

/// The degenerating metric g_t = pi^*(h_P) + t^2 h_X: long edges (mapped
/// onto target edges) get length sqrt(1 + t^2), short edges get t.
MetricComplex build_gt(const SimplicialMap& projection, double t);

struct CollapseConfig {
  SimplicialMap projection;
  std::vector<double> t_values;  // metric family parameters
  double t_max_loops = 10.0;     // loop-count horizon per run
  VertexId basepoint = 0;
};

struct CollapseRow {
  double t = 0;
  double volume = 0;
  double entropy = 0;
  double entropy_ci = 0;
  double bound = 0;   // log n_e + 2t
  double product = 0; // entropy * volume^(1/m)
  bool bound_pass = false;
};

struct CollapseReport {
  std::vector<CollapseRow> rows;  // sorted by decreasing t
  std::size_t edge_count = 0;
  int dimension = 0;
  bool volumes_decreasing = false;

  std::string to_csv() const;  // t,volume,entropy,bound,product,pass
};

/// Runs the full family: volumes, entropy estimates, the log n_e + 2t
/// bound, and the ent * vol^(1/m) products.  Requires a Collapsing verdict.
CollapseReport run_collapse(const CollapseConfig& config,
                            const ComplexBackend& backend,
                            const LoopCountOptions& options = {});

/// True iff every row satisfies entropy <= log n_e + 2t + CI.
bool theorem_a_bound_check(const CollapseReport& report);

}  // namespace volent

#endif
