#include "volent/collapse.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "volent/errors.hpp"

namespace volent {

std::vector<FiberComponentVerdict> classify_fiber_subgroups(
    const SimplicialMap& projection, const ComplexBackend& backend,
    const ClassifyOptions& options) {
  if (backend.complex.get() != projection.source_ptr().get())
    throw invalid_input("classify_fiber_subgroups: backend built on a "
                        "different complex");
  std::vector<FiberComponentVerdict> out;
  for (VertexId p = 0; p < projection.target().vertex_count(); ++p) {
    Subcomplex fib = [&]() -> Subcomplex {
      try {
        return projection.fiber(p);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptyFiber) {
          return Subcomplex::full_on_vertices(projection.source_ptr(), {});
        }
        throw;
      }
    }();
    if (fib.empty()) continue;
    std::vector<Subcomplex> comps = fib.components();
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      FiberComponentVerdict v;
      v.target_vertex = p;
      v.component = static_cast<int>(ci);
      std::vector<Word> gens = subgroup_of_subcomplex(backend, comps[ci]);
      v.generator_count = gens.size();
      v.verdict = backend.backend().classify_subgroup(gens, options);
      out.push_back(std::move(v));
    }
  }
  return out;
}

CollapseVerdict check_collapsing(const SimplicialMap& projection,
                                 const ComplexBackend& backend,
                                 const ClassifyOptions& options) {
  CollapseVerdict out;
  out.fibers = classify_fiber_subgroups(projection, backend, options);
  bool any_unknown = false;
  for (std::size_t i = 0; i < out.fibers.size(); ++i) {
    const GrowthVerdict& v = out.fibers[i].verdict;
    if (v.is_exponential()) {
      if (out.witness < 0 || v.entropy_lower_bound > out.witness_bound) {
        out.witness = static_cast<int>(i);
        out.witness_bound = v.entropy_lower_bound;
      }
    } else if (v.is_unknown()) {
      any_unknown = true;
    }
  }
  if (out.witness >= 0)
    out.kind = CollapseKind::NotCollapsing;
  else if (any_unknown)
    out.kind = CollapseKind::Undetermined;
  else
    out.kind = CollapseKind::Collapsing;
  return out;
}

MetricComplex build_gt(const SimplicialMap& projection, double t) {
  if (!(t > 0)) throw invalid_input("build_gt: t must be positive");
  const SimplicialComplex& X = projection.source();
  const double long_len = std::sqrt(1.0 + t * t);
  std::vector<double> lengths(X.edges().size());
  for (std::size_t e = 0; e < X.edges().size(); ++e)
    lengths[e] = projection.edge_is_long(static_cast<int>(e)) ? long_len : t;
  return MetricComplex(projection.source_ptr(), std::move(lengths));
}

std::string CollapseReport::to_csv() const {
  std::ostringstream os;
  os << "t,volume,entropy,bound,product,pass\n";
  for (const CollapseRow& r : rows)
    os << r.t << "," << r.volume << "," << r.entropy << "," << r.bound << ","
       << r.product << "," << (r.bound_pass ? 1 : 0) << "\n";
  return os.str();
}

CollapseReport run_collapse(const CollapseConfig& config,
                            const ComplexBackend& backend,
                            const LoopCountOptions& options) {
  if (config.t_values.empty())
    throw invalid_input("run_collapse: empty t schedule");
  CollapseVerdict verdict = check_collapsing(config.projection, backend);
  if (verdict.kind != CollapseKind::Collapsing)
    throw invalid_input(
        "run_collapse: map does not satisfy the collapsing assumption");

  CollapseReport report;
  const SimplicialComplex& X = config.projection.source();
  report.edge_count = X.edges().size();
  report.dimension = X.dimension();
  const double log_ne = std::log(static_cast<double>(report.edge_count));
  const double m = static_cast<double>(report.dimension);

  std::vector<double> ts = config.t_values;
  std::sort(ts.begin(), ts.end(), std::greater<>());
  for (double t : ts) {
    MetricComplex gt = build_gt(config.projection, t);
    CollapseRow row;
    row.t = t;
    row.volume = gt.total_volume(report.dimension);
    LoopCountSeries series =
        count_loops(gt, config.basepoint, backend, config.t_max_loops, options);
    EntropyEstimate est = volume_entropy_estimate(series);
    row.entropy = est.value;
    row.entropy_ci = est.ci;
    row.bound = log_ne + 2.0 * t;
    row.product = est.value * std::pow(row.volume, 1.0 / m);
    row.bound_pass = row.entropy <= row.bound + est.ci;
    report.rows.push_back(row);
  }
  report.volumes_decreasing = true;
  for (std::size_t i = 1; i < report.rows.size(); ++i)
    if (report.rows[i].volume >= report.rows[i - 1].volume)
      report.volumes_decreasing = false;
  return report;
}

bool theorem_a_bound_check(const CollapseReport& report) {
  if (report.rows.empty())
    throw invalid_input("theorem_a_bound_check: empty report");
  return std::all_of(report.rows.begin(), report.rows.end(),
                     [](const CollapseRow& r) { return r.bound_pass; });
}

}  // namespace volent
