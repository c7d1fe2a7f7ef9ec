#include "volent/margulis.hpp"

#include <algorithm>
#include <cmath>
#include <nlohmann/json.hpp>
#include <set>

#include "volent/errors.hpp"
#include "volent/subdivision.hpp"

namespace volent {

using nlohmann::json;

ShortLoopSystem short_loop_generators(const MetricComplex& metric, VertexId x,
                                      double length_bound,
                                      const ComplexBackend& backend,
                                      const WordMap* phi,
                                      const LoopCountOptions& options) {
  if (!(length_bound > 0))
    throw invalid_input("short_loop_generators: bound must be positive");
  ShortLoopSystem out;
  out.basepoint = x;
  out.length_bound = length_bound;
  std::vector<std::pair<Word, double>> orbit =
      basepoint_orbit(metric, x, backend, length_bound, options);
  std::set<std::string> seen;
  for (auto& [g, d] : orbit) {
    if (g.empty()) continue;  // identity
    Word image = phi ? phi->apply(g) : g;
    const Backend& target = phi ? *phi->target : backend.backend();
    Word nf = target.normal_form(image);
    if (nf.empty()) continue;
    if (!seen.insert(word_key(nf)).second) continue;
    out.generators.push_back(std::move(nf));
    out.realized_lengths.push_back(d);
  }
  return out;
}

namespace {

struct SampledPoint {
  VertexId vertex;
  bool original;
};

GrowthVerdict verdict_at(const std::vector<std::pair<Word, double>>& orbit,
                         double ell, const Backend& classify_backend,
                         const WordMap* phi,
                         const ClassifyOptions& classify_options) {
  std::vector<Word> gens;
  for (const auto& [g, d] : orbit) {
    if (d > ell + 1e-12) break;  // sorted by distance
    if (g.empty()) continue;
    gens.push_back(phi ? phi->apply(g) : g);
  }
  return classify_backend.classify_subgroup(gens, classify_options);
}

}  // namespace

MargulisReport margulis_constant(const MetricComplex& metric,
                                 const WordMap* phi, double delta_ell,
                                 const ClassifyOptions& classify_options,
                                 const LoopCountOptions& loop_options) {
  if (!(delta_ell > 0)) throw invalid_input("margulis: resolution must be > 0");

  // Sample basepoints at all vertices and edge midpoints.
  Subdivision sub = midpoint_subdivide(metric.complex());
  MetricComplex fine = subdivide_metric(metric, sub);
  ComplexBackend cb = make_complex_backend(sub.complex, 0);
  const Backend& classify_backend = phi ? *phi->target : cb.backend();

  MargulisReport report;
  report.resolution = delta_ell;
  const double ceiling = fine.diameter_upper_bound() + 1.0;
  report.search_ceiling = ceiling;
  const int k_max = static_cast<int>(std::ceil(ceiling / delta_ell));

  for (VertexId v = 0; v < sub.complex->vertex_count(); ++v) {
    PointBracket pb;
    pb.vertex = v;
    pb.original = sub.vertex_cell[v].size() == 1;

    std::vector<std::pair<Word, double>> orbit =
        basepoint_orbit(fine, v, cb, ceiling, loop_options);

    auto verdict = [&](double ell) {
      return verdict_at(orbit, ell, classify_backend, phi, classify_options);
    };

    GrowthVerdict top = verdict(ceiling);
    if (top.is_polynomial()) {
      pb.finite = false;
      pb.lo = ceiling;
      pb.hi = std::numeric_limits<double>::infinity();
      report.points.push_back(pb);
      continue;
    }
    pb.unknown_involved = top.is_unknown();

    int k_lo = 0, k_hi = k_max;  // verdict(0) trivial: polynomial
    while (k_hi - k_lo > 1) {
      int mid = (k_lo + k_hi) / 2;
      GrowthVerdict v_mid = verdict(mid * delta_ell);
      if (v_mid.is_polynomial()) {
        k_lo = mid;
      } else {
        k_hi = mid;
        if (v_mid.is_unknown()) pb.unknown_involved = true;
      }
    }
    pb.lo = k_lo * delta_ell;
    pb.hi = k_hi * delta_ell;
    pb.finite = true;
    report.points.push_back(pb);
  }

  report.finite = false;
  report.global_lo = std::numeric_limits<double>::infinity();
  report.global_hi = std::numeric_limits<double>::infinity();
  for (const PointBracket& pb : report.points) {
    report.any_unknown = report.any_unknown || pb.unknown_involved;
    if (!pb.finite) continue;
    report.finite = true;
    report.global_lo = std::min(report.global_lo, pb.lo);
    if (pb.hi < report.global_hi) {
      report.global_hi = pb.hi;
      report.minimizing_vertex = pb.vertex;
    }
  }
  if (!report.finite) {
    report.global_lo = report.global_hi = std::numeric_limits<double>::infinity();
  }
  return report;
}

std::string MargulisReport::to_json() const {
  json j;
  j["resolution"] = resolution;
  j["search_ceiling"] = search_ceiling;
  j["finite"] = finite;
  if (finite) {
    j["global_lo"] = global_lo;
    j["global_hi"] = global_hi;
    j["minimizing_vertex"] = minimizing_vertex;
  } else {
    j["global"] = "infinity";
  }
  j["any_unknown"] = any_unknown;
  json pts = json::array();
  for (const PointBracket& pb : points) {
    json p;
    p["vertex"] = pb.vertex;
    p["original_vertex"] = pb.original;
    if (pb.finite) {
      p["lo"] = pb.lo;
      p["hi"] = pb.hi;
    } else {
      p["bracket"] = "infinity";
    }
    p["unknown_involved"] = pb.unknown_involved;
    pts.push_back(p);
  }
  j["points"] = pts;
  return j.dump(2);
}

InequalityCheck prop_entL_check(const MetricComplex& metric,
                                const ComplexBackend& backend, VertexId x,
                                double L, double t_max, int n_max,
                                const LoopCountOptions& options) {
  if (!(L > 0)) throw invalid_input("prop_entL_check: L must be positive");
  InequalityCheck out;
  ShortLoopSystem H =
      short_loop_generators(metric, x, L, backend, nullptr, options);
  if (!H.generators.empty()) {
    GrowthSeries s = ball_counts(backend.backend(), H.generators, n_max);
    out.lhs_estimate = entropy_estimate(s);
  }
  LoopCountSeries loops = count_loops(metric, x, backend, t_max, options);
  out.rhs_estimate = volume_entropy_estimate(loops);
  out.lhs = out.lhs_estimate.value;
  out.rhs = out.rhs_estimate.value * L;
  out.tolerance = out.lhs_estimate.ci + out.rhs_estimate.ci * L + 0.05;
  out.pass = out.lhs <= out.rhs + out.tolerance;
  return out;
}

InequalityCheck prop_diament_check(const MetricComplex& metric,
                                   const ComplexBackend& backend,
                                   const Subcomplex& U, VertexId basepoint,
                                   double t_max, int n_max,
                                   const LoopCountOptions& options) {
  if (!U.connected())
    throw invalid_input("prop_diament_check: subcomplex must be connected");
  InequalityCheck out;
  double diam = metric.ambient_diameter(U);
  std::vector<Word> gens = subgroup_of_subcomplex(backend, U);
  if (!gens.empty()) {
    GrowthSeries s = ball_counts(backend.backend(), gens, n_max);
    out.lhs_estimate = entropy_estimate(s);
  }
  LoopCountSeries loops = count_loops(metric, basepoint, backend, t_max, options);
  out.rhs_estimate = volume_entropy_estimate(loops);
  out.lhs = 0.5 * out.lhs_estimate.value;
  out.rhs = diam * out.rhs_estimate.value;
  out.tolerance = 0.5 * out.lhs_estimate.ci + diam * out.rhs_estimate.ci + 0.05;
  out.pass = out.lhs <= out.rhs + out.tolerance;
  return out;
}

bool ChainReport::all_pass() const {
  return std::all_of(links.begin(), links.end(),
                     [](const ChainLink& l) { return !l.comparable || l.pass; });
}

ChainReport chain_check(const MetricComplex& metric,
                        const ComplexBackend& backend, const WordMap* phi,
                        double delta, double delta_ell, double t_max,
                        const ClassifyOptions& classify_options,
                        const LoopCountOptions& loop_options) {
  (void)backend;  // the subdivided backend is rebuilt to match the samples
  ChainReport report;
  MargulisReport mr =
      margulis_constant(metric, phi, delta_ell, classify_options, loop_options);
  if (!mr.finite) {
    report.applicable = false;
    return report;
  }

  Subdivision sub = midpoint_subdivide(metric.complex());
  MetricComplex fine = subdivide_metric(metric, sub);
  ComplexBackend cb = make_complex_backend(sub.complex, 0);
  VertexId x = mr.minimizing_vertex;
  double ell = mr.global_hi;

  ShortLoopSystem H =
      short_loop_generators(fine, x, ell + delta_ell, cb, nullptr, loop_options);
  EntropyEstimate ent_H;
  if (!H.generators.empty())
    ent_H = entropy_estimate(ball_counts(cb.backend(), H.generators, 10));

  EntropyEstimate ent_H0 = ent_H;
  if (phi) {
    std::vector<Word> image;
    for (const Word& g : H.generators) {
      Word w = phi->target->normal_form(phi->apply(g));
      if (!w.empty()) image.push_back(std::move(w));
    }
    ent_H0 = EntropyEstimate{};
    if (!image.empty())
      ent_H0 = entropy_estimate(ball_counts(*phi->target, image, 10));
  }

  EntropyEstimate ent_X =
      volume_entropy_estimate(count_loops(fine, x, cb, t_max, loop_options));

  ChainLink l1{"delta <= ent(H0)", delta, ent_H0.value, ent_H0.ci + 0.05, true,
               delta <= ent_H0.value + ent_H0.ci + 0.05};
  ChainLink l2{"ent(H0) <= ent(H)", ent_H0.value, ent_H.value,
               ent_H0.ci + ent_H.ci + 0.05, true,
               ent_H0.value <= ent_H.value + ent_H0.ci + ent_H.ci + 0.05};
  ChainLink l3{"ent(H) <= ent(X) * ell", ent_H.value, ent_X.value * ell,
               ent_H.ci + ent_X.ci * ell + 0.05, true,
               ent_H.value <= ent_X.value * ell + ent_H.ci + ent_X.ci * ell + 0.05};
  report.links = {l1, l2, l3};

  const int m = fine.complex().dimension();
  double vol = fine.total_volume(m);
  if (vol > 0)
    report.ratio_last = ell / std::pow(vol, 1.0 / static_cast<double>(m));
  return report;
}

}  // namespace volent
