#ifndef VOLENT_MARGULIS_HPP
#define VOLENT_MARGULIS_HPP

#include <optional>

#include "volent/loop_count.hpp"
#include "volent/metric_complex.hpp"
#include "volent/pi1.hpp"

namespace volent {

/// A homomorphism out of pi1(X) given by generator images in a target
/// backend's alphabet (identity when absent).
struct WordMap {
  BackendPtr target;
  std::vector<Word> images;  // one word per source backend generator

  Word apply(const Word& w) const { return apply_word_map(images, w); }
};

/// Elements realized by based loops of length at most the bound, with the
/// realized lengths; closed under inversion by construction.
struct ShortLoopSystem {
  VertexId basepoint = 0;
  double length_bound = 0;
  std::vector<Word> generators;        // phi-images when phi is given
  std::vector<double> realized_lengths;
};

ShortLoopSystem short_loop_generators(const MetricComplex& metric, VertexId x,
                                      double length_bound,
                                      const ComplexBackend& backend,
                                      const WordMap* phi = nullptr,
                                      const LoopCountOptions& options = {});

struct PointBracket {
  VertexId vertex = 0;        // vertex of the sampled (subdivided) complex
  bool original = true;       // false for edge midpoints
  double lo = 0;              // largest tested length with polynomial verdict
  double hi = 0;              // smallest tested length with exp/unknown verdict
  bool finite = true;         // false: polynomial even at the search ceiling
  bool unknown_involved = false;
};

struct MargulisReport {
  std::vector<PointBracket> points;
  double resolution = 0;   // search grid delta-ell
  double search_ceiling = 0;
  bool finite = true;      // some point has a finite bracket
  double global_lo = 0;    // min over points (sentinel when !finite)
  double global_hi = 0;
  VertexId minimizing_vertex = -1;
  bool any_unknown = false;
  std::string to_json() const;
};

/// Margulis-type constant: per-basepoint brackets for the supremal length
/// whose short-loop subgroup still has subexponential growth.  Basepoints
/// are all vertices and all edge midpoints (inserted by one midpoint
/// subdivision); binary search at resolution delta_ell over [0, diam + 1].
/// Unknown verdicts shrink brackets pessimistically and are flagged.
MargulisReport margulis_constant(const MetricComplex& metric,
                                 const WordMap* phi, double delta_ell,
                                 const ClassifyOptions& classify_options = {},
                                 const LoopCountOptions& loop_options = {});

struct InequalityCheck {
  bool pass = false;
  double lhs = 0;
  double rhs = 0;
  double tolerance = 0;
  EntropyEstimate lhs_estimate;
  EntropyEstimate rhs_estimate;
};

/// ent(H, S) <= ent(X, g) * L within combined confidence intervals, where H
/// is generated by the loops of length <= L based at x.
InequalityCheck prop_entL_check(const MetricComplex& metric,
                                const ComplexBackend& backend, VertexId x,
                                double L, double t_max, int n_max = 10,
                                const LoopCountOptions& options = {});

/// diam_X(U) * ent(X) >= ent(Gamma_U) / 2 within combined tolerances.
InequalityCheck prop_diament_check(const MetricComplex& metric,
                                   const ComplexBackend& backend,
                                   const Subcomplex& U, VertexId basepoint,
                                   double t_max, int n_max = 10,
                                   const LoopCountOptions& options = {});

struct ChainLink {
  std::string name;
  double lhs = 0, rhs = 0, tolerance = 0;
  bool comparable = true;
  bool pass = true;
};

struct ChainReport {
  bool applicable = true;  // false when the margulis constant is infinite
  std::vector<ChainLink> links;
  double ratio_last = 0;  // ent(X) * ell / (ent(X) * vol^(1/m)), data only
  bool all_pass() const;
};

/// The inequality chain delta <= ent(H0) <= ent(H) <= ent(X) * ell_phi(X),
/// with the final volume link reported as a ratio only.
ChainReport chain_check(const MetricComplex& metric,
                        const ComplexBackend& backend, const WordMap* phi,
                        double delta, double delta_ell, double t_max,
                        const ClassifyOptions& classify_options = {},
                        const LoopCountOptions& loop_options = {});

}  // namespace volent

#endif
