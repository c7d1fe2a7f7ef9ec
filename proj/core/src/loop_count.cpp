#include "volent/loop_count.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "volent/errors.hpp"

namespace volent {

namespace {

// Interned word storage: one byte arena plus an open-addressing table.
// Ids are dense and stable; lookups never allocate.
class WordInterner {
 public:
  WordInterner() { table_.assign(1u << 16, kEmpty); }

  std::uint32_t intern(const Word& w, bool* inserted) {
    key_.clear();
    for (Letter x : w) {
      if (x > 127 || x < -127)
        throw invalid_input("loop state: generator index out of byte range");
      key_.push_back(static_cast<char>(static_cast<signed char>(x)));
    }
    const std::uint64_t h = hash_bytes(key_.data(), key_.size());
    std::size_t mask = table_.size() - 1;
    std::size_t slot = h & mask;
    while (table_[slot] != kEmpty) {
      std::uint32_t id = table_[slot];
      if (matches(id, key_)) {
        if (inserted) *inserted = false;
        return id;
      }
      slot = (slot + 1) & mask;
    }
    std::uint32_t id = static_cast<std::uint32_t>(offlen_.size());
    offlen_.push_back((arena_.size() << 8) | key_.size());
    arena_.insert(arena_.end(), key_.begin(), key_.end());
    table_[slot] = id;
    if (inserted) *inserted = true;
    ++count_;
    if (count_ * 3 > table_.size() * 2) grow();
    return id;
  }

  void decode(std::uint32_t id, Word& out) const {
    const std::uint64_t ol = offlen_[id];
    const char* p = arena_.data() + (ol >> 8);
    const std::size_t len = ol & 0xff;
    out.clear();
    for (std::size_t i = 0; i < len; ++i)
      out.push_back(static_cast<signed char>(p[i]));
  }

  std::size_t size() const { return offlen_.size(); }

 private:
  static constexpr std::uint32_t kEmpty = 0xffffffffu;

  static std::uint64_t hash_bytes(const char* p, std::size_t n) {
    std::uint64_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < n; ++i) {
      h ^= static_cast<unsigned char>(p[i]);
      h *= 1099511628211ull;
    }
    h ^= h >> 33;
    h *= 0xff51afd7ed558ccdull;
    h ^= h >> 33;
    return h;
  }

  bool matches(std::uint32_t id, const std::string& key) const {
    const std::uint64_t ol = offlen_[id];
    if ((ol & 0xff) != key.size()) return false;
    return std::equal(key.begin(), key.end(), arena_.data() + (ol >> 8));
  }

  void grow() {
    std::vector<std::uint32_t> next(table_.size() * 2, kEmpty);
    const std::size_t mask = next.size() - 1;
    for (std::uint32_t id_plus : table_) {
      if (id_plus == kEmpty) continue;
      const std::uint64_t ol = offlen_[id_plus];
      std::uint64_t h = hash_bytes(arena_.data() + (ol >> 8), ol & 0xff);
      std::size_t slot = h & mask;
      while (next[slot] != kEmpty) slot = (slot + 1) & mask;
      next[slot] = id_plus;
    }
    table_ = std::move(next);
  }

  std::vector<char> arena_;
  std::vector<std::uint64_t> offlen_;
  std::vector<std::uint32_t> table_;
  std::size_t count_ = 0;
  std::string key_;
};

// Open-addressing map from state key to (dist << 1 | settled).
class StateTable {
 public:
  StateTable() { init(1u << 16); }

  // Returns a pointer to the value slot for the key, inserting with
  // `fresh` when absent (sets *inserted).
  std::uint64_t* probe(std::uint64_t key, std::uint64_t fresh, bool* inserted) {
    std::size_t mask = keys_.size() - 1;
    std::size_t slot = mix(key) & mask;
    while (keys_[slot] != kEmpty) {
      if (keys_[slot] == key) {
        *inserted = false;
        return &vals_[slot];
      }
      slot = (slot + 1) & mask;
    }
    keys_[slot] = key;
    vals_[slot] = fresh;
    *inserted = true;
    ++count_;
    if (count_ * 3 > keys_.size() * 2) {
      grow();
      return probe(key, fresh, inserted);  // relocate
    }
    return &vals_[slot];
  }

  std::size_t size() const { return count_; }

 private:
  static constexpr std::uint64_t kEmpty = 0xffffffffffffffffull;

  static std::uint64_t mix(std::uint64_t x) {
    x ^= x >> 33;
    x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33;
    x *= 0xc4ceb9fe1a85ec53ull;
    x ^= x >> 33;
    return x;
  }

  void init(std::size_t n) {
    keys_.assign(n, kEmpty);
    vals_.assign(n, 0);
    count_ = 0;
  }

  void grow() {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint64_t> old_vals = std::move(vals_);
    init(old_keys.size() * 2);
    std::size_t mask = keys_.size() - 1;
    for (std::size_t i = 0; i < old_keys.size(); ++i) {
      if (old_keys[i] == kEmpty) continue;
      std::size_t slot = mix(old_keys[i]) & mask;
      while (keys_[slot] != kEmpty) slot = (slot + 1) & mask;
      keys_[slot] = old_keys[i];
      vals_[slot] = old_vals[i];
      ++count_;
    }
  }

  std::vector<std::uint64_t> keys_;
  std::vector<std::uint64_t> vals_;
  std::size_t count_ = 0;
};

struct DirectedArc {
  VertexId to;
  int edge;
  bool forward;
};

LoopCountSeries run_loop_dijkstra(const MetricComplex& metric,
                                  const Subcomplex* restrict_to,
                                  VertexId basepoint,
                                  const ComplexBackend& cb, double t_max,
                                  const LoopCountOptions& options,
                                  std::vector<std::pair<Word, double>>* orbit) {
  const SimplicialComplex& X = metric.complex();
  if (cb.complex && cb.complex.get() != metric.complex_ptr().get())
    throw invalid_input("count_loops: backend was built on a different complex");
  if (basepoint < 0 || basepoint >= X.vertex_count())
    throw invalid_input("count_loops: basepoint out of range");
  if (!(t_max > 0)) throw invalid_input("count_loops: t_max must be positive");
  if (restrict_to) {
    if (!restrict_to->vertex_mask().at(basepoint))
      throw invalid_input("subcomplex_loop_counts: basepoint not in subcomplex");
    if (!restrict_to->connected())
      throw invalid_input("subcomplex_loop_counts: subcomplex not connected");
  }

  const double step = metric.min_edge_length() / 2.0;
  if (!(step > 0)) throw invalid_input("count_loops: complex has no edges");

  // Quantized mode when every edge length is an integer multiple of step.
  bool quantized = true;
  std::vector<std::uint32_t> qweight(X.edges().size(), 0);
  for (std::size_t e = 0; e < X.edges().size(); ++e) {
    double r = metric.edge_length(e) / step;
    double rounded = std::round(r);
    if (std::abs(r - rounded) > 1e-9 * std::max(1.0, r)) {
      quantized = false;
      break;
    }
    qweight[e] = static_cast<std::uint32_t>(rounded);
  }
  const std::uint32_t qmax =
      static_cast<std::uint32_t>(std::floor(t_max / step + 1e-9));
  if (quantized && qmax > 50000000) quantized = false;

  // Lower bound for pruning: skeleton distance to the basepoint.
  std::vector<double> base_dist = metric.dijkstra(basepoint);

  // Adjacency restricted to the subcomplex when given.
  std::vector<std::vector<DirectedArc>> arcs(X.vertex_count());
  for (std::size_t e = 0; e < X.edges().size(); ++e) {
    if (restrict_to && !restrict_to->edge_mask()[e]) continue;
    VertexId u = X.edges()[e][0], v = X.edges()[e][1];
    arcs[u].push_back({v, static_cast<int>(e), true});
    arcs[v].push_back({u, static_cast<int>(e), false});
  }

  const Backend& backend = cb.backend();
  const std::uint64_t nv = static_cast<std::uint64_t>(X.vertex_count());

  WordInterner words;
  Word scratch, appended;
  bool inserted = false;
  const std::uint32_t id_identity = words.intern({}, &inserted);

  LoopCountSeries series;
  series.basepoint = basepoint;
  const int n_thresholds = static_cast<int>(std::floor(t_max / step + 1e-9));
  series.thresholds.resize(n_thresholds + 1);
  for (int k = 0; k <= n_thresholds; ++k) series.thresholds[k] = k * step;
  std::vector<std::uint64_t> hits(n_thresholds + 1, 0);

  auto record_hit = [&](double dist) {
    // cumulative later; here: first threshold index >= dist
    int k = static_cast<int>(std::ceil(dist / step - options.epsilon));
    if (k < 0) k = 0;
    if (k <= n_thresholds) hits[k] += 1;
  };

  std::size_t states = 0;

  if (quantized) {
    StateTable table;
    std::vector<std::vector<std::uint64_t>> buckets(qmax + 1);
    auto push_state = [&](std::uint64_t key, std::uint32_t d) {
      buckets[d].push_back(key);
    };
    std::uint64_t start_key = static_cast<std::uint64_t>(id_identity) * nv +
                              static_cast<std::uint64_t>(basepoint);
    table.probe(start_key, 0, &inserted);
    push_state(start_key, 0);
    std::vector<std::uint32_t> qbase(X.vertex_count());
    for (int v = 0; v < X.vertex_count(); ++v) {
      double b = base_dist[v];
      qbase[v] = std::isinf(b)
                     ? qmax + 1
                     : static_cast<std::uint32_t>(std::round(b / step));
    }
    for (std::uint32_t d = 0; d <= qmax; ++d) {
      for (std::size_t bi = 0; bi < buckets[d].size(); ++bi) {
        const std::uint64_t key = buckets[d][bi];
        bool fresh_insert = false;
        std::uint64_t* val = table.probe(key, 0, &fresh_insert);
        if ((*val >> 1) != d || (*val & 1)) continue;  // stale or settled
        *val |= 1;
        const VertexId v = static_cast<VertexId>(key % nv);
        const std::uint32_t word_id = static_cast<std::uint32_t>(key / nv);
        words.decode(word_id, scratch);
        if (v == basepoint) {
          record_hit(d * step);
          if (orbit) orbit->push_back({scratch, d * step});
        }
        for (const DirectedArc& arc : arcs[v]) {
          const std::uint32_t nd = d + qweight[arc.edge];
          if (nd > qmax) continue;
          if (nd + qbase[arc.to] > qmax) continue;
          const Word& ew = cb.edge_word(arc.edge, arc.forward);
          std::uint32_t nid;
          if (ew.empty()) {
            nid = word_id;  // tree edge: deck element unchanged
          } else {
            appended = scratch;
            appended.insert(appended.end(), ew.begin(), ew.end());
            appended = backend.normal_form(appended);
            nid = words.intern(appended, &inserted);
          }
          std::uint64_t nkey =
              static_cast<std::uint64_t>(nid) * nv + static_cast<std::uint64_t>(arc.to);
          std::uint64_t fresh = (static_cast<std::uint64_t>(nd) << 1);
          std::uint64_t* nval = table.probe(nkey, fresh, &fresh_insert);
          if (fresh_insert) {
            if (table.size() > options.state_cap)
              throw budget_error("count_loops: state cap exceeded");
            push_state(nkey, nd);
          } else if (!(*nval & 1) && (*nval >> 1) > nd) {
            *nval = fresh;
            push_state(nkey, nd);
          }
        }
      }
      buckets[d].clear();
      buckets[d].shrink_to_fit();
    }
    states = table.size();
  } else {
    std::unordered_map<std::uint64_t, double> dist;
    std::unordered_set<std::uint64_t> settled;
    using Item = std::pair<double, std::uint64_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    std::uint64_t start_key = static_cast<std::uint64_t>(id_identity) * nv +
                              static_cast<std::uint64_t>(basepoint);
    dist[start_key] = 0;
    pq.push({0.0, start_key});
    while (!pq.empty()) {
      auto [d, key] = pq.top();
      pq.pop();
      auto it = dist.find(key);
      if (it == dist.end() || d > it->second + 1e-15) continue;
      if (!settled.insert(key).second) continue;
      const VertexId v = static_cast<VertexId>(key % nv);
      const std::uint32_t word_id = static_cast<std::uint32_t>(key / nv);
      words.decode(word_id, scratch);
      if (v == basepoint) {
        record_hit(d);
        if (orbit) orbit->push_back({scratch, d});
      }
      for (const DirectedArc& arc : arcs[v]) {
        const double nd = d + metric.edge_length(arc.edge);
        if (nd > t_max + options.epsilon) continue;
        if (nd + base_dist[arc.to] > t_max + options.epsilon) continue;
        const Word& ew = cb.edge_word(arc.edge, arc.forward);
        std::uint32_t nid;
        if (ew.empty()) {
          nid = word_id;
        } else {
          appended = scratch;
          appended.insert(appended.end(), ew.begin(), ew.end());
          appended = backend.normal_form(appended);
          nid = words.intern(appended, &inserted);
        }
        std::uint64_t nkey = static_cast<std::uint64_t>(nid) * nv +
                             static_cast<std::uint64_t>(arc.to);
        auto [dit, fresh_insert] = dist.try_emplace(nkey, nd);
        if (fresh_insert) {
          if (dist.size() > options.state_cap)
            throw budget_error("count_loops: state cap exceeded");
          pq.push({nd, nkey});
        } else if (!settled.count(nkey) && nd < dit->second - 1e-15) {
          dit->second = nd;
          pq.push({nd, nkey});
        }
      }
    }
    states = dist.size();
  }

  series.counts.resize(n_thresholds + 1, 0);
  std::uint64_t running = 0;
  for (int k = 0; k <= n_thresholds; ++k) {
    running += hits[k];
    series.counts[k] = running;
  }
  series.state_count = states;
  return series;
}

}  // namespace

GrowthSeries LoopCountSeries::as_growth_series() const {
  GrowthSeries g;
  g.kind = GrowthSeries::Kind::Loop;
  g.radii = thresholds;
  g.counts = counts;
  return g;
}

std::string LoopCountSeries::to_csv() const {
  std::ostringstream os;
  os << "t,count,log_count\n";
  for (std::size_t i = 0; i < thresholds.size(); ++i)
    os << thresholds[i] << "," << counts[i] << ","
       << std::log(static_cast<double>(counts[i])) << "\n";
  return os.str();
}

LoopCountSeries count_loops(const MetricComplex& metric, VertexId basepoint,
                            const ComplexBackend& backend, double t_max,
                            const LoopCountOptions& options) {
  return run_loop_dijkstra(metric, nullptr, basepoint, backend, t_max, options,
                           nullptr);
}

LoopCountSeries subcomplex_loop_counts(const MetricComplex& metric,
                                       const Subcomplex& sub,
                                       VertexId basepoint,
                                       const ComplexBackend& backend,
                                       double t_max,
                                       const LoopCountOptions& options) {
  return run_loop_dijkstra(metric, &sub, basepoint, backend, t_max, options,
                           nullptr);
}

std::vector<std::pair<Word, double>> basepoint_orbit(
    const MetricComplex& metric, VertexId basepoint,
    const ComplexBackend& backend, double t_max,
    const LoopCountOptions& options) {
  std::vector<std::pair<Word, double>> orbit;
  run_loop_dijkstra(metric, nullptr, basepoint, backend, t_max, options,
                    &orbit);
  std::sort(orbit.begin(), orbit.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return orbit;
}

EntropyEstimate volume_entropy_estimate(const LoopCountSeries& series) {
  if (series.thresholds.size() < 4)
    throw invalid_input("volume_entropy_estimate: need at least 4 thresholds");
  std::vector<double> logs;
  logs.reserve(series.counts.size());
  for (std::uint64_t c : series.counts)
    logs.push_back(std::log(static_cast<double>(c)));
  return fit_top_half_slope(series.thresholds, logs);
}

EntropyVolumeSample entropy_volume_product(const MetricComplex& metric,
                                           VertexId basepoint,
                                           const ComplexBackend& backend,
                                           double t_max,
                                           const LoopCountOptions& options) {
  EntropyVolumeSample out;
  out.dimension = metric.complex().dimension();
  LoopCountSeries series = count_loops(metric, basepoint, backend, t_max, options);
  out.entropy = volume_entropy_estimate(series);
  out.volume = metric.total_volume(out.dimension);
  out.product = out.entropy.value *
                std::pow(out.volume, 1.0 / static_cast<double>(out.dimension));
  return out;
}

}  // namespace volent
