#include "volent/stallings.hpp"

#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "volent/errors.hpp"

namespace volent {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[b] = a;
    return a;
  }
};

}  // namespace

StallingsGraph::StallingsGraph(int ambient_rank,
                               const std::vector<Word>& generators)
    : ambient_rank_(ambient_rank) {
  if (ambient_rank < 0) throw invalid_input("negative rank");

  // Edge list (u, positive letter, v); vertex 0 is the base.
  struct Edge {
    int u, v;
    int gen;
  };
  std::vector<Edge> edges;
  int next_vertex = 1;
  for (const Word& g : generators) {
    Word w = free_reduce(g);
    int cur = 0;
    for (std::size_t i = 0; i < w.size(); ++i) {
      int to = (i + 1 == w.size()) ? 0 : next_vertex++;
      if (w[i] > 0)
        edges.push_back({cur, to, letter_gen(w[i])});
      else
        edges.push_back({to, cur, letter_gen(w[i])});
      cur = to;
    }
  }

  UnionFind uf(next_vertex);
  // Fold until stable: no vertex may carry two equal labels toward
  // different targets (in either direction).
  bool changed = true;
  while (changed) {
    changed = false;
    std::map<std::pair<int, int>, int> out, in;
    for (const Edge& e : edges) {
      int u = uf.find(e.u), v = uf.find(e.v);
      auto [it_o, new_o] = out.try_emplace({u, e.gen}, v);
      if (!new_o && uf.find(it_o->second) != v) {
        uf.unite(uf.find(it_o->second), v);
        changed = true;
        break;
      }
      auto [it_i, new_i] = in.try_emplace({v, e.gen}, u);
      if (!new_i && uf.find(it_i->second) != u) {
        uf.unite(uf.find(it_i->second), u);
        changed = true;
        break;
      }
    }
  }

  // Collapse to distinct labeled edges between folded vertices.
  std::set<std::tuple<int, int, int>> folded;
  for (const Edge& e : edges)
    folded.insert({uf.find(e.u), uf.find(e.v), e.gen});

  std::set<int> verts{uf.find(0)};
  for (const auto& [u, v, g] : folded) {
    verts.insert(u);
    verts.insert(v);
  }

  std::map<int, int> id;
  for (int v : verts) {
    id[v] = static_cast<int>(live_.size());
    live_.push_back(v);
  }
  base_ = id.at(uf.find(0));
  transitions_.assign(live_.size(), std::vector<int>(2 * ambient_rank_, -1));
  for (const auto& [u, v, g] : folded) {
    transitions_[id.at(u)][2 * g] = id.at(v);
    transitions_[id.at(v)][2 * g + 1] = id.at(u);
  }

  // Core rank: trim degree-1 vertices (base included, harmless for b1),
  // then rank = E - V + 1 on what remains, or 0 for the empty/point graph.
  std::vector<int> degree(live_.size(), 0);
  std::set<std::pair<int, std::pair<int, int>>> und;
  for (const auto& [u, v, g] : folded)
    und.insert({g, {std::min(id.at(u), id.at(v)), std::max(id.at(u), id.at(v))}});
  // Count endpoint incidences per vertex, loops twice.
  std::vector<std::vector<std::pair<int, int>>> adj(live_.size());
  int edge_id = 0;
  std::vector<bool> edge_alive;
  for (const auto& [u, v, g] : folded) {
    int a = id.at(u), b = id.at(v);
    adj[a].push_back({b, edge_id});
    if (a != b) adj[b].push_back({a, edge_id});
    degree[a]++;
    if (a != b)
      degree[b]++;
    else
      degree[a]++;
    edge_alive.push_back(true);
    ++edge_id;
  }
  std::vector<bool> vert_alive(live_.size(), true);
  std::queue<int> leaves;
  for (std::size_t v = 0; v < live_.size(); ++v)
    if (degree[v] <= 1) leaves.push(static_cast<int>(v));
  int nv = static_cast<int>(live_.size());
  int ne = edge_id;
  while (!leaves.empty()) {
    int v = leaves.front();
    leaves.pop();
    if (!vert_alive[v] || degree[v] > 1) continue;
    vert_alive[v] = false;
    --nv;
    for (auto [w, eid] : adj[v]) {
      if (!edge_alive[eid]) continue;
      edge_alive[eid] = false;
      --ne;
      degree[w]--;
      degree[v]--;
      if (vert_alive[w] && degree[w] <= 1) leaves.push(w);
    }
  }
  rank_ = (nv <= 0) ? 0 : ne - nv + 1;
}

bool StallingsGraph::contains(const Word& w) const {
  int cur = base_;
  for (Letter x : free_reduce(w)) {
    cur = transitions_[cur][slot(x)];
    if (cur < 0) return false;
  }
  return cur == base_;
}

}  // namespace volent
