#include "volent/simplicial_complex.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "volent/errors.hpp"

namespace volent {

namespace {

template <std::size_t N>
std::array<VertexId, N> sorted(std::array<VertexId, N> c) {
  std::sort(c.begin(), c.end());
  return c;
}

template <typename CellT>
void sort_unique(std::vector<CellT>& cells) {
  for (auto& c : cells) std::sort(c.begin(), c.end());
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
}

}  // namespace

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<EdgeCell> edges,
                                     std::vector<TriCell> triangles,
                                     std::vector<TetCell> tetrahedra)
    : n_vertices_(n_vertices),
      edges_(std::move(edges)),
      triangles_(std::move(triangles)),
      tetrahedra_(std::move(tetrahedra)) {
  sort_unique(tetrahedra_);
  for (const TetCell& t : tetrahedra_) {
    triangles_.push_back({t[0], t[1], t[2]});
    triangles_.push_back({t[0], t[1], t[3]});
    triangles_.push_back({t[0], t[2], t[3]});
    triangles_.push_back({t[1], t[2], t[3]});
  }
  sort_unique(triangles_);
  for (const TriCell& t : triangles_) {
    edges_.push_back({t[0], t[1]});
    edges_.push_back({t[0], t[2]});
    edges_.push_back({t[1], t[2]});
  }
  sort_unique(edges_);
  build_index();
}

SimplicialComplex SimplicialComplex::raw(int n_vertices,
                                         std::vector<EdgeCell> edges,
                                         std::vector<TriCell> triangles,
                                         std::vector<TetCell> tetrahedra) {
  SimplicialComplex c;
  c.n_vertices_ = n_vertices;
  c.edges_ = std::move(edges);
  for (auto& e : c.edges_) std::sort(e.begin(), e.end());
  c.triangles_ = std::move(triangles);
  for (auto& t : c.triangles_) std::sort(t.begin(), t.end());
  c.tetrahedra_ = std::move(tetrahedra);
  for (auto& t : c.tetrahedra_) std::sort(t.begin(), t.end());
  c.build_index();
  return c;
}

void SimplicialComplex::build_index() {
  for (const EdgeCell& e : edges_) {
    if (e[0] == e[1]) throw invalid_input("edge with equal endpoints");
    if (e[0] < 0 || e[1] >= n_vertices_)
      throw invalid_input("edge vertex out of range");
  }
  for (const TriCell& t : triangles_)
    if (t[0] == t[1] || t[1] == t[2])
      throw invalid_input("triangle with repeated vertex");
  for (const TetCell& t : tetrahedra_)
    if (t[0] == t[1] || t[1] == t[2] || t[2] == t[3])
      throw invalid_input("tetrahedron with repeated vertex");

  adjacency_.assign(n_vertices_, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    adjacency_[edges_[i][0]].push_back({edges_[i][1], static_cast<int>(i)});
    adjacency_[edges_[i][1]].push_back({edges_[i][0], static_cast<int>(i)});
  }
}

int SimplicialComplex::dimension() const {
  if (!tetrahedra_.empty()) return 3;
  if (!triangles_.empty()) return 2;
  if (!edges_.empty()) return 1;
  return 0;
}

long long SimplicialComplex::euler_characteristic() const {
  return static_cast<long long>(n_vertices_) -
         static_cast<long long>(edges_.size()) +
         static_cast<long long>(triangles_.size()) -
         static_cast<long long>(tetrahedra_.size());
}

int SimplicialComplex::edge_index(VertexId u, VertexId v) const {
  EdgeCell key = sorted<2>({u, v});
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it != edges_.end() && *it == key)
    return static_cast<int>(it - edges_.begin());
  return -1;
}

int SimplicialComplex::triangle_index(VertexId a, VertexId b, VertexId c) const {
  TriCell key = sorted<3>({a, b, c});
  auto it = std::lower_bound(triangles_.begin(), triangles_.end(), key);
  if (it != triangles_.end() && *it == key)
    return static_cast<int>(it - triangles_.begin());
  return -1;
}

int SimplicialComplex::tetrahedron_index(const TetCell& t) const {
  TetCell key = sorted<4>(t);
  auto it = std::lower_bound(tetrahedra_.begin(), tetrahedra_.end(), key);
  if (it != tetrahedra_.end() && *it == key)
    return static_cast<int>(it - tetrahedra_.begin());
  return -1;
}

std::array<int, 3> SimplicialComplex::triangle_edges(int tri) const {
  const TriCell& t = triangles_.at(tri);
  std::array<int, 3> out = {edge_index(t[0], t[1]), edge_index(t[0], t[2]),
                            edge_index(t[1], t[2])};
  for (int e : out)
    if (e < 0) throw invalid_input("triangle has a missing edge");
  return out;
}

std::array<int, 4> SimplicialComplex::tetrahedron_triangles(int tet) const {
  const TetCell& t = tetrahedra_.at(tet);
  std::array<int, 4> out = {
      triangle_index(t[1], t[2], t[3]), triangle_index(t[0], t[2], t[3]),
      triangle_index(t[0], t[1], t[3]), triangle_index(t[0], t[1], t[2])};
  for (int f : out)
    if (f < 0) throw invalid_input("tetrahedron has a missing face");
  return out;
}

std::vector<int> SimplicialComplex::vertex_components() const {
  std::vector<int> comp(n_vertices_, -1);
  int next = 0;
  for (int start = 0; start < n_vertices_; ++start) {
    if (comp[start] >= 0) continue;
    comp[start] = next;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : adjacency_[v]) {
        if (comp[w] < 0) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  return comp;
}

bool SimplicialComplex::connected() const {
  if (n_vertices_ <= 1) return true;
  std::vector<int> comp = vertex_components();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

ValidationReport validate(const SimplicialComplex& c) {
  ValidationReport report;
  report.connected = c.connected();

  auto note = [&report](const std::string& v) {
    report.violations.push_back(v);
    report.valid = false;
  };

  std::set<EdgeCell> edge_set(c.edges().begin(), c.edges().end());
  if (edge_set.size() != c.edges().size()) note("duplicate edges");
  std::set<TriCell> tri_set(c.triangles().begin(), c.triangles().end());
  if (tri_set.size() != c.triangles().size()) note("duplicate triangles");
  std::set<TetCell> tet_set(c.tetrahedra().begin(), c.tetrahedra().end());
  if (tet_set.size() != c.tetrahedra().size()) note("duplicate tetrahedra");

  for (const TriCell& t : c.triangles()) {
    for (auto [u, v] : {std::pair{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}}) {
      if (!edge_set.count({u, v}))
        note("triangle (" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
             "," + std::to_string(t[2]) + ") missing edge (" +
             std::to_string(u) + "," + std::to_string(v) + ")");
    }
  }
  for (const TetCell& t : c.tetrahedra()) {
    for (auto f : {TriCell{t[0], t[1], t[2]}, {t[0], t[1], t[3]},
                   {t[0], t[2], t[3]}, {t[1], t[2], t[3]}}) {
      if (!tri_set.count(f))
        note("tetrahedron missing face (" + std::to_string(f[0]) + "," +
             std::to_string(f[1]) + "," + std::to_string(f[2]) + ")");
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Subcomplex

Subcomplex Subcomplex::full_on_vertices(ComplexPtr parent,
                                        const std::vector<VertexId>& vertices) {
  Subcomplex s;
  s.parent_ = std::move(parent);
  const SimplicialComplex& p = *s.parent_;
  s.vertex_in_.assign(p.vertex_count(), 0);
  for (VertexId v : vertices) s.vertex_in_.at(v) = 1;
  s.edge_in_.assign(p.edges().size(), 0);
  for (std::size_t i = 0; i < p.edges().size(); ++i)
    s.edge_in_[i] = s.vertex_in_[p.edges()[i][0]] && s.vertex_in_[p.edges()[i][1]];
  s.tri_in_.assign(p.triangles().size(), 0);
  for (std::size_t i = 0; i < p.triangles().size(); ++i) {
    const TriCell& t = p.triangles()[i];
    s.tri_in_[i] = s.vertex_in_[t[0]] && s.vertex_in_[t[1]] && s.vertex_in_[t[2]];
  }
  s.tet_in_.assign(p.tetrahedra().size(), 0);
  for (std::size_t i = 0; i < p.tetrahedra().size(); ++i) {
    const TetCell& t = p.tetrahedra()[i];
    s.tet_in_[i] = s.vertex_in_[t[0]] && s.vertex_in_[t[1]] &&
                   s.vertex_in_[t[2]] && s.vertex_in_[t[3]];
  }
  return s;
}

Subcomplex Subcomplex::from_cells(ComplexPtr parent,
                                  const std::vector<int>& edge_ids,
                                  const std::vector<int>& triangle_ids,
                                  const std::vector<int>& tetrahedron_ids,
                                  const std::vector<VertexId>& extra_vertices) {
  Subcomplex s;
  s.parent_ = std::move(parent);
  const SimplicialComplex& p = *s.parent_;
  s.vertex_in_.assign(p.vertex_count(), 0);
  s.edge_in_.assign(p.edges().size(), 0);
  s.tri_in_.assign(p.triangles().size(), 0);
  s.tet_in_.assign(p.tetrahedra().size(), 0);
  for (VertexId v : extra_vertices) s.vertex_in_.at(v) = 1;
  for (int t : tetrahedron_ids) {
    s.tet_in_.at(t) = 1;
    for (int f : p.tetrahedron_triangles(t)) s.tri_in_.at(f) = 1;
  }
  for (int t : triangle_ids) s.tri_in_.at(t) = 1;
  for (std::size_t t = 0; t < s.tri_in_.size(); ++t)
    if (s.tri_in_[t])
      for (int e : p.triangle_edges(static_cast<int>(t))) s.edge_in_.at(e) = 1;
  for (int e : edge_ids) s.edge_in_.at(e) = 1;
  for (std::size_t e = 0; e < s.edge_in_.size(); ++e)
    if (s.edge_in_[e]) {
      s.vertex_in_[p.edges()[e][0]] = 1;
      s.vertex_in_[p.edges()[e][1]] = 1;
    }
  return s;
}

std::vector<VertexId> Subcomplex::vertices() const {
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < vertex_in_.size(); ++v)
    if (vertex_in_[v]) out.push_back(static_cast<VertexId>(v));
  return out;
}

std::size_t Subcomplex::vertex_count() const {
  std::size_t n = 0;
  for (char c : vertex_in_) n += (c != 0);
  return n;
}

bool Subcomplex::connected() const { return components().size() <= 1; }

std::vector<Subcomplex> Subcomplex::components() const {
  const SimplicialComplex& p = *parent_;
  std::vector<int> comp(p.vertex_count(), -1);
  int next = 0;
  for (int start = 0; start < p.vertex_count(); ++start) {
    if (!vertex_in_[start] || comp[start] >= 0) continue;
    comp[start] = next;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, e] : p.adjacency()[v]) {
        if (edge_in_[e] && vertex_in_[w] && comp[w] < 0) {
          comp[w] = next;
          q.push(w);
        }
      }
    }
    ++next;
  }
  std::vector<Subcomplex> out;
  for (int ci = 0; ci < next; ++ci) {
    Subcomplex s;
    s.parent_ = parent_;
    s.vertex_in_.assign(p.vertex_count(), 0);
    for (std::size_t v = 0; v < s.vertex_in_.size(); ++v)
      s.vertex_in_[v] = (vertex_in_[v] && comp[v] == ci);
    s.edge_in_.assign(p.edges().size(), 0);
    for (std::size_t e = 0; e < s.edge_in_.size(); ++e)
      s.edge_in_[e] = edge_in_[e] && s.vertex_in_[p.edges()[e][0]];
    s.tri_in_.assign(p.triangles().size(), 0);
    for (std::size_t t = 0; t < s.tri_in_.size(); ++t)
      s.tri_in_[t] = tri_in_[t] && s.vertex_in_[p.triangles()[t][0]];
    s.tet_in_.assign(p.tetrahedra().size(), 0);
    for (std::size_t t = 0; t < s.tet_in_.size(); ++t)
      s.tet_in_[t] = tet_in_[t] && s.vertex_in_[p.tetrahedra()[t][0]];
    out.push_back(std::move(s));
  }
  return out;
}

std::pair<SimplicialComplex, std::vector<VertexId>> Subcomplex::as_complex() const {
  const SimplicialComplex& p = *parent_;
  std::vector<VertexId> to_parent;
  std::vector<int> to_local(p.vertex_count(), -1);
  for (int v = 0; v < p.vertex_count(); ++v) {
    if (vertex_in_[v]) {
      to_local[v] = static_cast<int>(to_parent.size());
      to_parent.push_back(v);
    }
  }
  std::vector<EdgeCell> edges;
  for (std::size_t e = 0; e < edge_in_.size(); ++e)
    if (edge_in_[e])
      edges.push_back({to_local[p.edges()[e][0]], to_local[p.edges()[e][1]]});
  std::vector<TriCell> tris;
  for (std::size_t t = 0; t < tri_in_.size(); ++t)
    if (tri_in_[t])
      tris.push_back({to_local[p.triangles()[t][0]], to_local[p.triangles()[t][1]],
                      to_local[p.triangles()[t][2]]});
  std::vector<TetCell> tets;
  for (std::size_t t = 0; t < tet_in_.size(); ++t)
    if (tet_in_[t])
      tets.push_back({to_local[p.tetrahedra()[t][0]], to_local[p.tetrahedra()[t][1]],
                      to_local[p.tetrahedra()[t][2]], to_local[p.tetrahedra()[t][3]]});
  SimplicialComplex c(static_cast<int>(to_parent.size()), std::move(edges),
                      std::move(tris), std::move(tets));
  return {std::move(c), std::move(to_parent)};
}

}  // namespace volent
