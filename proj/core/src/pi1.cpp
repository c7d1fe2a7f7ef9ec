#include "volent/pi1.hpp"

#include <queue>

#include "volent/errors.hpp"

namespace volent {

Word Pi1Data::crossing_word(int edge_id, bool forward) const {
  int g = edge_generator.at(edge_id);
  if (g < 0) return {};
  return {make_letter(g, !forward)};
}

Pi1Data pi1_presentation(const ComplexPtr& complex, VertexId basepoint) {
  const SimplicialComplex& X = *complex;
  if (!X.connected())
    throw Error(ErrorCode::Disconnected, "pi1: complex is not connected");
  if (basepoint < 0 || basepoint >= X.vertex_count())
    throw invalid_input("pi1: basepoint out of range");

  Pi1Data data;
  data.basepoint = basepoint;
  data.tree_parent.assign(X.vertex_count(), -1);
  data.tree_edge.assign(X.vertex_count(), -1);
  data.edge_generator.assign(X.edges().size(), -1);

  std::vector<char> visited(X.vertex_count(), 0);
  std::vector<char> in_tree(X.edges().size(), 0);
  std::queue<VertexId> q;
  visited[basepoint] = 1;
  q.push(basepoint);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (auto [w, e] : X.adjacency()[v]) {
      if (!visited[w]) {
        visited[w] = 1;
        in_tree[e] = 1;
        data.tree_parent[w] = v;
        data.tree_edge[w] = e;
        q.push(w);
      }
    }
  }

  int next_gen = 0;
  for (std::size_t e = 0; e < X.edges().size(); ++e)
    if (!in_tree[e]) data.edge_generator[e] = next_gen++;

  std::vector<std::string> names;
  for (int g = 0; g < next_gen; ++g) names.push_back("e" + std::to_string(g));

  // One relator per triangle: the boundary crossing word a->b->c->a.
  std::vector<Word> relators;
  for (const TriCell& t : X.triangles()) {
    Word r;
    const std::array<std::pair<VertexId, VertexId>, 3> sides = {
        std::pair{t[0], t[1]}, {t[1], t[2]}, {t[2], t[0]}};
    for (auto [u, v] : sides) {
      int e = X.edge_index(u, v);
      Word w = data.crossing_word(e, u < v);
      r.insert(r.end(), w.begin(), w.end());
    }
    r = cyclic_reduce(r);
    if (!r.empty()) relators.push_back(std::move(r));
  }
  data.presentation = Presentation(std::move(names), std::move(relators));
  return data;
}

ComplexBackend make_complex_backend(const ComplexPtr& complex,
                                    VertexId basepoint) {
  ComplexBackend out;
  out.complex = complex;
  out.pi1 = pi1_presentation(complex, basepoint);
  out.detected = detect_backend(out.pi1.presentation);
  out.edge_words.resize(2 * complex->edges().size());
  for (std::size_t e = 0; e < complex->edges().size(); ++e) {
    Word fwd = out.pi1.crossing_word(static_cast<int>(e), true);
    out.edge_words[2 * e] = out.detected.rewrite(fwd);
    out.edge_words[2 * e + 1] = out.detected.rewrite(inverse(fwd));
  }
  return out;
}

std::vector<Word> subgroup_of_subcomplex(const ComplexBackend& cb,
                                         const Subcomplex& sub,
                                         VertexId sub_basepoint) {
  const SimplicialComplex& X = *sub.parent();
  std::vector<VertexId> verts = sub.vertices();
  if (verts.empty()) return {};
  VertexId base = sub_basepoint >= 0 ? sub_basepoint : verts.front();
  if (!sub.vertex_mask().at(base))
    throw invalid_input("subgroup_of_subcomplex: basepoint not in subcomplex");

  // Spanning tree of the subcomplex; path_word[v] spells base -> v.
  std::vector<char> visited(X.vertex_count(), 0);
  std::vector<char> in_tree(X.edges().size(), 0);
  std::vector<Word> path_word(X.vertex_count());
  std::queue<VertexId> q;
  visited[base] = 1;
  q.push(base);
  while (!q.empty()) {
    VertexId v = q.front();
    q.pop();
    for (auto [w, e] : X.adjacency()[v]) {
      if (!sub.edge_mask()[e] || visited[w]) continue;
      visited[w] = 1;
      in_tree[e] = 1;
      path_word[w] =
          concat(path_word[v], cb.edge_word(e, X.edges()[e][0] == v));
      q.push(w);
    }
  }

  std::vector<Word> gens;
  for (std::size_t e = 0; e < X.edges().size(); ++e) {
    if (!sub.edge_mask()[e] || in_tree[e]) continue;
    VertexId u = X.edges()[e][0], v = X.edges()[e][1];
    if (!visited[u] || !visited[v]) continue;  // other component
    Word loop = concat(concat(path_word[u], cb.edge_word(e, true)),
                       inverse(path_word[v]));
    Word nf = cb.backend().normal_form(loop);
    if (!nf.empty()) gens.push_back(std::move(nf));
  }
  return gens;
}

}  // namespace volent
