#include "volent/covers.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <set>

#include "volent/errors.hpp"
#include "volent/subdivision.hpp"

namespace volent {

using nlohmann::json;

Subcomplex CoverElement::closure(const ComplexPtr& parent) const {
  std::vector<int> edge_ids, tri_ids, tet_ids;
  std::vector<VertexId> verts;
  for (std::size_t i = 0; i < vertex_in.size(); ++i)
    if (vertex_in[i]) verts.push_back(static_cast<VertexId>(i));
  for (std::size_t i = 0; i < edge_in.size(); ++i)
    if (edge_in[i]) edge_ids.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < tri_in.size(); ++i)
    if (tri_in[i]) tri_ids.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < tet_in.size(); ++i)
    if (tet_in[i]) tet_ids.push_back(static_cast<int>(i));
  return Subcomplex::from_cells(parent, edge_ids, tri_ids, tet_ids, verts);
}

bool CoverElement::intersects(const CoverElement& other) const {
  auto hit = [](const std::vector<char>& a, const std::vector<char>& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] && b[i]) return true;
    return false;
  };
  return hit(vertex_in, other.vertex_in) || hit(edge_in, other.edge_in) ||
         hit(tri_in, other.tri_in) || hit(tet_in, other.tet_in);
}

int Cover::multiplicity() const {
  const SimplicialComplex& X = *complex;
  int best = 0;
  auto scan = [&](std::size_t count, auto mask_of) {
    for (std::size_t i = 0; i < count; ++i) {
      int n = 0;
      for (const CoverElement& el : elements)
        if (mask_of(el)[i]) ++n;
      best = std::max(best, n);
    }
  };
  scan(X.vertex_count(),
       [](const CoverElement& e) -> const std::vector<char>& { return e.vertex_in; });
  scan(X.edges().size(),
       [](const CoverElement& e) -> const std::vector<char>& { return e.edge_in; });
  scan(X.triangles().size(),
       [](const CoverElement& e) -> const std::vector<char>& { return e.tri_in; });
  scan(X.tetrahedra().size(),
       [](const CoverElement& e) -> const std::vector<char>& { return e.tet_in; });
  return best;
}

void Cover::validate() const {
  const SimplicialComplex& X = *complex;
  auto covered = [&](std::size_t count, auto mask_of, const char* what) {
    for (std::size_t i = 0; i < count; ++i) {
      bool hit = false;
      for (const CoverElement& el : elements)
        if (mask_of(el)[i]) {
          hit = true;
          break;
        }
      if (!hit)
        throw invalid_input(std::string("cover: uncovered ") + what + " " +
                            std::to_string(i));
    }
  };
  covered(X.vertex_count(),
          [](const CoverElement& e) -> const std::vector<char>& { return e.vertex_in; },
          "vertex");
  covered(X.edges().size(),
          [](const CoverElement& e) -> const std::vector<char>& { return e.edge_in; },
          "edge");
  covered(X.triangles().size(),
          [](const CoverElement& e) -> const std::vector<char>& { return e.tri_in; },
          "triangle");
  covered(X.tetrahedra().size(),
          [](const CoverElement& e) -> const std::vector<char>& { return e.tet_in; },
          "tetrahedron");
  for (const CoverElement& el : elements)
    if (!el.closure(complex).connected())
      throw invalid_input("cover: element " + el.label + " not connected");
}

Cover star_cover(const ComplexPtr& complex) {
  const SimplicialComplex& X = *complex;
  Cover cover;
  cover.complex = complex;
  for (VertexId v = 0; v < X.vertex_count(); ++v) {
    CoverElement el;
    el.label = "st(" + std::to_string(v) + ")";
    el.vertex_in.assign(X.vertex_count(), 0);
    el.vertex_in[v] = 1;
    el.edge_in.assign(X.edges().size(), 0);
    for (std::size_t e = 0; e < X.edges().size(); ++e)
      el.edge_in[e] = (X.edges()[e][0] == v || X.edges()[e][1] == v);
    el.tri_in.assign(X.triangles().size(), 0);
    for (std::size_t t = 0; t < X.triangles().size(); ++t) {
      const TriCell& tc = X.triangles()[t];
      el.tri_in[t] = (tc[0] == v || tc[1] == v || tc[2] == v);
    }
    el.tet_in.assign(X.tetrahedra().size(), 0);
    for (std::size_t t = 0; t < X.tetrahedra().size(); ++t) {
      const TetCell& tc = X.tetrahedra()[t];
      el.tet_in[t] = (tc[0] == v || tc[1] == v || tc[2] == v || tc[3] == v);
    }
    cover.elements.push_back(std::move(el));
  }
  return cover;
}

Cover pullback_cover(const SimplicialMap& map, const Cover& target_cover) {
  if (target_cover.complex.get() != map.target_ptr().get())
    throw invalid_input("pullback_cover: cover lives on a different complex");
  const SimplicialComplex& X = map.source();
  const SimplicialComplex& P = map.target();
  Cover out;
  out.complex = map.source_ptr();

  auto image_has = [&](const CoverElement& el, const VertexId* verts,
                       int n) -> bool {
    // the image cell of a source cell, as the span of image vertices
    std::vector<VertexId> img;
    for (int i = 0; i < n; ++i) img.push_back(map.apply(verts[i]));
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    switch (img.size()) {
      case 1:
        return el.vertex_in[img[0]];
      case 2:
        return el.edge_in[P.edge_index(img[0], img[1])];
      case 3:
        return el.tri_in[P.triangle_index(img[0], img[1], img[2])];
      case 4:
        return el.tet_in[P.tetrahedron_index({img[0], img[1], img[2], img[3]})];
      default:
        return false;
    }
  };

  for (const CoverElement& el : target_cover.elements) {
    // preimage support
    CoverElement pre;
    pre.vertex_in.assign(X.vertex_count(), 0);
    pre.edge_in.assign(X.edges().size(), 0);
    pre.tri_in.assign(X.triangles().size(), 0);
    pre.tet_in.assign(X.tetrahedra().size(), 0);
    for (VertexId v = 0; v < X.vertex_count(); ++v)
      pre.vertex_in[v] = el.vertex_in[map.apply(v)];
    for (std::size_t e = 0; e < X.edges().size(); ++e)
      pre.edge_in[e] = image_has(el, X.edges()[e].data(), 2);
    for (std::size_t t = 0; t < X.triangles().size(); ++t)
      pre.tri_in[t] = image_has(el, X.triangles()[t].data(), 3);
    for (std::size_t t = 0; t < X.tetrahedra().size(); ++t)
      pre.tet_in[t] = image_has(el, X.tetrahedra()[t].data(), 4);

    // split into connected components via the face closure
    Subcomplex closed = pre.closure(out.complex);
    std::vector<Subcomplex> comps = closed.components();
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      CoverElement part;
      part.label = el.label + (comps.size() > 1
                                   ? "#" + std::to_string(ci)
                                   : std::string());
      part.vertex_in.assign(X.vertex_count(), 0);
      part.edge_in.assign(X.edges().size(), 0);
      part.tri_in.assign(X.triangles().size(), 0);
      part.tet_in.assign(X.tetrahedra().size(), 0);
      const auto& cmask = comps[ci].vertex_mask();
      for (VertexId v = 0; v < X.vertex_count(); ++v)
        part.vertex_in[v] = pre.vertex_in[v] && cmask[v];
      for (std::size_t e = 0; e < X.edges().size(); ++e)
        part.edge_in[e] = pre.edge_in[e] && cmask[X.edges()[e][0]];
      for (std::size_t t = 0; t < X.triangles().size(); ++t)
        part.tri_in[t] = pre.tri_in[t] && cmask[X.triangles()[t][0]];
      for (std::size_t t = 0; t < X.tetrahedra().size(); ++t)
        part.tet_in[t] = pre.tet_in[t] && cmask[X.tetrahedra()[t][0]];
      if (std::count(part.vertex_in.begin(), part.vertex_in.end(), 1) == 0 &&
          std::count(part.edge_in.begin(), part.edge_in.end(), 1) == 0)
        continue;
      out.elements.push_back(std::move(part));
    }
  }
  return out;
}

ComplexPtr nerve(const Cover& cover) {
  const SimplicialComplex& X = *cover.complex;
  const int n = static_cast<int>(cover.elements.size());
  std::set<EdgeCell> edges;
  std::set<TriCell> tris;
  std::set<TetCell> tets;

  auto process = [&](const std::vector<int>& owners) {
    if (owners.size() < 2) return;
    if (owners.size() > 4)
      throw Error(ErrorCode::DimensionTooHigh,
                  "nerve: cover multiplicity exceeds 4, nerve would have "
                  "dimension > 3");
    if (owners.size() == 2) edges.insert({owners[0], owners[1]});
    if (owners.size() == 3) tris.insert({owners[0], owners[1], owners[2]});
    if (owners.size() == 4)
      tets.insert({owners[0], owners[1], owners[2], owners[3]});
  };

  auto owners_of = [&](auto mask_of, std::size_t idx) {
    std::vector<int> owners;
    for (int i = 0; i < n; ++i)
      if (mask_of(cover.elements[i])[idx]) owners.push_back(i);
    return owners;
  };

  for (std::size_t v = 0; v < static_cast<std::size_t>(X.vertex_count()); ++v)
    process(owners_of(
        [](const CoverElement& e) -> const std::vector<char>& { return e.vertex_in; },
        v));
  for (std::size_t e = 0; e < X.edges().size(); ++e)
    process(owners_of(
        [](const CoverElement& el) -> const std::vector<char>& { return el.edge_in; },
        e));
  for (std::size_t t = 0; t < X.triangles().size(); ++t)
    process(owners_of(
        [](const CoverElement& el) -> const std::vector<char>& { return el.tri_in; },
        t));
  for (std::size_t t = 0; t < X.tetrahedra().size(); ++t)
    process(owners_of(
        [](const CoverElement& el) -> const std::vector<char>& { return el.tet_in; },
        t));

  return std::make_shared<SimplicialComplex>(
      n, std::vector<EdgeCell>(edges.begin(), edges.end()),
      std::vector<TriCell>(tris.begin(), tris.end()),
      std::vector<TetCell>(tets.begin(), tets.end()));
}

WidthEstimate width_upper_bound(const MetricComplex& metric,
                                const SimplicialMap& map, int subdivisions) {
  if (map.target().dimension() > map.source().dimension() - 1)
    throw Error(ErrorCode::DimensionTooHigh,
                "width_upper_bound: target dimension must be at most "
                "dim(X) - 1");
  if (subdivisions < 0) throw invalid_input("width: negative subdivisions");

  MetricComplex g = metric;
  SimplicialMap pi = map;
  for (int i = 0; i < subdivisions; ++i) {
    Subdivision sx = barycentric_subdivide(pi.source());
    Subdivision sp = barycentric_subdivide(pi.target());
    g = subdivide_metric(g, sx);
    pi = subdivide_map(pi, sx, sp);
  }

  WidthEstimate est;
  est.subdivisions = subdivisions;
  for (VertexId p = 0; p < pi.target().vertex_count(); ++p) {
    Subcomplex fib = [&]() -> Subcomplex {
      try {
        return pi.fiber(p);
      } catch (const Error& e) {
        if (e.code() == ErrorCode::EmptyFiber)
          return Subcomplex::full_on_vertices(pi.source_ptr(), {});
        throw;
      }
    }();
    if (fib.empty()) continue;
    std::vector<Subcomplex> comps = fib.components();
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
      double d = g.ambient_diameter(comps[ci]);
      if (d > est.value) {
        est.value = d;
        est.witness_target = p;
        est.witness_component = static_cast<int>(ci);
      }
    }
  }
  return est;
}

CoverGrowthReport cover_growth_tagging(const Cover& cover,
                                       const ComplexBackend& backend,
                                       const ClassifyOptions& options) {
  if (cover.complex.get() != backend.complex.get())
    throw invalid_input("cover_growth_tagging: backend built on a different "
                        "complex");
  CoverGrowthReport report;
  report.multiplicity = cover.multiplicity();
  bool any_unknown = false;
  for (std::size_t i = 0; i < cover.elements.size(); ++i) {
    Subcomplex closed = cover.elements[i].closure(cover.complex);
    std::vector<Word> gens = subgroup_of_subcomplex(backend, closed);
    GrowthVerdict v = backend.backend().classify_subgroup(gens, options);
    if (v.is_exponential() &&
        (report.witness < 0 || v.entropy_lower_bound > report.witness_bound)) {
      report.witness = static_cast<int>(i);
      report.witness_bound = v.entropy_lower_bound;
    }
    if (v.is_unknown()) any_unknown = true;
    report.element_verdicts.push_back(v);
  }
  const int m = cover.complex->dimension();
  if (report.witness >= 0)
    report.verdict = CoverVerdict::ExponentialWitness;
  else if (any_unknown)
    report.verdict = CoverVerdict::Undetermined;
  else if (report.multiplicity <= m)
    report.verdict = CoverVerdict::CollapsingViaCover;
  else
    report.verdict = CoverVerdict::Undetermined;
  return report;
}

std::string cover_to_json(const Cover& cover) {
  json j = json::array();
  for (const CoverElement& el : cover.elements) {
    json e;
    e["label"] = el.label;
    auto ids = [](const std::vector<char>& mask) {
      json out = json::array();
      for (std::size_t i = 0; i < mask.size(); ++i)
        if (mask[i]) out.push_back(i);
      return out;
    };
    e["vertices"] = ids(el.vertex_in);
    e["edges"] = ids(el.edge_in);
    e["triangles"] = ids(el.tri_in);
    e["tetrahedra"] = ids(el.tet_in);
    j.push_back(e);
  }
  return j.dump(2);
}

Cover cover_from_json(const ComplexPtr& complex, const std::string& text) {
  const SimplicialComplex& X = *complex;
  json j = json::parse(text);
  if (!j.is_array()) throw invalid_input("cover JSON: expected an array");
  Cover cover;
  cover.complex = complex;
  int idx = 0;
  for (const auto& e : j) {
    CoverElement el;
    el.label = e.value("label", "U" + std::to_string(idx));
    el.vertex_in.assign(X.vertex_count(), 0);
    el.edge_in.assign(X.edges().size(), 0);
    el.tri_in.assign(X.triangles().size(), 0);
    el.tet_in.assign(X.tetrahedra().size(), 0);
    for (int v : e.value("vertices", std::vector<int>{})) el.vertex_in.at(v) = 1;
    for (int v : e.value("edges", std::vector<int>{})) el.edge_in.at(v) = 1;
    for (int v : e.value("triangles", std::vector<int>{})) el.tri_in.at(v) = 1;
    for (int v : e.value("tetrahedra", std::vector<int>{})) el.tet_in.at(v) = 1;
    cover.elements.push_back(std::move(el));
    ++idx;
  }
  cover.validate();
  return cover;
}

}  // namespace volent
