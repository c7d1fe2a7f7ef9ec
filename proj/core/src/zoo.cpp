#include "volent/zoo.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>

#include "volent/errors.hpp"
#include "volent/pi1.hpp"
#include "volent/subdivision.hpp"

namespace volent {

using nlohmann::json;

ZooSpec ZooSpec::torus(int n) {
  ZooSpec s;
  s.family = Family::Torus;
  s.n = n;
  return s;
}
ZooSpec ZooSpec::surface(int genus, int refinement) {
  ZooSpec s;
  s.family = Family::Surface;
  s.genus = genus;
  s.refinement = refinement;
  return s;
}
ZooSpec ZooSpec::wedge_circles(int count, int subdivision) {
  ZooSpec s;
  s.family = Family::WedgeCircles;
  s.count = count;
  s.subdivision = subdivision;
  return s;
}
ZooSpec ZooSpec::product_with_circle(ZooSpec base, int subdivision) {
  ZooSpec s;
  s.family = Family::ProductWithCircle;
  s.subdivision = subdivision;
  s.parts.push_back(std::move(base));
  return s;
}
ZooSpec ZooSpec::attached_surface(int genus, int degree) {
  ZooSpec s;
  s.family = Family::AttachedSurface;
  s.genus = genus;
  s.degree = degree;
  return s;
}
ZooSpec ZooSpec::bouquet(std::vector<ZooSpec> parts) {
  ZooSpec s;
  s.family = Family::Bouquet;
  s.parts = std::move(parts);
  return s;
}
ZooSpec ZooSpec::cyclic_cover(int genus, int degree) {
  ZooSpec s;
  s.family = Family::CyclicCover;
  s.genus = genus;
  s.degree = degree;
  return s;
}

std::string ZooSpec::family_name() const {
  switch (family) {
    case Family::Torus: return "torus";
    case Family::Surface: return "surface";
    case Family::WedgeCircles: return "wedge_circles";
    case Family::ProductWithCircle: return "product_with_circle";
    case Family::AttachedSurface: return "attached_surface";
    case Family::Bouquet: return "bouquet";
    case Family::CyclicCover: return "cyclic_cover";
  }
  return "?";
}

ZooSpec ZooSpec::parse(const std::string& family,
                       const std::vector<int>& params) {
  auto arg = [&params](std::size_t i, int dflt) {
    return i < params.size() ? params[i] : dflt;
  };
  if (family == "torus") return torus(arg(0, 3));
  if (family == "surface") return surface(arg(0, 2), arg(1, 0));
  if (family == "wedge_circles" || family == "wedge")
    return wedge_circles(arg(0, 2), arg(1, 1));
  if (family == "fig8_x_circle" || family == "fig8xS1")
    return product_with_circle(wedge_circles(arg(0, 2), 1), arg(1, 1));
  if (family == "surface_x_circle")
    return product_with_circle(surface(arg(0, 2), 0), arg(1, 1));
  if (family == "attached_surface" || family == "xhd")
    return attached_surface(arg(0, 2), arg(1, 3));
  if (family == "bouquet_t2_xhd") {
    std::vector<ZooSpec> parts = {torus(3)};
    int copies = arg(2, 1);
    for (int i = 0; i < copies; ++i)
      parts.push_back(attached_surface(arg(0, 2), arg(1, 3)));
    return bouquet(std::move(parts));
  }
  if (family == "cyclic_cover") return cyclic_cover(arg(0, 2), arg(1, 3));
  throw invalid_input("zoo: unknown family " + family);
}

MetricComplex ZooBuild::metric() const {
  return MetricComplex(complex, edge_lengths);
}

// ---------------------------------------------------------------------------
// Builders

namespace {

struct RawBuild {
  int n_vertices = 0;
  std::vector<EdgeCell> edges;
  std::vector<TriCell> triangles;
  std::vector<TetCell> tetrahedra;
};

ZooBuild finish(ZooSpec spec, RawBuild raw, double edge_length = 1.0) {
  ZooBuild out;
  out.spec = std::move(spec);
  out.complex = std::make_shared<SimplicialComplex>(
      raw.n_vertices, std::move(raw.edges), std::move(raw.triangles),
      std::move(raw.tetrahedra));
  out.edge_lengths.assign(out.complex->edges().size(), edge_length);
  return out;
}

ZooBuild build_torus(const ZooSpec& spec) {
  const int n = spec.n;
  if (n < 3) throw invalid_input("zoo torus: grid size must be >= 3");
  auto vid = [n](int i, int j) {
    return ((i % n + n) % n) * n + ((j % n + n) % n);
  };
  RawBuild raw;
  raw.n_vertices = n * n;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      raw.triangles.push_back({vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)});
      raw.triangles.push_back({vid(i, j), vid(i, j + 1), vid(i + 1, j + 1)});
    }
  }
  return finish(spec, std::move(raw));
}

ZooBuild build_wedge_circles(const ZooSpec& spec) {
  const int k = spec.count;
  const int per = 4 * std::max(1, spec.subdivision);
  if (k < 1) throw invalid_input("zoo wedge: need at least one circle");
  RawBuild raw;
  raw.n_vertices = 1 + k * (per - 1);
  int next = 1;
  for (int c = 0; c < k; ++c) {
    int prev = 0;
    for (int i = 0; i < per - 1; ++i) {
      raw.edges.push_back({prev, next});
      prev = next++;
    }
    raw.edges.push_back({prev, 0});
  }
  return finish(spec, std::move(raw), 1.0 / static_cast<double>(per));
}

// Genus-h orientable surface from the standard 4h-gon: boundary sides are
// subdivided into 3 edges and glued through a union-find; an interior ring
// keeps the fan simplicial after the identifications.
struct PolygonSurface {
  // pre-gluing ids: boundary positions 0..12h-1, ring 12h..24h-1, center 24h
  int h;
  int B;  // boundary positions = 12h
  std::vector<int> glue;  // union-find over boundary positions

  explicit PolygonSurface(int genus) : h(genus), B(12 * genus) {
    glue.resize(B);
    std::iota(glue.begin(), glue.end(), 0);
    // corners all to position 0
    for (int s = 0; s < 4 * h; ++s) unite(3 * s, 0);
    // side pairing from the relator a b a^-1 b^-1 ...: side 4k+0 with 4k+2
    // reversed, side 4k+1 with 4k+3 reversed
    for (int k = 0; k < h; ++k) {
      pair_sides(4 * k, 4 * k + 2);
      pair_sides(4 * k + 1, 4 * k + 3);
    }
  }
  int find(int x) {
    while (glue[x] != x) x = glue[x] = glue[glue[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) glue[b] = a;
  }
  void pair_sides(int s, int s2) {
    // forward point i of side s matches backward point 3-i of side s2
    for (int i = 1; i <= 2; ++i) unite(3 * s + i, 3 * s2 + (3 - i));
  }
};

RawBuild surface_raw(int genus, std::vector<int>* boundary_ring_out) {
  if (genus < 1) throw invalid_input("zoo surface: genus must be >= 1");
  PolygonSurface poly(genus);
  const int B = poly.B;

  // compress: boundary reps first (corner rep becomes vertex 0), ring, center
  std::map<int, int> id;
  auto vertex_of_boundary = [&](int pos) {
    int rep = poly.find(pos);
    auto it = id.find(rep);
    if (it != id.end()) return it->second;
    int v = static_cast<int>(id.size());
    id[rep] = v;
    return v;
  };
  vertex_of_boundary(0);  // corner class = vertex 0
  std::vector<int> bvert(B);
  for (int p = 0; p < B; ++p) bvert[p] = vertex_of_boundary(p);
  int next = static_cast<int>(id.size());
  std::vector<int> rvert(B);
  for (int p = 0; p < B; ++p) rvert[p] = next++;

  RawBuild raw;
  // annulus between the glued boundary and the interior ring
  for (int p = 0; p < B; ++p) {
    int q = (p + 1) % B;
    raw.triangles.push_back({bvert[p], bvert[q], rvert[q]});
    raw.triangles.push_back({bvert[p], rvert[p], rvert[q]});
  }
  if (boundary_ring_out) {
    // the hole variant keeps the ring as boundary and omits the center fan
    *boundary_ring_out = rvert;
    raw.n_vertices = next;
    return raw;
  }
  int center = next++;
  for (int p = 0; p < B; ++p) {
    int q = (p + 1) % B;
    raw.triangles.push_back({center, rvert[p], rvert[q]});
  }
  raw.n_vertices = next;
  return raw;
}

ZooBuild build_surface(const ZooSpec& spec) {
  RawBuild raw = surface_raw(spec.genus, nullptr);
  ZooBuild out = finish(spec, std::move(raw));
  for (int r = 0; r < spec.refinement; ++r) {
    Subdivision sub = midpoint_subdivide(*out.complex);
    out.complex = sub.complex;
    out.edge_lengths.assign(out.complex->edges().size(), 1.0);
  }
  return out;
}

// Zigzag annulus between two disjoint cycles (given as vertex lists);
// appends p+q triangles.
void zigzag_annulus(RawBuild& raw, const std::vector<int>& a,
                    const std::vector<int>& b) {
  const std::size_t p = a.size(), q = b.size();
  std::size_t i = 0, j = 0;
  while (i < p || j < q) {
    bool advance_a =
        (j >= q) ||
        (i < p && (i + 1) * q <= (j + 1) * p);
    if (advance_a) {
      raw.triangles.push_back({a[i % p], a[(i + 1) % p], b[j % q]});
      ++i;
    } else {
      raw.triangles.push_back({a[i % p], b[j % q], b[(j + 1) % q]});
      ++j;
    }
  }
}

// X(h,d): circle of 4 edges (vertices 0..3), genus-h surface with a disk
// removed (vertices 4..), its boundary subdivided into 4d edges and
// attached with degree d.  Vertex ids are final: circle first, then the
// sheet in construction order (the cyclic cover relies on this layout).
ZooBuild build_attached_surface(const ZooSpec& spec) {
  const int h = spec.genus, d = spec.degree;
  if (h < 1) throw invalid_input("zoo X(h,d): genus must be >= 1");
  if (d < 3) throw invalid_input("zoo X(h,d): degree must be >= 3");
  if (d > 3 * h)
    throw invalid_input("zoo X(h,d): builder requires d <= 3h (collar would "
                        "degenerate)");

  std::vector<int> ring;
  RawBuild surf = surface_raw(h, &ring);
  const int offset = 4;
  RawBuild raw;
  raw.n_vertices = offset + surf.n_vertices;
  for (int i = 0; i < 4; ++i) raw.edges.push_back({i, (i + 1) % 4});
  for (TriCell t : surf.triangles)
    raw.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
  for (int& v : ring) v += offset;

  // boundary ring of 4d positions wrapped straight onto the circle
  std::vector<int> ring2(4 * d);
  for (int j = 0; j < 4 * d; ++j) ring2[j] = j % 4;
  zigzag_annulus(raw, ring, ring2);
  return finish(spec, std::move(raw));
}

ZooBuild build_product_with_circle(const ZooSpec& spec) {
  if (spec.parts.size() != 1)
    throw invalid_input("zoo product: exactly one base spec required");
  ZooBuild base = build(spec.parts[0]);
  const SimplicialComplex& Y = *base.complex;
  if (Y.dimension() > 2)
    throw invalid_input("zoo product: base dimension must be <= 2");
  const int c = 4 * std::max(1, spec.subdivision);
  const int V = Y.vertex_count();
  auto vid = [c](int v, int i) { return v * c + ((i % c + c) % c); };

  RawBuild raw;
  raw.n_vertices = V * c;
  for (int i = 0; i < c; ++i) {
    for (int v = 0; v < V; ++v) raw.edges.push_back({vid(v, i), vid(v, i + 1)});
    for (const EdgeCell& e : Y.edges()) {
      int u = e[0], v = e[1];  // u < v
      raw.triangles.push_back({vid(u, i), vid(v, i), vid(v, i + 1)});
      raw.triangles.push_back({vid(u, i), vid(u, i + 1), vid(v, i + 1)});
    }
    for (const TriCell& t : Y.triangles()) {
      int a = t[0], b = t[1], cc = t[2];  // ascending
      raw.tetrahedra.push_back(
          {vid(a, i), vid(b, i), vid(cc, i), vid(cc, i + 1)});
      raw.tetrahedra.push_back(
          {vid(a, i), vid(b, i), vid(b, i + 1), vid(cc, i + 1)});
      raw.tetrahedra.push_back(
          {vid(a, i), vid(a, i + 1), vid(b, i + 1), vid(cc, i + 1)});
    }
  }
  ZooBuild out = finish(spec, std::move(raw));

  // projections
  std::vector<VertexId> to_base(V * c), to_circle(V * c);
  for (int v = 0; v < V; ++v)
    for (int i = 0; i < c; ++i) {
      to_base[vid(v, i)] = v;
      to_circle[vid(v, i)] = i;
    }
  std::vector<EdgeCell> circle_edges;
  for (int i = 0; i < c; ++i) circle_edges.push_back({i, (i + 1) % c});
  auto circle = std::make_shared<SimplicialComplex>(c, circle_edges);
  out.maps.emplace("base",
                   SimplicialMap(out.complex, base.complex, std::move(to_base)));
  out.maps.emplace("circle",
                   SimplicialMap(out.complex, circle, std::move(to_circle)));
  return out;
}

ZooBuild build_bouquet(const ZooSpec& spec) {
  if (spec.parts.empty()) throw invalid_input("zoo bouquet: no parts");
  RawBuild raw;
  raw.n_vertices = 1;
  for (const ZooSpec& part_spec : spec.parts) {
    ZooBuild part = build(part_spec);
    const SimplicialComplex& Y = *part.complex;
    const int offset = raw.n_vertices - 1;  // part vertex v>0 -> offset + v
    auto rl = [&](VertexId v) { return v == 0 ? 0 : offset + v; };
    for (const EdgeCell& e : Y.edges()) raw.edges.push_back({rl(e[0]), rl(e[1])});
    for (const TriCell& t : Y.triangles())
      raw.triangles.push_back({rl(t[0]), rl(t[1]), rl(t[2])});
    for (const TetCell& t : Y.tetrahedra())
      raw.tetrahedra.push_back({rl(t[0]), rl(t[1]), rl(t[2]), rl(t[3])});
    raw.n_vertices += Y.vertex_count() - 1;
  }
  return finish(spec, std::move(raw));
}

ZooBuild build_cyclic_cover(const ZooSpec& spec) {
  const int h = spec.genus, d = spec.degree;
  ZooBuild base = build(ZooSpec::attached_surface(h, d));

  // big circle of 4d vertices; d sheets of the surface-with-hole, sheet i
  // glued with rotation by 4i edges
  std::vector<int> ring;
  RawBuild sheet = surface_raw(h, &ring);
  const int C = 4 * d;
  RawBuild raw;
  raw.n_vertices = C + d * sheet.n_vertices;
  for (int i = 0; i < C; ++i) raw.edges.push_back({i, (i + 1) % C});

  // covering map data: big circle -> small circle; sheet vertex -> base
  // vertex.  The base builder compacted ids as: circle 0..3 first, then the
  // sheet's vertices in construction order, collar ring2 glued away.
  std::vector<VertexId> image(raw.n_vertices, -1);
  for (int k = 0; k < C; ++k) image[k] = k % 4;

  for (int i = 0; i < d; ++i) {
    const int offset = C + i * sheet.n_vertices;
    for (TriCell t : sheet.triangles)
      raw.triangles.push_back({t[0] + offset, t[1] + offset, t[2] + offset});
    std::vector<int> ring_i(ring.size());
    for (std::size_t p = 0; p < ring.size(); ++p) ring_i[p] = ring[p] + offset;
    // boundary ring2 of 4d vertices identified with the rotated circle
    std::vector<int> ring2(C);
    for (int j = 0; j < C; ++j) ring2[j] = (j + 4 * i) % C;
    RawBuild collar;
    zigzag_annulus(collar, ring_i, ring2);
    raw.triangles.insert(raw.triangles.end(), collar.triangles.begin(),
                         collar.triangles.end());
    for (int v = 0; v < sheet.n_vertices; ++v)
      image[offset + v] = 4 + v;  // base ids: circle 0..3 then sheet vertices
  }

  ZooBuild out = finish(spec, std::move(raw));
  out.covering_base = base.complex;
  out.covering_image = std::move(image);

  // embedded genus-2h surface: sheets 0 and 1 plus the circle
  std::vector<VertexId> mverts;
  for (int k = 0; k < C; ++k) mverts.push_back(k);
  for (int i = 0; i < 2; ++i)
    for (int v = 0; v < sheet.n_vertices; ++v)
      mverts.push_back(C + i * sheet.n_vertices + v);
  out.embedded_surface = Subcomplex::full_on_vertices(out.complex, mverts);
  return out;
}

}  // namespace

ZooBuild build(const ZooSpec& spec) {
  switch (spec.family) {
    case ZooSpec::Family::Torus:
      return build_torus(spec);
    case ZooSpec::Family::Surface:
      return build_surface(spec);
    case ZooSpec::Family::WedgeCircles:
      return build_wedge_circles(spec);
    case ZooSpec::Family::ProductWithCircle:
      return build_product_with_circle(spec);
    case ZooSpec::Family::AttachedSurface:
      return build_attached_surface(spec);
    case ZooSpec::Family::Bouquet:
      return build_bouquet(spec);
    case ZooSpec::Family::CyclicCover:
      return build_cyclic_cover(spec);
  }
  throw invalid_input("zoo: unknown family");
}

// ---------------------------------------------------------------------------
// Verification

namespace {

void check(ZooVerifyReport& report, const std::string& name, bool pass,
           const std::string& detail = "") {
  report.checks.push_back({name, pass, detail});
  if (!pass) report.pass = false;
}

void check_homology(ZooVerifyReport& report, const SimplicialComplex& X,
                    const AbelianGroup& h1_expected,
                    const AbelianGroup& h2_expected) {
  AbelianGroup h1 = homology(X, 1);
  AbelianGroup h2 = homology(X, 2);
  check(report, "H1", h1 == h1_expected,
        "got " + h1.describe() + ", expected " + h1_expected.describe());
  check(report, "H2", h2 == h2_expected,
        "got " + h2.describe() + ", expected " + h2_expected.describe());
}

// Betti alternating sum equals the Euler characteristic from cell counts.
void check_euler_betti(ZooVerifyReport& report, const SimplicialComplex& X) {
  long long chi = X.euler_characteristic();
  long long betti = 0;
  for (int k = 0; k <= X.dimension(); ++k) {
    AbelianGroup h = homology(X, k);
    betti += (k % 2 == 0 ? 1 : -1) * static_cast<long long>(h.rank);
  }
  check(report, "euler_vs_betti", chi == betti,
        "chi=" + std::to_string(chi) + " betti sum=" + std::to_string(betti));
}

AbelianGroup free_abelian(int rank) {
  AbelianGroup g;
  g.rank = rank;
  return g;
}

}  // namespace

std::string ZooVerifyReport::to_json() const {
  json j;
  j["pass"] = pass;
  j["backend"] = backend;
  json cs = json::array();
  for (const ZooCheck& c : checks) {
    json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (!c.detail.empty()) e["detail"] = c.detail;
    cs.push_back(e);
  }
  j["checks"] = cs;
  return j.dump(2);
}

ZooVerifyReport verify(const ZooBuild& b) {
  ZooVerifyReport report;
  const SimplicialComplex& X = *b.complex;
  const ZooSpec& spec = b.spec;

  ValidationReport v = validate(X);
  check(report, "valid", v.valid);
  check(report, "connected", v.connected);

  switch (spec.family) {
    case ZooSpec::Family::Torus: {
      check(report, "euler", X.euler_characteristic() == 0);
      check(report, "cells",
            static_cast<int>(X.triangles().size()) == 2 * spec.n * spec.n);
      check_homology(report, X, free_abelian(2), free_abelian(1));
      break;
    }
    case ZooSpec::Family::Surface: {
      check(report, "euler", X.euler_characteristic() == 2 - 2 * spec.genus);
      check_homology(report, X, free_abelian(2 * spec.genus), free_abelian(1));
      break;
    }
    case ZooSpec::Family::WedgeCircles: {
      check(report, "euler", X.euler_characteristic() == 1 - spec.count);
      check_homology(report, X, free_abelian(spec.count), {});
      break;
    }
    case ZooSpec::Family::ProductWithCircle: {
      check(report, "euler", X.euler_characteristic() == 0);
      ZooBuild base = build(spec.parts[0]);
      const SimplicialComplex& Y = *base.complex;
      int b0 = homology(Y, 0).rank, b1 = homology(Y, 1).rank,
          b2 = homology(Y, 2).rank;
      check_homology(report, X, free_abelian(b1 + b0), free_abelian(b2 + b1));
      check(report, "projections", b.maps.count("base") && b.maps.count("circle"));
      break;
    }
    case ZooSpec::Family::AttachedSurface: {
      check(report, "euler", X.euler_characteristic() == 1 - 2 * spec.genus);
      AbelianGroup h1 = free_abelian(2 * spec.genus);
      h1.torsion.push_back(spec.degree);
      check_homology(report, X, h1, {});
      // pi1 abelianization matches Z^{2h} + Z/d
      Pi1Data pi1 = pi1_presentation(b.complex, b.basepoint);
      std::vector<std::vector<long long>> rows;
      for (const Word& r : pi1.presentation.relators) {
        std::vector<long long> row(pi1.presentation.rank(), 0);
        for (Letter x : r) row[letter_gen(x)] += (x > 0 ? 1 : -1);
        rows.push_back(std::move(row));
      }
      AbelianGroup ab = abelianization(rows, pi1.presentation.rank());
      check(report, "pi1_abelianization", ab == h1,
            "got " + ab.describe() + ", expected " + h1.describe());
      break;
    }
    case ZooSpec::Family::Bouquet: {
      long long chi = 1;
      AbelianGroup h1, h2;
      for (const ZooSpec& ps : spec.parts) {
        ZooBuild part = build(ps);
        chi += part.complex->euler_characteristic() - 1;
        AbelianGroup p1 = homology(*part.complex, 1);
        AbelianGroup p2 = homology(*part.complex, 2);
        h1.rank += p1.rank;
        h1.torsion.insert(h1.torsion.end(), p1.torsion.begin(), p1.torsion.end());
        h2.rank += p2.rank;
        h2.torsion.insert(h2.torsion.end(), p2.torsion.begin(), p2.torsion.end());
      }
      std::sort(h1.torsion.begin(), h1.torsion.end());
      std::sort(h2.torsion.begin(), h2.torsion.end());
      check(report, "euler", X.euler_characteristic() == chi);
      check_homology(report, X, h1, h2);
      break;
    }
    case ZooSpec::Family::CyclicCover: {
      const int h = spec.genus, d = spec.degree;
      check(report, "euler",
            X.euler_characteristic() ==
                static_cast<long long>(d) * (1 - 2 * h));
      check_homology(report, X, free_abelian(2 * h * d), free_abelian(d - 1));
      // covering: no collapsed cells, every base cell covered d times
      const SimplicialComplex& base = *b.covering_base;
      bool nondegenerate = true;
      std::map<EdgeCell, int> edge_count;
      std::map<TriCell, int> tri_count;
      for (const EdgeCell& e : X.edges()) {
        VertexId a = b.covering_image[e[0]], c = b.covering_image[e[1]];
        if (a == c) nondegenerate = false;
        EdgeCell key = {std::min(a, c), std::max(a, c)};
        edge_count[key]++;
      }
      for (const TriCell& t : X.triangles()) {
        TriCell img = {b.covering_image[t[0]], b.covering_image[t[1]],
                       b.covering_image[t[2]]};
        std::sort(img.begin(), img.end());
        if (img[0] == img[1] || img[1] == img[2]) nondegenerate = false;
        tri_count[img]++;
      }
      check(report, "covering_nondegenerate", nondegenerate);
      bool counts_ok = edge_count.size() == base.edges().size() &&
                       tri_count.size() == base.triangles().size();
      for (const EdgeCell& e : base.edges())
        if (edge_count[e] != d) counts_ok = false;
      for (const TriCell& t : base.triangles())
        if (tri_count[t] != d) counts_ok = false;
      check(report, "covering_degree", counts_ok);
      // embedded genus-2h surface
      if (b.embedded_surface) {
        auto [M, to_parent] = b.embedded_surface->as_complex();
        check(report, "embedded_surface_euler",
              M.euler_characteristic() == 2 - 2 * (2 * h),
              "chi=" + std::to_string(M.euler_characteristic()));
        AbelianGroup m2 = homology(M, 2);
        check(report, "embedded_surface_closed", m2 == free_abelian(1),
              "H2=" + m2.describe());
      } else {
        check(report, "embedded_surface_present", false);
      }
      break;
    }
  }
  check_euler_betti(report, X);

  try {
    ComplexBackend cb = make_complex_backend(b.complex, b.basepoint);
    report.backend = cb.backend().describe();
  } catch (const Error& e) {
    report.backend = std::string("unsupported: ") + e.what();
  }
  return report;
}

}  // namespace volent
