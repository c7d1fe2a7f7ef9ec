#include "volent/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdlib>
#include <limits>

#include "volent/errors.hpp"

namespace volent {

namespace {

using boost::multiprecision::cpp_int;

template <typename T>
T abs_value(const T& x) {
  return x < 0 ? T(-x) : x;
}

// Smith normal form diagonal for a dense matrix.  Pivots on the smallest
// nonzero entry, clears its row and column by Euclidean steps, then fixes
// divisibility.  Works for any integer-like T.
template <typename T>
std::vector<T> snf_diagonal(std::vector<std::vector<T>> m, bool* overflow) {
  const long long kGuard = 1ll << 60;
  std::vector<T> diag;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r0 = 0, c0 = 0;
  while (r0 < rows && c0 < cols) {
    // find smallest nonzero entry in the remaining block
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = r0; i < rows; ++i)
      for (std::size_t j = c0; j < cols; ++j)
        if (m[i][j] != 0 &&
            (pr == rows || abs_value(m[i][j]) < abs_value(m[pr][pc]))) {
          pr = i;
          pc = j;
        }
    if (pr == rows) break;  // all zero
    std::swap(m[r0], m[pr]);
    for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][c0], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = r0 + 1; i < rows; ++i) {
        if (m[i][c0] == 0) continue;
        T q = m[i][c0] / m[r0][c0];
        for (std::size_t j = c0; j < cols; ++j) {
          m[i][j] -= q * m[r0][j];
          if constexpr (std::is_same_v<T, long long>) {
            if (m[i][j] > kGuard || m[i][j] < -kGuard) {
              *overflow = true;
              return {};
            }
          }
        }
        if (m[i][c0] != 0) {
          std::swap(m[i], m[r0]);
          clean = false;
        }
      }
      for (std::size_t j = c0 + 1; j < cols; ++j) {
        if (m[r0][j] == 0) continue;
        T q = m[r0][j] / m[r0][c0];
        for (std::size_t i = r0; i < rows; ++i) {
          m[i][j] -= q * m[i][c0];
          if constexpr (std::is_same_v<T, long long>) {
            if (m[i][j] > kGuard || m[i][j] < -kGuard) {
              *overflow = true;
              return {};
            }
          }
        }
        if (m[r0][j] != 0) {
          for (std::size_t i = r0; i < rows; ++i) std::swap(m[i][j], m[i][c0]);
          clean = false;
        }
      }
    }
    diag.push_back(m[r0][c0] < 0 ? T(-m[r0][c0]) : m[r0][c0]);
    ++r0;
    ++c0;
  }

  // Fix the divisibility chain d1 | d2 | ... by folding gcds forward.
  for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] != 0) {
        T a = diag[i], b = diag[j];
        T g = a;
        T x = b;
        while (x != 0) {
          T t = g % x;
          g = x;
          x = t;
        }
        T l = a / g * b;
        diag[i] = g;
        diag[j] = l;
      }
    }
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

}  // namespace

std::string AbelianGroup::describe() const {
  if (trivial()) return "0";
  std::string s;
  if (rank == 1) s = "Z";
  if (rank > 1) s = "Z^" + std::to_string(rank);
  for (long long t : torsion) {
    if (!s.empty()) s += " + ";
    s += "Z/" + std::to_string(t);
  }
  return s;
}

std::vector<std::vector<long long>> boundary_matrix(
    const SimplicialComplex& c, int dim) {
  switch (dim) {
    case 0:
      return {};
    case 1: {
      std::vector<std::vector<long long>> m(
          c.vertex_count(), std::vector<long long>(c.edges().size(), 0));
      for (std::size_t e = 0; e < c.edges().size(); ++e) {
        m[c.edges()[e][1]][e] += 1;
        m[c.edges()[e][0]][e] -= 1;
      }
      return m;
    }
    case 2: {
      std::vector<std::vector<long long>> m(
          c.edges().size(), std::vector<long long>(c.triangles().size(), 0));
      for (std::size_t t = 0; t < c.triangles().size(); ++t) {
        const TriCell& tr = c.triangles()[t];
        m[c.edge_index(tr[1], tr[2])][t] += 1;
        m[c.edge_index(tr[0], tr[2])][t] -= 1;
        m[c.edge_index(tr[0], tr[1])][t] += 1;
      }
      return m;
    }
    case 3: {
      std::vector<std::vector<long long>> m(
          c.triangles().size(),
          std::vector<long long>(c.tetrahedra().size(), 0));
      for (std::size_t t = 0; t < c.tetrahedra().size(); ++t) {
        const TetCell& te = c.tetrahedra()[t];
        m[c.triangle_index(te[1], te[2], te[3])][t] += 1;
        m[c.triangle_index(te[0], te[2], te[3])][t] -= 1;
        m[c.triangle_index(te[0], te[1], te[3])][t] += 1;
        m[c.triangle_index(te[0], te[1], te[2])][t] -= 1;
      }
      return m;
    }
    default:
      throw invalid_input("boundary_matrix: dim must be 0..3");
  }
}

std::vector<long long> smith_invariant_factors(
    std::vector<std::vector<long long>> matrix) {
  if (matrix.empty() || matrix[0].empty()) return {};
  bool overflow = false;
  std::vector<long long> diag = snf_diagonal(matrix, &overflow);
  if (!overflow) return diag;

  // Entries outgrew int64: redo exactly.
  std::vector<std::vector<cpp_int>> big(matrix.size());
  for (std::size_t i = 0; i < matrix.size(); ++i)
    big[i].assign(matrix[i].begin(), matrix[i].end());
  std::vector<cpp_int> bdiag = snf_diagonal(std::move(big), &overflow);
  std::vector<long long> out;
  for (const cpp_int& d : bdiag) {
    if (d > std::numeric_limits<long long>::max())
      throw invalid_input("smith normal form: invariant factor overflow");
    out.push_back(d.convert_to<long long>());
  }
  return out;
}

AbelianGroup homology(const SimplicialComplex& c, int dim) {
  if (dim < 0 || dim > 3) throw invalid_input("homology: dim must be 0..3");
  if (dim > c.dimension()) return {};

  const long long n_cells[4] = {
      c.vertex_count(), static_cast<long long>(c.edges().size()),
      static_cast<long long>(c.triangles().size()),
      static_cast<long long>(c.tetrahedra().size())};

  auto rank_of = [&c](int d) -> long long {
    if (d <= 0 || d > c.dimension()) return 0;
    auto inv = smith_invariant_factors(boundary_matrix(c, d));
    return static_cast<long long>(inv.size());
  };

  AbelianGroup h;
  long long kernel = n_cells[dim] - rank_of(dim);
  std::vector<long long> img_factors;
  if (dim + 1 <= c.dimension())
    img_factors = smith_invariant_factors(boundary_matrix(c, dim + 1));
  h.rank = static_cast<int>(kernel - static_cast<long long>(img_factors.size()));
  for (long long f : img_factors)
    if (f > 1) h.torsion.push_back(f);
  return h;
}

AbelianGroup abelianization(
    const std::vector<std::vector<long long>>& exponent_rows, int n_generators) {
  AbelianGroup g;
  if (exponent_rows.empty()) {
    g.rank = n_generators;
    return g;
  }
  // columns: generators; rows: relators
  std::vector<std::vector<long long>> m(
      n_generators, std::vector<long long>(exponent_rows.size(), 0));
  for (std::size_t r = 0; r < exponent_rows.size(); ++r)
    for (int j = 0; j < n_generators; ++j) m[j][r] = exponent_rows[r][j];
  std::vector<long long> inv = smith_invariant_factors(std::move(m));
  g.rank = n_generators - static_cast<int>(inv.size());
  for (long long f : inv)
    if (f > 1) g.torsion.push_back(f);
  return g;
}

}  // namespace volent
