#include "mstar/linalg.hpp"

#include "mstar/error.hpp"

namespace mstar {

namespace {

// Row-reduces `rows` in place and returns the pivot column of each nonzero row.
std::vector<std::size_t> row_reduce(std::vector<Vec>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Gaussian inv = Gaussian(1) / rows[r][c];
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == r || rows[k][c].is_zero()) continue;
      Gaussian factor = -rows[k][c];
      axpy(rows[k], factor, rows[r]);
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  std::vector<Vec> rows = vectors;
  return row_reduce(rows, rows.front().size()).size();
}

std::vector<std::size_t> independent_subset(const std::vector<Vec>& vectors) {
  std::vector<std::size_t> chosen;
  std::vector<Vec> basis;
  std::size_t current = 0;
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    basis.push_back(vectors[k]);
    std::size_t r = rank(basis);
    if (r > current) {
      chosen.push_back(k);
      current = r;
    } else {
      basis.pop_back();
    }
  }
  return chosen;
}

std::vector<Vec> nullspace(const std::vector<Vec>& columns, std::size_t codomain_dim) {
  std::size_t n = columns.size();
  std::vector<Vec> rows(codomain_dim, Vec(n));
  for (std::size_t c = 0; c < n; ++c) {
    if (columns[c].size() != codomain_dim) {
      throw Error(ErrorKind::invalid_argument, "nullspace: ragged columns");
    }
    for (std::size_t r = 0; r < codomain_dim; ++r) rows[r][c] = columns[c][r];
  }
  std::vector<std::size_t> pivots = row_reduce(rows, n);
  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = Gaussian(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve_in_span(const std::vector<Vec>& vectors, const Vec& target) {
  std::size_t n = vectors.size();
  std::size_t m = target.size();
  // Augmented system: columns are the vectors, last column the target.
  std::vector<Vec> rows(m, Vec(n + 1));
  for (std::size_t c = 0; c < n; ++c) {
    if (vectors[c].size() != m) throw Error(ErrorKind::invalid_argument, "solve_in_span: ragged input");
    for (std::size_t r = 0; r < m; ++r) rows[r][c] = vectors[c][r];
  }
  for (std::size_t r = 0; r < m; ++r) rows[r][n] = target[r];
  std::vector<std::size_t> pivots = row_reduce(rows, n + 1);
  Vec coeffs(n);
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == n) return std::nullopt;
    coeffs[pivots[r]] = rows[r][n];
  }
  return coeffs;
}

}  // namespace mstar
