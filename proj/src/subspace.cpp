#include "isorel/subspace.hpp"

#include <stdexcept>

namespace isorel {

Subspace Subspace::full(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = Matrix::identity(ambient_dim);
  return s;
}

Subspace Subspace::from_rows(std::size_t ambient_dim, const Matrix& rows) {
  if (rows.rows() != 0 && rows.cols() != ambient_dim)
    throw std::invalid_argument("basis row length != ambient dimension");
  Subspace s(ambient_dim);
  s.basis_ = rref(rows);
  return s;
}

Subspace Subspace::from_vectors(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  return from_rows(ambient_dim, Matrix::from_rows(vectors, ambient_dim));
}

std::vector<Vec> Subspace::basis_vectors() const {
  std::vector<Vec> rows;
  rows.reserve(basis_.rows());
  for (std::size_t i = 0; i < basis_.rows(); ++i) rows.push_back(basis_.row(i));
  return rows;
}

Subspace kernel(const Matrix& m) {
  Matrix r = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  std::vector<std::size_t> pivot_of_row(r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t c = 0;
    while (r.at(i, c) == 0) ++c;
    is_pivot[c] = true;
    pivot_of_row[i] = c;
  }
  std::vector<Vec> gens;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v(m.cols(), Scalar(0));
    v[j] = 1;
    for (std::size_t i = 0; i < r.rows(); ++i) v[pivot_of_row[i]] = -r.at(i, j);
    gens.push_back(v);
  }
  return Subspace::from_vectors(m.cols(), gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace sum: ambient dimension mismatch");
  return Subspace::from_rows(a.ambient_dim(), vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("subspace intersect: ambient dimension mismatch");
  // x = u^T A = v^T B; (u, v) ranges over the kernel of [A^T | -B^T].
  const Matrix system = hstack(a.basis().transposed(), b.basis().transposed().negated());
  const Subspace uv = kernel(system);
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < uv.dim(); ++i) {
    const Vec row = uv.basis().row(i);
    Vec x(a.ambient_dim(), Scalar(0));
    for (std::size_t r = 0; r < a.dim(); ++r)
      for (std::size_t j = 0; j < a.ambient_dim(); ++j) x[j] += row[r] * a.basis().at(r, j);
    gens.push_back(x);
  }
  return Subspace::from_vectors(a.ambient_dim(), gens);
}

Subspace complement_in(const Subspace& inner, const Subspace& outer) {
  if (!is_subspace_of(inner, outer))
    throw std::invalid_argument("complement_in: inner is not contained in outer");
  Matrix acc = inner.basis();
  std::size_t r = rank(acc);
  std::vector<Vec> chosen;
  for (std::size_t i = 0; i < outer.dim() && r < outer.dim(); ++i) {
    const Vec candidate = outer.basis().row(i);
    Matrix trial = vstack(acc, Matrix::from_rows({candidate}, outer.ambient_dim()));
    if (rank(trial) > r) {
      acc = std::move(trial);
      ++r;
      chosen.push_back(candidate);
    }
  }
  return Subspace::from_vectors(outer.ambient_dim(), chosen);
}

bool contains(const Subspace& a, const Vec& v) {
  if (v.size() != a.ambient_dim())
    throw std::invalid_argument("contains: vector length mismatch");
  // Subtract the pivot-determined combination; containment iff nothing is left.
  Vec residual = v;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t c = 0;
    while (a.basis().at(i, c) == 0) ++c;
    const Scalar coeff = residual[c];
    if (coeff == 0) continue;
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) residual[j] -= coeff * a.basis().at(i, j);
  }
  return is_zero_vec(residual);
}

bool is_subspace_of(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!contains(b, a.basis().row(i))) return false;
  return true;
}

Vec coords(const Subspace& a, const Vec& v) {
  if (v.size() != a.ambient_dim())
    throw std::invalid_argument("coords: vector length mismatch");
  Vec residual = v;
  Vec c(a.dim(), Scalar(0));
  for (std::size_t i = 0; i < a.dim(); ++i) {
    std::size_t p = 0;
    while (a.basis().at(i, p) == 0) ++p;
    c[i] = residual[p];
    if (c[i] == 0) continue;
    for (std::size_t j = 0; j < a.ambient_dim(); ++j) residual[j] -= c[i] * a.basis().at(i, j);
  }
  if (!is_zero_vec(residual)) throw std::domain_error("coords: vector outside subspace");
  return c;
}

}  // namespace isorel
