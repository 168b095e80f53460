#include "isorel/space.hpp"

#include <stdexcept>

namespace isorel {

BilinearSpace::BilinearSpace(std::size_t d, Matrix f, Flavor fl)
    : dim(d), form(std::move(f)), flavor(fl) {
  if (form.rows() != dim || form.cols() != dim)
    throw std::invalid_argument("form matrix shape != dim x dim");
  if (!form.is_skew_symmetric()) throw std::invalid_argument("form matrix is not skew-symmetric");
}

BilinearSpace standard_symplectic(std::size_t pairs, Flavor flavor) {
  Matrix form(2 * pairs, 2 * pairs);
  for (std::size_t i = 0; i < pairs; ++i) {
    form.at(2 * i, 2 * i + 1) = 1;
    form.at(2 * i + 1, 2 * i) = -1;
  }
  return BilinearSpace(2 * pairs, std::move(form), flavor);
}

BilinearSpace zero_form_space(std::size_t dim, Flavor flavor) {
  return BilinearSpace(dim, Matrix(dim, dim), flavor);
}

Scalar form_value(const BilinearSpace& s, const Vec& u, const Vec& v) {
  if (u.size() != s.dim || v.size() != s.dim)
    throw std::invalid_argument("form_value: vector length mismatch");
  Scalar acc(0);
  for (std::size_t i = 0; i < s.dim; ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < s.dim; ++j) acc += u[i] * s.form.at(i, j) * v[j];
  }
  return acc;
}

ProductSpace product(const BilinearSpace& target, const BilinearSpace& source) {
  if (target.flavor != source.flavor)
    throw std::invalid_argument("product: flavor mismatch");
  const std::size_t n = target.dim + source.dim;
  Matrix form(n, n);
  for (std::size_t i = 0; i < target.dim; ++i)
    for (std::size_t j = 0; j < target.dim; ++j) form.at(i, j) = target.form.at(i, j);
  for (std::size_t i = 0; i < source.dim; ++i)
    for (std::size_t j = 0; j < source.dim; ++j)
      form.at(target.dim + i, target.dim + j) = -source.form.at(i, j);
  return ProductSpace{target, source, BilinearSpace(n, std::move(form), target.flavor)};
}

BilinearSpace negate_form(const BilinearSpace& s) {
  return BilinearSpace(s.dim, s.form.negated(), s.flavor);
}

Subspace orthogonal(const BilinearSpace& s, const Subspace& a) {
  if (a.ambient_dim() != s.dim)
    throw std::invalid_argument("orthogonal: ambient dimension mismatch");
  return kernel(a.basis() * s.form);
}

Subspace radical(const BilinearSpace& s) { return kernel(s.form); }

bool is_isotropic_subspace(const BilinearSpace& s, const Subspace& a) {
  const Matrix gram = a.basis() * s.form * a.basis().transposed();
  return gram.is_zero();
}

bool is_symplectic_subspace(const BilinearSpace& s, const Subspace& a) {
  const Matrix gram = a.basis() * s.form * a.basis().transposed();
  return gram.det() != 0;
}

std::vector<std::pair<Vec, Vec>> symplectic_basis(const BilinearSpace& s, const Subspace& a) {
  if (!is_symplectic_subspace(s, a))
    throw std::invalid_argument("symplectic_basis: subspace is not symplectic");
  std::vector<Vec> work = a.basis_vectors();
  std::vector<std::pair<Vec, Vec>> pairs;
  while (!work.empty()) {
    Vec q = work.front();
    work.erase(work.begin());
    std::size_t hit = work.size();
    for (std::size_t i = 0; i < work.size(); ++i) {
      if (form_value(s, q, work[i]) != 0) {
        hit = i;
        break;
      }
    }
    if (hit == work.size())
      throw std::logic_error("symplectic_basis: degenerate remainder on symplectic input");
    Vec p = vec_scale(Scalar(1) / form_value(s, q, work[hit]), work[hit]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(hit));
    for (Vec& v : work) {
      // v -> v - omega(v,p) q + omega(v,q) p, killing both pairings.
      const Scalar vp = form_value(s, v, p);
      const Scalar vq = form_value(s, v, q);
      v = vec_add(vec_sub(v, vec_scale(vp, q)), vec_scale(vq, p));
    }
    pairs.emplace_back(std::move(q), std::move(p));
  }
  return pairs;
}

std::vector<Vec> dual_basis_for(const BilinearSpace& s, const std::vector<Vec>& vectors,
                                const Subspace& within) {
  // Preconditions: span(vectors) isotropic and inside `within`; the
  // functionals omega(vectors[i], .) independent on within.
  for (const Vec& v : vectors) {
    if (!contains(within, v))
      throw std::invalid_argument("dual_basis_for: vector outside carrier subspace");
    for (const Vec& w : vectors)
      if (form_value(s, v, w) != 0)
        throw std::invalid_argument("dual_basis_for: input span is not isotropic");
  }
  const Matrix w_basis = within.basis();
  Matrix pairing(vectors.size(), within.dim());
  for (std::size_t i = 0; i < vectors.size(); ++i)
    for (std::size_t j = 0; j < within.dim(); ++j)
      pairing.at(i, j) = form_value(s, vectors[i], w_basis.row(j));
  std::vector<Vec> duals;
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    Vec rhs(vectors.size(), Scalar(0));
    rhs[j] = 1;
    const auto t = solve(pairing, rhs);
    if (!t) throw std::invalid_argument("dual_basis_for: pairing is degenerate on carrier");
    Vec x(s.dim, Scalar(0));
    for (std::size_t r = 0; r < within.dim(); ++r)
      if ((*t)[r] != 0) x = vec_add(x, vec_scale((*t)[r], w_basis.row(r)));
    // Make the dual family isotropic without disturbing the pairing.
    for (std::size_t l = 0; l < duals.size(); ++l) {
      const Scalar c = form_value(s, duals[l], x);
      if (c != 0) x = vec_add(x, vec_scale(c, vectors[l]));
    }
    duals.push_back(std::move(x));
  }
  return duals;
}

Subspace isotropic_dual_complement(const BilinearSpace& s, const Subspace& a,
                                   const Subspace& within, const Subspace& avoid) {
  if (!is_isotropic_subspace(s, a))
    throw std::invalid_argument("isotropic_dual_complement: a is not isotropic");
  if (!is_subspace_of(a, within) || !is_subspace_of(avoid, within))
    throw std::invalid_argument("isotropic_dual_complement: containment violated");
  if (!is_symplectic_subspace(s, within))
    throw std::invalid_argument("isotropic_dual_complement: carrier is not symplectic");
  if (!is_symplectic_subspace(s, avoid))
    throw std::invalid_argument("isotropic_dual_complement: avoid is not symplectic");
  for (const Vec& v : a.basis_vectors())
    for (const Vec& w : avoid.basis_vectors())
      if (form_value(s, v, w) != 0)
        throw std::invalid_argument("isotropic_dual_complement: a is not orthogonal to avoid");
  const Subspace carrier = intersect(within, orthogonal(s, avoid));
  return Subspace::from_vectors(s.dim, dual_basis_for(s, a.basis_vectors(), carrier));
}

}  // namespace isorel
