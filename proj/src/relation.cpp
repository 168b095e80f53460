#include "isorel/relation.hpp"

#include <stdexcept>

#include "isorel/duality.hpp"

namespace isorel {

LinearRelation::LinearRelation(BilinearSpace t, BilinearSpace s, Subspace g)
    : target(std::move(t)), source(std::move(s)), graph(std::move(g)) {
  if (graph.ambient_dim() != target.dim + source.dim)
    throw std::invalid_argument("relation graph ambient != target.dim + source.dim");
  if (target.flavor != source.flavor)
    throw std::invalid_argument("relation spaces have different flavors");
}

ProductSpace relation_product(const LinearRelation& f) { return product(f.target, f.source); }

Vec pair_vec(const Vec& target_part, const Vec& source_part) {
  Vec v;
  v.reserve(target_part.size() + source_part.size());
  v.insert(v.end(), target_part.begin(), target_part.end());
  v.insert(v.end(), source_part.begin(), source_part.end());
  return v;
}

Vec target_part(const LinearRelation& f, const Vec& graph_vec) {
  return Vec(graph_vec.begin(), graph_vec.begin() + static_cast<std::ptrdiff_t>(f.target.dim));
}

Vec source_part(const LinearRelation& f, const Vec& graph_vec) {
  return Vec(graph_vec.begin() + static_cast<std::ptrdiff_t>(f.target.dim), graph_vec.end());
}

Subspace product_subspace(const LinearRelation& f, const Subspace& t, const Subspace& s) {
  if (t.ambient_dim() != f.target.dim || s.ambient_dim() != f.source.dim)
    throw std::invalid_argument("product_subspace: ambient dimension mismatch");
  std::vector<Vec> rows;
  const Vec zero_t(f.target.dim, Scalar(0));
  const Vec zero_s(f.source.dim, Scalar(0));
  for (const Vec& v : t.basis_vectors()) rows.push_back(pair_vec(v, zero_s));
  for (const Vec& v : s.basis_vectors()) rows.push_back(pair_vec(zero_t, v));
  return Subspace::from_vectors(f.target.dim + f.source.dim, rows);
}

Subspace kernel_0f(const LinearRelation& f) {
  const Subspace zero_block =
      product_subspace(f, Subspace::zero(f.target.dim), Subspace::full(f.source.dim));
  const Subspace cut = intersect(f.graph, zero_block);
  std::vector<Vec> rows;
  for (const Vec& v : cut.basis_vectors()) rows.push_back(source_part(f, v));
  return Subspace::from_vectors(f.source.dim, rows);
}

Subspace indeterminacy_f0(const LinearRelation& f) {
  const Subspace zero_block =
      product_subspace(f, Subspace::full(f.target.dim), Subspace::zero(f.source.dim));
  const Subspace cut = intersect(f.graph, zero_block);
  std::vector<Vec> rows;
  for (const Vec& v : cut.basis_vectors()) rows.push_back(target_part(f, v));
  return Subspace::from_vectors(f.target.dim, rows);
}

Subspace domain_Xf(const LinearRelation& f) {
  std::vector<Vec> rows;
  for (const Vec& v : f.graph.basis_vectors()) rows.push_back(source_part(f, v));
  return Subspace::from_vectors(f.source.dim, rows);
}

Subspace image_fY(const LinearRelation& f) {
  std::vector<Vec> rows;
  for (const Vec& v : f.graph.basis_vectors()) rows.push_back(target_part(f, v));
  return Subspace::from_vectors(f.target.dim, rows);
}

bool is_isotropic(const LinearRelation& f) {
  if (f.target.flavor != Flavor::presymplectic)
    throw std::invalid_argument("is_isotropic: relation is not presymplectic-flavored");
  return is_isotropic_subspace(relation_product(f).total, f.graph);
}

bool is_coisotropic(const LinearRelation& f) {
  if (f.target.flavor != Flavor::poisson)
    throw std::invalid_argument("is_coisotropic: relation is not poisson-flavored");
  return is_isotropic(annihilator(f));
}

LinearRelation transpose(const LinearRelation& f) {
  std::vector<Vec> rows;
  for (const Vec& v : f.graph.basis_vectors())
    rows.push_back(pair_vec(source_part(f, v), target_part(f, v)));
  return LinearRelation(f.source, f.target,
                        Subspace::from_vectors(f.source.dim + f.target.dim, rows));
}

LinearRelation compose(const LinearRelation& f, const LinearRelation& g) {
  if (!(f.source == g.target)) throw std::invalid_argument("compose: middle spaces differ");
  const std::size_t nx = f.target.dim, ny = f.source.dim, nz = g.source.dim;
  std::vector<Vec> left;  // f x Z
  const Vec zx(nx, Scalar(0)), zy(ny, Scalar(0)), zz(nz, Scalar(0));
  for (const Vec& v : f.graph.basis_vectors()) left.push_back(pair_vec(v, zz));
  for (std::size_t k = 0; k < nz; ++k) {
    Vec axis(nz, Scalar(0));
    axis[k] = 1;
    left.push_back(pair_vec(pair_vec(zx, zy), axis));
  }
  std::vector<Vec> right;  // X x g
  for (std::size_t k = 0; k < nx; ++k) {
    Vec axis(nx, Scalar(0));
    axis[k] = 1;
    right.push_back(pair_vec(axis, pair_vec(zy, zz)));
  }
  for (const Vec& v : g.graph.basis_vectors()) right.push_back(pair_vec(zx, v));
  const Subspace cut = intersect(Subspace::from_vectors(nx + ny + nz, left),
                                 Subspace::from_vectors(nx + ny + nz, right));
  std::vector<Vec> rows;
  for (const Vec& v : cut.basis_vectors()) {
    Vec xz(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(nx));
    xz.insert(xz.end(), v.begin() + static_cast<std::ptrdiff_t>(nx + ny), v.end());
    rows.push_back(std::move(xz));
  }
  return LinearRelation(f.target, g.source, Subspace::from_vectors(nx + nz, rows));
}

namespace {

BilinearSpace space_direct_sum(const BilinearSpace& a, const BilinearSpace& b) {
  if (a.flavor != b.flavor) throw std::invalid_argument("direct_sum: flavor mismatch");
  Matrix form(a.dim + b.dim, a.dim + b.dim);
  for (std::size_t i = 0; i < a.dim; ++i)
    for (std::size_t j = 0; j < a.dim; ++j) form.at(i, j) = a.form.at(i, j);
  for (std::size_t i = 0; i < b.dim; ++i)
    for (std::size_t j = 0; j < b.dim; ++j) form.at(a.dim + i, a.dim + j) = b.form.at(i, j);
  return BilinearSpace(a.dim + b.dim, std::move(form), a.flavor);
}

}  // namespace

LinearRelation direct_sum(const LinearRelation& f, const LinearRelation& g) {
  const BilinearSpace target = space_direct_sum(f.target, g.target);
  const BilinearSpace source = space_direct_sum(f.source, g.source);
  std::vector<Vec> rows;
  const Vec zt1(f.target.dim, Scalar(0)), zs1(f.source.dim, Scalar(0));
  const Vec zt2(g.target.dim, Scalar(0)), zs2(g.source.dim, Scalar(0));
  for (const Vec& v : f.graph.basis_vectors())
    rows.push_back(pair_vec(pair_vec(target_part(f, v), zt2), pair_vec(source_part(f, v), zs2)));
  for (const Vec& v : g.graph.basis_vectors())
    rows.push_back(pair_vec(pair_vec(zt1, target_part(g, v)), pair_vec(zs1, source_part(g, v))));
  return LinearRelation(target, source,
                        Subspace::from_vectors(target.dim + source.dim, rows));
}

LinearRelation apply_iso_pair(const LinearRelation& f, const Matrix& p, const Matrix& q) {
  if (p.rows() != f.target.dim || p.cols() != f.target.dim || q.rows() != f.source.dim ||
      q.cols() != f.source.dim)
    throw std::invalid_argument("apply_iso_pair: matrix shape mismatch");
  const auto p_inv = p.inverse();
  const auto q_inv = q.inverse();
  if (!p_inv || !q_inv) throw std::invalid_argument("apply_iso_pair: non-invertible matrix");
  Matrix target_form, source_form;
  if (f.target.flavor == Flavor::presymplectic) {
    target_form = p_inv->transposed() * f.target.form * *p_inv;
    source_form = q_inv->transposed() * f.source.form * *q_inv;
  } else {
    target_form = p * f.target.form * p.transposed();
    source_form = q * f.source.form * q.transposed();
  }
  const BilinearSpace target(f.target.dim, std::move(target_form), f.target.flavor);
  const BilinearSpace source(f.source.dim, std::move(source_form), f.source.flavor);
  std::vector<Vec> rows;
  for (const Vec& v : f.graph.basis_vectors())
    rows.push_back(pair_vec(p.apply(target_part(f, v)), q.apply(source_part(f, v))));
  return LinearRelation(target, source,
                        Subspace::from_vectors(target.dim + source.dim, rows));
}

bool is_cartesian(const LinearRelation& f) {
  return f.graph == product_subspace(f, image_fY(f), domain_Xf(f));
}

bool is_biinjective(const LinearRelation& f) {
  return kernel_0f(f).dim() == 0 && indeterminacy_f0(f).dim() == 0;
}

Subspace image_of(const LinearRelation& f, const Subspace& s) {
  const Subspace cut = intersect(f.graph, product_subspace(f, Subspace::full(f.target.dim), s));
  std::vector<Vec> rows;
  for (const Vec& v : cut.basis_vectors()) rows.push_back(target_part(f, v));
  return Subspace::from_vectors(f.target.dim, rows);
}

Subspace preimage_of(const LinearRelation& f, const Subspace& t) {
  const Subspace cut = intersect(f.graph, product_subspace(f, t, Subspace::full(f.source.dim)));
  std::vector<Vec> rows;
  for (const Vec& v : cut.basis_vectors()) rows.push_back(source_part(f, v));
  return Subspace::from_vectors(f.source.dim, rows);
}

Vec apply_vec(const LinearRelation& f, const Vec& y) {
  // Any (x, y) in f; unique x when the indeterminacy is zero.
  const std::size_t k = f.graph.dim();
  Matrix source_block(f.source.dim, k);
  for (std::size_t r = 0; r < k; ++r) {
    const Vec s = source_part(f, f.graph.basis().row(r));
    for (std::size_t j = 0; j < f.source.dim; ++j) source_block.at(j, r) = s[j];
  }
  const auto c = solve(source_block, y);
  if (!c) throw std::domain_error("apply_vec: vector outside the domain");
  Vec x(f.target.dim, Scalar(0));
  for (std::size_t r = 0; r < k; ++r)
    if ((*c)[r] != 0)
      x = vec_add(x, vec_scale((*c)[r], target_part(f, f.graph.basis().row(r))));
  return x;
}

Vec apply_inv_vec(const LinearRelation& f, const Vec& x) {
  const std::size_t k = f.graph.dim();
  Matrix target_block(f.target.dim, k);
  for (std::size_t r = 0; r < k; ++r) {
    const Vec t = target_part(f, f.graph.basis().row(r));
    for (std::size_t j = 0; j < f.target.dim; ++j) target_block.at(j, r) = t[j];
  }
  const auto c = solve(target_block, x);
  if (!c) throw std::domain_error("apply_inv_vec: vector outside the image");
  Vec y(f.source.dim, Scalar(0));
  for (std::size_t r = 0; r < k; ++r)
    if ((*c)[r] != 0)
      y = vec_add(y, vec_scale((*c)[r], source_part(f, f.graph.basis().row(r))));
  return y;
}

}  // namespace isorel
