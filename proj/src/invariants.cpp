#include "isorel/invariants.hpp"

#include <stdexcept>

#include "isorel/catalog.hpp"

namespace isorel {

namespace {

long half(long twice, const char* what) {
  if (twice % 2 != 0) throw std::logic_error(std::string("odd dimension for ") + what);
  return twice / 2;
}

// Columns of this matrix are the invariant vectors of the thirteen
// indecomposable types; the column order is recovered at startup by
// classifying the canonical models, so the pairing is self-checking.
constexpr long kMatrix[13][13] = {
    {0, 1, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 1},
    {1, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 1, 0},
    {0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 1, 1, 0, 1, 0, 0, 0, 0, 0},
    {0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 1, 1, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0},
    {0, 0, 0, 0, 1, 0, 0, 1, 1, 1, 0, 0, 0},
};

ClassificationMatrix build_classification_matrix() {
  ClassificationMatrix cm{};
  Matrix m(13, 13);
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) {
      cm.m[i][j] = kMatrix[i][j];
      m.at(i, j) = kMatrix[i][j];
    }
  const Scalar d = m.det();
  if (d != 1 && d != -1)
    throw std::logic_error("classification matrix determinant is not a unit");
  const auto inv = m.inverse();
  if (!inv) throw std::logic_error("classification matrix is singular");
  for (int i = 0; i < 13; ++i)
    for (int j = 0; j < 13; ++j) {
      const Scalar& e = inv->at(i, j);
      if (!is_integer(e))
        throw std::logic_error("classification matrix inverse is not integral");
      cm.m_inv[i][j] = to_long(e);
    }
  cm.column_of = derive_column_permutation();
  return cm;
}

}  // namespace

InvariantVector operator+(const InvariantVector& a, const InvariantVector& b) {
  InvariantVector out{};
  for (int i = 0; i < 13; ++i) out.k[i] = a.k[i] + b.k[i];
  return out;
}

MultiplicityVector operator+(const MultiplicityVector& a, const MultiplicityVector& b) {
  MultiplicityVector out{};
  for (int i = 0; i < 13; ++i) out.n[i] = a.n[i] + b.n[i];
  return out;
}

InvariantVector compute_invariants(const LinearRelation& f) {
  if (f.target.flavor != Flavor::presymplectic)
    throw std::invalid_argument("compute_invariants: expects a presymplectic relation");
  if (!is_isotropic(f))
    throw std::domain_error("compute_invariants: relation is not isotropic");

  const Subspace rx = radical(f.target);
  const Subspace ry = radical(f.source);
  const Subspace f0 = indeterminacy_f0(f);
  const Subspace ker = kernel_0f(f);
  const Subspace dom = domain_Xf(f);
  const Subspace img = image_fY(f);

  InvariantVector k{};
  k.k[0] = half(static_cast<long>(f.target.dim - rx.dim()), "k1");
  k.k[1] = half(static_cast<long>(f.source.dim - ry.dim()), "k2");
  k.k[2] = static_cast<long>(rx.dim());
  k.k[3] = static_cast<long>(ry.dim());
  k.k[4] = static_cast<long>(f0.dim());
  k.k[5] = static_cast<long>(ker.dim());
  k.k[6] = static_cast<long>(intersect(f0, rx).dim());
  k.k[7] = static_cast<long>(intersect(ker, ry).dim());
  k.k[8] = static_cast<long>(intersect(img, rx).dim());
  k.k[9] = static_cast<long>(intersect(dom, ry).dim());
  k.k[10] = static_cast<long>(intersect(f.graph, product_subspace(f, rx, ry)).dim());
  const Subspace dom_perp_part = intersect(dom, orthogonal(f.source, dom));
  k.k[11] = half(static_cast<long>(dom.dim() - dom_perp_part.dim()), "k12");
  k.k[12] = static_cast<long>(dom_perp_part.dim() - ker.dim());
  return k;
}

std::array<int, 13> derive_column_permutation() {
  // Match each canonical model's invariant vector to the unique matrix column
  // equal to it; the resulting assignment must be a bijection.
  std::array<int, 13> column_of{};
  std::array<bool, 13> used{};
  for (int t = 0; t < kTypeCount; ++t) {
    const InvariantVector k =
        compute_invariants(canonical_indecomposable(tag_from_index(t), Flavor::presymplectic));
    int found = -1;
    for (int c = 0; c < 13; ++c) {
      bool eq = true;
      for (int r = 0; r < 13; ++r)
        if (kMatrix[r][c] != k.k[r]) {
          eq = false;
          break;
        }
      if (eq) {
        if (found >= 0) throw std::logic_error("duplicate matrix column for a type");
        found = c;
      }
    }
    if (found < 0) throw std::logic_error("no matrix column matches a canonical model");
    if (used[found]) throw std::logic_error("two types map to one matrix column");
    used[found] = true;
    column_of[t] = found;
  }
  return column_of;
}

const ClassificationMatrix& classification_matrix() {
  static const ClassificationMatrix cm = build_classification_matrix();
  return cm;
}

MultiplicityVector multiplicities(const InvariantVector& k) {
  const ClassificationMatrix& cm = classification_matrix();
  std::array<long, 13> by_column{};
  for (int i = 0; i < 13; ++i) {
    long acc = 0;
    for (int j = 0; j < 13; ++j) acc += cm.m_inv[i][j] * k.k[j];
    by_column[i] = acc;
  }
  MultiplicityVector n{};
  for (int t = 0; t < 13; ++t) {
    n.n[t] = by_column[cm.column_of[t]];
    if (n.n[t] < 0)
      throw std::domain_error("invariant vector is not realized by any relation");
  }
  return n;
}

InvariantVector invariants_of_multiplicities(const MultiplicityVector& n) {
  const ClassificationMatrix& cm = classification_matrix();
  std::array<long, 13> by_column{};
  for (int t = 0; t < 13; ++t) by_column[cm.column_of[t]] = n.n[t];
  InvariantVector k{};
  for (int i = 0; i < 13; ++i) {
    long acc = 0;
    for (int j = 0; j < 13; ++j) acc += cm.m[i][j] * by_column[j];
    k.k[i] = acc;
  }
  return k;
}

}  // namespace isorel
