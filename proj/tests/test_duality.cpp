#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "isorel/catalog.hpp"
#include "isorel/duality.hpp"
#include "isorel/invariants.hpp"

using namespace isorel;
using isotest::mat;

namespace {

MultiplicityVector random_mult(std::mt19937_64& rng, int picks_max = 3, long count_max = 2) {
  MultiplicityVector n{};
  const int picks = 1 + static_cast<int>(rng() % picks_max);
  for (int p = 0; p < picks; ++p) n.n[rng() % 13] += 1 + static_cast<long>(rng() % count_max);
  return n;
}

Matrix random_invertible(std::mt19937_64& rng, std::size_t dim) {
  while (true) {
    Matrix m(dim, dim);
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j)
        m.at(i, j) = Scalar(static_cast<long>(rng() % 7) - 3);
    if (m.det() != 0) return m;
  }
}

}  // namespace

TEST_CASE("dual_space flips the flavor and keeps the matrix") {
  const BilinearSpace s = standard_symplectic(2);
  const BilinearSpace d = dual_space(s);
  CHECK(d.flavor == Flavor::poisson);
  CHECK(d.form == s.form);
  CHECK(dual_space(d).flavor == Flavor::presymplectic);
}

TEST_CASE("annihilator of each canonical model is the dual canonical model") {
  for (int t = 0; t < kTypeCount; ++t) {
    const Tag tag = tag_from_index(t);
    CHECK(annihilator(canonical_indecomposable(tag, Flavor::presymplectic)) ==
          canonical_indecomposable(tag, Flavor::poisson));
    CHECK(annihilator(canonical_indecomposable(tag, Flavor::poisson)) ==
          canonical_indecomposable(tag, Flavor::presymplectic));
  }
}

TEST_CASE("annihilator is an involution that complements dimension") {
  std::mt19937_64 rng(424242ull);
  for (int trial = 0; trial < 60; ++trial) {
    const MultiplicityVector n = random_mult(rng);
    const Flavor flavor = (trial % 2 == 0) ? Flavor::presymplectic : Flavor::poisson;
    const LinearRelation f = random_instance(n, flavor, rng()).relation;
    const LinearRelation dual = annihilator(f);
    CHECK(dual.target.dim == f.source.dim);
    CHECK(dual.source.dim == f.target.dim);
    CHECK(dual.graph.dim() == f.target.dim + f.source.dim - f.graph.dim());
    CHECK(annihilator(dual) == f);
    if (flavor == Flavor::presymplectic) {
      CHECK(is_isotropic(f));
      CHECK(is_coisotropic(dual));
    } else {
      CHECK(is_coisotropic(f));
      CHECK(is_isotropic(dual));
    }
  }
}

TEST_CASE("annihilator commutes with direct sums") {
  std::mt19937_64 rng(31337ull);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearRelation a = random_instance(random_mult(rng), Flavor::presymplectic, rng()).relation;
    const LinearRelation b = random_instance(random_mult(rng), Flavor::presymplectic, rng()).relation;
    CHECK(annihilator(direct_sum(a, b)) == direct_sum(annihilator(a), annihilator(b)));
  }
}

TEST_CASE("annihilator is equivariant for transported relations") {
  std::mt19937_64 rng(271828ull);
  for (int trial = 0; trial < 30; ++trial) {
    const LinearRelation f =
        random_instance(random_mult(rng), Flavor::presymplectic, rng()).relation;
    const Matrix p = random_invertible(rng, f.target.dim);
    const Matrix q = random_invertible(rng, f.source.dim);
    const Matrix p_dual = q.transposed().inverse().value();
    const Matrix q_dual = p.transposed().inverse().value();
    CHECK(annihilator(apply_iso_pair(f, p, q)) ==
          apply_iso_pair(annihilator(f), p_dual, q_dual));
  }
}

TEST_CASE("annihilator rejects nothing but sees the zero relation correctly") {
  const LinearRelation empty;
  const LinearRelation dual = annihilator(empty);
  CHECK(dual.target.dim == 0);
  CHECK(dual.graph.dim() == 0);

  // Full relation over zero-form spaces: annihilator is the zero relation.
  const BilinearSpace z = zero_form_space(2);
  const LinearRelation full(z, z, Subspace::full(4));
  const LinearRelation a = annihilator(full);
  CHECK(a.graph.dim() == 0);
  CHECK(a.target.flavor == Flavor::poisson);
}
