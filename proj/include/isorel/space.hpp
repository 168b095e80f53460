#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "isorel/subspace.hpp"

namespace isorel {

enum class Flavor { presymplectic, poisson };

// A coordinate space with a skew-symmetric form matrix. For presymplectic
// flavor the matrix is the form on the space itself; for poisson flavor it is
// the constant bivector, i.e. the induced skew form on the dual.
struct BilinearSpace {
  std::size_t dim = 0;
  Matrix form;  // dim x dim, skew-symmetric
  Flavor flavor = Flavor::presymplectic;

  BilinearSpace() : form(0, 0) {}
  BilinearSpace(std::size_t d, Matrix f, Flavor fl);

  bool operator==(const BilinearSpace& other) const = default;
};

// Standard symplectic plane pairs J = [[0,1],[-1,0]] stacked k times.
BilinearSpace standard_symplectic(std::size_t pairs, Flavor flavor = Flavor::presymplectic);
BilinearSpace zero_form_space(std::size_t dim, Flavor flavor = Flavor::presymplectic);

// omega(u, v) = u^T form v.
Scalar form_value(const BilinearSpace& s, const Vec& u, const Vec& v);

// Target-first product carrying the form diag(form_target, -form_source).
struct ProductSpace {
  BilinearSpace target;
  BilinearSpace source;
  BilinearSpace total;
};

ProductSpace product(const BilinearSpace& target, const BilinearSpace& source);
BilinearSpace negate_form(const BilinearSpace& s);

// {x : omega(x, a) = 0 for all a in A}.
Subspace orthogonal(const BilinearSpace& s, const Subspace& a);
Subspace radical(const BilinearSpace& s);

bool is_isotropic_subspace(const BilinearSpace& s, const Subspace& a);
bool is_symplectic_subspace(const BilinearSpace& s, const Subspace& a);

// Pairs (q_i, p_i) spanning the symplectic subspace a with omega(q_i, p_j) =
// delta_ij and all other pairings zero. Deterministic greedy reduction of a's
// canonical basis.
std::vector<std::pair<Vec, Vec>> symplectic_basis(const BilinearSpace& s, const Subspace& a);

// Vectors x_j with omega(vectors[i], x_j) = delta_ij, each x_j inside
// `within`, the x_j mutually omega-orthogonal (so their span is isotropic).
// Requires the functionals omega(vectors[i], .) to be independent on within.
std::vector<Vec> dual_basis_for(const BilinearSpace& s, const std::vector<Vec>& vectors,
                                const Subspace& within);

// Isotropic partner a* of a inside `within`, orthogonal to `avoid`,
// independent of a + avoid, pairing a x a* nondegenerate (identity on the
// canonical basis of a), dim a* = dim a.
Subspace isotropic_dual_complement(const BilinearSpace& s, const Subspace& a,
                                   const Subspace& within, const Subspace& avoid);

}  // namespace isorel
