#pragma once

#include <array>

#include "isorel/relation.hpp"

namespace isorel {

// The thirteen dimension invariants k1..k13 (k[0] = k1).
struct InvariantVector {
  std::array<long, 13> k{};
  bool operator==(const InvariantVector&) const = default;
};

// Multiplicities of the indecomposable types I1..I13 (n[0] = count of I1).
struct MultiplicityVector {
  std::array<long, 13> n{};
  bool operator==(const MultiplicityVector&) const = default;
};

InvariantVector operator+(const InvariantVector& a, const InvariantVector& b);
MultiplicityVector operator+(const MultiplicityVector& a, const MultiplicityVector& b);

// The 13x13 integer matrix taking multiplicities (in column order) to
// invariants, its integral inverse, and the derived bijection between type
// tags and columns.
struct ClassificationMatrix {
  std::array<std::array<long, 13>, 13> m{};
  std::array<std::array<long, 13>, 13> m_inv{};
  // column_of[t] = 0-based column index of type I(t+1).
  std::array<int, 13> column_of{};
};

// k1 = dim(X/R_X)/2 ... k13 = dim((Xf cap Xf^perp)/0f); requires an isotropic
// presymplectic-flavored relation. Quotient dimensions are computed as
// dimension differences; a non-even halved dimension throws.
InvariantVector compute_invariants(const LinearRelation& f);

// Matches compute_invariants of each canonical indecomposable to a unique
// column of the embedded matrix; throws if the match is not a bijection.
std::array<int, 13> derive_column_permutation();

// Lazily built constant; determinant is +-1 and the inverse integral, both
// checked at initialization.
const ClassificationMatrix& classification_matrix();

// n = M^-1 k, reindexed to tag order; throws std::domain_error when any
// entry is negative ("invariant vector not realizable").
MultiplicityVector multiplicities(const InvariantVector& k);

InvariantVector invariants_of_multiplicities(const MultiplicityVector& n);  // k = M n

}  // namespace isorel
