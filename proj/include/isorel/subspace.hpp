#pragma once

#include <cstddef>
#include <vector>

#include "isorel/matrix.hpp"

namespace isorel {

// Subspace of a rational coordinate space. The stored basis is the unique
// reduced row-echelon form (pivot columns strictly increasing, no zero rows),
// so two subspaces are equal iff their bases are entry-wise equal.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim); }
  static Subspace full(std::size_t ambient_dim);
  static Subspace from_rows(std::size_t ambient_dim, const Matrix& rows);
  static Subspace from_vectors(std::size_t ambient_dim, const std::vector<Vec>& vectors);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_vectors() const;

  bool operator==(const Subspace& other) const = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

Subspace kernel(const Matrix& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Deterministic complement: extends inner's basis by outer's canonical basis
// vectors taken in pivot order, keeping those that raise the rank.
Subspace complement_in(const Subspace& inner, const Subspace& outer);

bool contains(const Subspace& a, const Vec& v);
bool is_subspace_of(const Subspace& a, const Subspace& b);

// Coefficients of v over a's canonical basis; throws if v is outside a.
Vec coords(const Subspace& a, const Vec& v);

}  // namespace isorel
