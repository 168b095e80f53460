#pragma once

#include <initializer_list>
#include <vector>

#include "isorel/matrix.hpp"
#include "isorel/relation.hpp"
#include "isorel/subspace.hpp"

namespace isotest {

inline isorel::Vec vec(std::initializer_list<long> entries) {
  isorel::Vec v;
  v.reserve(entries.size());
  for (long e : entries) v.emplace_back(e);
  return v;
}

inline isorel::Matrix mat(std::size_t cols,
                          std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<isorel::Vec> rvecs;
  for (const auto& r : rows) rvecs.push_back(vec(r));
  return isorel::Matrix::from_rows(rvecs, cols);
}

inline isorel::Subspace span(std::size_t ambient,
                             std::initializer_list<std::initializer_list<long>> rows) {
  return isorel::Subspace::from_rows(ambient, mat(ambient, rows));
}

// Relation between standard symplectic spaces with the given numbers of
// planes, spanned by the listed (target | source) rows.
inline isorel::LinearRelation symplectic_relation(
    std::size_t target_pairs, std::size_t source_pairs,
    std::initializer_list<std::initializer_list<long>> rows) {
  const isorel::BilinearSpace x = isorel::standard_symplectic(target_pairs);
  const isorel::BilinearSpace y = isorel::standard_symplectic(source_pairs);
  return isorel::LinearRelation(x, y, span(x.dim + y.dim, rows));
}

}  // namespace isotest
