#include "isorel/duality.hpp"

#include <stdexcept>

namespace isorel {

BilinearSpace dual_space(const BilinearSpace& s) {
  return BilinearSpace(
      s.dim, s.form,
      s.flavor == Flavor::presymplectic ? Flavor::poisson : Flavor::presymplectic);
}

LinearRelation annihilator(const LinearRelation& f) {
  // Pairing of (x, y) with (eta, xi): xi(x) - eta(y). One constraint row per
  // graph basis vector (t | s): [-s | t] acting on (eta, xi).
  const std::size_t nx = f.target.dim, ny = f.source.dim;
  Matrix constraints(f.graph.dim(), ny + nx);
  for (std::size_t r = 0; r < f.graph.dim(); ++r) {
    const Vec row = f.graph.basis().row(r);
    for (std::size_t j = 0; j < ny; ++j) constraints.at(r, j) = -row[nx + j];
    for (std::size_t j = 0; j < nx; ++j) constraints.at(r, ny + j) = row[j];
  }
  return LinearRelation(dual_space(f.source), dual_space(f.target), kernel(constraints));
}

DecompositionCertificate dualize_certificate(const DecompositionCertificate& cert,
                                             const LinearRelation& f) {
  const auto pt_inv = cert.p.transposed().inverse();
  const auto qt_inv = cert.q.transposed().inverse();
  if (!pt_inv || !qt_inv)
    throw std::invalid_argument("dualize_certificate: certificate matrices not invertible");
  DecompositionCertificate dual;
  dual.p = *qt_inv;
  dual.q = *pt_inv;
  dual.mult = cert.mult;
  dual.trace = cert.trace;
  dual.flavor =
      f.target.flavor == Flavor::presymplectic ? Flavor::poisson : Flavor::presymplectic;
  return dual;
}

}  // namespace isorel
