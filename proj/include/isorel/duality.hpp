#pragma once

#include "isorel/decompose.hpp"
#include "isorel/relation.hpp"

namespace isorel {

// Flips flavor, keeps dimension and form matrix (the skew tensor reinterpreted
// on the dual under the standard identification e_i* -> e_i). An involution.
BilinearSpace dual_space(const BilinearSpace& s);

// For f: X <- Y, the relation Y* <- X* of all (eta, xi) with
// xi(x) - eta(y) = 0 for every (x, y) in f. dim f° = dim(X x Y) - dim f;
// f isotropic iff f° coisotropic; an involution under the standard
// identification.
LinearRelation annihilator(const LinearRelation& f);

// Certificate for annihilator(f) from a certificate for f: same
// multiplicities, basis changes replaced by inverse transposes with the two
// sides swapped.
DecompositionCertificate dualize_certificate(const DecompositionCertificate& cert,
                                             const LinearRelation& f);

}  // namespace isorel
