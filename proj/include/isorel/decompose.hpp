#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "isorel/catalog.hpp"
#include "isorel/invariants.hpp"
#include "isorel/relation.hpp"

namespace isorel {

// One indecomposable summand, carried by explicit basis vectors in the
// coordinates of the relation being decomposed (target side and source side,
// each in canonical internal order, e.g. (q, p) for a symplectic pair).
struct DecompBlock {
  Tag tag;
  std::vector<Vec> target_vecs;
  std::vector<Vec> source_vecs;
};

// Every named subspace produced by the two construction stages. Matrices are
// ordered bases (rows = vectors): stage A in the ambient coordinates of f,
// stage B in the restricted coordinates of f_b. Dual bases are aligned with
// the primal bases row by row.
struct StageTrace {
  // Stage A: kernel/indeterminacy split and the cartesian part.
  Matrix y_0, x_0;            // complements of the radical parts inside 0f, f0
  Matrix y_0_dual, x_0_dual;  // aligned dual partners
  Matrix y_b, x_b;            // biinjective carrier blocks
  Matrix f0_int_rx, ker_int_ry;
  LinearRelation f_c, f_b;

  // Stage B, applied to g = f_b.
  Matrix x_r, y_r;            // radical-to-radical isomorphism blocks
  Matrix x_i, y_i;            // radical blocks mapped to/from non-radical parts
  Matrix x_r_extra, y_r_extra;  // rest of the radicals
  Matrix x_ig, g_yi;          // images of x_i, y_i through the relation
  Matrix y_l, y_s, x_l, x_s;  // split of the remaining domain/image
  Matrix x_ig_dual, y_l_dual, g_yi_dual, x_l_dual;
  Matrix e_y, e_x;            // symplectic complements of the radicals
  Matrix y_s_extra, x_s_extra;  // leftover symplectic blocks
};

struct DecompositionCertificate {
  Matrix p;  // target change of basis
  Matrix q;  // source change of basis
  MultiplicityVector mult;
  StageTrace trace;
  Flavor flavor = Flavor::presymplectic;
};

// Stage A: f = f_c (+) f_b with f_c cartesian and f_b biinjective, both
// isotropic, returned with their induced forms in restricted coordinates.
std::tuple<LinearRelation, LinearRelation, StageTrace> split_cartesian_biinjective(
    const LinearRelation& f);

// Blocks of the cartesian part (types I2, I3, I8, I9), in f's coordinates.
std::vector<DecompBlock> decompose_cartesian(const LinearRelation& f_c, const StageTrace& trace);

// Blocks of a biinjective isotropic relation (types I1, I4..I7, I10..I13) in
// g's coordinates; fills the stage B fields of the trace.
std::vector<DecompBlock> decompose_biinjective(const LinearRelation& g, StageTrace& trace);

// Full pipeline; poisson inputs are dualized, decomposed and dualized back.
// The returned certificate is re-verified before returning.
DecompositionCertificate decompose(const LinearRelation& f);

// Exact check: apply_iso_pair(f, P, Q) equals canonical_sum(mult) in graph
// and in both forms, and P, Q are invertible.
bool verify_certificate(const LinearRelation& f, const DecompositionCertificate& cert);

// Every direct-sum and orthogonality equation the construction promises,
// checked exactly against the stored trace; empty result = all hold.
std::vector<std::string> trace_violations(const LinearRelation& f,
                                          const DecompositionCertificate& cert);
bool verify_trace(const LinearRelation& f, const DecompositionCertificate& cert);

bool is_isomorphic(const LinearRelation& f, const LinearRelation& g);

}  // namespace isorel
