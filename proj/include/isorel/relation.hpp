#pragma once

#include "isorel/space.hpp"

namespace isorel {

// Relation f: target <- source, stored as a subspace of target x source with
// target coordinates first. Flavors of the two spaces agree.
struct LinearRelation {
  BilinearSpace target;
  BilinearSpace source;
  Subspace graph;

  LinearRelation() : graph(0) {}
  LinearRelation(BilinearSpace t, BilinearSpace s, Subspace g);

  bool operator==(const LinearRelation& other) const = default;
};

// Product space target x source carrying diag(form_target, -form_source).
ProductSpace relation_product(const LinearRelation& f);

Vec pair_vec(const Vec& target_part, const Vec& source_part);
Vec target_part(const LinearRelation& f, const Vec& graph_vec);
Vec source_part(const LinearRelation& f, const Vec& graph_vec);

// T x S as a subspace of the product, T in the target, S in the source.
Subspace product_subspace(const LinearRelation& f, const Subspace& t, const Subspace& s);

Subspace kernel_0f(const LinearRelation& f);         // {y : (0,y) in f}
Subspace indeterminacy_f0(const LinearRelation& f);  // {x : (x,0) in f}
Subspace domain_Xf(const LinearRelation& f);
Subspace image_fY(const LinearRelation& f);

bool is_isotropic(const LinearRelation& f);    // presymplectic flavor only
bool is_coisotropic(const LinearRelation& f);  // poisson flavor only

LinearRelation transpose(const LinearRelation& f);
LinearRelation compose(const LinearRelation& f, const LinearRelation& g);
LinearRelation direct_sum(const LinearRelation& f, const LinearRelation& g);

// Transport along x -> Px, y -> Qy. Forms move too: presymplectic forms by
// inverse-transpose congruence, poisson bivectors by direct congruence, so
// the action is structure-preserving by construction.
LinearRelation apply_iso_pair(const LinearRelation& f, const Matrix& p, const Matrix& q);

bool is_cartesian(const LinearRelation& f);
bool is_biinjective(const LinearRelation& f);

// Subspace transport through the graph: f(s) and its preimage.
Subspace image_of(const LinearRelation& f, const Subspace& s);
Subspace preimage_of(const LinearRelation& f, const Subspace& t);

// Unique partner of a vector under a biinjective relation; the source vector
// must lie in the domain (resp. the target vector in the image).
Vec apply_vec(const LinearRelation& f, const Vec& y);
Vec apply_inv_vec(const LinearRelation& f, const Vec& x);

}  // namespace isorel
