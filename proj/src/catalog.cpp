#include "isorel/catalog.hpp"

#include <random>
#include <stdexcept>

namespace isorel {

Tag tag_from_index(int idx) {
  if (idx < 0 || idx >= kTypeCount) throw std::out_of_range("tag_from_index: bad index");
  return static_cast<Tag>(idx + 1);
}

int tag_index(Tag t) { return static_cast<int>(t) - 1; }

std::optional<Tag> tag_from_label(const std::string& label) {
  for (int i = 0; i < kTypeCount; ++i)
    if (type_descriptor(tag_from_index(i)).label == label) return tag_from_index(i);
  return std::nullopt;
}

const TypeDescriptor& type_descriptor(Tag t) {
  static const std::array<TypeDescriptor, kTypeCount> table = {{
      {Tag::I1, "I1", "symplectic plane identity", SpaceKind::symplectic_plane,
       SpaceKind::symplectic_plane, 2},
      {Tag::I2, "I2", "lagrangian line, trivial source", SpaceKind::symplectic_plane,
       SpaceKind::trivial, 1},
      {Tag::I3, "I3", "lagrangian line, trivial target", SpaceKind::trivial,
       SpaceKind::symplectic_plane, 1},
      {Tag::I4, "I4", "zero relation, symplectic target", SpaceKind::symplectic_plane,
       SpaceKind::trivial, 0},
      {Tag::I5, "I5", "zero relation, symplectic source", SpaceKind::trivial,
       SpaceKind::symplectic_plane, 0},
      {Tag::I6, "I6", "lagrangian line isomorphism", SpaceKind::symplectic_plane,
       SpaceKind::symplectic_plane, 1},
      {Tag::I7, "I7", "zero-form line identity", SpaceKind::zero_form_line,
       SpaceKind::zero_form_line, 1},
      {Tag::I8, "I8", "full relation, zero-form target", SpaceKind::zero_form_line,
       SpaceKind::trivial, 1},
      {Tag::I9, "I9", "full relation, zero-form source", SpaceKind::trivial,
       SpaceKind::zero_form_line, 1},
      {Tag::I10, "I10", "zero relation, zero-form target", SpaceKind::zero_form_line,
       SpaceKind::trivial, 0},
      {Tag::I11, "I11", "zero relation, zero-form source", SpaceKind::trivial,
       SpaceKind::zero_form_line, 0},
      {Tag::I12, "I12", "injection of a line onto a lagrangian", SpaceKind::symplectic_plane,
       SpaceKind::zero_form_line, 1},
      {Tag::I13, "I13", "projection of a lagrangian onto a line", SpaceKind::zero_form_line,
       SpaceKind::symplectic_plane, 1},
  }};
  return table[tag_index(t)];
}

namespace {

BilinearSpace model_space(SpaceKind kind, Flavor flavor) {
  switch (kind) {
    case SpaceKind::trivial: return zero_form_space(0, flavor);
    case SpaceKind::zero_form_line: return zero_form_space(1, flavor);
    case SpaceKind::symplectic_plane: return standard_symplectic(1, flavor);
  }
  throw std::logic_error("model_space: bad kind");
}

LinearRelation make_relation(const BilinearSpace& target, const BilinearSpace& source,
                             const std::vector<Vec>& rows) {
  return LinearRelation(target, source,
                        Subspace::from_vectors(target.dim + source.dim, rows));
}

LinearRelation presymplectic_model(Tag t) {
  const Flavor fl = Flavor::presymplectic;
  const TypeDescriptor& d = type_descriptor(t);
  const BilinearSpace x = model_space(d.target_kind, fl);
  const BilinearSpace y = model_space(d.source_kind, fl);
  switch (t) {
    case Tag::I1: return make_relation(x, y, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    case Tag::I2: return make_relation(x, y, {{1, 0}});
    case Tag::I3: return make_relation(x, y, {{1, 0}});
    case Tag::I4: return make_relation(x, y, {});
    case Tag::I5: return make_relation(x, y, {});
    case Tag::I6: return make_relation(x, y, {{0, 1, 0, 1}});
    case Tag::I7: return make_relation(x, y, {{1, 1}});
    case Tag::I8: return make_relation(x, y, {{1}});
    case Tag::I9: return make_relation(x, y, {{1}});
    case Tag::I10: return make_relation(x, y, {});
    case Tag::I11: return make_relation(x, y, {});
    case Tag::I12: return make_relation(x, y, {{1, 0, 1}});
    case Tag::I13: return make_relation(x, y, {{1, 1, 0}});
  }
  throw std::logic_error("presymplectic_model: bad tag");
}

// Coisotropic models, spelled out rather than derived: target and source swap
// relative to the isotropic model of the same tag, forms carry over, and the
// graphs are exactly the sets of covector pairs annihilating the isotropic
// graph under <(x, y), (eta, xi)> = xi(x) - eta(y).
LinearRelation poisson_model(Tag t) {
  const Flavor fl = Flavor::poisson;
  const TypeDescriptor& d = type_descriptor(t);
  const BilinearSpace x = model_space(d.source_kind, fl);
  const BilinearSpace y = model_space(d.target_kind, fl);
  switch (t) {
    case Tag::I1: return make_relation(x, y, {{1, 0, 1, 0}, {0, 1, 0, 1}});
    case Tag::I2: return make_relation(x, y, {{0, 1}});
    case Tag::I3: return make_relation(x, y, {{0, 1}});
    case Tag::I4: return make_relation(x, y, {{1, 0}, {0, 1}});
    case Tag::I5: return make_relation(x, y, {{1, 0}, {0, 1}});
    case Tag::I6: return make_relation(x, y, {{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}});
    case Tag::I7: return make_relation(x, y, {{1, 1}});
    case Tag::I8: return make_relation(x, y, {});
    case Tag::I9: return make_relation(x, y, {});
    case Tag::I10: return make_relation(x, y, {{1}});
    case Tag::I11: return make_relation(x, y, {{1}});
    case Tag::I12: return make_relation(x, y, {{1, 1, 0}, {0, 0, 1}});
    case Tag::I13: return make_relation(x, y, {{1, 0, 1}, {0, 1, 0}});
  }
  throw std::logic_error("poisson_model: bad tag");
}

}  // namespace

LinearRelation canonical_indecomposable(Tag t, Flavor flavor) {
  return flavor == Flavor::presymplectic ? presymplectic_model(t) : poisson_model(t);
}

LinearRelation canonical_sum(const MultiplicityVector& n, Flavor flavor) {
  LinearRelation acc(zero_form_space(0, flavor), zero_form_space(0, flavor), Subspace::zero(0));
  for (int i = 0; i < kTypeCount; ++i) {
    if (n.n[i] < 0) throw std::domain_error("canonical_sum: negative multiplicity");
    const LinearRelation block = canonical_indecomposable(tag_from_index(i), flavor);
    for (long c = 0; c < n.n[i]; ++c) acc = direct_sum(acc, block);
  }
  return acc;
}

RandomInstance random_instance(const MultiplicityVector& n, Flavor flavor,
                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto small_entry = [&rng]() { return Scalar(static_cast<long>(rng() % 7) - 3); };
  const auto random_invertible = [&](std::size_t dim) {
    while (true) {
      Matrix m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j) m.at(i, j) = small_entry();
      if (m.det() != 0) return m;
    }
  };
  const LinearRelation base = canonical_sum(n, flavor);
  RandomInstance out{base, random_invertible(base.target.dim),
                     random_invertible(base.source.dim)};
  out.relation = apply_iso_pair(base, out.p, out.q);
  return out;
}

}  // namespace isorel
