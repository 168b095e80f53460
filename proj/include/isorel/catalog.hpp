#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "isorel/invariants.hpp"
#include "isorel/relation.hpp"

namespace isorel {

enum class Tag : int {
  I1 = 1,
  I2,
  I3,
  I4,
  I5,
  I6,
  I7,
  I8,
  I9,
  I10,
  I11,
  I12,
  I13,
};

constexpr int kTypeCount = 13;

Tag tag_from_index(int index0);  // 0-based
int tag_index(Tag t);            // 0-based
std::optional<Tag> tag_from_label(const std::string& label);

enum class SpaceKind { trivial, zero_form_line, symplectic_plane };

struct TypeDescriptor {
  Tag tag;
  const char* label;  // "I1".."I13"
  const char* name;   // human-readable description
  SpaceKind target_kind;
  SpaceKind source_kind;
  std::size_t graph_dim;  // of the presymplectic model
};

const TypeDescriptor& type_descriptor(Tag t);

// Presymplectic flavor: the thirteen isotropic models over standard forms.
// Poisson flavor: the corresponding coisotropic models, written out directly;
// they coincide graph-for-graph with the annihilators of the isotropic ones.
LinearRelation canonical_indecomposable(Tag t, Flavor flavor);

// Direct sum of n[t] copies of each model, blocks ordered I1..I13.
LinearRelation canonical_sum(const MultiplicityVector& n, Flavor flavor);

struct RandomInstance {
  LinearRelation relation;
  Matrix p;
  Matrix q;
};

// canonical_sum(n) pushed through a seeded random pair of invertible integer
// matrices (entries in -3..3, rejection until invertible). Deterministic for
// a fixed seed.
RandomInstance random_instance(const MultiplicityVector& n, Flavor flavor, std::uint64_t seed);

}  // namespace isorel
