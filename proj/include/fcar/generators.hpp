#pragma once

// Minimal generators of a concept intent. A subset h of the intent B
// generates the concept when closure(h) = B, which holds exactly when h
// meets every intentional face of the concept. Minimal generators are
// therefore the minimal transversals of the face family.

#include <vector>

#include "fcar/lattice.hpp"

namespace fcar {

// One face per upper cover, in upper-cover order (ids ascending). Faces
// are nonempty, pairwise distinct subsets of the concept's intent.
struct FaceFamily {
  std::vector<AttrSet> faces;
};

FaceFamily face_family(const ConceptLattice& lat, ConceptId id);

// Canonical order: ascending cardinality, ties by bit pattern ascending.
struct MinGenSet {
  std::vector<AttrSet> gens;

  bool operator==(const MinGenSet&) const = default;
};

// Incremental (Berge-style) minimal transversal computation over the face
// family. For a concept with no upper cover (the top) the result is the
// single empty set.
MinGenSet minimal_generators(const FormalConcept& c, const FaceFamily& faces);

// Definitional oracle: tests closure(h) = B over all subsets h of B in
// ascending cardinality and keeps the inclusion-minimal ones. Requires
// |B| <= 18 (ResourceLimitError otherwise).
MinGenSet brute_force_mingen(const FormalContext& ctx, const FormalConcept& c);

// True when closure(candidate) equals intent. The candidate must be a
// subset of intent (std::invalid_argument otherwise).
bool is_generator(const FormalContext& ctx, const AttrSet& candidate, const AttrSet& intent);

}  // namespace fcar
