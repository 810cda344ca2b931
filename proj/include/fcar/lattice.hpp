#pragma once

// Concept enumeration and the cover relation of the concept lattice.
//
// Concepts are kept in canonical order: descending extent cardinality,
// ties broken by the extent bit pattern ascending (bit 0 least
// significant). Index 0 is therefore the top concept and the last index
// the bottom concept.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fcar/context.hpp"
#include "fcar/errors.hpp"

namespace fcar {

using ConceptId = std::size_t;

struct FormalConcept {
  ObjSet extent;
  AttrSet intent;

  bool operator==(const FormalConcept&) const = default;
};

// Canonical concept order (see header comment).
bool canonical_concept_less(const FormalConcept& a, const FormalConcept& b);

struct LatticeOptions {
  std::size_t max_concepts = 5'000'000;
  // Lattices up to this size compute covers by pairwise extent inclusion
  // plus transitive reduction; larger ones switch to closure-based upper
  // neighbor search. Both strategies produce identical edges.
  std::size_t pairwise_cover_limit = 10'000;
  unsigned threads = 1;
};

class ConceptLattice {
public:
  std::size_t size() const noexcept { return concepts_.size(); }
  const std::vector<FormalConcept>& concepts() const noexcept { return concepts_; }
  const FormalConcept& concept_at(ConceptId id) const { return concepts_.at(id); }

  // Adjacency lists are sorted by id ascending. Unknown ids throw
  // std::out_of_range.
  const std::vector<ConceptId>& upper_covers(ConceptId id) const { return upper_.at(id); }
  const std::vector<ConceptId>& lower_covers(ConceptId id) const { return lower_.at(id); }

  ConceptId top() const;
  ConceptId bottom() const;

  std::optional<ConceptId> find_by_intent(const AttrSet& intent) const;
  std::optional<ConceptId> find_by_extent(const ObjSet& extent) const;

  const std::vector<std::string>& object_names() const noexcept { return object_names_; }
  const std::vector<std::string>& attribute_names() const noexcept { return attribute_names_; }

private:
  friend ConceptLattice build_lattice(const FormalContext&, const LatticeOptions&);

  std::vector<FormalConcept> concepts_;
  std::vector<std::vector<ConceptId>> upper_;
  std::vector<std::vector<ConceptId>> lower_;
  std::vector<std::string> object_names_;
  std::vector<std::string> attribute_names_;
  // Ids ordered by intent (cardinality ascending, bit pattern ascending)
  // for binary-search lookup.
  std::vector<ConceptId> intent_order_;
};

// Enumerates every formal concept with Close-by-One and returns them in
// canonical order. Throws ResourceLimitError beyond max_concepts.
std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx,
                                              std::size_t max_concepts = 5'000'000);

ConceptLattice build_lattice(const FormalContext& ctx, const LatticeOptions& options = {});

// Definitional oracle: closes all 2^|M| attribute subsets. Requires
// |M| <= 20 (ResourceLimitError otherwise). Canonical order.
std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx);

// Attributes of c's intent missing from the upper cover's intent. The
// second argument must lie strictly above c (intent strictly contained).
AttrSet intentional_face(const FormalConcept& c, const FormalConcept& upper);

// Cover strategies, exposed separately so tests can cross-check them.
// Input concepts must be in canonical order; both return upper-cover
// adjacency sorted by id.
std::vector<std::vector<ConceptId>> covers_by_pairwise_reduction(
    const std::vector<FormalConcept>& concepts, unsigned threads = 1);
std::vector<std::vector<ConceptId>> covers_by_neighbor_search(
    const std::vector<FormalConcept>& concepts, const FormalContext& ctx);

// Serialized JSON array of {id, extent: [names], intent: [names],
// upper: [ids]} in canonical order.
std::string lattice_to_json(const ConceptLattice& lat);

}  // namespace fcar
