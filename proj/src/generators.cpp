#include "fcar/generators.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdint>

namespace fcar {

namespace {

bool canonical_set_less(const AttrSet& a, const AttrSet& b) {
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  return a.compare_value(b) < 0;
}

// Keeps `sets` inclusion-minimal: sorts canonically, then accepts each set
// unless an accepted one is contained in it. Equal-cardinality sets cannot
// contain each other, so the sorted sweep is sound.
std::vector<AttrSet> minimal_antichain(std::vector<AttrSet> sets) {
  std::sort(sets.begin(), sets.end(), canonical_set_less);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<AttrSet> kept;
  for (auto& s : sets) {
    bool dominated = false;
    for (const auto& k : kept) {
      if (k.is_subset_of(s)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(std::move(s));
  }
  return kept;
}

}  // namespace

FaceFamily face_family(const ConceptLattice& lat, ConceptId id) {
  const FormalConcept& c = lat.concept_at(id);
  FaceFamily family;
  family.faces.reserve(lat.upper_covers(id).size());
  for (ConceptId u : lat.upper_covers(id))
    family.faces.push_back(intentional_face(c, lat.concept_at(u)));
  return family;
}

MinGenSet minimal_generators(const FormalConcept& c, const FaceFamily& faces) {
  const std::size_t width = c.intent.width();

  // Berge update: a transversal of the first k faces either already meets
  // face k+1 or must be extended by one of its members; minimality is
  // restored after every step.
  std::vector<AttrSet> transversals{AttrSet(width)};
  for (const AttrSet& face : faces.faces) {
    assert(face.any() && face.is_subset_of(c.intent));
    std::vector<AttrSet> next;
    std::vector<AttrSet> extended;
    for (auto& t : transversals) {
      if (t.intersects(face)) {
        next.push_back(std::move(t));
      } else {
        face.for_each([&](std::size_t m) {
          AttrSet grown = t;
          grown.set(m);
          extended.push_back(std::move(grown));
        });
      }
    }
    for (auto& g : extended) next.push_back(std::move(g));
    transversals = minimal_antichain(std::move(next));
  }

  std::sort(transversals.begin(), transversals.end(), canonical_set_less);
  return MinGenSet{std::move(transversals)};
}

MinGenSet brute_force_mingen(const FormalContext& ctx, const FormalConcept& c) {
  const std::vector<std::size_t> members = c.intent.to_indices();
  const std::size_t k = members.size();
  if (k > 18) throw ResourceLimitError("brute-force generator oracle supports at most 18 attributes");

  // Enumerate subsets grouped by cardinality so minimality reduces to
  // "contains no kept generator".
  std::vector<std::vector<std::uint32_t>> by_size(k + 1);
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << k); ++mask)
    by_size[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);

  auto to_set = [&](std::uint32_t mask) {
    AttrSet s(c.intent.width());
    for (std::size_t i = 0; i < k; ++i)
      if ((mask >> i) & 1u) s.set(members[i]);
    return s;
  };

  std::vector<AttrSet> kept;
  for (std::size_t size = 0; size <= k; ++size) {
    std::vector<AttrSet> found_this_size;
    for (std::uint32_t mask : by_size[size]) {
      AttrSet h = to_set(mask);
      bool dominated = false;
      for (const auto& g : kept) {
        if (g.is_subset_of(h)) {
          dominated = true;
          break;
        }
      }
      if (dominated) continue;
      if (ctx.closure(h) == c.intent) found_this_size.push_back(std::move(h));
    }
    for (auto& h : found_this_size) kept.push_back(std::move(h));
  }

  std::sort(kept.begin(), kept.end(), canonical_set_less);
  return MinGenSet{std::move(kept)};
}

bool is_generator(const FormalContext& ctx, const AttrSet& candidate, const AttrSet& intent) {
  if (!candidate.is_subset_of(intent))
    throw std::invalid_argument("candidate generator is not a subset of the intent");
  return ctx.closure(candidate) == intent;
}

}  // namespace fcar
