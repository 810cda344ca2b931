#include "fcar/lattice.hpp"

#include <algorithm>
#include <cassert>

#include <json.hpp>

#include "fcar/parallel.hpp"

namespace fcar {

bool canonical_concept_less(const FormalConcept& a, const FormalConcept& b) {
  const std::size_t ca = a.extent.count(), cb = b.extent.count();
  if (ca != cb) return ca > cb;
  return a.extent.compare_value(b.extent) < 0;
}

namespace {

// Close-by-One: descends only into closures that add no attribute below
// the generating one, so every concept is produced exactly once.
struct CboEnumerator {
  const FormalContext& ctx;
  std::size_t max_concepts;
  std::vector<FormalConcept> out;

  void run() {
    const ObjSet all = ctx.all_objects();
    AttrSet top_intent = ctx.derive(all);
    emit(all, top_intent);
    descend(all, top_intent, 0);
  }

  void emit(const ObjSet& extent, const AttrSet& intent) {
    if (out.size() >= max_concepts)
      throw ResourceLimitError("concept count exceeds the cap of " + std::to_string(max_concepts));
    out.push_back({extent, intent});
  }

  void descend(const ObjSet& extent, const AttrSet& intent, std::size_t first_attr) {
    const std::size_t n_attrs = ctx.attribute_count();
    for (std::size_t j = first_attr; j < n_attrs; ++j) {
      if (intent.test(j)) continue;
      ObjSet candidate_extent = extent & ctx.column(j);
      AttrSet candidate_intent = ctx.derive(candidate_extent);
      if (candidate_intent.equal_below(intent, j)) {
        emit(candidate_extent, candidate_intent);
        descend(candidate_extent, candidate_intent, j + 1);
      }
    }
  }
};

ConceptId find_extent_in_canonical(const std::vector<FormalConcept>& concepts,
                                   const ObjSet& extent) {
  const std::size_t cardinality = extent.count();
  auto it = std::lower_bound(concepts.begin(), concepts.end(), extent,
                             [&](const FormalConcept& c, const ObjSet& e) {
                               const std::size_t cc = c.extent.count();
                               if (cc != cardinality) return cc > cardinality;
                               return c.extent.compare_value(e) < 0;
                             });
  assert(it != concepts.end() && it->extent == extent);
  return static_cast<ConceptId>(it - concepts.begin());
}

}  // namespace

std::vector<FormalConcept> enumerate_concepts(const FormalContext& ctx, std::size_t max_concepts) {
  CboEnumerator cbo{ctx, max_concepts, {}};
  cbo.run();
  std::sort(cbo.out.begin(), cbo.out.end(), canonical_concept_less);
  return std::move(cbo.out);
}

std::vector<FormalConcept> brute_force_concepts(const FormalContext& ctx) {
  const std::size_t n_attrs = ctx.attribute_count();
  if (n_attrs > 20)
    throw ResourceLimitError("brute-force concept oracle supports at most 20 attributes");

  std::vector<FormalConcept> out;
  auto known = [&](const AttrSet& intent) {
    for (const auto& c : out)
      if (c.intent == intent) return true;
    return false;
  };

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n_attrs); ++mask) {
    AttrSet seed(n_attrs);
    for (std::size_t m = 0; m < n_attrs; ++m)
      if ((mask >> m) & 1u) seed.set(m);
    ObjSet extent = ctx.derive(seed);
    AttrSet intent = ctx.derive(extent);
    if (!known(intent)) out.push_back({std::move(extent), std::move(intent)});
  }

  std::sort(out.begin(), out.end(), canonical_concept_less);
  return out;
}

AttrSet intentional_face(const FormalConcept& c, const FormalConcept& upper) {
  if (!upper.intent.is_proper_subset_of(c.intent))
    throw std::invalid_argument("second concept is not strictly above the first");
  return difference(c.intent, upper.intent);
}

std::vector<std::vector<ConceptId>> covers_by_pairwise_reduction(
    const std::vector<FormalConcept>& concepts, unsigned threads) {
  const std::size_t n = concepts.size();
  std::vector<std::vector<ConceptId>> upper(n);

  // Walking indices downward from i visits strict supersets in ascending
  // extent size, so a candidate is a cover exactly when it contains no
  // already accepted cover.
  parallel_for(n, threads, [&](std::size_t i) {
    const std::size_t size_i = concepts[i].extent.count();
    auto& covers = upper[i];
    for (std::size_t j = i; j-- > 0;) {
      if (concepts[j].extent.count() == size_i) continue;
      if (!concepts[i].extent.is_subset_of(concepts[j].extent)) continue;
      bool dominated = false;
      for (ConceptId k : covers) {
        if (concepts[k].extent.is_subset_of(concepts[j].extent)) {
          dominated = true;
          break;
        }
      }
      if (!dominated) covers.push_back(j);
    }
    std::sort(covers.begin(), covers.end());
  });

  return upper;
}

std::vector<std::vector<ConceptId>> covers_by_neighbor_search(
    const std::vector<FormalConcept>& concepts, const FormalContext& ctx) {
  const std::size_t n = concepts.size();
  std::vector<std::vector<ConceptId>> upper(n);

  for (std::size_t i = 0; i < n; ++i) {
    const ObjSet& extent = concepts[i].extent;
    const AttrSet& intent = concepts[i].intent;

    // Closure-based upper neighbor search: grow the extent by one object;
    // the closure is a cover unless it swallows an object that can still
    // seed a different minimal extension (tracked by `viable`).
    ObjSet viable = extent.complement();
    auto& covers = upper[i];
    extent.complement().for_each([&](std::size_t g) {
      AttrSet upper_intent = intent & ctx.row(g);
      ObjSet upper_extent = ctx.derive(upper_intent);
      ObjSet added = upper_extent;
      added.and_not(extent);
      added.reset(g);
      if (!added.intersects(viable)) {
        covers.push_back(find_extent_in_canonical(concepts, upper_extent));
      } else {
        viable.reset(g);
      }
    });

    std::sort(covers.begin(), covers.end());
    covers.erase(std::unique(covers.begin(), covers.end()), covers.end());
  }

  return upper;
}

ConceptLattice build_lattice(const FormalContext& ctx, const LatticeOptions& options) {
  ConceptLattice lat;
  lat.concepts_ = enumerate_concepts(ctx, options.max_concepts);
  lat.object_names_ = ctx.objects();
  lat.attribute_names_ = ctx.attributes();

  const std::size_t n = lat.concepts_.size();
  lat.upper_ = n <= options.pairwise_cover_limit
                   ? covers_by_pairwise_reduction(lat.concepts_, options.threads)
                   : covers_by_neighbor_search(lat.concepts_, ctx);

  lat.lower_.assign(n, {});
  for (std::size_t i = 0; i < n; ++i)
    for (ConceptId u : lat.upper_[i]) lat.lower_[u].push_back(i);

  lat.intent_order_.resize(n);
  for (std::size_t i = 0; i < n; ++i) lat.intent_order_[i] = i;
  std::sort(lat.intent_order_.begin(), lat.intent_order_.end(), [&](ConceptId a, ConceptId b) {
    const auto& ia = lat.concepts_[a].intent;
    const auto& ib = lat.concepts_[b].intent;
    const std::size_t ca = ia.count(), cb = ib.count();
    if (ca != cb) return ca < cb;
    return ia.compare_value(ib) < 0;
  });

  return lat;
}

ConceptId ConceptLattice::top() const {
  if (concepts_.empty()) throw std::out_of_range("empty lattice has no top");
  return 0;
}

ConceptId ConceptLattice::bottom() const {
  if (concepts_.empty()) throw std::out_of_range("empty lattice has no bottom");
  return concepts_.size() - 1;
}

std::optional<ConceptId> ConceptLattice::find_by_intent(const AttrSet& intent) const {
  const std::size_t cardinality = intent.count();
  auto it = std::lower_bound(intent_order_.begin(), intent_order_.end(), intent,
                             [&](ConceptId id, const AttrSet& target) {
                               const auto& ic = concepts_[id].intent;
                               const std::size_t cc = ic.count();
                               if (cc != cardinality) return cc < cardinality;
                               return ic.compare_value(target) < 0;
                             });
  if (it == intent_order_.end() || !(concepts_[*it].intent == intent)) return std::nullopt;
  return *it;
}

std::optional<ConceptId> ConceptLattice::find_by_extent(const ObjSet& extent) const {
  const std::size_t cardinality = extent.count();
  auto it = std::lower_bound(concepts_.begin(), concepts_.end(), extent,
                             [&](const FormalConcept& c, const ObjSet& e) {
                               const std::size_t cc = c.extent.count();
                               if (cc != cardinality) return cc > cardinality;
                               return c.extent.compare_value(e) < 0;
                             });
  if (it == concepts_.end() || !(it->extent == extent)) return std::nullopt;
  return static_cast<ConceptId>(it - concepts_.begin());
}

std::string lattice_to_json(const ConceptLattice& lat) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t i = 0; i < lat.size(); ++i) {
    const auto& c = lat.concept_at(i);
    nlohmann::json entry;
    entry["id"] = i;
    auto& extent = entry["extent"] = nlohmann::json::array();
    c.extent.for_each([&](std::size_t g) { extent.push_back(lat.object_names()[g]); });
    auto& intent = entry["intent"] = nlohmann::json::array();
    c.intent.for_each([&](std::size_t m) { intent.push_back(lat.attribute_names()[m]); });
    entry["upper"] = lat.upper_covers(i);
    arr.push_back(std::move(entry));
  }
  return arr.dump(2) + "\n";
}

}  // namespace fcar
