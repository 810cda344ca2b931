#pragma once

// Per-concept quality indices: the conceptual-relevance score built from
// the relevant-attribute ratio and the minimal-generator ratio, and the
// stability index with two interchangeable computation methods.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "fcar/generators.hpp"

namespace fcar {

using BigInt = boost::multiprecision::cpp_int;

enum class Activation { arithmetic, geometric, harmonic, product, min, max };

// Throws ConfigError for names outside the vocabulary.
Activation activation_from_name(std::string_view name);
std::string_view to_string(Activation a);

// harmonic(0, 0) is defined as 0.
double apply_activation(Activation a, double x, double y);

// True when dropping `attribute` from the intent strictly grows the
// derived extent. The attribute must belong to the intent
// (std::invalid_argument otherwise).
bool is_relevant_attribute(const FormalContext& ctx, const FormalConcept& c, std::size_t attribute);

// Share of intent attributes that are relevant; 0 for an empty intent.
double relevant_attribute_ratio(const FormalContext& ctx, const FormalConcept& c);

// Minimal generator count over the 2^|B|-2 proper nonempty subsets of the
// intent; defined as 0 unless both |B| > 1 and more than one generator
// exists. For |B| > 62 the denominator is evaluated in extended precision
// and the quotient underflows toward zero instead of overflowing.
double generator_count_ratio(std::size_t n_generators, std::size_t intent_size);

struct RelevanceScore {
  double relevant_ratio;   // share of intent attributes whose removal grows the extent
  double generator_ratio;  // minimal generators over candidate subsets
  double value;
  Activation activation;
  std::size_t n_generators;
};

// The face family must be the one computed for `c` by face_family().
RelevanceScore conceptual_relevance(const FormalContext& ctx, const FormalConcept& c,
                                    const FaceFamily& faces,
                                    Activation activation = Activation::arithmetic);

enum class StabilityMethod { brute_force, lattice_dp };

StabilityMethod stability_method_from_name(std::string_view name);
std::string_view to_string(StabilityMethod m);

struct StabilityScore {
  double value;
  StabilityMethod method;
};

inline constexpr std::size_t default_stability_extent_cap = 24;

// Number of extent subsets whose derivation equals the intent, by literal
// enumeration of all 2^|A| subsets. Extents larger than max_extent raise
// ResourceLimitError.
std::uint64_t stability_favorable_count(const FormalContext& ctx, const FormalConcept& c,
                                        std::size_t max_extent = default_stability_extent_cap);

StabilityScore stability_brute_force(const FormalContext& ctx, const FormalConcept& c,
                                     std::size_t max_extent = default_stability_extent_cap);

// Exact lattice-wide computation: processing concepts by ascending extent
// size, each concept's favorable count is 2^|A| minus the counts of all
// concepts strictly below it. Counts are exact integers of arbitrary
// width; their total is 2^|G|.
struct LatticeStability {
  std::vector<BigInt> counts;   // per concept id
  std::vector<double> values;   // per concept id

  StabilityScore score_at(ConceptId id) const {
    return {values.at(id), StabilityMethod::lattice_dp};
  }
};

LatticeStability stability_lattice(const ConceptLattice& lat);

// Per-concept score table in canonical lattice order; the CSV surface of
// this module. A missing stability value means the brute-force cap was
// exceeded for that concept.
struct ConceptScoreRow {
  ConceptId id;
  std::size_t extent_size;
  std::size_t intent_size;
  double relevant_ratio;
  double generator_ratio;
  double cr;
  std::optional<double> stability;
  std::size_t n_generators;
};

std::vector<ConceptScoreRow> score_all_concepts(const FormalContext& ctx, const ConceptLattice& lat,
                                                Activation activation, StabilityMethod method,
                                                std::size_t max_extent = default_stability_extent_cap,
                                                unsigned threads = 1);

// Header: concept_id,extent_size,intent_size,alpha,beta,cr,stability,n_mingens
// Scores are printed with 12 significant digits.
void write_score_csv(const std::vector<ConceptScoreRow>& rows, std::ostream& out);

}  // namespace fcar
