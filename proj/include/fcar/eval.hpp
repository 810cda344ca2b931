#pragma once

// Evaluation harness: split a context into disjoint halves, match concepts
// shared by both halves' lattices via intent equality, score them on each
// side with per-concept wall timing, and correlate the two score lists.

#include <cstdint>
#include <optional>
#include <span>
#include <utility>

#include "fcar/relevance.hpp"

namespace fcar {

struct SplitPair {
  FormalContext reference;
  FormalContext test;
  std::uint64_t seed = 0;
  double ratio = 0.0;
};

// Horizontal split: objects are shuffled by a seeded Fisher-Yates pass
// (mt19937_64, index drawn as rng() % (i + 1)) and the first
// ceil(ratio * |G|) go to the reference side. Requires at least two
// objects and 0 < ratio < 1 (std::invalid_argument otherwise).
SplitPair split_context(const FormalContext& ctx, double ratio, std::uint64_t seed);

// Concepts present in both lattices, matched by intent equality. Pairs are
// ordered by intent (cardinality ascending, bit pattern ascending). Both
// lattices must share the attribute universe.
struct SharedConceptPairs {
  std::vector<std::pair<ConceptId, ConceptId>> pairs;  // (reference id, test id)

  std::size_t count() const noexcept { return pairs.size(); }
};

SharedConceptPairs shared_concepts(const ConceptLattice& reference, const ConceptLattice& test);

// Sample Pearson correlation; nullopt when either side has zero variance.
// Requires at least two pairs (std::invalid_argument otherwise).
std::optional<double> pearson(std::span<const std::pair<double, double>> pairs);

// Mean of the two sides' per-concept mean times. Both lists must be
// nonempty (std::invalid_argument otherwise).
double avg_elapsed_time(std::span<const double> reference_seconds,
                        std::span<const double> test_seconds);

enum class IndexKind { cr, stability };

IndexKind index_from_name(std::string_view name);
std::string_view to_string(IndexKind k);

struct ExperimentConfig {
  double ratio = 0.5;
  std::uint64_t seed = 42;
  IndexKind index = IndexKind::cr;
  Activation activation = Activation::arithmetic;
  StabilityMethod stability_method = StabilityMethod::brute_force;
  std::size_t max_stability_extent = default_stability_extent_cap;
  std::size_t max_concepts = 5'000'000;
  unsigned threads = 1;
};

struct EvalReport {
  struct ScoreRow {
    std::vector<std::string> intent;  // attribute names, ascending index
    double x;                         // reference-side score
    double y;                         // test-side score
  };

  struct TimingRow {
    std::string_view side;  // "reference" or "test"; ids refer to that side's lattice
    ConceptId id;
    double seconds;
  };

  IndexKind index = IndexKind::cr;
  Activation activation = Activation::arithmetic;
  std::vector<ScoreRow> score_rows;
  std::optional<double> xi;   // empty when n < 2 or a variance vanishes
  std::optional<double> tau;  // empty when no concept was timed
  std::vector<TimingRow> timing_rows;
  // Shared concepts dropped because an extent exceeded the brute-force cap.
  std::size_t n_dropped = 0;
};

// Per-concept timing uses a monotonic clock. Lattice construction is not
// timed; face retrieval is part of the CR timed region. With the lattice
// DP method the single pass per side is timed and attributed to concepts
// uniformly.
EvalReport run_experiment_on_split(const SplitPair& split, const ExperimentConfig& config);
EvalReport run_experiment(const FormalContext& ctx, const ExperimentConfig& config);

// CSV surfaces. Scores print with 12 significant digits, seconds with 9.
// Headers: "intent,x,y" (intent joined with '|'), then
// "index,activation,n,xi,tau_seconds", then "side,concept_id,seconds".
void write_eval_scores_csv(const EvalReport& report, std::ostream& out);
void write_eval_summary_csv(const EvalReport& report, std::ostream& out);
void write_eval_timings_csv(const EvalReport& report, std::ostream& out);

}  // namespace fcar
