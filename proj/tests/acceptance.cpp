// Acceptance gate: each numbered check prints exactly one PASS/FAIL line
// with a short measurement summary. The process exit code is the number of
// failed checks, so the binary doubles as a ctest entry.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "fcar/context_io.hpp"
#include "fcar/eval.hpp"
#include "fcar/generate.hpp"
#include "fcar/relevance.hpp"
#include "testutil.hpp"

using namespace fcar;
using fcar::testutil::contranominal;
using fcar::testutil::mov4;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

double now_seconds() {
  return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch())
      .count();
}

std::string fmt(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

// Shared random corpus for the oracle-equivalence checks: 23 contexts per
// density step, 207 total, all within 10 objects x 10 attributes.
struct CorpusEntry {
  FormalContext ctx;
  ConceptLattice lat;
};

std::vector<CorpusEntry> build_corpus() {
  std::vector<CorpusEntry> corpus;
  std::mt19937_64 rng(20260819);
  for (int density_step = 1; density_step <= 9; ++density_step) {
    const double p = 0.1 * density_step;
    for (int i = 0; i < 23; ++i) {
      FormalContext ctx =
          cointoss_context(1 + rng() % 10, 1 + rng() % 10, p, rng());
      ConceptLattice lat = build_lattice(ctx);
      corpus.push_back({std::move(ctx), std::move(lat)});
    }
  }
  return corpus;
}

// ---------------------------------------------------------------------------

Outcome check_worked_example() {
  const FormalContext ctx = mov4();
  const ConceptLattice lat = build_lattice(ctx);
  const ConceptId id = lat.bottom();
  const FormalConcept& c = lat.concept_at(id);

  if (c.intent.count() != 3) return {false, "fixture intent size is not 3"};

  std::size_t relevant = 0;
  c.intent.for_each([&](std::size_t m) {
    if (is_relevant_attribute(ctx, c, m)) ++relevant;
  });
  if (relevant != 1) return {false, "fixture relevant-attribute count is not 1"};

  const MinGenSet gens = minimal_generators(c, face_family(lat, id));
  if (gens.gens.size() != 2) return {false, "fixture generator count is not 2"};
  if (!(gens == brute_force_mingen(ctx, c)))
    return {false, "generator oracle disagrees on the fixture"};

  const RelevanceScore score =
      conceptual_relevance(ctx, c, face_family(lat, id), Activation::arithmetic);
  const double expected = 0.5 * (1.0 / 3.0 + 2.0 / (8.0 - 2.0));
  const double err = std::fabs(score.value - expected);
  if (err > 1e-12) return {false, "CR=" + fmt("%.17g", score.value) + " off by " + fmt("%.3g", err)};
  return {true, "CR=" + fmt("%.15g", score.value) + " (expected 1/3), |err|=" + fmt("%.3g", err)};
}

Outcome check_lattice_oracle(const std::vector<CorpusEntry>& corpus, double build_seconds) {
  const double t0 = now_seconds();
  std::size_t total_concepts = 0;
  for (const auto& entry : corpus) {
    const std::vector<FormalConcept> oracle = brute_force_concepts(entry.ctx);
    if (!(entry.lat.concepts() == oracle))
      return {false, "concept sets differ on a corpus context"};
    total_concepts += oracle.size();
  }
  const double total_seconds = build_seconds + (now_seconds() - t0);
  if (total_seconds > 60.0)
    return {false, "corpus run took " + fmt("%.1f", total_seconds) + "s (limit 60s)"};
  return {true, std::to_string(corpus.size()) + " contexts, " + std::to_string(total_concepts) +
                    " concepts, " + fmt("%.1f", total_seconds) + "s"};
}

Outcome check_mingen_oracle(const std::vector<CorpusEntry>& corpus) {
  std::size_t concepts = 0, attribute_pairs = 0;
  for (const auto& entry : corpus) {
    for (ConceptId id = 0; id < entry.lat.size(); ++id) {
      const FormalConcept& c = entry.lat.concept_at(id);
      const MinGenSet gens = minimal_generators(c, face_family(entry.lat, id));
      if (!(gens == brute_force_mingen(entry.ctx, c)))
        return {false, "generator families differ on a corpus concept"};
      ++concepts;

      bool equivalence_holds = true;
      c.intent.for_each([&](std::size_t m) {
        bool in_every_generator = true;
        for (const auto& g : gens.gens)
          if (!g.test(m)) in_every_generator = false;
        if (is_relevant_attribute(entry.ctx, c, m) != in_every_generator)
          equivalence_holds = false;
        ++attribute_pairs;
      });
      if (!equivalence_holds)
        return {false, "relevance/generator-membership equivalence failed"};
    }
  }
  return {true, std::to_string(concepts) + " concepts, " + std::to_string(attribute_pairs) +
                    " (concept, attribute) pairs"};
}

Outcome check_stability_cross_method(const std::vector<CorpusEntry>& corpus) {
  std::size_t concepts = 0;
  for (const auto& entry : corpus) {
    const LatticeStability dp = stability_lattice(entry.lat);
    BigInt total = 0;
    for (ConceptId id = 0; id < entry.lat.size(); ++id) {
      const std::uint64_t brute =
          stability_favorable_count(entry.ctx, entry.lat.concept_at(id), 64);
      if (dp.counts[id] != BigInt(brute))
        return {false, "favorable-subset counts differ on a corpus concept"};
      const double direct = stability_brute_force(entry.ctx, entry.lat.concept_at(id), 64).value;
      if (dp.values[id] != direct)
        return {false, "stability values differ on a corpus concept"};
      total += dp.counts[id];
      ++concepts;
    }
    if (total != BigInt(1) << entry.ctx.object_count())
      return {false, "favorable-subset counts do not sum to 2^|G|"};
  }
  return {true, std::to_string(concepts) + " concepts, counts match and partition 2^|G|"};
}

// Independent Pearson implementation for the protocol check: two-pass,
// explicitly centered, written against the textbook formula rather than
// the library's single-pass sums.
std::optional<double> pearson_reference(const std::vector<std::pair<double, double>>& pts) {
  const auto n = static_cast<long double>(pts.size());
  long double mx = 0, my = 0;
  for (const auto& [x, y] : pts) {
    mx += x;
    my += y;
  }
  mx /= n;
  my /= n;
  long double sxy = 0, sxx = 0, syy = 0;
  for (const auto& [x, y] : pts) {
    sxy += (static_cast<long double>(x) - mx) * (static_cast<long double>(y) - my);
    sxx += (static_cast<long double>(x) - mx) * (static_cast<long double>(x) - mx);
    syy += (static_cast<long double>(y) - my) * (static_cast<long double>(y) - my);
  }
  if (sxx <= 0 || syy <= 0) return std::nullopt;
  return static_cast<double>(sxy / std::sqrt(sxx * syy));
}

Outcome check_protocol_soundness() {
  // Part 1: duplicating every object and splitting the copies apart gives
  // two contexts with identical rows, so both sides score identically and
  // the correlation must be exactly 1 for both indices.
  const FormalContext base = cointoss_context(14, 6, 0.45, 7);
  auto copy_side = [&](const std::string& prefix) {
    std::vector<std::string> objects;
    std::vector<AttrSet> rows;
    for (std::size_t g = 0; g < base.object_count(); ++g) {
      objects.push_back(prefix + std::to_string(g + 1));
      rows.push_back(base.row(g));
    }
    return FormalContext(std::move(objects), std::vector<std::string>(base.attributes()),
                         std::move(rows));
  };
  const SplitPair duplicated{copy_side("r"), copy_side("t"), 0, 0.5};

  for (IndexKind index : {IndexKind::cr, IndexKind::stability}) {
    ExperimentConfig cfg;
    cfg.index = index;
    const EvalReport report = run_experiment_on_split(duplicated, cfg);
    if (!report.xi)
      return {false, std::string("duplicated-object xi undefined for ") +
                         std::string(to_string(index))};
    if (std::fabs(*report.xi - 1.0) > 1e-9)
      return {false, std::string("duplicated-object xi for ") + std::string(to_string(index)) +
                         " = " + fmt("%.12g", *report.xi)};
  }

  // Part 2: constant score lists. Chains score zero everywhere under the
  // min activation (each concept has at most one face), so a duplicated
  // chain yields a constant list and the coefficient must be undefined.
  {
    std::vector<std::string> objects, attrs;
    std::vector<AttrSet> rows;
    for (int i = 0; i < 12; ++i) attrs.push_back("a" + std::to_string(i));
    for (int len = 1; len <= 12; ++len) {
      AttrSet row(12);
      for (int m = 0; m < len; ++m) row.set(static_cast<std::size_t>(m));
      for (int copy = 0; copy < 2; ++copy) {
        objects.push_back("g" + std::to_string(len) + (copy ? "b" : "a"));
        rows.push_back(row);
      }
    }
    ExperimentConfig cfg;
    cfg.index = IndexKind::cr;
    cfg.activation = Activation::min;
    const EvalReport report = run_experiment(FormalContext(objects, attrs, rows), cfg);
    if (report.score_rows.size() < 2) return {false, "constant-list scenario has n < 2"};
    if (report.xi) return {false, "constant score lists produced a defined coefficient"};
  }

  // Part 3: the library coefficient against the independent implementation
  // on 1000 random lists, including tie-heavy discrete ones.
  std::mt19937_64 rng(90210);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  double worst = 0.0;
  for (int round = 0; round < 1000; ++round) {
    const std::size_t n = 2 + rng() % 39;
    const bool discrete = round % 3 == 0;
    std::vector<std::pair<double, double>> pts;
    pts.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      double x = unif(rng), y = unif(rng);
      if (discrete) {
        x = 0.25 * static_cast<double>(rng() % 5);
        y = 0.25 * static_cast<double>(rng() % 5);
      }
      pts.emplace_back(x, y);
    }
    const auto lib = pearson(pts);
    const auto ref = pearson_reference(pts);
    if (lib.has_value() != ref.has_value())
      return {false, "definedness disagreement on a random list"};
    if (lib) {
      const double diff = std::fabs(*lib - *ref);
      if (diff > 1e-12)
        return {false, "coefficient difference " + fmt("%.3g", diff) + " exceeds 1e-12"};
      worst = std::max(worst, diff);
    }
  }
  return {true, "xi=1 on duplicated splits, undefined on constant lists, max |delta|=" +
                    fmt("%.3g", worst) + " over 1000 lists"};
}

Outcome check_performance_direction() {
  const FormalContext ctx = cointoss_context(500, 12, 0.3, 20260819);
  std::string ratios;
  for (int run = 0; run < 3; ++run) {
    ExperimentConfig cfg;
    cfg.seed = 100 + static_cast<std::uint64_t>(run);

    cfg.index = IndexKind::cr;
    const auto tau_cr = run_experiment(ctx, cfg).tau;
    cfg.index = IndexKind::stability;
    const auto tau_st = run_experiment(ctx, cfg).tau;

    if (!tau_cr || !tau_st) return {false, "a run produced no mean time"};
    if (!(*tau_st >= 2.0 * *tau_cr))
      return {false, "run " + std::to_string(run + 1) + ": stability/CR ratio " +
                         fmt("%.2f", *tau_st / *tau_cr) + " < 2"};
    if (!ratios.empty()) ratios += ", ";
    ratios += fmt("%.0f", *tau_st / *tau_cr) + "x";
  }
  return {true, "stability/CR mean-time ratios over 3 runs: " + ratios};
}

double least_squares_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const auto n = static_cast<double>(xs.size());
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  return sxy / sxx;
}

Outcome check_complexity_guard() {
  std::vector<double> log_n, log_cr, n_vals, log_st;
  for (std::size_t n : {std::size_t{6}, std::size_t{8}, std::size_t{10}, std::size_t{12},
                        std::size_t{14}}) {
    const FormalContext ctx = contranominal(n);
    const ConceptLattice lat = build_lattice(ctx);
    const auto size = static_cast<double>(lat.size());

    double t0 = now_seconds();
    for (ConceptId id = 0; id < lat.size(); ++id)
      (void)conceptual_relevance(ctx, lat.concept_at(id), face_family(lat, id),
                                 Activation::arithmetic);
    const double cr_mean = (now_seconds() - t0) / size;

    t0 = now_seconds();
    for (ConceptId id = 0; id < lat.size(); ++id)
      (void)stability_favorable_count(ctx, lat.concept_at(id), n);
    const double st_mean = (now_seconds() - t0) / size;

    if (cr_mean <= 0 || st_mean <= 0) return {false, "timer resolution too coarse"};
    log_n.push_back(std::log(static_cast<double>(n)));
    log_cr.push_back(std::log(cr_mean));
    n_vals.push_back(static_cast<double>(n));
    log_st.push_back(std::log(st_mean));
  }

  const double cr_slope = least_squares_slope(log_n, log_cr);
  const double st_slope = least_squares_slope(n_vals, log_st);
  const std::string detail =
      "CR log-log slope " + fmt("%.2f", cr_slope) + " (limit 1.3), stability log-linear slope " +
      fmt("%.2f", st_slope) + " (floor 0.1)";
  if (cr_slope > 1.3 || st_slope < 0.1) return {false, detail};
  return {true, detail};
}

Outcome check_format_fidelity() {
  std::mt19937_64 rng(55001);
  for (int round = 0; round < 50; ++round) {
    const FormalContext ctx = cointoss_context(1 + rng() % 15, 1 + rng() % 12,
                                               0.1 * static_cast<double>(1 + rng() % 9), rng());

    const std::string once = write_cxt(ctx);
    const FormalContext reparsed = parse_cxt(once);
    if (!(reparsed == ctx)) return {false, "cxt reparse changed the context"};
    if (write_cxt(reparsed) != once) return {false, "cxt round-trip is not byte-identical"};

    std::string csv;
    for (const auto& attr : ctx.attributes()) csv += "," + attr;
    csv += '\n';
    for (std::size_t g = 0; g < ctx.object_count(); ++g) {
      csv += ctx.objects()[g];
      for (std::size_t m = 0; m < ctx.attribute_count(); ++m)
        csv += ctx.incident(g, m) ? ",1" : ",0";
      csv += '\n';
    }
    const ConceptLattice from_cxt = build_lattice(reparsed);
    const ConceptLattice from_csv = build_lattice(parse_csv(csv));
    if (!(from_cxt.concepts() == from_csv.concepts()))
      return {false, "csv ingestion changed the concept set"};
    for (ConceptId id = 0; id < from_cxt.size(); ++id)
      if (from_cxt.upper_covers(id) != from_csv.upper_covers(id))
        return {false, "csv ingestion changed the cover relation"};
  }
  return {true, "50 contexts round-tripped byte-identically with matching lattices"};
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int number, const char* label, const Outcome& outcome) {
    std::printf("%s C%d %s: %s\n", outcome.ok ? "PASS" : "FAIL", number, label,
                outcome.detail.c_str());
    if (!outcome.ok) ++failures;
  };

  report(1, "worked example", check_worked_example());

  const double corpus_t0 = now_seconds();
  const std::vector<CorpusEntry> corpus = build_corpus();
  report(2, "lattice oracle equivalence",
         check_lattice_oracle(corpus, now_seconds() - corpus_t0));
  report(3, "generator oracle equivalence", check_mingen_oracle(corpus));
  report(4, "stability cross-method", check_stability_cross_method(corpus));
  report(5, "protocol soundness", check_protocol_soundness());
  report(6, "performance direction", check_performance_direction());
  report(7, "complexity guard", check_complexity_guard());
  report(8, "format fidelity", check_format_fidelity());

  return failures;
}
