#include "fcar/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>

#include "fcar/parallel.hpp"

namespace fcar {

SplitPair split_context(const FormalContext& ctx, double ratio, std::uint64_t seed) {
  const std::size_t n = ctx.object_count();
  if (n < 2) throw std::invalid_argument("splitting requires at least two objects");
  if (!(ratio > 0.0 && ratio < 1.0)) throw std::invalid_argument("split ratio must lie in (0, 1)");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::mt19937_64 rng(seed);
  for (std::size_t i = n - 1; i > 0; --i) {
    const std::size_t j = static_cast<std::size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  const auto k = static_cast<std::size_t>(std::ceil(ratio * static_cast<double>(n)));

  auto take = [&](std::size_t begin, std::size_t end) {
    std::vector<std::string> objects;
    std::vector<AttrSet> rows;
    objects.reserve(end - begin);
    rows.reserve(end - begin);
    for (std::size_t i = begin; i < end; ++i) {
      objects.push_back(ctx.objects()[order[i]]);
      rows.push_back(ctx.row(order[i]));
    }
    return FormalContext(std::move(objects), std::vector<std::string>(ctx.attributes()),
                         std::move(rows), ctx.name());
  };

  return {take(0, k), take(k, n), seed, ratio};
}

SharedConceptPairs shared_concepts(const ConceptLattice& reference, const ConceptLattice& test) {
  if (reference.attribute_names() != test.attribute_names())
    throw std::invalid_argument("lattices are over different attribute universes");

  SharedConceptPairs shared;
  for (ConceptId r = 0; r < reference.size(); ++r) {
    if (auto t = test.find_by_intent(reference.concept_at(r).intent))
      shared.pairs.emplace_back(r, *t);
  }

  std::sort(shared.pairs.begin(), shared.pairs.end(), [&](const auto& a, const auto& b) {
    const AttrSet& ia = reference.concept_at(a.first).intent;
    const AttrSet& ib = reference.concept_at(b.first).intent;
    const std::size_t ca = ia.count(), cb = ib.count();
    if (ca != cb) return ca < cb;
    return ia.compare_value(ib) < 0;
  });
  return shared;
}

std::optional<double> pearson(std::span<const std::pair<double, double>> pairs) {
  const std::size_t n = pairs.size();
  if (n < 2) throw std::invalid_argument("correlation requires at least two pairs");

  long double sx = 0, sy = 0, sxy = 0, sxx = 0, syy = 0;
  for (const auto& [x, y] : pairs) {
    sx += x;
    sy += y;
    sxy += static_cast<long double>(x) * y;
    sxx += static_cast<long double>(x) * x;
    syy += static_cast<long double>(y) * y;
  }
  const auto nl = static_cast<long double>(n);
  const long double mx = sx / nl;
  const long double my = sy / nl;
  const long double numerator = sxy - nl * mx * my;
  const long double var_x = sxx - nl * mx * mx;
  const long double var_y = syy - nl * my * my;
  if (var_x <= 0 || var_y <= 0) return std::nullopt;
  return static_cast<double>(numerator / (std::sqrt(var_x) * std::sqrt(var_y)));
}

double avg_elapsed_time(std::span<const double> reference_seconds,
                        std::span<const double> test_seconds) {
  if (reference_seconds.empty() || test_seconds.empty())
    throw std::invalid_argument("timing lists must be nonempty");
  const double mean_ref =
      std::accumulate(reference_seconds.begin(), reference_seconds.end(), 0.0) /
      static_cast<double>(reference_seconds.size());
  const double mean_test = std::accumulate(test_seconds.begin(), test_seconds.end(), 0.0) /
                           static_cast<double>(test_seconds.size());
  return (mean_ref + mean_test) / 2.0;
}

IndexKind index_from_name(std::string_view name) {
  if (name == "cr") return IndexKind::cr;
  if (name == "stability") return IndexKind::stability;
  throw ConfigError("unknown index '" + std::string(name) + "'");
}

std::string_view to_string(IndexKind k) { return k == IndexKind::cr ? "cr" : "stability"; }

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

struct Side {
  const FormalContext& ctx;
  const ConceptLattice& lat;
};

// Scores one concept and returns {score, elapsed seconds}. The timed
// region covers face retrieval and the index computation, nothing else.
std::pair<double, double> timed_score(const Side& side, ConceptId id,
                                      const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  double value = 0.0;
  if (config.index == IndexKind::cr) {
    const FaceFamily faces = face_family(side.lat, id);
    value = conceptual_relevance(side.ctx, side.lat.concept_at(id), faces, config.activation).value;
  } else {
    value = stability_brute_force(side.ctx, side.lat.concept_at(id), config.max_stability_extent)
                .value;
  }
  return {value, seconds_since(start)};
}

}  // namespace

EvalReport run_experiment_on_split(const SplitPair& split, const ExperimentConfig& config) {
  const LatticeOptions lattice_options{config.max_concepts, 10'000, config.threads};
  const ConceptLattice lat_ref = build_lattice(split.reference, lattice_options);
  const ConceptLattice lat_test = build_lattice(split.test, lattice_options);

  SharedConceptPairs shared = shared_concepts(lat_ref, lat_test);

  EvalReport report;
  report.index = config.index;
  report.activation = config.activation;

  const bool brute_stability =
      config.index == IndexKind::stability && config.stability_method == StabilityMethod::brute_force;

  // With the brute-force method, concepts whose extent exceeds the cap on
  // either side are dropped from both sides' lists.
  if (brute_stability) {
    auto over_cap = [&](const std::pair<ConceptId, ConceptId>& p) {
      return lat_ref.concept_at(p.first).extent.count() > config.max_stability_extent ||
             lat_test.concept_at(p.second).extent.count() > config.max_stability_extent;
    };
    const auto first_dropped =
        std::stable_partition(shared.pairs.begin(), shared.pairs.end(),
                              [&](const auto& p) { return !over_cap(p); });
    report.n_dropped = static_cast<std::size_t>(shared.pairs.end() - first_dropped);
    shared.pairs.erase(first_dropped, shared.pairs.end());
  }

  const std::size_t n = shared.pairs.size();
  std::vector<double> x(n), y(n), t_ref(n), t_test(n);

  if (config.index == IndexKind::stability &&
      config.stability_method == StabilityMethod::lattice_dp) {
    // One DP pass per side; its wall time is attributed to the side's
    // concepts uniformly.
    auto run_dp = [](const ConceptLattice& lat) {
      const auto start = std::chrono::steady_clock::now();
      LatticeStability dp = stability_lattice(lat);
      const double per_concept =
          lat.size() == 0 ? 0.0 : seconds_since(start) / static_cast<double>(lat.size());
      return std::make_pair(std::move(dp), per_concept);
    };
    const auto [dp_ref, sec_ref] = run_dp(lat_ref);
    const auto [dp_test, sec_test] = run_dp(lat_test);
    for (std::size_t i = 0; i < n; ++i) {
      x[i] = dp_ref.values[shared.pairs[i].first];
      y[i] = dp_test.values[shared.pairs[i].second];
      t_ref[i] = sec_ref;
      t_test[i] = sec_test;
    }
  } else {
    const Side ref{split.reference, lat_ref};
    const Side test{split.test, lat_test};
    parallel_for(n, config.threads, [&](std::size_t i) {
      std::tie(x[i], t_ref[i]) = timed_score(ref, shared.pairs[i].first, config);
      std::tie(y[i], t_test[i]) = timed_score(test, shared.pairs[i].second, config);
    });
  }

  report.score_rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::string> intent_names;
    lat_ref.concept_at(shared.pairs[i].first).intent.for_each([&](std::size_t m) {
      intent_names.push_back(lat_ref.attribute_names()[m]);
    });
    report.score_rows.push_back({std::move(intent_names), x[i], y[i]});
  }

  if (n >= 2) {
    std::vector<std::pair<double, double>> xy(n);
    for (std::size_t i = 0; i < n; ++i) xy[i] = {x[i], y[i]};
    report.xi = pearson(xy);
  }
  if (n >= 1) report.tau = avg_elapsed_time(t_ref, t_test);

  report.timing_rows.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i)
    report.timing_rows.push_back({"reference", shared.pairs[i].first, t_ref[i]});
  for (std::size_t i = 0; i < n; ++i)
    report.timing_rows.push_back({"test", shared.pairs[i].second, t_test[i]});

  return report;
}

EvalReport run_experiment(const FormalContext& ctx, const ExperimentConfig& config) {
  return run_experiment_on_split(split_context(ctx, config.ratio, config.seed), config);
}

namespace {

std::string format_with(const char* spec, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, spec, v);
  return buf;
}

std::string format_score(double v) { return format_with("%.12g", v); }
std::string format_seconds(double v) { return format_with("%.9g", v); }

}  // namespace

void write_eval_scores_csv(const EvalReport& report, std::ostream& out) {
  out << "intent,x,y\n";
  for (const auto& row : report.score_rows) {
    for (std::size_t i = 0; i < row.intent.size(); ++i) {
      if (i) out << '|';
      out << row.intent[i];
    }
    out << ',' << format_score(row.x) << ',' << format_score(row.y) << '\n';
  }
}

void write_eval_summary_csv(const EvalReport& report, std::ostream& out) {
  out << "index,activation,n,xi,tau_seconds\n";
  out << to_string(report.index) << ',' << to_string(report.activation) << ','
      << report.score_rows.size() << ','
      << (report.xi ? format_score(*report.xi) : std::string("undefined")) << ','
      << (report.tau ? format_seconds(*report.tau) : std::string("undefined")) << '\n';
}

void write_eval_timings_csv(const EvalReport& report, std::ostream& out) {
  out << "side,concept_id,seconds\n";
  for (const auto& row : report.timing_rows)
    out << row.side << ',' << row.id << ',' << format_seconds(row.seconds) << '\n';
}

}  // namespace fcar
