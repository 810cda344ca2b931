#include "fcar/relevance.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>

#include "fcar/parallel.hpp"

namespace fcar {

Activation activation_from_name(std::string_view name) {
  if (name == "arithmetic") return Activation::arithmetic;
  if (name == "geometric") return Activation::geometric;
  if (name == "harmonic") return Activation::harmonic;
  if (name == "product") return Activation::product;
  if (name == "min") return Activation::min;
  if (name == "max") return Activation::max;
  throw ConfigError("unknown activation '" + std::string(name) + "'");
}

std::string_view to_string(Activation a) {
  switch (a) {
    case Activation::arithmetic: return "arithmetic";
    case Activation::geometric: return "geometric";
    case Activation::harmonic: return "harmonic";
    case Activation::product: return "product";
    case Activation::min: return "min";
    case Activation::max: return "max";
  }
  return "?";
}

double apply_activation(Activation a, double x, double y) {
  switch (a) {
    case Activation::arithmetic: return (x + y) / 2.0;
    case Activation::geometric: return std::sqrt(x * y);
    case Activation::harmonic: return x + y == 0.0 ? 0.0 : 2.0 * x * y / (x + y);
    case Activation::product: return x * y;
    case Activation::min: return std::min(x, y);
    case Activation::max: return std::max(x, y);
  }
  return 0.0;
}

StabilityMethod stability_method_from_name(std::string_view name) {
  if (name == "brute") return StabilityMethod::brute_force;
  if (name == "dp") return StabilityMethod::lattice_dp;
  throw ConfigError("unknown stability method '" + std::string(name) + "'");
}

std::string_view to_string(StabilityMethod m) {
  return m == StabilityMethod::brute_force ? "brute" : "dp";
}

bool is_relevant_attribute(const FormalContext& ctx, const FormalConcept& c,
                           std::size_t attribute) {
  if (attribute >= c.intent.width() || !c.intent.test(attribute))
    throw std::invalid_argument("attribute does not belong to the concept intent");
  AttrSet reduced = c.intent;
  reduced.reset(attribute);
  return !(ctx.derive(reduced) == c.extent);
}

double relevant_attribute_ratio(const FormalContext& ctx, const FormalConcept& c) {
  const std::size_t intent_size = c.intent.count();
  if (intent_size == 0) return 0.0;
  std::size_t relevant = 0;
  c.intent.for_each([&](std::size_t m) {
    if (is_relevant_attribute(ctx, c, m)) ++relevant;
  });
  return static_cast<double>(relevant) / static_cast<double>(intent_size);
}

double generator_count_ratio(std::size_t n_generators, std::size_t intent_size) {
  if (n_generators <= 1 || intent_size <= 1) return 0.0;
  if (intent_size <= 62) {
    const std::uint64_t denom = (std::uint64_t{1} << intent_size) - 2;
    return static_cast<double>(n_generators) / static_cast<double>(denom);
  }
  // The 64-bit denominator would overflow; beyond any representable double
  // the ratio is simply 0.
  if (intent_size >= 16000) return 0.0;
  const long double denom = std::ldexp(1.0L, static_cast<int>(intent_size)) - 2.0L;
  return static_cast<double>(static_cast<long double>(n_generators) / denom);
}

RelevanceScore conceptual_relevance(const FormalContext& ctx, const FormalConcept& c,
                                    const FaceFamily& faces, Activation activation) {
  const double relevant_ratio = relevant_attribute_ratio(ctx, c);
  const MinGenSet gens = minimal_generators(c, faces);
  const double generator_ratio = generator_count_ratio(gens.gens.size(), c.intent.count());
  return {relevant_ratio, generator_ratio,
          apply_activation(activation, relevant_ratio, generator_ratio), activation,
          gens.gens.size()};
}

std::uint64_t stability_favorable_count(const FormalContext& ctx, const FormalConcept& c,
                                        std::size_t max_extent) {
  const std::vector<std::size_t> members = c.extent.to_indices();
  const std::size_t k = members.size();
  if (k > max_extent)
    throw ResourceLimitError("extent of size " + std::to_string(k) +
                             " exceeds the brute-force stability cap of " +
                             std::to_string(max_extent));

  // A subset derives to the intent exactly when the attributes its rows
  // share outside the intent vanish, so only the out-of-intent part of
  // each row matters. The walk is a full depth-first enumeration of all
  // 2^|A| subsets; levels[d] holds the shared out-of-intent attributes of
  // the subset chosen among the first d objects.
  std::vector<AttrSet> reduced_rows;
  reduced_rows.reserve(k);
  for (std::size_t g : members) {
    AttrSet r = ctx.row(g);
    r.and_not(c.intent);
    reduced_rows.push_back(std::move(r));
  }

  std::vector<AttrSet> levels(k + 1, AttrSet(c.intent.width()));
  levels[0] = ctx.all_attributes();
  levels[0].and_not(c.intent);

  std::uint64_t favorable = 0;
  auto walk = [&](auto&& self, std::size_t depth) -> void {
    if (depth == k) {
      favorable += levels[depth].none() ? 1 : 0;
      return;
    }
    levels[depth + 1] = levels[depth];
    self(self, depth + 1);
    levels[depth + 1] = levels[depth];
    levels[depth + 1] &= reduced_rows[depth];
    self(self, depth + 1);
  };
  walk(walk, 0);
  return favorable;
}

StabilityScore stability_brute_force(const FormalContext& ctx, const FormalConcept& c,
                                     std::size_t max_extent) {
  const std::uint64_t favorable = stability_favorable_count(ctx, c, max_extent);
  const double denom = std::ldexp(1.0, static_cast<int>(c.extent.count()));
  return {static_cast<double>(favorable) / denom, StabilityMethod::brute_force};
}

namespace {

// count / 2^k as a double, for counts of arbitrary width. The top 64 bits
// of the count carry more precision than a double mantissa, so the final
// rounding error stays below one double ulp times a small constant.
double ratio_over_power_of_two(const BigInt& count, std::size_t k) {
  if (count.is_zero()) return 0.0;
  const std::size_t bits = boost::multiprecision::msb(count) + 1;
  const std::size_t shift = bits > 64 ? bits - 64 : 0;
  const double mantissa = static_cast<double>(count >> shift);
  return std::ldexp(mantissa, static_cast<int>(shift) - static_cast<int>(k));
}

}  // namespace

LatticeStability stability_lattice(const ConceptLattice& lat) {
  const std::size_t n = lat.size();
  LatticeStability result;
  result.counts.assign(n, BigInt(0));
  result.values.assign(n, 0.0);

  // Canonical order is descending extent size, so iterating ids from the
  // back processes strict subsets before their supersets. Equal-size
  // extents are incomparable and may come in any order.
  for (std::size_t id = n; id-- > 0;) {
    const ObjSet& extent = lat.concept_at(id).extent;
    const std::size_t size = extent.count();
    BigInt favorable = BigInt(1) << size;
    for (std::size_t d = id + 1; d < n; ++d) {
      const ObjSet& sub = lat.concept_at(d).extent;
      if (sub.count() == size) continue;
      if (sub.is_subset_of(extent)) favorable -= result.counts[d];
    }
    assert(favorable > 0);
    result.counts[id] = favorable;
    result.values[id] = ratio_over_power_of_two(favorable, size);
  }

  return result;
}

std::vector<ConceptScoreRow> score_all_concepts(const FormalContext& ctx, const ConceptLattice& lat,
                                                Activation activation, StabilityMethod method,
                                                std::size_t max_extent, unsigned threads) {
  const std::size_t n = lat.size();
  std::vector<ConceptScoreRow> rows(n);

  LatticeStability dp;
  if (method == StabilityMethod::lattice_dp) dp = stability_lattice(lat);

  parallel_for(n, threads, [&](std::size_t id) {
    const FormalConcept& c = lat.concept_at(id);
    const FaceFamily faces = face_family(lat, id);
    const RelevanceScore score = conceptual_relevance(ctx, c, faces, activation);

    std::optional<double> stability;
    if (method == StabilityMethod::lattice_dp) {
      stability = dp.values[id];
    } else if (c.extent.count() <= max_extent) {
      stability = stability_brute_force(ctx, c, max_extent).value;
    }

    rows[id] = {id,
                c.extent.count(),
                c.intent.count(),
                score.relevant_ratio,
                score.generator_ratio,
                score.value,
                stability,
                score.n_generators};
  });

  return rows;
}

namespace {

std::string format_score(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void write_score_csv(const std::vector<ConceptScoreRow>& rows, std::ostream& out) {
  out << "concept_id,extent_size,intent_size,alpha,beta,cr,stability,n_mingens\n";
  for (const auto& r : rows) {
    out << r.id << ',' << r.extent_size << ',' << r.intent_size << ','
        << format_score(r.relevant_ratio) << ',' << format_score(r.generator_ratio) << ','
        << format_score(r.cr) << ',' << (r.stability ? format_score(*r.stability) : std::string())
        << ',' << r.n_generators << '\n';
  }
}

}  // namespace fcar
