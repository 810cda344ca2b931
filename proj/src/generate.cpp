#include "fcar/generate.hpp"

#include <random>
#include <stdexcept>

namespace fcar {

FormalContext cointoss_context(std::size_t n_objects, std::size_t n_attrs, double p,
                               std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("density must lie in [0, 1]");

  std::vector<std::string> objects;
  objects.reserve(n_objects);
  for (std::size_t g = 0; g < n_objects; ++g) objects.push_back("o" + std::to_string(g + 1));
  std::vector<std::string> attributes;
  attributes.reserve(n_attrs);
  for (std::size_t m = 0; m < n_attrs; ++m) attributes.push_back("a" + std::to_string(m + 1));

  std::mt19937_64 rng(seed);
  std::vector<AttrSet> rows(n_objects, AttrSet(n_attrs));
  for (std::size_t g = 0; g < n_objects; ++g) {
    for (std::size_t m = 0; m < n_attrs; ++m) {
      // 53-bit uniform in [0, 1); avoids distribution objects, whose output
      // is not pinned down by the standard.
      const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (u < p) rows[g].set(m);
    }
  }

  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

}  // namespace fcar
