#include "ccoa/generator.hpp"

#include <limits>

namespace ccoa {

std::uint64_t Rng::below(std::uint64_t bound) {
  // Rejection sampling on the top of the range avoids modulo bias.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

bool Rng::chance(double p) { return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p; }

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::vector<std::string> default_names(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("v" + std::to_string(i));
  return names;
}

CcoaCsp random_csp(std::size_t n, double density, std::uint64_t seed) {
  Rng rng(seed);
  CcoaCsp csp(default_names(n));
  auto relation_mask = [&] { return static_cast<std::uint16_t>(1 + rng.below(511)); };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(density)) csp.assert_cda(i, j, CdaRelation::from_mask(relation_mask()));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (rng.chance(density)) csp.assert_roa(i, j, k, RoaRelation::from_mask(relation_mask()));
  return csp;
}

CcoaCsp random_atomic_cda(std::size_t n, Rng& rng) {
  CcoaCsp csp(default_names(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) csp.assert_cda(i, j, CdaRelation{atom_at<CdaAtom>(rng.below(kAtomCount))});
  return csp;
}

PlantedInstance planted_csp(std::size_t n, int radius, double density, Rng& rng) {
  PlantedInstance out{CcoaCsp(default_names(n)), {}};
  for (std::size_t i = 0; i < n; ++i) out.model.push_back({rng.between(-radius, radius), rng.between(-radius, radius)});
  auto weaken = [&](auto rel) {
    for (std::size_t a = 0; a < kAtomCount; ++a)
      if (rng.chance(0.5)) rel.insert(atom_at<typename decltype(rel)::atom_type>(a));
    return rel;
  };
  const auto& m = out.model;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.chance(density)) out.csp.assert_cda(i, j, weaken(CdaRelation{cda_of(m[i], m[j])}));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (rng.chance(density)) out.csp.assert_roa(i, j, k, weaken(RoaRelation{roa_of(m[i], m[j], m[k])}));
  return out;
}

}  // namespace ccoa
