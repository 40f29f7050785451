#pragma once

#include <algorithm>
#include <iterator>
#include <optional>
#include <random>
#include <vector>

#include "indexlab/iteration.hpp"

namespace testsupport {

using indexlab::ExactReal;
using indexlab::GeodesicModel;
using indexlab::NcgCase;

// Squarefree radicands the generator draws fields from.
inline constexpr int kRadicands[] = {2, 3, 5, 6, 7, 10, 11, 13};

/// Random (a + b*sqrt(D))/c in (0, 1), irrational.
inline ExactReal random_rotation(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> num(-40, 40), den(2, 60);
  for (;;) {
    const int a = num(rng), b = num(rng), c = den(rng);
    if (b == 0) continue;
    const auto x = ExactReal::make(a, b, c, d);
    if (x.sign() > 0 && x < ExactReal(1)) return x;
  }
}

inline ExactReal random_hyperbolic(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
  for (;;) {
    const auto d = ExactReal::rational(num(rng), den(rng));
    if (d != ExactReal(0) && d != ExactReal(1) && d != ExactReal(-1)) return d;
  }
}

inline indexlab::NBlock random_nblock(std::mt19937_64& rng, int d) {
  std::uniform_int_distribution<int> entry(-4, 4);
  indexlab::NBlock nb{random_rotation(rng, d), {}};
  for (auto& row : nb.coupling) {
    for (auto& e : row) e = ExactReal(entry(rng));
  }
  return nb;
}

/// Smallest n on which the case shape fits.
inline int min_dimension(NcgCase c) {
  switch (c) {
    case NcgCase::kNcg2: return 4;
    case NcgCase::kNcg3: return 5;
    case NcgCase::kNcg4: return 3;
    default: return 2;
  }
}

/// Random model of the requested case on S^n, or nullopt if the draw was
/// rejected (negative mean index); callers retry.
inline std::optional<GeodesicModel> try_random_model(std::mt19937_64& rng, NcgCase ncg, int n) {
  const int d = kRadicands[std::uniform_int_distribution<int>(0, std::size(kRadicands) - 1)(rng)];
  const int free_max = n - 1;
  // r N blocks use 2r of the n-1 complex dimensions.
  int k_min = 0, h_min = 0;
  switch (ncg) {
    case NcgCase::kNcg1: k_min = 1; break;
    case NcgCase::kNcg2: k_min = 2; h_min = 1; break;
    case NcgCase::kNcg3: k_min = 3; h_min = 1; break;
    case NcgCase::kNcg4: k_min = 1; h_min = 1; break;
    case NcgCase::kNcg5: break;
  }
  const int r_max = (free_max - k_min - h_min) / 2;
  if (r_max < 0) return std::nullopt;
  const int r = std::uniform_int_distribution<int>(0, r_max)(rng);
  const int rest = free_max - 2 * r;
  int k = 0;
  switch (ncg) {
    case NcgCase::kNcg1: k = rest; break;
    case NcgCase::kNcg2: k = 2 * std::uniform_int_distribution<int>(1, (rest - 1) / 2)(rng); break;
    case NcgCase::kNcg3: k = 2 * std::uniform_int_distribution<int>(1, (rest - 2) / 2)(rng) + 1; break;
    case NcgCase::kNcg4: k = 1; break;
    case NcgCase::kNcg5: k = 0; break;
  }
  const int h = rest - k;
  if (ncg == NcgCase::kNcg5 && h == 0 && r == 0) return std::nullopt;

  std::vector<indexlab::Block> blocks;
  for (int i = 0; i < r; ++i) blocks.emplace_back(random_nblock(rng, d));
  for (int i = 0; i < k; ++i) blocks.emplace_back(indexlab::Rotation{random_rotation(rng, d)});
  for (int i = 0; i < h; ++i) blocks.emplace_back(indexlab::Hyperbolic{random_hyperbolic(rng)});
  std::shuffle(blocks.begin(), blocks.end(), rng);

  std::int64_t p = std::uniform_int_distribution<int>(0, 6)(rng);
  if (ncg == NcgCase::kNcg1) p -= (n - 2 * r - 1) / 2;
  try {
    return GeodesicModel(n, indexlab::NormalFormDecomposition(std::move(blocks)), p, ncg);
  } catch (const indexlab::InvalidModel&) {
    return std::nullopt;
  }
}

inline GeodesicModel random_model(std::mt19937_64& rng, NcgCase ncg, int n) {
  for (;;) {
    if (auto g = try_random_model(rng, ncg, n)) return *g;
  }
}

/// Any case, n drawn from [min_dimension, n_max].
inline GeodesicModel random_model(std::mt19937_64& rng, int n_max = 10) {
  const auto ncg = static_cast<NcgCase>(std::uniform_int_distribution<int>(1, 5)(rng));
  const int n = std::uniform_int_distribution<int>(min_dimension(ncg), n_max)(rng);
  return random_model(rng, ncg, n);
}

/// Models of one sphere with strictly positive mean index.
inline std::vector<GeodesicModel> random_model_set(std::mt19937_64& rng, int n, int count) {
  std::vector<GeodesicModel> out;
  while (static_cast<int>(out.size()) < count) {
    const auto ncg = static_cast<NcgCase>(std::uniform_int_distribution<int>(1, 5)(rng));
    if (n < min_dimension(ncg)) continue;
    auto g = random_model(rng, ncg, n);
    if (g.mean_index().sign() > 0) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace testsupport
