#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "indexlab/exact.hpp"
#include "indexlab/symplectic.hpp"

namespace indexlab {

/// The five shapes of a completely non-degenerate linearized Poincare map.
enum class NcgCase { kNcg1 = 1, kNcg2, kNcg3, kNcg4, kNcg5 };

std::string to_string(NcgCase c);
/// Accepts "NCG1", "ncg1", "NCG-1".
NcgCase parse_ncg_case(std::string_view text);

/// Case of a decomposition on S^n. Rotations without hyperbolic blocks are
/// always NCG1 (also for a single rotation, where the NCG4 formula agrees);
/// a decomposition made only of N blocks is NCG5.
NcgCase classify(int n, const NormalFormDecomposition& dec);

struct IterateIndex {
  std::int64_t i = 0;
  std::int64_t nu = 0;
  friend bool operator==(const IterateIndex&, const IterateIndex&) = default;
};

/// Critical type of an iterate: epsilon = (-1)^(i(c^m) - i(c)) and the only
/// possibly non-zero critical type number k0^epsilon.
struct CriticalType {
  int epsilon = 1;
  int k0 = 1;
  friend bool operator==(const CriticalType&, const CriticalType&) = default;
};

/// One hypothetical prime closed geodesic, reduced to its index data.
///
/// `p` is an input (it encodes the homotopy class of the path to the normal
/// form) and is not inferred from the blocks. Construction validates the
/// case invariants and rejects models whose mean index is negative.
class GeodesicModel {
 public:
  GeodesicModel(int n, NormalFormDecomposition dec, std::int64_t p,
                std::optional<NcgCase> declared = std::nullopt);

  int n() const noexcept { return n_; }
  const NormalFormDecomposition& dec() const noexcept { return dec_; }
  std::int64_t p() const noexcept { return p_; }
  NcgCase ncg_case() const noexcept { return case_; }
  /// Number of N blocks.
  int r() const noexcept { return r_; }
  /// Number of R blocks.
  int k() const noexcept { return k_; }
  int h() const noexcept { return h_; }
  const std::vector<ExactReal>& rotations() const noexcept { return rotations_; }

  IterateIndex index_of_iterate(std::int64_t m) const;
  std::int64_t i1() const { return index_of_iterate(1).i; }
  const ExactReal& mean_index() const noexcept { return mean_; }
  int analytic_period() const noexcept;
  CriticalType critical_type(std::int64_t m) const;
  int critical_module_dim(std::int64_t m, std::int64_t q) const;

  friend bool operator==(const GeodesicModel&, const GeodesicModel&) = default;

 private:
  std::int64_t floor_sum(std::int64_t m) const;

  int n_;
  NormalFormDecomposition dec_;
  std::int64_t p_;
  NcgCase case_;
  int r_ = 0, k_ = 0, h_ = 0;
  std::vector<ExactReal> rotations_;
  ExactReal mean_;
};

IterateIndex index_of_iterate(const GeodesicModel& g, std::int64_t m);
ExactReal mean_index(const GeodesicModel& g);
int analytic_period(const GeodesicModel& g);
CriticalType critical_type(const GeodesicModel& g, std::int64_t m);
int critical_module_dim(const GeodesicModel& g, std::int64_t m, std::int64_t q);

/// Index sequence of a model, memoized up to a horizon. Immutable after
/// construction, so lookups are safe from any thread.
class IndexProfile {
 public:
  IndexProfile(GeodesicModel model, std::int64_t horizon);

  const GeodesicModel& model() const noexcept { return model_; }
  std::int64_t horizon() const noexcept { return static_cast<std::int64_t>(table_.size()); }

  std::int64_t i(std::int64_t m) const;
  std::int64_t nu(std::int64_t) const noexcept { return 0; }
  const ExactReal& mean() const noexcept { return model_.mean_index(); }
  int period() const noexcept { return model_.analytic_period(); }
  std::int64_t i1() const { return i(1); }
  CriticalType critical_type(std::int64_t m) const;

 private:
  GeodesicModel model_;
  std::vector<std::int64_t> table_;
};

/// Parity data that fixes every critical type: the case, and the parities of
/// n, p and the rotation count. Index parities follow from the iteration
/// formulas modulo 2 without any rotation number.
struct ParityShape {
  NcgCase ncg = NcgCase::kNcg1;
  int n = 2;
  int p_parity = 0;
  int k_parity = 0;

  static ParityShape of(const GeodesicModel& g);

  int index_parity(std::int64_t m) const;
  CriticalType critical_type(std::int64_t m) const;
  int analytic_period() const;
  /// Sum over m = 1..N of (-1)^i(c^m) * k0(c^m).
  int sign_sum() const;
};

}  // namespace indexlab
