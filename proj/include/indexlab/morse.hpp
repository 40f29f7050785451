#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "indexlab/exact.hpp"
#include "indexlab/iteration.hpp"

namespace indexlab {

/// Rank of H_q of the quotient free loop space pair of S^n relative to the
/// constant loops, from the closed form.
std::int64_t betti(int n, std::int64_t q);

struct BettiTable {
  int n = 2;
  std::vector<std::int64_t> values;  // q = 0..horizon

  std::int64_t horizon() const { return static_cast<std::int64_t>(values.size()) - 1; }
};

BettiTable betti_table(int n, std::int64_t horizon);

/// Truncated formal power series with integer coefficients.
struct SeriesPolynomial {
  std::vector<std::int64_t> coefficients;  // index 0..degree

  std::int64_t degree() const { return static_cast<std::int64_t>(coefficients.size()) - 1; }
  std::int64_t operator[](std::int64_t q) const {
    return q >= 0 && q <= degree() ? coefficients[static_cast<std::size_t>(q)] : 0;
  }
};

namespace series {

SeriesPolynomial monomial(std::int64_t power, std::int64_t degree);
/// 1 / (1 - t^step) truncated at `degree`.
SeriesPolynomial geometric(std::int64_t step, std::int64_t degree);
SeriesPolynomial add(const SeriesPolynomial& x, const SeriesPolynomial& y);
SeriesPolynomial multiply(const SeriesPolynomial& x, const SeriesPolynomial& y);
/// Power series quotient x / y; y must have constant term +-1.
SeriesPolynomial divide(const SeriesPolynomial& x, const SeriesPolynomial& y);

}  // namespace series

/// Coefficients of the Poincare series up to `degree`, expanded from its
/// rational generating function (independent of the closed form in betti).
SeriesPolynomial poincare_series_truncated(int n, std::int64_t degree);

/// M_q for q = 0..horizon: number of iterates with a non-zero critical
/// module in degree q, summed over all models.
struct MorseTable {
  std::vector<std::int64_t> values;

  std::int64_t horizon() const { return static_cast<std::int64_t>(values.size()) - 1; }
  std::int64_t operator[](std::int64_t q) const {
    return q >= 0 && q <= horizon() ? values[static_cast<std::size_t>(q)] : 0;
  }
  friend bool operator==(const MorseTable&, const MorseTable&) = default;
};

/// Smallest m beyond which no iterate of g has index <= horizon, from
/// |i(c^m) - m * mean| <= n - 1. Throws NonTerminatingSum if mean <= 0.
std::int64_t iterate_cutoff(const GeodesicModel& g, std::int64_t horizon);

/// Parallel over models. `cutoff_factor` scales the per-model iterate
/// bound; any factor >= 1 gives the same table.
MorseTable morse_numbers(std::span<const GeodesicModel> models, std::int64_t horizon,
                         std::int64_t cutoff_factor = 1);

/// Serial reference for morse_numbers.
MorseTable morse_numbers_serial(std::span<const GeodesicModel> models, std::int64_t horizon,
                                std::int64_t cutoff_factor = 1);

struct Violation {
  enum class Kind { kAlternating, kPointwise };
  std::int64_t q = 0;
  Kind kind = Kind::kPointwise;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;

  std::string describe() const;
  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(Violation::Kind kind);

/// Every failure of
///   M_q - M_{q-1} + ... +- M_0 >= b_q - b_{q-1} + ... +- b_0   (alternating)
///   M_q >= b_q                                                 (pointwise)
/// for q <= horizon, in increasing q, alternating before pointwise.
std::vector<Violation> check_morse_inequalities(const MorseTable& morse, const BettiTable& betti,
                                                std::int64_t horizon);

/// Limit of P^m(-1)/m for the sphere S^n.
ExactReal euler_limit(int n);

/// Value at t = -1 of the degree-m truncation.
std::int64_t truncated_at_minus_one(const SeriesPolynomial& s, std::int64_t m);

/// s^m(-1) / m. Throws RangeError if m exceeds the truncation degree.
ExactReal averaged_alternating_sum(const SeriesPolynomial& s, std::int64_t m);

/// Q with M(t) = P(t) + (1 + t) Q(t), up to the common horizon.
SeriesPolynomial extract_q_series(const MorseTable& morse, const BettiTable& betti);

/// Sum over m = 1..N of (-1)^i(c^m) k0(c^m) for one model.
int identity_sign_sum(const GeodesicModel& g);

/// Left side of the mean index identity
///   sum_j sum_{m=1..N_j} (-1)^i(c_j^m) k0(c_j^m) / (N_j * mean_j).
/// Every prime geodesic is homologically visible here (k0 = 1 at m = 1), so
/// callers pass the full list. Throws NonTerminatingSum when a mean is <= 0.
ExactReal mean_index_identity_lhs(std::span<const GeodesicModel> models);

/// Mean index a single geodesic must have for the identity to hold, given its
/// sign sum and analytic period: sign_sum / (period * euler_limit(n)).
ExactReal pinned_mean_index(int n, int sign_sum, int period);

}  // namespace indexlab
