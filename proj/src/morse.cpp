#include "indexlab/morse.hpp"

#include <algorithm>
#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace indexlab {

std::int64_t betti(int n, std::int64_t q) {
  const std::int64_t base = n - 1;
  if (q < base || (q - base) % 2 != 0) return 0;
  if (q % base == 0) {
    const std::int64_t k = q / base;
    const bool doubled = (n % 2 == 0) ? (k >= 3 && k % 2 == 1) : (k >= 2);
    if (doubled) return 2;
  }
  return 1;
}

BettiTable betti_table(int n, std::int64_t horizon) {
  BettiTable t{n, {}};
  t.values.reserve(static_cast<std::size_t>(horizon + 1));
  for (std::int64_t q = 0; q <= horizon; ++q) t.values.push_back(betti(n, q));
  return t;
}

namespace series {

SeriesPolynomial monomial(std::int64_t power, std::int64_t degree) {
  SeriesPolynomial s{std::vector<std::int64_t>(static_cast<std::size_t>(degree + 1), 0)};
  if (power >= 0 && power <= degree) s.coefficients[static_cast<std::size_t>(power)] = 1;
  return s;
}

SeriesPolynomial geometric(std::int64_t step, std::int64_t degree) {
  SeriesPolynomial s{std::vector<std::int64_t>(static_cast<std::size_t>(degree + 1), 0)};
  for (std::int64_t q = 0; q <= degree; q += step) s.coefficients[static_cast<std::size_t>(q)] = 1;
  return s;
}

SeriesPolynomial add(const SeriesPolynomial& x, const SeriesPolynomial& y) {
  const auto deg = std::min(x.degree(), y.degree());
  SeriesPolynomial s{std::vector<std::int64_t>(static_cast<std::size_t>(deg + 1), 0)};
  for (std::int64_t q = 0; q <= deg; ++q) s.coefficients[static_cast<std::size_t>(q)] = x[q] + y[q];
  return s;
}

SeriesPolynomial multiply(const SeriesPolynomial& x, const SeriesPolynomial& y) {
  const auto deg = std::min(x.degree(), y.degree());
  SeriesPolynomial s{std::vector<std::int64_t>(static_cast<std::size_t>(deg + 1), 0)};
  for (std::int64_t i = 0; i <= deg; ++i) {
    if (x[i] == 0) continue;
    for (std::int64_t j = 0; i + j <= deg; ++j) {
      s.coefficients[static_cast<std::size_t>(i + j)] += x[i] * y[j];
    }
  }
  return s;
}

SeriesPolynomial divide(const SeriesPolynomial& x, const SeriesPolynomial& y) {
  const std::int64_t lead = y[0];
  if (lead != 1 && lead != -1) throw RangeError("series divisor must have unit constant term");
  const auto deg = x.degree();
  SeriesPolynomial q{std::vector<std::int64_t>(static_cast<std::size_t>(deg + 1), 0)};
  for (std::int64_t i = 0; i <= deg; ++i) {
    std::int64_t acc = x[i];
    for (std::int64_t j = 1; j <= i; ++j) acc -= y[j] * q[i - j];
    q.coefficients[static_cast<std::size_t>(i)] = acc * lead;
  }
  return q;
}

}  // namespace series

SeriesPolynomial poincare_series_truncated(int n, std::int64_t degree) {
  // t^(n-1) * (1/(1-t^2) + t^s/(1-t^s)), s = 2n-2 for even n, n-1 for odd n.
  const std::int64_t s = (n % 2 == 0) ? 2 * (n - 1) : (n - 1);
  const auto tail = series::multiply(series::monomial(s, degree), series::geometric(s, degree));
  const auto bracket = series::add(series::geometric(2, degree), tail);
  return series::multiply(series::monomial(n - 1, degree), bracket);
}

std::int64_t iterate_cutoff(const GeodesicModel& g, std::int64_t horizon) {
  if (g.mean_index().sign() <= 0) {
    throw NonTerminatingSum("mean index " + g.mean_index().to_string() +
                            " is not positive; the iterate sum does not terminate");
  }
  const ExactReal bound = ExactReal(horizon + g.n() - 1) / g.mean_index();
  return bound.ceil().convert_to<std::int64_t>() + 1;
}

namespace {

// Adds the critical-module counts of one model into `out` (size horizon+1).
void accumulate(const GeodesicModel& g, std::int64_t horizon, std::int64_t last_m,
                std::vector<std::int64_t>& out) {
  const std::int64_t base = g.i1();
  for (std::int64_t m = 1; m <= last_m; ++m) {
    const std::int64_t i = g.index_of_iterate(m).i;
    if (i < 0 || i > horizon || (i - base) % 2 != 0) continue;
    ++out[static_cast<std::size_t>(i)];
  }
}

std::vector<std::int64_t> cutoffs(std::span<const GeodesicModel> models, std::int64_t horizon,
                                  std::int64_t factor) {
  if (horizon < 0) throw RangeError("horizon must be non-negative");
  if (factor < 1) throw RangeError("cutoff factor must be at least 1");
  std::vector<std::int64_t> out;
  out.reserve(models.size());
  for (const auto& g : models) out.push_back(iterate_cutoff(g, horizon) * factor);
  return out;
}

}  // namespace

MorseTable morse_numbers_serial(std::span<const GeodesicModel> models, std::int64_t horizon,
                                std::int64_t cutoff_factor) {
  const auto last = cutoffs(models, horizon, cutoff_factor);
  MorseTable table{std::vector<std::int64_t>(static_cast<std::size_t>(horizon + 1), 0)};
  for (std::size_t j = 0; j < models.size(); ++j) accumulate(models[j], horizon, last[j], table.values);
  return table;
}

MorseTable morse_numbers(std::span<const GeodesicModel> models, std::int64_t horizon,
                         std::int64_t cutoff_factor) {
  const auto last = cutoffs(models, horizon, cutoff_factor);
  const auto width = static_cast<std::size_t>(horizon + 1);
  MorseTable table{std::vector<std::int64_t>(width, 0)};
  std::exception_ptr failure;
  const auto count = static_cast<std::int64_t>(models.size());

#pragma omp parallel
  {
    std::vector<std::int64_t> local(width, 0);
#pragma omp for schedule(dynamic)
    for (std::int64_t j = 0; j < count; ++j) {
      try {
        accumulate(models[static_cast<std::size_t>(j)], horizon, last[static_cast<std::size_t>(j)],
                   local);
      } catch (...) {
#pragma omp critical(indexlab_morse_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(indexlab_morse_merge)
    for (std::size_t q = 0; q < width; ++q) table.values[q] += local[q];
  }

  if (failure) std::rethrow_exception(failure);
  return table;
}

std::string to_string(Violation::Kind kind) {
  return kind == Violation::Kind::kAlternating ? "alternating" : "pointwise";
}

std::string Violation::describe() const {
  return "q=" + std::to_string(q) + " " + to_string(kind) + ": " + std::to_string(lhs) +
         " >= " + std::to_string(rhs) + " fails";
}

std::vector<Violation> check_morse_inequalities(const MorseTable& morse, const BettiTable& betti,
                                                std::int64_t horizon) {
  if (horizon > morse.horizon() || horizon > betti.horizon()) {
    throw RangeError("tables do not cover horizon " + std::to_string(horizon));
  }
  std::vector<Violation> out;
  std::int64_t alt_m = 0;
  std::int64_t alt_b = 0;
  for (std::int64_t q = 0; q <= horizon; ++q) {
    const auto mq = morse[q];
    const auto bq = betti.values[static_cast<std::size_t>(q)];
    alt_m = mq - alt_m;
    alt_b = bq - alt_b;
    if (alt_m < alt_b) out.push_back({q, Violation::Kind::kAlternating, alt_m, alt_b});
    if (mq < bq) out.push_back({q, Violation::Kind::kPointwise, mq, bq});
  }
  return out;
}

ExactReal euler_limit(int n) {
  if (n < 2) throw RangeError("sphere dimension must be at least 2");
  return n % 2 == 0 ? ExactReal::rational(-n, 2 * (n - 1)) : ExactReal::rational(n + 1, 2 * (n - 1));
}

std::int64_t truncated_at_minus_one(const SeriesPolynomial& s, std::int64_t m) {
  std::int64_t acc = 0;
  for (std::int64_t q = 0; q <= m; ++q) acc += (q % 2 == 0 ? 1 : -1) * s[q];
  return acc;
}

ExactReal averaged_alternating_sum(const SeriesPolynomial& s, std::int64_t m) {
  if (m < 1 || m > s.degree()) {
    throw RangeError("truncation " + std::to_string(m) + " outside [1, " +
                     std::to_string(s.degree()) + "]");
  }
  return ExactReal::rational(truncated_at_minus_one(s, m), m);
}

SeriesPolynomial extract_q_series(const MorseTable& morse, const BettiTable& betti) {
  const auto deg = std::min(morse.horizon(), betti.horizon());
  SeriesPolynomial diff{std::vector<std::int64_t>(static_cast<std::size_t>(deg + 1), 0)};
  for (std::int64_t q = 0; q <= deg; ++q) {
    diff.coefficients[static_cast<std::size_t>(q)] = morse[q] - betti.values[static_cast<std::size_t>(q)];
  }
  SeriesPolynomial one_plus_t{{1, 1}};
  one_plus_t.coefficients.resize(static_cast<std::size_t>(deg + 1), 0);
  return series::divide(diff, one_plus_t);
}

int identity_sign_sum(const GeodesicModel& g) {
  int s = 0;
  for (int m = 1; m <= g.analytic_period(); ++m) {
    const auto i = g.index_of_iterate(m).i;
    s += (i % 2 == 0 ? 1 : -1) * g.critical_type(m).k0;
  }
  return s;
}

ExactReal mean_index_identity_lhs(std::span<const GeodesicModel> models) {
  ExactReal total;
  for (const auto& g : models) {
    if (g.mean_index().sign() <= 0) {
      throw PreconditionError("mean index > 0",
                              "model has mean index " + g.mean_index().to_string());
    }
    total += ExactReal(identity_sign_sum(g)) / (ExactReal(g.analytic_period()) * g.mean_index());
  }
  return total;
}

ExactReal pinned_mean_index(int n, int sign_sum, int period) {
  if (sign_sum == 0) throw RangeError("a zero sign sum does not constrain the mean index");
  if (period < 1) throw RangeError("analytic period must be positive");
  return ExactReal(sign_sum) / (ExactReal(period) * euler_limit(n));
}

}  // namespace indexlab
