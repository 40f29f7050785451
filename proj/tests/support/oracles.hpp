#pragma once

// Reference computations used only to cross-check the library. They take
// deliberately different routes: decimal floating expansions with 100 digits,
// integer cross-multiplication without isqrt, and termwise series expansion.

#include <cstdint>

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "indexlab/iteration.hpp"

namespace oracle {

using Decimal = boost::multiprecision::cpp_dec_float_100;
using indexlab::BigInt;
using indexlab::ExactReal;

inline Decimal decimal(const ExactReal& x) {
  const Decimal root = boost::multiprecision::sqrt(Decimal(x.radicand()));
  return (Decimal(x.a()) + Decimal(x.b()) * root) / Decimal(x.c());
}

/// k <= m*x, decided by squaring k*c - m*a against (m*b)^2 * D.
inline bool at_most_multiple(const BigInt& k, const BigInt& m, const ExactReal& x) {
  const BigInt lhs = k * x.c() - m * x.a();
  const BigInt coeff = m * x.b();
  const BigInt rhs_sq = coeff * coeff * x.radicand();
  if (coeff >= 0) return lhs <= 0 || lhs * lhs <= rhs_sq;
  return lhs < 0 && lhs * lhs >= rhs_sq;
}

/// floor(m*x): decimal estimate, then corrected with exact integer tests.
inline BigInt floor_multiple(const ExactReal& x, std::int64_t m) {
  const Decimal est = boost::multiprecision::floor(decimal(x) * m);
  BigInt k = est.convert_to<BigInt>();
  while (!at_most_multiple(k, m, x)) --k;
  while (at_most_multiple(k + 1, m, x)) ++k;
  return k;
}

inline int sign(const ExactReal& x) {
  const Decimal v = decimal(x);
  return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

/// Coefficient of t^q in t^(n-1) (1/(1-t^2) + t^s/(1-t^s)), term by term.
inline std::int64_t betti(int n, std::int64_t q) {
  const std::int64_t shift = q - (n - 1);
  if (shift < 0) return 0;
  const std::int64_t s = n % 2 == 0 ? 2 * (n - 1) : n - 1;
  std::int64_t c = shift % 2 == 0 ? 1 : 0;
  if (shift >= s && shift % s == 0) c += 1;
  return c;
}

/// i(c^m) recomputed from the iteration formulas with oracle floors.
inline std::int64_t index(const indexlab::GeodesicModel& g, std::int64_t m) {
  std::int64_t fl = 0;
  for (const auto& rho : g.rotations()) fl += floor_multiple(rho, m).convert_to<std::int64_t>();
  const std::int64_t p = g.p(), k = g.k(), n = g.n(), r = g.r();
  switch (g.ncg_case()) {
    case indexlab::NcgCase::kNcg1: return 2 * m * p + 2 * fl + (n - 2 * r - 1);
    case indexlab::NcgCase::kNcg2:
    case indexlab::NcgCase::kNcg3: return m * (p - k) + 2 * fl + k;
    case indexlab::NcgCase::kNcg4: return m * (p - 1) + 2 * fl + 1;
    case indexlab::NcgCase::kNcg5: return m * p;
  }
  return 0;
}

/// Sum_{q <= m} (-1)^q b_q using the termwise betti above.
inline std::int64_t alternating_betti_sum(int n, std::int64_t m) {
  std::int64_t acc = 0;
  for (std::int64_t q = 0; q <= m; ++q) acc += (q % 2 == 0 ? 1 : -1) * betti(n, q);
  return acc;
}

}  // namespace oracle
