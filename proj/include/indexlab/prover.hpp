#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "indexlab/exact.hpp"
#include "indexlab/iteration.hpp"
#include "indexlab/morse.hpp"

namespace indexlab {

// Replay of the case analysis showing that a bumpy Finsler S^n cannot carry
// exactly one prime closed geodesic. Every step records the exact numbers it
// relies on as claims that verify_trace re-evaluates independently.

enum class Relation { kLt, kLe, kEq, kNe, kGe, kGt };

std::string to_string(Relation r);
Relation parse_relation(const std::string& text);
bool evaluate(const ExactReal& lhs, Relation op, const ExactReal& rhs);

/// lhs op rhs, recorded together with its truth value.
struct Comparison {
  ExactReal lhs;
  Relation op = Relation::kEq;
  ExactReal rhs;
  bool holds = true;
};

/// subset is (or is not) contained in superset.
struct Inclusion {
  std::vector<std::int64_t> subset;
  std::vector<std::int64_t> superset;
  bool holds = true;
};

/// value is rational (or irrational).
struct Rationality {
  ExactReal value;
  bool rational = true;
};

using Claim = std::variant<Comparison, Inclusion, Rationality>;

enum class FactKind {
  kShapeConstraint,
  kParityPattern,
  kIndexEquals,
  kIndexRange,
  kMeanIndexEquals,
  kMeanIndexBound,
  kMorseZeroParity,
  kFloorSumRange,
  kContradiction,
};

std::string to_string(FactKind kind);
FactKind parse_fact_kind(const std::string& text);

struct SymbolicFact {
  FactKind kind = FactKind::kIndexEquals;
  std::string rule;
  std::string statement;
  std::map<std::string, std::string> values;
  std::vector<Claim> claims;
  /// Morse inequality failures backing the fact, as exact integers.
  std::vector<Violation> evidence;
};

struct Verdict {
  enum class Type { kContradiction, kVacuous };
  Type type = Type::kContradiction;
  std::string detail;  // contradiction kind, or why the case cannot occur
};

struct ProofTrace {
  int n = 2;
  NcgCase ncg = NcgCase::kNcg1;
  std::optional<int> p_parity;  // 0 even, 1 odd; absent where p is pinned
  std::vector<SymbolicFact> steps;
  Verdict verdict;

  std::string subcase() const;
};

/// Degrees below the first doubled Betti number where iterate indices must
/// be distinct: odd j in [n-1, 3n-5] for even n, even j in [n-1, 2n-4] for
/// odd n.
struct ThetaSet {
  int n = 2;
  std::vector<std::int64_t> members;

  bool contains(std::int64_t q) const;
};

ThetaSet theta_set(int n);

/// Possible values of sum_i floor(m * rho_i) for `terms` irrational rho_i in
/// (0, 1) with sum_i m * rho_i = total: the integers strictly between
/// total - terms and total, clipped at 0.
std::vector<std::int64_t> floor_sum_range(std::int64_t m, std::int64_t terms, const ExactReal& total);

/// A mean index of 0 makes every iterate index 0, so M_{n-1} = 0 < b_{n-1}.
SymbolicFact check_positive_mean_index(int n);

/// An index i(c) > n-1 keeps every iterate above n-1, so M_{n-1} = 0 < b_{n-1}.
SymbolicFact check_index_upper_bound(int n);

enum class ParityConfig {
  kOddIndicesEvenN,  // n even, i(c) odd, M_q = 0 for even q
  kEvenIndicesOddN,  // n odd, i(c) even, M_q = 0 for odd q
};

/// Refutes every i(c) < n-1 of the configured parity with the alternating
/// inequality one degree above it. Evidence is empty when no such index
/// exists. Throws PreconditionError if the config does not match n.
SymbolicFact check_index_lower_bound(int n, ParityConfig config);

struct UniquenessOutcome {
  bool unique = true;
  SymbolicFact fact;
  /// Degree attained twice, and the refuted alternating inequality.
  std::optional<std::int64_t> duplicate_degree;
  std::optional<Violation> contradiction;
};

/// Given i(c) = n-1 and (i(c^m) - i(c))/2 in {0..m-1}, checks that each
/// degree n-1+2t of Theta(n) with t <= k is reached by exactly one iterate.
/// A repeated degree is refuted with the alternating Morse inequality.
/// `index_values` maps m to i(c^m) and must cover m = 1..k+1 (clipped to
/// Theta(n)). Throws PreconditionError naming the failed hypothesis.
UniquenessOutcome check_iterate_uniqueness(int n, const std::map<std::int64_t, std::int64_t>& index_values,
                                           std::int64_t k);

/// Every trace for S^n, ordered by case and parity of p.
std::vector<ProofTrace> replay(int n, std::optional<NcgCase> only = std::nullopt);

/// replay for every n in [lo, hi]; parallel over n, ordered by n.
std::vector<std::vector<ProofTrace>> replay_range(int lo, int hi);
std::vector<std::vector<ProofTrace>> replay_range_serial(int lo, int hi);

/// Re-evaluates every claim and the verdict structure. Empty means sound.
std::vector<std::string> verify_trace(const ProofTrace& trace);

/// Contradiction or Vacuous verdict and no verification problems.
bool is_closed(const ProofTrace& trace);

/// The one-geodesic witness used to cross-check parity patterns; nullopt when
/// the case shape cannot occur on S^n.
std::optional<GeodesicModel> witness_model(int n, NcgCase ncg, int p_parity);

}  // namespace indexlab
