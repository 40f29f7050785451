#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

#include "indexlab/error.hpp"

namespace indexlab {

using BigInt = boost::multiprecision::cpp_int;

/// A number (a + b*sqrt(D)) / c in Q(sqrt(D)), kept in canonical form.
///
/// Canonical form: c > 0, gcd(a, b, c) = 1, D square-free (square factors
/// are moved into b) and D = 0 whenever b = 0. Two canonical values are
/// equal exactly when their four integers coincide, so equality never needs
/// field compatibility. Ordering and arithmetic between two irrationals with
/// different radicands throw UnsupportedField instead of approximating.
///
/// Values are immutable; every operation is pure and thread-safe.
class ExactReal {
 public:
  ExactReal() : a_(0), b_(0), c_(1), d_(0) {}
  ExactReal(std::int64_t value) : a_(value), b_(0), c_(1), d_(0) {}  // NOLINT

  static ExactReal make(BigInt a, BigInt b, BigInt c, BigInt radicand);
  static ExactReal rational(BigInt num, BigInt den) {
    return make(std::move(num), 0, std::move(den), 0);
  }
  static ExactReal sqrt(BigInt radicand) { return make(0, 1, 1, std::move(radicand)); }

  /// Parses "p", "p/q", "(a+b*sqrt(D))/c", "a+b*sqrt(D)" and "sqrt(D)"
  /// forms, whitespace-tolerant.
  static ExactReal parse(std::string_view text);

  const BigInt& a() const noexcept { return a_; }
  const BigInt& b() const noexcept { return b_; }
  const BigInt& c() const noexcept { return c_; }
  const BigInt& radicand() const noexcept { return d_; }

  bool is_rational() const noexcept { return b_ == 0; }
  bool is_irrational() const noexcept { return b_ != 0; }
  bool is_integer() const noexcept { return b_ == 0 && c_ == 1; }

  /// -1, 0 or +1, decided with integer arithmetic only.
  int sign() const;

  /// floor(m * x). Never ambiguous: for irrational x, m*x is not an integer.
  BigInt floor_scaled(const BigInt& m) const;
  BigInt floor() const { return floor_scaled(1); }
  BigInt ceil() const;

  ExactReal conjugate() const { return make(a_, -b_, c_, d_); }
  ExactReal abs() const { return sign() < 0 ? -*this : *this; }

  /// "(a+b*sqrt(D))/c" with canonical integers; the single wire format.
  std::string to_string() const;
  double to_double() const;

  ExactReal operator-() const;
  friend ExactReal operator+(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator-(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator*(const ExactReal& x, const ExactReal& y);
  friend ExactReal operator/(const ExactReal& x, const ExactReal& y);
  ExactReal& operator+=(const ExactReal& y) { return *this = *this + y; }
  ExactReal& operator-=(const ExactReal& y) { return *this = *this - y; }
  ExactReal& operator*=(const ExactReal& y) { return *this = *this * y; }
  ExactReal& operator/=(const ExactReal& y) { return *this = *this / y; }

  friend bool operator==(const ExactReal& x, const ExactReal& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
  }
  friend std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y);

  /// Lexicographic order on the canonical integers. Not numeric; only for
  /// use as a container key across fields.
  struct StructuralLess {
    bool operator()(const ExactReal& x, const ExactReal& y) const;
  };

 private:
  BigInt a_, b_, c_, d_;
};

ExactReal make(BigInt a, BigInt b, BigInt c, BigInt radicand);
bool is_irrational(const ExactReal& x);
std::strong_ordering compare(const ExactReal& x, const ExactReal& y);
BigInt floor_scaled(const ExactReal& x, const BigInt& m);

/// Both operands live in one field Q(sqrt(D)) (or one of them is rational).
bool same_field(const ExactReal& x, const ExactReal& y);

/// Floor division for big integers with positive divisor.
BigInt floor_div(const BigInt& num, const BigInt& den);

}  // namespace indexlab
