#include "indexlab/exact.hpp"

#include <cctype>
#include <cmath>
#include <optional>
#include <tuple>

namespace indexlab {

namespace {

// Trial division is bounded; radicands come from user-chosen rotation
// numbers and are small in practice. A residual square factor above the
// bound is still caught by the perfect-square test on the remainder.
constexpr unsigned kTrialDivisionLimit = 1'000'000;

int sgn(const BigInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

bool is_perfect_square(const BigInt& v, BigInt& root) {
  if (v < 0) return false;
  root = boost::multiprecision::sqrt(v);
  return root * root == v;
}

// Splits radicand into outer^2 * inner with inner square-free (up to the
// trial-division bound).
void extract_square_factor(BigInt& radicand, BigInt& outer) {
  outer = 1;
  BigInt root;
  if (is_perfect_square(radicand, root)) {
    outer = root;
    radicand = 1;
    return;
  }
  for (unsigned p = 2; p <= kTrialDivisionLimit; ++p) {
    const BigInt sq = BigInt(p) * p;
    if (sq > radicand) break;
    while (radicand % sq == 0) {
      radicand /= sq;
      outer *= p;
    }
  }
  if (is_perfect_square(radicand, root)) {
    outer *= root;
    radicand = 1;
  }
}

const BigInt& field_radicand(const ExactReal& x, const ExactReal& y) {
  if (!same_field(x, y)) {
    throw UnsupportedField("operands live in different fields Q(sqrt(" + x.radicand().str() +
                           ")) and Q(sqrt(" + y.radicand().str() + "))");
  }
  return x.is_irrational() ? x.radicand() : y.radicand();
}

class TextParser {
 public:
  explicit TextParser(std::string_view text) {
    bool gap = false;
    for (char ch : text) {
      const auto u = static_cast<unsigned char>(ch);
      if (std::isspace(u)) {
        gap = !s_.empty();
        continue;
      }
      if (gap && std::isdigit(u) && std::isdigit(static_cast<unsigned char>(s_.back()))) {
        split_digits_ = true;
      }
      gap = false;
      s_.push_back(ch);
    }
  }

  ExactReal parse() {
    if (s_.empty()) fail("empty number");
    if (split_digits_) fail("whitespace inside an integer");
    BigInt a = 0, b = 0, d = 0, c = 1;
    if (peek() == '(') {
      ++pos_;
      parse_sum(a, b, d);
      expect(')');
      if (pos_ < s_.size()) {
        expect('/');
        c = parse_integer();
      }
    } else {
      parse_sum(a, b, d);
      if (pos_ < s_.size()) {
        if (b != 0) fail("a quotient with a square root needs parentheses");
        expect('/');
        c = parse_integer();
      }
    }
    if (pos_ != s_.size()) fail("trailing characters");
    if (c == 0) throw DivisionByZero();
    return ExactReal::make(a, b, c, d);
  }

 private:
  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("exact number '" + s_ + "'", why);
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  bool at_sqrt() const { return s_.compare(pos_, 5, "sqrt(") == 0; }

  BigInt parse_unsigned() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return BigInt(s_.substr(start, pos_ - start));
  }

  BigInt parse_integer() {
    bool neg = false;
    if (peek() == '+' || peek() == '-') neg = s_[pos_++] == '-';
    BigInt v = parse_unsigned();
    return neg ? BigInt(-v) : v;
  }

  BigInt parse_sqrt() {
    pos_ += 5;
    BigInt r = parse_unsigned();
    expect(')');
    return r;
  }

  // sum := term (('+'|'-') term)*, term := int | [int '*'] sqrt(int)
  void parse_sum(BigInt& a, BigInt& b, BigInt& d) {
    bool first = true;
    while (pos_ < s_.size() && peek() != ')' && peek() != '/') {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = s_[pos_++] == '-' ? -1 : 1;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      if (at_sqrt()) {
        add_root(b, d, sign, parse_sqrt());
        continue;
      }
      BigInt v = parse_unsigned();
      if (peek() == '*') {
        ++pos_;
        if (!at_sqrt()) fail("expected sqrt( after '*'");
        add_root(b, d, sign * v, parse_sqrt());
      } else {
        a += sign * v;
      }
    }
    if (first) fail("missing value");
  }

  void add_root(BigInt& b, BigInt& d, const BigInt& coeff, const BigInt& radicand) {
    if (d != 0 && radicand != d && coeff != 0 && b != 0) fail("mixed square roots");
    if (coeff != 0) {
      if (b == 0) d = radicand;
      b += coeff;
    }
  }

  std::string s_;
  std::size_t pos_ = 0;
  bool split_digits_ = false;
};

}  // namespace

BigInt floor_div(const BigInt& num, const BigInt& den) {
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

ExactReal ExactReal::make(BigInt a, BigInt b, BigInt c, BigInt radicand) {
  if (c == 0) throw DivisionByZero();
  if (radicand < 0) throw UnsupportedField("negative radicand " + radicand.str());
  if (c < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  if (b == 0 || radicand == 0) {
    b = 0;
    radicand = 0;
  } else {
    BigInt outer;
    extract_square_factor(radicand, outer);
    b *= outer;
    if (radicand == 1) {
      a += b;
      b = 0;
      radicand = 0;
    }
  }
  BigInt g = boost::multiprecision::gcd(boost::multiprecision::gcd(a, b), c);
  if (g > 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  ExactReal out;
  out.a_ = std::move(a);
  out.b_ = std::move(b);
  out.c_ = std::move(c);
  out.d_ = std::move(radicand);
  return out;
}

ExactReal ExactReal::parse(std::string_view text) { return TextParser(text).parse(); }

int ExactReal::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: compare a^2 with b^2 D. Equality is impossible for a
  // square-free D > 1.
  const int t = sgn(BigInt(a_ * a_ - b_ * b_ * d_));
  return sa > 0 ? t : -t;
}

BigInt ExactReal::floor_scaled(const BigInt& m) const {
  const BigInt sa = m * a_;
  const BigInt sb = m * b_;
  if (sb == 0) return floor_div(sa, c_);
  BigInt root = boost::multiprecision::sqrt(BigInt(sb * sb * d_));
  if (sb < 0) root = -root - 1;
  // m*b*sqrt(D) = root + f with 0 < f < 1, and floor((t + f)/c) = floor(t/c).
  return floor_div(BigInt(sa + root), c_);
}

BigInt ExactReal::ceil() const { return -(-*this).floor(); }

std::string ExactReal::to_string() const {
  std::string out = "(" + a_.str();
  out += b_ < 0 ? "-" : "+";
  out += BigInt(boost::multiprecision::abs(b_)).str() + "*sqrt(" + d_.str() + "))/" + c_.str();
  return out;
}

double ExactReal::to_double() const {
  const long double a = a_.convert_to<long double>();
  const long double b = b_.convert_to<long double>();
  const long double d = d_.convert_to<long double>();
  const long double c = c_.convert_to<long double>();
  return static_cast<double>((a + b * std::sqrt(d)) / c);
}

ExactReal ExactReal::operator-() const { return make(-a_, -b_, c_, d_); }

ExactReal operator+(const ExactReal& x, const ExactReal& y) {
  const BigInt& d = field_radicand(x, y);
  return ExactReal::make(x.a_ * y.c_ + y.a_ * x.c_, x.b_ * y.c_ + y.b_ * x.c_, x.c_ * y.c_, d);
}

ExactReal operator-(const ExactReal& x, const ExactReal& y) { return x + (-y); }

ExactReal operator*(const ExactReal& x, const ExactReal& y) {
  const BigInt& d = field_radicand(x, y);
  return ExactReal::make(x.a_ * y.a_ + x.b_ * y.b_ * d, x.a_ * y.b_ + y.a_ * x.b_, x.c_ * y.c_,
                         d);
}

ExactReal operator/(const ExactReal& x, const ExactReal& y) {
  if (y.sign() == 0) throw DivisionByZero();
  field_radicand(x, y);
  const BigInt norm = y.a_ * y.a_ - y.b_ * y.b_ * y.d_;
  const ExactReal inverse = ExactReal::make(y.c_ * y.a_, -y.c_ * y.b_, norm, y.d_);
  return x * inverse;
}

std::strong_ordering operator<=>(const ExactReal& x, const ExactReal& y) {
  if (x == y) return std::strong_ordering::equal;
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

bool ExactReal::StructuralLess::operator()(const ExactReal& x, const ExactReal& y) const {
  return std::tie(x.d_, x.c_, x.b_, x.a_) < std::tie(y.d_, y.c_, y.b_, y.a_);
}

ExactReal make(BigInt a, BigInt b, BigInt c, BigInt radicand) {
  return ExactReal::make(std::move(a), std::move(b), std::move(c), std::move(radicand));
}

bool is_irrational(const ExactReal& x) { return x.is_irrational(); }

std::strong_ordering compare(const ExactReal& x, const ExactReal& y) { return x <=> y; }

BigInt floor_scaled(const ExactReal& x, const BigInt& m) { return x.floor_scaled(m); }

bool same_field(const ExactReal& x, const ExactReal& y) {
  return x.is_rational() || y.is_rational() || x.radicand() == y.radicand();
}

}  // namespace indexlab
