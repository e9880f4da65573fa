#pragma once

#include <gspline/ring/integer.hpp>

#include <compare>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace gspline {

/// Univariate polynomial over the integers in the variable x. Dense
/// coefficient storage, lowest degree first, never with a trailing zero;
/// the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  template <std::integral T>
  Polynomial(T c) : Polynomial(Integer(c)) {}  // NOLINT: implicit so Scalar(0) works
  explicit Polynomial(Integer c);
  explicit Polynomial(std::vector<Integer> coefficients);
  Polynomial(std::initializer_list<long> coefficients);

  static Polynomial x();
  static Polynomial monomial(Integer c, std::size_t degree);

  /// Parses expressions such as "3*x^2 - x + 7" or "x*(x+1)". Whitespace is
  /// ignored, '^' takes a nonnegative integer exponent, '*' may be omitted
  /// between a number and x or a parenthesis.
  static Polynomial parse(std::string_view text);
  std::string str() const;

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the zero polynomial is reported as -1.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Integer(0); }
  const Integer& leading() const { return coeffs_.back(); }

  /// Nonnegative gcd of the coefficients; 0 for the zero polynomial.
  Integer content() const;
  /// this / content, with the sign of the leading coefficient kept.
  Polynomial primitive_part() const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  Polynomial& operator*=(const Polynomial& o);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);

  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.str(); }

 private:
  void trim();

  std::vector<Integer> coeffs_;
};

struct PolynomialDivision {
  Polynomial quotient;
  Polynomial remainder;
  bool exact = false;  // false if some step needed a non-integral coefficient
};

/// Long division over Z[x]. When `exact` is true, a == quotient*b + remainder.
/// Stops early (exact = false) as soon as a leading coefficient of the running
/// remainder is not divisible by lc(b).
PolynomialDivision divide(const Polynomial& a, const Polynomial& b);

/// lc(b)^(deg a - deg b + 1) * a mod b; requires b != 0.
Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b);

// GCD-domain interface (found by ADL).

Polynomial canonical_associate(const Polynomial& a);
/// Content-times-primitive gcd using the subresultant remainder sequence.
Polynomial gcd(const Polynomial& a, const Polynomial& b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);
bool divides(const Polynomial& b, const Polynomial& a);
Polynomial exact_div(const Polynomial& a, const Polynomial& b);
bool is_unit(const Polynomial& a);

}  // namespace gspline
