#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace gspline {

/// Arbitrary-precision signed integer. A thin value wrapper over mpz_class
/// so that arithmetic always yields Integer rather than gmpxx expression
/// templates (which do not mix with Eigen's scalar machinery).
class Integer {
 public:
  Integer() = default;
  template <std::signed_integral T>
  Integer(T v) : value_(static_cast<long>(v)) {}  // NOLINT: implicit by design of Scalar(0)
  template <std::unsigned_integral T>
  Integer(T v) : value_(static_cast<unsigned long>(v)) {}  // NOLINT
  explicit Integer(mpz_class v) : value_(std::move(v)) {}

  /// Optional sign followed by decimal digits; surrounding whitespace ignored.
  static Integer parse(std::string_view text);
  std::string str() const { return value_.get_str(); }

  const mpz_class& mpz() const { return value_; }
  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool fits_long() const { return value_.fits_slong_p(); }
  long to_long() const { return value_.get_si(); }

  Integer& operator+=(const Integer& o) { value_ += o.value_; return *this; }
  Integer& operator-=(const Integer& o) { value_ -= o.value_; return *this; }
  Integer& operator*=(const Integer& o) { value_ *= o.value_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend Integer operator-(const Integer& a) { return Integer(mpz_class(-a.value_)); }

  friend bool operator==(const Integer& a, const Integer& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Integer& a, const Integer& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Integer& a) { return os << a.str(); }

 private:
  mpz_class value_;
};

// GCD-domain interface (found by ADL).

inline Integer canonical_associate(const Integer& a) { return Integer(mpz_class(abs(a.mpz()))); }

inline Integer gcd(const Integer& a, const Integer& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(g));
}

inline Integer lcm(const Integer& a, const Integer& b) {
  mpz_class l;
  mpz_lcm(l.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(l));
}

/// True iff b divides a. divides(0, a) holds only for a == 0.
inline bool divides(const Integer& b, const Integer& a) {
  if (b.is_zero()) return a.is_zero();
  return mpz_divisible_p(a.mpz().get_mpz_t(), b.mpz().get_mpz_t()) != 0;
}

/// q with q * b == a. Throws precondition_error unless b != 0 divides a.
Integer exact_div(const Integer& a, const Integer& b);

inline bool is_unit(const Integer& a) { return mpz_cmpabs_ui(a.mpz().get_mpz_t(), 1) == 0; }

/// Floor division and extended gcd, used by the lattice routines.
Integer floor_div(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // nonnegative
  Integer s;
  Integer t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

}  // namespace gspline
