#include <gspline/error.hpp>
#include <gspline/ring/polynomial.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>
#include <utility>

namespace gspline {

Polynomial::Polynomial(Integer c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

Polynomial::Polynomial(std::vector<Integer> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial::Polynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

Polynomial Polynomial::x() { return monomial(Integer(1), 1); }

Polynomial Polynomial::monomial(Integer c, std::size_t degree) {
  if (c.is_zero()) return {};
  std::vector<Integer> v(degree + 1, Integer(0));
  v[degree] = std::move(c);
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Integer Polynomial::content() const {
  Integer g(0);
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  const Integer c = content();
  std::vector<Integer> v;
  v.reserve(coeffs_.size());
  for (const auto& a : coeffs_) v.push_back(exact_div(a, c));
  return Polynomial(std::move(v));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& o) {
  *this = *this * o;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> v(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(v));
}

Polynomial operator-(const Polynomial& a) {
  Polynomial r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Integer& c = coeffs_[k];
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    const Integer magnitude = canonical_associate(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit_coefficient = magnitude == Integer(1);
    if (k == 0) {
      os << magnitude;
      continue;
    }
    if (!unit_coefficient) os << magnitude << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
  }
  return os.str();
}

namespace {

// Recursive-descent parser for integer polynomial expressions in x.
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power (['*'] power)*
//   power   := primary ['^' digits]
//   primary := digits | 'x' | '(' expr ')'
class ExpressionParser {
 public:
  explicit ExpressionParser(std::string_view text) : original_(text) {
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) text_.push_back(c);
  }

  Polynomial run() {
    if (text_.empty()) fail("empty expression");
    Polynomial p = expr();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw input_error("cannot parse polynomial '" + std::string(original_) + "': " + why);
  }

  bool peek(char c) const { return pos_ < text_.size() && text_[pos_] == c; }

  Polynomial expr() {
    Polynomial acc;
    bool negate = false;
    if (peek('+') || peek('-')) negate = text_[pos_++] == '-';
    acc = term();
    if (negate) acc = -acc;
    while (peek('+') || peek('-')) {
      const bool minus = text_[pos_++] == '-';
      Polynomial t = term();
      if (minus)
        acc -= t;
      else
        acc += t;
    }
    return acc;
  }

  bool starts_primary() const {
    return pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == 'x' || text_[pos_] == '(');
  }

  Polynomial term() {
    Polynomial acc = power();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc *= power();
      } else if (starts_primary()) {
        acc *= power();
      } else {
        return acc;
      }
    }
  }

  Polynomial power() {
    Polynomial base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("exponent must be a nonnegative integer");
    const std::string digits = text_.substr(start, pos_ - start);
    if (digits.size() > 6) fail("exponent too large");
    const unsigned long e = std::stoul(digits);
    Polynomial r(1);
    for (unsigned long k = 0; k < e; ++k) r *= base;
    return r;
  }

  Polynomial primary() {
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == 'x') {
      ++pos_;
      return Polynomial::x();
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Polynomial(Integer(mpz_class(text_.substr(start, pos_ - start), 10)));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view original_;
  std::string text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return ExpressionParser(text).run(); }

PolynomialDivision divide(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw precondition_error("polynomial division by zero");
  PolynomialDivision out;
  std::vector<Integer> rem = a.coefficients();
  const long db = b.degree();
  const Integer& lb = b.leading();
  std::vector<Integer> quot;
  if (a.degree() >= db) quot.assign(static_cast<std::size_t>(a.degree() - db + 1), Integer(0));
  for (long k = static_cast<long>(rem.size()) - 1; k >= db; --k) {
    const Integer& top = rem[static_cast<std::size_t>(k)];
    if (top.is_zero()) continue;
    if (!divides(lb, top)) {
      out.quotient = Polynomial(std::move(quot));
      out.remainder = Polynomial(std::move(rem));
      out.exact = false;
      return out;
    }
    const Integer q = exact_div(top, lb);
    const std::size_t shift = static_cast<std::size_t>(k - db);
    quot[shift] = q;
    for (std::size_t j = 0; j < b.coefficients().size(); ++j) rem[shift + j] -= q * b.coefficients()[j];
  }
  out.quotient = Polynomial(std::move(quot));
  out.remainder = Polynomial(std::move(rem));
  out.exact = true;
  return out;
}

Polynomial pseudo_remainder(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw precondition_error("pseudo_remainder by zero");
  if (a.degree() < b.degree()) return a;
  const Polynomial lb(b.leading());
  const long db = b.degree();
  Polynomial r = a;
  long steps = a.degree() - db + 1;
  while (!r.is_zero() && r.degree() >= db) {
    const Polynomial term = Polynomial::monomial(r.leading(), static_cast<std::size_t>(r.degree() - db));
    r = lb * r - term * b;
    --steps;
  }
  for (; steps > 0; --steps) r *= lb;
  return r;
}

Polynomial canonical_associate(const Polynomial& a) {
  if (a.is_zero() || a.leading().sign() > 0) return a;
  return -a;
}

Polynomial gcd(const Polynomial& a_in, const Polynomial& b_in) {
  if (a_in.is_zero()) return canonical_associate(b_in);
  if (b_in.is_zero()) return canonical_associate(a_in);
  Polynomial a = a_in, b = b_in;
  if (b.degree() > a.degree()) std::swap(a, b);
  const Integer d = gcd(a.content(), b.content());
  a = a.primitive_part();
  b = b.primitive_part();
  // Subresultant remainder sequence; every division below is exact.
  Integer g(1), h(1);
  while (true) {
    const long delta = a.degree() - b.degree();
    Polynomial r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    if (r.degree() == 0) {
      b = Polynomial(1);
      break;
    }
    Integer h_pow(1);
    for (long k = 0; k < delta; ++k) h_pow *= h;
    const Integer divisor = g * h_pow;
    std::vector<Integer> scaled;
    scaled.reserve(r.coefficients().size());
    for (const auto& c : r.coefficients()) scaled.push_back(exact_div(c, divisor));
    a = std::move(b);
    b = Polynomial(std::move(scaled));
    g = a.leading();
    // h <- g^delta / h^(delta - 1)
    Integer g_pow(1);
    for (long k = 0; k < delta; ++k) g_pow *= g;
    Integer h_den(1);
    for (long k = 1; k < delta; ++k) h_den *= h;
    h = delta == 0 ? h : exact_div(g_pow, h_den);
  }
  return canonical_associate(Polynomial(d) * b.primitive_part());
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return canonical_associate(exact_div(a * b, gcd(a, b)));
}

bool divides(const Polynomial& b, const Polynomial& a) {
  if (b.is_zero()) return a.is_zero();
  if (a.is_zero()) return true;
  if (a.degree() < b.degree()) return false;
  const PolynomialDivision d = divide(a, b);
  return d.exact && d.remainder.is_zero();
}

Polynomial exact_div(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw precondition_error("exact_div: division by zero polynomial");
  const PolynomialDivision d = divide(a, b);
  if (!d.exact || !d.remainder.is_zero())
    throw precondition_error("exact_div: " + b.str() + " does not divide " + a.str());
  return d.quotient;
}

bool is_unit(const Polynomial& a) { return a.degree() == 0 && is_unit(a.leading()); }

}  // namespace gspline
