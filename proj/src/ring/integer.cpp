#include <gspline/error.hpp>
#include <gspline/ring/integer.hpp>

#include <cctype>

namespace gspline {

Integer Integer::parse(std::string_view text) {
  std::size_t b = 0, e = text.size();
  while (b < e && std::isspace(static_cast<unsigned char>(text[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(text[e - 1]))) --e;
  std::string body(text.substr(b, e - b));
  std::size_t digits = 0;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) digits = 1;
  if (digits == body.size()) throw input_error("not an integer: '" + std::string(text) + "'");
  for (std::size_t k = digits; k < body.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(body[k])))
      throw input_error("not an integer: '" + std::string(text) + "'");
  }
  if (body[0] == '+') body.erase(0, 1);
  return Integer(mpz_class(body, 10));
}

Integer exact_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw precondition_error("exact_div: division by zero");
  if (!divides(b, a)) throw precondition_error("exact_div: " + b.str() + " does not divide " + a.str());
  mpz_class q;
  mpz_divexact(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(q));
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b.is_zero()) throw precondition_error("floor_div: division by zero");
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return Integer(std::move(q));
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  mpz_class g, s, t;
  mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.mpz().get_mpz_t(), b.mpz().get_mpz_t());
  return {Integer(std::move(g)), Integer(std::move(s)), Integer(std::move(t))};
}

}  // namespace gspline
