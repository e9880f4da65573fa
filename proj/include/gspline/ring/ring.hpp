#pragma once

#include <gspline/ring/integer.hpp>
#include <gspline/ring/polynomial.hpp>

#include <Eigen/Core>

#include <concepts>
#include <ranges>
#include <string>
#include <string_view>

namespace gspline {

/// An integral domain in which every pair of elements has a gcd, with a
/// chosen canonical associate per class so results are deterministic.
template <class R>
concept GcdDomain = std::regular<R> && requires(const R& a, const R& b, std::string_view text) {
  { a + b } -> std::same_as<R>;
  { a - b } -> std::same_as<R>;
  { a * b } -> std::same_as<R>;
  { -a } -> std::same_as<R>;
  { gcd(a, b) } -> std::same_as<R>;
  { lcm(a, b) } -> std::same_as<R>;
  { exact_div(a, b) } -> std::same_as<R>;
  { divides(a, b) } -> std::same_as<bool>;
  { is_unit(a) } -> std::same_as<bool>;
  { canonical_associate(a) } -> std::same_as<R>;
  { a.is_zero() } -> std::same_as<bool>;
  { a.str() } -> std::convertible_to<std::string>;
  { R::parse(text) } -> std::same_as<R>;
};

template <class R>
struct domain_traits;

template <>
struct domain_traits<Integer> {
  static constexpr std::string_view name = "int";
};

template <>
struct domain_traits<Polynomial> {
  static constexpr std::string_view name = "intpoly";
};

/// Set-wise gcd, folded pairwise; the gcd of an empty range is 0.
template <std::ranges::input_range Range>
auto gcd_of(Range&& values) {
  using R = std::ranges::range_value_t<Range>;
  R acc(0);
  for (const auto& v : values) acc = gcd(acc, v);
  return acc;
}

/// Set-wise lcm, folded pairwise; the lcm of an empty range is 1.
template <std::ranges::input_range Range>
auto lcm_of(Range&& values) {
  using R = std::ranges::range_value_t<Range>;
  R acc(1);
  for (const auto& v : values) acc = lcm(acc, v);
  return acc;
}

/// True iff a and b differ by a unit factor.
template <GcdDomain R>
bool associates(const R& a, const R& b) {
  return canonical_associate(a) == canonical_associate(b);
}

}  // namespace gspline

namespace Eigen {

template <>
struct NumTraits<gspline::Integer> : GenericNumTraits<gspline::Integer> {
  using Real = gspline::Integer;
  using NonInteger = gspline::Integer;
  using Literal = gspline::Integer;
  using Nested = gspline::Integer;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 3,
    MulCost = 3
  };
};

template <>
struct NumTraits<gspline::Polynomial> : GenericNumTraits<gspline::Polynomial> {
  using Real = gspline::Polynomial;
  using NonInteger = gspline::Polynomial;
  using Literal = gspline::Polynomial;
  using Nested = gspline::Polynomial;
  enum {
    IsComplex = 0,
    IsInteger = 1,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 10,
    MulCost = 20
  };
};

}  // namespace Eigen

namespace gspline {

template <class R>
using Vector = Eigen::Matrix<R, Eigen::Dynamic, 1>;

template <class R>
using Matrix = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace gspline
