#pragma once

#include <concepts>
#include <string>
#include <string_view>

#include "leibniz/rational.hpp"
#include "leibniz/rational_function.hpp"

namespace leibniz {

/// An exact coefficient field: Q (Rational) or Q(t) (RationalFunction).
template <class F>
concept Field = std::regular<F> && requires(const F a, const F b) {
  { a + b } -> std::same_as<F>;
  { a - b } -> std::same_as<F>;
  { a * b } -> std::same_as<F>;
  { a / b } -> std::same_as<F>;
  { -a } -> std::same_as<F>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { to_string(a) } -> std::convertible_to<std::string>;
  F(0);
  F(1);
};

static_assert(Field<Rational>);
static_assert(Field<RationalFunction>);

/// Parses the scalar grammar: integers, `t`, parentheses, `+ - * / ^`.
/// Accepts everything `to_string` produces. Throws ParseError with the
/// 1-based column of the offending character.
RationalFunction parse_rational_function(std::string_view text);

/// As above, but rejects any dependence on t.
Rational parse_rational(std::string_view text);

template <Field F>
F parse_scalar(std::string_view text);

template <>
inline Rational parse_scalar<Rational>(std::string_view text) {
  return parse_rational(text);
}

template <>
inline RationalFunction parse_scalar<RationalFunction>(std::string_view text) {
  return parse_rational_function(text);
}

}  // namespace leibniz
