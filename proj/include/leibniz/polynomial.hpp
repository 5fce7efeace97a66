#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>

#include "leibniz/rational.hpp"

namespace leibniz {

/// Univariate polynomial in t over Q. Sparse: exponent -> nonzero coefficient,
/// the zero polynomial has no terms.
class Polynomial {
 public:
  using Exponent = std::uint32_t;
  using Terms = std::map<Exponent, Rational>;

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial monomial(const Rational& c, Exponent k);
  static Polynomial t() { return monomial(Rational(1), 1); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
  }
  bool is_monomial() const { return terms_.size() == 1; }

  /// Highest exponent; 0 for the zero polynomial.
  Exponent degree() const;
  /// Lowest exponent with a nonzero coefficient; 0 for the zero polynomial.
  Exponent lowest_degree() const;
  Rational leading_coefficient() const;
  Rational coefficient(Exponent k) const;
  Rational value_at(const Rational& x) const;
  double value_at(double x) const;

  Polynomial monic() const;
  Polynomial scaled(const Rational& c) const;
  /// Divides by t^k; requires lowest_degree() >= k.
  Polynomial shifted_down(Exponent k) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; throws DivisionByZero when the divisor is zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a,
                                                 const Polynomial& b);
  /// Monic gcd (zero only when both inputs are zero).
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  /// Terms `c*t^k` in descending k joined by ` + ` / ` - `, e.g.
  /// `2*t^3 - 1/2*t + 3`; the zero polynomial renders as `0`.
  std::string to_string() const;

 private:
  void add_term(Exponent k, const Rational& c);

  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
  return os << p.to_string();
}

}  // namespace leibniz
