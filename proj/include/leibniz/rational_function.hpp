#pragma once

#include <ostream>
#include <string>

#include "leibniz/polynomial.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

/// Element of Q(t) in canonical form: coprime numerator and denominator,
/// denominator monic. Zero is 0/1. Canonical form makes `==` structural.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const Rational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(long c) : num_(Rational(c)), den_(1) {}  // NOLINT
  RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
  RationalFunction(const Polynomial& num, const Polynomial& den);

  static RationalFunction t() { return RationalFunction(Polynomial::t()); }
  /// c * t^k for any integer k (negative k gives c / t^{-k}).
  static RationalFunction power_of_t(int k, const Rational& c = Rational(1));

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The constant value; only meaningful when is_constant().
  Rational constant_value() const { return num_.coefficient(0); }

  /// Order of vanishing at t = 0; throws std::domain_error for zero.
  int valuation_at_zero() const;
  /// Exact value at t = 0; throws PoleAtZero for negative valuation.
  Rational limit_at_zero() const;
  double value_at(double x) const;

  RationalFunction inverse() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  RationalFunction& operator*=(const RationalFunction& o);
  RationalFunction& operator/=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
  friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  /// `<poly>` when the denominator is 1, otherwise `(<num>)/(<den>)`.
  std::string to_string() const;

 private:
  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}
  void canonicalize();

  Polynomial num_;
  Polynomial den_;
};

inline std::string to_string(const RationalFunction& f) { return f.to_string(); }

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
  return os << f.to_string();
}

}  // namespace leibniz
