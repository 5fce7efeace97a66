#include "leibniz/rational_function.hpp"

#include <stdexcept>

#include "leibniz/errors.hpp"

namespace leibniz {

RationalFunction::RationalFunction(const Polynomial& num, const Polynomial& den)
    : num_(num), den_(den) {
  if (den_.is_zero()) throw DivisionByZero();
  canonicalize();
}

RationalFunction RationalFunction::power_of_t(int k, const Rational& c) {
  if (c.is_zero()) return {};
  if (k >= 0)
    return RationalFunction(Polynomial::monomial(c, static_cast<Polynomial::Exponent>(k)));
  return RationalFunction(Polynomial(c),
                          Polynomial::monomial(Rational(1), static_cast<Polynomial::Exponent>(-k)),
                          Canonical{});
}

void RationalFunction::canonicalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(1);
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = Polynomial::gcd(num_, den_);
    if (!g.is_constant()) {
      if (g.is_monomial()) {
        num_ = num_.shifted_down(g.degree());
        den_ = den_.shifted_down(g.degree());
      } else {
        num_ = Polynomial::divmod(num_, g).first;
        den_ = Polynomial::divmod(den_, g).first;
      }
    }
  }
  const Rational lc = den_.leading_coefficient();
  if (!lc.is_one()) {
    const Rational inv = lc.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

int RationalFunction::valuation_at_zero() const {
  if (is_zero()) throw std::domain_error("valuation of zero is +infinity");
  return static_cast<int>(num_.lowest_degree()) - static_cast<int>(den_.lowest_degree());
}

Rational RationalFunction::limit_at_zero() const {
  if (is_zero()) return Rational(0);
  const int v = valuation_at_zero();
  if (v < 0) throw PoleAtZero(v);
  if (v > 0) return Rational(0);
  return num_.coefficient(0) / den_.coefficient(0);
}

double RationalFunction::value_at(double x) const {
  return num_.value_at(x) / den_.value_at(x);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::operator-() const {
  return RationalFunction(-num_, den_, Canonical{});
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
  } else {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
  }
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) {
  return *this += -o;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero() || o.is_zero()) return *this = RationalFunction();
  if (o.is_constant()) {
    num_ = num_.scaled(o.constant_value());
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  canonicalize();
  return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
  return *this *= o.inverse();
}

std::string RationalFunction::to_string() const {
  if (den_ == Polynomial(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace leibniz
