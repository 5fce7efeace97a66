#include "leibniz/polynomial.hpp"

#include <algorithm>
#include <cmath>

#include "leibniz/errors.hpp"

namespace leibniz {

Polynomial::Polynomial(const Rational& c) {
  if (!c.is_zero()) terms_.emplace(0, c);
}

Polynomial Polynomial::monomial(const Rational& c, Exponent k) {
  Polynomial p;
  if (!c.is_zero()) p.terms_.emplace(k, c);
  return p;
}

Polynomial::Exponent Polynomial::degree() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Polynomial::Exponent Polynomial::lowest_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

Rational Polynomial::leading_coefficient() const {
  return terms_.empty() ? Rational(0) : terms_.rbegin()->second;
}

Rational Polynomial::coefficient(Exponent k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Polynomial::value_at(const Rational& x) const {
  // Horner over the sparse terms, highest exponent first.
  Rational acc(0);
  Exponent prev = degree();
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    for (Exponent e = it->first; e < prev; ++e) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (Exponent e = 0; e < prev; ++e) acc *= x;
  return acc;
}

double Polynomial::value_at(double x) const {
  double acc = 0.0;
  for (const auto& [k, c] : terms_)
    acc += c.to_double() * std::pow(x, static_cast<double>(k));
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading_coefficient().inverse());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return {};
  Polynomial r = *this;
  for (auto& [k, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::shifted_down(Exponent k) const {
  Polynomial r;
  for (const auto& [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e - k, c);
  return r;
}

void Polynomial::add_term(Exponent k, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& [k, v] : r.terms_) v = -v;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term(ka + kb, ca * cb);
  return r;
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a,
                                                     const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  Polynomial q;
  Polynomial r = a;
  const Exponent db = b.degree();
  const Rational lb_inv = b.leading_coefficient().inverse();
  while (!r.is_zero() && r.degree() >= db) {
    const Exponent shift = r.degree() - db;
    const Rational c = r.leading_coefficient() * lb_inv;
    q.add_term(shift, c);
    for (const auto& [k, cb] : b.terms_) r.add_term(k + shift, -(c * cb));
  }
  return {std::move(q), std::move(r)};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(1);
  // Families are mostly built from powers of t; a monomial only shares a
  // power of t with anything.
  if (a.is_monomial() || b.is_monomial())
    return monomial(Rational(1), std::min(a.lowest_degree(), b.lowest_degree()));

  Polynomial x = a.monic();
  Polynomial y = b.monic();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x;
}

std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [k, c] = *it;
    const bool negative = c.sign() < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational mag = c.abs();
    if (k == 0) {
      out += mag.to_string();
      continue;
    }
    if (!mag.is_one()) out += mag.to_string() + "*";
    out += "t";
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace leibniz
