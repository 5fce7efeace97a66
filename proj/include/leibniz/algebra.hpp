#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/errors.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {

/// Finite-dimensional algebra given by structure constants c_{i,j}^k in a
/// fixed basis e_0..e_{n-1}: [e_i, e_j] = sum_k c_{i,j}^k e_k.
///
/// Storage is sparse by (i, j); an absent pair means [e_i, e_j] = 0, and a
/// stored product is never the zero vector. Indices are 0-based in the API.
template <Field F>
class Algebra {
 public:
  using Key = std::pair<std::size_t, std::size_t>;
  using Table = std::map<Key, Vector<F>>;

  Algebra() = default;
  explicit Algebra(std::size_t dim, std::string label = {})
      : dim_(dim), label_(std::move(label)) {}

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }
  const Table& table() const { return table_; }

  Vector<F> product(std::size_t i, std::size_t j) const {
    check(i, j);
    auto it = table_.find({i, j});
    return it == table_.end() ? Vector<F>(dim_, F(0)) : it->second;
  }

  F coefficient(std::size_t i, std::size_t j, std::size_t k) const {
    check(i, j, k);
    auto it = table_.find({i, j});
    return it == table_.end() ? F(0) : it->second[k];
  }

  void set_product(std::size_t i, std::size_t j, Vector<F> v) {
    check(i, j);
    if (v.size() != dim_) throw DimensionMismatch("product vector has wrong length");
    if (is_zero_vector(v)) table_.erase({i, j});
    else table_[{i, j}] = std::move(v);
  }

  void set_coefficient(std::size_t i, std::size_t j, std::size_t k, const F& c) {
    Vector<F> v = product(i, j);
    check(i, j, k);
    v[k] = c;
    set_product(i, j, std::move(v));
  }

  void add_to_product(std::size_t i, std::size_t j, const Vector<F>& w) {
    Vector<F> v = product(i, j);
    for (std::size_t k = 0; k < dim_; ++k)
      if (!w[k].is_zero()) v[k] += w[k];
    set_product(i, j, std::move(v));
  }

  bool is_abelian() const { return table_.empty(); }

  /// Same table under a field embedding (e.g. Q into Q(t)).
  template <Field G, class Fn>
  Algebra<G> map(Fn&& fn) const {
    Algebra<G> out(dim_, label_);
    for (const auto& [key, v] : table_) {
      Vector<G> w;
      w.reserve(v.size());
      for (const F& c : v) w.push_back(fn(c));
      out.set_product(key.first, key.second, std::move(w));
    }
    return out;
  }

  /// Structural equality of the tables; labels are ignored.
  friend bool operator==(const Algebra& a, const Algebra& b) {
    return a.dim_ == b.dim_ && a.table_ == b.table_;
  }

 private:
  static bool is_zero_vector(const Vector<F>& v) {
    for (const F& c : v)
      if (!c.is_zero()) return false;
    return true;
  }

  void check(std::size_t i, std::size_t j, std::size_t k = 0) const {
    if (i >= dim_ || j >= dim_ || k >= dim_)
      throw DimensionMismatch("basis index out of range for dimension " + std::to_string(dim_));
  }

  std::size_t dim_ = 0;
  std::string label_;
  Table table_;
};

template <Field F>
Vector<F> unit_vector(std::size_t n, std::size_t i) {
  Vector<F> v(n, F(0));
  v.at(i) = F(1);
  return v;
}

template <Field F>
bool is_zero_vector(const Vector<F>& v) {
  for (const F& c : v)
    if (!c.is_zero()) return false;
  return true;
}

/// Linear subspace of F^n kept in a canonical basis: the nonzero rows of the
/// reduced row echelon form of any spanning set. Two subspaces are equal iff
/// their bases are identical.
template <Field F>
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(std::size_t ambient, const std::vector<Vector<F>>& vectors) {
    Subspace s;
    s.ambient_ = ambient;
    if (vectors.empty()) return s;
    Matrix<F> m(vectors.size(), ambient);
    for (std::size_t r = 0; r < vectors.size(); ++r) {
      if (vectors[r].size() != ambient) throw DimensionMismatch("vector length differs from ambient dimension");
      for (std::size_t c = 0; c < ambient; ++c) m(r, c) = vectors[r][c];
    }
    Echelon<F> e = reduced_row_echelon(std::move(m));
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      Vector<F> row(ambient);
      for (std::size_t c = 0; c < ambient; ++c) row[c] = e.reduced(r, c);
      s.basis_.push_back(std::move(row));
    }
    s.pivots_ = std::move(e.pivots);
    return s;
  }

  static Subspace zero(std::size_t n) { return span(n, {}); }

  static Subspace whole(std::size_t n) {
    std::vector<Vector<F>> vs;
    for (std::size_t i = 0; i < n; ++i) vs.push_back(unit_vector<F>(n, i));
    return span(n, vs);
  }

  /// Span of the given (0-based) basis vectors.
  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<Vector<F>> vs;
    for (std::size_t i : indices) vs.push_back(unit_vector<F>(n, i));
    return span(n, vs);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.size(); }
  std::size_t codim() const { return ambient_ - basis_.size(); }
  const std::vector<Vector<F>>& basis() const { return basis_; }

  /// Coefficients of v in basis(); v must lie in the subspace.
  Vector<F> coordinates(const Vector<F>& v) const {
    Vector<F> out;
    out.reserve(pivots_.size());
    for (std::size_t p : pivots_) out.push_back(v[p]);
    return out;
  }

  bool contains(const Vector<F>& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector length differs from ambient dimension");
    Vector<F> r = v;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      const F c = r[pivots_[b]];
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < ambient_; ++k)
        if (!basis_[b][k].is_zero()) r[k] -= c * basis_[b][k];
    }
    return is_zero_vector(r);
  }

  bool contains(const Subspace& other) const {
    for (const auto& v : other.basis_)
      if (!contains(v)) return false;
    return true;
  }

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector<F>> basis_;
  std::vector<std::size_t> pivots_;
};

template <Field F>
Subspace<F> sum(const Subspace<F>& u, const Subspace<F>& v) {
  std::vector<Vector<F>> vs = u.basis();
  vs.insert(vs.end(), v.basis().begin(), v.basis().end());
  return Subspace<F>::span(u.ambient_dim(), vs);
}

/// U ∩ V from the nullspace of the stacked coordinate matrix [U | -V].
template <Field F>
Subspace<F> intersect(const Subspace<F>& u, const Subspace<F>& v) {
  const std::size_t n = u.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace<F>::zero(n);
  Matrix<F> m(n, u.dim() + v.dim());
  for (std::size_t a = 0; a < u.dim(); ++a)
    for (std::size_t r = 0; r < n; ++r) m(r, a) = u.basis()[a][r];
  for (std::size_t b = 0; b < v.dim(); ++b)
    for (std::size_t r = 0; r < n; ++r) m(r, u.dim() + b) = -v.basis()[b][r];
  std::vector<Vector<F>> vs;
  for (const auto& coeffs : nullspace(m)) {
    Vector<F> w(n, F(0));
    for (std::size_t a = 0; a < u.dim(); ++a)
      if (!coeffs[a].is_zero())
        for (std::size_t r = 0; r < n; ++r) w[r] += coeffs[a] * u.basis()[a][r];
    vs.push_back(std::move(w));
  }
  return Subspace<F>::span(n, vs);
}

// ---------------------------------------------------------------------------
// Products and identities
// ---------------------------------------------------------------------------

template <Field F>
Vector<F> bracket(const Algebra<F>& a, const Vector<F>& x, const Vector<F>& y) {
  const std::size_t n = a.dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length differs from algebra dimension");
  Vector<F> out(n, F(0));
  for (const auto& [key, v] : a.table()) {
    const F& xi = x[key.first];
    const F& yj = y[key.second];
    if (xi.is_zero() || yj.is_zero()) continue;
    const F s = xi * yj;
    for (std::size_t k = 0; k < n; ++k)
      if (!v[k].is_zero()) out[k] += s * v[k];
  }
  return out;
}

/// [x,[y,z]] - [[x,y],z] + [[x,z],y]; zero for all x, y, z iff Leibniz.
template <Field F>
Vector<F> defect_at(const Algebra<F>& a, const Vector<F>& x, const Vector<F>& y,
                    const Vector<F>& z) {
  Vector<F> out = bracket(a, x, bracket(a, y, z));
  const Vector<F> xy_z = bracket(a, bracket(a, x, y), z);
  const Vector<F> xz_y = bracket(a, bracket(a, x, z), y);
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = out[k] - xy_z[k] + xz_y[k];
  return out;
}

/// Nonzero entries of the Leibniz defect tensor, keyed by (i, j, k).
template <Field F>
using DefectTensor = std::map<std::array<std::size_t, 3>, Vector<F>>;

template <Field F>
DefectTensor<F> leibniz_defect(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  DefectTensor<F> d;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vector<F> v = defect_at(a, unit_vector<F>(n, i), unit_vector<F>(n, j), unit_vector<F>(n, k));
        if (!is_zero_vector(v)) d.emplace(std::array{i, j, k}, std::move(v));
      }
  return d;
}

template <Field F>
bool is_leibniz(const Algebra<F>& a) {
  return leibniz_defect(a).empty();
}

template <Field F>
bool is_skew_symmetric(const Algebra<F>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i; j < a.dim(); ++j) {
      const Vector<F> ij = a.product(i, j);
      const Vector<F> ji = a.product(j, i);
      for (std::size_t k = 0; k < a.dim(); ++k)
        if (!(ij[k] + ji[k]).is_zero()) return false;
    }
  return true;
}

template <Field F>
bool is_commutative(const Algebra<F>& a) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (a.product(i, j) != a.product(j, i)) return false;
  return true;
}

/// Skew-symmetry together with the Leibniz identity gives Jacobi.
template <Field F>
bool is_lie(const Algebra<F>& a) {
  return is_skew_symmetric(a) && is_leibniz(a);
}

/// Matrix of y -> [e_i, y].
template <Field F>
Matrix<F> left_multiplication(const Algebra<F>& a, std::size_t i) {
  Matrix<F> m(a.dim(), a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    const Vector<F> v = a.product(i, j);
    for (std::size_t k = 0; k < a.dim(); ++k) m(k, j) = v[k];
  }
  return m;
}

/// Matrix of x -> [x, e_j].
template <Field F>
Matrix<F> right_multiplication(const Algebra<F>& a, std::size_t j) {
  Matrix<F> m(a.dim(), a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const Vector<F> v = a.product(i, j);
    for (std::size_t k = 0; k < a.dim(); ++k) m(k, i) = v[k];
  }
  return m;
}

// ---------------------------------------------------------------------------
// Subspace constructions
// ---------------------------------------------------------------------------

template <Field F>
Subspace<F> product_subspace(const Algebra<F>& a, const Subspace<F>& u, const Subspace<F>& v) {
  std::vector<Vector<F>> vs;
  for (const auto& x : u.basis())
    for (const auto& y : v.basis()) {
      Vector<F> w = bracket(a, x, y);
      if (!is_zero_vector(w)) vs.push_back(std::move(w));
    }
  return Subspace<F>::span(a.dim(), vs);
}

/// L^1 = U, L^{k+1} = [L^k, U], until the dimension repeats (the repeated
/// term is not listed). Nilpotent iff the last term is zero.
template <Field F>
std::vector<Subspace<F>> lower_central_terms(const Algebra<F>& a, const Subspace<F>& u) {
  std::vector<Subspace<F>> terms{u};
  while (terms.back().dim() > 0) {
    Subspace<F> next = product_subspace(a, terms.back(), u);
    if (next.dim() == terms.back().dim()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

template <Field F>
std::vector<Subspace<F>> lower_central_terms(const Algebra<F>& a) {
  return lower_central_terms(a, Subspace<F>::whole(a.dim()));
}

/// L^{[1]} = L, L^{[s+1]} = [L^{[s]}, L^{[s]}], until the dimension repeats.
template <Field F>
std::vector<Subspace<F>> derived_terms(const Algebra<F>& a) {
  std::vector<Subspace<F>> terms{Subspace<F>::whole(a.dim())};
  while (terms.back().dim() > 0) {
    Subspace<F> next = product_subspace(a, terms.back(), terms.back());
    if (next.dim() == terms.back().dim()) break;
    terms.push_back(std::move(next));
  }
  return terms;
}

template <Field F>
std::vector<std::size_t> dimensions(const std::vector<Subspace<F>>& terms) {
  std::vector<std::size_t> dims;
  for (const auto& s : terms) dims.push_back(s.dim());
  return dims;
}

template <Field F>
std::vector<std::size_t> lower_central_series(const Algebra<F>& a) {
  return dimensions(lower_central_terms(a));
}

template <Field F>
std::vector<std::size_t> derived_series(const Algebra<F>& a) {
  return dimensions(derived_terms(a));
}

template <Field F>
bool is_nilpotent(const Algebra<F>& a) {
  return lower_central_series(a).back() == 0;
}

template <Field F>
bool is_solvable(const Algebra<F>& a) {
  return derived_series(a).back() == 0;
}

namespace detail {
template <Field F>
Subspace<F> kernel_of_stack(std::size_t n, const std::vector<Matrix<F>>& maps) {
  Matrix<F> stacked(n * maps.size(), n);
  for (std::size_t b = 0; b < maps.size(); ++b)
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) stacked(b * n + r, c) = maps[b](r, c);
  return Subspace<F>::span(n, nullspace(stacked));
}
}  // namespace detail

/// {x : [y, x] = 0 for all y}.
template <Field F>
Subspace<F> right_annihilator(const Algebra<F>& a) {
  std::vector<Matrix<F>> maps;
  for (std::size_t i = 0; i < a.dim(); ++i) maps.push_back(left_multiplication(a, i));
  return detail::kernel_of_stack(a.dim(), maps);
}

/// {x : [x, y] = 0 for all y}.
template <Field F>
Subspace<F> left_annihilator(const Algebra<F>& a) {
  std::vector<Matrix<F>> maps;
  for (std::size_t j = 0; j < a.dim(); ++j) maps.push_back(right_multiplication(a, j));
  return detail::kernel_of_stack(a.dim(), maps);
}

template <Field F>
Subspace<F> center(const Algebra<F>& a) {
  std::vector<Matrix<F>> maps;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    maps.push_back(left_multiplication(a, i));
    maps.push_back(right_multiplication(a, i));
  }
  return detail::kernel_of_stack(a.dim(), maps);
}

// ---------------------------------------------------------------------------
// Basis change and direct sums
// ---------------------------------------------------------------------------

/// (g * A)(x, y) = g(A(g^{-1} x, g^{-1} y)), with g_inv supplied.
template <Field F>
Algebra<F> basis_change(const Algebra<F>& a, const Matrix<F>& g, const Matrix<F>& g_inv) {
  const std::size_t n = a.dim();
  if (g.rows() != n || g.cols() != n || g_inv.rows() != n || g_inv.cols() != n)
    throw DimensionMismatch("basis change matrix does not match algebra dimension");
  std::map<std::pair<std::size_t, std::size_t>, Vector<F>> acc;
  for (const auto& [key, v] : a.table()) {
    const Vector<F> w = g.apply(v);
    for (std::size_t i = 0; i < n; ++i) {
      const F& pi = g_inv(key.first, i);
      if (pi.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const F& qj = g_inv(key.second, j);
        if (qj.is_zero()) continue;
        const F s = pi * qj;
        auto [it, fresh] = acc.try_emplace({i, j}, Vector<F>(n, F(0)));
        for (std::size_t k = 0; k < n; ++k)
          if (!w[k].is_zero()) it->second[k] += s * w[k];
      }
    }
  }
  Algebra<F> out(n, a.label());
  for (auto& [key, v] : acc) out.set_product(key.first, key.second, std::move(v));
  return out;
}

/// Throws SingularMatrix when g is not invertible.
template <Field F>
Algebra<F> basis_change(const Algebra<F>& a, const Matrix<F>& g) {
  return basis_change(a, g, invert(g));
}

/// Structure constants of A with respect to the basis formed by the columns
/// of p (i.e. basis_change by p^{-1}).
template <Field F>
Algebra<F> in_basis(const Algebra<F>& a, const Matrix<F>& p) {
  return basis_change(a, invert(p), p);
}

template <Field F>
Algebra<F> direct_sum(const Algebra<F>& a, const Algebra<F>& b) {
  const std::size_t n = a.dim() + b.dim();
  std::string label = a.label().empty() || b.label().empty() ? std::string{}
                                                              : a.label() + "+" + b.label();
  Algebra<F> out(n, std::move(label));
  for (const auto& [key, v] : a.table()) {
    Vector<F> w(n, F(0));
    for (std::size_t k = 0; k < a.dim(); ++k) w[k] = v[k];
    out.set_product(key.first, key.second, std::move(w));
  }
  for (const auto& [key, v] : b.table()) {
    Vector<F> w(n, F(0));
    for (std::size_t k = 0; k < b.dim(); ++k) w[a.dim() + k] = v[k];
    out.set_product(a.dim() + key.first, a.dim() + key.second, std::move(w));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Ideals and nilradicals
// ---------------------------------------------------------------------------

template <Field F>
bool is_subalgebra(const Algebra<F>& a, const Subspace<F>& u) {
  return u.contains(product_subspace(a, u, u));
}

/// [A, U] ⊆ U and [U, A] ⊆ U.
template <Field F>
bool is_ideal(const Algebra<F>& a, const Subspace<F>& u) {
  const Subspace<F> whole = Subspace<F>::whole(a.dim());
  return u.contains(product_subspace(a, whole, u)) && u.contains(product_subspace(a, u, whole));
}

/// Nilpotency of U as an algebra under the restricted bracket.
template <Field F>
bool is_nilpotent_subalgebra(const Algebra<F>& a, const Subspace<F>& u) {
  return lower_central_terms(a, u).back().dim() == 0;
}

/// Structure constants of the subalgebra U in its canonical basis.
template <Field F>
Algebra<F> restrict_to(const Algebra<F>& a, const Subspace<F>& u) {
  if (!is_subalgebra(a, u)) throw std::invalid_argument("subspace is not closed under the bracket");
  Algebra<F> out(u.dim());
  for (std::size_t i = 0; i < u.dim(); ++i)
    for (std::size_t j = 0; j < u.dim(); ++j)
      out.set_product(i, j, u.coordinates(bracket(a, u.basis()[i], u.basis()[j])));
  return out;
}

enum class NilradicalVerdict {
  exact,                 ///< U is the nilradical
  nilpotent_ideal_only,  ///< U is a nilpotent ideal containing A^2, maximality unverified
  rejected               ///< U is not a nilpotent ideal containing A^2
};

inline const char* to_string(NilradicalVerdict v) {
  switch (v) {
    case NilradicalVerdict::exact: return "EXACT";
    case NilradicalVerdict::nilpotent_ideal_only: return "NILPOTENT_IDEAL_ONLY";
    case NilradicalVerdict::rejected: return "REJECTED";
  }
  return "?";
}

template <Field F>
NilradicalVerdict verify_nilradical(const Algebra<F>& a, const Subspace<F>& u) {
  const Subspace<F> whole = Subspace<F>::whole(a.dim());
  if (!is_ideal(a, u) || !is_nilpotent_subalgebra(a, u) ||
      !u.contains(product_subspace(a, whole, whole)))
    return NilradicalVerdict::rejected;
  if (u.codim() == 0) return NilradicalVerdict::exact;  // then A itself is nilpotent
  if (u.codim() == 1 && !is_nilpotent(a)) return NilradicalVerdict::exact;
  return NilradicalVerdict::nilpotent_ideal_only;
}

/// A subspace whose nilradical verdict is EXACT, if one is found among: A
/// itself, A^2, and A^2 extended by all but one of the coordinate vectors
/// outside it.
template <Field F>
std::optional<Subspace<F>> find_nilradical(const Algebra<F>& a) {
  const std::size_t n = a.dim();
  const Subspace<F> whole = Subspace<F>::whole(n);
  if (is_nilpotent(a)) return whole;
  const Subspace<F> square = product_subspace(a, whole, whole);
  if (verify_nilradical(a, square) == NilradicalVerdict::exact) return square;

  std::vector<std::size_t> outside;
  for (std::size_t i = 0; i < n; ++i)
    if (!square.contains(unit_vector<F>(n, i))) outside.push_back(i);
  for (std::size_t drop = 0; drop < outside.size(); ++drop) {
    std::vector<Vector<F>> vs = square.basis();
    for (std::size_t i = 0; i < outside.size(); ++i)
      if (i != drop) vs.push_back(unit_vector<F>(n, outside[i]));
    Subspace<F> candidate = Subspace<F>::span(n, vs);
    if (candidate.codim() != 1) continue;
    if (verify_nilradical(a, candidate) == NilradicalVerdict::exact) return candidate;
  }
  return std::nullopt;
}

}  // namespace leibniz
