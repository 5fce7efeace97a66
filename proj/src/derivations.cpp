#include "leibniz/derivations.hpp"

namespace leibniz {

MatrixQ derivation_system(const AlgebraQ& a) {
  const std::size_t n = a.dim();
  MatrixQ m(n * n * n, n * n);
  auto col = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const Vector<Rational> ij = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) {
        const std::size_t row = (i * n + j) * n + k;
        // e_k-coordinate of d[e_i,e_j]
        for (std::size_t m_ = 0; m_ < n; ++m_)
          if (!ij[m_].is_zero()) m(row, col(k, m_)) += ij[m_];
        // minus that of [d e_i, e_j] + [e_i, d e_j]
        for (std::size_t p = 0; p < n; ++p) {
          const Rational c_pj = a.coefficient(p, j, k);
          if (!c_pj.is_zero()) m(row, col(p, i)) -= c_pj;
          const Rational c_ip = a.coefficient(i, p, k);
          if (!c_ip.is_zero()) m(row, col(p, j)) -= c_ip;
        }
      }
    }
  return m;
}

DerivationSpace derivation_space(const AlgebraQ& a) {
  const std::size_t n = a.dim();
  DerivationSpace out;
  for (const auto& v : nullspace(derivation_system(a))) out.basis.emplace_back(n, n, v);
  return out;
}

bool is_derivation(const AlgebraQ& a, const MatrixQ& d) {
  const std::size_t n = a.dim();
  if (d.rows() != n || d.cols() != n) throw DimensionMismatch("derivation matrix does not match algebra dimension");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto ei = unit_vector<Rational>(n, i);
      const auto ej = unit_vector<Rational>(n, j);
      const auto lhs = d.apply(bracket(a, ei, ej));
      const auto r1 = bracket(a, d.apply(ei), ej);
      const auto r2 = bracket(a, ei, d.apply(ej));
      for (std::size_t k = 0; k < n; ++k)
        if (lhs[k] != r1[k] + r2[k]) return false;
    }
  return true;
}

std::size_t orbit_dim(const AlgebraQ& a) {
  // n^2 - nullity is the rank of the system (fraction-free route, independent
  // of the nullspace used by derivation_space).
  return rank(derivation_system(a));
}

Fingerprint fingerprint(const AlgebraQ& a) {
  Fingerprint f;
  f.dim = a.dim();
  f.lcs_dims = lower_central_series(a);
  f.ds_dims = derived_series(a);
  f.der_dim = derivation_space(a).dim();
  f.lann_dim = left_annihilator(a).dim();
  f.rann_dim = right_annihilator(a).dim();
  f.center_dim = center(a).dim();
  f.is_lie = is_lie(a);
  f.is_commutative = is_commutative(a);
  f.is_nilpotent = f.lcs_dims.back() == 0;
  f.is_solvable = f.ds_dims.back() == 0;
  if (f.is_solvable) {
    if (auto nil = find_nilradical(a)) {
      f.nilradical_dim = nil->dim();
      const AlgebraQ n = restrict_to(a, *nil);
      f.nilradical_lcs_dims = lower_central_series(n);
      f.nilradical_is_lie = is_lie(n);
      f.nilradical_is_commutative = is_commutative(n);
    }
  }
  return f;
}

std::string render_dims(const std::vector<std::size_t>& dims) {
  std::string out = "[";
  for (std::size_t i = 0; i < dims.size(); ++i) out += (i ? "," : "") + std::to_string(dims[i]);
  return out + "]";
}

std::vector<std::pair<std::string, std::string>> fields(const Fingerprint& f) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  auto ob = [&](const std::optional<bool>& v) { return v ? b(*v) : std::string("unknown"); };
  std::vector<std::pair<std::string, std::string>> out{
      {"dim", std::to_string(f.dim)},
      {"lcs_dims", render_dims(f.lcs_dims)},
      {"ds_dims", render_dims(f.ds_dims)},
      {"der_dim", std::to_string(f.der_dim)},
      {"lann_dim", std::to_string(f.lann_dim)},
      {"rann_dim", std::to_string(f.rann_dim)},
      {"center_dim", std::to_string(f.center_dim)},
      {"is_lie", b(f.is_lie)},
      {"is_commutative", b(f.is_commutative)},
      {"is_nilpotent", b(f.is_nilpotent)},
      {"is_solvable", b(f.is_solvable)},
      {"nilradical_dim", f.nilradical_dim ? std::to_string(*f.nilradical_dim) : "unknown"},
      {"nilradical_lcs_dims", f.nilradical_lcs_dims ? render_dims(*f.nilradical_lcs_dims) : "unknown"},
      {"nilradical_is_lie", ob(f.nilradical_is_lie)},
      {"nilradical_is_commutative", ob(f.nilradical_is_commutative)},
  };
  return out;
}

Distinction distinguish(const Fingerprint& a, const Fingerprint& b) {
  if (a.dim != b.dim) throw DimensionMismatch("cannot compare algebras of different dimension");
  const auto fa = fields(a);
  const auto fb = fields(b);
  for (std::size_t i = 0; i < fa.size(); ++i) {
    // An unverified nilradical is missing data, not a difference.
    if (fa[i].second == "unknown" || fb[i].second == "unknown") continue;
    if (fa[i].second != fb[i].second)
      return {Isomorphism::non_isomorphic, fa[i].first, fa[i].second, fb[i].second};
  }
  return {};
}

Distinction distinguish(const AlgebraQ& a, const AlgebraQ& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("cannot compare algebras of different dimension");
  return distinguish(fingerprint(a), fingerprint(b));
}

}  // namespace leibniz
