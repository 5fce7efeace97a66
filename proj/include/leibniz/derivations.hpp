#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/matrix.hpp"
#include "leibniz/rational.hpp"

namespace leibniz {

using AlgebraQ = Algebra<Rational>;
using MatrixQ = Matrix<Rational>;
using SubspaceQ = Subspace<Rational>;

/// The n^3 x n^2 linear system d[e_i,e_j] = [d e_i, e_j] + [e_i, d e_j].
/// Unknown d(r, c) (the e_r-coordinate of d(e_c)) sits in column r*n + c.
MatrixQ derivation_system(const AlgebraQ& a);

struct DerivationSpace {
  std::vector<MatrixQ> basis;
  std::size_t dim() const { return basis.size(); }
};

DerivationSpace derivation_space(const AlgebraQ& a);

bool is_derivation(const AlgebraQ& a, const MatrixQ& d);

/// n^2 - dim Der(A): the stabiliser of A in GL_n has Lie algebra Der(A).
std::size_t orbit_dim(const AlgebraQ& a);

/// Basis-independent invariants; differing fingerprints certify
/// non-isomorphism, equal ones prove nothing.
struct Fingerprint {
  std::size_t dim = 0;
  std::vector<std::size_t> lcs_dims;
  std::vector<std::size_t> ds_dims;
  std::size_t der_dim = 0;
  std::size_t lann_dim = 0;
  std::size_t rann_dim = 0;
  std::size_t center_dim = 0;
  bool is_lie = false;
  bool is_commutative = false;
  bool is_nilpotent = false;
  bool is_solvable = false;
  /// Present only when a nilradical was EXACT-verified.
  std::optional<std::size_t> nilradical_dim;
  std::optional<std::vector<std::size_t>> nilradical_lcs_dims;
  std::optional<bool> nilradical_is_lie;
  std::optional<bool> nilradical_is_commutative;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const AlgebraQ& a);

/// Each field as (name, rendered value) in a fixed order.
std::vector<std::pair<std::string, std::string>> fields(const Fingerprint& f);

enum class Isomorphism { non_isomorphic, inconclusive };

struct Distinction {
  Isomorphism verdict = Isomorphism::inconclusive;
  std::string field;         ///< first differing field, empty when inconclusive
  std::string left_value;
  std::string right_value;
};

/// Throws DimensionMismatch for algebras of different dimension.
Distinction distinguish(const AlgebraQ& a, const AlgebraQ& b);
Distinction distinguish(const Fingerprint& a, const Fingerprint& b);

std::string render_dims(const std::vector<std::size_t>& dims);

}  // namespace leibniz
