#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"
#include "leibniz/derivations.hpp"
#include "leibniz/rational_function.hpp"

namespace leibniz {

using AlgebraQt = Algebra<RationalFunction>;
using MatrixQt = Matrix<RationalFunction>;

/// g_t in GL_n(Q(t)). Column j holds the coordinates of g_t(e_j).
class BasisFamily {
 public:
  /// Throws SingularMatrix when det g_t vanishes identically.
  BasisFamily(std::string label, MatrixQt matrix);

  static BasisFamily identity(std::size_t n);
  /// g_t(e_i) = d[i] e_i.
  static BasisFamily diagonal(std::string label, std::vector<RationalFunction> d);

  std::size_t dim() const { return matrix_.rows(); }
  const std::string& label() const { return label_; }
  const MatrixQt& matrix() const { return matrix_; }
  const MatrixQt& inverse() const { return inverse_; }

 private:
  std::string label_;
  MatrixQt matrix_;
  MatrixQt inverse_;
};

AlgebraQt embed(const AlgebraQ& a);

/// g_t * A over Q(t).
AlgebraQt transform(const AlgebraQ& source, const BasisFamily& family);

using Triple = std::array<std::size_t, 3>;

/// Structure constant c_{i,j}^k of g_t * A with a pole at t = 0.
class LimitHasPole : public std::domain_error {
 public:
  LimitHasPole(Triple triple, int valuation);
  const Triple& triple() const noexcept { return triple_; }
  int valuation() const noexcept { return valuation_; }

 private:
  Triple triple_;
  int valuation_;
};

class NonLeibnizLimit : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Entrywise limit at t = 0. Throws LimitHasPole (first offending triple in
/// (i, j, k) order) or NonLeibnizLimit.
AlgebraQ limit(const AlgebraQt& at);

enum class VerdictKind { verified, limit_has_pole, limit_mismatch };

struct Verdict {
  VerdictKind kind = VerdictKind::verified;
  Triple triple{};    ///< offending structure constant (0-based) unless verified
  int valuation = 0;  ///< only for limit_has_pole
};

std::string to_string(const Verdict& v);

struct DegenerationCase {
  std::string name;
  AlgebraQ source;
  BasisFamily family;
  AlgebraQ target;
};

struct CaseOutcome {
  Verdict verdict;
  AlgebraQt transformed;
  std::optional<AlgebraQ> limit;
};

/// Transform, take the limit, compare with the target in the same basis.
CaseOutcome run_case(const DegenerationCase& c);
Verdict verify_case(const DegenerationCase& c);

enum class ComplementPlacement {
  first,  ///< complement e_1..e_k, nilradical e_{k+1}..e_n
  last    ///< nilradical e_1..e_{n-k}, complement e_{n-k+1}..e_n
};

/// Diagonal family scaling the k complement vectors by 1/t and fixing the
/// rest; the limit is N (+) a_k. Throws InvalidParams when the remaining n-k
/// vectors do not span a subalgebra.
BasisFamily split_family(const AlgebraQ& a, std::size_t k,
                         ComplementPlacement placement = ComplementPlacement::first);

enum class CheckStatus { pass, obstructed, skipped };

const char* to_string(CheckStatus s);

struct ObstructionCheck {
  std::string rule;       ///< a..e
  std::string name;
  std::string direction;  ///< the necessary condition for source -> target
  std::string source_value;
  std::string target_value;
  CheckStatus status = CheckStatus::pass;
};

struct ObstructionReport {
  std::vector<ObstructionCheck> checks;

  bool obstructed() const;
  const ObstructionCheck* find(const std::string& name) const;
};

/// Every necessary condition for source -> target, each reported.
ObstructionReport obstruction_battery(const AlgebraQ& source, const AlgebraQ& target);

// ---------------------------------------------------------------------------
// Solvable extensions of lambda4(1/4)
// ---------------------------------------------------------------------------

/// Free parameters of a putative 4-dimensional solvable extension of
/// lambda4(1/4) in the basis {x, f1, f2, f3}, after normalising a1 = 1.
struct QuarterExtensionSample {
  Rational a2, a3, b3, alpha3, beta3, gamma3;
};

/// [f1,x]=f1+a2 f2+a3 f3, [f2,x]=f2+b3 f3, [f3,x]=2f3, [x,f1]=-f1-a2 f2+alpha3 f3,
/// [x,f2]=-f2+beta3 f3, [x,x]=gamma3 f3, [f1,f1]=f3, [f2,f1]=f3, [f1,f2]=-f3.
/// Basis order e0 = x, e1 = f1, e2 = f2, e3 = f3.
AlgebraQ quarter_extension(const QuarterExtensionSample& s);

struct QuarterExtensionCheck {
  QuarterExtensionSample sample;
  Vector<Rational> residual;  ///< [[x,f2],f1] - [[x,f1],f2] - [x,[f2,f1]]
  Vector<Rational> defect;    ///< defect_at(x, f2, f1) = -residual
};

class UnexpectedDefect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluates the identity at (x, f2, f1) for every sample; the residual is
/// -2 f3 for all parameters, so no such extension is Leibniz. Throws
/// UnexpectedDefect if any sample disagrees.
std::vector<QuarterExtensionCheck> verify_no_lambda4_quarter_extension(
    std::span<const QuarterExtensionSample> samples);

/// Deterministic pseudorandom samples (numerators in [-10,10], denominators
/// in [1,9]) from a seeded mt19937_64; the all-zero tuple is not included.
std::vector<QuarterExtensionSample> seeded_quarter_samples(std::size_t count, std::uint64_t seed);

}  // namespace leibniz
