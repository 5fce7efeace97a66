#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leibniz/degeneration.hpp"

namespace leibniz {

struct CatalogParams {
  std::optional<long> n;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
};

struct CatalogEntry {
  std::string key;
  std::string params;  ///< accepted parameters, e.g. "n>=3" or "alpha"
  std::string description;
  /// False for comparison tables that are not Leibniz algebras (p_n^+).
  bool leibniz = true;
};

/// All registered keys in display order.
const std::vector<CatalogEntry>& catalog_entries();

/// Entry for `key`; throws InvalidParams for unknown keys.
const CatalogEntry& catalog_entry(const std::string& key);

/// Builds the named table (1-based in descriptions, 0-based in the result).
/// Throws InvalidParams for unknown keys or inadmissible parameters.
AlgebraQ build(const std::string& key, const CatalogParams& params = {});

/// `key@n=4,alpha=-2` style reference for a built instance.
std::string reference(const std::string& key, const CatalogParams& params);

/// sqrt(1 - 4 alpha) when it is rational.
std::optional<Rational> discriminant_root(const Rational& alpha);

/// alpha != 0 with sqrt(1 - 4 alpha) rational.
bool alpha_rational(const Rational& alpha);

/// Candidate alphas filtered by alpha_rational and alpha != 1/4.
std::vector<Rational> alpha_samples();

/// beta = (1 - 4 alpha + sqrt(1 - 4 alpha)) / (2 alpha) for r_{3,2}(alpha).
Rational r32_beta(const Rational& alpha);

/// beta' = (sqrt(1 - 4 alpha) - 1) / (sqrt(1 - 4 alpha) + 1), alpha != 0, 1/4.
Rational beta_prime(const Rational& alpha);

/// Basis f1 = e1, f2 = e2 + beta e1, f3 = e3 of lambda4(alpha) with
/// beta = -(1 + sqrt(1 - 4 alpha)) / 2, as columns.
MatrixQ lambda4_first_change(const Rational& alpha);

/// Composite basis (columns) turning lambda4(alpha) into the
/// [f2,f1] = f3, [f1,f2] = beta' f3 form; alpha != 1/4.
MatrixQ lambda4_beta_form_change(const Rational& alpha);

/// Basis (columns) turning lambda4(1/4) into
/// [f1,f1] = f3, [f2,f1] = f3, [f1,f2] = -f3.
MatrixQ lambda4_quarter_change();

/// Named family for `named:<id>`; `dim` fixes n for the n-parametric ones
/// (NF-F, R-NF) and is checked against the others.
BasisFamily reference_family(const std::string& id, std::size_t dim);

/// Ids accepted by reference_family.
std::vector<std::string> reference_family_ids();

/// Every explicit degeneration with its printed family.
std::vector<DegenerationCase> reference_cases();

/// Every (key, params) instance used for validity sweeps: fixed-dimension
/// keys once, n-parametric keys for each admissible n in 2..6, alpha keys
/// for every alpha sample.
std::vector<std::pair<std::string, CatalogParams>> catalog_instances();

}  // namespace leibniz
