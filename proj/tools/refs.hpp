#pragma once

#include <string>

#include "leibniz/catalog.hpp"

namespace leibniz::cli {

/// Usage or input errors that map to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One term is a file path or `key[@params]`; terms joined by `+` form a
/// direct sum. Params are `n=<int>`, `alpha=<q>`, `beta=<q>` separated by
/// commas, or a bare integer for n. Shorthands: a<k>, p<k>plus, p<k>minus.
AlgebraQ resolve_algebra(const std::string& ref);

/// identity | diag:<c1>,...,<cn> | named:<id> | split:<k>[:first|last] | file.
/// `dim` and `source` fill in what the reference leaves implicit.
BasisFamily resolve_family(const std::string& ref, const AlgebraQ& source);

/// Parses `key[@params]` into its parts.
std::pair<std::string, CatalogParams> parse_catalog_ref(const std::string& ref);

}  // namespace leibniz::cli
