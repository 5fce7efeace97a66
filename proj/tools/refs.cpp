#include "refs.hpp"

#include <charconv>
#include <filesystem>
#include <regex>

#include "leibniz/io.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz::cli {
namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

long parse_long(const std::string& s, const std::string& what) {
  long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || p != s.data() + s.size()) throw UsageError("bad integer for " + what + ": '" + s + "'");
  return v;
}

Rational parse_q(const std::string& s, const std::string& what) {
  try {
    return parse_rational(s);
  } catch (const std::exception& e) {
    throw UsageError("bad rational for " + what + ": '" + s + "' (" + e.what() + ")");
  }
}

bool looks_like_file(const std::string& s) {
  return s.find('/') != std::string::npos || s.ends_with(".json") || std::filesystem::exists(s);
}

/// Splits on `+` that is not a sign after `=`.
std::vector<std::string> sum_terms(const std::string& ref) {
  std::vector<std::string> out;
  std::string cur;
  for (std::size_t i = 0; i < ref.size(); ++i) {
    if (ref[i] == '+' && !(i > 0 && ref[i - 1] == '=')) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ref[i];
    }
  }
  out.push_back(cur);
  return out;
}

AlgebraQ resolve_term(const std::string& term) {
  if (term.empty()) throw UsageError("empty algebra reference");
  if (looks_like_file(term) && term.find('@') == std::string::npos) {
    try {
      return parse_algebra(read_text_file(term));
    } catch (const ParseError& e) {
      throw UsageError(term + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw UsageError(e.what());
    }
  }
  auto [key, params] = parse_catalog_ref(term);
  try {
    return build(key, params);
  } catch (const InvalidParams& e) {
    throw UsageError(e.what());
  }
}

}  // namespace

std::pair<std::string, CatalogParams> parse_catalog_ref(const std::string& ref) {
  const auto at = ref.find('@');
  std::string key = ref.substr(0, at);
  CatalogParams p;
  if (at != std::string::npos) {
    const std::string rest = ref.substr(at + 1);
    if (rest.empty()) throw UsageError("empty parameter list in '" + ref + "'");
    for (const auto& item : split(rest, ',')) {
      const auto eq = item.find('=');
      if (eq == std::string::npos) {
        if (p.n) throw UsageError("n given twice in '" + ref + "'");
        p.n = parse_long(item, "n");
        continue;
      }
      const std::string name = item.substr(0, eq);
      const std::string value = item.substr(eq + 1);
      if (name == "n") {
        if (p.n) throw UsageError("n given twice in '" + ref + "'");
        p.n = parse_long(value, "n");
      } else if (name == "alpha") {
        p.alpha = parse_q(value, "alpha");
      } else if (name == "beta") {
        p.beta = parse_q(value, "beta");
      } else {
        throw UsageError("unknown parameter '" + name + "' in '" + ref + "'");
      }
    }
  }
  static const std::regex abelian_alias(R"(a(\d+))");
  static const std::regex pn_alias(R"(p(\d+)(plus|minus))");
  std::smatch m;
  if (std::regex_match(key, m, abelian_alias) || std::regex_match(key, m, pn_alias)) {
    if (p.n) throw UsageError("'" + key + "' already fixes n");
    p.n = parse_long(m[1].str(), "n");
    key = m.size() > 2 && m[2].matched ? "pn" + m[2].str() : "abelian";
  }
  return {key, p};
}

AlgebraQ resolve_algebra(const std::string& ref) {
  const auto terms = sum_terms(ref);
  AlgebraQ out = resolve_term(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) out = direct_sum(out, resolve_term(terms[i]));
  return out;
}

BasisFamily resolve_family(const std::string& ref, const AlgebraQ& source) {
  const std::size_t n = source.dim();
  try {
    if (ref == "identity") return BasisFamily::identity(n);
    if (ref.starts_with("diag:")) {
      std::vector<RationalFunction> d;
      for (const auto& s : split(ref.substr(5), ',')) {
        try {
          d.push_back(parse_rational_function(s));
        } catch (const std::exception& e) {
          throw UsageError("bad diagonal entry '" + s + "': " + e.what());
        }
      }
      if (d.size() != n)
        throw UsageError("diag: has " + std::to_string(d.size()) + " entries, source dimension is " +
                         std::to_string(n));
      return BasisFamily::diagonal(ref, std::move(d));
    }
    for (const char* prefix : {"named:", "paper:"})
      if (ref.starts_with(prefix)) return reference_family(ref.substr(std::string(prefix).size()), n);
    if (ref.starts_with("split:")) {
      const auto parts = split(ref.substr(6), ':');
      if (parts.size() > 2) throw UsageError("split:<k>[:first|last] expected");
      ComplementPlacement place = ComplementPlacement::last;
      if (parts.size() == 2) {
        if (parts[1] == "first") place = ComplementPlacement::first;
        else if (parts[1] != "last") throw UsageError("split placement must be first or last");
      }
      return split_family(source, static_cast<std::size_t>(parse_long(parts[0], "split size")), place);
    }
    if (looks_like_file(ref)) {
      BasisFamily f = parse_family(read_text_file(ref));
      if (f.dim() != n)
        throw UsageError("family dimension " + std::to_string(f.dim()) + " differs from source dimension " +
                         std::to_string(n));
      return f;
    }
  } catch (const ParseError& e) {
    throw UsageError(ref + ": " + e.what());
  } catch (const InvalidParams& e) {
    throw UsageError(e.what());
  } catch (const DimensionMismatch& e) {
    throw UsageError(e.what());
  } catch (const SingularMatrix&) {
    throw UsageError(ref + ": matrix is singular over Q(t)");
  }
  throw UsageError("unknown family '" + ref + "'");
}

}  // namespace leibniz::cli
