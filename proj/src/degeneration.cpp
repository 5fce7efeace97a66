#include "leibniz/degeneration.hpp"

#include <random>

namespace leibniz {

BasisFamily::BasisFamily(std::string label, MatrixQt matrix)
    : label_(std::move(label)), matrix_(std::move(matrix)), inverse_(invert(matrix_)) {}

BasisFamily BasisFamily::identity(std::size_t n) {
  return BasisFamily("identity", MatrixQt::identity(n));
}

BasisFamily BasisFamily::diagonal(std::string label, std::vector<RationalFunction> d) {
  return BasisFamily(std::move(label), MatrixQt::diagonal(d));
}

AlgebraQt embed(const AlgebraQ& a) {
  return a.map<RationalFunction>([](const Rational& c) { return RationalFunction(c); });
}

AlgebraQt transform(const AlgebraQ& source, const BasisFamily& family) {
  if (family.dim() != source.dim())
    throw DimensionMismatch("family dimension " + std::to_string(family.dim()) +
                            " differs from algebra dimension " + std::to_string(source.dim()));
  return basis_change(embed(source), family.matrix(), family.inverse());
}

LimitHasPole::LimitHasPole(Triple triple, int valuation)
    : std::domain_error("limit has a pole at structure constant (" +
                        std::to_string(triple[0] + 1) + "," + std::to_string(triple[1] + 1) +
                        "," + std::to_string(triple[2] + 1) + ") with valuation " +
                        std::to_string(valuation)),
      triple_(triple),
      valuation_(valuation) {}

AlgebraQ limit(const AlgebraQt& at) {
  AlgebraQ out(at.dim(), at.label());
  for (const auto& [key, v] : at.table()) {
    Vector<Rational> w(at.dim());
    for (std::size_t k = 0; k < at.dim(); ++k) {
      try {
        w[k] = v[k].limit_at_zero();
      } catch (const PoleAtZero& p) {
        throw LimitHasPole({key.first, key.second, k}, p.valuation());
      }
    }
    out.set_product(key.first, key.second, std::move(w));
  }
  if (!is_leibniz(out)) throw NonLeibnizLimit("limit algebra violates the Leibniz identity");
  return out;
}

std::string to_string(const Verdict& v) {
  auto triple = [&] {
    return "(" + std::to_string(v.triple[0] + 1) + "," + std::to_string(v.triple[1] + 1) + "," +
           std::to_string(v.triple[2] + 1) + ")";
  };
  switch (v.kind) {
    case VerdictKind::verified: return "VERIFIED";
    case VerdictKind::limit_has_pole:
      return "LIMIT_HAS_POLE" + triple() + " valuation " + std::to_string(v.valuation);
    case VerdictKind::limit_mismatch: return "LIMIT_MISMATCH" + triple();
  }
  return "?";
}

CaseOutcome run_case(const DegenerationCase& c) {
  if (c.source.dim() != c.target.dim())
    throw DimensionMismatch("source and target dimensions differ");
  CaseOutcome out{{}, transform(c.source, c.family), std::nullopt};
  try {
    out.limit = limit(out.transformed);
  } catch (const LimitHasPole& p) {
    out.verdict = {VerdictKind::limit_has_pole, p.triple(), p.valuation()};
    return out;
  }
  const std::size_t n = c.target.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto got = out.limit->product(i, j);
      const auto want = c.target.product(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (got[k] != want[k]) {
          out.verdict = {VerdictKind::limit_mismatch, {i, j, k}, 0};
          return out;
        }
    }
  return out;
}

Verdict verify_case(const DegenerationCase& c) { return run_case(c).verdict; }

BasisFamily split_family(const AlgebraQ& a, std::size_t k, ComplementPlacement placement) {
  const std::size_t n = a.dim();
  if (k > n) throw InvalidParams("split size exceeds dimension");
  std::vector<std::size_t> kept;
  std::vector<RationalFunction> d(n, RationalFunction(1));
  for (std::size_t i = 0; i < n; ++i) {
    const bool complement = placement == ComplementPlacement::first ? i < k : i >= n - k;
    if (complement) d[i] = RationalFunction::power_of_t(-1);
    else kept.push_back(i);
  }
  if (!is_subalgebra(a, SubspaceQ::coordinate(n, kept)))
    throw InvalidParams("the " + std::to_string(n - k) +
                        " fixed basis vectors do not span a subalgebra");
  return BasisFamily::diagonal("split:" + std::to_string(k), std::move(d));
}

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::obstructed: return "OBSTRUCTED";
    case CheckStatus::skipped: return "SKIPPED";
  }
  return "?";
}

bool ObstructionReport::obstructed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::obstructed) return true;
  return false;
}

const ObstructionCheck* ObstructionReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

std::size_t padded(const std::vector<std::size_t>& dims, std::size_t idx) {
  return idx < dims.size() ? dims[idx] : dims.back();
}

void class_check(ObstructionReport& r, const std::string& name, bool src, bool tgt) {
  auto b = [](bool v) { return std::string(v ? "true" : "false"); };
  r.checks.push_back({"a", name, "source => target", b(src), b(tgt),
                      src && !tgt ? CheckStatus::obstructed : CheckStatus::pass});
}

void series_checks(ObstructionReport& r, const std::string& prefix,
                   const std::vector<std::size_t>& src, const std::vector<std::size_t>& tgt) {
  const std::size_t terms = std::max(src.size(), tgt.size());
  for (std::size_t idx = 1; idx < terms; ++idx) {
    const std::size_t s = padded(src, idx);
    const std::size_t t = padded(tgt, idx);
    r.checks.push_back({"b", prefix + "[" + std::to_string(idx + 1) + "]", "target <= source",
                        std::to_string(s), std::to_string(t),
                        t > s ? CheckStatus::obstructed : CheckStatus::pass});
  }
}

void at_least_check(ObstructionReport& r, const std::string& rule, const std::string& name,
                    std::size_t s, std::size_t t) {
  r.checks.push_back({rule, name, "target >= source", std::to_string(s), std::to_string(t),
                      t < s ? CheckStatus::obstructed : CheckStatus::pass});
}

}  // namespace

ObstructionReport obstruction_battery(const AlgebraQ& source, const AlgebraQ& target) {
  if (source.dim() != target.dim()) throw DimensionMismatch("source and target dimensions differ");
  const Fingerprint fs = fingerprint(source);
  const Fingerprint ft = fingerprint(target);
  ObstructionReport r;

  class_check(r, "nilpotent", fs.is_nilpotent, ft.is_nilpotent);
  class_check(r, "solvable", fs.is_solvable, ft.is_solvable);
  class_check(r, "lie", fs.is_lie, ft.is_lie);
  class_check(r, "commutative", fs.is_commutative, ft.is_commutative);

  series_checks(r, "lcs", fs.lcs_dims, ft.lcs_dims);
  series_checks(r, "derived", fs.ds_dims, ft.ds_dims);

  {
    const bool distinct = distinguish(fs, ft).verdict == Isomorphism::non_isomorphic;
    const bool ok = distinct ? ft.der_dim > fs.der_dim : ft.der_dim >= fs.der_dim;
    r.checks.push_back({"c", "der_dim",
                        distinct ? "target > source (non-isomorphic)" : "target >= source",
                        std::to_string(fs.der_dim), std::to_string(ft.der_dim),
                        ok ? CheckStatus::pass : CheckStatus::obstructed});
  }

  at_least_check(r, "d", "lann_dim", fs.lann_dim, ft.lann_dim);
  at_least_check(r, "d", "rann_dim", fs.rann_dim, ft.rann_dim);
  at_least_check(r, "d", "center_dim", fs.center_dim, ft.center_dim);

  if (fs.nilradical_dim && ft.nilradical_dim) {
    at_least_check(r, "e", "nilradical_dim", *fs.nilradical_dim, *ft.nilradical_dim);
  } else {
    auto show = [](const std::optional<std::size_t>& v) {
      return v ? std::to_string(*v) : std::string("unverified");
    };
    r.checks.push_back({"e", "nilradical_dim", "target >= source", show(fs.nilradical_dim),
                        show(ft.nilradical_dim), CheckStatus::skipped});
  }
  return r;
}

AlgebraQ quarter_extension(const QuarterExtensionSample& s) {
  constexpr std::size_t x = 0, f1 = 1, f2 = 2, f3 = 3;
  AlgebraQ a(4, "lambda4(1/4)-extension");
  auto set = [&](std::size_t i, std::size_t j, Vector<Rational> v) { a.set_product(i, j, std::move(v)); };
  auto vec = [](Rational cx, Rational c1, Rational c2, Rational c3) {
    return Vector<Rational>{cx, c1, c2, c3};
  };
  set(f1, x, vec(0, 1, s.a2, s.a3));
  set(f2, x, vec(0, 0, 1, s.b3));
  set(f3, x, vec(0, 0, 0, 2));
  set(x, f1, vec(0, -1, -s.a2, s.alpha3));
  set(x, f2, vec(0, 0, -1, s.beta3));
  set(x, x, vec(0, 0, 0, s.gamma3));
  set(f1, f1, vec(0, 0, 0, 1));
  set(f2, f1, vec(0, 0, 0, 1));
  set(f1, f2, vec(0, 0, 0, -1));
  return a;
}

std::vector<QuarterExtensionCheck> verify_no_lambda4_quarter_extension(
    std::span<const QuarterExtensionSample> samples) {
  const Vector<Rational> expected{0, 0, 0, -2};
  std::vector<QuarterExtensionCheck> out;
  for (const auto& s : samples) {
    const AlgebraQ a = quarter_extension(s);
    const auto x = unit_vector<Rational>(4, 0);
    const auto f1 = unit_vector<Rational>(4, 1);
    const auto f2 = unit_vector<Rational>(4, 2);
    const Vector<Rational> d = defect_at(a, x, f2, f1);
    Vector<Rational> residual(4);
    for (std::size_t k = 0; k < 4; ++k) residual[k] = -d[k];
    if (residual != expected)
      throw UnexpectedDefect("identity residual at (x,f2,f1) is not -2 f3 for a sample");
    out.push_back({s, std::move(residual), d});
  }
  return out;
}

std::vector<QuarterExtensionSample> seeded_quarter_samples(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 eng(seed);
  // Raw engine output only: distributions are not reproducible across
  // standard libraries.
  auto draw = [&] {
    const long num = static_cast<long>(eng() % 21) - 10;
    const long den = static_cast<long>(eng() % 9) + 1;
    return Rational(mpz_class(num), mpz_class(den));
  };
  std::vector<QuarterExtensionSample> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    QuarterExtensionSample s;
    s.a2 = draw();
    s.a3 = draw();
    s.b3 = draw();
    s.alpha3 = draw();
    s.beta3 = draw();
    s.gamma3 = draw();
    out.push_back(s);
  }
  return out;
}

}  // namespace leibniz
