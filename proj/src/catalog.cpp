#include "leibniz/catalog.hpp"

#include <functional>
#include <initializer_list>
#include <utility>

namespace leibniz {
namespace {

using Term = std::pair<std::size_t, Rational>;

/// Table builder with the 1-based indices used in printed tables.
class TableBuilder {
 public:
  TableBuilder(std::size_t n, std::string label) : a_(n, std::move(label)) {}

  TableBuilder& set(std::size_t i, std::size_t j, std::initializer_list<Term> terms) {
    Vector<Rational> v(a_.dim(), Rational(0));
    for (const auto& [k, c] : terms) v.at(k - 1) += c;
    a_.set_product(i - 1, j - 1, std::move(v));
    return *this;
  }

  /// [e_i,e_j] = -[e_j,e_i] = terms.
  TableBuilder& skew(std::size_t i, std::size_t j, std::initializer_list<Term> terms) {
    set(i, j, terms);
    Vector<Rational> v = a_.product(i - 1, j - 1);
    for (auto& c : v) c = -c;
    a_.set_product(j - 1, i - 1, std::move(v));
    return *this;
  }

  AlgebraQ done() { return std::move(a_); }

 private:
  AlgebraQ a_;
};

long require_n(const std::string& key, const CatalogParams& p, long min_n,
               std::optional<long> fallback = std::nullopt) {
  if (!p.n && !fallback) throw InvalidParams(key + " requires n");
  const long n = p.n.value_or(*fallback);
  if (n < min_n) throw InvalidParams(key + " requires n >= " + std::to_string(min_n));
  if (n > 64) throw InvalidParams(key + ": n too large");
  return n;
}

void fixed_dim(const std::string& key, const CatalogParams& p, long dim) {
  if (p.n && *p.n != dim)
    throw InvalidParams(key + " is " + std::to_string(dim) + "-dimensional");
  if (p.alpha || p.beta) throw InvalidParams(key + " takes no alpha/beta parameter");
}

Rational require_alpha(const std::string& key, const CatalogParams& p) {
  if (!p.alpha) throw InvalidParams(key + " requires alpha");
  if (p.alpha->is_zero()) throw InvalidParams(key + ": alpha must be nonzero");
  return *p.alpha;
}

/// beta' for the lambda4beta / R1_4 tables from either alpha or beta.
Rational beta_form_parameter(const std::string& key, const CatalogParams& p) {
  if (p.alpha && p.beta) throw InvalidParams(key + ": give alpha or beta, not both");
  if (p.beta) {
    if (p.beta->is_zero() || *p.beta == Rational(-1))
      throw InvalidParams(key + ": beta must differ from 0 and -1");
    return *p.beta;
  }
  const Rational alpha = require_alpha(key, p);
  if (alpha == Rational(mpz_class(1), mpz_class(4)))
    throw InvalidParams(key + ": alpha = 1/4 has no beta' form (use lambda4quarter)");
  if (!discriminant_root(alpha))
    throw InvalidParams(key + ": 1 - 4 alpha must be a rational square");
  return beta_prime(alpha);
}

AlgebraQ build_nf(long n) {
  TableBuilder b(n, "NF" + std::to_string(n));
  for (long i = 1; i <= n - 1; ++i) b.set(i, 1, {{i + 1, 1}});
  return b.done();
}

AlgebraQ build_rnf(long n) {
  const std::size_t x = n + 1;
  TableBuilder b(n + 1, "RNF" + std::to_string(n));
  for (long i = 1; i <= n - 1; ++i) b.set(i, 1, {{i + 1, 1}});
  b.set(x, 1, {{1, 1}});
  for (long i = 1; i <= n; ++i) b.set(i, x, {{i, -i}});
  return b.done();
}

AlgebraQ build_n3_sign(long n, long sign, const char* name) {
  TableBuilder b(n, n == 3 ? std::string(name) : std::string(name) + "+a" + std::to_string(n - 3));
  b.set(1, 2, {{3, 1}}).set(2, 1, {{3, sign}});
  return b.done();
}

AlgebraQ build_pn(long n, long sign, const char* name) {
  TableBuilder b(n, "p" + std::to_string(n) + name);
  for (long i = 2; i <= n; ++i) b.set(1, i, {{i, 1}}).set(i, 1, {{i, sign}});
  return b.done();
}

struct Registered {
  CatalogEntry entry;
  std::function<AlgebraQ(const CatalogParams&)> builder;
};

const std::vector<Registered>& registry() {
  static const std::vector<Registered> reg = [] {
    std::vector<Registered> r;
    auto add = [&r](std::string key, std::string params, std::string description,
                    std::function<AlgebraQ(const CatalogParams&)> fn, bool leibniz = true) {
      r.push_back({{std::move(key), std::move(params), std::move(description), leibniz}, std::move(fn)});
    };

    add("abelian", "n>=1", "a_n, zero multiplication", [](const CatalogParams& p) {
      if (p.alpha || p.beta) throw InvalidParams("abelian takes no alpha/beta parameter");
      const long n = require_n("abelian", p, 1);
      return AlgebraQ(n, "a" + std::to_string(n));
    });
    add("NF", "n>=1", "null-filiform: [e_i,e_1]=e_{i+1}, 1<=i<=n-1", [](const CatalogParams& p) {
      return build_nf(require_n("NF", p, 1));
    });
    add("F", "n>=2", "filiform: [e_i,e_1]=e_{i+1}, 2<=i<=n-1", [](const CatalogParams& p) {
      const long n = require_n("F", p, 2);
      TableBuilder b(n, "F" + std::to_string(n));
      for (long i = 2; i <= n - 1; ++i) b.set(i, 1, {{i + 1, 1}});
      return b.done();
    });
    add("RNF", "n>=1", "solvable with nilradical NF_n, basis e_1..e_n,x (dim n+1)",
        [](const CatalogParams& p) { return build_rnf(require_n("RNF", p, 1)); });
    add("R_n", "n>=3", "[e_1,e_1]=e_2, [e_i,e_1]=e_i+e_{i+1}, 2<=i<=n-1", [](const CatalogParams& p) {
      const long n = require_n("R_n", p, 3);
      TableBuilder b(n, "R" + std::to_string(n));
      b.set(1, 1, {{2, 1}});
      for (long i = 2; i <= n - 1; ++i) b.set(i, 1, {{i, 1}, {i + 1, 1}});
      return b.done();
    });
    add("n2", "", "[e_1,e_1]=e_2", [](const CatalogParams& p) {
      fixed_dim("n2", p, 2);
      return TableBuilder(2, "n2").set(1, 1, {{2, 1}}).done();
    });
    add("n3", "", "Heisenberg: [e_1,e_2]=-[e_2,e_1]=e_3", [](const CatalogParams& p) {
      fixed_dim("n3", p, 3);
      return TableBuilder(3, "n3").skew(1, 2, {{3, 1}}).done();
    });
    add("n4", "", "[e_1,e_2]=e_3, [e_1,e_3]=e_4 (skew)", [](const CatalogParams& p) {
      fixed_dim("n4", p, 4);
      return TableBuilder(4, "n4").skew(1, 2, {{3, 1}}).skew(1, 3, {{4, 1}}).done();
    });
    add("n5", "", "[e_1,e_2]=e_3, [e_1,e_3]=e_4, [e_1,e_4]=e_5, [e_2,e_3]=e_5 (skew)",
        [](const CatalogParams& p) {
          fixed_dim("n5", p, 5);
          return TableBuilder(5, "n5")
              .skew(1, 2, {{3, 1}})
              .skew(1, 3, {{4, 1}})
              .skew(1, 4, {{5, 1}})
              .skew(2, 3, {{5, 1}})
              .done();
        });
    add("n3plus", "n>=3 (default 3)", "[e_1,e_2]=[e_2,e_1]=e_3, plus a_{n-3}", [](const CatalogParams& p) {
      if (p.alpha || p.beta) throw InvalidParams("n3plus takes no alpha/beta parameter");
      return build_n3_sign(require_n("n3plus", p, 3, 3), 1, "n3plus");
    });
    add("n3minus", "n>=3 (default 3)", "[e_1,e_2]=-[e_2,e_1]=e_3, plus a_{n-3}", [](const CatalogParams& p) {
      if (p.alpha || p.beta) throw InvalidParams("n3minus takes no alpha/beta parameter");
      return build_n3_sign(require_n("n3minus", p, 3, 3), -1, "n3minus");
    });
    add("pnplus", "n>=2", "[e_1,e_i]=e_i, [e_i,e_1]=e_i, i>=2 (not Leibniz)", [](const CatalogParams& p) {
      if (p.alpha || p.beta) throw InvalidParams("pnplus takes no alpha/beta parameter");
      return build_pn(require_n("pnplus", p, 2), 1, "plus");
    }, false);
    add("pnminus", "n>=2", "[e_1,e_i]=e_i, [e_i,e_1]=-e_i, i>=2", [](const CatalogParams& p) {
      if (p.alpha || p.beta) throw InvalidParams("pnminus takes no alpha/beta parameter");
      return build_pn(require_n("pnminus", p, 2), -1, "minus");
    });
    add("lambda4", "alpha!=0", "[e_1,e_1]=e_3, [e_2,e_2]=alpha e_3, [e_1,e_2]=e_3", [](const CatalogParams& p) {
      if (p.n && *p.n != 3) throw InvalidParams("lambda4 is 3-dimensional");
      if (p.beta) throw InvalidParams("lambda4 takes alpha, not beta");
      const Rational alpha = require_alpha("lambda4", p);
      return TableBuilder(3, "lambda4(" + alpha.to_string() + ")")
          .set(1, 1, {{3, 1}})
          .set(2, 2, {{3, alpha}})
          .set(1, 2, {{3, 1}})
          .done();
    });
    add("lambda4beta", "alpha (rational root, !=1/4) | beta",
        "lambda4(alpha) rewritten as [e_2,e_1]=e_3, [e_1,e_2]=beta' e_3", [](const CatalogParams& p) {
          if (p.n && *p.n != 3) throw InvalidParams("lambda4beta is 3-dimensional");
          const Rational b = beta_form_parameter("lambda4beta", p);
          return TableBuilder(3, "lambda4beta(" + b.to_string() + ")")
              .set(2, 1, {{3, 1}})
              .set(1, 2, {{3, b}})
              .done();
        });
    add("lambda4quarter", "", "lambda4(1/4) as [e_1,e_1]=e_3, [e_2,e_1]=e_3, [e_1,e_2]=-e_3",
        [](const CatalogParams& p) {
          fixed_dim("lambda4quarter", p, 3);
          return TableBuilder(3, "lambda4quarter")
              .set(1, 1, {{3, 1}})
              .set(2, 1, {{3, 1}})
              .set(1, 2, {{3, -1}})
              .done();
        });
    add("lambda5", "", "[e_2,e_1]=e_3, [e_1,e_2]=e_3", [](const CatalogParams& p) {
      fixed_dim("lambda5", p, 3);
      return TableBuilder(3, "lambda5").set(2, 1, {{3, 1}}).set(1, 2, {{3, 1}}).done();
    });
    add("lambda6", "", "[e_1,e_1]=e_2, [e_2,e_1]=e_3", [](const CatalogParams& p) {
      fixed_dim("lambda6", p, 3);
      return TableBuilder(3, "lambda6").set(1, 1, {{2, 1}}).set(2, 1, {{3, 1}}).done();
    });
    add("r2", "", "[e_2,e_1]=e_2", [](const CatalogParams& p) {
      fixed_dim("r2", p, 2);
      return TableBuilder(2, "r2").set(2, 1, {{2, 1}}).done();
    });
    add("r3", "", "[e_1,e_2]=e_1+e_3, [e_3,e_2]=e_3 (skew)", [](const CatalogParams& p) {
      fixed_dim("r3", p, 3);
      return TableBuilder(3, "r3").skew(1, 2, {{1, 1}, {3, 1}}).skew(3, 2, {{3, 1}}).done();
    });
    // The printed r4 row "[e2,e3]=-[e2,e3]=e3" is read as [e2,e3]=e3; the
    // mirrored reading [e3,e2]=e3 violates the Jacobi identity.
    add("r4", "", "[e_1,e_2]=e_1+e_3, [e_1,e_3]=e_4, [e_2,e_3]=e_3 (skew)", [](const CatalogParams& p) {
      fixed_dim("r4", p, 4);
      return TableBuilder(4, "r4")
          .skew(1, 2, {{1, 1}, {3, 1}})
          .skew(1, 3, {{4, 1}})
          .skew(2, 3, {{3, 1}})
          .done();
    });
    add("r5", "", "[e_1,e_2]=e_3, [e_1,e_3]=e_2, [e_1,e_4]=e_5, [e_2,e_3]=e_5 (skew)",
        [](const CatalogParams& p) {
          fixed_dim("r5", p, 5);
          return TableBuilder(5, "r5")
              .skew(1, 2, {{3, 1}})
              .skew(1, 3, {{2, 1}})
              .skew(1, 4, {{5, 1}})
              .skew(2, 3, {{5, 1}})
              .done();
        });
    add("r31", "", "[e_2,e_1]=-e_2+e_3, [e_3,e_1]=-2e_3, [e_1,e_2]=e_2+e_3, [e_2,e_2]=e_3",
        [](const CatalogParams& p) {
          fixed_dim("r31", p, 3);
          return TableBuilder(3, "r31")
              .set(2, 1, {{2, -1}, {3, 1}})
              .set(3, 1, {{3, -2}})
              .set(1, 2, {{2, 1}, {3, 1}})
              .set(2, 2, {{3, 1}})
              .done();
        });
    add("r32", "alpha!=0 (rational root)", "solvable, degenerates to lambda4(alpha)", [](const CatalogParams& p) {
      if (p.n && *p.n != 3) throw InvalidParams("r32 is 3-dimensional");
      if (p.beta) throw InvalidParams("r32 takes alpha; beta is derived");
      const Rational a = require_alpha("r32", p);
      if (!discriminant_root(a)) throw InvalidParams("r32: 1 - 4 alpha must be a rational square");
      const Rational b = r32_beta(a);
      const Rational two_b = Rational(2) + b;
      return TableBuilder(3, "r32(" + a.to_string() + ")")
          .set(1, 1, {{3, 1}})
          .set(1, 2, {{1, -(two_b * a)}, {2, 1}, {3, 1}})
          .set(2, 1, {{1, two_b * a}, {2, -1}})
          .set(2, 2, {{3, a}})
          .set(3, 1, {{3, b}})
          .set(3, 2, {{3, two_b * b * a}})
          .done();
    });
    add("R1_4", "alpha (rational root, !=1/4) | beta", "solvable with nilradical lambda4beta, basis e_1,e_2,e_3,x",
        [](const CatalogParams& p) {
          if (p.n && *p.n != 4) throw InvalidParams("R1_4 is 4-dimensional");
          const Rational b = beta_form_parameter("R1_4", p);
          return TableBuilder(4, "R1_4(" + b.to_string() + ")")
              .set(2, 1, {{3, 1}})
              .set(1, 2, {{3, b}})
              .set(4, 1, {{1, -1}})
              .set(4, 2, {{2, -b}})
              .set(1, 4, {{1, 1}})
              .set(2, 4, {{2, b}})
              .set(3, 4, {{3, b + Rational(1)}})
              .done();
        });
    add("R2_4", "", "solvable with nilradical lambda5, basis e_1,e_2,e_3,x", [](const CatalogParams& p) {
      fixed_dim("R2_4", p, 4);
      return TableBuilder(4, "R2_4")
          .set(2, 1, {{3, 1}})
          .set(1, 2, {{3, 1}})
          .set(4, 1, {{1, -1}})
          .set(4, 2, {{2, -1}})
          .set(1, 4, {{1, 1}})
          .set(2, 4, {{2, 1}})
          .set(3, 4, {{3, 2}})
          .done();
    });
    add("R3_4", "", "solvable with nilradical lambda6, basis e_1,e_2,e_3,x", [](const CatalogParams& p) {
      fixed_dim("R3_4", p, 4);
      return TableBuilder(4, "R3_4")
          .set(1, 1, {{2, 1}})
          .set(2, 1, {{3, 1}})
          .set(4, 1, {{1, -1}})
          .set(1, 4, {{1, 1}})
          .set(2, 4, {{2, 2}})
          .set(3, 4, {{3, 3}})
          .done();
    });
    return r;
  }();
  return reg;
}

RationalFunction tpow(int k) { return RationalFunction::power_of_t(k); }

BasisFamily diag_powers(std::string label, const std::vector<int>& exps) {
  std::vector<RationalFunction> d;
  for (int e : exps) d.push_back(tpow(e));
  return BasisFamily::diagonal(std::move(label), std::move(d));
}

void expect_dim(const std::string& id, std::size_t want, std::size_t got) {
  if (want != got)
    throw DimensionMismatch("family " + id + " is " + std::to_string(want) +
                            "-dimensional, requested " + std::to_string(got));
}

}  // namespace

const std::vector<CatalogEntry>& catalog_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> out;
    for (const auto& r : registry()) out.push_back(r.entry);
    return out;
  }();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& key) {
  for (const auto& r : registry())
    if (r.entry.key == key) return r.entry;
  throw InvalidParams("unknown catalog key '" + key + "'");
}

AlgebraQ build(const std::string& key, const CatalogParams& params) {
  for (const auto& r : registry())
    if (r.entry.key == key) return r.builder(params);
  throw InvalidParams("unknown catalog key '" + key + "'");
}

std::string reference(const std::string& key, const CatalogParams& p) {
  std::string out = key;
  std::string sep = "@";
  if (p.n) { out += sep + "n=" + std::to_string(*p.n); sep = ","; }
  if (p.alpha) { out += sep + "alpha=" + p.alpha->to_string(); sep = ","; }
  if (p.beta) out += sep + "beta=" + p.beta->to_string();
  return out;
}

std::optional<Rational> discriminant_root(const Rational& alpha) {
  return (Rational(1) - Rational(4) * alpha).sqrt();
}

bool alpha_rational(const Rational& alpha) {
  return !alpha.is_zero() && discriminant_root(alpha).has_value();
}

std::vector<Rational> alpha_samples() {
  const std::vector<Rational> candidates{
      Rational(-2), Rational(-6), Rational(2),
      Rational(mpz_class(3), mpz_class(16)), Rational(mpz_class(-5), mpz_class(4))};
  const Rational quarter(mpz_class(1), mpz_class(4));
  std::vector<Rational> out;
  for (const auto& a : candidates)
    if (alpha_rational(a) && a != quarter) out.push_back(a);
  return out;
}

Rational r32_beta(const Rational& alpha) {
  const auto s = discriminant_root(alpha);
  if (!s || alpha.is_zero()) throw InvalidParams("alpha has no rational r32 beta");
  return (Rational(1) - Rational(4) * alpha + *s) / (Rational(2) * alpha);
}

Rational beta_prime(const Rational& alpha) {
  const auto s = discriminant_root(alpha);
  if (!s || alpha.is_zero() || s->is_zero()) throw InvalidParams("alpha has no rational beta'");
  return (*s - Rational(1)) / (*s + Rational(1));
}

MatrixQ lambda4_first_change(const Rational& alpha) {
  const auto s = discriminant_root(alpha);
  if (!s) throw InvalidParams("1 - 4 alpha must be a rational square");
  const Rational beta = -(Rational(1) + *s) / Rational(2);
  return MatrixQ::from_columns({{1, 0, 0}, {beta, 1, 0}, {0, 0, 1}});
}

MatrixQ lambda4_beta_form_change(const Rational& alpha) {
  const auto s = discriminant_root(alpha);
  if (!s || s->is_zero()) throw InvalidParams("alpha must differ from 1/4 with 1 - 4 alpha a rational square");
  const Rational beta = -(Rational(1) + *s) / Rational(2);
  // f1' = f1 - f2/(2 beta + 1), f2' = f2 / beta, in the f basis.
  const MatrixQ second = MatrixQ::from_columns(
      {{1, -(Rational(1) / (Rational(2) * beta + Rational(1))), 0},
       {0, Rational(1) / beta, 0},
       {0, 0, 1}});
  return lambda4_first_change(alpha) * second;
}

MatrixQ lambda4_quarter_change() {
  // f1 = e1, f2' = -2 (e2 - e1/2) = e1 - 2 e2, f3 = e3.
  return MatrixQ::from_columns({{1, 0, 0}, {1, -2, 0}, {0, 0, 1}});
}

std::vector<std::string> reference_family_ids() {
  return {"r2-n2", "r3-n3", "r4-n4", "r5-n5", "NF-F", "R-NF", "r32-lambda4", "r31-lambda5"};
}

BasisFamily reference_family(const std::string& id, std::size_t dim) {
  if (id == "r2-n2") {
    expect_dim(id, 2, dim);
    // g(e1) = t^-1 e1 - t^-2 e2, g(e2) = t^-2 e2
    MatrixQt g(2, 2);
    g(0, 0) = tpow(-1);
    g(1, 0) = -tpow(-2);
    g(1, 1) = tpow(-2);
    return BasisFamily(id, std::move(g));
  }
  if (id == "r3-n3" || id == "r32-lambda4") {
    expect_dim(id, 3, dim);
    return diag_powers(id, {-1, -1, -2});
  }
  if (id == "r4-n4") {
    expect_dim(id, 4, dim);
    return diag_powers(id, {-1, -1, -2, -3});
  }
  if (id == "r31-lambda5") {
    expect_dim(id, 3, dim);
    return diag_powers(id, {-1, -2, -3});
  }
  if (id == "r5-n5") {
    expect_dim(id, 5, dim);
    // g(e1) = t^-1 e1, g(e2) = t^-3 e4, g(e3) = t^-4 e5,
    // g(e4) = -e2 + t^-2 e4, g(e5) = -t^-1 e3 + t^-3 e5
    MatrixQt g(5, 5);
    g(0, 0) = tpow(-1);
    g(3, 1) = tpow(-3);
    g(4, 2) = tpow(-4);
    g(1, 3) = RationalFunction(-1);
    g(3, 3) = tpow(-2);
    g(2, 4) = -tpow(-1);
    g(4, 4) = tpow(-3);
    return BasisFamily(id, std::move(g));
  }
  if (id == "NF-F") {
    if (dim < 2) throw InvalidParams("NF-F needs n >= 2");
    std::vector<int> e{-1, -1};
    for (std::size_t i = 3; i <= dim; ++i) e.push_back(-static_cast<int>(i) + 1);
    return diag_powers(id, e);
  }
  if (id == "R-NF") {
    std::vector<int> e;
    for (std::size_t i = 1; i <= dim; ++i) e.push_back(-static_cast<int>(i));
    return diag_powers(id, e);
  }
  throw InvalidParams("unknown family id '" + id + "'");
}

std::vector<DegenerationCase> reference_cases() {
  std::vector<DegenerationCase> cases;
  auto add = [&](std::string name, AlgebraQ source, BasisFamily family, AlgebraQ target) {
    cases.push_back({std::move(name), std::move(source), std::move(family), std::move(target)});
  };
  auto nparams = [](long n) { return CatalogParams{n, {}, {}}; };
  auto aparams = [](const Rational& a) { return CatalogParams{{}, a, {}}; };

  add("r2 -> n2", build("r2"), reference_family("r2-n2", 2), build("n2"));
  add("r3 -> n3", build("r3"), reference_family("r3-n3", 3), build("n3"));
  add("r4 -> n4", build("r4"), reference_family("r4-n4", 4), build("n4"));
  add("r5 -> n5", build("r5"), reference_family("r5-n5", 5), build("n5"));
  for (long n = 3; n <= 6; ++n)
    add("NF" + std::to_string(n) + " -> F" + std::to_string(n), build("NF", nparams(n)),
        reference_family("NF-F", n), build("F", nparams(n)));
  for (long n = 3; n <= 6; ++n)
    add("R" + std::to_string(n) + " -> NF" + std::to_string(n), build("R_n", nparams(n)),
        reference_family("R-NF", n), build("NF", nparams(n)));
  for (const auto& a : alpha_samples())
    add("r32(" + a.to_string() + ") -> lambda4(" + a.to_string() + ")", build("r32", aparams(a)),
        reference_family("r32-lambda4", 3), build("lambda4", aparams(a)));
  add("r31 -> lambda5", build("r31"), reference_family("r31-lambda5", 3), build("lambda5"));

  const AlgebraQ a1 = build("abelian", nparams(1));
  for (long n = 3; n <= 5; ++n) {
    AlgebraQ src = build("RNF", nparams(n));
    BasisFamily fam = split_family(src, 1, ComplementPlacement::last);
    add("RNF" + std::to_string(n) + " -> NF" + std::to_string(n) + "+a1", std::move(src),
        std::move(fam), direct_sum(build("NF", nparams(n)), a1));
  }
  for (const auto& a : alpha_samples()) {
    AlgebraQ src = build("R1_4", aparams(a));
    BasisFamily fam = split_family(src, 1, ComplementPlacement::last);
    add("R1_4(alpha=" + a.to_string() + ") -> lambda4beta+a1", std::move(src), std::move(fam),
        direct_sum(build("lambda4beta", aparams(a)), a1));
  }
  {
    AlgebraQ src = build("R2_4");
    BasisFamily fam = split_family(src, 1, ComplementPlacement::last);
    add("R2_4 -> lambda5+a1", std::move(src), std::move(fam), direct_sum(build("lambda5"), a1));
  }
  {
    AlgebraQ src = build("R3_4");
    BasisFamily fam = split_family(src, 1, ComplementPlacement::last);
    add("R3_4 -> lambda6+a1", std::move(src), std::move(fam), direct_sum(build("lambda6"), a1));
  }
  return cases;
}

std::vector<std::pair<std::string, CatalogParams>> catalog_instances() {
  std::vector<std::pair<std::string, CatalogParams>> out;
  for (const auto& e : catalog_entries()) {
    if (e.params.rfind("n>=", 0) == 0) {
      for (long n = 2; n <= 6; ++n) {
        CatalogParams p{n, {}, {}};
        try {
          (void)build(e.key, p);
          out.emplace_back(e.key, p);
        } catch (const InvalidParams&) {
        }
      }
    } else if (e.params.find("alpha") != std::string::npos) {
      for (const auto& a : alpha_samples()) out.emplace_back(e.key, CatalogParams{{}, a, {}});
    } else {
      out.emplace_back(e.key, CatalogParams{});
    }
  }
  return out;
}

}  // namespace leibniz
