#include "leibniz/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>

#include "leibniz/catalog.hpp"
#include "leibniz/io.hpp"

namespace leibniz {

bool SuiteReport::ok() const { return failures() == 0; }

std::size_t SuiteReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return !c.passed; }));
}

unsigned threads_from_env() {
  const char* v = std::getenv("LEIBNIZ_THREADS");
  if (!v || !*v) return 1;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (*end != '\0' || n < 1) return 1;
  return static_cast<unsigned>(std::min(n, 64L));
}

namespace {

using Checks = std::vector<CheckResult>;
using Group = std::function<Checks()>;

CheckResult expect(std::string group, std::string name, bool ok, std::string detail) {
  return {std::move(group), std::move(name), ok, std::move(detail)};
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

/// Catches library exceptions so one broken check cannot abort the suite.
Checks guarded(const std::string& group, const std::string& name, const Group& g) {
  try {
    return g();
  } catch (const std::exception& e) {
    return {expect(group, name, false, std::string("error: ") + e.what())};
  }
}

Checks catalog_checks() {
  Checks out;
  for (const auto& [key, p] : catalog_instances()) {
    const std::string ref = reference(key, p);
    const AlgebraQ a = build(key, p);
    const bool want = catalog_entry(key).leibniz;
    out.push_back(expect("catalog", (want ? "leibniz " : "non-leibniz ") + ref, is_leibniz(a) == want,
                         "defect " + std::string(is_leibniz(a) ? "zero" : "nonzero")));
  }
  for (const char* key : {"n3", "n4", "n5", "r3", "r4", "r5"}) {
    const bool lie = is_lie(build(key));
    out.push_back(expect("catalog", std::string("lie ") + key, lie, "is_lie " + yes_no(lie)));
  }
  std::vector<std::pair<std::string, AlgebraQ>> non_lie{
      {"lambda5", build("lambda5")}, {"lambda6", build("lambda6")}, {"n2", build("n2")}};
  for (const auto& a : alpha_samples())
    non_lie.emplace_back(reference("lambda4", {{}, a, {}}), build("lambda4", {{}, a, {}}));
  for (long n = 2; n <= 6; ++n) non_lie.emplace_back("NF@n=" + std::to_string(n), build("NF", {n, {}, {}}));
  for (const auto& [ref, a] : non_lie) {
    const bool lie = is_lie(a);
    out.push_back(expect("catalog", "non-lie " + ref, !lie, "is_lie " + yes_no(lie)));
  }

  std::vector<std::pair<std::string, CatalogParams>> nilpotent{
      {"n2", {}}, {"n3", {}}, {"n4", {}}, {"n5", {}}, {"lambda4quarter", {}},
      {"lambda5", {}}, {"lambda6", {}}, {"n3plus", {}}, {"n3minus", {}}};
  std::vector<std::pair<std::string, CatalogParams>> solvable{
      {"r2", {}}, {"r3", {}}, {"r4", {}}, {"r5", {}}, {"r31", {}}, {"R2_4", {}}, {"R3_4", {}}};
  for (long n = 3; n <= 6; ++n) {
    nilpotent.emplace_back("NF", CatalogParams{n, {}, {}});
    nilpotent.emplace_back("F", CatalogParams{n, {}, {}});
    solvable.emplace_back("RNF", CatalogParams{n, {}, {}});
    solvable.emplace_back("R_n", CatalogParams{n, {}, {}});
  }
  for (const auto& a : alpha_samples()) {
    nilpotent.emplace_back("lambda4", CatalogParams{{}, a, {}});
    nilpotent.emplace_back("lambda4beta", CatalogParams{{}, a, {}});
    solvable.emplace_back("r32", CatalogParams{{}, a, {}});
    solvable.emplace_back("R1_4", CatalogParams{{}, a, {}});
  }
  for (const auto& [key, p] : nilpotent) {
    const bool nil = is_nilpotent(build(key, p));
    out.push_back(expect("catalog", "nilpotent " + reference(key, p), nil, "nilpotent " + yes_no(nil)));
  }
  for (const auto& [key, p] : solvable) {
    const AlgebraQ a = build(key, p);
    const bool ok = is_solvable(a) && !is_nilpotent(a);
    out.push_back(expect("catalog", "solvable non-nilpotent " + reference(key, p), ok,
                         "solvable " + yes_no(is_solvable(a)) + ", nilpotent " + yes_no(is_nilpotent(a))));
  }
  return out;
}

Checks roundtrip_checks() {
  Checks out;
  for (const auto& [key, p] : catalog_instances()) {
    const AlgebraQ a = build(key, p);
    const AlgebraQ back = parse_algebra(serialize(a));
    const bool ok = back == a && back.label() == a.label();
    out.push_back(expect("file-format", "round trip " + reference(key, p), ok, ok ? "equal" : "differs"));
  }
  return out;
}

/// Transposed parametric matrix: the printed derivation forms list the
/// image of each basis vector as a row.
MatrixQ from_rows(const std::vector<std::vector<Rational>>& rows) {
  MatrixQ m(rows.size(), rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows.size(); ++c) m(c, r) = rows[r][c];
  return m;
}

CheckResult der_dim_check(const std::string& name, const AlgebraQ& a, std::size_t want) {
  const std::size_t got = derivation_space(a).dim();
  return expect("derivations", "dim Der " + name, got == want,
                "dim Der = " + std::to_string(got) + ", expected " + std::to_string(want));
}

/// Every matrix of the printed shape, for each unit choice of its free
/// parameters, is a derivation.
CheckResult der_shape_check(const std::string& name, const AlgebraQ& a,
                            const std::function<MatrixQ(const std::vector<Rational>&)>& shape,
                            std::size_t params) {
  for (std::size_t i = 0; i < params; ++i) {
    std::vector<Rational> v(params, Rational(0));
    v[i] = 1;
    if (!is_derivation(a, shape(v)))
      return expect("derivations", "printed form " + name, false,
                    "parameter " + std::to_string(i + 1) + " fails the derivation rule");
  }
  return expect("derivations", "printed form " + name, true,
                std::to_string(params) + " free parameters, each a derivation");
}

Checks derivation_checks() {
  Checks out;
  // a1, b2, a3, b3
  auto beta_form = [](const std::vector<Rational>& v) {
    return from_rows({{v[0], 0, v[2]}, {0, v[1], v[3]}, {0, 0, v[0] + v[1]}});
  };
  for (const auto& a : alpha_samples()) {
    const AlgebraQ alg = build("lambda4beta", {{}, a, {}});
    const std::string name = "lambda4beta@alpha=" + a.to_string();
    out.push_back(der_dim_check(name, alg, 4));
    out.push_back(der_shape_check(name, alg, beta_form, 4));
  }
  const AlgebraQ quarter = build("lambda4quarter");
  out.push_back(der_dim_check("lambda4quarter", quarter, 4));
  out.push_back(der_shape_check(
      "lambda4quarter", quarter,
      [](const std::vector<Rational>& v) {
        return from_rows({{v[0], v[1], v[2]}, {0, v[0], v[3]}, {0, 0, Rational(2) * v[0]}});
      },
      4));
  const AlgebraQ l5 = build("lambda5");
  out.push_back(der_dim_check("lambda5", l5, 4));
  out.push_back(der_shape_check("lambda5", l5, beta_form, 4));
  const AlgebraQ l6 = build("lambda6");
  out.push_back(der_dim_check("lambda6", l6, 3));
  out.push_back(der_shape_check(
      "lambda6", l6,
      [](const std::vector<Rational>& v) {
        return from_rows({{v[0], v[1], v[2]}, {0, Rational(2) * v[0], v[1]}, {0, 0, Rational(3) * v[0]}});
      },
      3));
  return out;
}

Checks basis_form_checks() {
  Checks out;
  for (const auto& a : alpha_samples()) {
    const AlgebraQ l4 = build("lambda4", {{}, a, {}});
    const AlgebraQ first = in_basis(l4, lambda4_first_change(a));
    const Rational b = -(Rational(1) + *discriminant_root(a)) / Rational(2);
    AlgebraQ want_first(3);
    want_first.set_coefficient(0, 0, 2, 1);
    want_first.set_coefficient(1, 0, 2, b);
    want_first.set_coefficient(0, 1, 2, Rational(1) + b);
    out.push_back(expect("basis-forms", "lambda4@alpha=" + a.to_string() + " first change",
                         first == want_first, first == want_first ? "table matches" : "table differs"));
    const AlgebraQ second = in_basis(l4, lambda4_beta_form_change(a));
    const AlgebraQ target = build("lambda4beta", {{}, a, {}});
    out.push_back(expect("basis-forms", "lambda4@alpha=" + a.to_string() + " beta' form",
                         second == target, second == target ? "table matches" : "table differs"));
  }
  const AlgebraQ q = in_basis(build("lambda4", {{}, Rational(mpz_class(1), mpz_class(4)), {}}),
                              lambda4_quarter_change());
  const bool ok = q == build("lambda4quarter");
  out.push_back(expect("basis-forms", "lambda4@alpha=1/4 quarter form", ok,
                       ok ? "table matches" : "table differs"));
  return out;
}

Checks degeneration_checks(const DegenerationCase& c) {
  Checks out;
  const Verdict v = verify_case(c);
  out.push_back(expect("degenerations", c.name, v.kind == VerdictKind::verified,
                       to_string(v) + " via " + c.family.label()));
  const ObstructionReport r = obstruction_battery(c.source, c.target);
  std::string first;
  for (const auto& chk : r.checks)
    if (chk.status == CheckStatus::obstructed) {
      first = chk.name;
      break;
    }
  out.push_back(expect("consistency", "battery " + c.name, !r.obstructed(),
                       first.empty() ? "no obstruction" : "obstructed by " + first));
  return out;
}

std::string render(const Vector<Rational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

Checks quarter_checks() {
  Checks out;
  std::vector<QuarterExtensionSample> fixed(2);
  fixed[1].a2 = 1;
  const std::vector<std::string> fixed_names{"zero tuple", "tuple (1,0,0,0,0,0)"};
  auto seeded = seeded_quarter_samples(kQuarterSamples, kQuarterSeed);
  const Vector<Rational> expected{0, 0, 0, -2};
  auto run = [&](const QuarterExtensionSample& s, const std::string& name) {
    const AlgebraQ a = quarter_extension(s);
    const auto d = defect_at(a, unit_vector<Rational>(4, 0), unit_vector<Rational>(4, 2),
                             unit_vector<Rational>(4, 1));
    Vector<Rational> residual(4);
    for (std::size_t k = 0; k < 4; ++k) residual[k] = -d[k];
    out.push_back(expect("lambda4-quarter-extension", name, residual == expected,
                         "residual at (x,f2,f1) = " + render(residual)));
  };
  for (std::size_t i = 0; i < fixed.size(); ++i) run(fixed[i], fixed_names[i]);
  for (std::size_t i = 0; i < seeded.size(); ++i)
    run(seeded[i], "seeded sample " + std::to_string(i + 1) + "/" + std::to_string(seeded.size()));
  return out;
}

Checks solvable4_checks() {
  Checks out;
  const std::string g = "solvable-4d";
  struct Item {
    std::string name;
    AlgebraQ algebra;
    AlgebraQ nilradical;
  };
  std::vector<Item> items;
  for (const auto& a : alpha_samples())
    items.push_back({"R1_4@alpha=" + a.to_string(), build("R1_4", {{}, a, {}}),
                     build("lambda4beta", {{}, a, {}})});
  items.push_back({"R2_4", build("R2_4"), build("lambda5")});
  items.push_back({"R3_4", build("R3_4"), build("lambda6")});

  const SubspaceQ first3 = SubspaceQ::coordinate(4, {0, 1, 2});
  for (const auto& it : items) {
    const bool leib = is_leibniz(it.algebra);
    const bool solv = is_solvable(it.algebra) && !is_nilpotent(it.algebra);
    out.push_back(expect(g, it.name + " leibniz, solvable, non-nilpotent", leib && solv,
                         "leibniz " + yes_no(leib) + ", solvable non-nilpotent " + yes_no(solv)));
    const NilradicalVerdict v = verify_nilradical(it.algebra, first3);
    const auto found = find_nilradical(it.algebra);
    const bool same = v == NilradicalVerdict::exact && found && *found == first3 &&
                      restrict_to(it.algebra, first3) == it.nilradical;
    out.push_back(expect(g, it.name + " nilradical", same,
                         std::string("span(e1,e2,e3) ") + to_string(v) + ", restriction " +
                             (restrict_to(it.algebra, first3) == it.nilradical ? "equals " : "differs from ") +
                             it.nilradical.label()));
  }
  // Pairwise distinctness of R1_4(beta), R2_4, R3_4 at each sample.
  const std::size_t ones = items.size() - 2;
  for (std::size_t i = 0; i < ones; ++i) {
    const std::vector<const Item*> trio{&items[i], &items[ones], &items[ones + 1]};
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = x + 1; y < 3; ++y) {
        const Distinction d = distinguish(trio[x]->algebra, trio[y]->algebra);
        const bool ok = d.verdict == Isomorphism::non_isomorphic;
        out.push_back(expect(g, trio[x]->name + " vs " + trio[y]->name, ok,
                             ok ? "NON_ISOMORPHIC by " + d.field + " (" + d.left_value + " vs " + d.right_value + ")"
                                : "INCONCLUSIVE"));
      }
  }
  return out;
}

Checks obstruction_checks(long n) {
  Checks out;
  const std::string g = "obstructions";
  const AlgebraQ src = n == 2 ? build("n2") : direct_sum(build("n2"), build("abelian", {n - 2, {}, {}}));
  const std::string sname = "n2+a" + std::to_string(n - 2);
  {
    const auto r = obstruction_battery(src, build("pnplus", {n, {}, {}}));
    const auto* c = r.find("lcs[2]");
    const bool ok = c && c->status == CheckStatus::obstructed && c->source_value == "1" &&
                    c->target_value == std::to_string(n - 1);
    out.push_back(expect(g, sname + " -/-> p" + std::to_string(n) + "plus", ok,
                         c ? std::string(to_string(c->status)) + " by dim L^2 (" + c->source_value + " vs " +
                                 c->target_value + ")"
                           : "lcs[2] check missing"));
  }
  {
    const auto r = obstruction_battery(src, build("n3plus", {n, {}, {}}));
    const auto* c = r.find("der_dim");
    const bool ok = c && c->status == CheckStatus::obstructed;
    out.push_back(expect(g, sname + " -/-> n3plus+a" + std::to_string(n - 3), ok,
                         c ? std::string(to_string(c->status)) + " by dim Der (" + c->source_value + " vs " +
                                 c->target_value + ")"
                           : "der_dim check missing"));
  }
  return out;
}

}  // namespace

SuiteReport run_verification_suite(unsigned threads) {
  std::vector<std::pair<std::string, Group>> groups;
  groups.emplace_back("catalog", catalog_checks);
  groups.emplace_back("file-format", roundtrip_checks);
  groups.emplace_back("derivations", derivation_checks);
  groups.emplace_back("basis-forms", basis_form_checks);
  {
    // Built once up front: cases are shared read-only by the workers.
    auto cases = std::make_shared<std::vector<DegenerationCase>>(reference_cases());
    for (std::size_t i = 0; i < cases->size(); ++i)
      groups.emplace_back("degenerations", [cases, i] { return degeneration_checks((*cases)[i]); });
  }
  groups.emplace_back("lambda4-quarter-extension", quarter_checks);
  groups.emplace_back("solvable-4d", solvable4_checks);
  for (long n = 3; n <= 6; ++n) groups.emplace_back("obstructions", [n] { return obstruction_checks(n); });

  std::vector<Checks> results(groups.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < groups.size();)
      results[i] = guarded(groups[i].first, groups[i].first + " #" + std::to_string(i), groups[i].second);
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(groups.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
  }

  SuiteReport report;
  for (auto& r : results)
    for (auto& c : r) report.checks.push_back(std::move(c));
  return report;
}

}  // namespace leibniz
