#include "commands.hpp"

#include <sstream>

#include "leibniz/io.hpp"
#include "leibniz/verify.hpp"
#include "refs.hpp"

namespace leibniz::cli {
namespace {

using nlohmann::ordered_json;

std::string render_dims(const std::vector<std::size_t>& dims) { return leibniz::render_dims(dims); }

template <Field F>
std::string render_vector(const Vector<F>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].is_zero()) continue;
    const std::string c = to_string(v[k]);
    const std::string e = "e" + std::to_string(k + 1);
    std::string term;
    if (c == "1") term = e;
    else if (c == "-1") term = "-" + e;
    else if (c.find(' ') == std::string::npos) term = c + "*" + e;
    else term = "(" + c + ")*" + e;
    if (out.empty()) out = term;
    else if (term.front() == '-') out += " - " + term.substr(1);
    else out += " + " + term;
  }
  return out.empty() ? "0" : out;
}

template <Field F>
std::string table_text(const Algebra<F>& a, const std::string& indent = "  ") {
  std::string out;
  for (const auto& [key, v] : a.table())
    out += indent + "[e" + std::to_string(key.first + 1) + ",e" + std::to_string(key.second + 1) +
           "] = " + render_vector(v) + "\n";
  if (out.empty()) out = indent + "(all products zero)\n";
  return out;
}

template <Field F>
ordered_json table_json(const Algebra<F>& a) {
  ordered_json arr = ordered_json::array();
  for (const auto& [key, v] : a.table())
    for (std::size_t k = 0; k < v.size(); ++k)
      if (!v[k].is_zero())
        arr.push_back({{"i", key.first + 1}, {"j", key.second + 1}, {"k", k + 1}, {"c", to_string(v[k])}});
  return arr;
}

ordered_json algebra_input(const std::string& ref, const AlgebraQ& a) {
  return {{"ref", ref}, {"label", a.label()}, {"dim", a.dim()}};
}

std::string input_line(const std::string& role, const std::string& ref, const AlgebraQ& a) {
  return role + ": " + ref + " (" + a.label() + ", dim " + std::to_string(a.dim()) + ")\n";
}

std::string matrix_text(const MatrixQ& m, const std::string& indent) {
  std::vector<std::vector<std::string>> cells(m.rows(), std::vector<std::string>(m.cols()));
  std::size_t width = 1;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      cells[r][c] = m(r, c).to_string();
      width = std::max(width, cells[r][c].size());
    }
  std::string out;
  for (const auto& row : cells) {
    out += indent + "[";
    for (std::size_t c = 0; c < row.size(); ++c)
      out += (c ? " " : "") + std::string(width - row[c].size(), ' ') + row[c];
    out += "]\n";
  }
  return out;
}

ordered_json matrix_json(const MatrixQ& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    ordered_json row = ordered_json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
    rows.push_back(row);
  }
  return rows;
}

}  // namespace

std::string Report::render(Format f) const {
  if (f == Format::structured) {
    ordered_json doc;
    doc["command"] = command;
    doc["inputs"] = inputs;
    doc["results"] = results;
    doc["status"] = ok ? "OK" : "FAIL";
    return doc.dump(2) + "\n";
  }
  return text + "status: " + (ok ? "OK" : "FAIL") + "\n";
}

Report cmd_catalog_list() {
  Report r;
  r.command = "catalog list";
  ordered_json entries = ordered_json::array();
  std::size_t width = 0;
  for (const auto& e : catalog_entries()) width = std::max(width, e.key.size());
  for (const auto& e : catalog_entries()) {
    entries.push_back({{"key", e.key}, {"params", e.params}, {"description", e.description}});
    r.text += e.key + std::string(width - e.key.size() + 2, ' ') + e.description;
    if (!e.params.empty()) r.text += "  [" + e.params + "]";
    r.text += "\n";
  }
  r.results["entries"] = entries;
  return r;
}

Report cmd_catalog_show(const std::string& ref) {
  const AlgebraQ a = resolve_algebra(ref);
  Report r;
  r.command = "catalog show";
  r.inputs["algebra"] = algebra_input(ref, a);
  r.results["table"] = table_json(a);
  r.text = input_line("algebra", ref, a) + table_text(a);
  return r;
}

std::string cmd_catalog_export(const std::string& ref) { return serialize(resolve_algebra(ref)); }

Report cmd_check(const std::string& ref) {
  const AlgebraQ a = resolve_algebra(ref);
  Report r;
  r.command = "check";
  r.inputs["algebra"] = algebra_input(ref, a);

  const bool leibniz = is_leibniz(a);
  const auto lcs = lower_central_series(a);
  const auto ds = derived_series(a);
  ordered_json& res = r.results;
  res["leibniz"] = leibniz;
  res["lie"] = is_lie(a);
  res["commutative"] = is_commutative(a);
  res["skew_symmetric"] = is_skew_symmetric(a);
  res["nilpotent"] = lcs.back() == 0;
  res["solvable"] = ds.back() == 0;
  res["lcs_dims"] = lcs;
  res["derived_dims"] = ds;
  res["lann_dim"] = left_annihilator(a).dim();
  res["rann_dim"] = right_annihilator(a).dim();
  res["center_dim"] = center(a).dim();
  res["der_dim"] = derivation_space(a).dim();
  res["orbit_dim"] = orbit_dim(a);
  if (!leibniz) {
    const auto defect = leibniz_defect(a);
    const auto& [triple, v] = *defect.begin();
    res["first_defect"] = {{"x", triple[0] + 1}, {"y", triple[1] + 1}, {"z", triple[2] + 1},
                           {"value", render_vector(v)}};
  }

  std::ostringstream t;
  t << input_line("algebra", ref, a);
  for (const auto& [k, v] : res.items()) {
    if (k == "first_defect") {
      t << "first_defect: (e" << v["x"].get<std::size_t>() << ",e" << v["y"].get<std::size_t>() << ",e"
        << v["z"].get<std::size_t>() << ") -> " << v["value"].get<std::string>() << "\n";
    } else if (v.is_array()) {
      t << k << ": " << render_dims(v.get<std::vector<std::size_t>>()) << "\n";
    } else {
      t << k << ": " << v.dump() << "\n";
    }
  }
  r.text = t.str();
  r.ok = leibniz;
  return r;
}

Report cmd_der(const std::string& ref) {
  const AlgebraQ a = resolve_algebra(ref);
  Report r;
  r.command = "der";
  r.inputs["algebra"] = algebra_input(ref, a);
  const DerivationSpace der = derivation_space(a);
  r.results["der_dim"] = der.dim();
  r.results["orbit_dim"] = orbit_dim(a);
  ordered_json basis = ordered_json::array();
  std::string body;
  for (std::size_t i = 0; i < der.basis.size(); ++i) {
    basis.push_back(matrix_json(der.basis[i]));
    body += "  D" + std::to_string(i + 1) + " (column j = D(e_j)):\n" + matrix_text(der.basis[i], "    ");
  }
  r.results["basis"] = basis;
  r.text = input_line("algebra", ref, a) + "der_dim: " + std::to_string(der.dim()) +
           "\norbit_dim: " + std::to_string(orbit_dim(a)) + "\nbasis:\n" + body;
  return r;
}

Report cmd_degenerate(const std::string& source_ref, const std::string& family_ref,
                      const std::string& target_ref) {
  const AlgebraQ source = resolve_algebra(source_ref);
  const AlgebraQ target = resolve_algebra(target_ref);
  if (source.dim() != target.dim())
    throw UsageError("source has dimension " + std::to_string(source.dim()) + ", target " +
                     std::to_string(target.dim()));
  BasisFamily family = resolve_family(family_ref, source);
  const std::string family_label = family.label();
  Report r;
  r.command = "degenerate";
  r.inputs["source"] = algebra_input(source_ref, source);
  r.inputs["family"] = {{"ref", family_ref}, {"label", family_label}};
  r.inputs["target"] = algebra_input(target_ref, target);

  DegenerationCase c{source.label() + " -> " + target.label(), source, std::move(family), target};
  std::optional<CaseOutcome> run;
  try {
    run = run_case(c);
  } catch (const NonLeibnizLimit&) {
    r.results["verdict"] = "NON_LEIBNIZ_LIMIT";
    r.text = input_line("source", source_ref, source) + "family: " + family_ref + "\n" +
             input_line("target", target_ref, target) + "verdict: NON_LEIBNIZ_LIMIT\n";
    r.ok = false;
    return r;
  }
  const CaseOutcome& out = *run;
  std::string family_text;
  for (std::size_t j = 0; j < c.family.dim(); ++j) {
    Vector<RationalFunction> col(c.family.dim());
    for (std::size_t i = 0; i < c.family.dim(); ++i) col[i] = c.family.matrix()(i, j);
    family_text += "  g(e" + std::to_string(j + 1) + ") = " + render_vector(col) + "\n";
  }
  r.results["verdict"] = to_string(out.verdict);
  r.results["transformed"] = table_json(out.transformed);
  if (out.limit) r.results["limit"] = table_json(*out.limit);
  std::string text = input_line("source", source_ref, source) + "family: " + family_ref + "\n" + family_text +
                     input_line("target", target_ref, target) + "transformed (over Q(t)):\n" +
                     table_text(out.transformed);
  if (out.limit) text += "limit at t=0:\n" + table_text(*out.limit);
  text += "verdict: " + to_string(out.verdict) + "\n";
  r.text = text;
  r.ok = out.verdict.kind == VerdictKind::verified;
  return r;
}

Report cmd_obstruct(const std::string& source_ref, const std::string& target_ref) {
  const AlgebraQ source = resolve_algebra(source_ref);
  const AlgebraQ target = resolve_algebra(target_ref);
  if (source.dim() != target.dim())
    throw UsageError("source has dimension " + std::to_string(source.dim()) + ", target " +
                     std::to_string(target.dim()));
  const ObstructionReport rep = obstruction_battery(source, target);
  Report r;
  r.command = "obstruct";
  r.inputs["source"] = algebra_input(source_ref, source);
  r.inputs["target"] = algebra_input(target_ref, target);
  ordered_json checks = ordered_json::array();
  std::size_t wn = 4, wd = 9, ws = 6, wt = 6;
  for (const auto& c : rep.checks) {
    wn = std::max(wn, c.name.size());
    wd = std::max(wd, c.direction.size());
    ws = std::max(ws, c.source_value.size());
    wt = std::max(wt, c.target_value.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::string text = input_line("source", source_ref, source) + input_line("target", target_ref, target) +
                     pad("rule", 4) + pad("name", wn) + pad("condition", wd) + pad("source", ws) +
                     pad("target", wt) + "status\n";
  std::size_t obstructed = 0;
  for (const auto& c : rep.checks) {
    checks.push_back({{"rule", c.rule},
                      {"name", c.name},
                      {"condition", c.direction},
                      {"source", c.source_value},
                      {"target", c.target_value},
                      {"status", to_string(c.status)}});
    text += pad(c.rule, 4) + pad(c.name, wn) + pad(c.direction, wd) + pad(c.source_value, ws) +
            pad(c.target_value, wt) + to_string(c.status) + "\n";
    if (c.status == CheckStatus::obstructed) ++obstructed;
  }
  r.results["checks"] = checks;
  r.results["obstructed"] = obstructed;
  r.results["verdict"] = obstructed ? "OBSTRUCTED" : "NO_OBSTRUCTION";
  text += std::string("verdict: ") + (obstructed ? "OBSTRUCTED" : "NO_OBSTRUCTION") + "\n";
  r.text = text;
  r.ok = obstructed == 0;
  return r;
}

Report cmd_verify_paper(unsigned threads) {
  const SuiteReport suite = run_verification_suite(threads);
  Report r;
  r.command = "verify-paper";
  ordered_json checks = ordered_json::array();
  std::string text;
  std::string group;
  for (const auto& c : suite.checks) {
    checks.push_back({{"group", c.group}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    if (c.group != group) {
      group = c.group;
      text += "== " + group + "\n";
    }
    text += std::string(c.passed ? "PASS  " : "FAIL  ") + c.name + "  (" + c.detail + ")\n";
  }
  r.results["checks"] = checks;
  r.results["total"] = suite.checks.size();
  r.results["failed"] = suite.failures();
  text += std::to_string(suite.checks.size() - suite.failures()) + "/" + std::to_string(suite.checks.size()) +
          " checks passed\n";
  r.text = text;
  r.ok = suite.ok();
  return r;
}

}  // namespace leibniz::cli
