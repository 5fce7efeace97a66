#include "leibniz/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"
#include "leibniz/scalar.hpp"

namespace leibniz {
namespace {

using nlohmann::json;

std::string quoted(const std::string& s) { return json(s).dump(); }

template <Field F>
std::string serialize_table(const Algebra<F>& a, const char* field) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << a.dim() << ",\n  \"field\": " << quoted(field)
      << ",\n  \"label\": " << quoted(a.label()) << ",\n  \"table\": [";
  bool first = true;
  // Table keys are ordered by (i, j), so entries come out sorted by (i, j, k).
  for (const auto& [key, v] : a.table())
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (v[k].is_zero()) continue;
      out << (first ? "\n" : ",\n") << "    {\"i\": " << key.first + 1 << ", \"j\": " << key.second + 1
          << ", \"k\": " << k + 1 << ", \"c\": " << quoted(to_string(v[k])) << "}";
      first = false;
    }
  out << (first ? "]\n}\n" : "\n  ]\n}\n");
  return out.str();
}

/// Line and column (1-based) of a byte offset.
std::pair<std::size_t, std::size_t> position(std::string_view text, std::size_t offset) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // byte is the 1-based index of the offending character.
    const auto [line, col] = position(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw ParseError(msg, line, col);
  }
}

[[noreturn]] void fail(const std::string& where, const std::string& msg) {
  throw ParseError(msg, 0, 0, where);
}

const json& member(const json& obj, const std::string& where, const char* key) {
  if (!obj.is_object()) fail(where.empty() ? "/" : where, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) fail(where.empty() ? "/" : where, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t positive_int(const json& v, const std::string& where, std::size_t max) {
  if (!v.is_number_integer()) fail(where, "expected an integer");
  const auto x = v.get<long long>();
  if (x < 1 || static_cast<unsigned long long>(x) > max)
    fail(where, "out of range 1.." + std::to_string(max));
  return static_cast<std::size_t>(x);
}

std::string string_value(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "expected a string");
  return v.get<std::string>();
}

template <Field F>
F scalar_value(const json& v, const std::string& where) {
  if (v.is_number_integer()) return F(Rational(mpz_class(std::to_string(v.get<long long>()))));
  const std::string s = string_value(v, where);
  try {
    return parse_scalar<F>(s);
  } catch (const ParseError& e) {
    fail(where, std::string("bad scalar: ") + e.what());
  } catch (const DivisionByZero&) {
    fail(where, "bad scalar: division by zero");
  }
}

constexpr std::size_t kMaxDim = 64;

template <Field F>
Algebra<F> parse_table(std::string_view text, bool allow_qt) {
  const json doc = parse_document(text);
  const std::size_t n = positive_int(member(doc, "", "dim"), "/dim", kMaxDim);
  const std::string field = string_value(member(doc, "", "field"), "/field");
  if (field != "Q" && field != "Q(t)") fail("/field", "expected \"Q\" or \"Q(t)\"");
  if (field == "Q(t)" && !allow_qt) fail("/field", "a rational algebra (field \"Q\") is required here");
  std::string label;
  if (doc.contains("label")) label = string_value(doc["label"], "/label");
  const json& table = member(doc, "", "table");
  if (!table.is_array()) fail("/table", "expected an array");

  Algebra<F> a(n, label);
  std::set<std::array<std::size_t, 3>> seen;
  for (std::size_t idx = 0; idx < table.size(); ++idx) {
    const std::string at = "/table/" + std::to_string(idx);
    const json& e = table[idx];
    const std::size_t i = positive_int(member(e, at, "i"), at + "/i", n);
    const std::size_t j = positive_int(member(e, at, "j"), at + "/j", n);
    const std::size_t k = positive_int(member(e, at, "k"), at + "/k", n);
    F c = scalar_value<F>(member(e, at, "c"), at + "/c");
    if (!seen.insert({i, j, k}).second)
      fail(at, "duplicate entry (" + std::to_string(i) + "," + std::to_string(j) + "," +
                   std::to_string(k) + ")");
    a.set_coefficient(i - 1, j - 1, k - 1, c);
  }
  return a;
}

}  // namespace

std::string serialize(const AlgebraQ& a) { return serialize_table(a, "Q"); }
std::string serialize(const AlgebraQt& a) { return serialize_table(a, "Q(t)"); }

std::string serialize(const BasisFamily& f) {
  std::ostringstream out;
  out << "{\n  \"dim\": " << f.dim() << ",\n  \"label\": " << quoted(f.label()) << ",\n  \"matrix\": [";
  for (std::size_t r = 0; r < f.dim(); ++r) {
    out << (r ? ",\n    [" : "\n    [");
    for (std::size_t c = 0; c < f.dim(); ++c)
      out << (c ? ", " : "") << quoted(to_string(f.matrix()(r, c)));
    out << "]";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

AlgebraQ parse_algebra(std::string_view text) { return parse_table<Rational>(text, false); }

AlgebraQt parse_algebra_qt(std::string_view text) {
  return parse_table<RationalFunction>(text, true);
}

BasisFamily parse_family(std::string_view text) {
  const json doc = parse_document(text);
  const std::size_t n = positive_int(member(doc, "", "dim"), "/dim", kMaxDim);
  std::string label = "family";
  if (doc.contains("label")) label = string_value(doc["label"], "/label");
  const json& rows = member(doc, "", "matrix");
  if (!rows.is_array() || rows.size() != n) fail("/matrix", "expected " + std::to_string(n) + " rows");
  MatrixQt g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const std::string at = "/matrix/" + std::to_string(r);
    if (!rows[r].is_array() || rows[r].size() != n)
      fail(at, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c)
      g(r, c) = scalar_value<RationalFunction>(rows[r][c], at + "/" + std::to_string(c));
  }
  try {
    return BasisFamily(label, std::move(g));
  } catch (const SingularMatrix&) {
    fail("/matrix", "matrix is singular over Q(t)");
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace leibniz
