#include "compositum/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "compositum/error.hpp"

namespace compositum {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

[[noreturn]] void parse_error(std::size_t line, const std::string& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::size_t parse_degree(std::string_view line, std::size_t lineno) {
  constexpr std::string_view kw = "degree";
  if (line.substr(0, kw.size()) != kw) parse_error(lineno, "expected 'degree n'");
  const std::string_view rest = trim(line.substr(kw.size()));
  if (rest.empty() || rest.size() > 5) parse_error(lineno, "bad degree");
  std::size_t n = 0;
  for (char c : rest) {
    if (!std::isdigit(static_cast<unsigned char>(c))) parse_error(lineno, "bad degree");
    n = n * 10 + static_cast<std::size_t>(c - '0');
  }
  if (n == 0 || n > 65535) parse_error(lineno, "degree out of range");
  return n;
}

}  // namespace

std::vector<PermGroup> parse_group_specs(std::string_view text, const Caps& caps) {
  std::vector<PermGroup> out;
  std::size_t degree = 0;  // 0: between blocks
  std::vector<Permutation> gens;
  auto finish = [&] {
    if (degree) out.push_back(PermGroup::generated(degree, gens, caps.closure));
    degree = 0;
    gens.clear();
  };
  std::size_t lineno = 0;
  while (!text.empty() || degree) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++lineno;
    if (!line.empty() && line.front() == '#') continue;
    if (line.empty()) {
      finish();
      if (text.empty()) break;
      continue;
    }
    if (!degree) {
      degree = parse_degree(line, lineno);
      continue;
    }
    try {
      gens.push_back(Permutation::from_cycles(line, degree));
    } catch (const Error& e) {
      fail(e.kind(), "line " + std::to_string(lineno) + ": " + e.detail());
    }
  }
  finish();
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorKind::ParseError, "cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<PermGroup> read_group_file(const std::filesystem::path& path, const Caps& caps) {
  try {
    return parse_group_specs(read_text_file(path), caps);
  } catch (const Error& e) {
    fail(e.kind(), path.string() + ": " + e.detail());
  }
}

std::string format_group_spec(const PermGroup& g) { return g.to_spec(); }

std::vector<AlgebraicNumber> FieldFile::values() const {
  std::vector<AlgebraicNumber> v;
  for (const auto& [name, a] : elements) v.push_back(a);
  return v;
}

namespace {

using Json = nlohmann::ordered_json;

Rational json_rational(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  fail(ErrorKind::ParseError, where + ": expected an integer or a \"p/q\" string, got " + j.dump());
}

RationalPoly json_poly(const Json& j, const std::string& where) {
  if (!j.is_array()) fail(ErrorKind::ParseError, where + ": expected an array of rationals");
  std::vector<Rational> c;
  for (const auto& x : j) c.push_back(json_rational(x, where));
  return RationalPoly(std::move(c));
}

}  // namespace

FieldFile parse_field_spec(std::string_view json_text, bool assert_irreducible) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::ParseError, e.what());
  }
  if (!j.is_object()) fail(ErrorKind::ParseError, "field spec must be an object");
  if (!j.contains("min_poly")) fail(ErrorKind::ParseError, "field spec lacks min_poly");
  std::string label = "F";
  if (j.contains("label")) {
    if (!j["label"].is_string()) fail(ErrorKind::ParseError, "label must be a string");
    label = j["label"].get<std::string>();
  }
  NumberFieldSpec field(label, json_poly(j["min_poly"], "min_poly"), assert_irreducible);
  FieldFile out{field, {}};
  if (j.contains("elements")) {
    if (!j["elements"].is_object()) fail(ErrorKind::ParseError, "elements must be an object");
    for (const auto& [name, value] : j["elements"].items()) {
      const RationalPoly r = json_poly(value, "element " + name);
      if (r.degree() >= static_cast<int>(field.degree())) {
        fail(ErrorKind::ParseError, "element " + name + " has more coefficients than the degree");
      }
      out.elements.emplace_back(name, AlgebraicNumber(field, r));
    }
  }
  return out;
}

FieldFile read_field_file(const std::filesystem::path& path, bool assert_irreducible) {
  try {
    return parse_field_spec(read_text_file(path), assert_irreducible);
  } catch (const Error& e) {
    fail(e.kind(), path.string() + ": " + e.detail());
  }
}

}  // namespace compositum
