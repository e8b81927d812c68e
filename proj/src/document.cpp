#include "folinv/document.hpp"

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

namespace folinv {

namespace {

const std::map<std::string, std::set<std::string>> kKeys = {
    {"params", {}},
    {"foliation", {"P", "Q"}},
    {"divisor", {"zero", "pole"}},
    {"projective", {"A", "B", "C", "curve", "points"}},
};

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return true;
}

bool reserved(const std::string& name) { return name == "x" || name == "y" || name == "z"; }

Poly parse_entry(const InputDocument& doc, const std::string& section, const std::string& key, int arity,
                 const ParamMap& params) {
  const Entry* e = doc.find(section, key);
  if (!e) throw DocumentError(doc.source, 0, "missing key '" + key + "' in [" + section + "]");
  try {
    return parse_poly(e->value, arity, params);
  } catch (const ParseError& err) {
    throw DocumentError(doc.source, e->line,
                        "column " + std::to_string(e->column + static_cast<int>(err.position())) + ": " + err.what());
  }
}

} // namespace

const Entry* InputDocument::find(const std::string& section, const std::string& key) const {
  auto s = sections.find(section);
  if (s == sections.end()) return nullptr;
  auto k = s->second.find(key);
  return k == s->second.end() ? nullptr : &k->second;
}

InputDocument parse_document(std::string_view text, const std::string& source) {
  InputDocument doc;
  doc.source = source;
  std::string current;
  int lineno = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    ++lineno;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') throw DocumentError(source, lineno, "unterminated section header");
      current = trim(std::string_view(line).substr(1, line.size() - 2));
      if (current == "germ") current = "foliation";
      if (!kKeys.count(current)) throw DocumentError(source, lineno, "unknown section [" + current + "]");
      if (doc.sections.count(current)) throw DocumentError(source, lineno, "section [" + current + "] repeated");
      doc.sections[current];
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos) throw DocumentError(source, lineno, "expected 'key = value'");
    if (current.empty()) throw DocumentError(source, lineno, "key outside any section");
    std::string key = trim(std::string_view(line).substr(0, eq));
    std::string value = trim(std::string_view(line).substr(eq + 1));
    const auto& allowed = kKeys.at(current);
    if (current == "params") {
      if (!is_identifier(key) || reserved(key)) throw DocumentError(source, lineno, "invalid parameter name '" + key + "'");
    } else if (!allowed.count(key)) {
      throw DocumentError(source, lineno, "unknown key '" + key + "' in [" + current + "]");
    }
    if (value.empty()) throw DocumentError(source, lineno, "empty value for '" + key + "'");
    auto& sec = doc.sections[current];
    if (sec.count(key)) throw DocumentError(source, lineno, "key '" + key + "' repeated");
    const int column = static_cast<int>(raw.find(value)) + 1;
    sec[key] = {value, lineno, column};
  }
  return doc;
}

InputDocument load_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DocumentError(path.string(), 0, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path.string());
}

ParamMap resolve_params(const InputDocument& doc, const std::vector<std::string>& overrides) {
  ParamMap params;
  if (auto s = doc.sections.find("params"); s != doc.sections.end()) {
    for (const auto& [name, e] : s->second) {
      try {
        params[name] = parse_rational(e.value);
      } catch (const std::invalid_argument& err) {
        throw DocumentError(doc.source, e.line, err.what());
      }
    }
  }
  for (const auto& o : overrides) {
    auto eq = o.find('=');
    if (eq == std::string::npos) throw InvalidInput("--param expects name=rational, got '" + o + "'");
    std::string name = trim(std::string_view(o).substr(0, eq));
    if (!is_identifier(name) || reserved(name)) throw InvalidInput("invalid parameter name '" + name + "'");
    try {
      params[name] = parse_rational(o.substr(eq + 1));
    } catch (const std::invalid_argument& err) {
      throw InvalidInput(std::string("--param ") + name + ": " + err.what());
    }
  }
  return params;
}

GermInput germ_input(const InputDocument& doc, const ParamMap& params) {
  if (doc.has("projective")) throw DocumentError(doc.source, 0, "germ commands take a [foliation] block, not [projective]");
  if (!doc.has("foliation")) throw DocumentError(doc.source, 0, "missing [foliation] section");
  GermInput in;
  Poly P = parse_entry(doc, "foliation", "P", 2, params);
  Poly Q = parse_entry(doc, "foliation", "Q", 2, params);
  in.F = make_germ(P, Q);
  if (doc.has("divisor")) {
    Poly zero = parse_entry(doc, "divisor", "zero", 2, params);
    std::optional<Poly> pole;
    if (doc.find("divisor", "pole")) pole = parse_entry(doc, "divisor", "pole", 2, params);
    in.divisor = make_balanced(in.F, zero, pole);
  }
  return in;
}

ProjectiveInput projective_input(const InputDocument& doc, const ParamMap& params) {
  if (doc.has("foliation") || doc.has("divisor"))
    throw DocumentError(doc.source, 0, "projective commands take a [projective] block only");
  if (!doc.has("projective")) throw DocumentError(doc.source, 0, "missing [projective] section");
  ProjectiveInput in;
  Poly A = parse_entry(doc, "projective", "A", 3, params);
  Poly B = parse_entry(doc, "projective", "B", 3, params);
  Poly C = parse_entry(doc, "projective", "C", 3, params);
  in.W = make_projective(A, B, C);
  if (doc.find("projective", "curve")) in.curve = parse_entry(doc, "projective", "curve", 3, params);
  if (const Entry* e = doc.find("projective", "points")) {
    try {
      in.points = parse_points(e->value);
    } catch (const std::exception& err) {
      throw DocumentError(doc.source, e->line, err.what());
    }
  }
  return in;
}

std::vector<ProjectivePoint> parse_points(std::string_view text) {
  std::vector<ProjectivePoint> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string item = trim(text.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    if ((item.front() == '[' && item.back() == ']') || (item.front() == '(' && item.back() == ')'))
      item = item.substr(1, item.size() - 2);
    std::vector<std::string> parts;
    std::string cur;
    for (char c : item) {
      if (c == ':' || c == ',') {
        parts.push_back(trim(cur));
        cur.clear();
      } else {
        cur.push_back(c);
      }
    }
    parts.push_back(trim(cur));
    if (parts.size() != 3) throw InvalidInput("point '" + item + "' must have three coordinates");
    out.push_back(make_point(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2])));
  }
  return out;
}

} // namespace folinv
