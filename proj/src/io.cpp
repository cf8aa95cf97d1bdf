#include "legendrian/io.hpp"

#include <cctype>
#include <set>

#include "json.hpp"
#include "legendrian/errors.hpp"

namespace legendrian {

namespace {

using nlohmann::json;

std::pair<int, int> line_column(std::string_view text, std::size_t offset) {
  int line = 1, column = 1;
  for (std::size_t k = 0; k < offset && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      column = 1;
    } else if ((static_cast<unsigned char>(text[k]) & 0xC0) != 0x80) {
      ++column;
    }
  }
  return {line, column};
}

// nlohmann keeps no source positions for values, so semantic errors are pinned to the first
// occurrence of the offending value's serialized text (start of input when not found).
[[noreturn]] void fail_at(std::string_view text, const json& value, const std::string& path,
                          const std::string& what, std::size_t inner_offset = 0) {
  const std::string needle = value.dump();
  const std::size_t at = text.find(needle);
  const auto [line, column] = line_column(text, at == std::string_view::npos ? 0 : at + inner_offset);
  throw ParseError("curve document " + path + ": " + what, line, column);
}

int require_int(std::string_view text, const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) fail_at(text, obj, path, std::string("missing key \"") + key + "\"");
  const json& v = obj.at(key);
  if (!v.is_number_integer()) fail_at(text, v, path + "/" + key, "expected an integer");
  const auto x = v.get<std::int64_t>();
  if (x < 0 || x > 1'000'000) fail_at(text, v, path + "/" + key, "integer out of range");
  return static_cast<int>(x);
}

void reject_unknown_keys(std::string_view text, const json& obj, const std::string& path,
                         std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) fail_at(text, json(key), path, "unknown key \"" + key + "\"");
  }
}

// Parser state for germ expressions: code points with their 1-based columns.
struct Cursor {
  std::vector<std::pair<char, int>> chars;
  std::size_t pos = 0;
  int end_column = 1;

  bool done() const { return pos >= chars.size(); }
  char peek() const { return done() ? '\0' : chars[pos].first; }
  int column() const { return done() ? end_column : chars[pos].second; }
  void skip_space() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError("germ expression: " + what, 1, column()); }

  std::string digits() {
    std::string out;
    while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) out.push_back(chars[pos++].first);
    if (out.empty()) fail("expected digit");
    return out;
  }
};

Cursor decode(std::string_view text) {
  Cursor cur;
  int column = 1;
  for (std::size_t k = 0; k < text.size();) {
    const auto b = static_cast<unsigned char>(text[k]);
    if (b < 0x80) {
      cur.chars.emplace_back(static_cast<char>(b), column);
      ++k;
    } else if (text.substr(k, 3) == "\xE2\x88\x92") {
      cur.chars.emplace_back('-', column);
      k += 3;
    } else {
      throw ParseError("germ expression: unsupported character", 1, column);
    }
    ++column;
  }
  cur.end_column = column;
  return cur;
}

}  // namespace

CurveDocument parse_curve_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    std::string what = e.what();
    if (const auto cut = what.find(": syntax error"); cut != std::string::npos) what = what.substr(cut + 2);
    throw ParseError("malformed JSON: " + what, line, column);
  }
  if (!doc.is_object()) fail_at(text, doc, "", "expected an object");
  reject_unknown_keys(text, doc, "", {"n", "terms", "precision"});
  CurveDocument out;
  out.n = require_int(text, doc, "n", "");
  if (doc.contains("precision")) out.precision = require_int(text, doc, "precision", "");
  if (!doc.contains("terms") || !doc.at("terms").is_array()) fail_at(text, doc, "/terms", "expected an array");
  const json& terms = doc.at("terms");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const std::string path = "/terms/" + std::to_string(k);
    const json& t = terms[k];
    if (!t.is_object()) fail_at(text, t, path, "expected an object");
    reject_unknown_keys(text, t, path, {"e", "c"});
    const int e = require_int(text, t, "e", path);
    if (!t.contains("c") || !t.at("c").is_string()) fail_at(text, t, path + "/c", "expected a rational string");
    Rational c;
    try {
      c = Rational::parse(t.at("c").get<std::string>());
    } catch (const ParseError& pe) {
      fail_at(text, t.at("c"), path + "/c", "malformed rational \"" + t.at("c").get<std::string>() + "\"",
              static_cast<std::size_t>(pe.column()));
    }
    if (!out.terms.empty() && out.terms.back().first >= e) {
      fail_at(text, t, path + "/e", "terms must be sorted strictly by exponent");
    }
    out.terms.emplace_back(e, std::move(c));
  }
  return out;
}

std::string write_curve_document(const CurveDocument& doc) {
  nlohmann::ordered_json out;
  out["n"] = doc.n;
  out["terms"] = nlohmann::ordered_json::array();
  for (const auto& [e, c] : doc.terms) {
    nlohmann::ordered_json t;
    t["e"] = e;
    t["c"] = c.to_string();
    out["terms"].push_back(std::move(t));
  }
  if (doc.precision >= 0) out["precision"] = doc.precision;
  return out.dump(2) + "\n";
}

PlaneCurveGerm to_curve(const CurveDocument& doc) {
  PlaneCurveGerm::Coefficients coeffs;
  for (const auto& [e, c] : doc.terms) coeffs.emplace(e, c);
  return PlaneCurveGerm(doc.n, coeffs, doc.precision);
}

CurveDocument from_curve(const PlaneCurveGerm& c) {
  CurveDocument doc;
  doc.n = c.n();
  for (const auto& [e, a] : c.coefficients()) doc.terms.emplace_back(e, a);
  doc.precision = c.accuracy();
  return doc;
}

GermPolynomial parse_germ_expression(std::string_view text) {
  Cursor cur = decode(text);
  GermPolynomial out;
  cur.skip_space();
  if (cur.done()) cur.fail("empty expression");
  int sign = 1;
  if (cur.peek() == '+' || cur.peek() == '-') {
    sign = cur.peek() == '-' ? -1 : 1;
    ++cur.pos;
  }
  while (true) {
    cur.skip_space();
    bool any = false;
    Rational coeff(1);
    if (std::isdigit(static_cast<unsigned char>(cur.peek()))) {
      const mpz_class num(cur.digits(), 10);
      mpz_class den = 1;
      if (cur.peek() == '/') {
        ++cur.pos;
        const int col = cur.column();
        den = mpz_class(cur.digits(), 10);
        if (den == 0) throw ParseError("germ expression: zero denominator", 1, col);
      }
      coeff = Rational(num, den);
      any = true;
    }
    Monomial J;
    while (true) {
      cur.skip_space();
      const char v = cur.peek();
      if (v != 'x' && v != 'y' && v != 'p') break;
      ++cur.pos;
      int e = 1;
      cur.skip_space();
      if (cur.peek() == '^') {
        ++cur.pos;
        cur.skip_space();
        const int col = cur.column();
        const std::string d = cur.digits();
        if (d.size() > 3 || std::stoi(d) > 255) throw ParseError("germ expression: exponent too large", 1, col);
        e = std::stoi(d);
      }
      (v == 'x' ? J.i : v == 'y' ? J.j : J.l) += e;
      any = true;
    }
    if (!any) cur.fail("expected a term");
    Rational& slot = out[J];
    slot += sign > 0 ? coeff : -coeff;
    if (slot.is_zero()) out.erase(J);
    cur.skip_space();
    if (cur.done()) break;
    if (cur.peek() != '+' && cur.peek() != '-') cur.fail("expected '+' or '-'");
    sign = cur.peek() == '-' ? -1 : 1;
    ++cur.pos;
  }
  return out;
}

std::string format_germ_expression(const GermPolynomial& poly) {
  std::string out;
  for (const auto& [J, c] : poly) {
    if (c.is_zero()) continue;
    const bool negative = c.sign() < 0;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rational mag = negative ? -c : c;
    const bool constant = J.i == 0 && J.j == 0 && J.l == 0;
    if (constant) {
      out += mag.to_string();
      continue;
    }
    if (!(mag == Rational(1))) out += mag.to_string() + " ";
    out += to_string(J);
  }
  return out.empty() ? "0" : out;
}

GermQ to_germ(const GermPolynomial& poly, Weights w, int accuracy) {
  GermQ g(w, accuracy);
  for (const auto& [J, c] : poly) g.add_term(J, c);
  return g;
}

}  // namespace legendrian
