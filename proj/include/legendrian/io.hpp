#pragma once

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "legendrian/contact.hpp"
#include "legendrian/curve.hpp"

namespace legendrian {

/// {"n": int, "terms": [{"e": int, "c": "p/q"}, ...], "precision": int}; rationals are strings.
struct CurveDocument {
  int n = 0;
  std::vector<std::pair<int, Rational>> terms;
  int precision = -1;  ///< -1 when absent: the curve default applies

  friend bool operator==(const CurveDocument&, const CurveDocument&) = default;
};

/// Throws ParseError with 1-based line/column for syntax errors and for malformed values.
CurveDocument parse_curve_document(std::string_view text);
std::string write_curve_document(const CurveDocument& doc);

PlaneCurveGerm to_curve(const CurveDocument& doc);
CurveDocument from_curve(const PlaneCurveGerm& c);

/// Polynomial in x, y, p with rational coefficients.
using GermPolynomial = std::map<Monomial, Rational>;

/// expr := sign? term (("+" | "-") term)*, term := rational? (var ("^" nat)?)*, var in {x, y, p}.
/// U+2212 is accepted as a minus sign; juxtaposition multiplies; whitespace is ignored.
GermPolynomial parse_germ_expression(std::string_view text);

/// Canonical text: terms in increasing (i, j, l) order, unit coefficients omitted.
std::string format_germ_expression(const GermPolynomial& poly);

GermQ to_germ(const GermPolynomial& poly, Weights w, int accuracy);

}  // namespace legendrian
