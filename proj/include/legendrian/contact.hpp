#pragma once

#include <string>

#include "legendrian/curve.hpp"
#include "legendrian/germ.hpp"
#include "legendrian/rational.hpp"

namespace legendrian {

using GermQ = Germ<Rational>;

/// (x, y, p) -> (x + α, y + β, p + γ), with the multiplier φ of dy - p dx cached.
struct ContactMap {
  GermQ alpha;
  GermQ beta;
  GermQ gamma;
  GermQ phi;
  std::string provenance;

  const Weights& weights() const { return alpha.weights(); }
  int accuracy() const { return std::min({alpha.accuracy(), beta.accuracy(), gamma.accuracy()}); }
  std::string to_string() const;
};

/// Builds a map from its components and computes φ = 1 + β_y - (p + γ) α_y.
ContactMap make_contact_map(GermQ alpha, GermQ beta, GermQ gamma, std::string provenance);

struct ContactVerdict {
  bool ok = false;
  GermQ phi;
  GermQ residual_dp;  ///< β_p - (p + γ) α_p
  GermQ residual_dx;  ///< β_x - (p + γ)(1 + α_x) + p φ
  std::string detail;
};

ContactVerdict verify_contact(const ContactMap& map);

struct CauchySolution {
  GermQ beta;
  GermQ gamma;
};

/// β and γ for given α and p-free β0, with α and β0 read as exact polynomials. β is
/// returned to `accuracy`, γ to accuracy - n.
CauchySolution solve_ck(const GermQ& alpha, const GermQ& beta0, int accuracy);

/// Φ_{α,β0}, with every component known to `accuracy`.
ContactMap from_alpha_beta0(const GermQ& alpha, const GermQ& beta0, int accuracy);

struct GroupMembership {
  bool in_G = false;
  bool in_J = false;
  bool is_homothety = false;
  std::string witness;  ///< first violated condition, empty when in_J
};

GroupMembership classify(const ContactMap& map);

ContactMap identity_map(Weights w, int accuracy);
/// (ax + bp, y + ac x²/2 + bd p²/2 + bc xp, cx + dp), requiring ad - bc = 1.
ContactMap paraboloidal(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        Weights w, int accuracy);
/// (-p, y - xp, x).
ContactMap legendre(Weights w, int accuracy);
/// (λx, μy, (μ/λ)p).
ContactMap homothety(const Rational& lambda, const Rational& mu, Weights w, int accuracy);

/// The map that applies `first`, then `second`.
ContactMap compose(const ContactMap& first, const ContactMap& second);

/// True when the two maps agree on every coefficient both know.
bool agree(const ContactMap& a, const ContactMap& b);

/// Image of the plane curve under the map, reparametrized to x = s^n. The result is known
/// to min(curve accuracy, map accuracy).
PlaneCurveGerm act_on_curve(const ContactMap& map, const PlaneCurveGerm& curve);

/// y(t) + β(t) - p(t) α(t) along the conormal of the curve.
Series<Rational> first_order_image(const ContactMap& map, const PlaneCurveGerm& curve);

/// Φ_{α,β0} with ι*(β - pα) = λ t^w + higher terms on the curve, built from a germ b
/// realizing w by α = -∂b/∂p, β0 = b|_{p=0}. Throws DomainError if no such b exists
/// or the conditions on α, β0 fail.
ContactMap forget_transform(const PlaneCurveGerm& curve, int w, const Rational& lambda,
                            bool shape_constrained = true);

struct GDecomposition {
  ContactMap H;  ///< homothety
  ContactMap P;  ///< paraboloidal with c = 0
  ContactMap R;  ///< element of J
};

/// Φ = compose(H, compose(P, R)) for Φ in G.
GDecomposition decompose_g(const ContactMap& map);

}  // namespace legendrian
