#include "legendrian/contact.hpp"

#include <sstream>

#include "legendrian/errors.hpp"
#include "legendrian/oracle.hpp"

namespace legendrian {

namespace {

constexpr Monomial kOne{0, 0, 0};
constexpr Monomial kX{1, 0, 0};
constexpr Monomial kY{0, 1, 0};
constexpr Monomial kP{0, 0, 1};

Rational term(const GermQ& g, const Monomial& J) {
  auto it = g.terms().find(J);
  return it == g.terms().end() ? Rational(0) : it->second;
}

GermQ var(Weights w, Var v, int accuracy) { return GermQ::variable(w, v, accuracy); }
GermQ one(Weights w, int accuracy) { return GermQ::constant(w, 1, accuracy); }

void check_same_weights(const GermQ& a, const GermQ& b, const char* what) {
  if (!(a.weights() == b.weights())) throw DomainError(std::string(what) + ": mismatched weights");
}

}  // namespace

std::string ContactMap::to_string() const {
  std::ostringstream out;
  out << "alpha = " << alpha.to_string() << "\nbeta = " << beta.to_string()
      << "\ngamma = " << gamma.to_string() << "\n[" << provenance << "]";
  return out.str();
}

ContactMap make_contact_map(GermQ alpha, GermQ beta, GermQ gamma, std::string provenance) {
  check_same_weights(alpha, beta, "contact map");
  check_same_weights(alpha, gamma, "contact map");
  const Weights w = alpha.weights();
  const int acc = std::max({alpha.accuracy(), beta.accuracy(), gamma.accuracy()});
  const GermQ p = var(w, Var::P, acc);
  GermQ phi = one(w, acc) + beta.partial(Var::Y) - (p + gamma) * alpha.partial(Var::Y);
  return ContactMap{std::move(alpha), std::move(beta), std::move(gamma), std::move(phi),
                    std::move(provenance)};
}

ContactVerdict verify_contact(const ContactMap& map) {
  const Weights w = map.weights();
  const int acc = map.accuracy() + w.m;
  const GermQ p = var(w, Var::P, acc);
  const GermQ pg = p + map.gamma;
  ContactVerdict v;
  v.phi = one(w, acc) + map.beta.partial(Var::Y) - pg * map.alpha.partial(Var::Y);
  v.residual_dp = map.beta.partial(Var::P) - pg * map.alpha.partial(Var::P);
  v.residual_dx = map.beta.partial(Var::X) - pg * (one(w, acc) + map.alpha.partial(Var::X)) + p * v.phi;
  std::ostringstream detail;
  bool ok = true;
  if (v.phi.accuracy() <= 0 || v.residual_dp.accuracy() <= 0 || v.residual_dx.accuracy() <= 0) {
    ok = false;
    detail << "accuracy too low to decide; ";
  } else if (is_zero(v.phi.constant_term())) {
    ok = false;
    detail << "phi(0) = 0; ";
  }
  if (!v.residual_dp.is_zero_known()) {
    ok = false;
    detail << "dp residual " << v.residual_dp.to_string() << "; ";
  }
  if (!v.residual_dx.is_zero_known()) {
    ok = false;
    detail << "dx residual " << v.residual_dx.to_string() << "; ";
  }
  v.ok = ok;
  v.detail = ok ? "contact identity holds" : detail.str();
  return v;
}

CauchySolution solve_ck(const GermQ& alpha_in, const GermQ& beta0_in, int accuracy) {
  check_same_weights(alpha_in, beta0_in, "solve_ck");
  const Weights w = alpha_in.weights();
  if (beta0_in.depends_on(Var::P)) throw DomainError("solve_ck: beta0 must not involve p");
  const GermQ alpha = alpha_in.with_accuracy(accuracy);
  const GermQ beta0 = beta0_in.with_accuracy(accuracy);
  const auto violated = [](const char* what) {
    return DomainError(std::string("violates hypothesis alpha, beta0, d(beta0)/dy in m: ") + what + " not in m");
  };
  if (!is_zero(term(alpha, kOne))) throw violated("alpha");
  if (!is_zero(term(beta0, kOne))) throw violated("beta0");
  if (!is_zero(term(beta0, kY))) throw violated("d(beta0)/dy");

  const GermQ p = var(w, Var::P, accuracy);
  const GermQ ax = alpha.partial(Var::X);
  const GermQ ay = alpha.partial(Var::Y);
  const GermQ ap = alpha.partial(Var::P);
  const GermQ unit = one(w, accuracy) + ax + p * ay;
  if (is_zero(term(unit, kOne))) {
    throw DomainError("solve_ck: 1 + d(alpha)/dx + p d(alpha)/dy is not invertible at the origin");
  }
  const GermQ unit_inv = unit.unit_inverse();

  // β = β0 + ∫ U^{-1} α_p (p + p β_y + β_x) dp, iterated until the p-slices settle.
  GermQ beta = beta0;
  const int max_rounds = accuracy / std::max(1, w.m - w.n) + 3;
  for (int round = 0; round < max_rounds; ++round) {
    const GermQ rhs = unit_inv * (ap * (p + p * beta.partial(Var::Y) + beta.partial(Var::X)));
    GermQ next = (beta0 + rhs.integrate_p()).truncated(accuracy);
    const bool settled = next == beta;
    beta = std::move(next);
    if (settled) break;
  }
  GermQ gamma = unit_inv * (beta.partial(Var::X) + p * (beta.partial(Var::Y) - ax - p * ay));
  gamma = gamma.truncated(accuracy - w.n);
  return {std::move(beta), std::move(gamma)};
}

ContactMap from_alpha_beta0(const GermQ& alpha, const GermQ& beta0, int accuracy) {
  const Weights w = alpha.weights();
  CauchySolution sol = solve_ck(alpha, beta0, accuracy + w.n);
  ContactMap map = make_contact_map(alpha.with_accuracy(accuracy), sol.beta.truncated(accuracy),
                                    sol.gamma.truncated(accuracy),
                                    "from_alpha_beta0(" + alpha.to_string() + ", " + beta0.to_string() + ")");
  const ContactVerdict v = verify_contact(map);
  if (!v.ok) throw Error("from_alpha_beta0: constructed map fails the contact identity: " + v.detail);
  return map;
}

GroupMembership classify(const ContactMap& map) {
  GroupMembership g;
  const ContactVerdict v = verify_contact(map);
  if (!v.ok) {
    g.witness = "not a contact transformation: " + v.detail;
    return g;
  }
  const auto fail = [&](const std::string& why) {
    if (g.witness.empty()) g.witness = why;
  };
  const Rational a0 = term(map.alpha, kOne), b0 = term(map.beta, kOne), c0 = term(map.gamma, kOne);
  if (!a0.is_zero() || !b0.is_zero() || !c0.is_zero()) {
    g.witness = "does not fix the origin";
    return g;
  }
  // Linearization applied to the x-direction must stay on the x-axis.
  const Rational bx = term(map.beta, kX), cx = term(map.gamma, kX);
  const Rational dxx = Rational(1) + term(map.alpha, kX);
  g.in_G = bx.is_zero() && cx.is_zero() && !dxx.is_zero();
  if (!g.in_G) {
    g.witness = "linear part moves the x-axis";
    return g;
  }
  if (!term(map.alpha, kX).is_zero()) fail("d(alpha)/dx not in m");
  if (!term(map.beta, kY).is_zero()) fail("d(beta)/dy not in m");
  if (!term(map.gamma, kP).is_zero()) fail("d(gamma)/dp not in m");
  g.in_J = g.witness.empty();

  // Ψ_{λ,μ}: α = (λ-1)x, β = (μ-1)y, γ = (μ/λ-1)p and nothing else.
  const Rational lambda = dxx;
  const Rational mu = Rational(1) + term(map.beta, kY);
  const auto only = [](const GermQ& g, const Monomial& J, const Rational& c) {
    for (const auto& [K, v] : g.terms()) {
      if (!(K == J)) return false;
    }
    return term(g, J) == c;
  };
  g.is_homothety = !mu.is_zero() && only(map.alpha, kX, lambda - 1) && only(map.beta, kY, mu - 1) &&
                   only(map.gamma, kP, mu / lambda - 1);
  return g;
}

ContactMap identity_map(Weights w, int accuracy) {
  const GermQ zero(w, accuracy);
  return make_contact_map(zero, zero, zero, "identity");
}

ContactMap paraboloidal(const Rational& a, const Rational& b, const Rational& c, const Rational& d,
                        Weights w, int accuracy) {
  if (!(a * d - b * c == Rational(1))) throw DomainError("paraboloidal: ad - bc must equal 1");
  const GermQ x = var(w, Var::X, accuracy), y = var(w, Var::Y, accuracy), p = var(w, Var::P, accuracy);
  const Rational half(1, 2);
  GermQ alpha = (a - 1) * x + b * p;
  GermQ beta = (half * a * c) * (x * x) + (half * b * d) * (p * p) + (b * c) * (x * p);
  GermQ gamma = c * x + (d - 1) * p;
  return make_contact_map(alpha.truncated(accuracy), beta.truncated(accuracy), gamma.truncated(accuracy),
                          "paraboloidal(" + a.to_string() + "," + b.to_string() + "," + c.to_string() +
                              "," + d.to_string() + ")");
}

ContactMap legendre(Weights w, int accuracy) {
  ContactMap m = paraboloidal(0, -1, 1, 0, w, accuracy);
  m.provenance = "legendre";
  return m;
}

ContactMap homothety(const Rational& lambda, const Rational& mu, Weights w, int accuracy) {
  if (lambda.is_zero() || mu.is_zero()) throw DomainError("homothety: scalars must be nonzero");
  const GermQ x = var(w, Var::X, accuracy), y = var(w, Var::Y, accuracy), p = var(w, Var::P, accuracy);
  return make_contact_map((lambda - 1) * x, (mu - 1) * y, (mu / lambda - 1) * p,
                          "homothety(" + lambda.to_string() + "," + mu.to_string() + ")");
}

ContactMap compose(const ContactMap& first, const ContactMap& second) {
  if (!(first.weights() == second.weights())) throw DomainError("compose: mismatched weights");
  const Weights w = first.weights();
  const int acc = first.accuracy();
  const GermQ u = var(w, Var::X, acc) + first.alpha;
  const GermQ v = var(w, Var::Y, acc) + first.beta;
  const GermQ s = var(w, Var::P, acc) + first.gamma;
  GermQ alpha = first.alpha + second.alpha.substitute(u, v, s);
  GermQ beta = first.beta + second.beta.substitute(u, v, s);
  GermQ gamma = first.gamma + second.gamma.substitute(u, v, s);
  const int out = std::min({alpha.accuracy(), beta.accuracy(), gamma.accuracy()});
  if (out <= 0) throw InsufficientPrecision("compose: no coefficients survive the substitution");
  return make_contact_map(alpha.truncated(out), beta.truncated(out), gamma.truncated(out),
                          "compose(" + first.provenance + ", " + second.provenance + ")");
}

bool agree(const ContactMap& a, const ContactMap& b) {
  return agree(a.alpha, b.alpha) && agree(a.beta, b.beta) && agree(a.gamma, b.gamma);
}

namespace {

struct Images {
  Series<Rational> x;
  Series<Rational> y;
  ConormalTriple<Rational> tri;
  Series<Rational> alpha;
  Series<Rational> beta;
};

Images images(const ContactMap& map, const PlaneCurveGerm& curve) {
  if (!(map.weights() == curve.weights())) {
    throw DomainError("act_on_curve: map weights do not match the curve type");
  }
  const int bound = std::min(curve.accuracy(), map.accuracy());
  ConormalTriple<Rational> tri = conormal_exact(curve, bound);
  Series<Rational> a = map.alpha.evaluate(tri.X, tri.Y, tri.P);
  Series<Rational> b = map.beta.evaluate(tri.X, tri.Y, tri.P);
  Series<Rational> x = tri.X + a;
  Series<Rational> y = tri.Y + b;
  return {std::move(x), std::move(y), std::move(tri), std::move(a), std::move(b)};
}

}  // namespace

PlaneCurveGerm act_on_curve(const ContactMap& map, const PlaneCurveGerm& curve) {
  const Images im = images(map, curve);
  const int n = curve.n();
  if (im.x.valuation() != n) {
    throw DomainError("act_on_curve: transformed x has order " + std::to_string(im.x.valuation()) +
                      ", the map leaves the chart");
  }
  if (!(im.x[n] == Rational(1))) {
    throw DomainError("act_on_curve: transformed x has leading coefficient " + im.x[n].to_string() +
                      "; normalize with a homothety first");
  }
  const int bound = std::min(curve.accuracy(), map.accuracy());
  return reparametrize(im.x, im.y, n, bound);
}

Series<Rational> first_order_image(const ContactMap& map, const PlaneCurveGerm& curve) {
  const Images im = images(map, curve);
  return im.tri.Y + im.beta - im.tri.P * im.alpha;
}

ContactMap forget_transform(const PlaneCurveGerm& curve, int w, const Rational& lambda,
                            bool shape_constrained) {
  if (lambda.is_zero()) throw DomainError("forget_transform: lambda must be nonzero");
  const GermQ b = lambda * realize_order(curve, w, shape_constrained);
  const GermQ alpha = -b.partial(Var::P).with_accuracy(curve.accuracy());
  const GermQ beta0 = b.p_free_part().with_accuracy(curve.accuracy());
  ContactMap map = from_alpha_beta0(alpha, beta0, curve.accuracy());
  map.provenance = "forget(w=" + std::to_string(w) + ", lambda=" + lambda.to_string() + ")";

  const ConormalTriple<Rational> tri = conormal_exact(curve, w + 1);
  const GermQ p = var(curve.weights(), Var::P, map.accuracy());
  const Series<Rational> lead = (map.beta - p * map.alpha).evaluate(tri.X, tri.Y, tri.P);
  if (lead.accuracy() <= w || lead.valuation() != w || !(lead[w] == lambda)) {
    throw Error("forget_transform: postcondition failed, iota*(beta - p alpha) = " + lead.to_string());
  }
  return map;
}

GDecomposition decompose_g(const ContactMap& map) {
  const GroupMembership g = classify(map);
  if (!g.in_G) throw DomainError("decompose_g: map is not in G (" + g.witness + ")");
  const Weights w = map.weights();
  const int acc = map.accuracy();
  const Rational lambda = Rational(1) + term(map.alpha, kX);
  const Rational mu = Rational(1) + term(map.beta, kY);
  const ContactMap H = homothety(lambda, mu, w, acc);
  const ContactMap H_inv = homothety(lambda.inverse(), mu.inverse(), w, acc);
  // Linear (x, p) part of Φ∘H^{-1}: x -> x + b p, p -> d p.
  const Rational b = term(map.alpha, kP) * lambda / mu;
  const Rational d = (Rational(1) + term(map.gamma, kP)) * lambda / mu;
  if (!(d == Rational(1))) throw Error("decompose_g: linear part is not symplectic after normalization");
  const ContactMap P = paraboloidal(1, b, 0, d, w, acc);
  const ContactMap P_inv = paraboloidal(d, -b, 0, 1, w, acc);
  ContactMap R = compose(P_inv, compose(H_inv, map));
  R.provenance = "residual";
  const GroupMembership r = classify(R);
  if (!r.in_J) throw Error("decompose_g: residual not in J (" + r.witness + ")");
  return {H, P, R};
}

}  // namespace legendrian
