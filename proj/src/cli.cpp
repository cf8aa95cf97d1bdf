#include "legendrian/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "legendrian/errors.hpp"
#include "legendrian/io.hpp"
#include "legendrian/moduli.hpp"
#include "legendrian/montecarlo.hpp"
#include "legendrian/upsilon.hpp"

namespace legendrian {

namespace {

using Json = nlohmann::ordered_json;
constexpr const char* kSchema = "legmod/1";

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DomainError("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

PlaneCurveGerm load_curve(const std::string& path) { return to_curve(parse_curve_document(read_file(path))); }

std::string braces(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + std::to_string(v[k]);
  return s + "}";
}

Json semigroup_json(const NumericalSemigroup& g) {
  return Json{{"gaps", g.gaps()}, {"conductor", g.conductor()}, {"generators", g.minimal_generators()}};
}

void print_semigroup(std::ostream& out, const NumericalSemigroup& g) {
  std::string gens = "<";
  const auto mg = g.minimal_generators();
  for (std::size_t k = 0; k < mg.size(); ++k) gens += (k ? ", " : "") + std::to_string(mg[k]);
  out << "gaps: " << braces(g.gaps()) << "\n"
      << "conductor: " << g.conductor() << "\n"
      << "generators: " << gens << ">\n";
}

Json curve_json(const PlaneCurveGerm& c) { return Json::parse(write_curve_document(from_curve(c))); }

struct Options {
  bool json = false;
};

int cmd_gamma(int n, int m, const Options& opt, std::ostream& out) {
  const GammaResult r = gamma(n, m);
  const auto s = find_s_invariant(n, m);
  const int dim = moduli_dimension(n, m);
  if (opt.json) {
    Json traj = Json::array();
    for (const auto& e : r.table.entries) {
      traj.push_back(Json{{"i", e.i}, {"sharp", e.sharp}, {"omega", e.omega}, {"tau", e.tau}});
    }
    Json j{{"schema", kSchema}, {"command", "gamma"}, {"n", n}, {"m", m}};
    j.update(semigroup_json(r.semigroup));
    j["s"] = s ? Json(*s) : Json(nullptr);
    j["dimension"] = dim;
    j["base_conductor"] = r.table.base_conductor;
    j["trajectories"] = traj;
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "Gamma(" << n << "," << m << ")\n";
  print_semigroup(out, r.semigroup);
  out << "s: " << (s ? std::to_string(*s) : "none") << "\n"
      << "dimension: " << dim << "\n"
      << "trajectories (base conductor " << r.table.base_conductor << "):\n"
      << "  " << std::setw(5) << "i" << std::setw(7) << "sharp" << std::setw(7) << "omega" << "  tau\n";
  for (const auto& e : r.table.entries) {
    out << "  " << std::setw(5) << e.i << std::setw(7) << e.sharp << std::setw(7) << e.omega << "  "
        << braces(e.tau) << "\n";
  }
  return kExitOk;
}

int cmd_semigroup(const std::string& file, const Options& opt, std::ostream& out) {
  const PlaneCurveGerm c = load_curve(file);
  const NumericalSemigroup g = conormal_semigroup(c);
  std::optional<bool> generic;
  if (c.m() >= 2 * c.n() + 1) generic = g == gamma(c.n(), c.m()).semigroup;
  if (opt.json) {
    Json j{{"schema", kSchema}, {"command", "semigroup"}, {"n", c.n()}, {"m", c.m()}};
    j.update(semigroup_json(g));
    j["generic"] = generic ? Json(*generic) : Json(nullptr);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "curve: " << c.to_string() << "\n";
  print_semigroup(out, g);
  out << "generic: " << (generic ? (*generic ? "yes" : "no") : "n/a (m < 2n+1)") << "\n";
  return kExitOk;
}

int cmd_conormal(const std::string& file, const Options& opt, std::ostream& out) {
  const PlaneCurveGerm c = load_curve(file);
  const auto tri = conormal(c);
  Json pj = Json::array();
  std::ostringstream text;
  for (int k = 0; k < tri.P.accuracy(); ++k) {
    if (tri.P[k].is_zero()) continue;
    pj.push_back(Json{{"e", k}, {"c", tri.P[k].to_string()}});
    text << "  t^" << k << ": " << tri.P[k].to_string() << "\n";
  }
  if (opt.json) {
    Json j{{"schema", kSchema}, {"command", "conormal"}, {"curve", curve_json(c)}};
    j["p"] = Json{{"terms", pj}, {"precision", tri.P.accuracy()}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "curve: " << c.to_string() << "\n"
      << "p = dy/dx, known below t^" << tri.P.accuracy() << ":\n"
      << text.str();
  return kExitOk;
}

int cmd_transform(const std::string& file, const std::string& alpha_text, const std::string& beta0_text,
                  std::ostream& out) {
  const PlaneCurveGerm c = load_curve(file);
  const int accuracy = c.accuracy();
  const GermPolynomial beta0_poly = parse_germ_expression(beta0_text);
  for (const auto& [J, coeff] : beta0_poly) {
    if (J.l > 0) throw DomainError("beta0 must not involve p (term " + to_string(J) + ")");
  }
  const GermQ alpha = to_germ(parse_germ_expression(alpha_text), c.weights(), accuracy + c.n());
  const GermQ beta0 = to_germ(beta0_poly, c.weights(), accuracy + c.n());
  const ContactMap phi = from_alpha_beta0(alpha, beta0, accuracy);
  out << write_curve_document(from_curve(act_on_curve(phi, c)));
  return kExitOk;
}

int cmd_normalize(const std::string& file, const Options& opt, std::ostream& out) {
  const NormalForm nf = normal_form(load_curve(file));
  if (opt.json) {
    Json log = Json::array();
    for (const auto& step : nf.log.steps) log.push_back(Json{{"target", step.target}, {"map", step.map.provenance}});
    Json j{{"schema", kSchema}, {"command", "normalize"}, {"curve", curve_json(nf.curve)}, {"log", log}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "short form: " << nf.curve.to_string() << "\n" << "log:\n";
  if (nf.log.steps.empty()) out << "  (already short)\n";
  for (const auto& step : nf.log.steps) out << "  t^" << step.target << ": " << step.map.provenance << "\n";
  out << write_curve_document(from_curve(nf.curve));
  return kExitOk;
}

int cmd_equivalent(const std::string& f1, const std::string& f2, const Options& opt, std::ostream& out) {
  const PlaneCurveGerm c1 = load_curve(f1), c2 = load_curve(f2);
  std::optional<int> witness;
  std::string reason;
  if (c1.n() != c2.n() || c1.m() != c2.m()) {
    reason = "types differ";
  } else {
    const ModuliPoint p1 = moduli_point(c1), p2 = moduli_point(c2);
    witness = orbit_equivalent(p1, p2);
    if (!witness) reason = "moduli points lie in different orbits";
  }
  if (opt.json) {
    Json j{{"schema", kSchema}, {"command", "equivalent"}, {"equivalent", witness.has_value()}};
    j["root_exponent"] = witness ? Json(*witness) : Json(nullptr);
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  if (witness) {
    out << "equivalent: yes (root of unity exponent k = " << *witness << ")\n";
  } else {
    out << "equivalent: no (" << reason << ")\n";
  }
  return kExitOk;
}

int cmd_verify_generic(int n, int m, int trials, std::uint64_t seed, std::int64_t range, const Options& opt,
                       std::ostream& out) {
  const auto outcomes = verify_generic_trials(n, m, trials, seed, range);
  const NumericalSemigroup expected = gamma(n, m).semigroup;
  const auto passed = std::count_if(outcomes.begin(), outcomes.end(), [](const TrialOutcome& o) { return o.pass; });
  const auto coefficients = [](const PlaneCurveGerm& c) {
    std::vector<std::string> v;
    for (int i = c.m(); i < c.accuracy(); ++i) v.push_back(c.coefficient(i).to_string());
    return v;
  };
  if (opt.json) {
    Json fails = Json::array();
    for (const auto& o : outcomes) {
      if (o.pass) continue;
      fails.push_back(Json{{"trial", o.trial}, {"coefficients", coefficients(o.curve)}, {"observed_gaps", o.observed.gaps()}});
    }
    Json j{{"schema", kSchema}, {"command", "verify-generic"}, {"n", n}, {"m", m}, {"trials", trials},
           {"seed", seed}, {"range", range}, {"generator", "mt19937_64/splitmix64"}, {"passed", passed},
           {"failures", fails}};
    out << j.dump(2) << "\n";
    return kExitOk;
  }
  out << "verify-generic n=" << n << " m=" << m << " trials=" << trials << " seed=" << seed << " range=" << range
      << "\n"
      << "generator: mt19937_64 per trial, seeded with splitmix64(seed ^ 0x9E3779B97F4A7C15*(k+1))\n"
      << "expected gaps: " << braces(expected.gaps()) << "\n"
      << "passed: " << passed << "/" << trials << "\n";
  for (const auto& o : outcomes) {
    if (o.pass) continue;
    out << "FAIL trial " << o.trial << ": a_" << m << ".. = [";
    const auto v = coefficients(o.curve);
    for (std::size_t k = 0; k < v.size(); ++k) out << (k ? ", " : "") << v[k];
    out << "], observed gaps " << braces(o.observed.gaps()) << "\n";
  }
  return kExitOk;
}

int cmd_upsilon(int n, int m, const std::string& check, std::uint64_t seed, int count, std::ostream& out) {
  const UpsilonContext ctx(n, m);
  out << "upsilon " << n << " " << m << " check=" << check << " (c = " << ctx.c() << ")\n";
  bool ok = true;
  if (check == "direct-vs-closed") {
    const auto direct = upsilon_matrix(ctx, UpsilonForm::Direct);
    const auto closed = upsilon_matrix(ctx, UpsilonForm::Closed);
    const auto index = ctx.index_set();
    std::size_t entries = 0;
    for (std::size_t r = 0; r < index.size() && ok; ++r) {
      for (std::size_t k = 0; k < direct[r].size(); ++k, ++entries) {
        if (direct[r][k] == closed[r][k]) continue;
        ok = false;
        out << "counterexample: J = (" << index[r].i << "," << index[r].j << "," << index[r].l << "), k = "
            << m + static_cast<int>(k) << "\n";
        break;
      }
    }
    out << "entries compared: " << entries << " over " << index.size() << " monomials\n";
  } else if (check == "mu-derivative") {
    int tested = 0, other = 0;
    for (const auto& J : ctx.index_set()) {
      if (J.i < 1 || J.l < 1) continue;
      for (int k = m; k < ctx.c(); ++k, ++tested) {
        if (!mu_derivative_check(ctx, J, k, DerivativeReading::PExponentOfJ) && ok) {
          ok = false;
          out << "counterexample: J = (" << J.i << "," << J.j << "," << J.l << "), k = " << k << "\n";
        }
        if (mu_derivative_check(ctx, J, k, DerivativeReading::PExponentOfDJ)) ++other;
      }
    }
    out << "identities tested: " << tested << " (factor = p-exponent of J)\n"
        << "factor = p-exponent of dJ holds in " << other << "/" << tested << "\n";
  } else if (check == "det-invariance") {
    for (int t = 0; t < count; ++t) {
      TrialRng rng(seed, static_cast<std::uint64_t>(t));
      const FamilySelection sel = random_family_selection(ctx, rng);
      if (det_mu_invariance(ctx, sel.rows, sel.cols)) continue;
      if (ok) out << "counterexample: N = " << sel.N << ", q = " << sel.q << ", columns " << braces(sel.cols) << "\n";
      ok = false;
    }
    out << "selections tested: " << count << " (seed " << seed << ")\n";
  } else {
    throw DomainError("unknown check '" + check + "'");
  }
  out << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? kExitOk : kExitInternal;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Legendrian curve moduli toolkit", "legmod"};
  app.require_subcommand(1);
  Options opt;
  int n = 0, m = 0, trials = 20, count = 50;
  std::uint64_t seed = 1;
  std::int64_t range = 1000000;
  std::string file, file2, alpha = "0", beta0 = "0", check;

  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", opt.json, "machine-readable output"); };
  auto* g = app.add_subcommand("gamma", "generic Legendrian semigroup and trajectory table");
  g->add_option("n", n)->required();
  g->add_option("m", m)->required();
  add_json(g);
  bool table = false;
  g->add_flag("--table", table, "human-readable table (default)");
  auto* sg = app.add_subcommand("semigroup", "oracle semigroup of a curve file");
  sg->add_option("curve", file)->required();
  add_json(sg);
  auto* cn = app.add_subcommand("conormal", "conormal slope p = dy/dx of a curve file");
  cn->add_option("curve", file)->required();
  add_json(cn);
  auto* tr = app.add_subcommand("transform", "apply the contact map built from alpha and beta0");
  tr->add_option("curve", file)->required();
  tr->add_option("--alpha", alpha, "germ expression");
  tr->add_option("--beta0", beta0, "germ expression free of p");
  auto* nm = app.add_subcommand("normalize", "Legendrian short form with reduction log");
  nm->add_option("curve", file)->required();
  add_json(nm);
  auto* eq = app.add_subcommand("equivalent", "compare the moduli points of two curves");
  eq->add_option("first", file)->required();
  eq->add_option("second", file2)->required();
  add_json(eq);
  auto* vg = app.add_subcommand("verify-generic", "random curves against Gamma(n,m)");
  vg->add_option("n", n)->required();
  vg->add_option("m", m)->required();
  vg->add_option("--trials", trials)->check(CLI::NonNegativeNumber);
  vg->add_option("--seed", seed);
  vg->add_option("--range", range)->check(CLI::NonNegativeNumber);
  add_json(vg);
  auto* up = app.add_subcommand("upsilon", "symbolic coefficient matrix identities");
  up->add_option("n", n)->required();
  up->add_option("m", m)->required();
  up->add_option("--check", check)->required()->check(CLI::IsMember({"direct-vs-closed", "mu-derivative", "det-invariance"}));
  up->add_option("--seed", seed);
  up->add_option("--count", count)->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (g->parsed()) return cmd_gamma(n, m, opt, out);
    if (sg->parsed()) return cmd_semigroup(file, opt, out);
    if (cn->parsed()) return cmd_conormal(file, opt, out);
    if (tr->parsed()) return cmd_transform(file, alpha, beta0, out);
    if (nm->parsed()) return cmd_normalize(file, opt, out);
    if (eq->parsed()) return cmd_equivalent(file, file2, opt, out);
    if (vg->parsed()) return cmd_verify_generic(n, m, trials, seed, range, opt, out);
    if (up->parsed()) return cmd_upsilon(n, m, check, seed, count, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NonGenericCurve& e) {
    err << "error: " << e.what() << "\n";
    return kExitNonGeneric;
  } catch (const InsufficientPrecision& e) {
    err << "error: insufficient precision: " << e.what() << "\n";
    return kExitPrecision;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitValidation;
}

}  // namespace legendrian
