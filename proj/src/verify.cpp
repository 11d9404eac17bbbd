#include "ssg/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <utility>

#include <json.hpp>

#include "ssg/backlund.hpp"

namespace ssg {

namespace {

double pick_tol(const RunConfig& c, double fallback) {
  return c.tolerance > 0.0 ? c.tolerance : fallback;
}

struct PointSet {
  std::vector<std::pair<double, double>> pts;
  int rejected = 0;
};

PointSet sample_points(const RunConfig& cfg, const MarginFn& margin) {
  SamplePlan plan;
  plan.count = cfg.samples;
  plan.seed = cfg.seed;
  plan.margin = cfg.singular_margin;
  PointSet ps;
  ps.pts = draw_points(config_window(cfg), plan, margin, &ps.rejected);
  return ps;
}

CheckResult point_check(
    std::string name, std::string relation, double tol, const PointSet& ps,
    ExecPolicy policy,
    const std::function<double(double, double)>& residual_at) {
  CheckResult r;
  r.name = std::move(name);
  r.relation = std::move(relation);
  r.tolerance = tol;
  r.points = int(ps.pts.size());
  r.rejected = ps.rejected;
  r.max_residual = max_over_indices(
      ps.pts.size(), policy, [&](std::size_t i) {
        return residual_at(ps.pts[i].first, ps.pts[i].second);
      });
  r.pass = r.max_residual < tol;
  return r;
}

CheckResult closure_check(const RunConfig& cfg, const VerifyHooks& hooks,
                          double tol) {
  CheckResult r;
  r.name = "identities.closure";
  r.relation = "delta^2 - delta1^2 = 1";
  r.tolerance = tol;

  std::mt19937_64 rng(cfg.seed);
  auto unit = [&rng] { return double(rng() >> 11) * 0x1.0p-53; };

  double worst = 0.0;
  int made = 0;
  int dropped = 0;
  for (int attempt = 0; attempt < 100000 && made < 100; ++attempt) {
    const double s1 = 0.5 + 2.5 * unit();
    const double s2 = 0.5 + 2.5 * unit();
    if (std::abs(s1 - s2) < 0.5) {
      ++dropped;
      continue;
    }
    const Complex b1 = principal_beta(s1);
    const Complex b2 = principal_beta(s2);
    const double delta = (s1 + s2) / (s1 - s2) + hooks.delta_offset;
    const double delta1 = (2.0 * b1 * b2 / (b1 * b1 - b2 * b2)).real();
    worst = std::max(worst, std::abs(delta * delta - delta1 * delta1 - 1.0));
    ++made;
  }
  r.points = made;
  r.rejected = dropped;
  r.max_residual = worst;
  r.pass = worst < tol;
  return r;
}

std::string fmt_sci(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6e", v);
  return buf;
}

}  // namespace

bool ResidualReport::all_pass() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string ResidualReport::to_text() const {
  std::ostringstream out;
  out << "suite: " << suite << "\n";
  std::size_t name_w = 5;
  for (const auto& c : checks) name_w = std::max(name_w, c.name.size());
  for (const auto& c : checks) {
    out << "  " << c.name << std::string(name_w - c.name.size() + 2, ' ')
        << (c.pass ? "pass" : "FAIL") << "  max " << fmt_sci(c.max_residual)
        << "  tol " << fmt_sci(c.tolerance) << "  points " << c.points
        << "  rejected " << c.rejected << "  [" << c.relation << "]\n";
  }
  out << "result: " << (all_pass() ? "PASS" : "FAIL") << " (" << checks.size()
      << (checks.size() == 1 ? " check)" : " checks)") << "\n";
  return out.str();
}

std::string ResidualReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = all_pass();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : checks) {
    nlohmann::json e;
    e["name"] = c.name;
    e["relation"] = c.relation;
    e["max_residual"] = c.max_residual;
    e["tolerance"] = c.tolerance;
    e["points"] = c.points;
    e["rejected"] = c.rejected;
    e["pass"] = c.pass;
    arr.push_back(e);
  }
  j["checks"] = arr;
  return j.dump(2) + "\n";
}

ResidualReport run_suite(const RunConfig& config, const std::string& which,
                         const VerifyHooks& hooks, ExecPolicy policy) {
  validate_config(config);
  const bool all = which == "all";
  const bool want_eom = all || which == "eom";
  const bool want_bt = all || which == "bt";
  const bool want_perm = all || which == "perm";
  const bool want_ids = all || which == "identities";
  const bool want_lattice = all || which == "lattice";
  if (!want_eom && !want_bt && !want_perm && !want_ids && !want_lattice) {
    throw ConfigError("unknown suite '" + which + "'");
  }

  const int n_sol = int(config.solitons.size());
  const int n_gen = 2 + n_sol;
  if (!all) {
    if (which == "bt" && n_sol < 1) {
      throw ConfigError("suite 'bt' needs at least one soliton");
    }
    if (which == "perm" && n_sol < 2) {
      throw ConfigError("suite 'perm' needs at least two solitons");
    }
  }

  ResidualReport report;
  report.suite = which;

  // Shared ingredients, built once.
  std::vector<FieldFunction> fields;
  std::vector<MarginFn> margins;
  std::vector<PointSet> soliton_pts;
  for (int k = 0; k < n_sol; ++k) {
    fields.push_back(one_soliton(config.solitons[k], n_gen));
    margins.push_back(one_soliton_margin(config.solitons[k]));
    soliton_pts.push_back(sample_points(config, margins[k]));
  }
  const FieldFunction vacuum = vacuum_field(n_gen);

  BianchiPair bp;
  PointSet pair_pts;
  if (n_sol >= 2) {
    bp = make_bianchi_pair(config.solitons[0], config.solitons[1], n_gen);
    pair_pts = sample_points(config, bp.margin);
  }

  const std::string eom_rel = "D_x D_t Phi - 2i sinh Phi";

  if (want_eom) {
    PointSet vac_pts = sample_points(config, MarginFn());
    report.checks.push_back(point_check(
        "eom.vacuum", eom_rel, pick_tol(config, 1e-14), vac_pts, policy,
        [&](double x, double t) {
          return eom_residual(vacuum, x, t).max_abs_value();
        }));
    for (int k = 0; k < n_sol; ++k) {
      report.checks.push_back(point_check(
          "eom.soliton" + std::to_string(k + 1), eom_rel,
          pick_tol(config, 1e-10), soliton_pts[k], policy,
          [&, k](double x, double t) {
            return eom_residual(fields[k], x, t).max_abs_value();
          }));
    }
    if (n_sol >= 2) {
      report.checks.push_back(point_check(
          "eom.pair", eom_rel, pick_tol(config, 1e-9), pair_pts, policy,
          [&](double x, double t) {
            return eom_residual(bp.phi3, x, t).max_abs_value();
          }));
    }
  }

  if (want_bt) {
    for (int k = 0; k < n_sol; ++k) {
      const double sigma = config.solitons[k].sigma;
      const AuxFermion aux = vacuum_aux(fields[k], sigma);
      const Complex beta = principal_beta(sigma);
      report.checks.push_back(point_check(
          "bt.vacuum_pair" + std::to_string(k + 1),
          "pair equations against the vacuum seed", pick_tol(config, 1e-9),
          soliton_pts[k], policy, [&, aux, beta, k](double x, double t) {
            return bt_residuals(vacuum, fields[k], aux, beta, x, t)
                .max_abs_value();
          }));
    }
    if (n_sol >= 2) {
      report.checks.push_back(point_check(
          "bt.descended13", "pair equations of the first descended edge",
          pick_tol(config, 1e-9), pair_pts, policy, [&](double x, double t) {
            return bt_residuals(bp.phi1, bp.phi3, bp.f13, bp.beta2, x, t)
                .max_abs_value();
          }));
      report.checks.push_back(point_check(
          "bt.descended23", "pair equations of the second descended edge",
          pick_tol(config, 1e-9), pair_pts, policy, [&](double x, double t) {
            return bt_residuals(bp.phi2, bp.phi3, bp.f23, bp.beta1, x, t)
                .max_abs_value();
          }));
    }
  }

  if (want_perm && n_sol >= 2) {
    report.checks.push_back(point_check(
        "perm.relation_x", "cosh-weighted x-elimination around the square",
        pick_tol(config, 1e-9), pair_pts, policy, [&](double x, double t) {
          return permutability_residuals(bp.phi0, bp.phi1, bp.phi2, bp.phi3,
                                         bp.f01, bp.f13, bp.f02, bp.f23,
                                         bp.beta1, bp.beta2, x, t)
              .first.max_abs_value();
        }));
    report.checks.push_back(point_check(
        "perm.relation_t", "cosh-weighted t-elimination around the square",
        pick_tol(config, 1e-9), pair_pts, policy, [&](double x, double t) {
          return permutability_residuals(bp.phi0, bp.phi1, bp.phi2, bp.phi3,
                                         bp.f01, bp.f13, bp.f02, bp.f23,
                                         bp.beta1, bp.beta2, x, t)
              .second.max_abs_value();
        }));
    const FieldFunction phi3_swapped = superpose_components(
        bp.phi0, bp.phi2, bp.phi1, bp.sigma2, bp.sigma1);
    report.checks.push_back(point_check(
        "perm.swap", "descendant is branch-order independent",
        pick_tol(config, 1e-12), pair_pts, policy, [&](double x, double t) {
          const GrassmannNumber d =
              bp.phi3(x, t).raw() - phi3_swapped(x, t).raw();
          return d.max_abs_value();
        }));
    report.checks.push_back(point_check(
        "perm.coefficients",
        "elimination coefficients are (-a,-b,b,a) plus f01 f02 multiples",
        pick_tol(config, 1e-9), pair_pts, policy, [&](double x, double t) {
          const LambdaCheck lc =
              lambda_coeff_check(bp.phi0(x, t), bp.phi1(x, t), bp.phi2(x, t),
                                 bp.phi3(x, t), bp.sigma1, bp.sigma2);
          const GrassmannNumber fa = bp.f01(x, t);
          const GrassmannNumber fb = bp.f02(x, t);
          double m = lambda_diff_residual(lc.diff13_1, fa, fb);
          m = std::max(m, lambda_diff_residual(lc.diff13_2, fa, fb));
          m = std::max(m, lambda_diff_residual(lc.diff23_1, fa, fb));
          m = std::max(m, lambda_diff_residual(lc.diff23_2, fa, fb));
          return m;
        }));
  }

  if (want_ids) {
    report.checks.push_back(
        closure_check(config, hooks, pick_tol(config, 1e-12)));
    if (n_sol >= 2) {
      auto pair_coeffs = [&](double x, double t) {
        return superposition_coeffs(bp.phi1(x, t), bp.phi2(x, t), bp.sigma1,
                                    bp.sigma2);
      };
      report.checks.push_back(point_check(
          "identities.weights", "b^2 - a^2 = 1", pick_tol(config, 1e-10),
          pair_pts, policy, [&](double x, double t) {
            const SuperpositionCoeffs c = pair_coeffs(x, t);
            const GrassmannNumber one =
                GrassmannNumber::constant(n_gen, 1.0);
            return (c.b * c.b - c.a * c.a - one).max_abs_value();
          }));
      report.checks.push_back(point_check(
          "identities.descent", "f13 f23 = f01 f02", pick_tol(config, 1e-10),
          pair_pts, policy, [&](double x, double t) {
            const GrassmannNumber d =
                bp.f13(x, t) * bp.f23(x, t) - bp.f01(x, t) * bp.f02(x, t);
            return d.max_abs_value();
          }));
      const FieldFunction sf = superpose_superfield(
          bp.phi0, bp.phi1, bp.phi2, bp.f01, bp.f02, bp.sigma1, bp.sigma2);
      report.checks.push_back(point_check(
          "identities.forms", "superfield and component forms agree",
          pick_tol(config, 1e-9), pair_pts, policy, [&](double x, double t) {
            const GrassmannNumber d = sf(x, t).raw() - bp.phi3(x, t).raw();
            return d.max_abs_value();
          }));
      report.checks.push_back(point_check(
          "identities.ansatz",
          "descendant = seed + Gamma shift + lambda f01 f02",
          pick_tol(config, 1e-9), pair_pts, policy, [&](double x, double t) {
            const SuperpositionCoeffs c = pair_coeffs(x, t);
            const GrassmannNumber r =
                sf(x, t).raw() - bp.phi0(x, t).raw() - c.gamma -
                c.lambda * (bp.f01(x, t) * bp.f02(x, t));
            return r.max_abs_value();
          }));

      SolitonParams b1 = config.solitons[0];
      SolitonParams b2 = config.solitons[1];
      b1.a = 0.0;
      b2.a = 0.0;
      const FieldFunction s1b = one_soliton(b1, n_gen);
      const FieldFunction s2b = one_soliton(b2, n_gen);
      const FieldFunction bos =
          superpose_components(vacuum, s1b, s2b, b1.sigma, b2.sigma);
      const double delta = (b1.sigma + b2.sigma) / (b1.sigma - b2.sigma);
      report.checks.push_back(point_check(
          "identities.bosonic",
          "fermionless descendant matches the classical formula",
          pick_tol(config, 1e-12), pair_pts, policy,
          [&, delta](double x, double t) {
            const SuperfieldValue v = bos(x, t);
            const Complex body1 = s1b(x, t).phi().coeff(0).v;
            const Complex body2 = s2b(x, t).phi().coeff(0).v;
            const Complex expected =
                2.0 * std::atanh(delta * std::tanh(0.5 * (body1 - body2)));
            double m = std::abs(v.phi().coeff(0).v - expected);
            m = std::max(m, v.psibar().max_abs_value());
            m = std::max(m, v.psi().max_abs_value());
            return m;
          }));
    }
  }

  if (want_lattice) {
    LatticeOptions lo;
    lo.window = config_window(config);
    lo.seed = config.seed;
    lo.samples = config.samples;
    lo.margin = config.singular_margin;
    lo.tolerance = config.tolerance;
    lo.policy = policy;
    const LatticeNode node = bianchi_lattice(config.solitons, lo);
    CheckResult r;
    r.name = "lattice.eom";
    r.relation = eom_rel + std::string(" on the top lattice node");
    r.max_residual = node.max_residual;
    r.tolerance = node.tolerance;
    r.points = node.points;
    r.rejected = node.rejected;
    r.pass = node.certified;
    report.checks.push_back(r);
  }

  return report;
}

}  // namespace ssg
