#include "ssg/solitons.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>

namespace ssg {

namespace {

constexpr double kCurveEps = 1e-12;

void check_params(const SolitonParams& p, int n_gen) {
  if (p.sigma == 0.0) {
    throw std::invalid_argument("soliton needs a nonzero spectral parameter");
  }
  if (p.gen < 2 || p.gen >= n_gen) {
    throw std::invalid_argument("soliton generator index out of range");
  }
}

void check_pair(double sigma1, double sigma2) {
  if (sigma1 == 0.0 || sigma2 == 0.0) {
    throw std::invalid_argument("spectral parameters must be nonzero");
  }
  if (sigma1 == sigma2) {
    throw std::invalid_argument(
        "superposition needs distinct spectral parameters");
  }
}

// Distance of the arctanh argument to the branch points; on the real axis
// this is the distance to the cut.
double atanh_margin(Complex z) {
  if (std::abs(z.imag()) < 1e-6) return 1.0 - std::abs(z.real());
  return std::min(std::abs(z - Complex(1.0)), std::abs(z + Complex(1.0)));
}

MarginFn clear_margin() {
  return [](double, double) { return std::numeric_limits<double>::infinity(); };
}

}  // namespace

Jet soliton_profile(const SolitonParams& p, double x, double t) {
  const double e = p.b * std::exp(2.0 * p.sigma * x + 2.0 * t / p.sigma);
  return Jet(e, 2.0 * p.sigma * e, (2.0 / p.sigma) * e, 4.0 * e);
}

FieldFunction one_soliton(const SolitonParams& p, int n_gen) {
  check_params(p, n_gen);
  if (p.b == 0.0) return vacuum_field(n_gen);

  return FieldFunction(n_gen, [p, n_gen](double x, double t) {
    const Jet e = soliton_profile(p, x, t);
    const Jet up = Jet(1.0) + e;
    const Jet um = Jet(1.0) - e;
    if (std::abs(up.v) < kCurveEps || std::abs(um.v) < kCurveEps) {
      throw SingularPoint("one-soliton profile on a singular curve", e.v);
    }
    const Jet phi_j = jet_apply(kLog, up) - jet_apply(kLog, um);
    const Jet pb_j =
        (e * (p.a / p.b)) * (jet_reciprocal(up) + jet_reciprocal(um));

    GrassmannNumber phi(n_gen);
    phi.set_coeff(0, phi_j);
    const GrassmannNumber eps = GrassmannNumber::generator(n_gen, p.gen);
    return assemble(phi, eps * pb_j, eps * (pb_j / p.sigma));
  });
}

MarginFn one_soliton_margin(const SolitonParams& p) {
  if (p.b == 0.0) return clear_margin();
  return [p](double x, double t) {
    const Complex e = soliton_profile(p, x, t).v;
    return std::min(std::abs(Complex(1.0) + e), std::abs(Complex(1.0) - e));
  };
}

FieldFunction superpose_components(const FieldFunction& phi0,
                                   const FieldFunction& phi1,
                                   const FieldFunction& phi2, double sigma1,
                                   double sigma2) {
  check_pair(sigma1, sigma2);
  const int n = phi0.generators();
  if (phi1.generators() != n || phi2.generators() != n) {
    throw std::invalid_argument("superposition inputs disagree on generators");
  }

  const double delta = (sigma1 + sigma2) / (sigma1 - sigma2);
  const Complex root12 = std::sqrt(Complex(sigma1 * sigma2));
  const Complex cap_a = Complex(sigma1 + sigma2) / root12;
  const double cap_b =
      (sigma1 - sigma2) * (sigma1 - sigma2) / (4.0 * sigma1 * sigma2);
  const Complex r21 = std::sqrt(Complex(sigma2 / sigma1));
  const Complex r12 = std::sqrt(Complex(sigma1 / sigma2));

  return FieldFunction(n, [=](double x, double t) {
    const SuperfieldValue v0 = phi0(x, t);
    const SuperfieldValue v1 = phi1(x, t);
    const SuperfieldValue v2 = phi2(x, t);
    const GrassmannNumber p0 = v0.phi(), p1 = v1.phi(), p2 = v2.phi();
    const GrassmannNumber q0 = v0.psibar(), q1 = v1.psibar(), q2 = v2.psibar();
    const GrassmannNumber s0 = v0.psi(), s1 = v1.psi(), s2 = v2.psi();

    auto cosh_half = [](const GrassmannNumber& g) {
      return apply_even(kCosh, g * 0.5);
    };
    auto sinh_half = [](const GrassmannNumber& g) {
      return apply_even(kSinh, g * 0.5);
    };

    const GrassmannNumber u = (p1 - p2) * 0.5;
    const GrassmannNumber th = apply_even(kTanh, u);
    const GrassmannNumber sch = apply_even(kSech, u);
    const GrassmannNumber shu = apply_even(kSinh, u);
    const GrassmannNumber one = GrassmannNumber::constant(n, 1.0);

    // The tandem pair of superposition weights. The first is the
    // sech^2-form of delta * d tanh / d xi over the same denominator; it
    // stays finite as phi1 -> phi2.
    const GrassmannNumber dlt1 =
        g_div(sch * sch * delta, one - th * th * (delta * delta));
    const GrassmannNumber dlt2 =
        g_div(shu * cap_a, one * cap_b - shu * shu);

    const GrassmannNumber c01 = cosh_half(p0 + p1);
    const GrassmannNumber c02 = cosh_half(p0 + p2);

    const GrassmannNumber gamma = apply_even(kArctanh, th * delta) * 2.0;
    const GrassmannNumber bil = q0 * (q1 - q2) + q1 * q2;
    const GrassmannNumber phi3 =
        p0 + gamma - g_div(bil * dlt2, c01 * c02) * (0.125 / root12);

    const GrassmannNumber br1 = g_div(sinh_half(p0 + p2), c01) * r21;
    const GrassmannNumber br2 = g_div(sinh_half(p0 + p1), c02) * r12;
    const GrassmannNumber psibar3 =
        q0 + dlt1 * (q1 - q2) -
        (br1 * (q0 - q1) - br2 * (q0 - q2)) * dlt2 * 0.5;

    const GrassmannNumber c01m = cosh_half(p0 - p1);
    const GrassmannNumber c02m = cosh_half(p0 - p2);
    const GrassmannNumber cr1 = g_div(sinh_half(p0 - p1), c02m) * r21;
    const GrassmannNumber cr2 = g_div(sinh_half(p0 - p2), c01m) * r12;
    const GrassmannNumber psi3 =
        s0 + dlt1 * (s1 - s2) -
        (cr1 * (s0 + s2) - cr2 * (s0 + s1)) * dlt2 * 0.5;

    return assemble(phi3, psibar3, psi3);
  });
}

FieldFunction superpose_superfield(const FieldFunction& phi0,
                                   const FieldFunction& phi1,
                                   const FieldFunction& phi2,
                                   const AuxFermion& f01, const AuxFermion& f02,
                                   double sigma1, double sigma2) {
  check_pair(sigma1, sigma2);
  const int n = phi0.generators();
  if (phi1.generators() != n || phi2.generators() != n ||
      f01.generators() != n || f02.generators() != n) {
    throw std::invalid_argument("superposition inputs disagree on generators");
  }

  return FieldFunction(n, [=](double x, double t) {
    const SuperfieldValue v0 = phi0(x, t);
    const SuperfieldValue v1 = phi1(x, t);
    const SuperfieldValue v2 = phi2(x, t);
    const SuperpositionCoeffs c =
        superposition_coeffs(v1, v2, sigma1, sigma2);
    const GrassmannNumber ff = f01(x, t) * f02(x, t);
    const GrassmannNumber expfac = apply_even(kExp, c.omega * ff);
    const GrassmannNumber th =
        apply_even(kTanh, (v1.raw() - v2.raw()) * 0.5);
    const GrassmannNumber arg = th * expfac * c.delta;
    return SuperfieldValue(v0.raw() + apply_even(kArctanh, arg) * 2.0);
  });
}

MarginFn superpose_margin(MarginFn m0, MarginFn m1, MarginFn m2,
                          const FieldFunction& phi0, const FieldFunction& phi1,
                          const FieldFunction& phi2, double sigma1,
                          double sigma2) {
  check_pair(sigma1, sigma2);
  const double delta = (sigma1 + sigma2) / (sigma1 - sigma2);
  const double cap_b =
      (sigma1 - sigma2) * (sigma1 - sigma2) / (4.0 * sigma1 * sigma2);

  return [=](double x, double t) {
    double m = std::numeric_limits<double>::infinity();
    if (m0) m = std::min(m, m0(x, t));
    if (m1) m = std::min(m, m1(x, t));
    if (m2) m = std::min(m, m2(x, t));
    if (!(m > 0.0)) return m;
    try {
      const Complex b0 = phi0(x, t).phi().coeff(0).v;
      const Complex b1 = phi1(x, t).phi().coeff(0).v;
      const Complex b2 = phi2(x, t).phi().coeff(0).v;
      const Complex u = 0.5 * (b1 - b2);
      const Complex su = std::sinh(u);
      m = std::min(m, atanh_margin(delta * std::tanh(u)));
      m = std::min(m, std::abs(Complex(cap_b) - su * su));
      m = std::min(m, std::abs(std::cosh(u)));
      m = std::min(m, std::abs(std::cosh(0.5 * (b0 + b1))));
      m = std::min(m, std::abs(std::cosh(0.5 * (b0 + b2))));
      m = std::min(m, std::abs(std::cosh(0.5 * (b0 - b1))));
      m = std::min(m, std::abs(std::cosh(0.5 * (b0 - b2))));
      return m;
    } catch (const SingularPoint&) {
      return 0.0;
    }
  };
}

LatticeNode bianchi_lattice(const std::vector<SolitonParams>& params,
                            const LatticeOptions& opts) {
  const int n_sol = int(params.size());
  const int n_gen = 2 + n_sol;
  if (n_gen > kMaxGenerators) {
    throw std::invalid_argument("soliton count exceeds the generator budget");
  }
  for (int i = 0; i < n_sol; ++i) {
    check_params(params[i], n_gen);
    for (int j = i + 1; j < n_sol; ++j) {
      if (params[i].sigma == params[j].sigma) {
        throw std::invalid_argument("lattice spectral parameters must differ");
      }
      if (params[i].gen == params[j].gen) {
        throw std::invalid_argument("lattice generators must differ");
      }
    }
  }

  using Built = std::pair<FieldFunction, MarginFn>;
  std::map<std::uint32_t, Built> memo;
  std::function<Built(std::uint32_t)> build =
      [&](std::uint32_t set) -> Built {
    auto it = memo.find(set);
    if (it != memo.end()) return it->second;
    Built out;
    const int count = std::popcount(set);
    if (count == 0) {
      out = {vacuum_field(n_gen), clear_margin()};
    } else if (count == 1) {
      const int i = std::countr_zero(set);
      out = {one_soliton(params[i], n_gen), one_soliton_margin(params[i])};
    } else {
      const int hi = 31 - std::countl_zero(set);
      const std::uint32_t rest = set & ~(std::uint32_t(1) << hi);
      const int lo = 31 - std::countl_zero(rest);
      const std::uint32_t base = rest & ~(std::uint32_t(1) << lo);
      const Built nb = build(base);
      const Built nl = build(base | (std::uint32_t(1) << lo));
      const Built nh = build(base | (std::uint32_t(1) << hi));
      out = {superpose_components(nb.first, nl.first, nh.first,
                                  params[lo].sigma, params[hi].sigma),
             superpose_margin(nb.second, nl.second, nh.second, nb.first,
                              nl.first, nh.first, params[lo].sigma,
                              params[hi].sigma)};
    }
    memo.emplace(set, out);
    return out;
  };

  const std::uint32_t full =
      n_sol == 0 ? 0u : ((std::uint32_t(1) << n_sol) - 1u);
  Built top = build(full);

  LatticeNode node;
  node.field = std::move(top.first);
  node.margin = std::move(top.second);
  node.level = n_sol;
  for (const auto& p : params) {
    node.sigmas.push_back(p.sigma);
    node.gens.push_back(p.gen);
  }
  node.tolerance =
      opts.tolerance > 0.0 ? opts.tolerance : (n_sol <= 2 ? 1e-9 : 1e-8);

  if (opts.certify) {
    SamplePlan plan;
    plan.count = opts.samples;
    plan.seed = opts.seed;
    plan.margin = opts.margin;
    plan.max_attempts = opts.max_attempts;
    const auto pts = draw_points(opts.window, plan, node.margin,
                                 &node.rejected);
    node.points = int(pts.size());
    node.max_residual =
        max_over_indices(pts.size(), opts.policy, [&](std::size_t i) {
          return eom_residual(node.field, pts[i].first, pts[i].second)
              .max_abs_value();
        });
    node.certified = node.max_residual < node.tolerance;
  }
  return node;
}

BianchiPair make_bianchi_pair(const SolitonParams& p1, const SolitonParams& p2,
                              int n_gen) {
  check_params(p1, n_gen);
  check_params(p2, n_gen);
  check_pair(p1.sigma, p2.sigma);
  if (p1.gen == p2.gen) {
    throw std::invalid_argument("pair generators must differ");
  }

  BianchiPair bp;
  bp.sigma1 = p1.sigma;
  bp.sigma2 = p2.sigma;
  bp.beta1 = principal_beta(p1.sigma);
  bp.beta2 = principal_beta(p2.sigma);
  bp.phi0 = vacuum_field(n_gen);
  bp.phi1 = one_soliton(p1, n_gen);
  bp.phi2 = one_soliton(p2, n_gen);
  bp.phi3 = superpose_components(bp.phi0, bp.phi1, bp.phi2, p1.sigma, p2.sigma);
  bp.f01 = vacuum_aux(bp.phi1, p1.sigma);
  bp.f02 = vacuum_aux(bp.phi2, p2.sigma);
  auto descended = descend_aux(bp.f01, bp.f02, bp.phi1, bp.phi2, p1.sigma,
                               p2.sigma);
  bp.f13 = std::move(descended.first);
  bp.f23 = std::move(descended.second);
  bp.margin = superpose_margin(clear_margin(), one_soliton_margin(p1),
                               one_soliton_margin(p2), bp.phi0, bp.phi1,
                               bp.phi2, p1.sigma, p2.sigma);
  return bp;
}

std::pair<SolitonParams, SolitonParams> rescaled_pair(const SolitonParams& p1,
                                                      const SolitonParams& p2) {
  if (p1.sigma + p2.sigma == 0.0) {
    throw std::invalid_argument("rescaling needs gamma1 + gamma2 != 0");
  }
  const double r = (p1.sigma - p2.sigma) / (p1.sigma + p2.sigma);
  SolitonParams q1 = p1;
  SolitonParams q2 = p2;
  q1.b = 0.5 * p1.b * r;
  q2.b = -0.5 * p2.b * r;
  q1.a = -p1.sigma * r;
  q2.a = p2.sigma * r;
  return {q1, q2};
}

}  // namespace ssg
