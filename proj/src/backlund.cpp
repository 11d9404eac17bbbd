#include "ssg/backlund.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace ssg {

Complex principal_beta(double sigma) {
  if (sigma == 0.0) {
    throw std::invalid_argument("spectral parameter must be nonzero");
  }
  return std::sqrt(Complex(-2.0 / sigma, 0.0));
}

AuxFermion::AuxFermion(int n_gen, Eval eval)
    : n_gen_(n_gen), eval_(std::move(eval)) {}

GrassmannNumber AuxFermion::operator()(double x, double t) const {
  if (!eval_) throw std::logic_error("empty AuxFermion");
  return eval_(x, t);
}

double BtResiduals::max_abs_value() const {
  double m = bx.max_abs_value();
  m = std::max(m, bt.max_abs_value());
  m = std::max(m, fx.max_abs_value());
  m = std::max(m, ft.max_abs_value());
  return m;
}

BtResiduals bt_residuals(const FieldFunction& phi0, const FieldFunction& phi1,
                         const AuxFermion& f01, Complex beta, double x,
                         double t) {
  if (beta == Complex(0.0)) {
    throw std::invalid_argument("Backlund parameter must be nonzero");
  }
  const GrassmannNumber g0 = phi0(x, t).raw();
  const GrassmannNumber g1 = phi1(x, t).raw();
  const GrassmannNumber f = f01(x, t);
  if (!f.is_odd() && f.max_abs_jet() >= kCoeffEps) {
    throw std::invalid_argument("auxiliary fermion must be odd");
  }

  const GrassmannNumber half_sum = (g0 + g1) * 0.5;
  const GrassmannNumber half_diff = (g0 - g1) * 0.5;
  const Complex i(0.0, 1.0);

  BtResiduals r;
  r.bx = superderiv_x(g0 - g1) +
         f * apply_even(kCosh, half_sum) * (4.0 * i / beta);
  r.bt = superderiv_t(g0 + g1) - f * apply_even(kCosh, half_diff) * (2.0 * beta);
  r.fx = superderiv_x(f) - apply_even(kSinh, half_sum) * (2.0 * i / beta);
  r.ft = superderiv_t(f) - apply_even(kSinh, half_diff) * beta;
  return r;
}

AuxFermion vacuum_aux(const FieldFunction& soliton, double sigma) {
  const int n = soliton.generators();
  const Complex beta = principal_beta(sigma);
  const Complex i(0.0, 1.0);
  return AuxFermion(n, [n, beta, i, soliton](double x, double t) {
    const SuperfieldValue v = soliton(x, t);
    const GrassmannNumber body = v.phi();
    const GrassmannNumber pb = v.psibar();
    const GrassmannNumber ch = apply_even(kCosh, body * 0.5);
    const GrassmannNumber sh = apply_even(kSinh, body * 0.5);

    // Theta expansion fixed by matching the pair equations componentwise
    // against the on-shell superfield of the descendant.
    const GrassmannNumber f1 = g_div(pb, ch) * (-0.25 * i * beta);
    const GrassmannNumber b1 = sh * (2.0 * i / beta);
    const GrassmannNumber b2 = sh * (-beta);
    const GrassmannNumber f2 = ch * pb * (0.5 * beta);

    const GrassmannNumber th1 = GrassmannNumber::generator(n, kTheta1);
    const GrassmannNumber th2 = GrassmannNumber::generator(n, kTheta2);
    return f1 + th1 * b1 + th2 * b2 + th1 * (th2 * f2);
  });
}

SuperpositionCoeffs superposition_coeffs(const SuperfieldValue& phi1,
                                         const SuperfieldValue& phi2,
                                         double sigma1, double sigma2) {
  if (sigma1 == 0.0 || sigma2 == 0.0) {
    throw std::invalid_argument("spectral parameters must be nonzero");
  }
  if (sigma1 == sigma2) {
    throw std::invalid_argument(
        "superposition needs distinct spectral parameters");
  }
  if (sigma1 * sigma2 < 0.0) {
    throw std::invalid_argument(
        "superposition needs spectral parameters of equal sign");
  }

  SuperpositionCoeffs c;
  c.sigma1 = sigma1;
  c.sigma2 = sigma2;
  c.beta1 = principal_beta(sigma1);
  c.beta2 = principal_beta(sigma2);
  c.delta = (sigma1 + sigma2) / (sigma1 - sigma2);
  const Complex b1sq = c.beta1 * c.beta1;
  const Complex b2sq = c.beta2 * c.beta2;
  c.delta1 = (2.0 * c.beta1 * c.beta2 / (b1sq - b2sq)).real();

  const int n = phi1.raw().generators();
  const GrassmannNumber xi_half = (phi1.raw() - phi2.raw()) * 0.5;
  const GrassmannNumber th = apply_even(kTanh, xi_half);
  const GrassmannNumber sch = apply_even(kSech, xi_half);

  const GrassmannNumber one = GrassmannNumber::constant(n, 1.0);
  const GrassmannNumber den = one - th * th * (c.delta * c.delta);
  const GrassmannNumber inv_root = g_inverse(apply_even(kSqrt, den));

  c.a = inv_root * c.delta1;
  c.b = sch * inv_root * c.delta;
  c.gamma = apply_even(kArctanh, th * c.delta) * 2.0;
  c.omega = sch * c.delta1;

  const GrassmannNumber sh = apply_even(kSinh, xi_half);
  const GrassmannNumber ch_full = apply_even(kCosh, xi_half + xi_half);
  const GrassmannNumber lam_den =
      one * (b1sq * b1sq + b2sq * b2sq) - ch_full * (2.0 * b1sq * b2sq);
  c.lambda = g_div(sh * (-4.0 * c.beta1 * c.beta2 * (b1sq + b2sq)), lam_den);
  return c;
}

std::pair<GrassmannNumber, GrassmannNumber> descend_aux(
    const GrassmannNumber& f01, const GrassmannNumber& f02,
    const SuperpositionCoeffs& coeffs) {
  GrassmannNumber f13 = -(coeffs.a * f01) - coeffs.b * f02;
  GrassmannNumber f23 = coeffs.b * f01 + coeffs.a * f02;
  return {std::move(f13), std::move(f23)};
}

std::pair<AuxFermion, AuxFermion> descend_aux(const AuxFermion& f01,
                                              const AuxFermion& f02,
                                              const FieldFunction& phi1,
                                              const FieldFunction& phi2,
                                              double sigma1, double sigma2) {
  const int n = f01.generators();
  auto eval = [f01, f02, phi1, phi2, sigma1, sigma2](double x, double t) {
    const SuperpositionCoeffs c =
        superposition_coeffs(phi1(x, t), phi2(x, t), sigma1, sigma2);
    return descend_aux(f01(x, t), f02(x, t), c);
  };
  AuxFermion f13(n, [eval](double x, double t) { return eval(x, t).first; });
  AuxFermion f23(n, [eval](double x, double t) { return eval(x, t).second; });
  return {std::move(f13), std::move(f23)};
}

std::pair<GrassmannNumber, GrassmannNumber> permutability_residuals(
    const FieldFunction& phi0, const FieldFunction& phi1,
    const FieldFunction& phi2, const FieldFunction& phi3,
    const AuxFermion& f01, const AuxFermion& f13, const AuxFermion& f02,
    const AuxFermion& f23, Complex beta1, Complex beta2, double x, double t) {
  const GrassmannNumber g0 = phi0(x, t).raw();
  const GrassmannNumber g1 = phi1(x, t).raw();
  const GrassmannNumber g2 = phi2(x, t).raw();
  const GrassmannNumber g3 = phi3(x, t).raw();
  const GrassmannNumber F01 = f01(x, t);
  const GrassmannNumber F13 = f13(x, t);
  const GrassmannNumber F02 = f02(x, t);
  const GrassmannNumber F23 = f23(x, t);

  auto cosh_half = [](const GrassmannNumber& g) {
    return apply_even(kCosh, g * 0.5);
  };

  GrassmannNumber rx = F01 * cosh_half(g0 + g1) * (1.0 / beta1) +
                       F13 * cosh_half(g1 + g3) * (1.0 / beta2) -
                       F02 * cosh_half(g0 + g2) * (1.0 / beta2) -
                       F23 * cosh_half(g2 + g3) * (1.0 / beta1);
  GrassmannNumber rt = F01 * cosh_half(g0 - g1) * beta1 -
                       F13 * cosh_half(g1 - g3) * beta2 -
                       F02 * cosh_half(g0 - g2) * beta2 +
                       F23 * cosh_half(g2 - g3) * beta1;
  return {std::move(rx), std::move(rt)};
}

LambdaCheck lambda_coeff_check(const SuperfieldValue& phi0,
                               const SuperfieldValue& phi1,
                               const SuperfieldValue& phi2,
                               const SuperfieldValue& phi3, double sigma1,
                               double sigma2) {
  const SuperpositionCoeffs c = superposition_coeffs(phi1, phi2, sigma1, sigma2);
  const GrassmannNumber g0 = phi0.raw();
  const GrassmannNumber g1 = phi1.raw();
  const GrassmannNumber g2 = phi2.raw();
  const GrassmannNumber g3 = phi3.raw();

  auto cosh_half = [](const GrassmannNumber& g) {
    return apply_even(kCosh, g * 0.5);
  };
  const GrassmannNumber c01p = cosh_half(g0 + g1);
  const GrassmannNumber c01m = cosh_half(g0 - g1);
  const GrassmannNumber c02p = cosh_half(g0 + g2);
  const GrassmannNumber c02m = cosh_half(g0 - g2);
  const GrassmannNumber c13p = cosh_half(g1 + g3);
  const GrassmannNumber c13m = cosh_half(g1 - g3);
  const GrassmannNumber c23p = cosh_half(g2 + g3);
  const GrassmannNumber c23m = cosh_half(g2 - g3);

  const Complex b1sq = c.beta1 * c.beta1;
  const Complex b2sq = c.beta2 * c.beta2;
  const GrassmannNumber den = c13p * c23m * b1sq - c13m * c23p * b2sq;
  if (std::abs(den.coeff(0).v) < 1e-12) {
    throw SingularPoint("degenerate permutability system", den.coeff(0).v);
  }
  const GrassmannNumber inv_den = g_inverse(den);

  LambdaCheck out;
  out.lambda13_1 =
      (c01p * c23m + c01m * c23p) * inv_den * (-c.beta1 * c.beta2);
  out.lambda13_2 = (c02p * c23m * b1sq + c02m * c23p * b2sq) * inv_den;
  out.lambda23_1 = -((c01m * c13p * b1sq + c01p * c13m * b2sq) * inv_den);
  out.lambda23_2 = (c02p * c13m + c02m * c13p) * inv_den * (c.beta1 * c.beta2);

  out.diff13_1 = out.lambda13_1 + c.a;
  out.diff13_2 = out.lambda13_2 + c.b;
  out.diff23_1 = out.lambda23_1 - c.b;
  out.diff23_2 = out.lambda23_2 - c.a;
  return out;
}

double lambda_diff_residual(const GrassmannNumber& diff,
                            const GrassmannNumber& f01_value,
                            const GrassmannNumber& f02_value) {
  double m = std::abs(diff.coeff(0).v);
  m = std::max(m, (diff * f01_value).max_abs_value());
  m = std::max(m, (diff * f02_value).max_abs_value());
  return m;
}

}  // namespace ssg
