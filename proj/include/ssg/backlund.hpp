#pragma once

#include <utility>

#include "ssg/superfield.hpp"

namespace ssg {

// Principal-branch Backlund parameter for spectral parameter sigma:
// beta = sqrt(-2/sigma).
Complex principal_beta(double sigma);

// Odd auxiliary fermion superfield of a Backlund pair, as a function of
// (x, t) with jets, expanded in the thetas.
class AuxFermion {
 public:
  using Eval = std::function<GrassmannNumber(double, double)>;

  AuxFermion() = default;
  AuxFermion(int n_gen, Eval eval);

  GrassmannNumber operator()(double x, double t) const;
  int generators() const { return n_gen_; }
  explicit operator bool() const { return bool(eval_); }

 private:
  int n_gen_ = 0;
  Eval eval_;
};

// Residuals of the Backlund system for a pair (Phi0, Phi1) with parameter
// beta and auxiliary fermion f01:
//   bx = D_x(Phi0 - Phi1) + (4i/beta) f01 cosh((Phi0 + Phi1)/2)
//   bt = D_t(Phi0 + Phi1) - 2 beta f01 cosh((Phi0 - Phi1)/2)
//   fx = D_x f01 - (2i/beta) sinh((Phi0 + Phi1)/2)
//   ft = D_t f01 - beta sinh((Phi0 - Phi1)/2)
struct BtResiduals {
  GrassmannNumber bx;
  GrassmannNumber bt;
  GrassmannNumber fx;
  GrassmannNumber ft;

  double max_abs_value() const;
};

BtResiduals bt_residuals(const FieldFunction& phi0, const FieldFunction& phi1,
                         const AuxFermion& f01, Complex beta, double x,
                         double t);

// Auxiliary fermion of a vacuum-seeded pair (Phi0 = 0, Phi1 = one-soliton):
// the theta-free component is psibar/(2 sqrt(2 sigma) cosh(phi/2)) and the
// remaining components are fixed by imposing the aux coupling equations
// componentwise.
AuxFermion vacuum_aux(const FieldFunction& soliton, double sigma);

// Nonlinear superposition data for a soliton pair (sigma1, sigma2):
//   delta  = (sigma1 + sigma2)/(sigma1 - sigma2)
//   delta1 = 2 beta1 beta2 / (beta1^2 - beta2^2), principal-branch betas
// with delta^2 - delta1^2 = 1, plus the even coefficients of the descended
// aux fermions, the arctanh shift Gamma, the bilinear coefficient lambda,
// and the exponent factor Omega, all evaluated on (Phi1 - Phi2).
struct SuperpositionCoeffs {
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  Complex beta1;
  Complex beta2;
  double delta = 0.0;
  double delta1 = 0.0;
  GrassmannNumber a;
  GrassmannNumber b;
  GrassmannNumber lambda;
  GrassmannNumber omega;
  GrassmannNumber gamma;
};

SuperpositionCoeffs superposition_coeffs(const SuperfieldValue& phi1,
                                         const SuperfieldValue& phi2,
                                         double sigma1, double sigma2);

// Descended aux fermions f13 = -a f01 - b f02, f23 = b f01 + a f02.
std::pair<GrassmannNumber, GrassmannNumber> descend_aux(
    const GrassmannNumber& f01, const GrassmannNumber& f02,
    const SuperpositionCoeffs& coeffs);

std::pair<AuxFermion, AuxFermion> descend_aux(const AuxFermion& f01,
                                              const AuxFermion& f02,
                                              const FieldFunction& phi1,
                                              const FieldFunction& phi2,
                                              double sigma1, double sigma2);

// Permutability residuals of the Bianchi square: eliminating the
// superderivatives from the four pair equations leaves
//   rx = (1/b1) f01 c01p + (1/b2) f13 c13p - (1/b2) f02 c02p - (1/b1) f23 c23p
//   rt = b1 f01 c01m - b2 f13 c13m - b2 f02 c02m + b1 f23 c23m
// with cijp = cosh((Phi_i + Phi_j)/2), cijm = cosh((Phi_i - Phi_j)/2).
std::pair<GrassmannNumber, GrassmannNumber> permutability_residuals(
    const FieldFunction& phi0, const FieldFunction& phi1,
    const FieldFunction& phi2, const FieldFunction& phi3,
    const AuxFermion& f01, const AuxFermion& f13, const AuxFermion& f02,
    const AuxFermion& f23, Complex beta1, Complex beta2, double x, double t);

// The four elimination coefficients of the permutability system and their
// deviation from (-a, -b, b, a). Each deviation is a left multiple of the
// fermion bilinear f01 f02 (the scalar weights match exactly; only
// bilinear corrections with undetermined even multipliers remain).
struct LambdaCheck {
  GrassmannNumber lambda13_1;
  GrassmannNumber lambda13_2;
  GrassmannNumber lambda23_1;
  GrassmannNumber lambda23_2;
  GrassmannNumber diff13_1;
  GrassmannNumber diff13_2;
  GrassmannNumber diff23_1;
  GrassmannNumber diff23_2;
};

LambdaCheck lambda_coeff_check(const SuperfieldValue& phi0,
                               const SuperfieldValue& phi1,
                               const SuperfieldValue& phi2,
                               const SuperfieldValue& phi3, double sigma1,
                               double sigma2);

// How far `diff` is from being a left multiple of f01 f02: the magnitude of
// its scalar part together with its products against f01 and f02, all of
// which annihilate exactly on such multiples.
double lambda_diff_residual(const GrassmannNumber& diff,
                            const GrassmannNumber& f01_value,
                            const GrassmannNumber& f02_value);

}  // namespace ssg
