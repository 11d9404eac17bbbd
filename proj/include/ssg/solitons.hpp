#pragma once

#include <utility>
#include <vector>

#include "ssg/backlund.hpp"
#include "ssg/sweep.hpp"

namespace ssg {

struct SolitonParams {
  double sigma = 1.0;  // nonzero spectral parameter
  double b = 0.0;      // bosonic amplitude; 0 degenerates to the vacuum
  double a = 0.0;      // fermion amplitude riding on the generator
  int gen = 2;         // odd-generator index; 0 and 1 are the thetas
};

// Exponential profile E = b exp(2 sigma x + 2 t / sigma) with exact jets.
Jet soliton_profile(const SolitonParams& p, double x, double t);

// One-soliton field: phi = ln((1+E)/(1-E)), psibar = (a/b) E (1/(1+E) +
// 1/(1-E)) on the generator, psi = psibar / sigma. b = 0 gives the vacuum.
// Evaluation on the singular curves |1 -+ E| < 1e-12 throws.
FieldFunction one_soliton(const SolitonParams& p, int n_gen);

// Distance to the nearest singular curve: min |1 -+ E|.
MarginFn one_soliton_margin(const SolitonParams& p);

// Component-level nonlinear superposition: the descendant of phi0 whose
// intermediate steps go through phi1 and phi2.
FieldFunction superpose_components(const FieldFunction& phi0,
                                   const FieldFunction& phi1,
                                   const FieldFunction& phi2, double sigma1,
                                   double sigma2);

// Superfield-level superposition, entirely inside the Grassmann algebra:
// Phi3 = Phi0 + 2 Arctanh[delta tanh((Phi1-Phi2)/2) e^{Omega f01 f02}].
FieldFunction superpose_superfield(const FieldFunction& phi0,
                                   const FieldFunction& phi1,
                                   const FieldFunction& phi2,
                                   const AuxFermion& f01, const AuxFermion& f02,
                                   double sigma1, double sigma2);

// Singular-curve margin of a superposed node: children's margins plus the
// arctanh / pole / cosh-denominator distances of the pair formulas.
MarginFn superpose_margin(MarginFn m0, MarginFn m1, MarginFn m2,
                          const FieldFunction& phi0, const FieldFunction& phi1,
                          const FieldFunction& phi2, double sigma1,
                          double sigma2);

struct LatticeOptions {
  Window window;
  std::uint64_t seed = 1;
  int samples = 50;
  double margin = 1e-3;
  // 0 picks the level default: 1e-9 up to two solitons, 1e-8 above.
  double tolerance = 0.0;
  int max_attempts = 200000;
  bool certify = true;
  ExecPolicy policy = ExecPolicy::Parallel;
};

struct LatticeNode {
  FieldFunction field;
  MarginFn margin;
  std::vector<double> sigmas;
  std::vector<int> gens;
  int level = 0;
  // Certification record (zeros when certify was off).
  double max_residual = 0.0;
  double tolerance = 0.0;
  int points = 0;
  int rejected = 0;
  bool certified = false;
};

// Recursive Bianchi construction of the n-soliton descendant chain; the
// returned top node is residual-certified at sampled non-singular points
// unless opts.certify is off (the outcome is recorded, not thrown). Throws
// on duplicate sigmas, duplicate generators, or an exhausted sample region.
LatticeNode bianchi_lattice(const std::vector<SolitonParams>& params,
                            const LatticeOptions& opts = {});

// Full permutability square seeded from the vacuum: fields, aux fermions
// on every edge, and the combined margin function.
struct BianchiPair {
  FieldFunction phi0;
  FieldFunction phi1;
  FieldFunction phi2;
  FieldFunction phi3;
  AuxFermion f01;
  AuxFermion f02;
  AuxFermion f13;
  AuxFermion f23;
  Complex beta1;
  Complex beta2;
  double sigma1 = 0.0;
  double sigma2 = 0.0;
  MarginFn margin;
};

BianchiPair make_bianchi_pair(const SolitonParams& p1, const SolitonParams& p2,
                              int n_gen);

// Parameter normalization map for a soliton pair (sigma read as gamma):
//   b1 -> (b1/2) r,  b2 -> -(b2/2) r,  a1 -> -gamma1 r,  a2 -> gamma2 r,
// with r = (gamma1 - gamma2)/(gamma1 + gamma2).
std::pair<SolitonParams, SolitonParams> rescaled_pair(const SolitonParams& p1,
                                                      const SolitonParams& p2);

}  // namespace ssg
