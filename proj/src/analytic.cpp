#include "ssg/analytic.hpp"

#include <cmath>
#include <vector>

namespace ssg {
namespace {

constexpr double kDomainEps = 1e-12;
constexpr double kRealAxisEps = 1e-9;

// Polynomial in one variable, coefficients in ascending order.
using Poly = std::vector<double>;

Poly poly_derivative(const Poly& p) {
  Poly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * double(i));
  if (d.empty()) d.push_back(0.0);
  return d;
}

// p'(T) * (1 - T^2)
Poly poly_tanh_step(const Poly& p) {
  Poly d = poly_derivative(p);
  Poly out(d.size() + 2, 0.0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    out[i] += d[i];
    out[i + 2] -= d[i];
  }
  return out;
}

Complex poly_eval(const Poly& p, Complex z) {
  Complex acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * z + p[i];
  return acc;
}

constexpr int kMaxTowerOrder = 16;

// d^k/dz^k tanh z = P_k(tanh z) with P_0 = T, P_{k+1} = P_k'(T)(1 - T^2).
const std::vector<Poly>& tanh_polys() {
  static const std::vector<Poly> table = [] {
    std::vector<Poly> t;
    t.push_back(Poly{0.0, 1.0});
    for (int k = 0; k < kMaxTowerOrder; ++k) t.push_back(poly_tanh_step(t.back()));
    return t;
  }();
  return table;
}

// d^k/dz^k sech z = sech z * Q_k(tanh z),
// Q_0 = 1, Q_{k+1} = Q_k'(T)(1 - T^2) - T Q_k(T).
const std::vector<Poly>& sech_polys() {
  static const std::vector<Poly> table = [] {
    std::vector<Poly> t;
    t.push_back(Poly{1.0});
    for (int k = 0; k < kMaxTowerOrder; ++k) {
      Poly next = poly_tanh_step(t.back());
      const Poly& q = t.back();
      if (next.size() < q.size() + 1) next.resize(q.size() + 1, 0.0);
      for (std::size_t i = 0; i < q.size(); ++i) next[i + 1] -= q[i];
      t.push_back(std::move(next));
    }
    return t;
  }();
  return table;
}

void require_order(int order) {
  if (order < 0 || order > kMaxTowerOrder)
    throw std::invalid_argument("derivative tower order out of range: " +
                                std::to_string(order));
}

double falling_half(int k) {
  // (1/2)(1/2 - 1)...(1/2 - k + 1)
  double c = 1.0;
  for (int j = 0; j < k; ++j) c *= 0.5 - double(j);
  return c;
}

double factorial(int k) {
  double f = 1.0;
  for (int j = 2; j <= k; ++j) f *= double(j);
  return f;
}

Complex pow_int_neg(Complex z, int k) {
  Complex p{1.0};
  for (int j = 0; j < k; ++j) p /= z;
  return p;
}

Complex exp_deriv(int order, Complex z) {
  require_order(order);
  return std::exp(z);
}

Complex sinh_deriv(int order, Complex z) {
  require_order(order);
  return order % 2 == 0 ? std::sinh(z) : std::cosh(z);
}

Complex cosh_deriv(int order, Complex z) {
  require_order(order);
  return order % 2 == 0 ? std::cosh(z) : std::sinh(z);
}

Complex tanh_deriv(int order, Complex z) {
  require_order(order);
  return poly_eval(tanh_polys()[std::size_t(order)], std::tanh(z));
}

Complex sech_deriv(int order, Complex z) {
  require_order(order);
  return poly_eval(sech_polys()[std::size_t(order)], std::tanh(z)) /
         std::cosh(z);
}

Complex arctanh_deriv(int order, Complex z) {
  require_order(order);
  if (order == 0) return std::atanh(z);
  // d/dz arctanh = 1/(1-z^2) = (1/2)[1/(1-z) + 1/(1+z)]
  const double f = factorial(order - 1) / 2.0;
  const Complex m = pow_int_neg(Complex(1.0) - z, order);
  const Complex p = pow_int_neg(Complex(1.0) + z, order);
  const double sign = (order - 1) % 2 == 0 ? 1.0 : -1.0;
  return f * (m + sign * p);
}

Complex sqrt_deriv(int order, Complex z) {
  require_order(order);
  return falling_half(order) * std::sqrt(z) * pow_int_neg(z, order);
}

Complex log_deriv(int order, Complex z) {
  require_order(order);
  if (order == 0) return std::log(z);
  const double sign = (order - 1) % 2 == 0 ? 1.0 : -1.0;
  return sign * factorial(order - 1) * pow_int_neg(z, order);
}

Complex reciprocal_deriv(int order, Complex z) {
  require_order(order);
  const double sign = order % 2 == 0 ? 1.0 : -1.0;
  return sign * factorial(order) * pow_int_neg(z, order + 1);
}

void check_nonzero(Complex z, const char* what) {
  if (std::abs(z) < kDomainEps)
    throw SingularPoint(std::string(what) + " at zero argument", z);
}

void arctanh_domain(Complex z) {
  if (std::abs(z - Complex(1.0)) < kDomainEps ||
      std::abs(z + Complex(1.0)) < kDomainEps)
    throw SingularPoint("arctanh branch point", z);
  if (std::abs(z.imag()) < kRealAxisEps && std::abs(z.real()) >= 1.0)
    throw SingularPoint("arctanh argument on the real cut", z);
}

void sqrt_domain(Complex z) { check_nonzero(z, "sqrt derivative tower"); }
void log_domain(Complex z) { check_nonzero(z, "log"); }
void reciprocal_domain(Complex z) { check_nonzero(z, "reciprocal"); }

void cosh_pole_domain(Complex z) {
  if (std::abs(std::cosh(z)) < kDomainEps)
    throw SingularPoint("pole of tanh/sech (cosh vanishes)", z);
}

}  // namespace

const AnalyticFunction kExp{"exp", exp_deriv, nullptr};
const AnalyticFunction kSinh{"sinh", sinh_deriv, nullptr};
const AnalyticFunction kCosh{"cosh", cosh_deriv, nullptr};
const AnalyticFunction kTanh{"tanh", tanh_deriv, cosh_pole_domain};
const AnalyticFunction kSech{"sech", sech_deriv, cosh_pole_domain};
const AnalyticFunction kArctanh{"arctanh", arctanh_deriv, arctanh_domain};
const AnalyticFunction kSqrt{"sqrt", sqrt_deriv, sqrt_domain};
const AnalyticFunction kLog{"log", log_deriv, log_domain};
const AnalyticFunction kReciprocal{"reciprocal", reciprocal_deriv,
                                   reciprocal_domain};

Jet jet_apply(const AnalyticFunction& h, const Jet& f, int base_order) {
  if (h.check_domain) h.check_domain(f.v);
  const Complex h0 = h.deriv(base_order, f.v);
  const Complex h1 = h.deriv(base_order + 1, f.v);
  const Complex h2 = h.deriv(base_order + 2, f.v);
  return {h0, h1 * f.dx, h1 * f.dt, h2 * f.dx * f.dt + h1 * f.dxt};
}

}  // namespace ssg
