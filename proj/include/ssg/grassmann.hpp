#pragma once

#include <cstdint>
#include <vector>

#include "ssg/analytic.hpp"
#include "ssg/jet.hpp"

namespace ssg {

enum class Parity { Even, Odd, Mixed };

// Coefficients below this magnitude count as absent for parity grading.
constexpr double kCoeffEps = 1e-14;

constexpr int kMaxGenerators = 10;

// Element of the complex Grassmann algebra on n generators, with every
// monomial coefficient carried as a derivative jet in (x, t). Storage is
// dense: coefficient of the monomial g_{i1}...g_{ik} (ascending indices)
// lives at the bitmask i1|...|ik.
//
// A value also remembers how many x/t derivative orders its jets still
// carry. Fresh values have one of each plus the mixed slot; applying a
// superderivative consumes one order, and consuming an order twice is a
// checked error (the jets have no second same-variable derivative).
class GrassmannNumber {
 public:
  GrassmannNumber() : GrassmannNumber(0) {}
  explicit GrassmannNumber(int n_gen);

  static GrassmannNumber constant(int n_gen, const Jet& body);
  static GrassmannNumber constant(int n_gen, Complex body) {
    return constant(n_gen, Jet(body));
  }
  static GrassmannNumber generator(int n_gen, int index);

  int generators() const { return n_gen_; }
  std::size_t dim() const { return coeffs_.size(); }

  const Jet& coeff(std::uint32_t mask) const;
  void set_coeff(std::uint32_t mask, const Jet& value);

  int orders_x() const { return orders_x_; }
  int orders_t() const { return orders_t_; }

  Parity parity() const;
  bool is_even() const { return parity() == Parity::Even; }
  bool is_odd() const { return parity() == Parity::Odd; }

  // Largest coefficient magnitude; value slot only / all jet slots.
  double max_abs_value() const;
  double max_abs_jet() const;

  GrassmannNumber operator-() const;
  GrassmannNumber& operator+=(const GrassmannNumber& o);
  GrassmannNumber& operator-=(const GrassmannNumber& o);
  GrassmannNumber& operator*=(Complex s);
  GrassmannNumber& operator*=(const Jet& s);

  friend GrassmannNumber operator+(GrassmannNumber a, const GrassmannNumber& b) {
    return a += b;
  }
  friend GrassmannNumber operator-(GrassmannNumber a, const GrassmannNumber& b) {
    return a -= b;
  }
  friend GrassmannNumber operator*(GrassmannNumber a, Complex s) { return a *= s; }
  friend GrassmannNumber operator*(Complex s, GrassmannNumber a) { return a *= s; }
  friend GrassmannNumber operator*(GrassmannNumber a, double s) {
    return a *= Complex(s);
  }
  friend GrassmannNumber operator*(double s, GrassmannNumber a) {
    return a *= Complex(s);
  }
  friend GrassmannNumber operator*(GrassmannNumber a, const Jet& s) {
    return a *= s;
  }
  friend GrassmannNumber operator*(const Jet& s, GrassmannNumber a) {
    return a *= s;
  }
  friend GrassmannNumber operator*(const GrassmannNumber& a,
                                   const GrassmannNumber& b) {
    return g_mul(a, b);
  }

  friend GrassmannNumber g_mul(const GrassmannNumber& a, const GrassmannNumber& b);

 private:
  void spend_order_x();
  void spend_order_t();
  friend GrassmannNumber superderiv_x(const GrassmannNumber& g);
  friend GrassmannNumber superderiv_t(const GrassmannNumber& g);

  int n_gen_;
  int orders_x_ = 1;
  int orders_t_ = 1;
  std::vector<Jet> coeffs_;
};

// Sign of merging two disjoint ascending monomials: (-1)^{transpositions}.
int merge_sign(std::uint32_t a, std::uint32_t b);

// Left derivative with respect to generator `index`.
GrassmannNumber g_deriv(const GrassmannNumber& g, int index);

// Analytic function of an even element: split body + soul, finite Taylor
// series in the nilpotent soul. Tower depth used is soul-degree + 2, well
// inside the generator bound.
GrassmannNumber apply_even(const AnalyticFunction& h, const GrassmannNumber& g);

// Multiplicative inverse of an even element with nonzero body.
GrassmannNumber g_inverse(const GrassmannNumber& g);
GrassmannNumber g_div(const GrassmannNumber& a, const GrassmannNumber& b);

// Superspace covariant derivatives D_x = d/d(theta1) + theta1 d/dx and
// D_t = d/d(theta2) + theta2 d/dt, acting on an evaluated value through its
// jets. Generator 0 is theta1, generator 1 theta2. Each consumes one
// derivative order of the corresponding variable.
GrassmannNumber superderiv_x(const GrassmannNumber& g);
GrassmannNumber superderiv_t(const GrassmannNumber& g);

}  // namespace ssg
