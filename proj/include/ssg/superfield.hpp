#pragma once

#include <functional>

#include "ssg/grassmann.hpp"

namespace ssg {

// Generator layout of the superfield algebra: index 0 is theta1, index 1 is
// theta2, index k+1 is the soliton Grassmann parameter eps_k.
constexpr int kTheta1 = 0;
constexpr int kTheta2 = 1;
inline constexpr int eps_index(int k) { return k + 1; }

// Even element of the full algebra expanded in the thetas,
//   Phi = phi + theta1 psibar + i theta2 psi + theta1 theta2 F,
// with the auxiliary component always on shell: F = -2i sinh(phi).
class SuperfieldValue {
 public:
  SuperfieldValue() = default;
  explicit SuperfieldValue(GrassmannNumber raw);

  const GrassmannNumber& raw() const { return raw_; }
  int generators() const { return raw_.generators(); }

  // Theta-free projections; psi absorbs the conventional factor of i.
  GrassmannNumber phi() const;
  GrassmannNumber psibar() const;
  GrassmannNumber psi() const;
  GrassmannNumber aux_f() const;

 private:
  GrassmannNumber raw_;
};

// Build the on-shell superfield from theta-free components. phi must be
// even, psibar and psi odd (or zero).
SuperfieldValue assemble(const GrassmannNumber& phi,
                         const GrassmannNumber& psibar,
                         const GrassmannNumber& psi);

// A superfield as an evaluation contract: exact jets at any (x, t).
class FieldFunction {
 public:
  using Eval = std::function<SuperfieldValue(double, double)>;

  FieldFunction() = default;
  FieldFunction(int n_gen, Eval eval);

  SuperfieldValue operator()(double x, double t) const;
  int generators() const { return n_gen_; }
  explicit operator bool() const { return bool(eval_); }

 private:
  int n_gen_ = 0;
  Eval eval_;
};

FieldFunction vacuum_field(int n_gen);

// Covariant derivatives of a field at a point.
GrassmannNumber d_x(const FieldFunction& f, double x, double t);
GrassmannNumber d_t(const FieldFunction& f, double x, double t);

// Residual of the superspace equation of motion D_x D_t Phi = 2i sinh Phi.
// Only the value slots of the result are meaningful (both derivative orders
// are consumed by the left side).
GrassmannNumber eom_residual(const FieldFunction& f, double x, double t);

}  // namespace ssg
