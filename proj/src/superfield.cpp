#include "ssg/superfield.hpp"

#include <stdexcept>

namespace ssg {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr std::uint32_t kThetaBits = 0x3;

GrassmannNumber project(const GrassmannNumber& g, std::uint32_t theta_mask) {
  // Keep monomials whose theta content is exactly theta_mask, strip it.
  // Thetas occupy the lowest indices, so stripping them from the left of an
  // ascending monomial costs no sign.
  GrassmannNumber out(g.generators());
  for (std::uint32_t m = 0; m < g.dim(); ++m) {
    if ((m & kThetaBits) != theta_mask) continue;
    out.set_coeff(m ^ theta_mask, g.coeff(m));
  }
  return out;
}
}  // namespace

SuperfieldValue::SuperfieldValue(GrassmannNumber raw) : raw_(std::move(raw)) {
  if (raw_.generators() < 2)
    throw std::invalid_argument("superfield needs the two theta generators");
  if (!raw_.is_even())
    throw std::invalid_argument("superfield value must be even");
}

GrassmannNumber SuperfieldValue::phi() const { return project(raw_, 0); }

GrassmannNumber SuperfieldValue::psibar() const { return project(raw_, 0x1); }

GrassmannNumber SuperfieldValue::psi() const {
  return project(raw_, 0x2) * (-kI);
}

GrassmannNumber SuperfieldValue::aux_f() const { return project(raw_, 0x3); }

SuperfieldValue assemble(const GrassmannNumber& phi,
                         const GrassmannNumber& psibar,
                         const GrassmannNumber& psi) {
  const int n = phi.generators();
  if (psibar.generators() != n || psi.generators() != n)
    throw std::invalid_argument("superfield components on different algebras");
  if (n < 2)
    throw std::invalid_argument("superfield needs the two theta generators");
  if (!phi.is_even())
    throw std::invalid_argument("bosonic component must be even");
  if (psibar.parity() == Parity::Mixed || psi.parity() == Parity::Mixed ||
      (psibar.max_abs_jet() >= kCoeffEps && !psibar.is_odd()) ||
      (psi.max_abs_jet() >= kCoeffEps && !psi.is_odd()))
    throw std::invalid_argument("fermionic components must be odd");

  const GrassmannNumber theta1 = GrassmannNumber::generator(n, kTheta1);
  const GrassmannNumber theta2 = GrassmannNumber::generator(n, kTheta2);
  const GrassmannNumber aux = apply_even(kSinh, phi) * (-2.0 * kI);
  return SuperfieldValue(phi + g_mul(theta1, psibar) +
                         g_mul(theta2, psi) * kI +
                         g_mul(theta1, g_mul(theta2, aux)));
}

FieldFunction::FieldFunction(int n_gen, Eval eval)
    : n_gen_(n_gen), eval_(std::move(eval)) {
  if (n_gen < 2 || n_gen > kMaxGenerators)
    throw std::invalid_argument("field generator count out of range");
}

SuperfieldValue FieldFunction::operator()(double x, double t) const {
  if (!eval_) throw std::logic_error("empty field function");
  return eval_(x, t);
}

FieldFunction vacuum_field(int n_gen) {
  return FieldFunction(n_gen, [n_gen](double, double) {
    return SuperfieldValue(GrassmannNumber(n_gen));
  });
}

GrassmannNumber d_x(const FieldFunction& f, double x, double t) {
  return superderiv_x(f(x, t).raw());
}

GrassmannNumber d_t(const FieldFunction& f, double x, double t) {
  return superderiv_t(f(x, t).raw());
}

GrassmannNumber eom_residual(const FieldFunction& f, double x, double t) {
  const GrassmannNumber value = f(x, t).raw();
  return superderiv_x(superderiv_t(value)) -
         apply_even(kSinh, value) * (2.0 * kI);
}

}  // namespace ssg
