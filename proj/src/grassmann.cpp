#include "ssg/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

namespace ssg {

GrassmannNumber::GrassmannNumber(int n_gen) : n_gen_(n_gen) {
  if (n_gen < 0 || n_gen > kMaxGenerators)
    throw std::invalid_argument("generator count out of range: " +
                                std::to_string(n_gen));
  coeffs_.assign(std::size_t(1) << n_gen, Jet{});
}

GrassmannNumber GrassmannNumber::constant(int n_gen, const Jet& body) {
  GrassmannNumber g(n_gen);
  g.coeffs_[0] = body;
  return g;
}

GrassmannNumber GrassmannNumber::generator(int n_gen, int index) {
  GrassmannNumber g(n_gen);
  if (index < 0 || index >= n_gen)
    throw std::invalid_argument("generator index out of range: " +
                                std::to_string(index));
  g.coeffs_[std::uint32_t(1) << index] = Jet(Complex(1.0));
  return g;
}

const Jet& GrassmannNumber::coeff(std::uint32_t mask) const {
  if (mask >= coeffs_.size())
    throw std::invalid_argument("monomial mask out of range");
  return coeffs_[mask];
}

void GrassmannNumber::set_coeff(std::uint32_t mask, const Jet& value) {
  if (mask >= coeffs_.size())
    throw std::invalid_argument("monomial mask out of range");
  coeffs_[mask] = value;
}

Parity GrassmannNumber::parity() const {
  bool even = false, odd = false;
  for (std::uint32_t m = 0; m < coeffs_.size(); ++m) {
    if (max_abs(coeffs_[m]) < kCoeffEps) continue;
    (std::popcount(m) % 2 == 0 ? even : odd) = true;
  }
  if (even && odd) return Parity::Mixed;
  return odd ? Parity::Odd : Parity::Even;
}

double GrassmannNumber::max_abs_value() const {
  double m = 0.0;
  for (const Jet& c : coeffs_) m = std::max(m, std::abs(c.v));
  return m;
}

double GrassmannNumber::max_abs_jet() const {
  double m = 0.0;
  for (const Jet& c : coeffs_) m = std::max(m, max_abs(c));
  return m;
}

GrassmannNumber GrassmannNumber::operator-() const {
  GrassmannNumber out = *this;
  for (Jet& c : out.coeffs_) c = -c;
  return out;
}

namespace {
void require_same_algebra(const GrassmannNumber& a, const GrassmannNumber& b) {
  if (a.generators() != b.generators())
    throw std::invalid_argument("mismatched generator counts: " +
                                std::to_string(a.generators()) + " vs " +
                                std::to_string(b.generators()));
}
}  // namespace

GrassmannNumber& GrassmannNumber::operator+=(const GrassmannNumber& o) {
  require_same_algebra(*this, o);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] += o.coeffs_[m];
  orders_x_ = std::min(orders_x_, o.orders_x_);
  orders_t_ = std::min(orders_t_, o.orders_t_);
  return *this;
}

GrassmannNumber& GrassmannNumber::operator-=(const GrassmannNumber& o) {
  require_same_algebra(*this, o);
  for (std::size_t m = 0; m < coeffs_.size(); ++m) coeffs_[m] -= o.coeffs_[m];
  orders_x_ = std::min(orders_x_, o.orders_x_);
  orders_t_ = std::min(orders_t_, o.orders_t_);
  return *this;
}

GrassmannNumber& GrassmannNumber::operator*=(Complex s) {
  for (Jet& c : coeffs_) c *= s;
  return *this;
}

GrassmannNumber& GrassmannNumber::operator*=(const Jet& s) {
  for (Jet& c : coeffs_) c = jet_mul(c, s);
  return *this;
}

int merge_sign(std::uint32_t a, std::uint32_t b) {
  // Transpositions needed to sort the concatenation of two ascending
  // monomials: for each generator in b, count the generators of a above it.
  int swaps = 0;
  std::uint32_t rest = b;
  while (rest) {
    const int j = std::countr_zero(rest);
    rest &= rest - 1;
    swaps += std::popcount(a >> (j + 1));
  }
  return swaps % 2 == 0 ? 1 : -1;
}

GrassmannNumber g_mul(const GrassmannNumber& a, const GrassmannNumber& b) {
  require_same_algebra(a, b);
  GrassmannNumber out(a.n_gen_);
  out.orders_x_ = std::min(a.orders_x_, b.orders_x_);
  out.orders_t_ = std::min(a.orders_t_, b.orders_t_);
  const std::size_t dim = a.coeffs_.size();
  for (std::uint32_t ma = 0; ma < dim; ++ma) {
    const Jet& ca = a.coeffs_[ma];
    if (is_zero(ca)) continue;
    for (std::uint32_t mb = 0; mb < dim; ++mb) {
      if (ma & mb) continue;
      const Jet& cb = b.coeffs_[mb];
      if (is_zero(cb)) continue;
      Jet term = jet_mul(ca, cb);
      if (merge_sign(ma, mb) < 0) term = -term;
      out.coeffs_[ma | mb] += term;
    }
  }
  return out;
}

GrassmannNumber g_deriv(const GrassmannNumber& g, int index) {
  if (index < 0 || index >= g.generators())
    throw std::invalid_argument("derivative generator index out of range: " +
                                std::to_string(index));
  const std::uint32_t bit = std::uint32_t(1) << index;
  GrassmannNumber out(g.generators());
  for (std::uint32_t m = 0; m < g.dim(); ++m) {
    if (!(m & bit)) continue;
    // Left derivative: move the generator to the front past everything below.
    const int below = std::popcount(m & (bit - 1));
    Jet c = g.coeff(m);
    if (below % 2 != 0) c = -c;
    out.set_coeff(m ^ bit, c);
  }
  return out;
}

GrassmannNumber apply_even(const AnalyticFunction& h, const GrassmannNumber& g) {
  if (!g.is_even())
    throw std::invalid_argument(std::string(h.name) +
                                " applied to a non-even element");
  const Jet body = g.coeff(0);
  if (h.check_domain) h.check_domain(body.v);

  GrassmannNumber soul = g;
  soul.set_coeff(0, Jet{});

  // Soul monomials carry at least two generators, so powers above n/2 die.
  GrassmannNumber acc = g * Complex(0.0);
  acc.set_coeff(0, jet_apply(h, body));
  GrassmannNumber soul_pow = soul;
  double inv_fact = 1.0;
  for (int k = 1; k <= g.generators() / 2; ++k) {
    inv_fact /= double(k);
    acc += soul_pow * (jet_apply(h, body, k) * Complex(inv_fact));
    if (k < g.generators() / 2) soul_pow = g_mul(soul_pow, soul);
  }
  return acc;
}

GrassmannNumber g_inverse(const GrassmannNumber& g) {
  return apply_even(kReciprocal, g);
}

GrassmannNumber g_div(const GrassmannNumber& a, const GrassmannNumber& b) {
  return g_mul(a, g_inverse(b));
}

void GrassmannNumber::spend_order_x() {
  if (orders_x_ < 1)
    throw std::logic_error(
        "x derivative order already consumed (no second x derivative in jets)");
  for (Jet& c : coeffs_) c = Jet(c.dx, Complex{}, c.dxt, Complex{});
  --orders_x_;
}

void GrassmannNumber::spend_order_t() {
  if (orders_t_ < 1)
    throw std::logic_error(
        "t derivative order already consumed (no second t derivative in jets)");
  for (Jet& c : coeffs_) c = Jet(c.dt, c.dxt, Complex{}, Complex{});
  --orders_t_;
}

GrassmannNumber superderiv_x(const GrassmannNumber& g) {
  if (g.generators() < 2)
    throw std::invalid_argument("superderivative needs the two theta generators");
  GrassmannNumber dx_part = g;
  dx_part.spend_order_x();
  return g_deriv(g, 0) +
         g_mul(GrassmannNumber::generator(g.generators(), 0), dx_part);
}

GrassmannNumber superderiv_t(const GrassmannNumber& g) {
  if (g.generators() < 2)
    throw std::invalid_argument("superderivative needs the two theta generators");
  GrassmannNumber dt_part = g;
  dt_part.spend_order_t();
  return g_deriv(g, 1) +
         g_mul(GrassmannNumber::generator(g.generators(), 1), dt_part);
}

}  // namespace ssg
