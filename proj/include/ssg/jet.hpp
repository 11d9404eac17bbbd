#pragma once

#include <complex>

namespace ssg {

using Complex = std::complex<double>;

// Truncated derivative jet of a function of (x, t): value, first derivatives
// and the mixed second derivative. No pure second derivatives are carried,
// which is all the sinh-Gordon superderivative calculus needs.
struct Jet {
  Complex v{};
  Complex dx{};
  Complex dt{};
  Complex dxt{};

  constexpr Jet() = default;
  constexpr Jet(Complex value) : v(value) {}
  constexpr Jet(Complex value, Complex d_x, Complex d_t, Complex d_xt)
      : v(value), dx(d_x), dt(d_t), dxt(d_xt) {}

  constexpr Jet operator-() const { return {-v, -dx, -dt, -dxt}; }

  constexpr Jet& operator+=(const Jet& o) {
    v += o.v;
    dx += o.dx;
    dt += o.dt;
    dxt += o.dxt;
    return *this;
  }
  constexpr Jet& operator-=(const Jet& o) {
    v -= o.v;
    dx -= o.dx;
    dt -= o.dt;
    dxt -= o.dxt;
    return *this;
  }
  constexpr Jet& operator*=(Complex s) {
    v *= s;
    dx *= s;
    dt *= s;
    dxt *= s;
    return *this;
  }
  constexpr Jet& operator/=(Complex s) {
    v /= s;
    dx /= s;
    dt /= s;
    dxt /= s;
    return *this;
  }
};

constexpr Jet operator+(Jet a, const Jet& b) { return a += b; }
constexpr Jet operator-(Jet a, const Jet& b) { return a -= b; }
constexpr Jet operator*(Jet a, Complex s) { return a *= s; }
constexpr Jet operator*(Complex s, Jet a) { return a *= s; }
constexpr Jet operator*(Jet a, double s) { return a *= Complex(s); }
constexpr Jet operator*(double s, Jet a) { return a *= Complex(s); }
constexpr Jet operator/(Jet a, Complex s) { return a /= s; }
constexpr Jet operator/(Jet a, double s) { return a /= Complex(s); }

// Leibniz product: exact through the mixed slot.
constexpr Jet jet_mul(const Jet& f, const Jet& g) {
  return {f.v * g.v,
          f.dx * g.v + f.v * g.dx,
          f.dt * g.v + f.v * g.dt,
          f.dxt * g.v + f.dx * g.dt + f.dt * g.dx + f.v * g.dxt};
}

constexpr Jet operator*(const Jet& f, const Jet& g) { return jet_mul(f, g); }

inline double max_abs(const Jet& j) {
  double m = std::abs(j.v);
  m = std::max(m, std::abs(j.dx));
  m = std::max(m, std::abs(j.dt));
  return std::max(m, std::abs(j.dxt));
}

inline bool is_zero(const Jet& j) {
  return j.v == Complex{} && j.dx == Complex{} && j.dt == Complex{} &&
         j.dxt == Complex{};
}

}  // namespace ssg
