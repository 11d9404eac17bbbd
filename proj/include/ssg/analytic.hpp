#pragma once

#include <stdexcept>
#include <string>

#include "ssg/jet.hpp"

namespace ssg {

// Evaluation hit a genuine singularity (pole, branch point, singular field
// curve). Carries the offending value so callers can report where.
class SingularPoint : public std::runtime_error {
 public:
  SingularPoint(const std::string& what, Complex where)
      : std::runtime_error(what), where_(where) {}
  Complex where() const { return where_; }

 private:
  Complex where_;
};

// Analytic scalar function presented as its full derivative tower:
// deriv(k, z) returns the k-th derivative at z. The towers are closed-form,
// so composition through the even-function lift stays exact to roundoff.
struct AnalyticFunction {
  const char* name;
  Complex (*deriv)(int order, Complex z);
  void (*check_domain)(Complex z);  // throws SingularPoint; may be nullptr
};

extern const AnalyticFunction kExp;
extern const AnalyticFunction kSinh;
extern const AnalyticFunction kCosh;
extern const AnalyticFunction kTanh;
extern const AnalyticFunction kSech;
extern const AnalyticFunction kArctanh;
extern const AnalyticFunction kSqrt;
extern const AnalyticFunction kLog;
extern const AnalyticFunction kReciprocal;

// Chain rule through the jet, starting at the given tower offset:
// the result is the jet of z -> h^(base_order)(f(z)).
Jet jet_apply(const AnalyticFunction& h, const Jet& f, int base_order = 0);

inline Jet jet_reciprocal(const Jet& g) { return jet_apply(kReciprocal, g); }
inline Jet jet_div(const Jet& f, const Jet& g) {
  return jet_mul(f, jet_reciprocal(g));
}

}  // namespace ssg
