#include "ssg/sweep.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ssg {

namespace {

// 53-bit mantissa draw in [0, 1); spelled out so every platform produces
// the same stream from the same seed.
double unit_draw(std::mt19937_64& rng) {
  return double(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<std::pair<double, double>> draw_points(const Window& w,
                                                   const SamplePlan& plan,
                                                   const MarginFn& margin,
                                                   int* rejected) {
  if (plan.count < 1) throw std::invalid_argument("sample count must be >= 1");
  if (!(w.xmax >= w.xmin) || !(w.tmax >= w.tmin)) {
    throw std::invalid_argument("sampling window is inverted");
  }

  std::mt19937_64 rng(plan.seed);
  std::vector<std::pair<double, double>> pts;
  pts.reserve(std::size_t(plan.count));
  int dropped = 0;
  for (int attempt = 0; attempt < plan.max_attempts; ++attempt) {
    const double x = w.xmin + unit_draw(rng) * (w.xmax - w.xmin);
    const double t = w.tmin + unit_draw(rng) * (w.tmax - w.tmin);
    if (margin && !(margin(x, t) >= plan.margin)) {
      ++dropped;
      continue;
    }
    pts.emplace_back(x, t);
    if (int(pts.size()) == plan.count) {
      if (rejected) *rejected = dropped;
      return pts;
    }
  }
  throw std::runtime_error("sampling region exhausted: only " +
                           std::to_string(pts.size()) + " of " +
                           std::to_string(plan.count) +
                           " points cleared the singular margin");
}

void for_each_index(std::size_t n, ExecPolicy policy,
                    const std::function<void(std::size_t)>& fn) {
  if (n == 0) return;
  if (policy == ExecPolicy::Serial) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }

  std::vector<std::exception_ptr> errors(n);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
  for (long long i = 0; i < (long long)n; ++i) {
    try {
      fn(std::size_t(i));
    } catch (...) {
      errors[std::size_t(i)] = std::current_exception();
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
  }
}

double max_over_indices(std::size_t n, ExecPolicy policy,
                        const std::function<double(std::size_t)>& fn) {
  std::vector<double> vals(n, 0.0);
  for_each_index(n, policy, [&](std::size_t i) { vals[i] = fn(i); });
  double m = 0.0;
  for (double v : vals) m = std::max(m, v);
  return m;
}

}  // namespace ssg
