#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace ssg {

// Rectangular sampling window in (x, t).
struct Window {
  double xmin = -1.0;
  double xmax = 1.0;
  double tmin = -1.0;
  double tmax = 1.0;
};

// Distance of a point to the nearest singular curve of whatever field is
// being sampled; +inf when there is none.
using MarginFn = std::function<double(double, double)>;

struct SamplePlan {
  int count = 50;
  std::uint64_t seed = 1;
  double margin = 1e-3;
  int max_attempts = 200000;
};

// Seeded rejection sampling: uniform draws over the window, keeping points
// whose margin clears the threshold. Deterministic across platforms (the
// uniform mapping is spelled out rather than taken from a distribution).
// Throws when the region is exhausted before `count` points are accepted.
// `rejected`, if given, receives the number of discarded draws.
std::vector<std::pair<double, double>> draw_points(const Window& w,
                                                   const SamplePlan& plan,
                                                   const MarginFn& margin,
                                                   int* rejected = nullptr);

enum class ExecPolicy { Serial, Parallel };

// Index sweep with a serial reference path and an OpenMP path. Results must
// be written into per-index slots by the callee; both paths produce
// identical output, and the first-thrown exception (lowest index) is
// rethrown on the caller thread.
void for_each_index(std::size_t n, ExecPolicy policy,
                    const std::function<void(std::size_t)>& fn);

// Max over fn(i), evaluated under the policy. Reduction is serial over the
// stored per-index values, so the result is bit-identical for both policies.
double max_over_indices(std::size_t n, ExecPolicy policy,
                        const std::function<double(std::size_t)>& fn);

}  // namespace ssg
