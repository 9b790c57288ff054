#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crn/polynomial.hpp"

namespace crn::dynamics {

using State = std::vector<double>;

// Axis-aligned box; lo[i] < hi[i].
struct Box {
  State lo;
  State hi;

  std::size_t dim() const { return lo.size(); }
  static Box cube(std::size_t dim, double lo, double hi) { return {State(dim, lo), State(dim, hi)}; }
};

inline constexpr double kBoundaryGuard = 1e-12;
inline constexpr double kBlowupGuard = 1e12;
inline constexpr double kRootPolish = 1e-12;
inline constexpr double kSteadyResidual = 1e-9;
inline constexpr double kFixedPointTol = 1e-10;

State eval_field(const PolyVector& f, const State& x);
/// Same evaluation in extended precision, for residual checks.
std::vector<long double> eval_field_extended(const PolyVector& f, const State& x);

struct Trajectory {
  std::vector<double> times;
  std::vector<State> states;
  std::vector<double> step_sizes;  // accepted steps, one per interval
  std::size_t rejected_steps = 0;
  bool hit_boundary = false;  // some coordinate reached <= 1e-12 or >= 1e12

  const State& final_state() const { return states.back(); }
};

struct IntegrateOptions {
  double initial_step = 1e-3;
  std::size_t max_steps = 2'000'000;
};

/// Dormand-Prince 5(4) with local error <= tol per accepted step, measured per component
/// relative to max(1, |x_i|) so that blow-up can reach the guard.
/// Throws StepUnderflow if the step collapses, NoConvergence past max_steps.
Trajectory integrate(const PolyVector& f, const State& x0, double t_end, double tol, const IntegrateOptions& opts = {});

// d f_i / d x_j as polynomials.
class Jacobian {
 public:
  explicit Jacobian(const PolyVector& f);
  std::vector<State> evaluate(const State& x) const;

 private:
  std::vector<std::vector<Polynomial>> entries_;
};

/// Central differences with step 1e-6 * max(1, |x_j|).
std::vector<State> finite_difference_jacobian(const PolyVector& f, const State& x);

struct FixedPoint {
  State x;
  int iterations = 0;
  double residual = 0;  // max norm of f(x)
};

/// Damped Newton with the exact Jacobian. Throws SingularJacobian or NoConvergence
/// (100 iterations).
FixedPoint newton_fixed_point(const PolyVector& f, const State& x0, double tol = kFixedPointTol);

struct SteadyCurveSample {
  std::vector<State> points;
  std::vector<double> h_values;   // |h| at each point
  std::vector<double> residuals;  // max norm of the full field, when one was given
};

/// Roots of h on the segment {base + t e_axis : t in [lo, hi]}: sign-change bracketing on
/// a uniform subdivision, bisection, then Newton polish to |h| <= 1e-12. Roots that
/// cannot be polished are dropped.
std::vector<double> line_roots(const Polynomial& h, const State& base, std::size_t axis, double lo, double hi,
                               std::size_t subdivisions = 256);

/// Scan lines parallel to each axis, positioned on a count-point grid (box faces included)
/// in the remaining coordinates. Points with a nonpositive coordinate are discarded.
SteadyCurveSample sample_steady_curve(const Polynomial& h, const Box& box, std::size_t count,
                                      const PolyVector* full_field = nullptr);
SteadyCurveSample sample_steady_curve_serial(const Polynomial& h, const Box& box, std::size_t count,
                                             const PolyVector* full_field = nullptr);

struct GridPoint {
  State x;
  State direction;  // f(x) / |f(x)|, zero where f vanishes
  double magnitude = 0;
  std::vector<int> signs;  // sign of each component of f(x)
};

/// resolution points per axis, corners included; row-major with the last axis fastest.
std::vector<GridPoint> phase_portrait_grid(const PolyVector& f, const Box& box, std::size_t resolution);
std::vector<GridPoint> phase_portrait_grid_serial(const PolyVector& f, const Box& box, std::size_t resolution);

}  // namespace crn::dynamics
