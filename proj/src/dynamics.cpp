#include "crn/dynamics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "crn/error.hpp"

namespace crn::dynamics {

namespace {

double max_norm(const State& v) {
  double m = 0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

void check_dim(const PolyVector& f, const State& x) {
  if (f.dim() != x.size()) throw Error(ErrorKind::DimensionMismatch, "state dimension differs from field dimension");
}

void check_box(const Box& box) {
  if (box.lo.size() != box.hi.size() || box.lo.empty()) throw Error(ErrorKind::InvalidArgument, "malformed box");
  for (std::size_t i = 0; i < box.dim(); ++i) {
    if (!(box.lo[i] < box.hi[i])) throw Error(ErrorKind::InvalidArgument, "box needs lo < hi on every axis");
  }
}

double grid_coord(double lo, double hi, std::size_t k, std::size_t count) {
  if (count == 1) return 0.5 * (lo + hi);
  if (k == 0) return lo;
  if (k + 1 == count) return hi;
  const double n = static_cast<double>(count - 1);
  return (lo * (n - static_cast<double>(k)) + hi * static_cast<double>(k)) / n;
}

bool guard_hit(const State& x) {
  return std::any_of(x.begin(), x.end(), [](double v) { return v <= kBoundaryGuard || v >= kBlowupGuard || !std::isfinite(v); });
}

// Solves a x = b by Gaussian elimination with partial pivoting.
State solve(std::vector<State> a, State b) {
  const std::size_t n = b.size();
  double scale = 0;
  for (const auto& row : a) scale = std::max(scale, max_norm(row));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(a[r][c]) > std::abs(a[p][c])) p = r;
    }
    if (std::abs(a[p][c]) <= 1e-14 * std::max(scale, 1.0)) throw Error(ErrorKind::SingularJacobian, "Jacobian is singular");
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      const double m = a[r][c] / a[c][c];
      for (std::size_t k = c; k < n; ++k) a[r][k] -= m * a[c][k];
      b[r] -= m * b[c];
    }
  }
  State x(n);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t k = i + 1; k < n; ++k) s -= a[i][k] * x[k];
    x[i] = s / a[i][i];
  }
  return x;
}

long double eval_on_line(const Polynomial& h, std::vector<long double>& pt, std::size_t axis, long double t) {
  pt[axis] = t;
  return h.evaluate(std::span<const long double>(pt));
}

}  // namespace

State eval_field(const PolyVector& f, const State& x) {
  check_dim(f, x);
  return f.evaluate(std::span<const double>(x));
}

std::vector<long double> eval_field_extended(const PolyVector& f, const State& x) {
  check_dim(f, x);
  std::vector<long double> p(x.begin(), x.end());
  std::vector<long double> out;
  for (const auto& c : f.components()) out.push_back(c.evaluate(std::span<const long double>(p)));
  return out;
}

Trajectory integrate(const PolyVector& f, const State& x0, double t_end, double tol, const IntegrateOptions& opts) {
  check_dim(f, x0);
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  if (!(t_end > 0)) throw Error(ErrorKind::InvalidArgument, "end time must be positive");
  for (double v : x0) {
    if (!(v > 0) || !std::isfinite(v)) throw Error(ErrorKind::InvalidArgument, "initial state must be positive and finite");
  }

  // Dormand-Prince coefficients.
  static constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
  static constexpr double a21 = 1.0 / 5;
  static constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
  static constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
  static constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561, a54 = -212.0 / 729;
  static constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247, a64 = 49.0 / 176,
                          a65 = -5103.0 / 18656;
  static constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784, b6 = 11.0 / 84;
  static constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920, e5 = -17253.0 / 339200,
                          e6 = 22.0 / 525, e7 = -1.0 / 40;
  (void)c2, (void)c3, (void)c4, (void)c5;  // autonomous field

  const std::size_t n = x0.size();
  Trajectory traj;
  traj.times.push_back(0);
  traj.states.push_back(x0);
  if (guard_hit(x0)) {
    traj.hit_boundary = true;
    return traj;
  }

  auto rhs = [&](const State& x) { return f.evaluate(std::span<const double>(x)); };
  auto combo = [&](const State& x, double h, std::initializer_list<std::pair<double, const State*>> terms) {
    State y = x;
    for (const auto& [w, k] : terms) {
      for (std::size_t i = 0; i < n; ++i) y[i] += h * w * (*k)[i];
    }
    return y;
  };

  double t = 0;
  State x = x0;
  State k1 = rhs(x);
  double h = std::min(opts.initial_step, t_end);
  std::size_t steps = 0;
  while (t < t_end) {
    if (++steps > opts.max_steps) throw Error(ErrorKind::NoConvergence, "integration exceeded the step limit");
    h = std::min(h, t_end - t);
    if (h < 1e-14 * std::max(1.0, std::abs(t))) {
      throw Error(ErrorKind::StepUnderflow, "step size underflow at t = " + std::to_string(t));
    }
    const State k2 = rhs(combo(x, h, {{a21, &k1}}));
    const State k3 = rhs(combo(x, h, {{a31, &k1}, {a32, &k2}}));
    const State k4 = rhs(combo(x, h, {{a41, &k1}, {a42, &k2}, {a43, &k3}}));
    const State k5 = rhs(combo(x, h, {{a51, &k1}, {a52, &k2}, {a53, &k3}, {a54, &k4}}));
    const State k6 = rhs(combo(x, h, {{a61, &k1}, {a62, &k2}, {a63, &k3}, {a64, &k4}, {a65, &k5}}));
    const State y = combo(x, h, {{b1, &k1}, {b3, &k3}, {b4, &k4}, {b5, &k5}, {b6, &k6}});
    const State k7 = rhs(y);
    double err = 0;
    bool finite = true;
    for (std::size_t i = 0; i < n; ++i) {
      const double e = h * (e1 * k1[i] + e3 * k3[i] + e4 * k4[i] + e5 * k5[i] + e6 * k6[i] + e7 * k7[i]);
      if (!std::isfinite(e) || !std::isfinite(y[i])) finite = false;
      err = std::max(err, std::abs(e) / std::max({1.0, std::abs(x[i]), std::abs(y[i])}));
    }
    if (!finite) {
      h *= 0.2;
      ++traj.rejected_steps;
      continue;
    }
    if (err <= tol) {
      t = (t_end - t <= h) ? t_end : t + h;
      x = y;
      k1 = k7;
      traj.times.push_back(t);
      traj.states.push_back(x);
      traj.step_sizes.push_back(h);
      if (guard_hit(x)) {
        traj.hit_boundary = true;
        break;
      }
    } else {
      ++traj.rejected_steps;
    }
    const double factor = err == 0 ? 5.0 : std::clamp(0.9 * std::pow(tol / err, 0.2), 0.2, 5.0);
    h *= factor;
  }
  return traj;
}

Jacobian::Jacobian(const PolyVector& f) {
  for (const auto& c : f.components()) {
    std::vector<Polynomial> row;
    for (std::size_t j = 0; j < f.dim(); ++j) row.push_back(c.derivative(j));
    entries_.push_back(std::move(row));
  }
}

std::vector<State> Jacobian::evaluate(const State& x) const {
  std::vector<State> out;
  for (const auto& row : entries_) {
    State r;
    for (const auto& p : row) r.push_back(p.evaluate(std::span<const double>(x)));
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<State> finite_difference_jacobian(const PolyVector& f, const State& x) {
  check_dim(f, x);
  const std::size_t n = x.size();
  std::vector<State> jac(n, State(n));
  for (std::size_t j = 0; j < n; ++j) {
    const double step = 1e-6 * std::max(1.0, std::abs(x[j]));
    State xp = x, xm = x;
    xp[j] += step;
    xm[j] -= step;
    const auto fp = eval_field(f, xp);
    const auto fm = eval_field(f, xm);
    for (std::size_t i = 0; i < n; ++i) jac[i][j] = (fp[i] - fm[i]) / (2 * step);
  }
  return jac;
}

FixedPoint newton_fixed_point(const PolyVector& f, const State& x0, double tol) {
  check_dim(f, x0);
  for (double v : x0) {
    if (!(v > 0)) throw Error(ErrorKind::InvalidArgument, "Newton start must be positive");
  }
  const Jacobian jac(f);
  FixedPoint out;
  out.x = x0;
  State fx = eval_field(f, out.x);
  out.residual = max_norm(fx);
  while (out.residual > tol) {
    if (out.iterations == 100) throw Error(ErrorKind::NoConvergence, "Newton iteration cap reached");
    ++out.iterations;
    const State dx = solve(jac.evaluate(out.x), fx);
    double lambda = 1;
    State next;
    State fnext;
    for (int halvings = 0;; ++halvings) {
      next = out.x;
      for (std::size_t i = 0; i < next.size(); ++i) next[i] -= lambda * dx[i];
      const bool positive = std::all_of(next.begin(), next.end(), [](double v) { return v > 0; });
      if (positive) {
        fnext = eval_field(f, next);
        if (max_norm(fnext) < out.residual || halvings >= 30) break;
      } else if (halvings >= 30) {
        throw Error(ErrorKind::NoConvergence, "Newton step cannot stay in the positive orthant");
      }
      lambda *= 0.5;
    }
    const double before = out.residual;
    out.x = next;
    fx = fnext;
    out.residual = max_norm(fx);
    if (out.residual >= before && lambda < 1e-8) throw Error(ErrorKind::NoConvergence, "Newton stalled");
  }
  return out;
}

std::vector<double> line_roots(const Polynomial& h, const State& base, std::size_t axis, double lo, double hi,
                               std::size_t subdivisions) {
  if (base.size() != h.dim() || axis >= h.dim()) throw Error(ErrorKind::DimensionMismatch, "line does not match polynomial");
  if (subdivisions == 0) subdivisions = 1;
  const Polynomial dh = h.derivative(axis);
  std::vector<long double> pt(base.begin(), base.end());
  std::vector<long double> dpt = pt;
  auto value = [&](long double t) { return eval_on_line(h, pt, axis, t); };
  auto slope = [&](long double t) { return eval_on_line(dh, dpt, axis, t); };

  std::vector<double> roots;
  auto accept = [&](long double t) {
    // Newton polish in extended precision, then verify at the double that is returned.
    for (int it = 0; it < 8; ++it) {
      const long double d = slope(t);
      if (d == 0) break;
      const long double nt = t - value(t) / d;
      if (!std::isfinite(static_cast<double>(nt))) break;
      if (nt == t) break;
      t = nt;
    }
    const double r = static_cast<double>(t);
    if (r < lo || r > hi) return;
    if (std::abs(value(r)) > kRootPolish) return;
    if (!roots.empty() && std::abs(roots.back() - r) <= 1e-12 * std::max(1.0, std::abs(r))) return;
    roots.push_back(r);
  };

  long double prev_t = lo;
  long double prev_v = value(prev_t);
  if (prev_v == 0) accept(prev_t);
  for (std::size_t k = 1; k <= subdivisions; ++k) {
    const long double t = k == subdivisions ? static_cast<long double>(hi)
                                            : lo + (static_cast<long double>(hi) - lo) * k / subdivisions;
    const long double v = value(t);
    if (v == 0) {
      accept(t);
    } else if (prev_v != 0 && (prev_v < 0) != (v < 0)) {
      long double a = prev_t, b = t, fa = prev_v;
      for (int it = 0; it < 200 && b - a > 1e-18L * std::max(1.0L, std::abs(b)); ++it) {
        const long double m = 0.5L * (a + b);
        const long double fm = value(m);
        if (fm == 0) {
          a = b = m;
          break;
        }
        if ((fm < 0) == (fa < 0)) {
          a = m;
          fa = fm;
        } else {
          b = m;
        }
      }
      accept(0.5L * (a + b));
    }
    prev_t = t;
    prev_v = v;
  }
  return roots;
}

namespace {

struct ScanLine {
  std::size_t axis;
  State base;
};

std::vector<ScanLine> scan_lines(const Box& box, std::size_t count) {
  const std::size_t n = box.dim();
  std::vector<ScanLine> lines;
  for (std::size_t axis = 0; axis < n; ++axis) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      ScanLine line{axis, State(n, 0.0)};
      for (std::size_t i = 0; i < n; ++i) {
        if (i != axis) line.base[i] = grid_coord(box.lo[i], box.hi[i], idx[i], count);
      }
      lines.push_back(std::move(line));
      std::size_t i = 0;
      while (i < n && (i == axis || idx[i] + 1 == count)) {
        if (i != axis) idx[i] = 0;
        ++i;
      }
      if (i == n) break;
      ++idx[i];
    }
  }
  return lines;
}

std::vector<State> points_on_line(const Polynomial& h, const Box& box, const ScanLine& line) {
  std::vector<State> out;
  for (double t : line_roots(h, line.base, line.axis, box.lo[line.axis], box.hi[line.axis])) {
    State p = line.base;
    p[line.axis] = t;
    if (std::all_of(p.begin(), p.end(), [](double v) { return v > 0; })) out.push_back(std::move(p));
  }
  return out;
}

template <bool Parallel>
SteadyCurveSample sample(const Polynomial& h, const Box& box, std::size_t count, const PolyVector* full_field) {
  check_box(box);
  if (h.dim() != box.dim()) throw Error(ErrorKind::DimensionMismatch, "box dimension differs from polynomial dimension");
  if (count == 0) throw Error(ErrorKind::InvalidArgument, "count must be at least 1");
  if (full_field && full_field->dim() != box.dim()) throw Error(ErrorKind::DimensionMismatch, "field dimension differs from box");
  const auto lines = scan_lines(box, count);
  std::vector<std::vector<State>> per_line(lines.size());
  const auto total = static_cast<std::int64_t>(lines.size());
  if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < total; ++i) {
      per_line[static_cast<std::size_t>(i)] = points_on_line(h, box, lines[static_cast<std::size_t>(i)]);
    }
  } else {
    for (std::int64_t i = 0; i < total; ++i) {
      per_line[static_cast<std::size_t>(i)] = points_on_line(h, box, lines[static_cast<std::size_t>(i)]);
    }
  }
  SteadyCurveSample out;
  for (auto& pts : per_line) {
    for (auto& p : pts) {
      std::vector<long double> lp(p.begin(), p.end());
      out.h_values.push_back(static_cast<double>(std::abs(h.evaluate(std::span<const long double>(lp)))));
      if (full_field) {
        long double r = 0;
        for (long double v : eval_field_extended(*full_field, p)) r = std::max(r, std::abs(v));
        out.residuals.push_back(static_cast<double>(r));
      }
      out.points.push_back(std::move(p));
    }
  }
  return out;
}

GridPoint grid_point(const PolyVector& f, State x) {
  GridPoint g;
  const State v = f.evaluate(std::span<const double>(x));
  double norm = 0;
  for (double c : v) norm += c * c;
  norm = std::sqrt(norm);
  g.magnitude = norm;
  g.direction.assign(v.size(), 0.0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (norm > 0) g.direction[i] = v[i] / norm;
    g.signs.push_back((v[i] > 0) - (v[i] < 0));
  }
  g.x = std::move(x);
  return g;
}

template <bool Parallel>
std::vector<GridPoint> grid(const PolyVector& f, const Box& box, std::size_t resolution) {
  check_box(box);
  if (f.dim() != box.dim()) throw Error(ErrorKind::DimensionMismatch, "box dimension differs from field dimension");
  if (resolution < 2) throw Error(ErrorKind::InvalidArgument, "resolution must be at least 2");
  const std::size_t n = box.dim();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > 50'000'000 / resolution) throw Error(ErrorKind::TooLarge, "portrait grid too large");
    total *= resolution;
  }
  std::vector<GridPoint> out(total);
  auto at = [&](std::size_t flat) {
    State x(n);
    for (std::size_t i = n; i-- > 0;) {
      x[i] = grid_coord(box.lo[i], box.hi[i], flat % resolution, resolution);
      flat /= resolution;
    }
    return grid_point(f, std::move(x));
  };
  const auto count = static_cast<std::int64_t>(total);
  if constexpr (Parallel) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = at(static_cast<std::size_t>(i));
  } else {
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = at(static_cast<std::size_t>(i));
  }
  return out;
}

}  // namespace

SteadyCurveSample sample_steady_curve(const Polynomial& h, const Box& box, std::size_t count, const PolyVector* full_field) {
  return sample<true>(h, box, count, full_field);
}

SteadyCurveSample sample_steady_curve_serial(const Polynomial& h, const Box& box, std::size_t count,
                                             const PolyVector* full_field) {
  return sample<false>(h, box, count, full_field);
}

std::vector<GridPoint> phase_portrait_grid(const PolyVector& f, const Box& box, std::size_t resolution) {
  return grid<true>(f, box, resolution);
}

std::vector<GridPoint> phase_portrait_grid_serial(const PolyVector& f, const Box& box, std::size_t resolution) {
  return grid<false>(f, box, resolution);
}

}  // namespace crn::dynamics
