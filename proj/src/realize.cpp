#include "crn/realize.hpp"

#include <algorithm>
#include <exception>
#include <map>

#include "crn/classify.hpp"
#include "crn/geometry.hpp"
#include "crn/lp.hpp"

namespace crn {

bool is_dynamically_equivalent(const MassActionSystem& a, const MassActionSystem& b) {
  if (!(a.species() == b.species())) {
    throw Error(ErrorKind::DimensionMismatch, "dynamical equivalence needs identical species lists");
  }
  return mass_action_field(a) == mass_action_field(b);
}

MassActionSystem canonical_realization(const PolyVector& f, const SpeciesList& species) {
  if (f.dim() != species.size()) throw Error(ErrorKind::DimensionMismatch, "field dimension differs from species count");
  SystemBuilder b(species);
  for (const auto& e : f.support()) {
    for (std::size_t i = 0; i < f.dim(); ++i) {
      const Rational c = f[i].coefficient(e);
      if (c == 0) continue;
      Exponent target = e;
      if (c > 0) {
        target[i] += 1;
      } else {
        if (e[i] == 0) {
          throw Error(ErrorKind::MalformedField, "monomial " + to_string(Polynomial::monomial(e, Rational(1)), species.names()) +
                                                     " cannot decrease " + species[i] + " under mass action");
        }
        target[i] -= 1;
      }
      b.add_reaction(e, target, abs(c));
    }
  }
  return b.build();
}

CandidateComplexSet::CandidateComplexSet(std::vector<Exponent> complexes) : complexes_(std::move(complexes)) {
  std::sort(complexes_.begin(), complexes_.end(), GrlexLess{});
  complexes_.erase(std::unique(complexes_.begin(), complexes_.end()), complexes_.end());
  for (const auto& e : complexes_) {
    if (!complexes_.empty() && e.size() != complexes_.front().size()) {
      throw Error(ErrorKind::DimensionMismatch, "candidate complexes of different dimension");
    }
    for (int k : e) {
      if (k < 0) throw Error(ErrorKind::InvalidArgument, "candidate complex outside the nonnegative orthant");
    }
  }
}

bool CandidateComplexSet::contains(const Exponent& e) const {
  return std::binary_search(complexes_.begin(), complexes_.end(), e, GrlexLess{});
}

CandidateComplexSet newton_polytope_candidates(const PolyVector& f, int margin) {
  if (margin < 0) throw Error(ErrorKind::InvalidArgument, "margin must be nonnegative");
  const std::size_t n = f.dim();
  if (n == 0 || n > 3) throw Error(ErrorKind::UnsupportedDimension, "candidate sets are supported in dimensions 1 to 3");
  const auto support = f.support();
  if (support.empty()) return CandidateComplexSet{};

  std::vector<Exponent> corners;
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Exponent c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = (mask >> i) & 1 ? margin : -margin;
    corners.push_back(c);
  }
  std::vector<Point> pts;
  Exponent lo(n, 0), hi(n, 0);
  bool first = true;
  for (const auto& s : support) {
    for (const auto& c : corners) {
      Point p;
      for (std::size_t i = 0; i < n; ++i) {
        int v = s[i] + c[i];
        p.push_back(Rational(v));
        if (first) {
          lo[i] = hi[i] = v;
        } else {
          lo[i] = std::min(lo[i], v);
          hi[i] = std::max(hi[i], v);
        }
      }
      first = false;
      pts.push_back(std::move(p));
    }
  }
  for (auto& l : lo) l = std::max(l, 0);
  double box = 1;
  for (std::size_t i = 0; i < n; ++i) box *= hi[i] - lo[i] + 1;
  if (box > 1e6) throw Error(ErrorKind::TooLarge, "Newton polytope bounding box has " + std::to_string(static_cast<long long>(box)) + " lattice points");

  const auto hull = convex_hull(pts);
  std::vector<Exponent> inside;
  Exponent cur = lo;
  while (true) {
    Point p;
    for (int v : cur) p.push_back(Rational(v));
    if (hull.contains(p)) inside.push_back(cur);
    std::size_t i = 0;
    while (i < n && cur[i] == hi[i]) {
      cur[i] = lo[i];
      ++i;
    }
    if (i == n) break;
    ++cur[i];
  }
  if (inside.size() > kMaxCandidates) {
    throw Error(ErrorKind::TooLarge, "candidate set has " + std::to_string(inside.size()) + " complexes (limit " +
                                         std::to_string(kMaxCandidates) + ")");
  }
  return CandidateComplexSet(std::move(inside));
}

namespace {

void check_candidates(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species) {
  if (f.dim() != species.size()) throw Error(ErrorKind::DimensionMismatch, "field dimension differs from species count");
  if (c.size() > kMaxCandidates) {
    throw Error(ErrorKind::TooLarge, "candidate set has " + std::to_string(c.size()) + " complexes (limit " +
                                         std::to_string(kMaxCandidates) + ")");
  }
  for (const auto& e : c.complexes()) {
    if (e.size() != f.dim()) throw Error(ErrorKind::DimensionMismatch, "candidate dimension differs from field dimension");
  }
  for (const auto& e : f.support()) {
    if (!c.contains(e)) {
      throw Error(ErrorKind::InvalidArgument,
                  "candidate set misses support monomial " + to_string(Polynomial::monomial(e, Rational(1)), species.names()));
    }
  }
}

// Balance constraints at one source: sum_t k_t (t - y) = f_y.
struct SourceProblem {
  Exponent source;
  RationalVector target_field;
  std::vector<std::size_t> targets;  // indices into the candidate list
  std::vector<RationalVector> rows;  // n rows, one column per target
};

SourceProblem source_problem(const std::vector<Exponent>& cands, std::size_t y, const std::vector<std::size_t>& targets,
                             const PolyVector& f) {
  SourceProblem p;
  p.source = cands[y];
  p.target_field = f.coefficient_vector(cands[y]);
  p.targets = targets;
  const std::size_t n = f.dim();
  p.rows.assign(n, RationalVector(targets.size(), Rational(0)));
  for (std::size_t k = 0; k < targets.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) p.rows[i][k] = cands[targets[k]][i] - cands[y][i];
  }
  return p;
}

bool is_zero(const RationalVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& r) { return r == 0; });
}

// Homogenised edge LP: max k_e subject to A k = tau f, k_e <= 1, tau <= 1, k, tau >= 0.
// Always feasible and bounded; a positive optimum means some realisation at this source
// uses the edge. Columns: targets, tau, two slacks.
lp::Result edge_lp(const SourceProblem& p, std::size_t e) {
  const std::size_t t = p.targets.size();
  std::vector<RationalVector> a;
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    RationalVector r = p.rows[i];
    r.push_back(-p.target_field[i]);
    r.push_back(Rational(0));
    r.push_back(Rational(0));
    a.push_back(std::move(r));
  }
  RationalVector edge_bound(t + 3, Rational(0));
  edge_bound[e] = 1;
  edge_bound[t + 1] = 1;
  a.push_back(std::move(edge_bound));
  RationalVector tau_bound(t + 3, Rational(0));
  tau_bound[t] = 1;
  tau_bound[t + 2] = 1;
  a.push_back(std::move(tau_bound));
  RationalVector b(p.rows.size(), Rational(0));
  b.push_back(Rational(1));
  b.push_back(Rational(1));
  RationalVector c(t + 3, Rational(0));
  c[e] = 1;
  return lp::maximize(a, b, c);
}

struct EdgeTask {
  std::size_t problem;
  std::size_t column;
};

struct Admissibility {
  std::vector<std::vector<char>> admissible;        // per problem, per column
  std::vector<std::vector<RationalVector>> points;  // feasible solutions with positive entries
  std::vector<RationalVector> base;                 // one feasible solution per problem
  bool feasible = true;
};

template <bool Parallel>
Admissibility admissible_edges(const std::vector<SourceProblem>& problems) {
  Admissibility out;
  out.admissible.resize(problems.size());
  out.points.resize(problems.size());
  out.base.resize(problems.size());
  std::vector<EdgeTask> tasks;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    out.admissible[p].assign(problems[p].targets.size(), 0);
    out.base[p].assign(problems[p].targets.size(), Rational(0));
    if (!is_zero(problems[p].target_field)) {
      if (problems[p].targets.empty()) {
        out.feasible = false;
        return out;
      }
      auto r = lp::find_feasible(problems[p].rows, problems[p].target_field);
      if (r.status == lp::Status::Infeasible) {
        out.feasible = false;
        return out;
      }
      out.base[p] = r.x;
    }
    for (std::size_t k = 0; k < problems[p].targets.size(); ++k) tasks.push_back({p, k});
  }
  std::vector<lp::Result> results(tasks.size());
  const auto count = static_cast<std::int64_t>(tasks.size());
  if constexpr (Parallel) {
    std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t i = 0; i < count; ++i) {
      try {
        const auto& task = tasks[static_cast<std::size_t>(i)];
        results[static_cast<std::size_t>(i)] = edge_lp(problems[task.problem], task.column);
      } catch (...) {
#pragma omp critical
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      const auto& task = tasks[static_cast<std::size_t>(i)];
      results[static_cast<std::size_t>(i)] = edge_lp(problems[task.problem], task.column);
    }
  }
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& r = results[i];
    if (r.status != lp::Status::Optimal) {
      throw Error(ErrorKind::Internal, "bounded edge LP did not reach an optimum (status " + std::to_string(static_cast<int>(r.status)) + ")");
    }
    if (r.objective > 0) {
      const auto& task = tasks[i];
      const std::size_t t = problems[task.problem].targets.size();
      out.admissible[task.problem][task.column] = 1;
      // tau > 0: rescale to a solution; tau = 0: a recession direction added to the base.
      const Rational tau = r.x[t];
      RationalVector k(t);
      for (std::size_t j = 0; j < t; ++j) k[j] = tau > 0 ? Rational(r.x[j] / tau) : Rational(out.base[task.problem][j] + r.x[j]);
      out.points[task.problem].push_back(std::move(k));
    }
  }
  return out;
}

template <bool Parallel>
WrDecision decide(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species) {
  check_candidates(f, c, species);
  WrDecision decision;
  decision.candidates = c;
  const auto& cands = c.complexes();
  const std::size_t m = cands.size();

  // allowed[y][t]: edge y -> t not yet pruned
  std::vector<std::vector<char>> allowed(m, std::vector<char>(m, 1));
  for (std::size_t y = 0; y < m; ++y) allowed[y][y] = 0;

  while (true) {
    std::vector<SourceProblem> problems;
    for (std::size_t y = 0; y < m; ++y) {
      std::vector<std::size_t> targets;
      for (std::size_t t = 0; t < m; ++t) {
        if (allowed[y][t]) targets.push_back(t);
      }
      problems.push_back(source_problem(cands, y, targets, f));
    }
    auto adm = admissible_edges<Parallel>(problems);
    PruningStep step;
    step.feasible = adm.feasible;
    if (!adm.feasible) {
      decision.trace.push_back(step);
      return decision;
    }

    std::vector<Edge> edges;
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t k = 0; k < problems[y].targets.size(); ++k) {
        if (adm.admissible[y][k]) edges.push_back({y, problems[y].targets[k]});
      }
    }
    step.admissible_edges = edges.size();
    ReactionNetwork graph(species, cands, edges);
    auto comp = strongly_connected_components(graph);
    std::vector<std::vector<char>> next(m, std::vector<char>(m, 0));
    for (const auto& e : edges) {
      if (comp[e.src] == comp[e.dst]) {
        next[e.src][e.dst] = 1;
        ++step.edges_in_cycles;
      }
    }
    decision.trace.push_back(step);

    if (step.edges_in_cycles == step.admissible_edges) {
      // Fixpoint: average the per-edge solutions at each source for full support.
      SystemBuilder b(species);
      for (std::size_t y = 0; y < m; ++y) {
        const auto& pts = adm.points[y];
        if (pts.empty()) continue;
        RationalVector avg(problems[y].targets.size(), Rational(0));
        for (const auto& p : pts) {
          for (std::size_t k = 0; k < avg.size(); ++k) avg[k] += p[k];
        }
        for (std::size_t k = 0; k < avg.size(); ++k) {
          avg[k] /= static_cast<long>(pts.size());
          if (avg[k] > 0) b.add_reaction(cands[y], cands[problems[y].targets[k]], avg[k]);
        }
      }
      auto witness = b.build();
      if (!(mass_action_field(witness) == f) || !is_weakly_reversible(witness.network())) {
        throw Error(ErrorKind::Internal, "weakly reversible witness failed certificate check");
      }
      decision.realizable = true;
      decision.witness = std::move(witness);
      return decision;
    }
    allowed = std::move(next);
  }
}

}  // namespace

RealizationResult realization_feasible(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species) {
  check_candidates(f, c, species);
  const auto& cands = c.complexes();
  RealizationResult out;
  SystemBuilder b(species);
  for (std::size_t y = 0; y < cands.size(); ++y) {
    std::vector<std::size_t> targets;
    for (std::size_t t = 0; t < cands.size(); ++t) {
      if (t != y) targets.push_back(t);
    }
    auto p = source_problem(cands, y, targets, f);
    if (is_zero(p.target_field)) continue;
    auto r = lp::find_feasible(p.rows, p.target_field);
    if (r.status == lp::Status::Infeasible) {
      out.infeasible_source = cands[y];
      out.phase_one_value = r.infeasibility;
      return out;
    }
    for (std::size_t k = 0; k < targets.size(); ++k) {
      if (r.x[k] > 0) b.add_reaction(cands[y], cands[targets[k]], r.x[k]);
    }
  }
  out.feasible = true;
  out.witness = b.build();
  return out;
}

WrDecision wr_realizable_on(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species) {
  return decide<true>(f, c, species);
}

WrDecision wr_realizable_on_serial(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species) {
  return decide<false>(f, c, species);
}

}  // namespace crn
