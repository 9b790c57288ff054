#include "crn/classify.hpp"

#include <algorithm>
#include <exception>
#include <limits>
#include <map>
#include <random>

#include "crn/lp.hpp"

namespace crn {

// ---------------------------------------------------------------------------
// Graph structure

std::vector<std::size_t> strongly_connected_components(const ReactionNetwork& net) {
  const std::size_t v = net.vertices().size();
  std::vector<std::vector<std::size_t>> out(v), in(v);
  for (const auto& e : net.edges()) {
    out[e.src].push_back(e.dst);
    in[e.dst].push_back(e.src);
  }
  // Kosaraju, iterative.
  std::vector<char> seen(v, 0);
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < v; ++s) {
    if (seen[s]) continue;
    std::vector<std::pair<std::size_t, std::size_t>> stack{{s, 0}};
    seen[s] = 1;
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (next < out[node].size()) {
        auto w = out[node][next++];
        if (!seen[w]) {
          seen[w] = 1;
          stack.emplace_back(w, 0);
        }
      } else {
        order.push_back(node);
        stack.pop_back();
      }
    }
  }
  const std::size_t unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> comp(v, unset);
  std::size_t next_id = 0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    if (comp[*it] != unset) continue;
    std::vector<std::size_t> stack{*it};
    comp[*it] = next_id;
    while (!stack.empty()) {
      auto node = stack.back();
      stack.pop_back();
      for (auto w : in[node]) {
        if (comp[w] == unset) {
          comp[w] = next_id;
          stack.push_back(w);
        }
      }
    }
    ++next_id;
  }
  return comp;
}

bool is_weakly_reversible(const ReactionNetwork& net) {
  auto comp = strongly_connected_components(net);
  return std::all_of(net.edges().begin(), net.edges().end(),
                     [&](const Edge& e) { return comp[e.src] == comp[e.dst]; });
}

int deficiency(const ReactionNetwork& net) {
  const auto v = static_cast<int>(net.vertices().size());
  const auto l = static_cast<int>(linkage_classes(net).size());
  const auto s = static_cast<int>(stoichiometric_subspace(net).dimension);
  const int d = v - l - s;
  if (d < 0) throw Error(ErrorKind::Internal, "negative deficiency " + std::to_string(d));
  return d;
}

// ---------------------------------------------------------------------------
// Per-direction predicates

namespace {

struct Projected {
  std::vector<std::int64_t> source_level;  // u . y per edge
  std::vector<std::int64_t> change;        // u . (y' - y) per edge
};

Projected project(const ReactionNetwork& net, const IntVector& u) {
  if (u.size() != net.dim()) throw Error(ErrorKind::DimensionMismatch, "direction dimension differs from species count");
  Projected p;
  const auto m = net.edges().size();
  p.source_level.resize(m);
  p.change.resize(m);
  for (std::size_t j = 0; j < m; ++j) {
    const auto& y = net.source(j);
    p.source_level[j] = checked_dot(u, IntVector(y.begin(), y.end()));
    p.change[j] = checked_dot(u, net.reaction_vector(j));
  }
  return p;
}

DirectionVerdict check_direction(const Projected& p, bool strong) {
  const auto m = p.change.size();
  std::int64_t min_level = std::numeric_limits<std::int64_t>::max();
  for (auto l : p.source_level) min_level = std::min(min_level, l);
  for (std::size_t j = 0; j < m; ++j) {
    if (p.change[j] >= 0) continue;
    bool witnessed = false;
    for (std::size_t w = 0; w < m && !witnessed; ++w) {
      witnessed = p.change[w] > 0 && p.source_level[w] < p.source_level[j] &&
                  (!strong || p.source_level[w] <= min_level);
    }
    if (!witnessed) return {false, j};
  }
  return {true, std::nullopt};
}

bool orthogonal_to_reactions(const Projected& p) {
  return std::all_of(p.change.begin(), p.change.end(), [](std::int64_t c) { return c == 0; });
}

SweepVerdict sweep_serial(const ReactionNetwork& net, bool strong) {
  SweepVerdict v;
  for (const auto& u : representative_directions(net)) {
    auto p = project(net, u);
    if (strong && orthogonal_to_reactions(p)) continue;
    ++v.directions_checked;
    auto d = check_direction(p, strong);
    if (!d.pass) {
      v.holds = false;
      v.counterexample = u;
      v.failing_edge = d.failing_edge;
      return v;
    }
  }
  return v;
}

SweepVerdict sweep_parallel(const ReactionNetwork& net, bool strong) {
  const auto reps = representative_directions(net);
  const auto count = static_cast<std::int64_t>(reps.size());
  // 0 = skipped, 1 = pass, 2 = fail
  std::vector<char> state(reps.size(), 0);
  std::vector<std::size_t> failing(reps.size(), 0);
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      auto p = project(net, reps[static_cast<std::size_t>(i)]);
      if (strong && orthogonal_to_reactions(p)) continue;
      auto d = check_direction(p, strong);
      state[static_cast<std::size_t>(i)] = d.pass ? 1 : 2;
      if (!d.pass) failing[static_cast<std::size_t>(i)] = *d.failing_edge;
    } catch (...) {
#pragma omp critical
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  SweepVerdict v;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    if (state[i] == 0) continue;
    ++v.directions_checked;
    if (state[i] == 2) {
      v.holds = false;
      v.counterexample = reps[i];
      v.failing_edge = failing[i];
      // directions_checked mirrors the serial early exit
      return v;
    }
  }
  return v;
}

}  // namespace

DirectionVerdict endotactic_for_direction(const ReactionNetwork& net, const IntVector& u) {
  return check_direction(project(net, u), false);
}

DirectionVerdict strongly_endotactic_for_direction(const ReactionNetwork& net, const IntVector& u) {
  return check_direction(project(net, u), true);
}

SweepVerdict is_endotactic(const ReactionNetwork& net) { return sweep_parallel(net, false); }
SweepVerdict is_endotactic_serial(const ReactionNetwork& net) { return sweep_serial(net, false); }
SweepVerdict is_strongly_endotactic(const ReactionNetwork& net) { return sweep_parallel(net, true); }
SweepVerdict is_strongly_endotactic_serial(const ReactionNetwork& net) { return sweep_serial(net, true); }

bool sweep_test_endotactic(const ReactionNetwork& net, const IntVector& u) {
  auto p = project(net, u);
  std::map<std::int64_t, std::vector<std::size_t>> levels;
  for (std::size_t j = 0; j < p.change.size(); ++j) levels[p.source_level[j]].push_back(j);
  for (const auto& [level, edges] : levels) {
    bool any_increase = false;
    for (auto j : edges) {
      if (p.change[j] < 0) return false;
      any_increase |= p.change[j] > 0;
    }
    if (any_increase) return true;
  }
  return true;
}

bool sweep_test_strongly_endotactic(const ReactionNetwork& net, const IntVector& u) {
  auto p = project(net, u);
  if (orthogonal_to_reactions(p)) return true;
  std::int64_t min_level = std::numeric_limits<std::int64_t>::max();
  for (auto l : p.source_level) min_level = std::min(min_level, l);
  bool any_increase = false;
  for (std::size_t j = 0; j < p.change.size(); ++j) {
    if (p.source_level[j] != min_level) continue;
    if (p.change[j] < 0) return false;
    any_increase |= p.change[j] > 0;
  }
  return any_increase;
}

// ---------------------------------------------------------------------------
// Falsifier

namespace {

FalsifierResult falsify(const ReactionNetwork& net, std::size_t trials, std::uint64_t seed, std::int64_t bound,
                        bool strong) {
  const std::size_t n = net.dim();
  const std::size_t m = net.edges().size();
  std::vector<IntVector> src(m), delta(m);
  for (std::size_t j = 0; j < m; ++j) {
    src[j].assign(net.source(j).begin(), net.source(j).end());
    delta[j] = net.reaction_vector(j);
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  FalsifierResult r;
  IntVector u(n);
  std::vector<std::int64_t> level(m), change(m);
  for (std::size_t t = 0; t < trials; ++t) {
    for (auto& x : u) x = dist(rng);
    ++r.trials;
    bool nonzero = false;
    std::int64_t lowest = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < m; ++j) {
      level[j] = checked_dot(u, src[j]);
      change[j] = checked_dot(u, delta[j]);
      nonzero |= change[j] != 0;
      lowest = std::min(lowest, level[j]);
    }
    if (strong && !nonzero) continue;
    // Lowest source level carrying a u-increasing reaction.
    std::int64_t lowest_increase = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < m; ++j) {
      if (change[j] > 0) lowest_increase = std::min(lowest_increase, level[j]);
    }
    if (strong && lowest_increase != lowest) lowest_increase = std::numeric_limits<std::int64_t>::max();
    for (std::size_t j = 0; j < m; ++j) {
      if (change[j] < 0 && !(lowest_increase < level[j])) {
        r.refutation = u;
        return r;
      }
    }
  }
  return r;
}

}  // namespace

FalsifierResult falsify_endotactic(const ReactionNetwork& net, std::size_t trials, std::uint64_t seed,
                                   std::int64_t bound) {
  return falsify(net, trials, seed, bound, false);
}

FalsifierResult falsify_strongly_endotactic(const ReactionNetwork& net, std::size_t trials, std::uint64_t seed,
                                            std::int64_t bound) {
  return falsify(net, trials, seed, bound, true);
}

// ---------------------------------------------------------------------------
// Siphons

namespace {

using Mask = std::uint32_t;

Mask complex_mask(const Exponent& y) {
  Mask m = 0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (y[i] > 0) m |= Mask{1} << i;
  }
  return m;
}

Mask to_mask(const ReactionNetwork& net, const SpeciesSubset& z) {
  Mask m = 0;
  for (auto i : z) {
    if (i >= net.dim()) throw Error(ErrorKind::InvalidArgument, "species index out of range");
    if (i >= 32) throw Error(ErrorKind::TooLarge, "species index too large for subset enumeration");
    m |= Mask{1} << i;
  }
  return m;
}

SpeciesSubset from_mask(Mask m, std::size_t n) {
  SpeciesSubset z;
  for (std::size_t i = 0; i < n; ++i) {
    if (m & (Mask{1} << i)) z.push_back(i);
  }
  return z;
}

bool siphon_mask(const std::vector<std::pair<Mask, Mask>>& edges, Mask z) {
  for (const auto& [src, dst] : edges) {
    if ((src & z) == 0 && (dst & z) != 0) return false;
  }
  return true;
}

std::vector<Mask> siphon_masks(const ReactionNetwork& net) {
  const std::size_t n = net.dim();
  if (n > 16) throw Error(ErrorKind::TooLarge, "siphon enumeration supports at most 16 species, got " + std::to_string(n));
  std::vector<std::pair<Mask, Mask>> edges;
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    edges.emplace_back(complex_mask(net.source(j)), complex_mask(net.target(j)));
  }
  std::vector<Mask> out;
  for (Mask z = 1; z < (Mask{1} << n); ++z) {
    if (siphon_mask(edges, z)) out.push_back(z);
  }
  return out;
}

bool subset_order(const SpeciesSubset& a, const SpeciesSubset& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

bool is_siphon(const ReactionNetwork& net, const SpeciesSubset& z) {
  if (z.empty()) return true;
  const Mask zm = to_mask(net, z);
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    if ((complex_mask(net.source(j)) & zm) == 0 && (complex_mask(net.target(j)) & zm) != 0) return false;
  }
  return true;
}

std::vector<SpeciesSubset> all_siphons(const ReactionNetwork& net) {
  std::vector<SpeciesSubset> out;
  for (auto m : siphon_masks(net)) out.push_back(from_mask(m, net.dim()));
  std::sort(out.begin(), out.end(), subset_order);
  return out;
}

std::vector<SpeciesSubset> siphons(const ReactionNetwork& net) {
  auto masks = siphon_masks(net);
  std::vector<SpeciesSubset> out;
  for (auto m : masks) {
    bool minimal = std::none_of(masks.begin(), masks.end(), [m](Mask o) { return o != m && (o & m) == o; });
    if (minimal) out.push_back(from_mask(m, net.dim()));
  }
  std::sort(out.begin(), out.end(), subset_order);
  return out;
}

bool is_critical(const ReactionNetwork& net, const SpeciesSubset& z) {
  if (z.empty()) return true;
  for (auto i : z) {
    if (i >= net.dim()) throw Error(ErrorKind::InvalidArgument, "species index out of range");
  }
  // Need v in S with v_i > 0 on z; p then fills the remaining coordinates. By scaling,
  // v_i >= 1 on z. Variables: c+ and c- (basis coefficients), then one surplus per i in z.
  const auto basis = stoichiometric_subspace(net).basis;
  const std::size_t s = basis.size();
  const std::size_t vars = 2 * s + z.size();
  std::vector<RationalVector> a;
  RationalVector b;
  for (std::size_t k = 0; k < z.size(); ++k) {
    RationalVector row(vars, Rational(0));
    for (std::size_t r = 0; r < s; ++r) {
      row[r] = basis[r][z[k]];
      row[s + r] = -basis[r][z[k]];
    }
    row[2 * s + k] = -1;
    a.push_back(std::move(row));
    b.push_back(Rational(1));
  }
  return lp::find_feasible(a, b).status != lp::Status::Infeasible;
}

bool is_complex_balanced_at(const MassActionSystem& sys, const RationalVector& x) {
  const auto& net = sys.network();
  if (x.size() != net.dim()) throw Error(ErrorKind::DimensionMismatch, "point dimension differs from species count");
  for (const auto& xi : x) {
    if (xi <= 0) throw Error(ErrorKind::InvalidArgument, "complex balance point must be strictly positive");
  }
  const std::size_t v = net.vertices().size();
  std::vector<Rational> monomial(v);
  for (std::size_t i = 0; i < v; ++i) {
    monomial[i] = Polynomial::monomial(net.vertices()[i], Rational(1)).evaluate(x);
  }
  std::vector<Rational> balance(v, Rational(0));
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    const auto& e = net.edges()[j];
    Rational flux = sys.rates()[j] * monomial[e.src];
    balance[e.src] -= flux;
    balance[e.dst] += flux;
  }
  return std::all_of(balance.begin(), balance.end(), [](const Rational& r) { return r == 0; });
}

ClassificationReport classification_report(const ReactionNetwork& net) {
  ClassificationReport r;
  r.vertex_count = net.vertices().size();
  r.linkage_class_count = linkage_classes(net).size();
  r.stoichiometric_dimension = stoichiometric_subspace(net).dimension;
  r.deficiency = deficiency(net);
  r.weakly_reversible = is_weakly_reversible(net);
  r.endotactic = is_endotactic(net);
  r.strongly_endotactic = is_strongly_endotactic(net);
  r.siphons = siphons(net);
  for (const auto& z : r.siphons) {
    if (is_critical(net, z)) r.critical_siphons.push_back(z);
  }
  if (r.strongly_endotactic.holds && !r.endotactic.holds) {
    throw Error(ErrorKind::Internal, "strongly endotactic verdict without endotactic verdict");
  }
  if (r.weakly_reversible && !r.endotactic.holds) {
    throw Error(ErrorKind::Internal, "weakly reversible network judged not endotactic");
  }
  return r;
}

ClassificationReport classification_report(const MassActionSystem& sys) {
  return classification_report(sys.network());
}

}  // namespace crn
