#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "crn/network.hpp"

namespace crn {

/// Identical mass-action fields. Throws DimensionMismatch if the species lists differ.
bool is_dynamically_equivalent(const MassActionSystem& a, const MassActionSystem& b);

/// For every monomial x^e and species i with coefficient c != 0: edge e -> e + sign(c) unit_i
/// with rate |c|. Throws MalformedField when c < 0 and e_i = 0.
MassActionSystem canonical_realization(const PolyVector& f, const SpeciesList& species);

// Complexes allowed as sources and targets of a realisation; grlex sorted, distinct.
class CandidateComplexSet {
 public:
  CandidateComplexSet() = default;
  explicit CandidateComplexSet(std::vector<Exponent> complexes);

  const std::vector<Exponent>& complexes() const { return complexes_; }
  std::size_t size() const { return complexes_.size(); }
  bool contains(const Exponent& e) const;

 private:
  std::vector<Exponent> complexes_;
};

inline constexpr std::size_t kMaxCandidates = 64;

/// Lattice points of the nonnegative orthant inside conv(support of f) dilated by the
/// cube [-margin, margin]^n. Throws TooLarge (count in the message) above 64 points.
CandidateComplexSet newton_polytope_candidates(const PolyVector& f, int margin = 0);

struct RealizationResult {
  bool feasible = false;
  std::optional<MassActionSystem> witness;
  // Infeasibility certificate: the first source complex whose balance LP is infeasible,
  // with the terminal phase-one value of that LP.
  std::optional<Exponent> infeasible_source;
  Rational phase_one_value;
};

/// Exact LP: nonnegative rates on ordered pairs of C whose field is f.
RealizationResult realization_feasible(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species);

struct PruningStep {
  std::size_t admissible_edges = 0;
  std::size_t edges_in_cycles = 0;
  bool feasible = true;
};

struct WrDecision {
  bool realizable = false;
  std::optional<MassActionSystem> witness;
  CandidateComplexSet candidates;
  std::vector<PruningStep> trace;
};

/// Decides whether a weakly reversible mass-action system with complexes in C has field f:
/// admissible (dense-support) edges are computed by one LP per edge, edges outside directed
/// cycles are removed, and the process repeats to a fixpoint. Per-edge LPs run under OpenMP;
/// wr_realizable_on_serial is the reference implementation.
WrDecision wr_realizable_on(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species);
WrDecision wr_realizable_on_serial(const PolyVector& f, const CandidateComplexSet& c, const SpeciesList& species);

}  // namespace crn
