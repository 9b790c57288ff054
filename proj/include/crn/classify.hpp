#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crn/geometry.hpp"
#include "crn/network.hpp"

namespace crn {

// Sorted species indices.
using SpeciesSubset = std::vector<std::size_t>;

struct DirectionVerdict {
  bool pass = true;
  std::optional<std::size_t> failing_edge;  // first edge (by index) lacking a witness
};

struct SweepVerdict {
  bool holds = true;
  std::optional<IntVector> counterexample;  // lexicographically smallest failing representative
  std::optional<std::size_t> failing_edge;
  std::size_t directions_checked = 0;
};

/// Strongly connected component id for every vertex.
std::vector<std::size_t> strongly_connected_components(const ReactionNetwork& net);
bool is_weakly_reversible(const ReactionNetwork& net);

/// |V| - l - s; throws Internal if negative.
int deficiency(const ReactionNetwork& net);

DirectionVerdict endotactic_for_direction(const ReactionNetwork& net, const IntVector& u);
DirectionVerdict strongly_endotactic_for_direction(const ReactionNetwork& net, const IntVector& u);

// The sweep predicates decide the "for every direction" quantifier on the finite set of
// cell representatives. The plain names evaluate representatives with OpenMP; the
// _serial variants are the reference implementation kept for testing.
SweepVerdict is_endotactic(const ReactionNetwork& net);
SweepVerdict is_endotactic_serial(const ReactionNetwork& net);
SweepVerdict is_strongly_endotactic(const ReactionNetwork& net);
SweepVerdict is_strongly_endotactic_serial(const ReactionNetwork& net);

// Parallel sweep tests in their hyperplane-sweep form, for one direction. Used as an
// independent cross-check of the definitional predicates.
bool sweep_test_endotactic(const ReactionNetwork& net, const IntVector& u);
bool sweep_test_strongly_endotactic(const ReactionNetwork& net, const IntVector& u);

struct FalsifierResult {
  std::size_t trials = 0;
  std::optional<IntVector> refutation;
};

/// Random integer directions in [-bound, bound]^n; reports the first direction that
/// violates the endotactic condition. Can only refute, never confirm.
FalsifierResult falsify_endotactic(const ReactionNetwork& net, std::size_t trials, std::uint64_t seed,
                                   std::int64_t bound = 1000);
FalsifierResult falsify_strongly_endotactic(const ReactionNetwork& net, std::size_t trials, std::uint64_t seed,
                                            std::int64_t bound = 1000);

bool is_siphon(const ReactionNetwork& net, const SpeciesSubset& z);
/// Minimal nonempty siphons by subset enumeration (at most 16 species).
std::vector<SpeciesSubset> siphons(const ReactionNetwork& net);
/// Every nonempty siphon, not only minimal ones.
std::vector<SpeciesSubset> all_siphons(const ReactionNetwork& net);
/// Exists p >= 0 with p_i = 0 on z and v in S with p + v > 0 (exact LP).
bool is_critical(const ReactionNetwork& net, const SpeciesSubset& z);

bool is_complex_balanced_at(const MassActionSystem& sys, const RationalVector& x);

struct ClassificationReport {
  std::size_t vertex_count = 0;
  std::size_t linkage_class_count = 0;
  std::size_t stoichiometric_dimension = 0;
  int deficiency = 0;
  bool weakly_reversible = false;
  SweepVerdict endotactic;
  SweepVerdict strongly_endotactic;
  std::vector<SpeciesSubset> siphons;
  std::vector<SpeciesSubset> critical_siphons;
};

ClassificationReport classification_report(const ReactionNetwork& net);
ClassificationReport classification_report(const MassActionSystem& sys);

}  // namespace crn
