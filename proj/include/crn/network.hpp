#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "crn/linalg.hpp"
#include "crn/polynomial.hpp"

namespace crn {

// Ordered, unique species names; each must be a valid identifier.
class SpeciesList {
 public:
  SpeciesList() = default;
  explicit SpeciesList(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& operator[](std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }

  friend bool operator==(const SpeciesList&, const SpeciesList&) = default;

 private:
  std::vector<std::string> names_;
};

struct Edge {
  std::size_t src;
  std::size_t dst;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// E-graph: complexes are lattice points in the nonnegative orthant, reactions are
/// directed edges between them. Duplicate vertices are merged at construction.
class ReactionNetwork {
 public:
  ReactionNetwork() = default;
  ReactionNetwork(SpeciesList species, std::vector<Exponent> vertices, std::vector<Edge> edges);

  const SpeciesList& species() const { return species_; }
  std::size_t dim() const { return species_.size(); }
  const std::vector<Exponent>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Exponent& source(std::size_t edge) const { return vertices_[edges_[edge].src]; }
  const Exponent& target(std::size_t edge) const { return vertices_[edges_[edge].dst]; }

  /// y' - y for the given edge.
  IntVector reaction_vector(std::size_t edge) const;
  /// Indices of vertices that are the source of at least one edge, ascending.
  std::vector<std::size_t> source_indices() const;
  /// Index of the vertex equal to e, or vertices().size() when absent.
  std::size_t find_vertex(const Exponent& e) const;
  std::size_t find_edge(std::size_t src, std::size_t dst) const;

 private:
  SpeciesList species_;
  std::vector<Exponent> vertices_;
  std::vector<Edge> edges_;
};

class MassActionSystem {
 public:
  MassActionSystem() = default;
  MassActionSystem(ReactionNetwork network, std::vector<Rational> rates);

  const ReactionNetwork& network() const { return network_; }
  const std::vector<Rational>& rates() const { return rates_; }
  const SpeciesList& species() const { return network_.species(); }
  std::size_t dim() const { return network_.dim(); }

 private:
  ReactionNetwork network_;
  std::vector<Rational> rates_;
};

/// Accumulates reactions by complex; coincident reactions have their rates summed.
class SystemBuilder {
 public:
  explicit SystemBuilder(SpeciesList species);

  std::size_t add_vertex(const Exponent& e);
  void add_reaction(const Exponent& from, const Exponent& to, const Rational& rate);
  void add_system(const MassActionSystem& sys);

  MassActionSystem build() const;

 private:
  SpeciesList species_;
  std::vector<Exponent> vertices_;
  std::vector<Edge> edges_;
  std::vector<Rational> rates_;
};

struct StoichiometricData {
  std::vector<RationalVector> basis;  // integer entries, echelon form
  std::size_t dimension = 0;
};

/// sum over edges of k * x^y * (y' - y).
PolyVector mass_action_field(const MassActionSystem& sys);

StoichiometricData stoichiometric_subspace(const ReactionNetwork& net);

/// Connected components of the undirected graph, each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net);

/// True iff z - z0 lies in the stoichiometric subspace; both points must be positive.
bool compatibility_class_member(const ReactionNetwork& net, const RationalVector& z0, const RationalVector& z);

/// Same network with every edge reversed.
ReactionNetwork reversed(const ReactionNetwork& net);

}  // namespace crn
