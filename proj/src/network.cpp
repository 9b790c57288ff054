#include "crn/network.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>

namespace crn {

namespace {

bool is_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  return std::all_of(s.begin(), s.end(),
                     [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

}  // namespace

SpeciesList::SpeciesList(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!is_identifier(n)) throw Error(ErrorKind::InvalidNetwork, "invalid species name '" + n + "'");
    if (!seen.insert(n).second) throw Error(ErrorKind::InvalidNetwork, "duplicate species name '" + n + "'");
  }
}

ReactionNetwork::ReactionNetwork(SpeciesList species, std::vector<Exponent> vertices, std::vector<Edge> edges)
    : species_(std::move(species)) {
  const std::size_t n = species_.size();
  std::vector<std::size_t> remap(vertices.size());
  std::map<Exponent, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const auto& v = vertices[i];
    if (v.size() != n) {
      throw Error(ErrorKind::InvalidNetwork, "vertex " + std::to_string(i) + " has dimension " +
                                                 std::to_string(v.size()) + ", expected " + std::to_string(n));
    }
    for (int k : v) {
      if (k < 0) throw Error(ErrorKind::InvalidNetwork, "vertex " + std::to_string(i) + " has a negative entry");
    }
    auto [it, inserted] = index.emplace(v, vertices_.size());
    if (inserted) vertices_.push_back(v);
    remap[i] = it->second;
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (std::size_t j = 0; j < edges.size(); ++j) {
    const auto& e = edges[j];
    if (e.src >= vertices.size() || e.dst >= vertices.size()) {
      throw Error(ErrorKind::InvalidNetwork, "edge " + std::to_string(j) + " references a missing vertex");
    }
    Edge mapped{remap[e.src], remap[e.dst]};
    if (mapped.src == mapped.dst) throw Error(ErrorKind::InvalidNetwork, "edge " + std::to_string(j) + " is a self-loop");
    if (!seen.emplace(mapped.src, mapped.dst).second) {
      throw Error(ErrorKind::InvalidNetwork, "edge " + std::to_string(j) + " duplicates an earlier edge");
    }
    edges_.push_back(mapped);
  }
}

IntVector ReactionNetwork::reaction_vector(std::size_t edge) const {
  const auto& y = source(edge);
  const auto& yp = target(edge);
  IntVector d(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) d[i] = yp[i] - y[i];
  return d;
}

std::vector<std::size_t> ReactionNetwork::source_indices() const {
  std::vector<std::size_t> out;
  for (const auto& e : edges_) out.push_back(e.src);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t ReactionNetwork::find_vertex(const Exponent& e) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), e);
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t ReactionNetwork::find_edge(std::size_t src, std::size_t dst) const {
  auto it = std::find(edges_.begin(), edges_.end(), Edge{src, dst});
  return static_cast<std::size_t>(it - edges_.begin());
}

MassActionSystem::MassActionSystem(ReactionNetwork network, std::vector<Rational> rates)
    : network_(std::move(network)), rates_(std::move(rates)) {
  if (rates_.size() != network_.edges().size()) {
    throw Error(ErrorKind::InvalidNetwork, "rate count " + std::to_string(rates_.size()) + " differs from edge count " +
                                               std::to_string(network_.edges().size()));
  }
  for (std::size_t j = 0; j < rates_.size(); ++j) {
    if (rates_[j] <= 0) throw Error(ErrorKind::InvalidNetwork, "rate of edge " + std::to_string(j) + " is not positive");
  }
}

SystemBuilder::SystemBuilder(SpeciesList species) : species_(std::move(species)) {}

std::size_t SystemBuilder::add_vertex(const Exponent& e) {
  if (e.size() != species_.size()) throw Error(ErrorKind::DimensionMismatch, "complex dimension differs from species count");
  for (int k : e) {
    if (k < 0) throw Error(ErrorKind::OrthantViolation, "complex leaves the nonnegative orthant");
  }
  auto it = std::find(vertices_.begin(), vertices_.end(), e);
  if (it != vertices_.end()) return static_cast<std::size_t>(it - vertices_.begin());
  vertices_.push_back(e);
  return vertices_.size() - 1;
}

void SystemBuilder::add_reaction(const Exponent& from, const Exponent& to, const Rational& rate) {
  if (rate <= 0) throw Error(ErrorKind::InvalidArgument, "reaction rate must be positive");
  if (from == to) throw Error(ErrorKind::InvalidArgument, "self-loop reaction");
  auto s = add_vertex(from);
  auto d = add_vertex(to);
  auto it = std::find(edges_.begin(), edges_.end(), Edge{s, d});
  if (it != edges_.end()) {
    rates_[static_cast<std::size_t>(it - edges_.begin())] += rate;
    return;
  }
  edges_.push_back({s, d});
  rates_.push_back(rate);
}

void SystemBuilder::add_system(const MassActionSystem& sys) {
  if (!(sys.species() == species_)) throw Error(ErrorKind::DimensionMismatch, "species lists differ");
  const auto& net = sys.network();
  for (const auto& v : net.vertices()) add_vertex(v);
  for (std::size_t j = 0; j < net.edges().size(); ++j) add_reaction(net.source(j), net.target(j), sys.rates()[j]);
}

MassActionSystem SystemBuilder::build() const {
  return MassActionSystem(ReactionNetwork(species_, vertices_, edges_), rates_);
}

PolyVector mass_action_field(const MassActionSystem& sys) {
  const auto& net = sys.network();
  const std::size_t n = net.dim();
  PolyVector f(n);
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    const auto& y = net.source(j);
    const auto& yp = net.target(j);
    for (std::size_t i = 0; i < n; ++i) {
      int d = yp[i] - y[i];
      if (d != 0) f[i].add_term(y, sys.rates()[j] * d);
    }
  }
  return f;
}

StoichiometricData stoichiometric_subspace(const ReactionNetwork& net) {
  linalg::EchelonBasis basis(net.dim());
  for (std::size_t j = 0; j < net.edges().size(); ++j) basis.insert(to_rational(net.reaction_vector(j)));
  return {basis.rows(), basis.rank()};
}

std::vector<std::vector<std::size_t>> linkage_classes(const ReactionNetwork& net) {
  const std::size_t v = net.vertices().size();
  std::vector<std::size_t> parent(v);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  };
  for (const auto& e : net.edges()) {
    auto a = find(e.src);
    auto b = find(e.dst);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < v; ++i) groups[find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

bool compatibility_class_member(const ReactionNetwork& net, const RationalVector& z0, const RationalVector& z) {
  if (z0.size() != net.dim() || z.size() != net.dim()) {
    throw Error(ErrorKind::DimensionMismatch, "point dimension differs from species count");
  }
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (z0[i] <= 0 || z[i] <= 0) throw Error(ErrorKind::InvalidArgument, "compatibility points must be strictly positive");
  }
  linalg::EchelonBasis basis(net.dim());
  for (const auto& row : stoichiometric_subspace(net).basis) basis.insert(row);
  return basis.contains(linalg::sub(z, z0));
}

ReactionNetwork reversed(const ReactionNetwork& net) {
  std::vector<Edge> edges;
  for (const auto& e : net.edges()) edges.push_back({e.dst, e.src});
  return ReactionNetwork(net.species(), net.vertices(), edges);
}

}  // namespace crn
