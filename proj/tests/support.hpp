#pragma once

// Random generators and independent reference implementations used by the unit tests
// and the acceptance runner. The oracles deliberately avoid the library's own helpers.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "crn/network.hpp"

namespace testing_support {

using crn::Exponent;
using crn::Rational;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) { return std::uniform_int_distribution<std::int64_t>(lo, hi)(gen_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rational rational(std::int64_t num_bound = 9, std::int64_t den_bound = 5) {
    Rational r(static_cast<long>(uniform(-num_bound, num_bound)), static_cast<unsigned long>(uniform(1, den_bound)));
    r.canonicalize();
    return r;
  }
  Rational positive_rational(std::int64_t num_bound = 9, std::int64_t den_bound = 5) {
    Rational r(static_cast<long>(uniform(1, num_bound)), static_cast<unsigned long>(uniform(1, den_bound)));
    r.canonicalize();
    return r;
  }
  Exponent exponent(std::size_t n, int max_entry) {
    Exponent e(n);
    for (auto& v : e) v = static_cast<int>(uniform(0, max_entry));
    return e;
  }

 private:
  std::mt19937_64 gen_;
};

inline crn::SpeciesList species_for(std::size_t n) { return crn::SpeciesList(crn::default_species_names(n)); }

/// n species, between 1 and max_edges distinct edges between random complexes.
inline crn::ReactionNetwork random_network(Rng& rng, std::size_t n, std::size_t max_edges, int max_entry) {
  const auto edges_wanted = static_cast<std::size_t>(rng.uniform(1, static_cast<std::int64_t>(max_edges)));
  std::vector<Exponent> vertices;
  std::vector<crn::Edge> edges;
  auto index_of = [&](const Exponent& e) {
    auto it = std::find(vertices.begin(), vertices.end(), e);
    if (it != vertices.end()) return static_cast<std::size_t>(it - vertices.begin());
    vertices.push_back(e);
    return vertices.size() - 1;
  };
  for (int attempt = 0; attempt < 200 && edges.size() < edges_wanted; ++attempt) {
    // Reuse existing complexes half the time so that cycles and shared sources occur.
    Exponent a = (!vertices.empty() && rng.coin()) ? vertices[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(vertices.size()) - 1))]
                                                   : rng.exponent(n, max_entry);
    Exponent b = (!vertices.empty() && rng.coin()) ? vertices[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(vertices.size()) - 1))]
                                                   : rng.exponent(n, max_entry);
    if (a == b) continue;
    const auto ia = index_of(a);
    const auto ib = index_of(b);
    crn::Edge e{ia, ib};
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) continue;
    edges.push_back(e);
  }
  // Drop complexes that ended up unused.
  std::vector<char> used(vertices.size(), 0);
  for (const auto& e : edges) used[e.src] = used[e.dst] = 1;
  std::vector<std::size_t> remap(vertices.size());
  std::vector<Exponent> kept;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    remap[i] = kept.size();
    if (used[i]) kept.push_back(vertices[i]);
  }
  for (auto& e : edges) e = {remap[e.src], remap[e.dst]};
  return crn::ReactionNetwork(species_for(n), std::move(kept), std::move(edges));
}

inline crn::MassActionSystem random_system(Rng& rng, std::size_t n, std::size_t max_edges, int max_entry) {
  auto net = random_network(rng, n, max_edges, max_entry);
  std::vector<Rational> rates;
  for (std::size_t j = 0; j < net.edges().size(); ++j) rates.push_back(rng.positive_rational());
  return crn::MassActionSystem(std::move(net), std::move(rates));
}

inline crn::Polynomial random_polynomial(Rng& rng, std::size_t n, std::size_t terms, int max_entry) {
  crn::Polynomial p(n);
  for (std::size_t t = 0; t < terms; ++t) p.add_term(rng.exponent(n, max_entry), rng.rational());
  return p;
}

// ---------------------------------------------------------------------------
// Oracles

inline std::int64_t dot(const std::vector<std::int64_t>& u, const Exponent& y) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < y.size(); ++i) s += u[i] * y[i];
  return s;
}

/// Field built term by term from the definition.
inline crn::PolyVector oracle_field(const crn::MassActionSystem& sys) {
  const auto& net = sys.network();
  std::vector<crn::Polynomial> comps(net.dim(), crn::Polynomial(net.dim()));
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    const auto& y = net.source(j);
    const auto& t = net.target(j);
    for (std::size_t i = 0; i < net.dim(); ++i) {
      if (t[i] != y[i]) comps[i].add_term(y, sys.rates()[j] * (t[i] - y[i]));
    }
  }
  return crn::PolyVector(std::move(comps));
}

/// Rank by plain Gaussian elimination over the rationals.
inline std::size_t oracle_rank(std::vector<std::vector<Rational>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t p = rank;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = 0; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

inline std::vector<std::vector<char>> oracle_reachability(const crn::ReactionNetwork& net) {
  const std::size_t v = net.vertices().size();
  std::vector<std::vector<char>> r(v, std::vector<char>(v, 0));
  for (std::size_t i = 0; i < v; ++i) r[i][i] = 1;
  for (const auto& e : net.edges()) r[e.src][e.dst] = 1;
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  return r;
}

inline bool oracle_weakly_reversible(const crn::ReactionNetwork& net) {
  const auto r = oracle_reachability(net);
  return std::all_of(net.edges().begin(), net.edges().end(), [&](const crn::Edge& e) { return r[e.dst][e.src] == 1; });
}

inline std::size_t oracle_linkage_count(const crn::ReactionNetwork& net) {
  const std::size_t v = net.vertices().size();
  std::vector<std::vector<char>> r(v, std::vector<char>(v, 0));
  for (std::size_t i = 0; i < v; ++i) r[i][i] = 1;
  for (const auto& e : net.edges()) r[e.src][e.dst] = r[e.dst][e.src] = 1;
  for (std::size_t k = 0; k < v; ++k)
    for (std::size_t i = 0; i < v; ++i)
      for (std::size_t j = 0; j < v; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = 1;
  std::set<std::vector<char>> classes(r.begin(), r.end());
  return classes.size();
}

inline int oracle_deficiency(const crn::ReactionNetwork& net) {
  std::vector<std::vector<Rational>> rows;
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    std::vector<Rational> row;
    for (std::size_t i = 0; i < net.dim(); ++i) row.push_back(Rational(net.target(j)[i] - net.source(j)[i]));
    rows.push_back(std::move(row));
  }
  return static_cast<int>(net.vertices().size()) - static_cast<int>(oracle_linkage_count(net)) -
         static_cast<int>(oracle_rank(rows));
}

/// Endotactic condition for one direction, straight from the definition.
inline bool oracle_endotactic_at(const crn::ReactionNetwork& net, const std::vector<std::int64_t>& u, bool strong) {
  const auto m = net.edges().size();
  std::int64_t lowest = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const auto l = dot(u, net.source(j));
    if (j == 0 || l < lowest) lowest = l;
  }
  for (std::size_t j = 0; j < m; ++j) {
    if (dot(u, net.target(j)) >= dot(u, net.source(j))) continue;
    bool countered = false;
    for (std::size_t w = 0; w < m; ++w) {
      const auto lw = dot(u, net.source(w));
      if (dot(u, net.target(w)) > lw && lw < dot(u, net.source(j)) && (!strong || lw == lowest)) countered = true;
    }
    if (!countered) return false;
  }
  return true;
}

/// Every nonempty subset Z with: each reaction producing a species of Z consumes one.
inline std::vector<std::vector<std::size_t>> oracle_siphons(const crn::ReactionNetwork& net) {
  const std::size_t n = net.dim();
  std::vector<std::vector<std::size_t>> out;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t j = 0; j < net.edges().size() && ok; ++j) {
      bool produces = false, consumes = false;
      for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1u)) continue;
        produces = produces || net.target(j)[i] > 0;
        consumes = consumes || net.source(j)[i] > 0;
      }
      if (produces && !consumes) ok = false;
    }
    if (!ok) continue;
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask >> i & 1u) z.push_back(i);
    }
    out.push_back(std::move(z));
  }
  return out;
}

inline bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline std::vector<std::vector<std::size_t>> minimal_only(const std::vector<std::vector<std::size_t>>& all) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& z : all) {
    bool minimal = std::none_of(all.begin(), all.end(), [&](const auto& w) { return w != z && is_subset(w, z); });
    if (minimal) out.push_back(z);
  }
  return out;
}

}  // namespace testing_support
