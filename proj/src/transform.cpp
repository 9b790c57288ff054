#include "crn/transform.hpp"

#include <algorithm>
#include <tuple>

#include "crn/geometry.hpp"
#include "crn/realize.hpp"

namespace crn {

namespace {

struct Reaction {
  Exponent from;
  Exponent to;
  Rational rate;
};

std::vector<Reaction> reactions_of(const MassActionSystem& sys) {
  std::vector<Reaction> out;
  const auto& net = sys.network();
  for (std::size_t j = 0; j < net.edges().size(); ++j) out.push_back({net.source(j), net.target(j), sys.rates()[j]});
  return out;
}

// Keeps the original vertex order for complexes that are still used (or were isolated),
// then appends new complexes in reaction order.
MassActionSystem rebuild(const MassActionSystem& original, const std::vector<Reaction>& reactions) {
  const auto& net = original.network();
  std::vector<char> isolated(net.vertices().size(), 1);
  for (const auto& e : net.edges()) isolated[e.src] = isolated[e.dst] = 0;
  auto used = [&](const Exponent& v) {
    return std::any_of(reactions.begin(), reactions.end(),
                       [&](const Reaction& r) { return r.from == v || r.to == v; });
  };
  SystemBuilder b(net.species());
  for (std::size_t i = 0; i < net.vertices().size(); ++i) {
    if (isolated[i] || used(net.vertices()[i])) b.add_vertex(net.vertices()[i]);
  }
  for (const auto& r : reactions) b.add_reaction(r.from, r.to, r.rate);
  return b.build();
}

Exponent checked_target(const Exponent& y, const RationalVector& offset, const char* what) {
  Exponent t(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    Rational v = Rational(y[i]) + offset[i];
    if (v.get_den() != 1) throw Error(ErrorKind::InvalidArgument, std::string(what) + ": target is not a lattice point");
    if (v < 0) throw Error(ErrorKind::OrthantViolation, std::string(what) + ": target leaves the nonnegative orthant");
    if (!v.get_num().fits_sint_p()) throw Error(ErrorKind::Overflow, std::string(what) + ": target entry too large");
    t[i] = static_cast<int>(v.get_num().get_si());
  }
  return t;
}

void check_edge(const MassActionSystem& sys, std::size_t edge) {
  if (edge >= sys.network().edges().size()) {
    throw Error(ErrorKind::InvalidArgument, "edge index " + std::to_string(edge) + " out of range");
  }
}

}  // namespace

MassActionSystem translate(const MassActionSystem& sys, const Exponent& v) {
  const auto& net = sys.network();
  if (v.size() != net.dim()) throw Error(ErrorKind::DimensionMismatch, "translation dimension differs from species count");
  for (int k : v) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "translation vector must be nonnegative");
  }
  std::vector<Exponent> vertices;
  vertices.reserve(net.vertices().size());
  for (const auto& y : net.vertices()) vertices.push_back(y + v);
  return MassActionSystem(ReactionNetwork(net.species(), std::move(vertices), net.edges()), sys.rates());
}

MassActionSystem scalar_multiply(const MassActionSystem& sys, const Rational& rho) {
  if (rho == 0) throw Error(ErrorKind::InvalidArgument, "scalar multiplier must be nonzero");
  if (rho > 0) {
    std::vector<Rational> rates = sys.rates();
    for (auto& k : rates) k *= rho;
    return MassActionSystem(sys.network(), std::move(rates));
  }
  const Rational mag = -rho;
  std::vector<Reaction> flipped;
  for (auto r : reactions_of(sys)) {
    Exponent t(r.from.size());
    for (std::size_t i = 0; i < t.size(); ++i) {
      t[i] = 2 * r.from[i] - r.to[i];
      if (t[i] < 0) throw Error(ErrorKind::OrthantViolation, "reflected complex leaves the nonnegative orthant");
    }
    flipped.push_back({r.from, t, r.rate * mag});
  }
  return rebuild(sys, flipped);
}

MassActionSystem add_systems(const MassActionSystem& a, const MassActionSystem& b) {
  if (!(a.species() == b.species())) throw Error(ErrorKind::DimensionMismatch, "cannot add systems over different species");
  SystemBuilder builder(a.species());
  builder.add_system(a);
  builder.add_system(b);
  return builder.build();
}

MassActionSystem simplify(const MassActionSystem& sys) {
  return canonical_realization(mass_action_field(sys), sys.species());
}

MassActionSystem length_transform(const MassActionSystem& sys, std::size_t edge, const Rational& lambda) {
  check_edge(sys, edge);
  if (lambda <= 0) throw Error(ErrorKind::InvalidArgument, "length factor must be positive");
  auto reactions = reactions_of(sys);
  auto& r = reactions[edge];
  RationalVector offset(r.from.size());
  for (std::size_t i = 0; i < offset.size(); ++i) offset[i] = lambda * (r.to[i] - r.from[i]);
  r.to = checked_target(r.from, offset, "length transform");
  r.rate /= lambda;
  return rebuild(sys, reactions);
}

MassActionSystem diagonal_decompose(const MassActionSystem& sys, std::size_t edge, const IntVector& d1,
                                    const IntVector& d2, const Rational& w1, const Rational& w2) {
  check_edge(sys, edge);
  const auto n = sys.dim();
  if (d1.size() != n || d2.size() != n) throw Error(ErrorKind::DimensionMismatch, "decomposition vectors have the wrong dimension");
  if (w1 <= 0 || w2 <= 0) throw Error(ErrorKind::InvalidArgument, "decomposition weights must be positive");
  auto reactions = reactions_of(sys);
  const auto r = reactions[edge];
  for (std::size_t i = 0; i < n; ++i) {
    if (w1 * d1[i] + w2 * d2[i] != r.rate * (r.to[i] - r.from[i])) {
      throw Error(ErrorKind::InvalidArgument, "w1 d1 + w2 d2 differs from k (y' - y)");
    }
  }
  auto t1 = checked_target(r.from, to_rational(d1), "diagonal decomposition");
  auto t2 = checked_target(r.from, to_rational(d2), "diagonal decomposition");
  if (t1 == r.from || t2 == r.from) throw Error(ErrorKind::InvalidArgument, "decomposition vectors must be nonzero");
  reactions.erase(reactions.begin() + static_cast<std::ptrdiff_t>(edge));
  reactions.insert(reactions.begin() + static_cast<std::ptrdiff_t>(edge), {{r.from, t1, w1}, {r.from, t2, w2}});
  return rebuild(sys, reactions);
}

ScalarPolynomialCheck check_scalar_polynomial(const Polynomial& h) {
  ScalarPolynomialCheck check;
  std::vector<Exponent> positive;
  std::vector<Exponent> negative;
  for (const auto& [e, c] : h.terms()) {
    (c > 0 ? positive : negative).push_back(e);
  }
  check.value_at_ones = h.evaluate(RationalVector(h.dim(), Rational(1)));
  check.single_negative_term = negative.size() == 1;
  if (check.single_negative_term && !positive.empty()) {
    auto hull = convex_hull(positive);
    check.negative_exponent_interior = is_strictly_interior(hull, to_rational(IntVector(negative[0].begin(), negative[0].end())));
  }
  check.negative_at_ones = check.value_at_ones < 0;
  if (!check.single_negative_term) {
    check.problem = "expected exactly one negative term, found " + std::to_string(negative.size());
  } else if (!check.negative_exponent_interior) {
    check.problem = "negative term's exponent is not strictly inside the hull of the positive exponents";
  } else if (!check.negative_at_ones) {
    check.problem = "value at (1, ..., 1) is " + to_string(check.value_at_ones) + ", not negative";
  }
  return check;
}

ScalarPolynomial::ScalarPolynomial(Polynomial h) : h_(std::move(h)) {
  auto check = check_scalar_polynomial(h_);
  if (!check.valid()) throw Error(ErrorKind::InvalidScalarPolynomial, check.problem);
}

MassActionSystem construct_full_unit(const MassActionSystem& base, const ScalarPolynomial& h) {
  return construct_full_unit(base, h.polynomial());
}

MassActionSystem construct_full_unit(const MassActionSystem& base, const Polynomial& h) {
  if (h.dim() != base.dim()) throw Error(ErrorKind::DimensionMismatch, "multiplier dimension differs from species count");
  SystemBuilder sum(base.species());
  for (const auto& [e, c] : h.terms()) {
    // Translating first keeps the reflection of negative terms inside the orthant.
    sum.add_system(scalar_multiply(translate(base, e), c));
  }
  return simplify(sum.build());
}

}  // namespace crn
