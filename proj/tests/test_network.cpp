#include <doctest.h>

#include "crn/network.hpp"
#include "support.hpp"

using namespace crn;
using testing_support::Rng;

namespace {

SpeciesList AB() { return SpeciesList({"A", "B"}); }

MassActionSystem a_to_b_and_back(const Rational& k1, const Rational& k2) {
  return MassActionSystem(ReactionNetwork(AB(), {{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}), {k1, k2});
}

}  // namespace

TEST_CASE("species lists") {
  CHECK_NOTHROW(SpeciesList({"x", "y_2", "Zeta"}));
  CHECK_THROWS_AS(SpeciesList({"x", "x"}), Error);
  CHECK_THROWS_AS(SpeciesList({"2x"}), Error);
  CHECK_THROWS_AS(SpeciesList({""}), Error);
}

TEST_CASE("network validation") {
  CHECK_THROWS_AS(ReactionNetwork(AB(), {{1, 0}}, {{0, 0}}), Error);
  CHECK_THROWS_AS(ReactionNetwork(AB(), {{1, 0}, {0, 1}}, {{0, 1}, {0, 1}}), Error);
  CHECK_THROWS_AS(ReactionNetwork(AB(), {{1, 0}, {0, 1}}, {{0, 2}}), Error);
  CHECK_THROWS_AS(ReactionNetwork(AB(), {{-1, 0}, {0, 1}}, {{0, 1}}), Error);
  CHECK_THROWS_AS(ReactionNetwork(AB(), {{1, 0, 0}}, {}), Error);
  CHECK_THROWS_AS(MassActionSystem(ReactionNetwork(AB(), {{1, 0}, {0, 1}}, {{0, 1}}), {Rational(0)}), Error);
  CHECK_THROWS_AS(MassActionSystem(ReactionNetwork(AB(), {{1, 0}, {0, 1}}, {{0, 1}}), {}), Error);
  // repeated complexes are merged
  ReactionNetwork net(AB(), {{1, 0}, {0, 1}, {1, 0}}, {{0, 1}, {1, 2}});
  CHECK(net.vertices().size() == 2);
  CHECK(net.edges()[1].dst == 0);
}

TEST_CASE("mass-action field of A <-> B") {
  auto sys = a_to_b_and_back(Rational(3, 2), Rational(2));
  auto f = mass_action_field(sys);
  const std::vector<std::string> names{"A", "B"};
  CHECK(f[0] == parse_polynomial("-3/2*A + 2*B", names));
  CHECK(f[1] == parse_polynomial("3/2*A - 2*B", names));
  auto s = stoichiometric_subspace(sys.network());
  CHECK(s.dimension == 1);
  CHECK(s.basis[0][0] + s.basis[0][1] == 0);
  CHECK(s.basis[0][0] != 0);
  CHECK(linkage_classes(sys.network()).size() == 1);
  CHECK(compatibility_class_member(sys.network(), {Rational(1), Rational(2)}, {Rational(2), Rational(1)}));
  CHECK_FALSE(compatibility_class_member(sys.network(), {Rational(1), Rational(2)}, {Rational(2), Rational(2)}));
}

TEST_CASE("builder merges coincident reactions") {
  SystemBuilder b(AB());
  b.add_reaction({1, 0}, {0, 1}, Rational(1));
  b.add_reaction({1, 0}, {0, 1}, Rational(1, 2));
  b.add_reaction({0, 1}, {0, 0}, Rational(2));
  auto sys = b.build();
  CHECK(sys.network().edges().size() == 2);
  CHECK(sys.rates()[0] == Rational(3, 2));
  CHECK_THROWS_AS(b.add_reaction({1, 1}, {1, 1}, Rational(1)), Error);
  CHECK_THROWS_AS(b.add_reaction({1, 0}, {0, 1}, Rational(-1)), Error);
}

TEST_CASE("field matches the definition and is linear in rates") {
  Rng rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto sys = testing_support::random_system(rng, n, 8, 4);
    const auto f = mass_action_field(sys);
    CHECK(f == testing_support::oracle_field(sys));

    auto rates2 = sys.rates();
    for (auto& k : rates2) k = rng.positive_rational();
    auto sys2 = MassActionSystem(sys.network(), rates2);
    auto summed = sys.rates();
    for (std::size_t j = 0; j < summed.size(); ++j) summed[j] += rates2[j];
    CHECK(mass_action_field(MassActionSystem(sys.network(), summed)) == f + mass_action_field(sys2));

    // Reversal keeps S and the linkage classes; doing it twice changes nothing.
    auto rev = reversed(sys.network());
    auto back = reversed(rev);
    CHECK(back.vertices() == sys.network().vertices());
    CHECK(back.edges() == sys.network().edges());
    CHECK(stoichiometric_subspace(rev).dimension == stoichiometric_subspace(sys.network()).dimension);
    CHECK(linkage_classes(rev).size() == linkage_classes(sys.network()).size());
  }
}

TEST_CASE("linkage classes of two disconnected pieces") {
  ReactionNetwork net(AB(), {{1, 0}, {0, 1}, {2, 0}, {0, 2}}, {{0, 1}, {2, 3}});
  auto lc = linkage_classes(net);
  REQUIRE(lc.size() == 2);
  CHECK(lc[0] == std::vector<std::size_t>{0, 1});
  CHECK(lc[1] == std::vector<std::size_t>{2, 3});
}
