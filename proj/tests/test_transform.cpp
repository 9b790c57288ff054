#include <doctest.h>

#include "crn/bundles.hpp"
#include "crn/realize.hpp"
#include "crn/transform.hpp"
#include "suites.hpp"

using namespace crn;

namespace {

const std::vector<std::string> xy{"x", "y"};
Polynomial P(const char* t) { return parse_polynomial(t, xy); }

MassActionSystem single(const Exponent& from, const Exponent& to, const Rational& k) {
  SystemBuilder b{SpeciesList(xy)};
  b.add_reaction(from, to, k);
  return b.build();
}

}  // namespace

TEST_CASE("translate moves complexes and keeps rates") {
  auto sys = single({1, 0}, {0, 1}, Rational(2));
  auto t = translate(sys, {1, 2});
  CHECK(t.network().source(0) == Exponent{2, 2});
  CHECK(t.network().target(0) == Exponent{1, 3});
  CHECK(t.rates()[0] == 2);
  CHECK_THROWS_AS(translate(sys, {-1, 0}), Error);
  CHECK_THROWS_AS(translate(sys, {1}), Error);
}

TEST_CASE("negative scalar reflects through the source") {
  auto sys = single({1, 1}, {2, 1}, Rational(3));
  auto r = scalar_multiply(sys, Rational(-2));
  CHECK(r.network().source(0) == Exponent{1, 1});
  CHECK(r.network().target(0) == Exponent{0, 1});
  CHECK(r.rates()[0] == 6);
  CHECK_THROWS_AS(scalar_multiply(single({0, 1}, {1, 1}, Rational(1)), Rational(-1)), Error);
  CHECK_THROWS_AS(scalar_multiply(sys, Rational(0)), Error);
}

TEST_CASE("length transform and diagonal decomposition") {
  auto sys = single({1, 1}, {3, 1}, Rational(4));
  auto half = length_transform(sys, 0, Rational(1, 2));
  CHECK(half.network().target(0) == Exponent{2, 1});
  CHECK(half.rates()[0] == 8);
  CHECK_THROWS_AS(length_transform(sys, 0, Rational(1, 3)), Error);
  CHECK_THROWS_AS(length_transform(sys, 0, Rational(-1)), Error);
  CHECK_THROWS_AS(length_transform(sys, 3, Rational(1)), Error);

  auto split = diagonal_decompose(sys, 0, {1, 1}, {1, -1}, Rational(4), Rational(4));
  CHECK(split.network().edges().size() == 2);
  CHECK(mass_action_field(split) == mass_action_field(sys));
  CHECK_THROWS_AS(diagonal_decompose(sys, 0, {1, 1}, {1, 0}, Rational(1), Rational(1)), Error);
  CHECK_THROWS_AS(diagonal_decompose(sys, 0, {1, 1}, {1, -1}, Rational(-4), Rational(12)), Error);
}

TEST_CASE("scalar polynomial checks") {
  auto ok = check_scalar_polynomial(P("x^2 + x*y^2 + y - 4*x*y"));
  CHECK(ok.valid());
  CHECK(ok.value_at_ones == -1);
  // negative exponent on a hull vertex
  auto vertex = check_scalar_polynomial(P("x^2 + x*y^2 + y - 4*x^2"));
  CHECK_FALSE(vertex.valid());
  CHECK_FALSE(vertex.negative_exponent_interior);
  auto two = check_scalar_polynomial(P("x^2 - x*y^2 + y - 4*x*y"));
  CHECK_FALSE(two.single_negative_term);
  auto positive = check_scalar_polynomial(P("x^2 + x*y^2 + y - x*y"));
  CHECK(positive.negative_exponent_interior);
  CHECK_FALSE(positive.negative_at_ones);
  CHECK_THROWS_AS(ScalarPolynomial(P("1 + x")), Error);
}

TEST_CASE("construct with h = 1 gives the simplified base") {
  const auto& b = example_bundle("ex1");
  auto base = b.base_system();
  auto same = construct_full_unit(base, Polynomial::constant(2, Rational(1)));
  CHECK(mass_action_field(same) == b.base_field);
  CHECK(same.network().vertices() == simplify(base).network().vertices());
}

TEST_CASE("construction reproduces every bundled full field") {
  for (const auto& b : example_bundles()) {
    CAPTURE(b.name);
    auto full = construct_full_unit(b.base_system(), ScalarPolynomial(b.scalar));
    CHECK(mass_action_field(full) == b.full_field);
  }
}

TEST_CASE("operation laws on random systems") {
  auto r = testing_support::transform_suite(61, 120);
  CHECK(r.cases == 120);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}

TEST_CASE("worked operation examples") {
  auto r = testing_support::worked_examples(62, 20);
  CHECK_MESSAGE(r.ok(), r.first_failure);
}
