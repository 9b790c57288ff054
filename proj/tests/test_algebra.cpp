#include <doctest.h>

#include "crn/linalg.hpp"
#include "crn/polynomial.hpp"
#include "support.hpp"

using namespace crn;
using testing_support::Rng;

namespace {

const std::vector<std::string> xy{"x", "y"};
const std::vector<std::string> xyz{"x", "y", "z"};

Polynomial P(const char* text, const std::vector<std::string>& names = xy) { return parse_polynomial(text, names); }

}  // namespace

TEST_CASE("rational parsing and printing") {
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK(parse_rational("-0.25") == Rational(-1, 4));
  CHECK(parse_rational("1.5e-3") == Rational(3, 2000));
  CHECK(parse_rational("2E2") == Rational(200));
  // leading zeros are decimal, not octal
  CHECK(parse_rational("010/08") == Rational(5, 4));
  CHECK(parse_rational("0.025") == Rational(1, 40));
  CHECK(parse_rational(" 7 ") == Rational(7));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(-4, 2)) == "-2");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  CHECK_THROWS_AS(parse_rational("1/-2"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("integer helpers detect overflow") {
  const std::int64_t big = std::numeric_limits<std::int64_t>::max();
  CHECK_THROWS_AS(checked_add(big, 1), Error);
  CHECK_THROWS_AS(checked_mul(big, 2), Error);
  CHECK(checked_dot({1, 2, 3}, {4, 5, 6}) == 32);
  CHECK(primitive({4, -6, 8}) == IntVector{2, -3, 4});
  CHECK(primitive({0, 0}) == IntVector{0, 0});
  CHECK(primitive_integer({Rational(1, 2), Rational(-1, 3)}) == IntVector{3, -2});
}

TEST_CASE("grlex order") {
  GrlexLess less;
  CHECK(less({0, 0}, {1, 0}));
  CHECK(less({0, 2}, {2, 0}));
  CHECK(less({2, 0}, {0, 3}));
  CHECK_FALSE(less({1, 1}, {1, 1}));
}

TEST_CASE("polynomial parsing, printing and errors") {
  auto p = P("1 - x + y^2 - x*y^2");
  CHECK(p.term_count() == 4);
  CHECK(p.coefficient({1, 2}) == -1);
  CHECK(to_string(p, xy) == "1 - x + y^2 - x*y^2");
  CHECK(to_string(P("3/2*x*y^2 - 4*x*y"), xy) == "-4*x*y + 3/2*x*y^2");
  CHECK(P("(1 + z)*(y - x*y^2)", xyz) == P("y - x*y^2 + y*z - x*y^2*z", xyz));
  CHECK(P("(x + y)^2") == P("x^2 + 2*x*y + y^2"));
  CHECK(P("0").is_zero());
  CHECK(P("x - x").is_zero());
  try {
    P("x + * y");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    CHECK(std::string(e.what()).find("column 5") != std::string::npos);
  }
  CHECK_THROWS_AS(P("w + x"), Error);
  CHECK_THROWS_AS(P("x^-1"), Error);
  CHECK_THROWS_AS(P("(x + y"), Error);
}

TEST_CASE("polynomial derivative and shift") {
  auto p = P("x^2*y + 3*y^2 - 5");
  CHECK(p.derivative(0) == P("2*x*y"));
  CHECK(p.derivative(1) == P("x^2 + 6*y"));
  CHECK(p.shifted({1, 2}) == P("x^3*y^3 + 3*x*y^4 - 5*x*y^2"));
  CHECK(p.degree() == 3);
}

TEST_CASE("ring laws hold on random polynomials") {
  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto a = testing_support::random_polynomial(rng, n, 5, 3);
    auto b = testing_support::random_polynomial(rng, n, 5, 3);
    auto c = testing_support::random_polynomial(rng, n, 4, 2);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(a * Polynomial::constant(n, Rational(1)) == a);
    CHECK((a * Polynomial(n)).is_zero());
    // canonical text reads back to the same polynomial
    const auto names = default_species_names(n);
    CHECK(parse_polynomial(to_string(a, names), names) == a);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  Rng rng(12);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 3));
    auto a = testing_support::random_polynomial(rng, n, 5, 3);
    auto b = testing_support::random_polynomial(rng, n, 5, 3);
    RationalVector pt;
    for (std::size_t i = 0; i < n; ++i) pt.push_back(rng.rational());
    CHECK((a + b).evaluate(pt) == a.evaluate(pt) + b.evaluate(pt));
    CHECK((a * b).evaluate(pt) == a.evaluate(pt) * b.evaluate(pt));
    std::vector<double> dpt;
    for (const auto& v : pt) dpt.push_back(v.get_d());
    CHECK(a.evaluate(std::span<const double>(dpt)) == doctest::Approx(a.evaluate(pt).get_d()).epsilon(1e-9));
  }
}

TEST_CASE("vector polynomials") {
  PolyVector f({P("1 - x"), P("x*y")});
  PolyVector g({P("x"), P("-x*y + y")});
  auto sum = f + g;
  CHECK(sum[0] == P("1"));
  CHECK(sum[1] == P("y"));
  CHECK(f.support() == std::vector<Exponent>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(f.coefficient_vector({1, 0}) == RationalVector{Rational(-1), Rational(0)});
  CHECK(P("x") * f == PolyVector({P("x - x^2"), P("x^2*y")}));
  CHECK((f + -f).is_zero());
}

TEST_CASE("echelon basis, rank and nullspace") {
  linalg::EchelonBasis basis(3);
  CHECK(basis.insert({Rational(1), Rational(2), Rational(3)}));
  CHECK(basis.insert({Rational(2), Rational(4), Rational(7)}));
  CHECK_FALSE(basis.insert({Rational(3), Rational(6), Rational(10)}));
  CHECK(basis.rank() == 2);
  CHECK(basis.contains({Rational(0), Rational(0), Rational(1)}));
  CHECK_FALSE(basis.contains({Rational(0), Rational(1), Rational(0)}));

  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t dim = static_cast<std::size_t>(rng.uniform(1, 4));
    std::vector<RationalVector> rows(static_cast<std::size_t>(rng.uniform(0, 4)), RationalVector(dim));
    for (auto& r : rows)
      for (auto& v : r) v = Rational(static_cast<long>(rng.uniform(-2, 2)));
    const auto r = linalg::rank(rows, dim);
    CHECK(r == testing_support::oracle_rank(rows));
    const auto null = linalg::nullspace(rows, dim);
    CHECK(null.size() == dim - r);
    for (const auto& v : null) {
      for (const auto& row : rows) CHECK(linalg::dot(row, v) == 0);
    }
  }
}
