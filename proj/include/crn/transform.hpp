#pragma once

#include <string>

#include "crn/network.hpp"

namespace crn {

/// Multiplies the field by x^v: every complex moves by v, rates unchanged.
MassActionSystem translate(const MassActionSystem& sys, const Exponent& v);

/// rho > 0 scales the rates. rho < 0 reflects each reaction through its source
/// (y -> 2y - y') with rate |rho| k; throws OrthantViolation if a reflected complex
/// has a negative entry.
MassActionSystem scalar_multiply(const MassActionSystem& sys, const Rational& rho);

/// Union of reactions; coincident reactions get summed rates.
MassActionSystem add_systems(const MassActionSystem& a, const MassActionSystem& b);

/// Canonical re-realisation of the collected field.
MassActionSystem simplify(const MassActionSystem& sys);

/// Replaces edge y -> y' by y -> y + lambda (y' - y) with rate k / lambda.
MassActionSystem length_transform(const MassActionSystem& sys, std::size_t edge, const Rational& lambda);

/// Replaces edge y -> y' (rate k) by y -> y + d1 (rate w1) and y -> y + d2 (rate w2),
/// requiring w1 d1 + w2 d2 = k (y' - y).
MassActionSystem diagonal_decompose(const MassActionSystem& sys, std::size_t edge, const IntVector& d1,
                                    const IntVector& d2, const Rational& w1, const Rational& w2);

struct ScalarPolynomialCheck {
  bool single_negative_term = false;
  bool negative_exponent_interior = false;
  bool negative_at_ones = false;
  Rational value_at_ones;
  std::string problem;  // first violated condition, empty when valid

  bool valid() const { return single_negative_term && negative_exponent_interior && negative_at_ones; }
};

/// Checks the construction multiplier: exactly one negative term, its exponent strictly
/// inside the hull of the positive exponents, negative value at (1, ..., 1).
ScalarPolynomialCheck check_scalar_polynomial(const Polynomial& h);

/// A polynomial that passed check_scalar_polynomial.
class ScalarPolynomial {
 public:
  explicit ScalarPolynomial(Polynomial h);
  const Polynomial& polynomial() const { return h_; }

 private:
  Polynomial h_;
};

/// For each term c x^e of h: translate the base by e, scale by c; add all; simplify.
/// The result's field equals h times the base field.
MassActionSystem construct_full_unit(const MassActionSystem& base, const ScalarPolynomial& h);
/// Same, for an unchecked multiplier (h = 1 and other non-construction polynomials).
MassActionSystem construct_full_unit(const MassActionSystem& base, const Polynomial& h);

}  // namespace crn
