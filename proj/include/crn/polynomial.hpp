#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "crn/rational.hpp"

namespace crn {

// Nonnegative integer exponent vector; one entry per species.
using Exponent = std::vector<int>;

int total_degree(const Exponent& e);

// Graded lexicographic order: total degree first, then lexicographic.
struct GrlexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

Exponent operator+(const Exponent& a, const Exponent& b);

class Polynomial {
 public:
  using TermMap = std::map<Exponent, Rational, GrlexLess>;

  explicit Polynomial(std::size_t dim = 0) : dim_(dim) {}

  static Polynomial constant(std::size_t dim, const Rational& c);
  static Polynomial monomial(const Exponent& e, const Rational& c);
  static Polynomial variable(std::size_t dim, std::size_t index);

  std::size_t dim() const { return dim_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coefficient(const Exponent& e) const;
  std::vector<Exponent> support() const;
  int degree() const;

  /// Adds c * x^e in place; a resulting zero coefficient is erased.
  void add_term(const Exponent& e, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  Polynomial scaled(const Rational& c) const;
  /// Multiplies by the monomial x^shift.
  Polynomial shifted(const Exponent& shift) const;
  Polynomial derivative(std::size_t index) const;

  Rational evaluate(std::span<const Rational> point) const;
  double evaluate(std::span<const double> point) const;
  long double evaluate(std::span<const long double> point) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  void check_dim(std::size_t other) const;

  std::size_t dim_;
  TermMap terms_;
};

// One polynomial per species: the right-hand side of dx/dt = f(x).
class PolyVector {
 public:
  PolyVector() = default;
  explicit PolyVector(std::size_t dim);
  explicit PolyVector(std::vector<Polynomial> components);

  std::size_t dim() const { return components_.size(); }
  const Polynomial& operator[](std::size_t i) const { return components_[i]; }
  Polynomial& operator[](std::size_t i) { return components_[i]; }
  const std::vector<Polynomial>& components() const { return components_; }
  bool is_zero() const;

  /// Union of the supports of all components, grlex sorted.
  std::vector<Exponent> support() const;
  /// Coefficient vector of x^e across components.
  RationalVector coefficient_vector(const Exponent& e) const;

  PolyVector& operator+=(const PolyVector& other);
  friend PolyVector operator+(PolyVector a, const PolyVector& b) { return a += b; }
  PolyVector operator-() const;
  PolyVector scaled(const Rational& c) const;
  PolyVector shifted(const Exponent& shift) const;
  friend PolyVector operator*(const Polynomial& h, const PolyVector& g);

  RationalVector evaluate(std::span<const Rational> point) const;
  std::vector<double> evaluate(std::span<const double> point) const;

  friend bool operator==(const PolyVector& a, const PolyVector& b) {
    return a.components_ == b.components_;
  }

 private:
  std::vector<Polynomial> components_;
};

/// Names used when none are supplied: x, y, z for up to three species, x1..xn otherwise.
std::vector<std::string> default_species_names(std::size_t dim);

/// Parses sums of terms like "3/2*x^2*y - 4*x*y + 1"; parentheses and integer powers
/// of parenthesised groups are accepted.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names);

/// Canonical text form, terms in ascending grlex order.
std::string to_string(const Polynomial& p, const std::vector<std::string>& names);
std::string to_string(const Polynomial& p);

}  // namespace crn
