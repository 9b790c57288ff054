#include "crn/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace crn {

int total_degree(const Exponent& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool GrlexLess::operator()(const Exponent& a, const Exponent& b) const {
  int da = total_degree(a);
  int db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Exponent operator+(const Exponent& a, const Exponent& b) {
  if (a.size() != b.size()) throw Error(ErrorKind::DimensionMismatch, "exponent dimensions differ");
  Exponent r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(std::size_t dim, const Rational& c) {
  return monomial(Exponent(dim, 0), c);
}

Polynomial Polynomial::monomial(const Exponent& e, const Rational& c) {
  for (int k : e) {
    if (k < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
  }
  Polynomial p(e.size());
  p.add_term(e, c);
  return p;
}

Polynomial Polynomial::variable(std::size_t dim, std::size_t index) {
  Exponent e(dim, 0);
  e.at(index) = 1;
  return monomial(e, Rational(1));
}

void Polynomial::check_dim(std::size_t other) const {
  if (other != dim_) {
    throw Error(ErrorKind::DimensionMismatch,
                "polynomial dimensions differ (" + std::to_string(dim_) + " vs " + std::to_string(other) + ")");
  }
}

Rational Polynomial::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Exponent> Polynomial::support() const {
  std::vector<Exponent> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, total_degree(e));
  return d;
}

void Polynomial::add_term(const Exponent& e, const Rational& c) {
  check_dim(e.size());
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(*this);
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_dim(other.dim_);
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_dim(other.dim_);
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_dim(b.dim_);
  Polynomial r(a.dim_);
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  }
  return r;
}

Polynomial Polynomial::scaled(const Rational& c) const {
  Polynomial r(dim_);
  if (c == 0) return r;
  r.terms_ = terms_;
  for (auto& [e, v] : r.terms_) v *= c;
  return r;
}

Polynomial Polynomial::shifted(const Exponent& shift) const {
  check_dim(shift.size());
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + shift, c);
  for (const auto& [e, c] : r.terms_) {
    for (int k : e) {
      if (k < 0) throw Error(ErrorKind::OrthantViolation, "shift produces a negative exponent");
    }
  }
  return r;
}

Polynomial Polynomial::derivative(std::size_t index) const {
  if (index >= dim_) throw Error(ErrorKind::DimensionMismatch, "derivative index out of range");
  Polynomial r(dim_);
  for (const auto& [e, c] : terms_) {
    if (e[index] == 0) continue;
    Exponent d = e;
    d[index] -= 1;
    r.add_term(d, c * e[index]);
  }
  return r;
}

namespace {

template <typename T>
T monomial_value(const Exponent& e, std::span<const T> point) {
  T v(1);
  for (std::size_t i = 0; i < e.size(); ++i) {
    for (int k = 0; k < e[i]; ++k) v *= point[i];
  }
  return v;
}

}  // namespace

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  check_dim(point.size());
  Rational s(0);
  for (const auto& [e, c] : terms_) s += c * monomial_value(e, point);
  return s;
}

double Polynomial::evaluate(std::span<const double> point) const {
  check_dim(point.size());
  double s = 0.0;
  for (const auto& [e, c] : terms_) s += c.get_d() * monomial_value(e, point);
  return s;
}

long double Polynomial::evaluate(std::span<const long double> point) const {
  check_dim(point.size());
  long double s = 0.0L;
  for (const auto& [e, c] : terms_) {
    long double coeff = static_cast<long double>(c.get_num().get_d()) / static_cast<long double>(c.get_den().get_d());
    s += coeff * monomial_value(e, point);
  }
  return s;
}

// ---------------------------------------------------------------------------
// PolyVector

PolyVector::PolyVector(std::size_t dim) : components_(dim, Polynomial(dim)) {}

PolyVector::PolyVector(std::vector<Polynomial> components) : components_(std::move(components)) {
  for (const auto& p : components_) {
    if (p.dim() != components_.size()) {
      throw Error(ErrorKind::DimensionMismatch, "field component dimension differs from component count");
    }
  }
}

bool PolyVector::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

std::vector<Exponent> PolyVector::support() const {
  std::map<Exponent, bool, GrlexLess> seen;
  for (const auto& p : components_) {
    for (const auto& [e, c] : p.terms()) seen.emplace(e, true);
  }
  std::vector<Exponent> out;
  for (const auto& [e, b] : seen) out.push_back(e);
  return out;
}

RationalVector PolyVector::coefficient_vector(const Exponent& e) const {
  RationalVector v;
  v.reserve(components_.size());
  for (const auto& p : components_) v.push_back(p.coefficient(e));
  return v;
}

PolyVector& PolyVector::operator+=(const PolyVector& other) {
  if (other.dim() != dim()) throw Error(ErrorKind::DimensionMismatch, "field dimensions differ");
  for (std::size_t i = 0; i < dim(); ++i) components_[i] += other.components_[i];
  return *this;
}

PolyVector PolyVector::operator-() const { return scaled(Rational(-1)); }

PolyVector PolyVector::scaled(const Rational& c) const {
  PolyVector r(*this);
  for (auto& p : r.components_) p = p.scaled(c);
  return r;
}

PolyVector PolyVector::shifted(const Exponent& shift) const {
  PolyVector r(*this);
  for (auto& p : r.components_) p = p.shifted(shift);
  return r;
}

PolyVector operator*(const Polynomial& h, const PolyVector& g) {
  PolyVector r(g);
  for (auto& p : r.components_) p = h * p;
  return r;
}

RationalVector PolyVector::evaluate(std::span<const Rational> point) const {
  RationalVector v;
  v.reserve(dim());
  for (const auto& p : components_) v.push_back(p.evaluate(point));
  return v;
}

std::vector<double> PolyVector::evaluate(std::span<const double> point) const {
  std::vector<double> v;
  v.reserve(dim());
  for (const auto& p : components_) v.push_back(p.evaluate(point));
  return v;
}

// ---------------------------------------------------------------------------
// Text form

std::vector<std::string> default_species_names(std::size_t dim) {
  if (dim <= 3) {
    static const char* names[] = {"x", "y", "z"};
    return std::vector<std::string>(names, names + dim);
  }
  std::vector<std::string> out;
  for (std::size_t i = 0; i < dim; ++i) out.push_back("x" + std::to_string(i + 1));
  return out;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& names) : text_(text), names_(names) {}

  Polynomial parse() {
    Polynomial p = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::Parse, "polynomial: " + msg + " at column " + std::to_string(pos_ + 1) + " in '" +
                                      std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expression() {
    Polynomial acc(names_.size());
    skip_space();
    bool negative = false;
    if (accept('-')) {
      negative = true;
    } else {
      accept('+');
    }
    while (true) {
      Polynomial t = term();
      if (negative) {
        acc -= t;
      } else {
        acc += t;
      }
      if (accept('+')) {
        negative = false;
      } else if (accept('-')) {
        negative = true;
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  Polynomial power() {
    Polynomial base = factor();
    if (accept('^')) {
      int k = small_integer();
      Polynomial r = Polynomial::constant(names_.size(), Rational(1));
      for (int i = 0; i < k; ++i) r = r * base;
      return r;
    }
    return base;
  }

  int small_integer() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected nonnegative integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expression();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' || text_[pos_] == '/')) {
        ++pos_;
      }
      try {
        return Polynomial::constant(names_.size(), parse_rational(text_.substr(start, pos_ - start)));
      } catch (const Error&) {
        pos_ = start;
        fail("invalid number");
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      auto it = std::find(names_.begin(), names_.end(), name);
      if (it == names_.end()) {
        pos_ = start;
        fail("unknown species '" + std::string(name) + "'");
      }
      return Polynomial::variable(names_.size(), static_cast<std::size_t>(it - names_.begin()));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& names_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const Exponent& e, const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += names[i];
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& names) {
  return Parser(text, names).parse();
}

std::string to_string(const Polynomial& p, const std::vector<std::string>& names) {
  if (names.size() != p.dim()) throw Error(ErrorKind::DimensionMismatch, "species name count differs from dimension");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    Rational mag = abs(c);
    std::string mono = monomial_text(e, names);
    std::string body;
    if (mono.empty()) {
      body = to_string(mag);
    } else if (mag == 1) {
      body = mono;
    } else {
      body = to_string(mag) + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

std::string to_string(const Polynomial& p) { return to_string(p, default_species_names(p.dim())); }

}  // namespace crn
