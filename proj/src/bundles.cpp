#include "crn/bundles.hpp"

#include "crn/realize.hpp"

namespace crn {

namespace {

ExampleBundle make(std::string name, std::string description, std::vector<std::string> names,
                   std::vector<std::string> base, const std::string& scalar, std::vector<ReferencePoint> points) {
  ExampleBundle b;
  b.name = std::move(name);
  b.description = std::move(description);
  b.species = SpeciesList(names);
  std::vector<Polynomial> comps;
  for (const auto& text : base) comps.push_back(parse_polynomial(text, names));
  b.base_field = PolyVector(std::move(comps));
  b.scalar = parse_polynomial(scalar, names);
  b.full_field = b.scalar * b.base_field;
  b.fixed_points = std::move(points);
  b.box = dynamics::Box::cube(names.size(), 0.1, 3.0);
  return b;
}

std::vector<ExampleBundle> build_bundles() {
  std::vector<ExampleBundle> out;
  out.push_back(make("ex1", "endotactic full unit, single fixed point of the base",
                     {"x", "y"}, {"1 - x + y^2 - x*y^2", "y - 2*y^2 - 2*x*y^2"}, "x^2 + x*y^2 + y - 4*x*y",
                     {{{1.0, 0.25}, {0.9, 0.3}, 1e-10}}));
  out.push_back(make("ex2", "endotactic full unit, irrational fixed point of the base",
                     {"x", "y"}, {"1 - x + y + y^2", "y - x*y^2"}, "x^2 + x*y^2 + y - 4*x*y",
                     {{{1.839, 0.544}, {2.0, 0.6}, 1e-3}}));
  out.push_back(make("ex3", "strongly endotactic full unit",
                     {"x", "y"}, {"2*y^2 - 2*x^2 - x*y", "2 - 2*x^2*y^2 - x*y"}, "1 + x^3 + x^2*y^2 - 4*x^2*y",
                     {{{0.781, 1.0}, {0.8, 1.1}, 1e-3}}));
  out.push_back(make("ex3d", "three-species full unit with a surface of steady states",
                     {"x", "y", "z"},
                     {"(1 + z)*(1 - x + y + y^2)", "(1 + z)*(y - x*y^2)", "y - x*y^2*z"},
                     "1 + x*y + y*z + x*z + x^2*y*z + x*y^2*z + x*y*z^2 + x^2*y^2*z^2 - 15*x*y*z",
                     {{{1.83, 0.54, 1.0}, {1.8, 0.55, 1.05}, 2e-2}}));
  return out;
}

}  // namespace

MassActionSystem ExampleBundle::base_system() const { return canonical_realization(base_field, species); }

MassActionSystem ExampleBundle::full_system() const { return canonical_realization(full_field, species); }

const std::vector<ExampleBundle>& example_bundles() {
  static const std::vector<ExampleBundle> bundles = build_bundles();
  return bundles;
}

const ExampleBundle& example_bundle(const std::string& name) {
  for (const auto& b : example_bundles()) {
    if (b.name == name) return b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown example '" + name + "'");
}

}  // namespace crn
