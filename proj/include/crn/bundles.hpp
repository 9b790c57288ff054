#pragma once

#include <string>
#include <vector>

#include "crn/dynamics.hpp"
#include "crn/network.hpp"

namespace crn {

struct ReferencePoint {
  dynamics::State printed;  // as displayed in the source, to the printed digits
  dynamics::State seed;     // Newton start for the base field
  double printed_tolerance = 1e-3;
};

// One of the worked examples, stored as fields; networks are canonical realizations.
struct ExampleBundle {
  std::string name;
  std::string description;
  SpeciesList species;
  PolyVector base_field;
  Polynomial scalar;
  PolyVector full_field;  // scalar * base_field
  std::vector<ReferencePoint> fixed_points;
  dynamics::Box box;

  MassActionSystem base_system() const;
  MassActionSystem full_system() const;
};

const std::vector<ExampleBundle>& example_bundles();
/// Throws InvalidArgument for unknown names.
const ExampleBundle& example_bundle(const std::string& name);

}  // namespace crn
