#include <doctest.h>

#include <sstream>

#include "crn/bundles.hpp"
#include "crn/io.hpp"
#include "support.hpp"

using namespace crn;

TEST_CASE("network documents round trip byte for byte") {
  testing_support::Rng rng(91);
  for (int k = 0; k < 50; ++k) {
    auto sys = testing_support::random_system(rng, static_cast<std::size_t>(rng.uniform(1, 3)), 6, 3);
    const auto text = io::dump(io::to_json(sys));
    auto back = io::system_from_json(io::parse_json(text, "test"));
    CHECK(io::dump(io::to_json(back)) == text);
    CHECK(mass_action_field(back) == mass_action_field(sys));
  }
}

TEST_CASE("field and bundle documents") {
  for (const auto& b : example_bundles()) {
    auto doc = io::field_to_json(b.full_field, b.species);
    auto [species, f] = io::field_from_json(io::parse_json(io::dump(doc), "test"));
    CHECK(species == b.species);
    CHECK(f == b.full_field);

    const auto bundle_text = io::dump(io::to_json(b));
    auto bundle_doc = io::parse_json(bundle_text, "test");
    CHECK(io::dump(bundle_doc) == bundle_text);
    CHECK(mass_action_field(io::read_system(bundle_doc)) == b.full_field);
    CHECK(io::read_field(bundle_doc).second == b.full_field);
  }
}

TEST_CASE("missing rates read as one") {
  auto doc = io::parse_json(R"({"species":["A","B"],"vertices":[[1,0],[0,1]],"edges":[{"src":0,"dst":1}]})", "t");
  auto sys = io::system_from_json(doc);
  CHECK(sys.rates() == std::vector<Rational>{Rational(1)});
}

TEST_CASE("malformed documents") {
  auto kind = [](const std::string& text) {
    try {
      io::read_system(io::parse_json(text, "t"));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Internal;
  };
  CHECK(kind("{") == ErrorKind::Parse);
  CHECK(kind(R"({"vertices":[]})") == ErrorKind::Parse);
  CHECK(kind(R"({"species":["A"],"vertices":[[1]],"edges":[{"src":0,"dst":"x"}]})") == ErrorKind::Parse);
  CHECK(kind(R"({"species":["A"],"vertices":[[1],[0]],"edges":[{"src":0,"dst":5}]})") == ErrorKind::InvalidNetwork);
  CHECK(kind(R"({"species":["A"],"field":["-1"]})") == ErrorKind::MalformedField);
  CHECK(kind(R"({"species":["A"],"field":["1 +"]})") == ErrorKind::Parse);
  try {
    io::parse_json("{\"a\": [1, 2", "doc.json");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("doc.json: byte") != std::string::npos);
  }
}

TEST_CASE("labels and DOT output") {
  SpeciesList s({"x", "y"});
  CHECK(io::complex_label({0, 0}, s) == "0");
  CHECK(io::complex_label({1, 2}, s) == "x+2y");
  SystemBuilder b(s);
  b.add_reaction({1, 0}, {0, 1}, Rational(3, 2));
  auto dot = io::to_dot(b.build());
  CHECK(dot.rfind("digraph network {", 0) == 0);
  CHECK(dot.find("label=\"x\"") != std::string::npos);
  CHECK(dot.find("label=\"3/2\"") != std::string::npos);
}

TEST_CASE("CSV writers") {
  SpeciesList s({"x", "y"});
  dynamics::Trajectory t;
  t.times = {0, 0.5};
  t.states = {{1, 2}, {1.5, 0.25}};
  std::ostringstream out;
  io::write_trajectory_csv(out, t, s);
  CHECK(out.str() == "t,x,y\n0,1,2\n0.5,1.5,0.25\n");

  std::ostringstream grid;
  io::write_grid_csv(grid, {{{1, 1}, {0.6, -0.8}, 5, {1, -1}}}, s);
  CHECK(grid.str() == "x,y,u_x,u_y,mag,sign_x,sign_y\n1,1,0.6,-0.8,5,1,-1\n");
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(50) == "50");
}
