// crn: command-line front end for the reaction network library.
//
// Exit codes: 0 success, 1 other failure, 2 parse or usage error, 3 unsupported
// dimension, 4 invalid scalar polynomial.

#include <unistd.h>

#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crn/bundles.hpp"
#include "crn/classify.hpp"
#include "crn/dynamics.hpp"
#include "crn/io.hpp"
#include "crn/realize.hpp"
#include "crn/transform.hpp"

namespace {

using namespace crn;

constexpr int kExitFailure = 1;
constexpr int kExitParse = 2;
constexpr int kExitDimension = 3;
constexpr int kExitScalar = 4;

bool use_color() { return std::getenv("NO_COLOR") == nullptr && isatty(STDOUT_FILENO); }

std::string yes_no(bool v) {
  const char* word = v ? "yes" : "no";
  if (!use_color()) return word;
  return std::string(v ? "\033[32m" : "\033[31m") + word + "\033[0m";
}

std::string vec_text(const IntVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + std::to_string(v[i]);
  return out + ")";
}

std::string subset_text(const std::vector<SpeciesSubset>& list, const SpeciesList& species) {
  if (list.empty()) return "none";
  std::string out;
  for (const auto& z : list) {
    if (!out.empty()) out += ", ";
    out += "{";
    for (std::size_t i = 0; i < z.size(); ++i) out += (i ? "," : "") + species[z[i]];
    out += "}";
  }
  return out;
}

std::string edge_text(const ReactionNetwork& net, std::size_t j) {
  return io::complex_label(net.source(j), net.species()) + " -> " + io::complex_label(net.target(j), net.species());
}

std::string sweep_text(const SweepVerdict& v, const ReactionNetwork& net) {
  std::string out = yes_no(v.holds) + " (" + std::to_string(v.directions_checked) + " directions)";
  if (!v.holds && v.counterexample) {
    out += ", fails for u = " + vec_text(*v.counterexample);
    if (v.failing_edge) out += " at " + edge_text(net, *v.failing_edge);
  }
  return out;
}

std::vector<double> parse_doubles(const std::string& text, std::size_t expected, const char* what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    char* end = nullptr;
    double v = std::strtod(item.c_str(), &end);
    if (item.empty() || *end != '\0') throw Error(ErrorKind::Parse, std::string(what) + ": '" + item + "' is not a number");
    out.push_back(v);
  }
  if (expected && out.size() != expected) {
    throw Error(ErrorKind::DimensionMismatch,
                std::string(what) + " needs " + std::to_string(expected) + " values, got " + std::to_string(out.size()));
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + path);
  out << text;
}

int exit_code(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::Parse: return kExitParse;
    case ErrorKind::UnsupportedDimension: return kExitDimension;
    case ErrorKind::InvalidScalarPolynomial: return kExitScalar;
    default: return kExitFailure;
  }
}

struct ClassifyArgs {
  std::string file;
  bool json = false;
  std::size_t falsify = 0;
  std::uint64_t seed = 1;
};

int run_classify(const ClassifyArgs& a) {
  const auto sys = io::read_system(io::read_json_file(a.file));
  const auto& net = sys.network();
  const auto report = classification_report(sys);
  std::optional<FalsifierResult> fal;
  if (a.falsify > 0) fal = falsify_endotactic(net, a.falsify, a.seed);
  if (a.json) {
    auto doc = io::to_json(report, net.species());
    if (fal) {
      doc["falsifier"] = {{"trials", fal->trials},
                          {"seed", a.seed},
                          {"refutation", fal->refutation ? io::Json(*fal->refutation) : io::Json(nullptr)}};
    }
    std::cout << io::dump(doc);
    return 0;
  }
  std::cout << "vertices              " << report.vertex_count << "\n"
            << "linkage classes       " << report.linkage_class_count << "\n"
            << "stoichiometric dim    " << report.stoichiometric_dimension << "\n"
            << "deficiency            " << report.deficiency << "\n"
            << "weakly reversible     " << yes_no(report.weakly_reversible) << "\n"
            << "endotactic            " << sweep_text(report.endotactic, net) << "\n"
            << "strongly endotactic   " << sweep_text(report.strongly_endotactic, net) << "\n"
            << "siphons               " << subset_text(report.siphons, net.species()) << "\n"
            << "critical siphons      " << subset_text(report.critical_siphons, net.species()) << "\n";
  if (fal) {
    std::cout << "falsifier             " << fal->trials << " random directions (seed " << a.seed << "), ";
    std::cout << (fal->refutation ? "refuted by u = " + vec_text(*fal->refutation) : std::string("no refutation")) << "\n";
  }
  return 0;
}

struct ConstructArgs {
  std::string base;
  std::string scalar;
  std::string output;
  std::string dot;
};

int run_construct(const ConstructArgs& a) {
  const auto base = io::read_system(io::read_json_file(a.base));
  const auto h = parse_polynomial(a.scalar, base.species().names());
  const auto check = check_scalar_polynomial(h);
  std::cout << "scalar polynomial     " << to_string(h, base.species().names()) << "\n"
            << "single negative term  " << yes_no(check.single_negative_term) << "\n"
            << "interior exponent     " << yes_no(check.negative_exponent_interior) << "\n"
            << "h(1,...,1)            " << to_string(check.value_at_ones) << "\n";
  if (!check.valid()) throw Error(ErrorKind::InvalidScalarPolynomial, check.problem);
  const auto full = construct_full_unit(base, ScalarPolynomial(h));
  auto doc = io::to_json(full);
  doc["field"] = io::field_to_json(mass_action_field(full), full.species())["field"];
  std::cout << "full unit             " << full.network().vertices().size() << " complexes, "
            << full.network().edges().size() << " reactions\n";
  if (!a.output.empty()) write_text(a.output, io::dump(doc));
  if (!a.dot.empty()) write_text(a.dot, io::to_dot(full));
  return 0;
}

int run_equiv(const std::string& a, const std::string& b) {
  const auto sa = io::read_system(io::read_json_file(a));
  const auto sb = io::read_system(io::read_json_file(b));
  std::cout << (is_dynamically_equivalent(sa, sb) ? "equivalent" : "not equivalent") << "\n";
  return 0;
}

struct WrArgs {
  std::string field;
  int margin = 0;
  std::string witness;
  bool trace = false;
};

int run_wr_check(const WrArgs& a) {
  const auto [species, f] = io::read_field(io::read_json_file(a.field));
  const auto cands = newton_polytope_candidates(f, a.margin);
  const auto decision = wr_realizable_on(f, cands, species);
  if (a.trace) {
    for (std::size_t i = 0; i < decision.trace.size(); ++i) {
      const auto& s = decision.trace[i];
      std::cerr << "round " << i + 1 << ": " << (s.feasible ? "" : "infeasible, ") << s.admissible_edges
                << " admissible edges, " << s.edges_in_cycles << " on cycles\n";
    }
  }
  if (decision.realizable) {
    std::cout << "WR-realizable on candidate set (size " << cands.size() << ")\n";
    if (!a.witness.empty()) write_text(a.witness, io::dump(io::to_json(*decision.witness)));
  } else {
    std::cout << "not WR-realizable on candidate set (size " << cands.size() << ")\n";
  }
  return 0;
}

struct SimulateArgs {
  std::string system;
  std::string x0;
  double t_end = 10;
  double tol = 1e-8;
};

int run_simulate(const SimulateArgs& a) {
  const auto [species, f] = io::read_field(io::read_json_file(a.system));
  const auto x0 = parse_doubles(a.x0, f.dim(), "--x0");
  const auto traj = dynamics::integrate(f, x0, a.t_end, a.tol);
  io::write_trajectory_csv(std::cout, traj, species);
  if (traj.hit_boundary) std::cerr << "trajectory reached the boundary/blow-up guard and stopped early\n";
  return 0;
}

int run_steady_states(const std::string& name, std::size_t count) {
  const auto& b = example_bundle(name);
  const auto curve = dynamics::sample_steady_curve(b.scalar, b.box, count, &b.full_field);
  std::cout << "kind";
  for (const auto& n : b.species.names()) std::cout << "," << n;
  std::cout << ",h,residual\n";
  auto row = [&](const char* kind, const dynamics::State& x, double hval, double res) {
    std::cout << kind;
    for (double v : x) std::cout << "," << io::format_double(v);
    std::cout << "," << io::format_double(hval) << "," << io::format_double(res) << "\n";
  };
  for (std::size_t i = 0; i < curve.points.size(); ++i) row("curve", curve.points[i], curve.h_values[i], curve.residuals[i]);
  for (const auto& ref : b.fixed_points) {
    const auto fp = dynamics::newton_fixed_point(b.base_field, ref.seed, 1e-13);
    double res = 0;
    for (double v : dynamics::eval_field(b.full_field, fp.x)) res = std::max(res, std::abs(v));
    row("fixed", fp.x, std::abs(b.scalar.evaluate(std::span<const double>(fp.x))), res);
  }
  if (name == "ex3d") std::cerr << "the base field also vanishes on the boundary line (1, 0, z), not sampled here\n";
  return 0;
}

struct PortraitArgs {
  std::string example;
  std::string system;
  bool base = false;
  std::size_t resolution = 50;
  std::string box;
};

int run_portrait(const PortraitArgs& a) {
  SpeciesList species;
  PolyVector f;
  dynamics::Box box;
  if (!a.example.empty()) {
    const auto& b = example_bundle(a.example);
    species = b.species;
    f = a.base ? b.base_field : b.full_field;
    box = dynamics::Box::cube(b.species.size(), 0.0, 3.0);
  } else if (!a.system.empty()) {
    std::tie(species, f) = io::read_field(io::read_json_file(a.system));
    box = dynamics::Box::cube(species.size(), 0.0, 3.0);
  } else {
    throw Error(ErrorKind::Parse, "portrait needs --example or --system");
  }
  if (!a.box.empty()) {
    const auto lh = parse_doubles(a.box, 2, "--box");
    box = dynamics::Box::cube(species.size(), lh[0], lh[1]);
  }
  io::write_grid_csv(std::cout, dynamics::phase_portrait_grid(f, box, a.resolution), species);
  return 0;
}

struct ExportArgs {
  std::string name;
  std::string network;
  std::string field;
  bool dot = false;
};

int run_export(const ExportArgs& a) {
  const auto& b = example_bundle(a.name);
  auto pick = [&](const std::string& which) {
    if (which != "base" && which != "full") throw Error(ErrorKind::Parse, "expected 'base' or 'full', got '" + which + "'");
    return which == "base";
  };
  if (!a.network.empty()) {
    const auto sys = pick(a.network) ? b.base_system() : b.full_system();
    std::cout << (a.dot ? io::to_dot(sys) : io::dump(io::to_json(sys)));
  } else if (!a.field.empty()) {
    std::cout << io::dump(io::field_to_json(pick(a.field) ? b.base_field : b.full_field, b.species));
  } else {
    std::cout << io::dump(io::to_json(b));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Construct, classify and simulate mass-action reaction networks"};
  app.footer("Exit codes: 0 ok, 1 failure, 2 parse/usage error, 3 unsupported dimension, 4 invalid scalar polynomial.\n"
             "Set NO_COLOR to disable colored output.");
  app.require_subcommand(1);

  ClassifyArgs classify;
  auto* c = app.add_subcommand("classify", "Deficiency, weak reversibility, endotacticity and siphons of a network");
  c->add_option("network", classify.file, "network, field or example bundle JSON")->required();
  c->add_flag("--json", classify.json, "machine-readable report");
  c->add_option("--falsify", classify.falsify, "also test this many random directions");
  c->add_option("--seed", classify.seed, "seed for --falsify");

  ConstructArgs construct;
  auto* k = app.add_subcommand("construct", "Build the full unit h * base from a base system");
  k->add_option("--base", construct.base, "base system JSON")->required();
  k->add_option("--scalar", construct.scalar, "scalar polynomial, e.g. \"x^2 + x*y^2 + y - 4*x*y\"")->required();
  k->add_option("-o,--output", construct.output, "write the full unit network and field here");
  k->add_option("--dot", construct.dot, "write a Graphviz rendering here");

  std::string equiv_a, equiv_b;
  auto* e = app.add_subcommand("equiv", "Check dynamical equivalence of two systems");
  e->add_option("a", equiv_a)->required();
  e->add_option("b", equiv_b)->required();

  WrArgs wr;
  auto* w = app.add_subcommand("wr-check", "Weakly reversible realizability on the Newton-polytope candidate set");
  w->add_option("--field", wr.field, "field, network or bundle JSON")->required();
  w->add_option("--margin", wr.margin, "grow the polytope by this many lattice steps")->check(CLI::NonNegativeNumber);
  w->add_option("--witness", wr.witness, "write a realizing network here when one exists");
  w->add_flag("--trace", wr.trace, "print pruning rounds on standard error");

  SimulateArgs sim;
  auto* s = app.add_subcommand("simulate", "Integrate the field and print the trajectory as CSV");
  s->add_option("--system", sim.system, "field, network or bundle JSON")->required();
  s->add_option("--x0", sim.x0, "initial state, comma separated")->required();
  s->add_option("--t-end", sim.t_end, "final time")->check(CLI::PositiveNumber);
  s->add_option("--tol", sim.tol, "local error tolerance")->check(CLI::PositiveNumber);

  std::string steady_example;
  std::size_t steady_count = 59;
  auto* st = app.add_subcommand("steady-states", "Sample the steady-state curve and fixed points of an example as CSV");
  st->add_option("--example", steady_example, "example name")->required();
  st->add_option("--count", steady_count, "scan lines per axis")->check(CLI::PositiveNumber);

  PortraitArgs portrait;
  auto* p = app.add_subcommand("portrait", "Phase-portrait grid as CSV");
  p->add_option("--example", portrait.example, "example name");
  p->add_option("--system", portrait.system, "field, network or bundle JSON");
  p->add_flag("--base", portrait.base, "use the example's base field instead of the full unit");
  p->add_option("--resolution", portrait.resolution, "points per axis")->check(CLI::Range(2, 2000));
  p->add_option("--box", portrait.box, "lo,hi for every axis (default 0,3)");

  ExportArgs ex;
  auto* x = app.add_subcommand("examples", "List or export the bundled examples");
  x->require_subcommand(1);
  auto* xl = x->add_subcommand("list", "List bundled examples");
  auto* xe = x->add_subcommand("export", "Write an example as JSON");
  xe->add_option("name", ex.name)->required();
  xe->add_option("--network", ex.network, "base or full: the canonical network only");
  xe->add_option("--field", ex.field, "base or full: the field only");
  xe->add_flag("--dot", ex.dot, "with --network, Graphviz instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : kExitParse;
  }

  try {
    if (c->parsed()) return run_classify(classify);
    if (k->parsed()) return run_construct(construct);
    if (e->parsed()) return run_equiv(equiv_a, equiv_b);
    if (w->parsed()) return run_wr_check(wr);
    if (s->parsed()) return run_simulate(sim);
    if (st->parsed()) return run_steady_states(steady_example, steady_count);
    if (p->parsed()) return run_portrait(portrait);
    if (xl->parsed()) {
      for (const auto& b : example_bundles()) std::cout << b.name << "\t" << b.description << "\n";
      return 0;
    }
    if (xe->parsed()) return run_export(ex);
  } catch (const Error& err) {
    std::cerr << "crn: " << to_string(err.kind()) << ": " << err.what() << "\n";
    return exit_code(err);
  } catch (const std::exception& err) {
    std::cerr << "crn: " << err.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
