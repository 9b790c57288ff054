#include "crn/io.hpp"

#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

#include "crn/realize.hpp"

namespace crn::io {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error(ErrorKind::Parse, what); }

const Json& member(const Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) schema_error(std::string("missing \"") + key + "\"");
  return doc.at(key);
}

SpeciesList species_from(const Json& doc) {
  const auto& s = member(doc, "species");
  if (!s.is_array()) schema_error("\"species\" must be an array of names");
  std::vector<std::string> names;
  for (const auto& n : s) {
    if (!n.is_string()) schema_error("species names must be strings");
    names.push_back(n.get<std::string>());
  }
  try {
    return SpeciesList(std::move(names));
  } catch (const Error& e) {
    schema_error(e.what());
  }
}

Rational rational_from(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<long>());
  schema_error("rates must be rational strings such as \"3/2\"");
}

Json species_json(const SpeciesList& species) { return Json(species.names()); }

}  // namespace

Json to_json(const MassActionSystem& sys) {
  const auto& net = sys.network();
  Json doc;
  doc["species"] = species_json(net.species());
  Json vertices = Json::array();
  for (const auto& v : net.vertices()) vertices.push_back(v);
  doc["vertices"] = std::move(vertices);
  Json edges = Json::array();
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    edges.push_back({{"src", net.edges()[j].src}, {"dst", net.edges()[j].dst}, {"rate", to_string(sys.rates()[j])}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

MassActionSystem system_from_json(const Json& doc) {
  auto species = species_from(doc);
  const auto& vs = member(doc, "vertices");
  if (!vs.is_array()) schema_error("\"vertices\" must be an array");
  std::vector<Exponent> vertices;
  for (const auto& v : vs) {
    if (!v.is_array()) schema_error("each vertex must be an array of integers");
    Exponent e;
    for (const auto& k : v) {
      if (!k.is_number_integer()) schema_error("vertex entries must be integers");
      e.push_back(k.get<int>());
    }
    vertices.push_back(std::move(e));
  }
  const auto& es = member(doc, "edges");
  if (!es.is_array()) schema_error("\"edges\" must be an array");
  std::vector<Edge> edges;
  std::vector<Rational> rates;
  for (const auto& e : es) {
    const auto& src = member(e, "src");
    const auto& dst = member(e, "dst");
    if (!src.is_number_unsigned() || !dst.is_number_unsigned()) schema_error("edge endpoints must be vertex indices");
    edges.push_back({src.get<std::size_t>(), dst.get<std::size_t>()});
    rates.push_back(e.contains("rate") ? rational_from(e.at("rate")) : Rational(1));
  }
  return MassActionSystem(ReactionNetwork(std::move(species), std::move(vertices), std::move(edges)), std::move(rates));
}

Json field_to_json(const PolyVector& f, const SpeciesList& species) {
  Json doc;
  doc["species"] = species_json(species);
  Json comps = Json::array();
  for (const auto& c : f.components()) comps.push_back(to_string(c, species.names()));
  doc["field"] = std::move(comps);
  return doc;
}

std::pair<SpeciesList, PolyVector> field_from_json(const Json& doc) {
  auto species = species_from(doc);
  const auto& f = member(doc, "field");
  if (!f.is_array() || f.size() != species.size()) schema_error("\"field\" needs one polynomial per species");
  std::vector<Polynomial> comps;
  for (const auto& c : f) {
    if (!c.is_string()) schema_error("field components must be polynomial strings");
    comps.push_back(parse_polynomial(c.get<std::string>(), species.names()));
  }
  return {species, PolyVector(std::move(comps))};
}

Json to_json(const ExampleBundle& b) {
  Json doc;
  doc["name"] = b.name;
  doc["description"] = b.description;
  doc["species"] = species_json(b.species);
  doc["base_field"] = field_to_json(b.base_field, b.species)["field"];
  doc["scalar"] = to_string(b.scalar, b.species.names());
  doc["full_field"] = field_to_json(b.full_field, b.species)["field"];
  doc["base_network"] = to_json(b.base_system());
  doc["full_network"] = to_json(b.full_system());
  Json pts = Json::array();
  for (const auto& p : b.fixed_points) {
    Json printed = Json::array();
    for (double v : p.printed) printed.push_back(format_double(v));
    pts.push_back({{"printed", printed}, {"tolerance", format_double(p.printed_tolerance)}});
  }
  doc["fixed_points"] = std::move(pts);
  Json lo = Json::array(), hi = Json::array();
  for (double v : b.box.lo) lo.push_back(format_double(v));
  for (double v : b.box.hi) hi.push_back(format_double(v));
  doc["box"] = {{"lo", lo}, {"hi", hi}};
  return doc;
}

Json to_json(const ClassificationReport& r, const SpeciesList& species) {
  auto subsets = [&](const std::vector<SpeciesSubset>& list) {
    Json out = Json::array();
    for (const auto& z : list) {
      Json names = Json::array();
      for (auto i : z) names.push_back(species[i]);
      out.push_back(std::move(names));
    }
    return out;
  };
  auto sweep = [](const SweepVerdict& v) {
    Json out;
    out["holds"] = v.holds;
    out["directions_checked"] = v.directions_checked;
    out["counterexample"] = v.counterexample ? Json(*v.counterexample) : Json(nullptr);
    out["failing_edge"] = v.failing_edge ? Json(*v.failing_edge) : Json(nullptr);
    return out;
  };
  Json doc;
  doc["vertices"] = r.vertex_count;
  doc["linkage_classes"] = r.linkage_class_count;
  doc["stoichiometric_dimension"] = r.stoichiometric_dimension;
  doc["deficiency"] = r.deficiency;
  doc["weakly_reversible"] = r.weakly_reversible;
  doc["endotactic"] = sweep(r.endotactic);
  doc["strongly_endotactic"] = sweep(r.strongly_endotactic);
  doc["siphons"] = subsets(r.siphons);
  doc["critical_siphons"] = subsets(r.critical_siphons);
  return doc;
}

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::Parse, origin + ": byte " + std::to_string(e.byte) + ": invalid JSON");
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str(), path);
}

MassActionSystem read_system(const Json& doc) {
  if (doc.is_object() && doc.contains("full_network")) return system_from_json(doc.at("full_network"));
  if (doc.is_object() && doc.contains("field") && !doc.contains("edges")) {
    auto [species, f] = field_from_json(doc);
    return canonical_realization(f, species);
  }
  return system_from_json(doc);
}

std::pair<SpeciesList, PolyVector> read_field(const Json& doc) {
  if (doc.is_object() && doc.contains("full_field")) {
    Json f;
    f["species"] = member(doc, "species");
    f["field"] = doc.at("full_field");
    return field_from_json(f);
  }
  if (doc.is_object() && doc.contains("field")) return field_from_json(doc);
  auto sys = system_from_json(doc);
  return {sys.species(), mass_action_field(sys)};
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

std::string complex_label(const Exponent& e, const SpeciesList& species) {
  std::string out;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "+";
    if (e[i] != 1) out += std::to_string(e[i]);
    out += species[i];
  }
  return out.empty() ? "0" : out;
}

std::string to_dot(const MassActionSystem& sys) {
  const auto& net = sys.network();
  std::ostringstream out;
  out << "digraph network {\n";
  for (std::size_t i = 0; i < net.vertices().size(); ++i) {
    out << "  v" << i << " [label=\"" << complex_label(net.vertices()[i], net.species()) << "\"];\n";
  }
  for (std::size_t j = 0; j < net.edges().size(); ++j) {
    out << "  v" << net.edges()[j].src << " -> v" << net.edges()[j].dst << " [label=\"" << to_string(sys.rates()[j])
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

void write_trajectory_csv(std::ostream& out, const dynamics::Trajectory& traj, const SpeciesList& species) {
  out << "t";
  for (const auto& n : species.names()) out << "," << n;
  out << "\n";
  for (std::size_t k = 0; k < traj.times.size(); ++k) {
    out << format_double(traj.times[k]);
    for (double v : traj.states[k]) out << "," << format_double(v);
    out << "\n";
  }
}

void write_grid_csv(std::ostream& out, const std::vector<dynamics::GridPoint>& grid, const SpeciesList& species) {
  for (const auto& n : species.names()) out << n << ",";
  for (const auto& n : species.names()) out << "u_" << n << ",";
  out << "mag";
  for (const auto& n : species.names()) out << ",sign_" << n;
  out << "\n";
  for (const auto& g : grid) {
    for (double v : g.x) out << format_double(v) << ",";
    for (double v : g.direction) out << format_double(v) << ",";
    out << format_double(g.magnitude);
    for (int s : g.signs) out << "," << s;
    out << "\n";
  }
}

}  // namespace crn::io
