#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "jumpnum/errors.hpp"
#include "jumpnum/jumping.hpp"
#include "jumpnum/oracle.hpp"
#include "jumpnum/puiseux.hpp"
#include "jumpnum/resolution.hpp"

namespace jumpnum::cli {

using nlohmann::json;

namespace {

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError(path + ": " + e.what());
  }
}

std::vector<std::string> names_of(const ResolutionData& r, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int i : ids) out.push_back(r.names[static_cast<std::size_t>(i)]);
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

std::vector<std::string> string_list(const json& j) {
  std::vector<std::string> out;
  for (const auto& x : j) out.push_back(x.get<std::string>());
  return out;
}

struct Input {
  EnriquesDiagram diagram;
  json source;
  std::optional<Poly2> poly;
};

Input load(const RunConfig& c) {
  const int given = static_cast<int>(c.poly.has_value()) + static_cast<int>(c.branches_file.has_value()) + static_cast<int>(c.diagram_file.has_value());
  if (given != 1) throw InputError("give exactly one of --poly, --branches, --diagram");
  Input in;
  if (c.poly) {
    in.poly = parse_polynomial(*c.poly);
    in.diagram = to_diagram(puiseux_branches(*in.poly, c.ext_depth));
    in.source = {{"kind", "poly"}, {"source", *c.poly}};
  } else if (c.branches_file) {
    in.diagram = read_branches(read_json_file(*c.branches_file));
    in.source = {{"kind", "branches"}, {"source", *c.branches_file}};
  } else {
    in.diagram = read_diagram(read_json_file(*c.diagram_file));
    in.source = {{"kind", "diagram"}, {"source", *c.diagram_file}};
  }
  const auto violations = validate(in.diagram);
  if (!violations.empty()) throw InputError("invalid diagram: " + join(violations, "; "));
  return in;
}

json branch_section(const EnriquesDiagram& d) {
  json bs = json::array(), cs = json::array();
  for (std::size_t i = 0; i < d.branches.size(); ++i) {
    const auto& b = d.branches[i];
    json e = {{"name", b.name}, {"coefficient", b.coefficient}, {"path", b.path}, {"multiplicities", b.multiplicities}};
    e["char_exponents"] = b.exponents ? json(b.exponents->beta()) : json(nullptr);
    bs.push_back(e);
    for (std::size_t j = i + 1; j < d.branches.size(); ++j) {
      const auto& p = b.path;
      const auto& q = d.branches[j].path;
      std::size_t s = 0;
      while (s < p.size() && s < q.size() && p[s] == q[s]) ++s;
      cs.push_back({{"pair", {b.name, d.branches[j].name}}, {"shared_points", s}});
    }
  }
  return {{"branches", bs}, {"contacts", cs}};
}

json record_json(const ResolutionData& r, const JumpRecord& rec) {
  return {{"lambda", rec.lambda.to_string()}, {"critical", names_of(r, rec.critical)}, {"contributing", names_of(r, rec.contributing)}};
}

json relevance_json(const ResolutionData& r) {
  json out = json::array();
  for (const auto& rel : relevance_table(r)) {
    out.push_back({{"divisor", r.names[static_cast<std::size_t>(rel.divisor)]},
                   {"valence", rel.valence},
                   {"relevant", rel.relevant},
                   {"witness", rel.witness ? json(rel.witness->to_string()) : json(nullptr)}});
  }
  return out;
}

/// Reruns the unloading of every multiplier vector at the jumping numbers
/// with a shuffled pick order; the closure must not depend on it.
void shuffled_unloading_check(const ResolutionData& r, const JumpReport& rep, unsigned long long seed) {
  std::mt19937_64 rng(seed);
  for (const auto& rec : rep.records) {
    for (Side side : {Side::at, Side::left_limit}) {
      const auto v = multiplier_vector(r, rec.lambda, side);
      if (antinef_closure(r, v, &rng) != antinef_closure(r, v)) {
        throw InvariantError("unloading depends on the pick order at " + rec.lambda.to_string());
      }
    }
  }
}

std::string pad(const std::string& s, std::size_t w) { return s.size() >= w ? s + " " : s + std::string(w - s.size(), ' '); }

void render_branches(const json& doc, std::ostringstream& o) {
  if (!doc.contains("branches")) return;
  o << "branches:\n";
  for (const auto& b : doc["branches"]) {
    std::string ex = "-";
    if (!b["char_exponents"].is_null()) {
      const auto beta = b["char_exponents"].get<std::vector<long long>>();
      ex = "(" + std::to_string(beta[0]) + ";";
      for (std::size_t i = 1; i < beta.size(); ++i) ex += (i > 1 ? "," : "") + std::to_string(beta[i]);
      ex += ")";
    }
    std::vector<std::string> path, mult;
    for (const auto& v : b["path"]) path.push_back(std::to_string(v.get<int>()));
    for (const auto& v : b["multiplicities"]) mult.push_back(std::to_string(v.get<long long>()));
    o << "  " << pad(b["name"].get<std::string>(), 6) << pad(ex, 12) << "coefficient " << b["coefficient"].get<long long>() << "  path "
      << join(path, ",") << "  multiplicities " << join(mult, ",") << "\n";
  }
  for (const auto& c : doc["contacts"]) {
    o << "  contact " << c["pair"][0].get<std::string>() << " " << c["pair"][1].get<std::string>() << ": " << c["shared_points"].get<long long>()
      << " shared points\n";
  }
}

void render_relevant_line(const json& rel, std::ostringstream& o) {
  std::vector<std::string> parts;
  for (const auto& x : rel) {
    if (x["relevant"].get<bool>()) {
      parts.push_back(x["divisor"].get<std::string>() + " (valence " + std::to_string(x["valence"].get<int>()) + ", witness " +
                      x["witness"].get<std::string>() + ")");
    }
  }
  o << "relevant divisors: " << (parts.empty() ? "none" : join(parts, ", ")) << "\n";
}

}  // namespace

Command parse_command(const std::string& name) {
  static const std::map<std::string, Command> m{{"resolve", Command::resolve}, {"jump", Command::jump}, {"relevance", Command::relevance},
                                                {"oracle", Command::oracle},   {"graph", Command::graph}};
  auto it = m.find(name);
  if (it == m.end()) throw InputError("unknown command '" + name + "'");
  return it->second;
}

std::string command_name(Command c) {
  switch (c) {
    case Command::resolve: return "resolve";
    case Command::jump: return "jump";
    case Command::relevance: return "relevance";
    case Command::oracle: return "oracle";
    case Command::graph: return "graph";
  }
  return "?";
}

EnriquesDiagram read_branches(const json& doc) {
  try {
    std::vector<BranchSpec> specs;
    std::map<std::string, int> index;
    for (const auto& b : doc.at("branches")) {
      BranchSpec s;
      s.name = b.at("name").get<std::string>();
      s.exponents = CharExponents(b.at("char_exponents").get<std::vector<long long>>());
      s.coefficient = b.value("multiplicity", 1LL);
      if (s.coefficient < 1) throw InputError("branch " + s.name + ": multiplicity must be positive");
      if (!index.emplace(s.name, static_cast<int>(specs.size())).second) throw InputError("duplicate branch name " + s.name);
      specs.push_back(s);
    }
    std::vector<Contact> contacts;
    if (doc.contains("contacts")) {
      for (const auto& c : doc.at("contacts")) {
        const auto pair = c.at("pair").get<std::vector<std::string>>();
        if (pair.size() != 2) throw InputError("a contact pair names two branches");
        for (const auto& n : pair) {
          if (!index.count(n)) throw InputError("contact names unknown branch " + n);
        }
        contacts.push_back({index[pair[0]], index[pair[1]], c.at("shared_points").get<int>()});
      }
    }
    return build_diagram(specs, contacts);
  } catch (const json::exception& e) {
    throw InputError(std::string("branch file: ") + e.what());
  }
}

EnriquesDiagram read_diagram(const json& doc) {
  try {
    EnriquesDiagram d;
    for (const auto& p : doc.at("points")) {
      Point pt;
      pt.id = p.at("id").get<int>();
      if (pt.id != static_cast<int>(d.points.size())) throw InputError("point ids must be 0, 1, 2, ... in order");
      pt.parent = p.at("parent").is_null() ? -1 : p.at("parent").get<int>();
      if (p.contains("extra_proximity") && !p.at("extra_proximity").is_null()) pt.extra = p.at("extra_proximity").get<int>();
      d.points.push_back(pt);
    }
    for (const auto& b : doc.at("branches")) {
      DiagramBranch db;
      db.name = b.at("name").get<std::string>();
      db.path = b.at("path").get<std::vector<int>>();
      db.coefficient = b.value("multiplicity", 1LL);
      if (b.contains("char_exponents") && !b.at("char_exponents").is_null()) {
        db.exponents = CharExponents(b.at("char_exponents").get<std::vector<long long>>());
      }
      if (b.contains("multiplicities")) {
        db.multiplicities = b.at("multiplicities").get<std::vector<long long>>();
      } else if (db.exponents) {
        for (const auto& e : extended_sequence(*db.exponents, static_cast<int>(db.path.size()))) db.multiplicities.push_back(e.multiplicity);
      } else {
        throw InputError("branch " + db.name + " needs char_exponents or multiplicities");
      }
      d.branches.push_back(db);
    }
    return d;
  } catch (const json::exception& e) {
    throw InputError(std::string("diagram file: ") + e.what());
  }
}

json report(const RunConfig& c) {
  if (c.bound <= Rational(0)) throw InputError("bound must be positive");
  json doc;
  doc["command"] = command_name(c.command);

  if (c.command == Command::oracle) {
    if (!c.poly) throw InputError("oracle needs --poly");
    const Poly2 f = parse_polynomial(*c.poly);
    doc["input"] = {{"kind", "poly"}, {"source", *c.poly}};
    const auto np = polygon(f);
    json vs = json::array(), es = json::array();
    for (const auto& v : np.vertices) vs.push_back({v.first, v.second});
    for (const auto& e : np.edges) es.push_back({{"p", e.p}, {"q", e.q}, {"c", e.c}});
    doc["polygon"] = {{"vertices", vs}, {"edges", es}};
    const Rational bound = std::min(c.bound, Rational(1));
    doc["bound"] = bound.to_string();
    json js = json::array();
    for (const auto& l : oracle_jumping_numbers(f, bound)) js.push_back(l.to_string());
    doc["jumping_numbers"] = js;
    return doc;
  }

  const Input in = load(c);
  doc["input"] = in.source;
  doc.update(branch_section(in.diagram));
  const ResolutionData r = resolve(in.diagram);

  switch (c.command) {
    case Command::resolve: {
      json ds = json::array(), ss = json::array(), es = json::array();
      for (int j = 0; j < r.exceptional; ++j) {
        const auto u = static_cast<std::size_t>(j);
        ds.push_back({{"name", r.names[u]}, {"a", r.a[u]}, {"k", r.k[u]}, {"self_intersection", r.self_intersection(j)}, {"valence", r.valence[u]}});
      }
      for (int b = 0; b < r.strict; ++b) {
        const auto u = static_cast<std::size_t>(r.exceptional + b);
        ss.push_back({{"name", r.names[u]}, {"a", r.a[u]}, {"branch", in.diagram.branches[static_cast<std::size_t>(b)].name}});
      }
      for (int i = 0; i < r.size(); ++i) {
        for (int j = i + 1; j < r.size(); ++j) {
          if (r.intersection[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] != 0) es.push_back({r.names[static_cast<std::size_t>(i)], r.names[static_cast<std::size_t>(j)]});
        }
      }
      doc["divisors"] = ds;
      doc["strict"] = ss;
      doc["edges"] = es;
      break;
    }
    case Command::jump: {
      const auto rep = jumping_numbers(r, c.bound);
      if (c.seed) shuffled_unloading_check(r, rep, *c.seed);
      doc["bound"] = rep.bound.to_string();
      doc["lct"] = rep.lct.to_string();
      json js = json::array();
      for (const auto& rec : rep.records) js.push_back(record_json(r, rec));
      doc["jumping_numbers"] = js;
      doc["relevance"] = relevance_json(r);
      break;
    }
    case Command::relevance: {
      const auto violations = check_relevance_theorem(r);
      if (!violations.empty()) throw InvariantError("relevance theorem fails: " + join(violations, "; "));
      const auto rep = jumping_numbers(r, Rational(1));
      doc["relevance"] = relevance_json(r);
      doc["lct"] = record_json(r, rep.records.front());
      break;
    }
    case Command::graph:
      doc["dot"] = to_dot(r);
      break;
    case Command::oracle:
      break;
  }
  return doc;
}

std::string render_text(const json& doc) {
  std::ostringstream o;
  const std::string cmd = doc.at("command").get<std::string>();
  if (cmd == "graph") return doc.at("dot").get<std::string>();
  if (cmd == "oracle") {
    o << "newton polygon vertices:";
    for (const auto& v : doc["polygon"]["vertices"]) o << " (" << v[0].get<int>() << "," << v[1].get<int>() << ")";
    o << "\n";
    for (const auto& e : doc["polygon"]["edges"]) {
      o << "edge: " << e["p"].get<long long>() << "x + " << e["q"].get<long long>() << "y = " << e["c"].get<long long>() << "\n";
    }
    o << "jumping numbers in (0, " << doc["bound"].get<std::string>() << "] below 1: " << join(string_list(doc["jumping_numbers"]), ", ") << "\n";
    return o.str();
  }
  render_branches(doc, o);
  if (cmd == "resolve") {
    o << pad("divisor", 9) << pad("a", 7) << pad("k", 7) << pad("self", 6) << "valence\n";
    for (const auto& d : doc["divisors"]) {
      o << pad(d["name"].get<std::string>(), 9) << pad(std::to_string(d["a"].get<long long>()), 7) << pad(std::to_string(d["k"].get<long long>()), 7)
        << pad(std::to_string(d["self_intersection"].get<long long>()), 6) << d["valence"].get<int>() << "\n";
    }
    for (const auto& s : doc["strict"]) {
      o << pad(s["name"].get<std::string>(), 9) << pad(std::to_string(s["a"].get<long long>()), 7) << "strict transform of " << s["branch"].get<std::string>()
        << "\n";
    }
    std::vector<std::string> es;
    for (const auto& e : doc["edges"]) es.push_back(e[0].get<std::string>() + "-" + e[1].get<std::string>());
    o << "edges: " << join(es, " ") << "\n";
  } else if (cmd == "jump") {
    o << "jumping numbers in (0, " << doc["bound"].get<std::string>() << "]:\n";
    for (const auto& rec : doc["jumping_numbers"]) {
      const auto contributing = string_list(rec["contributing"]);
      o << "  " << pad(rec["lambda"].get<std::string>(), 8) << "critical " << pad(join(string_list(rec["critical"]), ","), 16) << "contributing "
        << (contributing.empty() ? "none" : join(contributing, ",")) << "\n";
    }
    o << "lct: " << doc["lct"].get<std::string>() << "\n";
    render_relevant_line(doc["relevance"], o);
  } else if (cmd == "relevance") {
    o << pad("divisor", 9) << pad("valence", 9) << pad("relevant", 10) << "witness\n";
    for (const auto& x : doc["relevance"]) {
      o << pad(x["divisor"].get<std::string>(), 9) << pad(std::to_string(x["valence"].get<int>()), 9) << pad(x["relevant"].get<bool>() ? "yes" : "no", 10)
        << (x["witness"].is_null() ? "-" : x["witness"].get<std::string>()) << "\n";
    }
    render_relevant_line(doc["relevance"], o);
    const auto& lct = doc["lct"];
    const auto contributing = string_list(lct["contributing"]);
    o << "lct " << lct["lambda"].get<std::string>() << ": ";
    if (contributing.empty()) {
      o << "no single contributor; critical set {" << join(string_list(lct["critical"]), ",") << "}\n";
    } else {
      o << "contributed by " << join(contributing, ",") << "\n";
    }
  }
  return o.str();
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const json doc = report(config);
    if (config.format == Format::json) {
      out << doc.dump(2) << "\n";
    } else {
      out << render_text(doc);
    }
    return 0;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InvariantError& e) {
    err << "internal invariant violated: " << e.what() << "\n";
    return 2;
  } catch (const std::overflow_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 2;
  }
}

int main_with_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Jumping numbers of plane curve singularities"};
  std::string command, bound = "1", format = "text";
  RunConfig c;
  std::string poly, branches, diagram;
  unsigned long long seed = 0;
  app.add_option("command", command, "resolve | jump | relevance | oracle | graph")->required();
  auto* o_poly = app.add_option("--poly", poly, "polynomial f(x,y) over Q");
  auto* o_branches = app.add_option("--branches", branches, "branch file (json)");
  auto* o_diagram = app.add_option("--diagram", diagram, "diagram file (json)");
  app.add_option("--bound", bound, "upper end of the jumping number range, p/q");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--ext-depth", c.ext_depth, "maximal depth of the extension tower")->check(CLI::NonNegativeNumber);
  auto* o_seed = app.add_option("--seed", seed, "recheck unloading in a random order");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  try {
    c.command = parse_command(command);
    c.bound = Rational::parse(bound);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  c.format = format == "json" ? Format::json : Format::text;
  if (*o_poly) c.poly = poly;
  if (*o_branches) c.branches_file = branches;
  if (*o_diagram) c.diagram_file = diagram;
  if (*o_seed) c.seed = seed;
  return run(c, out, err);
}

}  // namespace jumpnum::cli
