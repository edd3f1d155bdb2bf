#include "nilorbit/cli.hpp"

#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "nilorbit/dynkin.hpp"
#include "nilorbit/errors.hpp"
#include "nilorbit/frobenius.hpp"
#include "nilorbit/oracle.hpp"
#include "nilorbit/orbits.hpp"
#include "nilorbit/scan.hpp"
#include "nilorbit/weighted_diagram.hpp"

namespace nilorbit::cli {

namespace {

using nlohmann::ordered_json;

ordered_json diagram_json(const WeightedDynkinDiagram& d) {
  ordered_json labels = ordered_json::object();
  for (int node = 1; node <= d.type.rank; ++node)
    labels[std::to_string(node)] = d.label(node);
  return ordered_json{{"type", d.type.str()}, {"labels", labels}};
}

WeightedDynkinDiagram diagram_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw HypothesisError(std::string("cannot parse diagram JSON: ") + e.what());
  }
  if (!j.contains("type") || !j.contains("labels"))
    throw HypothesisError("diagram JSON needs \"type\" and \"labels\"");
  const DynkinType t = DynkinType::parse(j["type"].get<std::string>());
  std::vector<int> labels(t.rank, -1);
  for (const auto& [key, value] : j["labels"].items()) {
    const int node = std::stoi(key);
    if (node < 1 || node > t.rank)
      throw HypothesisError("diagram JSON labels node " + key +
                            " outside 1.." + std::to_string(t.rank));
    labels[node - 1] = value.get<int>();
  }
  for (int i = 0; i < t.rank; ++i)
    if (labels[i] < 0)
      throw HypothesisError("diagram JSON is missing node " +
                            std::to_string(i + 1));
  return WeightedDynkinDiagram::make(t, std::move(labels));
}

ordered_json stability_line(const StabilityReport& r) {
  return ordered_json{{"orbit", r.orbit.str()},
                      {"frobenius", r.frobenius},
                      {"stable", r.stable},
                      {"image", r.image.str()},
                      {"rational_point", r.has_rational_point}};
}

ordered_json matrix_json(const FqMatrix& m) {
  ordered_json a = ordered_json::array();
  for (int v : m.row_major()) a.push_back(v);
  return a;
}

std::string partition_key(const Partition& p) { return p.str(); }

struct Options {
  bool json = false;
  std::string type_text;
  std::string orbit_text;
  std::string frobenius_name;
  std::string diagram_text;
  bool dot = false;
  int p = 0;
  long long q_power = 0;
  int n = 0;
  long long q_field = 0;
  std::string map_text;
  int threads = 1;
  bool fixed_points = false;
};

int cmd_orbits(const Options& opt, std::ostream& out) {
  const DynkinType t = DynkinType::parse(opt.type_text);
  const auto labels = orbit_labels(t);
  if (opt.json) {
    ordered_json j{{"type", t.str()}, {"orbits", ordered_json::array()}};
    for (const auto& l : labels) j["orbits"].push_back(l.str());
    out << j.dump() << "\n";
  } else {
    for (const auto& l : labels) out << l.str() << "\n";
  }
  return 0;
}

int cmd_diagram(const Options& opt, std::ostream& out) {
  const OrbitLabel label = OrbitLabel::parse(opt.orbit_text);
  const auto d = diagram_of(label);
  if (opt.json) {
    out << diagram_json(d).dump() << "\n";
  } else {
    out << label.str() << " " << d.str() << "\n";
  }
  return 0;
}

int cmd_frobenius(const Options& opt, std::ostream& out) {
  const DynkinType t = DynkinType::parse(opt.type_text);
  const auto classes = frobenius_classes(t);
  if (opt.json) {
    ordered_json j{{"type", t.str()}, {"classes", ordered_json::array()}};
    for (const auto& c : classes)
      j["classes"].push_back(ordered_json{{"name", c.name},
                                          {"twist", c.twist.cycle_str()},
                                          {"description", c.description}});
    out << j.dump() << "\n";
  } else {
    for (const auto& c : classes)
      out << c.name << "  " << c.twist.cycle_str() << "  (" << c.description
          << ")\n";
  }
  return 0;
}

int cmd_action(const Options& opt, std::ostream& out) {
  const DynkinType t = DynkinType::parse(opt.type_text);
  const auto f = frobenius_by_name(t, opt.frobenius_name);
  const auto action = orbit_action(f);
  if (opt.json) {
    ordered_json j{{"type", t.str()},
                   {"frobenius", f.name},
                   {"action", ordered_json::array()}};
    for (const auto& [from, to] : action)
      j["action"].push_back(ordered_json{{"from", from.str()}, {"to", to.str()}});
    out << j.dump() << "\n";
  } else {
    for (const auto& [from, to] : action)
      out << from.str() << " -> " << to.str() << "\n";
  }
  return 0;
}

int cmd_closure(const Options& opt, std::ostream& out) {
  const OrbitLabel label = OrbitLabel::parse(opt.orbit_text);
  const auto labels = closure(label);
  if (opt.dot) {
    const auto poset = closure_poset(labels);
    out << "digraph closure {\n";
    for (const auto& l : poset.labels) out << "  \"" << l.str() << "\";\n";
    for (const auto& [hi, lo] : poset.covers)
      out << "  \"" << poset.labels[hi].str() << "\" -> \""
          << poset.labels[lo].str() << "\";\n";
    out << "}\n";
    return 0;
  }
  if (opt.json) {
    ordered_json j{{"orbit", label.str()}, {"closure", ordered_json::array()}};
    for (const auto& l : labels) j["closure"].push_back(l.str());
    out << j.dump() << "\n";
  } else {
    for (const auto& l : labels) out << l.str() << "\n";
  }
  return 0;
}

int cmd_stability(const Options& opt, std::ostream& out) {
  const DynkinType t = DynkinType::parse(opt.type_text);
  const auto f = frobenius_by_name(t, opt.frobenius_name);
  if (!opt.diagram_text.empty()) {
    // Caller-supplied diagram (the E6 route, or any validated diagram).
    const auto d = diagram_from_json(opt.diagram_text);
    if (!(d.type == t))
      throw HypothesisError("diagram type does not match --type");
    const bool stable = twist_fixes(f, d);
    const auto image = apply_automorphism(f.twist, d);
    if (opt.json) {
      out << ordered_json{{"diagram", diagram_json(d)},
                          {"frobenius", f.name},
                          {"stable", stable},
                          {"image_diagram", diagram_json(image)},
                          {"rational_point", stable}}
                 .dump()
          << "\n";
    } else {
      out << d.str() << "  " << f.name << "  "
          << (stable ? "stable" : "moved -> " + image.str())
          << "  rational_point=" << (stable ? "yes" : "no") << "\n";
    }
    return 0;
  }
  const auto report = rationality_report(t, f, opt.p, opt.q_power);
  if (opt.json) {
    out << ordered_json{{"meta",
                         ordered_json{{"type", t.str()},
                                      {"frobenius", report.frobenius},
                                      {"p", report.p},
                                      {"q", report.q},
                                      {"p_ge_coxeter", report.p_ge_coxeter}}}}
               .dump()
        << "\n";
    for (const auto& r : report.reports) out << stability_line(r).dump() << "\n";
  } else {
    out << "type " << t.str() << "  frobenius " << report.frobenius << "  p "
        << report.p << "  q " << report.q << "  p>=h "
        << (report.p_ge_coxeter ? "yes" : "no") << "\n";
    for (const auto& r : report.reports)
      out << r.orbit.str() << "  "
          << (r.stable ? "stable" : "moved -> " + r.image.str())
          << "  rational_point=" << (r.has_rational_point ? "yes" : "no")
          << "\n";
  }
  return 0;
}

FqField field_from_q(long long q) {
  for (int p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    if (q == p) return FqField(p, 1);
    if (q == static_cast<long long>(p) * p) return FqField(p, 2);
    throw HypothesisError("q = " + std::to_string(q) +
                          " is not p or p^2 for a prime p");
  }
  throw HypothesisError("q = " + std::to_string(q) + " is not a prime power");
}

int cmd_verify(const Options& opt, std::ostream& out) {
  const FqField field = field_from_q(opt.q_field);
  const FrobeniusMap map = [&] {
    if (opt.map_text == "standard") return FrobeniusMap::standard;
    if (opt.map_text == "twisted") return FrobeniusMap::twisted;
    throw HypothesisError("--map must be standard or twisted");
  }();
  const bool want_fixed = opt.fixed_points && map == FrobeniusMap::twisted;
  const auto report =
      verify_orbit_stability(field, opt.n, map, opt.threads, want_fixed);
  if (opt.json) {
    ordered_json j{{"n", report.n},
                   {"field", ordered_json{{"p", report.p},
                                          {"k", report.k},
                                          {"q", report.q}}},
                   {"map", map_name(report.map)},
                   {"kernel", report.kernel},
                   {"scanned", report.scanned},
                   {"nilpotent_total", report.nilpotent_total},
                   {"census", ordered_json::object()},
                   {"type_invariant", report.type_invariant}};
    for (const auto& [type, count] : report.census)
      j["census"][partition_key(type)] = count;
    j["counterexample"] = report.counterexample
                              ? matrix_json(*report.counterexample)
                              : ordered_json(nullptr);
    if (want_fixed) {
      ordered_json fixed = ordered_json::object();
      for (const auto& [type, rep] : report.fixed_points)
        fixed[partition_key(type)] =
            rep ? matrix_json(*rep) : ordered_json(nullptr);
      j["fixed_points"] = fixed;
    }
    out << j.dump() << "\n";
  } else {
    out << "n " << report.n << "  F_" << report.q << "  map "
        << map_name(report.map) << "  kernel " << report.kernel << "\n";
    out << "scanned " << report.scanned << "  nilpotent "
        << report.nilpotent_total << "\n";
    for (const auto& [type, count] : report.census)
      out << "  " << type.str() << "  " << count << "\n";
    out << "type_invariant " << (report.type_invariant ? "yes" : "NO") << "\n";
    if (report.counterexample) {
      out << "counterexample:";
      for (int v : report.counterexample->row_major()) out << " " << v;
      out << "\n";
    }
    if (want_fixed)
      for (const auto& [type, rep] : report.fixed_points) {
        out << "fixed_point " << type.str();
        if (rep) {
          for (int v : rep->row_major()) out << " " << v;
          out << "\n";
        } else {
          out << " none\n";
        }
      }
  }
  return report.type_invariant ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"nilpotent orbits, weighted Dynkin diagrams, Frobenius "
               "stability, and finite-field verification"};
  app.require_subcommand(1);
  Options opt;

  auto* orbits_cmd = app.add_subcommand("orbits", "list orbit labels");
  orbits_cmd->add_option("--type", opt.type_text, "Dynkin type, e.g. D4")
      ->required();
  orbits_cmd->add_flag("--json", opt.json);

  auto* diagram_cmd =
      app.add_subcommand("diagram", "weighted Dynkin diagram of an orbit");
  diagram_cmd->add_option("--orbit", opt.orbit_text, "label, e.g. D4:[4,4]:I")
      ->required();
  diagram_cmd->add_flag("--json", opt.json);

  auto* stability_cmd =
      app.add_subcommand("stability", "stability and rationality report");
  stability_cmd->add_option("--type", opt.type_text)->required();
  stability_cmd->add_option("--frobenius", opt.frobenius_name)->required();
  stability_cmd->add_option("--p", opt.p, "characteristic");
  stability_cmd->add_option("--q", opt.q_power, "field size, a power of p");
  stability_cmd->add_option("--diagram", opt.diagram_text,
                            "diagram JSON for types without a label formula");
  stability_cmd->add_flag("--json", opt.json);

  auto* action_cmd =
      app.add_subcommand("action", "permutation of orbit labels under a twist");
  action_cmd->add_option("--type", opt.type_text)->required();
  action_cmd->add_option("--frobenius", opt.frobenius_name)->required();
  action_cmd->add_flag("--json", opt.json);

  auto* closure_cmd = app.add_subcommand("closure", "orbit closure (type A)");
  closure_cmd->add_option("--orbit", opt.orbit_text)->required();
  closure_cmd->add_flag("--dot", opt.dot, "Hasse diagram in DOT");
  closure_cmd->add_flag("--json", opt.json);

  auto* frobenius_cmd =
      app.add_subcommand("frobenius", "Frobenius twist classes of a type");
  frobenius_cmd->add_option("--type", opt.type_text)->required();
  frobenius_cmd->add_flag("--json", opt.json);

  auto* verify_cmd = app.add_subcommand(
      "verify", "exhaustive finite-field verification of orbit stability");
  verify_cmd->add_option("--n", opt.n, "matrix size")->required();
  verify_cmd->add_option("--q", opt.q_field, "field size (p or p^2)")
      ->required();
  verify_cmd->add_option("--map", opt.map_text, "standard or twisted")
      ->required();
  verify_cmd->add_option("--threads", opt.threads);
  verify_cmd->add_flag("--fixed-points", opt.fixed_points,
                       "also search for twisted-fixed representatives");
  verify_cmd->add_flag("--json", opt.json);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (orbits_cmd->parsed()) return cmd_orbits(opt, out);
    if (diagram_cmd->parsed()) return cmd_diagram(opt, out);
    if (stability_cmd->parsed()) {
      if (opt.diagram_text.empty() && (opt.p == 0 || opt.q_power == 0))
        throw HypothesisError("--p and --q are required (or pass --diagram)");
      return cmd_stability(opt, out);
    }
    if (action_cmd->parsed()) return cmd_action(opt, out);
    if (closure_cmd->parsed()) return cmd_closure(opt, out);
    if (frobenius_cmd->parsed()) return cmd_frobenius(opt, out);
    if (verify_cmd->parsed()) return cmd_verify(opt, out);
    err << "usage error: no subcommand\n";
    return 2;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace nilorbit::cli
