#include <sstream>

#include "cli_common.hpp"

namespace cli {

namespace {

using jtype::QuiverWindow;

struct QuiverArgs {
  std::string window;
  std::string check_additive;
  bool admissible = false;
  std::string generator = "tau:1";
  bool orbit_graph = false;
  std::string minimal;
};

jtype::Quiver tree_of(const json& t) {
  jtype::Quiver q;
  q.vertex_count = t.at("vertices").get<int>();
  for (const auto& a : t.value("arrows", json::array())) q.arrows.emplace_back(a.at(0).get<int>(), a.at(1).get<int>());
  for (const auto& v : t.value("valuations", json::array())) {
    q.valuations.emplace_back(v.at(0).get<Int>(), v.at(1).get<Int>());
  }
  if (t.contains("truncated")) {
    q.truncated.assign(q.vertex_count, false);
    for (const auto& v : t.at("truncated")) {
      const int k = v.get<int>();
      if (k < 0 || k >= q.vertex_count) throw jtype::ValidationError("truncated vertex out of range");
      q.truncated[k] = true;
    }
  }
  if (t.contains("labels")) q.labels = t.at("labels").get<std::vector<std::string>>();
  q.validate();
  return q;
}

QuiverWindow window_of(const json& spec) {
  const std::string kind = spec.value("kind", "");
  if (kind == "tube") return QuiverWindow::tube(spec.at("rank").get<int>(), spec.value("max_ql", 4));
  if (kind == "a_inf") {
    return QuiverWindow::a_infinity(spec.value("n_min", Int{0}), spec.value("n_max", Int{4}), spec.value("max_ql", 4));
  }
  if (kind == "zt") {
    return QuiverWindow::zt(tree_of(spec.at("tree")), spec.value("n_min", Int{0}), spec.value("n_max", Int{4}));
  }
  throw jtype::ParseError("window kind must be tube, a_inf or zt");
}

Int parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw jtype::ParseError("bad " + what + " '" + text + "'");
  }
}

// Recognised: ql, ql-1, const:<c>.
jtype::VertexFunction function_of(const std::string& name, const QuiverWindow& w) {
  if (name == "ql" || name == "ql-1") {
    if (!w.has_quasi_length()) throw jtype::ValidationError(name + " needs a window with quasi-lengths");
    const Int shift = name == "ql" ? 0 : 1;
    return jtype::VertexFunction::tabulate(w, [shift](const jtype::WindowVertex& v) { return v.ql - shift; });
  }
  if (name.rfind("const:", 0) == 0) {
    const Int c = parse_int(name.substr(6), "constant");
    return jtype::VertexFunction::tabulate(w, [c](const jtype::WindowVertex&) { return c; });
  }
  throw jtype::ParseError("unknown function '" + name + "' (ql, ql-1, const:c)");
}

jtype::GroupGenerator generator_of(const std::string& text) {
  if (text == "trivial") return jtype::GroupGenerator::trivial();
  if (text.rfind("tau:", 0) == 0) {
    return jtype::GroupGenerator::tau_power(static_cast<int>(parse_int(text.substr(4), "tau power")));
  }
  if (text.rfind("perm:", 0) == 0) {
    std::vector<int> perm;
    std::stringstream ss(text.substr(5));
    std::string item;
    while (std::getline(ss, item, ',')) perm.push_back(static_cast<int>(parse_int(item, "permutation entry")));
    return jtype::GroupGenerator::automorphism(perm);
  }
  throw jtype::ParseError("generator must be trivial, tau:k or perm:i,j,...");
}

std::string status_word(jtype::LevelStatus s) {
  switch (s) {
    case jtype::LevelStatus::Certified: return "certified";
    case jtype::LevelStatus::Indeterminate: return "indeterminate";
    case jtype::LevelStatus::NotApplicable: return "n/a";
  }
  return "n/a";
}

void run_minimal(const Globals& g, const std::string& name) {
  const jtype::MinimalAdditive m = jtype::minimal_additive_function(jtype::TreeClass::parse(name));
  if (g.format == Format::Json) {
    json out{{"labels", m.graph.labels}, {"values", m.values}};
    out["image_size"] = m.image_size ? json(*m.image_size) : json(nullptr);
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << m.graph.to_dot(&m.values);
  if (m.image_size) {
    std::cout << "// image size " << *m.image_size << "\n";
  } else {
    std::cout << "// unbounded\n";
  }
}

void run_check(const Globals& g, const QuiverWindow& w, const std::string& fn) {
  const jtype::VertexFunction f = function_of(fn, w);
  const jtype::FunctionReport r = jtype::classify_function(w, f);
  std::size_t pass = 0, fail = 0;
  std::vector<std::string> notes(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) {
    const int st = r.vertex_status[v];
    if (st < 0) continue;
    const bool ok = st == 2;
    (ok ? pass : fail) += 1;
    notes[v] = std::to_string(f.values[v]) + (ok ? " PASS" : " FAIL");
  }
  std::ostringstream summary;
  summary << "additive " << (r.is_additive ? "yes" : "no") << ", subadditive " << (r.is_subadditive ? "yes" : "no")
          << ", " << pass << " PASS, " << fail << " FAIL";
  if (r.eventual_level) summary << ", eventual level " << *r.eventual_level << " (" << status_word(r.level_status) << ")";
  if (g.format == Format::Json) {
    json out{{"function", fn},
             {"additive", r.is_additive},
             {"subadditive", r.is_subadditive},
             {"pass", pass},
             {"fail", fail},
             {"checked", r.checked},
             {"level_status", status_word(r.level_status)}};
    out["eventual_level"] = r.eventual_level ? json(*r.eventual_level) : json(nullptr);
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << jtype::window_to_dot(w, &notes) << "// " << summary.str() << "\n";
}

void run(const Globals& g, const QuiverArgs& args) {
  if (!args.minimal.empty()) return run_minimal(g, args.minimal);
  if (args.window.empty()) throw jtype::ValidationError("a window spec is required");
  const QuiverWindow w = window_of(load_json(args.window));

  if (args.admissible) {
    const jtype::AdmissibilityReport r = jtype::check_admissible(w, generator_of(args.generator));
    if (g.format == Format::Json) {
      json out{{"admissible", r.admissible}, {"tested", r.tested}};
      if (r.violation) {
        out["violation"] = {w.vertex_label(r.violation->first), w.vertex_label(r.violation->second)};
      }
      std::cout << out.dump() << "\n";
    } else if (r.admissible) {
      std::cout << "admissible (" << r.tested << " vertices tested)\n";
    } else {
      std::cout << "not admissible: orbit of " << w.vertex_label(r.violation->first) << " meets the neighbourhood of "
                << w.vertex_label(r.violation->second) << " twice\n";
    }
    return;
  }
  if (args.orbit_graph) {
    const jtype::ValuedGraph graph = jtype::orbit_valued_graph(w);
    if (g.format == Format::Json) {
      std::cout << json{{"labels", graph.labels}, {"bond", graph.bond}}.dump() << "\n";
    } else {
      std::cout << graph.to_dot();
    }
    return;
  }
  if (!args.check_additive.empty()) return run_check(g, w, args.check_additive);
  std::cout << jtype::window_to_dot(w);
}

}  // namespace

void add_quiver_command(CLI::App& app, Globals& g) {
  auto args = std::make_shared<QuiverArgs>();
  auto* cmd = app.add_subcommand("quiver", "Translation quiver windows, admissibility and additive functions");
  cmd->add_option("window", args->window, "Window spec: JSON file or inline JSON");
  cmd->add_option("--check-additive", args->check_additive, "Overlay ql, ql-1 or const:c and test additivity");
  cmd->add_flag("--admissible", args->admissible, "Test admissibility of --generator");
  cmd->add_option("--generator", args->generator, "trivial, tau:k or perm:i,j,...");
  cmd->add_flag("--orbit-graph", args->orbit_graph, "Valued graph of tau-orbits");
  cmd->add_option("--minimal", args->minimal, "Minimal additive function of a tree class, e.g. E~8");
  cmd->callback([&g, args] { run(g, *args); });
}

}  // namespace cli
