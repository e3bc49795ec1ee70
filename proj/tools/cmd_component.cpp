#include <optional>

#include "cli_common.hpp"

namespace cli {

namespace {

struct ComponentArgs {
  std::string spec;
  int max_ql = 4;
  bool solve = false;
};

JordanType type_field(const json& v, int p) {
  if (v.is_string()) return JordanType::parse(v.get<std::string>(), p);
  return JordanType::from_json(v.dump());
}

std::vector<Int> int_vector(const json& v, const char* name) {
  if (!v.is_array()) throw jtype::ParseError(std::string("\"") + name + "\" must be an array");
  return v.get<std::vector<Int>>();
}

void print_table(const Globals& g, const std::vector<std::pair<Int, JordanType>>& rows, int last_index) {
  if (g.format == Format::Json) {
    json out = json::array();
    for (const auto& [ql, t] : rows) out.push_back(json::parse(t.to_json()));
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << "ql\ti\talpha\n";
  for (const auto& [ql, t] : rows) {
    for (int i = 1; i <= last_index; ++i) std::cout << ql << "\t" << i << "\t" << t.at(i) << "\n";
  }
}

jtype::TubeProfile tube_profile_of(const json& spec, int p, const jtype::CartanPair& cartan) {
  const bool include_p = spec.value("include_p", false);
  if (spec.contains("profile")) {
    const json& pr = spec.at("profile");
    jtype::TubeProfile prof;
    prof.p = p;
    prof.include_p = include_p;
    prof.slope = int_vector(pr.at("slope"), "slope");
    prof.intercept = int_vector(pr.at("intercept"), "intercept");
    prof.start = pr.value("start", 1);
    if (prof.slope.size() != static_cast<std::size_t>(p) || prof.intercept.size() != static_cast<std::size_t>(p)) {
      throw jtype::ValidationError("profile slope and intercept need p entries");
    }
    return prof;
  }
  if (spec.contains("types")) {
    const json& types = spec.at("types");
    if (!types.is_array() || types.size() != 2) throw jtype::ParseError("\"types\" needs two consecutive types");
    return jtype::profile_from_types(type_field(types[0], p), type_field(types[1], p), spec.value("start", 1),
                                     include_p);
  }
  return jtype::tube_profile(type_field(spec.at("seed"), p), int_vector(spec.at("multiplicities"), "multiplicities"),
                             cartan, include_p);
}

// Named components: "heisenberg" and "sl2-1:<a>" (0 <= a <= p-2).
std::optional<json> builtin_spec(const std::string& name, const Globals& g) {
  if (name == "heisenberg") {
    const int p = require_p(g);
    JordanType seed = JordanType::block(p, p);
    for (int l = 1; l < p; ++l) seed = seed + JordanType::block(p, l, 2);
    std::vector<Int> n(p - 1, 0);
    n[0] = 1;
    return json{{"kind", "tube"}, {"p", p}, {"seed", seed.str()}, {"multiplicities", n}, {"include_p", true}};
  }
  const std::string prefix = "sl2-1:";
  if (name.rfind(prefix, 0) == 0) {
    const int p = require_p(g);
    int a = -1;
    try {
      a = std::stoi(name.substr(prefix.size()));
    } catch (const std::exception&) {
      throw jtype::ParseError("bad weight in '" + name + "'");
    }
    if (a < 0 || a > p - 2) throw jtype::ValidationError("sl2-1 weight must lie in 0..p-2");
    std::vector<Int> slope(p, 0), intercept(p, 0);
    slope[p - 1] = 1;
    intercept[a] += 1;
    intercept[p - a - 2] += 1;
    intercept[p - 1] -= 1;
    return json{{"kind", "tube"},
                {"p", p},
                {"profile", {{"slope", slope}, {"intercept", intercept}}},
                {"include_p", true}};
  }
  return std::nullopt;
}

void run(const Globals& g, const ComponentArgs& args) {
  const std::optional<json> named = builtin_spec(args.spec, g);
  const json spec = named ? *named : load_json(args.spec);
  int p = spec.value("p", g.p);
  if (g.p != 0 && p != g.p) throw jtype::ValidationError("--p disagrees with the component spec");
  if (p < 2) throw jtype::ValidationError("component spec needs p");
  if (args.max_ql < 1) throw jtype::ValidationError("--max-ql must be >= 1");
  const std::string kind = spec.value("kind", "tube");
  std::vector<std::pair<Int, JordanType>> rows;

  if (kind == "tube") {
    const jtype::CartanPair cartan = jtype::build_cartan_pair(p);
    const jtype::TubeProfile prof = tube_profile_of(spec, p, cartan);
    if (args.solve) {
      jtype::MultiplicitySolution sol = jtype::solve_multiplicities(prof, cartan);
      for (const auto& w : sol.warnings) std::cerr << "warning: " << w << "\n";
      if (g.format == Format::Json) {
        std::cout << json{{"n", sol.n}, {"locally_split", sol.locally_split}}.dump() << "\n";
      } else {
        std::cout << "n = " << tuple_str(sol.n) << "\n";
        if (sol.locally_split) std::cout << "locally split\n";
      }
      return;
    }
    for (Int ql = prof.start; ql < prof.start + args.max_ql; ++ql) rows.emplace_back(ql, jtype::evaluate_profile(prof, ql));
    print_table(g, rows, prof.include_p ? p : p - 1);
  } else if (kind == "central") {
    const int j = spec.at("j").get<int>();
    const Int m = spec.at("m").get<Int>();
    const Int n = spec.at("n").get<Int>();
    for (Int ql = 1; ql <= args.max_ql; ++ql) rows.emplace_back(ql, jtype::tube_central(p, j, m, n, ql));
    print_table(g, rows, p - 1);
  } else if (kind == "split") {
    const jtype::TreeClass tc = jtype::TreeClass::parse(spec.value("tree_class", "A_inf"));
    const Int f_seed = spec.value("f_seed", Int{1});
    const jtype::SplitProfile prof = jtype::seed_to_split_profile(type_field(spec.at("seed"), p), f_seed, tc);
    if (args.solve) throw jtype::ValidationError("--solve applies to tube components");
    // f grows linearly along A_inf and is constant on the other classes
    const bool linear = tc.kind == jtype::TreeClass::Kind::AInf;
    for (Int ql = 1; ql <= args.max_ql; ++ql) {
      rows.emplace_back(ql, jtype::split_propagate(prof, linear ? f_seed * ql : f_seed));
    }
    print_table(g, rows, p - 1);
  } else {
    throw jtype::ValidationError("unknown component kind '" + kind + "'");
  }
}

}  // namespace

void add_component_command(CLI::App& app, Globals& g) {
  auto args = std::make_shared<ComponentArgs>();
  auto* cmd = app.add_subcommand("component", "Propagate Jordan types along a component");
  cmd->add_option("spec", args->spec, "Component spec: JSON file, inline JSON, heisenberg or sl2-1:<a>")->required();
  cmd->add_option("--max-ql", args->max_ql, "Number of quasi-lengths to tabulate");
  cmd->add_flag("--solve", args->solve, "Recover relative projective multiplicities");
  cmd->callback([&g, args] { run(g, *args); });
}

}  // namespace cli
