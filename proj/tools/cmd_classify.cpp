#include <sstream>

#include "cli_common.hpp"

namespace cli {

namespace {

using jtype::CohomologyClassDescriptor;

struct CarlsonArgs {
  std::string descriptor;
  int degree = 2;
  bool nilpotent = false;
  Int dim = 0;
  std::string odd = "mixed";
  bool support_full = false;
  int pi_dim = 0;
  int srk = 0;
  int srk_quotient = -1;
  bool equidim = false;
  int nv = 0;
  int mv = 0;
  int ng = -1;
  bool finite_group = false;
  bool trigonalizable = false;
};

struct EndoArgs {
  std::string types;
  std::string tree_class;
  Int f_value = 0;
};

struct BensonArgs {
  std::string jt;
  bool cx2 = false;
};

struct Sl2Args {
  std::string family = "sl2-1";
  int pi_dim = 0;
  int index = 1;
  Int size = 1;
};

jtype::OddBehavior odd_of(const std::string& s) {
  if (s == "mixed") return jtype::OddBehavior::Mixed;
  if (s == "all-vanish") return jtype::OddBehavior::AllVanish;
  if (s == "none-vanish") return jtype::OddBehavior::NoneVanish;
  throw jtype::ParseError("odd behaviour must be mixed, all-vanish or none-vanish");
}

// Descriptor keys mirror the command-line flags.
CohomologyClassDescriptor descriptor_of(const json& j, int p_default) {
  CohomologyClassDescriptor d;
  d.p = j.value("p", p_default);
  d.degree = j.value("degree", 2);
  d.nilpotent = j.value("nilpotent", false);
  if (j.contains("dim")) d.dim_L = j.at("dim").get<Int>();
  d.support_full = j.value("support_full", false);
  d.odd_behavior = odd_of(j.value("odd", std::string("mixed")));
  d.ambient.pi_dim = j.value("pi_dim", 0);
  d.ambient.equidim = j.value("equidim", false);
  d.ambient.variety_dim = j.value("nv", 0);
  d.ambient.ambient_dim = j.value("mv", 0);
  d.ambient.srk = j.value("srk", 0);
  if (j.contains("srk_quotient")) d.ambient.srk_quotient = j.at("srk_quotient").get<int>();
  if (j.contains("ng")) d.ambient.min_component_dim = j.at("ng").get<int>();
  d.ambient.is_finite_group = j.value("finite_group", false);
  d.ambient.trigonalizable = j.value("trigonalizable", false);
  return d;
}

CohomologyClassDescriptor descriptor_of(const CarlsonArgs& a, int p) {
  CohomologyClassDescriptor d;
  d.p = p;
  d.degree = a.degree;
  d.nilpotent = a.nilpotent;
  if (a.dim > 0) d.dim_L = a.dim;
  d.support_full = a.support_full;
  d.odd_behavior = odd_of(a.odd);
  d.ambient.pi_dim = a.pi_dim;
  d.ambient.equidim = a.equidim;
  d.ambient.variety_dim = a.nv;
  d.ambient.ambient_dim = a.mv;
  d.ambient.srk = a.srk;
  if (a.srk_quotient >= 0) d.ambient.srk_quotient = a.srk_quotient;
  if (a.ng >= 0) d.ambient.min_component_dim = a.ng;
  d.ambient.is_finite_group = a.finite_group;
  d.ambient.trigonalizable = a.trigonalizable;
  return d;
}

void run_carlson(const Globals& g, const CarlsonArgs& a) {
  CohomologyClassDescriptor d;
  if (!a.descriptor.empty()) {
    d = descriptor_of(load_json(a.descriptor), g.p);
    if (g.p != 0 && d.p != g.p) throw jtype::ValidationError("--p disagrees with the descriptor");
  } else {
    d = descriptor_of(a, require_p(g));
  }
  if (d.p < 2) throw jtype::ValidationError("descriptor needs p");
  if (d.degree < 1) throw jtype::ValidationError("degree must be positive");
  const auto set = jtype::carlson_type_set(d);
  const jtype::Verdict v = jtype::carlson_indecomposability(d);
  if (g.format == Format::Json) {
    json types = json::array();
    for (const auto& t : set) types.push_back(t.str());
    json out{{"types", types}, {"verdict", jtype::to_string(v.kind)}, {"rule", v.rule}};
    if (!v.citation.empty()) out["citation"] = v.citation;
    std::cout << out.dump() << "\n";
    return;
  }
  std::cout << jtype::set_str(set) << " ; " << jtype::to_string(v.kind);
  if (!v.rule.empty()) std::cout << " ; " << v.rule;
  std::cout << "\n";
}

void run_endo(const Globals& g, const EndoArgs& a) {
  if (!a.tree_class.empty()) {
    const bool et = jtype::endo_trivial_on_component(jtype::TreeClass::parse(a.tree_class), a.f_value);
    std::cout << (g.format == Format::Json ? json{{"endo_trivial", et}}.dump() : (et ? "endo-trivial" : "not endo-trivial"))
              << "\n";
    return;
  }
  const int p = require_p(g);
  if (a.types.empty()) throw jtype::ValidationError("endo needs --jt or --tree-class");
  std::vector<JordanType> types;
  std::stringstream ss(a.types);
  std::string item;
  while (std::getline(ss, item, ';')) types.push_back(parse_type(item, p));
  const bool et = jtype::endo_trivial(types);
  std::cout << (g.format == Format::Json ? json{{"endo_trivial", et}}.dump() : (et ? "endo-trivial" : "not endo-trivial"))
            << "\n";
}

void run_benson(const Globals& g, const BensonArgs& a) {
  const jtype::BensonCheck r = jtype::benson_constraint(parse_type(a.jt, require_p(g)), a.cx2);
  if (g.format == Format::Json) {
    std::cout << json{{"status", jtype::to_string(r.status)}, {"note", r.note}}.dump() << "\n";
    return;
  }
  std::cout << jtype::to_string(r.status);
  if (!r.note.empty()) std::cout << " ; " << r.note;
  std::cout << "\n";
}

void run_sl2(const Globals& g, const Sl2Args& a) {
  const auto family = a.family == "sl2-1-tr" ? jtype::Sl2Family::SL2_1_Tr : jtype::Sl2Family::SL2_1;
  const auto types = jtype::sl2_family_types(family, require_p(g), a.pi_dim, a.index, a.size);
  if (g.format == Format::Json) {
    json out = json::array();
    for (const auto& t : types) out.push_back(json::parse(t.to_json()));
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& t : types) std::cout << t.str() << "\n";
}

}  // namespace

void add_classify_command(CLI::App& app, Globals& g) {
  auto* cmd = app.add_subcommand("classify", "Carlson module rules, endo-triviality and type families");
  cmd->require_subcommand(1);

  auto carlson = std::make_shared<CarlsonArgs>();
  auto* c = cmd->add_subcommand("carlson", "Jordan-type set and indecomposability verdict of L_zeta");
  c->add_option("--descriptor", carlson->descriptor, "Descriptor JSON (file or inline); overrides the flags");
  c->add_option("--degree", carlson->degree, "Cohomological degree of zeta")->check(CLI::PositiveNumber);
  c->add_flag("--nilpotent", carlson->nilpotent, "zeta is nilpotent");
  c->add_option("--dim", carlson->dim, "dim L_zeta (nilpotent) or of one summand")->check(CLI::PositiveNumber);
  c->add_option("--odd", carlson->odd, "Odd degree: mixed, all-vanish, none-vanish")
      ->check(CLI::IsMember({"mixed", "all-vanish", "none-vanish"}));
  c->add_flag("--support-full", carlson->support_full, "Zero locus is the whole support variety");
  c->add_option("--pi-dim", carlson->pi_dim, "Dimension of the pi-point space");
  c->add_option("--srk", carlson->srk, "Solvable rank");
  c->add_option("--srk-quotient", carlson->srk_quotient, "Rank modulo the linearly reductive radical");
  c->add_flag("--equidim", carlson->equidim, "Support variety is equidimensional");
  c->add_option("--nv", carlson->nv, "Dimension of the variety V");
  c->add_option("--mv", carlson->mv, "Ambient dimension m_V");
  c->add_option("--ng", carlson->ng, "Smallest component dimension");
  c->add_flag("--finite-group", carlson->finite_group, "Ambient is a finite group");
  c->add_flag("--trigonalizable", carlson->trigonalizable, "Ambient is trigonalizable");
  c->callback([&g, carlson] { run_carlson(g, *carlson); });

  auto endo = std::make_shared<EndoArgs>();
  auto* e = cmd->add_subcommand("endo", "Endo-triviality from Jordan types or component placement");
  e->add_option("--jt", endo->types, "Jordan types at the pi-points, separated by ';'");
  e->add_option("--tree-class", endo->tree_class, "Tree class of a component through an endo-trivial module");
  e->add_option("--f", endo->f_value, "Value of the additive function at the vertex");
  e->callback([&g, endo] { run_endo(g, *endo); });

  auto benson = std::make_shared<BensonArgs>();
  auto* b = cmd->add_subcommand("benson", "Constant Jordan type constraint for large p");
  b->add_option("--jt", benson->jt, "Constant Jordan type")->required();
  b->add_flag("--cx2", benson->cx2, "Has an abelian unipotent subgroup of complexity 2");
  b->callback([&g, benson] { run_benson(g, *benson); });

  auto sl2 = std::make_shared<Sl2Args>();
  auto* s = cmd->add_subcommand("sl2", "Jordan types along SL(2)_1 components");
  s->add_option("--family", sl2->family, "sl2-1 or sl2-1-tr")->check(CLI::IsMember({"sl2-1", "sl2-1-tr"}));
  s->add_option("--pi-dim", sl2->pi_dim, "0 or 1")->check(CLI::Range(0, 1));
  s->add_option("--index", sl2->index, "Block i or simple index s");
  s->add_option("--size", sl2->size, "Quasi-length or dimension");
  s->callback([&g, sl2] { run_sl2(g, *sl2); });
}

}  // namespace cli
