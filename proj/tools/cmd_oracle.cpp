#include <atomic>
#include <optional>
#include <thread>

#include "cli_common.hpp"

namespace cli {

namespace {

struct OracleArgs {
  std::string name;
  int i = 0;
  int n = 0;
  int size = 0;
  int base_block = 0;
  std::string model;
  int fuzz = 0;
  std::uint64_t seed = 1;
};

struct Line {
  std::string label;  // empty for single-model commands
  JordanType got;
  std::optional<JordanType> expected;
};

std::string show(const JordanType& t) { return t.empty() ? "0" : t.str(); }

JordanType blocks(int p, std::initializer_list<std::pair<int, Int>> list) {
  JordanType t(p);
  for (auto [size, count] : list) t = t + JordanType::block(p, size, count);
  return t;
}

// Conjugates by random invertible matrices and checks the type is unchanged.
int fuzz(const jtype::NilpotentModel& model, int trials, int jobs, std::uint64_t seed) {
  const JordanType expect = jtype::jordan_type_of(model);
  std::atomic<int> passed{0};
  auto worker = [&](int first, int step) {
    for (int k = first; k < trials; k += step) {
      std::mt19937_64 rng(seed + static_cast<std::uint64_t>(k));
      auto change = jtype::random_invertible(model.dim(), model.p(), rng);
      if (jtype::jordan_type_of(model.conjugated(change)) == expect) ++passed;
    }
  };
  if (jobs <= 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w, jobs);
    for (auto& t : pool) t.join();
  }
  return passed.load();
}

void print_lines(const Globals& g, const std::string& name, const std::vector<Line>& lines) {
  if (g.format == Format::Json) {
    json out = json::array();
    for (const auto& l : lines) {
      json row{{"model", name}, {"type", json::parse(l.got.to_json())}};
      if (!l.label.empty()) row["action"] = l.label;
      if (l.expected) {
        row["expected"] = json::parse(l.expected->to_json());
        row["pass"] = *l.expected == l.got;
      }
      out.push_back(row);
    }
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& l : lines) {
    if (!l.label.empty()) std::cout << l.label << " ";
    std::cout << show(l.got);
    if (l.expected) std::cout << (*l.expected == l.got ? " PASS" : " FAIL expected " + show(*l.expected));
    std::cout << "\n";
  }
}

void run_sweep(const Globals& g, const OracleArgs& args, int p) {
  jtype::SweepResult result;
  std::optional<jtype::SweepResult> formula;
  if (!args.model.empty()) {
    result = jtype::pi_point_sweep(jtype::NilpotentModel::from_json(load_json(args.model).dump()));
  } else {
    if (args.base_block < 1) throw jtype::ValidationError("sweep needs --base-block or --model");
    result = jtype::pi_point_sweep(jtype::NilpotentModel::jordan_block(p, args.base_block));
    formula = jtype::pi_point_sweep(JordanType::block(p, args.base_block));
  }
  const bool agree = !formula || formula->by_power == result.by_power;
  if (g.format == Format::Json) {
    json types = json::array();
    for (const auto& t : result.distinct) types.push_back(json::parse(t.to_json()));
    json out{{"distinct", types}, {"count", result.distinct.size()}};
    if (formula) out["formula_agrees"] = agree;
    std::cout << out.dump() << "\n";
    return;
  }
  for (std::size_t j = 0; j < result.by_power.size(); ++j) {
    std::cout << "t^" << j + 1 << "\t" << show(result.by_power[j]) << "\n";
  }
  std::cout << result.distinct.size() << " distinct types";
  if (formula) std::cout << (agree ? " PASS" : " FAIL formula disagrees");
  std::cout << "\n";
}

void run(const Globals& g, const OracleArgs& args) {
  const std::string& name = args.name;
  if (name == "model") {
    if (args.model.empty()) throw jtype::ValidationError("model needs --model");
    auto model = jtype::NilpotentModel::from_json(load_json(args.model).dump());
    print_lines(g, name, {{"", jtype::jordan_type_of(model), std::nullopt}});
    if (args.fuzz > 0) {
      int ok = fuzz(model, args.fuzz, g.jobs, args.seed);
      std::cout << "fuzz " << ok << "/" << args.fuzz << (ok == args.fuzz ? " PASS" : " FAIL") << "\n";
    }
    return;
  }
  const int p = require_p(g);
  if (name == "sweep") return run_sweep(g, args, p);

  std::vector<Line> lines;
  std::vector<jtype::NilpotentModel> models;
  if (name == "heisenberg") {
    JordanType expect = JordanType::block(p, p);
    for (int l = 1; l < p; ++l) expect = expect + JordanType::block(p, l, 2);
    models.push_back(jtype::heisenberg_model(p));
    lines.push_back({"", jtype::jordan_type_of(models.back()), expect});
  } else if (name == "abelian") {
    auto [alpha, beta] = jtype::abelian_rank2_models(p);
    lines.push_back({"alpha", jtype::jordan_type_of(alpha), JordanType::block(p, 1, p)});
    lines.push_back({"beta", jtype::jordan_type_of(beta), blocks(p, {{1, p - 2}, {2, 1}})});
    models = {alpha, beta};
  } else if (name == "ga2") {
    auto pair = jtype::ga2_model(p);
    lines.push_back({"", jtype::jordan_type_of(pair.second), jtype::restrict(p, 2, p).rebound(p)});
    models.push_back(pair.second);
  } else if (name == "sl2s") {
    auto m = jtype::sl2s_models(p, args.i);
    lines.push_back({"e", jtype::jordan_type_of(m.e), blocks(p, {{args.i, 1}, {p - args.i, 1}})});
    lines.push_back({"f", jtype::jordan_type_of(m.f), JordanType::block(p, p)});
    models = {m.e, m.f};
  } else if (name == "sl2-simple") {
    auto m = jtype::sl2_simple_models(p, args.n);
    lines.push_back({"e", jtype::jordan_type_of(m.e), JordanType::block(p, args.n)});
    lines.push_back({"f", jtype::jordan_type_of(m.f), JordanType::block(p, args.n)});
    models = {m.e, m.f};
  } else if (name == "block") {
    models.push_back(jtype::NilpotentModel::jordan_block(p, args.size));
    lines.push_back({"", jtype::jordan_type_of(models.back()), JordanType::block(p, args.size)});
  } else {
    throw jtype::ValidationError("unknown model '" + name + "'");
  }
  print_lines(g, name, lines);
  if (args.fuzz > 0) {
    for (const auto& m : models) {
      int ok = fuzz(m, args.fuzz, g.jobs, args.seed);
      std::cout << "fuzz " << ok << "/" << args.fuzz << (ok == args.fuzz ? " PASS" : " FAIL") << "\n";
    }
  }
}

}  // namespace

void add_oracle_command(CLI::App& app, Globals& g) {
  auto args = std::make_shared<OracleArgs>();
  auto* cmd = app.add_subcommand("oracle", "Build example models and extract Jordan types from ranks");
  cmd->add_option("name", args->name, "heisenberg | abelian | ga2 | sl2s | sl2-simple | block | sweep | model")
      ->required()
      ->check(CLI::IsMember({"heisenberg", "abelian", "ga2", "sl2s", "sl2-simple", "block", "sweep", "model"}));
  cmd->add_option("--i", args->i, "Highest weight index for sl2s (1..p-1)");
  cmd->add_option("--n", args->n, "Dimension of the sl2 simple module");
  cmd->add_option("--size", args->size, "Jordan block size for 'block'");
  cmd->add_option("--base-block", args->base_block, "Single Jordan block swept over t^j");
  cmd->add_option("--model", args->model, "Operator JSON {p, dim, entries} (file or inline)");
  cmd->add_option("--fuzz", args->fuzz, "Random conjugation trials")->check(CLI::NonNegativeNumber);
  cmd->add_option("--seed", args->seed, "Seed for --fuzz");
  cmd->callback([&g, args] { run(g, *args); });
}

}  // namespace cli
