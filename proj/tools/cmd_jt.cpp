#include "cli_common.hpp"

namespace cli {

namespace {

struct JtArgs {
  std::string op;
  std::string jt;
  std::string a, b;
  int m = 0;
  int i = 0;
  int j = 0;
  std::string convention = "partition";
};

void emit_number(const Globals& g, const std::string& op, Int value) {
  if (g.format == Format::Json) {
    std::cout << json{{"op", op}, {"result", value}}.dump() << "\n";
  } else {
    std::cout << value << "\n";
  }
}

void emit_type(const Globals& g, const JordanType& t) {
  if (g.format == Format::Json) {
    std::cout << t.to_json() << "\n";
  } else {
    std::cout << t.str() << "\n";
  }
}

int need(int value, const char* flag) {
  if (value == 0) throw jtype::ValidationError(std::string(flag) + " is required");
  return value;
}

void run(const Globals& g, const JtArgs& args) {
  const int p = require_p(g);
  auto input = [&] { return parse_type(args.jt, p); };
  const std::string& op = args.op;
  if (op == "dim") {
    emit_number(g, op, jtype::dimension(input()));
  } else if (op == "ker") {
    emit_number(g, op, jtype::ker_dim(input(), need(args.m, "--m")));
  } else if (op == "image") {
    emit_number(g, op, jtype::image_dim(input(), args.m));
  } else if (op == "psi") {
    emit_number(g, op, jtype::psi(input(), need(args.m, "--m")));
  } else if (op == "stable") {
    emit_type(g, jtype::stable_part(input()));
  } else if (op == "syzygy") {
    emit_type(g, jtype::syzygy(input()));
  } else if (op == "restrict") {
    const int j = need(args.j, "--j");
    if (args.i != 0) {
      emit_type(g, jtype::restrict(args.i, j, p).rebound(p));
    } else {
      emit_type(g, jtype::restrict_type(input(), j).rebound(p));
    }
  } else if (op == "dominance") {
    auto conv = args.convention == "cfp" ? jtype::DominanceConvention::CfpOrder
                                         : jtype::DominanceConvention::PartitionOrder;
    const char* verdict = jtype::to_string(jtype::dominance_compare(parse_type(args.a, p), parse_type(args.b, p), conv));
    if (g.format == Format::Json) {
      std::cout << json{{"op", op}, {"result", verdict}}.dump() << "\n";
    } else {
      std::cout << verdict << "\n";
    }
  } else {
    throw jtype::ValidationError("unknown jt operation '" + op + "'");
  }
}

}  // namespace

void add_jt_command(CLI::App& app, Globals& g) {
  auto args = std::make_shared<JtArgs>();
  auto* cmd = app.add_subcommand("jt", "Jordan type arithmetic");
  cmd->add_option("op", args->op, "dim | ker | image | psi | stable | syzygy | restrict | dominance")
      ->required()
      ->check(CLI::IsMember({"dim", "ker", "image", "psi", "stable", "syzygy", "restrict", "dominance"}));
  cmd->add_option("--jt", args->jt, "Jordan type, e.g. \"2[3]+[1]\" or its JSON form")->expected(0, 1);
  cmd->add_option("--a", args->a, "First type for dominance");
  cmd->add_option("--b", args->b, "Second type for dominance");
  cmd->add_option("--m", args->m, "Power of t")->check(CLI::NonNegativeNumber);
  cmd->add_option("--i", args->i, "Block size for restrict")->check(CLI::PositiveNumber);
  cmd->add_option("--j", args->j, "Exponent j of t^j for restrict")->check(CLI::PositiveNumber);
  cmd->add_option("--convention", args->convention, "Dominance convention")
      ->check(CLI::IsMember({"partition", "cfp"}));
  cmd->callback([&g, args] { run(g, *args); });
}

}  // namespace cli
