#include <fstream>
#include <sstream>

#include "cli_common.hpp"

namespace cli {

int require_p(const Globals& g) {
  if (g.p == 0) throw jtype::ValidationError("--p is required for this command");
  return g.p;
}

json load_json(const std::string& arg) {
  std::string text = arg;
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first == std::string::npos || (arg[first] != '{' && arg[first] != '[')) {
    std::ifstream in(arg);
    if (!in) throw jtype::ValidationError("cannot open '" + arg + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw jtype::ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

JordanType parse_type(const std::string& text, int p) {
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '{') return JordanType::from_json(text);
  return JordanType::parse(text, p);
}

std::string tuple_str(const std::vector<Int>& v) {
  std::string s = "(";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + ")";
}

}  // namespace cli

int main(int argc, char** argv) {
  cli::Globals g;
  CLI::App app{"Jordan types, translation quivers and component calculus over F_p", "jtype"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--p", g.p, "Characteristic / block bound")->check(CLI::Range(2, 1000));
  std::map<std::string, cli::Format> formats{
      {"tsv", cli::Format::Tsv}, {"json", cli::Format::Json}, {"dot", cli::Format::Dot}};
  app.add_option("--format", g.format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--jobs", g.jobs, "Worker threads for fuzzing")->check(CLI::Range(1, 256));

  cli::add_jt_command(app, g);
  cli::add_component_command(app, g);
  cli::add_oracle_command(app, g);
  cli::add_quiver_command(app, g);
  cli::add_classify_command(app, g);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 3;
  } catch (const jtype::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  } catch (const jtype::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
