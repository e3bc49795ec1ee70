#pragma once

#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "jtype/jtype.hpp"

namespace cli {

using jtype::Int;
using jtype::JordanType;
using json = nlohmann::json;

enum class Format { Tsv, Json, Dot };

struct Globals {
  int p = 0;
  Format format = Format::Tsv;
  int jobs = 1;
};

// Field size from --p; throws when missing.
int require_p(const Globals& g);

// Inline JSON when the argument starts with '{' or '[', a file path otherwise.
json load_json(const std::string& arg);

JordanType parse_type(const std::string& text, int p);

std::string tuple_str(const std::vector<Int>& v);

void add_jt_command(CLI::App& app, Globals& g);
void add_component_command(CLI::App& app, Globals& g);
void add_oracle_command(CLI::App& app, Globals& g);
void add_quiver_command(CLI::App& app, Globals& g);
void add_classify_command(CLI::App& app, Globals& g);

}  // namespace cli
