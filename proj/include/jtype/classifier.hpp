#pragma once

#include <optional>
#include <string>
#include <vector>

#include "jtype/jordan_type.hpp"
#include "jtype/quiver.hpp"

namespace jtype {

// Numeric shadows of the ambient group scheme.  Nothing here is computed;
// every field is a trusted input.
struct AmbientData {
  int pi_dim = 0;
  bool equidim = false;
  int variety_dim = 0;  // n_V
  int ambient_dim = 0;  // m_V
  int srk = 0;
  std::optional<int> srk_quotient;        // srk of G modulo its largest linearly reductive normal subgroup
  std::optional<int> min_component_dim;   // n_G
  bool is_finite_group = false;
  bool trigonalizable = false;
};

// Which pi-points kill an odd-degree class.
enum class OddBehavior { Mixed, AllVanish, NoneVanish };

struct CohomologyClassDescriptor {
  int p = 3;
  int degree = 2;
  bool nilpotent = false;
  std::optional<Int> dim_L;  // for non-nilpotent even classes: dimension of one summand
  bool support_full = false;
  OddBehavior odd_behavior = OddBehavior::Mixed;
  AmbientData ambient;

  bool even() const noexcept { return degree % 2 == 0; }
};

// A Jordan type whose projective count may be unknown (kept as a symbol).
struct PredictedType {
  JordanType stable;
  std::optional<Int> projective;
  std::string symbol;

  std::string str() const;
  // Throws when the projective count is symbolic.
  JordanType full() const;
};

std::string set_str(const std::vector<PredictedType>& types);

std::vector<PredictedType> carlson_type_set(const CohomologyClassDescriptor& desc);

struct Verdict {
  enum class Kind { Indecomposable, TwoEndotrivialSummands, Decomposable, Unknown };
  Kind kind = Kind::Unknown;
  std::string rule;  // machine tag, empty for Unknown
  std::string citation;
};

const char* to_string(Verdict::Kind k);

Verdict carlson_indecomposability(const CohomologyClassDescriptor& desc);

bool endo_trivial(const std::vector<JordanType>& types);

// Endo-triviality of a vertex on a component through an endo-trivial module.
bool endo_trivial_on_component(const TreeClass& tc, Int f_value);

struct BensonCheck {
  enum class Status { Ok, OkWithCaveat, Violation };
  Status status = Status::Ok;
  std::string note;
};

const char* to_string(BensonCheck::Status s);

BensonCheck benson_constraint(const JordanType& constant_type, bool has_abelian_unipotent_cx2);

enum class Sl2Family { SL2_1, SL2_1_Tr };

// pi_dim = 1: index is s (1..p-1), size is dim M.
// pi_dim = 0: index is the block i (1..(p-1)/2); size is ql for SL2_1 and
// dim M for SL2_1_Tr.
std::vector<JordanType> sl2_family_types(Sl2Family family, int p, int pi_dim, int index, Int size);

}  // namespace jtype
