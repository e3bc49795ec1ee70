#include "jtype/classifier.hpp"

#include <sstream>

namespace jtype {

namespace {

void require_odd_char(int p) {
  if (p < 3) throw ValidationError("p = " + std::to_string(p) + " not supported; p >= 3 required");
}

Int exact_quotient(Int numerator, int p, const std::string& what) {
  if (numerator < 0 || numerator % p != 0) {
    throw ValidationError(what + ": " + std::to_string(numerator) + " is not a nonnegative multiple of " +
                          std::to_string(p));
  }
  return numerator / p;
}

PredictedType predicted(JordanType stable, std::optional<Int> dim, const std::string& symbol) {
  PredictedType t{std::move(stable), std::nullopt, symbol};
  if (dim) {
    t.projective = exact_quotient(checked_sub(*dim, dimension(t.stable)), t.stable.p(),
                                  "projective count for " + t.stable.str());
  }
  return t;
}

JordanType blocks(int p, std::initializer_list<std::pair<int, Int>> list) {
  JordanType jt(p);
  for (auto [size, count] : list) jt = jt + JordanType::block(p, size, count);
  return jt;
}

}  // namespace

std::string PredictedType::str() const {
  if (projective) return full().str();
  std::string s = stable.str();
  if (!s.empty()) s += "+";
  return s + symbol + "[" + std::to_string(stable.p()) + "]";
}

JordanType PredictedType::full() const {
  if (!projective) throw ValidationError("projective count is symbolic");
  return stable + JordanType::block(stable.p(), stable.p(), *projective);
}

std::string set_str(const std::vector<PredictedType>& types) {
  std::string s = "{";
  for (std::size_t k = 0; k < types.size(); ++k) {
    if (k) s += ", ";
    s += types[k].str();
  }
  return s + "}";
}

std::vector<PredictedType> carlson_type_set(const CohomologyClassDescriptor& d) {
  const int p = d.p;
  require_odd_char(p);
  if (d.degree < 1) throw ValidationError("degree must be >= 1");
  if (d.dim_L && *d.dim_L < 0) throw ValidationError("negative dimension");
  const JordanType carlson = blocks(p, {{1, 1}, {p - 1, 1}});
  if (d.even()) {
    if (d.nilpotent) return {predicted(carlson, d.dim_L, "n")};
    return {predicted(JordanType(p), d.dim_L, "d/p"), predicted(carlson, d.dim_L, "n")};
  }
  std::vector<PredictedType> out;
  if (d.odd_behavior != OddBehavior::NoneVanish) {
    out.push_back(predicted(blocks(p, {{p - 1, 2}}), d.dim_L, "m"));
  }
  if (d.odd_behavior != OddBehavior::AllVanish) {
    out.push_back(predicted(blocks(p, {{p - 2, 1}}), d.dim_L, "n"));
  }
  return out;
}

const char* to_string(Verdict::Kind k) {
  switch (k) {
    case Verdict::Kind::Indecomposable: return "Indecomposable";
    case Verdict::Kind::TwoEndotrivialSummands: return "TwoEndotrivialSummands";
    case Verdict::Kind::Decomposable: return "Decomposable";
    case Verdict::Kind::Unknown: return "Unknown";
  }
  return "?";
}

Verdict carlson_indecomposability(const CohomologyClassDescriptor& d) {
  require_odd_char(d.p);
  const auto& amb = d.ambient;
  auto indecomposable = [](const char* rule, std::string citation) {
    return Verdict{Verdict::Kind::Indecomposable, rule, std::move(citation)};
  };
  if (d.even() && d.nilpotent) {
    return indecomposable("CNED1", "nilpotent class of even degree, p >= 3");
  }
  if (!d.even()) {
    if (d.odd_behavior == OddBehavior::Mixed) {
      return indecomposable("COD1.2", "odd degree with exactly two Jordan types");
    }
    const int srk = amb.srk_quotient.value_or(amb.srk);
    if (srk >= 2) {
      return indecomposable("COD3", amb.srk_quotient ? "odd degree, saturation rank of the quotient >= 2"
                                                     : "odd degree, saturation rank >= 2");
    }
    if (amb.is_finite_group) return indecomposable("COD5", "odd degree class of a finite group");
  }
  if (d.even() && !d.nilpotent) {
    if (amb.equidim && 2 * amb.variety_dim >= amb.ambient_dim + 3) {
      return indecomposable("CNN1", "equidimensional variety with 2n >= m+3");
    }
    if (amb.min_component_dim && 2 * *amb.min_component_dim >= amb.ambient_dim + 3) {
      return indecomposable("CNN1", "minimal component dimension with 2n >= m+3");
    }
  }
  return Verdict{Verdict::Kind::Unknown, "", "no rule applies"};
}

bool endo_trivial(const std::vector<JordanType>& types) {
  if (types.empty()) throw ValidationError("endo-triviality needs at least one Jordan type");
  const int p = types.front().p();
  const JordanType first = stable_part(types.front());
  for (const auto& t : types) {
    if (t.p() != p) throw ValidationError("Jordan types over different p");
    if (stable_part(t) != first) return false;
  }
  return first == JordanType::block(p, 1) || (p > 1 && first == JordanType::block(p, p - 1));
}

bool endo_trivial_on_component(const TreeClass& tc, Int f_value) {
  if (f_value < 1) throw ValidationError("f value must be >= 1");
  if (tc.kind == TreeClass::Kind::A12Tilde || tc.kind == TreeClass::Kind::AInfInf) return true;
  return f_value == 1;
}

const char* to_string(BensonCheck::Status s) {
  switch (s) {
    case BensonCheck::Status::Ok: return "ok";
    case BensonCheck::Status::OkWithCaveat: return "ok-with-caveat";
    case BensonCheck::Status::Violation: return "violation";
  }
  return "?";
}

BensonCheck benson_constraint(const JordanType& jt, bool flag) {
  const JordanType st = stable_part(jt);
  int block = 0;
  for (int i = 1; i < jt.p(); ++i) {
    if (st.at(i) == 0) continue;
    if (block != 0 || st.at(i) != 1) throw ValidationError("stable part must be a single block");
    block = i;
  }
  if (block == 0) throw ValidationError("stable part must be a single block");
  BensonCheck c;
  if (block == 1 || block == jt.p() - 1) return c;
  if (flag) {
    c.status = BensonCheck::Status::Violation;
    c.note = "constant stable block [" + std::to_string(block) +
             "] impossible with an abelian unipotent subgroup of complexity >= 2";
  } else {
    c.status = BensonCheck::Status::OkWithCaveat;
    c.note = "without the subgroup hypothesis such types occur (SL(2)_1 has [2],...,[p-2])";
  }
  return c;
}

std::vector<JordanType> sl2_family_types(Sl2Family family, int p, int pi_dim, int index, Int size) {
  require_odd_char(p);
  const JordanType proj = JordanType::block(p, p);
  if (pi_dim == 1) {
    if (index < 1 || index > p - 1) throw ValidationError("s outside 1..p-1");
    const Int count = exact_quotient(size - index, p, "dim M - s");
    return {JordanType::block(p, index) + proj.scaled(count)};
  }
  if (pi_dim != 0) throw ValidationError("support dimension must be 0 or 1");
  if (index < 1 || index > (p - 1) / 2) throw ValidationError("block index outside 1..(p-1)/2");
  Int ql = size;
  if (family == Sl2Family::SL2_1_Tr) ql = exact_quotient(size, p, "dim M");
  if (ql < 1) throw ValidationError("quasi-length must be >= 1");
  return {proj.scaled(ql),
          JordanType::block(p, index) + JordanType::block(p, p - index) + proj.scaled(ql - 1)};
}

}  // namespace jtype
