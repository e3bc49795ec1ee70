#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jtype/jordan_type.hpp"
#include "jtype/quiver.hpp"

namespace jtype {

using IntMatrix = std::vector<std::vector<Int>>;

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y);
IntMatrix identity_matrix(std::size_t n);

// A: tridiagonal 2/-1 with A[p][p] = 1.  B[i][l] = min(i, l).  A = B^{-1}.
struct CartanPair {
  int p = 0;
  IntMatrix a;
  IntMatrix b;

  // 1-based accessors.
  Int a_at(int i, int j) const { return a[i - 1][j - 1]; }
  Int b_at(int i, int j) const { return b[i - 1][j - 1]; }
};

// Throws if the products fail to be the identity.
CartanPair build_cartan_pair(int p);

// alpha_i(ql) = slope[i] * ql + intercept[i] for ql >= start, i = 1..p.
struct TubeProfile {
  int p = 0;
  std::vector<Int> slope;
  std::vector<Int> intercept;
  int start = 1;
  bool include_p = false;

  Int value(int i, Int ql) const;
};

// Raised when some alpha_i(ql) would be negative.
class NegativeMultiplicity : public ValidationError {
 public:
  NegativeMultiplicity(int index, Int ql, Int value);
  int index;
  Int ql;
  Int value;
};

struct NegativeWitness {
  int index = 0;
  Int ql = 0;
  Int value = 0;
};

// Slopes and intercepts from a quasi-simple seed and multiplicities n_1..n_{p-1}.
TubeProfile tube_profile(const JordanType& seed, const std::vector<Int>& n, const CartanPair& cartan,
                         bool include_p);

// First (i, ql) with a negative value, if any, over all ql >= profile.start.
std::optional<NegativeWitness> find_negative(const TubeProfile& profile);

// Jordan type at quasi-length ql.  a_p is 0 when include_p is off.
// Throws NegativeMultiplicity when the profile goes negative at any ql.
JordanType tube_forward(const JordanType& seed, const std::vector<Int>& n, const CartanPair& cartan,
                        Int ql, bool include_p);
JordanType evaluate_profile(const TubeProfile& profile, Int ql);

// Recovers the profile from the types at two consecutive quasi-lengths.
TubeProfile profile_from_types(const JordanType& at_start, const JordanType& at_next, int start,
                               bool include_p);

// (m-2n)ql + 2n at j, n(ql-1) at j+-1, 0 elsewhere; index p left at 0.
JordanType tube_central(int p, int j, Int m, Int n, Int ql);

struct MultiplicitySolution {
  std::vector<Int> n;  // n_1..n_{p-1}
  bool locally_split = false;
  std::vector<std::string> warnings;
};

// n = B t with n_p = 0 enforced; throws ValidationError on negative entries.
MultiplicitySolution solve_multiplicities(const TubeProfile& profile, const CartanPair& cartan);

struct SplitProfile {
  int p = 0;
  std::vector<Int> d;  // d_1..d_{p-1}
  Int d_p = 0;         // sum i d_i, the slope of the stable dimension
  TreeClass tree_class;

  SplitProfile() = default;
  SplitProfile(int p, std::vector<Int> d, TreeClass tc = {});
  bool operator==(const SplitProfile& other) const { return p == other.p && d == other.d; }
};

// a_i = d_i f for i < p.  With a total dimension, a_p = (dim - d_p f)/p.
JordanType split_propagate(const SplitProfile& profile, Int f_value,
                           std::optional<Int> total_dim = std::nullopt);

SplitProfile seed_to_split_profile(const JordanType& seed, Int f_seed, TreeClass tc = {});

std::size_t jordan_type_count(const std::vector<SplitProfile>& profiles);

std::set<int> support_indices(const SplitProfile& profile);

// Vertex-independent dominance with the p-denominators cleared.
Dominance dominance_on_component(const SplitProfile& a, const SplitProfile& b);

Int top_multiplicity(const JordanType& simple, int j);

struct ObstructionVerdict {
  enum class Kind { NotRelativelyProjective, Inconclusive };
  Kind kind = Kind::Inconclusive;
  bool trigonalizable = false;
  std::string caveat;
};

const char* to_string(ObstructionVerdict::Kind k);

ObstructionVerdict obstruction_check(const JordanType& seed, bool trigonalizable);

}  // namespace jtype
