#pragma once

#include <random>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "jtype/jordan_type.hpp"

namespace jtype {

// Dense matrix over F_p, entries kept in 0..p-1.
using ModMatrix = std::vector<std::vector<int>>;

bool is_prime(int n);
ModMatrix mod_multiply(const ModMatrix& x, const ModMatrix& y, int p);
int mod_rank(ModMatrix m, int p);
// Gauss-Jordan inverse; empty matrix when singular.
ModMatrix mod_inverse(const ModMatrix& m, int p);
ModMatrix random_invertible(int dim, int p, std::mt19937_64& rng);

// A nilpotent operator N on F_p^dim with N^p = 0.
class NilpotentModel {
 public:
  NilpotentModel(int p, ModMatrix matrix);

  static NilpotentModel zero(int p, int dim);
  static NilpotentModel jordan_block(int p, int size);
  static NilpotentModel from_json(std::string_view json);

  int p() const noexcept { return p_; }
  int dim() const noexcept { return static_cast<int>(matrix_.size()); }
  const ModMatrix& matrix() const noexcept { return matrix_; }

  NilpotentModel power(int k) const;
  // P N P^{-1}; throws if P is singular.
  NilpotentModel conjugated(const ModMatrix& change_of_basis) const;
  std::string to_json() const;

 private:
  int p_;
  ModMatrix matrix_;
};

// r_0 = dim, r_m = rank N^m for m = 1..p+1.
std::vector<int> rank_sequence(const NilpotentModel& model);
// a_i = r_{i-1} - 2 r_i + r_{i+1}.
JordanType jordan_type_of(const NilpotentModel& model);

// Basis y^n z^m, 0 <= n, m <= p-1; x sends (n, m) to n (n-1, m+1).
NilpotentModel heisenberg_model(int p);
// (zero action, e_0 -> e_{p-1}).
std::pair<NilpotentModel, NilpotentModel> abelian_rank2_models(int p);
// (u_0 acting as zero, u_0 + u_1^2 acting as the squared shift).
std::pair<NilpotentModel, NilpotentModel> ga2_model(int p);

struct Sl2Models {
  NilpotentModel e;
  NilpotentModel f;
};

// Baby Verma module of highest weight i-1 in the basis f^k v_0.
Sl2Models sl2s_models(int p, int i);
// Simple module of dimension n in the same kind of basis.
Sl2Models sl2_simple_models(int p, int n);

struct SweepResult {
  std::vector<JordanType> by_power;  // index j-1, stable types over the bound p
  std::set<JordanType> distinct;
};

// Stable types of t^j for j = 1..p, computed from the block formula.
SweepResult pi_point_sweep(const JordanType& base);
// Same sweep taken from ranks of powers of the operator.
SweepResult pi_point_sweep(const NilpotentModel& base);

}  // namespace jtype
