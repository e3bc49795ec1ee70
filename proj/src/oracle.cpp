#include "jtype/oracle.hpp"

#include <algorithm>
#include <tuple>

#include "json.hpp"

namespace jtype {

namespace {

int reduce(Int v, int p) {
  Int r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int mod_pow(Int base, int exp, int p) {
  Int result = 1;
  base = reduce(base, p);
  while (exp > 0) {
    if (exp & 1) result = result * base % p;
    base = base * base % p;
    exp >>= 1;
  }
  return static_cast<int>(result);
}

// Fermat inverse; p is prime.
int mod_inv(int a, int p) { return mod_pow(a, p - 2, p); }

bool is_zero(const ModMatrix& m) {
  for (const auto& row : m) {
    for (int v : row) {
      if (v != 0) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

ModMatrix mod_multiply(const ModMatrix& x, const ModMatrix& y, int p) {
  const std::size_t n = x.size();
  const std::size_t k = y.size();
  const std::size_t m = k ? y[0].size() : 0;
  ModMatrix out(n, std::vector<int>(m, 0));
  std::vector<Int> acc(m);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    for (std::size_t l = 0; l < k; ++l) {
      const Int a = x[i][l];
      if (a == 0) continue;
      for (std::size_t j = 0; j < m; ++j) acc[j] += a * y[l][j];
    }
    for (std::size_t j = 0; j < m; ++j) out[i][j] = static_cast<int>(acc[j] % p);
  }
  return out;
}

int mod_rank(ModMatrix m, int p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const Int inv = mod_inv(m[rank][c], p);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (m[r][c] == 0) continue;
      const Int factor = m[r][c] * inv % p;
      for (std::size_t cc = c; cc < cols; ++cc) {
        m[r][cc] = reduce(m[r][cc] - factor * m[rank][cc], p);
      }
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

ModMatrix mod_inverse(const ModMatrix& in, int p) {
  const std::size_t n = in.size();
  ModMatrix m = in;
  ModMatrix inv(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return {};
    std::swap(m[piv], m[c]);
    std::swap(inv[piv], inv[c]);
    const Int s = mod_inv(m[c][c], p);
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] = static_cast<int>(m[c][j] * s % p);
      inv[c][j] = static_cast<int>(inv[c][j] * s % p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Int factor = m[r][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[r][j] = reduce(m[r][j] - factor * m[c][j], p);
        inv[r][j] = reduce(inv[r][j] - factor * inv[c][j], p);
      }
    }
  }
  return inv;
}

ModMatrix random_invertible(int dim, int p, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(0, p - 1);
  while (true) {
    ModMatrix m(dim, std::vector<int>(dim));
    for (auto& row : m) {
      for (auto& v : row) v = entry(rng);
    }
    if (mod_rank(m, p) == dim) return m;
  }
}

NilpotentModel::NilpotentModel(int p, ModMatrix matrix) : p_(p), matrix_(std::move(matrix)) {
  if (!is_prime(p)) throw ValidationError("field size " + std::to_string(p) + " is not prime");
  for (auto& row : matrix_) {
    if (row.size() != matrix_.size()) throw ValidationError("model matrix is not square");
    for (auto& v : row) v = reduce(v, p);
  }
  ModMatrix acc = matrix_;
  for (int k = 1; k < p && !is_zero(acc); ++k) acc = mod_multiply(acc, matrix_, p);
  if (!is_zero(acc)) throw ValidationError("model operator does not satisfy N^p = 0");
}

NilpotentModel NilpotentModel::zero(int p, int dim) {
  if (dim < 0) throw ValidationError("negative dimension");
  return NilpotentModel(p, ModMatrix(dim, std::vector<int>(dim, 0)));
}

NilpotentModel NilpotentModel::jordan_block(int p, int size) {
  if (size < 1 || size > p) throw ValidationError("Jordan block size outside 1..p");
  ModMatrix m(size, std::vector<int>(size, 0));
  for (int k = 0; k + 1 < size; ++k) m[k + 1][k] = 1;
  return NilpotentModel(p, std::move(m));
}

NilpotentModel NilpotentModel::power(int k) const {
  if (k < 1) throw ValidationError("powers of a nilpotent model start at 1");
  ModMatrix acc = matrix_;
  for (int s = 1; s < k; ++s) acc = mod_multiply(acc, matrix_, p_);
  return NilpotentModel(p_, std::move(acc));
}

NilpotentModel NilpotentModel::conjugated(const ModMatrix& pm) const {
  ModMatrix inv = mod_inverse(pm, p_);
  if (inv.empty() && dim() > 0) throw ValidationError("change of basis is singular");
  return NilpotentModel(p_, mod_multiply(mod_multiply(pm, matrix_, p_), inv, p_));
}

std::string NilpotentModel::to_json() const {
  nlohmann::json j;
  j["p"] = p_;
  j["dim"] = dim();
  auto entries = nlohmann::json::array();
  for (int r = 0; r < dim(); ++r) {
    for (int c = 0; c < dim(); ++c) {
      if (matrix_[r][c] != 0) entries.push_back({r, c, matrix_[r][c]});
    }
  }
  j["entries"] = entries;
  return j.dump();
}

NilpotentModel NilpotentModel::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  int p = 0, dim = 0;
  std::vector<std::tuple<int, int, Int>> entries;
  try {
    p = j.at("p").get<int>();
    dim = j.at("dim").get<int>();
    for (const auto& e : j.at("entries")) {
      if (!e.is_array() || e.size() != 3) throw ParseError("entries must be [row, col, value] triples");
      entries.emplace_back(e[0].get<int>(), e[1].get<int>(), e[2].get<Int>());
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("model JSON: ") + e.what());
  }
  if (dim < 0) throw ValidationError("negative dimension");
  if (p < 2) throw ValidationError("field size must be a prime");
  ModMatrix m(dim, std::vector<int>(dim, 0));
  for (auto [r, c, v] : entries) {
    if (r < 0 || c < 0 || r >= dim || c >= dim) throw ValidationError("entry index out of range");
    m[r][c] = reduce(v, p);
  }
  return NilpotentModel(p, std::move(m));
}

std::vector<int> rank_sequence(const NilpotentModel& model) {
  const int p = model.p();
  std::vector<int> r(p + 2, 0);
  r[0] = model.dim();
  ModMatrix acc = model.matrix();
  for (int k = 1; k <= p + 1; ++k) {
    r[k] = mod_rank(acc, p);
    if (r[k] == 0) break;
    acc = mod_multiply(acc, model.matrix(), p);
  }
  return r;
}

JordanType jordan_type_of(const NilpotentModel& model) {
  const int p = model.p();
  auto r = rank_sequence(model);
  std::vector<Int> mult(p);
  for (int i = 1; i <= p; ++i) mult[i - 1] = r[i - 1] - 2 * r[i] + r[i + 1];
  return JordanType(p, std::move(mult));
}

NilpotentModel heisenberg_model(int p) {
  if (p < 3) throw ValidationError("Heisenberg model needs p >= 3");
  ModMatrix m(p * p, std::vector<int>(p * p, 0));
  auto idx = [p](int n, int k) { return n * p + k; };
  for (int n = 1; n < p; ++n) {
    for (int k = 0; k + 1 < p; ++k) m[idx(n - 1, k + 1)][idx(n, k)] = n % p;
  }
  return NilpotentModel(p, std::move(m));
}

std::pair<NilpotentModel, NilpotentModel> abelian_rank2_models(int p) {
  if (p < 3) throw ValidationError("rank-2 abelian models need p >= 3");
  ModMatrix beta(p, std::vector<int>(p, 0));
  beta[p - 1][0] = 1;
  return {NilpotentModel::zero(p, p), NilpotentModel(p, std::move(beta))};
}

std::pair<NilpotentModel, NilpotentModel> ga2_model(int p) {
  if (p % 2 == 0) throw ValidationError("G_a(2) model needs odd p");
  NilpotentModel shift = NilpotentModel::jordan_block(p, p);
  return {NilpotentModel::zero(p, p), shift.power(2)};
}

namespace {

Sl2Models weight_basis_models(int p, int dim, int highest) {
  ModMatrix e(dim, std::vector<int>(dim, 0));
  ModMatrix f(dim, std::vector<int>(dim, 0));
  for (int k = 0; k + 1 < dim; ++k) f[k + 1][k] = 1;
  for (int k = 1; k < dim; ++k) e[k - 1][k] = reduce(static_cast<Int>(k) * (highest - k + 1), p);
  return {NilpotentModel(p, std::move(e)), NilpotentModel(p, std::move(f))};
}

}  // namespace

Sl2Models sl2s_models(int p, int i) {
  if (i < 1 || i > p - 1) throw ValidationError("highest-weight index outside 1..p-1");
  return weight_basis_models(p, p, i - 1);
}

Sl2Models sl2_simple_models(int p, int n) {
  if (n < 1 || n > p) throw ValidationError("simple module dimension outside 1..p");
  return weight_basis_models(p, n, n - 1);
}

SweepResult pi_point_sweep(const JordanType& base) {
  SweepResult out;
  for (int j = 1; j <= base.p(); ++j) {
    out.by_power.push_back(stable_part(restrict_type(base, j).rebound(base.p())));
  }
  out.distinct.insert(out.by_power.begin(), out.by_power.end());
  return out;
}

SweepResult pi_point_sweep(const NilpotentModel& base) {
  SweepResult out;
  for (int j = 1; j <= base.p(); ++j) out.by_power.push_back(stable_part(jordan_type_of(base.power(j))));
  out.distinct.insert(out.by_power.begin(), out.by_power.end());
  return out;
}

}  // namespace jtype
