#include "jtype/component.hpp"

#include <algorithm>

namespace jtype {

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  const std::size_t n = x.size();
  const std::size_t k = y.size();
  const std::size_t m = k ? y[0].size() : 0;
  IntMatrix out(n, std::vector<Int>(m, 0));
  for (std::size_t i = 0; i < n; ++i) {
    if (x[i].size() != k) throw ValidationError("matrix shape mismatch");
    for (std::size_t l = 0; l < k; ++l) {
      if (x[i][l] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) {
        out[i][j] = checked_add(out[i][j], checked_mul(x[i][l], y[l][j]));
      }
    }
  }
  return out;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

CartanPair build_cartan_pair(int p) {
  if (p < 2) throw ValidationError("p must be >= 2");
  CartanPair c;
  c.p = p;
  c.a.assign(p, std::vector<Int>(p, 0));
  c.b.assign(p, std::vector<Int>(p, 0));
  for (int i = 0; i < p; ++i) {
    c.a[i][i] = 2;
    if (i > 0) c.a[i][i - 1] = -1;
    if (i + 1 < p) c.a[i][i + 1] = -1;
    for (int l = 0; l < p; ++l) c.b[i][l] = std::min(i, l) + 1;
  }
  c.a[p - 1][p - 1] = 1;
  const IntMatrix id = identity_matrix(p);
  if (multiply(c.a, c.b) != id || multiply(c.b, c.a) != id) {
    throw std::logic_error("A and B are not mutually inverse");
  }
  return c;
}

Int TubeProfile::value(int i, Int ql) const {
  if (i < 1 || i > p) throw ValidationError("index outside 1..p");
  return checked_add(checked_mul(slope[i - 1], ql), intercept[i - 1]);
}

NegativeMultiplicity::NegativeMultiplicity(int i, Int q, Int v)
    : ValidationError("negative multiplicity alpha_" + std::to_string(i) + "(" + std::to_string(q) +
                      ") = " + std::to_string(v)),
      index(i),
      ql(q),
      value(v) {}

namespace {

void check_multiplicities(const std::vector<Int>& n, int p) {
  if (n.size() != static_cast<std::size_t>(p - 1)) {
    throw ValidationError("expected " + std::to_string(p - 1) + " multiplicities, got " +
                          std::to_string(n.size()));
  }
  for (Int x : n) {
    if (x < 0) throw ValidationError("relative projective multiplicities must be >= 0");
  }
}

}  // namespace

TubeProfile tube_profile(const JordanType& seed, const std::vector<Int>& n, const CartanPair& cartan,
                         bool include_p) {
  const int p = seed.p();
  if (cartan.p != p) throw ValidationError("Cartan pair built for a different p");
  check_multiplicities(n, p);
  TubeProfile prof;
  prof.p = p;
  prof.include_p = include_p;
  prof.slope.assign(p, 0);
  prof.intercept.assign(p, 0);
  const int rows = include_p ? p : p - 1;
  for (int i = 1; i <= rows; ++i) {
    Int t = 0;
    for (int j = 1; j <= p - 1; ++j) t = checked_add(t, checked_mul(cartan.a_at(i, j), n[j - 1]));
    prof.intercept[i - 1] = t;
    prof.slope[i - 1] = checked_sub(seed.at(i), t);
  }
  return prof;
}

std::optional<NegativeWitness> find_negative(const TubeProfile& prof) {
  std::optional<NegativeWitness> best;
  for (int i = 1; i <= prof.p; ++i) {
    const Int s = prof.slope[i - 1];
    const Int t = prof.intercept[i - 1];
    Int ql = prof.start;
    if (checked_add(checked_mul(s, ql), t) >= 0) {
      if (s >= 0) continue;
      // Smallest ql with s*ql + t < 0, i.e. ql > t/(-s).
      ql = t / (-s) + 1;
    }
    NegativeWitness w{i, ql, checked_add(checked_mul(s, ql), t)};
    if (!best || w.ql < best->ql) best = w;
  }
  return best;
}

JordanType evaluate_profile(const TubeProfile& prof, Int ql) {
  if (ql < prof.start) throw ValidationError("quasi-length below the profile's range");
  if (auto w = find_negative(prof)) throw NegativeMultiplicity(w->index, w->ql, w->value);
  std::vector<Int> mult(prof.p, 0);
  const int rows = prof.include_p ? prof.p : prof.p - 1;
  for (int i = 1; i <= rows; ++i) mult[i - 1] = prof.value(i, ql);
  return JordanType(prof.p, std::move(mult));
}

JordanType tube_forward(const JordanType& seed, const std::vector<Int>& n, const CartanPair& cartan,
                        Int ql, bool include_p) {
  return evaluate_profile(tube_profile(seed, n, cartan, include_p), ql);
}

TubeProfile profile_from_types(const JordanType& first, const JordanType& next, int start,
                               bool include_p) {
  if (first.p() != next.p()) throw ValidationError("types over different p");
  TubeProfile prof;
  prof.p = first.p();
  prof.start = start;
  prof.include_p = include_p;
  prof.slope.assign(prof.p, 0);
  prof.intercept.assign(prof.p, 0);
  const int rows = include_p ? prof.p : prof.p - 1;
  for (int i = 1; i <= rows; ++i) {
    const Int s = checked_sub(next.at(i), first.at(i));
    prof.slope[i - 1] = s;
    prof.intercept[i - 1] = checked_sub(first.at(i), checked_mul(s, start));
  }
  return prof;
}

JordanType tube_central(int p, int j, Int m, Int n, Int ql) {
  if (p < 2) throw ValidationError("p must be >= 2");
  if (j < 1 || j > p - 1) throw ValidationError("j outside 1..p-1");
  if (n < 1) throw ValidationError("n must be positive");
  if (m < 2 * n) throw ValidationError("m < 2n: no such central component");
  if (ql < 1) throw ValidationError("quasi-length must be >= 1");
  std::vector<Int> mult(p, 0);
  mult[j - 1] = checked_add(checked_mul(m - 2 * n, ql), 2 * n);
  const Int side = checked_mul(n, ql - 1);
  if (j - 1 >= 1) mult[j - 2] = side;
  if (j + 1 <= p - 1) mult[j] = side;
  return JordanType(p, std::move(mult));
}

MultiplicitySolution solve_multiplicities(const TubeProfile& prof, const CartanPair& cartan) {
  const int p = prof.p;
  if (cartan.p != p) throw ValidationError("Cartan pair built for a different p");
  MultiplicitySolution sol;
  std::vector<Int> t = prof.intercept;
  if (!prof.include_p) {
    sol.warnings.push_back("intercept t_p not asserted; padded with 0");
    t[p - 1] = 0;
  }
  std::vector<Int> n(p, 0);
  for (int i = 1; i <= p; ++i) {
    Int acc = 0;
    for (int l = 1; l <= p; ++l) acc = checked_add(acc, checked_mul(cartan.b_at(i, l), t[l - 1]));
    n[i - 1] = acc;
  }
  if (n[p - 1] != 0) {
    throw ValidationError("n_p = " + std::to_string(n[p - 1]) +
                          " but a non-projective quasi-simple forces n_p = 0");
  }
  for (int i = 1; i < p; ++i) {
    if (n[i - 1] < 0) {
      throw ValidationError("n_" + std::to_string(i) + " = " + std::to_string(n[i - 1]) +
                            " is negative: profile not realizable");
    }
  }
  n.pop_back();
  sol.locally_split = std::all_of(n.begin(), n.end(), [](Int x) { return x == 0; });
  sol.n = std::move(n);
  return sol;
}

SplitProfile::SplitProfile(int p_, std::vector<Int> d_, TreeClass tc)
    : p(p_), d(std::move(d_)), tree_class(tc) {
  if (p < 2) throw ValidationError("p must be >= 2");
  if (d.size() != static_cast<std::size_t>(p - 1)) throw ValidationError("d-vector needs p-1 entries");
  d_p = 0;
  for (int i = 1; i < p; ++i) {
    if (d[i - 1] < 0) throw ValidationError("d-vector entries must be >= 0");
    d_p = checked_add(d_p, checked_mul(i, d[i - 1]));
  }
}

JordanType split_propagate(const SplitProfile& prof, Int f_value, std::optional<Int> total_dim) {
  if (f_value < 1) throw ValidationError("f value must be >= 1");
  std::vector<Int> mult(prof.p, 0);
  for (int i = 1; i < prof.p; ++i) mult[i - 1] = checked_mul(prof.d[i - 1], f_value);
  if (total_dim) {
    const Int rest = checked_sub(*total_dim, checked_mul(prof.d_p, f_value));
    if (rest < 0 || rest % prof.p != 0) {
      throw ValidationError("dimension " + std::to_string(*total_dim) +
                            " leaves a non-integral projective count");
    }
    mult[prof.p - 1] = rest / prof.p;
  }
  return JordanType(prof.p, std::move(mult));
}

SplitProfile seed_to_split_profile(const JordanType& seed, Int f_seed, TreeClass tc) {
  if (f_seed < 1) throw ValidationError("f value must be >= 1");
  std::vector<Int> d(seed.p() - 1);
  for (int i = 1; i < seed.p(); ++i) {
    if (seed.at(i) % f_seed != 0) {
      throw ValidationError("a_" + std::to_string(i) + " = " + std::to_string(seed.at(i)) +
                            " is not divisible by f = " + std::to_string(f_seed));
    }
    d[i - 1] = seed.at(i) / f_seed;
  }
  return SplitProfile(seed.p(), std::move(d), tc);
}

std::size_t jordan_type_count(const std::vector<SplitProfile>& profiles) {
  std::set<std::vector<Int>> distinct;
  for (const auto& pr : profiles) distinct.insert(pr.d);
  return distinct.size();
}

std::set<int> support_indices(const SplitProfile& prof) {
  std::set<int> out;
  for (int i = 1; i < prof.p; ++i) {
    if (prof.d[i - 1] != 0) out.insert(i);
  }
  return out;
}

Dominance dominance_on_component(const SplitProfile& a, const SplitProfile& b) {
  if (a.p != b.p) throw ValidationError("profiles over different p");
  const int p = a.p;
  auto cleared = [p](const SplitProfile& x) {
    std::vector<Int> v(p);
    for (int j = 1; j <= p; ++j) {
      Int s = 0;
      for (int i = j; i <= p - 1; ++i) s = checked_add(s, checked_mul(i - j, x.d[i - 1]));
      v[j - 1] = checked_sub(checked_mul(p, s), checked_mul(p - j, x.d_p));
    }
    return v;
  };
  return compare_vectors(cleared(a), cleared(b));
}

Int top_multiplicity(const JordanType& simple, int j) { return ker_dim(simple, j); }

const char* to_string(ObstructionVerdict::Kind k) {
  return k == ObstructionVerdict::Kind::NotRelativelyProjective ? "NotRelativelyProjective"
                                                                 : "Inconclusive";
}

ObstructionVerdict obstruction_check(const JordanType& seed, bool trigonalizable) {
  ObstructionVerdict v;
  v.trigonalizable = trigonalizable;
  bool small = true;
  for (int j = 1; j < seed.p(); ++j) {
    if (seed.at(j) > 1) small = false;
  }
  if (small && trigonalizable) {
    v.kind = ObstructionVerdict::Kind::NotRelativelyProjective;
    return v;
  }
  v.kind = ObstructionVerdict::Kind::Inconclusive;
  if (!trigonalizable) {
    v.caveat =
        "criterion needs a trigonalizable group; SL(2)_1 baby Verma modules satisfy the "
        "multiplicity bound yet are relatively projective";
  } else {
    v.caveat = "some stable multiplicity exceeds 1";
  }
  return v;
}

}  // namespace jtype
