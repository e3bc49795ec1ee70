// Runs the twelve acceptance checks; one PASS/FAIL line each.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "jtype/jtype.hpp"
#include "oracles.hpp"

using namespace jtype;

namespace {

struct Check {
  bool ok = true;
  std::string detail;
  int cases = 0;

  void expect(bool cond, const std::string& what) {
    ++cases;
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

template <typename T>
std::string show(const T& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t k = 0; k < v.size(); ++k) os << (k ? "," : "") << v[k];
  return os.str() + ")";
}

JordanType block_sum(int p, std::initializer_list<std::pair<int, Int>> parts) {
  JordanType t(p);
  for (auto [size, count] : parts) t = t + JordanType::block(p, size, count);
  return t;
}

JordanType heisenberg_formula(int p) {
  JordanType t = JordanType::block(p, p);
  for (int l = 1; l < p; ++l) t = t + JordanType::block(p, l, 2);
  return t;
}

// t = A n for the tridiagonal pair, written out row by row.
std::vector<Int> tridiagonal_apply(const std::vector<Int>& n, int p) {
  auto at = [&](int i) -> Int { return i >= 1 && i <= p - 1 ? n[i - 1] : 0; };
  std::vector<Int> t(p);
  for (int i = 1; i < p; ++i) t[i - 1] = 2 * at(i) - at(i - 1) - at(i + 1);
  t[p - 1] = -at(p - 1);
  return t;
}

void criterion1(Check& c) {
  for (int p : {2, 3, 5, 7, 11, 13, 31, 101}) {
    CartanPair pair = build_cartan_pair(p);
    auto id = identity_matrix(p);
    c.expect(oracle::multiply(pair.a, pair.b) == id, "A*B != I at p=" + std::to_string(p));
    c.expect(oracle::multiply(pair.b, pair.a) == id, "B*A != I at p=" + std::to_string(p));
  }
}

void criterion2(Check& c) {
  for (int p : {3, 5, 7, 11, 13}) {
    for (int i = 1; i <= p; ++i) {
      NilpotentModel block = NilpotentModel::jordan_block(p, i);
      for (int j = 1; j <= p; ++j) {
        JordanType formula = restrict(i, j, p).rebound(p);
        JordanType model = jordan_type_of(block.power(j));
        c.expect(formula == model, "p=" + std::to_string(p) + " i=" + std::to_string(i) +
                                       " j=" + std::to_string(j) + ": " + formula.str() + " vs " + model.str());
      }
    }
  }
}

void criterion3(Check& c) {
  for (int p : {3, 5, 7}) {
    JordanType model = jordan_type_of(heisenberg_model(p));
    c.expect(model == heisenberg_formula(p), "Heisenberg type at p=" + std::to_string(p) + ": " + model.str());
    CartanPair pair = build_cartan_pair(p);
    std::vector<Int> n(p - 1, 0);
    n[0] = 1;
    for (Int ql = 1; ql <= 10; ++ql) {
      JordanType t = tube_forward(model, n, pair, ql, true);
      bool rows = t.at(1) == 2 && t.at(2) == 3 * ql - 1 && t.at(p) == ql;
      for (int i = 3; i < p; ++i) rows = rows && t.at(i) == 2 * ql;
      c.expect(rows, "tube rows at p=" + std::to_string(p) + " ql=" + std::to_string(ql) + ": " + t.str());
    }
  }
}

void criterion4(Check& c) {
  for (int p : {3, 5, 7}) {
    auto [alpha, beta] = abelian_rank2_models(p);
    c.expect(jordan_type_of(alpha) == JordanType::block(p, 1, p), "alpha model at p=" + std::to_string(p));
    c.expect(jordan_type_of(beta) == block_sum(p, {{1, p - 2}, {2, 1}}), "beta model at p=" + std::to_string(p));
  }
}

void criterion5(Check& c) {
  for (int p : {3, 5, 7, 11}) {
    JordanType model = jordan_type_of(ga2_model(p).second);
    JordanType expect = block_sum(p, {{(p - 1) / 2, 1}, {(p + 1) / 2, 1}});
    c.expect(model == expect, "ga2 at p=" + std::to_string(p) + ": " + model.str());
    c.expect(model == restrict(p, 2, p).rebound(p), "ga2 vs restrict at p=" + std::to_string(p));
  }
}

void criterion6(Check& c) {
  JordanType a(3, {1, 0, 2});
  JordanType b(3, {0, 2, 1});
  c.expect(dominance_compare(a, b, DominanceConvention::PartitionOrder) == Dominance::Greater, "PartitionOrder");
  c.expect(dominance_compare(a, b, DominanceConvention::CfpOrder) == Dominance::Incomparable, "CfpOrder");
}

void criterion7(Check& c) {
  for (int p : {5, 7}) {
    for (int n = 1; n < p; ++n) {
      auto size = pi_point_sweep(JordanType::block(p, n)).distinct.size();
      c.expect(size == static_cast<std::size_t>(n),
               "sweep of [" + std::to_string(n) + "] at p=" + std::to_string(p) + " gave " + std::to_string(size));
    }
  }
}

void criterion8(Check& c) {
  const std::pair<const char*, Int> expect[] = {{"A~12", 1}, {"A_inf_inf", 1}, {"D_inf", 2}, {"D~4", 2},
                                                {"D~5", 2},  {"D~6", 2},       {"E~6", 3},   {"E~7", 4},
                                                {"E~8", 6}};
  for (auto [name, size] : expect) {
    MinimalAdditive m = minimal_additive_function(TreeClass::parse(name));
    c.expect(m.image_size && *m.image_size == size, std::string("image size of ") + name);
  }
}

void criterion9(Check& c) {
  for (int p : {3, 5}) {
    CartanPair pair = build_cartan_pair(p);
    std::vector<Int> seed(p, 0);
    std::vector<Int> n(p - 1, 0);
    // odometer over seeds 0..3 and n 0..2
    auto advance = [](std::vector<Int>& v, Int top) {
      for (auto& x : v) {
        if (++x <= top) return true;
        x = 0;
      }
      return false;
    };
    do {
      JordanType s(p, seed);
      std::fill(n.begin(), n.end(), 0);
      do {
        auto t = tridiagonal_apply(n, p);
        bool expect_ok = true;
        for (int i = 0; i < p; ++i) expect_ok = expect_ok && seed[i] - t[i] >= 0;
        try {
          JordanType at1 = tube_forward(s, n, pair, 1, true);
          JordanType at2 = tube_forward(s, n, pair, 2, true);
          c.expect(expect_ok, "accepted a profile with a negative slope: seed " + s.str() + " n " + show(n));
          MultiplicitySolution sol = solve_multiplicities(profile_from_types(at1, at2, 1, true), pair);
          c.expect(sol.n == n, "seed " + s.str() + " n " + show(n) + " solved as " + show(sol.n));
        } catch (const NegativeMultiplicity& e) {
          const Int direct = (seed[e.index - 1] - t[e.index - 1]) * e.ql + t[e.index - 1];
          c.expect(!expect_ok, "rejected a valid profile: seed " + s.str() + " n " + show(n));
          c.expect(direct == e.value && direct < 0,
                   "witness alpha_" + std::to_string(e.index) + "(" + std::to_string(e.ql) + ") is not negative");
        }
      } while (advance(n, 2));
    } while (advance(seed, 3));
  }
}

void criterion10(Check& c) {
  for (int p : {5, 7}) {
    CartanPair pair = build_cartan_pair(p);
    for (int a = 0; a <= p - 2; ++a) {
      TubeProfile prof;
      prof.p = p;
      prof.include_p = true;
      prof.slope.assign(p, 0);
      prof.slope[p - 1] = 1;
      prof.intercept.assign(p, 0);
      prof.intercept[a] += 1;
      prof.intercept[p - a - 2] += 1;
      prof.intercept[p - 1] -= 1;
      MultiplicitySolution sol = solve_multiplicities(prof, pair);
      std::vector<Int> direct(p - 1, 0), closed(p - 1, 0);
      for (int i = 1; i < p; ++i) {
        // direct n_i = sum_l min(i, l) t_l
        for (int l = 1; l <= p; ++l) direct[i - 1] += std::min(i, l) * prof.intercept[l - 1];
        closed[i - 1] = std::min({i, a + 1, p - i});
      }
      const std::string at = "p=" + std::to_string(p) + " a=" + std::to_string(a);
      c.expect(sol.n == direct, at + ": solver " + show(sol.n) + " vs B*t " + show(direct));
      c.expect(std::all_of(sol.n.begin(), sol.n.end(), [](Int x) { return x >= 0; }), at + ": negative entry");
      c.expect(sol.n == closed, at + ": B*t = " + show(direct) + " but min(i, a+1, p-i) = " + show(closed) +
                                    " (t is symmetric under a -> p-2-a)");
    }
  }
}

void criterion11(Check& c) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> rank_dist(1, 4), depth_dist(4, 8);
  std::uniform_int_distribution<Int> start(0, 4), drop(0, 2);
  for (int trial = 0; trial < 500; ++trial) {
    const int rank = rank_dist(rng), depth = depth_dist(rng);
    std::vector<Int> row(depth + 1, 0);
    if (rng() % 6 != 0) {
      Int inc = start(rng);
      for (int q = 1; q <= depth; ++q) {
        row[q] = std::max<Int>(0, row[q - 1] + inc);
        inc -= drop(rng);
      }
    }
    bool concave = true;
    for (int q = 1; q < depth; ++q) concave = concave && 2 * row[q] >= row[q - 1] + row[q + 1];
    if (!concave) {
      --trial;
      continue;
    }
    QuiverWindow w = QuiverWindow::tube(rank, depth);
    auto f = VertexFunction::tabulate(w, [&](const WindowVertex& v) { return row[v.ql]; });
    PositivityReport r = check_positivity(w, f);
    c.expect(r.applicable && r.holds, "positivity trial " + std::to_string(trial));
  }
  const int primes[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const int p = primes[rng() % 6];
    JordanType t(p, oracle::random_mult(rng, p, 4));
    c.expect(psi(t, p - 1) == dimension(stable_part(t)), "psi_{p-1} of " + t.str());
    for (int m = 1; m < p; ++m) c.expect(ker_dim(t, m) == psi(t, m) + m * t.at(p), "ker identity of " + t.str());
  }
  for (int depth = 6; depth <= 8; ++depth) {
    QuiverWindow za = QuiverWindow::a_infinity(0, depth, depth);
    auto ql = classify_function(za, VertexFunction::tabulate(za, [](const WindowVertex& v) { return Int{v.ql}; }));
    c.expect(ql.is_additive && ql.eventual_level == 1, "ql additive at depth " + std::to_string(depth));
    QuiverWindow tube = QuiverWindow::tube(1, depth);
    auto k = classify_function(tube, VertexFunction::tabulate(tube, [](const WindowVertex&) { return Int{2}; }));
    c.expect(k.is_subadditive && k.eventual_level == 2, "constant level at depth " + std::to_string(depth));
    auto m = classify_function(tube, VertexFunction::tabulate(tube, [](const WindowVertex& v) { return Int{v.ql - 1}; }));
    c.expect(m.eventual_level == 2, "ql-1 level at depth " + std::to_string(depth));
  }
}

void criterion12(Check& c) {
  const OddBehavior behaviours[] = {OddBehavior::Mixed, OddBehavior::AllVanish, OddBehavior::NoneVanish};
  for (int p : {3, 5, 7}) {
    const JordanType carlson = block_sum(p, {{1, 1}, {p - 1, 1}});
    for (int degree = 1; degree <= 4; ++degree) {
      for (bool nilpotent : {false, true}) {
        for (OddBehavior ob : behaviours) {
          for (int srk = 0; srk <= 3; ++srk) {
            for (int quotient = -1; quotient <= 2; ++quotient) {
              for (bool finite : {false, true}) {
                for (int nv = 2; nv <= 6; nv += 2) {
                  CohomologyClassDescriptor d;
                  d.p = p;
                  d.degree = degree;
                  d.nilpotent = nilpotent;
                  d.odd_behavior = ob;
                  d.ambient.srk = srk;
                  if (quotient >= 0) d.ambient.srk_quotient = quotient;
                  d.ambient.is_finite_group = finite;
                  d.ambient.equidim = true;
                  d.ambient.variety_dim = nv;
                  d.ambient.ambient_dim = 6;
                  const bool even = degree % 2 == 0;

                  std::string rule;
                  if (even && nilpotent) rule = "CNED1";
                  else if (!even && ob == OddBehavior::Mixed) rule = "COD1.2";
                  else if (!even && (quotient >= 0 ? quotient : srk) >= 2) rule = "COD3";
                  else if (!even && finite) rule = "COD5";
                  else if (even && 2 * nv >= 6 + 3) rule = "CNN1";
                  Verdict v = carlson_indecomposability(d);
                  c.expect(v.rule == rule && (v.kind == Verdict::Kind::Indecomposable) == !rule.empty(),
                           "verdict '" + v.rule + "' expected '" + rule + "'");

                  auto set = carlson_type_set(d);
                  if (even && nilpotent) {
                    c.expect(set.size() == 1 && set[0].stable == carlson, "even nilpotent shape");
                  } else if (even) {
                    c.expect(set.size() == 2 && set[0].stable.empty() && set[1].stable == carlson,
                             "even non-nilpotent shape");
                  } else {
                    std::vector<JordanType> want;
                    if (ob != OddBehavior::NoneVanish) want.push_back(JordanType::block(p, p - 1, 2));
                    if (ob != OddBehavior::AllVanish) want.push_back(JordanType::block(p, p - 2));
                    std::vector<JordanType> got;
                    for (const auto& t : set) got.push_back(t.stable);
                    c.expect(got == want, "odd shape");
                  }
                }
              }
            }
          }
        }
      }
    }
    // projective counts with a known dimension
    for (Int k = 0; k <= 3; ++k) {
      CohomologyClassDescriptor d;
      d.p = p;
      d.degree = 2;
      d.nilpotent = true;
      d.dim_L = p + p * k;
      auto set = carlson_type_set(d);
      c.expect(set[0].full() == carlson + JordanType::block(p, p, k), "projective count");
    }
  }
  const int p = 5;
  const JordanType proj = JordanType::block(p, p);
  for (int s = 1; s <= p - 1; ++s) {
    for (Int k = 0; k <= 3; ++k) {
      auto got = sl2_family_types(Sl2Family::SL2_1, p, 1, s, s + p * k);
      c.expect(got == std::vector<JordanType>{JordanType::block(p, s) + proj.scaled(k)}, "one-dimensional support");
    }
  }
  for (int i = 1; i <= (p - 1) / 2; ++i) {
    for (Int ql = 1; ql <= 4; ++ql) {
      std::vector<JordanType> want{proj.scaled(ql), block_sum(p, {{i, 1}, {p - i, 1}}) + proj.scaled(ql - 1)};
      c.expect(sl2_family_types(Sl2Family::SL2_1, p, 0, i, ql) == want, "SL2_1 block " + std::to_string(i));
      c.expect(sl2_family_types(Sl2Family::SL2_1_Tr, p, 0, i, p * ql) == want,
               "SL2_1_Tr block " + std::to_string(i));
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  // --expect-fail N: criterion N is known to be unattainable as stated; its
  // FAIL line is still printed, but only an unexpected result changes the exit code.
  std::vector<int> expected_failures;
  for (int k = 1; k + 1 < argc; ++k) {
    if (std::string(argv[k]) == "--expect-fail") expected_failures.push_back(std::atoi(argv[++k]));
  }
  const std::pair<const char*, void (*)(Check&)> criteria[] = {
      {"Cartan pair inverse", criterion1},
      {"restriction vs Jordan block powers", criterion2},
      {"Heisenberg type and tube rows", criterion3},
      {"rank-2 abelian models", criterion4},
      {"G_a(2) model", criterion5},
      {"dominance conventions", criterion6},
      {"sweep cardinality", criterion7},
      {"minimal additive image sizes", criterion8},
      {"tube round trip", criterion9},
      {"SL(2)_1 multiplicity pattern", criterion10},
      {"property suites", criterion11},
      {"classifier conformance", criterion12},
  };
  int unexpected = 0;
  int index = 0;
  for (auto [name, run] : criteria) {
    ++index;
    Check c;
    try {
      run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail = std::string("exception: ") + e.what();
    }
    const bool known = std::find(expected_failures.begin(), expected_failures.end(), index) != expected_failures.end();
    if (c.ok) {
      std::printf("PASS %2d %s (%d checks)\n", index, name, c.cases);
      if (known) {
        ++unexpected;
        std::printf("     %2d was listed with --expect-fail but passed\n", index);
      }
    } else {
      std::printf("FAIL %2d %s: %s%s\n", index, name, c.detail.c_str(), known ? " [known]" : "");
      if (!known) ++unexpected;
    }
  }
  return unexpected == 0 ? 0 : 1;
}
