#include "jtype/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include <boost/rational.hpp>

namespace jtype {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

Int floor_mod(Int a, Int m) {
  Int r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

// ---------------------------------------------------------------- Quiver

void Quiver::validate() const {
  if (vertex_count < 1) throw ValidationError("quiver needs at least one vertex");
  std::set<std::pair<int, int>> seen;
  for (auto [s, t] : arrows) {
    if (s < 0 || t < 0 || s >= vertex_count || t >= vertex_count) {
      throw ValidationError("arrow endpoint out of range");
    }
    if (s == t) throw ValidationError("loop at vertex " + std::to_string(s));
    if (!seen.insert({s, t}).second) {
      throw ValidationError("duplicate arrow " + std::to_string(s) + "->" + std::to_string(t));
    }
  }
  if (!valuations.empty()) {
    if (valuations.size() != arrows.size()) throw ValidationError("valuation count mismatch");
    for (auto [a, b] : valuations) {
      if (a < 1 || b < 1) throw ValidationError("valuations must be positive");
    }
  }
  if (!truncated.empty() && truncated.size() != static_cast<std::size_t>(vertex_count)) {
    throw ValidationError("truncation flags count mismatch");
  }
  if (!labels.empty() && labels.size() != static_cast<std::size_t>(vertex_count)) {
    throw ValidationError("label count mismatch");
  }
}

Valuation Quiver::valuation(std::size_t arrow) const {
  return valuations.empty() ? Valuation{1, 1} : valuations[arrow];
}

bool Quiver::is_truncated(int v) const { return !truncated.empty() && truncated[v]; }

std::string Quiver::label(int v) const { return labels.empty() ? std::to_string(v) : labels[v]; }

Quiver a_infinity_tree(int length) {
  if (length < 1) throw ValidationError("empty quasi-length range");
  Quiver q;
  q.vertex_count = length;
  for (int i = 0; i + 1 < length; ++i) q.arrows.push_back({i, i + 1});
  q.truncated.assign(length, false);
  q.truncated.back() = true;
  return q;
}

// ---------------------------------------------------------------- windows

void QuiverWindow::add_arrow(std::size_t from, std::size_t to, Valuation v) {
  arrows_.push_back({from, to, v});
}

void QuiverWindow::finish() {
  in_.assign(vertices_.size(), {});
  out_.assign(vertices_.size(), {});
  for (std::size_t a = 0; a < arrows_.size(); ++a) {
    out_[arrows_[a].from].push_back(a);
    in_[arrows_[a].to].push_back(a);
  }
  for (std::size_t v = 0; v < vertices_.size(); ++v) {
    vertices_[v].interior = pred_complete_[v] && tau_[v].has_value();
  }
}

QuiverWindow QuiverWindow::zt(const Quiver& tree, Int n_min, Int n_max) {
  tree.validate();
  if (n_min > n_max) throw ValidationError("empty translation range");
  QuiverWindow w;
  w.kind_ = WindowKind::ZT;
  w.tree_ = tree;
  w.n_min_ = n_min;
  w.n_max_ = n_max;
  const int nv = tree.vertex_count;
  for (Int n = n_min; n <= n_max; ++n) {
    for (int s = 0; s < nv; ++s) w.vertices_.push_back({n, s, 0, false});
  }
  auto idx = [&](Int n, int s) { return static_cast<std::size_t>((n - n_min) * nv + s); };
  for (Int n = n_min; n <= n_max; ++n) {
    for (std::size_t k = 0; k < tree.arrows.size(); ++k) {
      auto [s, t] = tree.arrows[k];
      Valuation v = tree.valuation(k);
      w.add_arrow(idx(n, s), idx(n, t), v);
      if (n + 1 <= n_max) w.add_arrow(idx(n, t), idx(n + 1, s), {v.second, v.first});
    }
  }
  w.tau_.assign(w.vertices_.size(), std::nullopt);
  w.pred_complete_.assign(w.vertices_.size(), false);
  w.succ_complete_.assign(w.vertices_.size(), false);
  for (std::size_t v = 0; v < w.vertices_.size(); ++v) {
    const Int n = w.vertices_[v].n;
    const int s = w.vertices_[v].s;
    if (n > n_min) w.tau_[v] = idx(n - 1, s);
    bool has_out = false, has_in = false;
    for (auto [a, b] : tree.arrows) {
      if (a == s) has_out = true;
      if (b == s) has_in = true;
    }
    const bool trunc = tree.is_truncated(s);
    w.pred_complete_[v] = !trunc && (!has_out || n > n_min);
    w.succ_complete_[v] = !trunc && (!has_in || n < n_max);
  }
  w.finish();
  return w;
}

QuiverWindow QuiverWindow::a_infinity(Int n_min, Int n_max, int max_ql) {
  QuiverWindow w = zt(a_infinity_tree(max_ql), n_min, n_max);
  w.has_ql_ = true;
  for (auto& v : w.vertices_) v.ql = v.s + 1;
  return w;
}

QuiverWindow QuiverWindow::tube(int rank, int max_ql) {
  if (rank < 1) throw ValidationError("tube rank must be >= 1");
  if (max_ql < 1) throw ValidationError("empty quasi-length range");
  QuiverWindow w;
  w.kind_ = WindowKind::Tube;
  w.rank_ = rank;
  w.has_ql_ = true;
  w.n_min_ = 0;
  w.n_max_ = rank - 1;
  w.tree_ = a_infinity_tree(max_ql);
  for (int n = 0; n < rank; ++n) {
    for (int q = 1; q <= max_ql; ++q) w.vertices_.push_back({n, q - 1, q, false});
  }
  auto idx = [&](Int n, int q) {
    return static_cast<std::size_t>(floor_mod(n, rank) * max_ql + (q - 1));
  };
  for (int n = 0; n < rank; ++n) {
    for (int q = 1; q < max_ql; ++q) {
      w.add_arrow(idx(n, q), idx(n, q + 1), {1, 1});
      w.add_arrow(idx(n, q + 1), idx(n + 1, q), {1, 1});
    }
  }
  w.tau_.assign(w.vertices_.size(), std::nullopt);
  w.pred_complete_.assign(w.vertices_.size(), false);
  w.succ_complete_.assign(w.vertices_.size(), false);
  for (std::size_t v = 0; v < w.vertices_.size(); ++v) {
    w.tau_[v] = idx(w.vertices_[v].n - 1, w.vertices_[v].ql);
    w.pred_complete_[v] = w.vertices_[v].ql < max_ql;
    w.succ_complete_[v] = w.vertices_[v].ql < max_ql;
  }
  w.finish();
  return w;
}

std::optional<std::size_t> QuiverWindow::find(Int n, int s) const {
  if (s < 0 || s >= tree_.vertex_count) return std::nullopt;
  if (kind_ == WindowKind::Tube) {
    return static_cast<std::size_t>(floor_mod(n, rank_) * tree_.vertex_count + s);
  }
  if (n < n_min_ || n > n_max_) return std::nullopt;
  return static_cast<std::size_t>((n - n_min_) * tree_.vertex_count + s);
}

bool QuiverWindow::predecessors_complete(std::size_t v) const { return pred_complete_[v]; }
bool QuiverWindow::successors_complete(std::size_t v) const { return succ_complete_[v]; }

std::string QuiverWindow::vertex_label(std::size_t v) const {
  const WindowVertex& x = vertices_[v];
  std::ostringstream os;
  os << '(' << x.n << ',';
  if (has_ql_) {
    os << x.ql;
  } else {
    os << tree_.label(x.s);
  }
  os << ')';
  return os.str();
}

bool QuiverWindow::valuations_compatible() const {
  std::map<std::pair<std::size_t, std::size_t>, Valuation> lookup;
  for (const auto& a : arrows_) lookup[{a.from, a.to}] = a.valuation;
  for (const auto& a : arrows_) {
    auto tb = tau_[a.to];
    if (!tb) continue;
    auto it = lookup.find({*tb, a.from});
    if (it == lookup.end()) continue;
    if (it->second != Valuation{a.valuation.second, a.valuation.first}) return false;
  }
  return true;
}

// ---------------------------------------------------------------- admissibility

namespace {

std::vector<std::optional<std::size_t>> generator_action(const QuiverWindow& w,
                                                         const GroupGenerator& g) {
  std::vector<std::optional<std::size_t>> image(w.size());
  switch (g.kind) {
    case GroupGenerator::Kind::Trivial:
      break;
    case GroupGenerator::Kind::TauPower:
      for (std::size_t v = 0; v < w.size(); ++v) {
        image[v] = w.find(w.vertices()[v].n - g.power, w.vertices()[v].s);
      }
      break;
    case GroupGenerator::Kind::TreeAutomorphism: {
      if (w.kind() != WindowKind::ZT) {
        throw ValidationError("tree automorphisms act on Z[T] windows only");
      }
      const Quiver& t = w.tree();
      const auto& perm = g.permutation;
      if (perm.size() != static_cast<std::size_t>(t.vertex_count)) {
        throw ValidationError("automorphism has wrong length");
      }
      std::vector<int> sorted(perm);
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < t.vertex_count; ++i) {
        if (sorted[i] != i) throw ValidationError("automorphism is not a permutation");
      }
      std::set<std::pair<int, int>> arrows(t.arrows.begin(), t.arrows.end());
      for (auto [s, u] : t.arrows) {
        if (!arrows.count({perm[s], perm[u]})) {
          throw ValidationError("permutation does not preserve the arrows of the tree");
        }
      }
      for (std::size_t v = 0; v < w.size(); ++v) {
        image[v] = w.find(w.vertices()[v].n, perm[w.vertices()[v].s]);
      }
      break;
    }
  }
  return image;
}

}  // namespace

AdmissibilityReport check_admissible(const QuiverWindow& w, const GroupGenerator& g) {
  AdmissibilityReport report;
  auto image = generator_action(w, g);
  DisjointSets orbits(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (image[v]) orbits.unite(v, *image[v]);
  }
  auto scan = [&](std::size_t y, bool forward) {
    std::map<std::size_t, std::size_t> first_in_orbit;
    std::vector<std::size_t> members{y};
    for (std::size_t a : forward ? w.out_arrows(y) : w.in_arrows(y)) {
      members.push_back(forward ? w.arrows()[a].to : w.arrows()[a].from);
    }
    for (std::size_t m : members) {
      auto [it, fresh] = first_in_orbit.emplace(orbits.find(m), m);
      if (!fresh) {
        report.admissible = false;
        report.violation = std::make_pair(m, y);
        return false;
      }
    }
    return true;
  };
  for (std::size_t y = 0; y < w.size(); ++y) {
    if (w.successors_complete(y)) {
      ++report.tested;
      if (!scan(y, true)) return report;
    }
    if (w.predecessors_complete(y)) {
      ++report.tested;
      if (!scan(y, false)) return report;
    }
  }
  return report;
}

// ---------------------------------------------------------------- orbit graph

ValuedGraph orbit_valued_graph(const QuiverWindow& w) {
  auto adm = check_admissible(w, GroupGenerator::tau_power(1));
  if (!adm.admissible) throw ValidationError("<tau> is not admissible on this window");
  DisjointSets orbits(w.size());
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (auto t = w.tau(v)) orbits.unite(v, *t);
  }
  std::map<std::size_t, std::size_t> index;
  ValuedGraph g;
  for (std::size_t v = 0; v < w.size(); ++v) {
    auto root = orbits.find(v);
    if (index.count(root)) continue;
    index[root] = g.labels.size();
    const auto& x = w.vertices()[v];
    g.labels.push_back(w.has_quasi_length() ? "ql=" + std::to_string(x.ql) : w.tree().label(x.s));
  }
  g.bond.assign(g.size(), std::vector<Int>(g.size(), 0));
  for (const auto& a : w.arrows()) {
    auto i = index[orbits.find(a.from)];
    auto j = index[orbits.find(a.to)];
    g.bond[i][j] = std::max(g.bond[i][j], a.valuation.first);
  }
  return g;
}

std::string ValuedGraph::to_dot(const std::vector<Int>* values) const {
  std::ostringstream os;
  os << "graph valued {\n";
  for (std::size_t i = 0; i < size(); ++i) {
    os << "  n" << i << " [label=\"" << labels[i];
    if (values) os << "\\n" << (*values)[i];
    os << "\"];\n";
  }
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = i + 1; j < size(); ++j) {
      if (bond[i][j] == 0 && bond[j][i] == 0) continue;
      os << "  n" << i << " -- n" << j;
      if (bond[i][j] != 1 || bond[j][i] != 1) {
        os << " [label=\"(" << bond[i][j] << ',' << bond[j][i] << ")\"]";
      }
      os << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

// ---------------------------------------------------------------- functions

VertexFunction VertexFunction::tabulate(const QuiverWindow& w,
                                        const std::function<Int(const WindowVertex&)>& f) {
  VertexFunction out;
  out.values.reserve(w.size());
  for (const auto& v : w.vertices()) out.values.push_back(f(v));
  return out;
}

Int mesh_defect(const QuiverWindow& w, const VertexFunction& f, std::size_t y) {
  if (f.values.size() != w.size()) throw ValidationError("function not defined on the whole window");
  auto t = w.tau(y);
  if (!t || !w.predecessors_complete(y)) {
    throw ValidationError("vertex " + w.vertex_label(y) + " is not interior");
  }
  Int d = checked_add(f.values[y], f.values[*t]);
  for (std::size_t a : w.in_arrows(y)) {
    const auto& arrow = w.arrows()[a];
    d = checked_sub(d, checked_mul(f.values[arrow.from], arrow.valuation.first));
  }
  return d;
}

FunctionReport classify_function(const QuiverWindow& w, const VertexFunction& f) {
  if (f.values.size() != w.size()) throw ValidationError("function not defined on the whole window");
  for (Int v : f.values) {
    if (v < 0) throw ValidationError("vertex functions take nonnegative values");
  }
  FunctionReport r;
  r.vertex_status.assign(w.size(), -1);
  std::map<int, bool> level_equal;
  for (std::size_t y = 0; y < w.size(); ++y) {
    if (!w.vertices()[y].interior) continue;
    ++r.checked;
    Int d = mesh_defect(w, f, y);
    int status = d < 0 ? 0 : (d > 0 ? 1 : 2);
    r.vertex_status[y] = status;
    if (d < 0) {
      r.is_subadditive = false;
      if (!r.first_violation) r.first_violation = y;
    }
    if (d != 0) {
      r.is_additive = false;
      if (d > 0 && !r.first_strict) r.first_strict = y;
    }
    if (w.has_quasi_length()) {
      int q = w.vertices()[y].ql;
      auto [it, fresh] = level_equal.emplace(q, d == 0);
      if (!fresh) it->second = it->second && d == 0;
    }
  }
  if (!w.has_quasi_length()) {
    r.level_status = LevelStatus::NotApplicable;
    return r;
  }
  r.level_status = LevelStatus::Indeterminate;
  if (level_equal.empty()) return r;
  auto top = level_equal.rbegin();
  if (!top->second) return r;
  int level = top->first;
  int certified = 0;
  int expected = top->first;
  for (auto it = level_equal.rbegin(); it != level_equal.rend() && it->second; ++it) {
    if (it->first != expected) break;
    level = it->first;
    ++certified;
    --expected;
  }
  if (certified >= 2) {
    r.level_status = LevelStatus::Certified;
    r.eventual_level = level;
  }
  return r;
}

PositivityReport check_positivity(const QuiverWindow& w, const VertexFunction& f) {
  PositivityReport r;
  auto report = classify_function(w, f);
  bool invariant = true;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (auto t = w.tau(v); t && f.values[*t] != f.values[v]) invariant = false;
  }
  r.applicable = report.is_subadditive && invariant;
  if (!r.applicable) return r;
  std::vector<bool> seen(w.size(), false);
  std::queue<std::size_t> todo;
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (w.vertices()[v].interior && f.values[v] == 0) {
      seen[v] = true;
      todo.push(v);
    }
  }
  while (!todo.empty()) {
    std::size_t v = todo.front();
    todo.pop();
    if (f.values[v] != 0) {
      r.holds = false;
      r.witness = v;
      return r;
    }
    auto visit = [&](std::size_t u) {
      if (w.vertices()[u].interior && !seen[u]) {
        seen[u] = true;
        todo.push(u);
      }
    };
    for (std::size_t a : w.in_arrows(v)) visit(w.arrows()[a].from);
    for (std::size_t a : w.out_arrows(v)) visit(w.arrows()[a].to);
  }
  return r;
}

// ---------------------------------------------------------------- closed forms

Int AffineInQl::operator()(Int ql) const {
  return checked_add(checked_mul(slope, checked_sub(ql, level)), value_at_level);
}

std::string AffineInQl::str() const {
  const Int intercept = checked_sub(value_at_level, checked_mul(slope, level));
  std::ostringstream os;
  os << "f(ql) = ";
  if (slope == 0) {
    os << value_at_level;
  } else {
    if (slope != 1) os << slope << "*";
    os << "ql";
    if (intercept > 0) os << " + " << intercept;
    if (intercept < 0) os << " - " << -intercept;
  }
  os << " for ql >= " << (constant ? constant_from : level);
  return os.str();
}

AffineInQl extrapolate(int level, Int v_prev, Int v_at) {
  if (level < 1) throw ValidationError("level must be >= 1");
  if (v_prev < 0 || v_at < 0) throw ValidationError("function values must be nonnegative");
  if (level == 1) v_prev = 0;
  AffineInQl f;
  f.level = level;
  f.slope = checked_sub(v_at, v_prev);
  f.value_at_level = v_at;
  f.constant = f.slope == 0;
  f.constant_from = std::max(1, level - 1);
  return f;
}

// ---------------------------------------------------------------- tree classes

TreeClass TreeClass::parse(const std::string& raw) {
  std::string t;
  for (char c : raw) {
    if (c != '_' && c != ' ' && c != '-') t.push_back(static_cast<char>(std::tolower(c)));
  }
  auto tilde = [&](const std::string& head, std::string& rest) {
    for (const std::string& mark : {std::string("~"), std::string("tilde")}) {
      if (t.rfind(head + mark, 0) == 0) {
        rest = t.substr(head.size() + mark.size());
        return true;
      }
    }
    return false;
  };
  TreeClass tc;
  std::string rest;
  if (t == "ainf") {
    tc.kind = Kind::AInf;
  } else if (t == "ainfinf") {
    tc.kind = Kind::AInfInf;
  } else if (t == "dinf") {
    tc.kind = Kind::DInf;
  } else if (tilde("a", rest) && rest == "12") {
    tc.kind = Kind::A12Tilde;
  } else if (tilde("d", rest) && !rest.empty() &&
             std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(c); })) {
    tc.kind = Kind::DTilde;
    tc.n = std::stoi(rest);
    if (tc.n < 4) throw ValidationError("D~n needs n >= 4");
  } else if (tilde("e", rest) && (rest == "6" || rest == "7" || rest == "8")) {
    tc.kind = rest == "6" ? Kind::E6Tilde : rest == "7" ? Kind::E7Tilde : Kind::E8Tilde;
  } else if (t.size() >= 2 && (t[0] == 'a' || t[0] == 'd' || t[0] == 'e') &&
             std::all_of(t.begin() + 1, t.end(), [](char c) { return std::isdigit(c); })) {
    tc.kind = Kind::FiniteDynkin;
    tc.name = raw;
  } else {
    throw ParseError("unknown tree class '" + raw + "'");
  }
  return tc;
}

std::string TreeClass::str() const {
  switch (kind) {
    case Kind::AInf: return "A_inf";
    case Kind::AInfInf: return "A_inf_inf";
    case Kind::A12Tilde: return "A~12";
    case Kind::DInf: return "D_inf";
    case Kind::DTilde: return "D~" + std::to_string(n);
    case Kind::E6Tilde: return "E~6";
    case Kind::E7Tilde: return "E~7";
    case Kind::E8Tilde: return "E~8";
    case Kind::FiniteDynkin: return name;
  }
  return "?";
}

bool TreeClass::euclidean() const {
  return kind == Kind::A12Tilde || kind == Kind::DTilde || kind == Kind::E6Tilde ||
         kind == Kind::E7Tilde || kind == Kind::E8Tilde;
}

std::vector<Int> cartan_kernel(const std::vector<std::vector<Int>>& bond) {
  using Q = boost::rational<Int>;
  const std::size_t n = bond.size();
  // Additivity reads 2 f(j) = sum_i f(i) d(i,j): the kernel of (2I - D)^T.
  std::vector<std::vector<Q>> m(n, std::vector<Q>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[j][i] = Q((i == j ? 2 : 0) - bond[i][j]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t piv = row;
    while (piv < n && m[piv][col].numerator() == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[row]);
    Q inv = Q(1) / m[row][col];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || m[r][col].numerator() == 0) continue;
      Q factor = m[r][col];
      for (std::size_t c = 0; c < n; ++c) m[r][c] -= factor * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  if (pivot_col.size() + 1 != n) {
    throw ValidationError("Cartan kernel has dimension " + std::to_string(n - pivot_col.size()));
  }
  std::size_t free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::vector<Q> x(n, Q(0));
  x[free_col] = 1;
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = -m[r][free_col];
  Int denom_lcm = 1;
  for (const auto& q : x) denom_lcm = std::lcm(denom_lcm, q.denominator());
  std::vector<Int> v(n);
  Int g = 0;
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = (x[i] * denom_lcm).numerator();
    g = std::gcd(g, v[i]);
  }
  if (g == 0) throw ValidationError("zero kernel vector");
  if (v[0] < 0) g = -g;
  for (auto& e : v) {
    e /= g;
    if (e <= 0) throw ValidationError("Cartan kernel vector is not positive");
  }
  return v;
}

namespace {

struct GraphBuilder {
  ValuedGraph g;
  std::size_t add(const std::string& label) {
    g.labels.push_back(label);
    for (auto& row : g.bond) row.push_back(0);
    g.bond.push_back(std::vector<Int>(g.labels.size(), 0));
    return g.labels.size() - 1;
  }
  void link(std::size_t a, std::size_t b, Int d = 1) {
    g.bond[a][b] = d;
    g.bond[b][a] = d;
  }
  void chain(const std::vector<std::size_t>& nodes) {
    for (std::size_t k = 0; k + 1 < nodes.size(); ++k) link(nodes[k], nodes[k + 1]);
  }
};

std::vector<std::size_t> add_chain(GraphBuilder& b, const std::string& prefix, int count) {
  std::vector<std::size_t> nodes;
  for (int k = 0; k < count; ++k) nodes.push_back(b.add(prefix + std::to_string(k + 1)));
  b.chain(nodes);
  return nodes;
}

}  // namespace

MinimalAdditive minimal_additive_function(const TreeClass& tc, int length) {
  if (length < 3) throw ValidationError("truncation length must be >= 3");
  GraphBuilder b;
  MinimalAdditive out;
  std::vector<std::size_t> open_ends;
  switch (tc.kind) {
    case TreeClass::Kind::FiniteDynkin:
      throw ValidationError("finite Dynkin class " + tc.name + " admits only the zero additive function");
    case TreeClass::Kind::AInf: {
      auto nodes = add_chain(b, "", length);
      for (int k = 0; k < length; ++k) out.values.push_back(k + 1);
      open_ends = {nodes.back()};
      break;
    }
    case TreeClass::Kind::AInfInf: {
      auto nodes = add_chain(b, "c", length);
      out.values.assign(length, 1);
      open_ends = {nodes.front(), nodes.back()};
      break;
    }
    case TreeClass::Kind::DInf: {
      auto a = b.add("a");
      auto c = b.add("b");
      auto nodes = add_chain(b, "c", length - 2);
      b.link(a, nodes.front());
      b.link(c, nodes.front());
      out.values = {1, 1};
      for (int k = 0; k < length - 2; ++k) out.values.push_back(2);
      open_ends = {nodes.back()};
      break;
    }
    case TreeClass::Kind::A12Tilde: {
      auto x = b.add("0");
      auto y = b.add("1");
      b.link(x, y, 2);
      break;
    }
    case TreeClass::Kind::DTilde: {
      // Leaves 0,1 on the first chain node, leaves n-1,n on the last.
      const int n = tc.n;
      auto l0 = b.add("0");
      auto l1 = b.add("1");
      std::vector<std::size_t> mid;
      for (int k = 2; k <= n - 2; ++k) mid.push_back(b.add(std::to_string(k)));
      b.chain(mid);
      auto l2 = b.add(std::to_string(n - 1));
      auto l3 = b.add(std::to_string(n));
      b.link(l0, mid.front());
      b.link(l1, mid.front());
      b.link(l2, mid.back());
      b.link(l3, mid.back());
      break;
    }
    case TreeClass::Kind::E6Tilde: {
      auto centre = b.add("0");
      for (int arm = 0; arm < 3; ++arm) {
        auto inner = b.add(std::to_string(2 * arm + 1));
        auto outer = b.add(std::to_string(2 * arm + 2));
        b.link(centre, inner);
        b.link(inner, outer);
      }
      break;
    }
    case TreeClass::Kind::E7Tilde: {
      auto nodes = add_chain(b, "", 7);
      auto branch = b.add("8");
      b.link(nodes[3], branch);
      break;
    }
    case TreeClass::Kind::E8Tilde: {
      auto nodes = add_chain(b, "", 8);
      auto branch = b.add("9");
      b.link(nodes[5], branch);
      break;
    }
  }
  out.graph = std::move(b.g);
  if (tc.euclidean()) out.values = cartan_kernel(out.graph.bond);
  out.interior.assign(out.graph.size(), true);
  for (auto e : open_ends) out.interior[e] = false;
  for (std::size_t j = 0; j < out.graph.size(); ++j) {
    if (!out.interior[j]) continue;
    Int rhs = 0;
    for (std::size_t i = 0; i < out.graph.size(); ++i) rhs += out.values[i] * out.graph.bond[i][j];
    if (2 * out.values[j] != rhs) throw std::logic_error("minimal function is not additive");
  }
  if (tc.kind != TreeClass::Kind::AInf) {
    std::set<Int> image(out.values.begin(), out.values.end());
    out.image_size = static_cast<Int>(image.size());
  }
  return out;
}

std::string window_to_dot(const QuiverWindow& w, const std::vector<std::string>* annotations) {
  std::ostringstream os;
  os << "digraph window {\n  rankdir=LR;\n  node [shape=plaintext];\n";
  for (std::size_t v = 0; v < w.size(); ++v) {
    os << "  v" << v << " [label=\"" << w.vertex_label(v);
    if (annotations && !(*annotations)[v].empty()) os << "\\n" << (*annotations)[v];
    os << "\"];\n";
  }
  for (const auto& a : w.arrows()) {
    os << "  v" << a.from << " -> v" << a.to;
    if (a.valuation != Valuation{1, 1}) {
      os << " [label=\"(" << a.valuation.first << ',' << a.valuation.second << ")\"]";
    }
    os << ";\n";
  }
  for (std::size_t v = 0; v < w.size(); ++v) {
    if (auto t = w.tau(v)) {
      os << "  v" << v << " -> v" << *t << " [style=dashed, constraint=false];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace jtype
