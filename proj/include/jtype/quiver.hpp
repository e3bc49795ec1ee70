#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jtype/errors.hpp"

namespace jtype {

using Valuation = std::pair<Int, Int>;

// Finite quiver without loops or multiple arrows.  Vertices marked truncated
// stand in for an infinite continuation (e.g. the open end of A_inf); window
// vertices built over them are never interior.
struct Quiver {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arrows;
  std::vector<Valuation> valuations;  // parallel to arrows; empty means all (1,1)
  std::vector<bool> truncated;        // empty means none
  std::vector<std::string> labels;    // empty means "0", "1", ...

  void validate() const;
  Valuation valuation(std::size_t arrow) const;
  bool is_truncated(int v) const;
  std::string label(int v) const;
};

// 0 -> 1 -> ... -> (length-1); the last vertex is truncated.
Quiver a_infinity_tree(int length);

enum class WindowKind { ZT, Tube };

struct WindowVertex {
  Int n = 0;   // translation index (mod rank for tubes)
  int s = 0;   // tree vertex; for A_inf-shaped windows s = ql - 1
  int ql = 0;  // quasi-length, 0 when undefined
  bool interior = false;
};

struct WindowArrow {
  std::size_t from = 0;
  std::size_t to = 0;
  Valuation valuation{1, 1};
};

class QuiverWindow {
 public:
  // Z[T] restricted to translation indices n_min..n_max.
  static QuiverWindow zt(const Quiver& tree, Int n_min, Int n_max);
  // Z[A_inf] with n in n_min..n_max and quasi-length up to max_ql.
  static QuiverWindow a_infinity(Int n_min, Int n_max, int max_ql);
  // Z[A_inf]/<tau^rank>, quasi-length up to max_ql.
  static QuiverWindow tube(int rank, int max_ql);

  WindowKind kind() const noexcept { return kind_; }
  int rank() const noexcept { return rank_; }
  bool has_quasi_length() const noexcept { return has_ql_; }
  Int n_min() const noexcept { return n_min_; }
  Int n_max() const noexcept { return n_max_; }
  const Quiver& tree() const noexcept { return tree_; }

  std::size_t size() const noexcept { return vertices_.size(); }
  const std::vector<WindowVertex>& vertices() const noexcept { return vertices_; }
  const std::vector<WindowArrow>& arrows() const noexcept { return arrows_; }
  const std::vector<std::size_t>& in_arrows(std::size_t v) const { return in_[v]; }
  const std::vector<std::size_t>& out_arrows(std::size_t v) const { return out_[v]; }
  std::optional<std::size_t> tau(std::size_t v) const { return tau_[v]; }
  std::optional<std::size_t> find(Int n, int s) const;
  // Predecessor set of v is complete inside the window.
  bool predecessors_complete(std::size_t v) const;
  bool successors_complete(std::size_t v) const;
  std::string vertex_label(std::size_t v) const;

  // nu(tau(b), a) = swap(nu(a, b)) on every arrow whose partner is present.
  bool valuations_compatible() const;

 private:
  QuiverWindow() = default;
  void add_arrow(std::size_t from, std::size_t to, Valuation v);
  void finish();

  WindowKind kind_ = WindowKind::ZT;
  int rank_ = 0;
  bool has_ql_ = false;
  Int n_min_ = 0;
  Int n_max_ = 0;
  Quiver tree_;
  std::vector<WindowVertex> vertices_;
  std::vector<WindowArrow> arrows_;
  std::vector<std::vector<std::size_t>> in_, out_;
  std::vector<std::optional<std::size_t>> tau_;
  std::vector<bool> pred_complete_, succ_complete_;
};

// Generator of a cyclic group acting on a window.
struct GroupGenerator {
  enum class Kind { Trivial, TauPower, TreeAutomorphism };
  Kind kind = Kind::Trivial;
  int power = 1;                 // for TauPower
  std::vector<int> permutation;  // for TreeAutomorphism, acts on tree vertices

  static GroupGenerator trivial() { return {}; }
  static GroupGenerator tau_power(int k) { return {Kind::TauPower, k, {}}; }
  static GroupGenerator automorphism(std::vector<int> perm) {
    return {Kind::TreeAutomorphism, 1, std::move(perm)};
  }
};

struct AdmissibilityReport {
  bool admissible = true;
  // Orbit representative x and vertex y with two orbit points in {y} u y+ (or y-).
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  std::size_t tested = 0;
};

AdmissibilityReport check_admissible(const QuiverWindow& window, const GroupGenerator& g);

struct ValuedGraph {
  std::vector<std::string> labels;
  std::vector<std::vector<Int>> bond;  // bond[i][j] = d(i, j)

  std::size_t size() const noexcept { return labels.size(); }
  std::string to_dot(const std::vector<Int>* values = nullptr) const;
};

// Vertex set = tau-orbits, d([x],[y]) = first valuation component of an arrow
// x -> y.  Throws ValidationError if <tau> is not admissible on the window.
ValuedGraph orbit_valued_graph(const QuiverWindow& window);

struct VertexFunction {
  std::vector<Int> values;

  static VertexFunction tabulate(const QuiverWindow& window,
                                 const std::function<Int(const WindowVertex&)>& f);
};

enum class LevelStatus { Certified, Indeterminate, NotApplicable };

struct FunctionReport {
  bool is_subadditive = true;
  bool is_additive = true;
  LevelStatus level_status = LevelStatus::NotApplicable;
  std::optional<int> eventual_level;
  std::optional<std::size_t> first_violation;  // subadditivity fails here
  std::optional<std::size_t> first_strict;     // inequality is strict here
  std::size_t checked = 0;
  std::vector<int> vertex_status;  // per vertex: -1 not checked, 0 fails, 1 strict, 2 equality
};

// f(y) + f(tau y) - sum_{x in y-} f(x) pr1(nu(x,y)); only meaningful on interior y.
Int mesh_defect(const QuiverWindow& window, const VertexFunction& f, std::size_t y);

// Checks run on interior vertices only.  The eventual level is certified
// when at least two interior quasi-length levels at or above it exist.
FunctionReport classify_function(const QuiverWindow& window, const VertexFunction& f);

struct PositivityReport {
  bool applicable = false;  // f certified subadditive and tau-invariant
  bool holds = true;
  std::optional<std::size_t> witness;  // interior vertex with f > 0 linked to a zero
};

// A tau-invariant subadditive function vanishing somewhere vanishes on every
// interior vertex connected to that zero through interior vertices.
PositivityReport check_positivity(const QuiverWindow& window, const VertexFunction& f);

struct AffineInQl {
  Int slope = 0;
  Int value_at_level = 0;
  int level = 1;
  // Zero slope: constant from quasi-length level-1 on (from 1 when level = 1).
  bool constant = false;
  int constant_from = 1;

  Int operator()(Int ql) const;
  std::string str() const;
};

AffineInQl extrapolate(int level, Int v_prev, Int v_at);

struct TreeClass {
  enum class Kind { AInf, AInfInf, A12Tilde, DInf, DTilde, E6Tilde, E7Tilde, E8Tilde, FiniteDynkin };
  Kind kind = Kind::AInf;
  int n = 0;         // for DTilde
  std::string name;  // for FiniteDynkin

  static TreeClass parse(const std::string& text);
  std::string str() const;
  bool euclidean() const;
};

struct MinimalAdditive {
  ValuedGraph graph;
  std::vector<Int> values;
  std::vector<bool> interior;    // nodes whose full neighbourhood is present
  std::optional<Int> image_size; // empty for unbounded functions (A_inf)
};

// Truncated classes (A_inf, A_inf_inf, D_inf) are rendered on `length` nodes.
MinimalAdditive minimal_additive_function(const TreeClass& tc, int length = 8);

// Primitive positive integer kernel vector of a generalized Cartan matrix
// 2I - D; throws if the kernel is not one-dimensional and positive.
std::vector<Int> cartan_kernel(const std::vector<std::vector<Int>>& bond);

std::string window_to_dot(const QuiverWindow& window,
                          const std::vector<std::string>* annotations = nullptr);

}  // namespace jtype
