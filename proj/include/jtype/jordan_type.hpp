#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "jtype/errors.hpp"

namespace jtype {

// Multiplicities a_1..a_p of the Jordan blocks [1]..[p] of a nilpotent
// operator with t^p = 0.  mult()[i-1] is a_i.  The bound p is usually the
// characteristic; restricted types carry a smaller bound (see restrict()).
class JordanType {
 public:
  explicit JordanType(int p);
  JordanType(int p, std::vector<Int> mult);

  static JordanType block(int p, int size, Int count = 1);
  static JordanType parse(std::string_view text, int p);
  static JordanType from_json(std::string_view json);

  int p() const noexcept { return p_; }
  const std::vector<Int>& mult() const noexcept { return mult_; }
  // a_i for 1 <= i <= p.
  Int at(int size) const;
  bool empty() const noexcept;

  // Same blocks over a different bound; throws if a block exceeds new_p.
  JordanType rebound(int new_p) const;

  // "[5]+2[3]+[1]", empty string for the zero module.
  std::string str() const;
  std::string to_json() const;

  JordanType operator+(const JordanType& other) const;
  JordanType scaled(Int factor) const;
  bool operator==(const JordanType& other) const = default;
  // Arbitrary total order so types can live in std::set.
  bool operator<(const JordanType& other) const;

 private:
  int p_;
  std::vector<Int> mult_;
};

enum class Dominance { Less, Equal, Greater, Incomparable };
enum class DominanceConvention { PartitionOrder, CfpOrder };

const char* to_string(Dominance d);

Int dimension(const JordanType& jt);
// dim ker t^m, 1 <= m <= p.
Int ker_dim(const JordanType& jt, int m);
// dim im t^m, 0 <= m <= p.
Int image_dim(const JordanType& jt, int m);
// sum_{i<m} i a_i + m sum_{i=m}^{p-1} a_i, 1 <= m <= p-1.
Int psi(const JordanType& jt, int m);
JordanType stable_part(const JordanType& jt);
// [i] -> [p-i]; projective blocks vanish.
JordanType syzygy(const JordanType& jt);

// Jordan type of the i-dimensional cyclic module over K[t^j].  The result's
// bound is ceil(p/j), the nilpotency order of t^j.
JordanType restrict(int i, int j, int p);
JordanType restrict_type(const JordanType& jt, int j);

// Greater means a dominates b.
Dominance dominance_compare(const JordanType& a, const JordanType& b,
                            DominanceConvention convention = DominanceConvention::PartitionOrder);

// Componentwise comparison of two equally long integer vectors.
Dominance compare_vectors(const std::vector<Int>& a, const std::vector<Int>& b);

}  // namespace jtype
