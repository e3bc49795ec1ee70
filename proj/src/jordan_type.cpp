#include "jtype/jordan_type.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "json.hpp"

namespace jtype {

namespace {

void require_bound(int p) {
  if (p < 1) throw ValidationError("block bound p must be >= 1, got " + std::to_string(p));
}

void require_range(int value, int lo, int hi, const char* name) {
  if (value < lo || value > hi) {
    throw ValidationError(std::string(name) + "=" + std::to_string(value) + " outside " +
                          std::to_string(lo) + ".." + std::to_string(hi));
  }
}

void require_same_bound(const JordanType& a, const JordanType& b) {
  if (a.p() != b.p()) {
    throw ValidationError("Jordan types over different bounds: p=" + std::to_string(a.p()) +
                          " vs p=" + std::to_string(b.p()));
  }
}

// Reads an unsigned decimal; returns false if no digit is present.
bool read_number(std::string_view s, std::size_t& pos, Int& out) {
  std::size_t start = pos;
  Int v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = checked_add(checked_mul(v, 10), s[pos] - '0');
    ++pos;
  }
  out = v;
  return pos > start;
}

void skip_ws(std::string_view s, std::size_t& pos) {
  while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
}

}  // namespace

JordanType::JordanType(int p) : p_(p), mult_() {
  require_bound(p);
  mult_.assign(static_cast<std::size_t>(p), 0);
}

JordanType::JordanType(int p, std::vector<Int> mult) : p_(p), mult_(std::move(mult)) {
  require_bound(p);
  if (mult_.size() != static_cast<std::size_t>(p)) {
    throw ValidationError("multiplicity vector has length " + std::to_string(mult_.size()) +
                          ", expected " + std::to_string(p));
  }
  for (Int a : mult_) {
    if (a < 0) throw ValidationError("negative block multiplicity");
  }
}

JordanType JordanType::block(int p, int size, Int count) {
  require_range(size, 1, p, "block size");
  JordanType jt(p);
  if (count < 0) throw ValidationError("negative block multiplicity");
  jt.mult_[size - 1] = count;
  return jt;
}

Int JordanType::at(int size) const {
  require_range(size, 1, p_, "block size");
  return mult_[size - 1];
}

bool JordanType::empty() const noexcept {
  return std::all_of(mult_.begin(), mult_.end(), [](Int a) { return a == 0; });
}

JordanType JordanType::rebound(int new_p) const {
  JordanType out(new_p);
  for (int i = 1; i <= p_; ++i) {
    if (mult_[i - 1] == 0) continue;
    if (i > new_p) {
      throw ValidationError("block [" + std::to_string(i) + "] exceeds bound " +
                            std::to_string(new_p));
    }
    out.mult_[i - 1] = mult_[i - 1];
  }
  return out;
}

std::string JordanType::str() const {
  std::ostringstream os;
  bool first = true;
  for (int i = p_; i >= 1; --i) {
    Int a = mult_[i - 1];
    if (a == 0) continue;
    if (!first) os << '+';
    first = false;
    if (a != 1) os << a;
    os << '[' << i << ']';
  }
  return os.str();
}

std::string JordanType::to_json() const {
  nlohmann::json j;
  j["p"] = p_;
  j["mult"] = mult_;
  return j.dump();
}

JordanType JordanType::from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object() || !j.contains("p") || !j.contains("mult")) {
    throw ParseError("Jordan type JSON needs keys \"p\" and \"mult\"");
  }
  try {
    return JordanType(j.at("p").get<int>(), j.at("mult").get<std::vector<Int>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("Jordan type JSON: ") + e.what());
  }
}

JordanType JordanType::parse(std::string_view s, int p) {
  JordanType jt(p);
  std::size_t pos = 0;
  skip_ws(s, pos);
  if (pos == s.size()) return jt;
  while (true) {
    skip_ws(s, pos);
    Int count = 1;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      read_number(s, pos, count);
    }
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != '[') throw ParseError("expected '['", pos);
    ++pos;
    skip_ws(s, pos);
    Int size = 0;
    std::size_t size_pos = pos;
    if (!read_number(s, pos, size)) throw ParseError("expected block size", pos);
    skip_ws(s, pos);
    if (pos >= s.size() || s[pos] != ']') throw ParseError("expected ']'", pos);
    ++pos;
    if (size < 1 || size > p) {
      throw ParseError("block size " + std::to_string(size) + " outside 1.." + std::to_string(p),
                       size_pos);
    }
    jt.mult_[size - 1] = checked_add(jt.mult_[size - 1], count);
    skip_ws(s, pos);
    if (pos == s.size()) break;
    if (s[pos] != '+') throw ParseError("expected '+'", pos);
    ++pos;
  }
  return jt;
}

JordanType JordanType::operator+(const JordanType& other) const {
  require_same_bound(*this, other);
  JordanType out(p_);
  for (int i = 0; i < p_; ++i) out.mult_[i] = checked_add(mult_[i], other.mult_[i]);
  return out;
}

JordanType JordanType::scaled(Int factor) const {
  if (factor < 0) throw ValidationError("negative scale factor");
  JordanType out(p_);
  for (int i = 0; i < p_; ++i) out.mult_[i] = checked_mul(mult_[i], factor);
  return out;
}

bool JordanType::operator<(const JordanType& other) const {
  if (p_ != other.p_) return p_ < other.p_;
  return mult_ < other.mult_;
}

const char* to_string(Dominance d) {
  switch (d) {
    case Dominance::Less: return "Less";
    case Dominance::Equal: return "Equal";
    case Dominance::Greater: return "Greater";
    case Dominance::Incomparable: return "Incomparable";
  }
  return "?";
}

Int dimension(const JordanType& jt) {
  Int d = 0;
  for (int i = 1; i <= jt.p(); ++i) d = checked_add(d, checked_mul(i, jt.at(i)));
  return d;
}

Int ker_dim(const JordanType& jt, int m) {
  require_range(m, 1, jt.p(), "m");
  Int d = 0;
  for (int i = 1; i <= jt.p(); ++i) d = checked_add(d, checked_mul(std::min(i, m), jt.at(i)));
  return d;
}

Int image_dim(const JordanType& jt, int m) {
  require_range(m, 0, jt.p(), "m");
  Int d = 0;
  for (int i = m + 1; i <= jt.p(); ++i) d = checked_add(d, checked_mul(i - m, jt.at(i)));
  return d;
}

Int psi(const JordanType& jt, int m) {
  require_range(m, 1, jt.p() - 1, "m");
  Int d = 0;
  for (int i = 1; i < m; ++i) d = checked_add(d, checked_mul(i, jt.at(i)));
  for (int i = m; i <= jt.p() - 1; ++i) d = checked_add(d, checked_mul(m, jt.at(i)));
  return d;
}

JordanType stable_part(const JordanType& jt) {
  std::vector<Int> mult = jt.mult();
  mult.back() = 0;
  return JordanType(jt.p(), std::move(mult));
}

JordanType syzygy(const JordanType& jt) {
  const int p = jt.p();
  std::vector<Int> mult(p, 0);
  for (int i = 1; i < p; ++i) mult[p - i - 1] = jt.at(i);
  return JordanType(p, std::move(mult));
}

JordanType restrict(int i, int j, int p) {
  require_bound(p);
  require_range(i, 1, p, "i");
  require_range(j, 1, p, "j");
  const int bound = (p + j - 1) / j;
  if (j > i) return JordanType::block(bound, 1, i);
  const int a = i / j;
  const int r = i % j;
  JordanType out = JordanType::block(bound, a, j - r);
  if (r > 0) out = out + JordanType::block(bound, a + 1, r);
  return out;
}

JordanType restrict_type(const JordanType& jt, int j) {
  require_range(j, 1, jt.p(), "j");
  JordanType out((jt.p() + j - 1) / j);
  for (int i = 1; i <= jt.p(); ++i) {
    if (jt.at(i) == 0) continue;
    out = out + restrict(i, j, jt.p()).scaled(jt.at(i));
  }
  return out;
}

Dominance compare_vectors(const std::vector<Int>& a, const std::vector<Int>& b) {
  bool le = true, ge = true;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) ge = false;
    if (a[k] > b[k]) le = false;
  }
  if (le && ge) return Dominance::Equal;
  if (ge) return Dominance::Greater;
  if (le) return Dominance::Less;
  return Dominance::Incomparable;
}

Dominance dominance_compare(const JordanType& a, const JordanType& b,
                            DominanceConvention convention) {
  require_same_bound(a, b);
  if (dimension(a) != dimension(b)) {
    throw ValidationError("dominance needs equal dimensions: " + std::to_string(dimension(a)) +
                          " vs " + std::to_string(dimension(b)));
  }
  const int p = a.p();
  std::vector<Int> sa(p), sb(p);
  for (int j = 1; j <= p; ++j) {
    Int xa = 0, xb = 0;
    for (int i = j; i <= p; ++i) {
      const Int w = convention == DominanceConvention::PartitionOrder ? i - j : i;
      xa = checked_add(xa, checked_mul(w, a.at(i)));
      xb = checked_add(xb, checked_mul(w, b.at(i)));
    }
    sa[j - 1] = xa;
    sb[j - 1] = xb;
  }
  return compare_vectors(sa, sb);
}

}  // namespace jtype
