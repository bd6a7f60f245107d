#pragma once

#include <gmpxx.h>

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hc {

using Q = mpq_class;
using Word = std::vector<int>;
using Tuple = std::vector<Word>;

struct TagMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Finite formal combination with no zero coefficients.  The tag identifies
// the owning algebra; 0 means "not yet bound" and adopts the other side's tag.
template <class Key>
class LinComb {
 public:
  using Map = std::map<Key, Q>;

  LinComb() = default;
  explicit LinComb(int tag) : tag_(tag) {}
  LinComb(const Key& k, const Q& c = 1, int tag = 0) : tag_(tag) { add(k, c); }

  int tag() const { return tag_; }
  void set_tag(int t) { tag_ = t; }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  auto begin() const { return terms_.begin(); }
  auto end() const { return terms_.end(); }

  Q coeff(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Q(0) : it->second;
  }

  void add(const Key& k, const Q& c) {
    if (sgn(c) == 0) return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (sgn(it->second) == 0) terms_.erase(it);
    }
  }

  void add(const LinComb& o, const Q& c = 1) {
    unify(o.tag_);
    if (sgn(c) == 0) return;
    for (const auto& [k, v] : o.terms_) add(k, v * c);
  }

  LinComb& operator+=(const LinComb& o) {
    add(o, 1);
    return *this;
  }
  LinComb& operator-=(const LinComb& o) {
    add(o, -1);
    return *this;
  }
  LinComb& operator*=(const Q& c) {
    if (sgn(c) == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& kv : terms_) kv.second *= c;
    return *this;
  }

  friend LinComb operator+(LinComb a, const LinComb& b) { return a += b; }
  friend LinComb operator-(LinComb a, const LinComb& b) { return a -= b; }
  friend LinComb operator-(LinComb a) { return a *= Q(-1); }
  friend LinComb operator*(const Q& c, LinComb a) { return a *= c; }
  friend LinComb operator*(LinComb a, const Q& c) { return a *= c; }

  // Equality ignores tags: the zero element of every algebra compares equal.
  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  void unify(int t) {
    if (t == 0 || t == tag_) return;
    if (tag_ == 0) {
      tag_ = t;
      return;
    }
    throw TagMismatch("algebra tag mismatch: " + std::to_string(tag_) + " vs " + std::to_string(t));
  }

 private:
  Map terms_;
  int tag_ = 0;
};

using Elem = LinComb<Word>;
using Tensor = LinComb<Tuple>;

// Degree of a tensor; -1 for the zero tensor (degree is then undetermined).
int degree(const Tensor& t);

Tensor scalar_tensor(const Q& c);
Tensor as_tensor(const Elem& e);
Tensor tensor_product(const Tensor& a, const Tensor& b);
Tensor tensor_product(const Elem& a, const Elem& b);

// Concatenation helpers on keys.
Tuple concat(const Tuple& a, const Tuple& b);

// A pair of words as one word: [len(a), a..., b...].
Word pack_pair(const Word& a, const Word& b);
std::pair<Word, Word> unpack_pair(const Word& w);
// A tuple of words as one word: [n, len(w1), w1..., len(w2), w2...].
Word pack_tuple(const Tuple& t);
Tuple unpack_tuple(const Word& w);

std::string format_rational(const Q& q);

}  // namespace hc
