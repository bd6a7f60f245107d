#include "hopfcyc/lincomb.hpp"

namespace hc {

int degree(const Tensor& t) {
  if (t.empty()) return -1;
  return static_cast<int>(t.begin()->first.size());
}

Tensor scalar_tensor(const Q& c) { return Tensor(Tuple{}, c); }

Tensor as_tensor(const Elem& e) {
  Tensor out(e.tag());
  for (const auto& [w, c] : e) out.add(Tuple{w}, c);
  return out;
}

Tuple concat(const Tuple& a, const Tuple& b) {
  Tuple r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Word pack_pair(const Word& a, const Word& b) {
  Word w;
  w.reserve(1 + a.size() + b.size());
  w.push_back(static_cast<int>(a.size()));
  w.insert(w.end(), a.begin(), a.end());
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

std::pair<Word, Word> unpack_pair(const Word& w) {
  int n = w.at(0);
  return {Word(w.begin() + 1, w.begin() + 1 + n), Word(w.begin() + 1 + n, w.end())};
}

Word pack_tuple(const Tuple& t) {
  Word w{static_cast<int>(t.size())};
  for (const Word& x : t) {
    w.push_back(static_cast<int>(x.size()));
    w.insert(w.end(), x.begin(), x.end());
  }
  return w;
}

Tuple unpack_tuple(const Word& w) {
  Tuple t;
  std::size_t pos = 1;
  for (int i = 0; i < w.at(0); ++i) {
    int n = w.at(pos++);
    t.emplace_back(w.begin() + pos, w.begin() + pos + n);
    pos += n;
  }
  return t;
}

Tensor tensor_product(const Tensor& a, const Tensor& b) {
  Tensor out(a.tag());
  out.unify(b.tag());
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) out.add(concat(ta, tb), ca * cb);
  return out;
}

Tensor tensor_product(const Elem& a, const Elem& b) { return tensor_product(as_tensor(a), as_tensor(b)); }

std::string format_rational(const Q& q) { return q.get_str(); }

}  // namespace hc
