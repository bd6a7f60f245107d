#pragma once

#include "hopfcyc/hopf.hpp"

#include <stdexcept>

namespace hc::detail {

// Cochains mix slot algebras, so they are accumulated term by term and stay untagged.
inline void add_into(Tensor& out, const Tensor& t, const Q& c = 1) {
  for (const auto& [tup, d] : t) out.add(tup, c * d);
}

inline Tensor untagged(const Tensor& t) {
  Tensor out;
  add_into(out, t);
  return out;
}

template <class F>
Tensor linear(const Tensor& x, F&& f) {
  Tensor out;
  for (const auto& [tup, c] : x) add_into(out, f(tup), c);
  return out;
}

inline Tuple replace_slot(const Tuple& x, std::size_t i, const Tuple& part) {
  Tuple r(x.begin(), x.begin() + i);
  r.insert(r.end(), part.begin(), part.end());
  r.insert(r.end(), x.begin() + i + 1, x.end());
  return r;
}

inline Tensor coproduct_in_slot(const HopfAlgebra& H, const Tuple& x, std::size_t i) {
  Tensor out;
  for (const auto& [part, c] : H.coproduct(x[i])) out.add(replace_slot(x, i, part), c);
  return out;
}

inline Tensor counit_in_slot(const HopfAlgebra& H, const Tuple& x, std::size_t i) {
  Tensor out;
  out.add(replace_slot(x, i, {}), H.counit(x[i]));
  return out;
}

inline void check_index(bool ok, const char* what) {
  if (!ok) throw std::out_of_range(what);
}

// Applies f to the slots [from, end) of every tuple, keeping the prefix.
template <class F>
Tensor on_suffix(const Tuple& x, std::size_t from, F&& f) {
  Tuple head(x.begin(), x.begin() + from);
  Tuple tail(x.begin() + from, x.end());
  Tensor out;
  for (const auto& [t, c] : f(tail)) out.add(concat(head, t), c);
  return out;
}

// Applies f to the slots [0, len) of every tuple, keeping the rest.
template <class F>
Tensor on_prefix(const Tuple& x, std::size_t len, F&& f) {
  Tuple head(x.begin(), x.begin() + len);
  Tuple tail(x.begin() + len, x.end());
  Tensor out;
  for (const auto& [t, c] : f(head)) out.add(concat(t, tail), c);
  return out;
}

}  // namespace hc::detail
