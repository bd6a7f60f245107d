#pragma once

#include "hopfcyc/lincomb.hpp"

#include <map>
#include <optional>
#include <vector>

namespace hc {

using Vec = std::vector<Q>;

// Row-sparse exact matrix.
class SparseMatrix {
 public:
  SparseMatrix(int rows = 0, int cols = 0) : cols_(cols), data_(rows) {}

  int rows() const { return static_cast<int>(data_.size()); }
  int cols() const { return cols_; }

  void set(int r, int c, const Q& v);
  void add(int r, int c, const Q& v);
  Q get(int r, int c) const;
  const std::map<int, Q>& row(int r) const { return data_.at(r); }
  std::size_t nonzeros() const;

  Vec apply(const Vec& x) const;
  SparseMatrix transpose() const;
  // this * other
  SparseMatrix multiply(const SparseMatrix& other) const;
  bool is_zero() const { return nonzeros() == 0; }

 private:
  void check(int r, int c) const;
  int cols_;
  std::vector<std::map<int, Q>> data_;
};

int rank(const SparseMatrix& m);
// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vec> kernel(const SparseMatrix& m);

struct Solution {
  bool ok = false;
  Vec witness;
};
// Solves m w = v.  Throws std::invalid_argument when v has the wrong length.
Solution in_image(const SparseMatrix& m, const Vec& v);

}  // namespace hc
