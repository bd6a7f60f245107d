#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace hc {

struct Truncation {
  int max_tensor_degree = 3;
  std::optional<int> weight;  // keep only this ad-Y eigenvalue
  int pbw_cap = 4;            // total exponent sum per factor
  int letter_cap = 4;         // largest d-index
  int sigma_lo = -2;          // sigma exponents for N = infinity
  int sigma_hi = 2;
  int tree_cap = 4;

  void validate() const {
    if (max_tensor_degree < 0 || pbw_cap < 0 || letter_cap < 0 || tree_cap < 0)
      throw std::invalid_argument("truncation caps must be >= 0");
    if (sigma_lo > sigma_hi) throw std::invalid_argument("empty sigma range");
  }
};

}  // namespace hc
