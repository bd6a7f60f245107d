#pragma once

#include "hopfcyc/lincomb.hpp"

#include <map>
#include <string>
#include <vector>

namespace hc::trees {

// Trees are integer ids into a registry enumerated once in canonical order:
// by size, then by the ascending list of child ids compared lexicographically.
// Id 0 is the single vertex.
constexpr int kMaxSize = 10;

using Forest = std::vector<int>;  // sorted multiset of tree ids

int count();
int size(int id);
const std::vector<int>& children(int id);
int lookup(std::vector<int> children);  // throws CapExceeded past kMaxSize
// All ids of trees with size <= n, canonical order.
std::vector<int> up_to(int n);
std::vector<int> count_by_size(int n);

std::string format(int id);  // bracket literal, "[]" is the single vertex
int parse(const std::string& literal, std::size_t& pos);
int parse(const std::string& literal);

struct Cut {
  Forest pruned;  // P_c
  int trunk;      // R_c, always contains the root
  long mult;
};
// Simple cuts including the empty one, merged by outcome.
std::vector<Cut> simple_cuts(int id);

// Attach one leaf in every way; isomorphic results are merged with multiplicity.
std::map<int, long> graft(int id);

}  // namespace hc::trees
