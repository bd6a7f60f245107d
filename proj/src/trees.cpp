#include "hopfcyc/trees.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc::trees {

namespace {

struct Registry {
  std::vector<std::vector<int>> kids;
  std::vector<int> sz;
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> by_size;  // by_size[n] = ids of size n

  // Depth-first over nondecreasing child ids visits child lists in
  // lexicographic order, so ids come out canonical.
  Registry() {
    by_size.resize(kMaxSize + 1);
    for (int n = 1; n <= kMaxSize; ++n) {
      std::vector<int> cur;
      extend(n - 1, 0, cur, n);
    }
  }

  // children multisets with nondecreasing ids summing to `left` vertices
  void extend(int left, int min_id, std::vector<int>& cur, int n) {
    if (left == 0) {
      int id = static_cast<int>(kids.size());
      kids.push_back(cur);
      sz.push_back(n);
      index.emplace(cur, id);
      by_size[n].push_back(id);
      return;
    }
    for (int s = 1; s <= left; ++s)
      for (int id : by_size[s]) {
        if (id < min_id) continue;
        cur.push_back(id);
        extend(left - s, id, cur, n);
        cur.pop_back();
      }
  }
};

const Registry& reg() {
  static const Registry r;
  return r;
}

void check_id(int id) {
  if (id < 0 || id >= count()) throw std::out_of_range("tree id out of range");
}

}  // namespace

int count() { return static_cast<int>(reg().kids.size()); }

int size(int id) {
  check_id(id);
  return reg().sz[id];
}

const std::vector<int>& children(int id) {
  check_id(id);
  return reg().kids[id];
}

int lookup(std::vector<int> c) {
  std::sort(c.begin(), c.end());
  int n = 1;
  for (int k : c) n += size(k);
  if (n > kMaxSize) throw CapExceeded("tree size " + std::to_string(n) + " exceeds registry cap");
  return reg().index.at(c);
}

std::vector<int> up_to(int n) {
  std::vector<int> out;
  for (int id = 0; id < count() && size(id) <= n; ++id) out.push_back(id);
  return out;
}

std::vector<int> count_by_size(int n) {
  std::vector<int> out(n, 0);
  for (int id = 0; id < count(); ++id)
    if (size(id) <= n) ++out[size(id) - 1];
  return out;
}

std::string format(int id) {
  std::string s = "[";
  for (int k : children(id)) s += format(k);
  return s + "]";
}

int parse(const std::string& lit, std::size_t& pos) {
  if (pos >= lit.size() || lit[pos] != '[') throw std::invalid_argument("tree literal: expected '[' at " + std::to_string(pos));
  ++pos;
  std::vector<int> c;
  while (pos < lit.size() && lit[pos] == '[') c.push_back(parse(lit, pos));
  if (pos >= lit.size() || lit[pos] != ']') throw std::invalid_argument("tree literal: expected ']' at " + std::to_string(pos));
  ++pos;
  return lookup(std::move(c));
}

int parse(const std::string& lit) {
  std::size_t pos = 0;
  int id = parse(lit, pos);
  if (pos != lit.size()) throw std::invalid_argument("tree literal: trailing input");
  return id;
}

std::vector<Cut> simple_cuts(int id) {
  // Outcome: (pruned forest, trunk child list) -> multiplicity, built child by child.
  std::map<std::pair<Forest, std::vector<int>>, long> acc{{{{}, {}}, 1}};
  for (int c : children(id)) {
    std::map<std::pair<Forest, std::vector<int>>, long> next;
    auto sub = simple_cuts(c);
    for (const auto& [key, m] : acc) {
      // cut the edge above c
      Forest f = key.first;
      f.push_back(c);
      std::sort(f.begin(), f.end());
      next[{f, key.second}] += m;
      // keep the edge, cut inside c
      for (const Cut& s : sub) {
        Forest g = key.first;
        g.insert(g.end(), s.pruned.begin(), s.pruned.end());
        std::sort(g.begin(), g.end());
        std::vector<int> t = key.second;
        t.push_back(s.trunk);
        next[{g, t}] += m * s.mult;
      }
    }
    acc = std::move(next);
  }
  std::vector<Cut> out;
  for (const auto& [key, m] : acc) out.push_back(Cut{key.first, lookup(key.second), m});
  return out;
}

std::map<int, long> graft(int id) {
  std::map<int, long> out;
  std::vector<int> c = children(id);
  std::vector<int> leaf = c;
  leaf.push_back(0);
  out[lookup(leaf)] += 1;
  for (std::size_t i = 0; i < c.size(); ++i)
    for (const auto& [g, m] : graft(c[i])) {
      std::vector<int> t = c;
      t[i] = g;
      out[lookup(t)] += m;
    }
  return out;
}

}  // namespace hc::trees
