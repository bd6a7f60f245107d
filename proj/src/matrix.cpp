#include "hopfcyc/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc {

void SparseMatrix::check(int r, int c) const {
  if (r < 0 || r >= rows() || c < 0 || c >= cols_) throw std::out_of_range("matrix index out of range");
}

void SparseMatrix::set(int r, int c, const Q& v) {
  check(r, c);
  if (sgn(v) == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void SparseMatrix::add(int r, int c, const Q& v) {
  check(r, c);
  if (sgn(v) == 0) return;
  auto [it, fresh] = data_[r].try_emplace(c, v);
  if (!fresh) {
    it->second += v;
    if (sgn(it->second) == 0) data_[r].erase(it);
  }
}

Q SparseMatrix::get(int r, int c) const {
  check(r, c);
  auto it = data_[r].find(c);
  return it == data_[r].end() ? Q(0) : it->second;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

Vec SparseMatrix::apply(const Vec& x) const {
  if (static_cast<int>(x.size()) != cols_) throw std::invalid_argument("apply: dimension mismatch");
  Vec y(rows(), Q(0));
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : data_[r]) y[r] += v * x[c];
  return y;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(cols_, rows());
  for (int r = 0; r < rows(); ++r)
    for (const auto& [c, v] : data_[r]) t.set(c, r, v);
  return t;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& o) const {
  if (cols_ != o.rows()) throw std::invalid_argument("multiply: dimension mismatch");
  SparseMatrix p(rows(), o.cols());
  for (int r = 0; r < rows(); ++r)
    for (const auto& [k, v] : data_[r])
      for (const auto& [c, w] : o.data_[k]) p.add(r, c, v * w);
  return p;
}

namespace {

using IRow = std::vector<std::pair<int, mpz_class>>;

IRow integer_row(const std::map<int, Q>& row, const Q* extra, int extra_col) {
  mpz_class den = 1;
  for (const auto& [c, v] : row) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), v.get_den_mpz_t());
  if (extra) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), extra->get_den_mpz_t());
  IRow out;
  out.reserve(row.size() + 1);
  for (const auto& [c, v] : row) out.emplace_back(c, v.get_num() * (den / v.get_den()));
  if (extra && sgn(*extra) != 0) out.emplace_back(extra_col, extra->get_num() * (den / extra->get_den()));
  return out;
}

void remove_content(IRow& r) {
  if (r.empty()) return;
  mpz_class g = 0;
  for (const auto& e : r) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.second.get_mpz_t());
    if (g == 1) return;
  }
  for (auto& e : r) mpz_divexact(e.second.get_mpz_t(), e.second.get_mpz_t(), g.get_mpz_t());
}

mpz_class entry(const IRow& r, int col) {
  auto it = std::lower_bound(r.begin(), r.end(), col, [](const auto& e, int c) { return e.first < c; });
  return (it != r.end() && it->first == col) ? it->second : mpz_class(0);
}

// r <- p*r - a*s where p is the pivot of s at `col` and a the entry of r there.
void eliminate(IRow& r, const IRow& s, int col) {
  mpz_class a = entry(r, col);
  if (a == 0) return;
  mpz_class p = entry(s, col);
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), a.get_mpz_t());
  mpz_class pf = p / g, af = a / g;
  IRow out;
  out.reserve(r.size() + s.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < s.size()) {
    if (j == s.size() || (i < r.size() && r[i].first < s[j].first)) {
      out.emplace_back(r[i].first, pf * r[i].second);
      ++i;
    } else if (i == r.size() || s[j].first < r[i].first) {
      out.emplace_back(s[j].first, -af * s[j].second);
      ++j;
    } else {
      mpz_class v = pf * r[i].second - af * s[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  r = std::move(out);
  remove_content(r);
}

struct Echelon {
  std::vector<IRow> rows;
  std::map<int, std::size_t> pivot;  // column -> index into rows

  void insert(IRow r) {
    remove_content(r);
    while (!r.empty()) {
      int lead = r.front().first;
      auto it = pivot.find(lead);
      if (it == pivot.end()) {
        pivot.emplace(lead, rows.size());
        rows.push_back(std::move(r));
        return;
      }
      eliminate(r, rows[it->second], lead);
    }
  }

  // Clears every pivot column from every other pivot row.
  void reduce() {
    for (auto it = pivot.rbegin(); it != pivot.rend(); ++it) {
      const IRow& p = rows[it->second];
      for (auto jt = pivot.begin(); jt != pivot.end() && jt->first < it->first; ++jt)
        eliminate(rows[jt->second], p, it->first);
    }
  }
};

Echelon echelon(const SparseMatrix& m, const Vec* rhs) {
  Echelon e;
  for (int r = 0; r < m.rows(); ++r)
    e.insert(integer_row(m.row(r), rhs ? &(*rhs)[r] : nullptr, m.cols()));
  return e;
}

}  // namespace

int rank(const SparseMatrix& m) { return static_cast<int>(echelon(m, nullptr).rows.size()); }

std::vector<Vec> kernel(const SparseMatrix& m) {
  Echelon e = echelon(m, nullptr);
  e.reduce();
  std::vector<Vec> basis;
  for (int f = 0; f < m.cols(); ++f) {
    if (e.pivot.count(f)) continue;
    Vec v(m.cols(), Q(0));
    v[f] = 1;
    for (const auto& [c, idx] : e.pivot) {
      const IRow& r = e.rows[idx];
      mpz_class a = entry(r, f);
      if (a != 0) {
        v[c] = Q(-a, r.front().second);
        v[c].canonicalize();
      }
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Solution in_image(const SparseMatrix& m, const Vec& v) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("in_image: dimension mismatch");
  Echelon e = echelon(m, &v);
  Solution s;
  if (e.pivot.count(m.cols())) return s;
  e.reduce();
  s.ok = true;
  s.witness.assign(m.cols(), Q(0));
  for (const auto& [c, idx] : e.pivot) {
    const IRow& r = e.rows[idx];
    mpz_class a = entry(r, m.cols());
    if (a != 0) {
      s.witness[c] = Q(a, r.front().second);
      s.witness[c].canonicalize();
    }
  }
  return s;
}

}  // namespace hc
