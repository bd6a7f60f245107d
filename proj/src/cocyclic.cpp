#include "hopfcyc/cocyclic.hpp"

#include "hopfcyc/pbw.hpp"

#include "cochain_util.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hc {

using namespace detail;

// ---- linear extensions -------------------------------------------------------

Tensor face(const CocyclicModule& M, int i, const Tensor& x, int n) {
  return linear(x, [&](const Tuple& t) { return M.face(i, t, n); });
}

Tensor degeneracy(const CocyclicModule& M, int j, const Tensor& x, int n) {
  return linear(x, [&](const Tuple& t) { return M.degeneracy(j, t, n); });
}

Tensor cyclic(const CocyclicModule& M, const Tensor& x, int n) {
  return linear(x, [&](const Tuple& t) { return M.cyclic(t, n); });
}

Tensor cyclic_power(const CocyclicModule& M, const Tensor& x, int n, int k) {
  Tensor y = untagged(x);
  for (int i = 0; i < k; ++i) y = cyclic(M, y, n);
  return y;
}

Tensor hochschild_b(const CocyclicModule& M, const Tensor& x, int n) {
  Tensor out;
  for (int i = 0; i <= n + 1; ++i) add_into(out, face(M, i, x, n), i % 2 == 0 ? 1 : -1);
  return out;
}

Tensor connes_B(const CocyclicModule& M, const Tensor& x, int n) {
  if (n == 0) return Tensor();
  Tensor z;
  if (M.slotwise_normalized()) {
    z = normalize(M, x, n);
  } else {
    z = untagged(x);
    add_into(z, cyclic(M, x, n), n % 2 == 0 ? -1 : 1);
  }
  Tensor y = linear(z, [&](const Tuple& t) { return M.cyclic_degeneracy(t, n); });
  Tensor out;
  Tensor term = y;
  for (int i = 0; i < n; ++i) {
    add_into(out, term, ((n - 1) * i) % 2 == 0 ? 1 : -1);
    if (i + 1 < n) term = cyclic(M, term, n - 1);
  }
  return out;
}

bool is_zero(const std::map<int, Tensor>& x) {
  for (const auto& [k, t] : x)
    if (!t.empty()) return false;
  return true;
}

Tensor normalize(const CocyclicModule& M, const Tensor& x, int n) {
  auto S = M.slots(n);
  Tensor y = untagged(x);
  for (std::size_t i = 0; i < S.size(); ++i) {
    if (!S[i].normalized) continue;
    const HopfAlgebra& H = *S[i].algebra;
    Word one = H.one();
    Tensor next;
    for (const auto& [tup, c] : y) {
      next.add(tup, c);
      Q e = H.counit(tup[i]);
      if (sgn(e) != 0) {
        Tuple u = tup;
        u[i] = one;
        next.add(u, -c * e);
      }
    }
    y = std::move(next);
  }
  return y;
}

bool is_normalized(const CocyclicModule& M, const Tensor& x, int n) { return normalize(M, x, n) == x; }

std::string format(const CocyclicModule& M, const Tensor& x, int n) {
  auto S = M.slots(n);
  return format_with(x, [&](std::size_t i, const Word& w) -> std::pair<std::string, int> {
    if (S.at(i).carrier) return {S[i].carrier->format(w), 0};
    return {S[i].algebra->format(w), S[i].algebra->pbw_degree(w)};
  });
}

int weight(const CocyclicModule& M, const Tuple& x, int n) {
  auto S = M.slots(n);
  int w = 0;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (S.at(i).algebra) w += S[i].algebra->weight(x[i]);
  return w;
}

std::optional<int> weight(const CocyclicModule& M, const Tensor& x, int n) {
  std::optional<int> w;
  for (const auto& [tup, c] : x) {
    int v = weight(M, tup, n);
    if (w && *w != v) return std::nullopt;
    w = v;
  }
  return w ? w : std::optional<int>(0);
}

SampleSpace::SampleSpace(const CocyclicModule& M, int n, const Truncation& t, bool normalized) {
  for (const auto& s : M.slots(n)) {
    std::vector<Word> b = s.carrier ? s.carrier->carrier_basis(t) : s.algebra->basis(t);
    if (normalized && s.normalized) {
      Word one = s.algebra->one();
      std::erase_if(b, [&](const Word& w) { return w == one || sgn(s.algebra->counit(w)) != 0; });
    }
    bases_.push_back(std::move(b));
  }
}

Tensor SampleSpace::draw(std::mt19937& rng, int terms) const {
  for (const auto& b : bases_)
    if (b.empty()) return Tensor();
  static const int kCoeffs[] = {-2, -1, 1, 2};
  std::uniform_int_distribution<int> count(1, terms);
  std::uniform_int_distribution<int> coeff(0, 3);
  Tensor out;
  int k = count(rng);
  for (int j = 0; j < k; ++j) {
    Tuple tup;
    for (const auto& b : bases_) {
      std::uniform_int_distribution<std::size_t> pick(0, b.size() - 1);
      tup.push_back(b[pick(rng)]);
    }
    out.add(tup, kCoeffs[coeff(rng)]);
  }
  return out;
}

Tensor sample(const CocyclicModule& M, int n, std::mt19937& rng, const Truncation& t, bool normalized, int terms) {
  return SampleSpace(M, n, t, normalized).draw(rng, terms);
}

std::vector<CheckReport> check_cocyclic(const CocyclicModule& M, int max_level, int samples, unsigned seed,
                                        const Truncation& t, bool with_cyclic) {
  CheckReport faces{"face-face"}, degs{"degeneracy-degeneracy"}, mixed{"degeneracy-face"};
  CheckReport tface{"tau-face"}, tdeg{"tau-degeneracy"}, order{"tau-order"};
  CheckReport b2{"b^2"}, B2{"B^2"}, bB{"bB+Bb"};
  std::mt19937 rng(seed);
  for (int n = 0; n <= max_level; ++n) {
    SampleSpace space(M, n, t, false);
    for (int s = 0; s < samples; ++s) {
      Tensor x = space.draw(rng);
      std::string wit = "level " + std::to_string(n) + ": " + format(M, x, n);
      auto F = [&](int i, const Tensor& y, int m) { return face(M, i, y, m); };
      auto D = [&](int j, const Tensor& y, int m) { return degeneracy(M, j, y, m); };
      auto T = [&](const Tensor& y, int m) { return cyclic(M, y, m); };

      for (int j = 0; j <= n + 2; ++j)
        for (int i = 0; i < j; ++i) {
          if (F(j, F(i, x, n), n + 1) != F(i, F(j - 1, x, n), n + 1))
            faces.fail(wit, "i=" + std::to_string(i) + " j=" + std::to_string(j));
          ++faces.count;
        }
      for (int j = 0; j + 2 <= n; ++j)
        for (int i = 0; i <= j; ++i) {
          if (D(j, D(i, x, n), n - 1) != D(i, D(j + 1, x, n), n - 1))
            degs.fail(wit, "i=" + std::to_string(i) + " j=" + std::to_string(j));
          ++degs.count;
        }
      for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n + 1; ++i) {
          Tensor lhs = D(j, F(i, x, n), n + 1);
          Tensor rhs;
          if (i < j)
            rhs = F(i, D(j - 1, x, n), n - 1);
          else if (i == j || i == j + 1)
            rhs = untagged(x);
          else
            rhs = F(i - 1, D(j, x, n), n - 1);
          if (lhs != rhs) mixed.fail(wit, "i=" + std::to_string(i) + " j=" + std::to_string(j));
          ++mixed.count;
        }
      Tensor xn = normalize(M, x, n);
      if (!hochschild_b(M, hochschild_b(M, x, n), n + 1).empty()) b2.fail(wit);
      ++b2.count;
      if (!with_cyclic) continue;

      Tensor tx = T(x, n);
      if (T(F(0, x, n), n + 1) != F(n + 1, x, n)) tface.fail(wit, "i=0");
      for (int i = 1; i <= n + 1; ++i) {
        if (T(F(i, x, n), n + 1) != F(i - 1, tx, n)) tface.fail(wit, "i=" + std::to_string(i));
        ++tface.count;
      }
      if (n >= 1) {
        if (T(D(0, x, n), n - 1) != D(n - 1, T(tx, n), n)) tdeg.fail(wit, "j=0");
        for (int j = 1; j <= n - 1; ++j) {
          if (T(D(j, x, n), n - 1) != D(j - 1, tx, n)) tdeg.fail(wit, "j=" + std::to_string(j));
          ++tdeg.count;
        }
      }
      if (cyclic_power(M, x, n, n + 1) != untagged(x)) order.fail(wit);
      ++order.count;

      if (n >= 2) {
        if (!connes_B(M, connes_B(M, xn, n), n - 1).empty()) B2.fail(wit);
        ++B2.count;
      }
      Tensor anti = hochschild_b(M, connes_B(M, xn, n), n - 1);
      if (n == 0) anti = Tensor();
      add_into(anti, connes_B(M, hochschild_b(M, xn, n), n + 1));
      if (!anti.empty()) bB.fail(wit, format(M, anti, n));
      ++bB.count;
    }
  }
  if (!with_cyclic) return {faces, degs, mixed, b2};
  return {faces, degs, mixed, tface, tdeg, order, b2, B2, bB};
}

namespace {

// a . x^{from..} computed slot by slot: a_(1) x^from (x) (a_(2) . rest), with
// the second legs of equal first legs collected before recursing.
Tensor diagonal_from(const HopfAlgebra& H, const Elem& a, const Tuple& x, std::size_t from) {
  Tensor out;
  if (from == x.size()) {
    Q e = 0;
    for (const auto& [w, c] : a) e += c * H.counit(w);
    out.add(Tuple{}, e);
    return out;
  }
  if (from + 1 == x.size()) {
    for (const auto& [w, c] : a)
      for (const auto& [v, d] : H.mul(w, x[from])) out.add(Tuple{v}, c * d);
    return out;
  }
  std::map<Word, Elem> legs;
  for (const auto& [w, c] : a)
    for (const auto& [parts, d] : H.coproduct(w)) legs[parts[0]].add(parts[1], c * d);
  for (const auto& [first, second] : legs) {
    if (second.empty()) continue;
    Elem head = H.mul(first, x[from]);
    if (head.empty()) continue;
    Tensor tail = diagonal_from(H, second, x, from + 1);
    for (const auto& [v, d] : head)
      for (const auto& [tup, e] : tail) out.add(concat(Tuple{v}, tup), d * e);
  }
  return out;
}

}  // namespace

Tensor diagonal_action(const HopfAlgebra& H, const Elem& a, const Tuple& x) { return diagonal_from(H, a, x, 0); }

Tensor diagonal_action(const HopfAlgebra& H, const Elem& a, const Tensor& x) {
  return linear(x, [&](const Tuple& t) { return diagonal_action(H, a, t); });
}

Tensor CocyclicModule::cyclic_degeneracy(const Tuple& x, int n) const {
  return hc::degeneracy(*this, n - 1, cyclic(x, n), n);
}

// ---- standard module -------------------------------------------------------------

StandardModule::StandardModule(HopfPtr H, ModularPair pair) : H_(std::move(H)), pair_(std::move(pair)) {}

std::string StandardModule::name() const {
  return "(" + H_->name() + ", " + pair_.delta.name + ", " + H_->format(pair_.sigma) + ")";
}

std::vector<SlotInfo> StandardModule::slots(int n) const {
  return std::vector<SlotInfo>(static_cast<std::size_t>(n), SlotInfo{H_.get(), nullptr, true});
}

Tensor StandardModule::face(int i, const Tuple& x, int n) const {
  check_index(i >= 0 && i <= n + 1, "face index out of range");
  if (i == 0) return Tensor(concat(Tuple{H_->one()}, x));
  if (i == n + 1) return Tensor(concat(x, Tuple{pair_.sigma}));
  return coproduct_in_slot(*H_, x, i - 1);
}

Tensor StandardModule::degeneracy(int j, const Tuple& x, int n) const {
  check_index(j >= 0 && j <= n - 1, "degeneracy index out of range");
  return counit_in_slot(*H_, x, j);
}

Tensor StandardModule::cyclic(const Tuple& x, int n) const {
  if (n == 0) return Tensor(x);
  std::lock_guard lock(mu_);
  auto it = tau_cache_.find(x);
  if (it != tau_cache_.end()) return it->second;
  Tuple rest(x.begin() + 1, x.end());
  rest.push_back(pair_.sigma);
  Tensor r = diagonal_action(*H_, twisted_antipode(*H_, pair_.delta, x[0]), rest);
  tau_cache_.emplace(x, r);
  return r;
}

Tensor StandardModule::cyclic_degeneracy(const Tuple& x, int n) const {
  check_index(n >= 1, "sigma tau needs level >= 1");
  return diagonal_action(*H_, twisted_antipode(*H_, pair_.delta, x[0]), Tuple(x.begin() + 1, x.end()));
}

// ---- coefficient modules ---------------------------------------------------------

SaydCyclicModule::SaydCyclicModule(std::shared_ptr<const SaydModule> M) : M_(std::move(M)) {}

std::string SaydCyclicModule::name() const { return M_->name() + " (x)_H " + M_->base().name(); }

std::vector<SlotInfo> SaydCyclicModule::slots(int n) const {
  std::vector<SlotInfo> s{SlotInfo{nullptr, M_.get(), false}};
  for (int i = 0; i < n; ++i) s.push_back(SlotInfo{&M_->base(), nullptr, true});
  return s;
}

Tensor SaydCyclicModule::reduce(const Tuple& u) const {
  const HopfAlgebra& H = M_->base();
  Tuple rest(u.begin() + 2, u.end());
  Tensor out;
  for (const auto& [parts, c] : H.coproduct(u[1])) {
    Elem m = M_->act(u[0], parts[0]);
    if (m.empty()) continue;
    Tensor acted = diagonal_action(H, H.antipode(parts[1]), rest);
    for (const auto& [mw, mc] : m)
      for (const auto& [tup, d] : acted) out.add(concat(Tuple{mw}, tup), c * mc * d);
  }
  return out;
}

Tensor SaydCyclicModule::reduce(const Tensor& u) const {
  return linear(u, [&](const Tuple& t) { return reduce(t); });
}

Tensor SaydCyclicModule::face(int i, const Tuple& x, int n) const {
  check_index(i >= 0 && i <= n + 1, "face index out of range");
  const HopfAlgebra& H = M_->base();
  if (i == 0) {
    Tuple r = x;
    r.insert(r.begin() + 1, H.one());
    return Tensor(r);
  }
  if (i == n + 1) {
    Tensor out;
    for (const auto& [hm, c] : M_->coact(x[0])) {
      Tuple r = x;
      r[0] = hm[1];
      r.push_back(hm[0]);
      out.add(r, c);
    }
    return out;
  }
  return coproduct_in_slot(H, x, i);
}

Tensor SaydCyclicModule::degeneracy(int j, const Tuple& x, int n) const {
  check_index(j >= 0 && j <= n - 1, "degeneracy index out of range");
  return counit_in_slot(M_->base(), x, j + 1);
}

Tensor SaydCyclicModule::cyclic(const Tuple& x, int n) const {
  std::lock_guard lock(mu_);
  auto it = tau_cache_.find(x);
  if (it != tau_cache_.end()) return it->second;
  Tensor out;
  for (const auto& [hm, c] : M_->coact(x[0])) {
    // unreduced m_(0) (x) h^1 (x) ... (x) h^n (x) m_(-1); h^1 plays c^0
    Tuple u{hm[1]};
    if (n == 0) {
      u.push_back(hm[0]);
    } else {
      u.insert(u.end(), x.begin() + 1, x.end());
      u.push_back(hm[0]);
    }
    add_into(out, reduce(u), c);
  }
  tau_cache_.emplace(x, out);
  return out;
}

Tensor SaydCyclicModule::cyclic_degeneracy(const Tuple& x, int n) const {
  check_index(n >= 1, "sigma tau needs level >= 1");
  return reduce(x);  // (m, h^1, h^2..h^n) read with h^1 as c^0
}

UnreducedSaydModule::UnreducedSaydModule(std::shared_ptr<const SaydModule> M) : M_(std::move(M)) {}

std::string UnreducedSaydModule::name() const { return M_->name() + " (x) " + M_->base().name(); }

std::vector<SlotInfo> UnreducedSaydModule::slots(int n) const {
  std::vector<SlotInfo> s{SlotInfo{nullptr, M_.get(), false}, SlotInfo{&M_->base(), nullptr, false}};
  for (int i = 0; i < n; ++i) s.push_back(SlotInfo{&M_->base(), nullptr, true});
  return s;
}

Tensor UnreducedSaydModule::face(int i, const Tuple& x, int n) const {
  check_index(i >= 0 && i <= n + 1, "face index out of range");
  const HopfAlgebra& H = M_->base();
  if (i <= n) return coproduct_in_slot(H, x, i + 1);
  Tensor out;
  Tuple tail(x.begin() + 2, x.end());
  for (const auto& [hm, c] : M_->coact(x[0]))
    for (const auto& [parts, d] : H.coproduct(x[1]))
      for (const auto& [w, e] : H.mul(hm[0], parts[0])) {
        Tuple r{hm[1], parts[1]};
        r.insert(r.end(), tail.begin(), tail.end());
        r.push_back(w);
        out.add(r, c * d * e);
      }
  return out;
}

Tensor UnreducedSaydModule::degeneracy(int j, const Tuple& x, int n) const {
  check_index(j >= 0 && j <= n - 1, "degeneracy index out of range");
  return counit_in_slot(M_->base(), x, j + 2);
}

Tensor UnreducedSaydModule::cyclic(const Tuple& x, int) const {
  const HopfAlgebra& H = M_->base();
  Tensor out;
  for (const auto& [hm, c] : M_->coact(x[0]))
    for (const auto& [w, e] : H.mul(hm[0], x[1])) {
      Tuple r{hm[1]};
      r.insert(r.end(), x.begin() + 2, x.end());
      r.push_back(w);
      out.add(r, c * e);
    }
  return out;
}

Tensor UnreducedSaydModule::extra_degeneracy(const Tuple& x, int n) const {
  check_index(n >= 1, "extra degeneracy needs level >= 1");
  return counit_in_slot(M_->base(), x, 1);
}

Tensor theta(const SaydCyclicModule& reduced, const Tensor& unreduced) {
  return strip_carrier(reduced.reduce(unreduced));
}

Tensor theta_inverse(const HopfAlgebra& H, const Tensor& x) {
  Tensor out;
  for (const auto& [tup, c] : x) out.add(concat(Tuple{Word{}, H.one()}, tup), c);
  return out;
}

Tensor strip_carrier(const Tensor& x) {
  Tensor out;
  for (const auto& [tup, c] : x) out.add(Tuple(tup.begin() + 1, tup.end()), c);
  return out;
}

Tensor add_carrier(const Tensor& x, const Word& m) {
  Tensor out;
  for (const auto& [tup, c] : x) out.add(concat(Tuple{m}, tup), c);
  return out;
}

// ---- named cocycles ----------------------------------------------------------------

const std::vector<NamedCocycle>& named_cocycles() {
  static const std::vector<NamedCocycle> table = {
      {"GV", "h1", 1, "-d1", 0},
      {"TF", "h1", 2, "X # Y - Y # X - d1*Y # Y", 0},
      {"GVdag", "h1dag", 1, "-s^-1*d1", -1},
      {"TFdag", "h1dag", 2, "s^-1*X # s^-1*Y - Y # s^-1*X - s^-1*d1*Y # s^-1*Y", -1},
      {"Z", "h1s", 1, "Z", 0},
      {"TFs", "h1s", 2, "X # Y - Y # X - Z*Y # Y", 0},
      {"deltaStar", "hck", 1, "dT[]", 0},
      {"TFck", "hck", 2, "X # Y - Y # X - dT[]*Y # Y", 0},
      {"deltaStarDag", "hckdag", 1, "-s^-1*dT[]", -1},
      {"TFckdag", "hckdag", 2, "s^-1*X # s^-1*Y - Y # s^-1*X - s^-1*dT[]*Y # s^-1*Y", -1},
  };
  return table;
}

const NamedCocycle* find_cocycle(const std::string& name) {
  for (const auto& c : named_cocycles())
    if (c.name == name) return &c;
  return nullptr;
}

std::vector<CheckReport> verify_cocycle(const CocyclicModule& M, const Tensor& x, int n) {
  CheckReport b{"b(x) = 0"}, t{"tau(x) = (-1)^n x"};
  Tensor bx = hochschild_b(M, x, n);
  if (!bx.empty()) b.fail(format(M, x, n), "b(x) = " + format(M, bx, n + 1));
  Tensor tx = cyclic(M, x, n);
  Tensor expect = untagged(x);
  if (n % 2 == 1) expect *= Q(-1);
  if (tx != expect) t.fail(format(M, x, n), "tau(x) = " + format(M, tx, n));
  b.count = t.count = 1;
  return {b, t};
}

ModularPair delta_pair(const PbwAlgebra& H, int k) {
  auto s = H.group_like(k);
  auto si = H.group_like(-k);
  if (!s || !si) throw std::invalid_argument(H.name() + " has no group-like sigma^" + std::to_string(k));
  return ModularPair{H.delta(), *s, *si};
}

}  // namespace hc
