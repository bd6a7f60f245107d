#include "hopfcyc/homotopy.hpp"

#include "cochain_util.hpp"

#include <random>

namespace hc {

using namespace detail;

namespace {

int sign(int k) { return k % 2 == 0 ? 1 : -1; }

// All tuples of capped basis words of length n.
std::vector<Tuple> basis_tuples(const std::vector<Word>& basis, int n) {
  std::vector<Tuple> out{Tuple{}};
  for (int k = 0; k < n; ++k) {
    std::vector<Tuple> next;
    for (const Tuple& t : out)
      for (const Word& w : basis) {
        Tuple r = t;
        r.push_back(w);
        next.push_back(std::move(r));
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

// ---- coderivations ----------------------------------------------------------------

Coderivation right_multiplication(HopfPtr H, const Word& Z, std::string name) {
  const HopfAlgebra* A = H.get();
  return Coderivation{std::move(name), H, [A, Z](const Word& h) { return A->mul(h, Z); }};
}

Coderivation zero_coderivation(HopfPtr H) {
  return Coderivation{"0", H, [](const Word&) { return Elem(); }};
}

std::vector<CheckReport> check_coderivation(const Coderivation& D, const Truncation& t) {
  CheckReport lin{"H-linear"}, co{"coderivation"};
  const HopfAlgebra& H = *D.algebra;
  auto words = H.basis(t);
  auto applyD = [&](const Elem& x) {
    Elem out;
    for (const auto& [w, c] : x) out.add(D(w), c);
    return out;
  };
  for (const Word& g : words)
    for (const Word& h : words) {
      if (applyD(H.mul(g, h)) != mul(H, elem(H, g), D(h))) lin.fail(H.format(g) + " | " + H.format(h));
      ++lin.count;
    }
  for (const Word& c : words) {
    Tensor lhs;
    for (const auto& [w, a] : D(c)) add_into(lhs, H.coproduct(w), a);
    Tensor rhs;
    for (const auto& [parts, a] : H.coproduct(c)) {
      for (const auto& [w, b] : D(parts[0])) rhs.add(Tuple{w, parts[1]}, a * b);
      for (const auto& [w, b] : D(parts[1])) rhs.add(Tuple{parts[0], w}, a * b);
    }
    if (lhs != rhs) co.fail(H.format(c));
    ++co.count;
  }
  return {lin, co};
}

// ---- operators ---------------------------------------------------------------------

CartanOperators::CartanOperators(std::shared_ptr<const PbwAlgebra> H, ModularPair pair, Coderivation D)
    : H_(H),
      standard_(H, pair),
      coeff_(std::make_shared<CharacterModule>(*H, pair.delta, pair.sigma)),
      reduced_(coeff_),
      unreduced_(coeff_),
      D_(std::move(D)) {}

Tensor CartanOperators::psi_unreduced(int j, const Tensor& x, int n) const {
  check_index(j >= 0 && j <= n, "psi index out of range");
  return linear(x, [&](const Tuple& t) {
    Tensor out;
    for (const auto& [w, c] : D_(t[j + 1])) {
      Tuple r = t;
      r[j + 1] = w;
      out.add(r, c);
    }
    return out;
  });
}

Tensor CartanOperators::lie_unreduced(const Tensor& x, int n) const {
  Tensor out;
  for (int j = 0; j <= n; ++j) add_into(out, psi_unreduced(j, x, n));
  return out;
}

Tensor CartanOperators::e_unreduced(const Tensor& x, int n) const {
  Tensor y = psi_unreduced(n + 1, face(unreduced_, n + 1, x, n), n + 1);
  return n % 2 == 0 ? y : Tensor() - y;
}

Tensor CartanOperators::E_component_unreduced(int j, int i, const Tensor& x, int n) const {
  int m = n - 1;
  check_index(1 <= i && i <= j && j <= m, "E component index out of range");
  Tensor s = linear(x, [&](const Tuple& t) { return unreduced_.extra_degeneracy(t, n); });
  Tensor y = psi_unreduced(j, cyclic_power(unreduced_, s, m, m + 1 - i), m);
  return sign(m * i + 1) == 1 ? y : Tensor() - y;
}

Tensor CartanOperators::E_unreduced(const Tensor& x, int n) const {
  int m = n - 1;
  Tensor out;
  if (m < 1) return out;
  Tensor s = linear(x, [&](const Tuple& t) { return unreduced_.extra_degeneracy(t, n); });
  // tau^{m+1-i} s for i = m..1
  Tensor rotated = cyclic(unreduced_, s, m);
  for (int i = m; i >= 1; --i) {
    Tensor sum;
    for (int j = i; j <= m; ++j) add_into(sum, psi_unreduced(j, rotated, m));
    add_into(out, sum, sign(m * i + 1));
    if (i > 1) rotated = cyclic(unreduced_, rotated, m);
  }
  return out;
}

Tensor CartanOperators::to_standard(const Tensor& unreduced) const { return theta(reduced_, unreduced); }

Tensor CartanOperators::from_standard(const Tensor& x) const { return theta_inverse(*H_, x); }

Tensor CartanOperators::psi(int j, const Tensor& x, int n) const {
  return to_standard(psi_unreduced(j, from_standard(x), n));
}
Tensor CartanOperators::lie(const Tensor& x, int n) const { return to_standard(lie_unreduced(from_standard(x), n)); }
Tensor CartanOperators::e(const Tensor& x, int n) const { return to_standard(e_unreduced(from_standard(x), n)); }
Tensor CartanOperators::E_component(int j, int i, const Tensor& x, int n) const {
  return to_standard(E_component_unreduced(j, i, from_standard(x), n));
}
Tensor CartanOperators::E(const Tensor& x, int n) const { return to_standard(E_unreduced(from_standard(x), n)); }

// ---- verification ------------------------------------------------------------------

std::vector<CheckReport> verify_homotopy_formula(const CartanOperators& ops, int max_level, int samples,
                                                 unsigned seed, const Truncation& t) {
  CheckReport formula{"[e+E, b+B] = L"}, be{"[b, e] = 0"}, BE{"[B, E] = 0"}, eB{"e B expansion"},
      Be{"B e expansion"}, L{"L = B e + E d_0 + (-1)^{n+1} E d_{n+1}"}, norm{"e preserves normalized"};
  const StandardModule& M = ops.standard();
  std::mt19937 rng(seed);
  for (int n = 0; n <= max_level; ++n) {
    SampleSpace space(M, n, t, true);
    for (int s = 0; s < samples; ++s) {
      Tensor x = space.draw(rng, 2);
      std::string wit = "level " + std::to_string(n) + ": " + format(M, x, n);
      Tensor bx = hochschild_b(M, x, n);
      Tensor Bx = connes_B(M, x, n);
      Tensor ex = ops.e(x, n);
      Tensor Ex = ops.E(x, n);
      Tensor Lx = ops.lie(x, n);

      // level n + 2
      Tensor top = hochschild_b(M, ex, n + 1);
      add_into(top, ops.e(bx, n + 1));
      if (!top.empty()) be.fail(wit, format(M, top, n + 2));
      ++be.count;
      // level n - 2
      if (n >= 2) {
        Tensor bottom = connes_B(M, Ex, n - 1);
        add_into(bottom, ops.E(Bx, n - 1));
        if (!bottom.empty()) BE.fail(wit, format(M, bottom, n - 2));
        ++BE.count;
      }
      // level n
      Tensor mid = ops.E(bx, n + 1);
      add_into(mid, connes_B(M, ex, n + 1));
      if (n >= 1) {
        add_into(mid, ops.e(Bx, n - 1));
        add_into(mid, hochschild_b(M, Ex, n - 1));
      }
      add_into(mid, Lx, -1);
      if (!mid.empty()) formula.fail(wit, format(M, mid, n));
      ++formula.count;

      if (!is_normalized(M, ex, n + 1)) norm.fail(wit);
      ++norm.count;

      // e B = sum_k (-1)^{k+1} E^{n,n-k+1} d_k
      if (n >= 1) {
        Tensor diff = ops.e(Bx, n - 1);
        for (int k = 1; k <= n; ++k)
          add_into(diff, ops.E_component(n, n - k + 1, face(M, k, x, n), n + 1),
                   sign(k));
        if (!diff.empty()) eB.fail(wit, format(M, diff, n));
        ++eB.count;
      }
      // B e = sum_i (-1)^{n+ni} psi_{n-i} tau^{i+1}
      Tensor diff = connes_B(M, ex, n + 1);
      Tensor rotated = x;
      for (int i = 0; i <= n; ++i) {
        rotated = cyclic(M, rotated, n);
        add_into(diff, ops.psi(n - i, rotated, n), -sign(n + n * i));
      }
      if (!diff.empty()) Be.fail(wit, format(M, diff, n));
      ++Be.count;
      // L = B e + E d_0 + (-1)^{n+1} E d_{n+1}
      Tensor rhs = connes_B(M, ex, n + 1);
      add_into(rhs, ops.E(face(M, 0, x, n), n + 1));
      add_into(rhs, ops.E(face(M, n + 1, x, n), n + 1), sign(n + 1));
      add_into(rhs, Lx, -1);
      if (!rhs.empty()) L.fail(wit, format(M, rhs, n));
      ++L.count;
    }
  }
  return {formula, be, BE, eB, Be, L, norm};
}

CheckReport check_lie_is_ad(const CartanOperators& ops, const Word& Z, int max_level, const Truncation& t) {
  CheckReport r{"Theta L Theta^{-1} = delta(Z) Id - ad Z"};
  const StandardModule& M = ops.standard();
  const HopfAlgebra& H = M.algebra();
  Q dz = M.pair().delta(Z);
  auto words = H.basis(t);
  for (int n = 0; n <= max_level; ++n)
    for (const Tuple& tup : basis_tuples(words, n)) {
      Tensor x(tup);
      Tensor expect(tup, dz);
      for (int i = 0; i < n; ++i) {
        Tuple a = tup;
        for (const auto& [w, c] : H.mul(Z, tup[i])) {
          a[i] = w;
          expect.add(a, -c);
        }
        for (const auto& [w, c] : H.mul(tup[i], Z)) {
          a[i] = w;
          expect.add(a, c);
        }
      }
      if (ops.lie(x, n) != expect) r.fail("level " + std::to_string(n) + ": " + format(M, x, n));
      ++r.count;
    }
  return r;
}

MixedCochain mixed_boundary(const StandardModule& M, const MixedCochain& x) {
  MixedCochain out;
  for (const auto& [n, xn] : x) {
    add_into(out[n + 1], hochschild_b(M, xn, n));
    if (n >= 1) add_into(out[n - 1], connes_B(M, xn, n));
  }
  for (auto it = out.begin(); it != out.end();) it = it->second.empty() ? out.erase(it) : std::next(it);
  return out;
}

std::string format(const StandardModule& M, const MixedCochain& x) {
  std::string out;
  for (const auto& [n, xn] : x) {
    if (xn.empty()) continue;
    if (!out.empty()) out += " ; ";
    out += "[" + std::to_string(n) + "] " + format(M, xn, n);
  }
  return out.empty() ? "0" : out;
}

Contraction contract_offweight_cocycle(const CartanOperators& ops, const MixedCochain& x) {
  const StandardModule& M = ops.standard();
  Contraction out;
  std::optional<int> wt;
  bool homogeneous = true;
  for (const auto& [n, xn] : x) {
    if (xn.empty()) continue;
    auto w = weight(M, xn, n);
    if (!w || (wt && *wt != *w)) homogeneous = false;
    else wt = w;
  }
  if (!homogeneous) {
    out.reason = "input is not weight-homogeneous";
    return out;
  }
  if (!wt) {  // zero input
    out.ok = true;
    return out;
  }
  if (!is_zero(mixed_boundary(M, x))) {
    out.reason = "input is not a (b+B)-cocycle";
    return out;
  }
  // L_D acts by a scalar on x
  std::optional<Q> scalar;
  for (const auto& [n, xn] : x) {
    if (xn.empty()) continue;
    Tensor lx = ops.lie(xn, n);
    const auto& [tup, c] = *xn.begin();
    Q s = lx.coeff(tup) / c;
    if (lx != s * untagged(xn) || (scalar && *scalar != s)) {
      out.reason = "L_D does not act by a scalar on the input";
      return out;
    }
    scalar = s;
  }
  if (sgn(*scalar) == 0) {
    out.reason = "L_D vanishes on the input (weight " + std::to_string(*wt) + ")";
    return out;
  }
  Q inv = 1 / *scalar;
  MixedCochain y;
  for (const auto& [n, xn] : x) {
    if (xn.empty()) continue;
    add_into(y[n + 1], ops.e(xn, n), inv);
    if (n >= 2) add_into(y[n - 1], ops.E(xn, n), inv);
  }
  for (auto it = y.begin(); it != y.end();) it = it->second.empty() ? y.erase(it) : std::next(it);
  MixedCochain check = mixed_boundary(M, y);
  for (const auto& [n, xn] : x) add_into(check[n], xn, -1);
  if (!is_zero(check)) {
    out.reason = "primitive check failed: " + format(M, check);
    return out;
  }
  out.ok = true;
  out.primitive = std::move(y);
  return out;
}

}  // namespace hc
