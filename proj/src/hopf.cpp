#include "hopfcyc/hopf.hpp"

#include <algorithm>
#include <atomic>

namespace hc {

namespace {
std::atomic<int> next_tag{1};
}

HopfAlgebra::HopfAlgebra(std::string name) : name_(std::move(name)), tag_(next_tag++) {}

Elem unit(const HopfAlgebra& H) { return Elem(H.one(), 1, H.tag()); }

Elem elem(const HopfAlgebra& H, const Word& w, const Q& c) { return Elem(w, c, H.tag()); }

Elem mul(const HopfAlgebra& H, const Elem& a, const Elem& b) {
  Elem out(H.tag());
  out.unify(a.tag());
  out.unify(b.tag());
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b) out.add(H.mul(wa, wb), ca * cb);
  return out;
}

Elem power(const HopfAlgebra& H, const Elem& a, int n) {
  Elem r = unit(H);
  for (int i = 0; i < n; ++i) r = mul(H, r, a);
  return r;
}

Elem commutator(const HopfAlgebra& H, const Elem& a, const Elem& b) { return mul(H, a, b) - mul(H, b, a); }

Tensor coproduct(const HopfAlgebra& H, const Elem& x) {
  Tensor out(H.tag());
  for (const auto& [w, c] : x) out.add(H.coproduct(w), c);
  return out;
}

Q counit(const HopfAlgebra& H, const Elem& x) {
  Q s = 0;
  for (const auto& [w, c] : x) s += c * H.counit(w);
  return s;
}

Elem antipode(const HopfAlgebra& H, const Elem& x) {
  Elem out(H.tag());
  for (const auto& [w, c] : x) out.add(H.antipode(w), c);
  return out;
}

std::optional<int> weight(const HopfAlgebra& H, const Elem& x) {
  std::optional<int> wt;
  for (const auto& [w, c] : x) {
    int k = H.weight(w);
    if (wt && *wt != k) return std::nullopt;
    wt = k;
  }
  return wt ? wt : std::optional<int>(0);
}

std::string format(const HopfAlgebra& H, const Elem& x) {
  Tensor t(H.tag());
  for (const auto& [w, c] : x) t.add(Tuple{w}, c);
  return format(Slots{&H}, t);
}

Tensor iterated_coproduct(const HopfAlgebra& H, const Word& w, int n) {
  if (n == 0) return scalar_tensor(H.counit(w));
  Tensor t(Tuple{w}, 1, H.tag());
  for (int k = 1; k < n; ++k) t = expand_slot(t, k - 1, [&](const Word& v) { return H.coproduct(v); });
  return t;
}

Slots repeat(const HopfAlgebra& H, int n) { return Slots(static_cast<std::size_t>(n), &H); }

Tensor expand_slot(const Tensor& t, int i, const std::function<Tensor(const Word&)>& f) {
  Tensor out(t.tag());
  for (const auto& [tup, c] : t) {
    Tensor img = f(tup[i]);
    for (const auto& [part, d] : img) {
      Tuple r;
      r.reserve(tup.size() + part.size());
      r.insert(r.end(), tup.begin(), tup.begin() + i);
      r.insert(r.end(), part.begin(), part.end());
      r.insert(r.end(), tup.begin() + i + 1, tup.end());
      out.add(r, c * d);
    }
  }
  return out;
}

Tensor map_slot(const Tensor& t, int i, const std::function<Elem(const Word&)>& f) {
  Tensor out(t.tag());
  for (const auto& [tup, c] : t) {
    Elem img = f(tup[i]);
    Tuple r = tup;
    for (const auto& [w, d] : img) {
      r[i] = w;
      out.add(r, c * d);
    }
  }
  return out;
}

Tensor mul_slots(const Slots& S, const Tuple& a, const Tuple& b) {
  Tensor acc = scalar_tensor(1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    Elem p = S[i]->mul(a[i], b[i]);
    Tensor next;
    for (const auto& [tup, c] : acc)
      for (const auto& [w, d] : p) {
        Tuple r = tup;
        r.push_back(w);
        next.add(r, c * d);
      }
    acc = std::move(next);
    if (acc.empty()) break;
  }
  return acc;
}

Tensor mul_slots(const Slots& S, const Tensor& a, const Tensor& b) {
  Tensor out(a.tag());
  out.unify(b.tag());
  for (const auto& [ta, ca] : a)
    for (const auto& [tb, cb] : b) out.add(mul_slots(S, ta, tb), ca * cb);
  return out;
}

std::string format_with(const Tensor& t, const SlotFormat& f) {
  if (t.empty()) return "0";
  // Display order: higher total PBW degree first, then the canonical key order.
  struct Row {
    int degree;
    std::string body;
    Q coeff;
  };
  std::vector<Row> rows;
  for (const auto& [tup, c] : t) {
    Row r{0, {}, c};
    for (std::size_t i = 0; i < tup.size(); ++i) {
      auto [text, d] = f(i, tup[i]);
      if (i) r.body += " # ";
      r.body += text;
      r.degree += d;
    }
    if (tup.empty()) r.body = "1";
    rows.push_back(std::move(r));
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) { return a.degree > b.degree; });
  std::string out;
  bool first = true;
  for (const Row& r : rows) {
    Q a = abs(r.coeff);
    if (first)
      out += sgn(r.coeff) < 0 ? "-" : "";
    else
      out += sgn(r.coeff) < 0 ? " - " : " + ";
    first = false;
    if (a != 1)
      out += r.body == "1" ? a.get_str() : a.get_str() + "*" + r.body;
    else
      out += r.body;
  }
  return out;
}

std::string format(const Slots& S, const Tensor& t) {
  return format_with(t, [&](std::size_t i, const Word& w) {
    return std::pair<std::string, int>{S.at(i)->format(w), S.at(i)->pbw_degree(w)};
  });
}

std::string format(const HopfAlgebra& H, const Tensor& t) { return format(repeat(H, std::max(0, degree(t))), t); }

Q Character::operator()(const Elem& x) const {
  Q s = 0;
  for (const auto& [w, c] : x) s += c * value(w);
  return s;
}

Character make_character(const HopfAlgebra& H, std::string name,
                         const std::vector<std::pair<std::string, Q>>& values) {
  std::vector<std::pair<Word, Q>> table;
  for (const auto& [tok, v] : values) {
    auto g = H.generator(tok);
    if (!g) throw std::invalid_argument("character: unknown generator " + tok);
    table.emplace_back(*g, v);
  }
  const HopfAlgebra* h = &H;
  return Character{std::move(name), [h, table](const Word& w) {
                     Q r = 1;
                     for (const auto& [g, e] : h->factor(w)) {
                       Q v = h->counit(g);
                       for (const auto& [tw, tv] : table)
                         if (tw == g) v = tv;
                       if (e < 0) {
                         if (sgn(v) == 0) throw std::domain_error("character not invertible on a group-like");
                         v = 1 / v;
                       }
                       for (int i = 0; i < std::abs(e); ++i) r *= v;
                     }
                     return r;
                   }};
}

Character counit_character(const HopfAlgebra& H) {
  const HopfAlgebra* h = &H;
  return Character{"eps", [h](const Word& w) { return h->counit(w); }};
}

Elem twisted_antipode(const HopfAlgebra& H, const Character& delta, const Word& w) {
  Elem out(H.tag());
  for (const auto& [tup, c] : H.coproduct(w)) {
    Q d = delta(tup[0]);
    if (sgn(d) != 0) out.add(H.antipode(tup[1]), c * d);
  }
  return out;
}

Elem twisted_antipode(const HopfAlgebra& H, const Character& delta, const Elem& x) {
  Elem out(H.tag());
  for (const auto& [w, c] : x) out.add(twisted_antipode(H, delta, w), c);
  return out;
}

bool all_pass(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs)
    if (!r.pass) return false;
  return true;
}

std::vector<CheckReport> check_hopf(const HopfAlgebra& H, const Truncation& t) {
  CheckReport coassoc{"coassociativity"}, cou{"counit"}, anti{"antipode"};
  auto cop = [&](const Word& v) { return H.coproduct(v); };
  auto eps = [&](const Word& v) { return scalar_tensor(H.counit(v)); };
  for (const Word& w : H.basis(t)) {
    Tensor d = H.coproduct(w);
    if (expand_slot(d, 0, cop) != expand_slot(d, 1, cop)) coassoc.fail(H.format(w));
    Tensor tw(Tuple{w}, 1);
    if (expand_slot(d, 0, eps) != tw || expand_slot(d, 1, eps) != tw) cou.fail(H.format(w));
    Elem left(H.tag()), right(H.tag());
    for (const auto& [tup, c] : d) {
      left.add(mul(H, H.antipode(tup[0]), elem(H, tup[1])), c);
      right.add(mul(H, elem(H, tup[0]), H.antipode(tup[1])), c);
    }
    Elem expect = elem(H, H.one(), H.counit(w));
    if (left != expect || right != expect)
      anti.fail(H.format(w), "S(w1)w2 = " + format(H, left) + ", w1 S(w2) = " + format(H, right));
    ++coassoc.count;
    ++cou.count;
    ++anti.count;
  }
  return {coassoc, cou, anti};
}

CheckReport check_associativity(const HopfAlgebra& H, const std::vector<Word>& words) {
  CheckReport r{"associativity"};
  for (const Word& a : words)
    for (const Word& b : words)
      for (const Word& c : words) {
        Elem ab = H.mul(a, b), bc = H.mul(b, c);
        if (mul(H, ab, elem(H, c)) != mul(H, elem(H, a), bc))
          r.fail(H.format(a) + " | " + H.format(b) + " | " + H.format(c));
        ++r.count;
      }
  return r;
}

CheckReport check_character(const HopfAlgebra& H, const Character& chi, const Truncation& t) {
  CheckReport r{"character:" + chi.name};
  auto words = H.basis(t);
  for (const Word& a : words)
    for (const Word& b : words) {
      if (chi(H.mul(a, b)) != chi(a) * chi(b)) r.fail(H.format(a) + " | " + H.format(b));
      ++r.count;
    }
  return r;
}

CheckReport check_mpi(const HopfAlgebra& H, const ModularPair& pair, const Truncation& t) {
  CheckReport r{"mpi"};
  Tensor ds = H.coproduct(pair.sigma);
  if (ds != Tensor(Tuple{pair.sigma, pair.sigma}) || H.counit(pair.sigma) != 1) {
    r.fail(H.format(pair.sigma), "sigma is not group-like");
    return r;
  }
  if (pair.delta(pair.sigma) != 1) {
    r.fail(H.format(pair.sigma), "delta(sigma) != 1");
    return r;
  }
  if (H.mul(pair.sigma, pair.sigma_inv) != unit(H)) {
    r.fail(H.format(pair.sigma_inv), "sigma_inv is not inverse to sigma");
    return r;
  }
  for (const Word& w : H.basis(t)) {
    Elem s2 = twisted_antipode(H, pair.delta, twisted_antipode(H, pair.delta, w));
    Elem conj = mul(H, H.mul(pair.sigma, w), elem(H, pair.sigma_inv));
    if (s2 != conj) r.fail(H.format(w), "S_delta^2 = " + format(H, s2) + ", conjugate = " + format(H, conj));
    ++r.count;
  }
  return r;
}

}  // namespace hc
