#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/family.hpp"
#include "hopfcyc/parser.hpp"

#include <random>

using namespace hc;

namespace {

Elem P(const HopfAlgebra& H, const std::string& s) { return parse_element(H, s); }
Tensor T(const HopfAlgebra& H, const std::string& s) { return parse_tensor(H, s); }

// Independent normal form: bubble adjacent letters into the order
// Y < X < letter 1 < letter 2 < ... using only the defining relations.
// Letters: -2 = Y, -1 = X, k > 0 = F-letter k.  `rel(b, a)` returns b*a - a*b
// for a < b as a combination of letter strings.
using Str = std::vector<int>;
using StrComb = std::map<Str, Q>;

StrComb rewrite(StrComb in, const std::function<std::vector<std::pair<Str, Q>>(int, int)>& comm) {
  StrComb done;
  while (!in.empty()) {
    auto it = in.begin();
    Str s = it->first;
    Q c = it->second;
    in.erase(it);
    if (c == 0) continue;
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] <= s[i + 1]) ++i;
    if (i + 1 >= s.size()) {
      done[s] += c;
      continue;
    }
    // s[i] > s[i+1]:  b a = a b + [b, a]
    Str swapped = s;
    std::swap(swapped[i], swapped[i + 1]);
    in[swapped] += c;
    for (const auto& [mid, k] : comm(s[i], s[i + 1])) {
      Str t(s.begin(), s.begin() + i);
      t.insert(t.end(), mid.begin(), mid.end());
      t.insert(t.end(), s.begin() + i + 2, s.end());
      in[t] += c * k;
    }
  }
  return done;
}

// [b, a] for b > a in H1
std::vector<std::pair<Str, Q>> h1_comm(int b, int a) {
  if (a == -2 && b == -1) return {{{-1}, -1}};        // X Y - Y X = -X
  if (a == -2 && b > 0) return {{{b}, Q(-b)}};        // d_k Y - Y d_k = -k d_k
  if (a == -1 && b > 0) return {{{b + 1}, -1}};       // d_k X - X d_k = -d_{k+1}
  return {};
}

std::vector<std::pair<Str, Q>> h1s_comm(int b, int a) {
  if (a == -2 && b == -1) return {{{-1}, -1}};
  if (a == -2 && b == 1) return {{{1}, -1}};
  if (a == -1 && b == 1) return {{{1, 1}, Q(-1, 2)}};  // Z X - X Z = -Z^2/2
  return {};
}

Elem to_elem(const PbwAlgebra& H, const StrComb& c) {
  Elem out(H.tag());
  for (const auto& [s, k] : c) {
    int p = 0, q = 0;
    FMono f;
    for (int l : s) {
      if (l == -2)
        ++p;
      else if (l == -1)
        ++q;
      else
        f = fmul(f, fletter(l));
    }
    out.add(H.make(0, p, q, f), k);
  }
  return out;
}

Word letter_word(const PbwAlgebra& H, int l) { return l == -2 ? H.Y() : l == -1 ? H.X() : H.letter(l); }

void confluence(const PbwAlgebra& H, int max_letter, std::vector<std::pair<Str, Q>> (*comm)(int, int)) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 200; ++trial) {
    int len = 1 + static_cast<int>(rng() % 6);
    Str s;
    for (int i = 0; i < len; ++i) {
      int r = static_cast<int>(rng() % (2 + max_letter));
      s.push_back(r < 2 ? r - 2 : r - 1);
    }
    Elem left = unit(H), right = unit(H);
    for (int l : s) left = mul(H, left, elem(H, letter_word(H, l)));
    for (auto it = s.rbegin(); it != s.rend(); ++it) right = mul(H, elem(H, letter_word(H, *it)), right);
    Elem oracle = to_elem(H, rewrite({{s, 1}}, comm));
    CHECK(left == oracle);
    CHECK(right == oracle);
  }
}

}  // namespace

TEST_CASE("normal form agrees with naive rewriting in any association order") {
  confluence(*h1(), 3, h1_comm);
  confluence(*h1s(), 1, h1s_comm);
}

TEST_CASE("basic H1 relations") {
  auto& H = *h1();
  CHECK(format(H, P(H, "X*Y")) == "Y*X - X");
  CHECK(P(H, "d1*X") == P(H, "X*d1 - d2"));
  CHECK(P(H, "d2*Y") == P(H, "Y*d2 - 2*d2"));
  CHECK(P(H, "d1*d2") == P(H, "d2*d1"));
}

TEST_CASE("weights are ad-Y eigenvalues") {
  auto& H = *h1();
  for (const Word& w : H.basis(Truncation{3, {}, 3, 3})) {
    Elem e = elem(H, w);
    CHECK(commutator(H, elem(H, H.Y()), e) == Q(H.weight(w)) * e);
  }
  CHECK(weight(H, P(H, "X")) == 1);
  CHECK(weight(H, P(H, "d2")) == 2);
  CHECK(weight(H, P(H, "Y^3")) == 0);
  CHECK_FALSE(weight(H, P(H, "X + Y")).has_value());
  auto& D = *h1dag();
  CHECK(weight(D, P(D, "s^-1*d1")) == 1);
}

TEST_CASE("H1 coproduct and antipode values") {
  auto& H = *h1();
  CHECK(coproduct(H, P(H, "X")) == T(H, "X # 1 + 1 # X + d1 # Y"));
  CHECK(coproduct(H, P(H, "1")) == T(H, "1 # 1"));
  // oracle: Delta(d2) = [Delta X, Delta d1] in H (x) H
  Slots S{&H, &H};
  Tensor dX = coproduct(H, P(H, "X")), dd1 = coproduct(H, P(H, "d1"));
  Tensor oracle = mul_slots(S, dX, dd1) - mul_slots(S, dd1, dX);
  CHECK(coproduct(H, P(H, "d2")) == oracle);
  CHECK(oracle == T(H, "d2 # 1 + d1 # d1 + 1 # d2"));

  CHECK(antipode(H, P(H, "X")) == P(H, "-X + d1*Y"));
  CHECK(antipode(H, P(H, "1")) == P(H, "1"));
  Elem sX = antipode(H, P(H, "X")), sd1 = antipode(H, P(H, "d1"));
  Elem s_d2 = mul(H, sd1, sX) - mul(H, sX, sd1);  // S(X d1 - d1 X)
  CHECK(antipode(H, P(H, "d2")) == s_d2);
  CHECK(s_d2 == P(H, "d1^2 - d2"));
}

TEST_CASE("twisted antipode values") {
  auto& H = *h1();
  CHECK(twisted_antipode(H, H.delta(), P(H, "Y")) == P(H, "-Y + 1"));
  CHECK(twisted_antipode(H, H.delta(), P(H, "1")) == P(H, "1"));
  auto& D = *h1dag();
  CHECK(twisted_antipode(D, D.delta(), P(D, "X")) == P(D, "-s^-1*(X - d1*Y)"));
  CHECK(twisted_antipode(D, D.delta(), P(D, "Y")) == P(D, "-Y + 1"));
  CHECK(twisted_antipode(D, D.delta(), P(D, "d1")) == P(D, "-s^-1*d1"));
}

TEST_CASE("H1s values") {
  auto& H = *h1s();
  CHECK(P(H, "X*Z") == P(H, "Z*X + 1/2*Z^2"));
  CHECK(antipode(H, P(H, "X")) == P(H, "-X + Z*Y"));
  CHECK(coproduct(H, P(H, "Z")) == T(H, "Z # 1 + 1 # Z"));
  CHECK(coproduct(H, P(H, "X")) == T(H, "X # 1 + 1 # X + Z # Y"));
}

TEST_CASE("cover values") {
  auto& D = *h1dag();
  CHECK(coproduct(D, P(D, "d1")) == T(D, "d1 # 1 + s # d1"));
  CHECK(coproduct(D, P(D, "X")) == T(D, "X # 1 + s # X + d1 # Y"));
  CHECK(antipode(D, P(D, "X")) == P(D, "s^-1*(-X + d1*Y)"));
  CHECK(antipode(D, P(D, "d1")) == P(D, "-s^-1*d1"));
  auto& D2 = *h1dag(2);
  CHECK(P(D2, "s^2") == P(D2, "1"));
  CHECK(P(D2, "s^-1") == P(D2, "s"));
  CHECK(format(D2, P(D2, "s^3*d1")) == "s*d1");
}

TEST_CASE("Hopf axioms on capped bases") {
  Truncation t;
  t.pbw_cap = 3;
  t.letter_cap = 3;
  t.sigma_lo = -1;
  t.sigma_hi = 1;
  for (auto H : {h1(), h1s(), h1dag(), h1dag(2), h1dag(3), group_algebra(), group_algebra(3), u_minus(), f_plus(), z_algebra()}) {
    CAPTURE(H->name());
    for (const auto& r : check_hopf(*H, t)) {
      CAPTURE(r.check);
      CAPTURE(r.witness);
      CHECK(r.pass);
      CHECK(r.count > 0);
    }
  }
}

TEST_CASE("grading: products add weights, coproduct and antipode preserve them") {
  Truncation t;
  t.pbw_cap = 3;
  t.letter_cap = 3;
  for (auto H : {h1(), h1s(), h1dag(2)}) {
    auto words = H->basis(t);
    for (const Word& w : words) {
      for (const auto& [tup, c] : H->coproduct(w)) CHECK(H->weight(tup[0]) + H->weight(tup[1]) == H->weight(w));
      CHECK(weight(*H, H->antipode(w)) == H->weight(w));
    }
    for (std::size_t i = 0; i < words.size(); i += 3)
      for (std::size_t j = 0; j < words.size(); j += 5)
        CHECK(weight(*H, H->mul(words[i], words[j])) == H->weight(words[i]) + H->weight(words[j]));
  }
}

TEST_CASE("the modular character is multiplicative") {
  Truncation t;
  t.pbw_cap = 2;
  t.letter_cap = 2;
  for (auto H : {h1(), h1s(), h1dag(3)}) CHECK(check_character(*H, H->delta(), t).pass);
  auto& H = *h1();
  Character gen = make_character(H, "delta", {{"Y", 1}});
  for (const Word& w : H.basis(t)) CHECK(gen(w) == H.delta()(w));
}

TEST_CASE("modular pairs in involution") {
  Truncation t;
  t.pbw_cap = 3;
  t.letter_cap = 3;
  auto& H = *h1();
  CHECK(check_mpi(H, {H.delta(), H.one(), H.one()}, t).pass);
  for (int N : {2, 3})
    for (int k = -2; k <= 2; ++k) {
      auto& D = *h1dag(N);
      CHECK(check_mpi(D, {D.delta(), D.sigma(k), D.sigma(-k)}, t).pass);
    }
  auto& D = *h1dag();
  for (int k = -2; k <= 2; ++k) CHECK(check_mpi(D, {D.delta(), D.sigma(k), D.sigma(-k)}, t).pass);
  // S_delta^2 = Id on the cover
  for (const Word& w : D.basis(t))
    CHECK(twisted_antipode(D, D.delta(), twisted_antipode(D, D.delta(), w)) == elem(D, w));
}

TEST_CASE("a non-modular character is rejected with the first failing word") {
  auto& H = *h1();
  Truncation t;
  t.pbw_cap = 3;
  t.letter_cap = 3;
  // S^2(X) = X + d1, so (eps, 1) fails already on X
  CHECK(antipode(H, antipode(H, P(H, "X"))) == P(H, "X + d1"));
  auto r = check_mpi(H, {counit_character(H), H.one(), H.one()}, t);
  CHECK_FALSE(r.pass);
  CHECK(r.witness == "X");
}

TEST_CASE("capped indices raise instead of truncating") {
  auto& H = *h1();
  CHECK_THROWS_AS(P(H, "d99"), CapExceeded);
  CHECK_THROWS_AS(coproduct(H, P(H, "d24*X")), CapExceeded);
}

TEST_CASE("parser round trips and errors") {
  auto& H = *h1();
  Tensor tf = T(H, "X # Y - Y # X - d1*Y # Y");
  CHECK(format(H, tf) == "-Y*d1 # Y + d1 # Y + X # Y - Y # X");
  CHECK(T(H, format(H, tf)) == tf);
  auto& D = *h1dag();
  CHECK(format(D, P(D, "s^-1*d1")) == "s^-1*d1");
  CHECK(format(*hck(), P(*hck(), "dT[[]]")) == "dT[[]]");
  CHECK_THROWS_AS(P(H, "X +"), ParseError);
  CHECK_THROWS_AS(P(H, "Q"), ParseError);
  CHECK_THROWS_AS(P(H, "s"), ParseError);
  CHECK_THROWS_AS(T(H, "X # Y + X"), ParseError);
  CHECK(format(H, P(H, "1/2*X - 3/4")) == "1/2*X - 3/4");
}
