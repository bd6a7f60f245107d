#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/crossed.hpp"
#include "hopfcyc/family.hpp"
#include "hopfcyc/parser.hpp"

#include <algorithm>

using namespace hc;

namespace {

Truncation cap(int pbw, int letters = 2) {
  Truncation t;
  t.pbw_cap = pbw;
  t.letter_cap = letters;
  t.tree_cap = 3;
  return t;
}

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

CrossedPtr h1_k() {
  static CrossedPtr P = cocrossed_product(h1(), group_algebra(), weight_coaction(*group_algebra(), *h1()));
  return P;
}

// rho(u) read off the direct presentation: (eps_U (x) id) on the first slot
// of Delta_{H1}(u) leaves F (x) U.
Tensor rho_from_h1(const PbwAlgebra& H, const PbwAlgebra& U, const PbwAlgebra& F, const Word& u) {
  Word h = H.make(0, PbwAlgebra::y_exp(u), PbwAlgebra::x_exp(u), {});
  Tensor out;
  for (const auto& [tup, c] : H.coproduct(h)) {
    const Word& a = tup[0];
    const Word& b = tup[1];
    if (PbwAlgebra::y_exp(a) || PbwAlgebra::x_exp(a)) continue;
    REQUIRE(PbwAlgebra::f_part(b).empty());
    out.add(Tuple{F.make(0, 0, 0, PbwAlgebra::f_part(a)), U.make(0, PbwAlgebra::y_exp(b), PbwAlgebra::x_exp(b), {})},
            c);
  }
  return out;
}

}  // namespace

TEST_CASE("weight coaction makes H1 a K-comodule Hopf algebra") {
  auto H = h1();
  auto K = group_algebra();
  for (const auto& r : check_comodule_hopf(*weight_coaction(*K, *H), cap(3))) CHECK_MESSAGE(r.pass, r.check);
  for (const auto& r : check_comodule_hopf(*trivial_coaction(*K, *H), cap(3))) CHECK_MESSAGE(r.pass, r.check);
  auto N2 = group_algebra(2);
  for (const auto& r : check_comodule_hopf(*weight_coaction(*N2, *H), cap(2))) CHECK_MESSAGE(r.pass, r.check);
}

TEST_CASE("corrupted coaction fails c-a-1 at (X, d1)") {
  auto H = h1();
  auto K = group_algebra();
  auto bad = corrupted_coaction(*K, *H, {{H->X(), 2}});
  auto reps = check_comodule_hopf(*bad, cap(3));
  CHECK_FALSE(reps[0].pass);
  CHECK(reps[0].check == "c-a-1");
  CHECK(contains(reps[0].failures, "X | d1"));
  // rho'(X d1) = s^2 (x) X d1 but rho'(X) rho(d1) = s^3 (x) X d1
  Tensor lhs = (*bad)(H->mul(H->X(), H->letter(1)));
  Tensor rhs = mul_slots(Slots{K.get(), H.get()}, (*bad)(H->X()), (*bad)(H->letter(1)));
  CHECK(lhs != rhs);
  CHECK(reps[1].pass);  // rho(1) = 1 (x) 1 still holds
}

TEST_CASE("iterated coaction") {
  auto H = h1();
  auto K = group_algebra();
  auto rho = weight_coaction(*K, *H);
  Tensor t = rho->iterated(H->letter(2), 2);
  CHECK(t == Tensor(Tuple{K->sigma(2), K->sigma(2), H->letter(2)}));
  CHECK(rho->iterated(H->X(), 0) == Tensor(Tuple{H->X()}));
}

TEST_CASE("cocrossed product H1 >| K") {
  auto P = h1_k();
  auto H = h1();
  auto K = group_algebra();
  Truncation t = cap(2);
  t.sigma_lo = -1;
  t.sigma_hi = 1;
  for (const auto& r : check_hopf(*P, t)) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));

  Word s = P->pair(H->one(), K->sigma(1));
  Word sinv = P->pair(H->one(), K->sigma(-1));
  CHECK(P->antipode(s) == Elem(sinv));
  CHECK(P->antipode(P->pair(H->letter(1), K->one())) == Elem(P->pair(H->letter(1), K->sigma(-1)), -1));
  CHECK(format(*P, coproduct(*P, parse_element(*P, "X"))) == "d1 # Y + s # X + X # 1");
  CHECK(format(*P, parse_element(*P, "s*X*s^-1")) == "X");

  CHECK_THROWS_AS(cocrossed_product(K, H, trivial_coaction(*H, *K)), std::invalid_argument);
}

TEST_CASE("the cover is isomorphic to the cocrossed product") {
  for (int N : {0, 2, 3}) {
    auto C = h1dag(N);
    auto K = group_algebra(N);
    auto P = cocrossed_product(h1(), K, weight_coaction(*K, *h1()));
    auto [phi, inv] = cover_iso(*C, *P);
    Truncation t = cap(2);
    t.sigma_lo = -1;
    t.sigma_hi = 1;
    for (const auto& r : check_hopf_iso(phi, inv, C->basis(t))) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));
    // Delta(X) in the cover maps onto the cocrossed coproduct
    Tensor d = C->coproduct(C->X());
    Tensor mapped = map_slot(map_slot(d, 0, phi.apply), 1, phi.apply);
    CHECK(mapped == P->coproduct(P->pair(h1()->X(), K->one())));
  }
  auto C = hckdag(2);
  auto K = group_algebra(2);
  auto P = cocrossed_product(hck(), K, weight_coaction(*K, *hck()));
  auto [phi, inv] = cover_iso(*C, *P);
  for (const auto& r : check_hopf_iso(phi, inv, C->basis(cap(2)))) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));
}

TEST_CASE("bicrossed product U >< F") {
  auto U = u_minus();
  auto F = f_plus();
  auto B = bicrossed_product(U, F);
  auto E = [&](const std::string& s) { return parse_element(*B, s); };

  CHECK(commutator(*B, E("Y"), E("X")) == E("X"));
  for (int k = 1; k <= 4; ++k)
    CHECK(commutator(*B, E("X"), E("d" + std::to_string(k))) == E("d" + std::to_string(k + 1)));
  CHECK(commutator(*B, E("Y"), E("d3")) == E("3*d3"));
  CHECK(B->coaction()(U->one()) == Tensor(Tuple{F->one(), U->one()}));
  CHECK(B->coaction()(U->Y()) == Tensor(Tuple{F->one(), U->Y()}));
  CHECK(format(Slots{F.get(), U.get()}, B->coaction()(U->X())) == "d1 # Y + 1 # X");

  Truncation t = cap(3);
  for (const auto& r : check_hopf(*B, t)) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));

  auto [phi, inv] = bicrossed_iso(*h1(), *B);
  for (const auto& r : check_hopf_iso(phi, inv, h1()->basis(cap(2)))) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));
}

TEST_CASE("matched-pair coaction agrees with the direct presentation") {
  auto U = u_minus();
  auto F = f_plus();
  auto B = bicrossed_product(U, F);
  const Coaction& rho = B->coaction();
  for (const Word& u : U->basis(cap(4))) CHECK(rho(u) == rho_from_h1(*h1(), *U, *F, u));

  // rho(u1 u2) by the matched-pair rule, for every pair of capped basis words
  const RightAction& act = *B->action();
  auto words = U->basis(cap(2));
  for (const Word& a : words)
    for (const Word& b : words) {
      Tensor rule;
      for (const auto& [ta, ca] : rho(a))
        for (const auto& [tb, cb] : U->coproduct(b))
          for (const auto& [tr, cr] : rho(tb[1])) {
            Elem k = mul(*F, act.act(ta[0], tb[0]), elem(*F, tr[0]));
            Elem h = U->mul(ta[1], tr[1]);
            for (const auto& [kw, kc] : k)
              for (const auto& [hw, hcf] : h) rule.add(Tuple{kw, hw}, ca * cb * cr * kc * hcf);
          }
      CHECK(rule == rho(U->mul(a, b)));
    }
}

TEST_CASE("H1s and H_CK as bicrossed products") {
  auto U = u_minus();
  auto Bz = bicrossed_product(U, z_algebra());
  auto E = [&](const std::string& s) { return parse_element(*Bz, s); };
  CHECK(mul(*Bz, E("X"), E("Z")) == E("Z*X + 1/2*Z^2"));
  CHECK(commutator(*Bz, E("Y"), E("Z")) == E("Z"));
  auto [phi, inv] = bicrossed_iso(*h1s(), *Bz);
  for (const auto& r : check_hopf_iso(phi, inv, h1s()->basis(cap(3)))) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));
  CHECK(antipode(*Bz, E("X")) == E("Z*Y - X"));

  auto Bt = bicrossed_product(U, hrt());
  auto T = [&](const std::string& s) { return parse_element(*Bt, s); };
  CHECK(commutator(*Bt, T("X"), T("dT[]")) == T("dT[[]]"));
  CHECK(commutator(*Bt, T("Y"), T("dT[[]]")) == T("2*dT[[]]"));
  CHECK(format(Slots{hrt().get(), U.get()}, Bt->coaction()(U->X())) == "dT[] # Y + 1 # X");
  auto [p2, i2] = bicrossed_iso(*hck(), *Bt);
  for (const auto& r : check_hopf_iso(p2, i2, hck()->basis(cap(2)))) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));

  CHECK_THROWS_AS(bicrossed_product(h1(), f_plus()), std::invalid_argument);
}

TEST_CASE("combined modular pairs") {
  auto P = h1_k();
  auto H = h1();
  auto K = group_algebra();
  ModularPair dh{H->delta(), H->one(), H->one()};
  Truncation t = cap(2);
  t.sigma_lo = -1;
  t.sigma_hi = 1;

  for (int k : {-1, 0, 1}) {
    ModularPair ek{counit_character(*K), K->sigma(k), K->sigma(-k)};
    CombinedMpi m = combined_mpi(*P, dh, ek, t);
    CHECK(m.ok());
    CHECK(m.pair.sigma == P->pair(H->one(), K->sigma(k)));
    auto rep = check_mpi(*P, m.pair, t);
    CHECK_MESSAGE(rep.pass, (rep.witness + " " + rep.detail));
  }

  ModularPair b2{make_character(*K, "beta", {{"s", 2}}), K->one(), K->one()};
  CombinedMpi bad = combined_mpi(*P, dh, b2, t);
  CHECK_FALSE(bad.ok());
  CHECK(bad.preconditions[0].pass);
  CHECK(bad.preconditions[1].pass);
  CHECK_FALSE(bad.preconditions[2].pass);
  CHECK(bad.preconditions[2].witness == "X");
}

TEST_CASE("colinearity of twisted antipodes") {
  auto P = h1_k();
  auto H = h1();
  auto K = group_algebra();
  const Coaction& rho = P->coaction();
  Character d = H->delta();
  CHECK(check_colinear(rho, d, cap(3)).pass);
  for (const Word& h : H->basis(cap(3))) {
    // (id (x) S_delta) rho(h) = rho(S_delta(h))
    Tensor l = map_slot(rho(h), 1, [&](const Word& v) { return twisted_antipode(*H, d, v); });
    CHECK(l == rho(twisted_antipode(*H, d, h)));
  }
  // S_{delta (x) eps}(h >| k) = S_delta(h_(0)) >| S(h_(-1) k)
  Character ab{"ab", [&](const Word& w) -> Q {
                 auto [h, k] = unpack_pair(w);
                 return d(h) * K->counit(k);
               }};
  Truncation t = cap(2);
  t.sigma_lo = -1;
  t.sigma_hi = 1;
  for (const Word& w : P->basis(t)) {
    auto [h, k] = unpack_pair(w);
    Elem rhs(P->tag());
    for (const auto& [tr, c] : rho(h))
      for (const auto& [hw, hcf] : twisted_antipode(*H, d, tr[1]))
        for (const auto& [kw, kc] : antipode(*K, K->mul(tr[0], k))) rhs.add(P->pair(hw, kw), c * hcf * kc);
    CHECK(twisted_antipode(*P, ab, w) == rhs);
  }
}

TEST_CASE("SAYD modules") {
  auto H = h1();
  auto K = group_algebra();
  Truncation t = cap(2);
  CharacterModule m(*H, H->delta(), H->one());
  for (const auto& r : check_sayd(m, t)) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));

  CharacterModule bad(*H, make_character(*H, "delta'", {{"Y", 2}}), H->one());
  auto reps = check_sayd(bad, t);
  CHECK(reps[0].pass);
  CHECK_FALSE(reps[2].pass);
  CHECK(reps[2].witness == "1 | X");

  auto C = h1dag(2);
  for (int k : {0, 1}) {
    CharacterModule mk(*C, C->delta(), C->sigma(k));
    for (const auto& r : check_sayd(mk, t)) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));
  }

  Truncation small = cap(1);
  small.sigma_lo = -1;
  small.sigma_hi = 1;
  auto rho = weight_coaction(*K, *H);
  for (int q : {0, 1, 2}) {
    TensorPowerModule Mq(rho, counit_character(*K), K->sigma(-1), q);
    for (const auto& r : check_sayd(Mq, small)) CHECK_MESSAGE(r.pass, (r.check + " " + r.witness));
  }
  // a character that is not stable breaks stability only
  TensorPowerModule unstable(rho, make_character(*K, "beta", {{"s", 2}}), K->sigma(-1), 1);
  auto ur = check_sayd(unstable, small);
  CHECK(ur[2].pass);
  CHECK_FALSE(ur[3].pass);
}
