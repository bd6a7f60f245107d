#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/bicocyclic.hpp"
#include "hopfcyc/family.hpp"
#include "hopfcyc/parser.hpp"

using namespace hc;

namespace {

Truncation cap(int pbw, int letters = 2) {
  Truncation t;
  t.pbw_cap = pbw;
  t.letter_cap = letters;
  t.tree_cap = 2;
  t.sigma_lo = -1;
  t.sigma_hi = 1;
  return t;
}

void require_all(const std::vector<CheckReport>& rs, const std::string& where) {
  for (const auto& r : rs) CHECK_MESSAGE(r.pass, (where + " " + r.check + ": " + r.witness + " " + r.detail));
}

Tensor map_all(const Tensor& t, int n, const HopfMap& f) {
  Tensor out = t;
  for (int i = 0; i < n; ++i) out = map_slot(out, i, f.apply);
  return out;
}

// C(K, H1) with (delta, 1) on H1 and (eps, s^-1) on K: the setting of the cover.
struct CoverSetting {
  std::shared_ptr<const PbwAlgebra> H = h1();
  std::shared_ptr<const PbwAlgebra> K = group_algebra();
  CoactionPtr rho = weight_coaction(*K, *H);
  CrossedPtr P = cocrossed_product(H, K, rho);
  ModularPair alpha_mu{H->delta(), H->one(), H->one()};
  ModularPair beta_nu{counit_character(*K), K->sigma(-1), K->sigma(1)};
  std::shared_ptr<const CrossedBicocyclic> C =
      std::make_shared<CrossedBicocyclic>(H, K, rho, alpha_mu, beta_nu);

  Slots slots(int p, int q) const {
    Slots s(p, K.get());
    for (int i = 0; i < q; ++i) s.push_back(H.get());
    return s;
  }
  ModularPair combined() const { return combined_mpi(*P, alpha_mu, beta_nu, cap(2)).pair; }
};

// C(F, U): rows are only cosimplicial.
struct BicrossedSetting {
  std::shared_ptr<const PbwAlgebra> U = u_minus();
  std::shared_ptr<const PbwAlgebra> F = f_plus();
  CrossedPtr P = bicrossed_product(U, F);
  CoactionPtr rho = CoactionPtr(P, &P->coaction());
  std::shared_ptr<const CrossedBicocyclic> C = std::make_shared<CrossedBicocyclic>(
      U, F, rho, ModularPair{U->delta(), U->one(), U->one()}, ModularPair{counit_character(*F), F->one(), F->one()},
      false);

  Slots slots(int p, int q) const {
    Slots s(p, F.get());
    for (int i = 0; i < q; ++i) s.push_back(U.get());
    return s;
  }
};

}  // namespace

TEST_CASE("horizontal cyclic operator") {
  CoverSetting S;
  const auto& C = *S.C;
  // p = 1, q = 0: S(s) nu = s^-2 for nu = s^-1
  CHECK(C.hcyclic(Tuple{S.K->sigma(1)}, 1, 0) == Tensor(Tuple{S.K->sigma(-2)}));
  // p = 1, q = 1: s (x) X -> s^-1 s^-1 s^{|X|} (x) X
  CHECK(hcyclic(C, parse_tensor(S.slots(1, 1), "s # X"), 1, 1) == parse_tensor(S.slots(1, 1), "s^-1 # X"));
  // with beta = eps and nu = 1 the p = 1, q = 0 case is the antipode
  CrossedBicocyclic plain(S.H, S.K, S.rho, S.alpha_mu, ModularPair{counit_character(*S.K), S.K->one(), S.K->one()});
  CHECK(plain.hcyclic(Tuple{S.K->sigma(1)}, 1, 0) == Tensor(Tuple{S.K->sigma(-1)}));
}

TEST_CASE("bicocyclic identities") {
  CoverSetting S;
  require_all(check_bicocyclic(S.C, 2, 2, 4, 1, cap(2)), "cover");
  BicrossedSetting B;
  require_all(check_bicocyclic(B.C, 2, 2, 4, 2, cap(2)), "U/F");
}

TEST_CASE("Psi on the cover setting") {
  CoverSetting S;
  const CrossedProduct& P = *S.P;
  // top(X (x) s) = X_(-1) s (x) X_(0) = s^2 (x) X
  Tensor top = psi(P, parse_tensor(repeat(P, 1), "X*s"), 1);
  CHECK(top == parse_tensor(S.slots(1, 1), "s^2 # X"));

  StandardModule std_mod(S.P, S.combined());
  DiagonalModule D(S.C);
  std::mt19937 rng(7);
  SampleSpace hk(std_mod, 2, cap(2), false), diag(D, 2, cap(2), false);
  for (int s = 0; s < 50; ++s) {
    Tensor y = diag.draw(rng);
    CHECK(psi(P, psi_inverse(P, y, 2), 2) == y);
    Tensor x = hk.draw(rng);
    CHECK(psi_inverse(P, psi(P, x, 2), 2) == x);
  }
  // Psi intertwines the cyclic structures
  for (int n = 0; n <= 2; ++n) {
    SampleSpace space(std_mod, n, cap(2), false);
    for (int s = 0; s < 6; ++s) {
      Tensor x = space.draw(rng, 2);
      Tensor px = psi(P, x, n);
      CHECK(psi(P, cyclic(std_mod, x, n), n) == cyclic(D, px, n));
      for (int i = 0; i <= n + 1; ++i) CHECK(psi(P, face(std_mod, i, x, n), n + 1) == face(D, i, px, n));
      for (int j = 0; j < n; ++j) CHECK(psi(P, degeneracy(std_mod, j, x, n), n - 1) == degeneracy(D, j, px, n));
    }
  }
}

TEST_CASE("Psi on the bicrossed setting") {
  BicrossedSetting B;
  const CrossedProduct& P = *B.P;
  Tensor in = parse_tensor(B.slots(2, 2), "1 # 1 # X # Y");
  CHECK(psi_inverse(P, in, 2) == parse_tensor(repeat(P, 2), "X # Y - Y*d1 # Y - Y # Y*d1"));
  CHECK(psi_inverse(P, parse_tensor(B.slots(2, 2), "1 # 1 # Y # X"), 2) ==
        parse_tensor(repeat(P, 2), "Y # X - Y # Y*d1"));
  CHECK(psi(P, psi_inverse(P, in, 2), 2) == in);

  StandardModule std_mod(B.P, ModularPair{combined_mpi(P, {B.U->delta(), B.U->one(), B.U->one()},
                                                       {counit_character(*B.F), B.F->one(), B.F->one()}, cap(2))
                                              .pair});
  DiagonalModule D(B.C);
  std::mt19937 rng(8);
  for (int n = 0; n <= 2; ++n) {
    SampleSpace space(std_mod, n, cap(2), false);
    for (int s = 0; s < 6; ++s) {
      Tensor x = space.draw(rng, 2);
      Tensor px = psi(P, x, n);
      CHECK(psi_inverse(P, px, n) == x);
      for (int i = 0; i <= n + 1; ++i) CHECK(psi(P, face(std_mod, i, x, n), n + 1) == face(D, i, px, n));
      for (int j = 0; j < n; ++j) CHECK(psi(P, degeneracy(std_mod, j, x, n), n - 1) == degeneracy(D, j, px, n));
    }
  }
}

TEST_CASE("Alexander-Whitney values") {
  BicrossedSetting B;
  const auto& C = *B.C;
  TotalCochain d1{{1, parse_tensor(B.slots(1, 0), "d1")}};
  CHECK(alexander_whitney(C, d1, 1) == parse_tensor(B.slots(1, 1), "-d1 # 1"));
  // d1 is primitive in F, so the horizontal part of b_T(d1) vanishes
  CHECK(total_b(C, d1, 1)[2].empty());

  TotalCochain xy{{0, parse_tensor(B.slots(0, 2), "X # Y - Y # X")}};
  Tensor aw = alexander_whitney(C, xy, 2);
  CHECK(aw == parse_tensor(B.slots(2, 2), "1 # 1 # X # Y - 1 # 1 # Y # X"));
  // the two halves separately, as expanded by hand
  CHECK(alexander_whitney(C, {{0, parse_tensor(B.slots(0, 2), "X # Y")}}, 2) ==
        parse_tensor(B.slots(2, 2), "1 # d1 # Y # Y + 1 # 1 # X # Y + d1 # 1 # Y # Y"));

  CoverSetting S;
  // d2 d1 (h~) = s^{|h~|-1} (x) s^{|h~|-1} (x) h~, here |h~| = 2
  Tensor h = parse_tensor(S.slots(0, 2), "X # d1*Y");
  Tensor dd = hface(*S.C, 2, hface(*S.C, 1, h, 0, 2), 1, 2);
  CHECK(dd == parse_tensor(S.slots(2, 2), "s # s # X # d1*Y"));
}

TEST_CASE("total complex and the chain-map property of AW") {
  CoverSetting S;
  require_all(check_total(S.C, 3, 4, 11, cap(2)), "cover");
  BicrossedSetting B;
  require_all(check_total(B.C, 3, 4, 12, cap(2)), "U/F");
}

TEST_CASE("transfer of classes through AW and Psi^{-1}") {
  {
    BicrossedSetting B;
    TotalCochain xy{{0, parse_tensor(B.slots(0, 2), "X # Y - Y # X")}};
    Tensor hopf = psi_inverse(*B.P, alexander_whitney(*B.C, xy, 2), 2);
    auto [phi, inv] = bicrossed_iso(*h1(), *B.P);
    CHECK(map_all(hopf, 2, inv) == parse_tensor(repeat(*h1(), 2), "X # Y - Y # X - Y*d1 # Y"));
    TotalCochain d1{{1, parse_tensor(B.slots(1, 0), "d1")}};
    CHECK(map_all(psi_inverse(*B.P, alexander_whitney(*B.C, d1, 1), 1), 1, inv) ==
          parse_tensor(*h1(), "-d1"));
  }
  CoverSetting S;
  auto cover = h1dag(0);
  auto [phi, inv] = cover_iso(*cover, *S.P);
  TotalCochain tf{{0, parse_tensor(S.slots(0, 2), "X # Y - Y # X - d1*Y # Y")}};
  Tensor aw = alexander_whitney(*S.C, tf, 2);
  CHECK(aw == parse_tensor(S.slots(2, 2), "1 # 1 # X # Y - 1 # 1 # Y # X - 1 # 1 # d1*Y # Y"));
  CHECK(map_all(psi_inverse(*S.P, aw, 2), 2, inv) ==
        parse_tensor(repeat(*cover, 2), "s^-1*X # s^-1*Y - Y # s^-1*X - s^-1*d1*Y # s^-1*Y"));
  TotalCochain d1{{0, parse_tensor(S.slots(0, 1), "d1")}};
  Tensor aw1 = alexander_whitney(*S.C, d1, 1);
  CHECK(aw1 == parse_tensor(S.slots(1, 1), "-1 # d1"));
  CHECK(map_all(psi_inverse(*S.P, aw1, 1), 1, inv) == parse_tensor(*cover, "-s^-1*d1"));
}

TEST_CASE("the module X with SAYD coefficients") {
  auto H = h1();
  auto K = group_algebra();
  auto rho = weight_coaction(*K, *H);
  auto P = cocrossed_product(H, K, rho);
  auto M = std::make_shared<CharacterModule>(*H, H->delta(), H->one());
  auto N = std::make_shared<CharacterModule>(*K, counit_character(*K), K->one());
  require_all(check_coefficient_conditions(*rho, *M, *N, cap(2)), "coefficients");
  auto X = std::make_shared<GeneralizedBicocyclic>(rho, M, N);

  // level (0, 0): tau is the identity
  Tuple unit{Word{}, Word{}};
  CHECK(X->hcyclic(unit, 0, 0) == Tensor(unit));
  CHECK(X->vcyclic(unit, 0, 0) == Tensor(unit));
  // last horizontal face at (1, 1): (n, d, m, c) -> (n, d, c_(-1) n_(-1), m, c_(0))
  Tuple t{Word{}, K->sigma(1), Word{}, H->X()};
  CHECK(X->hface(2, t, 1, 1) == Tensor(Tuple{Word{}, K->sigma(1), K->sigma(1), Word{}, H->X()}));

  require_all(check_bicocyclic(X, 2, 2, 4, 21, cap(2)), "X");

  auto MN = std::make_shared<ProductSaydModule>(P, M, N);
  require_all(check_sayd(*MN, cap(2)), "M (x) N");
  SaydCyclicModule R(MN);
  DiagonalModule D(X);
  std::mt19937 rng(22);
  for (int n = 0; n <= 2; ++n) {
    SampleSpace space(R, n, cap(2), false), diag(D, n, cap(2), false);
    for (int s = 0; s < 7; ++s) {
      Tensor y = diag.draw(rng, 2);
      CHECK(psi_generalized(*P, psi_generalized_inverse(*P, y, n), n) == y);
      Tensor x = space.draw(rng, 2);
      Tensor px = psi_generalized(*P, x, n);
      CHECK(psi_generalized_inverse(*P, px, n) == x);
      CHECK(psi_generalized(*P, cyclic(R, x, n), n) == cyclic(D, px, n));
      for (int i = 0; i <= n + 1; ++i) CHECK(psi_generalized(*P, face(R, i, x, n), n + 1) == face(D, i, px, n));
    }
  }
}
