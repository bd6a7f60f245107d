#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/cocyclic.hpp"
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

std::shared_ptr<const PbwAlgebra> family(const std::string& f) {
  if (f == "h1") return h1();
  if (f == "h1s") return h1s();
  if (f == "h1dag") return h1dag(2);
  if (f == "hck") return hck();
  return hckdag(2);
}

void require_all(const std::vector<CheckReport>& rs, const std::string& where) {
  for (const auto& r : rs) CHECK_MESSAGE(r.pass, (where + " " + r.check + ": " + r.witness + " " + r.detail));
}

}  // namespace

TEST_CASE("standard module operators on small elements") {
  auto H = h1();
  StandardModule M(H, delta_pair(*H, 0));
  Tensor d1 = parse_tensor(*H, "d1");
  CHECK(format(M, face(M, 0, d1, 1), 2) == "1 # d1");
  CHECK(cyclic(M, d1, 1) == parse_tensor(*H, "-d1"));
  CHECK(hochschild_b(M, d1, 1).empty());
  // sigma_j applies the counit to slot j+1 (1-based)
  CHECK(degeneracy(M, 1, parse_tensor(*H, "X # 1"), 2) == parse_tensor(*H, "X"));
  CHECK(degeneracy(M, 0, parse_tensor(*H, "X # 1"), 2).empty());
  CHECK(connes_B(M, parse_tensor(*H, "1"), 0).empty());

  // Face-sum oracle: b(X) = 1 (x) X - Delta(X) + X (x) 1.
  Word X = *H->generator("X");
  Tensor oracle;
  oracle.add(Tuple{H->one(), X}, 1);
  for (const auto& [tup, c] : H->coproduct(X)) oracle.add(tup, -c);
  oracle.add(Tuple{X, H->one()}, 1);
  Tensor bX = hochschild_b(M, parse_tensor(*H, "X"), 1);
  CHECK(bX == oracle);
  CHECK(bX == parse_tensor(*H, "-d1 # Y"));
}

TEST_CASE("named cocycles are cyclic cocycles") {
  for (const auto& nc : named_cocycles()) {
    auto H = family(nc.family);
    StandardModule M(H, delta_pair(*H, nc.sigma_power));
    Tensor x = parse_tensor(repeat(*H, nc.level), nc.expression);
    require_all(verify_cocycle(M, x, nc.level), nc.name);
  }
  CHECK(find_cocycle("TF") != nullptr);
  CHECK(find_cocycle("nope") == nullptr);
}

TEST_CASE("the dagger Godbillon-Vey class") {
  auto H = h1dag(0);
  StandardModule M(H, delta_pair(*H, -1));
  Tensor gv = parse_tensor(*H, "-s^-1*d1");
  CHECK(cyclic(M, gv, 1) == parse_tensor(*H, "s^-1*d1"));
  // The same class with the untwisted pair is not cyclic.
  StandardModule wrong(H, delta_pair(*H, 0));
  CHECK_FALSE(all_pass(verify_cocycle(wrong, gv, 1)));
}

TEST_CASE("identity suite on standard modules") {
  require_all(check_cocyclic(StandardModule(h1(), delta_pair(*h1(), 0)), 3, 6, 1, cap(2)), "h1");
  require_all(check_cocyclic(StandardModule(h1s(), delta_pair(*h1s(), 0)), 3, 6, 2, cap(2)), "h1s");
  auto D = h1dag(2);
  require_all(check_cocyclic(StandardModule(D, delta_pair(*D, -1)), 3, 6, 3, cap(2)), "h1dag|2");
  require_all(check_cocyclic(StandardModule(D, delta_pair(*D, 1)), 2, 6, 4, cap(2)), "h1dag|2 k=1");
  require_all(check_cocyclic(StandardModule(hck(), delta_pair(*hck(), 0)), 2, 6, 5, cap(2)), "hck");
}

TEST_CASE("a pair that is not in involution breaks tau^{n+1} = id") {
  auto H = h1();
  ModularPair bad{counit_character(*H), H->one(), H->one()};
  CHECK_FALSE(check_mpi(*H, bad, cap(2)).pass);
  auto rs = check_cocyclic(StandardModule(H, bad), 2, 10, 9, cap(2));
  bool order_failed = false;
  for (const auto& r : rs)
    if (r.check == "tau-order") order_failed = !r.pass;
  CHECK(order_failed);
}

TEST_CASE("coefficient modules") {
  auto H = h1();
  auto C = std::make_shared<CharacterModule>(*H, H->delta(), H->one());
  SaydCyclicModule R(C);
  require_all(check_cocyclic(R, 3, 6, 11, cap(2)), "reduced");
  UnreducedSaydModule U(C);
  require_all(check_cocyclic(U, 2, 6, 12, cap(2)), "unreduced");

  auto K = group_algebra();
  auto tp = std::make_shared<TensorPowerModule>(weight_coaction(*K, *H), counit_character(*K), K->one(), 1);
  require_all(check_cocyclic(SaydCyclicModule(tp), 2, 4, 13, cap(1)), "tensor power");

  auto D = h1dag(0);
  auto Cs = std::make_shared<CharacterModule>(*D, D->delta(), *D->group_like(-1));
  require_all(check_cocyclic(SaydCyclicModule(Cs), 2, 6, 14, cap(2)), "^s C_delta");
}

TEST_CASE("Theta identifies the coefficient complex with the standard module") {
  auto H = h1();
  auto C = std::make_shared<CharacterModule>(*H, H->delta(), H->one());
  SaydCyclicModule R(C);
  UnreducedSaydModule U(C);
  StandardModule S(H, delta_pair(*H, 0));

  Tensor h = parse_tensor(*H, "X # d1 - 2*Y # Y*X");
  CHECK(theta(R, theta_inverse(*H, h)) == h);
  // (1, h0, h~) -> S_delta(h0) h~
  Tensor u;
  u.add(Tuple{Word{}, *H->generator("X"), *H->generator("Y")}, 1);
  CHECK(theta(R, u) == diagonal_action(*H, twisted_antipode(*H, H->delta(), *H->generator("X")),
                                       Tuple{*H->generator("Y")}));

  std::mt19937 rng(21);
  for (int s = 0; s < 10; ++s) {
    Tensor x = sample(S, 2, rng, cap(2), false);
    Tensor via_unreduced = theta(R, cyclic(U, theta_inverse(*H, x), 2));
    CHECK(via_unreduced == cyclic(S, x, 2));
    CHECK(strip_carrier(cyclic(R, add_carrier(x), 2)) == cyclic(S, x, 2));
    for (int i = 0; i <= 3; ++i) CHECK(theta(R, face(U, i, theta_inverse(*H, x), 2)) == face(S, i, x, 2));
  }
}
