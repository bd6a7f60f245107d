#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/family.hpp"
#include "hopfcyc/homotopy.hpp"
#include "hopfcyc/parser.hpp"

using namespace hc;

namespace {

Truncation cap(int pbw, int letters = 2) {
  Truncation t;
  t.pbw_cap = pbw;
  t.letter_cap = letters;
  t.tree_cap = 2;
  return t;
}

void require_all(const std::vector<CheckReport>& rs, const std::string& where) {
  for (const auto& r : rs) CHECK_MESSAGE(r.pass, (where + " " + r.check + ": " + r.witness + " " + r.detail));
}

CartanOperators cartan_Y(std::shared_ptr<const PbwAlgebra> H) {
  return CartanOperators(H, delta_pair(*H, 0), right_multiplication(H, *H->generator("Y"), "D_Y"));
}

// Unreduced tuple (1, c^0, ..., c^n) from a tensor of H.
Tensor lift(const Tensor& t) {
  Tensor out;
  for (const auto& [tup, c] : t) out.add(concat(Tuple{Word{}}, tup), c);
  return out;
}

}  // namespace

TEST_CASE("coderivations") {
  for (auto H : {h1(), h1s(), hck()}) {
    require_all(check_coderivation(right_multiplication(H, *H->generator("Y"), "D_Y"), cap(2)), H->name());
    require_all(check_coderivation(zero_coderivation(H), cap(2)), H->name());
  }
  // D_X is not a coderivation: X is not primitive
  auto H = h1();
  CHECK_FALSE(all_pass(check_coderivation(right_multiplication(H, *H->generator("X"), "D_X"), cap(2))));
}

TEST_CASE("psi_j, e_D and L_D on small elements") {
  auto H = h1();
  auto ops = cartan_Y(H);
  auto T = [&](int n, const std::string& s) { return lift(parse_tensor(repeat(*H, n), s)); };
  CHECK(ops.psi_unreduced(0, T(2, "1 # X"), 1) == T(2, "Y # X"));
  CHECK(ops.psi_unreduced(1, T(2, "1 # X"), 1) == T(2, "1 # Y*X - 1 # X"));
  CHECK(ops.psi_unreduced(1, Tensor(), 1).empty());
  CHECK_THROWS(ops.psi_unreduced(2, T(2, "1 # X"), 1));
  CHECK(ops.e_unreduced(T(1, "1"), 0) == T(2, "1 # Y"));

  Tensor xd = parse_tensor(repeat(*H, 2), "X # d1");
  CHECK(ops.lie(xd, 2) == parse_tensor(repeat(*H, 2), "-X # d1"));
  CHECK(ops.lie(Tensor(Tuple{}), 0) == Tensor(Tuple{}));
}

TEST_CASE("Theta L_Y Theta^{-1} = delta(Y) Id - ad Y") {
  for (auto H : {h1(), h1s(), hck()}) {
    auto ops = cartan_Y(H);
    auto r = check_lie_is_ad(ops, *H->generator("Y"), 2, cap(2));
    CHECK_MESSAGE(r.pass, (H->name() + ": " + r.witness));
  }
}

TEST_CASE("Cartan homotopy formula") {
  require_all(verify_homotopy_formula(cartan_Y(h1()), 3, 8, 1, cap(2)), "h1");
  require_all(verify_homotopy_formula(cartan_Y(h1s()), 2, 8, 2, cap(2)), "h1s");
  require_all(verify_homotopy_formula(cartan_Y(hck()), 2, 6, 3, cap(2)), "hck");
  auto H = h1();
  CartanOperators zero(H, delta_pair(*H, 0), zero_coderivation(H));
  require_all(verify_homotopy_formula(zero, 2, 4, 4, cap(2)), "zero");
  std::mt19937 rng(5);
  Tensor x = sample(zero.standard(), 2, rng, cap(2), true);
  CHECK(zero.e(x, 2).empty());
  CHECK(zero.E(x, 2).empty());
}

TEST_CASE("contraction of off-weight cocycles") {
  auto H = h1();
  auto ops = cartan_Y(H);
  const auto& M = ops.standard();

  MixedCochain x{{2, hochschild_b(M, parse_tensor(*H, "d2"), 1)}};
  auto c = contract_offweight_cocycle(ops, x);
  REQUIRE_MESSAGE(c.ok, c.reason);
  CHECK(mixed_boundary(M, c.primitive) == x);

  // weight 3 cocycle at level 2 with a level-0 partner is zero there; a weight-0 class
  MixedCochain y{{1, hochschild_b(M, Tensor(Tuple{}), 0)}};
  auto cy = contract_offweight_cocycle(ops, y);
  CHECK(cy.ok);

  // X is not primitive, so b(X) != 0
  MixedCochain bad{{1, parse_tensor(*H, "X")}};
  CHECK_FALSE(hochschild_b(M, bad[1], 1).empty());
  auto rb = contract_offweight_cocycle(ops, bad);
  CHECK_FALSE(rb.ok);
  CHECK(rb.reason.find("cocycle") != std::string::npos);

  MixedCochain mixed{{1, parse_tensor(*H, "d1 + d2")}};
  auto rm = contract_offweight_cocycle(ops, mixed);
  CHECK_FALSE(rm.ok);
  CHECK(rm.reason.find("homogeneous") != std::string::npos);

  MixedCochain gv{{1, parse_tensor(*H, "d1")}};
  auto rg = contract_offweight_cocycle(ops, gv);
  CHECK_FALSE(rg.ok);

  auto r0 = contract_offweight_cocycle(ops, MixedCochain{});
  CHECK(r0.ok);
  CHECK(r0.primitive.empty());
}
