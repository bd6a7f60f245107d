#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hopfcyc/family.hpp"
#include "hopfcyc/parser.hpp"
#include "hopfcyc/trees.hpp"

#include <algorithm>
#include <functional>
#include <set>

using namespace hc;

namespace {

// Brute force: all parent arrays parent[i] < i on n vertices, deduplicated
// by the AHU canonical string of the rooted tree.
std::string ahu(const std::vector<std::vector<int>>& kids, int v) {
  std::vector<std::string> parts;
  for (int c : kids[v]) parts.push_back(ahu(kids, c));
  std::sort(parts.begin(), parts.end());
  std::string s = "(";
  for (auto& p : parts) s += p;
  return s + ")";
}

int brute_count(int n) {
  std::set<std::string> seen;
  std::vector<int> parent(n, -1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      std::vector<std::vector<int>> kids(n);
      for (int v = 1; v < n; ++v) kids[parent[v]].push_back(v);
      seen.insert(ahu(kids, 0));
      return;
    }
    for (int p = 0; p < i; ++p) {
      parent[i] = p;
      rec(i + 1);
    }
  };
  rec(1);
  return static_cast<int>(seen.size());
}

int t(const std::string& lit) { return trees::parse(lit); }

}  // namespace

TEST_CASE("enumeration matches brute force") {
  auto counts = trees::count_by_size(6);
  std::vector<int> oracle;
  for (int n = 1; n <= 6; ++n) oracle.push_back(brute_count(n));
  CHECK(counts == oracle);
  CHECK(counts == std::vector<int>{1, 1, 2, 4, 9, 20});
  CHECK(trees::up_to(1).size() == 1);
  CHECK(t("[[][]]") != t("[[[]]]"));
}

TEST_CASE("canonical order and literals") {
  CHECK(t("[]") == 0);
  CHECK(t("[[]]") == 1);
  CHECK(trees::size(t("[[][[]]]")) == 4);
  CHECK(t("[[[]][]]") == t("[[][[]]]"));
  for (int id : trees::up_to(6)) CHECK(t(trees::format(id)) == id);
  for (int id = 1; id < trees::count(); ++id) CHECK(trees::size(id - 1) <= trees::size(id));
  CHECK_THROWS(t("[[]"));
  CHECK_THROWS(t("[]]"));
}

TEST_CASE("simple cuts") {
  auto c0 = trees::simple_cuts(t("[]"));
  REQUIRE(c0.size() == 1);
  CHECK(c0[0].pruned.empty());

  auto c2 = trees::simple_cuts(t("[[]]"));
  REQUIRE(c2.size() == 2);
  int hits = 0;
  for (auto& c : c2)
    if (c.pruned == trees::Forest{0} && c.trunk == 0) ++hits;
  CHECK(hits == 1);

  // path: {}, top edge -> (., t2), root edge -> (t2, .); both edges is not simple
  auto c3 = trees::simple_cuts(t("[[[]]]"));
  CHECK(c3.size() == 3);
  for (auto& c : c3) {
    int total = trees::size(c.trunk);
    for (int p : c.pruned) total += trees::size(p);
    CHECK(total == 3);
    CHECK(c.mult == 1);
  }
}

TEST_CASE("coproduct on generators") {
  auto& H = *hrt();
  auto D = [&](const std::string& s) { return coproduct(H, parse_element(H, s)); };
  auto T = [&](const std::string& s) { return parse_tensor(H, s); };
  CHECK(D("dT[]") == T("dT[] # 1 + 1 # dT[]"));
  CHECK(D("dT[[]]") == T("dT[[]] # 1 + 1 # dT[[]] + dT[] # dT[]"));
  CHECK(D("dT[[[]]]") == T("dT[[[]]] # 1 + 1 # dT[[[]]] + dT[] # dT[[]] + dT[[]] # dT[]"));
  CHECK(D("dT[[][]]") == T("dT[[][]] # 1 + 1 # dT[[][]] + 2*dT[] # dT[[]] + dT[]^2 # dT[]"));
}

TEST_CASE("grafting") {
  auto& H = *hrt();
  auto L = H.letters();
  auto N = [&](const std::string& lit) { return L->dx(trees::parse(lit) + 1); };
  auto E = [&](const std::string& s) {
    Elem e;
    for (const auto& [w, c] : parse_element(H, s)) e.add(PbwAlgebra::f_part(w), c);
    return e;
  };
  CHECK(N("[]") == E("dT[[]]"));
  CHECK(N("[[]]") == E("dT[[][]] + dT[[[]]]"));
  CHECK(N("[[][]]") == E("dT[[][][]] + 2*dT[[][[]]]"));
  for (int id : trees::up_to(6)) {
    Q sum = 0;
    for (const auto& [g, m] : trees::graft(id)) {
      sum += m;
      CHECK(trees::size(g) == trees::size(id) + 1);
    }
    CHECK(sum == trees::size(id));
  }
  CHECK_THROWS_AS(trees::graft(trees::up_to(trees::kMaxSize).back()), CapExceeded);
}

TEST_CASE("Hopf axioms for hrt with trees up to size 5") {
  Truncation tr;
  tr.pbw_cap = 1;
  tr.tree_cap = 5;
  for (const auto& r : check_hopf(*hrt(), tr)) CHECK(r.pass);
  tr.pbw_cap = 2;
  tr.tree_cap = 3;
  for (const auto& r : check_hopf(*hrt(), tr)) CHECK(r.pass);
  // slotwise weight
  for (const Word& w : hrt()->basis(tr))
    for (const auto& [tup, c] : hrt()->coproduct(w)) CHECK(hrt()->weight(tup[0]) + hrt()->weight(tup[1]) == hrt()->weight(w));
}

TEST_CASE("cut coproduct is compatible with grafting through Delta(X)") {
  // Delta(N d_T) must equal [Delta X, Delta d_T] for H_CK to be a Hopf algebra.
  auto L = tree_letters();
  for (int id : trees::up_to(5)) {
    Tensor lhs;
    for (const auto& [g, m] : trees::graft(id)) lhs.add(L->base_coproduct(g + 1), m);
    CHECK(lhs == derived_coproduct(*L, L->base_coproduct(id + 1)));
  }
}

TEST_CASE("H_CK relations, action and Hopf axioms") {
  auto& H = *hck();
  auto P = [&](const std::string& s) { return parse_element(H, s); };
  // d_T <| X = -N d_T, d_T <| Y = -|T| d_T, as right commutators
  CHECK(commutator(H, P("dT[]"), P("X")) == P("-dT[[]]"));
  CHECK(commutator(H, P("dT[[]]"), P("Y")) == P("-2*dT[[]]"));
  CHECK(coproduct(H, P("X")) == parse_tensor(H, "X # 1 + 1 # X + dT[] # Y"));
  Truncation tr;
  tr.pbw_cap = 2;
  tr.tree_cap = 3;
  for (const auto& r : check_hopf(H, tr)) CHECK(r.pass);
  tr.pbw_cap = 1;
  tr.tree_cap = 4;
  for (const auto& r : check_hopf(H, tr)) CHECK(r.pass);
  tr.pbw_cap = 3;
  tr.tree_cap = 3;
  CHECK(check_mpi(H, {H.delta(), H.one(), H.one()}, tr).pass);
  auto& D = *hckdag(2);
  tr.pbw_cap = 2;
  for (const auto& r : check_hopf(D, tr)) CHECK(r.pass);
  for (int k = 0; k < 2; ++k) CHECK(check_mpi(D, {D.delta(), D.sigma(k), D.sigma(-k)}, tr).pass);
}
