#pragma once

#include "hopfcyc/cocyclic.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hc {

// H-linear coderivation of H (as a left H-module coalgebra).
struct Coderivation {
  std::string name;
  HopfPtr algebra;
  std::function<Elem(const Word&)> apply;
  Elem operator()(const Word& w) const { return apply(w); }
};

// D_Z(h) = hZ; Z should be primitive.
Coderivation right_multiplication(HopfPtr H, const Word& Z, std::string name);
Coderivation zero_coderivation(HopfPtr H);

// D(gh) = g D(h) on pairs of capped basis words and
// Delta D(c) = D(c_(1)) (x) c_(2) + c_(1) (x) D(c_(2)) on the capped basis.
std::vector<CheckReport> check_coderivation(const Coderivation& D, const Truncation& t);

// Cochains of any degree parity, level -> component.
using MixedCochain = std::map<int, Tensor>;

// psi_j, L_D, e_D and E_D on C_H(H, ^sigma C_delta), evaluated on the
// unreduced representatives m (x) c^0 (x) ... (x) c^n and carried to the
// standard module H^{(x) n} through Theta.
class CartanOperators {
 public:
  CartanOperators(std::shared_ptr<const PbwAlgebra> H, ModularPair pair, Coderivation D);

  const StandardModule& standard() const { return standard_; }
  const UnreducedSaydModule& unreduced() const { return unreduced_; }
  const Coderivation& coderivation() const { return D_; }

  // Unreduced model.  psi_j applies D to c^j, 0 <= j <= n.
  Tensor psi_unreduced(int j, const Tensor& x, int n) const;
  Tensor lie_unreduced(const Tensor& x, int n) const;
  // (-1)^n psi_{n+1} d_{n+1}: level n -> n+1
  Tensor e_unreduced(const Tensor& x, int n) const;
  // E^{j,i} = (-1)^{mi+1} psi_j tau^{-i} s_extra from level m+1 to level m,
  // with tau^{-i} = tau^{m+1-i}; 1 <= i <= j <= m.
  Tensor E_component_unreduced(int j, int i, const Tensor& x, int n) const;
  Tensor E_unreduced(const Tensor& x, int n) const;  // level n -> n-1

  // Standard model: Theta op Theta^{-1}.
  Tensor psi(int j, const Tensor& x, int n) const;
  Tensor lie(const Tensor& x, int n) const;
  Tensor e(const Tensor& x, int n) const;
  Tensor E_component(int j, int i, const Tensor& x, int n) const;
  Tensor E(const Tensor& x, int n) const;

  Tensor to_standard(const Tensor& unreduced) const;
  Tensor from_standard(const Tensor& x) const;

 private:
  std::shared_ptr<const PbwAlgebra> H_;
  StandardModule standard_;
  std::shared_ptr<const CharacterModule> coeff_;
  SaydCyclicModule reduced_;
  UnreducedSaydModule unreduced_;
  Coderivation D_;
};

// [e_D + E_D, b + B] = L_D by graded component on sampled normalized cochains
// at levels 0..max_level, and the auxiliary identities [b, e_D] = 0,
// [B, E_D] = 0, the expansions of e_D B, B e_D and L_D, and normality of e_D.
std::vector<CheckReport> verify_homotopy_formula(const CartanOperators& ops, int max_level, int samples,
                                                 unsigned seed, const Truncation& t);

// Theta L_{D_Z} Theta^{-1} = delta(Z) Id - ad Z on all capped basis tensors
// of levels 0..max_level; ad Z acts as the diagonal commutator.
CheckReport check_lie_is_ad(const CartanOperators& ops, const Word& Z, int max_level, const Truncation& t);

// b + B on a mixed cochain of the standard module.
MixedCochain mixed_boundary(const StandardModule& M, const MixedCochain& x);
std::string format(const StandardModule& M, const MixedCochain& x);

struct Contraction {
  bool ok = false;
  std::string reason;  // why the input was rejected
  MixedCochain primitive;
};

// For a weight-homogeneous (b+B)-cocycle x of weight k on which L_D acts by a
// nonzero scalar c, y = c^{-1}(e_D + E_D)x satisfies (b+B)y = x.  Rejects
// inhomogeneous or non-cocycle input and the case c = 0 (weight 1 for D_Y).
Contraction contract_offweight_cocycle(const CartanOperators& ops, const MixedCochain& x);

}  // namespace hc
