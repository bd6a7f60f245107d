#pragma once

#include "hopfcyc/cocyclic.hpp"
#include "hopfcyc/crossed.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hc {

// Bigraded cochains at (p, q).  Horizontal operators change p, vertical ones q.
class BicocyclicModule {
 public:
  virtual ~BicocyclicModule() = default;
  virtual std::string name() const = 0;
  virtual std::vector<SlotInfo> slots(int p, int q) const = 0;
  virtual Tensor hface(int i, const Tuple& x, int p, int q) const = 0;
  virtual Tensor hdegeneracy(int j, const Tuple& x, int p, int q) const = 0;
  virtual Tensor hcyclic(const Tuple& x, int p, int q) const = 0;
  virtual Tensor vface(int i, const Tuple& x, int p, int q) const = 0;
  virtual Tensor vdegeneracy(int j, const Tuple& x, int p, int q) const = 0;
  virtual Tensor vcyclic(const Tuple& x, int p, int q) const = 0;
  // False when only the cosimplicial structure is available.
  virtual bool has_cyclic() const { return true; }
};

using BicocyclicPtr = std::shared_ptr<const BicocyclicModule>;

// Row q (level p), column p (level q) and the diagonal (level n at (n, n)).
class RowModule : public CocyclicModule {
 public:
  RowModule(BicocyclicPtr B, int q) : B_(std::move(B)), q_(q) {}
  std::string name() const override { return B_->name() + " row " + std::to_string(q_); }
  std::vector<SlotInfo> slots(int n) const override { return B_->slots(n, q_); }
  Tensor face(int i, const Tuple& x, int n) const override { return B_->hface(i, x, n, q_); }
  Tensor degeneracy(int j, const Tuple& x, int n) const override { return B_->hdegeneracy(j, x, n, q_); }
  Tensor cyclic(const Tuple& x, int n) const override { return B_->hcyclic(x, n, q_); }

 private:
  BicocyclicPtr B_;
  int q_;
};

class ColumnModule : public CocyclicModule {
 public:
  ColumnModule(BicocyclicPtr B, int p) : B_(std::move(B)), p_(p) {}
  std::string name() const override { return B_->name() + " column " + std::to_string(p_); }
  std::vector<SlotInfo> slots(int n) const override { return B_->slots(p_, n); }
  Tensor face(int i, const Tuple& x, int n) const override { return B_->vface(i, x, p_, n); }
  Tensor degeneracy(int j, const Tuple& x, int n) const override { return B_->vdegeneracy(j, x, p_, n); }
  Tensor cyclic(const Tuple& x, int n) const override { return B_->vcyclic(x, p_, n); }

 private:
  BicocyclicPtr B_;
  int p_;
};

class DiagonalModule : public CocyclicModule {
 public:
  explicit DiagonalModule(BicocyclicPtr B) : B_(std::move(B)) {}
  std::string name() const override { return B_->name() + " diagonal"; }
  std::vector<SlotInfo> slots(int n) const override { return B_->slots(n, n); }
  Tensor face(int i, const Tuple& x, int n) const override;
  Tensor degeneracy(int j, const Tuple& x, int n) const override;
  Tensor cyclic(const Tuple& x, int n) const override;
  // s_j kills a K slot and an H slot together
  bool slotwise_normalized() const override { return false; }
  const BicocyclicModule& bicocyclic() const { return *B_; }

 private:
  BicocyclicPtr B_;
};

// Linear extensions.
Tensor hface(const BicocyclicModule& B, int i, const Tensor& x, int p, int q);
Tensor hdegeneracy(const BicocyclicModule& B, int j, const Tensor& x, int p, int q);
Tensor hcyclic(const BicocyclicModule& B, const Tensor& x, int p, int q);
Tensor vface(const BicocyclicModule& B, int i, const Tensor& x, int p, int q);
Tensor vdegeneracy(const BicocyclicModule& B, int j, const Tensor& x, int p, int q);
Tensor vcyclic(const BicocyclicModule& B, const Tensor& x, int p, int q);

// Rows q <= qmax and columns p <= pmax as (co)cyclic modules, the commutation
// of the nine horizontal/vertical operator pairs for p, q <= 2, and the
// diagonal, all on seeded samples.
std::vector<CheckReport> check_bicocyclic(BicocyclicPtr B, int pmax, int qmax, int samples, unsigned seed,
                                          const Truncation& t);

// ---- C^{p,q} = K^{(x) p} (x) H^{(x) q} ----------------------------------------------

class CrossedBicocyclic : public BicocyclicModule {
 public:
  // alpha_mu on H, beta_nu on K, rho: H -> K (x) H.
  CrossedBicocyclic(HopfPtr H, HopfPtr K, CoactionPtr rho, ModularPair alpha_mu, ModularPair beta_nu,
                    bool cyclic = true);
  std::string name() const override;
  std::vector<SlotInfo> slots(int p, int q) const override;
  Tensor hface(int i, const Tuple& x, int p, int q) const override;
  Tensor hdegeneracy(int j, const Tuple& x, int p, int q) const override;
  Tensor hcyclic(const Tuple& x, int p, int q) const override;
  Tensor vface(int i, const Tuple& x, int p, int q) const override;
  Tensor vdegeneracy(int j, const Tuple& x, int p, int q) const override;
  Tensor vcyclic(const Tuple& x, int p, int q) const override;
  bool has_cyclic() const override { return cyclic_; }

  const HopfAlgebra& H() const { return *H_; }
  const HopfAlgebra& K() const { return *K_; }
  const Coaction& coaction() const { return *rho_; }
  const StandardModule& vertical() const { return vertical_; }

 private:
  HopfPtr H_, K_;
  CoactionPtr rho_;
  ModularPair beta_nu_;
  StandardModule vertical_;
  bool cyclic_;
};

// Psi: level-n tuples of pack_pair(h, k) words of P = H >| K (or U >< F) to
// diagonal tuples (k^1..k^n, h^1..h^n); Psi^{-1} back.
Tensor psi(const CrossedProduct& P, const Tensor& x, int n);
Tensor psi_inverse(const CrossedProduct& P, const Tensor& x, int n);

// ---- total complex and Alexander-Whitney -----------------------------------------

// Degree-n total cochain: bidegree p -> component at (p, n - p).
using TotalCochain = std::map<int, Tensor>;

TotalCochain total_b(const BicocyclicModule& B, const TotalCochain& x, int n);
TotalCochain total_B(const BicocyclicModule& B, const TotalCochain& x, int n);
TotalCochain total_normalize(const BicocyclicModule& B, const TotalCochain& x, int n);
std::string format(const BicocyclicModule& B, const TotalCochain& x, int n);

// AW_{p,q} = (-1)^{p+q} (vertical d_0)^p horizontal d_n ... d_{p+1}, summed over p.
// The global sign makes AW b_T = -b AW; without it the composite is a strict chain map.
Tensor alexander_whitney(const BicocyclicModule& B, const TotalCochain& x, int n, bool with_sign = true);

// b_T^2 = 0, B_T^2 = 0, b_T B_T + B_T b_T = 0 on normalized samples and
// the chain-map property of AW (both sign conventions) at levels n <= max_level.
std::vector<CheckReport> check_total(BicocyclicPtr B, int max_level, int samples, unsigned seed,
                                     const Truncation& t);

// ---- SAYD coefficients over H >| K and the module X ----------------------------------

// M (x) N over H >| K: (m (x) n)(h >| k) = mh (x) nk,
// m (x) n -> m_(-1) >| n_(-1) (x) (m_(0) (x) n_(0)).  Carrier words pack_pair(m, n).
class ProductSaydModule : public SaydModule {
 public:
  ProductSaydModule(CrossedPtr P, std::shared_ptr<const SaydModule> M, std::shared_ptr<const SaydModule> N);
  const HopfAlgebra& base() const override { return *P_; }
  std::string name() const override;
  std::vector<Word> carrier_basis(const Truncation& t) const override;
  Elem act(const Word& mn, const Word& hk) const override;
  Tensor coact(const Word& mn) const override;
  std::string format(const Word& mn) const override;

 private:
  CrossedPtr P_;
  std::shared_ptr<const SaydModule> M_, N_;
};

// K-coinvariance of M (both conditions) and H-stability of N.
std::vector<CheckReport> check_coefficient_conditions(const Coaction& rho, const SaydModule& M, const SaydModule& N,
                                                      const Truncation& t);

// X^{p,q} = N (x)_K K^{(x) p+1} (x) M (x)_H H^{(x) q+1} with C = H and D = K,
// stored as reduced tuples (n, d^1..d^p, m, c^1..c^q).
class GeneralizedBicocyclic : public BicocyclicModule {
 public:
  GeneralizedBicocyclic(CoactionPtr rho, std::shared_ptr<const SaydModule> M, std::shared_ptr<const SaydModule> N);
  std::string name() const override;
  std::vector<SlotInfo> slots(int p, int q) const override;
  Tensor hface(int i, const Tuple& x, int p, int q) const override;
  Tensor hdegeneracy(int j, const Tuple& x, int p, int q) const override;
  Tensor hcyclic(const Tuple& x, int p, int q) const override;
  Tensor vface(int i, const Tuple& x, int p, int q) const override;
  Tensor vdegeneracy(int j, const Tuple& x, int p, int q) const override;
  Tensor vcyclic(const Tuple& x, int p, int q) const override;

 private:
  // c~_(-1) n_(-1) (x) n_(0) for the horizontal coaction.
  Tensor row_coaction(const Word& n, const Tuple& c) const;

  CoactionPtr rho_;
  std::shared_ptr<const SaydModule> M_, N_;
  SaydCyclicModule vertical_;
};

// Psi between the reduced complex of (H >| K, M (x) N) and the diagonal of X.
Tensor psi_generalized(const CrossedProduct& P, const Tensor& x, int n);
Tensor psi_generalized_inverse(const CrossedProduct& P, const Tensor& x, int n);

}  // namespace hc
