#pragma once

#include "hopfcyc/crossed.hpp"
#include "hopfcyc/hopf.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <string>
#include <vector>

namespace hc {

// One tensor factor of a cochain.  Algebra slots hold basis words of
// `algebra`; a carrier slot holds carrier words of a SAYD module.  Normalized
// slots are those annihilated by the counit projection defining the
// normalized subcomplex.
struct SlotInfo {
  const HopfAlgebra* algebra = nullptr;
  const SaydModule* carrier = nullptr;
  bool normalized = false;
};

// Level n cochains are Tensors whose tuples follow slots(n).  Operators act on
// single tuples; the free functions below extend them linearly.
class CocyclicModule {
 public:
  virtual ~CocyclicModule() = default;
  virtual std::string name() const = 0;
  virtual std::vector<SlotInfo> slots(int n) const = 0;
  virtual Tensor face(int i, const Tuple& x, int n) const = 0;        // 0 <= i <= n+1
  virtual Tensor degeneracy(int j, const Tuple& x, int n) const = 0;  // 0 <= j <= n-1
  virtual Tensor cyclic(const Tuple& x, int n) const = 0;
  // sigma_{n-1} tau, the first step of B; modules may shortcut it.
  virtual Tensor cyclic_degeneracy(const Tuple& x, int n) const;
  // Whether slotwise h -> h - eps(h)1 projects onto the kernel of all
  // degeneracies.  When it does not, B uses the unnormalized form.
  virtual bool slotwise_normalized() const { return true; }
};

using CocyclicPtr = std::shared_ptr<const CocyclicModule>;

Tensor face(const CocyclicModule& M, int i, const Tensor& x, int n);
Tensor degeneracy(const CocyclicModule& M, int j, const Tensor& x, int n);
Tensor cyclic(const CocyclicModule& M, const Tensor& x, int n);
Tensor cyclic_power(const CocyclicModule& M, const Tensor& x, int n, int k);  // k >= 0
// level n -> n+1
Tensor hochschild_b(const CocyclicModule& M, const Tensor& x, int n);
// level n -> n-1, on the normalized projection of x; zero at level 0.  Modules
// without slotwise normalization get N sigma_{n-1} tau (1 - lambda) instead.
Tensor connes_B(const CocyclicModule& M, const Tensor& x, int n);
// Slotwise h -> h - eps(h)1 on normalized slots.
Tensor normalize(const CocyclicModule& M, const Tensor& x, int n);
bool is_normalized(const CocyclicModule& M, const Tensor& x, int n);
std::string format(const CocyclicModule& M, const Tensor& x, int n);
// Total ad-Y weight of a tuple (carrier slots count 0).
int weight(const CocyclicModule& M, const Tuple& x, int n);
std::optional<int> weight(const CocyclicModule& M, const Tensor& x, int n);

// True when every component of a graded family of cochains vanishes.
bool is_zero(const std::map<int, Tensor>& x);

// Random combination of up to `terms` tuples drawn slotwise from the capped
// bases, coefficients in {-2..2} \ {0}.  Normalized samples skip unit words in
// normalized slots.
Tensor sample(const CocyclicModule& M, int n, std::mt19937& rng, const Truncation& t, bool normalized,
              int terms = 4);

// Slot bases of one level, computed once for repeated sampling.
class SampleSpace {
 public:
  SampleSpace(const CocyclicModule& M, int n, const Truncation& t, bool normalized);
  Tensor draw(std::mt19937& rng, int terms = 4) const;

 private:
  std::vector<std::vector<Word>> bases_;
};

// Cosimplicial identities, cyclic relations, tau^{n+1} = id and the mixed
// complex relations b^2 = B^2 = bB + Bb = 0 on seeded samples at levels
// 0..max_level.  Without the cyclic structure only the cosimplicial
// identities and b^2 = 0 are checked.
std::vector<CheckReport> check_cocyclic(const CocyclicModule& M, int max_level, int samples, unsigned seed,
                                        const Truncation& t, bool with_cyclic = true);

// a_(1) x^1 (x) ... (x) a_(n) x^n, all slots in H.
Tensor diagonal_action(const HopfAlgebra& H, const Elem& a, const Tuple& x);
Tensor diagonal_action(const HopfAlgebra& H, const Elem& a, const Tensor& x);

// ---- modules -----------------------------------------------------------------

// H^{(x) n} with faces, degeneracies and tau of a modular pair in involution.
class StandardModule : public CocyclicModule {
 public:
  StandardModule(HopfPtr H, ModularPair pair);
  std::string name() const override;
  std::vector<SlotInfo> slots(int n) const override;
  Tensor face(int i, const Tuple& x, int n) const override;
  Tensor degeneracy(int j, const Tuple& x, int n) const override;
  Tensor cyclic(const Tuple& x, int n) const override;
  Tensor cyclic_degeneracy(const Tuple& x, int n) const override;

  const HopfAlgebra& algebra() const { return *H_; }
  const ModularPair& pair() const { return pair_; }

 private:
  HopfPtr H_;
  ModularPair pair_;
  mutable std::mutex mu_;
  mutable std::map<Tuple, Tensor> tau_cache_;
};

// M (x)_H H^{(x) n+1} stored through the representatives m (x) 1 (x) h~, i.e.
// tuples (m, h^1, ..., h^n).
class SaydCyclicModule : public CocyclicModule {
 public:
  explicit SaydCyclicModule(std::shared_ptr<const SaydModule> M);
  std::string name() const override;
  std::vector<SlotInfo> slots(int n) const override;
  Tensor face(int i, const Tuple& x, int n) const override;
  Tensor degeneracy(int j, const Tuple& x, int n) const override;
  Tensor cyclic(const Tuple& x, int n) const override;
  Tensor cyclic_degeneracy(const Tuple& x, int n) const override;

  const SaydModule& coefficients() const { return *M_; }
  // (m, c^0, c~) -> m c^0_(1) (x) S(c^0_(2)) c~
  Tensor reduce(const Tuple& unreduced) const;
  Tensor reduce(const Tensor& unreduced) const;

 private:
  std::shared_ptr<const SaydModule> M_;
  mutable std::mutex mu_;
  mutable std::map<Tuple, Tensor> tau_cache_;
};

// M (x) H^{(x) n+1} without the balanced quotient: tuples (m, c^0, ..., c^n).
// Cocyclic when M has trivial coaction; the Cartan operators live here.
class UnreducedSaydModule : public CocyclicModule {
 public:
  explicit UnreducedSaydModule(std::shared_ptr<const SaydModule> M);
  std::string name() const override;
  std::vector<SlotInfo> slots(int n) const override;
  Tensor face(int i, const Tuple& x, int n) const override;
  Tensor degeneracy(int j, const Tuple& x, int n) const override;
  Tensor cyclic(const Tuple& x, int n) const override;

  const SaydModule& coefficients() const { return *M_; }
  // eps(c^0) m (x) c^1 (x) ... (x) c^n, level n -> n-1
  Tensor extra_degeneracy(const Tuple& x, int n) const;

 private:
  std::shared_ptr<const SaydModule> M_;
};

// Theta between the coefficient complex of ^sigma C_delta and the standard
// module: (1, h^0, h~) -> S_delta(h^0) h~ and h~ -> (1, 1, h~).
Tensor theta(const SaydCyclicModule& reduced, const Tensor& unreduced);
Tensor theta_inverse(const HopfAlgebra& H, const Tensor& x);
// Reduced representatives (m, h~) <-> standard tuples h~ (one-dimensional M).
Tensor strip_carrier(const Tensor& x);
Tensor add_carrier(const Tensor& x, const Word& m = {});

// ---- named cocycles ----------------------------------------------------------

struct NamedCocycle {
  std::string name;
  std::string family;  // h1, h1s, h1dag, hck, hckdag
  int level;
  std::string expression;
  int sigma_power;  // modular pair (delta, sigma^k)
};

const std::vector<NamedCocycle>& named_cocycles();
const NamedCocycle* find_cocycle(const std::string& name);

// b(x) = 0 and tau(x) = (-1)^n x.
std::vector<CheckReport> verify_cocycle(const CocyclicModule& M, const Tensor& x, int n);

// (delta, sigma^k) on a PBW algebra; sigma^k must exist when k != 0.
ModularPair delta_pair(const PbwAlgebra& H, int k);

}  // namespace hc
