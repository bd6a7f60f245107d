#pragma once

#include "hopfcyc/hopf.hpp"
#include "hopfcyc/pbw.hpp"

#include <functional>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hc {

// Left coaction rho: H -> K (x) H.  Tensors hold tuples (k, h).
class Coaction {
 public:
  using Rule = std::function<Tensor(const Word&)>;

  Coaction(const HopfAlgebra& K, const HopfAlgebra& H, Rule rule, std::string name = "rho");

  const HopfAlgebra& K() const { return *K_; }
  const HopfAlgebra& H() const { return *H_; }
  const std::string& name() const { return name_; }

  Tensor operator()(const Word& h) const;
  Tensor operator()(const Elem& h) const;
  // rho^{(m)}(h) = h_(-m) (x) ... (x) h_(-1) (x) h_(0); m = 0 gives h.
  Tensor iterated(const Word& h, int m) const;

 private:
  const HopfAlgebra* K_;
  const HopfAlgebra* H_;
  Rule rule_;
  std::string name_;
  mutable std::map<Word, Tensor> cache_;
};

using CoactionPtr = std::shared_ptr<const Coaction>;

// rho(h) = s^{wt h} (x) h for weight-homogeneous basis words.
CoactionPtr weight_coaction(const HopfAlgebra& K, const HopfAlgebra& H);
// h -> 1 (x) h
CoactionPtr trivial_coaction(const HopfAlgebra& K, const HopfAlgebra& H);
// Like weight_coaction, except that the listed words map to s^k (x) w.
CoactionPtr corrupted_coaction(const HopfAlgebra& K, const HopfAlgebra& H, std::map<Word, int> overrides);

// Comodule-algebra (c-a-1, c-a-2), comodule-coalgebra (c-c-1, c-c-2) and
// colinearity of the antipode, on the capped basis of H.
std::vector<CheckReport> check_comodule_hopf(const Coaction& rho, const Truncation& t);
// alpha(h_(0)) h_(-1) = alpha(h) 1
CheckReport check_colinear(const Coaction& rho, const Character& alpha, const Truncation& t);
// beta(h_(-1)) h_(0) = h
CheckReport check_stable(const Coaction& rho, const Character& beta, const Truncation& t);
// rho(mu) = 1 (x) mu
CheckReport check_coinvariant(const Coaction& rho, const Word& mu);

// Right action of U on F by algebra maps, given on (letter generator, U generator).
class RightAction {
 public:
  using Rule = std::function<Elem(const Word& fgen, const Word& ugen)>;

  RightAction(const HopfAlgebra& F, const HopfAlgebra& U, Rule rule);

  const HopfAlgebra& F() const { return *F_; }
  const HopfAlgebra& U() const { return *U_; }
  // f <| u
  Elem act(const Word& f, const Word& u) const;
  Elem act(const Elem& f, const Word& u) const;

 private:
  Elem act_gen(const Word& f, const Word& g) const;

  const HopfAlgebra* F_;
  const HopfAlgebra* U_;
  Rule rule_;
  mutable std::map<std::pair<Word, Word>, Elem> cache_;
};

// Words of a product algebra are pack_pair(h, k).  Without an action this is
// the cocrossed product H >| K (tensor product algebra); with an action it is
// the bicrossed product U >< F (crossed product algebra).  The coalgebra is
// cocrossed in both cases.
class CrossedProduct : public HopfAlgebra {
 public:
  CrossedProduct(std::string name, HopfPtr H, HopfPtr K, CoactionPtr rho,
                 std::shared_ptr<const RightAction> action = nullptr);

  Word one() const override { return pack_pair(H_->one(), K_->one()); }
  Elem mul(const Word& a, const Word& b) const override;
  Tensor coproduct(const Word& w) const override;
  Q counit(const Word& w) const override;
  Elem antipode(const Word& w) const override;
  int weight(const Word& w) const override;
  int pbw_degree(const Word& w) const override;
  std::string format(const Word& w) const override;
  std::vector<Word> basis(const Truncation& t) const override;
  std::vector<Word> generators(const Truncation& t) const override;
  std::vector<std::pair<Word, int>> factor(const Word& w) const override;
  std::optional<Word> generator(const std::string& token) const override;
  std::optional<Word> group_like(int k) const override;
  bool is_commutative() const override { return false; }

  const HopfAlgebra& left() const { return *H_; }
  const HopfAlgebra& right() const { return *K_; }
  const Coaction& coaction() const { return *rho_; }
  const RightAction* action() const { return action_.get(); }
  Word pair(const Word& h, const Word& k) const { return pack_pair(h, k); }
  Elem lift(const Elem& x, bool left_factor) const;

 private:
  HopfPtr H_, K_;
  CoactionPtr rho_;
  std::shared_ptr<const RightAction> action_;
  mutable std::map<std::pair<Word, Word>, Elem> mul_cache_;
  mutable std::map<Word, Tensor> cop_cache_;
  mutable std::map<Word, Elem> anti_cache_;
};

using CrossedPtr = std::shared_ptr<const CrossedProduct>;

// H >| K; throws std::invalid_argument if K is not commutative.
CrossedPtr cocrossed_product(HopfPtr H, HopfPtr K, CoactionPtr rho);

// U >< F for a PBW algebra F with letters: l <| Y = -wt(l) l, l <| X = -D(l),
// rho(Y) = 1 (x) Y, rho(X) = 1 (x) X + c (x) Y, extended to U by the
// matched-pair rule rho(u g) = (u_(-1) <| g_(1)) g_(2)(-1) (x) u_(0) g_(2)(0).
CrossedPtr bicrossed_product(std::shared_ptr<const PbwAlgebra> U, std::shared_ptr<const PbwAlgebra> F);

// Linear map between algebras given on basis words.
struct HopfMap {
  const HopfAlgebra* from;
  const HopfAlgebra* to;
  std::function<Elem(const Word&)> apply;
  Elem operator()(const Word& w) const { return apply(w); }
  Elem operator()(const Elem& x) const;
};

// Compares multiplication on pairs drawn from `words`, and coproduct, counit
// and antipode on `words`.  Also checks inv(phi(w)) = w.
std::vector<CheckReport> check_hopf_iso(const HopfMap& phi, const HopfMap& inv, const std::vector<Word>& words);

// Direct PBW presentation (same letters, no sigma) to U >< F.
std::pair<HopfMap, HopfMap> bicrossed_iso(const PbwAlgebra& direct, const CrossedProduct& bicrossed);
// s^m h -> h >| s^m, from a sigma cover to base >| K.
std::pair<HopfMap, HopfMap> cover_iso(const PbwAlgebra& cover, const CrossedProduct& cocrossed);

struct CombinedMpi {
  ModularPair pair;
  std::vector<CheckReport> preconditions;  // colinear, coinvariant, stable
  bool ok() const { return all_pass(preconditions); }
};

// (alpha (x) beta, mu >| nu) on H >| K.
CombinedMpi combined_mpi(const CrossedProduct& HK, const ModularPair& alpha_mu, const ModularPair& beta_nu,
                         const Truncation& t);

// ---- SAYD modules ----------------------------------------------------------

// Right module, left comodule over a Hopf algebra.  Carrier elements are Elems
// over carrier words; coactions are tuples (h, m).
class SaydModule {
 public:
  virtual ~SaydModule() = default;
  virtual const HopfAlgebra& base() const = 0;
  virtual std::string name() const = 0;
  virtual std::vector<Word> carrier_basis(const Truncation& t) const = 0;
  virtual Elem act(const Word& m, const Word& h) const = 0;
  virtual Tensor coact(const Word& m) const = 0;
  virtual std::string format(const Word& m) const = 0;
};

// ^sigma C_delta: one-dimensional, m h = delta(h) m, m -> sigma (x) m.  The
// carrier word is the empty word.
class CharacterModule : public SaydModule {
 public:
  CharacterModule(const HopfAlgebra& H, Character delta, Word sigma);
  const HopfAlgebra& base() const override { return *H_; }
  std::string name() const override;
  std::vector<Word> carrier_basis(const Truncation&) const override { return {Word{}}; }
  Elem act(const Word& m, const Word& h) const override;
  Tensor coact(const Word& m) const override;
  std::string format(const Word&) const override { return "1"; }
  const Character& character() const { return delta_; }
  const Word& sigma() const { return sigma_; }

 private:
  const HopfAlgebra* H_;
  Character delta_;
  Word sigma_;
};

// H^{(x) q} over K: h~ k = beta(k) h~, h~ -> h~_(-1) nu (x) h~_(0).
// Carrier words are pack_tuple of q basis words of H.
class TensorPowerModule : public SaydModule {
 public:
  TensorPowerModule(CoactionPtr rho, Character beta, Word nu, int q);
  const HopfAlgebra& base() const override { return rho_->K(); }
  std::string name() const override;
  std::vector<Word> carrier_basis(const Truncation& t) const override;
  Elem act(const Word& m, const Word& k) const override;
  Tensor coact(const Word& m) const override;
  std::string format(const Word& m) const override;

 private:
  CoactionPtr rho_;
  Character beta_;
  Word nu_;
  int q_;
};

// module, comodule, SAYD condition and stability on carrier basis x capped basis.
std::vector<CheckReport> check_sayd(const SaydModule& M, const Truncation& t);

// Coaction of the product of slot coactions: h~ -> h^1_(-1)...h^q_(-1) (x) h^1_(0) (x) ... .
// Input tuples are H-words; output tuples are (k, h^1_(0), ..., h^q_(0)).
Tensor tuple_coaction(const Coaction& rho, const Tuple& h);
Tensor tuple_coaction(const Coaction& rho, const Tensor& h);

}  // namespace hc
