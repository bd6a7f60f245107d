#pragma once

#include "hopfcyc/lincomb.hpp"
#include "hopfcyc/truncation.hpp"

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hc {

class HopfAlgebra {
 public:
  explicit HopfAlgebra(std::string name);
  virtual ~HopfAlgebra() = default;
  HopfAlgebra(const HopfAlgebra&) = delete;
  HopfAlgebra& operator=(const HopfAlgebra&) = delete;

  const std::string& name() const { return name_; }
  int tag() const { return tag_; }

  virtual Word one() const = 0;
  virtual Elem mul(const Word& a, const Word& b) const = 0;
  virtual Tensor coproduct(const Word& w) const = 0;  // degree 2
  virtual Q counit(const Word& w) const = 0;
  virtual Elem antipode(const Word& w) const = 0;
  virtual int weight(const Word& w) const = 0;
  virtual int pbw_degree(const Word& w) const = 0;
  virtual std::string format(const Word& w) const = 0;
  virtual std::vector<Word> basis(const Truncation& t) const = 0;
  virtual std::vector<Word> generators(const Truncation& t) const = 0;
  // Generator letters with exponents whose ordered product is w.
  virtual std::vector<std::pair<Word, int>> factor(const Word& w) const = 0;
  // Generator token ("X", "d2", "s", "s^-1", "dT[[]]", ...) to word.
  virtual std::optional<Word> generator(const std::string& token) const = 0;
  virtual std::optional<Word> group_like(int k) const {
    if (k == 0) return one();
    return std::nullopt;
  }
  virtual bool is_commutative() const { return false; }

 private:
  std::string name_;
  int tag_;
};

using HopfPtr = std::shared_ptr<const HopfAlgebra>;

// ---- element level --------------------------------------------------------

Elem unit(const HopfAlgebra& H);
Elem elem(const HopfAlgebra& H, const Word& w, const Q& c = 1);
Elem mul(const HopfAlgebra& H, const Elem& a, const Elem& b);
Elem power(const HopfAlgebra& H, const Elem& a, int n);
Elem commutator(const HopfAlgebra& H, const Elem& a, const Elem& b);
Tensor coproduct(const HopfAlgebra& H, const Elem& x);
Q counit(const HopfAlgebra& H, const Elem& x);
Elem antipode(const HopfAlgebra& H, const Elem& x);
std::optional<int> weight(const HopfAlgebra& H, const Elem& x);  // nullopt: inhomogeneous
std::string format(const HopfAlgebra& H, const Elem& x);

// Delta^{(n-1)}(w) as an n-fold tensor; n = 0 gives the counit as a scalar.
Tensor iterated_coproduct(const HopfAlgebra& H, const Word& w, int n);

// ---- tensors over a list of slot algebras --------------------------------

using Slots = std::vector<const HopfAlgebra*>;
Slots repeat(const HopfAlgebra& H, int n);

// Replace slot i of every tuple by the tuples of f(word) (which may have any length).
Tensor expand_slot(const Tensor& t, int i, const std::function<Tensor(const Word&)>& f);
Tensor map_slot(const Tensor& t, int i, const std::function<Elem(const Word&)>& f);
// Slotwise product a*b of two tensors of equal degree.
Tensor mul_slots(const Slots& S, const Tensor& a, const Tensor& b);
Tensor mul_slots(const Slots& S, const Tuple& a, const Tuple& b);
std::string format(const Slots& S, const Tensor& t);
// Slot i of word w -> (text, PBW degree used for display order).
using SlotFormat = std::function<std::pair<std::string, int>(std::size_t, const Word&)>;
std::string format_with(const Tensor& t, const SlotFormat& f);
std::string format(const HopfAlgebra& H, const Tensor& t);

// ---- characters, twisted antipodes, modular pairs -------------------------

struct Character {
  std::string name;
  std::function<Q(const Word&)> value;
  Q operator()(const Word& w) const { return value(w); }
  Q operator()(const Elem& x) const;
};

// Multiplicative extension of generator values given by token.
Character make_character(const HopfAlgebra& H, std::string name,
                         const std::vector<std::pair<std::string, Q>>& values);
Character counit_character(const HopfAlgebra& H);

// S_delta(h) = delta(h_(1)) S(h_(2))
Elem twisted_antipode(const HopfAlgebra& H, const Character& delta, const Word& w);
Elem twisted_antipode(const HopfAlgebra& H, const Character& delta, const Elem& x);

struct ModularPair {
  Character delta;
  Word sigma;
  Word sigma_inv;
};

// ---- reports ---------------------------------------------------------------

struct CheckReport {
  CheckReport(std::string name = {}) : check(std::move(name)) {}

  std::string check;
  bool pass = true;
  std::string witness;
  std::string detail;
  long count = 0;
  std::vector<std::string> failures;  // every failing witness, capped

  static constexpr std::size_t kMaxFailures = 64;

  void fail(std::string w, std::string d = {}) {
    if (failures.size() < kMaxFailures) failures.push_back(w);
    if (!pass) return;  // keep the first (minimal) witness
    pass = false;
    witness = std::move(w);
    detail = std::move(d);
  }
};

bool all_pass(const std::vector<CheckReport>& rs);

// Coassociativity, counit and antipode identities on the capped basis.
std::vector<CheckReport> check_hopf(const HopfAlgebra& H, const Truncation& t);
// Associativity of the normal form on triples drawn from the capped basis.
CheckReport check_associativity(const HopfAlgebra& H, const std::vector<Word>& words);
CheckReport check_character(const HopfAlgebra& H, const Character& chi, const Truncation& t);
CheckReport check_mpi(const HopfAlgebra& H, const ModularPair& pair, const Truncation& t);

}  // namespace hc
