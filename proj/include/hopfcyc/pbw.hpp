#pragma once

#include "hopfcyc/hopf.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hc {

// Commutative monomials in F-letters, stored as [l1, e1, l2, e2, ...] with
// letters ascending and exponents positive.
using FMono = Word;

FMono fletter(int l, int e = 1);
FMono fmul(const FMono& a, const FMono& b);
int fdegree(const FMono& m);

// The commutative part of a PBW algebra: letters, their ad-Y weights, the
// derivation D = [X, .] and the untwisted coproduct.
class LetterSystem {
 public:
  virtual ~LetterSystem() = default;
  virtual std::string kind() const = 0;
  virtual int weight(int l) const = 0;
  virtual std::string name(int l) const = 0;
  virtual std::optional<int> parse(const std::string& token) const = 0;
  virtual Elem dx(int l) const = 0;                // [X, l] as F-polynomial
  virtual Tensor base_coproduct(int l) const = 0;  // in F (x) F
  virtual int coupling() const = 0;                // c in Delta(X) = X(x)1 + 1(x)X + c(x)Y
  virtual std::vector<int> letters(const Truncation& t) const = 0;

  int weight(const FMono& m) const;
  Elem derivation(const FMono& m) const;  // Leibniz extension of dx
};

// [Delta X, t] for t in F (x) F, i.e. the coproduct of D applied to an element
// whose coproduct is t.
Tensor derived_coproduct(const LetterSystem& L, const Tensor& t);

std::shared_ptr<const LetterSystem> h1_letters();  // d_k, weight k, [X,d_k] = d_{k+1}
std::shared_ptr<const LetterSystem> z_letter();    // Z, weight 1, [X,Z] = Z^2/2
std::shared_ptr<const LetterSystem> tree_letters();  // d_T, weight |T|, [X,d_T] = N(d_T)

constexpr int kMaxDeltaIndex = 24;

struct PbwSpec {
  std::string name;
  bool sigma = false;
  int modulus = 0;  // sigma^N = 1 when N > 0
  bool u = true;    // Y and X present
  std::shared_ptr<const LetterSystem> letters;
};

// Words are [s, p, q, l1, e1, ...] for sigma^s Y^p X^q l1^e1 ... .
// Without U and letters this is the group algebra of <sigma>.
class PbwAlgebra : public HopfAlgebra {
 public:
  explicit PbwAlgebra(PbwSpec spec);

  Word one() const override { return make(0, 0, 0, {}); }
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
  bool is_commutative() const override { return !spec_.u; }

  const PbwSpec& spec() const { return spec_; }
  const LetterSystem* letters() const { return spec_.letters.get(); }
  bool has_sigma() const { return spec_.sigma; }
  int modulus() const { return spec_.modulus; }
  bool has_u() const { return spec_.u; }

  Word make(int s, int p, int q, FMono f) const;
  static int sigma_exp(const Word& w) { return w[0]; }
  static int y_exp(const Word& w) { return w[1]; }
  static int x_exp(const Word& w) { return w[2]; }
  static FMono f_part(const Word& w) { return FMono(w.begin() + 3, w.end()); }
  Word sigma(int k) const { return make(k, 0, 0, {}); }
  Word Y() const { return make(0, 1, 0, {}); }
  Word X() const { return make(0, 0, 1, {}); }
  Word letter(int l, int e = 1) const { return make(0, 0, 0, fletter(l, e)); }
  // Multiplies w by sigma^k.
  Word shift(const Word& w, int k) const;

  // delta(Y) = 1, zero on X and letters, 1 on sigma.
  Character delta() const;

 private:
  Tensor letter_coproduct(const Word& g) const;
  Elem letter_antipode(const Word& g) const;
  // Splits w = prefix * last generator; false for pure sigma powers.
  bool peel(const Word& w, Word& prefix, Word& last) const;

  PbwSpec spec_;
  mutable std::map<std::pair<Word, Word>, Elem> mul_cache_;
  mutable std::map<Word, Tensor> cop_cache_;
  mutable std::map<Word, Elem> anti_cache_;
};

std::shared_ptr<const PbwAlgebra> make_pbw(PbwSpec spec);

}  // namespace hc
