#pragma once

#include "hopfcyc/bicocyclic.hpp"
#include "hopfcyc/homotopy.hpp"
#include "hopfcyc/matrix.hpp"
#include "hopfcyc/pbw.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hc {

// ---- truncated bicomplex -----------------------------------------------------------

// Normalized cochains of a CrossedBicocyclic module C^{p,q} = K^{(x) p} (x) H^{(x) q}
// of one ad-Y weight, with at most `letter_cap` PBW letters summed over the H
// slots.  Every slot holds a non-unit basis word, so K and H must have all
// non-unit basis words in the kernel of the counit.  The differentials are
// assembled only if they stay inside the truncation; otherwise CapExceeded.
class WeightBicomplex {
 public:
  WeightBicomplex(std::shared_ptr<const CrossedBicocyclic> B, int weight, int letter_cap, int max_total);

  const CrossedBicocyclic& module() const { return *B_; }
  int weight() const { return weight_; }
  int letter_cap() const { return letter_cap_; }
  int max_total() const { return max_total_; }

  int dim(int p, int q) const;
  const std::vector<Tuple>& basis(int p, int q) const;
  // up arrow b: (p, q) -> (p, q + 1);  right arrow b: (p, q) -> (p + 1, q)
  const SparseMatrix& vertical(int p, int q) const;
  const SparseMatrix& horizontal(int p, int q) const;

  // Total degree n: blocks (p, n - p) for p = 0..n in that order.
  int total_dim(int n) const;
  int offset(int p, int n) const;
  // b_T = right b + (-1)^p up b, from degree n to n + 1 (n < max_total).
  SparseMatrix total(int n) const;
  Tensor to_tensor(const Vec& v, int p, int q) const;  // block (p, q) of a degree p+q vector
  Vec from_tensor(const Tensor& x, int p, int q) const;

 private:
  struct Block {
    std::vector<Tuple> basis;
    std::map<Tuple, int> index;
  };
  const Block& block(int p, int q) const;
  SparseMatrix assemble(int p, int q, bool vertical) const;

  std::shared_ptr<const CrossedBicocyclic> B_;
  int weight_, letter_cap_, max_total_;
  std::map<std::pair<int, int>, Block> blocks_;
  std::map<std::pair<int, int>, SparseMatrix> vert_, horiz_;
};

// ---- spectral sequence ---------------------------------------------------------------

enum class Filtration { columns, rows };  // F^s = sum over p >= s, or over q >= s

struct PageEntry {
  int page = 0;
  int p = 0, q = 0;
  int dim = 0;
  std::vector<Tensor> representatives;  // block (p, q) of cocycle lifts
};

// E_r^{p,q} for r = 1..max_page and p + q <= max_degree (< max_total), from
// E_r = Z_r / (Z_{r-1}^{s+1} + d Z_{r-1}^{s-r+1}) on the truncated total complex.
// Page r has differential d_r of bidegree (r, 1 - r) for column filtration.
std::vector<PageEntry> spectral_pages(const WeightBicomplex& C, Filtration f, int max_page, int max_degree);

// dim H^q of column p under up arrow b, for q = 0..max_q (< max_total - p).
std::vector<int> column_cohomology(const WeightBicomplex& C, int p, int max_q);

// M_{n+1} M_n = 0 for every total degree.
CheckReport check_total_square(const WeightBicomplex& C);

// C(F, U) for the bicrossed decompositions of h1 (F = d_k), h1s (F = C[Z]) and hck
// (F = H_rt), with (delta, 1) on U; rows are only cosimplicial.
struct BicrossedData {
  std::string algebra;
  std::shared_ptr<const PbwAlgebra> direct, U, F;
  CrossedPtr product;
  std::shared_ptr<const CrossedBicocyclic> bicomplex;
};
BicrossedData bicrossed_data(const std::string& algebra);

// Page numbering.  `standard`: E_{r+1} = H(E_r, d_r) with E_1 the column
// cohomology.  `diagram`: the numbering of the published page diagrams, where
// E_2 is E_1 drawn with its d_1 arrows and E_3 is the d_1-cohomology, i.e.
// diagram r shows standard max(1, r - 1).
enum class PageLabels { standard, diagram };

// Weight-w pages r = 1, 2, 3 under the column filtration, p + q <= 3.
std::vector<PageEntry> weight_pages(const std::string& algebra, int weight, int letter_cap,
                                    PageLabels labels = PageLabels::standard);

// ---- Cotor for the covers ----------------------------------------------------------------

// H (x)_K K^{(x) p} rows of C(K, H) for H = h1 | hck, K = C[Z/N], pair (eps, s^k) on K.
struct CotorReport {
  std::string base;
  int N = 0, k = 0;
  // E_1 of the row filtration: dim H^p of row q, summed over the capped
  // normalized basis of H^{(x) q}, p <= max_p.
  std::vector<PageEntry> entries;
  std::vector<int> surviving;  // weight residues mod N with nonzero H^0
  bool weight_one_survives = false;
  std::string verdict;  // "nontrivial" or "contractible weight"
  std::vector<CheckReport> checks;
};

// Row cohomology by direct cobar computation, checked against the 2-periodic
// complex (theta~, gamma~) with theta~ + gamma~ = Id, theta~ gamma~ = gamma~ theta~ = 0
// and s d + d s = Id off weight -k, where s runs the same maps backwards.
CotorReport cotor_pages(const std::string& base, int N, int k, const Truncation& t, int max_q = 2, int max_p = 2);

// ---- transfer of classes ---------------------------------------------------------------

struct Transfer {
  std::string name;
  std::string algebra;      // target algebra name
  int level = 0;
  int sigma_power = 0;      // modular pair (delta, s^k) of the target
  std::string source;       // E-page class fed to AW
  Tensor cochain;           // in the target algebra
  std::string formatted;
  std::vector<CheckReport> checks;  // verify_cocycle and agreement with the named cocycle
};

// Names: GV, TF (h1), Z, TFs (h1s), deltaStar, TFck (hck), GVdag, TFdag (h1dag),
// deltaStarDag, TFckdag (hckdag).  Covers use K = C[Z/N] (N = 0: infinite).
// The result must be a nonzero multiple of the named cocycle modulo (b + B) of
// capped cochains.
Transfer transfer_class(const std::string& name, int N = 0);
std::vector<std::string> transfer_names();

// ---- coboundaries at a cap ----------------------------------------------------------------

struct MembershipCaps {
  int max_level = 3;  // preimage levels
  int y_cap = 3;      // Y exponents summed over the slots
};

struct Membership {
  bool member = false;
  bool conclusive = false;  // false answers only hold at the cap
  MixedCochain preimage;
  std::string note;
};

// Whether a weight-homogeneous (b + B)-cocycle of the standard module lies in
// (b + B) of normalized cochains of the same weight at levels <= max_level and
// Y-degree <= y_cap.  Positive answers carry a verified preimage.
Membership coboundary_membership(const StandardModule& M, const MixedCochain& x, const MembershipCaps& caps);

}  // namespace hc
