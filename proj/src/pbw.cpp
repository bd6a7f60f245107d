#include "hopfcyc/pbw.hpp"

#include "hopfcyc/trees.hpp"

#include <algorithm>
#include <cctype>

namespace hc {

FMono fletter(int l, int e) { return e == 0 ? FMono{} : FMono{l, e}; }

FMono fmul(const FMono& a, const FMono& b) {
  FMono r;
  r.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i] < b[j])) {
      r.push_back(a[i]);
      r.push_back(a[i + 1]);
      i += 2;
    } else if (i == a.size() || b[j] < a[i]) {
      r.push_back(b[j]);
      r.push_back(b[j + 1]);
      j += 2;
    } else {
      r.push_back(a[i]);
      r.push_back(a[i + 1] + b[j + 1]);
      i += 2;
      j += 2;
    }
  }
  return r;
}

int fdegree(const FMono& m) {
  int d = 0;
  for (std::size_t i = 1; i < m.size(); i += 2) d += m[i];
  return d;
}

int LetterSystem::weight(const FMono& m) const {
  int w = 0;
  for (std::size_t i = 0; i < m.size(); i += 2) w += m[i + 1] * weight(m[i]);
  return w;
}

Elem LetterSystem::derivation(const FMono& m) const {
  Elem out;
  for (std::size_t i = 0; i < m.size(); i += 2) {
    FMono rest = m;
    if (--rest[i + 1] == 0) rest.erase(rest.begin() + i, rest.begin() + i + 2);
    for (const auto& [d, c] : dx(m[i])) out.add(fmul(rest, d), c * m[i + 1]);
  }
  return out;
}

Tensor derived_coproduct(const LetterSystem& L, const Tensor& t) {
  Tensor out;
  FMono c = fletter(L.coupling());
  for (const auto& [tup, k] : t) {
    const FMono& a = tup[0];
    const FMono& b = tup[1];
    for (const auto& [da, x] : L.derivation(a)) out.add(Tuple{da, b}, k * x);
    for (const auto& [db, x] : L.derivation(b)) out.add(Tuple{a, db}, k * x);
    int wb = L.weight(b);
    if (wb) out.add(Tuple{fmul(c, a), b}, k * wb);
  }
  return out;
}

namespace {

Tensor primitive(int l) {
  Tensor t;
  t.add(Tuple{fletter(l), {}}, 1);
  t.add(Tuple{{}, fletter(l)}, 1);
  return t;
}

class H1Letters : public LetterSystem {
 public:
  std::string kind() const override { return "h1"; }
  int weight(int l) const override { return l; }
  std::string name(int l) const override { return "d" + std::to_string(l); }
  std::optional<int> parse(const std::string& tok) const override {
    if (tok.size() < 2 || tok[0] != 'd' || !std::all_of(tok.begin() + 1, tok.end(), ::isdigit)) return std::nullopt;
    int k = std::stoi(tok.substr(1));
    if (k < 1) return std::nullopt;
    if (k > kMaxDeltaIndex) throw CapExceeded("d-index " + std::to_string(k) + " exceeds cap");
    return k;
  }
  Elem dx(int l) const override {
    if (l + 1 > kMaxDeltaIndex) throw CapExceeded("d-index " + std::to_string(l + 1) + " exceeds cap");
    return Elem(fletter(l + 1));
  }
  Tensor base_coproduct(int l) const override {
    auto it = cache_.find(l);
    if (it != cache_.end()) return it->second;
    if (l > kMaxDeltaIndex) throw CapExceeded("d-index " + std::to_string(l) + " exceeds cap");
    Tensor t = l == 1 ? primitive(1) : derived_coproduct(*this, base_coproduct(l - 1));
    cache_.emplace(l, t);
    return t;
  }
  int coupling() const override { return 1; }
  std::vector<int> letters(const Truncation& t) const override {
    std::vector<int> v;
    for (int k = 1; k <= std::min(t.letter_cap, kMaxDeltaIndex); ++k) v.push_back(k);
    return v;
  }

 private:
  mutable std::map<int, Tensor> cache_;
};

class ZLetter : public LetterSystem {
 public:
  std::string kind() const override { return "z"; }
  int weight(int) const override { return 1; }
  std::string name(int) const override { return "Z"; }
  std::optional<int> parse(const std::string& tok) const override {
    if (tok == "Z") return 1;
    return std::nullopt;
  }
  Elem dx(int) const override { return Elem(fletter(1, 2), Q(1, 2)); }
  Tensor base_coproduct(int l) const override { return primitive(l); }
  int coupling() const override { return 1; }
  std::vector<int> letters(const Truncation&) const override { return {1}; }
};

// Letter l is tree id l - 1.
class TreeLetters : public LetterSystem {
 public:
  std::string kind() const override { return "trees"; }
  int weight(int l) const override { return trees::size(l - 1); }
  std::string name(int l) const override { return "dT" + trees::format(l - 1); }
  std::optional<int> parse(const std::string& tok) const override {
    if (tok.rfind("dT", 0) != 0) return std::nullopt;
    return trees::parse(tok.substr(2)) + 1;
  }
  Elem dx(int l) const override {
    Elem out;
    for (const auto& [g, m] : trees::graft(l - 1)) out.add(fletter(g + 1), m);
    return out;
  }
  Tensor base_coproduct(int l) const override {
    Tensor t;
    t.add(Tuple{fletter(l), {}}, 1);
    for (const auto& cut : trees::simple_cuts(l - 1)) {
      FMono p;
      for (int id : cut.pruned) p = fmul(p, fletter(id + 1));
      t.add(Tuple{p, fletter(cut.trunk + 1)}, cut.mult);
    }
    return t;
  }
  int coupling() const override { return 1; }
  std::vector<int> letters(const Truncation& t) const override {
    std::vector<int> v;
    for (int id : trees::up_to(std::min(t.tree_cap, trees::kMaxSize))) v.push_back(id + 1);
    return v;
  }
};

}  // namespace

std::shared_ptr<const LetterSystem> h1_letters() {
  static auto p = std::make_shared<const H1Letters>();
  return p;
}
std::shared_ptr<const LetterSystem> z_letter() {
  static auto p = std::make_shared<const ZLetter>();
  return p;
}
std::shared_ptr<const LetterSystem> tree_letters() {
  static auto p = std::make_shared<const TreeLetters>();
  return p;
}

// ---------------------------------------------------------------------------

PbwAlgebra::PbwAlgebra(PbwSpec spec) : HopfAlgebra(spec.name), spec_(std::move(spec)) {
  if (spec_.modulus < 0) throw std::invalid_argument("modulus must be >= 0");
}

std::shared_ptr<const PbwAlgebra> make_pbw(PbwSpec spec) { return std::make_shared<const PbwAlgebra>(std::move(spec)); }

Word PbwAlgebra::make(int s, int p, int q, FMono f) const {
  if (!spec_.sigma && s != 0) throw std::logic_error(name() + " has no group-like sigma");
  if (spec_.modulus > 0) s = ((s % spec_.modulus) + spec_.modulus) % spec_.modulus;
  Word w{s, p, q};
  w.insert(w.end(), f.begin(), f.end());
  return w;
}

Word PbwAlgebra::shift(const Word& w, int k) const {
  Word r = w;
  r[0] += k;
  if (spec_.modulus > 0) r[0] = ((r[0] % spec_.modulus) + spec_.modulus) % spec_.modulus;
  return r;
}

Elem PbwAlgebra::mul(const Word& a, const Word& b) const {
  auto key = std::make_pair(a, b);
  if (auto it = mul_cache_.find(key); it != mul_cache_.end()) return it->second;

  const LetterSystem* L = letters();
  // Terms Y^y X^x g stored as [y, x, g...]; first f_a * Y^pb X^qb.
  Elem cur;
  {
    Word k{0, 0};
    FMono fa = f_part(a);
    k.insert(k.end(), fa.begin(), fa.end());
    cur.add(k, 1);
  }
  for (int i = 0; i < y_exp(b); ++i) {
    Elem next;
    for (const auto& [k, c] : cur) {
      Word up = k;
      ++up[0];
      next.add(up, c);
      int shift = k[1] + (L ? L->weight(FMono(k.begin() + 2, k.end())) : 0);
      if (shift) next.add(k, -c * shift);
    }
    cur = std::move(next);
  }
  for (int i = 0; i < x_exp(b); ++i) {
    Elem next;
    for (const auto& [k, c] : cur) {
      Word up = k;
      ++up[1];
      next.add(up, c);
      if (!L) continue;
      for (const auto& [d, e] : L->derivation(FMono(k.begin() + 2, k.end()))) {
        Word t{k[0], k[1]};
        t.insert(t.end(), d.begin(), d.end());
        next.add(t, -c * e);
      }
    }
    cur = std::move(next);
  }
  // X^qa Y^y = (Y - qa)^y X^qa
  Elem out(tag());
  int s = sigma_exp(a) + sigma_exp(b);
  int qa = x_exp(a);
  FMono fb = f_part(b);
  for (const auto& [k, c] : cur) {
    int y = k[0];
    FMono g = fmul(FMono(k.begin() + 2, k.end()), fb);
    mpz_class pw = 1;  // (-qa)^(y-i), built from i = y downwards
    for (int i = y; i >= 0; --i) {
      mpz_class bin;
      mpz_bin_uiui(bin.get_mpz_t(), y, i);
      if (pw != 0) out.add(make(s, y_exp(a) + i, qa + k[1], g), c * Q(bin * pw));
      pw *= -qa;
    }
  }
  mul_cache_.emplace(std::move(key), out);
  return out;
}

bool PbwAlgebra::peel(const Word& w, Word& prefix, Word& last) const {
  FMono f = f_part(w);
  if (!f.empty()) {
    int l = f[f.size() - 2];
    FMono rest = f;
    if (--rest.back() == 0) rest.resize(rest.size() - 2);
    prefix = make(sigma_exp(w), y_exp(w), x_exp(w), rest);
    last = letter(l);
    return true;
  }
  if (x_exp(w) > 0) {
    prefix = make(sigma_exp(w), y_exp(w), x_exp(w) - 1, {});
    last = X();
    return true;
  }
  if (y_exp(w) > 0) {
    prefix = make(sigma_exp(w), y_exp(w) - 1, 0, {});
    last = Y();
    return true;
  }
  return false;
}

Tensor PbwAlgebra::letter_coproduct(const Word& g) const {
  Tensor t(tag());
  Word e = one();
  if (g == Y()) {
    t.add(Tuple{Y(), e}, 1);
    t.add(Tuple{e, Y()}, 1);
  } else if (g == X()) {
    t.add(Tuple{X(), e}, 1);
    t.add(Tuple{spec_.sigma ? sigma(1) : e, X()}, 1);
    if (letters()) t.add(Tuple{letter(letters()->coupling()), Y()}, 1);
  } else {
    const LetterSystem* L = letters();
    FMono f = f_part(g);
    for (const auto& [tup, c] : L->base_coproduct(f[0])) {
      int tw = spec_.sigma ? L->weight(tup[1]) : 0;
      t.add(Tuple{make(tw, 0, 0, tup[0]), make(0, 0, 0, tup[1])}, c);
    }
  }
  return t;
}

Tensor PbwAlgebra::coproduct(const Word& w) const {
  if (auto it = cop_cache_.find(w); it != cop_cache_.end()) return it->second;
  int s = sigma_exp(w);
  Word body = shift(w, -s);
  Tensor r(tag());
  Word prefix, last;
  if (!peel(body, prefix, last)) {
    r.add(Tuple{w, w}, 1);
  } else {
    Tensor d = mul_slots(Slots{this, this}, coproduct(prefix), letter_coproduct(last));
    if (s == 0) {
      r = std::move(d);
    } else {
      for (const auto& [tup, c] : d) r.add(Tuple{shift(tup[0], s), shift(tup[1], s)}, c);
    }
  }
  r.set_tag(tag());
  cop_cache_.emplace(w, r);
  return r;
}

Q PbwAlgebra::counit(const Word& w) const { return (y_exp(w) == 0 && x_exp(w) == 0 && w.size() == 3) ? 1 : 0; }

Elem PbwAlgebra::letter_antipode(const Word& g) const {
  if (g == Y()) return elem(*this, Y(), -1);
  // S(g) = eps(g) - sum over (a (x) b) != (g (x) 1) of S(a) b
  Elem out = elem(*this, one(), counit(g));
  for (const auto& [tup, c] : letter_coproduct(g)) {
    if (tup[0] == g && tup[1] == one()) {
      if (c != 1) throw std::logic_error("letter coproduct lacks g(x)1 with coefficient 1");
      continue;
    }
    out.add(hc::mul(*this, antipode(tup[0]), elem(*this, tup[1])), -c);
  }
  return out;
}

Elem PbwAlgebra::antipode(const Word& w) const {
  if (auto it = anti_cache_.find(w); it != anti_cache_.end()) return it->second;
  int s = sigma_exp(w);
  Word body = shift(w, -s);
  Elem r(tag());
  Word prefix, last;
  if (!peel(body, prefix, last)) {
    r.add(sigma(-s), 1);
  } else {
    Elem core = hc::mul(*this, letter_antipode(last), antipode(prefix));
    for (const auto& [v, c] : core) r.add(shift(v, -s), c);
  }
  anti_cache_.emplace(w, r);
  return r;
}

int PbwAlgebra::weight(const Word& w) const { return x_exp(w) + (letters() ? letters()->weight(f_part(w)) : 0); }

int PbwAlgebra::pbw_degree(const Word& w) const { return y_exp(w) + x_exp(w) + fdegree(f_part(w)); }

std::string PbwAlgebra::format(const Word& w) const {
  std::vector<std::string> parts;
  auto pw = [&](const std::string& base, int e) {
    if (e == 1)
      parts.push_back(base);
    else if (e != 0)
      parts.push_back(base + "^" + std::to_string(e));
  };
  pw("s", sigma_exp(w));
  pw("Y", y_exp(w));
  pw("X", x_exp(w));
  FMono f = f_part(w);
  for (std::size_t i = 0; i < f.size(); i += 2) pw(letters()->name(f[i]), f[i + 1]);
  if (parts.empty()) return "1";
  std::string out = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) out += "*" + parts[i];
  return out;
}

std::vector<Word> PbwAlgebra::basis(const Truncation& t) const {
  t.validate();
  std::vector<int> sig;
  if (!spec_.sigma)
    sig = {0};
  else if (spec_.modulus > 0)
    for (int s = 0; s < spec_.modulus; ++s) sig.push_back(s);
  else
    for (int s = t.sigma_lo; s <= t.sigma_hi; ++s) sig.push_back(s);
  std::vector<int> ls = letters() ? letters()->letters(t) : std::vector<int>{};

  std::vector<std::pair<int, Word>> found;
  // multisets of size m from ls starting at index i
  std::vector<FMono> monos_by_size[64];
  int cap = std::min(t.pbw_cap, 63);
  monos_by_size[0].push_back({});
  for (int m = 1; m <= cap; ++m)
    for (const FMono& f : monos_by_size[m - 1]) {
      int start = f.empty() ? 0 : static_cast<int>(std::find(ls.begin(), ls.end(), f[f.size() - 2]) - ls.begin());
      for (int i = start; i < static_cast<int>(ls.size()); ++i) monos_by_size[m].push_back(fmul(f, fletter(ls[i])));
    }
  for (int deg = 0; deg <= cap; ++deg) {
    int umax = spec_.u ? deg : 0;
    for (int p = 0; p <= umax; ++p)
      for (int q = 0; q <= umax - p; ++q)
        for (const FMono& f : monos_by_size[deg - p - q])
          for (int s : sig) {
            Word w = make(s, p, q, f);
            if (t.weight && weight(w) != *t.weight) continue;
            found.emplace_back(deg, w);
          }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  std::vector<Word> out;
  out.reserve(found.size());
  for (auto& [d, w] : found) out.push_back(std::move(w));
  return out;
}

std::vector<Word> PbwAlgebra::generators(const Truncation& t) const {
  std::vector<Word> g;
  if (spec_.sigma) {
    g.push_back(sigma(1));
    if (spec_.modulus == 0) g.push_back(sigma(-1));
  }
  if (spec_.u) {
    g.push_back(Y());
    g.push_back(X());
  }
  if (letters())
    for (int l : letters()->letters(t)) g.push_back(letter(l));
  return g;
}

std::vector<std::pair<Word, int>> PbwAlgebra::factor(const Word& w) const {
  std::vector<std::pair<Word, int>> out;
  if (sigma_exp(w)) out.emplace_back(sigma(1), sigma_exp(w));
  if (y_exp(w)) out.emplace_back(Y(), y_exp(w));
  if (x_exp(w)) out.emplace_back(X(), x_exp(w));
  FMono f = f_part(w);
  for (std::size_t i = 0; i < f.size(); i += 2) out.emplace_back(letter(f[i]), f[i + 1]);
  return out;
}

std::optional<Word> PbwAlgebra::generator(const std::string& tok) const {
  if (spec_.sigma) {
    if (tok == "s") return sigma(1);
    if (tok.rfind("s^-", 0) == 0 && tok.size() > 3 && std::all_of(tok.begin() + 3, tok.end(), ::isdigit))
      return sigma(-std::stoi(tok.substr(3)));
  }
  if (spec_.u) {
    if (tok == "X") return X();
    if (tok == "Y") return Y();
  }
  if (letters())
    if (auto l = letters()->parse(tok)) return letter(*l);
  return std::nullopt;
}

std::optional<Word> PbwAlgebra::group_like(int k) const {
  if (k == 0) return one();
  if (spec_.sigma) return sigma(k);
  return std::nullopt;
}

Character PbwAlgebra::delta() const {
  return Character{"delta", [](const Word& w) { return Q((x_exp(w) == 0 && w.size() == 3) ? 1 : 0); }};
}

}  // namespace hc
