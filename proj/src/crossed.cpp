#include "hopfcyc/crossed.hpp"

#include <algorithm>
#include <stdexcept>

namespace hc {

namespace {

// Ordered generator sequence whose product is w (negative exponents use the
// inverse group-like).
std::vector<Word> generator_sequence(const HopfAlgebra& A, const Word& w) {
  std::vector<Word> seq;
  for (const auto& [g, e] : A.factor(w)) {
    Word base = g;
    if (e < 0) {
      Elem inv = A.antipode(g);
      base = inv.begin()->first;
    }
    for (int i = 0; i < std::abs(e); ++i) seq.push_back(base);
  }
  return seq;
}

Elem product(const HopfAlgebra& A, const std::vector<Word>& seq, std::size_t n) {
  Elem r = unit(A);
  for (std::size_t i = 0; i < n; ++i) r = mul(A, r, elem(A, seq[i]));
  return r;
}

}  // namespace

// ---- coactions -------------------------------------------------------------

Coaction::Coaction(const HopfAlgebra& K, const HopfAlgebra& H, Rule rule, std::string name)
    : K_(&K), H_(&H), rule_(std::move(rule)), name_(std::move(name)) {}

Tensor Coaction::operator()(const Word& h) const {
  auto it = cache_.find(h);
  if (it != cache_.end()) return it->second;
  Tensor r = rule_(h);
  r.set_tag(0);
  cache_.emplace(h, r);
  return r;
}

Tensor Coaction::operator()(const Elem& h) const {
  Tensor out;
  for (const auto& [w, c] : h) out.add((*this)(w), c);
  return out;
}

Tensor Coaction::iterated(const Word& h, int m) const {
  Tensor t(Tuple{h});
  for (int i = 0; i < m; ++i) t = expand_slot(t, i, [&](const Word& v) { return (*this)(v); });
  return t;
}

CoactionPtr weight_coaction(const HopfAlgebra& K, const HopfAlgebra& H) {
  return std::make_shared<const Coaction>(
      K, H,
      [&K, &H](const Word& h) {
        auto s = K.group_like(H.weight(h));
        if (!s) throw std::invalid_argument(K.name() + " has no group-like of the required exponent");
        return Tensor(Tuple{*s, h});
      },
      "weight");
}

CoactionPtr trivial_coaction(const HopfAlgebra& K, const HopfAlgebra& H) {
  return std::make_shared<const Coaction>(
      K, H, [&K](const Word& h) { return Tensor(Tuple{K.one(), h}); }, "trivial");
}

CoactionPtr corrupted_coaction(const HopfAlgebra& K, const HopfAlgebra& H, std::map<Word, int> overrides) {
  return std::make_shared<const Coaction>(
      K, H,
      [&K, &H, overrides](const Word& h) {
        auto it = overrides.find(h);
        int e = it == overrides.end() ? H.weight(h) : it->second;
        return Tensor(Tuple{*K.group_like(e), h});
      },
      "corrupted");
}

std::vector<CheckReport> check_comodule_hopf(const Coaction& rho, const Truncation& t) {
  const HopfAlgebra& K = rho.K();
  const HopfAlgebra& H = rho.H();
  Slots KH{&K, &H};
  CheckReport ca1{"c-a-1"}, ca2{"c-a-2"}, cc1{"c-c-1"}, cc2{"c-c-2"}, col{"antipode-colinear"};
  auto words = H.basis(t);

  for (const Word& a : words)
    for (const Word& b : words) {
      Tensor lhs = rho(H.mul(a, b));
      Tensor rhs = mul_slots(KH, rho(a), rho(b));
      if (lhs != rhs) ca1.fail(H.format(a) + " | " + H.format(b), format(KH, lhs) + " vs " + format(KH, rhs));
      ++ca1.count;
    }

  if (rho(H.one()) != Tensor(Tuple{K.one(), H.one()})) ca2.fail("1");
  ++ca2.count;

  for (const Word& h : words) {
    Tensor lhs;
    for (const auto& [tup, c] : H.coproduct(h))
      for (const auto& [t1, c1] : rho(tup[0]))
        for (const auto& [t2, c2] : rho(tup[1]))
          for (const auto& [k, d] : K.mul(t1[0], t2[0])) lhs.add(Tuple{k, t1[1], t2[1]}, c * c1 * c2 * d);
    Tensor rhs = expand_slot(rho(h), 1, [&](const Word& v) { return H.coproduct(v); });
    if (lhs != rhs) cc1.fail(H.format(h));
    ++cc1.count;

    Elem e;
    for (const auto& [tup, c] : rho(h)) e.add(tup[1], c * K.counit(tup[0]));
    if (e != Elem(h)) cc2.fail(H.format(h));
    ++cc2.count;

    Tensor l2 = map_slot(rho(h), 1, [&](const Word& v) { return H.antipode(v); });
    Tensor r2 = rho(H.antipode(h));
    if (l2 != r2) col.fail(H.format(h));
    ++col.count;
  }
  return {ca1, ca2, cc1, cc2, col};
}

CheckReport check_colinear(const Coaction& rho, const Character& alpha, const Truncation& t) {
  CheckReport r{"colinear:" + alpha.name};
  const HopfAlgebra& K = rho.K();
  for (const Word& h : rho.H().basis(t)) {
    Elem lhs;
    for (const auto& [tup, c] : rho(h)) lhs.add(tup[0], c * alpha(tup[1]));
    if (lhs != Elem(K.one(), alpha(h))) r.fail(rho.H().format(h));
    ++r.count;
  }
  return r;
}

CheckReport check_stable(const Coaction& rho, const Character& beta, const Truncation& t) {
  CheckReport r{"stable:" + beta.name};
  const HopfAlgebra& H = rho.H();
  std::vector<Word> words = H.generators(t);
  for (const Word& w : H.basis(t))
    if (std::find(words.begin(), words.end(), w) == words.end()) words.push_back(w);
  for (const Word& h : words) {
    Elem lhs;
    for (const auto& [tup, c] : rho(h)) lhs.add(tup[1], c * beta(tup[0]));
    if (lhs != Elem(h)) r.fail(H.format(h), "beta(h_(-1)) h_(0) = " + format(H, lhs));
    ++r.count;
  }
  return r;
}

CheckReport check_coinvariant(const Coaction& rho, const Word& mu) {
  CheckReport r{"coinvariant"};
  if (rho(mu) != Tensor(Tuple{rho.K().one(), mu})) r.fail(rho.H().format(mu));
  r.count = 1;
  return r;
}

// ---- right actions -----------------------------------------------------------

RightAction::RightAction(const HopfAlgebra& F, const HopfAlgebra& U, Rule rule)
    : F_(&F), U_(&U), rule_(std::move(rule)) {}

Elem RightAction::act(const Word& f, const Word& u) const {
  Elem cur = elem(*F_, f);
  for (const Word& g : generator_sequence(*U_, u)) {
    Elem next(F_->tag());
    for (const auto& [w, c] : cur) next.add(act_gen(w, g), c);
    cur = std::move(next);
  }
  return cur;
}

Elem RightAction::act(const Elem& f, const Word& u) const {
  Elem out(F_->tag());
  for (const auto& [w, c] : f) out.add(act(w, u), c);
  return out;
}

Elem RightAction::act_gen(const Word& f, const Word& g) const {
  auto key = std::make_pair(f, g);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  Elem out(F_->tag());
  auto seq = generator_sequence(*F_, f);
  if (seq.empty()) {
    out = elem(*F_, f, U_->counit(g));
  } else if (seq.size() == 1) {
    out = rule_(f, g);
  } else {
    // (p l) <| g = (p <| g_(1)) (l <| g_(2))
    Elem prefix = product(*F_, seq, seq.size() - 1);
    const Word& last = seq.back();
    for (const auto& [tup, c] : U_->coproduct(g))
      out.add(mul(*F_, act(prefix, tup[0]), act(last, tup[1])), c);
  }
  cache_.emplace(key, out);
  return out;
}

// ---- crossed products ---------------------------------------------------------

CrossedProduct::CrossedProduct(std::string name, HopfPtr H, HopfPtr K, CoactionPtr rho,
                               std::shared_ptr<const RightAction> action)
    : HopfAlgebra(std::move(name)), H_(std::move(H)), K_(std::move(K)), rho_(std::move(rho)),
      action_(std::move(action)) {}

Elem CrossedProduct::mul(const Word& a, const Word& b) const {
  auto key = std::make_pair(a, b);
  auto it = mul_cache_.find(key);
  if (it != mul_cache_.end()) return it->second;
  auto [h, k] = unpack_pair(a);
  auto [h2, k2] = unpack_pair(b);
  Elem out(tag());
  if (!action_) {
    for (const auto& [x, c] : H_->mul(h, h2))
      for (const auto& [y, d] : K_->mul(k, k2)) out.add(pack_pair(x, y), c * d);
  } else {
    // (u >< f)(u' >< f') = u u'_(1) >< (f <| u'_(2)) f'
    for (const auto& [tup, c] : H_->coproduct(h2)) {
      Elem left = H_->mul(h, tup[0]);
      Elem right = hc::mul(*K_, action_->act(k, tup[1]), elem(*K_, k2));
      for (const auto& [x, cx] : left)
        for (const auto& [y, cy] : right) out.add(pack_pair(x, y), c * cx * cy);
    }
  }
  mul_cache_.emplace(key, out);
  return out;
}

Tensor CrossedProduct::coproduct(const Word& w) const {
  auto it = cop_cache_.find(w);
  if (it != cop_cache_.end()) return it->second;
  auto [h, k] = unpack_pair(w);
  Tensor out(tag());
  Tensor dk = K_->coproduct(k);
  for (const auto& [th, ch] : H_->coproduct(h))
    for (const auto& [tr, cr] : (*rho_)(th[1]))
      for (const auto& [tk, ck] : dk)
        for (const auto& [kk, cm] : K_->mul(tr[0], tk[0]))
          out.add(Tuple{pack_pair(th[0], kk), pack_pair(tr[1], tk[1])}, ch * cr * ck * cm);
  cop_cache_.emplace(w, out);
  return out;
}

Q CrossedProduct::counit(const Word& w) const {
  auto [h, k] = unpack_pair(w);
  return H_->counit(h) * K_->counit(k);
}

Elem CrossedProduct::antipode(const Word& w) const {
  auto it = anti_cache_.find(w);
  if (it != anti_cache_.end()) return it->second;
  auto [h, k] = unpack_pair(w);
  Elem out(tag());
  // S(h >< k) = (1 >< S(h_(-1) k)) (S(h_(0)) >< 1)
  for (const auto& [tr, cr] : (*rho_)(h)) {
    Elem sk = hc::antipode(*K_, K_->mul(tr[0], k));
    Elem sh = H_->antipode(tr[1]);
    for (const auto& [kw, ck] : sk)
      for (const auto& [hw, chh] : sh)
        out.add(mul(pack_pair(H_->one(), kw), pack_pair(hw, K_->one())), cr * ck * chh);
  }
  anti_cache_.emplace(w, out);
  return out;
}

int CrossedProduct::weight(const Word& w) const {
  auto [h, k] = unpack_pair(w);
  return H_->weight(h) + K_->weight(k);
}

int CrossedProduct::pbw_degree(const Word& w) const {
  auto [h, k] = unpack_pair(w);
  return H_->pbw_degree(h) + K_->pbw_degree(k);
}

std::string CrossedProduct::format(const Word& w) const {
  auto [h, k] = unpack_pair(w);
  if (k == K_->one()) return H_->format(h);
  if (h == H_->one()) return K_->format(k);
  return H_->format(h) + "*" + K_->format(k);
}

std::vector<Word> CrossedProduct::basis(const Truncation& t) const {
  Truncation free = t;
  free.weight.reset();
  std::vector<std::pair<int, Word>> found;
  for (const Word& h : H_->basis(free))
    for (const Word& k : K_->basis(free)) {
      Word w = pack_pair(h, k);
      int d = pbw_degree(w);
      if (d > t.pbw_cap) continue;
      if (t.weight && weight(w) != *t.weight) continue;
      found.emplace_back(d, w);
    }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Word> out;
  for (auto& [d, w] : found) out.push_back(std::move(w));
  return out;
}

std::vector<Word> CrossedProduct::generators(const Truncation& t) const {
  std::vector<Word> g;
  for (const Word& h : H_->generators(t)) g.push_back(pack_pair(h, K_->one()));
  for (const Word& k : K_->generators(t)) g.push_back(pack_pair(H_->one(), k));
  return g;
}

std::vector<std::pair<Word, int>> CrossedProduct::factor(const Word& w) const {
  auto [h, k] = unpack_pair(w);
  std::vector<std::pair<Word, int>> out;
  for (const auto& [g, e] : H_->factor(h)) out.emplace_back(pack_pair(g, K_->one()), e);
  for (const auto& [g, e] : K_->factor(k)) out.emplace_back(pack_pair(H_->one(), g), e);
  return out;
}

std::optional<Word> CrossedProduct::generator(const std::string& token) const {
  if (auto g = H_->generator(token)) return pack_pair(*g, K_->one());
  if (auto g = K_->generator(token)) return pack_pair(H_->one(), *g);
  return std::nullopt;
}

std::optional<Word> CrossedProduct::group_like(int k) const {
  if (auto g = K_->group_like(k)) return pack_pair(H_->one(), *g);
  return std::nullopt;
}

Elem CrossedProduct::lift(const Elem& x, bool left_factor) const {
  Elem out(tag());
  for (const auto& [w, c] : x) out.add(left_factor ? pack_pair(w, K_->one()) : pack_pair(H_->one(), w), c);
  return out;
}

CrossedPtr cocrossed_product(HopfPtr H, HopfPtr K, CoactionPtr rho) {
  if (!K->is_commutative()) throw std::invalid_argument("cocrossed product needs a commutative " + K->name());
  std::string name = H->name() + ">|" + K->name();
  return std::make_shared<const CrossedProduct>(name, std::move(H), std::move(K), std::move(rho));
}

CrossedPtr bicrossed_product(std::shared_ptr<const PbwAlgebra> U, std::shared_ptr<const PbwAlgebra> F) {
  if (!U->has_u() || U->letters() || !F->letters() || F->has_u())
    throw std::invalid_argument("bicrossed product needs U = U(g-) and a letter algebra F");
  const PbwAlgebra& u = *U;
  const PbwAlgebra& f = *F;
  const LetterSystem& L = *f.letters();

  auto action = std::make_shared<const RightAction>(f, u, [&u, &f, &L](const Word& fg, const Word& g) {
    int l = PbwAlgebra::f_part(fg)[0];
    Elem out(f.tag());
    if (g == u.Y()) {
      out.add(fg, -L.weight(l));
    } else if (g == u.X()) {
      for (const auto& [m, c] : L.dx(l)) out.add(f.make(0, 0, 0, m), -c);
    } else {
      throw std::invalid_argument("unknown U generator");
    }
    return out;
  });

  // rho on U, built from the generators by the matched-pair rule.
  auto self = std::make_shared<const Coaction*>(nullptr);
  auto rule = [&u, &f, &L, action, self](const Word& w) {
    Tensor out;
    if (w == u.one()) return Tensor(Tuple{f.one(), u.one()});
    auto gen_rho = [&](const Word& g) {
      Tensor r(Tuple{f.one(), g});
      if (g == u.X()) r.add(Tuple{f.letter(L.coupling()), u.Y()}, 1);
      return r;
    };
    auto seq = generator_sequence(u, w);
    if (seq.size() == 1) return gen_rho(seq[0]);
    Elem prefix = product(u, seq, seq.size() - 1);
    const Word& g = seq.back();
    const Coaction& rho = **self;
    for (const auto& [pw, pc] : prefix)
      for (const auto& [tr, cr] : rho(pw))
        for (const auto& [tg, cg] : u.coproduct(g)) {
          Elem a = action->act(tr[0], tg[0]);
          Tensor rg = tg[1] == g ? gen_rho(g) : rho(tg[1]);
          for (const auto& [tb, cb] : rg) {
            Elem kpart = mul(f, a, elem(f, tb[0]));
            Elem hpart = u.mul(tr[1], tb[1]);
            for (const auto& [kw, kc] : kpart)
              for (const auto& [hw, hcf] : hpart) out.add(Tuple{kw, hw}, pc * cr * cg * cb * kc * hcf);
          }
        }
    return out;
  };
  auto rho = std::make_shared<const Coaction>(f, u, rule, "matched");
  *self = rho.get();
  std::string name = U->name() + "><" + F->name();
  return std::make_shared<const CrossedProduct>(name, U, F, rho, action);
}

// ---- isomorphisms ---------------------------------------------------------------

Elem HopfMap::operator()(const Elem& x) const {
  Elem out(to->tag());
  for (const auto& [w, c] : x) out.add(apply(w), c);
  return out;
}

std::vector<CheckReport> check_hopf_iso(const HopfMap& phi, const HopfMap& inv, const std::vector<Word>& words) {
  const HopfAlgebra& A = *phi.from;
  const HopfAlgebra& B = *phi.to;
  CheckReport bij{"bijective"}, mult{"multiplicative"}, comult{"comultiplicative"}, cou{"counit"}, anti{"antipode"};
  auto tensor_map = [&](const Tensor& t) {
    Tensor out = t;
    for (std::size_t i = 0; i < 2; ++i) out = map_slot(out, static_cast<int>(i), phi.apply);
    return out;
  };
  for (const Word& w : words) {
    Elem img = phi(w);
    if (inv(img) != Elem(w)) bij.fail(A.format(w));
    ++bij.count;
    if (tensor_map(A.coproduct(w)) != coproduct(B, img)) comult.fail(A.format(w));
    ++comult.count;
    if (counit(B, img) != A.counit(w)) cou.fail(A.format(w));
    ++cou.count;
    if (phi(A.antipode(w)) != antipode(B, img)) anti.fail(A.format(w));
    ++anti.count;
    for (const Word& v : words) {
      if (phi(A.mul(w, v)) != mul(B, img, phi(v))) mult.fail(A.format(w) + " | " + A.format(v));
      ++mult.count;
    }
  }
  return {bij, mult, comult, cou, anti};
}

std::pair<HopfMap, HopfMap> bicrossed_iso(const PbwAlgebra& direct, const CrossedProduct& bicrossed) {
  auto* U = dynamic_cast<const PbwAlgebra*>(&bicrossed.left());
  auto* F = dynamic_cast<const PbwAlgebra*>(&bicrossed.right());
  if (!U || !F) throw std::invalid_argument("bicrossed_iso needs PBW factors");
  const PbwAlgebra* D = &direct;
  const CrossedProduct* B = &bicrossed;
  HopfMap fwd{D, B, [D, B, U, F](const Word& w) {
                return elem(*B, pack_pair(U->make(0, D->y_exp(w), D->x_exp(w), {}),
                                          F->make(0, 0, 0, PbwAlgebra::f_part(w))));
              }};
  HopfMap back{B, D, [D](const Word& w) {
                 auto [u, f] = unpack_pair(w);
                 return elem(*D, D->make(0, PbwAlgebra::y_exp(u), PbwAlgebra::x_exp(u), PbwAlgebra::f_part(f)));
               }};
  return {fwd, back};
}

std::pair<HopfMap, HopfMap> cover_iso(const PbwAlgebra& cover, const CrossedProduct& cocrossed) {
  auto* base = dynamic_cast<const PbwAlgebra*>(&cocrossed.left());
  auto* K = dynamic_cast<const PbwAlgebra*>(&cocrossed.right());
  if (!base || !K) throw std::invalid_argument("cover_iso needs PBW factors");
  const PbwAlgebra* C = &cover;
  const CrossedProduct* P = &cocrossed;
  HopfMap fwd{C, P, [P, base, K](const Word& w) {
                Word h = base->make(0, PbwAlgebra::y_exp(w), PbwAlgebra::x_exp(w), PbwAlgebra::f_part(w));
                return elem(*P, pack_pair(h, K->sigma(PbwAlgebra::sigma_exp(w))));
              }};
  HopfMap back{P, C, [C](const Word& w) {
                 auto [h, k] = unpack_pair(w);
                 return elem(*C, C->make(PbwAlgebra::sigma_exp(k), PbwAlgebra::y_exp(h), PbwAlgebra::x_exp(h),
                                         PbwAlgebra::f_part(h)));
               }};
  return {fwd, back};
}

CombinedMpi combined_mpi(const CrossedProduct& HK, const ModularPair& alpha_mu, const ModularPair& beta_nu,
                         const Truncation& t) {
  Character a = alpha_mu.delta, b = beta_nu.delta;
  Character ab{a.name + "(x)" + b.name, [a, b](const Word& w) -> Q {
                 auto [h, k] = unpack_pair(w);
                 return a(h) * b(k);
               }};
  CombinedMpi out{ModularPair{ab, pack_pair(alpha_mu.sigma, beta_nu.sigma),
                              pack_pair(alpha_mu.sigma_inv, beta_nu.sigma_inv)},
                  {}};
  out.preconditions.push_back(check_colinear(HK.coaction(), a, t));
  out.preconditions.push_back(check_coinvariant(HK.coaction(), alpha_mu.sigma));
  out.preconditions.push_back(check_stable(HK.coaction(), b, t));
  return out;
}

// ---- SAYD modules ------------------------------------------------------------------

Tensor tuple_coaction(const Coaction& rho, const Tuple& h) {
  const HopfAlgebra& K = rho.K();
  Tensor acc(Tuple{K.one()});
  for (const Word& x : h) {
    Tensor next;
    Tensor rx = rho(x);
    for (const auto& [tup, c] : acc)
      for (const auto& [tr, d] : rx)
        for (const auto& [k, e] : K.mul(tup[0], tr[0])) {
          Tuple r = tup;
          r[0] = k;
          r.push_back(tr[1]);
          next.add(r, c * d * e);
        }
    acc = std::move(next);
  }
  return acc;
}

Tensor tuple_coaction(const Coaction& rho, const Tensor& h) {
  Tensor out;
  for (const auto& [tup, c] : h) out.add(tuple_coaction(rho, tup), c);
  return out;
}

CharacterModule::CharacterModule(const HopfAlgebra& H, Character delta, Word sigma)
    : H_(&H), delta_(std::move(delta)), sigma_(std::move(sigma)) {}

std::string CharacterModule::name() const { return "^" + H_->format(sigma_) + "C_" + delta_.name; }

Elem CharacterModule::act(const Word& m, const Word& h) const { return Elem(m, delta_(h)); }

Tensor CharacterModule::coact(const Word& m) const { return Tensor(Tuple{sigma_, m}); }

TensorPowerModule::TensorPowerModule(CoactionPtr rho, Character beta, Word nu, int q)
    : rho_(std::move(rho)), beta_(std::move(beta)), nu_(std::move(nu)), q_(q) {}

std::string TensorPowerModule::name() const { return rho_->H().name() + "^" + std::to_string(q_); }

std::vector<Word> TensorPowerModule::carrier_basis(const Truncation& t) const {
  std::vector<Word> hb = rho_->H().basis(t);
  std::vector<Tuple> acc{Tuple{}};
  for (int i = 0; i < q_; ++i) {
    std::vector<Tuple> next;
    for (const Tuple& tup : acc)
      for (const Word& w : hb) {
        Tuple r = tup;
        r.push_back(w);
        next.push_back(std::move(r));
      }
    acc = std::move(next);
  }
  std::vector<Word> out;
  for (const Tuple& tup : acc) out.push_back(pack_tuple(tup));
  return out;
}

Elem TensorPowerModule::act(const Word& m, const Word& k) const { return Elem(m, beta_(k)); }

Tensor TensorPowerModule::coact(const Word& m) const {
  Tensor out;
  for (const auto& [tup, c] : tuple_coaction(*rho_, unpack_tuple(m))) {
    Tuple h(tup.begin() + 1, tup.end());
    for (const auto& [k, d] : rho_->K().mul(tup[0], nu_)) out.add(Tuple{k, pack_tuple(h)}, c * d);
  }
  return out;
}

std::string TensorPowerModule::format(const Word& m) const {
  Tuple t = unpack_tuple(m);
  if (t.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < t.size(); ++i) s += (i ? " # " : "") + rho_->H().format(t[i]);
  return s;
}

std::vector<CheckReport> check_sayd(const SaydModule& M, const Truncation& t) {
  const HopfAlgebra& H = M.base();
  CheckReport mod{"module"}, com{"comodule"}, sayd{"sayd"}, stab{"stable"};
  auto words = H.basis(t);
  auto act = [&](const Elem& m, const Word& h) {
    Elem out;
    for (const auto& [w, c] : m) out.add(M.act(w, h), c);
    return out;
  };
  auto coact = [&](const Elem& m) {
    Tensor out;
    for (const auto& [w, c] : m) out.add(M.coact(w), c);
    return out;
  };
  for (const Word& m : M.carrier_basis(t)) {
    Elem em(m);
    if (act(em, H.one()) != em) mod.fail(M.format(m) + " | 1");
    for (const Word& a : words)
      for (const Word& b : words) {
        Elem lhs = act(act(em, a), b);
        Elem rhs;
        for (const auto& [ab, c] : H.mul(a, b)) rhs.add(act(em, ab), c);
        if (lhs != rhs) mod.fail(M.format(m) + " | " + H.format(a) + " | " + H.format(b));
        ++mod.count;
      }

    Tensor rm = M.coact(m);
    Elem cu;
    for (const auto& [tup, c] : rm) cu.add(tup[1], c * H.counit(tup[0]));
    Tensor left = expand_slot(rm, 0, [&](const Word& v) { return H.coproduct(v); });
    Tensor right = expand_slot(rm, 1, [&](const Word& v) { return M.coact(v); });
    if (cu != em || left != right) com.fail(M.format(m));
    ++com.count;

    Elem st;
    for (const auto& [tup, c] : rm) st.add(M.act(tup[1], tup[0]), c);
    if (st != em) stab.fail(M.format(m));
    ++stab.count;

    for (const Word& h : words) {
      Tensor lhs = coact(M.act(m, h));
      Tensor rhs;
      for (const auto& [d3, c3] : iterated_coproduct(H, h, 3))
        for (const auto& [tr, cr] : rm) {
          Elem k = mul(H, mul(H, H.antipode(d3[2]), elem(H, tr[0])), elem(H, d3[0]));
          Elem mh = M.act(tr[1], d3[1]);
          for (const auto& [kw, kc] : k)
            for (const auto& [mw, mc] : mh) rhs.add(Tuple{kw, mw}, c3 * cr * kc * mc);
        }
      if (lhs != rhs) sayd.fail(M.format(m) + " | " + H.format(h));
      ++sayd.count;
    }
  }
  return {mod, com, sayd, stab};
}

}  // namespace hc
