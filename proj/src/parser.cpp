#include "hopfcyc/parser.hpp"

#include <cctype>

namespace hc {

namespace {

class Parser {
 public:
  Parser(const std::string& s, std::function<const HopfAlgebra&(int)> alg) : s_(s), alg_(std::move(alg)) {}

  Tensor run() {
    Tensor t = sum(0);
    skip();
    if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
    for (const auto& [tup, c] : t)
      if (tup.size() != t.begin()->first.size()) throw ParseError("terms of different tensor degree", 0);
    return t;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Tensor sum(int slot) {
    bool neg = eat('-');
    Tensor t = term(slot);
    if (neg) t *= Q(-1);
    for (;;) {
      if (eat('+'))
        t += term(slot);
      else if (eat('-'))
        t -= term(slot);
      else
        return t;
    }
  }

  Tensor term(int slot) {
    // Slots may live in different algebras, so tags are dropped here.
    Tensor t = as_tensor(product(slot));
    t.set_tag(0);
    int k = slot;
    while (eat('#')) {
      Tensor f = as_tensor(product(++k));
      f.set_tag(0);
      t = tensor_product(t, f);
    }
    return t;
  }

  Elem product(int slot) {
    const HopfAlgebra& H = alg_(slot);
    Elem e = factor(slot);
    while (eat('*')) e = mul(H, e, factor(slot));
    return e;
  }

  mpz_class natural() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a number", pos_);
    return mpz_class(s_.substr(start, pos_ - start));
  }

  Elem factor(int slot) {
    const HopfAlgebra& H = alg_(slot);
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t at = pos_;
      mpz_class num = natural();
      mpz_class den = 1;
      if (eat('/')) den = natural();
      if (den == 0) throw ParseError("zero denominator", at);
      Q q(num, den);
      q.canonicalize();
      return power_of(H, elem(H, H.one(), q));
    }
    return power_of(H, primary(slot));
  }

  Elem power_of(const HopfAlgebra& H, Elem base) {
    if (!eat('^')) return base;
    std::size_t at = pos_;
    mpz_class n = natural();
    if (n > 64) throw ParseError("exponent too large", at);
    return power(H, base, static_cast<int>(n.get_si()));
  }

  Elem primary(int slot) {
    const HopfAlgebra& H = alg_(slot);
    skip();
    std::size_t at = pos_;
    if (eat('(')) {
      Tensor inner = sum(slot);
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      Elem e(H.tag());
      for (const auto& [tup, c] : inner) {
        if (tup.size() > 1) throw ParseError("'#' inside parentheses", at);
        e.add(tup.empty() ? H.one() : tup[0], c);
      }
      return e;
    }
    if (pos_ >= s_.size() || !std::isalpha(static_cast<unsigned char>(s_[pos_])))
      throw ParseError("expected a generator", pos_);
    std::string tok;
    while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) tok += s_[pos_++];
    if (tok == "dT") {
      int depth = 0;
      std::size_t start = pos_;
      while (pos_ < s_.size()) {
        char ch = s_[pos_];
        if (ch == '[')
          ++depth;
        else if (ch == ']')
          --depth;
        else
          break;
        ++pos_;
        if (depth == 0) break;
      }
      if (depth != 0 || start == pos_) throw ParseError("bad tree literal", start);
      tok += s_.substr(start, pos_ - start);
    } else if (tok == "s" && s_.compare(pos_, 2, "^-") == 0) {
      pos_ += 2;
      tok += "^-" + natural().get_str();
    }
    std::optional<Word> g;
    try {
      g = H.generator(tok);
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what(), at);
    }
    if (!g) throw ParseError("unknown generator '" + tok + "' for " + H.name(), at);
    return elem(H, *g);
  }

  const std::string& s_;
  std::function<const HopfAlgebra&(int)> alg_;
  std::size_t pos_ = 0;
};

}  // namespace

Tensor parse_tensor(const HopfAlgebra& H, const std::string& text) {
  Tensor t = Parser(text, [&](int) -> const HopfAlgebra& { return H; }).run();
  t.set_tag(H.tag());
  return t;
}

Tensor parse_tensor(const Slots& slots, const std::string& text) {
  return Parser(text, [&](int i) -> const HopfAlgebra& {
           if (i >= static_cast<int>(slots.size())) throw ParseError("too many tensor slots", 0);
           return *slots[i];
         }).run();
}

Elem parse_element(const HopfAlgebra& H, const std::string& text) {
  Tensor t = parse_tensor(H, text);
  Elem e(H.tag());
  for (const auto& [tup, c] : t) {
    if (tup.size() > 1) throw ParseError("expected an element, got a tensor", 0);
    e.add(tup.empty() ? H.one() : tup[0], c);
  }
  return e;
}

}  // namespace hc
