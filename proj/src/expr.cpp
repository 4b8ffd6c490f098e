#include "uea/expr.hpp"

#include <cctype>
#include <stdexcept>

namespace uea {

namespace {

class Parser {
public:
  Parser(const std::string& text, const ParseEnv& env) : s_(text), env_(env) {}

  Poly run() {
    Poly r = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  bool eat(char c) {
    if (!peek_is(c)) return false;
    ++pos_;
    return true;
  }

  /// True when the upcoming token can begin a factor (for implicit products).
  bool at_factor_start() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'z' || c == 'e' || c == '(';
  }

  uint64_t integer() {
    skip_ws();
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer");
    uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) fail("integer literal too large");
      ++pos_;
    }
    return v;
  }

  Poly expr() {
    bool neg = eat('-');
    Poly acc = term();
    if (neg) acc = -acc;
    while (true) {
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        break;
    }
    return acc;
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (at_factor_start()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  uint16_t exponent() {
    uint64_t e = integer();
    if (e > 1000) fail("exponent too large");
    return static_cast<uint16_t>(e);
  }

  Poly factor() {
    skip_ws();
    if (pos_ >= s_.size()) fail("expected a factor");
    char c = s_[pos_];

    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("expected ')'");
      if (eat('^')) return inner.pow(exponent());
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return Poly::constant(env_.p, env_.nvars, static_cast<int64_t>(integer()));
    if (c == 'x') {
      ++pos_;
      uint64_t idx = integer();
      if (idx < 1 || idx > static_cast<uint64_t>(env_.nvars))
        fail("variable x" + std::to_string(idx) + " is out of range (algebra has " +
             std::to_string(env_.nvars) + " variables)");
      uint16_t e = eat('^') ? exponent() : 1;
      return Poly::variable(env_.p, env_.nvars, static_cast<int>(idx) - 1, e);
    }
    if (c == 'z') {
      ++pos_;
      uint64_t idx = integer();
      auto it = env_.zvals.find(static_cast<int>(idx));
      if (it == env_.zvals.end()) fail("z" + std::to_string(idx) + " is not bound");
      if (eat('^')) return it->second.pow(exponent());
      return it->second;
    }
    if (c == 'e') {
      ++pos_;
      if (!env_.eps) fail("'e' used but no parameter value is set");
      Poly v = Poly::constant(env_.p, env_.nvars, static_cast<int64_t>(*env_.eps));
      if (eat('^')) return v.pow(exponent());
      return v;
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  const ParseEnv& env_;
  size_t pos_ = 0;
};

} // namespace

Poly parse_poly(const std::string& text, const ParseEnv& env) {
  if (env.nvars < 1 || env.nvars > kMaxVars)
    throw std::invalid_argument("parse environment has an invalid variable count");
  for (const auto& [k, v] : env.zvals)
    if (v.p() != env.p || v.nvars() != env.nvars)
      throw std::invalid_argument("z" + std::to_string(k) + " binding does not match the environment");
  return Parser(text, env).run();
}

PBWElement parse_pbw(const std::string& text, const LieAlgebraPtr& alg, EmbedPolicy policy) {
  ParseEnv env;
  env.p = alg->p();
  env.nvars = alg->dim();
  env.eps = alg->eps();
  return embed_commutative(parse_poly(text, env), alg, policy);
}

} // namespace uea
