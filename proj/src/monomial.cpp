#include "uea/monomial.hpp"

#include <functional>

namespace uea {

std::vector<Monomial> monomials_of_degree(int n, int d) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<Monomial> out;
  Monomial m;
  // Taking the larger exponent first at each variable yields descending lex,
  // which on a fixed degree is descending grlex.
  std::function<void(int, int)> rec = [&](int var, int remaining) {
    if (var == n - 1) {
      m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(remaining);
      out.push_back(m);
      m.e[static_cast<size_t>(var)] = 0;
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      m.e[static_cast<size_t>(var)] = static_cast<uint16_t>(e);
      rec(var + 1, remaining - e);
    }
  };
  rec(0, d);
  return out;
}

std::vector<Monomial> monomials_up_to(int n, int bound) {
  std::vector<Monomial> out;
  for (int d = bound; d >= 0; --d) {
    std::vector<Monomial> layer = monomials_of_degree(n, d);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

namespace {

// C(top, k) with overflow detection; k <= kMaxVars keeps this exact.
uint64_t binomial(uint64_t top, uint64_t k) {
  unsigned __int128 r = 1;
  for (uint64_t i = 1; i <= k; ++i) {
    r = r * (top - k + i) / i;
    if (r > UINT64_MAX) throw std::overflow_error("monomial count overflows");
  }
  return static_cast<uint64_t>(r);
}

} // namespace

uint64_t monomial_count_of_degree(int n, int d) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  if (d < 0) throw std::invalid_argument("degree must be nonnegative");
  return binomial(static_cast<uint64_t>(d) + n - 1, static_cast<uint64_t>(n) - 1);
}

uint64_t monomial_count_up_to(int n, int bound) {
  if (n < 1 || n > kMaxVars) throw std::invalid_argument("variable count out of range");
  if (bound < 0) throw std::invalid_argument("degree must be nonnegative");
  return binomial(static_cast<uint64_t>(bound) + n, static_cast<uint64_t>(n));
}

} // namespace uea
