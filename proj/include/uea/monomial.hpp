#ifndef UEA_MONOMIAL_HPP
#define UEA_MONOMIAL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace uea {

/// Hard upper bound on the number of variables a monomial can carry.
/// The built-in catalog needs 6; custom algebras beyond kMaxVars are rejected
/// at construction.
inline constexpr int kMaxVars = 8;

/// Exponent vector x_1^{e_1} ... x_n^{e_n} with fixed-width storage.
/// Variables are 0-indexed internally; printing is 1-based (x1, x2, ...).
struct Monomial {
  std::array<uint16_t, kMaxVars> e{};

  static Monomial one() { return Monomial{}; }

  static Monomial var(int i, uint16_t exp = 1) {
    if (i < 0 || i >= kMaxVars) throw std::out_of_range("variable index out of range");
    Monomial m;
    m.e[static_cast<size_t>(i)] = exp;
    return m;
  }

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }

  bool is_one() const { return degree() == 0; }

  /// Largest variable index with nonzero exponent, or -1 for the constant monomial.
  int max_var() const {
    for (int i = kMaxVars - 1; i >= 0; --i)
      if (e[static_cast<size_t>(i)] != 0) return i;
    return -1;
  }

  int min_var() const {
    for (int i = 0; i < kMaxVars; ++i)
      if (e[static_cast<size_t>(i)] != 0) return i;
    return -1;
  }

  Monomial times_var(int i, uint16_t exp = 1) const {
    Monomial m = *this;
    m.e[static_cast<size_t>(i)] = static_cast<uint16_t>(m.e[static_cast<size_t>(i)] + exp);
    return m;
  }

  /// Removes one factor of x_i; exponent must be positive.
  Monomial div_var(int i) const {
    Monomial m = *this;
    auto& x = m.e[static_cast<size_t>(i)];
    if (x == 0) throw std::domain_error("monomial not divisible by variable");
    --x;
    return m;
  }

  Monomial operator*(const Monomial& o) const {
    Monomial m;
    for (size_t i = 0; i < kMaxVars; ++i)
      m.e[i] = static_cast<uint16_t>(e[i] + o.e[i]);
    return m;
  }

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

/// Graded lexicographic order with x1 > x2 > ...: first by total degree, then
/// lexicographically on the exponent vector. Used as the canonical term order
/// for printing and for every deterministic basis enumeration.
inline int grlex_cmp(const Monomial& a, const Monomial& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < kMaxVars; ++i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
  return 0;
}

/// Comparator placing the grlex-largest monomial first.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex_cmp(a, b) > 0; }
};

struct MonomialHash {
  size_t operator()(const Monomial& m) const {
    uint64_t h = 1469598103934665603ull;
    for (auto x : m.e) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};

/// All monomials in the first n variables of total degree exactly d,
/// grlex-descending.
std::vector<Monomial> monomials_of_degree(int n, int d);

/// All monomials in the first n variables of total degree <= bound,
/// grlex-descending. The canonical indexing for coefficient-space linear
/// algebra.
std::vector<Monomial> monomials_up_to(int n, int bound);

/// Counts for the two lists above, C(d+n-1, n-1) and C(bound+n, n), computed
/// without enumeration so callers can enforce size caps before allocating.
uint64_t monomial_count_of_degree(int n, int d);
uint64_t monomial_count_up_to(int n, int bound);

/// Renders the monomial in the expression grammar, e.g. "x1*x3^2"; the
/// constant monomial renders as "1".
inline std::string to_string(const Monomial& m) {
  std::string s;
  for (int i = 0; i < kMaxVars; ++i) {
    uint16_t x = m.e[static_cast<size_t>(i)];
    if (x == 0) continue;
    if (!s.empty()) s += "*";
    s += "x" + std::to_string(i + 1);
    if (x > 1) s += "^" + std::to_string(x);
  }
  return s.empty() ? "1" : s;
}

} // namespace uea

#endif
