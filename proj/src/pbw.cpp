#include "uea/pbw.hpp"

#include <utility>

namespace uea {

/// Internal bridge giving the straightening routines access to the per-algebra
/// cache declared in LieAlgebra.
class StraightenAccess {
public:
  static std::optional<Poly> cached(const LieAlgebra& g, const Monomial& m, int j) {
    std::lock_guard<std::mutex> lock(g.cache_mutex_);
    auto it = g.straighten_cache_.find({m, j});
    if (it == g.straighten_cache_.end()) return std::nullopt;
    return it->second;
  }
  static void store(const LieAlgebra& g, const Monomial& m, int j, const Poly& value) {
    std::lock_guard<std::mutex> lock(g.cache_mutex_);
    g.straighten_cache_.emplace(LieAlgebra::GenKey{m, j}, value);
  }
};

namespace {

Poly times_gen(const LieAlgebra& g, const Monomial& m, int j);

Poly poly_times_gen(const LieAlgebra& g, const Poly& f, int j) {
  Poly acc = Poly::zero(g.p(), g.dim());
  for (const auto& [m, c] : f.terms()) acc += times_gen(g, m, j).scaled(c);
  return acc;
}

// Normal form of m * x_j. Recursion peels the largest variable x_k of m:
// for k > j,  m' x_k x_j = m' x_j x_k + m' [x_k, x_j],  and both pieces are
// strictly smaller in the (degree, disorder) measure, so this terminates for
// any antisymmetric structure table, triangular or not.
Poly times_gen(const LieAlgebra& g, const Monomial& m, int j) {
  int k = m.max_var();
  if (k <= j) {
    if (m.degree() + 1 > g.degree_cap())
      throw DegreeCapError("product degree " + std::to_string(m.degree() + 1) +
                           " exceeds the degree cap " + std::to_string(g.degree_cap()));
    Poly r = Poly::zero(g.p(), g.dim());
    r.add_term(m.times_var(j), 1);
    return r;
  }

  if (auto hit = StraightenAccess::cached(g, m, j)) return *hit;

  Monomial head = m.div_var(k);
  Poly r = poly_times_gen(g, times_gen(g, head, j), k);
  for (const auto& [l, c] : g.bracket_terms(k, j))
    r += times_gen(g, head, l).scaled(static_cast<int64_t>(c));

  StraightenAccess::store(g, m, j, r);
  return r;
}

} // namespace

PBWElement::PBWElement(LieAlgebraPtr alg)
    : alg_(std::move(alg)), coeffs_(alg_ ? Poly::zero(alg_->p(), alg_->dim()) : Poly::zero(2, 1)) {
  if (!alg_) throw std::invalid_argument("PBW element requires an algebra");
}

PBWElement::PBWElement(LieAlgebraPtr alg, Poly coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
  if (!alg_) throw std::invalid_argument("PBW element requires an algebra");
  if (coeffs_.p() != alg_->p() || coeffs_.nvars() != alg_->dim())
    throw std::invalid_argument("coefficient polynomial does not match the algebra");
}

PBWElement PBWElement::one(LieAlgebraPtr alg) {
  Poly f = Poly::constant(alg->p(), alg->dim(), 1);
  return PBWElement(std::move(alg), std::move(f));
}

PBWElement PBWElement::generator(LieAlgebraPtr alg, int i) {
  if (i < 0 || i >= alg->dim()) throw std::out_of_range("generator index out of range");
  Poly f = Poly::variable(alg->p(), alg->dim(), i);
  return PBWElement(std::move(alg), std::move(f));
}

void PBWElement::check_same_algebra(const PBWElement& o) const {
  if (alg_.get() != o.alg_.get() && !alg_->same_structure(*o.alg_))
    throw std::invalid_argument("PBW elements live over different algebras");
}

PBWElement PBWElement::operator+(const PBWElement& o) const {
  check_same_algebra(o);
  return PBWElement(alg_, coeffs_ + o.coeffs_);
}

PBWElement PBWElement::operator-(const PBWElement& o) const {
  check_same_algebra(o);
  return PBWElement(alg_, coeffs_ - o.coeffs_);
}

PBWElement PBWElement::operator-() const { return PBWElement(alg_, -coeffs_); }

PBWElement PBWElement::scaled(int64_t c) const { return PBWElement(alg_, coeffs_.scaled(c)); }

bool PBWElement::operator==(const PBWElement& o) const {
  check_same_algebra(o);
  return coeffs_ == o.coeffs_;
}

PBWElement pbw_mul(const PBWElement& a, const PBWElement& b) {
  a.check_same_algebra(b);
  const LieAlgebra& g = *a.algebra();
  if (!a.is_zero() && !b.is_zero() && a.degree() + b.degree() > g.degree_cap())
    throw DegreeCapError("product degree " + std::to_string(a.degree() + b.degree()) +
                         " exceeds the degree cap " + std::to_string(g.degree_cap()));

  Poly acc = Poly::zero(g.p(), g.dim());
  for (const auto& [mb, cb] : b.coeffs().terms()) {
    // a * mb, multiplying in the generators of mb in ascending order.
    Poly term = a.coeffs();
    for (int j = 0; j < g.dim(); ++j)
      for (uint16_t t = 0; t < mb.e[static_cast<size_t>(j)]; ++t) term = poly_times_gen(g, term, j);
    acc += term.scaled(cb);
  }
  return PBWElement(a.algebra(), std::move(acc));
}

PBWElement commutator(const PBWElement& a, const PBWElement& b) {
  return pbw_mul(a, b) - pbw_mul(b, a);
}

std::optional<std::pair<int, PBWElement>> centrality_witness(const PBWElement& u) {
  for (int i = 0; i < u.algebra()->dim(); ++i) {
    PBWElement c = commutator(PBWElement::generator(u.algebra(), i), u);
    if (!c.is_zero()) return std::make_pair(i, std::move(c));
  }
  return std::nullopt;
}

bool is_central(const PBWElement& u) { return !centrality_witness(u).has_value(); }

PBWElement pth_power(const PBWElement& u) {
  const LieAlgebra& g = *u.algebra();
  uint32_t p = g.p();
  if (!u.is_zero() && u.degree() * static_cast<int>(p) > g.degree_cap())
    throw DegreeCapError("p-th power degree " + std::to_string(u.degree() * static_cast<int>(p)) +
                         " exceeds the degree cap " + std::to_string(g.degree_cap()));
  PBWElement r = u;
  for (uint32_t k = 1; k < p; ++k) r = pbw_mul(r, u);
  return r;
}

PBWElement embed_commutative(const Poly& f, LieAlgebraPtr alg, EmbedPolicy policy) {
  if (f.p() != alg->p() || f.nvars() != alg->dim())
    throw std::invalid_argument("polynomial does not match the algebra's modulus or dimension");
  if (!f.is_zero() && f.total_degree() > alg->degree_cap())
    throw DegreeCapError("embedded polynomial exceeds the degree cap");

  if (policy == EmbedPolicy::commuting_support) {
    for (const auto& [m, c] : f.terms()) {
      (void)c;
      for (int i = 0; i < alg->dim(); ++i) {
        if (m.e[static_cast<size_t>(i)] == 0) continue;
        for (int j = i + 1; j < alg->dim(); ++j) {
          if (m.e[static_cast<size_t>(j)] == 0) continue;
          if (!alg->bracket_terms(i, j).empty())
            throw std::invalid_argument(
                "monomial " + to_string(m) + " mixes non-commuting variables x" +
                std::to_string(i + 1) + ", x" + std::to_string(j + 1) +
                "; use the ascending-order policy to read it as an ordered product");
        }
      }
    }
  }
  return PBWElement(std::move(alg), f);
}

} // namespace uea
