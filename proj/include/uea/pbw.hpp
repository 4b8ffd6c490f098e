#ifndef UEA_PBW_HPP
#define UEA_PBW_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include "uea/lie.hpp"
#include "uea/poly.hpp"

namespace uea {

/// Thrown when a product would exceed the algebra's degree cap.
struct DegreeCapError : std::runtime_error {
  explicit DegreeCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Element of the universal enveloping algebra in PBW normal form: an
/// F_p-linear combination of ordered monomials x_1^{e_1} ... x_n^{e_n}.
/// The coefficient container is a commutative Poly; all non-commutativity
/// lives in the multiplication routines, which straighten products back into
/// normal form via x_j x_i = x_i x_j + [x_j, x_i] for j > i.
class PBWElement {
public:
  explicit PBWElement(LieAlgebraPtr alg);
  PBWElement(LieAlgebraPtr alg, Poly coeffs);

  static PBWElement zero(LieAlgebraPtr alg) { return PBWElement(std::move(alg)); }
  static PBWElement one(LieAlgebraPtr alg);
  /// The generator x_{i+1} (0-indexed i).
  static PBWElement generator(LieAlgebraPtr alg, int i);

  const LieAlgebraPtr& algebra() const { return alg_; }
  const Poly& coeffs() const { return coeffs_; }

  bool is_zero() const { return coeffs_.is_zero(); }
  /// Filtration degree (top total degree of the normal form), -1 for zero.
  int degree() const { return coeffs_.total_degree(); }

  PBWElement operator+(const PBWElement& o) const;
  PBWElement operator-(const PBWElement& o) const;
  PBWElement operator-() const;
  PBWElement scaled(int64_t c) const;

  bool operator==(const PBWElement& o) const;
  bool operator!=(const PBWElement& o) const { return !(*this == o); }

  std::string str() const { return coeffs_.str(); }

private:
  void check_same_algebra(const PBWElement& o) const;

  LieAlgebraPtr alg_;
  Poly coeffs_;

  friend PBWElement pbw_mul(const PBWElement&, const PBWElement&);
};

/// Product in U(g), straightened to normal form. Throws DegreeCapError if the
/// result degree would exceed the algebra's cap, std::invalid_argument if the
/// factors live over different algebras.
PBWElement pbw_mul(const PBWElement& a, const PBWElement& b);

/// ab - ba.
PBWElement commutator(const PBWElement& a, const PBWElement& b);

/// First generator that fails to commute with u, with the nonzero commutator
/// [x_i, u]; nullopt when u is central.
std::optional<std::pair<int, PBWElement>> centrality_witness(const PBWElement& u);

/// True iff u commutes with every generator.
bool is_central(const PBWElement& u);

/// u^p for the algebra's characteristic p.
PBWElement pth_power(const PBWElement& u);

/// How embed_commutative validates its input.
enum class EmbedPolicy {
  commuting_support, ///< require the variables of each monomial to commute pairwise
  ascending          ///< read each monomial as the ascending-ordered PBW product
};

/// Reads a commutative polynomial as a PBW normal form, monomial by monomial.
/// Under commuting_support (the default) each monomial's variables must
/// commute pairwise in g, so the ordering is immaterial; otherwise the
/// documented convention is that exponents denote the ascending product
/// x_1^{e_1} ... x_n^{e_n}, which the ascending policy accepts unchecked.
PBWElement embed_commutative(const Poly& f, LieAlgebraPtr alg,
                             EmbedPolicy policy = EmbedPolicy::commuting_support);

} // namespace uea

#endif
