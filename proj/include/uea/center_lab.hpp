#ifndef UEA_CENTER_LAB_HPP
#define UEA_CENTER_LAB_HPP

#include <string>
#include <vector>

#include "uea/lie.hpp"
#include "uea/pbw.hpp"
#include "uea/report.hpp"

namespace uea {

/// Basis split underlying the p-center
///   P_p = F[x_i^p : i non-central][x_j : x_j central],
/// valid when the center is spanned by basis vectors. noncentral/central are
/// 0-based basis indices; construction throws if some echelonized center
/// basis vector is not a coordinate vector.
struct PCenterFrame {
  LieAlgebraPtr alg;
  std::vector<int> noncentral;
  std::vector<int> central;
};

PCenterFrame p_center_frame(const LieAlgebraPtr& alg);

/// True iff every monomial of u has all non-central exponents divisible by p,
/// i.e. u lies in the span of the monomials generating P_p. On failure,
/// *witness (if given) receives the first offending monomial and variable.
bool in_p_center(const PCenterFrame& frame, const PBWElement& u, std::string* witness = nullptr);

/// Catalogued generators of the center beyond the p-center for one family.
struct CenterGeneratorRecord {
  std::string algebra;
  std::vector<std::string> generators; ///< expression strings, may use 'e'
  /// True when Z(U) = P_p[z...] on the nose; false for the three families
  /// where the right-hand side needs an integral closure step (g_5_5, g_6_18,
  /// g_6_25), verified here by bounded non-membership of the later z's.
  bool closure_free = true;
};

/// All families with catalogued extra generators, in table order.
const std::vector<CenterGeneratorRecord>& center_generator_table();

/// Families whose center reduces to the p-center (Z(U) = P_p).
const std::vector<std::string>& pcenter_only_families();

/// Families whose verification argument rests on an abelian triple
/// (x not central, [x,y] = [x,z] = 0, [y,z] != 0). The parameter families
/// g_6_22, g_6_24 admit the triple for eps in {0,1} and g_6_7_2 for eps = 0;
/// other parameter values are handled by a field-extension argument and are
/// not claimed here.
const std::vector<std::string>& abelian_triple_families();

/// Catalogued generators instantiated over the given algebra, in table order.
/// Throws std::invalid_argument if the family has no catalogued generators.
std::vector<PBWElement> catalogued_generators(const LieAlgebraPtr& alg);

/// Elements of U(g) of filtration degree <= degree_bound commuting with every
/// generator: the kernel of the adjoint action on the PBW coefficient space.
/// Basis vectors are returned in the canonical kernel order (one per free
/// coordinate of the constraint matrix, grlex-descending monomial indexing).
std::vector<PBWElement> centrality_sweep(const LieAlgebraPtr& alg, int degree_bound);

/// Degree-bounded evidence that target lies in the unital subalgebra
/// generated by gens: enumerates products of gens of total degree <=
/// degree_bound and tests span membership. All gens must commute pairwise
/// and with target (throws std::invalid_argument otherwise). A true result
/// is a certificate; a false result only says the bounded span misses it.
bool subalgebra_membership(const PBWElement& target, const std::vector<PBWElement>& gens,
                           int degree_bound);

/// Verifies the center description for one algebra instance:
///  - catalogued generators are central, outside P_p, with p-th powers in P_p;
///  - for closure-needing families, later generators stay outside the
///    bounded subalgebra generated by P_p and the earlier ones;
///  - for p-center-only families, a centrality sweep up to min(p, 4) finds
///    exactly the P_p span, and an abelian triple exists where claimed.
/// Pass sweep_bound or membership_bound > 0 to override the defaults
/// (min(p, 4) and 2 * max generator degree + 2).
VerificationReport verify_center_description(const LieAlgebraPtr& alg, int sweep_bound = 0,
                                             int membership_bound = 0);

/// Rational generator of the degree-bounded center over the function field:
/// numerator and denominator in the central elements of U(g_5_5); z1, z2 in
/// the expressions abbreviate the catalogued generators of that family.
struct RationalCenterGenerator {
  std::string numerator;
  int x5_power = 0;                ///< denominator factor x5^k
  std::string denominator_extra;   ///< further denominator factor, "" if none
};

/// The externally computed generator lists for Z(U(g_5_5)) at p = 5 (7
/// entries) and p = 7 (13 entries).
const std::vector<RationalCenterGenerator>& rational_center_generators(uint32_t p);

/// Checks that every catalogued rational generator for Z(U(g_5_5)) at p has a
/// central numerator (and central denominator factors). Since denominators
/// are central and nonzero, centrality of u/v reduces to centrality of u and
/// v: x u = u x and x v = v x give x (u/v) = (u/v) x in the localization.
VerificationReport verify_rational_generators(uint32_t p);

} // namespace uea

#endif
