#ifndef UEA_LIE_HPP
#define UEA_LIE_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "uea/fp.hpp"
#include "uea/monomial.hpp"
#include "uea/poly.hpp"

namespace uea {

/// How a catalog family depends on its parameter.
enum class ParamKind {
  none,        ///< no parameter
  eps_any,     ///< eps ranges over the whole field, 0 included
  eps_nonzero, ///< eps must be a unit
  eps_char2    ///< eps ranges over the field; family defined in characteristic 2 only
};

/// One bracket coefficient: value c, optionally multiplied by the family
/// parameter eps.
struct BracketTerm {
  int k = 0; // 1-based target basis index
  int c = 0;
  bool times_eps = false;
};

/// Structure data of one catalog family over the integers, before a prime and
/// a parameter value are chosen. Also carries the expected structural columns
/// used by the listing command and pinned by tests.
struct LieAlgebraSpec {
  std::string name;
  int dim = 0;
  ParamKind param = ParamKind::none;
  /// Relations [x_i, x_j] = sum of terms, stored for i < j only.
  struct Relation {
    int i = 0, j = 0; // 1-based, i < j
    std::vector<BracketTerm> terms;
  };
  std::vector<Relation> relations;
  int nilpotency_class = 0;          ///< declared cl(g)
  int rank_mult_matrix = 0;          ///< declared r(g)
  std::vector<int> center_vars;      ///< declared basis of C(g), 1-based indices

  bool parametric() const { return param != ParamKind::none; }
  /// Relations rendered for display, e.g. "[x1,x2]=x3, [x2,x4]=e*x6".
  std::string relations_str() const;
};

/// Coordinate vector of a Lie algebra element over F_p.
using GVector = std::vector<uint32_t>;

class LieAlgebra;
using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// A catalog family (or custom structure table) instantiated at a prime p and
/// a parameter value. Owns the structure constants and the straightening
/// cache that PBW arithmetic fills in; the cache is guarded by a mutex so an
/// instance can be shared across threads.
class LieAlgebra {
public:
  /// Default bound on the total degree of any PBW computation; override with
  /// the ENVELOPE_DEGREE_CAP environment variable or set_degree_cap().
  static constexpr int kDefaultDegreeCap = 64;

  LieAlgebra(LieAlgebraSpec spec, uint32_t p, std::optional<uint32_t> eps);

  const LieAlgebraSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  int dim() const { return spec_.dim; }
  uint32_t p() const { return p_; }
  const Fp& field() const { return field_; }
  std::optional<uint32_t> eps() const { return eps_; }

  int degree_cap() const { return degree_cap_; }
  void set_degree_cap(int cap);

  /// Structure constants: [x_i, x_j] = sum_k c(i,j,k) x_k, 0-indexed.
  uint32_t c(int i, int j, int k) const {
    return c_[static_cast<size_t>((i * spec_.dim + j) * spec_.dim + k)];
  }

  /// The bracket [x_i, x_j] as a list of (k, coeff) pairs, 0-indexed, ascending k.
  const std::vector<std::pair<int, uint32_t>>& bracket_terms(int i, int j) const {
    return bracket_terms_[static_cast<size_t>(i * spec_.dim + j)];
  }

  /// True if the two instances have identical modulus, dimension and
  /// structure constants (so their enveloping algebras coincide).
  bool same_structure(const LieAlgebra& o) const;

private:
  LieAlgebraSpec spec_;
  uint32_t p_;
  Fp field_;
  std::optional<uint32_t> eps_;
  int degree_cap_;
  std::vector<uint32_t> c_;
  std::vector<std::vector<std::pair<int, uint32_t>>> bracket_terms_;

  // Straightening cache for PBW normal forms: key is (monomial, generator),
  // value the normal form of monomial * x_gen. Filled lazily by the
  // enveloping-algebra routines; see pbw.cpp.
  struct GenKey {
    Monomial m;
    int gen;
    bool operator==(const GenKey& o) const { return gen == o.gen && m == o.m; }
  };
  struct GenKeyHash {
    size_t operator()(const GenKey& k) const {
      return MonomialHash{}(k.m) * 31 + static_cast<size_t>(k.gen);
    }
  };
  mutable std::unordered_map<GenKey, Poly, GenKeyHash> straighten_cache_;
  mutable std::mutex cache_mutex_;

  friend class StraightenAccess;
};

/// All catalog families in table order.
const std::vector<LieAlgebraSpec>& catalog();

/// Catalog family by name (e.g. "g_5_5", "g_6_7_2"); nullptr if unknown.
const LieAlgebraSpec* find_family(const std::string& name);

/// Instantiates a named catalog family at the prime p and parameter value.
/// Validates that p is prime and >= the nilpotency class, that eps is given
/// exactly for parametric families and respects their constraint, and that
/// the characteristic-2 family gets p = 2.
LieAlgebraPtr lookup(const std::string& name, uint32_t p, std::optional<uint32_t> eps = std::nullopt);

/// Instantiates a custom structure table (see parse_algebra_file) at p.
LieAlgebraPtr instantiate(const LieAlgebraSpec& spec, uint32_t p, std::optional<uint32_t> eps = std::nullopt);

/// Parses the plain-text structure format:
///   dim n
///   i j -> k1:c1 k2:c2 ...
/// one relation per line for i < j, omitted brackets are zero; '#' starts a
/// comment. Throws std::invalid_argument with a line number on bad input.
LieAlgebraSpec parse_algebra_file(const std::string& text, const std::string& display_name = "custom");

/// [u, v] in coordinates.
GVector bracket(const LieAlgebra& g, const GVector& u, const GVector& v);

/// Verifies antisymmetry (built into the storage) and the Jacobi identity on
/// all basis triples.
bool check_jacobi(const LieAlgebra& g);

/// Basis of the center C(g) = {v : [x_i, v] = 0 for all i}, echelonized.
std::vector<GVector> center(const LieAlgebra& g);

/// Length of the lower central series; throws std::domain_error if the series
/// stabilizes without reaching zero (input not nilpotent).
int nilpotency_class(const LieAlgebra& g);

/// Nilpotency class of the Lie subalgebra generated by the given elements.
int generated_class(const LieAlgebra& g, const std::vector<GVector>& gens);

/// The dim x dim matrix with entries [x_i, x_j] as linear polynomials.
PolyMatrix multiplication_matrix(const LieAlgebra& g);

/// Rank r(g) of the multiplication matrix over the function field.
size_t rank_Mg(const LieAlgebra& g);

struct AbelianTriple {
  GVector x, y, z;
};

/// Deterministic search for x not central, [x,y] = [x,z] = 0, [y,z] != 0.
/// Candidates are basis vectors first, then e_i + c*e_j for i < j and
/// c = 1..p-1, scanned lexicographically; returns the first hit.
std::optional<AbelianTriple> find_abelian_triple(const LieAlgebra& g);

} // namespace uea

#endif
