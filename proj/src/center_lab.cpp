#include "uea/center_lab.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "uea/expr.hpp"
#include "uea/linalg.hpp"

namespace uea {

namespace {

// Largest admissible row*column footprint of a sweep constraint matrix.
constexpr size_t kSweepEntryCap = 20000000;

CenterGeneratorRecord rec(const char* name, std::vector<std::string> gens, bool closure_free) {
  return CenterGeneratorRecord{name, std::move(gens), closure_free};
}

} // namespace

const std::vector<CenterGeneratorRecord>& center_generator_table() {
  static const std::vector<CenterGeneratorRecord> table = {
      rec("g_4", {"x3^2-2x2x4"}, true),
      rec("g_5_2", {"x2x5-x3x4"}, true),
      rec("g_5_4", {"x3^2+2x1x5-2x2x4"}, true),
      rec("g_5_5", {"x4^2-2x3x5", "3x2x5^2-3x3x4x5+x4^3"}, false),
      rec("g_6_10", {"x3^2-2x2x6"}, true),
      rec("g_6_11", {"x4^2+2x5x6-2x3x6"}, true),
      rec("g_6_12", {"x4^2-2x3x6"}, true),
      rec("g_6_13", {"x5^3-3x3x5x6+3x2x6^2"}, true),
      rec("g_6_14", {"2x5^3+3x4^2x6-6x3x5x6-6x1x6^2"}, true),
      rec("g_6_15", {"x5^3-3x4x5x6+3x3x6^2"}, true),
      rec("g_6_16", {"x4^2-2x1x6-2x3x5"}, true),
      rec("g_6_17", {"x5^2-2x4x6"}, true),
      rec("g_6_18", {"x4^2+2x2x6-2x3x5", "x5^2-2x4x6", "x5^3-3x4x5x6+3x3x6^2"}, false),
      rec("g_6_19", {"x5^2+ex4^2+2ex1x6-2x3x6"}, true),
      rec("g_6_20", {"x5^2-2x3x6"}, true),
      rec("g_6_21", {"x5^2+ex4^2-2ex3x6"}, true),
      rec("g_6_25", {"x3^2-2x2x5", "x3x6-x4x5"}, false),
      rec("g_6_26", {"x1x6-x2x5+x3x4"}, true),
  };
  return table;
}

const std::vector<std::string>& pcenter_only_families() {
  static const std::vector<std::string> names = {
      "g_3",    "g_5_1",  "g_5_3",  "g_5_6",  "g_6_7_2",
      "g_6_22", "g_6_23", "g_6_24", "g_6_27", "g_6_28",
  };
  return names;
}

const std::vector<std::string>& abelian_triple_families() {
  static const std::vector<std::string> names = {
      "g_5_1",  "g_5_3",  "g_5_6",  "g_6_7_2", "g_6_22", "g_6_23", "g_6_24",
      "g_6_27", "g_6_28", "g_6_10", "g_6_11",  "g_6_12", "g_6_13", "g_6_14",
      "g_6_15", "g_6_16", "g_6_17", "g_6_19",  "g_6_20", "g_6_21",
  };
  return names;
}

const std::vector<RationalCenterGenerator>& rational_center_generators(uint32_t p) {
  static const std::vector<RationalCenterGenerator> p5 = {
      {"z1z2+x4^5", 2, ""},
      {"z1^4-z1z2^2-2x4^5z2", 4, ""},
      {"z1^3z2-x4^5z1^2+2z2^3", 4, ""},
      {"z1^3+z2^2", 2, ""},
      {"2x2^5x5^5z1^2+x3^5z1^3z2-x3^5x4^5z1^2+2x3^5z2^3", 2, "z1z2+x4^5"},
      {"2x2^5x5^4z1z2-x3^10x5^4-x2^5x4^5x5^4", 0, "z1^4-z1z2^2-2x4^5z2"},
      {"z1^4z2+2x4^5z1^3-2z1z2^3-x4^5z2^2", 5, ""},
  };
  static const std::vector<RationalCenterGenerator> p7 = {
      {"z1^6-2z1^3z2^2+2z2^4-2x4^7z1z2", 6, ""},
      {"z1^5z2+2z1^2z2^3+2x4^7z1^3+x4^7z2^2", 6, ""},
      {"z1^3z2-2z2^3-3x4^7z1", 4, ""},
      {"z1^3+z2^2", 2, ""},
      {"z1^2z2-x4^7", 2, ""},
      {"2x2^7x5^7z1^2z2-3x2^7x4^7x5^7+2x3^7z1^4z2^2-2x3^7z1z2^4+2x3^7x4^7z1^2z2+x3^7x4^14", 2,
       "z1^3z2-2z2^3-3x4^7z1"},
      {"2z1^9+z1^6z2^2+2z1^3z2^4-x4^7z1^4z2+2z2^6-3x4^7z1z2^3-x4^14z1^2", 9, ""},
      {"-x3^7z1^7z2+x3^7z1^4z2^3-x3^7x4^7z1^5-2x3^7z1z2^5-2x3^7x4^7z1^2z2^2-3x3^7x4^14z2", 1,
       "z1^7+x4^14"},
      {"x3^7z1^8+2x3^7z1^5z2^2+2x3^7z1^2z2^4+x3^7x4^7z1^3z2-x3^7x4^7z2^3-x3^7x4^14z1", 1,
       "z1^7+x4^14"},
      {"2x2^7x5^4z1^2z2^3+2x3^14x5^4z1^3+2x2^7x4^7x5^4z1^3+2x3^14x5^4z2^2", 0,
       "z1^7+2z1^4z2^2-2z1z2^4+2x4^7z1^2z2+2x4^14"},
      {"-3x2^7x5^7z1^2z2-3x2^7x4^7x5^7-3x3^7z1^7+x3^7z1^4z2^2-x3^7z1z2^4+x3^7x4^7z1^2z2+x3^7x4^14",
       4, "z1^3+z2^2"},
      {"z1^5-z1^2z2^2+2x4^7z2", 4, ""},
      {"z1^6z2-3z1^3z2^3+3x4^7z1^4-z2^5-x4^7z1z2^2", 7, ""},
  };
  if (p == 5) return p5;
  if (p == 7) return p7;
  throw std::invalid_argument("rational center generators are catalogued for p = 5 and p = 7 only");
}

PCenterFrame p_center_frame(const LieAlgebraPtr& alg) {
  PCenterFrame frame;
  frame.alg = alg;
  std::vector<GVector> cz = center(*alg);
  std::vector<bool> central(static_cast<size_t>(alg->dim()), false);
  for (const auto& v : cz) {
    int idx = -1, nonzero = 0;
    for (int j = 0; j < alg->dim(); ++j)
      if (v[static_cast<size_t>(j)] != 0) {
        ++nonzero;
        idx = j;
      }
    if (nonzero != 1 || v[static_cast<size_t>(idx)] != 1)
      throw std::invalid_argument(
          "p-center frame needs the center to be spanned by basis vectors; "
          "re-express the algebra in an adapted basis");
    central[static_cast<size_t>(idx)] = true;
  }
  for (int i = 0; i < alg->dim(); ++i)
    (central[static_cast<size_t>(i)] ? frame.central : frame.noncentral).push_back(i);
  return frame;
}

bool in_p_center(const PCenterFrame& frame, const PBWElement& u, std::string* witness) {
  if (!frame.alg->same_structure(*u.algebra()))
    throw std::invalid_argument("element does not belong to the frame's algebra");
  uint32_t p = frame.alg->p();
  for (const auto& [m, c] : u.coeffs().terms()) {
    (void)c;
    for (int i : frame.noncentral)
      if (m.e[static_cast<size_t>(i)] % p != 0) {
        if (witness)
          *witness = "monomial " + to_string(m) + " has exponent " +
                     std::to_string(m.e[static_cast<size_t>(i)]) + " at non-central x" +
                     std::to_string(i + 1);
        return false;
      }
  }
  return true;
}

std::vector<PBWElement> catalogued_generators(const LieAlgebraPtr& alg) {
  for (const auto& r : center_generator_table()) {
    if (r.algebra != alg->name()) continue;
    std::vector<PBWElement> out;
    for (const auto& text : r.generators) {
      out.push_back(parse_pbw(text, alg, EmbedPolicy::ascending));
      // The coefficient patterns guarantee non-vanishing for every valid
      // (family, p); a zero here means the instance is out of range.
      if (out.back().is_zero())
        throw std::domain_error("catalogued generator " + text + " vanishes mod " +
                                std::to_string(alg->p()));
    }
    return out;
  }
  throw std::invalid_argument("no catalogued center generators for " + alg->name());
}

namespace {

std::map<Monomial, size_t, GrlexGreater> index_of(const std::vector<Monomial>& monos) {
  std::map<Monomial, size_t, GrlexGreater> idx;
  for (size_t i = 0; i < monos.size(); ++i) idx.emplace(monos[i], i);
  return idx;
}

} // namespace

std::vector<PBWElement> centrality_sweep(const LieAlgebraPtr& alg, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  if (degree_bound > alg->degree_cap())
    throw DegreeCapError("sweep bound exceeds the degree cap");
  int n = alg->dim();
  // count <= 1e5 keeps the product below overflow; beyond that the entry cap
  // is exceeded regardless.
  uint64_t count = monomial_count_up_to(n, degree_bound);
  if (count > 100000 || static_cast<uint64_t>(n) * count * count > kSweepEntryCap)
    throw std::invalid_argument("sweep coefficient space too large at bound " +
                                std::to_string(degree_bound));
  std::vector<Monomial> monos = monomials_up_to(n, degree_bound);
  size_t N = monos.size();
  auto idx = index_of(monos);

  FpMat A(alg->field(), static_cast<size_t>(n) * N, N);
  for (size_t c = 0; c < N; ++c) {
    Poly col(alg->p(), n);
    col.add_term(monos[c], 1);
    PBWElement u(alg, std::move(col));
    for (int i = 0; i < n; ++i) {
      PBWElement comm = commutator(PBWElement::generator(alg, i), u);
      for (const auto& [m, cf] : comm.coeffs().terms()) {
        auto it = idx.find(m);
        if (it == idx.end())
          throw std::logic_error("commutator left the bounded coefficient space");
        A.at(static_cast<size_t>(i) * N + it->second, c) = cf;
      }
    }
  }

  std::vector<PBWElement> out;
  for (const auto& v : kernel_basis(A)) {
    Poly f(alg->p(), n);
    for (size_t c = 0; c < N; ++c)
      if (v[c] != 0) f.add_term(monos[c], static_cast<int64_t>(v[c]));
    out.emplace_back(alg, std::move(f));
  }
  return out;
}

bool subalgebra_membership(const PBWElement& target, const std::vector<PBWElement>& gens,
                           int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  const LieAlgebraPtr& alg = target.algebra();
  for (size_t i = 0; i < gens.size(); ++i) {
    if (!commutator(gens[i], target).is_zero())
      throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                  " does not commute with the target");
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (!commutator(gens[i], gens[j]).is_zero())
        throw std::invalid_argument("generators " + std::to_string(i + 1) + " and " +
                                    std::to_string(j + 1) + " do not commute");
  }

  // Generators that can contribute below the bound, constants dropped (the
  // empty product already spans them).
  std::vector<PBWElement> use;
  for (const auto& g : gens)
    if (!g.is_zero() && g.degree() >= 1 && g.degree() <= degree_bound) use.push_back(g);

  if (monomial_count_up_to(alg->dim(), degree_bound) > 200000)
    throw std::invalid_argument("membership coefficient space too large at bound " +
                                std::to_string(degree_bound));
  std::vector<Monomial> monos = monomials_up_to(alg->dim(), degree_bound);
  auto idx = index_of(monos);
  std::vector<std::vector<uint32_t>> rows;

  std::function<void(size_t, const PBWElement&)> enumerate = [&](size_t from, const PBWElement& prod) {
    std::vector<uint32_t> v(monos.size(), 0);
    for (const auto& [m, c] : prod.coeffs().terms()) v[idx.at(m)] = c;
    rows.push_back(std::move(v));
    for (size_t i = from; i < use.size(); ++i) {
      if (prod.degree() + use[i].degree() > degree_bound) continue;
      enumerate(i, pbw_mul(prod, use[i]));
    }
  };
  enumerate(0, PBWElement::one(alg));

  FpMat A(alg->field(), rows.size(), monos.size());
  for (size_t r = 0; r < rows.size(); ++r)
    for (size_t c = 0; c < monos.size(); ++c) A.at(r, c) = rows[r][c];

  if (target.degree() > degree_bound) return false;
  std::vector<uint32_t> t(monos.size(), 0);
  for (const auto& [m, c] : target.coeffs().terms()) t[idx.at(m)] = c;
  return in_row_space(A, t);
}

namespace {

const CenterGeneratorRecord* find_record(const std::string& name) {
  for (const auto& r : center_generator_table())
    if (r.algebra == name) return &r;
  return nullptr;
}

bool name_in(const std::vector<std::string>& names, const std::string& name) {
  return std::find(names.begin(), names.end(), name) != names.end();
}

/// Eps values for which the abelian-triple argument is made directly over the
/// prime field; outside these the claim is skipped, not failed.
bool triple_claimed_for(const LieAlgebraPtr& alg) {
  const std::string& n = alg->name();
  if (!name_in(abelian_triple_families(), n)) return false;
  if (n == "g_6_22" || n == "g_6_24") return alg->eps() && (*alg->eps() == 0 || *alg->eps() == 1);
  if (n == "g_6_7_2") return alg->eps() && *alg->eps() == 0;
  return true;
}

std::string gvector_str(const GVector& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += "+";
    if (v[i] != 1) s += std::to_string(v[i]) + "*";
    s += "x" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

} // namespace

VerificationReport verify_center_description(const LieAlgebraPtr& alg, int sweep_bound,
                                             int membership_bound) {
  VerificationReport rep;
  rep.algebra = alg->name();
  rep.p = alg->p();
  rep.eps = alg->eps();

  rep.add("center.jacobi", check_jacobi(*alg));

  // Custom tables need not present the center on basis vectors; the p-center
  // machinery applies only when it does.
  std::optional<PCenterFrame> frame_opt;
  try {
    frame_opt = p_center_frame(alg);
  } catch (const std::exception& e) {
    rep.add_skipped("center.pcenter_central", e.what());
    rep.sort_claims();
    return rep;
  }
  const PCenterFrame& frame = *frame_opt;

  // The p-center generators must themselves be central in U(g).
  {
    bool ok = true;
    std::string wit;
    for (int i : frame.noncentral) {
      Poly f = Poly::variable(alg->p(), alg->dim(), i, static_cast<uint16_t>(alg->p()));
      auto w = centrality_witness(PBWElement(alg, std::move(f)));
      if (w) {
        ok = false;
        wit = "x" + std::to_string(i + 1) + "^" + std::to_string(alg->p()) +
              " fails against x" + std::to_string(w->first + 1);
        break;
      }
    }
    if (ok)
      for (int j : frame.central) {
        auto w = centrality_witness(PBWElement::generator(alg, j));
        if (w) {
          ok = false;
          wit = "x" + std::to_string(j + 1) + " fails against x" + std::to_string(w->first + 1);
          break;
        }
      }
    rep.add("center.pcenter_central", ok, wit);
  }

  const CenterGeneratorRecord* record = find_record(alg->name());
  if (record) {
    std::vector<PBWElement> zs = catalogued_generators(alg);
    for (size_t i = 0; i < zs.size(); ++i) {
      std::string zi = "z" + std::to_string(i + 1);
      auto w = centrality_witness(zs[i]);
      rep.add("center.central." + zi, !w,
              w ? "[x" + std::to_string(w->first + 1) + ", " + zi + "] = " + w->second.str() : "");

      std::string pwit;
      bool inside = in_p_center(frame, zs[i], &pwit);
      rep.add("center.outside_pcenter." + zi, !inside,
              inside ? "every monomial is a p-center monomial" : pwit);

      std::string powwit;
      bool pow_inside = in_p_center(frame, pth_power(zs[i]), &powwit);
      rep.add("center.pth_power." + zi, pow_inside, powwit);
    }

    if (!record->closure_free) {
      // Later generators must not already lie in the subalgebra generated by
      // the p-center and the earlier ones; bounded span gives the evidence.
      int maxdeg = 0;
      for (const auto& z : zs) maxdeg = std::max(maxdeg, z.degree());
      int bound = membership_bound > 0 ? membership_bound : 2 * maxdeg + 2;
      std::vector<PBWElement> base;
      for (int i : frame.noncentral) {
        Poly f = Poly::variable(alg->p(), alg->dim(), i, static_cast<uint16_t>(alg->p()));
        base.emplace_back(alg, std::move(f));
      }
      for (int j : frame.central) base.push_back(PBWElement::generator(alg, j));
      for (size_t i = 1; i < zs.size(); ++i) {
        std::vector<PBWElement> gens = base;
        gens.insert(gens.end(), zs.begin(), zs.begin() + static_cast<long>(i));
        bool member = subalgebra_membership(zs[i], gens, bound);
        rep.add("center.tower.z" + std::to_string(i + 1), !member,
                member ? "already inside the bounded subalgebra span (degree bound " +
                             std::to_string(bound) + ")"
                       : "outside the subalgebra span up to degree " + std::to_string(bound) +
                             " (bounded evidence)");
      }
    }
  }

  if (name_in(pcenter_only_families(), alg->name())) {
    int bound = sweep_bound > 0 ? sweep_bound : std::min<int>(static_cast<int>(alg->p()), 4);
    std::vector<PBWElement> found = centrality_sweep(alg, bound);
    size_t expected = 0;
    for (const Monomial& m : monomials_up_to(alg->dim(), bound)) {
      bool ok = true;
      for (int i : frame.noncentral)
        if (m.e[static_cast<size_t>(i)] % alg->p() != 0) {
          ok = false;
          break;
        }
      if (ok) ++expected;
    }
    bool ok = found.size() == expected;
    std::string wit = "degree bound " + std::to_string(bound) + ": found " +
                      std::to_string(found.size()) + ", p-center monomials " +
                      std::to_string(expected);
    for (const auto& u : found) {
      std::string pwit;
      if (!in_p_center(frame, u, &pwit)) {
        ok = false;
        wit = "central element outside the p-center: " + u.str();
        break;
      }
    }
    rep.add("center.pcenter_only.sweep", ok, wit);
  }

  if (name_in(abelian_triple_families(), alg->name())) {
    auto triple = find_abelian_triple(*alg);
    if (triple)
      rep.add("center.abelian_triple", true,
              "x=" + gvector_str(triple->x) + ", y=" + gvector_str(triple->y) +
                  ", z=" + gvector_str(triple->z));
    else if (triple_claimed_for(alg))
      rep.add("center.abelian_triple", false, "no triple among two-term combinations");
    else
      rep.add_skipped("center.abelian_triple",
                      "triple argument applies to this parameter value only over a field "
                      "extension");
  }

  rep.sort_claims();
  return rep;
}

VerificationReport verify_rational_generators(uint32_t p) {
  const auto& table = rational_center_generators(p); // validates p
  LieAlgebraPtr alg = lookup("g_5_5", p);

  VerificationReport rep;
  rep.algebra = alg->name();
  rep.p = p;

  const CenterGeneratorRecord* record = find_record("g_5_5");
  ParseEnv env;
  env.p = p;
  env.nvars = alg->dim();
  env.zvals.emplace(1, parse_poly(record->generators[0], env));
  env.zvals.emplace(2, parse_poly(record->generators[1], env));

  rep.add("rational.count", table.size() == (p == 5 ? 7u : 13u),
          std::to_string(table.size()) + " catalogued generators");
  rep.add("rational.x5_central", is_central(PBWElement::generator(alg, 4)));

  for (size_t i = 0; i < table.size(); ++i) {
    char tag[16];
    std::snprintf(tag, sizeof tag, "gen%02zu", i + 1);
    PBWElement num = embed_commutative(parse_poly(table[i].numerator, env), alg);
    auto w = centrality_witness(num);
    rep.add("rational." + std::string(tag) + ".numerator_central", !w,
            w ? "fails against x" + std::to_string(w->first + 1)
              : "degree " + std::to_string(num.degree()));
    if (!table[i].denominator_extra.empty()) {
      PBWElement den = embed_commutative(parse_poly(table[i].denominator_extra, env), alg);
      auto dw = centrality_witness(den);
      rep.add("rational." + std::string(tag) + ".denominator_central", !dw,
              dw ? "fails against x" + std::to_string(dw->first + 1) : "");
    }
  }

  rep.sort_claims();
  return rep;
}

} // namespace uea
