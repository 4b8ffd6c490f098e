#include "uea/invariants.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>

#include "uea/center_lab.hpp"
#include "uea/expr.hpp"
#include "uea/linalg.hpp"

namespace uea {

Poly apply_action(const LieAlgebra& g, int i, const Poly& f) {
  if (i < 0 || i >= g.dim()) throw std::out_of_range("generator index out of range");
  if (f.p() != g.p() || f.nvars() != g.dim())
    throw std::invalid_argument("polynomial does not match the algebra");
  Poly acc = Poly::zero(g.p(), g.dim());
  for (int j = 0; j < g.dim(); ++j) {
    const auto& ts = g.bracket_terms(i, j);
    if (ts.empty()) continue;
    Poly df = f.derivative(j);
    if (df.is_zero()) continue;
    Poly lin = Poly::zero(g.p(), g.dim());
    for (const auto& [k, c] : ts) lin.add_term(Monomial::var(k), static_cast<int64_t>(c));
    acc += lin * df;
  }
  return acc;
}

bool is_invariant(const LieAlgebra& g, const Poly& f) {
  for (int i = 0; i < g.dim(); ++i)
    if (!apply_action(g, i, f).is_zero()) return false;
  return true;
}

InvariantBasis invariant_basis(const LieAlgebra& g, int degree_bound) {
  if (degree_bound < 0) throw std::invalid_argument("degree bound must be nonnegative");
  int n = g.dim();
  InvariantBasis out;
  out.degree_bound = degree_bound;

  // Reject oversized requests before solving anything; m <= 1e5 keeps the
  // entry product below overflow, and larger m always exceeds the budget.
  for (int d = 0; d <= degree_bound; ++d) {
    uint64_t m = monomial_count_of_degree(n, d);
    if (m > 100000 || static_cast<uint64_t>(n) * m * m > kInvariantEntryCap)
      throw std::invalid_argument("invariant coefficient space exceeds the configured cap at degree " +
                                  std::to_string(d));
  }

  for (int d = 0; d <= degree_bound; ++d) {
    std::vector<Monomial> monos = monomials_of_degree(n, d);
    size_t N = monos.size();
    std::map<Monomial, size_t, GrlexGreater> idx;
    for (size_t i = 0; i < N; ++i) idx.emplace(monos[i], i);

    // The action preserves degree, so each homogeneous block solves alone.
    FpMat A(g.field(), static_cast<size_t>(n) * N, N);
    for (size_t c = 0; c < N; ++c) {
      Poly f = Poly::zero(g.p(), n);
      f.add_term(monos[c], 1);
      for (int i = 0; i < n; ++i) {
        Poly img = apply_action(g, i, f);
        for (const auto& [m, cf] : img.terms())
          A.at(static_cast<size_t>(i) * N + idx.at(m), c) = cf;
      }
    }

    std::vector<std::vector<uint32_t>> ker = kernel_basis(A);
    out.dim_by_degree.push_back(ker.size());
    for (const auto& v : ker) {
      Poly f = Poly::zero(g.p(), n);
      for (size_t c = 0; c < N; ++c)
        if (v[c] != 0) f.add_term(monos[c], static_cast<int64_t>(v[c]));
      out.elems.push_back(std::move(f));
    }
  }
  return out;
}

VerificationReport verify_invariant_correspondence(const LieAlgebraPtr& alg) {
  VerificationReport rep;
  rep.algebra = alg->name();
  rep.p = alg->p();
  rep.eps = alg->eps();

  int cls = nilpotency_class(*alg);
  if (static_cast<int>(alg->p()) > cls)
    rep.add("invariants.hypothesis", true,
            "p=" + std::to_string(alg->p()) + " exceeds nilpotency class " + std::to_string(cls));
  else
    rep.add_skipped("invariants.hypothesis",
                    "p equals the nilpotency class; the correspondence is stated for p > class, "
                    "operational checks below still run");

  int bound = std::min(3, static_cast<int>(alg->p()) - 1);
  InvariantBasis inv = invariant_basis(*alg, bound);

  // Custom structure tables need not have their center spanned by basis
  // vectors; the p-center checks only make sense when it is.
  std::optional<PCenterFrame> frame;
  std::string frame_err;
  try {
    frame = p_center_frame(alg);
  } catch (const std::exception& e) {
    frame_err = e.what();
  }

  // Cumulative dimension comparison: central elements of U(g) of filtration
  // degree <= d against polynomial invariants of degree <= d.
  {
    bool ok = true;
    std::string wit;
    size_t inv_cum = 0;
    for (int d = 0; d <= bound; ++d) {
      inv_cum += inv.dim_by_degree[static_cast<size_t>(d)];
      size_t central_cum = centrality_sweep(alg, d).size();
      if (!wit.empty()) wit += ", ";
      wit += "deg<=" + std::to_string(d) + ": center " + std::to_string(central_cum) +
             " / invariants " + std::to_string(inv_cum);
      if (central_cum != inv_cum) ok = false;
    }
    rep.add("invariants.dim_match", ok, wit);
  }

  // The p-center generators are invariants.
  if (!frame) {
    rep.add_skipped("invariants.pcenter_invariant", frame_err);
  } else {
    bool ok = true;
    std::string wit;
    for (int i : frame->noncentral) {
      Poly f = Poly::variable(alg->p(), alg->dim(), i, static_cast<uint16_t>(alg->p()));
      if (!is_invariant(*alg, f)) {
        ok = false;
        wit = "x" + std::to_string(i + 1) + "^" + std::to_string(alg->p());
        break;
      }
    }
    if (ok)
      for (int j : frame->central)
        if (!is_invariant(*alg, Poly::variable(alg->p(), alg->dim(), j))) {
          ok = false;
          wit = "x" + std::to_string(j + 1);
          break;
        }
    rep.add("invariants.pcenter_invariant", ok, wit);
  }

  // Catalogued center generators correspond to polynomial invariants.
  for (const auto& r : center_generator_table()) {
    if (r.algebra != alg->name()) continue;
    ParseEnv env;
    env.p = alg->p();
    env.nvars = alg->dim();
    env.eps = alg->eps();
    for (size_t i = 0; i < r.generators.size(); ++i) {
      Poly z = parse_poly(r.generators[i], env);
      bool ok = is_invariant(*alg, z);
      rep.add("invariants.invariant.z" + std::to_string(i + 1), ok, ok ? "" : z.str());
    }
  }

  // For p-center-only families the low-degree invariants live in the central
  // variables: the bound stays below p, so the generators x_i^p of the
  // non-central directions are out of reach.
  for (const auto& name : pcenter_only_families()) {
    if (name != alg->name() || !frame) continue;
    bool ok = true;
    std::string wit = "degree bound " + std::to_string(bound);
    for (const Poly& f : inv.elems) {
      for (int v : f.support_vars()) {
        bool central =
            std::find(frame->central.begin(), frame->central.end(), v) != frame->central.end();
        if (!central) {
          ok = false;
          wit = "invariant outside the central variables: " + f.str();
          break;
        }
      }
      if (!ok) break;
    }
    rep.add("invariants.central_vars_only", ok, wit);
  }

  rep.sort_claims();
  return rep;
}

} // namespace uea
