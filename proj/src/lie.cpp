#include "uea/lie.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>

#include "uea/linalg.hpp"

namespace uea {

namespace {

std::string term_str(const BracketTerm& t) {
  std::string s;
  if (t.c == -1)
    s = "-";
  else if (t.c != 1)
    s = std::to_string(t.c) + "*";
  if (t.times_eps) s += "e*";
  s += "x" + std::to_string(t.k);
  return s;
}

int env_degree_cap() {
  const char* v = std::getenv("ENVELOPE_DEGREE_CAP");
  if (!v) return LieAlgebra::kDefaultDegreeCap;
  char* end = nullptr;
  long cap = std::strtol(v, &end, 10);
  if (end == v || *end != '\0' || cap < 1 || cap > 2000)
    throw std::invalid_argument("ENVELOPE_DEGREE_CAP must be an integer in [1, 2000]");
  return static_cast<int>(cap);
}

} // namespace

std::string LieAlgebraSpec::relations_str() const {
  std::string s;
  for (const auto& rel : relations) {
    if (!s.empty()) s += ", ";
    s += "[x" + std::to_string(rel.i) + ",x" + std::to_string(rel.j) + "]=";
    bool first = true;
    for (const auto& t : rel.terms) {
      std::string ts = term_str(t);
      if (!first && ts[0] != '-') s += "+";
      s += ts;
      first = false;
    }
  }
  return s;
}

LieAlgebra::LieAlgebra(LieAlgebraSpec spec, uint32_t p, std::optional<uint32_t> eps)
    : spec_(std::move(spec)), p_(p), field_(p), eps_(eps), degree_cap_(env_degree_cap()) {
  int n = spec_.dim;
  if (n < 1 || n > kMaxVars)
    throw std::invalid_argument("dimension must be between 1 and " + std::to_string(kMaxVars));
  c_.assign(static_cast<size_t>(n) * n * n, 0);

  bool has_eps_term = false;
  for (const auto& rel : spec_.relations) {
    if (rel.i < 1 || rel.j < 1 || rel.i > n || rel.j > n || rel.i >= rel.j)
      throw std::invalid_argument("relation indices must satisfy 1 <= i < j <= dim in " + spec_.name);
    for (const auto& t : rel.terms) {
      if (t.k < 1 || t.k > n)
        throw std::invalid_argument("bracket target out of range in " + spec_.name);
      uint32_t c = field_.reduce(t.c);
      if (t.times_eps) {
        has_eps_term = true;
        if (!eps_) throw std::invalid_argument(spec_.name + " requires a parameter value");
        c = field_.mul(c, field_.reduce(static_cast<int64_t>(*eps_)));
      }
      int i = rel.i - 1, j = rel.j - 1, k = t.k - 1;
      size_t ij = static_cast<size_t>((i * n + j) * n + k);
      size_t ji = static_cast<size_t>((j * n + i) * n + k);
      c_[ij] = field_.add(c_[ij], c);
      c_[ji] = field_.sub(c_[ji], c);
    }
  }
  if (eps_ && !has_eps_term && spec_.param == ParamKind::none)
    throw std::invalid_argument(spec_.name + " does not take a parameter");
  if (eps_) eps_ = *eps_ % p_;

  bracket_terms_.assign(static_cast<size_t>(n) * n, {});
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto& ts = bracket_terms_[static_cast<size_t>(i * n + j)];
      for (int k = 0; k < n; ++k) {
        uint32_t v = c(i, j, k);
        if (v != 0) ts.emplace_back(k, v);
      }
    }
}

void LieAlgebra::set_degree_cap(int cap) {
  if (cap < 1 || cap > 2000) throw std::invalid_argument("degree cap must be in [1, 2000]");
  degree_cap_ = cap;
}

bool LieAlgebra::same_structure(const LieAlgebra& o) const {
  return p_ == o.p_ && spec_.dim == o.spec_.dim && c_ == o.c_;
}

namespace {

void validate_lookup(const LieAlgebraSpec& s, uint32_t p, const std::optional<uint32_t>& eps) {
  Fp f(p); // validates primality
  if (static_cast<int>(p) < s.nilpotency_class)
    throw std::invalid_argument(s.name + ": p must be at least the nilpotency class " +
                                std::to_string(s.nilpotency_class) + ", got p=" + std::to_string(p));
  switch (s.param) {
    case ParamKind::none:
      if (eps) throw std::invalid_argument(s.name + " does not take a parameter");
      break;
    case ParamKind::eps_any:
      if (!eps) throw std::invalid_argument(s.name + " requires a parameter value");
      break;
    case ParamKind::eps_nonzero:
      if (!eps) throw std::invalid_argument(s.name + " requires a parameter value");
      if (*eps % p == 0)
        throw std::invalid_argument(s.name + " requires a nonzero parameter, got " +
                                    std::to_string(*eps) + " mod " + std::to_string(p));
      break;
    case ParamKind::eps_char2:
      if (p != 2) throw std::invalid_argument(s.name + " is defined only in characteristic 2");
      if (!eps) throw std::invalid_argument(s.name + " requires a parameter value");
      break;
  }
  (void)f;
}

} // namespace

LieAlgebraPtr lookup(const std::string& name, uint32_t p, std::optional<uint32_t> eps) {
  const LieAlgebraSpec* s = find_family(name);
  if (!s) throw std::invalid_argument("unknown algebra name: " + name);
  validate_lookup(*s, p, eps);
  return std::make_shared<LieAlgebra>(*s, p, eps);
}

LieAlgebraPtr instantiate(const LieAlgebraSpec& spec, uint32_t p, std::optional<uint32_t> eps) {
  return std::make_shared<LieAlgebra>(spec, p, eps);
}

LieAlgebraSpec parse_algebra_file(const std::string& text, const std::string& display_name) {
  LieAlgebraSpec s;
  s.name = display_name;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool have_dim = false;
  std::vector<std::pair<int, int>> seen;

  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("algebra file, line " + std::to_string(lineno) + ": " + what);
  };

  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;

    if (!have_dim) {
      if (tok != "dim") fail("expected 'dim n' as the first entry");
      if (!(ls >> s.dim)) fail("expected a dimension after 'dim'");
      if (s.dim < 1 || s.dim > kMaxVars)
        fail("dimension must be between 1 and " + std::to_string(kMaxVars));
      if (ls >> tok) fail("unexpected trailing token '" + tok + "'");
      have_dim = true;
      continue;
    }

    LieAlgebraSpec::Relation rel;
    try {
      rel.i = std::stoi(tok);
    } catch (...) {
      fail("expected a basis index, got '" + tok + "'");
    }
    if (!(ls >> rel.j)) fail("expected a second basis index");
    if (!(ls >> tok) || tok != "->") fail("expected '->' after the index pair");
    if (rel.i < 1 || rel.j < 1 || rel.i > s.dim || rel.j > s.dim) fail("basis index out of range");
    if (rel.i >= rel.j) fail("relations must be given for i < j");
    for (const auto& pr : seen)
      if (pr.first == rel.i && pr.second == rel.j) fail("duplicate relation for this index pair");
    seen.emplace_back(rel.i, rel.j);

    while (ls >> tok) {
      auto colon = tok.find(':');
      if (colon == std::string::npos) fail("expected 'k:c', got '" + tok + "'");
      BracketTerm t;
      try {
        t.k = std::stoi(tok.substr(0, colon));
        t.c = std::stoi(tok.substr(colon + 1));
      } catch (...) {
        fail("expected integers in 'k:c', got '" + tok + "'");
      }
      if (t.k < 1 || t.k > s.dim) fail("bracket target out of range");
      rel.terms.push_back(t);
    }
    if (rel.terms.empty()) fail("relation without any terms");
    s.relations.push_back(std::move(rel));
  }
  if (!have_dim) throw std::invalid_argument("algebra file: missing 'dim n' line");
  return s;
}

GVector bracket(const LieAlgebra& g, const GVector& u, const GVector& v) {
  int n = g.dim();
  if (static_cast<int>(u.size()) != n || static_cast<int>(v.size()) != n)
    throw std::invalid_argument("vector length does not match algebra dimension");
  const Fp& f = g.field();
  GVector w(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) {
    if (u[static_cast<size_t>(i)] == 0) continue;
    for (int j = 0; j < n; ++j) {
      if (v[static_cast<size_t>(j)] == 0) continue;
      uint32_t uv = f.mul(u[static_cast<size_t>(i)], v[static_cast<size_t>(j)]);
      for (const auto& [k, ck] : g.bracket_terms(i, j))
        w[static_cast<size_t>(k)] = f.add(w[static_cast<size_t>(k)], f.mul(uv, ck));
    }
  }
  return w;
}

bool check_jacobi(const LieAlgebra& g) {
  int n = g.dim();
  auto basis = [&](int i) {
    GVector v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    return v;
  };
  const Fp& f = g.field();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        GVector a = bracket(g, bracket(g, basis(i), basis(j)), basis(k));
        GVector b = bracket(g, bracket(g, basis(j), basis(k)), basis(i));
        GVector c = bracket(g, bracket(g, basis(k), basis(i)), basis(j));
        for (int t = 0; t < n; ++t) {
          uint32_t s = f.add(f.add(a[static_cast<size_t>(t)], b[static_cast<size_t>(t)]),
                             c[static_cast<size_t>(t)]);
          if (s != 0) return false;
        }
      }
  return true;
}

std::vector<GVector> center(const LieAlgebra& g) {
  int n = g.dim();
  // Rows of the constraint matrix: component k of [x_i, v] for each (i, k).
  FpMat A(g.field(), static_cast<size_t>(n) * n, static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j)
        A.at(static_cast<size_t>(i * n + k), static_cast<size_t>(j)) = g.c(i, j, k);
  return echelon_span(g.field(), kernel_basis(A), static_cast<size_t>(n));
}

namespace {

std::vector<GVector> bracket_span(const LieAlgebra& g, const std::vector<GVector>& left,
                                  const std::vector<GVector>& right) {
  std::vector<GVector> out;
  for (const auto& u : left)
    for (const auto& w : right) out.push_back(bracket(g, u, w));
  return echelon_span(g.field(), out, static_cast<size_t>(g.dim()));
}

std::vector<GVector> full_basis(const LieAlgebra& g) {
  std::vector<GVector> b;
  for (int i = 0; i < g.dim(); ++i) {
    GVector v(static_cast<size_t>(g.dim()), 0);
    v[static_cast<size_t>(i)] = 1;
    b.push_back(std::move(v));
  }
  return b;
}

int series_class(const LieAlgebra& g, const std::vector<GVector>& algebra_basis) {
  std::vector<GVector> cur = algebra_basis;
  int c = 1;
  while (true) {
    if (cur.empty()) return c - 1; // the algebra itself was zero
    std::vector<GVector> nxt = bracket_span(g, algebra_basis, cur);
    if (nxt.empty()) return c;
    ++c;
    if (c > g.dim())
      throw std::domain_error("lower central series does not terminate: algebra is not nilpotent");
    cur = std::move(nxt);
  }
}

} // namespace

int nilpotency_class(const LieAlgebra& g) { return series_class(g, full_basis(g)); }

int generated_class(const LieAlgebra& g, const std::vector<GVector>& gens) {
  // Close the generating set under the bracket to get the subalgebra.
  std::vector<GVector> basis = echelon_span(g.field(), gens, static_cast<size_t>(g.dim()));
  while (true) {
    std::vector<GVector> all = basis;
    for (size_t a = 0; a < basis.size(); ++a)
      for (size_t b = a + 1; b < basis.size(); ++b) all.push_back(bracket(g, basis[a], basis[b]));
    std::vector<GVector> closed = echelon_span(g.field(), all, static_cast<size_t>(g.dim()));
    if (closed.size() == basis.size()) break;
    basis = std::move(closed);
  }
  return series_class(g, basis);
}

PolyMatrix multiplication_matrix(const LieAlgebra& g) {
  int n = g.dim();
  PolyMatrix m = PolyMatrix::zeros(g.p(), n, static_cast<size_t>(n), static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& [k, ck] : g.bracket_terms(i, j))
        m.at(static_cast<size_t>(i), static_cast<size_t>(j))
            .add_term(Monomial::var(k), static_cast<int64_t>(ck));
  return m;
}

size_t rank_Mg(const LieAlgebra& g) { return poly_matrix_rank(multiplication_matrix(g)); }

std::optional<AbelianTriple> find_abelian_triple(const LieAlgebra& g) {
  int n = g.dim();
  const Fp& f = g.field();

  std::vector<GVector> cands;
  for (int i = 0; i < n; ++i) {
    GVector v(static_cast<size_t>(n), 0);
    v[static_cast<size_t>(i)] = 1;
    cands.push_back(std::move(v));
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (uint32_t c = 1; c < g.p(); ++c) {
        GVector v(static_cast<size_t>(n), 0);
        v[static_cast<size_t>(i)] = 1;
        v[static_cast<size_t>(j)] = c;
        cands.push_back(std::move(v));
      }

  auto is_zero = [](const GVector& v) {
    for (uint32_t x : v)
      if (x) return false;
    return true;
  };
  auto central = [&](const GVector& v) {
    for (int i = 0; i < n; ++i) {
      GVector e(static_cast<size_t>(n), 0);
      e[static_cast<size_t>(i)] = 1;
      if (!is_zero(bracket(g, e, v))) return false;
    }
    return true;
  };
  (void)f;

  for (size_t xi = 0; xi < cands.size(); ++xi) {
    const GVector& x = cands[xi];
    if (central(x)) continue;
    // Candidates commuting with x, in scan order.
    std::vector<size_t> comm;
    for (size_t i = 0; i < cands.size(); ++i)
      if (i != xi && is_zero(bracket(g, x, cands[i]))) comm.push_back(i);
    for (size_t yi : comm)
      for (size_t zi : comm) {
        if (zi == yi) continue;
        if (!is_zero(bracket(g, cands[yi], cands[zi])))
          return AbelianTriple{x, cands[yi], cands[zi]};
      }
  }
  return std::nullopt;
}

} // namespace uea
