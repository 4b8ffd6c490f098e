#include "uea/lie.hpp"

namespace uea {

namespace {

using Rel = LieAlgebraSpec::Relation;

BracketTerm t(int k, int c = 1) { return BracketTerm{k, c, false}; }
BracketTerm te(int k, int c = 1) { return BracketTerm{k, c, true}; }

Rel r(int i, int j, std::vector<BracketTerm> ts) { return Rel{i, j, std::move(ts)}; }

LieAlgebraSpec fam(const char* name, int dim, ParamKind pk, int cls, int rank,
                   std::vector<int> center, std::vector<Rel> rels) {
  LieAlgebraSpec s;
  s.name = name;
  s.dim = dim;
  s.param = pk;
  s.nilpotency_class = cls;
  s.rank_mult_matrix = rank;
  s.center_vars = std::move(center);
  s.relations = std::move(rels);
  return s;
}

// Nonzero brackets of every nilpotent Lie algebra of dimension <= 5 and every
// indecomposable one of dimension 6 with dim C(g) matching the classification
// used here, together with the expected center, nilpotency class and rank of
// the multiplication matrix. The parameter families carry their constraint
// kind; g_6_7_2 exists only in characteristic 2.
std::vector<LieAlgebraSpec> build_catalog() {
  std::vector<LieAlgebraSpec> v;

  v.push_back(fam("g_3", 3, ParamKind::none, 2, 2, {3},
                  {r(1, 2, {t(3)})}));
  v.push_back(fam("g_4", 4, ParamKind::none, 3, 2, {4},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)})}));

  v.push_back(fam("g_5_1", 5, ParamKind::none, 2, 4, {5},
                  {r(1, 2, {t(5)}), r(3, 4, {t(5)})}));
  v.push_back(fam("g_5_2", 5, ParamKind::none, 2, 2, {4, 5},
                  {r(1, 2, {t(4)}), r(1, 3, {t(5)})}));
  v.push_back(fam("g_5_3", 5, ParamKind::none, 3, 4, {5},
                  {r(1, 2, {t(4)}), r(1, 4, {t(5)}), r(2, 3, {t(5)})}));
  v.push_back(fam("g_5_4", 5, ParamKind::none, 3, 2, {4, 5},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(2, 3, {t(5)})}));
  v.push_back(fam("g_5_5", 5, ParamKind::none, 4, 2, {5},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)})}));
  v.push_back(fam("g_5_6", 5, ParamKind::none, 4, 4, {5},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)}), r(2, 3, {t(5)})}));

  v.push_back(fam("g_6_7_2", 6, ParamKind::eps_char2, 2, 4, {5, 6},
                  {r(1, 2, {t(5)}), r(1, 3, {t(6)}), r(2, 4, {te(6)}), r(3, 4, {t(5), t(6)})}));
  v.push_back(fam("g_6_10", 6, ParamKind::none, 3, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(6)}), r(4, 5, {t(6)})}));
  v.push_back(fam("g_6_11", 6, ParamKind::none, 4, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(6)}), r(2, 3, {t(6)}),
                   r(2, 5, {t(6)})}));
  v.push_back(fam("g_6_12", 6, ParamKind::none, 4, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(6)}), r(2, 5, {t(6)})}));
  v.push_back(fam("g_6_13", 6, ParamKind::none, 4, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(5)}), r(1, 5, {t(6)}), r(2, 4, {t(5)}),
                   r(3, 4, {t(6)})}));
  v.push_back(fam("g_6_14", 6, ParamKind::none, 5, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)}), r(2, 3, {t(5)}),
                   r(2, 5, {t(6)}), r(3, 4, {t(6, -1)})}));
  v.push_back(fam("g_6_15", 6, ParamKind::none, 5, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)}), r(1, 5, {t(6)}),
                   r(2, 3, {t(5)}), r(2, 4, {t(6)})}));
  v.push_back(fam("g_6_16", 6, ParamKind::none, 5, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)}), r(2, 5, {t(6)}),
                   r(3, 4, {t(6, -1)})}));
  v.push_back(fam("g_6_17", 6, ParamKind::none, 5, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)}), r(1, 5, {t(6)}),
                   r(2, 3, {t(6)})}));
  v.push_back(fam("g_6_18", 6, ParamKind::none, 5, 2, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)}), r(1, 5, {t(6)})}));
  v.push_back(fam("g_6_19", 6, ParamKind::eps_nonzero, 3, 4, {6},
                  {r(1, 2, {t(4)}), r(1, 3, {t(5)}), r(1, 5, {t(6)}), r(2, 4, {t(6)}),
                   r(3, 5, {te(6)})}));
  v.push_back(fam("g_6_20", 6, ParamKind::none, 3, 4, {6},
                  {r(1, 2, {t(4)}), r(1, 3, {t(5)}), r(1, 5, {t(6)}), r(2, 4, {t(6)})}));
  v.push_back(fam("g_6_21", 6, ParamKind::eps_nonzero, 4, 4, {6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(6)}), r(2, 3, {t(5)}),
                   r(2, 5, {te(6)})}));
  v.push_back(fam("g_6_22", 6, ParamKind::eps_any, 2, 4, {5, 6},
                  {r(1, 2, {t(5)}), r(1, 3, {t(6)}), r(2, 4, {te(6)}), r(3, 4, {t(5)})}));
  v.push_back(fam("g_6_23", 6, ParamKind::none, 3, 4, {5, 6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(5)}), r(1, 4, {t(6)}), r(2, 4, {t(5)})}));
  v.push_back(fam("g_6_24", 6, ParamKind::eps_any, 3, 4, {5, 6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(5)}), r(1, 4, {te(6)}), r(2, 3, {t(6)}),
                   r(2, 4, {t(5)})}));
  v.push_back(fam("g_6_25", 6, ParamKind::none, 3, 2, {5, 6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(5)}), r(1, 4, {t(6)})}));
  v.push_back(fam("g_6_26", 6, ParamKind::none, 2, 2, {4, 5, 6},
                  {r(1, 2, {t(4)}), r(1, 3, {t(5)}), r(2, 3, {t(6)})}));
  v.push_back(fam("g_6_27", 6, ParamKind::none, 3, 4, {5, 6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(5)}), r(2, 4, {t(6)})}));
  v.push_back(fam("g_6_28", 6, ParamKind::none, 4, 4, {5, 6},
                  {r(1, 2, {t(3)}), r(1, 3, {t(4)}), r(1, 4, {t(5)}), r(2, 3, {t(6)})}));

  return v;
}

} // namespace

const std::vector<LieAlgebraSpec>& catalog() {
  static const std::vector<LieAlgebraSpec> table = build_catalog();
  return table;
}

const LieAlgebraSpec* find_family(const std::string& name) {
  for (const auto& s : catalog())
    if (s.name == name) return &s;
  return nullptr;
}

} // namespace uea
