#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ellft/chartable.hpp"
#include "ellft/classfun.hpp"
#include "ellft/group.hpp"
#include "ellft/matrix.hpp"
#include "ellft/named.hpp"

namespace ellft {

/// A finite Weyl group acting on its reflection representation V by exact
/// matrices, together with its named character table and the list of proper
/// standard parabolic subgroups (supplied as data, not derived from a
/// Coxeter datum).
struct ReflectionRep {
  FiniteGroup group;
  std::size_t dim = 0;
  std::vector<CycMatrix> matrices;   // one per element id
  CharacterTable table;
  std::vector<Subgroup> parabolics;  // proper standard parabolics, incl. trivial
};

/// Extends generator matrices to the whole group along BFS words and checks
/// the assignment is a homomorphism on the full multiplication table.
inline ReflectionRep build_reflection_rep(const FiniteGroup& g,
                                          const std::vector<CycMatrix>& gen_matrices,
                                          CharacterTable table,
                                          std::vector<Subgroup> parabolics) {
  if (gen_matrices.size() != g.generators().size())
    throw std::invalid_argument("reflection rep: one matrix per generator required");
  ReflectionRep rep;
  rep.group = g;
  rep.dim = gen_matrices.empty() ? 1 : gen_matrices[0].rows();
  rep.table = std::move(table);
  rep.parabolics = std::move(parabolics);
  rep.matrices.assign(g.order(), CycMatrix::identity(rep.dim));
  for (int a = 1; a < g.order(); ++a) {
    CycMatrix m = CycMatrix::identity(rep.dim);
    for (int gi : g.data()->words[a]) m = m * gen_matrices[gi];
    rep.matrices[a] = std::move(m);
  }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (!(rep.matrices[a] * rep.matrices[b]).same_entries(rep.matrices[g.mul(a, b)]))
        throw std::logic_error("reflection rep: generator matrices do not define a homomorphism");
  return rep;
}

/// Character of the virtual representation Lambda^- V = sum (-1)^i Lambda^i V;
/// its value at w is det_V(1 - w).
inline ClassFunction alt_sum_character(const ReflectionRep& rep) {
  ClassFunction f(rep.group);
  for (std::size_t c = 0; c < rep.group.class_count(); ++c) {
    CycMatrix m = CycMatrix::identity(rep.dim) - rep.matrices[rep.group.class_rep(static_cast<int>(c))];
    f.values[c] = m.det();
  }
  return f;
}

/// Exterior-power traces tr Lambda^i(M), i = 0..dim, from power sums of M
/// via Newton's identities. Independent route to det(1 - M) for testing.
inline std::vector<Cyclotomic> exterior_power_traces(const CycMatrix& m) {
  std::size_t n = m.rows();
  std::vector<Cyclotomic> p(n + 1);  // power sums, p[k] = tr(M^k)
  CycMatrix mk = CycMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = mk * m;
    Cyclotomic t;
    for (std::size_t i = 0; i < n; ++i) t += mk(i, i);
    p[k] = t;
  }
  std::vector<Cyclotomic> e(n + 1);
  e[0] = Cyclotomic::one();
  for (std::size_t k = 1; k <= n; ++k) {
    Cyclotomic s;
    for (std::size_t i = 1; i <= k; ++i) {
      Cyclotomic term = e[k - i] * p[i];
      if (i % 2 == 0) term = -term;
      s += term;
    }
    e[k] = s * Cyclotomic(Rational(1, static_cast<long>(k)));
  }
  return e;
}

/// Classes where det_V(1 - w) != 0, in canonical class order.
inline std::vector<int> elliptic_classes(const ReflectionRep& rep) {
  ClassFunction a = alt_sum_character(rep);
  std::vector<int> out;
  for (std::size_t c = 0; c < a.values.size(); ++c)
    if (!a.values[c].is_zero()) out.push_back(static_cast<int>(c));
  return out;
}

/// <sigma, sigma'>^el_W = <sigma, sigma' (x) Lambda^- V>_W.
inline Cyclotomic elliptic_pairing(const ReflectionRep& rep, const ClassFunction& s,
                                   const ClassFunction& t) {
  if (!s.group.same_as(rep.group) || !t.group.same_as(rep.group))
    throw std::invalid_argument("elliptic pairing: class function on a different group");
  return character_pairing(s, tensor(t, alt_sum_character(rep)));
}

/// sqrt(|W|/|C|) * 1_C for an elliptic class C; these form an orthonormal
/// set under the ordinary character pairing.
inline ClassFunction normalized_indicator(const ReflectionRep& rep, int c) {
  ClassFunction a = alt_sum_character(rep);
  if (c < 0 || static_cast<std::size_t>(c) >= a.values.size())
    throw std::invalid_argument("normalized_indicator: bad class index");
  if (a.values[c].is_zero())
    throw std::invalid_argument("normalized_indicator: class is not elliptic");
  ClassFunction f(rep.group);
  f.values[c] = Cyclotomic::sqrt_rational(Rational(rep.group.order(), rep.group.class_size(c)));
  return f;
}

struct EllipticRadicalReport {
  std::size_t irr_count = 0;
  std::size_t gram_rank = 0;
  std::size_t radical_dim = 0;
  std::size_t quotient_dim = 0;
  std::size_t induced_span_dim = 0;
  std::size_t elliptic_class_count = 0;
  bool radical_matches_induced = false;
  CycMatrix gram;

  nlohmann::json serialize() const {
    return {{"irr_count", irr_count},
            {"gram_rank", gram_rank},
            {"radical_dim", radical_dim},
            {"quotient_dim", quotient_dim},
            {"induced_span_dim", induced_span_dim},
            {"elliptic_class_count", elliptic_class_count},
            {"radical_matches_induced", radical_matches_induced},
            {"gram", gram.serialize()}};
  }
};

/// Verifies that the radical of the elliptic pairing equals the span of
/// characters induced from the proper parabolic subgroups.
inline EllipticRadicalReport elliptic_radical_check(const ReflectionRep& rep) {
  EllipticRadicalReport r;
  const auto& irr = rep.table.rows;
  std::size_t n = irr.size();
  r.irr_count = n;
  r.elliptic_class_count = elliptic_classes(rep).size();

  r.gram = CycMatrix(rep.table.names, rep.table.names);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r.gram(i, j) = elliptic_pairing(rep, irr[i], irr[j]);
  r.gram_rank = r.gram.rank();
  r.radical_dim = n - r.gram_rank;
  r.quotient_dim = r.gram_rank;

  // induced characters expanded in the Irr basis
  std::vector<std::vector<Cyclotomic>> induced;
  bool all_in_radical = true;
  for (const Subgroup& p : rep.parabolics) {
    if (p.group.order() == rep.group.order()) continue;  // proper only
    CharacterTable pt = character_table(p.group);
    for (const ClassFunction& psi : pt.rows) {
      ClassFunction ind = induce_from(psi, p);
      std::vector<Cyclotomic> coeffs(n);
      for (std::size_t i = 0; i < n; ++i) coeffs[i] = character_pairing(ind, irr[i]);
      for (std::size_t i = 0; i < n && all_in_radical; ++i) {
        Cyclotomic s;
        for (std::size_t j = 0; j < n; ++j) s += r.gram(i, j) * coeffs[j];
        if (!s.is_zero()) all_in_radical = false;
      }
      induced.push_back(std::move(coeffs));
    }
  }
  CycMatrix span(induced.size(), n);
  for (std::size_t i = 0; i < induced.size(); ++i)
    for (std::size_t j = 0; j < n; ++j) span(i, j) = induced[i][j];
  r.induced_span_dim = span.rank();
  r.radical_matches_induced = all_in_radical && r.induced_span_dim == r.radical_dim;
  return r;
}

namespace detail {

inline CycMatrix int_matrix1(long a) {
  CycMatrix m(1, 1);
  m(0, 0) = Cyclotomic(a);
  return m;
}

inline std::vector<Subgroup> rank2_parabolics(const FiniteGroup& g) {
  return {subgroup_generated_by(g, {}),
          subgroup_generated_by(g, {g.generators()[0]}),
          subgroup_generated_by(g, {g.generators()[1]})};
}

}  // namespace detail

/// W(G2) on V = Q alpha_1 + Q alpha_2 in the root basis (alpha_1 long,
/// alpha_2 short): s1 = [[-1,1],[0,1]], s2 = [[1,0],[3,-1]]. Integer
/// matrices, so all determinants are exact by construction.
inline ReflectionRep wg2_reflection_rep() {
  FiniteGroup w = make_dihedral(12);
  return build_reflection_rep(w, {int_matrix2(-1, 1, 0, 1), int_matrix2(1, 0, 3, -1)},
                              wg2_character_table(w), detail::rank2_parabolics(w));
}

/// W(A2) = S3 on the 2-dimensional reflection representation, root basis.
inline ReflectionRep a2_reflection_rep() {
  FiniteGroup g = make_symmetric(3);
  return build_reflection_rep(g, {int_matrix2(-1, 1, 0, 1), int_matrix2(1, 0, 1, -1)},
                              s3_character_table(g), detail::rank2_parabolics(g));
}

inline ReflectionRep a1_reflection_rep() {
  FiniteGroup g = make_cyclic(2);
  return build_reflection_rep(g, {detail::int_matrix1(-1)}, z2_character_table(g),
                              {subgroup_generated_by(g, {})});
}

/// W(A1) x W(A1) on a 2-dimensional V, one sign factor per coordinate.
inline ReflectionRep a1xa1_reflection_rep() {
  FiniteGroup g = make_product(make_cyclic(2), make_cyclic(2));
  return build_reflection_rep(g, {int_matrix2(-1, 0, 0, 1), int_matrix2(1, 0, 0, -1)},
                              a1xa1_character_table(g), detail::rank2_parabolics(g));
}

inline ReflectionRep named_reflection_rep(const std::string& key) {
  if (key == "wg2") return wg2_reflection_rep();
  if (key == "a2") return a2_reflection_rep();
  if (key == "a1") return a1_reflection_rep();
  if (key == "a1xa1") return a1xa1_reflection_rep();
  throw std::invalid_argument("unknown reflection rep key: " + key);
}

}  // namespace ellft
