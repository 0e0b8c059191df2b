#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "ellft/fourier.hpp"
#include "ellft/matrix.hpp"
#include "ellft/unipotent.hpp"

namespace ellft {

/// The nine elliptic unipotent discrete series of p-adic G2: v1 is the
/// Steinberg representation (regular unipotent parameter, trivial component
/// group); v2..v9 have parameter n = G2(a1) with component group S3 and are
/// labeled by M(S3) via Kazhdan-Lusztig parameters:
///   v2 -> (1,1)   v3 -> (1,r)    v4 -> (g3,1)      v5 -> (g2,1)
///   v6 -> (1,eps) v7 -> (g2,eps) v8 -> (g3,theta)  v9 -> (g3,theta^2)
inline const std::vector<std::pair<std::string, std::string>>& kl_parameters() {
  static const std::vector<std::pair<std::string, std::string>> kl = {
      {"v2", "(1,1)"},   {"v3", "(1,r)"},      {"v4", "(g3,1)"},     {"v5", "(g2,1)"},
      {"v6", "(1,eps)"}, {"v7", "(g2,eps)"},   {"v8", "(g3,theta)"}, {"v9", "(g3,theta^2)"},
  };
  return kl;
}

inline std::vector<std::string> ds_labels() {
  return {"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"};
}

/// The dual elliptic Fourier transform on span(v1..v9): block diagonal with
/// a 1x1 identity block at v1 and Lusztig's pairing for S3 on v2..v9,
/// transported through the Kazhdan-Lusztig labeling.
inline CycMatrix dual_ft() {
  MSet ms = m_set(make_symmetric(3));
  CycMatrix f8 = fourier_matrix(ms);
  std::map<std::string, int> pair_index;
  for (const auto& [v, p] : kl_parameters()) pair_index[v] = ms.index_of(p);
  std::vector<std::string> labels = ds_labels();
  CycMatrix m(labels, labels);
  m(0, 0) = Cyclotomic::one();
  for (std::size_t i = 1; i < 9; ++i)
    for (std::size_t j = 1; j < 9; ++j)
      m(i, j) = f8(pair_index[labels[i]], pair_index[labels[j]]);
  return m;
}

/// Component group and parameter count attached to a distinguished
/// unipotent class of G2^vee.
struct MParamData {
  std::string class_label;
  FiniteGroup component_group;
  std::size_t parameter_count;
  std::vector<std::string> parameters;  // discrete-series labels
};

inline MParamData m_param_data(const std::string& class_label) {
  MParamData d;
  d.class_label = class_label;
  if (class_label == "G2") {
    d.component_group = make_trivial();
    d.parameter_count = 1;
    d.parameters = {"v1"};
    return d;
  }
  if (class_label == "G2(a1)") {
    d.component_group = make_symmetric(3);
    d.parameter_count = m_set(d.component_group).pairs.size();
    for (const auto& [v, p] : kl_parameters()) d.parameters.push_back(v);
    return d;
  }
  throw std::invalid_argument("unknown distinguished class label: " + class_label);
}

/// The restrictions of v1..v9 to the three maximal parahoric subgroups,
/// as elements of the unipotent spaces of the reductive quotients
/// M_{J0} = G2(F_q), M_{J1} = (A1+A1~)(F_q), M_{J2} = A2(F_q).
struct RestrictionTable {
  UnipotentSpace j0, j1, j2;
  // per discrete-series label v1..v9, the restriction at each parahoric
  std::vector<UniChar> at_j0, at_j1, at_j2;
};

inline RestrictionTable restriction_table() {
  RestrictionTable t;
  t.j0 = build_g2q();
  t.j1 = build_a1a1q();
  t.j2 = build_a2q();
  auto unit = [](const UnipotentSpace& s, std::initializer_list<const char*> names) {
    UniChar v(s.labels.size());
    for (const char* nm : names) v.coords[s.label_index(nm)] = Cyclotomic::one();
    return v;
  };
  UniChar z1(t.j1.labels.size()), z2(t.j2.labels.size());
  // rows v1..v9 at J0, J1, J2
  t.at_j0 = {
      unit(t.j0, {"phi_{1,6}"}),
      unit(t.j0, {"phi_{1,6}", "phi_{2,1}"}),
      unit(t.j0, {"phi_{1,3}'"}),
      unit(t.j0, {"phi_{1,6}", "phi_{1,3}''"}),
      unit(t.j0, {"phi_{1,6}", "phi_{2,2}"}),
      unit(t.j0, {"G2[1]"}),
      unit(t.j0, {"G2[-1]"}),
      unit(t.j0, {"G2[theta]"}),
      unit(t.j0, {"G2[theta^2]"}),
  };
  t.at_j1 = {
      unit(t.j1, {"sgn0*sgn2"}),
      unit(t.j1, {"sgn0*sgn2", "sgn0*triv2", "triv0*sgn2"}),
      unit(t.j1, {"sgn0*triv2"}),
      unit(t.j1, {"triv0*sgn2", "sgn0*sgn2"}),
      unit(t.j1, {"sgn0*sgn2", "sgn0*triv2", "triv0*sgn2"}),
      z1, z1, z1, z1,
  };
  t.at_j2 = {
      unit(t.j2, {"sgn"}),
      unit(t.j2, {"sgn", "refl"}),
      unit(t.j2, {"sgn"}),
      unit(t.j2, {"refl"}),
      unit(t.j2, {"sgn", "refl"}),
      z2, z2, z2, z2,
  };
  return t;
}

/// Matrix of res_{u,el}: columns indexed by v1..v9, rows by the concatenated
/// elliptic bases of the three parahoric quotients; entry = elliptic-basis
/// coordinate of the projected restriction.
inline CycMatrix res_matrix() {
  RestrictionTable t = restriction_table();
  EllipticBasis b0 = elliptic_basis(t.j0);
  EllipticBasis b1 = elliptic_basis(t.j1);
  EllipticBasis b2 = elliptic_basis(t.j2);
  std::vector<std::string> rows;
  for (const auto& n : b0.names) rows.push_back("J0:" + n);
  for (const auto& n : b1.names) rows.push_back("J1:" + n);
  for (const auto& n : b2.names) rows.push_back("J2:" + n);
  CycMatrix m(rows, ds_labels());
  for (std::size_t col = 0; col < 9; ++col) {
    std::size_t r = 0;
    for (const Cyclotomic& c : elliptic_coords(b0, t.at_j0[col])) m(r++, col) = c;
    for (const Cyclotomic& c : elliptic_coords(b1, t.at_j1[col])) m(r++, col) = c;
    for (const Cyclotomic& c : elliptic_coords(b2, t.at_j2[col])) m(r++, col) = c;
  }
  return m;
}

/// Block-diagonal Fourier transform on the concatenated elliptic spaces of
/// the three parahoric quotients (blocks of sizes 7, 1, 1).
inline CycMatrix ft_u_elliptic() {
  CycMatrix f0 = ft_elliptic(build_g2q());
  CycMatrix f1 = ft_elliptic(build_a1a1q());
  CycMatrix f2 = ft_elliptic(build_a2q());
  std::vector<std::string> labels;
  for (const auto& n : f0.row_labels()) labels.push_back("J0:" + n);
  for (const auto& n : f1.row_labels()) labels.push_back("J1:" + n);
  for (const auto& n : f2.row_labels()) labels.push_back("J2:" + n);
  CycMatrix m(labels, labels);
  std::size_t off = 0;
  for (const CycMatrix* f : {&f0, &f1, &f2}) {
    for (std::size_t i = 0; i < f->rows(); ++i)
      for (std::size_t j = 0; j < f->cols(); ++j) m(off + i, off + j) = (*f)(i, j);
    off += f->rows();
  }
  return m;
}

struct DiagramReport {
  CycMatrix ft_u_el;    // Fourier transform on the finite (parahoric) side
  CycMatrix ft_dual;    // dual transform on the p-adic side
  CycMatrix res;        // restriction matrix
  CycMatrix residual;   // ft_u_el * res - res * ft_dual
  bool commutes = false;
  bool printed_identity = false;  // res^T * ft_u_el * res == ft_dual

  nlohmann::json serialize() const {
    return {{"ft_u_el", ft_u_el.serialize()},
            {"ft_dual", ft_dual.serialize()},
            {"res", res.serialize()},
            {"residual", residual.serialize()},
            {"commutes", commutes},
            {"printed_identity", printed_identity}};
  }
};

/// Checks FT_{u,el} o res = res o FT_dual as matrices (columns = v1..v9),
/// plus the equivalent similarity form res^T * FT_{u,el} * res = FT_dual
/// (res is orthogonal, so the two are the same statement).
inline DiagramReport verify_diagram_with(CycMatrix ft_u_el, CycMatrix ft_dual, CycMatrix res) {
  DiagramReport r;
  r.residual = ft_u_el * res - res * ft_dual;
  r.commutes = r.residual.is_zero();
  r.printed_identity = (res.transpose() * ft_u_el * res).same_entries(ft_dual);
  r.ft_u_el = std::move(ft_u_el);
  r.ft_dual = std::move(ft_dual);
  r.res = std::move(res);
  return r;
}

inline DiagramReport verify_diagram() {
  return verify_diagram_with(ft_u_elliptic(), dual_ft(), res_matrix());
}

/// Classification of a nilpotent orbit of Sp(2n) by its partition, per the
/// standard combinatorics: odd parts must have even multiplicity for the
/// partition to label an orbit at all; distinguished = all parts even and
/// distinct; quasidistinguished = all parts even with multiplicity <= 2;
/// contributing to the elliptic unipotent space = all parts even with
/// multiplicity <= 4.
struct TypeCPartitionClass {
  bool is_unipotent_class = false;
  bool is_distinguished = false;
  bool is_quasidistinguished = false;
  bool in_u_el = false;
};

inline TypeCPartitionClass classify_type_c_partition(const std::vector<long>& parts) {
  long sum = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts[i] > parts[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    sum += parts[i];
  }
  if (sum % 2 != 0) throw std::invalid_argument("partition must have even sum");
  std::map<long, int> mult;
  for (long p : parts) ++mult[p];
  TypeCPartitionClass c;
  c.is_unipotent_class = true;
  bool all_even = true;
  int max_even_mult = 0;
  for (const auto& [p, m] : mult) {
    if (p % 2 != 0) {
      all_even = false;
      if (m % 2 != 0) c.is_unipotent_class = false;
    } else {
      max_even_mult = std::max(max_even_mult, m);
    }
  }
  c.is_distinguished = all_even && max_even_mult <= 1;
  c.is_quasidistinguished = all_even && max_even_mult <= 2;
  c.in_u_el = all_even && max_even_mult <= 4;
  return c;
}

/// All partitions of 2n in weakly decreasing order, lexicographically
/// descending.
inline std::vector<std::vector<long>> partitions_of(long n) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  auto rec = [&](auto&& self, long rest, long maxpart) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (long p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, rest - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  return out;
}

}  // namespace ellft
